//! Test-side polygon sources and brute-force oracles. Nothing here calls the
//! library's predicates, so agreement with them means something.
#![allow(dead_code)]

use lattice_pick_core::{validate_polygon, LatticePoint, Polygon, VertexList};
use num_traits::ToPrimitive;
use proptest::prelude::*;

pub fn poly(pts: &[(i64, i64)]) -> Polygon {
    validate_polygon(VertexList::from_ints(pts)).unwrap()
}

pub fn ints(p: &Polygon) -> Vec<(i64, i64)> {
    p.vertices().iter().map(xy).collect()
}

pub fn xy(p: &LatticePoint) -> (i64, i64) {
    (p.x.to_i64().unwrap(), p.y.to_i64().unwrap())
}

pub fn lp(x: i64, y: i64) -> LatticePoint {
    LatticePoint::new(x, y)
}

/// Orders distinct points by exact angle around their centroid and keeps the
/// result if it is a simple polygon.
pub fn angular_polygon(pts: &[(i64, i64)]) -> Option<Polygon> {
    let mut pts = pts.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return None;
    }
    let n = pts.len() as i64;
    let (sx, sy) = pts.iter().fold((0, 0), |(a, b), p| (a + p.0, b + p.1));
    let rel = |p: &(i64, i64)| (p.0 * n - sx, p.1 * n - sy);
    let upper = |v: (i64, i64)| v.1 > 0 || (v.1 == 0 && v.0 > 0);
    pts.sort_by(|a, b| {
        let (u, v) = (rel(a), rel(b));
        upper(v)
            .cmp(&upper(u))
            .then_with(|| 0.cmp(&(u.0 * v.1 - u.1 * v.0)))
            .then_with(|| (u.0 * u.0 + u.1 * u.1).cmp(&(v.0 * v.0 + v.1 * v.1)))
    });
    validate_polygon(VertexList::from_ints(&pts)).ok()
}

pub fn arb_polygon(max_n: usize, bound: i64) -> impl Strategy<Value = Polygon> {
    prop::collection::vec((0..=bound, 0..=bound), 3..=max_n).prop_filter_map("not simple", |p| angular_polygon(&p))
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

pub fn on_segment(p: (i64, i64), a: (i64, i64), b: (i64, i64)) -> bool {
    cross(a, b, p) == 0 && a.0.min(b.0) <= p.0 && p.0 <= a.0.max(b.0) && a.1.min(b.1) <= p.1 && p.1 <= a.1.max(b.1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Where {
    Inside,
    Boundary,
    Outside,
}

/// Winding number with signed upward/downward crossings of the horizontal
/// ray, independent of the library's parity test.
pub fn locate(p: (i64, i64), vs: &[(i64, i64)]) -> Where {
    let n = vs.len();
    let mut wn = 0i64;
    for i in 0..n {
        let (a, b) = (vs[i], vs[(i + 1) % n]);
        if on_segment(p, a, b) {
            return Where::Boundary;
        }
        if a.1 <= p.1 {
            if b.1 > p.1 && cross(a, b, p) > 0 {
                wn += 1;
            }
        } else if b.1 <= p.1 && cross(a, b, p) < 0 {
            wn -= 1;
        }
    }
    if wn != 0 {
        Where::Inside
    } else {
        Where::Outside
    }
}

/// `(I, B)` by scanning the bounding box.
pub fn brute_counts(vs: &[(i64, i64)]) -> (i64, i64) {
    let (x0, x1) = (vs.iter().map(|p| p.0).min().unwrap(), vs.iter().map(|p| p.0).max().unwrap());
    let (y0, y1) = (vs.iter().map(|p| p.1).min().unwrap(), vs.iter().map(|p| p.1).max().unwrap());
    let (mut i, mut b) = (0, 0);
    for x in x0..=x1 {
        for y in y0..=y1 {
            match locate((x, y), vs) {
                Where::Inside => i += 1,
                Where::Boundary => b += 1,
                Where::Outside => {}
            }
        }
    }
    (i, b)
}

pub fn brute_area2(vs: &[(i64, i64)]) -> i64 {
    let n = vs.len();
    (0..n).map(|i| vs[i].0 * vs[(i + 1) % n].1 - vs[(i + 1) % n].0 * vs[i].1).sum::<i64>().abs()
}

/// For a simple polygon: convex iff the strict turns all share one sign.
pub fn brute_is_convex(vs: &[(i64, i64)]) -> bool {
    let n = vs.len();
    let turns: Vec<i64> = (0..n).map(|i| cross(vs[i], vs[(i + 1) % n], vs[(i + 2) % n]).signum()).collect();
    !(turns.contains(&1) && turns.contains(&-1))
}
