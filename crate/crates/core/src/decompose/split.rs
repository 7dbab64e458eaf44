//! Good paths and the two polygons a good path cuts off.

use crate::exact::LatticePoint;
use crate::kernel::{self, with_coords, Contact, Int, Loc, Pt};
use crate::polygon::Polygon;

use super::DecomposeError;

/// A simple lattice chain between two distinct vertices of a polygon whose
/// relative interior lies strictly inside it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitPath(Vec<LatticePoint>);

impl SplitPath {
    /// Wraps `vertices` after checking that they form a good path of `poly`.
    pub fn new(poly: &Polygon, vertices: Vec<LatticePoint>) -> Result<Self, DecomposeError> {
        if is_good_path(poly, &vertices)? {
            Ok(SplitPath(vertices))
        } else {
            Err(DecomposeError::InternalInvariantViolation(format!("path {vertices:?} is not a good path of {poly}")))
        }
    }

    /// For paths produced internally whose goodness was established with the
    /// subdivided parent; see [`subdivide`].
    pub(crate) fn trusted(vertices: Vec<LatticePoint>) -> Self {
        SplitPath(vertices)
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.0
    }

    pub fn start(&self) -> &LatticePoint {
        &self.0[0]
    }

    pub fn end(&self) -> &LatticePoint {
        &self.0[self.0.len() - 1]
    }

    /// Interior path vertices (everything but the endpoints).
    pub fn inner(&self) -> &[LatticePoint] {
        &self.0[1..self.0.len() - 1]
    }
}

fn open_chain_is_simple<T: Int>(path: &[Pt<T>]) -> bool {
    let k = path.len() - 1;
    if path[0] == path[k] {
        return false;
    }
    for i in 0..k {
        if path[i] == path[i + 1] {
            return false;
        }
        for j in i + 1..k {
            let ok = match kernel::contact(&path[i], &path[i + 1], &path[j], &path[j + 1]) {
                Contact::Disjoint => j != i + 1,
                Contact::Touch => j == i + 1,
                Contact::Cross | Contact::Overlap => false,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

fn good_path_impl<T: Int>(poly: &[Pt<T>], path: &[Pt<T>]) -> bool {
    if !open_chain_is_simple(path) {
        return false;
    }
    let (s, t) = (&path[0], &path[path.len() - 1]);
    let n = poly.len();
    for w in path.windows(2) {
        for i in 0..n {
            let (a, b) = (&poly[i], &poly[(i + 1) % n]);
            match kernel::contact(&w[0], &w[1], a, b) {
                Contact::Disjoint => {}
                Contact::Touch => {
                    let hit = kernel::touch_point(&w[0], &w[1], a, b);
                    if hit != *s && hit != *t {
                        return false;
                    }
                }
                Contact::Cross | Contact::Overlap => return false,
            }
        }
    }
    // The path interior misses the boundary, so one sample decides the side:
    // test the midpoint of the first segment in doubled coordinates.
    let two = T::from(2);
    let doubled: Vec<Pt<T>> = poly.iter().map(|p| (p.0.clone() * two.clone(), p.1.clone() * two.clone())).collect();
    let mid = (path[0].0.clone() + path[1].0.clone(), path[0].1.clone() + path[1].1.clone());
    kernel::locate(&mid, &doubled) == Loc::Inside
}

/// True iff `path` is simple, meets the boundary of `poly` only at its two
/// endpoints, and runs through the inside of `poly`.
pub fn is_good_path(poly: &Polygon, path: &[LatticePoint]) -> Result<bool, DecomposeError> {
    if path.len() < 2 {
        return Err(DecomposeError::PathTooShort(path.len()));
    }
    let ends = [&path[0], &path[path.len() - 1]];
    if ends.iter().any(|e| poly.index_of(e).is_none()) {
        return Err(DecomposeError::EndpointsNotVertices);
    }
    let mut all = poly.vertices().to_vec();
    all.extend_from_slice(path);
    let n = poly.len();
    Ok(with_coords!(&all, |c| good_path_impl(&c[..n], &c[n..])))
}

/// Inserts each point of `extra` that is not already a vertex into the edge
/// whose relative interior contains it. Returns `None` if such a point is not
/// on the boundary at all. Subdividing an edge leaves the point set of the
/// polygon unchanged.
pub fn subdivide(vts: &[LatticePoint], extra: &[&LatticePoint]) -> Option<Vec<LatticePoint>> {
    let mut out = vts.to_vec();
    for p in extra {
        if out.contains(p) {
            continue;
        }
        let n = out.len();
        let mut all = out.clone();
        all.push((*p).clone());
        let at = with_coords!(&all, |c| (0..n).find(|&i| kernel::on_open_segment(&c[n], &c[i], &c[(i + 1) % n])))?;
        out.insert(at + 1, (*p).clone());
    }
    Some(out)
}

/// The two vertex lists a path cuts a (possibly subdivided) polygon into.
///
/// With the path running from vertex `s` to vertex `t`, the first side walks
/// the boundary from `s` forward to `t` and returns along the reversed path;
/// the second walks from `t` forward to `s` and returns along the path.
pub fn split_sides(vts: &[LatticePoint], path: &[LatticePoint]) -> Option<(Vec<LatticePoint>, Vec<LatticePoint>)> {
    let n = vts.len();
    let s = vts.iter().position(|v| *v == path[0])?;
    let t = vts.iter().position(|v| *v == path[path.len() - 1])?;
    if s == t {
        return None;
    }
    let inner = &path[1..path.len() - 1];
    let chain = |from: usize, to: usize| {
        let len = (to + n - from) % n + 1;
        (0..len).map(move |k| vts[(from + k) % n].clone())
    };
    let first: Vec<_> = chain(s, t).chain(inner.iter().rev().cloned()).collect();
    let second: Vec<_> = chain(t, s).chain(inner.iter().cloned()).collect();
    Some((first, second))
}

/// Lattice points strictly inside the path (not its two endpoints).
pub fn path_inner_lattice_count(path: &[LatticePoint]) -> num_bigint::BigInt {
    let steps: num_bigint::BigInt = path.windows(2).map(|w| crate::exact::gcd_width(&w[0], &w[1])).sum();
    steps - 1
}

/// Exact comparison helper used by the pocket search: does the segment
/// `a`-`b` meet the boundary of `vts` anywhere besides `a` and `b`?
pub(crate) fn chord_touches_boundary(vts: &[LatticePoint], a: &LatticePoint, b: &LatticePoint) -> bool {
    let mut all = vts.to_vec();
    all.push(a.clone());
    all.push(b.clone());
    let n = vts.len();
    with_coords!(&all, |c| {
        let (a, b) = (&c[n], &c[n + 1]);
        (0..n).any(|i| {
            let (u, w) = (&c[i], &c[(i + 1) % n]);
            match kernel::contact(a, b, u, w) {
                Contact::Disjoint => false,
                Contact::Touch => {
                    let hit = kernel::touch_point(a, b, u, w);
                    hit != *a && hit != *b
                }
                Contact::Cross | Contact::Overlap => true,
            }
        })
    })
}
