//! Chords of convex polygons.

use log::warn;

use crate::exact::LatticePoint;
use crate::polygon::{hull_polygon, is_convex, Polygon};

use super::split::{is_good_path, SplitPath};
use super::DecomposeError;

/// Finds a good chord of a convex polygon with at least four vertices.
///
/// With three extreme points, some vertex `d` sits inside a hull edge; it is
/// joined to the one hull corner off that edge. With more, the first three
/// extreme points `a, b, c` (in vertex order) are taken and the first of the
/// chords `ab`, `bc`, `ca` that is good wins. If neither produces a chord, every
/// vertex pair is tried in index order.
pub fn find_good_linepath_convex(poly: &Polygon) -> Result<SplitPath, DecomposeError> {
    if poly.len() < 4 {
        return Err(DecomposeError::Precondition("convex chord search needs at least 4 vertices"));
    }
    if !is_convex(poly) {
        return Err(DecomposeError::Precondition("convex chord search needs a convex polygon"));
    }
    let hull = hull_polygon(poly);
    let corners = hull.vertices();
    let is_corner = |v: &LatticePoint| corners.contains(v);

    let candidates: Vec<[LatticePoint; 2]> = if corners.len() == 3 {
        let d = poly.vertices().iter().find(|v| !is_corner(v)).expect("four vertices, three corners").clone();
        // The corner whose two hull edges both avoid d.
        corners
            .iter()
            .enumerate()
            .filter(|(i, _)| {
                let next = &corners[(i + 1) % 3];
                let prev = &corners[(i + 2) % 3];
                !on_segment(&d, &corners[*i], next) && !on_segment(&d, prev, &corners[*i])
            })
            .map(|(_, c)| [d.clone(), c.clone()])
            .collect()
    } else {
        let extreme: Vec<&LatticePoint> = poly.vertices().iter().filter(|v| is_corner(v)).take(3).collect();
        let (a, b, c) = (extreme[0], extreme[1], extreme[2]);
        vec![[a.clone(), b.clone()], [b.clone(), c.clone()], [c.clone(), a.clone()]]
    };
    for pair in candidates {
        if is_good_path(poly, &pair)? {
            return Ok(SplitPath::trusted(pair.to_vec()));
        }
    }
    warn!("constructive chord search failed on {poly}; scanning all vertex pairs");
    let v = poly.vertices();
    for i in 0..v.len() {
        for j in i + 2..v.len() {
            let pair = [v[i].clone(), v[j].clone()];
            if is_good_path(poly, &pair)? {
                return Ok(SplitPath::trusted(pair.to_vec()));
            }
        }
    }
    Err(DecomposeError::NoGoodLinepath)
}

fn on_segment(p: &LatticePoint, a: &LatticePoint, b: &LatticePoint) -> bool {
    let r = |q: &LatticePoint| q.to_rational();
    let s = crate::exact::Segment::new(r(a), r(b)).expect("hull corners are distinct");
    crate::exact::point_on_segment(&r(p), &s) != crate::exact::PointOnSegment::Off
}
