//! Pockets of non-convex polygons.
//!
//! A pocket is bounded by a maximal run `x1..xm` of vertices strictly inside
//! the convex hull, flanked by hull-frontier vertices `a` and `b`, and closed
//! by the filling chord `b -> a`. Replacing the run by the chord gives the
//! filled polygon, which is the union of the original polygon and the pocket.

use crate::exact::LatticePoint;
use crate::lattice::area2;
use crate::polygon::{hull_interior_flags, validate_polygon, Polygon, VertexList};

use super::split::{chord_touches_boundary, is_good_path};
use super::DecomposeError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PocketDecomposition {
    /// Left rotation that brings `a` to index 0.
    pub rotation: usize,
    /// `[a, x1, .., xm, b]`.
    pub pocket_path: Vec<LatticePoint>,
    pub pocket: Polygon,
    pub filled: Polygon,
}

/// Index of the first frontier vertex that is followed by a hull-interior
/// vertex, i.e. where the first pocket run starts.
pub fn first_pocket_start(interior: &[bool]) -> Option<usize> {
    let n = interior.len();
    (0..n).find(|&i| !interior[i] && interior[(i + 1) % n])
}

fn invariant(msg: String) -> DecomposeError {
    DecomposeError::InternalInvariantViolation(msg)
}

/// Extracts the first pocket of a non-convex polygon.
///
/// The filling chord is checked against the whole boundary, both pieces are
/// validated as polygons, the pocket path is checked to be a good path of the
/// filled polygon and the areas are checked to subtract. Any failure is an
/// internal invariant violation.
pub fn find_pocket(poly: &Polygon) -> Result<PocketDecomposition, DecomposeError> {
    let flags = hull_interior_flags(poly);
    let Some(rotation) = first_pocket_start(&flags) else {
        return Err(DecomposeError::PolygonConvex);
    };
    let n = poly.len();
    let m = (1..n).take_while(|k| flags[(rotation + k) % n]).count();
    let rotated = poly.rotated(rotation);
    let v = rotated.vertices();
    let (a, b) = (&v[0], &v[m + 1]);

    if chord_touches_boundary(poly.vertices(), b, a) {
        return Err(invariant(format!("filling chord {b}-{a} meets {poly} away from its endpoints")));
    }
    let pocket_path = v[..=m + 1].to_vec();
    let pocket = validate_polygon(VertexList::new(pocket_path.clone()))
        .map_err(|e| invariant(format!("pocket {pocket_path:?} is not a polygon: {e}")))?;
    let mut filled_vts = vec![a.clone()];
    filled_vts.extend_from_slice(&v[m + 1..]);
    let filled = validate_polygon(VertexList::new(filled_vts))
        .map_err(|e| invariant(format!("filled polygon of {poly} is not a polygon: {e}")))?;
    if !is_good_path(&filled, &pocket_path)? {
        return Err(invariant(format!("pocket path of {poly} is not a good path of the filled polygon")));
    }
    if area2(poly) != area2(&filled) - area2(&pocket) {
        return Err(invariant(format!("pocket areas of {poly} do not subtract")));
    }
    Ok(PocketDecomposition { rotation, pocket_path, pocket, filled })
}
