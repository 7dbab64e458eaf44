//! Lattice triangles: elementary test, unimodular witnesses and refinement.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::exact::LatticePoint;
use crate::kernel::{self, with_coords, Int, Pt};
use crate::lattice::boundary_count;
use crate::polygon::{validate_polygon, Polygon, VertexList};

use super::DecomposeError;

/// An affine lattice map `x -> m x + t` with `|det m| = 1`, recorded as the
/// image of the unit triangle `(0,0), (1,0), (0,1)`. The columns of `m` are
/// `v1 - v0` and `v2 - v0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnimodularWitness {
    pub m: [[BigInt; 2]; 2],
    pub translation: LatticePoint,
}

impl UnimodularWitness {
    pub fn det(&self) -> BigInt {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn apply(&self, p: &LatticePoint) -> LatticePoint {
        LatticePoint::new(
            &self.m[0][0] * &p.x + &self.m[0][1] * &p.y + &self.translation.x,
            &self.m[1][0] * &p.x + &self.m[1][1] * &p.y + &self.translation.y,
        )
    }

    /// Images of `(0,0), (1,0), (0,1)`, in that order.
    pub fn unit_triangle_image(&self) -> [LatticePoint; 3] {
        [(0, 0), (1, 0), (0, 1)].map(|p| self.apply(&p.into()))
    }

    /// True iff the determinant is `±1` and the unit triangle's corners map,
    /// in order, onto `tri`.
    pub fn certifies(&self, tri: &[LatticePoint]) -> bool {
        self.det().abs().is_one() && tri.len() == 3 && self.unit_triangle_image()[..] == tri[..]
    }
}

fn require_triangle(tri: &Polygon) -> Result<(), DecomposeError> {
    if tri.len() != 3 {
        return Err(DecomposeError::NotATriangle(tri.len()));
    }
    Ok(())
}

/// Lexicographically smallest (x, then y) lattice point strictly inside the
/// triangle `t`, scanning columns with exact per-column bounds.
fn first_interior<T: Int>(t: &[Pt<T>]) -> Option<Pt<T>> {
    let (lo, hi) = kernel::bbox(t);
    let mut x = lo.0 + T::one();
    while x < hi.0 {
        if let Some((y, _)) = kernel::convex_column(t, &x) {
            return Some((x, y));
        }
        x = x + T::one();
    }
    None
}

/// The interior lattice point a three-way refinement splits at.
pub fn first_interior_point(tri: &Polygon) -> Result<Option<LatticePoint>, DecomposeError> {
    require_triangle(tri)?;
    Ok(with_coords!(tri.vertices(), |c| first_interior(&c).map(|p| kernel::to_lattice(&p))))
}

/// `I = 0` and `B = 3`.
pub fn is_elementary(tri: &Polygon) -> Result<bool, DecomposeError> {
    require_triangle(tri)?;
    Ok(boundary_count(tri) == BigInt::from(3) && first_interior_point(tri)?.is_none())
}

pub fn unimodular_witness(tri: &Polygon) -> Result<UnimodularWitness, DecomposeError> {
    require_triangle(tri)?;
    let [v0, v1, v2] = [&tri.vertices()[0], &tri.vertices()[1], &tri.vertices()[2]];
    let w = UnimodularWitness {
        m: [[&v1.x - &v0.x, &v2.x - &v0.x], [&v1.y - &v0.y, &v2.y - &v0.y]],
        translation: v0.clone(),
    };
    if !w.det().abs().is_one() {
        return Err(DecomposeError::NotElementary);
    }
    Ok(w)
}

/// How a non-elementary triangle is refined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriangleSplit {
    /// `I >= 1`: join the interior point to all three corners.
    Interior { point: LatticePoint, children: [Polygon; 3] },
    /// `I = 0, B >= 4`: join a boundary point to the opposite corner.
    Boundary { point: LatticePoint, opposite: LatticePoint, children: [Polygon; 2] },
}

impl TriangleSplit {
    pub fn children(&self) -> &[Polygon] {
        match self {
            TriangleSplit::Interior { children, .. } => children,
            TriangleSplit::Boundary { children, .. } => children,
        }
    }
}

fn tri(a: &LatticePoint, b: &LatticePoint, c: &LatticePoint) -> Result<Polygon, DecomposeError> {
    validate_polygon(VertexList::new(vec![a.clone(), b.clone(), c.clone()]))
        .map_err(|e| DecomposeError::InternalInvariantViolation(format!("refined triangle: {e}")))
}

/// First lattice point after `v_i` on the first edge `v_i -> v_i+1` that
/// carries one, with the index of that edge.
pub(crate) fn first_boundary_point(tri: &Polygon) -> Option<(usize, LatticePoint)> {
    (0..3).find_map(|i| {
        let (a, b) = tri.edge(i);
        let g = crate::exact::gcd_width(a, b);
        (g > BigInt::one()).then(|| (i, LatticePoint::new(&a.x + (&b.x - &a.x) / &g, &a.y + (&b.y - &a.y) / &g)))
    })
}

/// Refines a triangle that is not elementary. Children of a `[v0, v1, v2]`
/// triangle split at interior `p` are `[v1, v2, p]`, `[p, v0, v1]` and
/// `[v2, v0, p]`; split at boundary point `q` on edge `vi -> vi+1` they are
/// the two sides of the chord from `vi+2` to `q`.
pub fn split_triangle(tri_poly: &Polygon) -> Result<TriangleSplit, DecomposeError> {
    require_triangle(tri_poly)?;
    let v = tri_poly.vertices();
    if let Some(p) = first_interior_point(tri_poly)? {
        let children = [tri(&v[1], &v[2], &p)?, tri(&p, &v[0], &v[1])?, tri(&v[2], &v[0], &p)?];
        return Ok(TriangleSplit::Interior { point: p, children });
    }
    let Some((i, q)) = first_boundary_point(tri_poly) else {
        return Err(DecomposeError::AlreadyElementary);
    };
    let opposite = v[(i + 2) % 3].clone();
    let sub = super::split::subdivide(v, &[&q]).expect("q lies on edge i");
    let (a, b) = super::split::split_sides(&sub, &[opposite.clone(), q.clone()]).expect("distinct endpoints");
    let children = [tri(&a[0], &a[1], &a[2])?, tri(&b[0], &b[1], &b[2])?];
    Ok(TriangleSplit::Boundary { point: q, opposite, children })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::interior_count;

    fn poly(pts: &[(i64, i64)]) -> Polygon {
        validate_polygon(VertexList::from_ints(pts)).unwrap()
    }

    fn lp(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn elementary_examples() {
        assert!(is_elementary(&poly(&[(0, 0), (1, 0), (1, 1)])).unwrap());
        assert!(!is_elementary(&poly(&[(0, 0), (3, 0), (0, 3)])).unwrap());
        assert!(is_elementary(&poly(&[(0, 0), (1, 0), (0, 1)])).unwrap());
        assert_eq!(is_elementary(&poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])), Err(DecomposeError::NotATriangle(4)));
    }

    #[test]
    fn witness_examples() {
        let w = unimodular_witness(&poly(&[(0, 0), (1, 0), (1, 1)])).unwrap();
        assert_eq!(w.m, [[1.into(), 1.into()], [0.into(), 1.into()]]);
        assert_eq!(w.translation, lp(0, 0));
        let w = unimodular_witness(&poly(&[(0, 0), (1, 0), (0, 1)])).unwrap();
        assert_eq!(w.m, [[1.into(), 0.into()], [0.into(), 1.into()]]);
        let t = poly(&[(5, 7), (6, 7), (5, 8)]);
        let w = unimodular_witness(&t).unwrap();
        assert_eq!(w.m, [[1.into(), 0.into()], [0.into(), 1.into()]]);
        assert_eq!(w.translation, lp(5, 7));
        assert!(w.certifies(t.vertices()));
        assert_eq!(unimodular_witness(&poly(&[(0, 0), (2, 0), (0, 1)])), Err(DecomposeError::NotElementary));
    }

    #[test]
    fn clockwise_witness_has_negative_determinant() {
        let w = unimodular_witness(&poly(&[(0, 0), (0, 1), (1, 0)])).unwrap();
        assert_eq!(w.det(), BigInt::from(-1));
    }

    #[test]
    fn split_three_ways_at_unique_interior_point() {
        let t = poly(&[(0, 0), (3, 0), (0, 3)]);
        match split_triangle(&t).unwrap() {
            TriangleSplit::Interior { point, children } => {
                assert_eq!(point, lp(1, 1));
                assert_eq!(children[0].vertices(), &[lp(3, 0), lp(0, 3), lp(1, 1)]);
                assert_eq!(children[1].vertices(), &[lp(1, 1), lp(0, 0), lp(3, 0)]);
                assert_eq!(children[2].vertices(), &[lp(0, 3), lp(0, 0), lp(1, 1)]);
            }
            other => panic!("expected interior split, got {other:?}"),
        }
    }

    #[test]
    fn split_two_ways_at_boundary_point() {
        let t = poly(&[(0, 0), (2, 0), (0, 1)]);
        match split_triangle(&t).unwrap() {
            TriangleSplit::Boundary { point, opposite, children } => {
                assert_eq!(point, lp(1, 0));
                assert_eq!(opposite, lp(0, 1));
                assert_eq!(children[0].vertices(), &[lp(0, 1), lp(0, 0), lp(1, 0)]);
                assert_eq!(children[1].vertices(), &[lp(1, 0), lp(2, 0), lp(0, 1)]);
            }
            other => panic!("expected boundary split, got {other:?}"),
        }
        assert_eq!(split_triangle(&poly(&[(0, 0), (1, 0), (0, 1)])), Err(DecomposeError::AlreadyElementary));
    }

    #[test]
    fn refinement_reduces_lattice_point_total() {
        for pts in
            [[(0, 0), (3, 0), (0, 3)], [(0, 0), (2, 0), (0, 1)], [(0, 0), (7, 2), (3, 5)], [(1, 1), (-4, 3), (6, -2)]]
        {
            let t = poly(&pts);
            let total = |p: &Polygon| interior_count(p) + boundary_count(p);
            for c in split_triangle(&t).unwrap().children() {
                assert!(total(c) < total(&t), "{c} vs {t}");
            }
        }
    }

    #[test]
    fn first_interior_matches_scan() {
        // Oracle: brute-force classify over the bounding box in (x, y) order.
        for pts in
            [[(0, 0), (7, 2), (3, 5)], [(0, 0), (1, 1), (50, 49)], [(2, 9), (-3, 1), (8, -4)], [(0, 0), (4, 0), (0, 4)]]
        {
            let t = poly(&pts);
            let oracle = crate::lattice::lattice_points(&t)
                .into_iter()
                .find(|(_, l)| *l == crate::polygon::PointLocation::Inside)
                .map(|(p, _)| p);
            assert_eq!(first_interior_point(&t).unwrap(), oracle, "{t}");
        }
    }
}
