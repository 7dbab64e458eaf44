//! Vertex-list polygons: simplicity, rotation, point location, convex hulls.
//!
//! A polygon is stored as an *open* vertex list `[v0, .., vn-1]`; the closing
//! edge `vn-1 -> v0` is implicit. Consecutive collinear vertices are legal (a
//! square with a midpoint on one side is a formal pentagon), exact
//! back-tracking is not.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exact::{LatticePoint, Orientation, RationalPoint};
use crate::kernel::{self, with_coords, Contact, Int, Loc, Pt};

/// Ordered vertices of a closed chain, without the repeated closing vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexList(Vec<LatticePoint>);

impl VertexList {
    pub fn new(vts: Vec<LatticePoint>) -> Self {
        VertexList(vts)
    }

    pub fn from_ints(pts: &[(i64, i64)]) -> Self {
        VertexList(pts.iter().map(|&p| p.into()).collect())
    }

    pub fn as_slice(&self) -> &[LatticePoint] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<LatticePoint> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> VertexList {
        VertexList(self.0.iter().rev().cloned().collect())
    }

    /// Applies `f` to every vertex.
    pub fn map(&self, f: impl Fn(&LatticePoint) -> LatticePoint) -> VertexList {
        VertexList(self.0.iter().map(f).collect())
    }
}

impl From<Vec<LatticePoint>> for VertexList {
    fn from(v: Vec<LatticePoint>) -> Self {
        VertexList(v)
    }
}

impl fmt::Display for VertexList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// An edge `vi -> vi+1 (mod n)` identified by its vertex indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(pub usize, pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolygonError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("edge {0} has zero length")]
    DegenerateEdge(EdgeId),
    #[error("not simple: edges {0} and {1} intersect")]
    NotSimple(EdgeId, EdgeId),
}

/// A vertex list whose closed chain is a simple curve.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polygon {
    vts: VertexList,
    orientation: Orientation,
}

impl Polygon {
    pub fn vertices(&self) -> &[LatticePoint] {
        self.vts.as_slice()
    }

    pub fn vertex_list(&self) -> &VertexList {
        &self.vts
    }

    pub fn len(&self) -> usize {
        self.vts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn edge(&self, i: usize) -> (&LatticePoint, &LatticePoint) {
        let v = self.vertices();
        (&v[i], &v[(i + 1) % v.len()])
    }

    pub fn index_of(&self, p: &LatticePoint) -> Option<usize> {
        self.vertices().iter().position(|v| v == p)
    }

    /// Rotation keeps the edge set, hence simplicity and orientation.
    pub fn rotated(&self, k: usize) -> Polygon {
        Polygon { vts: rotate_vertices(&self.vts, k), orientation: self.orientation }
    }

    pub fn reversed(&self) -> Polygon {
        let orientation = match self.orientation {
            Orientation::Clockwise => Orientation::CounterClockwise,
            _ => Orientation::Clockwise,
        };
        Polygon { vts: self.vts.reversed(), orientation }
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.vts.fmt(f)
    }
}

fn first_violation<T: Int>(pts: &[Pt<T>]) -> Option<PolygonError> {
    let n = pts.len();
    if n < 3 {
        return Some(PolygonError::TooFewVertices(n));
    }
    let edge = |i: usize| EdgeId(i, (i + 1) % n);
    if let Some(i) = (0..n).find(|&i| pts[i] == pts[(i + 1) % n]) {
        return Some(PolygonError::DegenerateEdge(edge(i)));
    }
    for i in 0..n {
        let (a, b) = (&pts[i], &pts[(i + 1) % n]);
        for j in i + 1..n {
            let (c, d) = (&pts[j], &pts[(j + 1) % n]);
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            let ok = match kernel::contact(a, b, c, d) {
                Contact::Disjoint => !adjacent,
                Contact::Touch => {
                    // Three-vertex chains have every edge pair adjacent; a
                    // fully collinear triangle is caught by the area check.
                    adjacent
                }
                Contact::Cross | Contact::Overlap => false,
            };
            if !ok {
                return Some(PolygonError::NotSimple(edge(i), edge(j)));
            }
        }
    }
    if kernel::signed_area2(pts).is_zero() {
        // Only reachable for collinear inputs, which always back-track.
        return Some(PolygonError::NotSimple(edge(0), edge(n - 1)));
    }
    None
}

pub(crate) fn violation(vts: &[LatticePoint]) -> Option<PolygonError> {
    with_coords!(vts, |c| first_violation(&c))
}

/// True iff the closed chain over `vts` is a simple curve.
pub fn is_simple(vts: &VertexList) -> bool {
    violation(vts.as_slice()).is_none()
}

/// The smart constructor for [`Polygon`].
pub fn validate_polygon(vts: VertexList) -> Result<Polygon, PolygonError> {
    if let Some(e) = violation(vts.as_slice()) {
        return Err(e);
    }
    let area = signed_area2(vts.as_slice());
    let orientation = if area > BigInt::from(0) { Orientation::CounterClockwise } else { Orientation::Clockwise };
    Ok(Polygon { vts, orientation })
}

/// Twice the signed (shoelace) area of the closed chain; positive for
/// counter-clockwise chains.
pub fn signed_area2(vts: &[LatticePoint]) -> BigInt {
    with_coords!(vts, |c| kernel::signed_area2(&c).into())
}

/// Cyclic left-rotation by `k` (mod length).
pub fn rotate_vertices(vts: &VertexList, k: usize) -> VertexList {
    let mut v = vts.as_slice().to_vec();
    if !v.is_empty() {
        let k = k % v.len();
        v.rotate_left(k);
    }
    VertexList(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PointLocation {
    Inside,
    OnBoundary,
    Outside,
}

impl From<Loc> for PointLocation {
    fn from(l: Loc) -> Self {
        match l {
            Loc::Inside => PointLocation::Inside,
            Loc::OnBoundary => PointLocation::OnBoundary,
            Loc::Outside => PointLocation::Outside,
        }
    }
}

pub(crate) fn locate_in(p: &RationalPoint, vts: &[LatticePoint]) -> PointLocation {
    if let Some(lp) = p.to_lattice() {
        let mut all = Vec::with_capacity(vts.len() + 1);
        all.push(lp);
        all.extend_from_slice(vts);
        return with_coords!(&all, |c| kernel::locate(&c[0], &c[1..])).into();
    }
    let (x, y, d) = p.homogeneous();
    let scaled: Vec<Pt<BigInt>> = vts.iter().map(|v| (&v.x * &d, &v.y * &d)).collect();
    kernel::locate(&(x, y), &scaled).into()
}

/// Inside / on-boundary / outside, by exact crossing parity.
pub fn classify_point(p: &RationalPoint, poly: &Polygon) -> PointLocation {
    locate_in(p, poly.vertices())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HullError {
    #[error("cannot take the hull of an empty point set")]
    Empty,
    #[error("all points are collinear; the hull is not two-dimensional")]
    AllCollinear,
}

fn hull_indices<T: Int>(pts: &[Pt<T>]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| pts[a].cmp(&pts[b]));
    order.dedup_by(|a, b| pts[*a] == pts[*b]);
    if order.len() < 3 {
        return order;
    }
    // Andrew's monotone chain, dropping collinear points.
    let mut hull: Vec<usize> = Vec::with_capacity(order.len() + 1);
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> =
            if pass == 0 { Box::new(order.iter()) } else { Box::new(order.iter().rev()) };
        for &i in iter {
            while hull.len() >= start + 2
                && kernel::orient(&pts[hull[hull.len() - 2]], &pts[hull[hull.len() - 1]], &pts[i]) != Ordering::Greater
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

/// Corners of the convex hull in counter-clockwise order, starting from the
/// lexicographically smallest point.
pub fn convex_hull(pts: &[LatticePoint]) -> Result<Vec<LatticePoint>, HullError> {
    if pts.is_empty() {
        return Err(HullError::Empty);
    }
    let idx = with_coords!(pts, |c| hull_indices(&c));
    if idx.len() < 3 {
        return Err(HullError::AllCollinear);
    }
    Ok(idx.into_iter().map(|i| pts[i].clone()).collect())
}

/// The hull of a polygon's vertices as a polygon of its own.
pub fn hull_polygon(poly: &Polygon) -> Polygon {
    let corners = convex_hull(poly.vertices()).expect("a simple polygon spans two dimensions");
    Polygon { vts: VertexList(corners), orientation: Orientation::CounterClockwise }
}

/// Number of extreme points (hull corners) of the vertex set.
pub fn extreme_point_count(poly: &Polygon) -> usize {
    hull_polygon(poly).len()
}

/// For each vertex, whether it lies strictly inside the convex hull.
pub fn hull_interior_flags(poly: &Polygon) -> Vec<bool> {
    let hull = hull_polygon(poly);
    poly.vertices().iter().map(|v| locate_in(&v.to_rational(), hull.vertices()) == PointLocation::Inside).collect()
}

/// A polygon is convex iff every vertex lies on the frontier of its hull.
pub fn is_convex(poly: &Polygon) -> bool {
    !hull_interior_flags(poly).into_iter().any(|b| b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vl(pts: &[(i64, i64)]) -> VertexList {
        VertexList::from_ints(pts)
    }

    fn poly(pts: &[(i64, i64)]) -> Polygon {
        validate_polygon(vl(pts)).unwrap()
    }

    const RECT: &[(i64, i64)] = &[(0, 0), (4, 0), (4, 3), (0, 3)];
    const PENTAGON: &[(i64, i64)] = &[(0, 0), (4, 0), (4, 3), (2, 1), (0, 3)];

    #[test]
    fn simplicity_examples() {
        assert!(is_simple(&vl(RECT)));
        assert!(!is_simple(&vl(&[(0, 0), (2, 2), (2, 0), (0, 2)])));
        assert!(is_simple(&vl(&[(0, 0), (2, 0), (4, 0), (4, 4), (0, 4)])));
        assert!(is_simple(&vl(PENTAGON)));
    }

    #[test]
    fn bowtie_reports_first_crossing_pair() {
        let err = validate_polygon(vl(&[(0, 0), (2, 2), (2, 0), (0, 2)])).unwrap_err();
        assert_eq!(err, PolygonError::NotSimple(EdgeId(0, 1), EdgeId(2, 3)));
    }

    #[test]
    fn validate_errors() {
        assert_eq!(validate_polygon(vl(&[(0, 0), (1, 0)])).unwrap_err(), PolygonError::TooFewVertices(2));
        assert_eq!(
            validate_polygon(vl(&[(0, 0), (1, 0), (1, 0), (0, 1)])).unwrap_err(),
            PolygonError::DegenerateEdge(EdgeId(1, 2))
        );
        assert!(matches!(validate_polygon(vl(&[(0, 0), (1, 1), (2, 2)])), Err(PolygonError::NotSimple(..))));
        // Back-tracking spike.
        assert!(matches!(validate_polygon(vl(&[(0, 0), (4, 0), (2, 0), (2, 3)])), Err(PolygonError::NotSimple(..))));
        // Repeated vertex that is not consecutive (pinched figure eight).
        assert!(matches!(
            validate_polygon(vl(&[(0, 0), (2, 0), (1, 1), (2, 2), (0, 2), (1, 1)])),
            Err(PolygonError::NotSimple(..))
        ));
    }

    #[test]
    fn orientation_recorded() {
        assert_eq!(poly(&[(0, 0), (1, 0), (0, 1)]).orientation(), Orientation::CounterClockwise);
        assert_eq!(poly(&[(0, 0), (0, 1), (1, 0)]).orientation(), Orientation::Clockwise);
    }

    #[test]
    fn rotation_examples() {
        let v = vl(RECT);
        assert_eq!(rotate_vertices(&v, 1), vl(&[(4, 0), (4, 3), (0, 3), (0, 0)]));
        assert_eq!(rotate_vertices(&v, 0), v);
        assert_eq!(rotate_vertices(&v, 4), v);
        assert_eq!(rotate_vertices(&v, 6), rotate_vertices(&v, 2));
    }

    #[test]
    fn classify_examples() {
        let r = poly(RECT);
        assert_eq!(classify_point(&RationalPoint::from_ints(2, 1), &r), PointLocation::Inside);
        assert_eq!(classify_point(&RationalPoint::from_ints(4, 1), &r), PointLocation::OnBoundary);
        assert_eq!(classify_point(&RationalPoint::from_ints(5, 5), &r), PointLocation::Outside);
        // Rational queries go through the homogeneous path.
        let half = num_rational::BigRational::new(1.into(), 2.into());
        let q = RationalPoint::new(half.clone(), half);
        assert_eq!(classify_point(&q, &r), PointLocation::Inside);
        let edge = RationalPoint::new(
            num_rational::BigRational::new(7.into(), 2.into()),
            num_rational::BigRational::from_integer(0.into()),
        );
        assert_eq!(classify_point(&edge, &r), PointLocation::OnBoundary);
    }

    #[test]
    fn classify_rays_through_vertices() {
        // Points level with reflex and convex vertices of the pentagon.
        let p = poly(PENTAGON);
        let loc = |x, y| classify_point(&RationalPoint::from_ints(x, y), &p);
        assert_eq!(loc(1, 1), PointLocation::Inside);
        assert_eq!(loc(3, 1), PointLocation::Inside);
        assert_eq!(loc(2, 2), PointLocation::Outside);
        assert_eq!(loc(3, 2), PointLocation::OnBoundary);
        assert_eq!(loc(0, 1), PointLocation::OnBoundary);
    }

    #[test]
    fn hull_examples() {
        let pts = vl(&[(0, 0), (2, 0), (1, 1), (0, 2), (2, 2)]);
        assert_eq!(convex_hull(pts.as_slice()).unwrap(), vl(&[(0, 0), (2, 0), (2, 2), (0, 2)]).into_inner());
        let tri = vl(&[(0, 0), (1, 0), (0, 1)]);
        assert_eq!(convex_hull(tri.as_slice()).unwrap(), tri.clone().into_inner());
        assert_eq!(convex_hull(vl(&[(0, 0), (1, 0), (2, 0)]).as_slice()), Err(HullError::AllCollinear));
        assert_eq!(convex_hull(&[]), Err(HullError::Empty));
        assert_eq!(convex_hull(vl(&[(3, 3), (3, 3)]).as_slice()), Err(HullError::AllCollinear));
    }

    #[test]
    fn extreme_points_and_convexity() {
        assert_eq!(extreme_point_count(&poly(RECT)), 4);
        let fig4 = poly(&[(0, 0), (4, 0), (2, 2), (0, 4)]);
        assert_eq!(extreme_point_count(&fig4), 3);
        assert!(is_convex(&fig4));
        assert_eq!(extreme_point_count(&poly(&[(0, 0), (1, 0), (0, 1)])), 3);
        assert!(is_convex(&poly(&[(0, 0), (1, 0), (0, 1)])));
        assert!(!is_convex(&poly(PENTAGON)));
        assert_eq!(hull_interior_flags(&poly(PENTAGON)), vec![false, false, false, true, false]);
    }
}
