//! Exact scalar and point types and the basic planar predicates.
//!
//! Coordinates are arbitrary-precision integers ([`LatticePoint`]) or
//! canonical rationals ([`RationalPoint`]). Nothing in this crate touches
//! floating point.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// A point of the integer lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: BigInt,
    pub y: BigInt,
}

impl LatticePoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        LatticePoint { x: x.into(), y: y.into() }
    }

    pub fn to_rational(&self) -> RationalPoint {
        RationalPoint::new(BigRational::from_integer(self.x.clone()), BigRational::from_integer(self.y.clone()))
    }

    pub fn translate(&self, dx: &BigInt, dy: &BigInt) -> LatticePoint {
        LatticePoint::new(&self.x + dx, &self.y + dy)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<(i64, i64)> for LatticePoint {
    fn from((x, y): (i64, i64)) -> Self {
        LatticePoint::new(x, y)
    }
}

/// A point with exact rational coordinates. `BigRational` keeps every value
/// reduced with a positive denominator, so derived equality is semantic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint {
    pub x: BigRational,
    pub y: BigRational,
}

impl RationalPoint {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        RationalPoint { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        LatticePoint::new(x, y).to_rational()
    }

    /// The lattice point this equals, if both coordinates are integers.
    pub fn to_lattice(&self) -> Option<LatticePoint> {
        (self.x.is_integer() && self.y.is_integer())
            .then(|| LatticePoint::new(self.x.to_integer(), self.y.to_integer()))
    }

    /// Homogeneous integer form `(X, Y, D)` with `self = (X / D, Y / D)`, `D > 0`.
    pub(crate) fn homogeneous(&self) -> (BigInt, BigInt, BigInt) {
        let d = self.x.denom().lcm(self.y.denom());
        let x = self.x.numer() * (&d / self.x.denom());
        let y = self.y.numer() * (&d / self.y.denom());
        (x, y, d)
    }

    fn sub(&self, o: &RationalPoint) -> (BigRational, BigRational) {
        (&self.x - &o.x, &self.y - &o.y)
    }

    fn along(&self, d: &(BigRational, BigRational), t: &BigRational) -> RationalPoint {
        RationalPoint::new(&self.x + &d.0 * t, &self.y + &d.1 * t)
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl From<&LatticePoint> for RationalPoint {
    fn from(p: &LatticePoint) -> Self {
        p.to_rational()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("segment endpoints coincide at {0}")]
pub struct ZeroLengthSegment(pub Box<RationalPoint>);

/// A closed straight segment of positive length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Segment {
    start: RationalPoint,
    end: RationalPoint,
}

impl Segment {
    pub fn new(start: RationalPoint, end: RationalPoint) -> Result<Self, ZeroLengthSegment> {
        if start == end {
            return Err(ZeroLengthSegment(Box::new(start)));
        }
        Ok(Segment { start, end })
    }

    pub fn from_lattice(a: &LatticePoint, b: &LatticePoint) -> Result<Self, ZeroLengthSegment> {
        Segment::new(a.to_rational(), b.to_rational())
    }

    pub fn start(&self) -> &RationalPoint {
        &self.start
    }

    pub fn end(&self) -> &RationalPoint {
        &self.end
    }

    /// The same point set with endpoints in lexicographic order.
    pub fn normalized(&self) -> Segment {
        if self.start <= self.end {
            self.clone()
        } else {
            Segment { start: self.end.clone(), end: self.start.clone() }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
    Collinear,
}

impl Orientation {
    fn of_sign(v: &BigRational) -> Orientation {
        if v.is_positive() {
            Orientation::CounterClockwise
        } else if v.is_negative() {
            Orientation::Clockwise
        } else {
            Orientation::Collinear
        }
    }
}

fn cross(u: &(BigRational, BigRational), v: &(BigRational, BigRational)) -> BigRational {
    &u.0 * &v.1 - &u.1 * &v.0
}

fn dot(u: &(BigRational, BigRational), v: &(BigRational, BigRational)) -> BigRational {
    &u.0 * &v.0 + &u.1 * &v.1
}

/// Turn direction of `a -> b -> c`, the sign of `(b - a) x (c - a)`.
pub fn orientation(a: &RationalPoint, b: &RationalPoint, c: &RationalPoint) -> Orientation {
    Orientation::of_sign(&cross(&b.sub(a), &c.sub(a)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegmentIntersection {
    Empty,
    Point(RationalPoint),
    /// Shared collinear piece, endpoints in lexicographic order.
    Overlap(Segment),
}

/// Exact intersection of two closed segments.
pub fn segment_intersection(s1: &Segment, s2: &Segment) -> SegmentIntersection {
    let d1 = s1.end.sub(&s1.start);
    let d2 = s2.end.sub(&s2.start);
    let w = s2.start.sub(&s1.start);
    let denom = cross(&d1, &d2);
    let unit = |t: &BigRational| !t.is_negative() && *t <= BigRational::one();

    if !denom.is_zero() {
        let t = cross(&w, &d2) / &denom;
        let u = cross(&w, &d1) / &denom;
        return if unit(&t) && unit(&u) {
            SegmentIntersection::Point(s1.start.along(&d1, &t))
        } else {
            SegmentIntersection::Empty
        };
    }
    if !cross(&w, &d1).is_zero() {
        return SegmentIntersection::Empty;
    }
    // Collinear: parametrize s2's endpoints along s1.
    let len2 = dot(&d1, &d1);
    let t0 = dot(&w, &d1) / &len2;
    let t1 = dot(&s2.end.sub(&s1.start), &d1) / &len2;
    let (lo2, hi2) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
    let lo = std::cmp::max(lo2, BigRational::zero());
    let hi = std::cmp::min(hi2, BigRational::one());
    match lo.cmp(&hi) {
        std::cmp::Ordering::Greater => SegmentIntersection::Empty,
        std::cmp::Ordering::Equal => SegmentIntersection::Point(s1.start.along(&d1, &lo)),
        std::cmp::Ordering::Less => {
            let a = s1.start.along(&d1, &lo);
            let b = s1.start.along(&d1, &hi);
            SegmentIntersection::Overlap(Segment { start: a, end: b }.normalized())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointOnSegment {
    Endpoint,
    RelativeInterior,
    Off,
}

pub fn point_on_segment(p: &RationalPoint, s: &Segment) -> PointOnSegment {
    if *p == s.start || *p == s.end {
        return PointOnSegment::Endpoint;
    }
    let d = s.end.sub(&s.start);
    let w = p.sub(&s.start);
    if !cross(&d, &w).is_zero() {
        return PointOnSegment::Off;
    }
    let t = dot(&w, &d);
    if t.is_positive() && t < dot(&d, &d) {
        PointOnSegment::RelativeInterior
    } else {
        PointOnSegment::Off
    }
}

/// Number of lattice steps along `a -> b`: `gcd(|dx|, |dy|)`.
pub fn gcd_width(a: &LatticePoint, b: &LatticePoint) -> BigInt {
    let dx = (&b.x - &a.x).abs();
    let dy = (&b.y - &a.y).abs();
    dx.gcd(&dy)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rp(x: i64, y: i64) -> RationalPoint {
        RationalPoint::from_ints(x, y)
    }

    fn seg(a: (i64, i64), b: (i64, i64)) -> Segment {
        Segment::new(rp(a.0, a.1), rp(b.0, b.1)).unwrap()
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&rp(0, 0), &rp(1, 0), &rp(0, 1)), Orientation::CounterClockwise);
        assert_eq!(orientation(&rp(0, 0), &rp(1, 1), &rp(2, 2)), Orientation::Collinear);
        assert_eq!(orientation(&rp(0, 0), &rp(0, 1), &rp(1, 0)), Orientation::Clockwise);
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(
            segment_intersection(&seg((0, 0), (2, 2)), &seg((0, 2), (2, 0))),
            SegmentIntersection::Point(rp(1, 1))
        );
        assert_eq!(segment_intersection(&seg((0, 0), (1, 0)), &seg((2, 0), (3, 0))), SegmentIntersection::Empty);
        assert_eq!(
            segment_intersection(&seg((0, 0), (2, 0)), &seg((1, 0), (3, 0))),
            SegmentIntersection::Overlap(seg((1, 0), (2, 0)))
        );
        // Touching collinear segments meet in a single point.
        assert_eq!(
            segment_intersection(&seg((0, 0), (1, 0)), &seg((1, 0), (3, 0))),
            SegmentIntersection::Point(rp(1, 0))
        );
        // Parallel, distinct lines.
        assert_eq!(segment_intersection(&seg((0, 0), (1, 0)), &seg((0, 1), (1, 1))), SegmentIntersection::Empty);
    }

    #[test]
    fn intersection_at_rational_point() {
        let r = segment_intersection(&seg((0, 0), (1, 2)), &seg((0, 1), (1, 0)));
        let third = BigRational::new(1.into(), 3.into());
        assert_eq!(r, SegmentIntersection::Point(RationalPoint::new(third.clone(), third * BigInt::from(2))));
    }

    #[test]
    fn point_on_segment_examples() {
        let s = seg((0, 0), (2, 0));
        assert_eq!(point_on_segment(&rp(1, 0), &s), PointOnSegment::RelativeInterior);
        assert_eq!(point_on_segment(&rp(0, 0), &s), PointOnSegment::Endpoint);
        assert_eq!(point_on_segment(&rp(1, 1), &s), PointOnSegment::Off);
        assert_eq!(point_on_segment(&rp(3, 0), &s), PointOnSegment::Off);
    }

    #[test]
    fn gcd_width_examples() {
        let l = |x, y| LatticePoint::new(x, y);
        assert_eq!(gcd_width(&l(0, 0), &l(4, 0)), BigInt::from(4));
        assert_eq!(gcd_width(&l(4, 0), &l(0, 3)), BigInt::from(1));
        assert_eq!(gcd_width(&l(0, 3), &l(4, 3)), BigInt::from(4));
        assert_eq!(gcd_width(&l(2, 2), &l(2, 2)), BigInt::from(0));
    }

    #[test]
    fn zero_length_segment_rejected() {
        assert!(Segment::new(rp(1, 1), rp(1, 1)).is_err());
    }

    #[test]
    fn rationals_are_canonical() {
        let a = RationalPoint::new(BigRational::new(2.into(), 4.into()), BigRational::new((-3).into(), (-6).into()));
        let b = RationalPoint::new(BigRational::new(1.into(), 2.into()), BigRational::new(1.into(), 2.into()));
        assert_eq!(a, b);
        assert_eq!(a.homogeneous(), (BigInt::from(1), BigInt::from(1), BigInt::from(2)));
    }
}
