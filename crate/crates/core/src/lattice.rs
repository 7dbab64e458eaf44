//! Lattice-point counts and exact area.
//!
//! Areas are carried as twice-area integers throughout; halving happens only
//! when a value is shown to a person.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exact::{gcd_width, LatticePoint};
use crate::kernel::{self, with_coords, Int, Loc, Pt};
use crate::polygon::{is_convex, signed_area2, PointLocation, Polygon};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("counts out of range: I={interior}, B={boundary}, area2={area2}")]
pub struct CountError {
    pub interior: BigInt,
    pub boundary: BigInt,
    pub area2: BigInt,
}

/// `(I, B, 2 * area)` of a lattice polygon.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PickCounts {
    interior: BigInt,
    boundary: BigInt,
    area2: BigInt,
}

impl PickCounts {
    /// Rejects negative interior counts, fewer than three boundary points and
    /// non-positive area, none of which any lattice polygon can have.
    pub fn new(interior: BigInt, boundary: BigInt, area2: BigInt) -> Result<Self, CountError> {
        if interior.is_negative() || boundary < BigInt::from(3) || !area2.is_positive() {
            return Err(CountError { interior, boundary, area2 });
        }
        Ok(PickCounts { interior, boundary, area2 })
    }

    pub fn from_ints(interior: i64, boundary: i64, area2: i64) -> Result<Self, CountError> {
        PickCounts::new(interior.into(), boundary.into(), area2.into())
    }

    pub fn interior(&self) -> &BigInt {
        &self.interior
    }

    pub fn boundary(&self) -> &BigInt {
        &self.boundary
    }

    pub fn area2(&self) -> &BigInt {
        &self.area2
    }

    /// `area2 - (2I + B - 2)`.
    pub fn residual(&self) -> BigInt {
        &self.area2 - pick_area2(&self.interior, &self.boundary)
    }
}

impl fmt::Display for PickCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I={} B={} area={}", self.interior, self.boundary, HalfInteger(&self.area2))
    }
}

/// Renders a twice-area value as an exact fraction (`17` -> `17/2`, `16` -> `8`).
pub struct HalfInteger<'a>(pub &'a BigInt);

impl fmt::Display for HalfInteger<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let two = BigInt::from(2);
        if (self.0 % &two).is_zero() {
            write!(f, "{}", self.0 / two)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Boundary lattice points: the gcd edge sum.
pub fn boundary_count(poly: &Polygon) -> BigInt {
    (0..poly.len())
        .map(|i| {
            let (a, b) = poly.edge(i);
            gcd_width(a, b)
        })
        .sum()
}

fn scan<T: Int + Into<BigInt>>(pts: &[Pt<T>], mut visit: impl FnMut(&Pt<T>, Loc)) {
    let (lo, hi) = kernel::bbox(pts);
    let mut x = lo.0.clone();
    while x <= hi.0 {
        let mut y = lo.1.clone();
        while y <= hi.1 {
            let p = (x.clone(), y.clone());
            let loc = kernel::locate(&p, pts);
            visit(&p, loc);
            y = y + T::one();
        }
        x = x + T::one();
    }
}

/// Interior lattice points, by classifying every lattice point of the
/// bounding box.
pub fn interior_count(poly: &Polygon) -> BigInt {
    with_coords!(poly.vertices(), |c| {
        let mut count: u64 = 0;
        scan(&c, |_, loc| count += (loc == Loc::Inside) as u64);
        BigInt::from(count)
    })
}

/// Column-by-column interior count for convex polygons; agrees with
/// [`interior_count`] there but costs one step per column instead of one
/// point test per bounding-box point. Returns `None` for non-convex input.
pub fn convex_interior_count(poly: &Polygon) -> Option<BigInt> {
    if !is_convex(poly) {
        return None;
    }
    Some(with_coords!(poly.vertices(), |c| column_count(&c)))
}

fn column_count<T: Int + Into<BigInt>>(pts: &[Pt<T>]) -> BigInt {
    let (lo, hi) = kernel::bbox(pts);
    let mut total = BigInt::zero();
    let mut x = lo.0 + T::one();
    while x < hi.0 {
        if let Some((a, b)) = kernel::convex_column(pts, &x) {
            total += (b - a + T::one()).into();
        }
        x = x + T::one();
    }
    total
}

/// Every lattice point of the closed polygon with its location, in column
/// order (x, then y).
pub fn lattice_points(poly: &Polygon) -> Vec<(LatticePoint, PointLocation)> {
    let mut out = Vec::new();
    with_coords!(poly.vertices(), |c| scan(&c, |p, loc| {
        if loc != Loc::Outside {
            out.push((kernel::to_lattice(p), loc.into()));
        }
    }));
    out
}

/// Twice the enclosed area by the shoelace formula.
pub fn area2(poly: &Polygon) -> BigInt {
    signed_area2(poly.vertices()).abs()
}

/// Twice the area Pick's formula predicts: `2I + B - 2`.
pub fn pick_area2(interior: &BigInt, boundary: &BigInt) -> BigInt {
    interior * 2 + boundary - 2
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PickReport {
    pub counts: PickCounts,
    pub pick_area2: BigInt,
    /// `area2 - pick_area2`; zero whenever Pick's identity holds.
    pub residual: BigInt,
}

/// Counts `I`, `B` and the area directly and reports how far they are from
/// satisfying Pick's identity.
pub fn verify_pick(poly: &Polygon) -> PickReport {
    let counts = PickCounts { interior: interior_count(poly), boundary: boundary_count(poly), area2: area2(poly) };
    let pick = pick_area2(&counts.interior, &counts.boundary);
    let residual = &counts.area2 - &pick;
    PickReport { counts, pick_area2: pick, residual }
}
