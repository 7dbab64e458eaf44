//! Integer predicate kernel shared by the polygon, counting and decomposition
//! code.
//!
//! Every predicate here is written once, generically over an exact signed
//! integer type. Callers go through [`with_coords`], which picks `i64` when
//! every coordinate is within [`TINY_LIMIT`], `i128` within [`SMALL_LIMIT`],
//! and `BigInt` otherwise. All paths compute identical answers.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::exact::LatticePoint;

/// Coordinates at or below this magnitude take the `i128` path. Cross products
/// of differences stay below 2^84, and the ray-casting direction multiplier is
/// bounded by the same magnitude, so no intermediate comes near `i128::MAX`.
pub(crate) const SMALL_LIMIT: i64 = 1 << 40;

/// Same reasoning for `i64`: the deepest products (degree three in doubled
/// coordinate differences) stay below 2^57.
pub(crate) const TINY_LIMIT: i64 = 1 << 16;

pub(crate) trait Int: Clone + Ord + Signed + Integer + From<i64> + Debug {}
impl<T: Clone + Ord + Signed + Integer + From<i64> + Debug> Int for T {}

pub(crate) type Pt<T> = (T, T);

pub(crate) fn narrow_coords<T: From<i64>>(pts: &[LatticePoint], limit: i64) -> Option<Vec<Pt<T>>> {
    pts.iter()
        .map(|p| {
            let x = p.x.to_i64()?;
            let y = p.y.to_i64()?;
            (x.abs() <= limit && y.abs() <= limit).then(|| (T::from(x), T::from(y)))
        })
        .collect()
}

pub(crate) fn big_coords(pts: &[LatticePoint]) -> Vec<Pt<BigInt>> {
    pts.iter().map(|p| (p.x.clone(), p.y.clone())).collect()
}

/// Runs `$body` with `$c` bound to the kernel coordinates of `$pts`, choosing
/// the `i128` representation when it is safe.
macro_rules! with_coords {
    ($pts:expr, |$c:ident| $body:expr) => {
        if let Some($c) = $crate::kernel::narrow_coords::<i64>($pts, $crate::kernel::TINY_LIMIT) {
            $body
        } else if let Some($c) = $crate::kernel::narrow_coords::<i128>($pts, $crate::kernel::SMALL_LIMIT) {
            $body
        } else {
            let $c = $crate::kernel::big_coords($pts);
            #[allow(clippy::useless_conversion)]
            $body
        }
    };
}
pub(crate) use with_coords;

pub(crate) fn to_lattice<T: Int + Into<BigInt>>(p: &Pt<T>) -> LatticePoint {
    LatticePoint::new(p.0.clone().into(), p.1.clone().into())
}

pub(crate) fn sub<T: Int>(a: &Pt<T>, b: &Pt<T>) -> Pt<T> {
    (a.0.clone() - b.0.clone(), a.1.clone() - b.1.clone())
}

pub(crate) fn cross_vec<T: Int>(u: &Pt<T>, v: &Pt<T>) -> T {
    u.0.clone() * v.1.clone() - u.1.clone() * v.0.clone()
}

/// `(a - o) x (b - o)`.
pub(crate) fn cross<T: Int>(o: &Pt<T>, a: &Pt<T>, b: &Pt<T>) -> T {
    cross_vec(&sub(a, o), &sub(b, o))
}

pub(crate) fn sign<T: Int>(v: &T) -> Ordering {
    v.cmp(&T::zero())
}

/// Sign of the turn o -> a -> b: `Greater` is counter-clockwise.
pub(crate) fn orient<T: Int>(o: &Pt<T>, a: &Pt<T>, b: &Pt<T>) -> Ordering {
    sign(&cross(o, a, b))
}

fn between<T: Ord>(v: &T, a: &T, b: &T) -> bool {
    if a <= b {
        a <= v && v <= b
    } else {
        b <= v && v <= a
    }
}

/// `p` lies on the closed segment `a`-`b`.
pub(crate) fn on_closed_segment<T: Int>(p: &Pt<T>, a: &Pt<T>, b: &Pt<T>) -> bool {
    orient(a, b, p) == Ordering::Equal && between(&p.0, &a.0, &b.0) && between(&p.1, &a.1, &b.1)
}

/// `p` lies on the segment `a`-`b` strictly between its endpoints.
pub(crate) fn on_open_segment<T: Int>(p: &Pt<T>, a: &Pt<T>, b: &Pt<T>) -> bool {
    p != a && p != b && on_closed_segment(p, a, b)
}

/// How two closed lattice segments meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Contact {
    Disjoint,
    /// Exactly one common point, which is an endpoint of at least one segment.
    Touch,
    /// Exactly one common point, interior to both segments.
    Cross,
    /// A common collinear piece of positive length.
    Overlap,
}

pub(crate) fn contact<T: Int>(a: &Pt<T>, b: &Pt<T>, c: &Pt<T>, d: &Pt<T>) -> Contact {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 == Ordering::Equal && o2 == Ordering::Equal {
        // Collinear: compare along a coordinate that varies on the line.
        let key = |p: &Pt<T>| if a.0 != b.0 || c.0 != d.0 { p.0.clone() } else { p.1.clone() };
        let (ka, kb, kc, kd) = (key(a), key(b), key(c), key(d));
        let lo = std::cmp::max(std::cmp::min(ka.clone(), kb.clone()), std::cmp::min(kc.clone(), kd.clone()));
        let hi = std::cmp::min(std::cmp::max(ka, kb), std::cmp::max(kc, kd));
        return match lo.cmp(&hi) {
            Ordering::Greater => Contact::Disjoint,
            Ordering::Equal => Contact::Touch,
            Ordering::Less => Contact::Overlap,
        };
    }
    if o1 != o2
        && o3 != o4
        && o1 != Ordering::Equal
        && o2 != Ordering::Equal
        && o3 != Ordering::Equal
        && o4 != Ordering::Equal
    {
        return Contact::Cross;
    }
    if on_closed_segment(c, a, b)
        || on_closed_segment(d, a, b)
        || on_closed_segment(a, c, d)
        || on_closed_segment(b, c, d)
    {
        Contact::Touch
    } else {
        Contact::Disjoint
    }
}

/// For a `Touch` contact, the common point (always one of the four endpoints).
pub(crate) fn touch_point<T: Int>(a: &Pt<T>, b: &Pt<T>, c: &Pt<T>, d: &Pt<T>) -> Pt<T> {
    if on_closed_segment(a, c, d) {
        a.clone()
    } else if on_closed_segment(b, c, d) {
        b.clone()
    } else if on_closed_segment(c, a, b) {
        c.clone()
    } else {
        d.clone()
    }
}

/// Twice the signed area of the closed chain (shoelace sum).
pub(crate) fn signed_area2<T: Int>(pts: &[Pt<T>]) -> T {
    let n = pts.len();
    (0..n).fold(T::zero(), |acc, i| acc + cross_vec(&pts[i], &pts[(i + 1) % n]))
}

/// Location of a point relative to a closed chain, computed by exact crossing
/// parity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Loc {
    Inside,
    OnBoundary,
    Outside,
}

/// Classifies the point `p / scale` against the chain `pts / scale`. Callers
/// pass homogeneous data: the query numerators and the vertices already
/// multiplied by the common denominator.
pub(crate) fn locate<T: Int>(p: &Pt<T>, pts: &[Pt<T>]) -> Loc {
    let n = pts.len();
    if (0..n).any(|i| on_closed_segment(p, &pts[i], &pts[(i + 1) % n])) {
        return Loc::OnBoundary;
    }
    // Ray direction (k, 1), i.e. slope 1/k, with k running over 2, 3, 5, 7, ...
    // Each vertex blocks at most one k, so this stops after at most n + 1 tries.
    let mut k: i64 = 2;
    let dir = loop {
        let d = (T::from(k), T::one());
        let hits_vertex = pts.iter().any(|v| sign(&cross_vec(&d, &sub(v, p))) == Ordering::Equal);
        if !hits_vertex {
            break d;
        }
        k = next_prime(k);
    };
    let mut inside = false;
    for i in 0..n {
        let u = &pts[i];
        let w = &pts[(i + 1) % n];
        let su = sign(&cross_vec(&dir, &sub(u, p)));
        let sw = sign(&cross_vec(&dir, &sub(w, p)));
        if su == sw {
            continue;
        }
        let e = sub(w, u);
        let ahead = sign(&cross_vec(&sub(u, p), &e)) == sign(&cross_vec(&dir, &e));
        if ahead {
            inside = !inside;
        }
    }
    if inside {
        Loc::Inside
    } else {
        Loc::Outside
    }
}

fn next_prime(k: i64) -> i64 {
    let mut c = k + 1;
    while (2..c).take_while(|d| d * d <= c).any(|d| c % d == 0) {
        c += 1;
    }
    c
}

/// Integer range `[lo, hi]` of the y-values strictly inside the convex
/// polygon `pts` on the column `x`, or `None` if there are none. Meant for `x`
/// strictly between the extreme x-coordinates, where the column crosses the
/// boundary exactly twice.
pub(crate) fn convex_column<T: Int>(pts: &[Pt<T>], x: &T) -> Option<(T, T)> {
    let n = pts.len();
    // Crossings as num/den with den > 0.
    let mut low: Option<(T, T)> = None;
    let mut high: Option<(T, T)> = None;
    let less = |p: &(T, T), q: &(T, T)| p.0.clone() * q.1.clone() < q.0.clone() * p.1.clone();
    for i in 0..n {
        let (u, w) = (&pts[i], &pts[(i + 1) % n]);
        if u.0 == w.0 {
            continue;
        }
        let (a, b) = if u.0 < w.0 { (u, w) } else { (w, u) };
        if *x < a.0 || *x > b.0 {
            continue;
        }
        let den = b.0.clone() - a.0.clone();
        let num = a.1.clone() * den.clone() + (x.clone() - a.0.clone()) * (b.1.clone() - a.1.clone());
        let cut = (num, den);
        if low.as_ref().is_none_or(|l| less(&cut, l)) {
            low = Some(cut.clone());
        }
        if high.as_ref().is_none_or(|h| less(h, &cut)) {
            high = Some(cut);
        }
    }
    let (low, high) = (low?, high?);
    let lo = low.0.div_floor(&low.1) + T::one();
    let hi = (high.0 - T::one()).div_floor(&high.1);
    (lo <= hi).then_some((lo, hi))
}

/// Axis-aligned bounding box `(min, max)` of a non-empty point list.
pub(crate) fn bbox<T: Int>(pts: &[Pt<T>]) -> (Pt<T>, Pt<T>) {
    let mut lo = pts[0].clone();
    let mut hi = pts[0].clone();
    for p in &pts[1..] {
        if p.0 < lo.0 {
            lo.0 = p.0.clone();
        }
        if p.1 < lo.1 {
            lo.1 = p.1.clone();
        }
        if p.0 > hi.0 {
            hi.0 = p.0.clone();
        }
        if p.1 > hi.1 {
            hi.1 = p.1.clone();
        }
    }
    (lo, hi)
}
