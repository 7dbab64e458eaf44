mod common;

use common::*;
use lattice_pick_core::polygon::{hull_interior_flags, hull_polygon};
use lattice_pick_core::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rp(x: i64, y: i64) -> RationalPoint {
    RationalPoint::from_ints(x, y)
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Intersection by line equations `a x + b y = c` and bounding boxes, a
/// different route from the library's parametric solve.
fn oracle_intersection(s: [(i64, i64); 2], t: [(i64, i64); 2]) -> SegmentIntersection {
    let line = |[p, r]: [(i64, i64); 2]| (r.1 - p.1, p.0 - r.0, (r.1 - p.1) * p.0 + (p.0 - r.0) * p.1);
    let (a1, b1, c1) = line(s);
    let (a2, b2, c2) = line(t);
    let in_box = |x: &BigRational, y: &BigRational, [p, r]: [(i64, i64); 2]| {
        let (lx, hx) = (q(p.0.min(r.0), 1), q(p.0.max(r.0), 1));
        let (ly, hy) = (q(p.1.min(r.1), 1), q(p.1.max(r.1), 1));
        lx <= *x && *x <= hx && ly <= *y && *y <= hy
    };
    let det = a1 * b2 - a2 * b1;
    if det != 0 {
        let x = q(c1 * b2 - c2 * b1, det);
        let y = q(a1 * c2 - a2 * c1, det);
        return if in_box(&x, &y, s) && in_box(&x, &y, t) {
            SegmentIntersection::Point(RationalPoint::new(x, y))
        } else {
            SegmentIntersection::Empty
        };
    }
    if a1 * t[0].0 + b1 * t[0].1 != c1 {
        return SegmentIntersection::Empty;
    }
    // Collinear: the overlap is the lexicographic interval intersection.
    let (s0, s1) = (s[0].min(s[1]), s[0].max(s[1]));
    let (t0, t1) = (t[0].min(t[1]), t[0].max(t[1]));
    let (lo, hi) = (s0.max(t0), s1.min(t1));
    match lo.cmp(&hi) {
        std::cmp::Ordering::Greater => SegmentIntersection::Empty,
        std::cmp::Ordering::Equal => SegmentIntersection::Point(rp(lo.0, lo.1)),
        std::cmp::Ordering::Less => SegmentIntersection::Overlap(Segment::new(rp(lo.0, lo.1), rp(hi.0, hi.1)).unwrap()),
    }
}

fn pt() -> impl Strategy<Value = (i64, i64)> {
    (-6i64..=6, -6i64..=6)
}

fn seg() -> impl Strategy<Value = [(i64, i64); 2]> {
    (pt(), pt()).prop_filter("zero length", |(a, b)| a != b).prop_map(|(a, b)| [a, b])
}

fn segment(s: [(i64, i64); 2]) -> Segment {
    Segment::from_lattice(&s[0].into(), &s[1].into()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn segment_intersection_matches_line_equations(s in seg(), t in seg()) {
        prop_assert_eq!(segment_intersection(&segment(s), &segment(t)), oracle_intersection(s, t));
    }

    #[test]
    fn segment_intersection_is_symmetric(s in seg(), t in seg()) {
        prop_assert_eq!(segment_intersection(&segment(s), &segment(t)), segment_intersection(&segment(t), &segment(s)));
    }

    #[test]
    fn orientation_flips_under_swap(a in pt(), b in pt(), c in pt()) {
        let (a, b, c) = (rp(a.0, a.1), rp(b.0, b.1), rp(c.0, c.1));
        let o = orientation(&a, &b, &c);
        prop_assert_eq!(orientation(&b, &c, &a), o);
        let flipped = match o {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Collinear => Orientation::Collinear,
        };
        prop_assert_eq!(orientation(&b, &a, &c), flipped);
    }

    #[test]
    fn gcd_width_counts_lattice_steps(a in (-20i64..=20, -20i64..=20), b in (-20i64..=20, -20i64..=20)) {
        let mut on = 0i64;
        for x in a.0.min(b.0)..=a.0.max(b.0) {
            for y in a.1.min(b.1)..=a.1.max(b.1) {
                on += on_segment((x, y), a, b) as i64;
            }
        }
        prop_assert_eq!(gcd_width(&a.into(), &b.into()), BigInt::from(on - 1));
    }

    #[test]
    fn point_on_segment_matches_brute_force(p in pt(), s in seg()) {
        let got = point_on_segment(&rp(p.0, p.1), &segment(s));
        let want = if p == s[0] || p == s[1] {
            PointOnSegment::Endpoint
        } else if on_segment(p, s[0], s[1]) {
            PointOnSegment::RelativeInterior
        } else {
            PointOnSegment::Off
        };
        prop_assert_eq!(got, want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn classification_matches_winding_number(p in arb_polygon(10, 12)) {
        let vs = ints(&p);
        for x in -1..=13 {
            for y in -1..=13 {
                let want = match locate((x, y), &vs) {
                    Where::Inside => PointLocation::Inside,
                    Where::Boundary => PointLocation::OnBoundary,
                    Where::Outside => PointLocation::Outside,
                };
                prop_assert_eq!(classify_point(&rp(x, y), &p), want, "({}, {})", x, y);
            }
        }
    }

    #[test]
    fn half_integer_points_classify_like_the_doubled_polygon(p in arb_polygon(8, 8)) {
        let doubled: Vec<(i64, i64)> = ints(&p).iter().map(|&(x, y)| (2 * x, 2 * y)).collect();
        for x in -1..=17 {
            for y in -1..=17 {
                let want = match locate((x, y), &doubled) {
                    Where::Inside => PointLocation::Inside,
                    Where::Boundary => PointLocation::OnBoundary,
                    Where::Outside => PointLocation::Outside,
                };
                let half = RationalPoint::new(q(x, 2), q(y, 2));
                prop_assert_eq!(classify_point(&half, &p), want);
            }
        }
    }

    #[test]
    fn counts_match_brute_force(p in arb_polygon(12, 15)) {
        let vs = ints(&p);
        let (i, b) = brute_counts(&vs);
        prop_assert_eq!(interior_count(&p), BigInt::from(i));
        prop_assert_eq!(boundary_count(&p), BigInt::from(b));
        prop_assert_eq!(area2(&p), BigInt::from(brute_area2(&vs)));
        prop_assert_eq!(verify_pick(&p).residual, BigInt::from(0));
    }

    #[test]
    fn convexity_matches_turn_signs(p in arb_polygon(8, 6)) {
        prop_assert_eq!(is_convex(&p), brute_is_convex(&ints(&p)));
    }

    #[test]
    fn hull_is_a_convex_cover_of_the_input(pts in prop::collection::vec((0i64..=15, 0i64..=15), 3..20)) {
        let lattice: Vec<LatticePoint> = pts.iter().map(|&p| p.into()).collect();
        let Ok(hull) = convex_hull(&lattice) else { return Ok(()) };
        let hv: Vec<(i64, i64)> = hull.iter().map(|v| (v.x.clone().try_into().unwrap(), v.y.clone().try_into().unwrap())).collect();
        // Corners only, counterclockwise, starting at the smallest point.
        prop_assert_eq!(Some(&hv[0]), pts.iter().min());
        for i in 0..hv.len() {
            let (a, b, c) = (hv[i], hv[(i + 1) % hv.len()], hv[(i + 2) % hv.len()]);
            prop_assert!((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0) > 0);
            prop_assert!(pts.contains(&a));
        }
        for &p in &pts {
            prop_assert_ne!(locate(p, &hv), Where::Outside);
        }
        let mut shuffled = lattice.clone();
        shuffled.reverse();
        shuffled.rotate_left(pts.len() / 2);
        prop_assert_eq!(convex_hull(&shuffled).unwrap(), hull);
    }

    #[test]
    fn column_count_matches_scan_on_hulls(pts in prop::collection::vec((0i64..=20, 0i64..=20), 3..12)) {
        let lattice: Vec<LatticePoint> = pts.iter().map(|&p| p.into()).collect();
        let Ok(hull) = convex_hull(&lattice) else { return Ok(()) };
        let h = validate_polygon(VertexList::new(hull)).unwrap();
        prop_assert_eq!(convex_interior_count(&h), Some(interior_count(&h)));
    }

    #[test]
    fn counts_survive_rotation_and_reversal(p in arb_polygon(10, 12), k in 0usize..10) {
        let base = verify_pick(&p).counts;
        let r = validate_polygon(rotate_vertices(p.vertex_list(), k % p.len())).unwrap();
        prop_assert_eq!(verify_pick(&r).counts, base.clone());
        let rev = validate_polygon(p.vertex_list().reversed()).unwrap();
        prop_assert_eq!(verify_pick(&rev).counts, base);
    }

    #[test]
    fn hull_flags_agree_with_the_hull_polygon(p in arb_polygon(10, 10)) {
        let hull = ints(&hull_polygon(&p));
        let flags = hull_interior_flags(&p);
        for (v, f) in ints(&p).into_iter().zip(flags) {
            prop_assert_eq!(f, locate(v, &hull) == Where::Inside);
        }
    }
}

#[test]
fn pick_anchor_values() {
    assert_eq!(pick_area2(&5.into(), &9.into()), BigInt::from(17));
    let unit = verify_pick(&poly(&[(0, 0), (1, 0), (0, 1)]));
    assert_eq!(unit.counts, PickCounts::from_ints(0, 3, 1).unwrap());
    let square = verify_pick(&poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]));
    assert_eq!(square.counts, PickCounts::from_ints(0, 4, 2).unwrap());
}

#[test]
fn big_coordinates_take_the_exact_slow_path() {
    // Far beyond any machine-integer fast path; translation must not change
    // any count.
    let shift: BigInt = BigInt::from(3).pow(90);
    let small = poly(&[(0, 0), (4, 0), (4, 3), (2, 1), (0, 3)]);
    let moved = validate_polygon(small.vertex_list().map(|v| v.translate(&shift, &-&shift))).unwrap();
    assert_eq!(verify_pick(&moved).counts, verify_pick(&small).counts);
    assert_eq!(is_convex(&moved), is_convex(&small));
    let far = LatticePoint::new(&shift + 2, -&shift + 2);
    assert_eq!(classify_point(&far.to_rational(), &moved), PointLocation::Outside);
    let inside = LatticePoint::new(&shift + 1, -&shift + 1);
    assert_eq!(classify_point(&inside.to_rational(), &moved), PointLocation::Inside);
}
