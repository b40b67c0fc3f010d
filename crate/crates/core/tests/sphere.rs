mod common;

use proptest::prelude::*;

use common::*;
use spherics::sphere::{arc_length, interior_angle, intersect};
use spherics::{Triangle32, Triangle64};

proptest! {
    #[test]
    fn arc_length_matches_oracle(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (p, q) = (unit(&mut r), unit(&mut r));
        let d = arc_length(&point(p), &point(q)).unwrap();
        prop_assert!((d - oracle_arc(p, q)).abs() < 1e-12);
        prop_assert_eq!(d, arc_length(&point(q), &point(p)).unwrap());
        prop_assert!((0.0..=std::f64::consts::PI).contains(&d));
    }

    #[test]
    fn triangle_elements_match_oracle(seed in any::<u64>()) {
        let (v, t) = triangle(&mut rng(seed), 1e-2);
        let (sides, angles) = oracle_elements(v);
        for k in 0..3 {
            prop_assert!((t.sides()[k] - sides[k]).abs() < 1e-10);
            prop_assert!((t.angles()[k] - angles[k]).abs() < 1e-10);
            let a = interior_angle(&point(v[k]), &point(v[(k + 1) % 3]), &point(v[(k + 2) % 3])).unwrap();
            prop_assert!((a - angles[k]).abs() < 1e-10);
        }
        prop_assert!(t.consistency_error().unwrap() < 1e-10);
    }

    #[test]
    fn antipodal_triangle_has_equal_elements(seed in any::<u64>()) {
        let (_, t) = triangle(&mut rng(seed), 1e-2);
        let a = t.antipodal();
        prop_assert!(t.elements().max_deviation(&a.elements()) < 1e-12);
    }

    #[test]
    fn intersections_lie_on_both_circles(seed in any::<u64>()) {
        let n = generic_triple(&mut rng(seed), 1e-3);
        let (c1, c2) = (circle(n[0]), circle(n[1]));
        let (p, q) = intersect(&c1, &c2).unwrap();
        for x in [p, q] {
            prop_assert!(c1.contains(&x, 1e-12) && c2.contains(&x, 1e-12));
        }
        prop_assert!(p.dot(&q) + 1.0 < 1e-15);
    }

    #[test]
    fn single_precision_tracks_double(seed in any::<u64>()) {
        let (v, t) = triangle(&mut rng(seed), 0.05);
        let p32 = |w: [f64; 3]| spherics::SpherePoint32::new(w[0] as f32, w[1] as f32, w[2] as f32).unwrap();
        let t32 = Triangle32::from_vertices(p32(v[0]), p32(v[1]), p32(v[2])).unwrap();
        for (x, y) in t.elements().values().zip(t32.elements().values()) {
            prop_assert!((x - y as f64).abs() < 1e-4);
        }
    }
}

#[test]
fn degenerate_triangles_are_rejected() {
    let p = point([1., 0., 0.]);
    let q = point([0., 1., 0.]);
    assert!(Triangle64::from_vertices(p, p, q).is_err());
    assert!(Triangle64::from_vertices(p, q, p.antipode()).is_err());
    assert!(Triangle64::from_vertices(p, q, point([1., 1., 0.])).is_err());
}
