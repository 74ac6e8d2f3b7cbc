use proptest::prelude::*;

use p5curves::catalog::Catalog;
use p5curves::hilbert_profile::{extremal_profile, maximal_rank_profile, verify_profile};
use p5curves::invariants::*;
use p5curves::model_enumerator::*;
use p5curves::surface_cohomology::*;

proptest! {
    #[test]
    fn pi_monotone(d in 3i64..50, r in 2i64..20) {
        prop_assume!(r < d);
        prop_assert!(castelnuovo_pi(d + 1, r).unwrap() >= castelnuovo_pi(d, r).unwrap());
        if r + 1 < d {
            prop_assert!(castelnuovo_pi(d, r + 1).unwrap() <= castelnuovo_pi(d, r).unwrap());
        }
    }

    #[test]
    fn rho_identity(d in 1i64..=100, g in 0i64..200, r in 2i64..=20) {
        prop_assume!(d >= r);
        let rho = brill_noether_rho(d, g, r).unwrap();
        prop_assert_eq!(rho + (r + 1) * (g - d + r), g);
        let inv = classical_invariants(DGR::new(d, g, r).unwrap()).unwrap();
        prop_assert_eq!(inv.expected_dim - inv.lambda, (r + 1) * (r + 1) - 1);
        prop_assert_eq!(inv.lambda, 3 * g - 3 + inv.rho);
    }

    #[test]
    fn nodal_union_symmetric_and_associative(a in 0i64..30, b in 0i64..30, c in 0i64..30, p in 1i64..10, q in 1i64..10) {
        prop_assert_eq!(nodal_union_genus(a, b, p).unwrap(), nodal_union_genus(b, a, p).unwrap());
        let left = nodal_union_genus(nodal_union_genus(a, b, p).unwrap(), c, q).unwrap();
        let right = nodal_union_genus(a, nodal_union_genus(b, c, q).unwrap(), p).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn fe_serre_and_rr_random(e in prop::sample::select(vec![0i64, 1, 2, 3, 4, 5]), x in -40i64..40, y in -40i64..40) {
        let c = FeClass::new(e, x, y);
        let h = cohomology_fe(c).unwrap();
        let dual = cohomology_fe(c.serre_dual()).unwrap();
        prop_assert_eq!((h.h0, h.h1, h.h2), (dual.h2, dual.h1, dual.h0));
        let k = FeClass::canonical(e);
        prop_assert_eq!(h.euler(), 1 + (c.dot(&c) - c.dot(&k)) / 2);
    }

    #[test]
    fn twist_nonspecial_range(a in 1i64..6, b in 1i64..10, t in 1i64..8) {
        let c = DivisorClass::new(a, b);
        let d = 2 * a + b;
        let g = (a - 1) * (b - 1);
        prop_assume!(t * d >= 2 * g - 1);
        let tw = curve_twist_cohomology(SurfaceEmbedding::Quadric, c, t).unwrap();
        prop_assert_eq!(tw.h1, 0);
        prop_assert_eq!(tw.h0, t * d + 1 - g);
    }
}

#[test]
fn pi1_below_pi() {
    for d in 11..=20 {
        assert!(castelnuovo_pi1_p5(d).unwrap() < castelnuovo_pi(d, 5).unwrap(), "d={d}");
    }
}

#[test]
fn rnc_riemann_roch() {
    for n in 3..=10 {
        for z in 0..=30 {
            let (h0, h1) = rnc_normal_bundle_profile(n, z).unwrap();
            assert_eq!(h0 - h1, (n - 1) * (n + 3 - z));
        }
    }
}

#[test]
fn fe_grid_serre_and_riemann_roch() {
    let mut n = 0;
    for e in [0, 2, 4] {
        for x in -12..=12 {
            for y in -12..=12 {
                let c = FeClass::new(e, x, y);
                let h = cohomology_fe(c).unwrap();
                let dual = cohomology_fe(FeClass::new(e, -2 - x, -e - 2 - y)).unwrap();
                assert_eq!(h.h0, dual.h2);
                assert_eq!(h.h1, dual.h1);
                assert!(h.h0 >= 0 && h.h1 >= 0 && h.h2 >= 0);
                // D^2 and D.K expanded by hand.
                let d2 = -e * x * x + 2 * x * y;
                let dk = 2 * e * x - 2 * y - (e + 2) * x;
                assert_eq!(h.euler(), 1 + (d2 - dk) / 2, "({e},{x},{y})");
                n += 1;
            }
        }
    }
    assert_eq!(n, 3 * 25 * 25);
}

#[test]
fn kunneth_matches_pushforward() {
    for x in -12..=12 {
        for y in -12..=12 {
            assert_eq!(
                cohomology_fe(FeClass::new(0, x, y)).unwrap(),
                cohomology_bidegree(BidegreeClass::new(x, y)).unwrap()
            );
        }
    }
}

#[test]
fn maroni_agreement_and_definition() {
    for a in 3..=6 {
        for b in a..=20 {
            let c = DivisorClass::new(a, b);
            let m = maroni_iterative(SurfaceEmbedding::Quadric, c).unwrap();
            assert_eq!(m, maroni_closed_form(SurfaceKind::Quadric, a, b).unwrap());
            check_definition(SurfaceEmbedding::Quadric, c, m);
        }
        for b in 2 * a..=20 {
            let c = DivisorClass::new(a, b);
            let m = maroni_iterative(SurfaceEmbedding::F2, c).unwrap();
            assert_eq!(m, maroni_closed_form(SurfaceKind::F2, a, b).unwrap());
            check_definition(SurfaceEmbedding::F2, c, m);
        }
    }
}

fn check_definition(s: SurfaceEmbedding, c: DivisorClass, m: i64) {
    for k in 0..=m + 1 {
        assert_eq!(pencil_multiple_dim(s, c, k).unwrap(), k, "{s:?} {c:?} k={k}");
    }
    assert_ne!(pencil_multiple_dim(s, c, m + 2).unwrap(), m + 2);
}

#[test]
fn enumerator_round_trip_and_family_arithmetic() {
    for d in 5..=20 {
        for g in 0..=castelnuovo_pi(d, 5).unwrap() {
            for m in enumerate_models(d, g).unwrap() {
                assert!(m.round_trips());
                assert_eq!((m.degree, m.genus), (d, g));
                for amb in [false, true] {
                    let f = family_dimension_count(&m, amb).unwrap();
                    assert_eq!(f.family_dim + f.aut_dim - if amb { 35 } else { 0 }, f.linear_system_dim);
                }
            }
        }
    }
}

#[test]
fn maximal_rank_profiles() {
    for d in 5..=20 {
        for g in 0..=castelnuovo_pi(d, 5).unwrap() {
            if brill_noether_rho(d, g, 5).unwrap() < 0 {
                continue;
            }
            let p = maximal_rank_profile(d, g, 8).unwrap();
            assert!(verify_profile(&p).is_empty(), "({d},{g})");
            for r in p.entries.iter().filter(|r| r.t >= 2) {
                assert_eq!(r.h0_ideal * r.h1_ideal, 0);
            }
            if d <= 9 && p.flags.linearly_normal {
                assert!(p.flags.acm, "({d},{g}) {p:?}");
            }
        }
    }
}

#[test]
fn extremal_profiles_vanish_past_threshold() {
    for d in 6..=20 {
        let g = castelnuovo_pi(d, 5).unwrap();
        for m in enumerate_models(d, g).unwrap() {
            if m.surface.embedding().is_none() {
                continue;
            }
            let p = extremal_profile(&m, 8).unwrap();
            assert!(verify_profile(&p).is_empty(), "{:?}", m.surface);
            for r in p.entries.iter().filter(|r| r.t * d >= 2 * g - 1) {
                assert_eq!(r.h1_curve, 0);
            }
        }
    }
}

#[test]
fn every_catalog_profile_satisfies_euler() {
    let cat = Catalog::shipped();
    for d in 5..=15 {
        for g in 0..=castelnuovo_pi(d, 5).unwrap() {
            let e = cat.query(d, g).unwrap();
            for c in &e.components {
                let p = cat.component_profile(&e, c, 8).unwrap();
                assert!(verify_profile(&p).is_empty(), "({d},{g}) {}", c.id);
                if d <= 9 && c.linearly_normal {
                    assert!(c.acm_general_member);
                }
            }
        }
    }
}

#[test]
fn del_pezzo_genus_is_always_integral() {
    for a in 1..=20 {
        for b1 in 0..=a {
            for b2 in 0..=b1 {
                for b3 in 0..=b2 {
                    for b4 in 0..=b3 {
                        let c = DelPezzoClass::new(a, [b1, b2, b3, b4]);
                        assert!(c.genus().is_ok());
                    }
                }
            }
        }
    }
}
