use gitkit_core::polytopes::hull;
use gitkit_core::rational::{q, qf};
use gitkit_core::torus_git::*;
use gitkit_core::{Weight, Q};
use proptest::prelude::*;

fn weight(r: usize) -> impl Strategy<Value = Weight> {
    proptest::collection::vec(-24i64..=24, r).prop_map(|v| Weight::new(v.into_iter().map(|x| qf(x, 8)).collect()))
}

fn point() -> impl Strategy<Value = ProjPoint> {
    (1usize..=3).prop_flat_map(|r| {
        proptest::collection::vec((weight(r), 1i64..=32), 1..=6)
            .prop_map(|s| ProjPoint::new(s.into_iter().map(|(w, c)| (w, qf(c, 8))).collect()).expect("valid"))
    })
}

fn point_and_vectors() -> impl Strategy<Value = (ProjPoint, Vec<f64>, Vec<f64>, f64)> {
    point().prop_flat_map(|x| {
        let r = x.rank();
        (Just(x), proptest::collection::vec(-3.0f64..3.0, r), proptest::collection::vec(-3.0f64..3.0, r), 0.0f64..1.0)
    })
}

fn f64_norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn moment_lies_in_polytope(x in point()) {
        let m = moment_map(&x, &Weight::zero(x.rank())).unwrap();
        prop_assert!(orbit_moment_polytope(&x).contains(&m));
    }

    #[test]
    fn translated_moments_stay_in_polytope(x in point(), k in proptest::collection::vec(1i64..5, 6)) {
        // rational stand-in for exp(−2⟨w, ξ⟩) rescaling
        let support = x
            .weights()
            .iter()
            .zip(x.masses())
            .zip(k.iter().cycle())
            .map(|((w, c), &k)| (w.clone(), c * q(k)))
            .collect();
        let y = ProjPoint::new(support).unwrap();
        let m = moment_map(&y, &Weight::zero(x.rank())).unwrap();
        prop_assert!(orbit_moment_polytope(&x).contains(&m));
    }

    #[test]
    fn psi_is_convex((x, a, b, t) in point_and_vectors()) {
        let f = |p: &[f64]| kempf_ness(&x, p).unwrap().0;
        let mid: Vec<f64> = a.iter().zip(&b).map(|(p, q)| t * p + (1.0 - t) * q).collect();
        prop_assert!(f(&mid) <= t * f(&a) + (1.0 - t) * f(&b) + 1e-12);
    }

    #[test]
    fn gradient_matches_finite_differences((x, a, _, _) in point_and_vectors()) {
        let (_, g) = kempf_ness(&x, &a).unwrap();
        let h = 1e-5;
        for i in 0..a.len() {
            let mut p = a.clone();
            let mut m = a.clone();
            p[i] += h;
            m[i] -= h;
            let fd = (kempf_ness(&x, &p).unwrap().0 - kempf_ness(&x, &m).unwrap().0) / (2.0 * h);
            prop_assert!((fd - g[i]).abs() < 1e-6 * f64_norm(&g).max(1.0));
        }
    }

    #[test]
    fn gradient_at_origin_is_minus_moment(x in point()) {
        let (_, g) = kempf_ness(&x, &vec![0.0; x.rank()]).unwrap();
        let m = moment_map(&x, &Weight::zero(x.rank())).unwrap().to_f64();
        for (a, b) in g.iter().zip(&m) {
            prop_assert!((a + b).abs() < 1e-12);
        }
    }

    #[test]
    fn verdicts_agree(x in point()) {
        let v = classify_stability(&x);
        let d = max_destabilizing(&x);
        prop_assert_eq!(v.is_semistable(), d.is_none());
        let cfg = DescentConfig { tol: 1e-7, ..DescentConfig::default() };
        match minimize_kempf_ness(&x, &cfg).unwrap() {
            Descent::Converged { residual, .. } => {
                prop_assert!(v.is_semistable());
                prop_assert!(residual < cfg.tol);
            }
            Descent::Escaped { .. } => prop_assert!(!v.is_semistable()),
        }
    }

    #[test]
    fn destabilizer_minimizes_slope(x in point(), nus in proptest::collection::vec(proptest::collection::vec(-9i64..=9, 3), 20)) {
        if let Some((l, s)) = max_destabilizing(&x) {
            prop_assert_eq!(hm_slope(&x, &l).unwrap(), s.clone());
            prop_assert!(s.num.clone() < Q::from_integer(0.into()));
            for nu in nus {
                let nu = Weight::from_ints(&nu[..x.rank()]);
                if nu.is_zero() {
                    continue;
                }
                prop_assert!(hm_slope(&x, &nu).unwrap() >= s);
            }
        }
    }

    #[test]
    fn graded_is_idempotent(x in point(), l in proptest::collection::vec(-4i64..=4, 3)) {
        let l = Weight::from_ints(&l[..x.rank()]);
        prop_assume!(!l.is_zero());
        let g = associated_graded(&x, &l).unwrap();
        prop_assert_eq!(associated_graded(&g, &l).unwrap(), g);
    }

    #[test]
    fn jh_cone_interior_gives_polystable(x in point()) {
        let v = classify_stability(&x);
        match jordan_holder_cone(&x) {
            Err(_) => prop_assert!(!v.is_semistable()),
            Ok(JhCone::Empty) => prop_assert!(v.is_polystable()),
            Ok(JhCone::Cone { generators, .. }) => {
                prop_assert!(!v.is_polystable());
                let mut sum = Weight::zero(x.rank());
                for g in &generators {
                    sum = &sum + g;
                }
                let g = associated_graded(&x, &sum).unwrap();
                prop_assert!(classify_stability(&g).is_polystable());
            }
        }
    }

    #[test]
    fn types_contain_nearest_point(ws in (1usize..=2).prop_flat_map(|r| proptest::collection::vec(weight(r), 1..=5))) {
        let t = critical_types(&ws);
        prop_assert!(t.contains(&nearest_point(&ws)));
        let zero = Weight::zero(ws[0].rank());
        let zero_in_some_relint = (1u32..1 << ws.len()).any(|mask| {
            let s: Vec<Weight> = (0..ws.len()).filter(|i| mask >> i & 1 == 1).map(|i| ws[i].clone()).collect();
            hull(&s).unwrap().relint_contains(&zero)
        });
        prop_assert_eq!(t.contains(&zero), zero_in_some_relint);
    }
}
