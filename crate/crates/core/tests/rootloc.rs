mod common;

use common::*;
use palinform::rootloc::{
    circle_report, cohn_test, lakatos_losonczi, product_chain, roots, symm_incr_step_condition, symmetric_increasing,
    LlRange, DEFAULT_SOLVER_TOL,
};
use palinform::scalar::{int, rat};
use palinform::{Gaussian, Poly, Scalar};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn recovers_constructed_roots(pts in prop::collection::vec((-20i64..=20, -20i64..=20), 1..=10)) {
        let mut pts = pts;
        pts.sort();
        pts.dedup();
        let zs: Vec<Gaussian> = pts.iter().map(|&(a, b)| g(rat(a, 4), rat(b, 4))).collect();
        let p = Poly::from_roots(&zs);
        let found = roots(&p, DEFAULT_SOLVER_TOL).unwrap().flat();
        prop_assert_eq!(found.len(), zs.len());
        for z in &zs {
            let z = z.to_c64();
            prop_assert!(found.iter().any(|w| (w - z).norm() < 1e-7 * z.norm().max(1.0)), "{} missing", z);
        }
    }

    #[test]
    fn cohn_matches_root_location(ts in prop::collection::vec(-60i64..=60, 2..=8), off in prop::option::of(5i64..=60)) {
        let mut ts = ts;
        ts.sort();
        ts.dedup();
        prop_assume!(ts.len() >= 2);
        let mut roots: Vec<Gaussian> = ts.iter().map(|&t| circle_point(&rat(t, 20))).collect();
        if let Some(k) = off {
            let u = roots.pop().unwrap();
            roots.pop();
            let out = u * Gaussian::real(int(1) + rat(k, 100));
            roots.push(mirror(&out));
            roots.push(out);
        }
        let p = Poly::from_roots(&roots);
        let cohn = cohn_test(&p, 1e-7).unwrap();
        prop_assert_eq!(cohn, off.is_none());
        prop_assert_eq!(cohn, circle_report(&p, 1e-7).unwrap().all_on_circle());
    }

    /// The step condition on `p` is exactly symmetric-increasingness of
    /// `p·(1 - αz + z²)`.
    #[test]
    fn step_condition_matches_product(base in prop::collection::vec(-200i64..=200, 1..=4), alpha in -200i64..=200) {
        let alphas: Vec<Gaussian> = base.iter().map(|&a| Gaussian::real(rat(a, 100))).collect();
        let p = product_chain(&alphas, Gaussian::one());
        prop_assume!(symmetric_increasing(&p, 0.0).unwrap().holds);
        let a = Gaussian::real(rat(alpha, 100));
        let step = symm_incr_step_condition(&p, &a, 0.0).unwrap();
        let q = &p * &Poly::new(vec![Gaussian::one(), -a, Gaussian::one()]);
        prop_assert_eq!(step, symmetric_increasing(&q, 0.0).unwrap().holds);
    }

    /// The Lakatos–Losonczi condition is sufficient for unimodular roots.
    #[test]
    fn lakatos_losonczi_sufficient(lead in 20i64..=60, rest in prop::collection::vec(-4i64..=4, 1..=4)) {
        let n = 2 * rest.len();
        let mut c = vec![Gaussian::zero(); n + 1];
        c[0] = Gaussian::from_i64(lead);
        c[n] = Gaussian::from_i64(lead);
        for (i, v) in rest.iter().enumerate() {
            c[i + 1] = Gaussian::from_i64(*v);
            c[n - i - 1] = Gaussian::from_i64(*v);
        }
        let p = Poly::new(c);
        if lakatos_losonczi(&p, LlRange::ExcludeLeading, 0.0).unwrap() {
            prop_assert!(circle_report(&p, 1e-7).unwrap().all_on_circle());
        }
    }
}
