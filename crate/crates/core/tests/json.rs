mod common;

use common::*;
use num_complex::Complex64;
use palinform::codes::WeightEnumerator;
use palinform::json::{enumerator_from_json, enumerator_to_json, form_from_json, form_to_json, poly_from_json, poly_to_json, SCHEMA};
use palinform::reduction::BinaryForm;
use palinform::scalar::rat;
use palinform::{Eisenstein, Gaussian, Poly};
use proptest::prelude::*;

proptest! {
    #[test]
    fn exact_poly(c in prop::collection::vec((-999i64..=999, 1i64..=99, -999i64..=999, 1i64..=99), 1..=8)) {
        let p = Poly::new(c.iter().map(|&(a, b, x, y)| g(rat(a, b), rat(x, y))).collect::<Vec<Gaussian>>());
        let v = poly_to_json(&p);
        prop_assert_eq!(v["schema"].as_str(), Some(SCHEMA));
        let text = serde_json::to_string(&v).unwrap();
        prop_assert_eq!(poly_from_json::<Gaussian>(&serde_json::from_str(&text).unwrap()).unwrap(), p);
    }

    #[test]
    fn eisenstein_poly(c in prop::collection::vec((-99i64..=99, -99i64..=99), 1..=6)) {
        let p = Poly::new(c.iter().map(|&(a, b)| Eisenstein::new(rat(a, 3), rat(b, 7))).collect::<Vec<_>>());
        prop_assert_eq!(poly_from_json::<Eisenstein>(&poly_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn float_poly(c in prop::collection::vec((-1e6f64..1e6, -1e6f64..1e6), 1..=8)) {
        let p = Poly::new(c.iter().map(|&(a, b)| Complex64::new(a, b)).collect::<Vec<_>>());
        let text = serde_json::to_string(&poly_to_json(&p)).unwrap();
        prop_assert_eq!(poly_from_json::<Complex64>(&serde_json::from_str(&text).unwrap()).unwrap(), p);
    }

    #[test]
    fn binary_form(c in prop::collection::vec(-99i64..=99, 2..=7)) {
        prop_assume!(c.iter().any(|&x| x != 0));
        let f = BinaryForm::<Gaussian>::from_i64(&c).unwrap();
        prop_assert_eq!(form_from_json::<Gaussian>(&form_to_json(&f)).unwrap(), f);
    }

    #[test]
    fn enumerator(a in prop::collection::vec((-999i64..=999, 1i64..=50), 1..=12), q in 2u64..=9) {
        let f = WeightEnumerator::new(q, a.iter().map(|&(n, d)| rat(n, d)).collect()).unwrap();
        prop_assert_eq!(enumerator_from_json(&enumerator_to_json(&f)).unwrap(), f);
    }
}
