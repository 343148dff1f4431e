mod common;

use common::*;
use num_complex::Complex64;
use num_rational::BigRational;
use palinform::codes::{
    extremal_enumerator, functional_equation_residual, macwilliams_surd, mds_enumerator, mds_expand, self_reciprocal_check,
    zeta_polynomial, Surd, TypeTag, WeightEnumerator,
};
use palinform::scalar::{int, rat};
use palinform::{Gaussian, Poly, Scalar};
use proptest::prelude::*;
use rand::Rng;

/// Brute-force weight distribution of the code spanned by `rows` over 𝔽_2.
fn binary_code_weights(rows: &[u32], n: usize) -> Vec<i64> {
    let mut a = vec![0i64; n + 1];
    for mask in 0u32..(1 << rows.len()) {
        let word = rows.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0u32, |w, (_, r)| w ^ r);
        a[word.count_ones() as usize] += 1;
    }
    a
}

#[test]
fn mds_matches_brute_force() {
    for n in 2..=6 {
        // repetition code [n, 1, n] and the full space [n, n, 1]
        let rep = binary_code_weights(&[(1 << n) - 1], n);
        assert_eq!(mds_enumerator(n, n, 2).unwrap(), WeightEnumerator::from_i64(2, &rep).unwrap());
        let full: Vec<u32> = (0..n).map(|i| 1 << i).collect();
        assert_eq!(mds_enumerator(n, 1, 2).unwrap(), WeightEnumerator::from_i64(2, &binary_code_weights(&full, n)).unwrap());
    }
    // the [8, 4, 4] extended Hamming code
    let h = [0b1111_0000u32, 0b1100_1100, 0b1010_1010, 0b1111_1111];
    assert_eq!(binary_code_weights(&h, 8), vec![1, 0, 0, 0, 14, 0, 0, 0, 1]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn mds_expand_recovers_coordinates(n in 2usize..=12, q in prop::sample::select(vec![2u64, 3, 4, 5, 7]), seed in 0u64..1000) {
        let mut r = rng(seed);
        let d = r.gen_range(1..=n);
        let mut coords: Vec<BigRational> = (d..=n + 1).map(|_| rat(r.gen_range(-20..=20), r.gen_range(1..=9))).collect();
        coords[0] = int(1) + rat(r.gen_range(1..=20), 7);
        let mut a = vec![int(0); n + 1];
        for (c, i) in coords.iter().zip(d..=n + 1) {
            for (w, v) in mds_enumerator(n, i, q).unwrap().a.iter().enumerate() {
                a[w] += c * v;
            }
        }
        let f = WeightEnumerator::new(q, a).unwrap();
        prop_assert_eq!(mds_expand(&f).unwrap().coords, coords);
    }

    #[test]
    fn macwilliams_is_an_involution(a in prop::collection::vec(-9i64..=9, 1..=10), q in prop::sample::select(vec![2u64, 3, 4, 5])) {
        let n = a.len() - 1;
        let s: Vec<Surd> = a.iter().map(|&v| Surd::rational(int(v), q)).collect();
        prop_assert_eq!(macwilliams_surd(n, q, &macwilliams_surd(n, q, &s)), s);
    }

    #[test]
    fn zeta_satisfies_series_identity(n in 3usize..=9, q in prop::sample::select(vec![2u64, 3, 4]), seed in 0u64..1000) {
        let mut r = rng(seed);
        let d = r.gen_range(1..=n - 1);
        let mut a = vec![int(0); n + 1];
        a[0] = int(1);
        a[d] = rat(r.gen_range(1..=30), r.gen_range(1..=5));
        for w in d + 1..=n {
            a[w] = rat(r.gen_range(-30..=30), r.gen_range(1..=5));
        }
        let f = WeightEnumerator::new(q, a).unwrap();
        let p = zeta_polynomial(&f).unwrap();
        prop_assert!(p.degree() <= n - d);
        prop_assert!(p.expansion_agrees);
        prop_assert!(zeta_identity_holds(&f.a, q, &p.a));
    }

    /// Random members of the Type II invariant ring are self-dual, so their
    /// normalized zeta polynomials are palindromic and satisfy the
    /// functional equation.
    #[test]
    fn self_dual_ring_members(c1 in -40i64..=40, seed in 0u64..1000) {
        let g1 = Poly::<Gaussian>::from_i64(&[1, 0, 0, 0, 14, 0, 0, 0, 1]);
        let mut g2c = vec![0i64; 21];
        for (k, v) in [(4, 1), (8, -4), (12, 6), (16, -4), (20, 1)] {
            g2c[k] = v;
        }
        let g2 = Poly::<Gaussian>::from_i64(&g2c);
        let w = &g1.pow(3) + &g2.scale(&Gaussian::from_i64(c1));
        let a: Vec<BigRational> = (0..=24).map(|i| w.coeff(i).re).collect();
        let f = WeightEnumerator::new(2, a).unwrap();
        prop_assume!(f.min_distance() <= 12);
        let (p, sr) = self_reciprocal_check(&f).unwrap();
        prop_assert!(sr.palindromic);
        let mut r = rng(seed);
        let pts: Vec<Complex64> = (0..20)
            .map(|_| Complex64::from_polar(r.gen_range(0.3..1.5), r.gen_range(0.0..std::f64::consts::TAU)))
            .collect();
        prop_assert!(functional_equation_residual(&p, &pts).unwrap() < 1e-10);
    }
}

#[test]
fn extremal_agrees_with_null_space_oracle() {
    for (tag, n, d, ad) in [(TypeTag::II, 8, 4, 14), (TypeTag::II, 24, 8, 759), (TypeTag::IV, 6, 4, 45), (TypeTag::III, 12, 6, 264)] {
        let e = extremal_enumerator(tag, n).unwrap();
        let oracle = extremal_oracle(tag.q(), tag.b(), n, d).unwrap();
        assert_eq!(e.enumerator.a, oracle);
        assert_eq!(oracle[d], int(ad));
    }
}
