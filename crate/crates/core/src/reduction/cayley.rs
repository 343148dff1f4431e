//! The Cayley correspondence between totally real forms and forms with all
//! roots on the unit circle, and reduction of unit-circle polynomials.

use num_complex::Complex64;
use serde::Serialize;

use super::covariant::zero_map;
use super::form::BinaryForm;
use super::moebius::{act, Moebius};
use super::reduce::{in_fundamental_domain, region_t_membership, REGION_EPS};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rootloc::cohn_test;
use crate::scalar::Scalar;

/// `M = [1 -i; 1 i]`; needs a field containing `i`.
pub fn cayley_matrix<S: Scalar>() -> Result<Moebius<S>> {
    let i = S::imag_unit().ok_or_else(|| Error::NotApplicable("coefficient field lacks i".into()))?;
    Ok(Moebius::new(S::one(), -i.clone(), S::one(), i))
}

/// Real roots `r` go to `(r - i)/(r + i)` on the unit circle and infinity
/// goes to `1`. Substitutes by `adj(M) = [i i; -1 1]`.
pub fn cayley_to_circle<S: Scalar>(f: &BinaryForm<S>) -> Result<BinaryForm<S>> {
    act(f, &cayley_matrix::<S>()?.adjugate())
}

/// Substitution by `M` itself: real roots land on the imaginary axis.
pub fn cayley_to_circle_literal<S: Scalar>(f: &BinaryForm<S>) -> Result<BinaryForm<S>> {
    act(f, &cayley_matrix::<S>()?)
}

/// Inverse of [`cayley_to_circle`] up to the scalar `(2i)^n`.
pub fn cayley_to_real<S: Scalar>(g: &BinaryForm<S>) -> Result<BinaryForm<S>> {
    act(g, &cayley_matrix::<S>()?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Region {
    #[serde(rename = "F")]
    Fundamental,
    #[serde(rename = "T")]
    T,
}

#[derive(Debug, Clone)]
pub struct CircleReduction<S: Scalar> {
    /// The totally real form `f_*` obtained from `p`, scaled to be real.
    pub real_form: BinaryForm<S>,
    pub epsilon: Complex64,
    pub region: Region,
    /// The returned form: `f_*`, or `f_*` with `x` and `y` swapped.
    pub form: BinaryForm<S>,
    pub swapped: bool,
    pub epsilon_after: Complex64,
    /// Whether `ε` of the returned form lies in the fundamental domain.
    pub lemma_certified: bool,
    /// The swap only permutes coefficients, so the coefficient multiset is
    /// unchanged; recorded as a check.
    pub multiset_invariant: bool,
    pub norm_before: f64,
    pub norm_after: f64,
}

/// Carry a self-inversive `p` with unimodular roots to a totally real form
/// and test its zero against the fundamental domain and the region `𝒯`.
/// In `𝒯` the form is transformed by `[0 1; 1 0]` and re-tested.
pub fn reduce_from_circle<S: Scalar>(p: &Poly<S>, tol: f64) -> Result<CircleReduction<S>> {
    let unimodular = match cohn_test(p, tol) {
        Ok(b) => b,
        Err(Error::NotSelfInversive) => false,
        Err(e) => return Err(e),
    };
    if !unimodular {
        return Err(Error::HypothesisFailed(
            "p must be self-inversive with all roots on the unit circle".into(),
        ));
    }
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    let g = BinaryForm::homogenize(p, n)?;
    let real_form = cayley_to_real(&g)?.normalize_phase();
    if !real_form.is_real(1e-9) {
        return Err(Error::NonRealCoefficients);
    }
    let epsilon = zero_map(&real_form)?;
    let region = if in_fundamental_domain(epsilon, REGION_EPS) {
        Region::Fundamental
    } else if region_t_membership(epsilon, REGION_EPS) {
        Region::T
    } else {
        return Err(Error::NotInRegion {
            re: epsilon.re,
            im: epsilon.im,
        });
    };
    let (form, swapped) = match region {
        Region::Fundamental => (real_form.clone(), false),
        Region::T => (act(&real_form, &Moebius::from_i64(0, 1, 1, 0))?, true),
    };
    let epsilon_after = if swapped { zero_map(&form)? } else { epsilon };
    let mut before: Vec<f64> = real_form.coeffs().iter().map(Scalar::abs_f64).collect();
    let mut after: Vec<f64> = form.coeffs().iter().map(Scalar::abs_f64).collect();
    before.sort_by(f64::total_cmp);
    after.sort_by(f64::total_cmp);
    Ok(CircleReduction {
        norm_before: real_form.max_abs(),
        norm_after: form.max_abs(),
        multiset_invariant: before == after,
        lemma_certified: in_fundamental_domain(epsilon_after, REGION_EPS),
        real_form,
        epsilon,
        region,
        form,
        swapped,
        epsilon_after,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Gaussian};

    fn form(c: &[i64]) -> BinaryForm<Gaussian> {
        BinaryForm::from_i64(c).unwrap()
    }

    fn sorted_roots(f: &BinaryForm<Gaussian>) -> Vec<Complex64> {
        let (mut r, _) = f.roots().unwrap();
        r.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        r
    }

    #[test]
    fn plus_minus_one_go_to_minus_plus_i() {
        let g = cayley_to_circle(&form(&[-1, 0, 1])).unwrap();
        let r = sorted_roots(&g);
        assert!((r[0] + Complex64::i()).norm() < 1e-12 && (r[1] - Complex64::i()).norm() < 1e-12);
    }

    #[test]
    fn zero_and_one() {
        // roots {0, 1}: x^2 - xy
        let g = cayley_to_circle(&form(&[0, -1, 1])).unwrap();
        let r = sorted_roots(&g);
        assert!((r[0] + 1.0).norm() < 1e-12);
        assert!((r[1] + Complex64::i()).norm() < 1e-12);
    }

    #[test]
    fn round_trip_scalar() {
        let f = form(&[6, -5, 1]);
        let back = cayley_to_real(&cayley_to_circle(&f).unwrap()).unwrap();
        let two_i = Gaussian::new(int(0), int(2));
        assert_eq!(back, f.scale(&(two_i.clone() * two_i)));
    }

    #[test]
    fn infinity_goes_to_one() {
        // y (x - 2y): roots 2 and infinity
        let g = cayley_to_circle(&form(&[-2, 1, 0])).unwrap();
        let (r, inf) = g.roots().unwrap();
        assert_eq!(inf, 0);
        assert!(r.iter().any(|z| (z - 1.0).norm() < 1e-12));
    }

    #[test]
    fn literal_direction_lands_on_imaginary_axis() {
        let g = cayley_to_circle_literal(&form(&[-4, 0, 1])).unwrap();
        let (r, _) = g.roots().unwrap();
        assert!(r.iter().all(|z| z.re.abs() < 1e-12));
    }

    #[test]
    fn reduce_from_circle_regions() {
        // z^3 + 1 has roots -1, e^{±iπ/3}
        let r = reduce_from_circle(&Poly::<Gaussian>::from_i64(&[1, 0, 0, 1]), 1e-9).unwrap();
        assert!(r.real_form.is_real(0.0));
        assert!(r.multiset_invariant);
        assert_eq!(r.lemma_certified, in_fundamental_domain(r.epsilon_after, REGION_EPS));
        assert!(matches!(
            reduce_from_circle(&Poly::<Gaussian>::from_i64(&[1, 5, 1]), 1e-9),
            Err(Error::HypothesisFailed(_))
        ));
    }
}
