//! The G covariant, the Julia quadratic of a totally real form, and the
//! zero map into the upper half plane.

use num_complex::Complex64;
use serde::Serialize;

use super::form::BinaryForm;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Realness slack for coefficients and for the roots of totally real forms.
pub const REAL_TOL: f64 = 1e-9;

/// `[x·f_x(-f_y, f_x) + y·f_y(-f_y, f_x)] / (n·f)`, by exact division.
/// The quotient has degree `(n-1)(n-2)`.
pub fn g_covariant<S: Scalar>(f: &BinaryForm<S>) -> Result<BinaryForm<S>> {
    let n = f.degree();
    if n < 3 {
        return Err(Error::DegreeTooLow(n));
    }
    if !f.is_real(REAL_TOL) {
        return Err(Error::NonRealCoefficients);
    }
    let fx = f.d_x();
    let fy = f.d_y();
    let minus_fy = fy.scale(&-S::one());
    let numerator = fx
        .substitute(&minus_fy, &fx)
        .times_x()
        .add(&fy.substitute(&minus_fy, &fx).times_y());
    let denominator = f.scale(&S::from_i64(n as i64));
    numerator.div_exact(&denominator)
}

/// The positive definite quadratic `x² - 2Re(ξ)xy + |ξ|²y²` through the
/// unique conjugate pair `ξ, conj(ξ)` of non-real roots of `G_f`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JuliaQuadratic {
    /// Coefficients of `y², xy, x²`.
    pub coeffs: [f64; 3],
    pub xi: Complex64,
}

impl JuliaQuadratic {
    pub fn form(&self) -> BinaryForm<Complex64> {
        BinaryForm::new(self.coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
            .expect("three coefficients")
    }
}

pub fn julia_quadratic<S: Scalar>(f: &BinaryForm<S>) -> Result<JuliaQuadratic> {
    let g = g_covariant(f)?;
    if !f.is_totally_real(1e-7)? {
        return Err(Error::HypothesisFailed("form is not totally real".into()));
    }
    let (finite, _) = g.roots()?;
    let upper: Vec<Complex64> = finite
        .iter()
        .copied()
        .filter(|z| z.im > 1e-7 * z.norm().max(1.0))
        .collect();
    let lower = finite
        .iter()
        .filter(|z| z.im < -1e-7 * z.norm().max(1.0))
        .count();
    if upper.len() != 1 || lower != 1 {
        return Err(Error::NoUniqueQuadratic {
            pairs: upper.len().max(lower),
        });
    }
    let xi = upper[0];
    let coeffs = [xi.norm_sqr(), -2.0 * xi.re, 1.0];
    Ok(JuliaQuadratic { coeffs, xi })
}

/// Root in the upper half plane of a positive definite quadratic.
pub fn quadratic_zero<S: Scalar>(q: &BinaryForm<S>) -> Result<Complex64> {
    if q.degree() != 2 || !q.is_real(REAL_TOL) {
        return Err(Error::NotPositiveDefinite);
    }
    let c = q.coeffs();
    let (c0, c1, c2) = (c[0].to_c64().re, c[1].to_c64().re, c[2].to_c64().re);
    let disc = c1 * c1 - 4.0 * c2 * c0;
    if c2 <= 0.0 || disc >= 0.0 {
        return Err(Error::NotPositiveDefinite);
    }
    Ok(Complex64::new(-c1 / (2.0 * c2), (-disc).sqrt() / (2.0 * c2)))
}

/// `ξ(f)` for a positive definite quadratic, `ε(f)` (the zero of the Julia
/// quadratic) for a totally real form of degree at least 3.
pub fn zero_map<S: Scalar>(f: &BinaryForm<S>) -> Result<Complex64> {
    if f.degree() == 2 {
        quadratic_zero(f)
    } else {
        Ok(julia_quadratic(f)?.xi)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SigmaReport {
    /// Degree of `G_f`.
    pub degree: usize,
    /// `g_i = (-1)^(n-1) g_(d-i)` for every `i`.
    pub relation_holds: bool,
    pub palindromic: bool,
    pub antipalindromic: bool,
    /// `|g_i| = |g_(d-i)|` within a relative `1e-8`.
    pub moduli_mirror: bool,
    pub self_inversive: bool,
}

/// Check the coefficient symmetry of `G_f` for a palindromic form `f`.
pub fn sigma_involution_check<S: Scalar>(f: &BinaryForm<S>) -> Result<(BinaryForm<S>, SigmaReport)> {
    let a = f.coeffs();
    let n = f.degree();
    if !(0..=n).all(|i| a[i] == a[n - i]) {
        return Err(Error::NotPalindromic);
    }
    let g = g_covariant(f)?;
    let c = g.coeffs();
    let d = g.degree();
    let scale = g.max_abs();
    let sign = if (n - 1) % 2 == 0 { S::one() } else { -S::one() };
    let mirror = |s: &S| (0..=d).all(|i| c[i].approx_eq(&(s.clone() * c[d - i].clone()), 1e-12, scale));
    let relation_holds = mirror(&sign);
    let palindromic = mirror(&S::one());
    let antipalindromic = mirror(&-S::one());
    let moduli_mirror = (0..=d).all(|i| (c[i].abs_f64() - c[d - i].abs_f64()).abs() <= 1e-8 * scale.max(f64::MIN_POSITIVE));
    let report = SigmaReport {
        degree: d,
        relation_holds,
        palindromic,
        antipalindromic,
        moduli_mirror,
        self_inversive: palindromic || antipalindromic,
    };
    Ok((g, report))
}
