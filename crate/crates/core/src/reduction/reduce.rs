//! Reduction into the fundamental domain of the modular group.

use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use super::covariant::{julia_quadratic, quadratic_zero};
use super::form::BinaryForm;
use super::moebius::{act, Moebius};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Boundary slack for region tests.
pub const REGION_EPS: f64 = 1e-12;

/// Residual above which a reduction step is reported as broken.
pub const EQUIVARIANCE_LIMIT: f64 = 1e-6;

/// `|z|² ≥ 1` and `|Re z| ≤ 1/2`, with closed boundaries widened by `eps`.
pub fn in_fundamental_domain(z: Complex64, eps: f64) -> bool {
    z.im > 0.0 && z.norm_sqr() >= 1.0 - eps && z.re.abs() <= 0.5 + eps
}

/// `a² - 2a + b² ≥ 0` and `a² + 2a + b² ≥ 0` for `z = a + bi`.
pub fn region_t_membership(z: Complex64, eps: f64) -> bool {
    let (a, b) = (z.re, z.im);
    a * a - 2.0 * a + b * b >= -eps && a * a + 2.0 * a + b * b >= -eps
}

/// One move of the point walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// `z ↦ -1/z`.
    S,
    /// `z ↦ z + k`.
    T(i64),
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::S => write!(f, "S"),
            Step::T(1) => write!(f, "T"),
            Step::T(k) => write!(f, "T^{k}"),
        }
    }
}

impl Serialize for Step {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn trace_string(trace: &[Step]) -> String {
    trace.iter().map(Step::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone)]
pub struct Reduction<S: Scalar> {
    pub form: BinaryForm<S>,
    /// Integral matrix with `form = act(f, matrix)`.
    pub matrix: Moebius<S>,
    pub trace: Vec<Step>,
    pub xi_before: Complex64,
    pub xi_after: Complex64,
    /// `|ξ(f^M) - M⁻¹·ξ(f)|` after each step, relative to `max(1, |ξ|)`.
    pub residuals: Vec<f64>,
    pub norm_before: f64,
    pub norm_after: f64,
}

/// Walk `ξ(f)` into the fundamental domain with `T^k` and `S` moves and
/// transform `f` accordingly.
///
/// Ties on the boundary go to `Re z = -1/2` and to the left half of the
/// arc `|z| = 1`.
pub fn reduce<S: Scalar>(f: &BinaryForm<S>) -> Result<Reduction<S>> {
    let julia = if f.degree() == 2 {
        quadratic_zero(f)?;
        f.to_float()
    } else {
        julia_quadratic(f)?.form()
    };
    let xi_before = quadratic_zero(&julia)?;
    let cap = (10.0 * (1.0 + xi_before.im.ln().abs())).ceil() as usize;

    let mut z = xi_before;
    let mut matrix = Moebius::<S>::identity();
    let mut trace = Vec::new();
    let mut residuals = Vec::new();
    loop {
        let shift = -(z.re + 0.5 + REGION_EPS).floor();
        let inside_arc = z.norm_sqr() < 1.0 - REGION_EPS;
        let right_arc = z.norm_sqr() <= 1.0 + REGION_EPS && z.re > REGION_EPS;
        let step = if shift != 0.0 {
            Step::T(shift as i64)
        } else if inside_arc || right_arc {
            Step::S
        } else {
            break;
        };
        if trace.len() >= cap {
            return Err(Error::MaxIterations(cap));
        }
        let (point, inverse) = match step {
            Step::S => (Moebius::<S>::s(), Moebius::<S>::s().inverse()?),
            Step::T(k) => (Moebius::<S>::t(k), Moebius::<S>::t(-k)),
        };
        z = point.apply_point(z);
        matrix = matrix.mul(&inverse);
        trace.push(step);

        let moved = act(&julia, &matrix.to_float())?;
        let xi = quadratic_zero(&moved)?;
        let residual = (xi - z).norm() / z.norm().max(1.0);
        residuals.push(residual);
        if residual > EQUIVARIANCE_LIMIT {
            return Err(Error::EquivarianceBroken {
                step: trace.len(),
                residual,
            });
        }
    }
    let form = act(f, &matrix)?;
    Ok(Reduction {
        norm_before: f.max_abs(),
        norm_after: form.max_abs(),
        form,
        matrix,
        trace,
        xi_before,
        xi_after: z,
        residuals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Gaussian;

    fn form(c: &[i64]) -> BinaryForm<Gaussian> {
        BinaryForm::from_i64(c).unwrap()
    }

    #[test]
    fn fundamental_domain_examples() {
        assert!(in_fundamental_domain(Complex64::i(), REGION_EPS));
        assert!(!in_fundamental_domain(Complex64::new(0.0, 0.6), REGION_EPS));
        assert!(!in_fundamental_domain(Complex64::new(0.7, 2.0), REGION_EPS));
    }

    #[test]
    fn region_t_examples() {
        assert!(region_t_membership(Complex64::new(2.0, 0.0), REGION_EPS));
        assert!(!region_t_membership(Complex64::new(0.5, 0.0), REGION_EPS));
        assert!(region_t_membership(Complex64::new(0.3, 2.0), REGION_EPS));
    }

    #[test]
    fn cubic_needs_one_s() {
        let r = reduce(&form(&[0, -1, 0, 1])).unwrap();
        assert_eq!(trace_string(&r.trace), "S");
        assert!((r.xi_before - Complex64::new(0.0, 1.0 / 3f64.sqrt())).norm() < 1e-12);
        assert!((r.xi_after - Complex64::new(0.0, 3f64.sqrt())).norm() < 1e-12);
        assert!(r.residuals.iter().all(|&e| e < 1e-10));
    }

    #[test]
    fn translation_only() {
        // root 5 + 2i: (x - 5y)^2 + 4y^2 = x^2 - 10xy + 29y^2
        let r = reduce(&form(&[29, -10, 1])).unwrap();
        assert_eq!(trace_string(&r.trace), "T^-5");
        assert!((r.xi_after - Complex64::new(0.0, 2.0)).norm() < 1e-12);
        assert_eq!(r.form, form(&[4, 0, 1]));
    }

    #[test]
    fn already_reduced() {
        let r = reduce(&form(&[1, 0, 1])).unwrap();
        assert!(r.trace.is_empty());
        assert_eq!(r.matrix, Moebius::identity());
        assert_eq!(r.form, form(&[1, 0, 1]));
    }

    #[test]
    fn boundary_conventions() {
        // x^2 - xy + y^2 has ξ = 1/2 + i√3/2, moved to -1/2
        let r = reduce(&form(&[1, -1, 1])).unwrap();
        assert!((r.xi_after.re + 0.5).abs() < 1e-12);
        assert_eq!(r.form, form(&[1, 1, 1]));
        // 2x^2 - xy + 2y^2: ξ on the unit arc with Re > 0, reflected by S
        let r = reduce(&form(&[2, -1, 2])).unwrap();
        assert!(r.xi_after.re < 0.0);
        assert_eq!(r.form, form(&[2, 1, 2]));
    }
}
