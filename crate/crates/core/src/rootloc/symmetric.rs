//! Self-reciprocal real polynomials built from quadratic factors
//! `1 - αz + z²`, and the symmetric-increasing coefficient condition.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

/// `scale · Π (1 - α_k z + z²)`, exactly in exact mode.
pub fn product_chain<S: Scalar>(alphas: &[S], scale: S) -> Poly<S> {
    alphas.iter().fold(Poly::constant(scale), |acc, a| {
        &acc * &Poly::new(vec![S::one(), -a.clone(), S::one()])
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetricIncreasingReport {
    pub holds: bool,
    /// The first failing index pair: `(i, i+1)` for monotonicity (`(0, 0)`
    /// when `a_0 ≤ 0`), `(n-i, n+i)` for symmetry.
    pub first_violation: Option<(usize, usize)>,
    pub symmetry_ok: bool,
    pub monotone_ok: bool,
}

fn require_real<S: Scalar>(p: &Poly<S>, tol: f64) -> Result<()> {
    if p.coeffs().iter().all(|c| c.is_real(tol)) {
        Ok(())
    } else {
        Err(Error::NonRealCoefficients)
    }
}

/// `0 < a_0 ≤ a_1 ≤ … ≤ a_n` and `a_{n-i} = a_{n+i}` for a polynomial of
/// degree `2n`. Exact in exact mode; `tol` is the float comparison slack.
pub fn symmetric_increasing<S: Scalar>(p: &Poly<S>, tol: f64) -> Result<SymmetricIncreasingReport> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    if deg % 2 == 1 {
        return Err(Error::OddDegree(deg));
    }
    require_real(p, tol)?;
    let a = p.coeffs();
    let n = deg / 2;
    let scale = p.max_abs();

    let monotone_violation = if a[0].re_cmp(&S::zero(), tol * scale) != Ordering::Greater {
        Some((0, 0))
    } else {
        (0..n)
            .find(|&i| a[i].re_cmp(&a[i + 1], tol * scale) == Ordering::Greater)
            .map(|i| (i, i + 1))
    };
    let symmetry_violation = (1..=n)
        .find(|&i| !a[n - i].approx_eq(&a[n + i], tol, scale))
        .map(|i| (n - i, n + i));

    let monotone_ok = monotone_violation.is_none();
    let symmetry_ok = symmetry_violation.is_none();
    Ok(SymmetricIncreasingReport {
        holds: monotone_ok && symmetry_ok,
        first_violation: monotone_violation.or(symmetry_violation),
        symmetry_ok,
        monotone_ok,
    })
}

fn padded<S: Scalar>(a: &[S], i: isize) -> S {
    if i < 0 {
        S::zero()
    } else {
        a.get(i as usize).cloned().unwrap_or_else(S::zero)
    }
}

/// `(a_i, a_{i+1}, a_{i+2}, a_{i+3}) · (1, -1-α, 1+α, -1) ≤ 0` for every
/// window `i = -2, …, d-2` (zero padded). Each window is the step
/// `b_{i+2} ≤ b_{i+3}` of `b = p·(1 - αz + z²)`, so the condition holds
/// exactly when the product is symmetric increasing.
pub fn symm_incr_step_condition<S: Scalar>(p: &Poly<S>, alpha: &S, tol: f64) -> Result<bool> {
    let report = symmetric_increasing(p, tol)?;
    if !report.holds {
        return Err(Error::HypothesisFailed("p must be symmetric increasing".into()));
    }
    if !alpha.is_real(tol) {
        return Err(Error::NonRealCoefficients);
    }
    let two = S::from_i64(2);
    if alpha.re_cmp(&(-two.clone()), 0.0) == Ordering::Less || alpha.re_cmp(&two, 0.0) == Ordering::Greater {
        return Err(Error::BadParameters("alpha must lie in [-2, 2]".into()));
    }
    let a = p.coeffs();
    let d = (a.len() - 1) as isize / 2;
    let one_plus = S::one() + alpha.clone();
    let scale = p.max_abs();
    Ok((-2..=d - 2).all(|i| {
        let dot = padded(a, i) - one_plus.clone() * padded(a, i + 1)
            + one_plus.clone() * padded(a, i + 2)
            - padded(a, i + 3);
        dot.re_cmp(&S::zero(), tol * scale) != Ordering::Greater
    }))
}

/// With `a_i = a`, `a_{i+1} = a+ε_1`, `a_{i+2} = a+ε_2`, `a_{i+3} = a+ε_3`,
/// tests `ε_2 ≤ (ε_1+ε_3)/2` for each full window `i`.
pub fn epsilon_condition<S: Scalar>(p: &Poly<S>, tol: f64) -> Vec<bool> {
    let a = p.coeffs();
    let scale = p.max_abs();
    (0..a.len().saturating_sub(3))
        .map(|i| {
            let lhs = S::from_i64(2) * a[i + 2].clone();
            let rhs = a[i + 1].clone() + a[i + 3].clone();
            lhs.re_cmp(&rhs, tol * scale) != Ordering::Greater
        })
        .collect()
}
