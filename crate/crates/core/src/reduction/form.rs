use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rootloc::{roots, DEFAULT_SOLVER_TOL};
use crate::scalar::Scalar;

/// Homogeneous form `Σ a_i x^i y^(n-i)` of fixed degree `n`; index `i`
/// holds the coefficient of `x^i`. Trailing entries may vanish, which
/// places roots at infinity.
#[derive(Clone, PartialEq)]
pub struct BinaryForm<S: Scalar> {
    coeffs: Vec<S>,
}

impl<S: Scalar> BinaryForm<S> {
    /// Form of degree `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<S>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::BadParameters("a binary form needs at least one coefficient".into()));
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        BinaryForm::new(coeffs.iter().map(|&c| S::from_i64(c)).collect())
    }

    /// `y^n p(x/y)`; requires `n ≥ deg p`.
    pub fn homogenize(p: &Poly<S>, n: usize) -> Result<Self> {
        let d = p.degree().unwrap_or(0);
        if d > n {
            return Err(Error::DegreeMismatch(format!("deg p = {d} exceeds form degree {n}")));
        }
        Ok(BinaryForm {
            coeffs: (0..=n).map(|i| p.coeff(i)).collect(),
        })
    }

    pub fn dehomogenize(&self) -> Poly<S> {
        Poly::new(self.coeffs.clone())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        BinaryForm {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(Scalar::abs_f64).fold(0.0, f64::max)
    }

    pub fn to_float(&self) -> BinaryForm<Complex64> {
        BinaryForm {
            coeffs: self.coeffs.iter().map(Scalar::to_c64).collect(),
        }
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.is_real(tol))
    }

    /// Divide by the first nonzero coefficient.
    pub fn normalize_phase(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(c) => {
                let inv = S::one() / c.clone();
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// Finite roots of the dehomogenization and the multiplicity of the
    /// root at infinity.
    pub fn roots(&self) -> Result<(Vec<Complex64>, usize)> {
        let p = self.dehomogenize();
        let d = p.degree().ok_or(Error::ZeroPolynomial)?;
        let finite = if d == 0 {
            Vec::new()
        } else {
            roots(&p, DEFAULT_SOLVER_TOL)?.flat()
        };
        Ok((finite, self.degree() - d))
    }

    /// Whether every root is real (infinity counts as real) within
    /// `|Im z| ≤ tol · max(1, |z|)`.
    pub fn is_totally_real(&self, tol: f64) -> Result<bool> {
        let (finite, _) = self.roots()?;
        Ok(finite.iter().all(|z| z.im.abs() <= tol * z.norm().max(1.0)))
    }

    /// Product of forms; degrees add.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        BinaryForm { coeffs: out }
    }

    /// Sum of two forms of equal degree.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "forms of different degree");
        BinaryForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    /// Multiply by `x`.
    pub fn times_x(&self) -> Self {
        let mut coeffs = vec![S::zero()];
        coeffs.extend(self.coeffs.iter().cloned());
        BinaryForm { coeffs }
    }

    /// Multiply by `y`.
    pub fn times_y(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.push(S::zero());
        BinaryForm { coeffs }
    }

    /// `∂f/∂x`, a form of degree `n - 1` (`n ≥ 1`).
    pub fn d_x(&self) -> Self {
        BinaryForm {
            coeffs: (1..self.coeffs.len())
                .map(|i| self.coeffs[i].clone() * S::from_i64(i as i64))
                .collect(),
        }
    }

    /// `∂f/∂y`, a form of degree `n - 1` (`n ≥ 1`).
    pub fn d_y(&self) -> Self {
        let n = self.degree();
        BinaryForm {
            coeffs: (0..n)
                .map(|i| self.coeffs[i].clone() * S::from_i64((n - i) as i64))
                .collect(),
        }
    }

    /// `f(X, Y)` for forms `X`, `Y` of a common degree.
    pub fn substitute(&self, x: &Self, y: &Self) -> Self {
        let n = self.degree();
        let k = x.degree();
        let mut xp = vec![BinaryForm::constant(S::one())];
        let mut yp = vec![BinaryForm::constant(S::one())];
        for _ in 0..n {
            xp.push(xp.last().unwrap().mul(x));
            yp.push(yp.last().unwrap().mul(y));
        }
        let mut out = BinaryForm {
            coeffs: vec![S::zero(); n * k + 1],
        };
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            out = out.add(&xp[i].mul(&yp[n - i]).scale(a));
        }
        out
    }

    pub fn constant(c: S) -> Self {
        BinaryForm { coeffs: vec![c] }
    }

    /// Exact quotient by `d`; fails unless the remainder vanishes.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionNotExact);
        }
        let qdeg = self
            .degree()
            .checked_sub(d.degree())
            .ok_or(Error::DivisionNotExact)?;
        let (q, r) = self.dehomogenize().div_rem(&d.dehomogenize());
        if !r.is_zero() || q.degree().is_some_and(|e| e > qdeg) {
            return Err(Error::DivisionNotExact);
        }
        BinaryForm::homogenize(&q, qdeg)
    }
}

impl<S: Scalar> fmt::Debug for BinaryForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}
