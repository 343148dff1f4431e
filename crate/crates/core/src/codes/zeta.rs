//! Zeta polynomials of weight enumerators.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::enumerator::{big, choose, is_virtually_self_dual, mds_expand, ser_rationals, WeightEnumerator};
use super::linalg::solve;
use super::surd::Surd;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rootloc::{roots, DEFAULT_SOLVER_TOL};
use crate::scalar::{rational_to_f64, Gaussian, Scalar};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZetaPolynomial {
    pub n: usize,
    pub q: u64,
    pub d: usize,
    /// `a_0, …, a_r` with trailing zeros removed; at least one entry.
    #[serde(rename = "P", serialize_with = "ser_rationals")]
    pub a: Vec<BigRational>,
    /// Coordinate of `M_{n,n+1}` in the MDS expansion, the would-be
    /// `a_{n-d+1}`.
    #[serde(serialize_with = "ser_rational")]
    pub top_coordinate: BigRational,
    /// The MDS coordinates of `M_{n,d}, …, M_{n,n}` equal `a`.
    pub expansion_agrees: bool,
}

fn ser_rational<S: serde::Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&crate::scalar::format_rational(v))
}

impl ZetaPolynomial {
    pub fn degree(&self) -> usize {
        self.a.len() - 1
    }

    pub fn poly(&self) -> Poly<Gaussian> {
        Poly::new(self.a.iter().map(Gaussian::from_rational).collect())
    }

    pub fn eval(&self, t: Complex64) -> Complex64 {
        self.a.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * t + rational_to_f64(c))
    }
}

/// `h_m = (q^(m+1) - 1)/(q - 1)`, the coefficients of `1/((1-T)(1-qT))`.
fn h(q: &BigRational, m: usize) -> BigRational {
    (num_traits::pow(q.clone(), m + 1) - BigRational::one()) / (q - BigRational::one())
}

/// The unique `P` of degree at most `n - d` with
/// `[T^(n-d)] (y(1-T) + xT)^n P(T) / ((1-T)(1-qT)) = (F - x^n)/(q - 1)`,
/// by an exact solve over ℚ.
pub fn zeta_polynomial(f: &WeightEnumerator) -> Result<ZetaPolynomial> {
    let (n, q) = (f.n, f.q);
    let d = f.min_distance();
    if d > n {
        return Err(Error::DegenerateZeta);
    }
    let r = n - d;
    let qb = big(q);
    // column i: [T^(r-i)] of (y + (x-y)T)^n/((1-T)(1-qT)), row w: x^(n-w) y^w
    let mut matrix = vec![vec![BigRational::zero(); r + 1]; n + 1];
    for i in 0..=r {
        for j in 0..=r - i {
            let weight = choose(n, j) * h(&qb, r - i - j);
            // (x - y)^j y^(n-j) = Σ_l C(j,l) (-1)^(j-l) x^l y^(n-l)
            for l in 0..=j {
                let t = &weight * choose(j, l);
                let row = &mut matrix[n - l][i];
                if (j - l) % 2 == 0 {
                    *row += t;
                } else {
                    *row -= t;
                }
            }
        }
    }
    let qm1 = &qb - BigRational::one();
    let rhs: Vec<BigRational> = (0..=n)
        .map(|w| {
            let x_n = if w == 0 { BigRational::one() } else { BigRational::zero() };
            (&f.a[w] - x_n) / &qm1
        })
        .collect();
    let sol = solve(matrix, rhs, r + 1);
    if !sol.consistent {
        return Err(Error::InconsistentSystem(format!("no P of degree <= {r} for n = {n}, d = {d}")));
    }
    if sol.nullity() > 0 {
        return Err(Error::NonUnique { dim: sol.nullity() });
    }
    let expansion = mds_expand(f)?;
    let expansion_agrees = expansion.coords[..=r] == sol.x[..];
    let mut a = sol.x;
    while a.len() > 1 && a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    Ok(ZetaPolynomial {
        n,
        q,
        d,
        a,
        top_coordinate: expansion.coords[r + 1].clone(),
        expansion_agrees,
    })
}

/// `p(T) = P(T/√q)`, coefficients `a_i q^(-i/2)`.
pub fn normalized_zeta(p: &ZetaPolynomial) -> Vec<Surd> {
    p.a.iter()
        .enumerate()
        .map(|(i, c)| Surd::rational(c.clone(), p.q) * Surd::q_half_power(p.q, -(i as i64)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SelfReciprocity {
    pub normalized: Vec<Surd>,
    pub palindromic: bool,
}

/// Exact palindromicity of `P(T/√q)` for a virtually self-dual `F`.
pub fn self_reciprocal_check(f: &WeightEnumerator) -> Result<(ZetaPolynomial, SelfReciprocity)> {
    if !is_virtually_self_dual(f)? {
        return Err(Error::NotSelfDual);
    }
    let zeta = zeta_polynomial(f)?;
    let normalized = normalized_zeta(&zeta);
    let k = normalized.len() - 1;
    let palindromic = (0..=k).all(|i| normalized[i] == normalized[k - i]);
    Ok((zeta, SelfReciprocity { normalized, palindromic }))
}

/// `Z(T) = P(T)/((1-T)(1-qT))`.
pub fn zeta_function(p: &ZetaPolynomial, t: Complex64) -> Complex64 {
    p.eval(t) / ((1.0 - t) * (1.0 - p.q as f64 * t))
}

/// Largest relative residual of `Z(T) = q^(g-1) T^(2g-2) Z(1/(qT))` over `points`,
/// with `g` the genus of the enumerator.
pub fn functional_equation_residual(p: &ZetaPolynomial, points: &[Complex64]) -> Result<f64> {
    if p.n % 2 == 1 {
        return Err(Error::OddLength(p.n));
    }
    let g = (p.n / 2) as i32 + 1 - p.d as i32;
    let q = p.q as f64;
    Ok(points
        .iter()
        .map(|&t| {
            let lhs = zeta_function(p, t);
            let rhs = q.powi(g - 1) * t.powi(2 * g - 2) * zeta_function(p, 1.0 / (q * t));
            (lhs - rhs).norm() / lhs.norm().max(rhs.norm()).max(f64::MIN_POSITIVE)
        })
        .fold(0.0, f64::max))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RhReport {
    pub radius: f64,
    pub zeros: Vec<Complex64>,
    pub max_radius_dev: f64,
    pub tol: f64,
    pub pass: bool,
}

/// Zeros of `P` against the circle `|T| = 1/√q`. A constant `P` passes
/// with no zeros.
pub fn rh_check(p: &ZetaPolynomial, tol: f64) -> Result<RhReport> {
    let radius = 1.0 / (p.q as f64).sqrt();
    let zeros = if p.degree() == 0 {
        Vec::new()
    } else {
        roots(&p.poly(), DEFAULT_SOLVER_TOL)?.flat()
    };
    let max_radius_dev = zeros.iter().map(|z| (z.norm() - radius).abs()).fold(0.0, f64::max);
    Ok(RhReport {
        radius,
        zeros,
        max_radius_dev,
        tol,
        pass: max_radius_dev <= tol,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DIdentityReport {
    pub d: usize,
    /// `Σ 1/α_i = -a_1/a_0`.
    pub sum_inverse_zeros: String,
    pub sum_inverse_zeros_numeric: f64,
    /// `q - Σ 1/α_i - (A_(d+1)/A_d)(d+1)/(n-d)`.
    pub rhs: String,
    pub identity_holds: bool,
    pub numeric_residual: f64,
    /// `q - Σ 1/α_i`.
    pub bound: String,
    pub inequality_holds: bool,
}

/// `d = q - Σ α_i⁻¹ - (A_(d+1)/A_d)(d+1)/(n-d)` over the zeros `α_i` of `P`,
/// exactly and from the computed zeros.
pub fn d_from_zeros_identity(f: &WeightEnumerator) -> Result<DIdentityReport> {
    let p = zeta_polynomial(f)?;
    let (n, d) = (p.n, p.d);
    if p.degree() == 0 || p.a[0].is_zero() || d >= n {
        return Err(Error::DegenerateZeta);
    }
    let sum_inv = -&p.a[1] / &p.a[0];
    let zeros = roots(&p.poly(), DEFAULT_SOLVER_TOL)?.flat();
    let sum_inv_numeric: f64 = zeros.iter().map(|z| (1.0 / z).re).sum();
    let bound = big(p.q) - &sum_inv;
    let ratio = f.coeff(d + 1) / &f.a[d] * BigRational::new((d as i64 + 1).into(), ((n - d) as i64).into());
    let rhs = &bound - ratio;
    let d_rat = big(d as u64);
    let numeric_rhs = p.q as f64 - sum_inv_numeric - rational_to_f64(&(f.coeff(d + 1) / &f.a[d])) * (d + 1) as f64 / (n - d) as f64;
    let fmt = crate::scalar::format_rational;
    Ok(DIdentityReport {
        d,
        sum_inverse_zeros: fmt(&sum_inv),
        sum_inverse_zeros_numeric: sum_inv_numeric,
        identity_holds: rhs == d_rat,
        numeric_residual: (numeric_rhs - d as f64).abs(),
        inequality_holds: d_rat <= bound,
        rhs: fmt(&rhs),
        bound: fmt(&bound),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::enumerator::mds_enumerator;
    use crate::scalar::{int, rat};

    fn hamming() -> WeightEnumerator {
        WeightEnumerator::from_i64(2, &[1, 0, 0, 0, 14, 0, 0, 0, 1]).unwrap()
    }

    #[test]
    fn hamming_zeta() {
        let p = zeta_polynomial(&hamming()).unwrap();
        assert_eq!(p.a, vec![rat(1, 5), rat(2, 5), rat(2, 5)]);
        assert!(p.expansion_agrees);
        assert!(p.top_coordinate.is_zero());
        let (_, sr) = self_reciprocal_check(&hamming()).unwrap();
        assert!(sr.palindromic);
        assert_eq!(sr.normalized[1], Surd::new(int(0), rat(1, 5), 2));
    }

    #[test]
    fn mds_zeta_is_one() {
        for (n, d, q) in [(6, 3, 2), (5, 2, 4), (7, 7, 3)] {
            let p = zeta_polynomial(&mds_enumerator(n, d, q).unwrap()).unwrap();
            assert_eq!(p.a, vec![int(1)]);
        }
        assert!(matches!(zeta_polynomial(&mds_enumerator(4, 5, 2).unwrap()), Err(Error::DegenerateZeta)));
    }

    #[test]
    fn rh_examples() {
        let r = rh_check(&zeta_polynomial(&hamming()).unwrap(), 1e-12).unwrap();
        assert!(r.pass && r.zeros.len() == 2);
        let fake = ZetaPolynomial {
            n: 4,
            q: 2,
            d: 2,
            a: vec![int(1), int(-3)],
            top_coordinate: int(0),
            expansion_agrees: true,
        };
        let r = rh_check(&fake, 1e-12).unwrap();
        assert!(!r.pass);
    }

    #[test]
    fn functional_equation() {
        let p = zeta_polynomial(&hamming()).unwrap();
        let pts = [Complex64::new(1.0 / 3.0, 0.0), Complex64::new(2.0, 1.0)];
        assert!(functional_equation_residual(&p, &pts).unwrap() < 1e-12);
    }

    #[test]
    fn d_identity() {
        let r = d_from_zeros_identity(&hamming()).unwrap();
        assert_eq!(r.sum_inverse_zeros, "-2");
        assert_eq!(r.rhs, "4");
        assert!(r.identity_holds && r.inequality_holds);
        assert!(r.numeric_residual < 1e-10);
    }

    #[test]
    fn non_self_dual_rejected() {
        let f = WeightEnumerator::from_i64(2, &[1, 0, 0, 0, 1]).unwrap();
        assert!(matches!(self_reciprocal_check(&f), Err(Error::NotSelfDual)));
    }
}
