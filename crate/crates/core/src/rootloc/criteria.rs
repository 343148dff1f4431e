//! Unit-circle root-location criteria and coefficient bounds for
//! self-inversive polynomials.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::solver::{roots, RootSet, DEFAULT_SOLVER_TOL};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::polycore::classify;
use crate::scalar::Scalar;

/// Default half-width of the band `| |z| - 1 | ≤ band` counted as on-circle.
pub const DEFAULT_BAND: f64 = 1e-7;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CircleReport {
    pub on_circle: usize,
    pub inside: usize,
    pub outside: usize,
    pub tol: f64,
    pub max_deviation: f64,
}

impl CircleReport {
    pub fn from_roots(set: &RootSet, band: f64) -> Self {
        let mut report = CircleReport {
            on_circle: 0,
            inside: 0,
            outside: 0,
            tol: band,
            max_deviation: 0.0,
        };
        for &(z, m) in &set.roots {
            let dev = z.norm() - 1.0;
            report.max_deviation = report.max_deviation.max(dev.abs());
            if dev.abs() <= band {
                report.on_circle += m;
            } else if dev < 0.0 {
                report.inside += m;
            } else {
                report.outside += m;
            }
        }
        report
    }

    pub fn all_on_circle(&self) -> bool {
        self.inside == 0 && self.outside == 0
    }
}

pub fn circle_report<S: Scalar>(p: &Poly<S>, band: f64) -> Result<CircleReport> {
    Ok(CircleReport::from_roots(&roots(p, DEFAULT_SOLVER_TOL)?, band))
}

fn require_self_inversive<S: Scalar>(p: &Poly<S>, tol: f64) -> Result<()> {
    if classify(p, tol)?.is_self_inversive() {
        Ok(())
    } else {
        Err(Error::NotSelfInversive)
    }
}

/// All roots of `p′` in the closed disk `|z| ≤ 1 + tol`. For self-inversive
/// `p` this holds exactly when every root of `p` is unimodular.
pub fn cohn_test<S: Scalar>(p: &Poly<S>, tol: f64) -> Result<bool> {
    require_self_inversive(p, tol)?;
    let dp = p.derivative();
    if dp.degree().unwrap_or(0) == 0 {
        return Ok(true);
    }
    let set = roots(&dp, DEFAULT_SOLVER_TOL)?;
    Ok(set.roots.iter().all(|(z, _)| z.norm() <= 1.0 + tol))
}

/// `Σ |a_k|` over the given indices, exactly when every coefficient involved
/// is an exact real.
enum AbsSum {
    Exact(BigRational),
    Float(f64),
}

impl AbsSum {
    fn of<S: Scalar>(coeffs: &[S], idx: impl Iterator<Item = usize>) -> AbsSum {
        let idx: Vec<usize> = idx.collect();
        let exact: Option<Vec<BigRational>> = idx.iter().map(|&k| coeffs[k].as_rational()).collect();
        match exact {
            Some(v) => AbsSum::Exact(v.iter().map(|r| r.abs()).fold(BigRational::zero(), |a, b| a + b)),
            None => AbsSum::Float(idx.iter().map(|&k| coeffs[k].abs_f64()).sum()),
        }
    }

    fn to_f64(&self) -> f64 {
        match self {
            AbsSum::Exact(r) => crate::scalar::rational_to_f64(r),
            AbsSum::Float(x) => *x,
        }
    }
}

/// Compare `|c|` with `factor · sum`, exactly when both sides are exact.
fn cmp_scaled<S: Scalar>(c: &S, factor: &BigRational, sum: &AbsSum) -> Ordering {
    match (c.as_rational(), sum) {
        (Some(r), AbsSum::Exact(s)) => r.abs().cmp(&(factor * s)),
        _ => {
            let lhs = c.abs_f64();
            let rhs = crate::scalar::rational_to_f64(factor) * sum.to_f64();
            lhs.partial_cmp(&rhs).unwrap_or(Ordering::Less)
        }
    }
}

/// Index range of the sum in the Lakatos–Losonczi inequality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LlRange {
    /// `k = 1..=n`, the sum includes `|a_n|`.
    Literal,
    /// `k = 1..n`.
    ExcludeLeading,
}

/// `|a_n| ≥ ½ Σ |a_k|`; when true every root of `p` is unimodular.
pub fn lakatos_losonczi<S: Scalar>(p: &Poly<S>, range: LlRange, tol: f64) -> Result<bool> {
    require_self_inversive(p, tol)?;
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    let a = p.coeffs();
    let upper = match range {
        LlRange::Literal => n,
        LlRange::ExcludeLeading => n.saturating_sub(1),
    };
    let sum = AbsSum::of(a, 1..=upper);
    let half = BigRational::new(1.into(), 2.into());
    Ok(cmp_scaled(&a[n], &half, &sum) != Ordering::Less)
}

fn binomial(n: usize, k: usize) -> num_bigint::BigInt {
    let k = k.min(n - k);
    (0..k).fold(num_bigint::BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// The on-circle root count predicted by coefficient dominance
/// for the given `λ`, or `None` when its hypothesis does not hold.
pub fn vieira_predict<S: Scalar>(p: &Poly<S>, lambda: usize, tol: f64) -> Result<Option<usize>> {
    require_self_inversive(p, tol)?;
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if 2 * lambda > n {
        return Err(Error::LambdaOutOfRange { lambda, degree: n });
    }
    let a = p.coeffs();
    if 2 * lambda == n {
        let sum = AbsSum::of(a, (0..=n).filter(|&k| k != lambda));
        let fires = cmp_scaled(&a[lambda], &BigRational::from_integer(2.into()), &sum) == Ordering::Greater;
        return Ok(fires.then_some(0));
    }
    let sum = AbsSum::of(a, (0..=n).filter(|&k| k != lambda && k != n - lambda));
    let factor = BigRational::new(binomial(n, n - 2 * lambda), 2.into());
    let fires = cmp_scaled(&a[n - lambda], &factor, &sum) == Ordering::Greater;
    Ok(fires.then_some(n - 2 * lambda))
}

/// `max |p(e^{iθ})|` by sampling `grid` points and golden-section refinement
/// around every sampled local maximum; relative accuracy about 1e-8.
pub fn max_modulus<S: Scalar>(p: &Poly<S>, grid: usize) -> Result<f64> {
    let n = p.degree().unwrap_or(0);
    if grid < 8 * n.max(1) {
        return Err(Error::BadParameters(format!(
            "grid {grid} is below 8·deg = {}",
            8 * n.max(1)
        )));
    }
    let c: Vec<Complex64> = p.coeffs().iter().map(Scalar::to_c64).collect();
    let f = |theta: f64| eval(&c, Complex64::from_polar(1.0, theta)).norm();
    let h = 2.0 * PI / grid as f64;
    let samples: Vec<f64> = (0..grid).map(|k| f(k as f64 * h)).collect();
    let mut best = samples.iter().cloned().fold(0.0, f64::max);
    for k in 0..grid {
        let prev = samples[(k + grid - 1) % grid];
        let next = samples[(k + 1) % grid];
        if samples[k] >= prev && samples[k] >= next {
            let t = k as f64 * h;
            best = best.max(golden_max(&f, t - h, t + h));
        }
    }
    Ok(best)
}

/// Default sample count for [`max_modulus`].
pub fn default_grid(degree: usize) -> usize {
    64 * (degree + 1)
}

fn eval(c: &[Complex64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

fn golden_max(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - g * (hi - lo);
    let mut x2 = lo + g * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..80 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = f(x1);
        }
        if hi - lo < 1e-14 {
            break;
        }
    }
    f1.max(f2)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OharaReport {
    pub norm: f64,
    /// `|a_i| ≤ ‖p‖/2` for every `i ≠ n/2`.
    pub outer_bound: bool,
    /// `|a_{n/2}| ≤ (√2/2)‖p‖`; `None` for odd degree.
    pub middle_bound: Option<bool>,
    /// `|a_{n/2}| ≤ ‖p‖`.
    pub middle_conjecture: Option<bool>,
    /// `|a_{n/2}| ≤ 2|a_n|`, under which the conjectured bound is known.
    pub middle_sufficient: Option<bool>,
}

/// Coefficient bounds for self-inversive `p` with all roots unimodular.
/// Comparisons allow a relative slack of `1e-8` for the sampled norm.
pub fn ohara_bounds<S: Scalar>(p: &Poly<S>, tol: f64) -> Result<OharaReport> {
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
    let norm = max_modulus(p, default_grid(n))?;
    let slack = 1.0 + 1e-8;
    let a = p.coeffs();
    let middle = (n % 2 == 0).then_some(n / 2);
    let outer_bound = (0..=n)
        .filter(|&i| Some(i) != middle)
        .all(|i| a[i].abs_f64() <= norm / 2.0 * slack);
    let mid = middle.map(|m| a[m].abs_f64());
    Ok(OharaReport {
        norm,
        outer_bound,
        middle_bound: mid.map(|v| v <= std::f64::consts::FRAC_1_SQRT_2 * norm * slack),
        middle_conjecture: mid.map(|v| v <= norm * slack),
        middle_sufficient: middle.map(|m| {
            cmp_scaled(&a[m], &BigRational::from_integer(2.into()), &AbsSum::of(a, std::iter::once(n)))
                != Ordering::Greater
        }),
    })
}
