//! Simultaneous root finding.
//!
//! Aberth–Ehrlich iteration on the monic normalization, a Newton polish
//! against the original coefficients, and a companion-matrix eigenvalue
//! fallback when the iteration stalls. Exact zero roots are split off first.

use std::f64::consts::PI;

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

/// Default backward-error tolerance for [`roots`].
pub const DEFAULT_SOLVER_TOL: f64 = 1e-11;

const MAX_ABERTH_ITERS: usize = 600;
const CLUSTER_RADIUS: f64 = 1e-5;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootSet {
    /// Distinct roots with multiplicities.
    pub roots: Vec<(Complex64, usize)>,
    /// Largest backward error `|p(z)| / Σ|a_i||z|^i` over the returned roots.
    pub residual: f64,
    pub tol: f64,
}

impl RootSet {
    /// Every root repeated according to its multiplicity.
    pub fn flat(&self) -> Vec<Complex64> {
        self.roots
            .iter()
            .flat_map(|&(z, m)| std::iter::repeat_n(z, m))
            .collect()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.1).sum()
    }
}

pub fn roots<S: Scalar>(p: &Poly<S>, tol: f64) -> Result<RootSet> {
    roots_seeded(p, tol, 0)
}

/// Roots of `p` with the starting configuration rotated by an angle drawn
/// from `seed`. Output is deterministic for fixed `(p, tol, seed)`.
pub fn roots_seeded<S: Scalar>(p: &Poly<S>, tol: f64, seed: u64) -> Result<RootSet> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::DegreeTooLow(0));
    }
    let zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let coeffs: Vec<Complex64> = p.coeffs()[zeros..].iter().map(Scalar::to_c64).collect();
    let mut found = if coeffs.len() > 1 {
        solve_nonzero(&coeffs, tol, seed)?
    } else {
        Vec::new()
    };
    found.extend(std::iter::repeat_n(Complex64::new(0.0, 0.0), zeros));

    let all: Vec<Complex64> = p.coeffs().iter().map(Scalar::to_c64).collect();
    let clustered = cluster(&found, &all);
    let residual = clustered
        .iter()
        .map(|&(z, _)| backward_error(&all, z))
        .fold(0.0, f64::max);
    Ok(RootSet {
        roots: clustered,
        residual,
        tol,
    })
}

fn solve_nonzero(c: &[Complex64], tol: f64, seed: u64) -> Result<Vec<Complex64>> {
    let mut z = aberth(c, seed);
    polish(c, &mut z);
    let res = max_backward_error(c, &z);
    if res <= tol {
        return Ok(z);
    }
    let mut fallback = companion_eigenvalues(c).unwrap_or_else(|| z.clone());
    polish(c, &mut fallback);
    let fres = max_backward_error(c, &fallback);
    if fres <= tol {
        return Ok(fallback);
    }
    let (best, residual) = if fres < res { (fallback, fres) } else { (z, res) };
    Err(Error::NoConvergence { best, residual })
}

fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

pub(crate) fn backward_error(c: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    let mut scale = 0.0;
    let mut pow = 1.0;
    for a in c {
        scale += a.norm() * pow;
        pow *= r;
    }
    let (v, _) = horner(c, z);
    if scale == 0.0 {
        0.0
    } else {
        v.norm() / scale
    }
}

fn max_backward_error(c: &[Complex64], z: &[Complex64]) -> f64 {
    z.iter().map(|&x| backward_error(c, x)).fold(0.0, f64::max)
}

fn aberth(c: &[Complex64], seed: u64) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lead = c[n];
    let monic: Vec<Complex64> = c.iter().map(|a| a / lead).collect();
    let radius = (monic[0].norm()).powf(1.0 / n as f64).max(1e-3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let offset: f64 = rng.gen_range(0.0..2.0 * PI / n as f64);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, offset + 0.4 + 2.0 * PI * k as f64 / n as f64))
        .collect();
    let mut done = vec![false; n];
    for _ in 0..MAX_ABERTH_ITERS {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (p, dp) = horner(&monic, z[i]);
            if p.norm() == 0.0 {
                done[i] = true;
                continue;
            }
            let ratio = p / dp;
            let sum: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !w.is_finite() {
                continue;
            }
            z[i] -= w;
            if w.norm() <= 4.0 * f64::EPSILON * z[i].norm().max(f64::MIN_POSITIVE) {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            break;
        }
    }
    z
}

fn polish(c: &[Complex64], z: &mut [Complex64]) {
    for root in z.iter_mut() {
        for _ in 0..3 {
            let (p, dp) = horner(c, *root);
            if dp.norm() == 0.0 {
                break;
            }
            let candidate = *root - p / dp;
            if candidate.is_finite() && backward_error(c, candidate) < backward_error(c, *root) {
                *root = candidate;
            } else {
                break;
            }
        }
    }
}

fn companion_eigenvalues(c: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = c.len() - 1;
    let lead = c[n];
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..n {
        m[(i, n - 1)] = -c[i] / lead;
    }
    let schur = Schur::try_new(m, f64::EPSILON, 10_000)?;
    let (_, t) = schur.unpack();
    let mut out = Vec::with_capacity(n);
    let mut i = 0;
    while i < n {
        let sub = if i + 1 < n { t[(i + 1, i)].norm() } else { 0.0 };
        let local = t[(i, i)].norm() + if i + 1 < n { t[(i + 1, i + 1)].norm() } else { 0.0 };
        if i + 1 < n && sub > f64::EPSILON * local.max(1.0) {
            let (a, b, cc, d) = (t[(i, i)], t[(i, i + 1)], t[(i + 1, i)], t[(i + 1, i + 1)]);
            let tr = a + d;
            let det = a * d - b * cc;
            let disc = (tr * tr - 4.0 * det).sqrt();
            out.push((tr + disc) / 2.0);
            out.push((tr - disc) / 2.0);
            i += 2;
        } else {
            out.push(t[(i, i)]);
            i += 1;
        }
    }
    Some(out)
}

fn nth_derivative(c: &[Complex64], k: usize) -> Vec<Complex64> {
    let mut d = c.to_vec();
    for _ in 0..k {
        d = d.iter().enumerate().skip(1).map(|(i, a)| a * i as f64).collect();
    }
    d
}

/// Merge roots closer than a relative radius into one entry with
/// multiplicity. A cluster of size `m` is refined by Newton on `p^(m-1)`,
/// where the multiple root is simple.
fn cluster(found: &[Complex64], c: &[Complex64]) -> Vec<(Complex64, usize)> {
    let mut remaining: Vec<Complex64> = found.to_vec();
    remaining.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let mut out: Vec<(Complex64, usize)> = Vec::new();
    let mut used = vec![false; remaining.len()];
    for i in 0..remaining.len() {
        if used[i] {
            continue;
        }
        let mut members = vec![remaining[i]];
        used[i] = true;
        let mut grew = true;
        while grew {
            grew = false;
            for j in 0..remaining.len() {
                if used[j] {
                    continue;
                }
                let near = members.iter().any(|m| {
                    (m - remaining[j]).norm() <= CLUSTER_RADIUS * m.norm().max(1.0)
                });
                if near {
                    members.push(remaining[j]);
                    used[j] = true;
                    grew = true;
                }
            }
        }
        let mut mean = members.iter().sum::<Complex64>() / members.len() as f64;
        if members.len() > 1 {
            let d = nth_derivative(c, members.len() - 1);
            for _ in 0..4 {
                let (v, dv) = horner(&d, mean);
                if dv.norm() == 0.0 || v.norm() == 0.0 {
                    break;
                }
                let next = mean - v / dv;
                if !next.is_finite() || (next - mean).norm() > CLUSTER_RADIUS * mean.norm().max(1.0) {
                    break;
                }
                mean = next;
            }
        }
        out.push((mean, members.len()));
    }
    out
}
