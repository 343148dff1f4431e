//! Independent oracles shared by the integration and acceptance tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use palinform::scalar::{int, rat};
use palinform::{Gaussian, Poly, Scalar};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random rational `k/den` in `[lo, hi]`.
pub fn rand_rat(r: &mut ChaCha8Rng, lo: i64, hi: i64, den: i64) -> BigRational {
    rat(r.gen_range(lo * den..=hi * den), den)
}

/// `((1 - t²) + 2ti)/(1 + t²)`, an exact point of the unit circle.
pub fn circle_point(t: &BigRational) -> Gaussian {
    let one = BigRational::one();
    let d = &one + t * t;
    Gaussian::new((&one - t * t) / &d, (BigRational::from_integer(2.into()) * t) / d)
}

pub fn g(re: BigRational, im: BigRational) -> Gaussian {
    Gaussian::new(re, im)
}

/// `1/conj(z)`.
pub fn mirror(z: &Gaussian) -> Gaussian {
    Gaussian::one() / z.conj()
}

// ---------------------------------------------------------------------------
// symmetry classes, computed straight from the coefficient list

pub fn is_palindromic<S: Scalar>(c: &[S]) -> bool {
    let n = c.len() - 1;
    (0..=n).all(|i| c[i] == c[n - i])
}

pub fn is_antipalindromic<S: Scalar>(c: &[S]) -> bool {
    let n = c.len() - 1;
    (0..=n).all(|i| c[i] == -c[n - i].clone())
}

pub fn is_quasi_palindromic<S: Scalar>(c: &[S]) -> bool {
    let n = c.len() - 1;
    (0..=n).all(|i| c[i].norm_sqr() == c[n - i].norm_sqr())
}

// ---------------------------------------------------------------------------
// classical Gauss reduction of a x² + b xy + c y²

pub fn gauss_reduce(mut a: i128, mut b: i128, mut c: i128) -> (i128, i128, i128) {
    loop {
        // b into (-a, a]
        if b > a || b <= -a {
            let k = (a - b).div_euclid(2 * a);
            let nb = b + 2 * k * a;
            c += k * b + k * k * a;
            b = nb;
        }
        if a > c {
            std::mem::swap(&mut a, &mut c);
            b = -b;
            continue;
        }
        if a == c && b < 0 {
            b = -b;
        }
        return (a, b, c);
    }
}

// ---------------------------------------------------------------------------
// zeta identity by brute trivariate expansion

type Tri = BTreeMap<(usize, usize, usize), BigRational>;

fn tri_mul(p: &Tri, q: &Tri, t_max: usize) -> Tri {
    let mut out = Tri::new();
    for (&(a, b, c), u) in p {
        for (&(d, e, f), v) in q {
            if c + f > t_max {
                continue;
            }
            *out.entry((a + d, b + e, c + f)).or_insert_with(BigRational::zero) += u * v;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Check `[T^(n-d)] (y(1-T) + xT)^n P(T)/((1-T)(1-qT)) = (F - x^n)/(q-1)`.
/// Keys are `(x power, y power, T power)`.
pub fn zeta_identity_holds(a: &[BigRational], q: u64, p: &[BigRational]) -> bool {
    let n = a.len() - 1;
    let d = (1..=n).find(|&w| !a[w].is_zero()).unwrap();
    let t_max = n - d;
    let mut lin = Tri::new();
    lin.insert((0, 1, 0), int(1));
    lin.insert((0, 1, 1), int(-1));
    lin.insert((1, 0, 1), int(1));
    let mut acc = Tri::new();
    acc.insert((0, 0, 0), int(1));
    for _ in 0..n {
        acc = tri_mul(&acc, &lin, t_max);
    }
    let mut geo = Tri::new();
    for m in 0..=t_max {
        let h: BigRational = (0..=m).map(|k| BigRational::from_integer(BigInt::from(q).pow(k as u32))).sum();
        geo.insert((0, 0, m), h);
    }
    let mut pt = Tri::new();
    for (i, c) in p.iter().enumerate() {
        if !c.is_zero() {
            pt.insert((0, 0, i), c.clone());
        }
    }
    let full = tri_mul(&tri_mul(&acc, &geo, t_max), &pt, t_max);
    let qm1 = BigRational::from_integer(BigInt::from(q - 1));
    (0..=n).all(|w| {
        let lhs = full.get(&(n - w, w, t_max)).cloned().unwrap_or_else(BigRational::zero);
        let x_n = if w == 0 { int(1) } else { int(0) };
        lhs == (&a[w] - x_n) / &qm1
    })
}

// ---------------------------------------------------------------------------
// extremal enumerators as the null space of the MacWilliams-fixed,
// b-divisible polynomials

fn binom(n: usize, k: usize) -> BigRational {
    if k > n {
        return int(0);
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    BigRational::from_integer(r)
}

/// Row `w` of the unnormalized MacWilliams matrix: coefficient of
/// `x^(n-k) y^k` in `(x + (q-1)y)^(n-w) (x - y)^w`.
fn mw_entry(n: usize, q: u64, w: usize, k: usize) -> BigRational {
    let mut s = int(0);
    for i in 0..=k.min(n - w) {
        let j = k - i;
        if j > w {
            continue;
        }
        let t = binom(n - w, i) * BigRational::from_integer(BigInt::from(q - 1).pow(i as u32)) * binom(w, j);
        if j % 2 == 0 {
            s += t;
        } else {
            s -= t;
        }
    }
    s
}

/// Reduced row echelon solve returning (rank, consistent, solution).
pub fn rref_solve(mut m: Vec<Vec<BigRational>>, cols: usize) -> (usize, bool, Vec<BigRational>) {
    // last column is the right-hand side
    let rows = m.len();
    let mut r = 0;
    let mut piv = Vec::new();
    for c in 0..cols {
        if let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) {
            m.swap(r, p);
            let inv = m[r][c].recip();
            for v in m[r].iter_mut() {
                *v = &*v * &inv;
            }
            for i in 0..rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    let row_r = m[r].clone();
                    for (v, rv) in m[i].iter_mut().zip(row_r) {
                        *v -= &f * rv;
                    }
                }
            }
            piv.push(c);
            r += 1;
        }
    }
    let consistent = m[r..].iter().all(|row| row[cols].is_zero());
    let mut x = vec![int(0); cols];
    for (i, &c) in piv.iter().enumerate() {
        x[c] = m[i][cols].clone();
    }
    (piv.len(), consistent, x)
}

/// The unique `A` with `A_0 = 1`, `A_w = 0` off `bℤ` and for `0 < w < d`,
/// fixed by the normalized MacWilliams transform. `None` if not unique.
pub fn extremal_oracle(q: u64, b: usize, n: usize, d: usize) -> Option<Vec<BigRational>> {
    let unknowns: Vec<usize> = (0..=n).filter(|&w| w % b == 0 && (w == 0 || w >= d)).collect();
    let cols = unknowns.len();
    let scale = BigRational::from_integer(BigInt::from(q).pow((n / 2) as u32));
    let mut rows = Vec::new();
    let mut first = vec![int(0); cols + 1];
    first[0] = int(1);
    first[cols] = int(1);
    rows.push(first);
    for k in 0..=n {
        // Σ_w A_w mw(w,k) = q^(n/2) A_k
        let mut row: Vec<BigRational> = unknowns.iter().map(|&w| mw_entry(n, q, w, k)).collect();
        if let Some(pos) = unknowns.iter().position(|&w| w == k) {
            row[pos] -= &scale;
        }
        row.push(int(0));
        rows.push(row);
    }
    let (rank, consistent, x) = rref_solve(rows, cols);
    if !consistent || rank < cols {
        return None;
    }
    let mut a = vec![int(0); n + 1];
    for (v, &w) in x.into_iter().zip(&unknowns) {
        a[w] = v;
    }
    Some(a)
}

// ---------------------------------------------------------------------------
// misc

pub fn eval(p: &Poly<Gaussian>, z: Complex64) -> Complex64 {
    p.coeffs().iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_c64())
}

pub fn eval_conj_coeffs(p: &Poly<Gaussian>, z: Complex64) -> Complex64 {
    p.coeffs().iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_c64().conj())
}

pub fn abs_rat(r: &BigRational) -> BigRational {
    r.abs()
}

/// The decimals printed in the worked example block, with their verdicts.
pub const PRINTED_PRODUCTS: [(&[&str], &str, bool); 11] = [
    (&["-1.05", "0.28", "-1.25"], "1 2.02 3.6685 3.67250 3.6685 2.02 1", true),
    (&["-1.05", "0.30", "-1.25"], "1 2 3.6225 3.60625 3.6225 2 1", false),
    (&["-1.05", "0.3", "-1.25", "0.6"], "1 1.4 3.4225 3.43275 5.08125 3.43275 3.4225 1.4 1", true),
    (&["-1.05", "0.3", "-1.25", "0.7"], "1 1.3 3.2225 3.0705 4.720625 3.0705 3.2225 1.3 1", false),
    (&["-1.5", "-0.2", "-0.1"], "1 1.8 3.47 3.63 3.47 1.8 1", true),
    (&["-1.5", "-0.2", "-0.1", "0.5"], "1 1.3 3.57 3.695 5.125 3.695 3.57 1.3 1", true),
    (&["-1.5", "-0.2", "-0.1", "0.6"], "1 1.2 3.39 3.348 4.762 3.348 3.39 1.2 1", false),
    (&["-0.1", "-0.2", "-0.3", "-0.92"], "1 1.52 4.662 4.6672 7.32952 4.6672 4.662 1.52 1", true),
    (&["-0.1", "-0.2", "-0.3", "-0.91"], "1 1.51 4.656 4.6361 7.31746 4.6361 4.656 1.51 1", false),
    (
        &["-0.1", "-0.2", "-0.3", "-0.92", "-0.999"],
        "1 2.519 7.18048 10.844538 16.6540528 16.65659048 16.6540528 10.844538 7.18048 2.519 1",
        true,
    ),
    (
        &["-0.1", "-0.2", "-0.3", "-0.92", "-0.99"],
        "1 2.51 7.1668 10.80258 16.612048 16.5906248 16.612048 10.80258 7.1668 2.51 1",
        false,
    ),
];
