//! Weight enumerators, the MDS basis and the MacWilliams transform.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::surd::Surd;
use crate::error::{Error, Result};
use crate::scalar::format_rational;

/// `Σ A_w x^(n-w) y^w` over a field of size `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    pub n: usize,
    pub q: u64,
    pub a: Vec<BigRational>,
}

impl Serialize for WeightEnumerator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("WeightEnumerator", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("A", &self.a.iter().map(format_rational).collect::<Vec<_>>())?;
        st.end()
    }
}

pub(crate) fn big(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub(crate) fn choose(n: usize, k: usize) -> BigRational {
    if k > n {
        return BigRational::zero();
    }
    BigRational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

impl WeightEnumerator {
    pub fn new(q: u64, a: Vec<BigRational>) -> Result<Self> {
        if q < 2 {
            return Err(Error::BadParameters(format!("field size q = {q} must be at least 2")));
        }
        if a.is_empty() {
            return Err(Error::BadParameters("enumerator needs at least one coefficient".into()));
        }
        Ok(WeightEnumerator { n: a.len() - 1, q, a })
    }

    pub fn from_i64(q: u64, a: &[i64]) -> Result<Self> {
        WeightEnumerator::new(q, a.iter().map(|&v| BigRational::from_integer(v.into())).collect())
    }

    /// Least `w ≥ 1` with `A_w ≠ 0`; `n + 1` for `x^n`.
    pub fn min_distance(&self) -> usize {
        (1..=self.n).find(|&w| !self.a[w].is_zero()).unwrap_or(self.n + 1)
    }

    pub fn coeff(&self, w: usize) -> BigRational {
        self.a.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `A_0 = 1`.
    pub fn is_virtual(&self) -> bool {
        self.a[0].is_one()
    }

    /// Every weight with nonzero coefficient is a multiple of `b`.
    pub fn is_divisible(&self, b: usize) -> bool {
        self.a.iter().enumerate().all(|(w, c)| c.is_zero() || w % b == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.a.iter().all(|c| *c >= BigRational::zero())
    }

    pub fn is_integral(&self) -> bool {
        self.a.iter().all(|c| c.is_integer())
    }
}

/// Weight enumerator `M_{n,d}` of an `[n, n+1-d, d]` MDS code over `𝔽_q`,
/// with `M_{n,n+1} = x^n`.
pub fn mds_enumerator(n: usize, d: usize, q: u64) -> Result<WeightEnumerator> {
    if d == 0 || d > n + 1 {
        return Err(Error::BadParameters(format!("need 1 <= d <= n+1, got n = {n}, d = {d}")));
    }
    if q < 2 {
        return Err(Error::BadParameters(format!("field size q = {q} must be at least 2")));
    }
    let mut a = vec![BigRational::zero(); n + 1];
    a[0] = BigRational::one();
    let qb = big(q);
    for w in d..=n {
        let mut s = BigRational::zero();
        for j in 0..=w - d {
            let term = choose(w, j) * (num_traits::pow(qb.clone(), w - d + 1 - j) - BigRational::one());
            if j % 2 == 0 {
                s += term;
            } else {
                s -= term;
            }
        }
        a[w] = choose(n, w) * s;
    }
    WeightEnumerator::new(q, a)
}

/// Coordinates of `F` in the MDS basis `M_{n,d}, …, M_{n,n}, M_{n,n+1}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MdsExpansion {
    pub d: usize,
    /// `coords[i]` multiplies `M_{n,d+i}`.
    #[serde(serialize_with = "ser_rationals")]
    pub coords: Vec<BigRational>,
    /// Whether `M_{n,n}` carries a nonzero coordinate.
    pub uses_m_nn: bool,
}

pub(crate) fn ser_rationals<S: serde::Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_rational))
}

/// Triangular solve: `M_{n,i}` has `A_w = 0` for `0 < w < i` and
/// `A_i = C(n,i)(q-1) ≠ 0`.
pub fn mds_expand(f: &WeightEnumerator) -> Result<MdsExpansion> {
    let (n, q) = (f.n, f.q);
    let d = f.min_distance();
    let basis: Vec<WeightEnumerator> = (d..=n + 1).map(|i| mds_enumerator(n, i, q)).collect::<Result<_>>()?;
    let mut coords = vec![BigRational::zero(); basis.len()];
    for w in d..=n {
        let k = w - d;
        let pivot = &basis[k].a[w];
        if pivot.is_zero() {
            return Err(Error::SingularSystem);
        }
        let mut r = f.a[w].clone();
        for (i, m) in basis.iter().enumerate().take(k) {
            r -= &coords[i] * &m.a[w];
        }
        coords[k] = r / pivot;
    }
    let last = basis.len() - 1;
    let head: BigRational = coords[..last].iter().sum();
    coords[last] = &f.a[0] - head;
    let uses_m_nn = d <= n && !coords[n - d].is_zero();
    Ok(MdsExpansion { d, coords, uses_m_nn })
}

/// The normalized MacWilliams image `F((x + (q-1)y)/√q, (x - y)/√q)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MacWilliamsImage {
    pub n: usize,
    pub q: u64,
    #[serde(rename = "A")]
    pub a: Vec<Surd>,
}

impl MacWilliamsImage {
    /// The image as a rational enumerator, when no `√q` survives.
    pub fn to_rational(&self) -> Option<WeightEnumerator> {
        let a = self.a.iter().map(|c| c.as_rational().cloned()).collect::<Option<Vec<_>>>()?;
        WeightEnumerator::new(self.q, a).ok()
    }
}

/// Coefficients (in `y`, with `x = 1`) of `(1 + (q-1)y)^(n-w) (1 - y)^w`.
fn transform_row(n: usize, w: usize, q: u64) -> Vec<BigRational> {
    let qm1 = big(q - 1);
    let mut out = vec![BigRational::zero(); n + 1];
    for i in 0..=n - w {
        let left = choose(n - w, i) * num_traits::pow(qm1.clone(), i);
        for j in 0..=w {
            let right = choose(w, j);
            let term = &left * right;
            if j % 2 == 0 {
                out[i + j] += term;
            } else {
                out[i + j] -= term;
            }
        }
    }
    out
}

/// MacWilliams transform of surd coefficients; an exact involution.
pub fn macwilliams_surd(n: usize, q: u64, a: &[Surd]) -> Vec<Surd> {
    let mut out = vec![Surd::rational(BigRational::zero(), q); n + 1];
    for (w, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (k, t) in transform_row(n, w, q).into_iter().enumerate() {
            if !t.is_zero() {
                out[k] = out[k].clone() + c.clone() * Surd::rational(t, q);
            }
        }
    }
    let norm = Surd::q_half_power(q, -(n as i64));
    out.into_iter().map(|c| c * norm.clone()).collect()
}

pub fn macwilliams(f: &WeightEnumerator) -> MacWilliamsImage {
    let lifted: Vec<Surd> = f.a.iter().map(|c| Surd::rational(c.clone(), f.q)).collect();
    MacWilliamsImage {
        n: f.n,
        q: f.q,
        a: macwilliams_surd(f.n, f.q, &lifted),
    }
}

/// Exact fixed-point test of the MacWilliams transform.
pub fn is_virtually_self_dual(f: &WeightEnumerator) -> Result<bool> {
    if f.n % 2 == 1 {
        return Err(Error::OddLength(f.n));
    }
    Ok(macwilliams(f).to_rational().as_ref() == Some(f))
}

/// `γ(F) = n/2 + 1 - d`.
pub fn genus(f: &WeightEnumerator) -> Result<i64> {
    if f.n % 2 == 1 {
        return Err(Error::OddLength(f.n));
    }
    Ok((f.n / 2) as i64 + 1 - f.min_distance() as i64)
}
