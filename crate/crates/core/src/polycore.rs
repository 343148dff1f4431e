//! Structural transforms and classification predicates.
//!
//! The inversive is taken as the conjugated coefficient reversal
//! `(p*)_j = conj(a_{n-j})`, which makes it a polynomial map, and
//! self-inversiveness is detected through a unimodular witness `w` with
//! `a_j = w · conj(a_{n-j})` for every `j`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;

pub fn conjugate<S: Scalar>(p: &Poly<S>) -> Poly<S> {
    Poly::new(p.coeffs().iter().map(Scalar::conj).collect())
}

/// `z^n · p(1/z)`: the coefficient sequence reversed.
pub fn reciprocal<S: Scalar>(p: &Poly<S>) -> Poly<S> {
    Poly::new(p.coeffs().iter().rev().cloned().collect())
}

/// Conjugated reversal `z^n · conj(p)(1/z)`.
pub fn inversive<S: Scalar>(p: &Poly<S>) -> Poly<S> {
    Poly::new(p.coeffs().iter().rev().map(Scalar::conj).collect())
}

pub fn product<S: Scalar>(p: &Poly<S>, q: &Poly<S>) -> Poly<S> {
    p * q
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification<S: Scalar> {
    pub palindromic: bool,
    pub antipalindromic: bool,
    pub quasi_palindromic: bool,
    /// Unimodular `w` with `a_j = w · conj(a_{n-j})`, when one exists.
    pub self_inversive: Option<S>,
}

impl<S: Scalar> Classification<S> {
    pub fn is_self_inversive(&self) -> bool {
        self.self_inversive.is_some()
    }
}

/// Classify `p`. Comparisons are exact for exact scalars and within
/// `tol · max|a_i|` for floats.
pub fn classify<S: Scalar>(p: &Poly<S>, tol: f64) -> Result<Classification<S>> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    let a = p.coeffs();
    let scale = p.max_abs();
    let eq = |x: &S, y: &S| x.approx_eq(y, tol, scale);
    let half = n / 2;

    let palindromic = (0..=half).all(|i| eq(&a[i], &a[n - i]));
    let antipalindromic = (0..=half).all(|i| eq(&a[i], &(-a[n - i].clone())));
    let quasi_palindromic = (0..=half).all(|i| {
        a[i].norm_sqr()
            .approx_eq(&a[n - i].norm_sqr(), tol, scale * scale)
    });

    let self_inversive = if a[0].is_zero() {
        None
    } else {
        let w = a[n].clone() / a[0].conj();
        let unimodular = w.norm_sqr().approx_eq(&S::one(), tol, 1.0);
        let holds = unimodular && (0..=n).all(|j| eq(&a[j], &(w.clone() * a[n - j].conj())));
        holds.then_some(w)
    };

    Ok(Classification {
        palindromic,
        antipalindromic,
        quasi_palindromic,
        self_inversive,
    })
}

fn binomial_row<S: Scalar>(k: usize) -> Vec<S> {
    let mut row = vec![S::one()];
    for _ in 0..k {
        let mut next = vec![S::zero(); row.len() + 1];
        for (j, c) in row.iter().enumerate() {
            next[j] = next[j].clone() + c.clone();
            next[j + 1] = next[j + 1].clone() + c.clone();
        }
        row = next;
    }
    row
}

/// Write a palindromic `p` of degree `2s` as `z^s · g(z + 1/z)`; returns `(s, g)`.
pub fn decompose_half<S: Scalar>(p: &Poly<S>) -> Result<(usize, Poly<S>)> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n % 2 == 1 {
        return Err(Error::OddDegree(n));
    }
    if !classify(p, 0.0)?.palindromic {
        return Err(Error::NotPalindromic);
    }
    let s = n / 2;
    let mut rest: Vec<S> = p.coeffs().to_vec();
    let mut g = vec![S::zero(); s + 1];
    // peel z^{s-k} (z^2 + 1)^k from the top, whose leading term is z^{s+k}
    for k in (0..=s).rev() {
        let c = rest[s + k].clone();
        if c.is_zero() {
            continue;
        }
        for (j, b) in binomial_row::<S>(k).into_iter().enumerate() {
            let idx = s - k + 2 * j;
            rest[idx] = rest[idx].clone() - c.clone() * b;
        }
        g[k] = c;
    }
    debug_assert!(rest.iter().all(Scalar::is_zero));
    Ok((s, Poly::new(g)))
}

/// Expand `z^m · g(z + 1/z)`; requires `deg g ≤ m`.
pub fn compose_half<S: Scalar>(m: usize, g: &Poly<S>) -> Result<Poly<S>> {
    let Some(dg) = g.degree() else {
        return Ok(Poly::zero());
    };
    if dg > m {
        return Err(Error::DegreeMismatch(format!(
            "deg g = {dg} exceeds m = {m}"
        )));
    }
    let mut out = vec![S::zero(); m + dg + 1];
    for (k, c) in g.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (j, b) in binomial_row::<S>(k).into_iter().enumerate() {
            let idx = m - k + 2 * j;
            out[idx] = out[idx].clone() + c.clone() * b;
        }
    }
    Ok(Poly::new(out))
}

/// A root factor forced by (anti)palindromic symmetry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ForcedFactor {
    #[serde(rename = "x+1")]
    XPlusOne,
    #[serde(rename = "x-1")]
    XMinusOne,
    #[serde(rename = "x^2-1")]
    XSquaredMinusOne,
}

impl ForcedFactor {
    pub fn poly<S: Scalar>(self) -> Poly<S> {
        match self {
            ForcedFactor::XPlusOne => Poly::from_i64(&[1, 1]),
            ForcedFactor::XMinusOne => Poly::from_i64(&[-1, 1]),
            ForcedFactor::XSquaredMinusOne => Poly::from_i64(&[-1, 0, 1]),
        }
    }
}

/// Divide out the roots forced by parity: `x+1` for odd palindromic,
/// `x-1` for odd antipalindromic, `x²-1` for even antipalindromic. The
/// quotient is palindromic in every case.
pub fn forced_root_quotient<S: Scalar>(p: &Poly<S>) -> Result<(Vec<ForcedFactor>, Poly<S>)> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    let class = classify(p, 0.0)?;
    let factors = match (class.palindromic, class.antipalindromic, n % 2 == 1) {
        (true, _, true) => vec![ForcedFactor::XPlusOne],
        (true, _, false) => vec![],
        (false, true, true) => vec![ForcedFactor::XMinusOne],
        (false, true, false) => vec![ForcedFactor::XSquaredMinusOne],
        (false, false, _) => {
            return Err(Error::NotApplicable(
                "polynomial is neither palindromic nor antipalindromic".into(),
            ))
        }
    };
    let mut q = p.clone();
    for f in &factors {
        let (quot, rem) = q.div_rem(&f.poly());
        if !rem.is_zero() {
            return Err(Error::ClaimViolated {
                claim: format!("{f:?} divides p"),
                index: 0,
            });
        }
        q = quot;
    }
    if !classify(&q, 0.0)?.palindromic {
        return Err(Error::ClaimViolated {
            claim: "quotient is palindromic".into(),
            index: 0,
        });
    }
    Ok((factors, q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ExactPoly;
    use crate::scalar::{int, Gaussian};

    fn p(c: &[i64]) -> ExactPoly {
        Poly::from_i64(c)
    }

    fn g(re: i64, im: i64) -> Gaussian {
        Gaussian::new(int(re), int(im))
    }

    #[test]
    fn conjugate_examples() {
        let a = Poly::new(vec![g(1, 0), g(0, 1)]);
        assert_eq!(conjugate(&a), Poly::new(vec![g(1, 0), g(0, -1)]));
        assert_eq!(conjugate(&p(&[3, 1, 4])), p(&[3, 1, 4]));
        let b = Poly::new(vec![g(2, -1), g(3, 0), g(0, 5)]);
        assert_eq!(conjugate(&conjugate(&b)), b);
    }

    #[test]
    fn reciprocal_and_inversive_examples() {
        assert_eq!(reciprocal(&p(&[3, 2, 1])), p(&[1, 2, 3]));
        assert_eq!(reciprocal(&p(&[1, 5, 1])), p(&[1, 5, 1]));
        let a = Poly::new(vec![g(2, 0), g(0, 1)]);
        assert_eq!(inversive(&a), Poly::new(vec![g(0, -1), g(2, 0)]));
        assert_eq!(inversive(&p(&[1, 4, 1])), p(&[1, 4, 1]));
        let b = Poly::new(vec![g(1, 2), g(0, 3), g(-1, 1)]);
        assert_eq!(inversive(&inversive(&b)), b);
    }

    #[test]
    fn classify_examples() {
        let c = classify(&p(&[1, 3, 3, 1]), 0.0).unwrap();
        assert!(c.palindromic && c.quasi_palindromic && !c.antipalindromic);
        let c = classify(&p(&[-1, 3, -3, 1]), 0.0).unwrap();
        assert!(c.antipalindromic && !c.palindromic && c.quasi_palindromic);
        assert_eq!(c.self_inversive, Some(g(-1, 0)));
        let c = classify(&p(&[1, 5, 1]), 0.0).unwrap();
        assert_eq!(c.self_inversive, Some(g(1, 0)));
        assert!(matches!(classify(&p(&[]), 0.0), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn classify_finds_complex_witness() {
        // a_j = i · conj(a_{n-j})
        let a = Poly::new(vec![g(1, 1), g(1, 1), g(1, 1)]);
        let c = classify(&a, 0.0).unwrap();
        assert!(c.palindromic);
        assert_eq!(c.self_inversive, Some(g(1, 1) / g(1, -1)));
        // |w| != 1
        let c = classify(&p(&[1, 0, 2]), 0.0).unwrap();
        assert!(c.self_inversive.is_none() && !c.quasi_palindromic);
        // zero constant term can never be self-inversive
        assert!(classify(&p(&[0, 1]), 0.0).unwrap().self_inversive.is_none());
    }

    #[test]
    fn classify_float_respects_tolerance() {
        let a = p(&[1, 3, 3, 1]).to_float();
        let mut c = a.coeffs().to_vec();
        c[0].re += 1e-12;
        let perturbed = Poly::new(c);
        assert!(classify(&perturbed, 1e-9).unwrap().palindromic);
        assert!(!classify(&perturbed, 1e-14).unwrap().palindromic);
    }

    #[test]
    fn decompose_and_compose_examples() {
        assert_eq!(decompose_half(&p(&[1, 2, 3, 2, 1])).unwrap(), (2, p(&[1, 2, 1])));
        assert_eq!(decompose_half(&p(&[1, 0, 2, 0, 1])).unwrap(), (2, p(&[0, 0, 1])));
        assert_eq!(decompose_half(&p(&[7])).unwrap(), (0, p(&[7])));
        assert!(matches!(decompose_half(&p(&[1, 2, 1, 1])), Err(Error::OddDegree(3))));
        assert!(matches!(decompose_half(&p(&[1, 2, 3])), Err(Error::NotPalindromic)));

        assert_eq!(compose_half(2, &p(&[1, 2, 1])).unwrap(), p(&[1, 2, 3, 2, 1]));
        assert_eq!(compose_half(1, &p(&[0, 1])).unwrap(), p(&[1, 0, 1]));
        assert_eq!(compose_half(0, &p(&[5])).unwrap(), p(&[5]));
        assert!(matches!(compose_half(1, &p(&[0, 0, 1])), Err(Error::DegreeMismatch(_))));
    }

    #[test]
    fn forced_root_examples() {
        let (f, q) = forced_root_quotient(&p(&[1, 2, 2, 1])).unwrap();
        assert_eq!((f, q), (vec![ForcedFactor::XPlusOne], p(&[1, 1, 1])));
        let (f, q) = forced_root_quotient(&p(&[-1, 0, 0, 1])).unwrap();
        assert_eq!((f, q), (vec![ForcedFactor::XMinusOne], p(&[1, 1, 1])));
        let (f, q) = forced_root_quotient(&p(&[-1, 0, 1])).unwrap();
        assert_eq!((f, q), (vec![ForcedFactor::XSquaredMinusOne], p(&[1])));
        let (f, q) = forced_root_quotient(&p(&[1, 4, 1])).unwrap();
        assert_eq!((f, q), (vec![], p(&[1, 4, 1])));
        assert!(matches!(forced_root_quotient(&p(&[1, 2, 3])), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn product_examples() {
        let sq = product(&p(&[1, 1]), &p(&[1, 1]));
        assert_eq!(sq, p(&[1, 2, 1]));
        assert!(classify(&sq, 0.0).unwrap().palindromic);
        let anti = product(&p(&[1, 3, 1]), &p(&[-1, 0, 1]));
        assert_eq!(anti, p(&[-1, -3, 0, 3, 1]));
        assert!(classify(&anti, 0.0).unwrap().antipalindromic);
        assert_eq!(product(&p(&[4, 0, 2]), &p(&[1])), p(&[4, 0, 2]));
    }
}
