//! Exact arithmetic in ℚ(√q).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::scalar::{format_rational, rational_to_f64};

/// `a + b·√q`. When `q` is a perfect square the surd part is folded into
/// `a`, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    pub a: BigRational,
    pub b: BigRational,
    q: u64,
}

fn exact_sqrt(q: u64) -> Option<u64> {
    let r = (q as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|s| s * s == q)
}

impl Surd {
    pub fn new(a: BigRational, b: BigRational, q: u64) -> Self {
        match exact_sqrt(q) {
            Some(r) => Surd {
                a: a + b * BigRational::from_integer(BigInt::from(r)),
                b: BigRational::zero(),
                q,
            },
            None => Surd { a, b, q },
        }
    }

    pub fn rational(a: BigRational, q: u64) -> Self {
        Surd::new(a, BigRational::zero(), q)
    }

    pub fn sqrt_q(q: u64) -> Self {
        Surd::new(BigRational::zero(), BigRational::one(), q)
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.b.is_zero().then_some(&self.a)
    }

    fn q_rat(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.q))
    }

    /// `a - b√q`.
    pub fn conjugate(&self) -> Self {
        Surd { a: self.a.clone(), b: -self.b.clone(), q: self.q }
    }

    pub fn recip(&self) -> Self {
        let norm = &self.a * &self.a - &self.b * &self.b * self.q_rat();
        Surd { a: &self.a / &norm, b: -&self.b / &norm, q: self.q }
    }

    /// `q^(k/2)` for any integer `k`.
    pub fn q_half_power(q: u64, k: i64) -> Self {
        let base = BigRational::from_integer(BigInt::from(q));
        let half = k.div_euclid(2);
        let p = if half >= 0 {
            num_traits::pow(base, half as usize)
        } else {
            num_traits::pow(base.recip(), (-half) as usize)
        };
        if k.rem_euclid(2) == 0 {
            Surd::rational(p, q)
        } else {
            Surd::new(BigRational::zero(), p, q)
        }
    }

    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&BigRational::zero());
        let sb = self.b.cmp(&BigRational::zero());
        if sa == sb || sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal {
            return sb;
        }
        // opposite signs: compare a² with q·b²
        let a2 = &self.a * &self.a;
        let b2q = &self.b * &self.b * self.q_rat();
        match a2.cmp(&b2q) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * (self.q as f64).sqrt()
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return f.write_str(&format_rational(&self.a));
        }
        let surd = if self.b.is_one() {
            format!("sqrt({})", self.q)
        } else if self.b == -BigRational::one() {
            format!("-sqrt({})", self.q)
        } else {
            format!("{}*sqrt({})", format_rational(&self.b), self.q)
        };
        if self.a.is_zero() {
            f.write_str(&surd)
        } else if self.b.is_negative() {
            write!(f, "{}{}", format_rational(&self.a), surd)
        } else {
            write!(f, "{}+{}", format_rational(&self.a), surd)
        }
    }
}

impl Serialize for Surd {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Add for Surd {
    type Output = Surd;
    fn add(self, o: Surd) -> Surd {
        debug_assert_eq!(self.q, o.q);
        Surd { a: self.a + o.a, b: self.b + o.b, q: self.q }
    }
}

impl Sub for Surd {
    type Output = Surd;
    fn sub(self, o: Surd) -> Surd {
        self + (-o)
    }
}

impl Neg for Surd {
    type Output = Surd;
    fn neg(self) -> Surd {
        Surd { a: -self.a, b: -self.b, q: self.q }
    }
}

impl Mul for Surd {
    type Output = Surd;
    fn mul(self, o: Surd) -> Surd {
        debug_assert_eq!(self.q, o.q);
        let q = self.q_rat();
        Surd {
            a: &self.a * &o.a + &self.b * &o.b * q,
            b: &self.a * &o.b + &self.b * &o.a,
            q: self.q,
        }
    }
}

impl Div for Surd {
    type Output = Surd;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Surd) -> Surd {
        self * o.recip()
    }
}
