//! Coefficient fields.
//!
//! Polynomials are generic over [`Scalar`]. Two families implement it:
//!
//! * [`ImagQuad<D>`], exact elements `a + b·√D` of an imaginary quadratic
//!   field with `a, b ∈ ℚ`. `D = -1` gives the Gaussian rationals ℚ(i)
//!   ([`Gaussian`], the default exact mode); `D = -3` gives ℚ(√−3)
//!   ([`Eisenstein`]), which holds the `2i√3` coefficients of the curve
//!   normal forms exactly.
//! * [`Complex64`], the float mode. Every predicate that compares float
//!   coefficients takes an explicit tolerance.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True when equality is decided exactly (tolerances are ignored).
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_rational(r: &BigRational) -> Self;
    fn conj(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn to_c64(&self) -> Complex64;

    /// `self · conj(self)`, a real element of the field.
    fn norm_sqr(&self) -> Self {
        self.clone() * self.conj()
    }

    fn abs_f64(&self) -> f64 {
        self.to_c64().norm()
    }

    /// Whether the imaginary part vanishes (within `tol` in float mode).
    fn is_real(&self, tol: f64) -> bool;

    /// Compare real parts. Float mode treats differences within `tol` as equal.
    fn re_cmp(&self, other: &Self, tol: f64) -> Ordering;

    /// `i`, when the field contains it.
    fn imag_unit() -> Option<Self>;

    /// The exact rational value of a real exact scalar; `None` otherwise.
    fn as_rational(&self) -> Option<BigRational> {
        None
    }

    /// Equality, exact or within `tol · scale` in float mode.
    fn approx_eq(&self, other: &Self, tol: f64, scale: f64) -> bool {
        if Self::EXACT {
            self == other
        } else {
            (self.clone() - other.clone()).abs_f64() <= tol * scale
        }
    }
}

// ---------------------------------------------------------------------------
// Rational helpers

/// Parse an exact rational from `"3"`, `"-1.05"`, `"21/20"` or `"1.5e-3"`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = s[pos + 1..].parse().map_err(|_| bad())?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut value = BigRational::from_integer(BigInt::from_str(&all_digits).map_err(|_| bad())?);
    let scale = exponent - frac_part.len() as i64;
    let ten = BigRational::from_integer(BigInt::from(10));
    if scale >= 0 {
        value *= num_traits::pow(ten, scale as usize);
    } else {
        value /= num_traits::pow(ten, (-scale) as usize);
    }
    Ok(if negative { -value } else { value })
}

/// Canonical string: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

// ---------------------------------------------------------------------------
// Exact imaginary quadratic fields

/// `re + im·√D` with rational parts; `D` is a negative squarefree integer.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ImagQuad<const D: i64> {
    pub re: BigRational,
    pub im: BigRational,
}

/// ℚ(i): exact complex rationals.
pub type Gaussian = ImagQuad<-1>;
/// ℚ(√−3).
pub type Eisenstein = ImagQuad<-3>;

impl<const D: i64> ImagQuad<D> {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        ImagQuad { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        ImagQuad {
            re,
            im: BigRational::zero(),
        }
    }

    /// The generator `√D`.
    pub fn sqrt_d() -> Self {
        ImagQuad {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    /// Field norm `re² − D·im²` (equal to |z|²).
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re - BigRational::from_integer(BigInt::from(D)) * &self.im * &self.im
    }

    pub fn field_name() -> String {
        match D {
            -1 => "Q(i)".to_string(),
            _ => format!("Q(sqrt({D}))"),
        }
    }
}

impl<const D: i64> fmt::Debug for ImagQuad<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const D: i64> fmt::Display for ImagQuad<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = if D == -1 { "i".to_string() } else { format!("√{D}") };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.re)),
            (true, false) => write!(f, "{}{unit}", format_rational(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(
                    f,
                    "{} {sign} {}{unit}",
                    format_rational(&self.re),
                    format_rational(&self.im.abs())
                )
            }
        }
    }
}

impl<const D: i64> Add for ImagQuad<D> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        ImagQuad {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl<const D: i64> Sub for ImagQuad<D> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        ImagQuad {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl<const D: i64> Mul for ImagQuad<D> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return ImagQuad::real(self.re * o.re);
        }
        let d = BigRational::from_integer(BigInt::from(D));
        ImagQuad {
            re: &self.re * &o.re + d * &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl<const D: i64> Div for ImagQuad<D> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        assert!(!o.is_zero(), "division by zero in {}", Self::field_name());
        if o.im.is_zero() {
            return ImagQuad {
                re: self.re / &o.re,
                im: self.im / o.re,
            };
        }
        let n = o.norm();
        let p = self * o.conj();
        ImagQuad {
            re: p.re / &n,
            im: p.im / n,
        }
    }
}

impl<const D: i64> Neg for ImagQuad<D> {
    type Output = Self;
    fn neg(self) -> Self {
        ImagQuad {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl<const D: i64> Scalar for ImagQuad<D> {
    const EXACT: bool = true;

    fn zero() -> Self {
        ImagQuad::real(BigRational::zero())
    }
    fn one() -> Self {
        ImagQuad::real(BigRational::one())
    }
    fn from_i64(v: i64) -> Self {
        ImagQuad::real(int(v))
    }
    fn from_rational(r: &BigRational) -> Self {
        ImagQuad::real(r.clone())
    }
    fn conj(&self) -> Self {
        ImagQuad {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(
            rational_to_f64(&self.re),
            rational_to_f64(&self.im) * ((-D) as f64).sqrt(),
        )
    }
    fn norm_sqr(&self) -> Self {
        ImagQuad::real(self.norm())
    }
    fn imag_unit() -> Option<Self> {
        (D == -1).then(|| ImagQuad::new(BigRational::zero(), BigRational::one()))
    }

    fn as_rational(&self) -> Option<BigRational> {
        self.im.is_zero().then(|| self.re.clone())
    }

    fn is_real(&self, _tol: f64) -> bool {
        self.im.is_zero()
    }
    fn re_cmp(&self, other: &Self, _tol: f64) -> Ordering {
        self.re.cmp(&other.re)
    }
}

// ---------------------------------------------------------------------------
// Float mode

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_i64(v: i64) -> Self {
        Complex64::new(v as f64, 0.0)
    }
    fn from_rational(r: &BigRational) -> Self {
        Complex64::new(rational_to_f64(r), 0.0)
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn to_c64(&self) -> Complex64 {
        *self
    }
    fn imag_unit() -> Option<Self> {
        Some(Complex64::i())
    }

    fn is_real(&self, tol: f64) -> bool {
        self.im.abs() <= tol * self.norm().max(1.0)
    }
    fn re_cmp(&self, other: &Self, tol: f64) -> Ordering {
        let diff = self.re - other.re;
        if diff.abs() <= tol * self.re.abs().max(other.re.abs()).max(1.0) {
            Ordering::Equal
        } else if diff < 0.0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}
