use std::fmt;

use num_complex::Complex64;

use super::form::BinaryForm;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The matrix `[a b; c d]`.
///
/// On forms it acts by substitution, `f^M(x, y) = f(ax + by, cx + dy)`, so
/// `(f^M)^N = f^(MN)` and the roots of `f^M` are the images of the roots of
/// `f` under the Möbius map of `M⁻¹`.
#[derive(Clone, PartialEq)]
pub struct Moebius<S: Scalar> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
}

impl<S: Scalar> Moebius<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Moebius { a, b, c, d }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Moebius::new(S::from_i64(a), S::from_i64(b), S::from_i64(c), S::from_i64(d))
    }

    pub fn identity() -> Self {
        Moebius::from_i64(1, 0, 0, 1)
    }

    /// `S = [0 -1; 1 0]`, the point map `z ↦ -1/z`.
    pub fn s() -> Self {
        Moebius::from_i64(0, -1, 1, 0)
    }

    /// `T^k = [1 k; 0 1]`, the point map `z ↦ z + k`.
    pub fn t(k: i64) -> Self {
        Moebius::from_i64(1, k, 0, 1)
    }

    pub fn det(&self) -> S {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn mul(&self, o: &Self) -> Self {
        Moebius {
            a: self.a.clone() * o.a.clone() + self.b.clone() * o.c.clone(),
            b: self.a.clone() * o.b.clone() + self.b.clone() * o.d.clone(),
            c: self.c.clone() * o.a.clone() + self.d.clone() * o.c.clone(),
            d: self.c.clone() * o.b.clone() + self.d.clone() * o.d.clone(),
        }
    }

    /// `[d -b; -c a]`, equal to `det · M⁻¹`.
    pub fn adjugate(&self) -> Self {
        Moebius {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let adj = self.adjugate();
        Ok(Moebius {
            a: adj.a / det.clone(),
            b: adj.b / det.clone(),
            c: adj.c / det.clone(),
            d: adj.d / det,
        })
    }

    /// `(az + b) / (cz + d)`; infinity is not representable here.
    pub fn apply_point(&self, z: Complex64) -> Complex64 {
        let (a, b, c, d) = (self.a.to_c64(), self.b.to_c64(), self.c.to_c64(), self.d.to_c64());
        (a * z + b) / (c * z + d)
    }

    pub fn to_float(&self) -> Moebius<Complex64> {
        Moebius::new(self.a.to_c64(), self.b.to_c64(), self.c.to_c64(), self.d.to_c64())
    }

    pub fn entries(&self) -> [&S; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

impl<S: Scalar> fmt::Debug for Moebius<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?} {:?}; {:?} {:?}]", self.a, self.b, self.c, self.d)
    }
}

/// `f(ax + by, cx + dy)`, expanded exactly.
pub fn act<S: Scalar>(f: &BinaryForm<S>, m: &Moebius<S>) -> Result<BinaryForm<S>> {
    if m.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    // the images of x and y as linear forms (coefficient of y, coefficient of x)
    let x = BinaryForm::new(vec![m.b.clone(), m.a.clone()])?;
    let y = BinaryForm::new(vec![m.d.clone(), m.c.clone()])?;
    Ok(f.substitute(&x, &y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Gaussian;

    fn form(c: &[i64]) -> BinaryForm<Gaussian> {
        BinaryForm::from_i64(c).unwrap()
    }

    #[test]
    fn translation_example() {
        // x^2 + y^2 under T gives x^2 + 2xy + 2y^2
        let f = form(&[1, 0, 1]);
        let g = act(&f, &Moebius::t(1)).unwrap();
        assert_eq!(g, form(&[2, 2, 1]));
        let (r, _) = g.roots().unwrap();
        assert!(r.iter().any(|z| (z - Complex64::new(-1.0, 1.0)).norm() < 1e-12));
        assert!(r.iter().any(|z| (z - Complex64::new(-1.0, -1.0)).norm() < 1e-12));
    }

    #[test]
    fn identity_and_s() {
        let f = form(&[3, -1, 4, 1]);
        assert_eq!(act(&f, &Moebius::identity()).unwrap(), f);
        let f = form(&[-1, 0, 1]);
        assert_eq!(act(&f, &Moebius::s()).unwrap(), form(&[1, 0, -1]));
    }

    #[test]
    fn composition_law() {
        let f = form(&[2, -3, 0, 1]);
        let m = Moebius::<Gaussian>::from_i64(2, 1, 1, 1);
        let n = Moebius::<Gaussian>::from_i64(0, -1, 1, 3);
        let lhs = act(&act(&f, &m).unwrap(), &n).unwrap();
        let rhs = act(&f, &m.mul(&n)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn singular_rejected() {
        let m = Moebius::<Gaussian>::from_i64(1, 2, 2, 4);
        assert!(matches!(act(&form(&[1, 1]), &m), Err(Error::SingularMatrix)));
        assert!(matches!(m.inverse(), Err(Error::SingularMatrix)));
    }

    #[test]
    fn roots_move_by_inverse() {
        // single root at 2; after M it sits at M⁻¹(2)
        let f = form(&[-2, 1]);
        let m = Moebius::<Gaussian>::from_i64(1, 1, 0, 1);
        let g = act(&f, &m).unwrap();
        let (r, _) = g.roots().unwrap();
        let expect = m.inverse().unwrap().apply_point(Complex64::new(2.0, 0.0));
        assert!((r[0] - expect).norm() < 1e-12);
    }
}
