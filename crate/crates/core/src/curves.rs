//! Normal forms `y^n = f(x)` and `y^n = x·f(x)` of superelliptic curves
//! whose reduced automorphism group is dihedral, A4, S4 or A5.
//!
//! Cases are numbered from 1 in the order of the standard case lists:
//!
//! | group | case | right-hand side |
//! |-------|------|-----------------|
//! | D(m)  | 1 | F |
//! |       | 2 | (x^m - 1) F |
//! |       | 3 | x F |
//! |       | 4 | (x^2m - 1) F |
//! |       | 5 | x (x^m - 1) F |
//! |       | 6 | x (x^2m - 1) F |
//! | A4    | 1 | G |
//! |       | 2 | ψ G |
//! |       | 3 | (x^8 + 14x^4 + 1) G |
//! |       | 4 | x (x^4 - 1) G |
//! |       | 5 | x (x^4 - 1) ψ G |
//! |       | 6 | x (x^4 - 1)(x^8 + 14x^4 + 1) G |
//! | S4    | 1 | M |
//! |       | 2 | (x^8 + 14x^4 + 1) M |
//! |       | 3 | x (x^4 - 1) M |
//! |       | 4 | (x^8 + 14x^4 + 1) x (x^4 - 1) M |
//! |       | 5 | (x^12 - 33x^8 - 33x^4 + 1) M |
//! |       | 6 | (x^12 - 33x^8 - 33x^4 + 1)(x^8 + 14x^4 + 1) M |
//! |       | 7 | (x^12 - 33x^8 - 33x^4 + 1) x (x^4 - 1) M |
//! |       | 8 | (x^12 - 33x^8 - 33x^4 + 1)(x^8 + 14x^4 + 1) x (x^4 - 1) M |
//! | A5    | 1 | Λ |
//! |       | 2 | x (x^10 + 11x^5 - 1) Λ |
//! |       | 3 | x (x^20 - 228x^15 + 494x^10 + 228x^5 + 1)(x^10 + 11x^5 - 1) Λ |
//! |       | 4 | (x^20 - 228x^15 + 494x^10 + 228x^5 + 1) Λ |
//! |       | 5 | Q Λ |
//! |       | 6 | x (x^10 + 11x^5 - 1) ψ Λ |
//! |       | 7 | (x^20 - 228x^15 + 494x^10 + 228x^5 + 1) ψ Λ |
//! |       | 8 | (x^20 - 228x^15 + 494x^10 + 228x^5 + 1) x (x^10 + 11x^5 - 1) ψ Λ |
//!
//! with `ψ = x^4 + 2i√3 x^2 + 1` and the parametric products
//! `F = Π (x^2m + λ x^m + 1)`, `G = Π (x^12 - λx^10 - 33x^8 + 2λx^6 - 33x^4 - λx^2 + 1)`,
//! `M = Π (x^24 + λx^20 + (759 - 4λ)x^16 + 2(3λ + 1228)x^12 + (759 - 4λ)x^8 + λx^4 + 1)`
//! and `Λ = Π (x^60 + a_1 x^55 + … + a_6 x^30 - a_5 x^25 + … - a_1 x^5 + 1)`.
//! A standalone `x` is kept in `x_factor`, never folded into `f`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::polycore::classify;
use crate::scalar::{int, Eisenstein, Scalar};

/// A coefficient field holding `2i√3`.
pub trait CurveField: Scalar {
    fn two_i_sqrt3() -> Self;
}

impl CurveField for Eisenstein {
    fn two_i_sqrt3() -> Self {
        Eisenstein::new(int(0), int(2))
    }
}

impl CurveField for Complex64 {
    fn two_i_sqrt3() -> Self {
        Complex64::new(0.0, 2.0 * 3f64.sqrt())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Dihedral(usize),
    A4,
    S4,
    A5,
}

impl Group {
    pub fn case_count(self) -> usize {
        match self {
            Group::Dihedral(_) | Group::A4 => 6,
            Group::S4 | Group::A5 => 8,
        }
    }

    /// `D`, `A4`, `S4` or `A5`, without the dihedral parameter.
    pub fn family(self) -> &'static str {
        match self {
            Group::Dihedral(_) => "D",
            Group::A4 => "A4",
            Group::S4 => "S4",
            Group::A5 => "A5",
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Dihedral(m) => write!(f, "D{m}"),
            g => f.write_str(g.family()),
        }
    }
}

impl FromStr for Group {
    type Err = Error;

    /// `A4`, `S4`, `A5`, or `D<m>` such as `D3`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A4" => Ok(Group::A4),
            "S4" => Ok(Group::S4),
            "A5" => Ok(Group::A5),
            other => other
                .strip_prefix('D')
                .and_then(|m| m.parse().ok())
                .map(Group::Dihedral)
                .ok_or_else(|| Error::Parse(format!("unknown group {s:?}"))),
        }
    }
}

impl Serialize for Group {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveSpec<S: Scalar> {
    pub level: usize,
    pub group: Group,
    /// 1-based position in the group's case list.
    pub case_index: usize,
    /// One parameter per parametric factor; `delta = lambdas.len()`.
    pub lambdas: Vec<S>,
}

impl<S: Scalar> CurveSpec<S> {
    pub fn delta(&self) -> usize {
        self.lambdas.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Factor<S: Scalar> {
    pub name: String,
    pub poly: Poly<S>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurveEquation<S: Scalar> {
    pub level: usize,
    pub group: Group,
    pub case_index: usize,
    pub rhs: Poly<S>,
    /// `y^n = x·f(x)` rather than `y^n = f(x)`.
    pub x_factor: bool,
    /// The factors whose product is `rhs`, parametric products expanded.
    pub factors: Vec<Factor<S>>,
}

fn sparse<S: Scalar>(terms: &[(usize, S)]) -> Poly<S> {
    let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut c = vec![S::zero(); deg + 1];
    for (k, v) in terms {
        c[*k] = c[*k].clone() + v.clone();
    }
    Poly::new(c)
}

fn int_sparse<S: Scalar>(terms: &[(usize, i64)]) -> Poly<S> {
    sparse(&terms.iter().map(|&(k, v)| (k, S::from_i64(v))).collect::<Vec<_>>())
}

fn n<S: Scalar>(v: i64) -> S {
    S::from_i64(v)
}

pub fn psi<S: CurveField>() -> Poly<S> {
    sparse(&[(0, S::one()), (2, S::two_i_sqrt3()), (4, S::one())])
}

pub fn octahedral_factor<S: Scalar>() -> Poly<S> {
    int_sparse(&[(0, 1), (4, 14), (8, 1)])
}

pub fn tetrahedral_factor<S: Scalar>() -> Poly<S> {
    int_sparse(&[(0, 1), (4, -33), (8, -33), (12, 1)])
}

pub fn x4_minus_1<S: Scalar>() -> Poly<S> {
    int_sparse(&[(0, -1), (4, 1)])
}

pub fn icosahedral_small<S: Scalar>() -> Poly<S> {
    int_sparse(&[(0, -1), (5, 11), (10, 1)])
}

pub fn icosahedral_large<S: Scalar>() -> Poly<S> {
    int_sparse(&[(0, 1), (5, 228), (10, 494), (15, -228), (20, 1)])
}

pub fn q_factor<S: Scalar>() -> Poly<S> {
    int_sparse(&[(0, 1), (5, -522), (10, -10005), (20, -10005), (25, 522), (30, 1)])
}

/// `x^2m + λx^m + 1`.
pub fn dihedral_factor<S: Scalar>(m: usize, lambda: &S) -> Poly<S> {
    sparse(&[(0, S::one()), (m, lambda.clone()), (2 * m, S::one())])
}

/// `x^12 - λx^10 - 33x^8 + 2λx^6 - 33x^4 - λx^2 + 1`.
pub fn a4_factor<S: Scalar>(l: &S) -> Poly<S> {
    sparse(&[
        (0, S::one()),
        (2, -l.clone()),
        (4, n(-33)),
        (6, n::<S>(2) * l.clone()),
        (8, n(-33)),
        (10, -l.clone()),
        (12, S::one()),
    ])
}

/// `x^24 + λx^20 + (759 - 4λ)x^16 + 2(3λ + 1228)x^12 + (759 - 4λ)x^8 + λx^4 + 1`.
pub fn s4_factor<S: Scalar>(l: &S) -> Poly<S> {
    let outer = n::<S>(759) - n::<S>(4) * l.clone();
    let middle = n::<S>(2) * (n::<S>(3) * l.clone() + n(1228));
    sparse(&[
        (0, S::one()),
        (4, l.clone()),
        (8, outer.clone()),
        (12, middle),
        (16, outer),
        (20, l.clone()),
        (24, S::one()),
    ])
}

/// The coefficients `a_1, …, a_6` of the degree-60 factor.
pub fn a5_coefficients<S: Scalar>(l: &S) -> [S; 6] {
    let lin = |a: i64, b: i64| n::<S>(a) * l.clone() + n(b);
    [
        lin(1, -684),
        lin(55, 157434),
        lin(1205, -12527460),
        lin(13090, 77460495),
        lin(69585, -130689144),
        lin(134761, -33211924),
    ]
}

/// `x^60 + a_1x^55 + a_2x^50 + a_3x^45 + a_4x^40 + a_5x^35 + a_6x^30 - a_5x^25
/// + a_4x^20 - a_3x^15 + a_2x^10 - a_1x^5 + 1`.
pub fn a5_factor<S: Scalar>(l: &S) -> Poly<S> {
    let [a1, a2, a3, a4, a5, a6] = a5_coefficients(l);
    sparse(&[
        (60, S::one()),
        (55, a1.clone()),
        (50, a2.clone()),
        (45, a3.clone()),
        (40, a4.clone()),
        (35, a5.clone()),
        (30, a6),
        (25, -a5),
        (20, a4),
        (15, -a3),
        (10, a2),
        (5, -a1),
        (0, S::one()),
    ])
}

fn factor<S: Scalar>(name: impl Into<String>, poly: Poly<S>) -> Factor<S> {
    Factor {
        name: name.into(),
        poly,
    }
}

fn assemble<S: Scalar>(spec: &CurveSpec<S>, x_factor: bool, mut factors: Vec<Factor<S>>, param: Vec<Factor<S>>) -> CurveEquation<S> {
    factors.extend(param);
    let rhs = factors.iter().fold(Poly::one(), |acc, f| &acc * &f.poly);
    CurveEquation {
        level: spec.level,
        group: spec.group,
        case_index: spec.case_index,
        rhs,
        x_factor,
        factors,
    }
}

fn check_case<S: Scalar>(spec: &CurveSpec<S>, group: &str) -> Result<()> {
    if spec.case_index == 0 || spec.case_index > spec.group.case_count() {
        return Err(Error::BadCaseIndex {
            group: group.into(),
            index: spec.case_index,
        });
    }
    if spec.level < 2 {
        return Err(Error::BadParameters(format!("level {} must be at least 2", spec.level)));
    }
    Ok(())
}

fn wrong_group(expected: &str, got: Group) -> Error {
    Error::BadParameters(format!("expected group {expected}, got {got}"))
}

pub fn dihedral_form<S: Scalar>(spec: &CurveSpec<S>) -> Result<CurveEquation<S>> {
    let Group::Dihedral(m) = spec.group else {
        return Err(wrong_group("D(m)", spec.group));
    };
    if m < 2 {
        return Err(Error::BadParameters(format!("dihedral parameter m = {m} must be at least 2")));
    }
    check_case(spec, &spec.group.to_string())?;
    let param: Vec<Factor<S>> = spec
        .lambdas
        .iter()
        .map(|l| factor(format!("x^{}+l*x^{m}+1", 2 * m), dihedral_factor(m, l)))
        .collect();
    let xm = || factor(format!("x^{m}-1"), int_sparse(&[(0, -1), (m, 1)]));
    let x2m = || factor(format!("x^{}-1", 2 * m), int_sparse(&[(0, -1), (2 * m, 1)]));
    let (x_factor, fixed) = match spec.case_index {
        1 => (false, vec![]),
        2 => (false, vec![xm()]),
        3 => (true, vec![]),
        4 => (false, vec![x2m()]),
        5 => (true, vec![xm()]),
        _ => (true, vec![x2m()]),
    };
    Ok(assemble(spec, x_factor, fixed, param))
}

pub fn a4_form<S: CurveField>(spec: &CurveSpec<S>) -> Result<CurveEquation<S>> {
    if spec.group != Group::A4 {
        return Err(wrong_group("A4", spec.group));
    }
    check_case(spec, "A4")?;
    let param = spec.lambdas.iter().map(|l| factor("G", a4_factor(l))).collect();
    let psi_f = || factor("x^4+2i*sqrt(3)*x^2+1", psi());
    let oct = || factor("x^8+14x^4+1", octahedral_factor());
    let x4 = || factor("x^4-1", x4_minus_1());
    let (x_factor, fixed) = match spec.case_index {
        1 => (false, vec![]),
        2 => (false, vec![psi_f()]),
        3 => (false, vec![oct()]),
        4 => (true, vec![x4()]),
        5 => (true, vec![x4(), psi_f()]),
        _ => (true, vec![x4(), oct()]),
    };
    Ok(assemble(spec, x_factor, fixed, param))
}

pub fn s4_form<S: Scalar>(spec: &CurveSpec<S>) -> Result<CurveEquation<S>> {
    if spec.group != Group::S4 {
        return Err(wrong_group("S4", spec.group));
    }
    check_case(spec, "S4")?;
    let param: Vec<Factor<S>> = spec.lambdas.iter().map(|l| factor("M", s4_factor(l))).collect();
    for f in &param {
        if !classify(&f.poly, 0.0)?.palindromic {
            return Err(Error::ClaimViolated {
                claim: "M factor is palindromic".into(),
                index: 0,
            });
        }
    }
    let oct = || factor("x^8+14x^4+1", octahedral_factor());
    let x4 = || factor("x^4-1", x4_minus_1());
    let tet = || factor("x^12-33x^8-33x^4+1", tetrahedral_factor());
    let (x_factor, fixed) = match spec.case_index {
        1 => (false, vec![]),
        2 => (false, vec![oct()]),
        3 => (true, vec![x4()]),
        4 => (true, vec![oct(), x4()]),
        5 => (false, vec![tet()]),
        6 => (false, vec![tet(), oct()]),
        7 => (true, vec![tet(), x4()]),
        _ => (true, vec![tet(), oct(), x4()]),
    };
    Ok(assemble(spec, x_factor, fixed, param))
}

pub fn a5_form<S: CurveField>(spec: &CurveSpec<S>) -> Result<CurveEquation<S>> {
    if spec.group != Group::A5 {
        return Err(wrong_group("A5", spec.group));
    }
    check_case(spec, "A5")?;
    let param: Vec<Factor<S>> = spec.lambdas.iter().map(|l| factor("Lambda", a5_factor(l))).collect();
    for f in &param {
        if !classify(&f.poly, 0.0)?.quasi_palindromic {
            return Err(Error::ClaimViolated {
                claim: "Lambda factor is quasi-palindromic".into(),
                index: 0,
            });
        }
    }
    let small = || factor("x^10+11x^5-1", icosahedral_small());
    let large = || factor("x^20-228x^15+494x^10+228x^5+1", icosahedral_large());
    let q = || factor("Q", q_factor());
    let psi_f = || factor("x^4+2i*sqrt(3)*x^2+1", psi());
    let (x_factor, fixed) = match spec.case_index {
        1 => (false, vec![]),
        2 => (true, vec![small()]),
        3 => (true, vec![large(), small()]),
        4 => (false, vec![large()]),
        5 => (false, vec![q()]),
        6 => (true, vec![small(), psi_f()]),
        7 => (false, vec![large(), psi_f()]),
        _ => (true, vec![large(), small(), psi_f()]),
    };
    Ok(assemble(spec, x_factor, fixed, param))
}

/// Dispatch on the spec's group.
pub fn curve_form<S: CurveField>(spec: &CurveSpec<S>) -> Result<CurveEquation<S>> {
    match spec.group {
        Group::Dihedral(_) => dihedral_form(spec),
        Group::A4 => a4_form(spec),
        Group::S4 => s4_form(spec),
        Group::A5 => a5_form(spec),
    }
}

/// Symmetry class of a polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveClass {
    Palindromic,
    Antipalindromic,
    QuasiPalindromic,
    None,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub group: Group,
    pub case_index: usize,
    pub claim: &'static str,
    pub class: CurveClass,
    /// Factors that make the product antipalindromic.
    pub antipalindromic_factors: Vec<String>,
    /// Class predicted from the factor classes by the product rules.
    pub predicted: CurveClass,
    pub prediction_matches: bool,
}

fn class_of<S: Scalar>(p: &Poly<S>) -> Result<CurveClass> {
    let c = classify(p, 0.0)?;
    Ok(if c.palindromic {
        CurveClass::Palindromic
    } else if c.antipalindromic {
        CurveClass::Antipalindromic
    } else if c.quasi_palindromic {
        CurveClass::QuasiPalindromic
    } else {
        CurveClass::None
    })
}

/// Sign `ε` with `x^n p(1/x) = ε p(-x)`, if one exists.
pub fn reflection_sign<S: Scalar>(p: &Poly<S>) -> Option<i64> {
    let n = p.degree()?;
    let a = p.coeffs();
    let neg = |i: usize| if i % 2 == 0 { a[i].clone() } else { -a[i].clone() };
    [1i64, -1].into_iter().find(|&e| {
        (0..=n).all(|i| a[n - i] == S::from_i64(e) * neg(i))
    })
}

fn first_violation<S: Scalar>(p: &Poly<S>, quasi: bool) -> usize {
    let n = p.degree().unwrap_or(0);
    let a = p.coeffs();
    (0..=n)
        .find(|&i| {
            if quasi {
                a[i].norm_sqr() != a[n - i].norm_sqr()
            } else {
                a[i] != a[n - i] && a[i] != -a[n - i].clone()
            }
        })
        .unwrap_or(0)
}

/// Classify `f` and check the symmetry claim for the group: palindromic or
/// antipalindromic for D(m), A4 and S4, quasi-palindromic for A5.
pub fn verify_theorem<S: Scalar>(eq: &CurveEquation<S>) -> Result<TheoremReport> {
    let class = class_of(&eq.rhs)?;
    let quasi = eq.group == Group::A5;
    let (claim, holds) = if quasi {
        (
            "quasi-palindromic",
            class != CurveClass::None,
        )
    } else {
        (
            "palindromic or antipalindromic",
            matches!(class, CurveClass::Palindromic | CurveClass::Antipalindromic),
        )
    };
    if !holds {
        return Err(Error::ClaimViolated {
            claim: format!("{} case {}: f is {claim}", eq.group, eq.case_index),
            index: first_violation(&eq.rhs, quasi),
        });
    }

    let mut antipalindromic_factors = Vec::new();
    let mut anti_count = 0usize;
    let mut all_symmetric = true;
    let mut all_reflective = true;
    for f in &eq.factors {
        match class_of(&f.poly)? {
            CurveClass::Palindromic => {}
            CurveClass::Antipalindromic => {
                anti_count += 1;
                antipalindromic_factors.push(f.name.clone());
            }
            _ => all_symmetric = false,
        }
        if reflection_sign(&f.poly).is_none() {
            all_reflective = false;
        }
    }
    let predicted = if all_symmetric {
        if anti_count % 2 == 0 {
            CurveClass::Palindromic
        } else {
            CurveClass::Antipalindromic
        }
    } else if all_reflective {
        CurveClass::QuasiPalindromic
    } else {
        CurveClass::None
    };
    let prediction_matches = predicted == class
        || (predicted == CurveClass::QuasiPalindromic && class != CurveClass::None);
    Ok(TheoremReport {
        group: eq.group,
        case_index: eq.case_index,
        claim,
        class,
        antipalindromic_factors,
        predicted,
        prediction_matches,
    })
}

/// Whether `gcd(f, f′)` is constant, computed exactly.
pub fn is_squarefree<S: Scalar>(f: &Poly<S>) -> bool {
    let mut a = f.clone();
    let mut b = f.derivative();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        let r = match r.leading() {
            Some(l) => {
                let inv = S::one() / l.clone();
                r.scale(&inv)
            }
            None => r,
        };
        a = b;
        b = r;
    }
    a.degree() == Some(0)
}

/// Every listed constant factor with its expected class.
pub fn constant_factors<S: CurveField>() -> Vec<(Factor<S>, CurveClass)> {
    vec![
        (factor("x^8+14x^4+1", octahedral_factor()), CurveClass::Palindromic),
        (factor("x^12-33x^8-33x^4+1", tetrahedral_factor()), CurveClass::Palindromic),
        (factor("Q", q_factor()), CurveClass::QuasiPalindromic),
        (factor("x^4+2i*sqrt(3)*x^2+1", psi()), CurveClass::Palindromic),
        (factor("x^20-228x^15+494x^10+228x^5+1", icosahedral_large()), CurveClass::QuasiPalindromic),
        (factor("x^10+11x^5-1", icosahedral_small()), CurveClass::QuasiPalindromic),
        (factor("x^4-1", x4_minus_1()), CurveClass::Antipalindromic),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;


    fn e(v: i64) -> Eisenstein {
        Eisenstein::from_i64(v)
    }

    fn spec(group: Group, case_index: usize, lambdas: &[i64]) -> CurveSpec<Eisenstein> {
        CurveSpec {
            level: 2,
            group,
            case_index,
            lambdas: lambdas.iter().map(|&l| e(l)).collect(),
        }
    }

    fn ints(c: &[i64]) -> Poly<Eisenstein> {
        Poly::from_i64(c)
    }

    #[test]
    fn dihedral_examples() {
        let eq = dihedral_form(&spec(Group::Dihedral(3), 1, &[5])).unwrap();
        assert_eq!(eq.rhs, ints(&[1, 0, 0, 5, 0, 0, 1]));
        assert_eq!(verify_theorem(&eq).unwrap().class, CurveClass::Palindromic);

        let eq = dihedral_form(&spec(Group::Dihedral(2), 2, &[0])).unwrap();
        assert_eq!(eq.rhs, &ints(&[-1, 0, 1]) * &ints(&[1, 0, 0, 0, 1]));
        assert_eq!(verify_theorem(&eq).unwrap().class, CurveClass::Antipalindromic);

        let eq = dihedral_form(&spec(Group::Dihedral(2), 4, &[])).unwrap();
        assert_eq!(eq.rhs, ints(&[-1, 0, 0, 0, 1]));
        assert!(!eq.x_factor);
        assert!(matches!(dihedral_form(&spec(Group::Dihedral(2), 7, &[])), Err(Error::BadCaseIndex { index: 7, .. })));
    }

    #[test]
    fn a4_examples() {
        let eq = a4_form(&spec(Group::A4, 1, &[0])).unwrap();
        assert_eq!(eq.rhs, ints(&[1, 0, 0, 0, -33, 0, 0, 0, -33, 0, 0, 0, 1]));
        assert_eq!(verify_theorem(&eq).unwrap().class, CurveClass::Palindromic);
        let eq = a4_form(&spec(Group::A4, 3, &[])).unwrap();
        assert_eq!(eq.rhs, ints(&[1, 0, 0, 0, 14, 0, 0, 0, 1]));
        let eq = a4_form(&spec(Group::A4, 4, &[])).unwrap();
        assert!(eq.x_factor);
        assert_eq!(eq.rhs, ints(&[-1, 0, 0, 0, 1]));
        assert_eq!(verify_theorem(&eq).unwrap().class, CurveClass::Antipalindromic);
        let eq = a4_form(&spec(Group::A4, 2, &[])).unwrap();
        assert_eq!(eq.rhs.coeff(2), Eisenstein::new(int(0), int(2)));
        assert_eq!(verify_theorem(&eq).unwrap().class, CurveClass::Palindromic);
    }

    #[test]
    fn s4_examples() {
        let eq = s4_form(&spec(Group::S4, 1, &[0])).unwrap();
        let mut want = vec![0i64; 25];
        for (k, v) in [(0, 1), (8, 759), (12, 2456), (16, 759), (24, 1)] {
            want[k] = v;
        }
        assert_eq!(eq.rhs, ints(&want));
        let eq = s4_form(&spec(Group::S4, 5, &[])).unwrap();
        assert_eq!(eq.rhs, tetrahedral_factor());
        let eq = s4_form(&spec(Group::S4, 3, &[])).unwrap();
        assert!(eq.x_factor);
        assert_eq!(eq.rhs, x4_minus_1());
        let r = verify_theorem(&eq).unwrap();
        assert_eq!(r.class, CurveClass::Antipalindromic);
        assert_eq!(r.antipalindromic_factors, vec!["x^4-1".to_string()]);
    }

    #[test]
    fn a5_examples() {
        let eq = a5_form(&spec(Group::A5, 1, &[684])).unwrap();
        assert!(eq.rhs.coeff(55).is_zero() && eq.rhs.coeff(5).is_zero());
        assert_eq!(eq.rhs.coeff(50), e(55 * 684 + 157434));
        assert_eq!(eq.rhs.coeff(25), -e(69585 * 684 - 130689144));
        assert_eq!(verify_theorem(&eq).unwrap().class, CurveClass::QuasiPalindromic);

        let q = q_factor::<Eisenstein>();
        assert!(classify(&q, 0.0).unwrap().quasi_palindromic);
        assert!(!classify(&q, 0.0).unwrap().palindromic);

        let eq = a5_form(&spec(Group::A5, 2, &[])).unwrap();
        assert!(eq.x_factor);
        assert_eq!(eq.rhs, icosahedral_small());
        assert!(verify_theorem(&eq).unwrap().prediction_matches);
    }

    #[test]
    fn constant_factor_classes() {
        for (f, class) in constant_factors::<Eisenstein>() {
            assert_eq!(class_of(&f.poly).unwrap(), class, "{}", f.name);
        }
    }

    #[test]
    fn verify_rejects_violations() {
        let eq = CurveEquation {
            level: 2,
            group: Group::S4,
            case_index: 1,
            rhs: ints(&[1, 2, 3]),
            x_factor: false,
            factors: vec![],
        };
        assert!(matches!(verify_theorem(&eq), Err(Error::ClaimViolated { index: 0, .. })));
    }

    #[test]
    fn group_parsing() {
        assert_eq!("d5".parse::<Group>().unwrap(), Group::Dihedral(5));
        assert_eq!("A5".parse::<Group>().unwrap(), Group::A5);
        assert!("X7".parse::<Group>().is_err());
        assert_eq!(Group::Dihedral(4).to_string(), "D4");
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree(&ints(&[1, 0, 0, 5, 0, 0, 1])));
        assert!(!is_squarefree(&ints(&[1, 0, 2, 0, 1])));
        // λ = ±2 makes x^2m + λx^m + 1 a square
        let eq = dihedral_form(&spec(Group::Dihedral(2), 1, &[2])).unwrap();
        assert!(!is_squarefree(&eq.rhs));
    }

    #[test]
    fn float_mode_matches_exact() {
        let exact = a4_form(&spec(Group::A4, 5, &[3])).unwrap();
        let float = a4_form(&CurveSpec {
            level: 2,
            group: Group::A4,
            case_index: 5,
            lambdas: vec![Complex64::new(3.0, 0.0)],
        })
        .unwrap();
        for (a, b) in exact.rhs.coeffs().iter().zip(float.rhs.coeffs()) {
            assert!((a.to_c64() - b).norm() < 1e-9);
        }
    }
}
