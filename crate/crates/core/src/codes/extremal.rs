//! Types I–IV, the Mallows–Sloane–Duursma bound, extremal enumerators and
//! the scan of the conjectures on their zeta polynomials.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::enumerator::{is_virtually_self_dual, WeightEnumerator};
use super::linalg::solve;
use super::zeta::{d_from_zeros_identity, normalized_zeta, rh_check, self_reciprocal_check};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rootloc::{epsilon_condition, symmetric_increasing};
use crate::scalar::{format_rational, Gaussian, Scalar};

/// Largest length accepted by [`conjecture_scan`].
pub const MAX_SCAN_LENGTH: usize = 96;

/// Radius tolerance used by the scan's RH column.
pub const SCAN_RH_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TypeTag {
    I,
    II,
    III,
    IV,
}

impl TypeTag {
    pub const ALL: [TypeTag; 4] = [TypeTag::I, TypeTag::II, TypeTag::III, TypeTag::IV];

    pub fn q(self) -> u64 {
        match self {
            TypeTag::I | TypeTag::II => 2,
            TypeTag::III => 3,
            TypeTag::IV => 4,
        }
    }

    /// Every weight is a multiple of `b`.
    pub fn b(self) -> usize {
        match self {
            TypeTag::I | TypeTag::IV => 2,
            TypeTag::II => 4,
            TypeTag::III => 3,
        }
    }

    /// Lengths are multiples of this.
    pub fn length_step(self) -> usize {
        match self {
            TypeTag::I | TypeTag::IV => 2,
            TypeTag::II => 8,
            TypeTag::III => 4,
        }
    }

    pub fn admits(self, n: usize) -> bool {
        n > 0 && n % self.length_step() == 0
    }

    /// Gleason generators as polynomials in `y` with `x = 1`, with their
    /// homogeneous degrees.
    fn generators(self) -> ((Poly<Gaussian>, usize), (Poly<Gaussian>, usize)) {
        let p = |c: &[i64]| Poly::<Gaussian>::from_i64(c);
        match self {
            TypeTag::I => ((p(&[1, 0, 1]), 2), (p(&[0, 0, 1, 0, -2, 0, 1]), 8)),
            TypeTag::II => ((p(&[1, 0, 0, 0, 14, 0, 0, 0, 1]), 8), (p(&[0, 0, 0, 0, 1, 0, 0, 0, -4, 0, 0, 0, 6, 0, 0, 0, -4, 0, 0, 0, 1]), 24)),
            TypeTag::III => ((p(&[1, 0, 0, 8]), 4), (p(&[0, 0, 0, 1, 0, 0, -3, 0, 0, 3, 0, 0, -1]), 12)),
            TypeTag::IV => ((p(&[1, 0, 3]), 2), (p(&[0, 0, 1, 0, -2, 0, 1]), 6)),
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TypeTag::I => "I",
            TypeTag::II => "II",
            TypeTag::III => "III",
            TypeTag::IV => "IV",
        })
    }
}

impl FromStr for TypeTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "I" | "1" => Ok(TypeTag::I),
            "II" | "2" => Ok(TypeTag::II),
            "III" | "3" => Ok(TypeTag::III),
            "IV" | "4" => Ok(TypeTag::IV),
            _ => Err(Error::Parse(format!("unknown type {s:?}"))),
        }
    }
}

impl Serialize for TypeTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Type of a divisible virtually self-dual enumerator. Over `q = 2` the
/// stricter Type II wins when both apply.
pub fn type_classify(f: &WeightEnumerator) -> Result<TypeTag> {
    let candidates: &[TypeTag] = match f.q {
        2 => &[TypeTag::II, TypeTag::I],
        3 => &[TypeTag::III],
        4 => &[TypeTag::IV],
        _ => return Err(Error::NoMatchingType { q: f.q, b: 0, n: f.n }),
    };
    let divisible: Vec<TypeTag> = candidates.iter().copied().filter(|t| f.is_divisible(t.b())).collect();
    if divisible.is_empty() {
        return Err(Error::NotDivisible);
    }
    let found = divisible.iter().copied().find(|t| t.admits(f.n) && f.n % 2 == 0);
    match found {
        Some(t) if is_virtually_self_dual(f)? => Ok(t),
        Some(_) => Err(Error::NotSelfDual),
        None => Err(Error::NoMatchingType {
            q: f.q,
            b: divisible[0].b() as u64,
            n: f.n,
        }),
    }
}

/// `2⌊n/8⌋+2`, `4⌊n/24⌋+4`, `3⌊n/12⌋+3`, `2⌊n/6⌋+2` for Types I–IV.
pub fn msd_bound(tag: TypeTag, n: usize) -> Result<usize> {
    if !tag.admits(n) {
        return Err(Error::BadParameters(format!("length {n} is not admissible for type {tag}")));
    }
    Ok(match tag {
        TypeTag::I => 2 * (n / 8) + 2,
        TypeTag::II => 4 * (n / 24) + 4,
        TypeTag::III => 3 * (n / 12) + 3,
        TypeTag::IV => 2 * (n / 6) + 2,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Extremal {
    #[serde(rename = "type")]
    pub tag: TypeTag,
    pub enumerator: WeightEnumerator,
    pub d: usize,
    pub nonnegative: bool,
    pub integral: bool,
}

/// The unique enumerator in the Gleason ring of the type with `A_0 = 1`
/// and `A_w = 0` for `0 < w < msd_bound`.
pub fn extremal_enumerator(tag: TypeTag, n: usize) -> Result<Extremal> {
    let bound = msd_bound(tag, n)?;
    let ((g1, d1), (g2, d2)) = tag.generators();
    let k = n / d2 + 1;
    let basis: Vec<Poly<Gaussian>> = (0..k)
        .filter(|j| (n - d2 * j) % d1 == 0)
        .map(|j| &g1.pow((n - d2 * j) / d1) * &g2.pow(j))
        .collect();
    let cols = basis.len();
    let entry = |p: &Poly<Gaussian>, w: usize| p.coeff(w).as_rational().unwrap_or_else(BigRational::zero);
    let matrix: Vec<Vec<BigRational>> = (0..bound.min(n + 1)).map(|w| basis.iter().map(|p| entry(p, w)).collect()).collect();
    let mut rhs = vec![BigRational::zero(); matrix.len()];
    rhs[0] = BigRational::one();
    let sol = solve(matrix, rhs, cols);
    if !sol.consistent {
        return Err(Error::NoSolution { dim: cols });
    }
    if sol.nullity() > 0 {
        return Err(Error::NonUnique { dim: sol.nullity() });
    }
    let mut a = vec![BigRational::zero(); n + 1];
    for (c, p) in sol.x.iter().zip(&basis) {
        for (w, slot) in a.iter_mut().enumerate() {
            *slot += c * entry(p, w);
        }
    }
    let enumerator = WeightEnumerator::new(tag.q(), a)?;
    let d = enumerator.min_distance();
    if d != bound {
        return Err(Error::ClaimViolated {
            claim: format!("type {tag} length {n} meets the bound {bound}"),
            index: d,
        });
    }
    Ok(Extremal {
        tag,
        d,
        nonnegative: enumerator.is_nonnegative(),
        integral: enumerator.is_integral(),
        enumerator,
    })
}

pub fn is_extremal(f: &WeightEnumerator, tag: TypeTag) -> Result<bool> {
    Ok(f.min_distance() == msd_bound(tag, f.n)?)
}

/// One row of the conjecture scan. Outcomes are evidence, not assertions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRow {
    #[serde(rename = "type")]
    pub tag: TypeTag,
    pub n: usize,
    pub d: Option<usize>,
    pub extremal: bool,
    pub nonnegative: Option<bool>,
    pub integral: Option<bool>,
    pub self_reciprocal: Option<bool>,
    pub rh_pass: Option<bool>,
    pub max_radius_dev: Option<f64>,
    pub symmetric_increasing: Option<bool>,
    /// `ε_2 ≤ (ε_1 + ε_3)/2` on every window in the first half of `P(T/√q)`.
    pub epsilon_clause: Option<bool>,
    pub d_identity: Option<bool>,
    #[serde(rename = "P_coeffs")]
    pub p_coeffs: Vec<String>,
    pub error: Option<String>,
}

fn scan_one(tag: TypeTag, n: usize) -> ScanRow {
    let mut row = ScanRow {
        tag,
        n,
        d: None,
        extremal: false,
        nonnegative: None,
        integral: None,
        self_reciprocal: None,
        rh_pass: None,
        max_radius_dev: None,
        symmetric_increasing: None,
        epsilon_clause: None,
        d_identity: None,
        p_coeffs: Vec::new(),
        error: None,
    };
    if let Err(e) = fill_row(&mut row) {
        row.error = Some(format!("{}: {e}", e.code()));
    }
    row
}

fn fill_row(row: &mut ScanRow) -> Result<()> {
    let ext = extremal_enumerator(row.tag, row.n)?;
    row.d = Some(ext.d);
    row.extremal = is_extremal(&ext.enumerator, row.tag)?;
    row.nonnegative = Some(ext.nonnegative);
    row.integral = Some(ext.integral);
    let (zeta, sr) = self_reciprocal_check(&ext.enumerator)?;
    row.p_coeffs = zeta.a.iter().map(format_rational).collect();
    row.self_reciprocal = Some(sr.palindromic);
    let rh = rh_check(&zeta, SCAN_RH_TOL)?;
    row.rh_pass = Some(rh.pass);
    row.max_radius_dev = Some(rh.max_radius_dev);
    let p = Poly::new(normalized_zeta(&zeta).iter().map(|c| Complex64::new(c.to_f64(), 0.0)).collect());
    row.symmetric_increasing = Some(symmetric_increasing(&p, 1e-12)?.holds);
    // windows inside the increasing half only
    let half_windows = (p.degree().unwrap_or(0) / 2 + 1).saturating_sub(3);
    row.epsilon_clause = Some(epsilon_condition(&p, 1e-12).into_iter().take(half_windows).all(|b| b));
    row.d_identity = match d_from_zeros_identity(&ext.enumerator) {
        Ok(r) => Some(r.identity_holds && r.inequality_holds),
        Err(Error::DegenerateZeta) => None,
        Err(e) => return Err(e),
    };
    Ok(())
}

/// Every admissible `(type, n)` with `n ≤ n_max`, scanned in parallel.
/// Failures are recorded per row.
pub fn conjecture_scan(types: &[TypeTag], n_max: usize) -> Result<Vec<ScanRow>> {
    if n_max > MAX_SCAN_LENGTH {
        return Err(Error::BadParameters(format!("n_max {n_max} exceeds {MAX_SCAN_LENGTH}")));
    }
    let jobs: Vec<(TypeTag, usize)> = types
        .iter()
        .flat_map(|&t| (1..=n_max).filter(move |&n| t.admits(n)).map(move |n| (t, n)))
        .collect();
    Ok(jobs.into_par_iter().map(|(t, n)| scan_one(t, n)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn bounds() {
        assert_eq!(msd_bound(TypeTag::II, 24).unwrap(), 8);
        assert_eq!(msd_bound(TypeTag::I, 8).unwrap(), 4);
        assert_eq!(msd_bound(TypeTag::IV, 6).unwrap(), 4);
        assert!(msd_bound(TypeTag::II, 12).is_err());
    }

    #[test]
    fn extremal_examples() {
        let e = extremal_enumerator(TypeTag::II, 8).unwrap();
        assert_eq!(e.enumerator, WeightEnumerator::from_i64(2, &[1, 0, 0, 0, 14, 0, 0, 0, 1]).unwrap());
        let e = extremal_enumerator(TypeTag::I, 2).unwrap();
        assert_eq!(e.enumerator.a, vec![int(1), int(0), int(1)]);
        let e = extremal_enumerator(TypeTag::II, 24).unwrap();
        assert_eq!(e.d, 8);
        assert_eq!(e.enumerator.a[8], int(759));
        assert!(e.nonnegative && e.integral);
    }

    #[test]
    fn classify_types() {
        let hamming = WeightEnumerator::from_i64(2, &[1, 0, 0, 0, 14, 0, 0, 0, 1]).unwrap();
        assert_eq!(type_classify(&hamming).unwrap(), TypeTag::II);
        let f = WeightEnumerator::from_i64(2, &[1, 0, 1]).unwrap();
        assert_eq!(type_classify(&f).unwrap(), TypeTag::I);
        let odd = WeightEnumerator::from_i64(2, &[1, 1, 0]).unwrap();
        assert!(matches!(type_classify(&odd), Err(Error::NotDivisible)));
        let f5 = WeightEnumerator::from_i64(5, &[1, 0, 1]).unwrap();
        assert!(matches!(type_classify(&f5), Err(Error::NoMatchingType { q: 5, .. })));
    }

    #[test]
    fn scan_rows() {
        assert!(conjecture_scan(&[], 12).unwrap().is_empty());
        let rows = conjecture_scan(&[TypeTag::IV], 12).unwrap();
        assert_eq!(rows.len(), 6);
        assert!(rows.iter().all(|r| r.rh_pass == Some(true) && r.self_reciprocal == Some(true)));
    }
}
