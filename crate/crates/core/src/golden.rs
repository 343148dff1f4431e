//! Worked products `Π (1 - α_k z + z²)` recomputed against a golden file.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootloc::{product_chain, symmetric_increasing};
use crate::scalar::{format_rational, parse_rational, Gaussian, Scalar};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldenProduct {
    pub name: String,
    pub alphas: Vec<String>,
    pub coeffs: Vec<String>,
    pub symmetric_increasing: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldenFile {
    pub schema: String,
    pub products: Vec<GoldenProduct>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GoldenOutcome {
    pub name: String,
    pub degree: usize,
    pub symmetric_increasing: bool,
}

pub fn default_golden_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join("goldens.json")
}

pub fn load_goldens(path: &Path) -> Result<GoldenFile> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn parse_all(v: &[String]) -> Result<Vec<Gaussian>> {
    v.iter().map(|s| parse_rational(s).map(|r| Gaussian::from_rational(&r))).collect()
}

/// Recompute one product exactly and compare coefficient by coefficient.
pub fn check_product(g: &GoldenProduct) -> Result<GoldenOutcome> {
    let alphas = parse_all(&g.alphas)?;
    let expected = parse_all(&g.coeffs)?;
    let p = product_chain(&alphas, Gaussian::one());
    let got = p.coeffs();
    let len = got.len().max(expected.len());
    for i in 0..len {
        let (e, c) = (expected.get(i), got.get(i));
        if e != c {
            let show = |x: Option<&Gaussian>| x.map_or("missing".to_string(), |v| format_rational(&v.re));
            return Err(Error::GoldenMismatch(format!(
                "{}: coefficient {i}: golden {}, computed {}",
                g.name,
                show(e),
                show(c)
            )));
        }
    }
    let si = symmetric_increasing(&p, 0.0)?.holds;
    if si != g.symmetric_increasing {
        return Err(Error::GoldenMismatch(format!(
            "{}: symmetric increasing is {si}, golden says {}",
            g.name, g.symmetric_increasing
        )));
    }
    Ok(GoldenOutcome {
        name: g.name.clone(),
        degree: got.len() - 1,
        symmetric_increasing: si,
    })
}

pub fn verify_goldens(path: &Path) -> Result<Vec<GoldenOutcome>> {
    load_goldens(path)?.products.iter().map(check_product).collect()
}
