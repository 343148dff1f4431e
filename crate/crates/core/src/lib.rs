//! Self-inversive and palindromic polynomials, reduction of totally real
//! binary forms, superelliptic normal forms, and zeta polynomials of weight
//! enumerators.
//!
//! Exact arithmetic is the default: coefficients live in ℚ(i) (or ℚ(√-3)
//! for curve factors) and every predicate compares exactly. Floating point
//! is used for root finding and for anything downstream of it.

pub mod codes;
pub mod curves;
pub mod error;
pub mod golden;
pub mod json;
pub mod poly;
pub mod polycore;
pub mod reduction;
pub mod rootloc;
pub mod scalar;

pub use error::{Error, Result};
pub use poly::{ExactPoly, FloatPoly, Poly};
pub use scalar::{Eisenstein, Gaussian, Scalar};
