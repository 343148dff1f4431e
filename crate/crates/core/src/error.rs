use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Every failure the library can report.
///
/// Each variant maps to a stable machine-readable [`Error::code`], which the
/// CLI prints in its error JSON.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("the zero polynomial has no well-defined class")]
    ZeroPolynomial,
    #[error("polynomial is not palindromic")]
    NotPalindromic,
    #[error("expected even degree, got {0}")]
    OddDegree(usize),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("operation not applicable: {0}")]
    NotApplicable(String),
    #[error("root solver did not converge (best residual {residual:e})")]
    NoConvergence {
        best: Vec<Complex64>,
        residual: f64,
    },
    #[error("polynomial is not self-inversive")]
    NotSelfInversive,
    #[error("lambda {lambda} out of range for degree {degree}")]
    LambdaOutOfRange { lambda: usize, degree: usize },
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("coefficients are not real")]
    NonRealCoefficients,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("covariant division left a nonzero remainder")]
    DivisionNotExact,
    #[error("degree {0} is too low (need at least 3)")]
    DegreeTooLow(usize),
    #[error("expected exactly one conjugate pair of non-real roots, found {pairs}")]
    NoUniqueQuadratic { pairs: usize },
    #[error("quadratic is not positive definite")]
    NotPositiveDefinite,
    #[error("reduction did not terminate within {0} steps")]
    MaxIterations(usize),
    #[error("equivariance check failed at step {step} (residual {residual:e})")]
    EquivarianceBroken { step: usize, residual: f64 },
    #[error("point {re} + {im}i lies in neither region")]
    NotInRegion { re: f64, im: f64 },
    #[error("case index {index} invalid for group {group}")]
    BadCaseIndex { group: String, index: usize },
    #[error("claim violated at coefficient {index}: {claim}")]
    ClaimViolated { claim: String, index: usize },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("linear system is singular")]
    SingularSystem,
    #[error("linear system is inconsistent: {0}")]
    InconsistentSystem(String),
    #[error("enumerator is not virtually self-dual")]
    NotSelfDual,
    #[error("length {0} is odd")]
    OddLength(usize),
    #[error("zeta polynomial is constant")]
    DegenerateZeta,
    #[error("enumerator support is not divisible by any admissible b")]
    NotDivisible,
    #[error("no type matches (q = {q}, b = {b}, n = {n})")]
    NoMatchingType { q: u64, b: u64, n: usize },
    #[error("no extremal enumerator exists (solution space dimension {dim})")]
    NoSolution { dim: usize },
    #[error("extremal enumerator is not unique (solution space dimension {dim})")]
    NonUnique { dim: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("golden mismatch: {0}")]
    GoldenMismatch(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotPalindromic => "NotPalindromic",
            Error::OddDegree(_) => "OddDegree",
            Error::DegreeMismatch(_) => "DegreeMismatch",
            Error::NotApplicable(_) => "NotApplicable",
            Error::NoConvergence { .. } => "NoConvergence",
            Error::NotSelfInversive => "NotSelfInversive",
            Error::LambdaOutOfRange { .. } => "LambdaOutOfRange",
            Error::HypothesisFailed(_) => "HypothesisFailed",
            Error::NonRealCoefficients => "NonRealCoefficients",
            Error::SingularMatrix => "SingularMatrix",
            Error::DivisionNotExact => "DivisionNotExact",
            Error::DegreeTooLow(_) => "DegreeTooLow",
            Error::NoUniqueQuadratic { .. } => "NoUniqueQuadratic",
            Error::NotPositiveDefinite => "NotPositiveDefinite",
            Error::MaxIterations(_) => "MaxIterations",
            Error::EquivarianceBroken { .. } => "EquivarianceBroken",
            Error::NotInRegion { .. } => "NotInRegion",
            Error::BadCaseIndex { .. } => "BadCaseIndex",
            Error::ClaimViolated { .. } => "ClaimViolated",
            Error::BadParameters(_) => "BadParameters",
            Error::SingularSystem => "SingularSystem",
            Error::InconsistentSystem(_) => "InconsistentSystem",
            Error::NotSelfDual => "NotSelfDual",
            Error::OddLength(_) => "OddLength",
            Error::DegenerateZeta => "DegenerateZeta",
            Error::NotDivisible => "NotDivisible",
            Error::NoMatchingType { .. } => "NoMatchingType",
            Error::NoSolution { .. } => "NoSolution",
            Error::NonUnique { .. } => "NonUnique",
            Error::Parse(_) => "Parse",
            Error::GoldenMismatch(_) => "GoldenMismatch",
            Error::Io(_) => "Io",
        }
    }
}
