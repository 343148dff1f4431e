//! Weight enumerators and their Duursma zeta polynomials.

mod enumerator;
mod extremal;
mod linalg;
mod surd;
mod zeta;

pub use enumerator::{
    genus, is_virtually_self_dual, macwilliams, macwilliams_surd, mds_enumerator, mds_expand, MacWilliamsImage, MdsExpansion,
    WeightEnumerator,
};
pub use extremal::{
    conjecture_scan, extremal_enumerator, is_extremal, msd_bound, type_classify, Extremal, ScanRow, TypeTag, MAX_SCAN_LENGTH,
    SCAN_RH_TOL,
};
pub use surd::Surd;
pub use zeta::{
    d_from_zeros_identity, functional_equation_residual, normalized_zeta, rh_check, self_reciprocal_check, zeta_function,
    zeta_polynomial, DIdentityReport, RhReport, SelfReciprocity, ZetaPolynomial,
};
