//! Binary forms, the modular-group action, the G covariant, and reduction
//! of totally real forms.

mod cayley;
mod covariant;
mod form;
mod moebius;
mod reduce;

pub use cayley::{
    cayley_matrix, cayley_to_circle, cayley_to_circle_literal, cayley_to_real, reduce_from_circle, CircleReduction,
    Region,
};
pub use covariant::{
    g_covariant, julia_quadratic, quadratic_zero, sigma_involution_check, zero_map, JuliaQuadratic, SigmaReport,
    REAL_TOL,
};
pub use form::BinaryForm;
pub use moebius::{act, Moebius};
pub use reduce::{
    in_fundamental_domain, reduce, region_t_membership, trace_string, Reduction, Step, EQUIVARIANCE_LIMIT, REGION_EPS,
};
