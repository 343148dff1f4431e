//! Numerical roots and root-location criteria.

mod criteria;
mod solver;
mod symmetric;

pub use criteria::{
    circle_report, cohn_test, default_grid, lakatos_losonczi, max_modulus, ohara_bounds, vieira_predict,
    CircleReport, LlRange, OharaReport, DEFAULT_BAND,
};
pub use solver::{roots, roots_seeded, RootSet, DEFAULT_SOLVER_TOL};
pub use symmetric::{
    epsilon_condition, product_chain, symm_incr_step_condition, symmetric_increasing, SymmetricIncreasingReport,
};
