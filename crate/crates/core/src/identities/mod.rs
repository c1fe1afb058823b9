//! End-to-end verifiers for the partition identities, comparing both sides
//! as exact truncated series.

mod generating;
mod lambda_qb;
mod main_identity;
mod report;

pub use generating::{generating_function_sides, verify_generating_function, XMode};
pub use lambda_qb::{
    lambda_qb_closed_form, lambda_qb_engine, lambda_qb_expansion, lambda_qb_nu_range,
    one_minus_y_pow_z, verify_lambda_qb, QbCaps,
};
pub use main_identity::{
    binomial_series_identity, diagonal_partition_side, diagonal_pjk_side, partition_side, pjk_side,
    verify_diagonal_case, verify_main_identity,
};
pub use report::{first_difference, Case, Status, VerificationReport, Witness};

use crate::exactring::Var;

/// The binomial-type symbol `z`.
pub fn z_var() -> Var {
    Var::new("z")
}

/// The expansion variable `u` of the main identity.
pub fn u_var() -> Var {
    Var::new("u")
}
