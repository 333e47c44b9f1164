//! Dual witness construction: block composition, the univariate `ω`, the
//! amplifier `Ψ`, the `ζ` pipeline and its overweight correction.

pub mod amplifier;
pub mod bounds;
pub mod compose;
pub mod correction;
pub mod omega;
pub mod pipeline;
pub mod symmetric;

pub use amplifier::amplifier_psi;
pub use compose::{compose_at, dual_block_compose};
pub use correction::{correction_nu, finalize_zetahat, rs_phi, rs_phi_properties};
pub use omega::{omega, omega_lp, omega_properties, Omega, DEFAULT_C};
pub use pipeline::{AmplificationParams, DeskRun, FactoredZeta};
pub use symmetric::{psi_or, SymmetricWitness};

use crate::exactlp::{DegreeError, LpError};
use crate::fncore::FnError;

#[derive(Debug, thiserror::Error)]
pub enum CraftError {
    #[error("witness is identically zero")]
    ZeroWitness,
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("bad parameter: {0}")]
    Parameter(String),
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error(transparent)]
    Fn(#[from] FnError),
    #[error(transparent)]
    Degree(#[from] DegreeError),
}
