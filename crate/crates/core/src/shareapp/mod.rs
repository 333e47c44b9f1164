//! Secret sharing from dual witnesses.
//!
//! A unit-norm `ψ` orthogonal to constants splits as `μ_+ − μ_−` with both
//! parts of mass `1/2`. Shares of the bit `b` are drawn from `2μ_b`, and
//! applying `f` to the shares recovers `b` with advantage `⟨ψ, f⟩`. Any
//! `d − 1` shares are independent of `b` when `ψ` has pure high degree `≥ d`.

pub mod audit;
pub mod scheme;

pub use audit::{near_miss_witness, secrecy_audit, AuditReport, SubsetFailure};
pub use scheme::{advantage, monte_carlo, reconstruct, scheme_from_witness, split, Scheme, ShareBundle};

#[derive(Debug, thiserror::Error)]
pub enum ShareError {
    #[error("witness must have unit l1 norm (got {0})")]
    NotNormalized(String),
    #[error("witness must be orthogonal to constants (total {0})")]
    NotBalanced(String),
    #[error("malformed scheme: {0}")]
    Malformed(String),
    #[error(transparent)]
    Fn(#[from] crate::fncore::FnError),
}
