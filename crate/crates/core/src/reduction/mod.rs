//! From a promise composition `F_R ∘ OR_N` to a total function `g` on bits:
//! the intermediate properties, the histogram symmetrization, the
//! surjection encoding and formula accounting.

pub mod ambainis;
pub mod chain;
pub mod formula;
pub mod promise;
pub mod surj;

pub use ambainis::{ambainis_symmetrize, q_transform, HistogramPolynomial};
pub use chain::{reduction_ledger, ChainConfig};
pub use formula::{canonical_dnf, Formula, FormulaAccounting};
pub use promise::{g_prop, g_tilde, histograms, restrict_promise, PropertyFunction, SymmetrizedProperty};
pub use surj::{build_g, build_gstar, gstar_formula, lift_witness, SurjEncoding};

use crate::exactlp::DegreeError;
use crate::fncore::FnError;

#[derive(Debug, thiserror::Error)]
pub enum ReductionError {
    #[error("bad parameter: {0}")]
    Parameter(String),
    #[error("FIT_FAILURE: {0}")]
    FitFailure(String),
    #[error("encoding is not surjective: {0}")]
    NotSurjective(String),
    #[error(transparent)]
    Fn(#[from] FnError),
    #[error(transparent)]
    Degree(#[from] DegreeError),
}
