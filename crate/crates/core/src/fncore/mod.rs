//! Boolean functions on the hypercube and the constructors built on them.
//!
//! Points are `u64` bitmasks: bit `i` set means coordinate `i` is `-1`
//! (TRUE). The Hamming weight of a point is its popcount.

pub mod certificate;
pub mod cube;
pub mod dnf;
pub mod encoding;
pub mod function;
pub mod gates;
pub mod io;
pub mod symmetrize;

pub use certificate::{certificate_complexity, CertificateReport, InputCertificate};
pub use cube::Point;
pub use dnf::{fstar, Dnf, Literal};
pub use encoding::EncodingState;
pub use function::{BooleanFunction, Domain, Structure};
pub use gates::{block_compose, make_basic, surjectivity, Gate};
pub use symmetrize::{minsky_papert_symmetrize, SymmetricProfile};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FnError {
    #[error("arity {arity} exceeds the cap of {cap}")]
    ArityTooLarge { arity: usize, cap: usize },
    #[error("bad bitstring `{0}` (only '0' and '1' allowed)")]
    BadBitstring(String),
    #[error("point {point:#b} has bits beyond arity {arity}")]
    PointOutOfRange { point: u64, arity: usize },
    #[error("value {0} is not +1 or -1")]
    NotBoolean(i64),
    #[error("{0}")]
    Malformed(String),
    #[error("non-constant gates need at least one input")]
    ZeroArity,
    #[error("{0} needs total functions")]
    PartialInput(&'static str),
    #[error("range {0} is not a power of two >= 2")]
    RangeNotPowerOfTwo(usize),
    #[error("empty clause list")]
    EmptyDnf,
}
