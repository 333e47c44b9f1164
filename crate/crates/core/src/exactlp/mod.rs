//! Exact linear programming and the approximate-degree programs.

pub mod degree;
pub mod linalg;
pub mod poly;
pub mod simplex;
pub mod system;
pub mod witness;

pub use degree::{
    adeg, dual_witness, eps_opt, independent_monomials, one_sided_dual_witness, AdegReport,
    DegreeError, LpCertificate,
};
pub use poly::MultilinearPolynomial;
pub use simplex::{LinearProgram, LpError, LpSolution, Relation, Sense};
pub use system::WitnessSystem;
pub use witness::{sign, DualWitness, WitnessFile};
