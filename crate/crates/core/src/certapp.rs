//! Degree-side checks for the certificate-complexity separation: `f*`
//! keeps the approximate degree of `f`, and `MAJ ∘ f` keeps it at large error.

use crate::exactlp::{adeg, AdegReport, DegreeError};
use crate::fncore::dnf::{diagonal, fstar_eval};
use crate::fncore::{block_compose, fstar, make_basic, BooleanFunction, Dnf, FnError, Gate};
use crate::rational::{frac, Q};
use crate::report::{Ledger, Property, Rel};
use num_traits::One;

#[derive(Debug, thiserror::Error)]
pub enum CertAppError {
    #[error(transparent)]
    Fn(#[from] FnError),
    #[error(transparent)]
    Degree(#[from] DegreeError),
}

/// `f*(y, −y) = f(y)` on every `y`, and `deg̃_ε(f*) ≥ deg̃_ε(f)`.
pub fn fstar_ledger(dnf: &Dnf, eps: &Q) -> Result<(Ledger, AdegReport, AdegReport), CertAppError> {
    let n = dnf.n;
    let f = dnf.to_function()?;
    let fs = fstar(dnf)?;
    let mut l = Ledger::new();
    let diag = (0..1u64 << n).all(|y| fstar_eval(dnf, diagonal(y, n)) == f.eval(y));
    l.push(Property::check("fstar_diagonal_identity", diag));
    let df = adeg(&f, eps)?;
    let dfs = adeg(&fs, eps)?;
    l.push(Property::compare_int("fstar_degree_dominates", dfs.degree as i64, Rel::Ge, df.degree as i64, true));
    Ok((l, df, dfs))
}

/// The error at which `MAJ_{M'} ∘ f` is compared with `f`: `1 − 1/n²`.
pub fn maj_error(f: &BooleanFunction) -> Q {
    let n = f.arity() as i64;
    Q::one() - frac(1, n * n)
}

/// `deg̃_ε(MAJ_{M'} ∘ f) ≥ deg̃_{1/3}(f)` with `ε = 1 − 1/n²`. The ladder
/// of the composed function is returned so the margin can be read off.
pub fn maj_amplification(f: &BooleanFunction, m_prime: usize) -> Result<(Ledger, AdegReport, AdegReport), CertAppError> {
    let composed = block_compose(&make_basic(Gate::Maj, m_prime)?, f)?;
    let base = adeg(f, &frac(1, 3))?;
    let amp = adeg(&composed, &maj_error(f))?;
    let mut l = Ledger::new();
    l.push(Property::compare_int(
        "maj_composition_keeps_degree",
        amp.degree as i64,
        Rel::Ge,
        base.degree as i64,
        true,
    ));
    Ok((l, base, amp))
}
