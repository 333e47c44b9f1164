//! The approximate-degree primal program and its dual.
//!
//! Primal at degree `d`: minimize `ε` over polynomials `p` of degree `≤ d`
//! with `|p(x) − f(x)| ≤ ε` on the domain `X`. Dual: maximize `⟨ψ, f⟩` over
//! `ψ` on `X` with `‖ψ‖₁ ≤ 1` and `ψ ⟂` every monomial of degree `≤ d`.
//! Both programs use a basis of monomials whose restrictions to `X` are
//! linearly independent, so the tableau never carries redundant rows.

use super::linalg::{self, Echelon};
use super::poly::MultilinearPolynomial;
use super::simplex::{LinearProgram, LpError, Relation, Sense};
use super::witness::DualWitness;
use crate::fncore::cube::{self, Point};
use crate::fncore::BooleanFunction;
use crate::rational::{self, Q};
use num_traits::{One, Signed, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DegreeError {
    #[error("degree bound must be at least {min} (got {got})")]
    DegreeTooSmall { min: usize, got: usize },
    #[error("the function has an empty domain")]
    EmptyDomain,
    #[error(transparent)]
    Lp(#[from] LpError),
}

fn chi_q(s: Point, x: Point) -> Q {
    Q::from_integer(cube::chi(s, x).into())
}

/// Monomials of degree `≤ max_degree`, in graded order, whose evaluation
/// vectors on `points` are linearly independent and span all of them.
pub fn independent_monomials(points: &[Point], arity: usize, max_degree: usize) -> Vec<Point> {
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for s in cube::masks_up_to_degree(arity, max_degree) {
        if ech.rank() == points.len() {
            break;
        }
        if ech.try_insert(points.iter().map(|&x| chi_q(s, x)).collect()) {
            out.push(s);
        }
    }
    out
}

/// `min ε` with the optimal polynomial of degree `≤ d`.
pub fn eps_opt(f: &BooleanFunction, d: usize) -> Result<(Q, MultilinearPolynomial), DegreeError> {
    if f.is_empty() {
        return Err(DegreeError::EmptyDomain);
    }
    let n = f.arity();
    let basis = independent_monomials(f.points(), n, d.min(n));
    let mut lp = LinearProgram::new(Sense::Min);
    let coeff = lp.add_vars(basis.len(), Q::zero(), true);
    let eps = lp.add_var(Q::one(), false);
    for (x, v) in f.iter() {
        let row: Vec<(usize, Q)> = basis
            .iter()
            .zip(coeff.clone())
            .map(|(&s, j)| (j, chi_q(s, x)))
            .collect();
        let fx = Q::from_integer(v.into());
        let mut upper = row.clone();
        upper.push((eps, -Q::one()));
        lp.add_constraint(upper, Relation::Le, fx.clone());
        let mut lower = row;
        lower.push((eps, Q::one()));
        lp.add_constraint(lower, Relation::Ge, fx);
    }
    let sol = lp.solve()?;
    let p = MultilinearPolynomial::from_coeffs(
        n,
        basis.iter().zip(coeff).map(|(&s, j)| (s, sol.x[j].clone())),
    );
    Ok((sol.value, p))
}

/// Maximum-correlation witness orthogonal to every monomial of degree
/// `< d`; with `one_sided`, also `ψ ≥ 0` wherever `f = +1`.
fn witness_lp(
    f: &BooleanFunction,
    d: usize,
    one_sided: bool,
) -> Result<(Q, DualWitness), DegreeError> {
    if d == 0 {
        return Err(DegreeError::DegreeTooSmall { min: 1, got: 0 });
    }
    if f.is_empty() {
        return Err(DegreeError::EmptyDomain);
    }
    let n = f.arity();
    let pts = f.points();
    let basis = independent_monomials(pts, n, (d - 1).min(n));
    let mut lp = LinearProgram::new(Sense::Max);
    // (point, column, sign) for ψ = Σ sign·column.
    let mut cols = Vec::new();
    for (x, v) in f.iter() {
        let fx = Q::from_integer(v.into());
        cols.push((x, lp.add_var(fx.clone(), false), Q::one()));
        if !(one_sided && v == 1) {
            cols.push((x, lp.add_var(-fx, false), -Q::one()));
        }
    }
    for &s in &basis {
        let row = cols
            .iter()
            .map(|(x, j, sg)| (*j, sg * chi_q(s, *x)))
            .collect();
        lp.add_constraint(row, Relation::Eq, Q::zero());
    }
    lp.add_constraint(
        cols.iter().map(|(_, j, _)| (*j, Q::one())).collect(),
        Relation::Eq,
        Q::one(),
    );
    let sol = match lp.solve() {
        Ok(sol) => sol,
        Err(LpError::Infeasible) => return Ok((Q::zero(), DualWitness::zero(n))),
        Err(e) => return Err(e.into()),
    };
    let psi = DualWitness::from_entries(
        n,
        cols.iter().map(|(x, j, sg)| (*x, sg * &sol.x[*j])),
    );
    if sol.value.is_positive() {
        // Optimality rules out a point carrying both parts.
        debug_assert_eq!(psi.l1(), Q::one());
        return Ok((sol.value, psi));
    }
    // Zero optimum: any unit-norm orthogonal vector attains it.
    if let Some(w) = psi.normalized() {
        return Ok((sol.value, w));
    }
    let rows: Vec<Vec<Q>> = basis
        .iter()
        .map(|&s| pts.iter().map(|&x| chi_q(s, x)).collect())
        .collect();
    if !one_sided {
        if let Some(u) = linalg::null_vector(&rows, pts.len()) {
            let w = DualWitness::from_entries(n, pts.iter().copied().zip(u));
            return Ok((sol.value, w.normalized().expect("kernel vector is nonzero")));
        }
    }
    Ok((sol.value, DualWitness::zero(n)))
}

/// LP-optimal dual witness of pure high degree `≥ d`; its correlation
/// equals `eps_opt(f, d − 1)`.
pub fn dual_witness(f: &BooleanFunction, d: usize) -> Result<(Q, DualWitness), DegreeError> {
    witness_lp(f, d, false)
}

/// As [`dual_witness`], restricted to `ψ ≥ 0` on `f⁻¹(+1)`.
pub fn one_sided_dual_witness(
    f: &BooleanFunction,
    d: usize,
) -> Result<(Q, DualWitness), DegreeError> {
    witness_lp(f, d, true)
}

/// Paired primal and dual optima for one degree bound.
#[derive(Debug, Clone, Serialize)]
pub struct LpCertificate {
    pub function: String,
    pub arity: usize,
    /// Polynomial degree bound; the witness is orthogonal to degree `≤ degree`.
    pub degree: usize,
    #[serde(with = "crate::rational::serde_q")]
    pub primal_eps: Q,
    pub polynomial: MultilinearPolynomial,
    #[serde(with = "crate::rational::serde_q")]
    pub dual_correlation: Q,
    pub witness: DualWitness,
    pub strong_duality: bool,
}

impl LpCertificate {
    pub fn compute(f: &BooleanFunction, degree: usize) -> Result<Self, DegreeError> {
        let (eps, p) = eps_opt(f, degree)?;
        let (corr, psi) = dual_witness(f, degree + 1)?;
        Ok(Self {
            function: format!("{:?}", f.structure()),
            arity: f.arity(),
            degree,
            strong_duality: eps == corr,
            primal_eps: eps,
            polynomial: p,
            dual_correlation: corr,
            witness: psi,
        })
    }

    /// Independent re-check of both sides against `f`.
    pub fn verify(&self, f: &BooleanFunction) -> bool {
        let primal_ok = self.polynomial.degree() <= self.degree
            && self.polynomial.max_error(f.iter()) == self.primal_eps;
        let w = &self.witness;
        let dual_ok = w.correlation(f) == Some(self.dual_correlation.clone())
            && (w.is_zero() || w.l1() == Q::one())
            && w.certify_pure_high_degree(self.degree + 1);
        primal_ok && dual_ok && self.strong_duality
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LadderStep {
    pub degree: usize,
    #[serde(with = "crate::rational::serde_q")]
    pub eps: Q,
}

#[derive(Debug, Clone, Serialize)]
pub struct AdegReport {
    #[serde(with = "crate::rational::serde_q")]
    pub target: Q,
    pub degree: usize,
    /// `eps_opt(f, d)` for every `d` visited, ascending.
    pub ladder: Vec<LadderStep>,
    /// Set when `target ≥ 1`, where the answer is 0 by convention.
    pub trivial: bool,
}

impl AdegReport {
    /// `eps_opt(f, degree − 1)`, the value certifying the lower bound.
    pub fn below(&self) -> Option<&Q> {
        self.degree
            .checked_sub(1)
            .and_then(|d| self.ladder.get(d))
            .map(|s| &s.eps)
    }
}

/// Least `d` with `eps_opt(f, d) ≤ ε`, by ascending search.
pub fn adeg(f: &BooleanFunction, eps: &Q) -> Result<AdegReport, DegreeError> {
    if *eps >= Q::one() {
        return Ok(AdegReport {
            target: eps.clone(),
            degree: 0,
            ladder: Vec::new(),
            trivial: true,
        });
    }
    let mut ladder = Vec::new();
    for d in 0..=f.arity() {
        let (e, _) = eps_opt(f, d)?;
        let done = e <= *eps;
        ladder.push(LadderStep { degree: d, eps: e });
        if done {
            return Ok(AdegReport {
                target: eps.clone(),
                degree: d,
                ladder,
                trivial: false,
            });
        }
    }
    unreachable!("degree n interpolates any function on its domain")
}

/// Renders a ladder as `d:eps` pairs.
pub fn ladder_string(report: &AdegReport) -> String {
    report
        .ladder
        .iter()
        .map(|s| format!("{}:{}", s.degree, rational::fmt(&s.eps)))
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fncore::{make_basic, Gate};
    use crate::rational::{frac, int};

    #[test]
    fn or_values() {
        let or1 = make_basic(Gate::Or, 1).unwrap();
        assert_eq!(eps_opt(&or1, 1).unwrap().0, int(0));
        let or2 = make_basic(Gate::Or, 2).unwrap();
        let (e, p) = eps_opt(&or2, 1).unwrap();
        assert_eq!(e, frac(1, 2));
        assert_eq!(p.max_error(or2.iter()), frac(1, 2));
        assert_eq!(adeg(&or2, &frac(1, 3)).unwrap().degree, 2);
    }

    #[test]
    fn parity_values() {
        let p2 = make_basic(Gate::Parity, 2).unwrap();
        assert_eq!(eps_opt(&p2, 1).unwrap().0, int(1));
        let p3 = make_basic(Gate::Parity, 3).unwrap();
        assert_eq!(adeg(&p3, &frac(2, 3)).unwrap().degree, 3);
        let c = make_basic(Gate::Const(1), 3).unwrap();
        assert_eq!(adeg(&c, &frac(1, 3)).unwrap().degree, 0);
        assert!(adeg(&c, &int(1)).unwrap().trivial);
    }

    #[test]
    fn dual_examples() {
        let or2 = make_basic(Gate::Or, 2).unwrap();
        let (c, w) = dual_witness(&or2, 2).unwrap();
        assert_eq!(c, frac(1, 2));
        assert_eq!(w.l1(), int(1));
        assert!(w.certify_pure_high_degree(2));
        let and2 = make_basic(Gate::And, 2).unwrap();
        // Constants cannot approximate a non-constant function at all.
        assert_eq!(dual_witness(&and2, 1).unwrap().0, int(1));
        assert_eq!(dual_witness(&and2, 2).unwrap().0, frac(1, 2));
        let c3 = make_basic(Gate::Const(-1), 2).unwrap();
        let (c, w) = dual_witness(&c3, 1).unwrap();
        assert_eq!(c, int(0));
        assert_eq!(w.l1(), int(1));
    }

    #[test]
    fn one_sided_examples() {
        let or2 = make_basic(Gate::Or, 2).unwrap();
        let (c, w) = one_sided_dual_witness(&or2, 2).unwrap();
        assert!(c >= frac(1, 3));
        assert!(w.get(0) >= int(0));
        let or1 = make_basic(Gate::Or, 1).unwrap();
        let (c, w) = one_sided_dual_witness(&or1, 1).unwrap();
        assert_eq!(c, int(1));
        assert_eq!(w.get(0), frac(1, 2));
        let cp = make_basic(Gate::Const(1), 2).unwrap();
        assert_eq!(one_sided_dual_witness(&cp, 1).unwrap().0, int(0));
    }

    #[test]
    fn partial_domain_program() {
        let f = make_basic(Gate::Or, 3).unwrap().restrict_max_weight(1);
        // On weight <= 1 points OR is affine in the weight, so degree 1 is exact.
        assert_eq!(eps_opt(&f, 1).unwrap().0, int(0));
        let cert = LpCertificate::compute(&f, 0).unwrap();
        assert!(cert.verify(&f));
    }

    #[test]
    fn certificate_round() {
        let f = make_basic(Gate::Maj, 3).unwrap();
        for d in 0..=3 {
            let cert = LpCertificate::compute(&f, d).unwrap();
            assert!(cert.verify(&f), "degree {d}");
        }
    }
}
