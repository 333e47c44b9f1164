//! DNF formulas and the balanced-pair transform `f ↦ f*`.

use super::cube::{self, Point};
use super::function::{BooleanFunction, Domain, Structure};
use super::FnError;
use serde::{Deserialize, Serialize};

/// A literal is satisfied when its variable is TRUE (`-1`), or FALSE for a
/// negated literal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Literal {
    pub var: usize,
    #[serde(default)]
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Self {
        Self {
            var,
            negated: false,
        }
    }

    pub fn neg(var: usize) -> Self {
        Self { var, negated: true }
    }

    pub fn satisfied_by(&self, x: Point) -> bool {
        let is_true = (x >> self.var) & 1 == 1;
        is_true != self.negated
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dnf {
    pub n: usize,
    pub clauses: Vec<Vec<Literal>>,
}

impl Dnf {
    pub fn new(n: usize, clauses: Vec<Vec<Literal>>) -> Result<Self, FnError> {
        if let Some(l) = clauses.iter().flatten().find(|l| l.var >= n) {
            return Err(FnError::Malformed(format!(
                "literal on variable {} exceeds arity {n}",
                l.var
            )));
        }
        Ok(Self { n, clauses })
    }

    /// Monotone DNF from clauses given as variable index lists.
    pub fn monotone(n: usize, clauses: &[&[usize]]) -> Result<Self, FnError> {
        Self::new(
            n,
            clauses
                .iter()
                .map(|c| c.iter().map(|&v| Literal::pos(v)).collect())
                .collect(),
        )
    }

    pub fn width(&self) -> usize {
        self.clauses.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_monotone(&self) -> bool {
        self.clauses.iter().flatten().all(|l| !l.negated)
    }

    pub fn eval(&self, x: Point) -> i8 {
        if self
            .clauses
            .iter()
            .any(|c| c.iter().all(|l| l.satisfied_by(x)))
        {
            -1
        } else {
            1
        }
    }

    pub fn to_function(&self) -> Result<BooleanFunction, FnError> {
        BooleanFunction::from_fn(self.n, Domain::All, Structure::Table, |x| self.eval(x))
    }
}

/// Per-pair reading of a `2n`-bit input: `Some(-1)` / `Some(+1)` for a
/// balanced pair, `None` (⊥) otherwise.
pub fn gamma(x: Point, n: usize) -> Vec<Option<i8>> {
    (0..n)
        .map(|i| {
            let a = (x >> i) & 1 == 1;
            let b = (x >> (n + i)) & 1 == 1;
            match (a, b) {
                (true, false) => Some(-1),
                (false, true) => Some(1),
                _ => None,
            }
        })
        .collect()
}

fn clause_satisfied(clause: &[Literal], g: &[Option<i8>]) -> bool {
    clause.iter().all(|l| match g[l.var] {
        None => false,
        Some(v) => (v == -1) != l.negated,
    })
}

/// Evaluates `f*` at a single `2n`-bit point.
pub fn fstar_eval(dnf: &Dnf, x: Point) -> i8 {
    let n = dnf.n;
    let g = gamma(x, n);
    let no_false_pair = (0..n).all(|i| (x >> i) & 1 == 1 || (x >> (n + i)) & 1 == 1);
    if no_false_pair && dnf.clauses.iter().any(|c| clause_satisfied(c, &g)) {
        -1
    } else {
        1
    }
}

/// The `2n`-variable function `f*` built from a DNF for `f`: first half
/// carries the inputs, second half their negations.
pub fn fstar(dnf: &Dnf) -> Result<BooleanFunction, FnError> {
    if dnf.clauses.is_empty() {
        return Err(FnError::EmptyDnf);
    }
    BooleanFunction::from_fn(2 * dnf.n, Domain::All, Structure::Table, |x| {
        fstar_eval(dnf, x)
    })
}

/// The diagonal embedding `y ↦ (y, -y)`.
pub fn diagonal(y: Point, n: usize) -> Point {
    y | ((!y & cube::full_mask(n)) << n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fncore::cube::from_signs;

    #[test]
    fn or1_examples() {
        let or1 = Dnf::monotone(1, &[&[0]]).unwrap();
        assert_eq!(fstar_eval(&or1, from_signs(&[-1, 1])), -1);
        assert_eq!(fstar_eval(&or1, from_signs(&[1, 1])), 1);
        assert_eq!(fstar_eval(&or1, from_signs(&[-1, -1])), 1);
    }

    #[test]
    fn diagonal_identity_small() {
        let dnfs = [
            Dnf::monotone(2, &[&[0, 1]]).unwrap(),
            Dnf::monotone(3, &[&[0], &[1, 2]]).unwrap(),
            Dnf::new(2, vec![vec![Literal::pos(0), Literal::neg(1)]]).unwrap(),
        ];
        for dnf in &dnfs {
            let f = dnf.to_function().unwrap();
            let fs = fstar(dnf).unwrap();
            for y in 0..1u64 << dnf.n {
                assert_eq!(fs.eval(diagonal(y, dnf.n)), f.eval(y));
            }
        }
    }

    #[test]
    fn empty_dnf_rejected() {
        assert!(fstar(&Dnf::new(2, vec![]).unwrap()).is_err());
        assert!(Dnf::monotone(2, &[&[3]]).is_err());
    }
}
