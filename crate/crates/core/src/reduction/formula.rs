//! AND/OR formulas with negations at the leaves, and their accounting.

use crate::fncore::cube::Point;
use crate::fncore::{BooleanFunction, Dnf, Literal};
use serde::Serialize;

/// A formula evaluates to TRUE (`-1`) or FALSE (`+1`). Children of the
/// same gate kind are merged on construction, so depth counts alternations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Formula {
    Lit(Literal),
    And(Vec<Formula>),
    Or(Vec<Formula>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GateKind {
    And,
    Or,
}

/// Shape data recomputed from a built formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaAccounting {
    pub depth: usize,
    /// Width of the DNF obtained by distributing every `AND` over its `OR`s.
    pub dnf_width: usize,
    pub monotone: bool,
    pub bottom_gate: Option<GateKind>,
    pub size: usize,
}

impl Formula {
    pub fn and(children: Vec<Formula>) -> Self {
        let mut flat = Vec::new();
        for c in children {
            match c {
                Formula::And(cs) => flat.extend(cs),
                other => flat.push(other),
            }
        }
        Formula::And(flat)
    }

    pub fn or(children: Vec<Formula>) -> Self {
        let mut flat = Vec::new();
        for c in children {
            match c {
                Formula::Or(cs) => flat.extend(cs),
                other => flat.push(other),
            }
        }
        Formula::Or(flat)
    }

    pub fn from_dnf(dnf: &Dnf) -> Self {
        Formula::or(
            dnf.clauses
                .iter()
                .map(|c| Formula::and(c.iter().map(|&l| Formula::Lit(l)).collect()))
                .collect(),
        )
    }

    pub fn is_true(&self, x: Point) -> bool {
        match self {
            Formula::Lit(l) => l.satisfied_by(x),
            Formula::And(cs) => cs.iter().all(|c| c.is_true(x)),
            Formula::Or(cs) => cs.iter().any(|c| c.is_true(x)),
        }
    }

    pub fn eval(&self, x: Point) -> i8 {
        if self.is_true(x) {
            -1
        } else {
            1
        }
    }

    /// Replaces every leaf literal by `map(literal)`.
    pub fn map_literals(&self, map: &impl Fn(Literal) -> Literal) -> Formula {
        match self {
            Formula::Lit(l) => Formula::Lit(map(*l)),
            Formula::And(cs) => Formula::And(cs.iter().map(|c| c.map_literals(map)).collect()),
            Formula::Or(cs) => Formula::Or(cs.iter().map(|c| c.map_literals(map)).collect()),
        }
    }

    /// Substitutes formula `subs[v]` (or its negation `neg_subs[v]`) for
    /// each literal on variable `v`.
    pub fn substitute(&self, subs: &[Formula], neg_subs: &[Formula]) -> Formula {
        match self {
            Formula::Lit(l) if l.negated => neg_subs[l.var].clone(),
            Formula::Lit(l) => subs[l.var].clone(),
            Formula::And(cs) => Formula::and(cs.iter().map(|c| c.substitute(subs, neg_subs)).collect()),
            Formula::Or(cs) => Formula::or(cs.iter().map(|c| c.substitute(subs, neg_subs)).collect()),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Lit(_) => 0,
            Formula::And(cs) | Formula::Or(cs) => 1 + cs.iter().map(Formula::depth).max().unwrap_or(0),
        }
    }

    pub fn dnf_width(&self) -> usize {
        match self {
            Formula::Lit(_) => 1,
            Formula::And(cs) => cs.iter().map(Formula::dnf_width).sum(),
            Formula::Or(cs) => cs.iter().map(Formula::dnf_width).max().unwrap_or(0),
        }
    }

    pub fn is_monotone(&self) -> bool {
        match self {
            Formula::Lit(l) => !l.negated,
            Formula::And(cs) | Formula::Or(cs) => cs.iter().all(Formula::is_monotone),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Lit(_) => 1,
            Formula::And(cs) | Formula::Or(cs) => 1 + cs.iter().map(Formula::size).sum::<usize>(),
        }
    }

    /// Kind of the gates directly above the leaves, if they all agree.
    pub fn bottom_gate(&self) -> Option<GateKind> {
        fn collect(f: &Formula, out: &mut Vec<GateKind>) {
            match f {
                Formula::Lit(_) => {}
                Formula::And(cs) | Formula::Or(cs) => {
                    let kind = if matches!(f, Formula::And(_)) { GateKind::And } else { GateKind::Or };
                    if cs.iter().any(|c| matches!(c, Formula::Lit(_))) {
                        out.push(kind);
                    }
                    cs.iter().for_each(|c| collect(c, out));
                }
            }
        }
        let mut kinds = Vec::new();
        collect(self, &mut kinds);
        let first = *kinds.first()?;
        kinds.iter().all(|&k| k == first).then_some(first)
    }

    pub fn accounting(&self) -> FormulaAccounting {
        FormulaAccounting {
            depth: self.depth(),
            dnf_width: self.dnf_width(),
            monotone: self.is_monotone(),
            bottom_gate: self.bottom_gate(),
            size: self.size(),
        }
    }
}

/// The minimal monotone DNF when `f` is monotone, otherwise the minterm DNF.
pub fn canonical_dnf(f: &BooleanFunction) -> Dnf {
    let n = f.arity();
    let trues: Vec<Point> = f.preimage(-1).collect();
    let monotone = f.is_total()
        && f.iter()
            .all(|(x, v)| v == 1 || (0..n).all(|i| f.eval(x | (1 << i)) == -1));
    let clauses = if monotone {
        trues
            .iter()
            .filter(|&&x| (0..n).all(|i| x & (1 << i) == 0 || f.eval(x & !(1 << i)) == 1))
            .map(|&x| (0..n).filter(|i| x & (1 << i) != 0).map(Literal::pos).collect())
            .collect()
    } else {
        trues
            .iter()
            .map(|&x| {
                (0..n)
                    .map(|i| if x & (1 << i) != 0 { Literal::pos(i) } else { Literal::neg(i) })
                    .collect()
            })
            .collect()
    };
    Dnf { n, clauses }
}
