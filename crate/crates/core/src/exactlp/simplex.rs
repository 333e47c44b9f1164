//! Dense two-phase simplex over exact rationals.
//!
//! Pricing is Dantzig's rule until a long run of degenerate pivots, after
//! which the solver switches to Bland's rule for the rest of the solve.
//! The ratio test always breaks ties by the smallest basic column index.

use crate::rational::Q;
use num_traits::{One, Signed, Zero};

const DEGENERATE_RUN_LIMIT: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Max,
    Min,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    /// Sparse row: `(variable, coefficient)`.
    pub coeffs: Vec<(usize, Q)>,
    pub rel: Relation,
    pub rhs: Q,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LpError {
    #[error("INFEASIBLE: the constraint system has no solution")]
    Infeasible,
    #[error("UNBOUNDED: the objective is unbounded on the feasible region")]
    Unbounded,
    #[error("malformed program: {0}")]
    Malformed(String),
}

/// A linear program `opt c·x s.t. rows, x_j ≥ 0 unless free`.
#[derive(Debug, Clone, Default)]
pub struct LinearProgram {
    num_vars: usize,
    free: Vec<bool>,
    objective: Vec<Q>,
    maximize: bool,
    constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub value: Q,
    pub x: Vec<Q>,
    /// One multiplier per constraint, in the convention of the stated
    /// program: `b·y = value` and `Aᵀy` dominates `c` (equal on free or
    /// basic variables). For a maximization, `≤` rows get `y ≥ 0`.
    pub duals: Vec<Q>,
    pub pivots: usize,
}

impl LinearProgram {
    pub fn new(sense: Sense) -> Self {
        Self {
            maximize: sense == Sense::Max,
            ..Self::default()
        }
    }

    /// Adds a variable with objective coefficient `c`; returns its index.
    pub fn add_var(&mut self, c: Q, free: bool) -> usize {
        self.objective.push(c);
        self.free.push(free);
        self.num_vars += 1;
        self.num_vars - 1
    }

    pub fn add_vars(&mut self, count: usize, c: Q, free: bool) -> std::ops::Range<usize> {
        let start = self.num_vars;
        for _ in 0..count {
            self.add_var(c.clone(), free);
        }
        start..self.num_vars
    }

    pub fn set_objective(&mut self, var: usize, c: Q) {
        self.objective[var] = c;
    }

    pub fn add_constraint(&mut self, coeffs: Vec<(usize, Q)>, rel: Relation, rhs: Q) -> usize {
        self.constraints.push(Constraint { coeffs, rel, rhs });
        self.constraints.len() - 1
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn solve(&self) -> Result<LpSolution, LpError> {
        if let Some(c) = self
            .constraints
            .iter()
            .flat_map(|c| &c.coeffs)
            .find(|(v, _)| *v >= self.num_vars)
        {
            return Err(LpError::Malformed(format!("unknown variable {}", c.0)));
        }
        Tableau::build(self).run(self)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ColKind {
    Structural,
    Slack,
    Artificial,
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    kinds: Vec<ColKind>,
    /// Column that formed the initial identity in each row.
    id_col: Vec<usize>,
    row_sign: Vec<i8>,
    /// `(positive part, negative part)` columns of each original variable.
    var_cols: Vec<(usize, Option<usize>)>,
    pivots: usize,
    bland: bool,
    degenerate_run: usize,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Self {
        let mut kinds = Vec::new();
        let mut var_cols = Vec::with_capacity(lp.num_vars);
        for j in 0..lp.num_vars {
            let pos = kinds.len();
            kinds.push(ColKind::Structural);
            let neg = if lp.free[j] {
                kinds.push(ColKind::Structural);
                Some(pos + 1)
            } else {
                None
            };
            var_cols.push((pos, neg));
        }
        let m = lp.constraints.len();
        let mut row_sign = Vec::with_capacity(m);
        let mut rels = Vec::with_capacity(m);
        for c in &lp.constraints {
            let flip = c.rhs.is_negative();
            row_sign.push(if flip { -1 } else { 1 });
            rels.push(match (c.rel, flip) {
                (Relation::Le, true) => Relation::Ge,
                (Relation::Ge, true) => Relation::Le,
                (r, _) => r,
            });
        }
        // Slack / surplus columns, then artificials.
        let mut slack_of = vec![None; m];
        for i in 0..m {
            if rels[i] != Relation::Eq {
                slack_of[i] = Some(kinds.len());
                kinds.push(ColKind::Slack);
            }
        }
        let mut art_of = vec![None; m];
        for i in 0..m {
            if rels[i] != Relation::Le {
                art_of[i] = Some(kinds.len());
                kinds.push(ColKind::Artificial);
            }
        }
        let width = kinds.len() + 1;
        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut id_col = Vec::with_capacity(m);
        for (i, c) in lp.constraints.iter().enumerate() {
            let s = Q::from_integer(row_sign[i].into());
            let mut row = vec![Q::zero(); width];
            for (v, a) in &c.coeffs {
                let (pos, neg) = var_cols[*v];
                row[pos] += a * &s;
                if let Some(neg) = neg {
                    row[neg] -= a * &s;
                }
            }
            row[width - 1] = &c.rhs * &s;
            if let Some(sl) = slack_of[i] {
                row[sl] = if rels[i] == Relation::Le {
                    Q::one()
                } else {
                    -Q::one()
                };
            }
            let unit = match art_of[i] {
                Some(a) => {
                    row[a] = Q::one();
                    a
                }
                None => slack_of[i].expect("<= rows carry a slack"),
            };
            basis.push(unit);
            id_col.push(unit);
            rows.push(row);
        }
        Self {
            rows,
            basis,
            kinds,
            id_col,
            row_sign,
            var_cols,
            pivots: 0,
            bland: false,
            degenerate_run: 0,
        }
    }

    fn width(&self) -> usize {
        self.kinds.len()
    }

    /// Reduced-cost row `z_j − c_j` (last entry: objective value).
    fn objective_row(&self, cost: &[Q]) -> Vec<Q> {
        let w = self.width();
        let mut obj: Vec<Q> = (0..=w)
            .map(|j| if j < w { -cost[j].clone() } else { Q::zero() })
            .collect();
        for (r, &b) in self.basis.iter().enumerate() {
            if cost[b].is_zero() {
                continue;
            }
            for (j, v) in self.rows[r].iter().enumerate() {
                if !v.is_zero() {
                    obj[j] += &cost[b] * v;
                }
            }
        }
        obj
    }

    fn pivot(&mut self, obj: &mut [Q], r: usize, e: usize) {
        let piv = self.rows[r][e].clone();
        if !piv.is_one() {
            for v in self.rows[r].iter_mut() {
                if !v.is_zero() {
                    *v /= &piv;
                }
            }
        }
        let prow = self.rows[r].clone();
        let nz: Vec<usize> = (0..prow.len()).filter(|&j| !prow[j].is_zero()).collect();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[e].is_zero() {
                continue;
            }
            let f = row[e].clone();
            for &j in &nz {
                row[j] -= &f * &prow[j];
            }
        }
        if !obj[e].is_zero() {
            let f = obj[e].clone();
            for &j in &nz {
                obj[j] -= &f * &prow[j];
            }
        }
        self.basis[r] = e;
        self.pivots += 1;
    }

    fn entering(&self, obj: &[Q], allow_artificial: bool) -> Option<usize> {
        let candidates = (0..self.width()).filter(|&j| {
            obj[j].is_negative() && (allow_artificial || self.kinds[j] != ColKind::Artificial)
        });
        if self.bland {
            candidates.min()
        } else {
            // Most negative reduced cost; lowest index on ties.
            candidates.fold(None, |best: Option<usize>, j| match best {
                Some(b) if obj[b] <= obj[j] => Some(b),
                _ => Some(j),
            })
        }
    }

    fn leaving(&self, e: usize) -> Option<usize> {
        let last = self.width();
        let mut best: Option<(usize, Q)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            if !row[e].is_positive() {
                continue;
            }
            let ratio = &row[last] / &row[e];
            let better = match &best {
                None => true,
                Some((br, bv)) => ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br]),
            };
            if better {
                best = Some((r, ratio));
            }
        }
        best.map(|(r, _)| r)
    }

    /// Runs simplex iterations to optimality on the given objective row.
    fn optimize(&mut self, obj: &mut [Q], allow_artificial: bool) -> Result<(), LpError> {
        while let Some(e) = self.entering(obj, allow_artificial) {
            let r = self.leaving(e).ok_or(LpError::Unbounded)?;
            let degenerate = self.rows[r][self.width()].is_zero();
            self.pivot(obj, r, e);
            if degenerate {
                self.degenerate_run += 1;
                if self.degenerate_run >= DEGENERATE_RUN_LIMIT {
                    self.bland = true;
                }
            } else {
                self.degenerate_run = 0;
            }
        }
        Ok(())
    }

    fn run(mut self, lp: &LinearProgram) -> Result<LpSolution, LpError> {
        let w = self.width();
        if self.kinds.contains(&ColKind::Artificial) {
            let cost: Vec<Q> = self
                .kinds
                .iter()
                .map(|k| {
                    if *k == ColKind::Artificial {
                        -Q::one()
                    } else {
                        Q::zero()
                    }
                })
                .collect();
            let mut obj = self.objective_row(&cost);
            self.optimize(&mut obj, true)
                .expect("phase one is bounded by construction");
            if !obj[w].is_zero() {
                return Err(LpError::Infeasible);
            }
            // Drive zero-level artificials out of the basis where possible.
            for r in 0..self.rows.len() {
                if self.kinds[self.basis[r]] != ColKind::Artificial {
                    continue;
                }
                if let Some(e) = (0..w)
                    .find(|&j| self.kinds[j] != ColKind::Artificial && !self.rows[r][j].is_zero())
                {
                    self.pivot(&mut obj, r, e);
                }
            }
        }
        let sign = if lp.maximize { Q::one() } else { -Q::one() };
        let mut cost = vec![Q::zero(); w];
        for (j, &(pos, neg)) in self.var_cols.iter().enumerate() {
            cost[pos] = &lp.objective[j] * &sign;
            if let Some(neg) = neg {
                cost[neg] = -&cost[pos];
            }
        }
        let mut obj = self.objective_row(&cost);
        self.degenerate_run = 0;
        self.optimize(&mut obj, false)?;

        let mut col_value = vec![Q::zero(); w];
        for (r, &b) in self.basis.iter().enumerate() {
            col_value[b] = self.rows[r][w].clone();
        }
        let x = self
            .var_cols
            .iter()
            .map(|&(pos, neg)| match neg {
                Some(neg) => &col_value[pos] - &col_value[neg],
                None => col_value[pos].clone(),
            })
            .collect();
        let duals = (0..self.rows.len())
            .map(|i| {
                let y = obj[self.id_col[i]].clone() * Q::from_integer(self.row_sign[i].into());
                &y * &sign
            })
            .collect();
        Ok(LpSolution {
            value: &obj[w] * &sign,
            x,
            duals,
            pivots: self.pivots,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn single_bound() {
        let mut lp = LinearProgram::new(Sense::Max);
        let x = lp.add_var(int(1), false);
        lp.add_constraint(vec![(x, int(1))], Relation::Le, int(3));
        let s = lp.solve().unwrap();
        assert_eq!(s.value, int(3));
        assert_eq!(s.x, vec![int(3)]);
        assert_eq!(s.duals, vec![int(1)]);
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(Sense::Min);
        let x = lp.add_var(int(0), false);
        lp.add_constraint(vec![(x, int(1))], Relation::Le, int(-1));
        assert_eq!(lp.solve(), Err(LpError::Infeasible));
        let mut lp = LinearProgram::new(Sense::Max);
        let x = lp.add_var(int(1), true);
        lp.add_constraint(vec![(x, int(1))], Relation::Ge, int(0));
        assert_eq!(lp.solve(), Err(LpError::Unbounded));
    }

    #[test]
    fn duals_certify_optimum() {
        // min 2a + 3b  s.t. a + b >= 4, a - b <= 1, a free-signed? no: a,b >= 0
        let mut lp = LinearProgram::new(Sense::Min);
        let a = lp.add_var(int(2), false);
        let b = lp.add_var(int(3), false);
        lp.add_constraint(vec![(a, int(1)), (b, int(1))], Relation::Ge, int(4));
        lp.add_constraint(vec![(a, int(1)), (b, int(-1))], Relation::Le, int(1));
        let s = lp.solve().unwrap();
        assert_eq!(s.value, frac(19, 2));
        assert_eq!(s.x, vec![frac(5, 2), frac(3, 2)]);
        let by: Q = &s.duals[0] * int(4) + &s.duals[1] * int(1);
        assert_eq!(by, s.value);
    }

    #[test]
    fn equality_rows_and_free_vars() {
        // max x + y s.t. x - y = 1, x + 2y <= 4, y free
        let mut lp = LinearProgram::new(Sense::Max);
        let x = lp.add_var(int(1), false);
        let y = lp.add_var(int(1), true);
        lp.add_constraint(vec![(x, int(1)), (y, int(-1))], Relation::Eq, int(1));
        lp.add_constraint(vec![(x, int(1)), (y, int(2))], Relation::Le, int(4));
        let s = lp.solve().unwrap();
        assert_eq!(s.value, int(3));
        assert_eq!(s.x, vec![int(2), int(1)]);
    }

    #[test]
    fn redundant_equalities() {
        let mut lp = LinearProgram::new(Sense::Max);
        let x = lp.add_var(int(1), false);
        lp.add_constraint(vec![(x, int(1))], Relation::Eq, int(2));
        lp.add_constraint(vec![(x, int(2))], Relation::Eq, int(4));
        assert_eq!(lp.solve().unwrap().value, int(2));
    }
}
