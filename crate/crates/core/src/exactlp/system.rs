//! Linear systems over witness values with an `ℓ1` objective.
//!
//! Unknowns are the values of `φ` on a set of free points; some points
//! may carry pinned values and every other point is zero. The solver
//! returns an `ℓ1`-minimal assignment to the free points.

use super::degree::independent_monomials;
use super::simplex::{LinearProgram, LpError, Relation, Sense};
use super::witness::DualWitness;
use crate::fncore::cube::{self, Point};
use crate::rational::Q;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

#[derive(Debug, Clone)]
pub struct WitnessSystem {
    arity: usize,
    free: Vec<Point>,
    pinned: BTreeMap<Point, Q>,
    orthogonal_below: usize,
    equalities: Vec<(Vec<(Point, Q)>, Q)>,
}

#[derive(Debug, Clone)]
pub struct SystemSolution {
    pub witness: DualWitness,
    /// `Σ |φ(x)|` over the free points.
    pub free_mass: Q,
}

impl WitnessSystem {
    pub fn new(arity: usize) -> Self {
        Self {
            arity,
            free: Vec::new(),
            pinned: BTreeMap::new(),
            orthogonal_below: 0,
            equalities: Vec::new(),
        }
    }

    pub fn free_points(mut self, pts: impl IntoIterator<Item = Point>) -> Self {
        self.free.extend(pts);
        self.free.sort_unstable();
        self.free.dedup();
        self
    }

    pub fn pin(mut self, x: Point, v: Q) -> Self {
        self.pinned.insert(x, v);
        self
    }

    /// Requires orthogonality to every monomial of degree `< d`.
    pub fn orthogonal_below(mut self, d: usize) -> Self {
        self.orthogonal_below = d;
        self
    }

    /// Adds `Σ a_x φ(x) = rhs` over free and pinned points.
    pub fn equality(mut self, coeffs: Vec<(Point, Q)>, rhs: Q) -> Self {
        self.equalities.push((coeffs, rhs));
        self
    }

    pub fn solve(&self) -> Result<SystemSolution, LpError> {
        let free: Vec<Point> = self
            .free
            .iter()
            .copied()
            .filter(|x| !self.pinned.contains_key(x))
            .collect();
        let mut lp = LinearProgram::new(Sense::Min);
        let cols: BTreeMap<Point, (usize, usize)> = free
            .iter()
            .map(|&x| (x, (lp.add_var(Q::one(), false), lp.add_var(Q::one(), false))))
            .collect();
        let mut rows: Vec<(Vec<(Point, Q)>, Q)> = self.equalities.clone();
        if self.orthogonal_below > 0 {
            let support: Vec<Point> = {
                let mut s: Vec<Point> = free.iter().chain(self.pinned.keys()).copied().collect();
                s.sort_unstable();
                s
            };
            for m in independent_monomials(&support, self.arity, self.orthogonal_below - 1) {
                rows.push((
                    support
                        .iter()
                        .map(|&x| (x, Q::from_integer(cube::chi(m, x).into())))
                        .collect(),
                    Q::zero(),
                ));
            }
        }
        for (coeffs, rhs) in rows {
            let mut row = Vec::new();
            let mut rhs = rhs;
            for (x, a) in coeffs {
                if let Some(v) = self.pinned.get(&x) {
                    rhs -= &a * v;
                } else if let Some(&(p, n)) = cols.get(&x) {
                    row.push((p, a.clone()));
                    row.push((n, -a));
                }
            }
            if row.is_empty() {
                if !rhs.is_zero() {
                    return Err(LpError::Infeasible);
                }
                continue;
            }
            lp.add_constraint(row, Relation::Eq, rhs);
        }
        let sol = lp.solve()?;
        let mut w = DualWitness::from_entries(
            self.arity,
            self.pinned.iter().map(|(&x, v)| (x, v.clone())),
        );
        for (&x, &(p, n)) in &cols {
            w.add(x, &sol.x[p] - &sol.x[n]);
        }
        Ok(SystemSolution {
            witness: w,
            free_mass: sol.value,
        })
    }
}
