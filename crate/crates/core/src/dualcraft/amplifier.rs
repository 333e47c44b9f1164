//! The `AND_M` amplifier `Ψ`, obtained by two linear programs.
//!
//! First maximize `⟨Ψ, AND_M⟩` over `‖Ψ‖₁ = 1`, `⟨Ψ, 1⟩ = 0` and `Ψ ≥ 0`
//! wherever `AND_M = +1`. Then, holding that optimum, maximize `Ψ(1^M)`.
//! The second stage picks the vertex that puts its positive mass on the
//! all-FALSE input, which is what makes the composed correlation bound
//! work for every one-sided inner witness.

use super::CraftError;
use crate::exactlp::{DualWitness, LinearProgram, Relation, Sense};
use crate::fncore::cube::Point;
use crate::fncore::{make_basic, Gate};
use crate::rational::{int, Q};
use num_traits::{One, Zero};

pub fn amplifier_psi(big_m: usize) -> Result<DualWitness, CraftError> {
    let and = make_basic(Gate::And, big_m).map_err(CraftError::Fn)?;
    let build = |fixed: Option<&Q>| -> Result<(Q, DualWitness), CraftError> {
        let mut lp = LinearProgram::new(Sense::Max);
        let mut cols: Vec<(Point, usize, Q)> = Vec::new();
        for (x, v) in and.iter() {
            let fx = Q::from(num_bigint::BigInt::from(v));
            let stage_two = |pt: Point, s: &Q| if pt == 0 { s.clone() } else { Q::zero() };
            let plus_obj = if fixed.is_some() { stage_two(x, &int(1)) } else { fx.clone() };
            cols.push((x, lp.add_var(plus_obj, false), Q::one()));
            if v == -1 {
                let minus_obj = if fixed.is_some() { stage_two(x, &int(-1)) } else { -fx };
                cols.push((x, lp.add_var(minus_obj, false), -Q::one()));
            }
        }
        lp.add_constraint(
            cols.iter().map(|(_, j, s)| (*j, s.clone())).collect(),
            Relation::Eq,
            Q::zero(),
        );
        lp.add_constraint(
            cols.iter().map(|(_, j, _)| (*j, Q::one())).collect(),
            Relation::Eq,
            Q::one(),
        );
        if let Some(opt) = fixed {
            let row = cols
                .iter()
                .map(|(x, j, s)| (*j, s * Q::from(num_bigint::BigInt::from(and.eval(*x)))))
                .collect();
            lp.add_constraint(row, Relation::Eq, opt.clone());
        }
        let sol = lp.solve()?;
        let w = DualWitness::from_entries(big_m, cols.iter().map(|(x, j, s)| (*x, s * &sol.x[*j])));
        Ok((sol.value, w))
    };
    let (best, _) = build(None)?;
    let (_, psi) = build(Some(&best))?;
    Ok(psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fncore::cube;
    use crate::rational::frac;

    #[test]
    fn amplifier_shape() {
        for m in 1..=4 {
            let psi = amplifier_psi(m).unwrap();
            assert_eq!(psi.l1(), int(1));
            assert_eq!(psi.total(), int(0));
            assert_eq!(psi.get(0), frac(1, 2));
            assert_eq!(psi.get(cube::full_mask(m)), frac(-1, 2));
        }
    }
}
