//! Zeroing out overweight mass while keeping low-degree orthogonality.
//!
//! For `|y| > D`, `φ_y` equals 1 at `y`, vanishes on every other point of
//! weight `> D`, and is orthogonal to all polynomials of degree `< D`. It is
//! computed as the `ℓ1`-minimal solution of that linear system.

use super::CraftError;
use crate::exactlp::{DualWitness, WitnessSystem};
use crate::fncore::cube::{self, Point};
use crate::rational::{self, int, Q};
use crate::report::{Ledger, Property, Rel};
use num_traits::One;
use std::collections::BTreeMap;

pub fn rs_phi(y: Point, degree: usize, arity: usize) -> Result<DualWitness, CraftError> {
    if arity == 0 || degree > arity - 1 {
        return Err(CraftError::Parameter(format!(
            "need 0 <= D <= m-1 (D={degree}, m={arity})"
        )));
    }
    if cube::weight(y) <= degree {
        return Err(CraftError::Parameter(format!(
            "need |y| > D (|y|={}, D={degree})",
            cube::weight(y)
        )));
    }
    let sol = WitnessSystem::new(arity)
        .free_points(cube::points_up_to_weight(arity, degree))
        .pin(y, Q::one())
        .orthogonal_below(degree)
        .solve()?;
    Ok(sol.witness)
}

/// Checks the four defining properties of `φ_y`.
pub fn rs_phi_properties(y: Point, degree: usize, phi: &DualWitness) -> Ledger {
    let mut l = Ledger::new();
    l.push(Property::compare("value_at_y", &phi.get(y), Rel::Eq, &int(1), true));
    let stray = phi
        .iter()
        .filter(|(x, _)| *x != y && cube::weight(*x) > degree)
        .count();
    l.push(Property::compare_int("zero_above_degree", stray as i64, Rel::Eq, 0, true));
    l.push(Property::check(
        "orthogonal_below_degree",
        phi.certify_pure_high_degree(degree),
    ));
    let low: Q = phi
        .iter()
        .filter(|(x, _)| cube::weight(*x) <= degree)
        .map(|(_, v)| rational::abs(v))
        .sum();
    let bound = rational::pow2(degree as u32)
        * rational::binomial_q(cube::weight(y) as u64, degree as u64);
    l.push(Property::compare("low_weight_mass", &low, Rel::Le, &bound, true));
    l
}

/// `ν = Σ_{|y| > N} ζ(y)·φ_y`.
pub fn correction_nu(zeta: &DualWitness, cap: usize, degree: usize) -> Result<DualWitness, CraftError> {
    let m = zeta.arity();
    if degree > cap {
        return Err(CraftError::Parameter(format!(
            "correction degree {degree} must not exceed the weight cap {cap}"
        )));
    }
    let mut nu = DualWitness::zero(m);
    let mut cache: BTreeMap<Point, DualWitness> = BTreeMap::new();
    for (y, v) in zeta.iter() {
        if cube::weight(y) <= cap {
            continue;
        }
        let phi = match cache.get(&y) {
            Some(p) => p.clone(),
            None => {
                let p = rs_phi(y, degree, m)?;
                cache.insert(y, p.clone());
                p
            }
        };
        for (x, w) in phi.iter() {
            nu.add(x, v * w);
        }
    }
    Ok(nu)
}

/// `ζ̂ = (ζ − ν)/‖ζ − ν‖₁`.
pub fn finalize_zetahat(zeta: &DualWitness, nu: &DualWitness) -> Result<DualWitness, CraftError> {
    zeta.sub(nu).normalized().ok_or(CraftError::ZeroWitness)
}

/// Certified properties of `ν` against `ζ`.
pub fn correction_properties(zeta: &DualWitness, nu: &DualWitness, cap: usize, degree: usize) -> Ledger {
    let mut l = Ledger::new();
    l.push(Property::check("nu_orthogonal_below_D", nu.certify_pure_high_degree(degree)));
    let agree = zeta
        .support()
        .chain(nu.support())
        .filter(|&x| cube::weight(x) > cap)
        .all(|x| zeta.get(x) == nu.get(x));
    l.push(Property::check("nu_matches_zeta_above_cap", agree));
    l.push(Property::compare(
        "nu_norm_small",
        &nu.l1(),
        Rel::Le,
        &rational::frac(1, 10),
        false,
    ));
    l
}
