//! Witnesses of the form `ψ(x) = ω(|x|) / C(N, |x|)`.
//!
//! Such a witness is described by its arity and layer profile alone, so
//! its norm, correlation with `OR` and pure high degree are read off the
//! profile without touching `2^N` points.

use super::omega::{self, Omega};
use super::CraftError;
use crate::exactlp::DualWitness;
use crate::fncore::cube::{self, Point};
use crate::fncore::SymmetricProfile;
use crate::rational::{self, Q};
use num_traits::{Signed, Zero};

/// Largest arity materialized point by point.
pub const MAX_MATERIALIZE_ARITY: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricWitness {
    pub arity: usize,
    pub profile: SymmetricProfile,
}

impl SymmetricWitness {
    pub fn new(arity: usize, profile: SymmetricProfile) -> Result<Self, CraftError> {
        if profile.k() > arity {
            return Err(CraftError::Parameter(format!(
                "profile index {} exceeds arity {arity}",
                profile.k()
            )));
        }
        Ok(Self { arity, profile })
    }

    pub fn value(&self, x: Point) -> Q {
        let t = cube::weight(x);
        self.profile.get(t) / rational::binomial_q(self.arity as u64, t as u64)
    }

    pub fn l1(&self) -> Q {
        self.profile.l1()
    }

    pub fn layer_mass(&self, t: usize) -> Q {
        self.profile.get(t).abs()
    }

    pub fn or_correlation(&self) -> Q {
        omega::or_correlation(&self.profile)
    }

    pub fn pure_high_degree(&self) -> usize {
        omega::univariate_pure_degree(&self.profile).min(self.arity + 1)
    }

    /// Value at the all-FALSE input `1^N`.
    pub fn at_all_false(&self) -> Q {
        self.profile.get(0)
    }

    pub fn materialize(&self) -> Result<DualWitness, CraftError> {
        if self.arity > MAX_MATERIALIZE_ARITY {
            return Err(CraftError::TooLarge(format!(
                "arity {} above {MAX_MATERIALIZE_ARITY}",
                self.arity
            )));
        }
        let mut w = DualWitness::zero(self.arity);
        for t in self.profile.support() {
            let v = self.profile.get(t) / rational::binomial_q(self.arity as u64, t as u64);
            for x in cube::masks_of_weight(self.arity, t) {
                w.add(x, v.clone());
            }
        }
        Ok(w)
    }
}

/// `ψ(x) = ω(|x|)/C(N,|x|)` for an arbitrary profile.
pub fn psi_from_profile(n: usize, profile: SymmetricProfile) -> Result<SymmetricWitness, CraftError> {
    SymmetricWitness::new(n, profile)
}

/// The refined OR witness on `N` bits built from `ω` with index `k`.
pub fn psi_or(n: usize, k: usize) -> Result<(SymmetricWitness, Omega), CraftError> {
    if k > n {
        return Err(CraftError::Parameter(format!("need k <= N (k={k}, N={n})")));
    }
    let o = omega::omega(k, omega::DEFAULT_C)?;
    Ok((SymmetricWitness::new(n, o.normalized.clone())?, o))
}

/// Layer masses of a materialized witness, for cross-checking.
pub fn layer_profile_of(w: &DualWitness) -> Vec<Q> {
    let mut out = vec![Q::zero(); w.arity() + 1];
    for (x, v) in w.iter() {
        out[cube::weight(x)] += v;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fncore::{make_basic, Gate};
    use crate::rational::int;

    #[test]
    fn psi_or_30_25() {
        let (psi, _) = psi_or(30, 25).unwrap();
        assert_eq!(psi.l1(), int(1));
        assert_eq!(psi.layer_mass(3), int(0));
        assert!(psi.at_all_false() > int(0));
        assert!(psi.or_correlation() >= crate::rational::frac(1, 3));
        assert!(psi.pure_high_degree() >= 1);
    }

    #[test]
    fn materialized_agrees_with_profile() {
        let prof = super::super::omega::omega_lp(4, 2).unwrap().unwrap();
        let s = SymmetricWitness::new(6, prof).unwrap();
        let w = s.materialize().unwrap();
        assert_eq!(w.l1(), s.l1());
        assert_eq!(w.pure_high_degree(), s.pure_high_degree());
        let or6 = make_basic(Gate::Or, 6).unwrap();
        assert_eq!(w.correlation(&or6).unwrap(), s.or_correlation());
    }
}
