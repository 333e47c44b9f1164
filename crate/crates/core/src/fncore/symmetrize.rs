//! Layer averages and univariate profiles on `{0, .., k}`.

use crate::exactlp::poly::MultilinearPolynomial;
use crate::fncore::cube;
use crate::rational::{self, Q};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// An exact function on `{0, 1, .., k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricProfile {
    #[serde(with = "profile_values")]
    values: Vec<Q>,
    pub normalized: bool,
}

mod profile_values {
    use super::Q;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(crate::rational::fmt)
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| crate::rational::parse(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

impl SymmetricProfile {
    pub fn new(values: Vec<Q>) -> Self {
        assert!(!values.is_empty(), "a profile needs at least the value at 0");
        Self {
            values,
            normalized: false,
        }
    }

    /// Upper index `k`.
    pub fn k(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, t: usize) -> Q {
        self.values.get(t).cloned().unwrap_or_else(Q::zero)
    }

    pub fn values(&self) -> &[Q] {
        &self.values
    }

    pub fn l1(&self) -> Q {
        self.values.iter().map(|v| v.abs()).sum()
    }

    /// Scaled to unit `ℓ1` norm; `None` for the zero profile.
    pub fn normalize(&self) -> Option<Self> {
        let norm = self.l1();
        if norm.is_zero() {
            return None;
        }
        Some(Self {
            values: self.values.iter().map(|v| v / &norm).collect(),
            normalized: true,
        })
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&t| !self.values[t].is_zero())
            .collect()
    }

    /// Positive and negative parts `(ω₊, ω₋)` with `ω = ω₊ − ω₋`.
    pub fn split(&self) -> (Vec<Q>, Vec<Q>) {
        self.values
            .iter()
            .map(|v| {
                if v.is_positive() {
                    (v.clone(), Q::zero())
                } else {
                    (Q::zero(), -v)
                }
            })
            .unzip()
    }

    /// `Σ_t ω(t)·t^j`.
    pub fn moment(&self, j: u32) -> Q {
        self.values
            .iter()
            .enumerate()
            .map(|(t, v)| v * Q::from_integer(BigInt::from(t).pow(j)))
            .sum()
    }

    /// Degree of the interpolating polynomial through all values, read off
    /// the forward differences at 0; `None` for the zero profile.
    pub fn interpolation_degree(&self) -> Option<usize> {
        let mut diffs = self.values.clone();
        let mut degree = None;
        for j in 0..self.values.len() {
            if !diffs[0].is_zero() {
                degree = Some(j);
            }
            diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        degree
    }
}

/// `Σ_{|x|=t} χ_S(x)` for `|S| = s` on `n` variables (Krawtchouk value).
pub fn layer_character_sum(n: usize, s: usize, t: usize) -> BigInt {
    (0..=s.min(t))
        .map(|j| {
            let term = rational::binomial(s as u64, j as u64)
                * rational::binomial((n - s) as u64, (t - j) as u64);
            if j % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum()
}

/// `q(t)` = the average of `p` over the Hamming layer `|x| = t`.
pub fn minsky_papert_symmetrize(p: &MultilinearPolynomial) -> SymmetricProfile {
    let n = p.arity();
    let values = (0..=n)
        .map(|t| {
            let layer = rational::binomial_q(n as u64, t as u64);
            p.terms()
                .map(|(m, c)| {
                    c * Q::from_integer(layer_character_sum(n, cube::weight(m), t))
                })
                .sum::<Q>()
                / layer
        })
        .collect();
    SymmetricProfile::new(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn brute_layer_average(p: &MultilinearPolynomial, t: usize) -> Q {
        let n = p.arity();
        let pts: Vec<_> = cube::masks_of_weight(n, t).collect();
        let total: Q = pts.iter().map(|&x| p.eval(x)).sum();
        total / int(pts.len() as i64)
    }

    #[test]
    fn small_profiles() {
        let x1x2 = MultilinearPolynomial::monomial(2, 0b11, int(1));
        assert_eq!(minsky_papert_symmetrize(&x1x2).values(), &[int(1), int(-1), int(1)]);
        let x1 = MultilinearPolynomial::var(2, 0);
        assert_eq!(minsky_papert_symmetrize(&x1).values(), &[int(1), int(0), int(-1)]);
        let one = MultilinearPolynomial::constant(3, int(1));
        assert!(minsky_papert_symmetrize(&one).values().iter().all(|v| *v == int(1)));
    }

    #[test]
    fn agrees_with_direct_averaging() {
        let p = MultilinearPolynomial::from_coeffs(
            4,
            [(0b0101, frac(2, 3)), (0b1110, int(-1)), (0, frac(1, 5)), (0b1000, int(4))],
        );
        let q = minsky_papert_symmetrize(&p);
        for t in 0..=4 {
            assert_eq!(q.get(t), brute_layer_average(&p, t));
        }
        assert!(q.interpolation_degree().unwrap() <= p.degree());
    }

    #[test]
    fn interpolation_degree_of_powers() {
        let sq = SymmetricProfile::new((0..6).map(|t| int(t * t)).collect());
        assert_eq!(sq.interpolation_degree(), Some(2));
        assert_eq!(SymmetricProfile::new(vec![int(0); 3]).interpolation_degree(), None);
    }

    #[test]
    fn normalize_and_split() {
        let w = SymmetricProfile::new(vec![frac(1, 2), int(-1), int(0), frac(1, 2)]);
        let n = w.normalize().unwrap();
        assert_eq!(n.l1(), int(1));
        let (plus, minus) = n.split();
        assert_eq!(plus.iter().sum::<Q>(), frac(1, 2));
        assert_eq!(minus.iter().sum::<Q>(), frac(1, 2));
    }
}
