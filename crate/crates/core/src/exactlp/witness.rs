//! Signed exact measures on the hypercube.

use crate::fncore::cube::{self, Point};
use crate::fncore::BooleanFunction;
use crate::rational::{self, Q};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Above this arity the dense transform is skipped in favour of scanning
/// monomials degree by degree.
const DENSE_TRANSFORM_ARITY: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DualWitness {
    arity: usize,
    entries: BTreeMap<Point, Q>,
}

/// `sign(v)`: `+1` for positive values, `-1` otherwise (including zero).
pub fn sign(v: &Q) -> i8 {
    if v.is_positive() {
        1
    } else {
        -1
    }
}

impl DualWitness {
    pub fn zero(arity: usize) -> Self {
        Self {
            arity,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(arity: usize, entries: impl IntoIterator<Item = (Point, Q)>) -> Self {
        let mut w = Self::zero(arity);
        for (x, v) in entries {
            w.add(x, v);
        }
        w
    }

    /// `x ↦ f(x)·scale` over the domain of `f`.
    pub fn from_function(f: &BooleanFunction, scale: &Q) -> Self {
        Self::from_entries(
            f.arity(),
            f.iter().map(|(x, v)| (x, scale * Q::from_integer(v.into()))),
        )
    }

    /// `χ_S / 2^n`.
    pub fn character(arity: usize, s: Point) -> Self {
        let scale = Q::new(1.into(), BigInt::from(1) << arity);
        Self::from_entries(
            arity,
            (0..1u64 << arity).map(|x| (x, &scale * Q::from_integer(cube::chi(s, x).into()))),
        )
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn get(&self, x: Point) -> Q {
        self.entries.get(&x).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&mut self, x: Point, v: Q) {
        debug_assert_eq!(x & !cube::full_mask(self.arity), 0);
        if v.is_zero() {
            return;
        }
        let e = self.entries.entry(x).or_insert_with(Q::zero);
        *e += v;
        if e.is_zero() {
            self.entries.remove(&x);
        }
    }

    pub fn set(&mut self, x: Point, v: Q) {
        if v.is_zero() {
            self.entries.remove(&x);
        } else {
            self.entries.insert(x, v);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Point, &Q)> {
        self.entries.iter().map(|(&x, v)| (x, v))
    }

    pub fn support(&self) -> impl Iterator<Item = Point> + '_ {
        self.entries.keys().copied()
    }

    pub fn support_size(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn l1(&self) -> Q {
        self.entries.values().map(|v| v.abs()).sum()
    }

    pub fn total(&self) -> Q {
        self.entries.values().sum()
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self::from_entries(self.arity, self.iter().map(|(x, v)| (x, v * s)))
    }

    /// Rescaled to unit `ℓ1` norm; `None` for the zero witness.
    pub fn normalized(&self) -> Option<Self> {
        let n = self.l1();
        if n.is_zero() {
            None
        } else {
            Some(self.scale(&(Q::from_integer(1.into()) / n)))
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, v) in other.iter() {
            out.add(x, -v);
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, v) in other.iter() {
            out.add(x, v.clone());
        }
        out
    }

    /// `⟨ψ, f⟩ = Σ ψ(x) f(x)`; `None` if the support leaves `f`'s domain.
    pub fn correlation(&self, f: &BooleanFunction) -> Option<Q> {
        let mut acc = Q::zero();
        for (x, v) in self.iter() {
            match f.get(x)? {
                1 => acc += v,
                _ => acc -= v,
            }
        }
        Some(acc)
    }

    /// Unnormalized Fourier coefficient `Σ ψ(x) χ_S(x)`.
    pub fn character_sum(&self, s: Point) -> Q {
        self.iter().fold(Q::zero(), |acc, (x, v)| {
            if cube::chi(s, x) > 0 {
                acc + v
            } else {
                acc - v
            }
        })
    }

    /// Direct check that `ψ` is orthogonal to every monomial of degree `< d`.
    pub fn certify_pure_high_degree(&self, d: usize) -> bool {
        d == 0
            || cube::masks_up_to_degree(self.arity, d - 1).all(|s| self.character_sum(s).is_zero())
    }

    /// The first monomial of degree `< d` with nonzero correlation, if any.
    pub fn low_degree_violation(&self, d: usize) -> Option<Point> {
        if d == 0 {
            return None;
        }
        cube::masks_up_to_degree(self.arity, d - 1).find(|&s| !self.character_sum(s).is_zero())
    }

    /// Largest `d` such that `ψ` is orthogonal to all monomials of degree
    /// `< d`. The zero witness reports `arity + 1`.
    pub fn pure_high_degree(&self) -> usize {
        if self.is_zero() {
            return self.arity + 1;
        }
        let dense = self.arity <= 12
            || (self.arity <= DENSE_TRANSFORM_ARITY && self.entries.len() >= (1usize << self.arity) / 256);
        if dense {
            return self.pure_high_degree_dense();
        }
        (0..=self.arity)
            .find(|&k| cube::masks_of_weight(self.arity, k).any(|s| !self.character_sum(s).is_zero()))
            .unwrap_or(self.arity + 1)
    }

    /// Fast Walsh–Hadamard transform on integer-scaled values.
    fn pure_high_degree_dense(&self) -> usize {
        let lcm = rational::lcm_of_denominators(self.entries.values());
        let mut a = vec![BigInt::zero(); 1 << self.arity];
        for (x, v) in self.iter() {
            a[x as usize] = (v * Q::from_integer(lcm.clone())).to_integer();
        }
        let mut h = 1;
        while h < a.len() {
            for i in (0..a.len()).step_by(2 * h) {
                for j in i..i + h {
                    let (u, v) = (a[j].clone(), a[j + h].clone());
                    a[j] = &u + &v;
                    a[j + h] = u - v;
                }
            }
            h *= 2;
        }
        a.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, _)| cube::weight(s as Point))
            .min()
            .unwrap_or(self.arity + 1)
    }

    /// `Σ_{|x| = t} |ψ(x)|` for `t = 0..=arity`.
    pub fn layer_masses(&self) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.arity + 1];
        for (x, v) in self.iter() {
            out[cube::weight(x)] += v.abs();
        }
        out
    }

    /// `Σ_{|x| > cap} |ψ(x)|`.
    pub fn mass_above(&self, cap: usize) -> Q {
        self.iter()
            .filter(|(x, _)| cube::weight(*x) > cap)
            .map(|(_, v)| v.abs())
            .sum()
    }

    pub fn max_support_weight(&self) -> Option<usize> {
        self.support().map(cube::weight).max()
    }

    /// Positive and negative parts `(μ₊, μ₋)` with `ψ = μ₊ − μ₋`.
    pub fn split(&self) -> (Self, Self) {
        let pos = self.iter().filter(|(_, v)| v.is_positive());
        let neg = self.iter().filter(|(_, v)| v.is_negative());
        (
            Self::from_entries(self.arity, pos.map(|(x, v)| (x, v.clone()))),
            Self::from_entries(self.arity, neg.map(|(x, v)| (x, -v))),
        )
    }

    pub fn to_file(&self) -> WitnessFile {
        WitnessFile {
            n: self.arity,
            entries: self
                .iter()
                .map(|(x, v)| WitnessEntry {
                    x: cube::to_bitstring(x, self.arity),
                    v: v.clone(),
                })
                .collect(),
        }
    }

    pub fn from_file(file: &WitnessFile) -> Result<Self, crate::fncore::FnError> {
        let mut w = Self::zero(file.n);
        for e in &file.entries {
            let (x, len) = cube::from_bitstring(&e.x)?;
            if len != file.n {
                return Err(crate::fncore::FnError::Malformed(format!(
                    "witness point `{}` has length {len}, expected {}",
                    e.x, file.n
                )));
            }
            w.add(x, e.v.clone());
        }
        Ok(w)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub x: String,
    #[serde(with = "crate::rational::serde_q")]
    pub v: Q,
}

/// `{"n": int, "entries": [{"x": bitstring, "v": "p/q"}]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFile {
    pub n: usize,
    pub entries: Vec<WitnessEntry>,
}

impl Serialize for DualWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_file().serialize(s)
    }
}

impl<'de> Deserialize<'de> for DualWitness {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let f = WitnessFile::deserialize(d)?;
        Self::from_file(&f).map_err(serde::de::Error::custom)
    }
}
