//! Share distributions, sampling and reconstruction.

use super::ShareError;
use crate::exactlp::DualWitness;
use crate::fncore::cube::{self, Point};
use crate::fncore::BooleanFunction;
use crate::rational::{self, int, Q};
use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

/// `2μ_+` and `2μ_−` as exact probability tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scheme {
    pub function: String,
    pub witness: String,
    pub n: usize,
    pub plus: Vec<(Point, Q)>,
    pub minus: Vec<(Point, Q)>,
}

#[derive(Serialize, Deserialize)]
struct DistEntry {
    x: String,
    p: String,
}

#[derive(Serialize, Deserialize)]
struct SchemeFile {
    function: String,
    witness: String,
    n: usize,
    plus: Vec<DistEntry>,
    minus: Vec<DistEntry>,
}

impl Scheme {
    pub fn to_json(&self) -> String {
        let entries = |d: &[(Point, Q)]| {
            d.iter()
                .map(|(x, p)| DistEntry { x: cube::to_bitstring(*x, self.n), p: rational::fmt(p) })
                .collect()
        };
        let file = SchemeFile {
            function: self.function.clone(),
            witness: self.witness.clone(),
            n: self.n,
            plus: entries(&self.plus),
            minus: entries(&self.minus),
        };
        serde_json::to_string_pretty(&file).expect("scheme serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, ShareError> {
        let file: SchemeFile = serde_json::from_str(s).map_err(|e| ShareError::Malformed(e.to_string()))?;
        let parse = |name: &str, d: Vec<DistEntry>| -> Result<Vec<(Point, Q)>, ShareError> {
            let mut out = Vec::with_capacity(d.len());
            for e in d {
                let (x, n) = cube::from_bitstring(&e.x)?;
                if n != file.n {
                    return Err(ShareError::Malformed(format!("{name}: point {} is not {} bits", e.x, file.n)));
                }
                let p = rational::parse(&e.p).map_err(|err| ShareError::Malformed(err.0))?;
                out.push((x, p));
            }
            if out.iter().map(|(_, p)| p).sum::<Q>() != Q::one() || out.iter().any(|(_, p)| p.is_negative()) {
                return Err(ShareError::Malformed(format!("{name} is not a probability distribution")));
            }
            Ok(out)
        };
        Ok(Scheme {
            plus: parse("plus", file.plus)?,
            minus: parse("minus", file.minus)?,
            function: file.function,
            witness: file.witness,
            n: file.n,
        })
    }

    pub fn distribution(&self, secret: i8) -> &[(Point, Q)] {
        if secret == 1 {
            &self.plus
        } else {
            &self.minus
        }
    }

    /// Exact sampler for `2μ_b`.
    pub fn sampler(&self, secret: i8) -> Sampler {
        Sampler::new(self.distribution(secret))
    }
}

pub fn scheme_from_witness(f_name: &str, w_name: &str, psi: &DualWitness) -> Result<Scheme, ShareError> {
    if psi.l1() != Q::one() {
        return Err(ShareError::NotNormalized(rational::fmt(&psi.l1())));
    }
    if !psi.total().is_zero() {
        return Err(ShareError::NotBalanced(rational::fmt(&psi.total())));
    }
    let two = int(2);
    let plus = psi.iter().filter(|(_, v)| v.is_positive()).map(|(x, v)| (x, v * &two)).collect();
    let minus = psi.iter().filter(|(_, v)| v.is_negative()).map(|(x, v)| (x, -(v * &two))).collect();
    Ok(Scheme {
        function: f_name.into(),
        witness: w_name.into(),
        n: psi.arity(),
        plus,
        minus,
    })
}

/// Inverts cumulative integer weights over a common denominator.
#[derive(Debug, Clone)]
pub struct Sampler {
    points: Vec<Point>,
    cumulative: Vec<BigUint>,
    total: BigUint,
}

impl Sampler {
    pub fn new(dist: &[(Point, Q)]) -> Self {
        let l = rational::lcm_of_denominators(dist.iter().map(|(_, p)| p));
        let mut acc = BigUint::zero();
        let mut cumulative = Vec::with_capacity(dist.len());
        for (_, p) in dist {
            let w = (p * Q::from_integer(l.clone())).to_integer();
            acc += w.to_biguint().expect("probabilities are nonnegative");
            cumulative.push(acc.clone());
        }
        Self { points: dist.iter().map(|(x, _)| *x).collect(), cumulative, total: acc }
    }

    pub fn sample(&self, rng: &mut impl Rng) -> Point {
        let u = rng.gen_biguint_below(&self.total);
        let i = self.cumulative.partition_point(|c| *c <= u);
        self.points[i]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShareBundle {
    pub secret: i8,
    pub shares: String,
    pub scheme: String,
    pub seed: u64,
}

pub fn split(secret: i8, scheme: &Scheme, seed: u64) -> ShareBundle {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let x = scheme.sampler(secret).sample(&mut rng);
    ShareBundle {
        secret,
        shares: cube::to_bitstring(x, scheme.n),
        scheme: format!("{}/{}", scheme.function, scheme.witness),
        seed,
    }
}

pub fn reconstruct(bundle: &ShareBundle, f: &BooleanFunction) -> Result<i8, ShareError> {
    let (x, n) = cube::from_bitstring(&bundle.shares)?;
    if n != f.arity() {
        return Err(ShareError::Malformed(format!("{n} shares for a function of arity {}", f.arity())));
    }
    Ok(f.eval(x))
}

/// `Pr_{2μ_+}[f = 1] − Pr_{2μ_−}[f = 1]`.
pub fn advantage(scheme: &Scheme, f: &BooleanFunction) -> Q {
    let pr = |d: &[(Point, Q)]| -> Q { d.iter().filter(|(x, _)| f.eval(*x) == 1).map(|(_, p)| p.clone()).sum() };
    pr(&scheme.plus) - pr(&scheme.minus)
}

/// Reconstruction successes over `trials` uniformly random secrets.
pub fn monte_carlo(scheme: &Scheme, f: &BooleanFunction, trials: u64, seed: u64) -> u64 {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let (sp, sm) = (scheme.sampler(1), scheme.sampler(-1));
    (0..trials)
        .filter(|_| {
            let b: i8 = if rng.gen::<bool>() { 1 } else { -1 };
            let x = if b == 1 { sp.sample(&mut rng) } else { sm.sample(&mut rng) };
            f.eval(x) == b
        })
        .count() as u64
}
