//! Dual block composition `(Ψ ⋆ ψ)(x) = 2^M · Ψ(.., sign ψ(x_i), ..) · Π |ψ(x_i)|`.
//!
//! Block `i` of the composed input occupies bits `i·m .. (i+1)·m`. Only
//! tuples drawn from the support of `ψ` can give nonzero values, so the
//! composition is built by enumerating `supp(ψ)^M`.

use super::CraftError;
use crate::exactlp::{sign, DualWitness};
use crate::fncore::cube::{self, Point};
use crate::rational::{self, Q};
use num_traits::{Signed, Zero};

/// Largest composed support enumerated explicitly.
pub const MAX_COMPOSED_SUPPORT: usize = 1 << 22;

/// `z_i = sign(ψ(x_i))` for each block, packed as a point.
fn sign_pattern(psi_values: &[(Point, &Q)], choice: &[usize]) -> Point {
    choice.iter().enumerate().fold(0, |z, (i, &c)| {
        if sign(psi_values[c].1) < 0 {
            z | (1 << i)
        } else {
            z
        }
    })
}

pub fn dual_block_compose(outer: &DualWitness, inner: &DualWitness) -> Result<DualWitness, CraftError> {
    if outer.is_zero() || inner.is_zero() {
        return Err(CraftError::ZeroWitness);
    }
    let (big_m, m) = (outer.arity(), inner.arity());
    if big_m * m > cube::MAX_POINT_ARITY {
        return Err(CraftError::ArityMismatch(format!(
            "composed arity {} exceeds {}",
            big_m * m,
            cube::MAX_POINT_ARITY
        )));
    }
    let support: Vec<(Point, &Q)> = inner.iter().collect();
    let size = (support.len() as u128).pow(big_m as u32);
    if size > MAX_COMPOSED_SUPPORT as u128 {
        return Err(CraftError::TooLarge(format!(
            "composed support {size} exceeds {MAX_COMPOSED_SUPPORT}"
        )));
    }
    let scale = rational::pow2(big_m as u32);
    let mut out = DualWitness::zero(big_m * m);
    let mut choice = vec![0usize; big_m];
    loop {
        let z = sign_pattern(&support, &choice);
        let outer_z = outer.get(z);
        if !outer_z.is_zero() {
            let mut value = &scale * &outer_z;
            let mut x: Point = 0;
            for (i, &c) in choice.iter().enumerate() {
                value *= support[c].1.abs();
                x |= support[c].0 << (i * m);
            }
            out.add(x, value);
        }
        // Odometer over supp(ψ)^M, last block fastest.
        let mut i = big_m;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < support.len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// Value of `Ψ ⋆ ψ` at one point, straight from the definition.
pub fn compose_at(outer: &DualWitness, inner: &DualWitness, x: Point) -> Q {
    let (big_m, m) = (outer.arity(), inner.arity());
    let mask = cube::full_mask(m);
    let mut z: Point = 0;
    let mut prod = rational::pow2(big_m as u32);
    for i in 0..big_m {
        let v = inner.get((x >> (i * m)) & mask);
        if sign(&v) < 0 {
            z |= 1 << i;
        }
        prod *= v.abs();
    }
    prod * outer.get(z)
}
