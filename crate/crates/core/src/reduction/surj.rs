//! Binary encodings of range items and the functions `g*` and `g`.
//!
//! `g*` reads `N` blocks of `w` bits, block `j` at bits `j·w .. (j+1)·w`;
//! each block decodes to an item of `[R]_0` and `g*(u) = G^prop(Y(s_u))`.
//! `g` doubles the inputs so that every negated literal of a formula for
//! `g*` becomes a fresh positive variable.

use super::formula::Formula;
use super::ReductionError;
use crate::exactlp::DualWitness;
use crate::fncore::cube::{self, Point};
use crate::fncore::{BooleanFunction, Dnf, Domain, Literal, Structure};
use serde::Serialize;

/// `u ↦ (binary value of u) mod (R+1)`, bit `t` of the block worth `2^t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SurjEncoding {
    pub range: usize,
    pub width: usize,
}

pub(crate) fn ceil_log2(v: usize) -> usize {
    (usize::BITS - (v.max(1) - 1).leading_zeros()) as usize
}

impl SurjEncoding {
    /// Default width `6⌈log₂(R+1)⌉`.
    pub fn new(range: usize) -> Result<Self, ReductionError> {
        Self::with_width(range, 6 * ceil_log2(range + 1))
    }

    pub fn with_width(range: usize, width: usize) -> Result<Self, ReductionError> {
        if range == 0 {
            return Err(ReductionError::Parameter("R must be at least 1".into()));
        }
        let enc = Self { range, width };
        if width >= 63 || !enc.is_surjective() {
            return Err(ReductionError::NotSurjective(format!(
                "{width} bits cannot name all {} items",
                range + 1
            )));
        }
        Ok(enc)
    }

    pub fn decode(&self, block: Point) -> usize {
        (block % (self.range as u64 + 1)) as usize
    }

    pub fn preimage(&self, item: usize) -> Vec<Point> {
        (0..1u64 << self.width).filter(|&u| self.decode(u) == item).collect()
    }

    pub fn is_surjective(&self) -> bool {
        (1u64 << self.width) > self.range as u64
    }

    /// `s_u = (enc(u_1), .., enc(u_N))`.
    pub fn decode_all(&self, u: Point, n_len: usize) -> Vec<usize> {
        let mask = cube::full_mask(self.width);
        (0..n_len).map(|j| self.decode((u >> (j * self.width)) & mask)).collect()
    }
}

/// `g*(u) = F_R(b_1, .., b_R)` with `b_i = -1` iff item `i` occurs in `s_u`.
pub fn build_gstar(f: &BooleanFunction, n_len: usize, enc: &SurjEncoding) -> Result<BooleanFunction, ReductionError> {
    if enc.range != f.arity() {
        return Err(ReductionError::Parameter(format!(
            "encoding range {} differs from F_R arity {}",
            enc.range,
            f.arity()
        )));
    }
    Ok(BooleanFunction::from_fn(n_len * enc.width, Domain::All, Structure::Composed, |u| {
        let b = enc
            .decode_all(u, n_len)
            .into_iter()
            .filter(|&i| i > 0)
            .fold(0, |acc: Point, i| acc | (1 << (i - 1)));
        f.eval(b)
    })?)
}

/// `AND` of the literals fixing block `j` to the codeword `c`.
fn block_equals(j: usize, c: Point, w: usize) -> Formula {
    Formula::and(
        (0..w)
            .map(|t| {
                let var = j * w + t;
                Formula::Lit(if (c >> t) & 1 == 1 { Literal::pos(var) } else { Literal::neg(var) })
            })
            .collect(),
    )
}

/// A formula for `g*` with negations only at the leaves: each `b_i` is an
/// `OR` over blocks and codewords, and each `¬b_i` an `AND` over blocks of
/// `OR`s over the other codewords, substituted into the DNF of `F_R`.
pub fn gstar_formula(dnf: &Dnf, n_len: usize, enc: &SurjEncoding) -> Formula {
    let w = enc.width;
    let b: Vec<Formula> = (1..=enc.range)
        .map(|i| {
            let pre = enc.preimage(i);
            Formula::or(
                (0..n_len)
                    .flat_map(|j| pre.iter().map(move |&c| block_equals(j, c, w)))
                    .collect(),
            )
        })
        .collect();
    let not_b: Vec<Formula> = (1..=enc.range)
        .map(|i| {
            Formula::and(
                (0..n_len)
                    .map(|j| {
                        Formula::or(
                            (0..1u64 << w)
                                .filter(|&c| enc.decode(c) != i)
                                .map(|c| block_equals(j, c, w))
                                .collect(),
                        )
                    })
                    .collect(),
            )
        })
        .collect();
    Formula::from_dnf(dnf).substitute(&b, &not_b)
}

/// The monotone formula for `g` on `2m` inputs: literal `¬v_i` becomes `v_{m+i}`.
pub fn build_g(gstar: &Formula, m: usize) -> Formula {
    gstar.map_literals(&|l: Literal| if l.negated { Literal::pos(l.var + m) } else { l })
}

/// The point `(v, ¬v)` of the doubled cube.
pub fn diagonal_point(v: Point, m: usize) -> Point {
    v | ((!v & cube::full_mask(m)) << m)
}

/// `ψ'(v, ¬v) = ψ(v)`, zero off the diagonal. Every monomial restricted to
/// the diagonal has no larger degree, so pure high degree is preserved.
pub fn lift_witness(psi: &DualWitness) -> DualWitness {
    let m = psi.arity();
    DualWitness::from_entries(2 * m, psi.iter().map(|(v, c)| (diagonal_point(v, m), c.clone())))
}
