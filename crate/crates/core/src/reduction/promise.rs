//! `G^{≤N}`, `G^prop` and `G̃^prop` for a total `F_R`.
//!
//! `G^{≤N}` reads `R` blocks of `N` bits, block `i` at bits `i·N .. (i+1)·N`.
//! `G^prop` reads `R+1` blocks laid out as [`EncodingState::y`].

use super::ReductionError;
use crate::fncore::cube::{self, Point};
use crate::fncore::encoding::{decode_y, EncodingState};
use crate::fncore::{BooleanFunction, Domain, Structure};
use itertools::Itertools;
use std::collections::BTreeMap;

fn check_total(f: &BooleanFunction) -> Result<(), ReductionError> {
    if !f.is_total() {
        return Err(ReductionError::Parameter("F_R must be total".into()));
    }
    Ok(())
}

/// `F_R ∘ OR_N` on inputs of Hamming weight at most `N`.
pub fn restrict_promise(f: &BooleanFunction, n_len: usize) -> Result<BooleanFunction, ReductionError> {
    check_total(f)?;
    if n_len == 0 {
        return Err(ReductionError::Parameter("N must be at least 1".into()));
    }
    let r = f.arity();
    let block = cube::full_mask(n_len);
    Ok(BooleanFunction::from_fn(
        r * n_len,
        Domain::MaxWeight(n_len),
        Structure::Composed,
        |x| {
            let b = (0..r).fold(0, |acc: Point, i| {
                if (x >> (i * n_len)) & block != 0 {
                    acc | (1 << i)
                } else {
                    acc
                }
            });
            f.eval(b)
        },
    )?)
}

/// `b_i = -1` iff item `i ≥ 1` occurs in `s`, packed as bit `i-1`.
fn image_bits(s: &[usize]) -> Point {
    s.iter().filter(|&&i| i > 0).fold(0, |acc, &i| acc | (1 << (i - 1)))
}

/// A property of functions `[N] → [R]_0`, tabulated on `D_{N,R}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyFunction {
    pub n_len: usize,
    pub range: usize,
    values: BTreeMap<Point, i8>,
}

impl PropertyFunction {
    pub fn from_fn(n_len: usize, range: usize, f: impl Fn(&EncodingState) -> i8) -> Self {
        let values = EncodingState::all(n_len, range).map(|s| (s.y(), f(&s))).collect();
        Self { n_len, range, values }
    }

    pub fn arity(&self) -> usize {
        (self.range + 1) * self.n_len
    }

    pub fn eval(&self, y: Point) -> Option<i8> {
        self.values.get(&y).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Point, i8)> + '_ {
        self.values.iter().map(|(&y, &v)| (y, v))
    }

    /// The same property as a partial function on `(R+1)·N` bits.
    pub fn to_function(&self) -> Result<BooleanFunction, ReductionError> {
        Ok(BooleanFunction::from_table(self.arity(), &self.values)?)
    }

    /// Applies `σ` to the column index of every row.
    pub fn permute(&self, y: Point, sigma: &[usize]) -> Point {
        let n = self.n_len;
        (0..=self.range).fold(0, |acc, i| {
            (0..n).fold(acc, |acc, j| {
                if (y >> (i * n + sigma[j])) & 1 == 1 {
                    acc | (1 << (i * n + j))
                } else {
                    acc
                }
            })
        })
    }

    /// Invariance under all `N!` column permutations.
    pub fn is_permutation_invariant(&self) -> bool {
        (0..self.n_len).permutations(self.n_len).all(|sigma| {
            self.values
                .iter()
                .all(|(&y, &v)| self.eval(self.permute(y, &sigma)) == Some(v))
        })
    }
}

/// `G^prop(y_0, .., y_R) = F_R(OR_N(y_1), .., OR_N(y_R))`.
pub fn g_prop(f: &BooleanFunction, n_len: usize) -> Result<PropertyFunction, ReductionError> {
    check_total(f)?;
    let r = f.arity();
    EncodingState::new(r, vec![0; n_len])?;
    Ok(PropertyFunction::from_fn(n_len, r, |s| f.eval(image_bits(s.list()))))
}

/// Every `z ∈ [N]_0^{R+1}` with `Σ z_i = N`, in lexicographic order.
pub fn histograms(n_len: usize, range: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut z = vec![0; range + 1];
    fn rec(i: usize, left: usize, z: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i + 1 == z.len() {
            z[i] = left;
            out.push(z.clone());
            return;
        }
        for v in 0..=left {
            z[i] = v;
            rec(i + 1, left - v, z, out);
        }
    }
    rec(0, n_len, &mut z, &mut out);
    out
}

/// `G̃^prop` on histograms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetrizedProperty {
    pub n_len: usize,
    pub range: usize,
    values: BTreeMap<Vec<usize>, i8>,
}

impl SymmetrizedProperty {
    pub fn eval(&self, z: &[usize]) -> Option<i8> {
        self.values.get(z).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize], i8)> + '_ {
        self.values.iter().map(|(z, &v)| (z.as_slice(), v))
    }

    /// `G̃^prop(Z(s)) = G^prop(Y(s))` for every `s`.
    pub fn consistent_with(&self, g: &PropertyFunction) -> bool {
        g.iter().all(|(y, v)| {
            decode_y(y, g.n_len, g.range).is_some_and(|s| self.eval(&s.z()) == Some(v))
        })
    }
}

/// `G̃^prop(z) = F_R(I_{>0}(z_1), .., I_{>0}(z_R))`.
pub fn g_tilde(f: &BooleanFunction, n_len: usize) -> Result<SymmetrizedProperty, ReductionError> {
    check_total(f)?;
    let r = f.arity();
    let values = histograms(n_len, r)
        .into_iter()
        .map(|z| {
            let b = (1..=r).fold(0, |acc: Point, i| if z[i] > 0 { acc | (1 << (i - 1)) } else { acc });
            let v = f.eval(b);
            (z, v)
        })
        .collect();
    Ok(SymmetrizedProperty { n_len, range: r, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fncore::{make_basic, Gate};

    #[test]
    fn promise_domain_size() {
        let and2 = make_basic(Gate::And, 2).unwrap();
        let g = restrict_promise(&and2, 1).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.get(0), Some(and2.eval(0)));
        assert_eq!(g.get(0b11), None);
    }

    #[test]
    fn tilde_examples() {
        let and2 = make_basic(Gate::And, 2).unwrap();
        let gt = g_tilde(&and2, 3).unwrap();
        assert_eq!(gt.eval(&[0, 2, 1]), Some(-1));
        assert_eq!(gt.eval(&[3, 0, 0]), Some(and2.eval(0)));
        let gp = g_prop(&and2, 3).unwrap();
        assert!(gt.consistent_with(&gp));
        assert!(gp.is_permutation_invariant());
        assert_eq!(histograms(3, 2).len(), 10);
    }
}
