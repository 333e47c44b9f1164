//! Symmetrizing a polynomial for `G^prop` into one over histograms, and
//! pulling that back to the `N·R` bits of `G^{≤N}`.

use super::promise::{histograms, SymmetrizedProperty};
use super::ReductionError;
use crate::exactlp::linalg;
use crate::exactlp::MultilinearPolynomial;
use crate::fncore::EncodingState;
use crate::rational::{self, frac, int, Q};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A polynomial in the real variables `z_0, .., z_R`, keyed by exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HistogramPolynomial {
    pub vars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

/// Exponent vectors over `vars` variables of total degree `≤ d`, graded.
fn exponents(vars: usize, d: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for total in 0..=d {
        let mut e = vec![0u32; vars];
        fn rec(i: usize, left: u32, e: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if i + 1 == e.len() {
                e[i] = left;
                out.push(e.clone());
                return;
            }
            for v in (0..=left).rev() {
                e[i] = v;
                rec(i + 1, left - v, e, out);
            }
        }
        if vars > 0 {
            rec(0, total as u32, &mut e, &mut out);
        }
    }
    out
}

fn monomial_value(e: &[u32], z: &[usize]) -> Q {
    let v = e
        .iter()
        .zip(z)
        .fold(BigInt::one(), |acc, (&k, &zi)| acc * BigInt::from(zi).pow(k));
    Q::from_integer(v)
}

impl HistogramPolynomial {
    pub fn constant(vars: usize, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; vars], c);
        }
        Self { vars, terms }
    }

    pub fn from_terms(vars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Q)>) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self { vars, terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Q)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, z: &[usize]) -> Q {
        self.terms.iter().map(|(e, c)| c * monomial_value(e, z)).sum()
    }

    /// `max_z |p̃(z) − G̃^prop(z)|` over the histogram domain.
    pub fn max_error(&self, g: &SymmetrizedProperty) -> Q {
        g.iter()
            .map(|(z, v)| rational::abs(&(self.eval(z) - int(v as i64))))
            .max()
            .unwrap_or_else(Q::zero)
    }
}

/// Averages `p(Y(s))` over each class `{s : Z(s) = z}` and fits a
/// polynomial of degree `≤ degree` in `z` through the averages exactly.
pub fn ambainis_symmetrize(
    p: &MultilinearPolynomial,
    n_len: usize,
    range: usize,
    degree: usize,
) -> Result<HistogramPolynomial, ReductionError> {
    if p.arity() != (range + 1) * n_len {
        return Err(ReductionError::Parameter(format!(
            "polynomial arity {} is not (R+1)·N = {}",
            p.arity(),
            (range + 1) * n_len
        )));
    }
    let mut sums: BTreeMap<Vec<usize>, (Q, i64)> = BTreeMap::new();
    for s in EncodingState::all(n_len, range) {
        let e = sums.entry(s.z()).or_insert_with(|| (Q::zero(), 0));
        e.0 += p.eval(s.y());
        e.1 += 1;
    }
    let zs = histograms(n_len, range);
    let basis = exponents(range + 1, degree);
    let a: Vec<Vec<Q>> = zs
        .iter()
        .map(|z| basis.iter().map(|e| monomial_value(e, z)).collect())
        .collect();
    let b: Vec<Q> = zs
        .iter()
        .map(|z| {
            let (sum, count) = &sums[z];
            sum / int(*count)
        })
        .collect();
    let coeffs = linalg::solve(&a, &b).ok_or_else(|| {
        ReductionError::FitFailure(format!(
            "class averages are not a degree-{degree} polynomial in the histogram"
        ))
    })?;
    Ok(HistogramPolynomial::from_terms(range + 1, basis.into_iter().zip(coeffs)))
}

/// `q(x) = p̃(N − ΣT_i(x), T_1(x), .., T_R(x))` with
/// `T_i(x) = (N − Σ_j x_{ij})/2` on `N·R` bits.
pub fn q_transform(pt: &HistogramPolynomial, n_len: usize, range: usize) -> MultilinearPolynomial {
    let arity = n_len * range;
    let n_q = int(n_len as i64);
    let counters: Vec<MultilinearPolynomial> = (0..range)
        .map(|i| {
            let mut t = MultilinearPolynomial::constant(arity, &n_q / int(2));
            for j in 0..n_len {
                t.add_term(1 << (i * n_len + j), frac(-1, 2));
            }
            t
        })
        .collect();
    let zero_slot = counters
        .iter()
        .fold(MultilinearPolynomial::constant(arity, n_q), |acc, t| &acc - t);
    let slots: Vec<&MultilinearPolynomial> = std::iter::once(&zero_slot).chain(&counters).collect();
    let mut q = MultilinearPolynomial::zero(arity);
    for (e, c) in pt.terms() {
        let mut term = MultilinearPolynomial::constant(arity, c.clone());
        for (slot, &k) in slots.iter().zip(e) {
            for _ in 0..k {
                term = &term * *slot;
            }
        }
        q = &q + &term;
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlp::eps_opt;
    use crate::fncore::{make_basic, Gate};
    use crate::reduction::{g_prop, g_tilde, restrict_promise};

    #[test]
    fn constant_stays_constant() {
        let p = MultilinearPolynomial::constant(6, frac(1, 3));
        let pt = ambainis_symmetrize(&p, 2, 2, 0).unwrap();
        assert_eq!(pt, HistogramPolynomial::constant(3, frac(1, 3)));
        let q = q_transform(&pt, 2, 2);
        assert_eq!(q, MultilinearPolynomial::constant(4, frac(1, 3)));
    }

    #[test]
    fn linear_in_y_gives_linear_in_z() {
        // N = 2, R = 1: p = y_{1,0} has class averages 1 − z_1.
        let p = MultilinearPolynomial::var(4, 2);
        let pt = ambainis_symmetrize(&p, 2, 1, 1).unwrap();
        assert!(pt.degree() <= 1);
        for z in histograms(2, 1) {
            assert_eq!(pt.eval(&z), int(1) - int(z[1] as i64));
        }
    }

    #[test]
    fn z1_pulls_back_to_counter() {
        let pt = HistogramPolynomial::from_terms(2, [(vec![0, 1], int(1))]);
        let q = q_transform(&pt, 3, 1);
        assert_eq!(q.degree(), 1);
        for x in 0..8u64 {
            assert_eq!(q.eval(x), int(x.count_ones() as i64));
        }
    }

    #[test]
    fn chain_preserves_error() {
        let or2 = make_basic(Gate::Or, 2).unwrap();
        let gp = g_prop(&or2, 2).unwrap();
        let gt = g_tilde(&or2, 2).unwrap();
        let promise = restrict_promise(&or2, 2).unwrap();
        let f = gp.to_function().unwrap();
        for d in 0..=3 {
            let (eps, p) = eps_opt(&f, d).unwrap();
            let pt = ambainis_symmetrize(&p, 2, 2, d).unwrap();
            assert!(pt.max_error(&gt) <= eps);
            let q = q_transform(&pt, 2, 2);
            assert!(q.degree() <= d);
            assert!(q.max_error(promise.iter()) <= eps);
        }
    }
}
