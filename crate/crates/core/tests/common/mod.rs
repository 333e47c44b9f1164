//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's own checkers; values are recomputed from definitions.

#![allow(dead_code)]

use adeg::exactlp::DualWitness;
use adeg::fncore::BooleanFunction;
use adeg::rational::Q;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub type Point = u64;

pub fn q(p: i64, d: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(d))
}

pub fn weight(x: Point) -> usize {
    x.count_ones() as usize
}

/// `χ_S(x) = Π_{i∈S} x_i` with bit set meaning `-1`.
pub fn chi(s: Point, x: Point) -> i64 {
    if weight(s & x) % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn masks_up_to(n: usize, max_weight: usize) -> impl Iterator<Item = Point> {
    (0..1u64 << n).filter(move |&s| weight(s) <= max_weight)
}

pub fn l1(w: &DualWitness) -> Q {
    w.iter().map(|(_, v)| v.abs()).sum()
}

pub fn correlation(w: &DualWitness, f: impl Fn(Point) -> i64) -> Q {
    w.iter().map(|(x, v)| v * Q::from_integer(f(x).into())).sum()
}

/// `Σ_x w(x) χ_S(x) = 0` for every `|S| < d`, by exhaustive monomials.
pub fn orthogonal_below(w: &DualWitness, d: usize) -> bool {
    if d == 0 {
        return true;
    }
    masks_up_to(w.arity(), d - 1).all(|s| {
        w.iter()
            .map(|(x, v)| if chi(s, x) == 1 { v.clone() } else { -v })
            .sum::<Q>()
            .is_zero()
    })
}

/// Largest `d` with orthogonality to all monomials of degree `< d`.
pub fn pure_high_degree(w: &DualWitness) -> usize {
    let n = w.arity();
    (0..=n)
        .find(|&t| {
            (0..1u64 << n).filter(|&s| weight(s) == t).any(|s| {
                !w.iter()
                    .map(|(x, v)| if chi(s, x) == 1 { v.clone() } else { -v })
                    .sum::<Q>()
                    .is_zero()
            })
        })
        .unwrap_or(n + 1)
}

/// Dual block composition straight from the definition, over every point.
pub fn compose(outer: &DualWitness, inner: &DualWitness) -> DualWitness {
    let (big_m, m) = (outer.arity(), inner.arity());
    let block = (1u64 << m) - 1;
    let scale = Q::from_integer(BigInt::from(1u64 << big_m));
    let entries = (0..1u64 << (big_m * m)).filter_map(|x| {
        let mut z = 0;
        let mut prod = Q::one();
        for i in 0..big_m {
            let v = inner.get((x >> (i * m)) & block);
            if !v.is_positive() {
                z |= 1 << i;
            }
            prod *= v.abs();
        }
        let value = &scale * outer.get(z) * prod;
        (!value.is_zero()).then_some((x, value))
    });
    DualWitness::from_entries(big_m * m, entries.collect::<Vec<_>>())
}

/// Random witness on `n` bits with pure high degree at least `d`: random
/// values with the low-degree Fourier part projected away, then scaled to
/// unit `ℓ1` norm.
pub fn random_witness(rng: &mut impl Rng, n: usize, d: usize) -> Option<DualWitness> {
    let size = 1u64 << n;
    let mut v: Vec<Q> = (0..size).map(|_| q(rng.gen_range(-6..=6), rng.gen_range(1..=4))).collect();
    let denom = Q::from_integer(BigInt::from(size));
    for s in masks_up_to(n, d.saturating_sub(1)).filter(|_| d > 0) {
        let coeff: Q = (0..size).map(|x| &v[x as usize] * Q::from_integer(chi(s, x).into())).sum::<Q>() / &denom;
        for x in 0..size {
            v[x as usize] -= &coeff * Q::from_integer(chi(s, x).into());
        }
    }
    let norm: Q = v.iter().map(|c| c.abs()).sum();
    if norm.is_zero() {
        return None;
    }
    Some(DualWitness::from_entries(
        n,
        v.into_iter().enumerate().map(|(x, c)| (x as Point, c / &norm)).collect::<Vec<_>>(),
    ))
}

pub fn random_total_function(rng: &mut impl Rng, n: usize) -> BooleanFunction {
    let table: Vec<i8> = (0..1u64 << n).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect();
    BooleanFunction::from_fn(n, adeg::fncore::Domain::All, adeg::fncore::Structure::Table, |x| table[x as usize])
        .unwrap()
}

pub fn or_value(x: Point) -> i64 {
    if x != 0 {
        -1
    } else {
        1
    }
}

pub fn and_value(x: Point, n: usize) -> i64 {
    if x == (1u64 << n) - 1 {
        -1
    } else {
        1
    }
}

/// Minimum certificate size at every input, by trying subsets in order of size.
pub fn certificate_sizes(n: usize, f: impl Fn(Point) -> i8) -> Vec<usize> {
    let mut subsets: Vec<Point> = (0..1u64 << n).collect();
    subsets.sort_by_key(|&s| weight(s));
    (0..1u64 << n)
        .map(|x| {
            let v = f(x);
            subsets
                .iter()
                .find(|&&s| (0..1u64 << n).filter(|&y| (y ^ x) & s == 0).all(|y| f(y) == v))
                .map(|&s| weight(s))
                .unwrap()
        })
        .collect()
}

/// Exact rational Gaussian elimination; `None` when singular.
pub fn solve(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = &a[r][col] / &a[col][col];
                for c in col..n {
                    let t = &factor * &a[col][c];
                    a[r][c] -= t;
                }
                let t = &factor * &b[col];
                b[r] -= t;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Best uniform error of a degree-`d` univariate polynomial against `target`
/// on the points `0..=n`, as the largest levelled error over all `d+2`-point
/// subsets (de la Vallée Poussin on a finite set).
pub fn discrete_minimax(target: &[i64], d: usize) -> Q {
    let n = target.len() - 1;
    if d + 1 > n {
        return Q::zero();
    }
    let mut best = Q::zero();
    let k = d + 2;
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let a: Vec<Vec<Q>> = idx
            .iter()
            .enumerate()
            .map(|(row, &t)| {
                let mut r: Vec<Q> = (0..=d).map(|j| Q::from_integer(BigInt::from(t).pow(j as u32))).collect();
                r.push(Q::from_integer(BigInt::from(if row % 2 == 0 { 1 } else { -1 })));
                r
            })
            .collect();
        let b: Vec<Q> = idx.iter().map(|&t| Q::from_integer(target[t].into())).collect();
        if let Some(sol) = solve(a, b) {
            let h = sol[d + 1].abs();
            if h > best {
                best = h;
            }
        }
        let mut i = k;
        loop {
            if i == 0 {
                return best;
            }
            i -= 1;
            if idx[i] < n + 1 - (k - i) {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}
