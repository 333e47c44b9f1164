//! Points of the hypercube `{-1,1}^n` packed into a `u64`.
//!
//! Bit `i` of a [`Point`] is set exactly when coordinate `x_{i+1}` equals
//! `-1` (logical TRUE), so `popcount` is the Hamming weight
//! `|x| = Σ (1 - x_i) / 2`. Bitstrings follow the same convention: character
//! `i` is `'1'` when `x_{i+1} = -1`.

use super::FnError;

pub type Point = u64;

/// Largest arity for which a point still fits in a `u64`.
pub const MAX_POINT_ARITY: usize = 64;

#[inline]
pub fn weight(x: Point) -> usize {
    x.count_ones() as usize
}

/// Value of coordinate `i` in `{-1, +1}`.
#[inline]
pub fn coord(x: Point, i: usize) -> i8 {
    if (x >> i) & 1 == 1 {
        -1
    } else {
        1
    }
}

/// Character `χ_S(x) = Π_{i∈S} x_i`.
#[inline]
pub fn chi(s: Point, x: Point) -> i8 {
    if (s & x).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

#[inline]
pub fn full_mask(n: usize) -> Point {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Builds a point from `±1` coordinates.
pub fn from_signs(signs: &[i8]) -> Point {
    signs
        .iter()
        .enumerate()
        .fold(0, |acc, (i, &s)| if s < 0 { acc | (1 << i) } else { acc })
}

pub fn to_signs(x: Point, n: usize) -> Vec<i8> {
    (0..n).map(|i| coord(x, i)).collect()
}

pub fn to_bitstring(x: Point, n: usize) -> String {
    (0..n)
        .map(|i| if (x >> i) & 1 == 1 { '1' } else { '0' })
        .collect()
}

pub fn from_bitstring(s: &str) -> Result<(Point, usize), FnError> {
    if s.len() > MAX_POINT_ARITY {
        return Err(FnError::ArityTooLarge {
            arity: s.len(),
            cap: MAX_POINT_ARITY,
        });
    }
    let mut x = 0;
    for (i, c) in s.chars().enumerate() {
        match c {
            '0' => {}
            '1' => x |= 1 << i,
            _ => return Err(FnError::BadBitstring(s.to_string())),
        }
    }
    Ok((x, s.len()))
}

/// All subsets of `{0..n}` of size exactly `k`, ascending as integers.
pub fn masks_of_weight(n: usize, k: usize) -> impl Iterator<Item = Point> {
    let limit: u128 = 1u128 << n;
    let mut cur: u128 = if k > n {
        limit
    } else if k == 0 {
        0
    } else {
        (1u128 << k) - 1
    };
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done || cur >= limit {
            return None;
        }
        let out = cur as Point;
        if cur == 0 {
            done = true;
        } else {
            // Gosper's hack.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
        }
        Some(out)
    })
}

/// Monomial masks in graded order: by degree, then numerically.
pub fn masks_up_to_degree(n: usize, max_degree: usize) -> impl Iterator<Item = Point> {
    (0..=max_degree.min(n)).flat_map(move |k| masks_of_weight(n, k))
}

/// Every point of `{-1,1}^n` whose weight is at most `k`.
pub fn points_up_to_weight(n: usize, k: usize) -> Vec<Point> {
    let mut pts: Vec<Point> = masks_up_to_degree(n, k).collect();
    pts.sort_unstable();
    pts
}
