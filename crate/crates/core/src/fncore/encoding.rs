//! Lists `s ∈ [R]_0^N` and their indicator (`Y`) and histogram (`Z`) views.
//!
//! `Y(s)` lives on `(R+1)·N` variables laid out block by block: variable
//! `i·N + j` is `Y_{ij}`, which is `-1` exactly when `s_j = i`.

use super::cube::{self, Point};
use super::FnError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EncodingState {
    range: usize,
    list: Vec<usize>,
}

impl EncodingState {
    pub fn new(range: usize, list: Vec<usize>) -> Result<Self, FnError> {
        if let Some(&bad) = list.iter().find(|&&v| v > range) {
            return Err(FnError::Malformed(format!(
                "list entry {bad} outside [R]_0 with R = {range}"
            )));
        }
        if (range + 1) * list.len() > cube::MAX_POINT_ARITY {
            return Err(FnError::ArityTooLarge {
                arity: (range + 1) * list.len(),
                cap: cube::MAX_POINT_ARITY,
            });
        }
        Ok(Self { range, list })
    }

    pub fn range(&self) -> usize {
        self.range
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn list(&self) -> &[usize] {
        &self.list
    }

    /// The indicator matrix `Y(s)` packed as a point.
    pub fn y(&self) -> Point {
        let n = self.list.len();
        self.list
            .iter()
            .enumerate()
            .fold(0, |acc, (j, &i)| acc | (1 << (i * n + j)))
    }

    /// The histogram `Z(s) = (Z_0, .., Z_R)`.
    pub fn z(&self) -> Vec<usize> {
        let mut z = vec![0; self.range + 1];
        for &i in &self.list {
            z[i] += 1;
        }
        z
    }

    /// Every list in `[R]_0^N`, in lexicographic order (last entry fastest).
    pub fn all(n_len: usize, range: usize) -> impl Iterator<Item = EncodingState> {
        let total = (range + 1).pow(n_len as u32);
        (0..total).map(move |mut code| {
            let mut list = vec![0; n_len];
            for slot in list.iter_mut().rev() {
                *slot = code % (range + 1);
                code /= range + 1;
            }
            EncodingState { range, list }
        })
    }
}

/// Checks the column condition on a packed `Y`: every column `j` has
/// exactly one `-1` among rows `0..=R`.
pub fn is_valid_y(y: Point, n_len: usize, range: usize) -> bool {
    (0..n_len).all(|j| (0..=range).filter(|i| (y >> (i * n_len + j)) & 1 == 1).count() == 1)
}

/// Inverse of [`EncodingState::y`] on valid points.
pub fn decode_y(y: Point, n_len: usize, range: usize) -> Option<EncodingState> {
    if !is_valid_y(y, n_len, range) {
        return None;
    }
    let list = (0..n_len)
        .map(|j| {
            (0..=range)
                .find(|i| (y >> (i * n_len + j)) & 1 == 1)
                .expect("valid column")
        })
        .collect();
    Some(EncodingState { range, list })
}

/// Block counters `T_i(x) = |{j : x_{ij} = -1}|` for `x ∈ {-1,1}^{N·R}`,
/// with block `i` (1-based) occupying variables `(i-1)·N .. i·N`.
pub fn block_counters(x: Point, n_len: usize, range: usize) -> Vec<usize> {
    let mask = cube::full_mask(n_len);
    (0..range)
        .map(|i| cube::weight((x >> (i * n_len)) & mask))
        .collect()
}
