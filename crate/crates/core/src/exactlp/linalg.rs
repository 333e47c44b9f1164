//! Exact Gaussian elimination helpers.

use crate::rational::Q;
use num_traits::{One, Zero};

/// Row-echelon store that accepts only rows independent of those kept.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    /// Reduced rows with their pivot column; each pivot entry is 1.
    rows: Vec<(usize, Vec<Q>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<Q>) -> Vec<Q> {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (a, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
        }
        v
    }

    /// Keeps `v` if it is independent of the stored rows.
    pub fn try_insert(&mut self, v: Vec<Q>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|a| !a.is_zero()) else {
            return false;
        };
        let piv = v[p].clone();
        for a in v.iter_mut() {
            *a /= &piv;
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (a, b) in row.iter_mut().zip(&v) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

/// Some solution of `A·u = b`, or `None` if the system is inconsistent.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| row.iter().cloned().chain(std::iter::once(bi.clone())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for v in m[r].iter_mut() {
            *v /= &piv;
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut u = vec![Q::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        u[c] = m[i][cols].clone();
    }
    Some(u)
}

/// A nonzero `u` with `A·u = 0`, if the kernel is nontrivial.
pub fn null_vector(a: &[Vec<Q>], cols: usize) -> Option<Vec<Q>> {
    let mut m: Vec<Vec<Q>> = a.to_vec();
    let mut pivot_of_col = vec![None; cols];
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for v in m[r].iter_mut() {
            *v /= &piv;
        }
        let prow = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivot_of_col[c] = Some(r);
        r += 1;
    }
    let free = (0..cols).find(|&c| pivot_of_col[c].is_none())?;
    let mut u = vec![Q::zero(); cols];
    u[free] = Q::one();
    for c in 0..cols {
        if let Some(row) = pivot_of_col[c] {
            u[c] = -m[row][free].clone();
        }
    }
    Some(u)
}
