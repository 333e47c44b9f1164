//! Exact certificate complexity by exhaustive search.
//!
//! A subcube is described by the set `S` of fixed coordinates and their
//! values; a certificate for `x` is a subcube through `x` on which `f` is
//! constant. Monochromaticity of all `3^n` subcubes is tabulated once, then
//! each input scans subsets by increasing size in lexicographic order and
//! keeps the first hit.

use super::cube::Point;
use super::function::BooleanFunction;
use super::FnError;
use itertools::Itertools;
use serde::Serialize;

pub const DEFAULT_BRUTE_CAP: usize = 16;

const MIXED: i8 = 0;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputCertificate {
    pub input: Point,
    pub value: i8,
    /// First minimum certificate, as sorted 0-based coordinate indices.
    pub witness: Vec<usize>,
}

impl InputCertificate {
    pub fn size(&self) -> usize {
        self.witness.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub per_input: Vec<InputCertificate>,
    /// `C(f)`.
    pub c: usize,
    /// `C_{-1}(f)`: max over the `-1` preimage (0 if empty).
    pub c_minus: usize,
    /// `C_{+1}(f)`.
    pub c_plus: usize,
}

impl CertificateReport {
    pub fn for_input(&self, x: Point) -> Option<&InputCertificate> {
        self.per_input.iter().find(|c| c.input == x)
    }
}

fn pow3(n: usize) -> usize {
    3usize.pow(n as u32)
}

/// Subcube colour table indexed in base 3: digit 0 = free, 1 = fixed to
/// `+1`, 2 = fixed to `-1`.
fn subcube_table(f: &BooleanFunction) -> Vec<i8> {
    let n = f.arity();
    let total = pow3(n);
    let mut table = vec![MIXED; total];
    let powers: Vec<usize> = (0..n).map(pow3).collect();
    for idx in (0..total).rev() {
        let mut rest = idx;
        let mut free = None;
        let mut point = 0u64;
        for i in 0..n {
            let digit = rest % 3;
            rest /= 3;
            match digit {
                0 if free.is_none() => free = Some(i),
                2 => point |= 1 << i,
                _ => {}
            }
        }
        table[idx] = match free {
            None => f.eval(point),
            Some(i) => {
                let a = table[idx + powers[i]];
                let b = table[idx + 2 * powers[i]];
                if a == b {
                    a
                } else {
                    MIXED
                }
            }
        };
    }
    table
}

/// Minimum certificate sizes for every input of a total `f` with arity at
/// most `cap`.
pub fn certificate_complexity(
    f: &BooleanFunction,
    cap: usize,
) -> Result<CertificateReport, FnError> {
    if !f.is_total() {
        return Err(FnError::PartialInput("certificate_complexity"));
    }
    let n = f.arity();
    if n > cap {
        return Err(FnError::ArityTooLarge { arity: n, cap });
    }
    let table = subcube_table(f);
    let powers: Vec<usize> = (0..n).map(pow3).collect();
    let mut per_input = Vec::with_capacity(f.len());
    for (x, v) in f.iter() {
        let witness = (0..=n)
            .flat_map(|size| (0..n).combinations(size))
            .find(|s| {
                let idx: usize = s
                    .iter()
                    .map(|&i| powers[i] * (1 + ((x >> i) & 1) as usize))
                    .sum();
                table[idx] == v
            })
            .expect("the full coordinate set always certifies");
        per_input.push(InputCertificate {
            input: x,
            value: v,
            witness,
        });
    }
    let max_over = |val: Option<i8>| {
        per_input
            .iter()
            .filter(|c| val.map_or(true, |v| c.value == v))
            .map(InputCertificate::size)
            .max()
            .unwrap_or(0)
    };
    Ok(CertificateReport {
        c: max_over(None),
        c_minus: max_over(Some(-1)),
        c_plus: max_over(Some(1)),
        per_input,
    })
}

/// Checks that `s` is a certificate for `f` at `x` by enumerating the
/// subcube directly.
pub fn is_certificate(f: &BooleanFunction, x: Point, s: &[usize]) -> bool {
    let n = f.arity();
    let fixed: Point = s.iter().fold(0, |m, &i| m | (1 << i));
    let v = f.eval(x);
    (0..1u64 << n)
        .filter(|y| (y ^ x) & fixed == 0)
        .all(|y| f.eval(y) == v)
}
