//! Exact comparison of share marginals on every small coordinate set.

use super::scheme::Scheme;
use crate::exactlp::DualWitness;
use crate::fncore::cube::{self, Point};
use crate::rational::{self, Q};
use itertools::Itertools;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetFailure {
    /// 0-based coordinates.
    pub subset: Vec<usize>,
    /// Marginal tables keyed by the restricted bitstring.
    pub plus: BTreeMap<String, String>,
    pub minus: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub d: usize,
    pub pass: bool,
    pub subsets_checked: Vec<Vec<usize>>,
    pub failure: Option<SubsetFailure>,
}

fn marginal(dist: &[(Point, Q)], subset: &[usize]) -> BTreeMap<Point, Q> {
    let mut out: BTreeMap<Point, Q> = BTreeMap::new();
    for (x, p) in dist {
        let key = subset
            .iter()
            .enumerate()
            .fold(0, |acc, (k, &i)| acc | (((x >> i) & 1) << k));
        *out.entry(key).or_default() += p;
    }
    out.retain(|_, p| *p != Q::default());
    out
}

fn render(m: &BTreeMap<Point, Q>, width: usize) -> BTreeMap<String, String> {
    m.iter()
        .map(|(x, p)| (cube::to_bitstring(*x, width), rational::fmt(p)))
        .collect()
}

/// Passes iff `2μ_+` and `2μ_−` agree on every subset of fewer than `d`
/// coordinates; stops at the first disagreement.
pub fn secrecy_audit(scheme: &Scheme, d: usize) -> AuditReport {
    let mut checked = Vec::new();
    for size in 0..d.min(scheme.n + 1) {
        for subset in (0..scheme.n).combinations(size) {
            let mp = marginal(&scheme.plus, &subset);
            let mm = marginal(&scheme.minus, &subset);
            checked.push(subset.clone());
            if mp != mm {
                return AuditReport {
                    d,
                    pass: false,
                    subsets_checked: checked,
                    failure: Some(SubsetFailure {
                        plus: render(&mp, subset.len()),
                        minus: render(&mm, subset.len()),
                        subset,
                    }),
                };
            }
        }
    }
    AuditReport { d, pass: true, subsets_checked: checked, failure: None }
}

/// `χ_S/2^n` with `S` the first `d − 1` coordinates: pure high degree
/// exactly `d − 1`, so its scheme must fail the audit at `d`.
pub fn near_miss_witness(n: usize, d: usize) -> Option<DualWitness> {
    (2..=n + 1).contains(&d).then(|| DualWitness::character(n, cube::full_mask(d - 1)))
}
