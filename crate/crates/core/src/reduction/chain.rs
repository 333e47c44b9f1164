//! The whole reduction for one `F_R`, certified step by step.

use super::ambainis::{ambainis_symmetrize, q_transform};
use super::formula::{canonical_dnf, FormulaAccounting};
use super::promise::{g_prop, g_tilde, restrict_promise};
use super::surj::{build_g, build_gstar, ceil_log2, diagonal_point, gstar_formula, lift_witness, SurjEncoding};
use super::ReductionError;
use crate::exactlp::{adeg, dual_witness, eps_opt};
use crate::fncore::BooleanFunction;
use crate::rational::{self, Q};
use crate::report::{Ledger, Property, Rel};
use serde::Serialize;

#[derive(Debug, Clone)]
pub struct ChainConfig {
    pub n_len: usize,
    pub eps: Q,
    /// Encoding width; the default is `6⌈log₂(R+1)⌉`.
    pub width: Option<usize>,
    /// Largest arity on which `g*` goes through the LP.
    pub lp_cap: usize,
    /// Largest `m` for which `g*` is tabulated and the formula checked.
    pub table_cap: usize,
}

impl ChainConfig {
    pub fn new(n_len: usize, eps: Q) -> Self {
        Self { n_len, eps, width: None, lp_cap: 10, table_cap: 16 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainSummary {
    pub n: usize,
    pub r: usize,
    pub promise_degree: usize,
    pub prop_degree: usize,
    pub gstar_degree: Option<usize>,
    /// Lower bound on `deg̃_ε(g)` certified by a lifted witness.
    pub g_degree_lower_bound: Option<usize>,
    pub encoding: SurjEncoding,
    pub accounting: FormulaAccounting,
}

pub fn reduction_ledger(f: &BooleanFunction, cfg: &ChainConfig) -> Result<(Ledger, ChainSummary), ReductionError> {
    let n_len = cfg.n_len;
    let r = f.arity();
    let mut l = Ledger::new();

    let promise = restrict_promise(f, n_len)?;
    let gp = g_prop(f, n_len)?;
    let gt = g_tilde(f, n_len)?;
    l.push(Property::check("tilde_consistent_with_prop", gt.consistent_with(&gp)));
    if n_len <= 4 {
        l.push(Property::check("prop_permutation_invariant", gp.is_permutation_invariant()));
    }

    let gp_fn = gp.to_function()?;
    let deg_promise = adeg(&promise, &cfg.eps)?.degree;
    let deg_prop = adeg(&gp_fn, &cfg.eps)?.degree;
    l.push(Property::compare_int(
        "prop_degree_dominates_promise",
        deg_prop as i64,
        Rel::Ge,
        deg_promise as i64,
        true,
    ));

    let (e_p, p) = eps_opt(&gp_fn, deg_prop)?;
    let pt = ambainis_symmetrize(&p, n_len, r, deg_prop)?;
    l.push(Property::compare_int("symmetrized_degree", pt.degree() as i64, Rel::Le, deg_prop as i64, true));
    l.push(Property::compare("symmetrized_error", &pt.max_error(&gt), Rel::Le, &e_p, true));
    let q = q_transform(&pt, n_len, r);
    l.push(Property::compare_int("pullback_degree", q.degree() as i64, Rel::Le, deg_prop as i64, true));
    l.push(Property::compare("pullback_error", &q.max_error(promise.iter()), Rel::Le, &e_p, true));

    let enc = match cfg.width {
        Some(w) => SurjEncoding::with_width(r, w)?,
        None => SurjEncoding::new(r)?,
    };
    let m = n_len * enc.width;
    let dnf = canonical_dnf(f);
    let formula = gstar_formula(&dnf, n_len, &enc);
    let accounting = formula.accounting();
    let g_formula = build_g(&formula, m);
    let g_acc = g_formula.accounting();
    l.push(Property::compare_int("g_depth", g_acc.depth as i64, Rel::Le, 4, true));
    if dnf.is_monotone() {
        l.push(Property::check("g_monotone", g_acc.monotone));
        l.push(Property::compare_int(
            "g_dnf_width",
            g_acc.dnf_width as i64,
            Rel::Le,
            (dnf.width() * enc.width) as i64,
            true,
        ));
    }

    let mut gstar_degree = None;
    let mut g_degree = None;
    if m <= cfg.table_cap {
        let gs = build_gstar(f, n_len, &enc)?;
        let formula_ok = (0..1u64 << m).all(|v| formula.eval(v) == gs.eval(v));
        l.push(Property::check("gstar_formula_correct", formula_ok));
        let diag_ok = (0..1u64 << m).all(|v| g_formula.eval(diagonal_point(v, m)) == gs.eval(v));
        l.push(Property::check("g_diagonal_is_gstar", diag_ok));
        if m <= cfg.lp_cap {
            let d = adeg(&gs, &cfg.eps)?.degree;
            gstar_degree = Some(d);
            l.push(Property::compare_int("gstar_degree_dominates_prop", d as i64, Rel::Ge, deg_prop as i64, true));
            let log_factor = ceil_log2(r + 1);
            l.push(Property::compare_int(
                "gstar_log_factor",
                d as i64,
                Rel::Ge,
                (deg_promise * log_factor) as i64,
                false,
            ));
            if d > 0 {
                // The LP dual for g*, lifted onto the diagonal of g's cube,
                // certifies the same lower bound for g.
                let (corr, psi) = dual_witness(&gs, d)?;
                let lifted = lift_witness(&psi);
                let g_corr: Q = lifted
                    .iter()
                    .map(|(x, v)| v * Q::from_integer(g_formula.eval(x).into()))
                    .sum();
                let holds = g_corr == corr && g_corr > cfg.eps && lifted.certify_pure_high_degree(d);
                l.push(Property::decided(
                    "g_degree_dominates_gstar",
                    holds,
                    true,
                    format!("lifted witness: correlation {}, pure high degree >= {d}", rational::fmt(&g_corr)),
                    Rel::Gt,
                    format!("eps {}", rational::fmt(&cfg.eps)),
                ));
            }
            g_degree = Some(d);
        }
    }

    Ok((
        l,
        ChainSummary {
            n: n_len,
            r,
            promise_degree: deg_promise,
            prop_degree: deg_prop,
            gstar_degree,
            g_degree_lower_bound: g_degree,
            encoding: enc,
            accounting,
        },
    ))
}
