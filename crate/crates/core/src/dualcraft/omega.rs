//! The univariate OR witness `ω` on `{0, .., k}` and its LP substitute.
//!
//! With `m = ⌊√(k/c)⌋` and `T = {1, 2} ∪ {c·i² : 0 ≤ i ≤ m}`,
//!
//! ```text
//! ω(t) = (-1)^{t + k - m} / k! · C(k, t) · Π_{r ∈ [k]_0 \ T} (t - r)
//! ```
//!
//! which vanishes off `T` and satisfies `|ω(t)| = Π_{r ∈ T \ {t}} 1/|t - r|`
//! on `T`.

use super::CraftError;
use crate::exactlp::{LinearProgram, LpError, Relation, Sense};
use crate::fncore::SymmetricProfile;
use crate::rational::{self, frac, int, Q};
use crate::report::{Ledger, Property, Rel};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub const DEFAULT_C: usize = 25;

#[derive(Debug, Clone)]
pub struct Omega {
    pub k: usize,
    pub c: usize,
    pub m: usize,
    /// The support set `T`, ascending.
    pub support_set: Vec<usize>,
    pub raw: SymmetricProfile,
    pub normalized: SymmetricProfile,
}

fn isqrt(v: usize) -> usize {
    let mut r = (v as f64).sqrt() as usize;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}

pub fn support_set(k: usize, c: usize) -> Vec<usize> {
    let m = isqrt(k / c);
    let mut t: Vec<usize> = [1, 2].into_iter().chain((0..=m).map(|i| c * i * i)).collect();
    t.sort_unstable();
    t.dedup();
    t
}

/// The unnormalized value from the product formula.
pub fn omega_raw_value(k: usize, m: usize, in_t: &[bool], t: usize) -> Q {
    let mut prod = rational::binomial(k as u64, t as u64);
    for r in 0..=k {
        if !in_t[r] {
            prod *= BigInt::from(t as i64 - r as i64);
        }
    }
    let v = Q::new(prod, rational::factorial(k as u64));
    if (t + k - m) % 2 == 1 {
        -v
    } else {
        v
    }
}

/// `Π_{r ∈ T \ {t}} 1/|t − r|` for `t ∈ T`, zero elsewhere.
pub fn omega_magnitude(t: usize, support: &[usize]) -> Q {
    if !support.contains(&t) {
        return Q::zero();
    }
    support
        .iter()
        .filter(|&&r| r != t)
        .fold(Q::one(), |acc, &r| acc / int((t as i64 - r as i64).abs()))
}

pub fn omega(k: usize, c: usize) -> Result<Omega, CraftError> {
    if c == 0 || k < c {
        return Err(CraftError::Parameter(format!("omega needs k >= c (k={k}, c={c})")));
    }
    let m = isqrt(k / c);
    let support_set = support_set(k, c);
    let mut in_t = vec![false; k + 1];
    for &t in &support_set {
        if t <= k {
            in_t[t] = true;
        }
    }
    let raw = SymmetricProfile::new((0..=k).map(|t| omega_raw_value(k, m, &in_t, t)).collect());
    let normalized = raw.normalize().expect("omega is nonzero at 0");
    Ok(Omega {
        k,
        c,
        m,
        support_set,
        raw,
        normalized,
    })
}

/// `ω(0) − Σ_{t≥1} ω(t)`, the correlation with `OR` under `ψ(x) = ω(|x|)/C(N,|x|)`.
pub fn or_correlation(w: &SymmetricProfile) -> Q {
    let rest: Q = w.values()[1..].iter().sum();
    w.get(0) - rest
}

/// Largest `d` with `Σ_t ω(t) t^j = 0` for all `j < d`.
pub fn univariate_pure_degree(w: &SymmetricProfile) -> usize {
    (0..=w.k() as u32 + 1)
        .find(|&j| !w.moment(j).is_zero())
        .unwrap_or(w.k() as u32 + 2) as usize
}

fn decay_cap(t: usize) -> Q {
    frac(5, ((t + 1) * (t + 1)) as i64)
}

/// Certifies the normalized and relative property sets of `ω`.
pub fn omega_properties(o: &Omega) -> Ledger {
    let mut l = Ledger::new();
    let w = &o.normalized;
    let raw = &o.raw;
    let raw_norm = raw.l1();
    l.push(Property::compare(
        "correlation_with_or",
        &or_correlation(w),
        Rel::Ge,
        &frac(1, 3),
        true,
    ));
    l.push(Property::compare("unit_norm", &w.l1(), Rel::Eq, &int(1), true));
    let orth_degrees: Vec<u32> = (0..).take_while(|&j: &u32| (o.c * (j * j) as usize) < o.k).collect();
    let worst = orth_degrees
        .iter()
        .map(|&j| w.moment(j))
        .find(|v| !v.is_zero())
        .unwrap_or_else(Q::zero);
    l.push(
        Property::compare("orthogonal_below_c1_sqrt_k", &worst, Rel::Eq, &Q::zero(), true).with_note(
            format!(
                "moments t^j for j in 0..{} (c*j^2 < k); exact pure degree {}",
                orth_degrees.len(),
                univariate_pure_degree(w)
            ),
        ),
    );
    l.push(Property::compare("positive_at_zero", &w.get(0), Rel::Gt, &Q::zero(), true));
    let decay_ok = (0..=o.k).all(|t| w.get(t).abs() <= decay_cap(t));
    let tightest = (0..=o.k)
        .max_by(|&a, &b| {
            (w.get(a).abs() / decay_cap(a)).cmp(&(w.get(b).abs() / decay_cap(b)))
        })
        .unwrap_or(0);
    l.push(
        Property::decided(
            "layer_decay",
            decay_ok,
            true,
            rational::fmt(&w.get(tightest).abs()),
            Rel::Le,
            rational::fmt(&decay_cap(tightest)),
        )
        .with_note(format!("|w(t)| <= 5/(t+1)^2 for all t; tightest at t={tightest}")),
    );
    // Relative (unnormalized) forms.
    l.push(Property::compare(
        "relative_correlation",
        &or_correlation(raw),
        Rel::Ge,
        &(&raw_norm / int(3)),
        true,
    ));
    l.push(Property::check(
        "relative_decay",
        (0..=o.k).all(|t| raw.get(t).abs() <= &raw_norm * decay_cap(t)),
    ));
    let support_ok = raw.support() == o.support_set.iter().copied().filter(|&t| t <= o.k).collect::<Vec<_>>();
    l.push(Property::check("support_is_T", support_ok).with_note(format!("T = {:?}", o.support_set)));
    l.push(Property::check(
        "closed_form_magnitudes",
        (0..=o.k).all(|t| raw.get(t).abs() == omega_magnitude(t, &o.support_set)),
    ));
    l.push(Property::compare(
        "ratio_at_one",
        &(raw.get(1).abs() / raw.get(0)),
        Rel::Ge,
        &int(2),
        true,
    ));
    l
}

/// Desk-scale stand-in for `ω` when `k < 25`: the LP-optimal profile with
/// `ω(0) ≥ 0`, `Σ|ω| = 1`, moments zero below `degree` and the layer decay
/// caps. `None` when no such profile exists.
pub fn omega_lp(k: usize, degree: usize) -> Result<Option<SymmetricProfile>, CraftError> {
    let mut lp = LinearProgram::new(Sense::Max);
    // ω(t) = a_t − b_t, with b_0 absent so that ω(0) ≥ 0.
    let mut cols: Vec<(usize, Option<usize>)> = Vec::new();
    for t in 0..=k {
        let sgn = if t == 0 { int(1) } else { int(-1) };
        let a = lp.add_var(sgn.clone(), false);
        let b = (t > 0).then(|| lp.add_var(-sgn, false));
        cols.push((a, b));
    }
    for j in 0..degree as u32 {
        let mut row = Vec::new();
        for (t, &(a, b)) in cols.iter().enumerate() {
            let tj = Q::from_integer(BigInt::from(t).pow(j));
            if tj.is_zero() {
                continue;
            }
            row.push((a, tj.clone()));
            if let Some(b) = b {
                row.push((b, -tj));
            }
        }
        lp.add_constraint(row, Relation::Eq, Q::zero());
    }
    let mut norm = Vec::new();
    for (t, &(a, b)) in cols.iter().enumerate() {
        norm.push((a, int(1)));
        let mut cap = vec![(a, int(1))];
        if let Some(b) = b {
            norm.push((b, int(1)));
            cap.push((b, int(1)));
        }
        lp.add_constraint(cap, Relation::Le, decay_cap(t));
    }
    lp.add_constraint(norm, Relation::Eq, int(1));
    let sol = match lp.solve() {
        Ok(s) => s,
        Err(LpError::Infeasible) => return Ok(None),
        Err(e) => return Err(CraftError::Lp(e)),
    };
    let values: Vec<Q> = cols
        .iter()
        .map(|&(a, b)| &sol.x[a] - b.map_or_else(Q::zero, |b| sol.x[b].clone()))
        .collect();
    let profile = SymmetricProfile::new(values);
    Ok(profile.normalize().filter(|p| p.get(0).is_positive()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k25_values() {
        let o = omega(25, 25).unwrap();
        assert_eq!(o.m, 1);
        assert_eq!(o.support_set, vec![0, 1, 2, 25]);
        assert_eq!(o.raw.get(0), frac(1, 50));
        assert_eq!(o.raw.get(1), frac(-1, 24));
        assert_eq!(o.raw.get(3), int(0));
        assert_eq!(o.raw.get(1).abs() / o.raw.get(0), frac(25, 12));
    }

    #[test]
    fn properties_hold_for_listed_k() {
        for k in [25, 36, 49, 100] {
            let o = omega(k, DEFAULT_C).unwrap();
            let l = omega_properties(&o);
            for p in l.iter() {
                assert!(p.ok(), "k={k}: {p:?}");
            }
        }
    }

    #[test]
    fn small_k_rejected() {
        assert!(omega(24, 25).is_err());
    }

    #[test]
    fn lp_substitute() {
        let w = omega_lp(3, 1).unwrap().unwrap();
        assert_eq!(w.l1(), int(1));
        assert!(univariate_pure_degree(&w) >= 1);
        assert!(w.get(0) > int(0));
        assert!(or_correlation(&w) >= frac(1, 3));
        assert!(omega_lp(2, 3).unwrap().is_none());
    }
}
