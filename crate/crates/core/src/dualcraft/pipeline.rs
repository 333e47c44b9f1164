//! The amplification pipeline `ζ = φ ⋆ Ψ ⋆ ψ`, its overweight mass, and the
//! corrected witness `ζ̂` at desk scale.
//!
//! Inputs live on `n` blocks of `M` blocks of `N` bits; block `(i, j)`
//! occupies bits `(i·M + j)·N .. (i·M + j + 1)·N`.

use super::bounds::{alpha_upper, sum_distribution};
use super::correction::{correction_nu, correction_properties, finalize_zetahat};
use super::omega::{self, omega_lp, DEFAULT_C};
use super::symmetric::SymmetricWitness;
use super::{amplifier_psi, dual_block_compose, CraftError};
use crate::exactlp::{adeg, dual_witness, DualWitness};
use crate::fncore::cube::{self, Point};
use crate::fncore::{BooleanFunction, SymmetricProfile};
use crate::rational::{self, frac, int, Q};
use crate::report::{Ledger, Property, Rel};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

/// Parameters of the construction for an `n`-bit `f` of degree `d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AmplificationParams {
    pub n: usize,
    pub d: usize,
    /// Weight cap of the inner `OR` witness.
    pub k: usize,
    /// Target pure high degree.
    #[serde(rename = "D")]
    pub big_d: usize,
    /// Arity of the `AND` amplifier.
    #[serde(rename = "M")]
    pub big_m: usize,
    /// Number of `OR` blocks, `n·M`.
    #[serde(rename = "R")]
    pub r: usize,
    /// Arity of each `OR` block, which is also the total weight cap.
    #[serde(rename = "N")]
    pub n_cap: usize,
    /// Total arity `R·N`.
    pub m: usize,
}

/// Explicit values replacing the asymptotic schedule.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParamOverrides {
    pub k: Option<usize>,
    pub big_d: Option<usize>,
    pub big_m: Option<usize>,
    pub n_cap: Option<usize>,
}

fn icbrt(v: usize) -> usize {
    let mut s = 0;
    while (s + 1) * (s + 1) * (s + 1) <= v {
        s += 1;
    }
    s
}

impl AmplificationParams {
    /// The asymptotic schedule: `k = ⌊(n/d)^{1/3}⌋²`, `D = ⌈√k·d/5⌉`,
    /// `M = ⌈10·log₂ n⌉`, `R = n·M`, `N = ⌈α·R·log₂²R⌉`.
    pub fn schedule(n: usize, d: usize) -> Result<Self, CraftError> {
        if n == 0 || d == 0 || d > n {
            return Err(CraftError::Parameter(format!("need 1 <= d <= n (n={n}, d={d})")));
        }
        let s = icbrt(n / d).max(1);
        let k = s * s;
        let big_d = (s * d).div_ceil(5);
        let mut big_m = 1;
        while (big_m as f64) < 10.0 * (n as f64).log2() {
            big_m += 1;
        }
        let r = n * big_m;
        let log_r = (r as f64).log2().max(1.0);
        let n_cap = (rational::approx(&alpha_upper()) * r as f64 * log_r * log_r).ceil() as usize;
        Ok(Self { n, d, k, big_d, big_m, r, n_cap, m: r * n_cap })
    }

    pub fn with_overrides(mut self, o: &ParamOverrides) -> Self {
        self.k = o.k.unwrap_or(self.k);
        self.big_d = o.big_d.unwrap_or(self.big_d);
        self.big_m = o.big_m.unwrap_or(self.big_m);
        self.n_cap = o.n_cap.unwrap_or(self.n_cap);
        self.r = self.n * self.big_m;
        self.m = self.r * self.n_cap;
        self
    }

    pub fn validate(&self) -> Result<(), CraftError> {
        let bad = |msg: String| Err(CraftError::Parameter(msg));
        if self.big_m == 0 || self.n_cap == 0 {
            return bad("M and N must be positive".into());
        }
        if self.k > self.n_cap {
            return bad(format!("need k <= N (k={}, N={})", self.k, self.n_cap));
        }
        if self.big_d >= self.n_cap {
            return bad(format!("need D < N (D={}, N={})", self.big_d, self.n_cap));
        }
        if self.m > cube::MAX_POINT_ARITY {
            return bad(format!("total arity {} exceeds {}", self.m, cube::MAX_POINT_ARITY));
        }
        Ok(())
    }
}

/// The layer profile of the inner `OR` witness: `ω` itself when `k ≥ 25`,
/// otherwise the LP profile of largest moment degree whose `OR`
/// correlation is at least `1/3`.
pub fn inner_profile(k: usize) -> Result<SymmetricProfile, CraftError> {
    if k >= DEFAULT_C {
        return Ok(omega::omega(k, DEFAULT_C)?.normalized);
    }
    for deg in (1..=k).rev() {
        if let Some(p) = omega_lp(k, deg)? {
            if omega::or_correlation(&p) >= frac(1, 3) {
                return Ok(p);
            }
        }
    }
    Err(CraftError::Parameter(format!("no balanced OR profile with index {k}")))
}

/// `ζ = Φ ⋆ ψ` kept in factored form, with `ψ(x) = ω(|x|)/C(N,|x|)`.
#[derive(Debug, Clone)]
pub struct FactoredZeta {
    pub outer: DualWitness,
    pub profile: SymmetricProfile,
    pub block: usize,
}

impl FactoredZeta {
    pub fn new(outer: DualWitness, profile: SymmetricProfile, block: usize) -> Result<Self, CraftError> {
        if profile.k() > block {
            return Err(CraftError::Parameter(format!(
                "profile index {} exceeds block arity {block}",
                profile.k()
            )));
        }
        Ok(Self { outer, profile, block })
    }

    /// `Σ_{|x| > cap} |ζ(x)|` as `2^R Σ_z |Φ(z)| Σ_{Σt > cap} Π ω_{z_i}(t_i)`.
    /// The inner sum depends on `z` only through its number of `-1`s.
    pub fn mass_outside(&self, cap: usize) -> Q {
        let r = self.outer.arity();
        let (plus, minus) = self.profile.split();
        let tails: Vec<Q> = (0..=r)
            .map(|neg| {
                let etas: Vec<Vec<Q>> = (0..r)
                    .map(|i| if i < neg { minus.clone() } else { plus.clone() })
                    .collect();
                sum_distribution(&etas).into_iter().skip(cap + 1).sum()
            })
            .collect();
        let inner: Q = self
            .outer
            .iter()
            .map(|(z, v)| rational::abs(v) * &tails[cube::weight(z)])
            .sum();
        inner * rational::pow2(r as u32)
    }

    /// The same quantity from the materialized composition.
    pub fn mass_outside_brute(&self, cap: usize) -> Result<Q, CraftError> {
        let psi = SymmetricWitness::new(self.block, self.profile.clone())?.materialize()?;
        Ok(dual_block_compose(&self.outer, &psi)?.mass_above(cap))
    }
}

/// `G = f ∘ AND_M ∘ OR_N` at one point.
pub fn g_value(f: &BooleanFunction, big_m: usize, n_cap: usize, x: Point) -> i8 {
    let block = cube::full_mask(n_cap);
    let outer = (0..f.arity()).fold(0, |acc: Point, i| {
        let all_true = (0..big_m).all(|j| (x >> ((i * big_m + j) * n_cap)) & block != 0);
        if all_true {
            acc | (1 << i)
        } else {
            acc
        }
    });
    f.eval(outer)
}

fn correlation_with_g(w: &DualWitness, f: &BooleanFunction, p: &AmplificationParams) -> Q {
    w.iter()
        .map(|(x, v)| v * int(g_value(f, p.big_m, p.n_cap, x) as i64))
        .sum()
}

/// `AND_M ∘ OR_N` at one point.
fn and_or_value(big_m: usize, n_cap: usize, x: Point) -> i8 {
    let block = cube::full_mask(n_cap);
    if (0..big_m).all(|j| (x >> (j * n_cap)) & block != 0) {
        -1
    } else {
        1
    }
}

/// Decides `lhs ≤ (2NR)^{-e/k}` via `lhs^k · (2NR)^e ≤ 1`.
fn below_inverse_power(lhs: &Q, base: usize, e: usize, k: usize) -> bool {
    lhs.is_zero()
        || rational::pow(lhs, k as u32) * rational::pow(&Q::from_integer(BigInt::from(base)), e as u32)
            <= Q::one()
}

/// Every object built by [`run_desk`], plus the property ledger.
#[derive(Debug, Clone)]
pub struct DeskRun {
    pub params: AmplificationParams,
    pub phi: DualWitness,
    pub amplifier: DualWitness,
    pub psi: SymmetricWitness,
    pub xi: DualWitness,
    pub zeta: DualWitness,
    pub mass_outside: Q,
    pub nu: DualWitness,
    pub zetahat: DualWitness,
    pub ledger: Ledger,
}

/// Desk defaults: `M = 1`, `N = 3`, `k = N`, `D = d·phd(ψ)` capped below `N`.
pub fn desk_params(f: &BooleanFunction, o: &ParamOverrides) -> Result<(AmplificationParams, SymmetricProfile), CraftError> {
    let n = f.arity();
    let d = adeg(f, &frac(2, 3))?.degree.max(1);
    let base = AmplificationParams::schedule(n, d)?;
    let n_cap = o.n_cap.unwrap_or(3);
    let k = o.k.unwrap_or(n_cap);
    let profile = inner_profile(k)?;
    let phd = omega::univariate_pure_degree(&profile);
    let big_d = o.big_d.unwrap_or_else(|| (d * phd).min(n_cap.saturating_sub(1)));
    let p = base.with_overrides(&ParamOverrides {
        k: Some(k),
        big_d: Some(big_d),
        big_m: Some(o.big_m.unwrap_or(1)),
        n_cap: Some(n_cap),
    });
    p.validate()?;
    Ok((p, profile))
}

/// Builds `φ, Ψ, ψ, ξ, ζ, ν, ζ̂` for `f` and certifies each stage.
pub fn run_desk(f: &BooleanFunction, o: &ParamOverrides) -> Result<DeskRun, CraftError> {
    let (p, profile) = desk_params(f, o)?;
    let mut l = Ledger::new();

    let (phi_corr, phi) = dual_witness(f, p.d)?;
    let phi = phi.normalized().ok_or(CraftError::ZeroWitness)?;
    l.push(Property::compare("phi_correlation", &phi_corr, Rel::Ge, &frac(2, 3), true));
    l.push(Property::compare("phi_norm", &phi.l1(), Rel::Eq, &int(1), true));
    l.push(Property::check("phi_pure_high_degree", phi.certify_pure_high_degree(p.d)));

    let amp = amplifier_psi(p.big_m)?;
    l.push(Property::compare("amplifier_norm", &amp.l1(), Rel::Eq, &int(1), true));
    l.push(Property::compare("amplifier_orthogonal_to_constants", &amp.total(), Rel::Eq, &Q::zero(), true));

    let psi = SymmetricWitness::new(p.n_cap, profile)?;
    let psi_phd = psi.pure_high_degree();
    l.push(Property::compare("psi_or_correlation", &psi.or_correlation(), Rel::Ge, &frac(1, 3), true));
    l.push(Property::compare("psi_norm", &psi.l1(), Rel::Eq, &int(1), true));
    l.push(Property::compare("psi_positive_at_all_false", &psi.at_all_false(), Rel::Gt, &Q::zero(), true));
    let decay = (0..=p.k).all(|t| psi.layer_mass(t) <= frac(5, ((t + 1) * (t + 1)) as i64));
    l.push(Property::check("psi_layer_decay", decay));
    let psi_dense = psi.materialize()?;

    let xi = dual_block_compose(&amp, &psi_dense)?;
    let xi_corr: Q = xi
        .iter()
        .map(|(x, v)| v * int(and_or_value(p.big_m, p.n_cap, x) as i64))
        .sum();
    let amp_floor = Q::one() - rational::pow(&frac(2, 3), p.big_m as u32);
    l.push(Property::compare("xi_correlation_amplified", &xi_corr, Rel::Ge, &amp_floor, true));
    l.push(Property::compare(
        "xi_correlation_target",
        &xi_corr,
        Rel::Ge,
        &(Q::one() - frac(1, 24 * p.n as i64)),
        false,
    ));
    l.push(Property::compare("xi_norm", &xi.l1(), Rel::Eq, &int(1), true));
    l.push(Property::check("xi_pure_high_degree", xi.certify_pure_high_degree(psi_phd)));

    let zeta = dual_block_compose(&phi, &xi)?;
    let big_phi = dual_block_compose(&phi, &amp)?;
    let assoc = dual_block_compose(&big_phi, &psi_dense)?;
    l.push(Property::check("zeta_associativity", assoc == zeta));
    l.push(Property::compare(
        "zeta_correlation",
        &correlation_with_g(&zeta, f, &p),
        Rel::Ge,
        &frac(1, 2),
        false,
    ));
    l.push(Property::compare("zeta_norm", &zeta.l1(), Rel::Eq, &int(1), true));
    l.push(Property::check("zeta_pure_high_degree", zeta.certify_pure_high_degree(p.big_d)));

    let factored = FactoredZeta::new(big_phi, psi.profile.clone(), p.n_cap)?;
    let mass = factored.mass_outside(p.n_cap);
    l.push(Property::compare("mass_outside_dp", &mass, Rel::Eq, &zeta.mass_above(p.n_cap), true));
    let base = 2 * p.n_cap * p.r;
    l.push(Property::decided(
        "mass_outside_bound",
        below_inverse_power(&mass, base, 2 * p.r, p.k),
        false,
        rational::fmt(&mass),
        Rel::Le,
        format!("({base})^(-{}/{})", 2 * p.r, p.k),
    ));
    l.push(Property::decided(
        "mass_outside_degree_bound",
        below_inverse_power(&mass, base, 2 * p.big_d, 1),
        false,
        rational::fmt(&mass),
        Rel::Le,
        format!("({base})^(-{})", 2 * p.big_d),
    ));

    let nu = correction_nu(&zeta, p.n_cap, p.big_d)?;
    l.extend(correction_properties(&zeta, &nu, p.n_cap, p.big_d));

    let zetahat = finalize_zetahat(&zeta, &nu)?;
    l.push(Property::compare("zetahat_norm", &zetahat.l1(), Rel::Eq, &int(1), true));
    l.push(Property::compare_int(
        "zetahat_support_within_cap",
        zetahat.max_support_weight().unwrap_or(0) as i64,
        Rel::Le,
        p.n_cap as i64,
        true,
    ));
    l.push(Property::check("zetahat_pure_high_degree", zetahat.certify_pure_high_degree(p.big_d)));
    l.push(Property::compare(
        "zetahat_correlation",
        &correlation_with_g(&zetahat, f, &p),
        Rel::Ge,
        &frac(1, 3),
        false,
    ));

    Ok(DeskRun {
        params: p,
        phi,
        amplifier: amp,
        psi,
        xi,
        zeta,
        mass_outside: mass,
        nu,
        zetahat,
        ledger: l,
    })
}
