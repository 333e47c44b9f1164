//! Exact checks of the counting inequalities behind the mass bound.

use super::CraftError;
use crate::rational::{self, frac, int, Q};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// A rational upper bound on Euler's number (`e < 2.7182818285`).
pub fn e_upper() -> Q {
    Q::new(BigInt::from(27_182_818_285u64), BigInt::from(10_000_000_000u64))
}

/// A rational upper bound on `ln 2` (`ln 2 < 0.6932`).
pub fn ln2_upper() -> Q {
    frac(6932, 10000)
}

/// Certified upper bound on `C = Σ_{s≥1} 1/(s·log₂²(2s))` using dyadic
/// blocks `s ∈ [2^j, 2^{j+1})`, on which `log₂(2s) ≥ j+1` and
/// `Σ 1/s ≤ 2^{-j} + ln 2`, plus the tail `Σ_{j≥J} 1/(j+1)² ≤ 1/J`.
pub fn c_upper_bound(blocks: u32) -> Q {
    let blocks = blocks.max(1);
    let mut acc = Q::one(); // s = 1
    for j in 1..blocks {
        let block = Q::new(BigInt::one(), BigInt::one() << j) + ln2_upper();
        acc += block / int(((j + 1) * (j + 1)) as i64);
    }
    acc + frac(1, blocks as i64)
}

/// `α = 160·C·e` with both constants replaced by their upper bounds.
pub fn alpha_upper() -> Q {
    int(160) * c_upper_bound(64) * e_upper()
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundCheck {
    pub holds: bool,
    #[serde(with = "crate::rational::serde_q")]
    pub lhs: Q,
    /// Decimal value of the irrational right-hand side, for humans.
    pub rhs_approx: f64,
    pub rhs_expression: String,
}

/// Distribution of `t_1 + .. + t_R` under the product of the `η_i`.
pub fn sum_distribution(etas: &[Vec<Q>]) -> Vec<Q> {
    let mut dist = vec![Q::one()];
    for eta in etas {
        let mut next = vec![Q::zero(); dist.len() + eta.len().saturating_sub(1)];
        for (s, a) in dist.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (r, b) in eta.iter().enumerate() {
                if !b.is_zero() {
                    next[s + r] += a * b;
                }
            }
        }
        dist = next;
    }
    dist
}

/// `Σ_{t : Σt_i > cap} Π η_i(t_i)`.
pub fn tail_mass(etas: &[Vec<Q>], cap: usize) -> Q {
    sum_distribution(etas).into_iter().skip(cap + 1).sum()
}

/// Checks `Σ_{t∈P} Π η_i(t_i) ≤ 2^{-R}(2NR)^{-2R/k}` exactly, where
/// `P = {t ∈ [k]_0^R : Σ t_i > N}`.
pub fn combinatorial_bound_check(
    k: usize,
    etas: &[Vec<Q>],
    n_cap: usize,
) -> Result<BoundCheck, CraftError> {
    let r = etas.len();
    if k == 0 || r == 0 {
        return Err(CraftError::Parameter("need k >= 1 and at least one profile".into()));
    }
    for (i, eta) in etas.iter().enumerate() {
        if eta.len() > k + 1 {
            return Err(CraftError::Parameter(format!("profile {i} extends beyond k={k}")));
        }
        if eta.iter().any(Q::is_negative) {
            return Err(CraftError::Parameter(format!("profile {i} has a negative entry")));
        }
        if eta.iter().sum::<Q>() > frac(1, 2) {
            return Err(CraftError::Parameter(format!("profile {i} has total mass above 1/2")));
        }
        if let Some(t) = (0..eta.len()).find(|&t| eta[t] > frac(5, ((t + 1) * (t + 1)) as i64)) {
            return Err(CraftError::Parameter(format!(
                "profile {i} exceeds 5/(t+1)^2 at t={t}"
            )));
        }
    }
    let lhs = tail_mass(etas, n_cap);
    // lhs ≤ 2^{-R}(2NR)^{-2R/k}  ⇔  (lhs·2^R)^k · (2NR)^{2R} ≤ 1.
    let base = Q::from_integer(BigInt::from(2 * n_cap * r));
    let holds = lhs.is_zero()
        || rational::pow(&(&lhs * rational::pow2(r as u32)), k as u32)
            * rational::pow(&base, 2 * r as u32)
            <= Q::one();
    let rhs_approx =
        2f64.powi(-(r as i32)) * ((2 * n_cap * r) as f64).powf(-2.0 * r as f64 / k as f64);
    Ok(BoundCheck {
        holds,
        lhs,
        rhs_approx,
        rhs_expression: format!("2^-{r} * ({})^(-{}/{k})", 2 * n_cap * r, 2 * r),
    })
}

/// `C(n,k) ≤ (e·n/k)^k` for all `1 ≤ k ≤ n ≤ max_n`, with `e` rounded up.
pub fn binomial_bound_holds(max_n: u64) -> bool {
    let e = e_upper();
    (1..=max_n).all(|n| {
        (1..=n).all(|k| {
            let rhs = rational::pow(&(&e * int(n as i64) / int(k as i64)), k as u32);
            rational::binomial_q(n, k) <= rhs
        })
    })
}

/// `Σ_{r=m}^{M} r^{-2} ≤ 2/m` for `1 ≤ m ≤ max_m`, `M ≤ m + extra`.
pub fn inverse_square_tail_holds(max_m: u64, extra: u64) -> bool {
    (1..=max_m).all(|m| {
        let bound = frac(2, m as i64);
        let mut acc = Q::zero();
        (m..=m + extra).all(|r| {
            acc += frac(1, (r * r) as i64);
            acc <= bound
        })
    })
}

/// `Σ_t (-1)^t C(k,t) t^j = 0` for every `j < k ≤ max_k`.
pub fn alternating_binomial_identity_holds(max_k: u64) -> bool {
    (1..=max_k).all(|k| {
        (0..k as u32).all(|j| {
            (0..=k)
                .map(|t| {
                    let term = rational::binomial(k, t) * BigInt::from(t).pow(j);
                    if t % 2 == 1 {
                        -term
                    } else {
                        term
                    }
                })
                .sum::<BigInt>()
                .is_zero()
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn enumerate_tail(etas: &[Vec<Q>], cap: usize) -> Q {
        let mut total = Q::zero();
        let mut idx = vec![0usize; etas.len()];
        loop {
            if idx.iter().sum::<usize>() > cap {
                total += idx.iter().zip(etas).map(|(&t, e)| e[t].clone()).product::<Q>();
            }
            let mut i = 0;
            loop {
                if i == etas.len() {
                    return total;
                }
                idx[i] += 1;
                if idx[i] < etas[i].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn dp_matches_enumeration() {
        let capped: Vec<Q> = (0..=2).map(|r| frac(5, ((r + 1) * (r + 1)) as i64)).collect();
        let total: Q = capped.iter().sum();
        let eta: Vec<Q> = capped.iter().map(|v| v / &total / int(2)).collect();
        let etas = vec![eta.clone(), eta.clone(), eta];
        let check = combinatorial_bound_check(2, &etas, 2).unwrap();
        assert_eq!(check.lhs, enumerate_tail(&etas, 2));
    }

    #[test]
    fn trivial_cases() {
        let eta = vec![frac(1, 2), int(0)];
        let c = combinatorial_bound_check(1, &[eta.clone(), eta], 0).unwrap();
        assert_eq!(c.lhs, int(0));
        assert!(c.holds);
        let any = vec![frac(1, 4), frac(1, 4)];
        let c = combinatorial_bound_check(1, &[any.clone(), any], 2).unwrap();
        assert!(c.lhs.is_zero() && c.holds);
        assert!(combinatorial_bound_check(1, &[vec![int(1)]], 0).is_err());
    }

    #[test]
    fn constants() {
        let c = c_upper_bound(64);
        assert!(c > int(1) && c < int(3));
        assert!(alpha_upper() > int(160));
    }

    #[test]
    fn classical_inequalities() {
        assert!(binomial_bound_holds(12));
        assert!(inverse_square_tail_holds(10, 20));
        assert!(alternating_binomial_identity_holds(6));
    }
}
