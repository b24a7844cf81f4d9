//! `zeta(2)`-scaled averages `e_k`, `f_k`, `g_k` of `a_n(k)`, `mu(n) a_n(k)`
//! and `mu(n)^2 a_n(k)` over all `n`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::sweep::{sweep_divisors, RecipSum};
use crate::coeff::GtCache;
use crate::error::{Error, Result};
use crate::numtheory::{is_prime, moebius, primes_up_to, special_moduli, FactoredNat, Rat};
use crate::partitions::{enumerate_partitions, eps2, PartitionSig};

/// The independent ways of computing `e_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// Divisor sum over `d | M_k`.
    Divisor,
    /// Sum over all partitions of `k`.
    Partition,
    /// Sum over partitions of `k` into odd parts with a repeated part (odd prime `k`).
    OddPartition,
    /// Divisor sum over `d | M_k / 2` (odd `k >= 3`).
    Corvier,
    /// Divisor sum over `d | R_k` (odd prime `k`).
    Prime,
}

impl Route {
    pub const ALL: [Route; 5] = [
        Route::Divisor,
        Route::Partition,
        Route::OddPartition,
        Route::Corvier,
        Route::Prime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Divisor => "divisor",
            Route::Partition => "partition",
            Route::OddPartition => "odd_partition",
            Route::Corvier => "corvier",
            Route::Prime => "prime",
        }
    }

    /// Whether the route is defined for this `k`.
    pub fn applies_to(self, k: u64) -> bool {
        match self {
            Route::Divisor | Route::Partition => k >= 1,
            Route::Corvier => k >= 3 && k % 2 == 1,
            Route::OddPartition | Route::Prime => k >= 3 && is_prime(k),
        }
    }

    /// The routes defined for `k`.
    pub fn applicable(k: u64) -> Vec<Route> {
        Route::ALL.into_iter().filter(|r| r.applies_to(k)).collect()
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown route {s:?}")))
    }
}

/// `prod_{p in primes} (1 + 1/p)`.
pub(crate) fn euler_factor(primes: &[u64]) -> Rat {
    let num: BigInt = primes.iter().map(|&p| BigInt::from(p + 1)).product();
    let den: BigInt = primes.iter().map(|&p| BigInt::from(p)).product();
    Rat::new(num, den).expect("nonzero product")
}

/// `sum_{d | m} (a_d^1(k) + a_d^{-1}(k)) / d`, optionally twisted by `mu(d)`
/// and with the difference in place of the sum.
fn divisor_sum(k: u64, m: &FactoredNat, twisted: bool) -> Result<Rat> {
    let mut cache = GtCache::new(k);
    let mut acc = RecipSum::new(m);
    sweep_divisors(k, m, &mut cache, |dc| {
        let w = if twisted {
            dc.moebius() * (dc.plus - dc.minus)
        } else {
            dc.plus + dc.minus
        };
        acc.add(dc.exps, w);
    })?;
    Ok(acc.value())
}

/// Contribution `eps2(lambda) / (G prod_{p | L/G} (p + 1))` of one partition to `e_k`.
pub fn partition_contribution(sig: &PartitionSig) -> Rat {
    let e = eps2(sig);
    if e.is_zero() {
        return e;
    }
    let q = sig.lcm / sig.gcd;
    let den = sig.gcd * prime_plus_one_product(q);
    e / Rat::from(den as i64)
}

fn prime_plus_one_product(n: u64) -> u64 {
    crate::numtheory::factorize(n)
        .iter()
        .map(|&(p, _)| p + 1)
        .product()
}

/// Sums `weight(lambda)` over the partitions selected by `keep`, grouping
/// equal weights so the exact sum is taken over few distinct terms.
fn partition_sum(
    k: u64,
    odd_only: bool,
    keep: impl Fn(&PartitionSig) -> bool,
    weight: impl Fn(&PartitionSig) -> Rat,
) -> Rat {
    let mut counts: HashMap<Rat, i64> = HashMap::new();
    for sig in enumerate_partitions(k, odd_only).filter(|s| keep(s)) {
        let w = weight(&sig);
        if !w.is_zero() {
            *counts.entry(w).or_insert(0) += 1;
        }
    }
    counts
        .into_iter()
        .map(|(w, c)| w * Rat::from(c))
        .sum()
}

/// `e_k = zeta(2) M(a_n(k))` through the chosen route.
pub fn average_e(k: u64, route: Route) -> Result<Rat> {
    if k == 0 {
        return Err(Error::ZeroArgument);
    }
    if !route.applies_to(k) {
        let reason = match route {
            Route::Corvier => "requires odd k >= 3",
            _ => "requires an odd prime k",
        };
        return Err(Error::RouteMismatch {
            route: route.name(),
            k,
            reason,
        });
    }
    let primes = primes_up_to(k);
    let odd_primes: Vec<u64> = primes.iter().copied().filter(|&p| p > 2).collect();
    Ok(match route {
        Route::Divisor => {
            let m = special_moduli(k)?.m;
            divisor_sum(k, &m, false)? / (Rat::from(2) * euler_factor(&primes))
        }
        Route::Corvier => {
            let half = special_moduli(k)?
                .m
                .div_exact(&FactoredNat::from_u64(2)?)
                .expect("M_k is even");
            divisor_sum(k, &half, false)? / (Rat::from(6) * euler_factor(&odd_primes))
        }
        Route::Prime => {
            let r = special_moduli(k)?.r;
            let below: Vec<u64> = odd_primes.iter().copied().filter(|&p| p < k).collect();
            divisor_sum(k, &r, false)? / (Rat::from(6) * euler_factor(&below))
        }
        Route::Partition => partition_sum(k, false, |_| true, partition_contribution),
        Route::OddPartition => {
            partition_sum(
                k,
                true,
                |s| s.top_multiplicity() >= 2,
                |s| eps2(s) / Rat::from(prime_plus_one_product(s.lcm) as i64),
            ) / Rat::from(3)
        }
    })
}

/// `e_k`, `f_k` and `g_k` for one `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AveragesReport {
    pub k: u64,
    /// `zeta(2) M(a_n(k))`.
    pub e: Rat,
    /// `zeta(2) M(mu(n) a_n(k))`.
    pub f: Rat,
    /// `zeta(2) M(mu(n)^2 a_n(k))`.
    pub g: Rat,
}

/// `zeta(2) M(mu(n) a_n^eps(k))` from the divisors of `Q_k`.
pub fn twisted_average_f(k: u64, eps: crate::coeff::Sign) -> Result<Rat> {
    if k == 0 {
        return Err(Error::ZeroArgument);
    }
    let primes = primes_up_to(k);
    let q = special_moduli(k)?.q;
    Ok(Rat::from(eps.to_i64()) * divisor_sum(k, &q, true)?
        / (Rat::from(2) * euler_factor(&primes)))
}

/// `g_k` from the divisors of `Q_k`.
pub fn squarefree_average_g(k: u64) -> Result<Rat> {
    if k == 0 {
        return Err(Error::ZeroArgument);
    }
    let primes = primes_up_to(k);
    let q = special_moduli(k)?.q;
    Ok(divisor_sum(k, &q, false)? / (Rat::from(2) * euler_factor(&primes)))
}

/// `g_k` as a sum over partitions: `sum eps2(lambda) mu(L)^2 / prod_{p | L} (p + 1)`.
pub fn squarefree_average_g_partitions(k: u64) -> Result<Rat> {
    if k == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(partition_sum(
        k,
        false,
        |s| moebius(s.lcm).is_ok_and(|m| m != 0),
        |s| eps2(s) / Rat::from(prime_plus_one_product(s.lcm) as i64),
    ))
}

/// `e_k` (divisor route), `f_k` and `g_k`. The partition route for `g_k`
/// and the relation `M(mu(n) c_n(k)) = -M(mu(n) a_n(k))` are checked and
/// reported as `RouteMismatch` on failure.
pub fn twisted_averages(k: u64) -> Result<AveragesReport> {
    use crate::coeff::Sign;
    let e = average_e(k, Route::Divisor)?;
    let f = twisted_average_f(k, Sign::Plus)?;
    let g = squarefree_average_g(k)?;
    let mismatch = |what: String| Error::Inconsistent(format!("k = {k}: {what}"));
    let g_part = squarefree_average_g_partitions(k)?;
    if g_part != g {
        return Err(mismatch(format!("g_k: divisor {g} vs partition {g_part}")));
    }
    let f_inv = twisted_average_f(k, Sign::Minus)?;
    if f_inv != -f.clone() {
        return Err(mismatch(format!("f_k: {f} vs inverse {f_inv}")));
    }
    Ok(AveragesReport { k, e, f, g })
}
