//! Natural densities `delta(a_n(k) = v)`, scaled by `zeta(2)`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::averages::euler_factor;
use super::sweep::{sweep_divisors, RecipSum};
use crate::coeff::GtCache;
use crate::error::{Error, Result};
use crate::numtheory::{primes_up_to, special_moduli, FactoredNat, Rat};

/// Exact `zeta(2) delta(a_n(k) = v)` for every nonzero `v`.
///
/// The density of the value 0 is `1 - (6 / pi^2) Q` with `Q` the sum of the
/// scaled nonzero densities; it is kept in this symbolic form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityTable {
    pub k: u64,
    /// Nonzero values with positive density, ascending.
    pub scaled: BTreeMap<i64, Rat>,
    /// `Q = sum_v scaled[v]`.
    pub zero_q: Rat,
}

impl DensityTable {
    fn new(k: u64, scaled: BTreeMap<i64, Rat>) -> Self {
        let zero_q = scaled.values().sum();
        DensityTable { k, scaled, zero_q }
    }

    /// `zeta(2) delta(a_n(k) = v)`, zero when `v` has density zero.
    pub fn get(&self, v: i64) -> Rat {
        self.scaled.get(&v).cloned().unwrap_or_default()
    }

    /// `sum_v v scaled[v]`, which equals `e_k`.
    pub fn first_moment(&self) -> Rat {
        self.scaled
            .iter()
            .map(|(&v, r)| Rat::from(v) * r)
            .sum()
    }

    /// `delta(a_n(k) = 0) = 1 - 6 Q / pi^2` as a float.
    pub fn zero_density_f64(&self) -> f64 {
        1.0 - 6.0 * self.zero_q.to_f64() / (std::f64::consts::PI * std::f64::consts::PI)
    }
}

/// The two ways of computing the density table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DensityRoute {
    /// Sum over `d | M_k`.
    Divisor,
    /// Sum over `d | M_k / 2` with the `-v` terms at half weight (odd `k >= 3`).
    Corvier,
}

/// Per-value sums `sum_{d | m, a_d^1(k) = v} 1/d + sum_{d | m, a_d^{-1}(k) = v} 1/d`.
fn value_recip_sums(k: u64, m: &FactoredNat) -> Result<BTreeMap<i64, Rat>> {
    let mut cache = GtCache::new(k);
    let proto = RecipSum::new(m);
    let mut sums: BTreeMap<i64, RecipSum> = BTreeMap::new();
    sweep_divisors(k, m, &mut cache, |dc| {
        for v in [dc.plus, dc.minus] {
            if v != 0 {
                sums.entry(v)
                    .or_insert_with(|| proto.clone())
                    .add(dc.exps, 1);
            }
        }
    })?;
    Ok(sums.into_iter().map(|(v, s)| (v, s.value())).collect())
}

/// The density table through the chosen route.
pub fn density_via(k: u64, route: DensityRoute) -> Result<DensityTable> {
    if k == 0 {
        return Err(Error::ZeroArgument);
    }
    let moduli = special_moduli(k)?;
    let norm = Rat::from(2) * euler_factor(&primes_up_to(k));
    let scaled = match route {
        DensityRoute::Divisor => value_recip_sums(k, &moduli.m)?
            .into_iter()
            .map(|(v, s)| (v, s / &norm))
            .collect(),
        DensityRoute::Corvier => {
            if k < 3 || k % 2 == 0 {
                return Err(Error::RouteMismatch {
                    route: "corvier",
                    k,
                    reason: "requires odd k >= 3",
                });
            }
            let half = moduli
                .m
                .div_exact(&FactoredNat::from_u64(2)?)
                .expect("M_k is even");
            let alpha = value_recip_sums(k, &half)?;
            let half_weight = Rat::frac(1, 2);
            let mut out = BTreeMap::new();
            for &v in alpha.keys() {
                for w in [v, -v] {
                    out.entry(w).or_insert_with(|| {
                        let own = alpha.get(&w).cloned().unwrap_or_default();
                        let mirror = alpha.get(&-w).cloned().unwrap_or_default();
                        (own + mirror * &half_weight) / &norm
                    });
                }
            }
            out
        }
    };
    Ok(DensityTable::new(k, scaled))
}

/// The density table, using the half-size modulus for odd `k >= 3`.
pub fn density(k: u64) -> Result<DensityTable> {
    if k >= 3 && k % 2 == 1 {
        density_via(k, DensityRoute::Corvier)
    } else {
        density_via(k, DensityRoute::Divisor)
    }
}
