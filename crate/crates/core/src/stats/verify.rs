//! Finite-range verification of the identities and inequalities satisfied by
//! the averages, densities and value sets.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::averages::{average_e, squarefree_average_g, twisted_average_f, Route};
use super::density::{density_via, DensityRoute, DensityTable};
use super::valueset::{inverse_value_set, value_set, ValueSetReport};
use crate::coeff::Sign;
use crate::error::Result;
use crate::numtheory::{is_prime, primes_up_to, Rat};

/// Routes through partitions are skipped above this `k` (their cost grows like `p(k)`).
pub const PARTITION_ROUTE_KMAX: u64 = 60;

/// Outcome of one check at one `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub k: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Sign changes of `(-1)^k (e_k - e_{k+1})` that contradict the alternating pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeeSaw {
    /// `k` with `(-1)^k (e_k - e_{k+1}) <= 0`, ascending.
    pub violations: Vec<u64>,
    /// `(-1)^k (e_k - e_{k+1})` at each violation.
    pub values: Vec<Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub kmax: u64,
    pub checks: Vec<IdentityCheck>,
    pub seesaw: SeeSaw,
}

impl IdentityReport {
    pub fn failures(&self) -> Vec<&IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Whether every check with this name passed (and at least one ran).
    pub fn passed(&self, name: &str) -> bool {
        let mut any = false;
        for c in self.checks.iter().filter(|c| c.name == name) {
            if !c.passed {
                return false;
            }
            any = true;
        }
        any
    }
}

/// Everything computed once per `k`.
struct PerK {
    k: u64,
    e: Rat,
    f: Rat,
    f_inverse: Rat,
    g: Rat,
    routes: Vec<(Route, Result<Rat>)>,
    density: DensityTable,
    density_corvier: Option<DensityTable>,
    values: ValueSetReport,
    inverse_values: Vec<i64>,
}

fn per_k(k: u64) -> Result<PerK> {
    let e = average_e(k, Route::Divisor)?;
    let routes = Route::applicable(k)
        .into_iter()
        .filter(|r| {
            *r != Route::Divisor
                && (k <= PARTITION_ROUTE_KMAX
                    || !matches!(r, Route::Partition | Route::OddPartition))
        })
        .map(|r| (r, average_e(k, r)))
        .collect();
    Ok(PerK {
        k,
        f: twisted_average_f(k, Sign::Plus)?,
        f_inverse: twisted_average_f(k, Sign::Minus)?,
        g: squarefree_average_g(k)?,
        routes,
        density: density_via(k, DensityRoute::Divisor)?,
        density_corvier: if k >= 3 && k % 2 == 1 {
            Some(density_via(k, DensityRoute::Corvier)?)
        } else {
            None
        },
        values: value_set(k)?,
        inverse_values: inverse_value_set(k)?,
        e,
    })
}

fn is_integer_multiple(r: &Rat, factor: &BigInt) -> bool {
    (r.clone() * Rat::from(factor.clone())).is_integer()
}

fn prime_plus_one_product(primes: impl Iterator<Item = u64>) -> BigInt {
    primes.map(|p| BigInt::from(p + 1)).product()
}

/// Runs every check for `1 <= k <= kmax` and locates the see-saw violations
/// for `k <= kmax` (which needs `e_{kmax+1}`).
pub fn verify_identities(kmax: u64) -> Result<IdentityReport> {
    let data: Vec<PerK> = (1..=kmax)
        .into_par_iter()
        .map(per_k)
        .collect::<Result<_>>()?;
    let e_next = average_e(kmax + 1, Route::Divisor)?;
    let e_of = |k: u64| -> &Rat { &data[(k - 1) as usize].e };

    let mut checks = Vec::new();
    let mut push = |name: &'static str, k: u64, passed: bool, detail: Option<String>| {
        checks.push(IdentityCheck {
            name,
            k,
            passed,
            detail: if passed { None } else { detail },
        });
    };

    for d in &data {
        let k = d.k;
        let primes = primes_up_to(k);

        for (route, got) in &d.routes {
            let ok = got.as_ref().is_ok_and(|v| *v == d.e);
            push(
                "route_equivalence",
                k,
                ok,
                Some(format!("{route}: {got:?} vs divisor {}", d.e)),
            );
        }

        let half = Rat::frac(1, 2);
        push(
            "e_bounds",
            k,
            !d.e.is_negative() && d.e <= half,
            Some(format!("e_k = {}", d.e)),
        );

        let two_k_prod = BigInt::from(2 * k) * prime_plus_one_product(primes.iter().copied());
        push(
            "e_k_times_2k_prod_integral",
            k,
            is_integer_multiple(&d.e, &two_k_prod),
            Some(format!("e_k = {}", d.e)),
        );
        let p6 = BigInt::from(k) * prime_plus_one_product(primes.iter().copied());
        push(
            "e_k_times_k_prod_integral",
            k,
            is_integer_multiple(&d.e, &p6),
            Some(format!("e_k = {}", d.e)),
        );
        if k >= 3 && is_prime(k) {
            let two_prod = BigInt::from(2) * prime_plus_one_product(primes.iter().copied().filter(|&p| p < k));
            push(
                "prime_e_k_times_2_prod_integral",
                k,
                is_integer_multiple(&d.e, &two_prod),
                Some(format!("e_k = {}", d.e)),
            );
        }
        if is_prime(k) {
            push(
                "g_equals_e_at_primes",
                k,
                d.g == d.e,
                Some(format!("g_k = {}, e_k = {}", d.g, d.e)),
            );
        }
        if k % 2 == 0 && k >= 6 && is_prime(k / 2) {
            let q = k / 2;
            let expected = d.e.clone() + e_of(q).clone() * Rat::frac(1, 2)
                - Rat::frac(1, (2 * q * (q + 1)) as i64);
            push(
                "g_double_prime",
                k,
                d.g == expected,
                Some(format!("g = {}, expected {}", d.g, expected)),
            );
        }
        if k >= 2 {
            push("g_positive", k, d.g.is_positive(), Some(format!("g_k = {}", d.g)));
        }
        push(
            "f_inverse_is_negated",
            k,
            d.f_inverse == -d.f.clone(),
            Some(format!("f = {}, inverse {}", d.f, d.f_inverse)),
        );

        let vs = &d.values;
        push(
            "units_in_value_set",
            k,
            vs.contains(-1) && vs.contains(0) && vs.contains(1),
            None,
        );
        push(
            "value_set_equals_inverse_value_set",
            k,
            vs.values == d.inverse_values,
            Some(format!("A = {:?}, C = {:?}", vs.values, d.inverse_values)),
        );
        push("value_set_convex", k, vs.convex, Some(format!("{:?}", vs.values)));
        push("height_at_most_k", k, vs.a <= k, Some(format!("A(k) = {}", vs.a)));
        if k % 2 == 1 {
            push("odd_k_symmetric", k, vs.symmetric, Some(format!("{:?}", vs.values)));
        } else {
            let even: BTreeSet<i64> = vs.values.iter().copied().collect();
            push(
                "odd_part_contained",
                k,
                vs.parity_odd.iter().all(|v| even.contains(v)),
                Some(format!("{:?}", vs.parity_odd)),
            );
        }

        let dens = &d.density;
        let nonzero: Vec<i64> = vs.values.iter().copied().filter(|&v| v != 0).collect();
        let support: Vec<i64> = dens.scaled.keys().copied().collect();
        push(
            "density_support_is_value_set",
            k,
            support == nonzero && dens.scaled.values().all(|r| r.is_positive()),
            Some(format!("support {support:?} vs values {nonzero:?}")),
        );
        push(
            "density_first_moment",
            k,
            dens.first_moment() == d.e,
            Some(format!("moment {} vs e_k {}", dens.first_moment(), d.e)),
        );
        let mass = 6.0 * dens.zero_q.to_f64() / (std::f64::consts::PI * std::f64::consts::PI);
        push(
            "density_mass",
            k,
            dens.zero_q.is_positive() && mass <= 1.0,
            Some(format!("6Q/pi^2 = {mass}")),
        );
        if let Some(cor) = &d.density_corvier {
            push(
                "density_routes_agree",
                k,
                cor == dens,
                Some("half-modulus table differs".into()),
            );
            let odd: BTreeSet<i64> = vs.parity_odd.iter().copied().collect();
            for &v in &nonzero {
                let (a, b) = (dens.get(v), dens.get(-v));
                let two = Rat::from(2);
                let bounds = b.clone() * two.clone() >= a && b <= a.clone() * two.clone();
                let exact_two = b == a.clone() * two;
                push(
                    "density_factor_two",
                    k,
                    bounds && exact_two == !odd.contains(&v),
                    Some(format!("v = {v}: {a} vs {b}, v in A_1: {}", odd.contains(&v))),
                );
            }
        }
    }

    let mut violations = Vec::new();
    let mut values = Vec::new();
    for k in 1..=kmax {
        let next = if k == kmax { &e_next } else { e_of(k + 1) };
        let diff = e_of(k).clone() - next.clone();
        let signed = if k % 2 == 0 { diff } else { -diff };
        if !signed.is_positive() {
            violations.push(k);
            values.push(signed);
        }
    }

    Ok(IdentityReport {
        kmax,
        checks,
        seesaw: SeeSaw { violations, values },
    })
}
