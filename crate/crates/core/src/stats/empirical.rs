//! Finite-range averages and frequencies over `n <= x`, for comparison
//! with the exact limits.

use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{coeff_gt_factors, Sign};
use crate::error::{Error, Result};
use crate::numtheory::{factorize_with_spf, spf_table, Rat};

/// `(1/x) sum_{n <= x} a_n(k)` and, when requested, `(1/x) #{n <= x : a_n(k) = v}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EmpiricalStats {
    pub k: u64,
    pub x: u64,
    pub avg: Rat,
    pub v: Option<i64>,
    pub freq: Option<Rat>,
}

/// Per-`n` sums over `1..=x`, computed in parallel on a smallest-prime-factor table.
fn sweep<T: Send + Copy + std::iter::Sum<T>>(
    x: u64,
    f: impl Fn(u64, &[(u64, u32)]) -> T + Sync,
) -> Result<T> {
    if x == 0 {
        return Err(Error::ZeroArgument);
    }
    let limit = usize::try_from(x).map_err(|_| Error::InvalidArgument("x too large".into()))?;
    let spf = spf_table(limit);
    Ok((1..=limit)
        .into_par_iter()
        .map(|n| f(n as u64, &factorize_with_spf(n, &spf)))
        .sum())
}

/// `a_n(k)` with `Phi_1 = x - 1` taken literally.
fn genuine(n: u64, factors: &[(u64, u32)], k: u64, eps: Sign) -> i64 {
    let a = coeff_gt_factors(factors, k, eps);
    if n == 1 {
        -a
    } else {
        a
    }
}

/// Empirical average of `a_n(k)` over `n <= x`, and the frequency of `v`.
pub fn empirical_stats(k: u64, x: u64, v: Option<i64>) -> Result<EmpiricalStats> {
    let (sum, hits) = {
        let pair = sweep(x, |n, fac| {
            let a = genuine(n, fac, k, Sign::Plus);
            Pair(a, i64::from(Some(a) == v))
        })?;
        (pair.0, pair.1)
    };
    let xi = x as i64;
    Ok(EmpiricalStats {
        k,
        x,
        avg: Rat::frac(sum, xi),
        v,
        freq: v.map(|_| Rat::frac(hits, xi)),
    })
}

/// `(1/x) sum_{n <= x} beta_n(k)` with `beta_n(k) = (a_n^1(k) - a_n^{-1}(k)) / 2`.
pub fn empirical_beta_average(k: u64, x: u64) -> Result<Rat> {
    let twice = sweep(x, |_, fac| {
        coeff_gt_factors(fac, k, Sign::Plus) - coeff_gt_factors(fac, k, Sign::Minus)
    })?;
    Ok(Rat::frac(twice, 2 * x as i64))
}

#[derive(Clone, Copy)]
struct Pair(i64, i64);

impl std::iter::Sum for Pair {
    fn sum<I: Iterator<Item = Pair>>(iter: I) -> Pair {
        iter.fold(Pair(0, 0), |a, b| Pair(a.0 + b.0, a.1 + b.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_one_matches_moebius_sum() {
        // a_n(1) = -mu(n) for n > 1 and a_1(1) = 1
        let s = empirical_stats(1, 10, Some(1)).unwrap();
        // mu(2..10) = -1,-1,0,-1,1,-1,0,0,1 sums to -2; so the sum is 1 + 2 = 3
        assert_eq!(s.avg, Rat::frac(3, 10));
        assert_eq!(s.freq, Some(Rat::frac(5, 10)));
    }

    #[test]
    fn rejects_zero_range() {
        assert!(empirical_stats(2, 0, None).is_err());
    }
}
