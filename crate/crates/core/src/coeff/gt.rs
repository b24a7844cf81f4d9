use std::collections::HashMap;
use std::sync::Arc;

use super::{CoeffQuery, Sign};
use crate::numtheory::{factorize, primes_up_to, FactoredNat};

/// Coefficients `0..len` of `prod_{d|P} (1 - x^d)^{eps mu(P/d)}` for the
/// squarefree `P = prod primes`, via the recursion
/// `j b_j = -eps sum_{m<j} b_m r_P(j-m)` with the Ramanujan sum
/// `r_P(r) = mu(P) mu(g) phi(g)`, `g = (r, P)`.
///
/// Panics if a division by `j` is inexact or a coefficient leaves `i64`;
/// either would mean a bug.
pub fn gt_series(primes: &[u64], eps: Sign, len: usize) -> Vec<i64> {
    if len == 0 {
        return Vec::new();
    }
    let mu_p: i128 = if primes.len() % 2 == 0 { 1 } else { -1 };
    let t: Vec<i128> = (0..len as u64)
        .map(|r| {
            if r == 0 {
                return 0;
            }
            let (mut mu_g, mut phi_g) = (1i128, 1i128);
            for &p in primes {
                if r % p == 0 {
                    mu_g = -mu_g;
                    phi_g *= (p - 1) as i128;
                }
            }
            mu_p * mu_g * phi_g
        })
        .collect();
    let e = eps.to_i64() as i128;
    let mut b: Vec<i64> = Vec::with_capacity(len);
    b.push(1);
    for j in 1..len {
        let acc: i128 = (0..j).map(|m| b[m] as i128 * t[j - m]).sum();
        let num = -e * acc;
        assert!(num % j as i128 == 0, "inexact division in coefficient recursion");
        b.push(i64::try_from(num / j as i128).expect("coefficient overflow"));
    }
    b
}

/// `a_n^eps(k)`: reduce to the squarefree kernel, apply the degree and
/// periodicity cutoffs, then run the recursion on the primes `<= k`.
/// Primes above `k` only flip the sign.
pub fn coeff_gt(q: CoeffQuery) -> i64 {
    assert!(q.n > 0, "n must be positive");
    coeff_gt_factors(&factorize(q.n), q.k, q.eps)
}

/// [`coeff_gt`] for `n` given by its factorization (so `n` may exceed `u64`).
pub fn coeff_gt_factored(n: &FactoredNat, k: u64, eps: Sign) -> i64 {
    coeff_gt_factors(n.factors(), k, eps)
}

pub(crate) fn coeff_gt_factors(factors: &[(u64, u32)], k: u64, eps: Sign) -> i64 {
    // n / kernel(n), saturating: a saturated value cannot divide a nonzero k
    let mut c: u64 = 1;
    for &(p, e) in factors {
        for _ in 1..e {
            c = c.saturating_mul(p);
        }
    }
    if k % c != 0 {
        return 0;
    }
    let mut k = k / c;
    if !factors.is_empty() {
        let kernel = factors
            .iter()
            .try_fold(1u128, |acc, &(p, _)| acc.checked_mul(p as u128));
        let phi = factors
            .iter()
            .try_fold(1u128, |acc, &(p, _)| acc.checked_mul(p as u128 - 1));
        match eps {
            Sign::Plus => {
                if let Some(phi) = phi {
                    if k as u128 > phi {
                        return 0;
                    }
                }
            }
            Sign::Minus => {
                if let Some(kernel) = kernel {
                    k = (k as u128 % kernel) as u64;
                    let phi = phi.expect("phi <= kernel");
                    if k as u128 > kernel - phi {
                        return 0;
                    }
                }
            }
        }
    }
    let small: Vec<u64> = factors.iter().map(|&(p, _)| p).filter(|&p| p <= k).collect();
    let large = factors.len() - small.len();
    gt_series(&small, eps.flip_by(large), k as usize + 1)[k as usize]
}

/// Series memo for one fixed `k`, keyed by the set of primes `<= k`
/// (a bitmask over `primes_up_to(k)`) and the effective sign.
///
/// Any squarefree `s` has `a_s^eps(j) = series(mask, eps')[j]` for `j <= k`,
/// where `mask` selects the primes of `s` that are `<= k` and `eps'` is `eps`
/// flipped once per prime of `s` above `k`.
pub struct GtCache {
    primes: Vec<u64>,
    len: usize,
    map: HashMap<(u64, Sign), Arc<[i64]>>,
}

impl GtCache {
    pub fn new(k: u64) -> Self {
        let primes = primes_up_to(k);
        assert!(primes.len() <= 64, "prime mask limited to 64 primes");
        GtCache {
            primes,
            len: k as usize + 1,
            map: HashMap::new(),
        }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn series(&mut self, mask: u64, eps: Sign) -> Arc<[i64]> {
        let (primes, len) = (&self.primes, self.len);
        self.map
            .entry((mask, eps))
            .or_insert_with(|| {
                let sel: Vec<u64> = primes
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                gt_series(&sel, eps, len).into()
            })
            .clone()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gt(n: u64, k: u64, eps: Sign) -> i64 {
        coeff_gt(CoeffQuery::new(n, k, eps).unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(gt(105, 7, Sign::Plus), -2);
        assert_eq!(gt(12, 2, Sign::Plus), -1);
        assert_eq!(gt(6, 9, Sign::Minus), -1);
        assert_eq!(gt(1, 0, Sign::Plus), 1);
        assert_eq!(gt(1, 1, Sign::Plus), -1);
        assert_eq!(gt(1, 5, Sign::Plus), 0);
        assert_eq!(gt(1, 5, Sign::Minus), 1);
    }

    #[test]
    fn series_of_one_is_binomial() {
        assert_eq!(gt_series(&[], Sign::Plus, 4), vec![1, -1, 0, 0]);
        assert_eq!(gt_series(&[], Sign::Minus, 4), vec![1, 1, 1, 1]);
        // Phi_6 = 1 - x + x^2
        assert_eq!(gt_series(&[2, 3], Sign::Plus, 5), vec![1, -1, 1, 0, 0]);
    }

    #[test]
    fn cache_matches_direct() {
        let mut cache = GtCache::new(10);
        // primes 2,3,5,7 -> mask for {3,5,7} = 0b1110
        let s = cache.series(0b1110, Sign::Plus);
        for j in 0..=10 {
            assert_eq!(s[j], gt(105, j as u64, Sign::Plus));
        }
        assert_eq!(cache.len(), 1);
    }
}
