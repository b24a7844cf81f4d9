//! Multiplicative functions, Ramanujan sums, partition numbers and the
//! finite moduli that index the divisor sums.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::factored::FactoredNat;
use super::primes::{factorize, primes_up_to};
use crate::error::{Error, Result};

/// Möbius function.
pub fn moebius(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(moebius_of(&factorize(n)))
}

pub(crate) fn moebius_of(factors: &[(u64, u32)]) -> i64 {
    if factors.iter().any(|&(_, e)| e > 1) {
        0
    } else if factors.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Möbius function extended by zero to non-integers: `mu(a / b)` is 0
/// unless `b | a`.
pub fn moebius_ratio(a: u64, b: u64) -> i64 {
    if b == 0 || a % b != 0 {
        0
    } else {
        moebius_of(&factorize(a / b))
    }
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(phi_of(&factorize(n)))
}

pub(crate) fn phi_of(factors: &[(u64, u32)]) -> u64 {
    factors
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

/// Product of the distinct primes dividing `n`.
pub fn squarefree_kernel(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(factorize(n).iter().map(|&(p, _)| p).product())
}

/// Ramanujan sum `r_n(m)` through `mu(n/g) phi(n) / phi(n/g)` with `g = (n, m)`.
pub fn ramanujan_sum(n: u64, m: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let g = n.gcd(&m);
    let q = n / g;
    let fq = factorize(q);
    let mu = moebius_of(&fq);
    if mu == 0 {
        return Ok(0);
    }
    let phi_n = phi_of(&factorize(n));
    Ok(mu * (phi_n / phi_of(&fq)) as i64)
}

/// Ramanujan sum through the divisor sum `sum_{d | (n, m)} d mu(n/d)`.
pub fn ramanujan_sum_divisor(n: u64, m: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let g = n.gcd(&m);
    let mut total = 0i64;
    for d in 1..=g {
        if g % d == 0 {
            total += d as i64 * moebius_of(&factorize(n / d));
        }
    }
    Ok(total)
}

/// `p(0), ..., p(k)` by Euler's pentagonal-number recurrence.
pub fn partition_counts(k: usize) -> Vec<BigUint> {
    let mut p: Vec<BigInt> = vec![BigInt::zero(); k + 1];
    p[0] = BigInt::from(1);
    for m in 1..=k {
        let mut acc = BigInt::zero();
        let mut j: usize = 1;
        loop {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            let sign_pos = j % 2 == 1;
            let mut term = p[m - g1].clone();
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= m {
                term += &p[m - g2];
            }
            if sign_pos {
                acc += term;
            } else {
                acc -= term;
            }
            j += 1;
        }
        p[m] = acc;
    }
    p.into_iter()
        .map(|x| x.to_biguint().expect("partition numbers are positive"))
        .collect()
}

pub fn partition_count(k: usize) -> BigUint {
    partition_counts(k).pop().expect("non-empty")
}

/// `p(k) - p(k-2)` as an `i64`, the coefficient bound for `k >= 2`.
pub fn partition_gap(k: usize) -> i64 {
    let p = partition_counts(k);
    let hi = p[k].to_i64().expect("fits");
    let lo = if k >= 2 { p[k - 2].to_i64().expect("fits") } else { 0 };
    hi - lo
}

/// The four moduli whose divisors index the finite sums for fixed `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialModuli {
    /// `k * prod_{p <= k} p`
    pub m: FactoredNat,
    /// `prod_{p <= k} p`
    pub q: FactoredNat,
    /// `prod_{2 < p < k} p`
    pub r: FactoredNat,
    /// `lcm(1..k) * prod_{p <= k} p`
    pub n: FactoredNat,
}

pub fn special_moduli(k: u64) -> Result<SpecialModuli> {
    if k == 0 {
        return Err(Error::ZeroArgument);
    }
    let primes = primes_up_to(k);
    let q = FactoredNat::squarefree(&primes);
    let m = q.mul(&FactoredNat::from_u64(k)?);
    let r_primes: Vec<u64> = primes.iter().copied().filter(|&p| p > 2 && p < k).collect();
    let r = FactoredNat::squarefree(&r_primes);
    let lcm = FactoredNat::from_factors_unchecked(
        primes
            .iter()
            .map(|&p| {
                let mut e = 0;
                let mut pe = 1u64;
                while pe * p <= k {
                    pe *= p;
                    e += 1;
                }
                (p, e)
            })
            .collect(),
    );
    let n = lcm.mul(&q);
    Ok(SpecialModuli { m, q, r, n })
}

/// `prod_{p <= k} p`.
pub fn primorial(k: u64) -> FactoredNat {
    FactoredNat::squarefree(&primes_up_to(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1), Ok(1));
        assert_eq!(moebius(4), Ok(0));
        assert_eq!(moebius(30), Ok(-1));
        assert_eq!(moebius(0), Err(Error::ZeroArgument));
        assert_eq!(moebius_ratio(12, 5), 0);
        assert_eq!(moebius_ratio(12, 4), -1);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1), Ok(1));
        assert_eq!(euler_phi(12), Ok(4));
        assert_eq!(euler_phi(105), Ok(48));
        assert_eq!(euler_phi(0), Err(Error::ZeroArgument));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(squarefree_kernel(1), Ok(1));
        assert_eq!(squarefree_kernel(12), Ok(6));
        assert_eq!(squarefree_kernel(49), Ok(7));
    }

    #[test]
    fn ramanujan_examples() {
        for n in 1..=60 {
            assert_eq!(ramanujan_sum(n, n).unwrap(), euler_phi(n).unwrap() as i64);
            assert_eq!(ramanujan_sum(n, 0).unwrap(), euler_phi(n).unwrap() as i64);
        }
        assert_eq!(ramanujan_sum(6, 2), Ok(-1));
        assert_eq!(ramanujan_sum(6, 3), Ok(-2));
        assert_eq!(ramanujan_sum_divisor(6, 3), Ok(-2));
        assert_eq!(ramanujan_sum_divisor(6, 2), Ok(-1));
    }

    /// Independent oracle: count partitions by dynamic programming over the
    /// largest allowed part.
    fn partitions_dp(k: usize) -> u64 {
        let mut ways = vec![0u64; k + 1];
        ways[0] = 1;
        for part in 1..=k {
            for s in part..=k {
                ways[s] += ways[s - part];
            }
        }
        ways[k]
    }

    #[test]
    fn partition_count_examples() {
        assert_eq!(partition_count(0), BigUint::from(1u32));
        assert_eq!(partition_count(5), BigUint::from(7u32));
        assert_eq!(partitions_dp(50), 204_226);
        assert_eq!(partition_count(50), BigUint::from(204_226u32));
        let all = partition_counts(120);
        for (k, p) in all.iter().enumerate() {
            assert_eq!(p, &BigUint::from(partitions_dp(k)), "k = {k}");
        }
    }

    #[test]
    fn special_moduli_examples() {
        let m4 = special_moduli(4).unwrap();
        assert_eq!(m4.m.to_u64(), Some(24));
        let m7 = special_moduli(7).unwrap();
        assert_eq!(m7.q.to_u64(), Some(210));
        assert_eq!(m7.r.to_u64(), Some(15));
        assert_eq!(m7.m.to_u64(), Some(7 * 210));
        let m2 = special_moduli(2).unwrap();
        assert_eq!(m2.n.to_u64(), Some(4));
        assert_eq!(special_moduli(1).unwrap().m.to_u64(), Some(1));
        // lcm(1..10) = 2520
        assert_eq!(special_moduli(10).unwrap().n.to_u64(), Some(2520 * 210));
        assert!(special_moduli(0).is_err());
    }
}
