use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{coeff_gt, coeff_gt_factored, CoeffQuery, Sign};
use crate::error::{Error, Result};
use crate::numtheory::{moebius, moebius_ratio, FactoredNat, Rat};

/// Coefficients `r(0..=K)` of `prod_d (1 - x^d)^{-a_d}` from the
/// logarithmic-derivative recursion `d r(d) = sum_{j=1}^d r(d-j) sum_{k|j} k a_k`.
pub fn log_derivative_recursion(a: &BTreeMap<u64, i64>, big_k: usize) -> Result<Vec<BigInt>> {
    let sigma: Vec<BigInt> = (0..=big_k as u64)
        .map(|j| {
            if j == 0 {
                return BigInt::zero();
            }
            a.iter()
                .filter(|&(&k, &ak)| k <= j && j % k == 0 && ak != 0)
                .map(|(&k, &ak)| BigInt::from(k) * BigInt::from(ak))
                .sum()
        })
        .collect();
    let mut r = Vec::with_capacity(big_k + 1);
    r.push(BigInt::from(1));
    for d in 1..=big_k {
        let acc: BigInt = (1..=d).map(|j| &r[d - j] * &sigma[j]).sum();
        let (q, rem) = acc.div_rem(&BigInt::from(d));
        if !rem.is_zero() {
            return Err(Error::InexactDivision);
        }
        r.push(q);
    }
    Ok(r)
}

/// The coefficient of `x^k` in `Phi_n(x)` itself (so `Phi_1 = x - 1` is
/// taken literally).
pub fn cyclotomic_coeff(n: u64, k: u64) -> Result<i64> {
    let q = CoeffQuery::new(n, k, Sign::Plus)?;
    Ok(if n == 1 { -coeff_gt(q) } else { coeff_gt(q) })
}

/// [`cyclotomic_coeff`] for an index given in factored form.
pub fn cyclotomic_coeff_factored(n: &FactoredNat, k: u64) -> i64 {
    let a = coeff_gt_factored(n, k, Sign::Plus);
    if n.is_one() {
        -a
    } else {
        a
    }
}

/// The coefficient of `x^k` in the Taylor series of `1 / Phi_n(x)`.
pub fn inverse_cyclotomic_coeff(n: u64, k: u64) -> Result<i64> {
    let q = CoeffQuery::new(n, k, Sign::Minus)?;
    Ok(if n == 1 { -coeff_gt(q) } else { coeff_gt(q) })
}

/// Even and odd parts `(alpha, beta)` with `a_n^eps(k) = alpha + eps beta`.
pub fn even_odd_parts(n: u64, k: u64) -> Result<(Rat, Rat)> {
    let plus = coeff_gt(CoeffQuery::new(n, k, Sign::Plus)?);
    let minus = coeff_gt(CoeffQuery::new(n, k, Sign::Minus)?);
    Ok((Rat::frac(plus + minus, 2), Rat::frac(plus - minus, 2)))
}

/// The explicit formulas for `a_n^1(k)`, `1 <= k <= 3`, as polynomials in
/// `mu(n)`, `mu(n/2)` and `mu(n/3)`.
pub fn closed_form_small_k(n: u64, k: u64) -> Result<i64> {
    let mu = moebius(n)?;
    let half_sq = (mu * mu - mu) / 2; // mu^2/2 - mu/2, always an integer
    match k {
        1 => Ok(-mu),
        2 => Ok(half_sq - moebius_ratio(n, 2)),
        3 => Ok(half_sq + moebius_ratio(n, 2) * mu - moebius_ratio(n, 3)),
        _ => Err(Error::InvalidArgument(format!(
            "closed forms exist for k in 1..=3, got {k}"
        ))),
    }
}

/// `2 alpha` and `2 beta` as integers.
pub fn doubled_parts(n: u64, k: u64) -> Result<(i64, i64)> {
    let (a, b) = even_odd_parts(n, k)?;
    let two = Rat::from(2);
    let to_int = |r: Rat| (r * &two).numer().to_i64().expect("small");
    Ok((to_int(a), to_int(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::coeff_naive;

    #[test]
    fn log_derivative_examples() {
        let empty = BTreeMap::new();
        assert_eq!(log_derivative_recursion(&empty, 3).unwrap(), vec![
            BigInt::from(1),
            BigInt::zero(),
            BigInt::zero(),
            BigInt::zero()
        ]);
        let one_minus_x = BTreeMap::from([(1, -1)]);
        let r = log_derivative_recursion(&one_minus_x, 4).unwrap();
        assert_eq!(r, [1, -1, 0, 0, 0].map(BigInt::from).to_vec());
        let geometric = BTreeMap::from([(1, 1)]);
        let r = log_derivative_recursion(&geometric, 5).unwrap();
        assert!(r.iter().all(|c| *c == BigInt::from(1)));
    }

    #[test]
    fn log_derivative_matches_naive() {
        // prod_{d|n} (1 - x^d)^{mu(n/d)} has a_d = -mu(n/d)
        for n in 1..=60u64 {
            let a: BTreeMap<u64, i64> = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| (d, -moebius(n / d).unwrap()))
                .collect();
            let r = log_derivative_recursion(&a, 20).unwrap();
            let s = coeff_naive(n, Sign::Plus, 20).unwrap().values;
            assert_eq!(r, s.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn genuine_coefficients() {
        assert_eq!(cyclotomic_coeff(1, 0), Ok(-1));
        assert_eq!(cyclotomic_coeff(1, 1), Ok(1));
        assert_eq!(cyclotomic_coeff(2, 1), Ok(1));
        assert_eq!(cyclotomic_coeff(105, 7), Ok(-2));
        assert_eq!(inverse_cyclotomic_coeff(1, 4), Ok(-1));
        assert_eq!(inverse_cyclotomic_coeff(6, 3), Ok(-1));
    }

    #[test]
    fn even_odd_examples() {
        let (a, b) = even_odd_parts(6, 2).unwrap();
        assert_eq!(a, Rat::frac(1, 2));
        assert_eq!(b, Rat::frac(1, 2));
        for n in 1..=100 {
            for k in 0..=12 {
                let (a, b) = even_odd_parts(n, k).unwrap();
                let plus = coeff_gt(CoeffQuery::new(n, k, Sign::Plus).unwrap());
                let minus = coeff_gt(CoeffQuery::new(n, k, Sign::Minus).unwrap());
                assert_eq!(&a + &b, Rat::from(plus));
                assert_eq!(&a - &b, Rat::from(minus));
            }
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_small_k(6, 1), Ok(-1));
        assert_eq!(closed_form_small_k(2, 2), Ok(0));
        assert!(closed_form_small_k(6, 4).is_err());
        assert!(closed_form_small_k(6, 0).is_err());
        for n in 1..=500 {
            for k in 1..=3 {
                let want = coeff_gt(CoeffQuery::new(n, k, Sign::Plus).unwrap());
                assert_eq!(closed_form_small_k(n, k).unwrap(), want, "n={n} k={k}");
            }
        }
    }
}
