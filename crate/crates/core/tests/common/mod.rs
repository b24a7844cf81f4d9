//! Finite-range identity checks shared by the identity tests and the
//! acceptance target. Each returns the number of instances checked, or a
//! description of the first failure.

#![allow(dead_code)]

use cyclo_core::coeff::{coeff_gt, CoeffQuery, Sign};
use cyclo_core::numtheory::{
    cyclotomic_poly, euler_phi, primes_up_to, ramanujan_sum, special_moduli, FactoredNat, IntPoly,
};
use cyclo_core::partitions::{
    blubber_brute, blubber_sum, enumerate_partitions, eps2, eps2_from_binomials, omi_brute,
    omi_divisor_sum,
};
use cyclo_core::Rat;
use num_bigint::BigInt;
use num_integer::Integer;

pub type Check = Result<usize, String>;

pub fn a(n: u64, k: u64, eps: Sign) -> i64 {
    coeff_gt(CoeffQuery::new(n, k, eps).unwrap())
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

/// `a_{2n}^eps(k) = (-1)^k a_n^eps(k)` for odd `n`.
pub fn doubling(n_max: u64, k_max: u64) -> Check {
    let mut count = 0;
    for n in (1..=n_max).step_by(2) {
        for k in 0..=k_max {
            for eps in Sign::BOTH {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                ensure(a(2 * n, k, eps) == sign * a(n, k, eps), || {
                    format!("doubling fails at n={n} k={k} eps={eps}")
                })?;
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Palindromy of `Phi_n` and antipalindromy of `(1 - x^n) / Phi_n`.
pub fn symmetry(n_max: u64) -> Check {
    let mut count = 0;
    for n in 2..=n_max {
        let phi = euler_phi(n).unwrap();
        for k in 0..=phi {
            ensure(a(n, k, Sign::Plus) == a(n, phi - k, Sign::Plus), || {
                format!("polynomial symmetry fails at n={n} k={k}")
            })?;
            count += 1;
        }
        // Below x^n the inverse series agrees with (1 - x^n) / Phi_n(x),
        // a polynomial of degree n - phi(n).
        let deg = n - phi;
        for k in 0..=deg {
            ensure(a(n, k, Sign::Minus) == -a(n, deg - k, Sign::Minus), || {
                format!("inverse symmetry fails at n={n} k={k}")
            })?;
            count += 1;
        }
    }
    Ok(count)
}

/// Multiplying the index by a prime `q > k` flips the sign `eps`; by two
/// such primes it changes nothing.
pub fn large_prime_multiplication(q_max: u64, n_max: u64) -> Check {
    let primes = primes_up_to(q_max);
    let mut count = 0;
    for (i, &q1) in primes.iter().enumerate() {
        for &q2 in &primes[i + 1..] {
            for n in (1..=n_max).filter(|n| n % q1 != 0 && n % q2 != 0) {
                for k in 0..q1 {
                    for eps in Sign::BOTH {
                        let base = a(n, k, eps);
                        ensure(a(n * q1, k, eps) == a(n, k, -eps), || {
                            format!("sign flip fails at n={n} q={q1} k={k} eps={eps}")
                        })?;
                        ensure(a(n * q1 * q2, k, eps) == base, || {
                            format!("double flip fails at n={n} q={q1},{q2} k={k} eps={eps}")
                        })?;
                        count += 2;
                    }
                }
            }
        }
    }
    Ok(count)
}

/// `(x^n - 1) Phi_n'(x) = Phi_n(x) sum_{m=1}^n r_n(m) x^{m-1}`.
pub fn ramanujan_log_derivative(n_max: u64) -> Check {
    for n in 1..=n_max {
        let phi = cyclotomic_poly(n).unwrap();
        let series = IntPoly::new((1..=n).map(|m| BigInt::from(ramanujan_sum(n, m).unwrap())).collect());
        let lhs = &IntPoly::x_pow_minus_one(n as usize) * &phi.derivative();
        ensure(lhs == &phi * &series, || format!("log-derivative identity fails at n={n}"))?;
    }
    Ok(n_max as usize)
}

/// `Phi_n(x) = exp(-sum_m r_n(m) x^m / m)` for `n > 1`, compared through the
/// recursion `k c_k = -sum_{j=1}^k r_n(j) c_{k-j}` up to past the degree.
pub fn ramanujan_exponential(n_max: u64) -> Check {
    let mut count = 0;
    for n in 2..=n_max {
        let phi = cyclotomic_poly(n).unwrap();
        let len = phi.coeffs().len() + 5;
        let r: Vec<BigInt> = (0..len as u64)
            .map(|m| BigInt::from(if m == 0 { 0 } else { ramanujan_sum(n, m).unwrap() }))
            .collect();
        let mut c = vec![BigInt::from(1)];
        for k in 1..len {
            let acc: BigInt = (1..=k).map(|j| &r[j] * &c[k - j]).sum();
            let (q, rem) = (-acc).div_rem(&BigInt::from(k));
            ensure(rem == BigInt::from(0), || format!("non-integral term at n={n} k={k}"))?;
            ensure(q == phi.coeff(k), || format!("exponential identity fails at n={n} k={k}"))?;
            c.push(q);
            count += 1;
        }
    }
    Ok(count)
}

/// `2 eps2` as the symmetrized product of sign-binomials at `d = L`.
pub fn eps2_remark(k_max: u64) -> Check {
    let mut count = 0;
    for k in 1..=k_max {
        for sig in enumerate_partitions(k, false) {
            ensure(eps2(&sig) == eps2_from_binomials(&sig), || format!("eps2 remark fails at {sig:?}"))?;
            ensure((eps2(&sig) * Rat::from(2)).is_integer(), || format!("2 eps2 not integral at {sig:?}"))?;
            count += 1;
        }
    }
    Ok(count)
}

/// Moduli exercising both `L | r` and `L !| r`, squarefree or not.
fn moduli(k: u64) -> Vec<FactoredNat> {
    let sm = special_moduli(k).unwrap();
    let mut out = vec![sm.q, sm.m, sm.r];
    for extra in [1u64, 12, 30, 45, 360, 1001, 2520] {
        out.push(FactoredNat::from_u64(extra).unwrap());
    }
    out
}

/// Closed forms of the partition-indexed divisor sums against literal
/// summation over the divisors.
pub fn divisor_sum_closed_forms(k_max: u64) -> Check {
    let mut count = 0;
    for k in 1..=k_max {
        let rs = moduli(k);
        for sig in enumerate_partitions(k, false) {
            for r in &rs {
                for eps in Sign::BOTH {
                    ensure(omi_divisor_sum(&sig, r, eps) == omi_brute(&sig, r, eps).unwrap(), || {
                        format!("signed divisor sum fails at {sig:?} r={r} eps={eps}")
                    })?;
                    count += 1;
                }
                ensure(blubber_sum(&sig, r) == blubber_brute(&sig, r).unwrap(), || {
                    format!("symmetrized divisor sum fails at {sig:?} r={r}")
                })?;
                count += 1;
            }
        }
    }
    Ok(count)
}
