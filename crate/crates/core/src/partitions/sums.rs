use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::PartitionSig;
use crate::coeff::{moebius_support, Sign};
use crate::error::{Error, Result};
use crate::numtheory::{factorize, moebius_ratio, FactoredNat, Rat};

/// `(-1)^m C(w, m)` for `w` in `{-1, 0, 1}`: `1` for `m = 0`, `-w` for
/// `m = 1`, and `w (w - 1) / 2` for `m >= 2`.
pub fn binom_sign(w: i64, m: u32) -> i64 {
    debug_assert!((-1..=1).contains(&w));
    match m {
        0 => 1,
        1 => -w,
        _ => w * (w - 1) / 2,
    }
}

fn mu_quot(a: u64, b: u64) -> i64 {
    moebius_ratio(a, b)
}

/// First sign weight: `1` for an even number of distinct parts, all
/// multiplicity one; `mu(L/k_1)^{s-t} / 2` when some part repeats and the
/// repeated parts share `mu(L/k_j)`; zero otherwise or when `L/G` is not
/// squarefree.
pub fn eps1(sig: &PartitionSig) -> Rat {
    let l = sig.lcm;
    if mu_quot(l, sig.gcd) == 0 {
        return Rat::zero();
    }
    if sig.top_multiplicity() == 1 {
        return if sig.s % 2 == 0 { Rat::one() } else { Rat::zero() };
    }
    let m1 = mu_quot(l, sig.parts[0].0);
    if sig.parts[..sig.t].iter().any(|&(k, _)| mu_quot(l, k) != m1) {
        return Rat::zero();
    }
    Rat::frac(m1.pow((sig.s - sig.t) as u32), 2)
}

/// `eps1(lambda) * prod_{j > t} mu(L / k_j)`.
pub fn eps2(sig: &PartitionSig) -> Rat {
    let e1 = eps1(sig);
    if e1.is_zero() {
        return e1;
    }
    let tail: i64 = sig.parts[sig.t..]
        .iter()
        .map(|&(k, _)| mu_quot(sig.lcm, k))
        .product();
    e1 * Rat::from(tail)
}

/// `eps2` through the symmetrized product of sign-binomials at `d = L`.
pub fn eps2_from_binomials(sig: &PartitionSig) -> Rat {
    let prod = |sgn: i64| -> i64 {
        sig.parts
            .iter()
            .map(|&(k, m)| binom_sign(sgn * mu_quot(sig.lcm, k), m))
            .product()
    };
    Rat::frac(prod(1) + prod(-1), 2)
}

/// `a_n^eps(0..=K)` as sums over partitions: only parts `d | n` with
/// `mu(n/d) != 0` can contribute, each weighted by `binom_sign(eps mu(n/d), m)`.
pub fn coeff_series_via_partitions(n: u64, eps: Sign, big_k: u64) -> Result<Vec<i64>> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut parts: Vec<(u64, i64)> = moebius_support(&factorize(n))
        .into_iter()
        .filter(|&(d, _)| d <= big_k)
        .map(|(d, mu)| (d, eps.to_i64() * mu))
        .collect();
    parts.reverse();
    let mut out = vec![0i64; big_k as usize + 1];
    fn dfs(parts: &[(u64, i64)], sum: u64, weight: i64, big_k: u64, out: &mut [i64]) {
        let Some((&(d, w), rest)) = parts.split_first() else {
            out[sum as usize] += weight;
            return;
        };
        let mut m = 0u32;
        let mut total = sum;
        while total <= big_k {
            let f = binom_sign(w, m);
            if f != 0 {
                dfs(rest, total, weight * f, big_k, out);
            } else if m >= 2 {
                break;
            }
            m += 1;
            total += d;
        }
    }
    dfs(&parts, 0, 1, big_k, &mut out);
    Ok(out)
}

/// `a_n^eps(k)` as a sum over the partitions of `k`.
pub fn coeff_via_partitions(n: u64, k: u64, eps: Sign) -> Result<i64> {
    Ok(coeff_series_via_partitions(n, eps, k)?[k as usize])
}

struct OmiParts {
    l: u64,
    /// Primes dividing `r / L` but not `L / G`.
    free_primes: Vec<u64>,
    tail: i64,
}

fn omi_parts(sig: &PartitionSig, r: &FactoredNat) -> Option<OmiParts> {
    let l = FactoredNat::from_u64(sig.lcm).expect("positive");
    let quotient = r.div_exact(&l)?;
    let lg = sig.lcm / sig.gcd;
    let free_primes = quotient.primes().filter(|&p| lg % p != 0).collect();
    let tail = sig.parts[sig.t..]
        .iter()
        .map(|&(k, _)| mu_quot(sig.lcm, k))
        .product();
    Some(OmiParts {
        l: sig.lcm,
        free_primes,
        tail,
    })
}

fn euler_factor(primes: &[u64], sign: i64) -> Rat {
    primes
        .iter()
        .fold(Rat::one(), |acc, &p| acc * Rat::frac(p as i64 + sign, p as i64))
}

/// Closed form of
/// `sum_{d | r} (1/d) prod_j (-1)^{n_j} C(eps mu(d/k_j), n_j)`.
pub fn omi_divisor_sum(sig: &PartitionSig, r: &FactoredNat, eps: Sign) -> Rat {
    let Some(op) = omi_parts(sig, r) else {
        return Rat::zero();
    };
    let e = eps.to_i64();
    let inv_l = Rat::frac(1, op.l as i64);
    if sig.top_multiplicity() == 1 {
        if mu_quot(sig.lcm, sig.gcd) == 0 {
            return Rat::zero();
        }
        let sign = if sig.s % 2 == 0 { 1 } else { -e };
        let euler = euler_factor(&op.free_primes, if sig.s % 2 == 0 { 1 } else { -1 });
        return inv_l * Rat::from(sign * op.tail) * euler;
    }
    let m1 = mu_quot(sig.lcm, sig.parts[0].0);
    if m1 == 0 || sig.parts[..sig.t].iter().any(|&(k, _)| mu_quot(sig.lcm, k) != m1) {
        return Rat::zero();
    }
    let lead = m1.pow((sig.s - sig.t) as u32) * op.tail;
    let bracket = euler_factor(&op.free_primes, 1)
        - Rat::from(e * m1) * euler_factor(&op.free_primes, -1);
    Rat::frac(lead, 2 * op.l as i64) * bracket
}

fn divisors_u64(r: &FactoredNat) -> Result<Vec<u64>> {
    r.divisors()
        .map(|d| {
            d.to_u64()
                .ok_or_else(|| Error::InvalidArgument("divisor exceeds u64".into()))
        })
        .collect()
}

/// Literal divisor summation of the quantity closed-formed by
/// [`omi_divisor_sum`].
pub fn omi_brute(sig: &PartitionSig, r: &FactoredNat, eps: Sign) -> Result<Rat> {
    let e = eps.to_i64();
    let mut num = BigInt::from(0);
    let rv = r
        .to_u64()
        .ok_or_else(|| Error::InvalidArgument("modulus exceeds u64".into()))?;
    for d in divisors_u64(r)? {
        let term: i64 = sig
            .parts
            .iter()
            .map(|&(k, m)| binom_sign(e * mu_quot(d, k), m))
            .product();
        if term != 0 {
            num += BigInt::from(term) * BigInt::from(rv / d);
        }
    }
    Rat::new(num, BigInt::from(rv))
}

/// Half the sum of [`omi_divisor_sum`] over both signs:
/// `eps2 / L * prod_{p | r/L, p !| L/G} (1 + 1/p)` when `L | r`, else 0.
pub fn blubber_sum(sig: &PartitionSig, r: &FactoredNat) -> Rat {
    let Some(op) = omi_parts(sig, r) else {
        return Rat::zero();
    };
    eps2(sig) * Rat::frac(1, op.l as i64) * euler_factor(&op.free_primes, 1)
}

/// Literal half-sum over both signs.
pub fn blubber_brute(sig: &PartitionSig, r: &FactoredNat) -> Result<Rat> {
    let plus = omi_brute(sig, r, Sign::Plus)?;
    let minus = omi_brute(sig, r, Sign::Minus)?;
    Ok((plus + minus) * Rat::frac(1, 2))
}
