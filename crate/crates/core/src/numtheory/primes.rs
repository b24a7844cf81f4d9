//! Prime sieve and trial-division factorization.

use std::sync::OnceLock;

/// Primes below this bound are cached; they suffice to trial-divide any
/// `u64` below 2^32 and speed up larger inputs.
const CACHE_LIMIT: u64 = 1 << 16;

static PRIME_CACHE: OnceLock<Vec<u64>> = OnceLock::new();

/// All primes `<= limit`, ascending (sieve of Eratosthenes).
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

/// Shared immutable table of small primes.
pub fn cached_primes() -> &'static [u64] {
    PRIME_CACHE.get_or_init(|| sieve_primes(CACHE_LIMIT))
}

/// Primes `<= limit` taken from the shared cache when possible.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit <= CACHE_LIMIT {
        let cache = cached_primes();
        let end = cache.partition_point(|&p| p <= limit);
        cache[..end].to_vec()
    } else {
        sieve_primes(limit)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    matches!(factorize(n).as_slice(), [(_, 1)])
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut c = n + 1;
    while !is_prime(c) {
        c += 1;
    }
    c
}

/// Prime factorization `n = prod p^e`, primes ascending. `factorize(1)` is empty.
///
/// Panics on `n == 0`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0, "factorize(0)");
    let mut out = Vec::new();
    for &p in cached_primes() {
        if p * p > n {
            break;
        }
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    // continue past the cache with odd candidates
    let mut p = CACHE_LIMIT + 1;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 2;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Smallest-prime-factor table for `0..=limit`; entry 0 and 1 are 0.
pub fn spf_table(limit: usize) -> Vec<u32> {
    let mut spf = vec![0u32; limit + 1];
    for i in 2..=limit {
        if spf[i] == 0 {
            let mut j = i;
            while j <= limit {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

/// Factorization of `n <= spf.len() - 1` read off an SPF table.
pub fn factorize_with_spf(mut n: usize, spf: &[u32]) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    while n > 1 {
        let p = spf[n] as usize;
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        out.push((p as u64, e));
    }
    out
}
