//! Streaming sweeps over the divisors of the finite moduli, evaluating
//! `a_d^{+1}(k)` and `a_d^{-1}(k)` from a per-`k` series memo.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::coeff::{GtCache, Sign};
use crate::error::{Error, Result};
use crate::numtheory::{FactoredNat, Rat};

/// One divisor `d` of the swept modulus with both coefficients at `k`.
pub(crate) struct DivisorCoeffs<'a> {
    /// Exponents of `d`, aligned with the modulus factorization.
    pub exps: &'a [u32],
    pub plus: i64,
    pub minus: i64,
}

impl DivisorCoeffs<'_> {
    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn moebius(&self) -> i64 {
        if !self.is_squarefree() {
            return 0;
        }
        if self.exps.iter().filter(|&&e| e == 1).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_odd(&self, modulus: &FactoredNat) -> bool {
        modulus
            .factors()
            .iter()
            .zip(self.exps)
            .all(|(&(p, _), &e)| p != 2 || e == 0)
    }
}

/// Visits every divisor of `modulus` (whose primes must all be `<= k`).
///
/// A divisor `d = c * kernel(d)` has `a_d^eps(k) = a_{kernel}^eps(k / c)`
/// when `c | k` and 0 otherwise; the primes of the kernel above `k / c`
/// only flip the sign.
pub(crate) fn sweep_divisors(
    k: u64,
    modulus: &FactoredNat,
    cache: &mut GtCache,
    mut f: impl FnMut(&DivisorCoeffs<'_>),
) -> Result<()> {
    let index: Vec<usize> = modulus
        .primes()
        .map(|p| {
            cache
                .primes()
                .iter()
                .position(|&q| q == p)
                .ok_or_else(|| Error::InvalidArgument(format!("modulus prime {p} exceeds k = {k}")))
        })
        .collect::<Result<_>>()?;
    let primes: Vec<u64> = modulus.primes().collect();
    modulus.for_each_exponents(|exps| {
        let mut c: u64 = 1;
        for (&p, &e) in primes.iter().zip(exps) {
            for _ in 1..e.max(1) {
                c = c.saturating_mul(p);
            }
        }
        let (plus, minus) = if k % c != 0 {
            (0, 0)
        } else {
            let j = k / c;
            let mut mask = 0u64;
            let mut flips = 0usize;
            for ((&p, &e), &idx) in primes.iter().zip(exps).zip(&index) {
                if e == 0 {
                    continue;
                }
                if p <= j {
                    mask |= 1 << idx;
                } else {
                    flips += 1;
                }
            }
            let j = j as usize;
            (
                cache.series(mask, Sign::Plus.flip_by(flips))[j],
                cache.series(mask, Sign::Minus.flip_by(flips))[j],
            )
        };
        f(&DivisorCoeffs { exps, plus, minus });
    });
    Ok(())
}

/// Exact accumulator for sums `sum_d w(d) / d` over divisors of a fixed
/// modulus `m`, kept as `sum_d w(d) (m / d)` over the common denominator `m`.
#[derive(Clone)]
pub(crate) struct RecipSum {
    powers: Vec<Vec<BigUint>>,
    maxes: Vec<u32>,
    modulus: BigUint,
    pub acc: BigInt,
}

impl RecipSum {
    pub fn new(modulus: &FactoredNat) -> Self {
        let powers = modulus
            .factors()
            .iter()
            .map(|&(p, e)| {
                let mut v = vec![BigUint::one()];
                for i in 1..=e as usize {
                    let next = &v[i - 1] * p;
                    v.push(next);
                }
                v
            })
            .collect();
        RecipSum {
            powers,
            maxes: modulus.factors().iter().map(|&(_, e)| e).collect(),
            modulus: modulus.value().clone(),
            acc: BigInt::default(),
        }
    }

    pub fn cofactor(&self, exps: &[u32]) -> BigUint {
        let mut out = BigUint::one();
        for ((pw, &max), &e) in self.powers.iter().zip(&self.maxes).zip(exps) {
            if max > e {
                out *= &pw[(max - e) as usize];
            }
        }
        out
    }

    pub fn add(&mut self, exps: &[u32], weight: i64) {
        if weight != 0 {
            self.acc += BigInt::from(self.cofactor(exps)) * weight;
        }
    }

    pub fn value(&self) -> Rat {
        Rat::new(self.acc.clone(), BigInt::from(self.modulus.clone())).expect("nonzero modulus")
    }
}
