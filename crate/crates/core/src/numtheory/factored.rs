//! Positive integers carried together with their prime factorization.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::primes::{factorize, is_prime};
use crate::error::{Error, Result};

/// A positive integer with its factorization `n = prod p^e`.
///
/// Primes are strictly increasing and every exponent is at least 1;
/// the value 1 has an empty factor list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FactoredNat {
    value: BigUint,
    factors: Vec<(u64, u32)>,
}

impl FactoredNat {
    pub fn one() -> Self {
        FactoredNat {
            value: BigUint::one(),
            factors: Vec::new(),
        }
    }

    pub fn from_u64(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroArgument);
        }
        Ok(Self::from_factors_unchecked(factorize(n)))
    }

    /// Builds from `(prime, exponent)` pairs, checking primality and order.
    /// Zero exponents are dropped.
    pub fn from_factors(factors: Vec<(u64, u32)>) -> Result<Self> {
        let factors: Vec<_> = factors.into_iter().filter(|&(_, e)| e > 0).collect();
        for w in factors.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::InvalidArgument(
                    "primes must be strictly increasing".into(),
                ));
            }
        }
        if let Some(&(p, _)) = factors.iter().find(|&&(p, _)| !is_prime(p)) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        Ok(Self::from_factors_unchecked(factors))
    }

    pub(crate) fn from_factors_unchecked(factors: Vec<(u64, u32)>) -> Self {
        let value = factors
            .iter()
            .fold(BigUint::one(), |acc, &(p, e)| acc * BigUint::from(p).pow(e));
        FactoredNat { value, factors }
    }

    /// Product of the given primes (ascending, distinct).
    pub fn squarefree(primes: &[u64]) -> Self {
        Self::from_factors_unchecked(primes.iter().map(|&p| (p, 1)).collect())
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.value.to_u64()
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.value.to_u128()
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of distinct prime factors.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Squarefree kernel: product of the distinct primes.
    pub fn kernel(&self) -> FactoredNat {
        Self::from_factors_unchecked(self.factors.iter().map(|&(p, _)| (p, 1)).collect())
    }

    /// `n / kernel(n)`.
    pub fn cokernel(&self) -> FactoredNat {
        Self::from_factors_unchecked(
            self.factors
                .iter()
                .filter(|&&(_, e)| e > 1)
                .map(|&(p, e)| (p, e - 1))
                .collect(),
        )
    }

    pub fn moebius(&self) -> i64 {
        if self.is_squarefree() {
            if self.factors.len() % 2 == 0 {
                1
            } else {
                -1
            }
        } else {
            0
        }
    }

    pub fn euler_phi(&self) -> BigUint {
        self.factors.iter().fold(BigUint::one(), |acc, &(p, e)| {
            acc * BigUint::from(p - 1) * BigUint::from(p).pow(e - 1)
        })
    }

    pub fn divisor_count(&self) -> BigUint {
        self.factors
            .iter()
            .fold(BigUint::one(), |acc, &(_, e)| acc * BigUint::from(e + 1))
    }

    pub fn mul(&self, other: &FactoredNat) -> FactoredNat {
        let mut out: Vec<(u64, u32)> = Vec::with_capacity(self.omega() + other.omega());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.factors, &other.factors);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push(b[j]);
                j += 1;
            } else {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
        FactoredNat {
            value: &self.value * &other.value,
            factors: out,
        }
    }

    pub fn divides(&self, other: &FactoredNat) -> bool {
        self.factors
            .iter()
            .all(|&(p, e)| other.exponent_of(p) >= e)
    }

    /// `self / other` when `other | self`.
    pub fn div_exact(&self, other: &FactoredNat) -> Option<FactoredNat> {
        if !other.divides(self) {
            return None;
        }
        let factors = self
            .factors
            .iter()
            .map(|&(p, e)| (p, e - other.exponent_of(p)))
            .filter(|&(_, e)| e > 0)
            .collect();
        Some(Self::from_factors_unchecked(factors))
    }

    /// The divisor with the given exponent vector (aligned with `factors()`).
    pub fn divisor_from_exponents(&self, exps: &[u32]) -> FactoredNat {
        debug_assert_eq!(exps.len(), self.factors.len());
        Self::from_factors_unchecked(
            self.factors
                .iter()
                .zip(exps)
                .filter(|(_, &e)| e > 0)
                .map(|(&(p, _), &e)| (p, e))
                .collect(),
        )
    }

    /// All divisors in ascending order, generated lazily.
    pub fn divisors(&self) -> Divisors<'_> {
        Divisors::new(self)
    }

    /// Every exponent vector `0 <= e_i <= E_i`, in odometer order.
    pub fn for_each_exponents(&self, mut f: impl FnMut(&[u32])) {
        let maxes: Vec<u32> = self.factors.iter().map(|&(_, e)| e).collect();
        let mut cur = vec![0u32; maxes.len()];
        loop {
            f(&cur);
            let mut i = 0;
            loop {
                if i == cur.len() {
                    return;
                }
                if cur[i] < maxes[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }
}

impl fmt::Display for FactoredNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Debug for FactoredNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = ", self.value)?;
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Ascending divisor stream.
///
/// Each divisor is reached through its unique non-decreasing prime sequence;
/// a heap entry spawns at most its first child and its next sibling, so the
/// frontier stays far smaller than the divisor set.
pub struct Divisors<'a> {
    n: &'a FactoredNat,
    heap: BinaryHeap<Reverse<Entry>>,
    started: bool,
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct Entry {
    value: BigUint,
    parent: BigUint,
    idx: usize,
    exp: u32,
}

impl<'a> Divisors<'a> {
    fn new(n: &'a FactoredNat) -> Self {
        Divisors {
            n,
            heap: BinaryHeap::new(),
            started: false,
        }
    }

    fn prime(&self, i: usize) -> BigUint {
        BigUint::from(self.n.factors[i].0)
    }
}

impl Iterator for Divisors<'_> {
    type Item = BigUint;

    fn next(&mut self) -> Option<BigUint> {
        if !self.started {
            self.started = true;
            if !self.n.factors.is_empty() {
                self.heap.push(Reverse(Entry {
                    value: self.prime(0),
                    parent: BigUint::one(),
                    idx: 0,
                    exp: 1,
                }));
            }
            return Some(BigUint::one());
        }
        let Reverse(e) = self.heap.pop()?;
        let len = self.n.factors.len();
        if e.idx + 1 < len {
            let q = self.prime(e.idx + 1);
            self.heap.push(Reverse(Entry {
                value: &e.parent * &q,
                parent: e.parent.clone(),
                idx: e.idx + 1,
                exp: 1,
            }));
        }
        if e.exp < self.n.factors[e.idx].1 {
            let p = self.prime(e.idx);
            self.heap.push(Reverse(Entry {
                value: &e.value * &p,
                parent: e.value.clone(),
                idx: e.idx,
                exp: e.exp + 1,
            }));
        } else if e.idx + 1 < len {
            let q = self.prime(e.idx + 1);
            self.heap.push(Reverse(Entry {
                value: &e.value * &q,
                parent: e.value.clone(),
                idx: e.idx + 1,
                exp: 1,
            }));
        }
        Some(e.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn divs(n: u64) -> Vec<u64> {
        FactoredNat::from_u64(n)
            .unwrap()
            .divisors()
            .map(|d| d.to_u64().unwrap())
            .collect()
    }

    fn brute_divisors(n: u64) -> Vec<u64> {
        (1..=n).filter(|d| n % d == 0).collect()
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(divs(1), vec![1]);
        assert_eq!(divs(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divs(24).len(), 8);
    }

    #[test]
    fn divisors_ascending_and_complete() {
        for n in 1..=2000 {
            assert_eq!(divs(n), brute_divisors(n), "n = {n}");
        }
    }

    #[test]
    fn exponent_vectors_cover_divisors() {
        let n = FactoredNat::from_u64(720).unwrap();
        let mut got = Vec::new();
        n.for_each_exponents(|e| got.push(n.divisor_from_exponents(e).to_u64().unwrap()));
        got.sort();
        assert_eq!(got, brute_divisors(720));
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(FactoredNat::from_u64(0), Err(Error::ZeroArgument));
    }

    #[test]
    fn from_factors_validates() {
        assert!(FactoredNat::from_factors(vec![(3, 1), (2, 1)]).is_err());
        assert!(FactoredNat::from_factors(vec![(4, 1)]).is_err());
        let n = FactoredNat::from_factors(vec![(2, 3), (3, 0), (5, 1)]).unwrap();
        assert_eq!(n.to_u64(), Some(40));
        assert_eq!(n.factors(), &[(2, 3), (5, 1)]);
    }

    #[test]
    fn kernel_phi_moebius() {
        let n = FactoredNat::from_u64(360).unwrap();
        assert_eq!(n.kernel().to_u64(), Some(30));
        assert_eq!(n.cokernel().to_u64(), Some(12));
        assert_eq!(n.euler_phi(), BigUint::from(96u32));
        assert_eq!(n.moebius(), 0);
        assert_eq!(FactoredNat::from_u64(30).unwrap().moebius(), -1);
    }

    #[test]
    fn mul_and_div() {
        let a = FactoredNat::from_u64(12).unwrap();
        let b = FactoredNat::from_u64(45).unwrap();
        let c = a.mul(&b);
        assert_eq!(c.to_u64(), Some(540));
        assert_eq!(c.div_exact(&b).unwrap(), a);
        assert!(c.div_exact(&FactoredNat::from_u64(7).unwrap()).is_none());
    }
}
