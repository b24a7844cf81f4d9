//! The value sets `A(k) = {a_n(k) : n >= 1}` and their parity pieces.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Serialize, Serializer};

use super::sweep::sweep_divisors;
use crate::coeff::{coeff_gt_factored, GtCache, Sign};
use crate::error::{Error, Result};
use crate::numtheory::{factorize, next_prime, primes_up_to, special_moduli, FactoredNat};

/// An index `n > 1` with `a_n(k)` equal to a recorded value.
#[derive(Clone, PartialEq, Eq)]
pub struct Witness(pub FactoredNat);

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Witness({:?})", self.0)
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

/// `A(k)` with its extremes, shape flags and parity decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValueSetReport {
    pub k: u64,
    /// `A(k)`, ascending.
    pub values: Vec<i64>,
    /// `max |v|`.
    pub a: u64,
    /// `max A(k)`.
    pub a_plus: i64,
    /// `-min A(k)`.
    pub a_minus: i64,
    /// Whether the values are consecutive integers.
    pub convex: bool,
    /// Whether `A(k) = -A(k)`.
    pub symmetric: bool,
    /// Values attained at even `n`.
    pub parity_even: Vec<i64>,
    /// Values attained at odd `n`.
    pub parity_odd: Vec<i64>,
    /// Values attained only at odd `n`.
    pub diff: Vec<i64>,
}

impl ValueSetReport {
    fn build(k: u64, all: &BTreeSet<i64>, odd: &BTreeSet<i64>) -> Self {
        let values: Vec<i64> = all.iter().copied().collect();
        let parity_even: Vec<i64> = if k % 2 == 0 {
            values.clone()
        } else {
            odd.iter().rev().map(|v| -v).collect()
        };
        let even_set: BTreeSet<i64> = parity_even.iter().copied().collect();
        let diff = values.iter().copied().filter(|v| !even_set.contains(v)).collect();
        let a_plus = *values.last().expect("0 is always present");
        let a_minus = -*values.first().expect("0 is always present");
        ValueSetReport {
            k,
            a: a_plus.max(a_minus) as u64,
            a_plus,
            a_minus,
            convex: values.windows(2).all(|w| w[1] == w[0] + 1),
            symmetric: values.iter().all(|v| all.contains(&-v)),
            parity_odd: odd.iter().copied().collect(),
            parity_even,
            diff,
            values,
        }
    }

    pub fn contains(&self, v: i64) -> bool {
        self.values.binary_search(&v).is_ok()
    }
}

/// Value set of `a_n(k)` over all `n` (or odd `n` only), each value with a
/// witness index.
///
/// Every value is some `a_d^{+-1}(k)` with `d | M_k`. Writing
/// `d = c * kernel(d)` with `c | k`, it equals `a_P^sigma(j)` for `j = k / c`
/// and a squarefree `P` built from primes `<= j` that contains the primes of
/// `c` up to `j`. Primes `p` with `2p <= j` are enumerated explicitly through
/// `F_{Pq}^sigma(x) = F_P^{-sigma}(x) F_P^sigma(x^q)`; each prime `q` in
/// `(j/2, j]` contributes the single term `x^q` modulo `x^{j+1}`, so its
/// effect is a subset sum.
pub fn value_set_with_witnesses(k: u64, odd_only: bool) -> Result<BTreeMap<i64, Witness>> {
    if k == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut out: BTreeMap<i64, Witness> = BTreeMap::new();
    for c in (1..=k).filter(|c| k % c == 0 && (!odd_only || c % 2 == 1)) {
        scan_quotient(k, c, odd_only, &mut out);
    }
    // a_n(k) = 0 whenever n / kernel(n) exceeds k
    let base: u64 = if odd_only { 3 } else { 2 };
    let mut e = 1u32;
    while base.pow(e - 1) <= k {
        e += 1;
    }
    out.entry(0)
        .or_insert_with(|| Witness(FactoredNat::from_factors(vec![(base, e)]).expect("prime")));
    Ok(out)
}

struct Scan<'a> {
    k: u64,
    c: u64,
    j: usize,
    small: Vec<u64>,
    forced_small: Vec<u64>,
    forced_mid: Vec<u64>,
    optional_mid: Vec<u64>,
    forced_big: Vec<u64>,
    out: &'a mut BTreeMap<i64, Witness>,
}

fn scan_quotient(k: u64, c: u64, odd_only: bool, out: &mut BTreeMap<i64, Witness>) {
    let j = k / c;
    let forced: Vec<u64> = factorize(c).iter().map(|&(p, _)| p).collect();
    let usable: Vec<u64> = primes_up_to(j)
        .into_iter()
        .filter(|&p| !odd_only || p != 2)
        .collect();
    let (small, mid): (Vec<u64>, Vec<u64>) = usable.iter().partition(|&&p| 2 * p <= j);
    let mut scan = Scan {
        k,
        c,
        j: j as usize,
        forced_small: forced.iter().copied().filter(|&p| 2 * p <= j).collect(),
        forced_mid: mid.iter().copied().filter(|p| forced.contains(p)).collect(),
        optional_mid: mid.iter().copied().filter(|p| !forced.contains(p)).collect(),
        forced_big: forced.iter().copied().filter(|&p| p > j).collect(),
        small,
        out,
    };
    let len = scan.j + 1;
    let mut plus = vec![0i64; len];
    plus[0] = 1;
    if len > 1 {
        plus[1] = -1;
    }
    let minus = vec![1i64; len];
    let mut chosen = Vec::new();
    scan.dfs(0, &mut chosen, &plus, &minus);
}

/// `h(x) * u(x^q)` modulo `x^{len}`.
fn mul_dilated(h: &[i64], u: &[i64], q: usize) -> Vec<i64> {
    let len = h.len();
    let mut out = vec![0i64; len];
    for (m, &um) in u.iter().enumerate() {
        let shift = m * q;
        if shift >= len {
            break;
        }
        if um == 0 {
            continue;
        }
        for i in shift..len {
            out[i] += um * h[i - shift];
        }
    }
    out
}

impl Scan<'_> {
    fn dfs(&mut self, i: usize, chosen: &mut Vec<u64>, plus: &[i64], minus: &[i64]) {
        if i == self.small.len() {
            self.leaf(chosen, plus, minus);
            return;
        }
        let q = self.small[i];
        if !self.forced_small.contains(&q) {
            self.dfs(i + 1, chosen, plus, minus);
        }
        let next_plus = mul_dilated(minus, plus, q as usize);
        let next_minus = mul_dilated(plus, minus, q as usize);
        chosen.push(q);
        self.dfs(i + 1, chosen, &next_plus, &next_minus);
        chosen.pop();
    }

    fn leaf(&mut self, chosen: &[u64], plus: &[i64], minus: &[i64]) {
        let j = self.j;
        let mu_s: i64 = if chosen.len() % 2 == 0 { 1 } else { -1 };
        for tau in Sign::BOTH {
            let g = if tau == Sign::Plus { plus } else { minus };
            let coef = tau.to_i64() * mu_s;
            let base = g[j]
                + coef
                    * self
                        .forced_mid
                        .iter()
                        .map(|&q| g[j - q as usize])
                        .sum::<i64>();
            let items: Vec<i64> = self
                .optional_mid
                .iter()
                .map(|&q| coef * g[j - q as usize])
                .collect();
            let mut sums = vec![base];
            for &it in items.iter().filter(|&&it| it != 0) {
                let shifted: Vec<i64> = sums.iter().map(|s| s + it).collect();
                sums.extend(shifted);
                sums.sort_unstable();
                sums.dedup();
            }
            for v in sums {
                if !self.out.contains_key(&v) {
                    let w = self.witness(chosen, tau, base, &items, v);
                    self.out.insert(v, w);
                }
            }
        }
    }

    /// Rebuilds an index attaining `v` and checks it with the recursion engine.
    fn witness(&self, chosen: &[u64], tau: Sign, base: i64, items: &[i64], v: i64) -> Witness {
        let pick = (0u64..1 << items.len())
            .find(|&mask| {
                base + items
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &x)| x)
                    .sum::<i64>()
                    == v
            })
            .expect("value came from this subset-sum set");
        let mut primes: Vec<u64> = chosen.to_vec();
        primes.extend(&self.forced_mid);
        primes.extend(
            self.optional_mid
                .iter()
                .enumerate()
                .filter(|(i, _)| pick >> i & 1 == 1)
                .map(|(_, &q)| q),
        );
        // tau = sigma * (-1)^{#mid primes}; primes of c above j flip once more
        let mid_count = primes.len() - chosen.len();
        let eps = tau.flip_by(mid_count + self.forced_big.len());
        primes.extend(&self.forced_big);
        primes.sort_unstable();
        let c_factors = factorize(self.c);
        let factors: Vec<(u64, u32)> = primes
            .iter()
            .map(|&p| {
                let extra = c_factors
                    .iter()
                    .find(|&&(q, _)| q == p)
                    .map_or(0, |&(_, e)| e);
                (p, 1 + extra)
            })
            .collect();
        let d = FactoredNat::from_factors(factors).expect("valid factorization");
        debug_assert_eq!(coeff_gt_factored(&d, self.k, eps), v);
        let n = genuine_index(d, eps, self.k);
        assert_eq!(
            crate::coeff::cyclotomic_coeff_factored(&n, self.k),
            v,
            "witness check failed for k = {}",
            self.k
        );
        Witness(n)
    }
}

/// Turns `a_d^eps(k) = v` into `a_n(k) = v` with `n > 1`, using
/// `a_{dq}^{eps}(k) = a_d^{-eps}(k)` for a prime `q > k` not dividing `d`.
fn genuine_index(d: FactoredNat, eps: Sign, k: u64) -> FactoredNat {
    let q1 = next_prime(k.max(2).max(d.primes().max().unwrap_or(1)));
    match eps {
        Sign::Minus => d.mul(&FactoredNat::from_factors(vec![(q1, 1)]).expect("prime")),
        Sign::Plus if d.is_one() => {
            let q2 = next_prime(q1);
            FactoredNat::from_factors(vec![(q1, 1), (q2, 1)]).expect("primes")
        }
        Sign::Plus => d,
    }
}

/// `A(k)`, `A_1(k)` (odd `n`), `A_0(k)` (even `n`) and derived statistics.
pub fn value_set(k: u64) -> Result<ValueSetReport> {
    let all: BTreeSet<i64> = value_set_with_witnesses(k, false)?.into_keys().collect();
    let odd: BTreeSet<i64> = value_set_with_witnesses(k, true)?.into_keys().collect();
    Ok(ValueSetReport::build(k, &all, &odd))
}

/// `A(k)` by the literal sweep `{0} u {a_d^{+-1}(k) : d | M_k}`, with the
/// odd part from the odd divisors of `M_k`.
pub fn value_set_sweep(k: u64) -> Result<ValueSetReport> {
    if k == 0 {
        return Err(Error::ZeroArgument);
    }
    let m = special_moduli(k)?.m;
    let mut cache = GtCache::new(k);
    let mut all = BTreeSet::from([0]);
    let mut odd = BTreeSet::from([0]);
    sweep_divisors(k, &m, &mut cache, |dc| {
        all.insert(dc.plus);
        all.insert(dc.minus);
        if dc.is_odd(&m) {
            odd.insert(dc.plus);
            odd.insert(dc.minus);
        }
    })?;
    Ok(ValueSetReport::build(k, &all, &odd))
}

/// `C(k) = {c_n(k)}` from its own characterization
/// `{0} u {a_d^{-1}(k), a_{dq}^{-1}(k) : d | M_k}` with `q` the least prime
/// above `k`, each coefficient evaluated directly.
pub fn inverse_value_set(k: u64) -> Result<Vec<i64>> {
    let m = special_moduli(k)?.m;
    let q = FactoredNat::from_factors(vec![(next_prime(k), 1)])?;
    let mut set = BTreeSet::from([0]);
    m.for_each_exponents(|exps| {
        let d = m.divisor_from_exponents(exps);
        set.insert(coeff_gt_factored(&d, k, Sign::Minus));
        set.insert(coeff_gt_factored(&d.mul(&q), k, Sign::Minus));
    });
    Ok(set.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_k_values() {
        assert_eq!(value_set(1).unwrap().values, vec![-1, 0, 1]);
        let r7 = value_set(7).unwrap();
        assert_eq!(r7.a, 2);
        assert_eq!(r7.diff, vec![-2]);
        assert!(r7.symmetric);
    }

    #[test]
    fn fast_scan_matches_sweep() {
        for k in 1..=24 {
            assert_eq!(value_set(k).unwrap(), value_set_sweep(k).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn witnesses_are_genuine() {
        for k in [1u64, 2, 6, 7, 12] {
            for (v, w) in value_set_with_witnesses(k, false).unwrap() {
                assert!(!w.0.is_one());
                assert_eq!(crate::coeff::cyclotomic_coeff_factored(&w.0, k), v);
            }
            for (v, w) in value_set_with_witnesses(k, true).unwrap() {
                assert_eq!(w.0.exponent_of(2), 0);
                assert_eq!(crate::coeff::cyclotomic_coeff_factored(&w.0, k), v);
            }
        }
    }

    #[test]
    fn zero_witness() {
        let w = value_set_with_witnesses(1, false).unwrap();
        assert_eq!(w[&0].0.to_u64(), Some(4));
    }
}
