//! Smallest `k` at which a value occurs as a cyclotomic coefficient.

use serde::Serialize;

use super::valueset::{value_set_with_witnesses, Witness};
use crate::coeff::{cyclotomic_coeff_factored, Sign};
use crate::error::{Error, Result};
use crate::numtheory::{primes_up_to, FactoredNat};

/// Default scan ceiling for [`kmin`].
pub const DEFAULT_KMIN_CEILING: u64 = 120;

/// `k_min(v)` with an index `n` such that `a_n(k_min) = v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KminEntry {
    pub v: i64,
    pub k: u64,
    pub n: Witness,
}

/// Smallest `k >= 1` with `v` in `A(k)`, scanning up to `ceiling`.
pub fn kmin(v: i64, ceiling: u64) -> Result<KminEntry> {
    for k in 1..=ceiling {
        if let Some(n) = value_set_with_witnesses(k, false)?.remove(&v) {
            return Ok(KminEntry { v, k, n });
        }
    }
    Err(Error::NotFoundBelowCeiling { v, ceiling })
}

/// `k_min(v)` for every `v` in `lo..=hi` from one ascending scan; values not
/// reached by `ceiling` are reported as errors in place.
pub fn kmin_range(lo: i64, hi: i64, ceiling: u64) -> Result<Vec<Result<KminEntry>>> {
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty range {lo}..={hi}")));
    }
    let mut found: Vec<Option<KminEntry>> = vec![None; (hi - lo + 1) as usize];
    let mut missing = found.len();
    for k in 1..=ceiling {
        if missing == 0 {
            break;
        }
        for (v, n) in value_set_with_witnesses(k, false)?.range(lo..=hi) {
            let slot = &mut found[(v - lo) as usize];
            if slot.is_none() {
                *slot = Some(KminEntry { v: *v, k, n: n.clone() });
                missing -= 1;
            }
        }
    }
    Ok(found
        .into_iter()
        .zip(lo..=hi)
        .map(|(e, v)| e.ok_or(Error::NotFoundBelowCeiling { v, ceiling }))
        .collect())
}

/// Three consecutive odd primes `p1 < p2 < p3` with `p3 <= k < p1 + p2`,
/// and the coefficient `a_{p1 p2 p3}(k)`, which equals -2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinusTwo {
    pub k: u64,
    pub primes: [u64; 3],
    pub value: i64,
}

/// The prime-triple witness of `-2` in `A(k)` for `k >= 13`; the largest
/// admissible triple is returned.
pub fn minus_two_construction(k: u64) -> Result<MinusTwo> {
    if k < 13 {
        return Err(Error::InvalidArgument(format!("needs k >= 13, got {k}")));
    }
    let odd: Vec<u64> = primes_up_to(k).into_iter().filter(|&p| p > 2).collect();
    let triple = odd
        .windows(3)
        .rev()
        .find(|w| k < w[0] + w[1])
        .ok_or_else(|| Error::Inconsistent(format!("no admissible prime triple for k = {k}")))?;
    let n = FactoredNat::squarefree(triple);
    let value = cyclotomic_coeff_factored(&n, k);
    debug_assert_eq!(value, crate::coeff::coeff_gt_factored(&n, k, Sign::Plus));
    Ok(MinusTwo {
        k,
        primes: [triple[0], triple[1], triple[2]],
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_kmin() {
        assert_eq!(kmin(-2, 120).unwrap().k, 7);
        assert_eq!(kmin(1, 120).unwrap().k, 1);
        assert_eq!(kmin(0, 120).unwrap().k, 1);
        assert_eq!(kmin(3, 16), Err(Error::NotFoundBelowCeiling { v: 3, ceiling: 16 }));
    }

    #[test]
    fn range_matches_single_queries() {
        let r = kmin_range(-4, 4, 40).unwrap();
        for e in r {
            let e = e.unwrap();
            assert_eq!(kmin(e.v, 40).unwrap().k, e.k);
            assert_eq!(cyclotomic_coeff_factored(&e.n.0, e.k), e.v);
        }
    }

    #[test]
    fn minus_two() {
        for k in [13, 20, 100] {
            let m = minus_two_construction(k).unwrap();
            assert_eq!(m.value, -2, "k = {k}");
            assert!(m.primes[2] <= k && k < m.primes[0] + m.primes[1]);
        }
        assert!(minus_two_construction(12).is_err());
    }
}
