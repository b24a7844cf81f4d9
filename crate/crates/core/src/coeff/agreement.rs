//! Cross-checking the three coefficient engines over a box of `(n, k, eps)`.

use rayon::prelude::*;
use serde::Serialize;

use super::{coeff_gt, coeff_naive, CoeffQuery, Sign};
use crate::error::{Error, Result};
use crate::partitions::coeff_series_via_partitions;

/// A triple on which the engines returned different values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub n: u64,
    pub k: u64,
    pub eps: Sign,
    pub naive: i64,
    pub gt: i64,
    pub partition: i64,
}

/// Summary of an engine comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AgreementReport {
    pub n_max: u64,
    pub k_max: u64,
    /// Number of `(n, k, eps)` triples compared.
    pub compared: u64,
    pub disagreements: Vec<Disagreement>,
}

/// Compares the naive product, the recursion and the partition sum for
/// every `1 <= n <= n_max`, `0 <= k <= k_max` and both signs.
pub fn engine_agreement(n_max: u64, k_max: u64) -> Result<AgreementReport> {
    if n_max == 0 {
        return Err(Error::ZeroArgument);
    }
    let per_n = |n: u64| -> Result<Vec<Disagreement>> {
        let mut out = Vec::new();
        for eps in Sign::BOTH {
            let naive = coeff_naive(n, eps, k_max as usize)?.values;
            let part = coeff_series_via_partitions(n, eps, k_max)?;
            for k in 0..=k_max {
                let gt = coeff_gt(CoeffQuery::new(n, k, eps)?);
                let (a, c) = (naive[k as usize], part[k as usize]);
                if a != gt || gt != c {
                    out.push(Disagreement { n, k, eps, naive: a, gt, partition: c });
                }
            }
        }
        Ok(out)
    };
    let lists: Vec<Vec<Disagreement>> = (1..=n_max)
        .into_par_iter()
        .map(per_n)
        .collect::<Result<_>>()?;
    Ok(AgreementReport {
        n_max,
        k_max,
        compared: n_max * (k_max + 1) * 2,
        disagreements: lists.into_iter().flatten().collect(),
    })
}
