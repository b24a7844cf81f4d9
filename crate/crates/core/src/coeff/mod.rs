//! Coefficients `a_n^eps(k)` of `prod_{d|n} (1 - x^d)^{eps mu(n/d)}`.
//!
//! For `n > 1` the sign `+1` gives the coefficients of `Phi_n(x)` and the sign
//! `-1` those of `1 / Phi_n(x)`. For `n = 1` the product is `(1 - x)^eps`, so
//! `a_1^1` is the negated cyclotomic coefficient of `Phi_1 = x - 1`.

mod agreement;
mod gt;
mod identities;
mod naive;
mod types;

pub use agreement::{engine_agreement, AgreementReport, Disagreement};
pub use gt::{coeff_gt, coeff_gt_factored, gt_series, GtCache};
pub(crate) use gt::coeff_gt_factors;
pub use identities::{
    closed_form_small_k, cyclotomic_coeff, cyclotomic_coeff_factored, doubled_parts, even_odd_parts, inverse_cyclotomic_coeff,
    log_derivative_recursion,
};
pub use naive::coeff_naive;
pub use types::{CoeffQuery, CoeffSeries, Engine, Sign};

use crate::error::Result;

/// `a_n^eps(k)` through the chosen engine.
pub fn coeff(q: CoeffQuery, engine: Engine) -> Result<i64> {
    Ok(match engine {
        Engine::Naive => coeff_naive(q.n, q.eps, q.k as usize)?.values[q.k as usize],
        Engine::Gt => coeff_gt(q),
        Engine::Partition => crate::partitions::coeff_via_partitions(q.n, q.k, q.eps)?,
    })
}

/// Divisors `d` of `n` with `mu(n/d) != 0`, paired with `mu(n/d)`, ascending in `d`.
pub(crate) fn moebius_support(factors: &[(u64, u32)]) -> Vec<(u64, i64)> {
    let n: u64 = factors.iter().map(|&(p, e)| p.pow(e)).product();
    let w = factors.len();
    let mut out = Vec::with_capacity(1 << w);
    for mask in 0u32..(1u32 << w) {
        let mut e = 1u64;
        for (i, &(p, _)) in factors.iter().enumerate() {
            if mask >> i & 1 == 1 {
                e *= p;
            }
        }
        let mu = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        out.push((n / e, mu));
    }
    out.sort_unstable();
    out
}
