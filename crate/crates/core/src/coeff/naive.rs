use super::{moebius_support, CoeffSeries, Sign};
use crate::error::{Error, Result};
use crate::numtheory::factorize;

/// Taylor coefficients `a_n^eps(0..=K)` by multiplying `(1 - x^d)` and
/// dividing by it (multiplication by the truncated geometric series) for
/// every `d | n` with `mu(n/d) != 0`.
pub fn coeff_naive(n: u64, eps: Sign, big_k: usize) -> Result<CoeffSeries> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let mut s = vec![0i64; big_k + 1];
    s[0] = 1;
    for (d, mu) in moebius_support(&factorize(n)) {
        let d = d as usize;
        if d > big_k {
            continue;
        }
        if mu * eps.to_i64() == 1 {
            for i in (d..=big_k).rev() {
                s[i] = s[i].checked_sub(s[i - d]).expect("coefficient overflow");
            }
        } else {
            for i in d..=big_k {
                s[i] = s[i].checked_add(s[i - d]).expect("coefficient overflow");
            }
        }
    }
    Ok(CoeffSeries { n, eps, values: s })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(coeff_naive(1, Sign::Plus, 1).unwrap().values, vec![1, -1]);
        assert_eq!(coeff_naive(1, Sign::Minus, 3).unwrap().values, vec![1, 1, 1, 1]);
        assert_eq!(coeff_naive(105, Sign::Plus, 7).unwrap().values[7], -2);
        assert_eq!(
            coeff_naive(6, Sign::Minus, 4).unwrap().values,
            vec![1, 1, 0, -1, -1]
        );
        assert_eq!(coeff_naive(6, Sign::Plus, 3).unwrap().values, vec![1, -1, 1, 0]);
    }
}
