use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// A partition `(k_1^{n_1} ... k_s^{n_s})` with distinct parts `k_i`,
/// ordered by descending multiplicity, then descending part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PartitionSig {
    /// `(part, multiplicity)` pairs in canonical order.
    pub parts: Vec<(u64, u32)>,
    /// Number of distinct parts.
    pub s: usize,
    /// Number of parts with multiplicity at least 2.
    pub t: usize,
    /// Least common multiple of the parts.
    pub lcm: u64,
    /// Greatest common divisor of the parts.
    pub gcd: u64,
    /// The integer being partitioned.
    pub total: u64,
}

impl PartitionSig {
    /// Builds from `(part, multiplicity)` pairs in any order; parts must be
    /// distinct and positive, multiplicities positive.
    pub fn from_multiplicities(pairs: &[(u64, u32)]) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidArgument("empty partition".into()));
        }
        let mut parts = pairs.to_vec();
        if parts.iter().any(|&(k, m)| k == 0 || m == 0) {
            return Err(Error::InvalidArgument("parts and multiplicities must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.1.cmp(&a.1).then(b.0.cmp(&a.0)));
        let mut values: Vec<u64> = parts.iter().map(|&(k, _)| k).collect();
        values.sort_unstable();
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("parts must be distinct".into()));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Builds from a multiset of parts, e.g. `[2, 1, 1]`.
    pub fn from_parts(parts: &[u64]) -> Result<Self> {
        let mut sorted = parts.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut pairs: Vec<(u64, u32)> = Vec::new();
        for k in sorted {
            match pairs.last_mut() {
                Some((v, m)) if *v == k => *m += 1,
                _ => pairs.push((k, 1)),
            }
        }
        Self::from_multiplicities(&pairs)
    }

    /// `parts` already canonical.
    pub(crate) fn from_sorted(parts: Vec<(u64, u32)>) -> Self {
        let s = parts.len();
        let t = parts.iter().filter(|&&(_, m)| m >= 2).count();
        let lcm = parts.iter().fold(1u64, |acc, &(k, _)| acc.lcm(&k));
        let gcd = parts.iter().fold(0u64, |acc, &(k, _)| acc.gcd(&k));
        let total = parts.iter().map(|&(k, m)| k * m as u64).sum();
        PartitionSig {
            parts,
            s,
            t,
            lcm,
            gcd,
            total,
        }
    }

    /// Largest multiplicity `n_{k_1}`.
    pub fn top_multiplicity(&self) -> u32 {
        self.parts[0].1
    }

    /// The parts as a non-increasing list.
    pub fn to_parts(&self) -> Vec<u64> {
        let mut out: Vec<u64> = self
            .parts
            .iter()
            .flat_map(|&(k, m)| std::iter::repeat(k).take(m as usize))
            .collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

impl fmt::Display for PartitionSig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, (k, m)) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{k}^{m}")?;
        }
        write!(f, ")")
    }
}
