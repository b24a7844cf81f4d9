//! Integer partitions and the partition-indexed sign weights, the
//! partition-sum coefficient engine, and closed-form divisor sums.

mod enumerate;
mod sig;
mod sums;

pub use enumerate::{enumerate_partitions, Partitions};
pub use sig::PartitionSig;
pub use sums::{
    coeff_series_via_partitions,
    binom_sign, blubber_brute, blubber_sum, coeff_via_partitions, eps1, eps2, eps2_from_binomials,
    omi_brute, omi_divisor_sum,
};
