//! Exact arithmetic and elementary multiplicative number theory.

mod arith;
mod factored;
mod poly;
mod primes;
mod rat;

pub use arith::{
    euler_phi, moebius, moebius_ratio, partition_count, partition_counts, partition_gap, primorial,
    ramanujan_sum, ramanujan_sum_divisor, special_moduli, squarefree_kernel, SpecialModuli,
};
pub use factored::{Divisors, FactoredNat};
pub use poly::{cyclotomic_poly, IntPoly};
pub use primes::{
    cached_primes, factorize, factorize_with_spf, is_prime, next_prime, primes_up_to, sieve_primes,
    spf_table,
};
pub use rat::Rat;
