//! Coefficients of cyclotomic polynomials and of their inverses: three
//! independent coefficient engines, partition-indexed formulas, and exact
//! value sets, densities and averages over all `n`.

pub mod coeff;
pub mod error;
pub mod numtheory;
pub mod partitions;
pub mod stats;
pub mod tables;

pub use error::{Error, Result};
pub use numtheory::{FactoredNat, IntPoly, Rat};
