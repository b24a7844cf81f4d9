//! Exact statistics of `a_n(k)` over all `n`: value sets, densities and
//! averages, together with empirical counterparts.

mod averages;
mod density;
mod empirical;
mod kmin;
mod sweep;
mod valueset;
mod verify;

pub use valueset::{
    inverse_value_set, value_set, value_set_sweep, value_set_with_witnesses, ValueSetReport,
    Witness,
};
pub use averages::{
    average_e, partition_contribution, squarefree_average_g, squarefree_average_g_partitions,
    twisted_average_f, twisted_averages, AveragesReport, Route,
};
pub use density::{density, density_via, DensityRoute, DensityTable};
pub use kmin::{kmin, kmin_range, minus_two_construction, KminEntry, MinusTwo, DEFAULT_KMIN_CEILING};
pub use empirical::{empirical_beta_average, empirical_stats, EmpiricalStats};
pub use verify::{verify_identities, IdentityCheck, IdentityReport, SeeSaw, PARTITION_ROUTE_KMAX};
