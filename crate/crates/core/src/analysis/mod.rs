//! Distance machinery for turbo codes: circular distance, π-weight chains,
//! M-cycling counts, the statistic `Z`, and minimum-distance searches.

mod chain;
mod cycling;
mod distance;
mod witness_chain;

pub use crate::rsc::trellis_weight;
pub use chain::{build_chain, circular_distance, m_cycles_at, residue_magnitude, residue_norm, Chain};
pub use cycling::{
    count_m_cycling_pairs, enumeration_bound, step_vectors, z_statistics, CyclingCount, ZStatistics, MAX_CYCLING_M,
};
pub use distance::{
    min_distance_exhaustive, min_distance_low_weight, BoundType, DistanceReport, Method, MAX_EXHAUSTIVE_LEN,
};
pub use witness_chain::chain_from_input;
