//! Desk-scale enumerations: the spectral-radius-one polynomial counts,
//! the zero-relation census on linear quivers with its 12-vertex anomaly,
//! and the accessible-chain analysis.

mod census;
mod chains;
mod hurwitz;
mod radius_one;

pub use census::{
    census_with, chi_of_intervals, d12_derived_equivalent_list, d_type_poly,
    determine_convention, for_each_antichain_with_first, intervals, linear_relation_census,
    mirror_intervals, CensusConvention, Interval, RelationCensus,
};
pub use chains::{analyze_chain, ChainReport, ChainStep, ExtensionKind};
pub use hurwitz::{hurwitz_markov_scan, hurwitz_markov_solutions, mod3_residue_solutions};
pub use radius_one::{
    count_radius_one, count_radius_one_with_phi1_exponent, sample_radius_one, RadiusOneCounts,
};
