//! Graph spectra, representability, and isospectral tree search.

mod graph;
mod represent;
mod trees;

pub use graph::{
    coalescence_poly, deletion_recurrence, derivative_identity, glue_graphs, graph_char_poly,
    Graph,
};
pub(crate) use represent::{largest_representing_root, rational_to_f64, roots_outside_interval};
pub use represent::{
    acampo_check, represent, roots_location, roots_real_check, star_transform, AcampoReport,
    RootsLocation,
};
pub use trees::{canonical_tree_code, find_isospectral_mate, free_trees};
