//! Anti-forcing numbers of perfect matchings.
//!
//! The crate has two independent routes to the same numbers. The exact
//! route works on any small graph: it enumerates perfect matchings and, for
//! each, solves a minimum hitting set over alternating cycles
//! ([`af_of_matching`]). The chain route handles even polygonal chains in
//! linear time from their face lengths and offsets ([`chain`]). The
//! [`verify`] module runs both and reports any disagreement.
//!
//! ```
//! use afkit::{chain, max_anti_forcing, min_anti_forcing, Caps};
//!
//! let spec = chain::parse_chain("6 6@1 6").unwrap();
//! assert_eq!(chain::spectrum_chain(&spec).values, vec![1, 2, 3]);
//!
//! let g = chain::realize(&spec).graph;
//! assert_eq!(min_anti_forcing(&g, &Caps::default()).unwrap().0, 1);
//! assert_eq!(max_anti_forcing(&g, &Caps::default()).unwrap().0, 3);
//! ```

pub mod chain;
mod clique;
pub mod cycles;
pub mod ears;
pub mod error;
pub mod graph;
pub mod io;
pub mod matching;
pub mod resonance;
pub mod solver;
pub mod verify;

#[cfg(test)]
mod testing;

use serde::{Deserialize, Serialize};

pub use cycles::{enumerate_alternating_cycles, symmetric_difference, AltCycle};
pub use ears::{find_extremal_ear_decomposition, Ear, EarDecomposition};
pub use error::{Error, Result};
pub use graph::{Color, EdgeId, Graph, VertexId};
pub use matching::{
    count_perfect_matchings_upto, enumerate_perfect_matchings, has_perfect_matching, is_allowed_edge,
    is_elementary, normal_components, ComponentReport, Matching,
};
pub use resonance::{
    common_path_length, has_antiforcing_edge_characterization, has_forcing_edge_characterization,
    resonant_faces, z_connected, z_graph, Face, FaceSet, ZGraph,
};
pub use solver::{
    af_additivity_check, af_by_components, af_of_matching, anti_forcing_edges, c_prime, forcing_edges,
    is_extremal, max_anti_forcing, min_anti_forcing, per_matching_af, spectrum_exact, spectrum_from, AfResult,
    CompatibleSet, SpectrumResult,
};

pub const DEFAULT_CYCLE_CAP: usize = 100_000;
pub const DEFAULT_PM_CAP: usize = 1_000_000;

/// Limits on the exponential enumerations. Exceeding one is an error,
/// never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Alternating cycles per matching; also bounds the ear search states
    /// and chain witness combinations.
    pub cycle_cap: usize,
    /// Perfect matchings per graph.
    pub pm_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { cycle_cap: DEFAULT_CYCLE_CAP, pm_cap: DEFAULT_PM_CAP }
    }
}
