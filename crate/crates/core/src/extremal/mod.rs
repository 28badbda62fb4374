//! Extremal colorings: witness verification and search, the two lemmas on
//! Hamiltonian bi-connected pairs, and the routing pipeline that turns a
//! witness into a certified long monochromatic path and cycle.

mod lemmas;
mod route;
mod separator;
mod witness;

use thiserror::Error;

pub use lemmas::{
    big_part_prop, extract_ham_path, long_path_prop, BiConnectedPair, RouteParams, HAM_BUDGET,
};
pub use route::{
    extremal_route, extremal_route_with_state, RouteCertificate, RouteState, SEARCH_BUDGET,
};
pub use separator::{red_edges_across, separator_partition, HatPartition, SeparatorOutcome};

pub use witness::{
    find_witness, find_witness_rounded, verify_witness, verify_witness_rounded, witness_candidates,
    ExtremalWitness, WitnessCounts, WitnessError,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("below the n0 / constants regime: {0}")]
    BelowRegime(String),
    #[error("internal assertion failed (implementation bug): {0}")]
    Bug(String),
    #[error("witness invalid: {0}")]
    Witness(#[from] WitnessError),
}

impl ExtremalError {
    /// `precondition`, `below-regime` or `bug`; a malformed witness counts
    /// as a precondition failure.
    pub fn class(&self) -> &'static str {
        match self {
            ExtremalError::Precondition(_) | ExtremalError::Witness(_) => "precondition",
            ExtremalError::BelowRegime(_) => "below-regime",
            ExtremalError::Bug(_) => "bug",
        }
    }
}
