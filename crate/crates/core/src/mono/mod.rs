//! Monochromatic components, double stars, connected matchings with König
//! covers, and the matching-or-witness dichotomy.

mod bounds;
mod components;
mod matching;
mod stability;

use thiserror::Error;

pub use bounds::{component_bound, cycle_bound, matching_bound};
pub use components::{
    best_balanced_component, large_double_star, mono_components, DoubleStar, MonoComponent,
};
pub use matching::{
    best_connected_matching, max_connected_matching, max_matching, min_cover, min_cover_of,
    ConnectedMatching, VertexCover,
};
pub use stability::{matching_or_witness, StabilityOutcome};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MonoError {
    #[error("the graph has no edges")]
    Edgeless,
    #[error("the graph has no {0} edges")]
    NoEdges(crate::graph::Color),
    #[error("the component is not a {0} component of this graph")]
    StaleComponent(crate::graph::Color),
    #[error("delta = {0} lies outside [0, 1]")]
    DeltaOutOfRange(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("below the n0 regime: {0}")]
    BelowRegime(String),
    #[error("internal contradiction (implementation bug): {0}")]
    Bug(String),
}
