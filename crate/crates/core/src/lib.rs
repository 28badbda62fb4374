//! Monochromatic paths, cycles and connected matchings in 2-multicolored
//! balanced bipartite graphs.
//!
//! Ratio-valued parameters are generic over [`scalar::Scalar`]; the aliases
//! below fix them to exact rationals, which is what the checks are meant for.

pub mod extremal;
pub mod families;
pub mod graph;
pub mod mono;
pub mod routes;
pub mod scalar;
pub mod vertex_set;

pub use graph::{Color, ColoredBigraph, GraphError, Side, VertexRef};
pub use routes::{CycleResult, PathResult};
pub use scalar::Scalar;
pub use vertex_set::VertexSet;

/// Exact rational scalar used by default throughout.
pub type Rational = num_rational::Ratio<i64>;

pub type Witness = extremal::ExtremalWitness<Rational>;
pub type Params = extremal::RouteParams<Rational>;
pub type Stability = mono::StabilityOutcome<Rational>;
