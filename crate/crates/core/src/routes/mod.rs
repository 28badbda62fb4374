//! Long monochromatic paths and cycles: exact oracles, Erdős–Gallai cycle
//! extraction, Berge's bi-connectedness criterion and Hamiltonian path search.

mod erdos_gallai;
mod exact;
mod hamilton;
pub(crate) mod search;
mod view;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Color, ColoredBigraph, VertexRef};

pub use erdos_gallai::erdos_gallai_cycle;
pub use exact::{
    longest_cycle_in, longest_mono_cycle_exact, longest_mono_path_exact, longest_path_in,
    DEFAULT_SEARCH_CAP, MAX_COMPONENT_VERTICES,
};
pub use hamilton::{berge_check, ham_path_between, hamiltonian_path};
pub use view::{BipartiteView, ColorBlock, SimpleGraphView};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RouteError {
    #[error("n = {n} exceeds the exact-search cap of {cap} vertices per side")]
    CapExceeded { n: usize, cap: usize },
    #[error("a component with {0} vertices is too large for the exact search")]
    ComponentTooLarge(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("endpoints must lie on opposite sides")]
    SideViolation,
}

/// A monochromatic path; `order` is its number of vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathResult {
    pub color: Color,
    pub vertices: Vec<VertexRef>,
    pub order: usize,
}

impl PathResult {
    pub fn new(color: Color, vertices: Vec<VertexRef>) -> Self {
        let order = vertices.len();
        PathResult {
            color,
            vertices,
            order,
        }
    }

    /// The path with no vertices (no edge of either color exists).
    pub fn none() -> Self {
        PathResult::new(Color::Red, Vec::new())
    }

    /// Distinct vertices, consecutive ones joined by `color` edges.
    pub fn validate(&self, g: &ColoredBigraph) -> bool {
        self.order == self.vertices.len()
            && distinct_in_range(g, &self.vertices)
            && self
                .vertices
                .windows(2)
                .all(|w| g.adjacent(w[0], w[1], self.color))
    }
}

/// A monochromatic cycle; `length` is its number of vertices (even, ≥ 4).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleResult {
    pub color: Color,
    pub vertices: Vec<VertexRef>,
    pub length: usize,
}

impl CycleResult {
    pub fn new(color: Color, vertices: Vec<VertexRef>) -> Self {
        let length = vertices.len();
        CycleResult {
            color,
            vertices,
            length,
        }
    }

    pub fn validate(&self, g: &ColoredBigraph) -> bool {
        let k = self.vertices.len();
        self.length == k
            && k >= 4
            && k.is_multiple_of(2)
            && distinct_in_range(g, &self.vertices)
            && (0..k).all(|i| g.adjacent(self.vertices[i], self.vertices[(i + 1) % k], self.color))
    }

    /// The Hamiltonian path of the cycle obtained by deleting one edge.
    pub fn to_path(&self) -> PathResult {
        PathResult::new(self.color, self.vertices.clone())
    }
}

fn distinct_in_range(g: &ColoredBigraph, vs: &[VertexRef]) -> bool {
    let mut seen = std::collections::HashSet::new();
    vs.iter().all(|v| v.index < g.n() && seen.insert(*v))
}
