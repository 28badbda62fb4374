use serde::Serialize;

use super::components::{mono_components, MonoComponent};
use super::MonoError;
use crate::graph::{Color, ColoredBigraph};
use crate::vertex_set::VertexSet;

/// A matching whose edges all lie in one component of the `color` subgraph.
/// `component_id` is `None` only for the empty matching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectedMatching {
    pub color: Color,
    pub component_id: Option<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl ConnectedMatching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct VertexCover {
    pub sx: VertexSet,
    pub sy: VertexSet,
}

impl VertexCover {
    pub fn size(&self) -> usize {
        self.sx.len() + self.sy.len()
    }
}

struct Kuhn<'a> {
    adj: &'a [VertexSet],
    ys: VertexSet,
    mate_y: Vec<Option<usize>>,
}

impl Kuhn<'_> {
    fn augment(&mut self, x: usize, seen: &mut VertexSet) -> bool {
        for y in self.adj[x].intersection(self.ys).difference(*seen) {
            seen.insert(y);
            let free = match self.mate_y[y] {
                None => true,
                Some(x2) => self.augment(x2, seen),
            };
            if free {
                self.mate_y[y] = Some(x);
                return true;
            }
        }
        false
    }
}

fn matching_table(
    g: &ColoredBigraph,
    c: Color,
    xs: VertexSet,
    ys: VertexSet,
) -> Vec<Option<usize>> {
    let mut k = Kuhn {
        adj: g.x_adjacency(c),
        ys,
        mate_y: vec![None; g.n()],
    };
    for x in xs {
        let mut seen = VertexSet::EMPTY;
        k.augment(x, &mut seen);
    }
    k.mate_y
}

/// A maximum matching of the `c` edges of `[xs, ys]`, as `(x, y)` pairs
/// sorted by `x`.
pub fn max_matching(
    g: &ColoredBigraph,
    c: Color,
    xs: VertexSet,
    ys: VertexSet,
) -> Vec<(usize, usize)> {
    let mut edges: Vec<_> = matching_table(g, c, xs, ys)
        .into_iter()
        .enumerate()
        .filter_map(|(y, m)| m.map(|x| (x, y)))
        .collect();
    edges.sort_unstable();
    edges
}

/// A maximum matching and a minimum vertex cover of the `c` edges of
/// `[xs, ys]`; the cover comes from alternating reachability out of the
/// unmatched `xs` vertices.
pub fn min_cover_of(
    g: &ColoredBigraph,
    c: Color,
    xs: VertexSet,
    ys: VertexSet,
) -> (Vec<(usize, usize)>, VertexCover) {
    let mate_y = matching_table(g, c, xs, ys);
    let matched_x: VertexSet = mate_y.iter().flatten().copied().collect();
    let adj = g.x_adjacency(c);
    let mut zx = xs.difference(matched_x);
    let mut zy = VertexSet::EMPTY;
    let mut frontier = zx;
    while !frontier.is_empty() {
        let reached = frontier
            .iter()
            .fold(VertexSet::EMPTY, |acc, x| acc.union(adj[x]))
            .intersection(ys)
            .difference(zy);
        zy = zy.union(reached);
        frontier = reached
            .iter()
            .filter_map(|y| mate_y[y])
            .collect::<VertexSet>()
            .difference(zx);
        zx = zx.union(frontier);
    }
    let cover = VertexCover {
        sx: xs.difference(zx),
        sy: ys.intersection(zy),
    };
    let mut edges: Vec<_> = mate_y
        .into_iter()
        .enumerate()
        .filter_map(|(y, m)| m.map(|x| (x, y)))
        .collect();
    edges.sort_unstable();
    assert_eq!(cover.size(), edges.len(), "König equality failed");
    (edges, cover)
}

/// A minimum vertex cover of the component's color subgraph.
pub fn min_cover(g: &ColoredBigraph, comp: &MonoComponent) -> Result<VertexCover, MonoError> {
    let fresh = mono_components(g, comp.color)
        .iter()
        .any(|h| h.xs == comp.xs && h.ys == comp.ys);
    if !fresh {
        return Err(MonoError::StaleComponent(comp.color));
    }
    Ok(min_cover_of(g, comp.color, comp.xs, comp.ys).1)
}

/// Maximum connected matching in color `c`: a maximum matching inside each
/// `c` component, keeping the largest (lowest id on ties).
pub fn max_connected_matching(g: &ColoredBigraph, c: Color) -> ConnectedMatching {
    let mut best = ConnectedMatching {
        color: c,
        component_id: None,
        edges: Vec::new(),
    };
    for h in mono_components(g, c) {
        if h.min_side() <= best.size() {
            continue;
        }
        let edges = max_matching(g, c, h.xs, h.ys);
        if edges.len() > best.size() {
            best = ConnectedMatching {
                color: c,
                component_id: Some(h.id),
                edges,
            };
        }
    }
    best
}

/// The larger of the two colors' maximum connected matchings (red on ties).
pub fn best_connected_matching(g: &ColoredBigraph) -> ConnectedMatching {
    let red = max_connected_matching(g, Color::Red);
    let blue = max_connected_matching(g, Color::Blue);
    if blue.size() > red.size() {
        blue
    } else {
        red
    }
}
