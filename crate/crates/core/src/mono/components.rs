use serde::Serialize;

use super::MonoError;
use crate::graph::{Color, ColoredBigraph, VertexRef};
use crate::vertex_set::VertexSet;

/// A connected component of the `color` subgraph. `id` is its position in
/// [`mono_components`] order (by lowest `X` vertex, then lowest `Y` vertex).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MonoComponent {
    pub color: Color,
    pub xs: VertexSet,
    pub ys: VertexSet,
    pub id: usize,
}

impl MonoComponent {
    pub fn min_side(&self) -> usize {
        self.xs.len().min(self.ys.len())
    }

    pub fn total(&self) -> usize {
        self.xs.len() + self.ys.len()
    }

    /// The smallest vertex, `X` before `Y`.
    pub fn smallest_vertex(&self) -> VertexRef {
        match self.xs.first() {
            Some(x) => VertexRef::x(x),
            None => VertexRef::y(self.ys.first().expect("components are nonempty")),
        }
    }

    pub fn contains(&self, v: VertexRef) -> bool {
        match v.side {
            crate::graph::Side::X => self.xs.contains(v.index),
            crate::graph::Side::Y => self.ys.contains(v.index),
        }
    }
}

/// Closure of `(xs, ys)` under `c`-adjacency.
pub(crate) fn close(
    g: &ColoredBigraph,
    c: Color,
    mut xs: VertexSet,
    mut ys: VertexSet,
) -> (VertexSet, VertexSet) {
    let (ax, ay) = (g.x_adjacency(c), g.y_adjacency(c));
    loop {
        let nys = xs.iter().fold(ys, |acc, x| acc.union(ax[x]));
        let nxs = nys.iter().fold(xs, |acc, y| acc.union(ay[y]));
        if nxs == xs && nys == ys {
            return (xs, ys);
        }
        xs = nxs;
        ys = nys;
    }
}

/// Components of the `c` subgraph with at least one edge; isolated vertices
/// are left out.
pub fn mono_components(g: &ColoredBigraph, c: Color) -> Vec<MonoComponent> {
    let mut out = Vec::new();
    let (mut seen_x, mut seen_y) = (VertexSet::EMPTY, VertexSet::EMPTY);
    let (ax, ay) = (g.x_adjacency(c), g.y_adjacency(c));
    for (x, nx) in ax.iter().enumerate() {
        if seen_x.contains(x) || nx.is_empty() {
            continue;
        }
        let (xs, ys) = close(g, c, VertexSet::singleton(x), VertexSet::EMPTY);
        seen_x = seen_x.union(xs);
        seen_y = seen_y.union(ys);
        out.push(MonoComponent {
            color: c,
            xs,
            ys,
            id: out.len(),
        });
    }
    // every Y vertex with a c-edge has a neighbor in X, so it is already seen
    debug_assert!((0..g.n()).all(|y| ay[y].is_empty() || seen_y.contains(y)));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DoubleStar {
    pub x: usize,
    pub y: usize,
    pub color: Color,
    /// `d_c(x) + d_c(y)`, the number of vertices of the double star.
    pub size: usize,
}

/// A `c`-edge `xy` maximizing `d_c(x) + d_c(y)`; the lowest such edge in
/// `(x, y)` order.
pub fn large_double_star(g: &ColoredBigraph, c: Color) -> Result<DoubleStar, MonoError> {
    let (ax, ay) = (g.x_adjacency(c), g.y_adjacency(c));
    let mut best: Option<DoubleStar> = None;
    for (x, y) in g.edges(c) {
        let size = ax[x].len() + ay[y].len();
        if best.is_none_or(|b| size > b.size) {
            best = Some(DoubleStar {
                x,
                y,
                color: c,
                size,
            });
        }
    }
    best.ok_or(MonoError::NoEdges(c))
}

/// Over both colors, the component maximizing `min(|xs|, |ys|)`, then the
/// total size, then preferring the smaller smallest vertex (red first on a
/// full tie).
pub fn best_balanced_component(g: &ColoredBigraph) -> Result<MonoComponent, MonoError> {
    Color::BOTH
        .into_iter()
        .flat_map(|c| mono_components(g, c))
        .min_by_key(|h| {
            (
                std::cmp::Reverse(h.min_side()),
                std::cmp::Reverse(h.total()),
                h.smallest_vertex(),
                h.color,
            )
        })
        .ok_or(MonoError::Edgeless)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_large_deg, gen_small_deg, small_deg_parts};

    #[test]
    fn small_deg_red_components() {
        let (g, _) = gen_small_deg(6, 2).unwrap();
        let ([x1, x2, x3], [y1, y2, y3]) = small_deg_parts(6, 2);
        let comps = mono_components(&g, Color::Red);
        let got: Vec<_> = comps.iter().map(|h| (h.xs, h.ys)).collect();
        assert_eq!(got, vec![(x1, y3), (x2, y1), (x3, y2)]);
        assert_eq!(comps[2].id, 2);
    }

    #[test]
    fn single_color_k22() {
        let g = ColoredBigraph::from_fn(2, |_, _| (true, false)).unwrap();
        assert!(mono_components(&g, Color::Blue).is_empty());
        let red = mono_components(&g, Color::Red);
        assert_eq!(red.len(), 1);
        assert_eq!(red[0].total(), 4);
    }

    #[test]
    fn double_stars() {
        let k33 = ColoredBigraph::from_fn(3, |_, _| (true, false)).unwrap();
        assert_eq!(large_double_star(&k33, Color::Red).unwrap().size, 6);
        let star = ColoredBigraph::from_fn(3, |x, _| (x == 0, false)).unwrap();
        assert_eq!(large_double_star(&star, Color::Red).unwrap().size, 4);
        let (g, _) = gen_large_deg(4).unwrap();
        assert_eq!(large_double_star(&g, Color::Blue).unwrap().size, 4);
        assert_eq!(
            large_double_star(&star, Color::Blue),
            Err(MonoError::NoEdges(Color::Blue))
        );
    }

    #[test]
    fn balanced_component_examples() {
        let (g, _) = gen_large_deg(4).unwrap();
        assert_eq!(best_balanced_component(&g).unwrap().min_side(), 2);
        let (g, _) = gen_small_deg(6, 2).unwrap();
        assert!(best_balanced_component(&g).unwrap().min_side() >= 1);
        let one = ColoredBigraph::from_fn(1, |_, _| (true, false)).unwrap();
        assert_eq!(best_balanced_component(&one).unwrap().min_side(), 1);
        let empty = ColoredBigraph::empty(3).unwrap();
        assert_eq!(best_balanced_component(&empty), Err(MonoError::Edgeless));
    }
}
