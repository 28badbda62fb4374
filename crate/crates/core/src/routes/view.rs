use crate::graph::{Color, ColoredBigraph, Side, VertexRef};
use crate::vertex_set::VertexSet;

/// An undirected loopless graph on at most 64 vertices, adjacency as bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraphView {
    adj: Vec<u64>,
}

impl SimpleGraphView {
    pub fn new(n: usize) -> Self {
        assert!(n <= 64, "SimpleGraphView supports at most 64 vertices");
        SimpleGraphView { adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            return;
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn all_mask(&self) -> u64 {
        if self.adj.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.adj.len()) - 1
        }
    }

    /// Vertices reachable from `start` inside `within` (which must contain `start`).
    pub fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & within & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen
    }

    /// Connected components as vertex masks, ordered by smallest member.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.all_mask();
        let mut out = Vec::new();
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            let comp = self.reach(v, self.all_mask());
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// The subgraph induced on `keep`, relabeled `0..popcount(keep)` in
    /// increasing order; also returns the old index of each new vertex.
    pub fn induced(&self, keep: u64) -> (SimpleGraphView, Vec<usize>) {
        let old: Vec<usize> = mask_iter(keep).collect();
        let mut pos = [usize::MAX; 64];
        for (i, &v) in old.iter().enumerate() {
            pos[v] = i;
        }
        let mut sub = SimpleGraphView::new(old.len());
        for (i, &v) in old.iter().enumerate() {
            for u in mask_iter(self.adj[v] & keep) {
                sub.adj[i] |= 1 << pos[u];
            }
        }
        (sub, old)
    }

    /// Whether `seq` is a path (`closed = false`) or a cycle (`closed = true`)
    /// on distinct vertices.
    pub fn is_walk_valid(&self, seq: &[usize], closed: bool) -> bool {
        let mut seen = 0u64;
        for &v in seq {
            if v >= self.adj.len() || seen >> v & 1 == 1 {
                return false;
            }
            seen |= 1 << v;
        }
        let linked = seq.windows(2).all(|w| self.has_edge(w[0], w[1]));
        if !closed {
            return linked;
        }
        seq.len() >= 3 && linked && self.has_edge(seq[0], seq[seq.len() - 1])
    }
}

pub(crate) fn mask_iter(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// A bipartite view: vertices `0..left` form one part, `left..` the other.
#[derive(Debug, Clone)]
pub struct BipartiteView {
    pub graph: SimpleGraphView,
    pub left: usize,
}

impl BipartiteView {
    pub fn right(&self) -> usize {
        self.graph.vertex_count() - self.left
    }

    pub fn is_balanced(&self) -> bool {
        self.left == self.right()
    }

    /// Builds a view from left/right sizes and `(left_index, right_index)` edges.
    pub fn from_edges(left: usize, right: usize, edges: &[(usize, usize)]) -> Self {
        let mut graph = SimpleGraphView::new(left + right);
        for &(u, v) in edges {
            graph.add_edge(u, left + v);
        }
        BipartiteView { graph, left }
    }
}

/// `[xs, ys]_c` of a colored bigraph as a bipartite view, with the vertex each
/// view index stands for (`X` vertices first).
#[derive(Debug, Clone)]
pub struct ColorBlock {
    pub view: BipartiteView,
    pub labels: Vec<VertexRef>,
}

impl ColorBlock {
    pub fn new(g: &ColoredBigraph, c: Color, xs: VertexSet, ys: VertexSet) -> Self {
        let labels: Vec<VertexRef> = xs
            .iter()
            .map(VertexRef::x)
            .chain(ys.iter().map(VertexRef::y))
            .collect();
        let left = xs.len();
        let mut graph = SimpleGraphView::new(labels.len());
        for (i, x) in xs.iter().enumerate() {
            for (j, y) in ys.iter().enumerate() {
                if g.has_edge(x, y, c) {
                    graph.add_edge(i, left + j);
                }
            }
        }
        ColorBlock {
            view: BipartiteView { graph, left },
            labels,
        }
    }

    /// The whole `c`-colored subgraph.
    pub fn whole(g: &ColoredBigraph, c: Color) -> Self {
        Self::new(g, c, g.full_side(), g.full_side())
    }

    pub fn index_of(&self, v: VertexRef) -> Option<usize> {
        self.labels.iter().position(|&l| l == v)
    }

    pub fn translate(&self, seq: &[usize]) -> Vec<VertexRef> {
        seq.iter().map(|&i| self.labels[i]).collect()
    }

    /// Splits a view-vertex mask back into `(X-set, Y-set)`.
    pub fn split_mask(&self, mask: u64) -> (VertexSet, VertexSet) {
        let mut xs = VertexSet::EMPTY;
        let mut ys = VertexSet::EMPTY;
        for i in mask_iter(mask) {
            let v = self.labels[i];
            match v.side {
                Side::X => xs.insert(v.index),
                Side::Y => ys.insert(v.index),
            }
        }
        (xs, ys)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_and_induced() {
        let g = SimpleGraphView::from_edges(5, &[(0, 1), (1, 2), (3, 4)]);
        assert_eq!(g.components(), vec![0b00111, 0b11000]);
        let (sub, old) = g.induced(0b10110);
        assert_eq!(old, vec![1, 2, 4]);
        assert!(sub.has_edge(0, 1));
        assert_eq!(sub.edge_count(), 1);
    }

    #[test]
    fn walk_validation() {
        let c4 = SimpleGraphView::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(c4.is_walk_valid(&[0, 1, 2, 3], true));
        assert!(!c4.is_walk_valid(&[0, 1, 2, 0], false));
        assert!(!c4.is_walk_valid(&[0, 2], false));
    }

    #[test]
    fn color_block_labels() {
        let g = ColoredBigraph::build(3, &[(0, 2), (2, 2)], &[(1, 1)]).unwrap();
        let xs: VertexSet = [0, 2].into_iter().collect();
        let ys: VertexSet = [2].into_iter().collect();
        let block = ColorBlock::new(&g, Color::Red, xs, ys);
        assert_eq!(block.view.left, 2);
        assert_eq!(
            block.labels,
            vec![VertexRef::x(0), VertexRef::x(2), VertexRef::y(2)]
        );
        assert_eq!(block.view.graph.edge_count(), 2);
        assert_eq!(
            block.split_mask(0b101),
            (VertexSet::singleton(0), VertexSet::singleton(2))
        );
    }
}
