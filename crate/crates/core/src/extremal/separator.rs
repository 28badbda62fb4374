//! Vertex-disjoint red connections between two pairs, by unit vertex
//! capacity max-flow, and the red-free split that a small separator leaves.

use std::collections::VecDeque;

use serde::Serialize;

use super::{BiConnectedPair, ExtremalError};
use crate::graph::{Color, ColoredBigraph, Side, VertexRef};
use crate::vertex_set::VertexSet;

/// `X̂_1, X̂_2` partition `X` and `Ŷ_1, Ŷ_2` partition `Y` (minus the
/// separator); no red edge joins `X̂_1 ∪ Ŷ_2` to `X̂_2 ∪ Ŷ_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HatPartition {
    pub x1: VertexSet,
    pub x2: VertexSet,
    pub y1: VertexSet,
    pub y2: VertexSet,
}

impl HatPartition {
    /// Exchanges the roles of the indices 1 and 2.
    pub fn flipped(&self) -> Self {
        HatPartition {
            x1: self.x2,
            x2: self.x1,
            y1: self.y2,
            y2: self.y1,
        }
    }

    /// The partition of the graph with `X` and `Y` exchanged: side one
    /// (`X̂_1 ∪ Ŷ_2`) stays side one.
    pub fn transposed(&self) -> Self {
        HatPartition {
            x1: self.y2,
            y2: self.x1,
            x2: self.y1,
            y1: self.x2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeparatorOutcome {
    /// Two vertex-disjoint red paths from the first pair to the second.
    TwoPaths([Vec<VertexRef>; 2]),
    /// At most one vertex `w` meets every red path between the pairs.
    Separated {
        w: Option<VertexRef>,
        hats: HatPartition,
    },
}

const INF: i32 = i32::MAX / 4;

struct Flow {
    cap: Vec<Vec<i32>>,
    orig: Vec<Vec<i32>>,
}

impl Flow {
    fn new(size: usize) -> Self {
        Flow {
            cap: vec![vec![0; size]; size],
            orig: vec![vec![0; size]; size],
        }
    }

    fn add(&mut self, u: usize, v: usize, c: i32) {
        self.cap[u][v] += c;
        self.orig[u][v] += c;
    }

    /// Shortest augmenting path, lowest node first on ties; `None` if `t`
    /// is unreachable. Also returns the residual-reachable set.
    fn bfs(&self, s: usize, t: usize) -> (Option<Vec<usize>>, Vec<bool>) {
        let size = self.cap.len();
        let mut prev = vec![usize::MAX; size];
        let mut seen = vec![false; size];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..size {
                if !seen[v] && self.cap[u][v] > 0 {
                    seen[v] = true;
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if !seen[t] {
            return (None, seen);
        }
        let mut path = vec![t];
        while *path.last().unwrap() != s {
            path.push(prev[*path.last().unwrap()]);
        }
        path.reverse();
        (Some(path), seen)
    }

    fn push(&mut self, path: &[usize]) {
        for w in path.windows(2) {
            self.cap[w[0]][w[1]] -= 1;
            self.cap[w[1]][w[0]] += 1;
        }
    }

    fn carries(&self, u: usize, v: usize) -> bool {
        self.orig[u][v] > 0 && self.cap[u][v] < self.orig[u][v]
    }
}

fn pair_vertices(p: &BiConnectedPair) -> impl Iterator<Item = VertexRef> + '_ {
    p.xs.iter()
        .map(VertexRef::x)
        .chain(p.ys.iter().map(VertexRef::y))
}

/// Red closure of `(xs, ys)` in `g` with `w` deleted.
fn red_closure_avoiding(
    g: &ColoredBigraph,
    mut xs: VertexSet,
    mut ys: VertexSet,
    w: Option<VertexRef>,
) -> (VertexSet, VertexSet) {
    let (bad_x, bad_y) = match w {
        Some(v) if v.side == Side::X => (VertexSet::singleton(v.index), VertexSet::EMPTY),
        Some(v) => (VertexSet::EMPTY, VertexSet::singleton(v.index)),
        None => (VertexSet::EMPTY, VertexSet::EMPTY),
    };
    xs = xs.difference(bad_x);
    ys = ys.difference(bad_y);
    let (ax, ay) = (g.x_adjacency(Color::Red), g.y_adjacency(Color::Red));
    loop {
        let nys = xs
            .iter()
            .fold(ys, |acc, x| acc.union(ax[x]))
            .difference(bad_y);
        let nxs = nys
            .iter()
            .fold(xs, |acc, y| acc.union(ay[y]))
            .difference(bad_x);
        if nxs == xs && nys == ys {
            return (xs, ys);
        }
        xs = nxs;
        ys = nys;
    }
}

/// Either two vertex-disjoint red paths from `first` to `second`, or a red
/// separator of at most one vertex together with the split it induces:
/// `X̂_1 ∪ Ŷ_2` is the red closure of `first` once the separator is deleted.
pub fn separator_partition(
    g: &ColoredBigraph,
    first: &BiConnectedPair,
    second: &BiConnectedPair,
) -> Result<SeparatorOutcome, ExtremalError> {
    if !first.xs.is_disjoint(second.xs) || !first.ys.is_disjoint(second.ys) {
        return Err(ExtremalError::Precondition("the two pairs overlap".into()));
    }
    let n = g.n();
    let id = |v: VertexRef| match v.side {
        Side::X => v.index,
        Side::Y => n + v.index,
    };
    let vertex = |i: usize| {
        if i < n {
            VertexRef::x(i)
        } else {
            VertexRef::y(i - n)
        }
    };
    // vertex v: in-node 2v, out-node 2v + 1
    let (s, t) = (4 * n, 4 * n + 1);
    let mut f = Flow::new(4 * n + 2);
    for v in 0..2 * n {
        f.add(2 * v, 2 * v + 1, 1);
    }
    for (x, y) in g.edges(Color::Red) {
        let (a, b) = (x, n + y);
        f.add(2 * a + 1, 2 * b, INF);
        f.add(2 * b + 1, 2 * a, INF);
    }
    for v in pair_vertices(first) {
        f.add(s, 2 * id(v), INF);
    }
    for v in pair_vertices(second) {
        f.add(2 * id(v) + 1, t, INF);
    }
    let mut flow = 0;
    let reach = loop {
        let (path, reach) = f.bfs(s, t);
        match path {
            Some(p) if flow < 2 => {
                f.push(&p);
                flow += 1;
            }
            _ => break reach,
        }
    };
    if flow >= 2 {
        let mut paths: Vec<Vec<VertexRef>> = Vec::new();
        for start in 0..2 * n {
            if !f.carries(s, 2 * start) {
                continue;
            }
            let mut seq = vec![start];
            let mut cur = start;
            while !f.carries(2 * cur + 1, t) {
                cur = (0..2 * n)
                    .find(|&u| f.carries(2 * cur + 1, 2 * u))
                    .ok_or_else(|| ExtremalError::Bug("flow decomposition lost its path".into()))?;
                seq.push(cur);
            }
            paths.push(seq.into_iter().map(vertex).collect());
        }
        let [a, b]: [Vec<VertexRef>; 2] = paths.try_into().map_err(|_| {
            ExtremalError::Bug("flow of value 2 did not decompose into two paths".into())
        })?;
        return Ok(SeparatorOutcome::TwoPaths([a, b]));
    }
    let w = if flow == 0 {
        None
    } else {
        let cut: Vec<usize> = (0..2 * n)
            .filter(|&v| reach[2 * v] && !reach[2 * v + 1])
            .collect();
        if cut.len() != 1 {
            return Err(ExtremalError::Bug(format!(
                "a cut of value 1 crosses {} vertices",
                cut.len()
            )));
        }
        Some(vertex(cut[0]))
    };
    let (x1, y2) = red_closure_avoiding(g, first.xs, first.ys, w);
    let all = VertexSet::full(n);
    let (wx, wy) = match w {
        Some(v) if v.side == Side::X => (VertexSet::singleton(v.index), VertexSet::EMPTY),
        Some(v) => (VertexSet::EMPTY, VertexSet::singleton(v.index)),
        None => (VertexSet::EMPTY, VertexSet::EMPTY),
    };
    let hats = HatPartition {
        x1,
        y2,
        x2: all.difference(x1).difference(wx),
        y1: all.difference(y2).difference(wy),
    };
    let second_x = second.xs.difference(wx);
    let second_y = second.ys.difference(wy);
    if !second_x.is_subset(hats.x2) || !second_y.is_subset(hats.y1) {
        return Err(ExtremalError::Bug(
            "the separator leaves the pairs red-connected".into(),
        ));
    }
    Ok(SeparatorOutcome::Separated { w, hats })
}

/// Red edges between `X̂_1 ∪ Ŷ_2` and `X̂_2 ∪ Ŷ_1`.
pub fn red_edges_across(g: &ColoredBigraph, hats: &HatPartition) -> usize {
    g.color_edge_count(hats.x1, hats.y1, Color::Red)
        + g.color_edge_count(hats.x2, hats.y2, Color::Red)
}
