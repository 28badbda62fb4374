//! The balanced, red/blue multi-colored bipartite graph every other module
//! works on, together with its canonical text format.
//!
//! An edge may carry both colors. Queries on the underlying graph (degrees,
//! `δ(G)`, `|E(G)|`) count such an edge once; per-color queries count it once
//! in each color.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::vertex_set::{VertexSet, MAX_SIDE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub const BOTH: [Color; 2] = [Color::Red, Color::Blue];

    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// A vertex: its side and its index within that side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexRef {
    pub side: Side,
    pub index: usize,
}

impl VertexRef {
    pub fn x(index: usize) -> Self {
        VertexRef {
            side: Side::X,
            index,
        }
    }

    pub fn y(index: usize) -> Self {
        VertexRef {
            side: Side::Y,
            index,
        }
    }

    /// The same vertex seen from the graph with `X` and `Y` exchanged.
    pub fn transposed(self) -> Self {
        VertexRef {
            side: self.side.other(),
            index: self.index,
        }
    }
}

impl fmt::Display for VertexRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::X => write!(f, "x{}", self.index),
            Side::Y => write!(f, "y{}", self.index),
        }
    }
}

impl std::str::FromStr for VertexRef {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (side, rest) = match s.as_bytes().first() {
            Some(b'x') => (Side::X, &s[1..]),
            Some(b'y') => (Side::Y, &s[1..]),
            _ => return Err(format!("vertex `{s}` must start with `x` or `y`")),
        };
        let index = rest
            .parse::<usize>()
            .map_err(|_| format!("vertex `{s}` has a malformed index"))?;
        Ok(VertexRef { side, index })
    }
}

impl Serialize for VertexRef {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexRef {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A vertex subset tagged with the side it lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SidedSet {
    pub side: Side,
    pub set: VertexSet,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("a graph needs at least one vertex per side")]
    Empty,
    #[error("n = {0} exceeds the supported maximum of {MAX_SIDE} vertices per side")]
    TooLarge(usize),
    #[error("edge ({x}, {y}) has an index outside 0..{n}")]
    IndexOutOfRange { x: usize, y: usize, n: usize },
    #[error("restriction set lies on side {found:?}, expected the side opposite to the vertex ({expected:?})")]
    WrongSide { expected: Side, found: Side },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Balanced `X,Y`-bipartite graph on `2n` vertices with red and blue edge
/// sets `E_R`, `E_B` (not necessarily disjoint).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ColoredBigraph {
    n: usize,
    /// `adj[c][x]`: `c`-colored neighbors of `x` in `Y`.
    adj_x: [Vec<VertexSet>; 2],
    /// `adj[c][y]`: `c`-colored neighbors of `y` in `X`.
    adj_y: [Vec<VertexSet>; 2],
}

fn slot(c: Color) -> usize {
    match c {
        Color::Red => 0,
        Color::Blue => 1,
    }
}

impl ColoredBigraph {
    /// The edgeless graph on `n + n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_SIDE {
            return Err(GraphError::TooLarge(n));
        }
        let blank = vec![VertexSet::EMPTY; n];
        Ok(ColoredBigraph {
            n,
            adj_x: [blank.clone(), blank.clone()],
            adj_y: [blank.clone(), blank],
        })
    }

    /// Builds a graph from explicit colored edge lists. Duplicates are merged.
    pub fn build(
        n: usize,
        red_edges: &[(usize, usize)],
        blue_edges: &[(usize, usize)],
    ) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for (c, edges) in [(Color::Red, red_edges), (Color::Blue, blue_edges)] {
            for &(x, y) in edges {
                g.try_add_edge(x, y, c)?;
            }
        }
        Ok(g)
    }

    /// Builds a graph where `color_of(x, y)` decides the colors of each pair.
    pub fn from_fn(
        n: usize,
        mut color_of: impl FnMut(usize, usize) -> (bool, bool),
    ) -> Result<Self, GraphError> {
        let mut g = Self::empty(n)?;
        for x in 0..n {
            for y in 0..n {
                let (red, blue) = color_of(x, y);
                if red {
                    g.add_edge(x, y, Color::Red);
                }
                if blue {
                    g.add_edge(x, y, Color::Blue);
                }
            }
        }
        Ok(g)
    }

    pub fn try_add_edge(&mut self, x: usize, y: usize, c: Color) -> Result<(), GraphError> {
        if x >= self.n || y >= self.n {
            return Err(GraphError::IndexOutOfRange { x, y, n: self.n });
        }
        self.add_edge(x, y, c);
        Ok(())
    }

    /// Adds `xy` to color class `c`. Panics if an index is out of range.
    pub fn add_edge(&mut self, x: usize, y: usize, c: Color) {
        assert!(x < self.n && y < self.n, "edge ({x}, {y}) out of range");
        self.adj_x[slot(c)][x].insert(y);
        self.adj_y[slot(c)][y].insert(x);
    }

    pub fn remove_edge(&mut self, x: usize, y: usize, c: Color) {
        self.adj_x[slot(c)][x].remove(y);
        self.adj_y[slot(c)][y].remove(x);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full_side(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, x: usize, y: usize, c: Color) -> bool {
        x < self.n && self.adj_x[slot(c)][x].contains(y)
    }

    pub fn has_any_edge(&self, x: usize, y: usize) -> bool {
        self.has_edge(x, y, Color::Red) || self.has_edge(x, y, Color::Blue)
    }

    /// Whether `u` and `v` are joined by a `c`-colored edge (sides in either order).
    pub fn adjacent(&self, u: VertexRef, v: VertexRef, c: Color) -> bool {
        match (u.side, v.side) {
            (Side::X, Side::Y) => self.has_edge(u.index, v.index, c),
            (Side::Y, Side::X) => self.has_edge(v.index, u.index, c),
            _ => false,
        }
    }

    /// `N_c(v)`, a subset of the opposite side.
    pub fn neighbors(&self, v: VertexRef, c: Color) -> VertexSet {
        match v.side {
            Side::X => self.adj_x[slot(c)][v.index],
            Side::Y => self.adj_y[slot(c)][v.index],
        }
    }

    /// `N_R(v) ∪ N_B(v)`.
    pub fn neighbors_any(&self, v: VertexRef) -> VertexSet {
        self.neighbors(v, Color::Red)
            .union(self.neighbors(v, Color::Blue))
    }

    /// Per-`X`-vertex `c`-neighborhoods.
    pub fn x_adjacency(&self, c: Color) -> &[VertexSet] {
        &self.adj_x[slot(c)]
    }

    /// Per-`Y`-vertex `c`-neighborhoods.
    pub fn y_adjacency(&self, c: Color) -> &[VertexSet] {
        &self.adj_y[slot(c)]
    }

    pub fn degree(&self, v: VertexRef) -> usize {
        self.neighbors_any(v).len()
    }

    /// `δ(G)` of the underlying (uncolored) graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n)
            .flat_map(|i| [VertexRef::x(i), VertexRef::y(i)])
            .map(|v| self.degree(v))
            .min()
            .unwrap_or(0)
    }

    /// `d_c(v, S)`: `c`-neighbors of `v` inside `restrict` (the whole
    /// opposite side when `restrict` is `None`).
    pub fn color_degree(
        &self,
        v: VertexRef,
        c: Color,
        restrict: Option<SidedSet>,
    ) -> Result<usize, GraphError> {
        let nb = self.neighbors(v, c);
        match restrict {
            None => Ok(nb.len()),
            Some(r) if r.side == v.side.other() => Ok(nb.intersection(r.set).len()),
            Some(r) => Err(GraphError::WrongSide {
                expected: v.side.other(),
                found: r.side,
            }),
        }
    }

    /// `d_c(x, ys)` for an `X`-vertex.
    pub fn deg_x_into(&self, x: usize, c: Color, ys: VertexSet) -> usize {
        self.adj_x[slot(c)][x].intersection(ys).len()
    }

    /// `d_c(y, xs)` for a `Y`-vertex.
    pub fn deg_y_into(&self, y: usize, c: Color, xs: VertexSet) -> usize {
        self.adj_y[slot(c)][y].intersection(xs).len()
    }

    /// `e_c(xs, ys)`.
    pub fn color_edge_count(&self, xs: VertexSet, ys: VertexSet, c: Color) -> usize {
        xs.iter().map(|x| self.deg_x_into(x, c, ys)).sum()
    }

    /// `e_c(G)`.
    pub fn color_edges(&self, c: Color) -> usize {
        self.adj_x[slot(c)].iter().map(|s| s.len()).sum()
    }

    /// `|E(G)| = |E_R ∪ E_B|`.
    pub fn edge_count(&self) -> usize {
        (0..self.n)
            .map(|x| self.neighbors_any(VertexRef::x(x)).len())
            .sum()
    }

    /// All `c`-edges as `(x, y)` pairs in lexicographic order.
    pub fn edges(&self, c: Color) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj_x[slot(c)]
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |y| (x, y)))
    }

    pub fn is_complete(&self) -> bool {
        let full = self.full_side();
        (0..self.n).all(|x| self.neighbors_any(VertexRef::x(x)) == full)
    }

    /// The graph with the roles of `X` and `Y` exchanged.
    pub fn transposed(&self) -> Self {
        ColoredBigraph {
            n: self.n,
            adj_x: self.adj_y.clone(),
            adj_y: self.adj_x.clone(),
        }
    }

    /// The graph with red and blue exchanged.
    pub fn colors_swapped(&self) -> Self {
        let [rx, bx] = self.adj_x.clone();
        let [ry, by] = self.adj_y.clone();
        ColoredBigraph {
            n: self.n,
            adj_x: [bx, rx],
            adj_y: [by, ry],
        }
    }

    /// Relabels `x ↦ px[x]` and `y ↦ py[y]`.
    pub fn relabeled(&self, px: &[usize], py: &[usize]) -> Self {
        let mut g = ColoredBigraph::empty(self.n).expect("n already validated");
        for c in Color::BOTH {
            for (x, y) in self.edges(c) {
                g.add_edge(px[x], py[y], c);
            }
        }
        g
    }

    /// Canonical text form: `bigraph <n>` then one `R x y` / `B x y` line per
    /// colored edge, sorted by (color, x, y), LF-terminated.
    pub fn to_canonical(&self) -> String {
        let mut out = format!("bigraph {}\n", self.n);
        for c in Color::BOTH {
            for (x, y) in self.edges(c) {
                let _ = writeln!(out, "{} {} {}", c.letter(), x, y);
            }
        }
        out
    }

    /// Parses the canonical text form. Edge lines may appear in any order.
    pub fn parse_canonical(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            msg: "missing `bigraph <n>` header".into(),
        })?;
        let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["bigraph", n] => n.parse::<usize>().map_err(|_| GraphError::Parse {
                line: 1,
                msg: format!("bad vertex count `{n}`"),
            })?,
            _ => {
                return Err(GraphError::Parse {
                    line: 1,
                    msg: "expected `bigraph <n>`".into(),
                })
            }
        };
        let mut g = Self::empty(n)?;
        for (idx, line) in lines {
            let lineno = idx + 1;
            let parts: Vec<&str> = line.split_whitespace().collect();
            let bad = |msg: String| GraphError::Parse { line: lineno, msg };
            let [tag, x, y] = parts.as_slice() else {
                return Err(bad(format!("expected `R|B <x> <y>`, got `{line}`")));
            };
            let c = match *tag {
                "R" => Color::Red,
                "B" => Color::Blue,
                other => return Err(bad(format!("unknown color tag `{other}`"))),
            };
            let x: usize = x.parse().map_err(|_| bad(format!("bad index `{x}`")))?;
            let y: usize = y.parse().map_err(|_| bad(format!("bad index `{y}`")))?;
            g.try_add_edge(x, y, c).map_err(|e| bad(e.to_string()))?;
        }
        Ok(g)
    }
}

impl fmt::Debug for ColoredBigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ColoredBigraph(n = {})", self.n)?;
        for x in 0..self.n {
            let row: String = (0..self.n)
                .map(|y| {
                    match (
                        self.has_edge(x, y, Color::Red),
                        self.has_edge(x, y, Color::Blue),
                    ) {
                        (true, true) => '*',
                        (true, false) => 'R',
                        (false, true) => 'B',
                        (false, false) => '.',
                    }
                })
                .collect();
            writeln!(f, "  x{x:<3}{row}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize, c: Color) -> ColoredBigraph {
        ColoredBigraph::from_fn(n, |_, _| (c == Color::Red, c == Color::Blue)).unwrap()
    }

    #[test]
    fn build_examples() {
        let g = ColoredBigraph::build(2, &[], &[]).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.min_degree(), 0);

        let all: Vec<_> = (0..2).flat_map(|x| (0..2).map(move |y| (x, y))).collect();
        let g = ColoredBigraph::build(2, &all, &[]).unwrap();
        assert_eq!(g.min_degree(), 2);

        let g = ColoredBigraph::build(1, &[(0, 0)], &[(0, 0)]).unwrap();
        assert_eq!(g.color_edges(Color::Red), 1);
        assert_eq!(g.color_edges(Color::Blue), 1);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn build_errors() {
        assert_eq!(ColoredBigraph::build(0, &[], &[]), Err(GraphError::Empty));
        assert!(matches!(
            ColoredBigraph::build(2, &[(0, 2)], &[]),
            Err(GraphError::IndexOutOfRange { .. })
        ));
        assert_eq!(ColoredBigraph::empty(65), Err(GraphError::TooLarge(65)));
    }

    #[test]
    fn degrees() {
        let g = complete(3, Color::Red);
        assert_eq!(g.min_degree(), 3);
        let k22 = complete(2, Color::Red);
        assert_eq!(k22.color_degree(VertexRef::x(0), Color::Red, None), Ok(2));
        assert_eq!(k22.color_degree(VertexRef::x(0), Color::Blue, None), Ok(0));
        let wrong = SidedSet {
            side: Side::X,
            set: VertexSet::full(2),
        };
        assert!(matches!(
            k22.color_degree(VertexRef::x(0), Color::Red, Some(wrong)),
            Err(GraphError::WrongSide { .. })
        ));
        assert_eq!(ColoredBigraph::empty(4).unwrap().min_degree(), 0);
        assert_eq!(
            g.color_edge_count(VertexSet::EMPTY, VertexSet::full(3), Color::Red),
            0
        );
    }

    #[test]
    fn canonical_format_is_sorted_and_parses_back() {
        let g = ColoredBigraph::build(3, &[(2, 1), (0, 0)], &[(1, 2), (0, 0)]).unwrap();
        let text = g.to_canonical();
        assert_eq!(text, "bigraph 3\nR 0 0\nR 2 1\nB 0 0\nB 1 2\n");
        assert_eq!(ColoredBigraph::parse_canonical(&text).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = ColoredBigraph::parse_canonical("bigraph 2\nR 0 0\nG 1 1\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 3, .. }));
        let err = ColoredBigraph::parse_canonical("bigraph 2\nR 0 5\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }));
        assert!(ColoredBigraph::parse_canonical("graph 2\n").is_err());
    }

    #[test]
    fn transpose_and_swap() {
        let g = ColoredBigraph::build(2, &[(0, 1)], &[(1, 1)]).unwrap();
        let t = g.transposed();
        assert!(t.has_edge(1, 0, Color::Red));
        assert!(t.has_edge(1, 1, Color::Blue));
        let s = g.colors_swapped();
        assert!(s.has_edge(0, 1, Color::Blue));
        assert_eq!(t.transposed(), g);
        assert_eq!(s.colors_swapped(), g);
    }
}
