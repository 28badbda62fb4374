use thiserror::Error;

use crate::graph::{Color, ColoredBigraph, Side};
use crate::mono::{min_cover_of, mono_components};
use crate::scalar::Scalar;
use crate::vertex_set::VertexSet;

/// `X' ⊆` one part and a partition `{Y_1, Y_2}` of the other part with few
/// red edges in `[X', Y_1]` and few blue edges in `[X', Y_2]`.
///
/// `orientation` names the part `xprime` lives in; `y1`, `y2` live in the
/// opposite part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalWitness<T> {
    pub orientation: Side,
    pub xprime: VertexSet,
    pub y1: VertexSet,
    pub y2: VertexSet,
    pub eta: T,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WitnessError {
    #[error("witness mentions vertex index {0}, outside the graph")]
    IndexOutOfRange(usize),
    #[error("y1 and y2 overlap")]
    Overlap,
    #[error("y1 and y2 do not cover the opposite part")]
    NotPartition,
}

/// Sizes and edge counts a witness is judged on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessCounts {
    pub xprime: usize,
    pub y1: usize,
    pub y2: usize,
    pub red_in_y1: usize,
    pub blue_in_y2: usize,
}

impl<T: Copy> ExtremalWitness<T> {
    pub fn new(orientation: Side, xprime: VertexSet, y1: VertexSet, y2: VertexSet, eta: T) -> Self {
        ExtremalWitness {
            orientation,
            xprime,
            y1,
            y2,
            eta,
        }
    }

    pub fn with_eta<U: Copy>(&self, eta: U) -> ExtremalWitness<U> {
        ExtremalWitness::new(self.orientation, self.xprime, self.y1, self.y2, eta)
    }

    /// The same witness for the graph with `X` and `Y` exchanged.
    pub fn transposed(&self) -> Self {
        ExtremalWitness {
            orientation: self.orientation.other(),
            ..*self
        }
    }

    /// The same witness for the graph with red and blue exchanged.
    pub fn colors_swapped(&self) -> Self {
        ExtremalWitness {
            y1: self.y2,
            y2: self.y1,
            ..*self
        }
    }

    pub fn check_shape(&self, n: usize) -> Result<(), WitnessError> {
        let all = self.xprime.union(self.y1).union(self.y2);
        if let Some(bad) = all.difference(VertexSet::full(n)).first() {
            return Err(WitnessError::IndexOutOfRange(bad));
        }
        if !self.y1.is_disjoint(self.y2) {
            return Err(WitnessError::Overlap);
        }
        if self.y1.union(self.y2) != VertexSet::full(n) {
            return Err(WitnessError::NotPartition);
        }
        Ok(())
    }
}

impl<T: Scalar> ExtremalWitness<T> {
    pub fn counts(&self, g: &ColoredBigraph) -> Result<WitnessCounts, WitnessError> {
        self.check_shape(g.n())?;
        let count = |ys: VertexSet, c: Color| match self.orientation {
            Side::X => g.color_edge_count(self.xprime, ys, c),
            Side::Y => g.color_edge_count(ys, self.xprime, c),
        };
        Ok(WitnessCounts {
            xprime: self.xprime.len(),
            y1: self.y1.len(),
            y2: self.y2.len(),
            red_in_y1: count(self.y1, Color::Red),
            blue_in_y2: count(self.y2, Color::Blue),
        })
    }

    fn judge(
        &self,
        g: &ColoredBigraph,
        size_ok: impl Fn(usize) -> bool,
    ) -> Result<bool, WitnessError> {
        let c = self.counts(g)?;
        let n = T::from_usize(g.n());
        let edge_cap = self.eta * n * n;
        Ok([c.xprime, c.y1, c.y2].into_iter().all(size_ok)
            && T::from_usize(c.red_in_y1) <= edge_cap
            && T::from_usize(c.blue_in_y2) <= edge_cap)
    }
}

/// Exact check of all five clauses: `|X'|, |Y_1|, |Y_2| ≥ (1/2−η)n`,
/// `e_R(X', Y_1) ≤ ηn²`, `e_B(X', Y_2) ≤ ηn²`.
pub fn verify_witness<T: Scalar>(
    g: &ColoredBigraph,
    w: &ExtremalWitness<T>,
) -> Result<bool, WitnessError> {
    let bound = (T::half() - w.eta) * T::from_usize(g.n());
    w.judge(g, |s| T::from_usize(s) >= bound)
}

/// [`verify_witness`] with the size clauses relaxed to
/// `|S| ≥ ⌊(1/2−η)n⌋`. For odd `n` and tiny `η` no strict witness exists,
/// but half-size parts rounded down still carry the routing argument.
pub fn verify_witness_rounded<T: Scalar>(
    g: &ColoredBigraph,
    w: &ExtremalWitness<T>,
) -> Result<bool, WitnessError> {
    let bound = ((T::half() - w.eta) * T::from_usize(g.n())).floor_int();
    w.judge(g, |s| s as i64 >= bound)
}

/// Splits `part` so that vertices with fewer red than blue edges into
/// `xprime` go to `y1`; ties fill the smaller side.
fn greedy_split(g: &ColoredBigraph, side: Side, xprime: VertexSet) -> (VertexSet, VertexSet) {
    let n = g.n();
    let deg = |v: usize, c: Color| match side {
        Side::X => g.deg_y_into(v, c, xprime),
        Side::Y => g.deg_x_into(v, c, xprime),
    };
    let (mut y1, mut y2, mut ties) = (VertexSet::EMPTY, VertexSet::EMPTY, Vec::new());
    for v in 0..n {
        let (r, b) = (deg(v, Color::Red), deg(v, Color::Blue));
        match r.cmp(&b) {
            std::cmp::Ordering::Less => y1.insert(v),
            std::cmp::Ordering::Greater => y2.insert(v),
            std::cmp::Ordering::Equal => ties.push(v),
        }
    }
    for v in ties {
        if y1.len() <= y2.len() {
            y1.insert(v);
        } else {
            y2.insert(v);
        }
    }
    (y1, y2)
}

/// Candidate witnesses, in a fixed order: component bipartitions of each
/// color, König-cover trimmings of those, greedy splits for each candidate
/// `X'`, and finally the lowest halves.
pub fn witness_candidates(g: &ColoredBigraph) -> Vec<ExtremalWitness<()>> {
    let n = g.n();
    let full = VertexSet::full(n);
    let mut xprimes: Vec<(Side, VertexSet)> = Vec::new();
    let mut out: Vec<ExtremalWitness<()>> = Vec::new();
    let mut push = |side: Side, xp: VertexSet, y1: VertexSet| {
        out.push(ExtremalWitness {
            orientation: side,
            xprime: xp,
            y1,
            y2: full.difference(y1),
            eta: (),
        });
    };
    let mut comps: Vec<_> = Color::BOTH
        .into_iter()
        .flat_map(|c| mono_components(g, c))
        .collect();
    comps.sort_by_key(|h| {
        (
            std::cmp::Reverse(h.min_side()),
            std::cmp::Reverse(h.total()),
            h.color,
            h.id,
        )
    });
    for h in &comps {
        // inside a blue component the opposite part is the few-red side
        let own = |ys: VertexSet| {
            if h.color == Color::Blue {
                ys
            } else {
                full.difference(ys)
            }
        };
        push(Side::X, h.xs, own(h.ys));
        push(Side::Y, h.ys, own(h.xs));
        xprimes.push((Side::X, h.xs));
        xprimes.push((Side::Y, h.ys));
        let (_, s) = min_cover_of(g, h.color, h.xs, h.ys);
        let (x1p, y1p) = (h.xs.difference(s.sx), h.ys.difference(s.sy));
        push(Side::X, x1p, own(s.sy));
        push(Side::Y, y1p, own(s.sx));
        xprimes.push((Side::X, x1p));
        xprimes.push((Side::Y, y1p));
    }
    let lo = VertexSet::full(n.div_ceil(2));
    xprimes.push((Side::X, lo));
    xprimes.push((Side::Y, lo));
    for &(side, xp) in &xprimes {
        let (y1, _) = greedy_split(g, side, xp);
        push(side, xp, y1);
    }
    for side in [Side::X, Side::Y] {
        push(side, lo, lo);
        push(side, lo, full.difference(lo));
    }
    out
}

/// The first candidate from [`witness_candidates`] that passes
/// [`verify_witness`] at `eta`.
pub fn find_witness<T: Scalar>(g: &ColoredBigraph, eta: T) -> Option<ExtremalWitness<T>> {
    witness_candidates(g)
        .into_iter()
        .map(|w| ExtremalWitness::new(w.orientation, w.xprime, w.y1, w.y2, eta))
        .find(|w| verify_witness(g, w) == Ok(true))
}

/// Like [`find_witness`], but a candidate passing only
/// [`verify_witness_rounded`] is accepted when no strict one exists.
pub fn find_witness_rounded<T: Scalar>(g: &ColoredBigraph, eta: T) -> Option<ExtremalWitness<T>> {
    find_witness(g, eta).or_else(|| {
        witness_candidates(g)
            .into_iter()
            .map(|w| ExtremalWitness::new(w.orientation, w.xprime, w.y1, w.y2, eta))
            .find(|w| verify_witness_rounded(g, w) == Ok(true))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_large_deg, large_deg_parts};
    use num_rational::Ratio;

    fn zero() -> Ratio<i64> {
        Ratio::from_integer(0)
    }

    #[test]
    fn large_deg_block_witness() {
        let (g, _) = gen_large_deg(6).unwrap();
        let ([x1, _], [y1, y2]) = large_deg_parts(6);
        let w = ExtremalWitness::new(Side::X, x1, y1, y2, zero());
        assert_eq!(verify_witness(&g, &w), Ok(true));
        let swapped = w.colors_swapped();
        assert_eq!(swapped.counts(&g).unwrap().red_in_y1, 9);
        assert_eq!(verify_witness(&g, &swapped), Ok(false));
        let small = ExtremalWitness::new(Side::X, x1.take_lowest(2), y1, y2, zero());
        assert_eq!(verify_witness(&g, &small), Ok(false));
    }

    #[test]
    fn malformed_witnesses() {
        let (g, _) = gen_large_deg(4).unwrap();
        let ([x1, _], [y1, _]) = large_deg_parts(4);
        let overlap = ExtremalWitness::new(Side::X, x1, y1, y1, zero());
        assert_eq!(verify_witness(&g, &overlap), Err(WitnessError::Overlap));
        let short = ExtremalWitness::new(Side::X, x1, y1, VertexSet::singleton(2), zero());
        assert_eq!(verify_witness(&g, &short), Err(WitnessError::NotPartition));
        let outside = ExtremalWitness::new(
            Side::X,
            VertexSet::singleton(9),
            y1,
            VertexSet::range(2, 4),
            zero(),
        );
        assert_eq!(
            verify_witness(&g, &outside),
            Err(WitnessError::IndexOutOfRange(9))
        );
    }

    #[test]
    fn find_witness_examples() {
        let (g, _) = gen_large_deg(8).unwrap();
        let w = find_witness(&g, zero()).unwrap();
        assert_eq!(verify_witness(&g, &w), Ok(true));

        let both = ColoredBigraph::from_fn(4, |_, _| (true, true)).unwrap();
        assert_eq!(find_witness(&both, Ratio::new(1, 100)), None);

        let empty = ColoredBigraph::empty(5).unwrap();
        assert!(find_witness(&empty, Ratio::new(1, 4)).is_some());
    }

    #[test]
    fn rounded_check_admits_odd_halves() {
        let (g, _) = gen_large_deg(13).unwrap();
        let ([x1, _], [y1, y2]) = large_deg_parts(13);
        let w = ExtremalWitness::new(Side::X, x1, y1, y2, zero());
        assert_eq!(verify_witness(&g, &w), Ok(false));
        assert_eq!(verify_witness_rounded(&g, &w), Ok(true));
    }
}
