use super::components::{close, mono_components, MonoComponent};
use super::matching::{best_connected_matching, min_cover_of, ConnectedMatching};
use super::MonoError;
use crate::extremal::{verify_witness, ExtremalWitness};
use crate::graph::{Color, ColoredBigraph, Side};
use crate::scalar::Scalar;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq)]
pub enum StabilityOutcome<T> {
    Matching(ConnectedMatching),
    Witness(ExtremalWitness<T>),
}

impl<T> StabilityOutcome<T> {
    pub fn is_witness(&self) -> bool {
        matches!(self, StabilityOutcome::Witness(_))
    }
}

/// Either a monochromatic connected matching of size `≥ (1/2+η)n`, or a
/// witness that the coloring is `2η`-extremal.
///
/// The matching side is decided exactly. Otherwise the witness is built from
/// the largest component `H_1` with both parts of size `≥ n/2`: from its
/// bipartition if one part is below `(1/2+η)n`, else from the König covers
/// `S` of `H_1` and `T` of the other-color component `H_2` through
/// `H_1 − S`. Components are tried in order until a candidate passes
/// verification at `2η`.
pub fn matching_or_witness<T: Scalar>(
    g: &ColoredBigraph,
    eta: T,
) -> Result<StabilityOutcome<T>, MonoError> {
    let n = g.n();
    let nn = T::from_usize(n);
    if eta <= T::zero() {
        return Err(MonoError::Precondition(format!(
            "eta must be positive, got {eta}"
        )));
    }
    let delta = g.min_degree();
    let need = (T::from_ratio(3, 4) + eta) * nn;
    if T::from_usize(delta) <= need {
        return Err(MonoError::Precondition(format!(
            "minimum degree {delta} is not above (3/4 + {eta})·{n} = {need}"
        )));
    }
    let big = (T::half() + eta) * nn;
    let m = best_connected_matching(g);
    if T::from_usize(m.size()) >= big {
        return Ok(StabilityOutcome::Matching(m));
    }

    let mut h1s: Vec<MonoComponent> = Color::BOTH
        .into_iter()
        .flat_map(|c| mono_components(g, c))
        .filter(|h| 2 * h.xs.len() >= n && 2 * h.ys.len() >= n)
        .collect();
    if h1s.is_empty() {
        return Err(MonoError::BelowRegime(
            "no monochromatic component has both parts of size at least n/2".into(),
        ));
    }
    h1s.sort_by_key(|h| {
        (
            std::cmp::Reverse(h.total()),
            std::cmp::Reverse(h.min_side()),
            h.smallest_vertex(),
            h.color,
        )
    });

    let two_eta = eta + eta;
    let mut tried = 0;
    for h1 in &h1s {
        for w in candidates(g, h1, big) {
            // candidates are phrased for a blue H_1
            let w = if h1.color == Color::Red {
                w.colors_swapped()
            } else {
                w
            };
            let w = ExtremalWitness::new(w.orientation, w.xprime, w.y1, w.y2, two_eta);
            tried += 1;
            match verify_witness(g, &w) {
                Ok(true) => return Ok(StabilityOutcome::Witness(w)),
                Ok(false) => {}
                Err(e) => return Err(MonoError::Bug(format!("malformed witness candidate: {e}"))),
            }
        }
    }
    Err(MonoError::BelowRegime(format!(
        "largest connected matching has size {} < {big}, and none of {tried} witness candidates is {two_eta}-extremal",
        m.size()
    )))
}

fn candidates<T: Scalar>(
    g: &ColoredBigraph,
    h1: &MonoComponent,
    big: T,
) -> Vec<ExtremalWitness<()>> {
    let n = g.n();
    let full = VertexSet::full(n);
    let w = |orientation, xprime, y1: VertexSet| ExtremalWitness {
        orientation,
        xprime,
        y1,
        y2: full.difference(y1),
        eta: (),
    };
    let (xs, ys) = (h1.xs, h1.ys);
    if T::from_usize(ys.len()) < big {
        return vec![w(Side::X, xs, ys)];
    }
    if T::from_usize(xs.len()) < big {
        return vec![w(Side::Y, ys, xs)];
    }
    let c = h1.color;
    let (_, s) = min_cover_of(g, c, xs, ys);
    let (x1p, y1p) = (xs.difference(s.sx), ys.difference(s.sy));
    let mut out = Vec::new();
    // H_2: the other-color component through X_1' ∪ Y_1'
    let seed = match (x1p.first(), y1p.first()) {
        (Some(x), _) => Some((VertexSet::singleton(x), VertexSet::EMPTY)),
        (None, Some(y)) => Some((VertexSet::EMPTY, VertexSet::singleton(y))),
        _ => None,
    };
    if let Some((sx, sy)) = seed {
        let (h2x, h2y) = close(g, c.other(), sx, sy);
        let (_, t) = min_cover_of(g, c.other(), h2x, h2y);
        let x_first = !x1p.difference(t.sx).is_empty();
        let via_x = w(Side::X, x1p, s.sy);
        let via_y = w(Side::Y, y1p, s.sx);
        // if S_Y ∪ T_Y misses part of Y, T_Y' = T_Y ∖ S_Y still names the few-blue side
        let via_x_t = w(Side::X, x1p, full.difference(t.sy.difference(s.sy)));
        let via_y_t = w(Side::Y, y1p, full.difference(t.sx.difference(s.sx)));
        if x_first {
            out.extend([via_x, via_x_t, via_y, via_y_t]);
        } else {
            out.extend([via_y, via_y_t, via_x, via_x_t]);
        }
    }
    out.push(w(Side::X, xs, ys));
    out.push(w(Side::Y, ys, xs));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_large_deg;
    use num_rational::Ratio;

    #[test]
    fn large_deg_gives_witness() {
        let (g, _) = gen_large_deg(6).unwrap();
        let eta = Ratio::new(1, 20);
        let out = matching_or_witness(&g, eta).unwrap();
        let StabilityOutcome::Witness(w) = out else {
            panic!("expected a witness, got {out:?}");
        };
        assert_eq!(w.eta, Ratio::new(1, 10));
        assert_eq!(verify_witness(&g, &w), Ok(true));
    }

    #[test]
    fn complete_both_colors_gives_matching() {
        let g = ColoredBigraph::from_fn(4, |_, _| (true, true)).unwrap();
        match matching_or_witness(&g, Ratio::new(1, 10)).unwrap() {
            StabilityOutcome::Matching(m) => assert_eq!(m.size(), 4),
            other => panic!("expected a matching, got {other:?}"),
        }
    }

    #[test]
    fn odd_large_deg_gives_matching() {
        let (g, _) = gen_large_deg(7).unwrap();
        match matching_or_witness(&g, Ratio::new(1, 30)).unwrap() {
            StabilityOutcome::Matching(m) => assert_eq!(m.size(), 4),
            other => panic!("expected a matching, got {other:?}"),
        }
    }

    #[test]
    fn degree_precondition() {
        let g = ColoredBigraph::empty(4).unwrap();
        assert!(matches!(
            matching_or_witness(&g, Ratio::new(1, 10)),
            Err(MonoError::Precondition(_))
        ));
        let (g, _) = gen_large_deg(4).unwrap();
        assert!(matches!(
            matching_or_witness(&g, 0.0f64),
            Err(MonoError::Precondition(_))
        ));
    }
}
