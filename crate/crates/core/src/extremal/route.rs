//! From an extremal witness to a certified monochromatic path on at least
//! `2⌈n/2⌉` and cycle on at least `2⌊n/2⌋` vertices.
//!
//! The pipeline works in a frame that may have `X`/`Y` and red/blue
//! exchanged (every such relabeling is recorded in the branch trace) and maps
//! the result back before re-validating it against the input graph.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::lemmas::{
    big_part_prop_with, ham_path_in_block, long_path_prop_with, low_x, low_y, top_by_degree,
    SizeRule, HAM_BUDGET,
};
use super::separator::{separator_partition, HatPartition, SeparatorOutcome};
use super::witness::{verify_witness, verify_witness_rounded, ExtremalWitness};
use super::{BiConnectedPair, ExtremalError, RouteParams};
use crate::graph::{Color, ColoredBigraph, Side, VertexRef};
use crate::mono::{max_matching, min_cover_of};
use crate::routes::search::{find_cycle_at_least, find_path_at_least};
use crate::routes::{ColorBlock, CycleResult, PathResult};
use crate::scalar::{at_most, sqrt_scaled_below, Scalar};
use crate::vertex_set::VertexSet;

/// Search-node budget for each long cycle / path search of the pipeline.
pub const SEARCH_BUDGET: u64 = 5_000_000;

/// Largest part size for a block search (two parts share a 64-bit view).
const BLOCK_SIDE: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RouteCertificate {
    pub n: usize,
    pub path: PathResult,
    pub cycle: CycleResult,
    pub branch_trace: Vec<String>,
}

impl Serialize for RouteCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("RouteCertificate", 6)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("color", &self.cycle.color)?;
        st.serialize_field("path_color", &self.path.color)?;
        st.serialize_field("path", &self.path.vertices)?;
        st.serialize_field("cycle", &self.cycle.vertices)?;
        st.serialize_field("branch_trace", &self.branch_trace)?;
        st.end()
    }
}

/// The working sets of the pipeline, in its final frame (see `transposed`
/// and `colors_swapped`).
#[derive(Debug, Clone, PartialEq)]
pub struct RouteState<T> {
    pub transposed: bool,
    pub colors_swapped: bool,
    pub size_rule_rounded: bool,
    pub s: T,
    pub x1: VertexSet,
    pub x2: VertexSet,
    pub y1: VertexSet,
    pub y2: VertexSet,
    pub y1s: VertexSet,
    pub y2s: VertexSet,
    pub y1p: VertexSet,
    pub y2p: VertexSet,
    pub x1s: VertexSet,
    pub x2s: VertexSet,
    pub a2s: VertexSet,
    pub x1p: VertexSet,
    pub x2p: VertexSet,
    pub hats: Option<HatPartition>,
    pub w: Option<VertexRef>,
    pub u_star: Option<VertexRef>,
    pub v_star: Option<VertexRef>,
}

/// Routes `g` with witness `w` (checked at `params.eta`) to a certificate.
pub fn extremal_route<T: Scalar>(
    g: &ColoredBigraph,
    w: &ExtremalWitness<T>,
    params: &RouteParams<T>,
) -> Result<RouteCertificate, ExtremalError> {
    extremal_route_with_state(g, w, params).map(|(c, _)| c)
}

pub fn extremal_route_with_state<T: Scalar>(
    g: &ColoredBigraph,
    w: &ExtremalWitness<T>,
    params: &RouteParams<T>,
) -> Result<(RouteCertificate, RouteState<T>), ExtremalError> {
    let rule = check_route_preconditions(g, w, params)?;
    let mut r = Router::new(g, params, rule);
    let found = r.run(w)?;
    let cert = r.certify(g, found)?;
    Ok((cert, r.state))
}

fn precondition(msg: String) -> ExtremalError {
    ExtremalError::Precondition(msg)
}

fn check_route_preconditions<T: Scalar>(
    g: &ColoredBigraph,
    w: &ExtremalWitness<T>,
    p: &RouteParams<T>,
) -> Result<SizeRule, ExtremalError> {
    let n = g.n();
    let nn = T::from_usize(n);
    if !(p.gamma > T::zero() && p.gamma <= T::from_ratio(1, 4)) {
        return Err(precondition(format!(
            "gamma = {} is outside (0, 1/4]",
            p.gamma
        )));
    }
    if p.eta < T::zero() || !sqrt_scaled_below(16, p.eta, p.gamma) {
        return Err(precondition(format!(
            "16·sqrt(eta) < gamma fails for eta = {}, gamma = {}",
            p.eta, p.gamma
        )));
    }
    if nn * p.gamma < T::from_usize(3) {
        return Err(precondition(format!(
            "n = {n} is below 3/gamma for gamma = {}",
            p.gamma
        )));
    }
    let need = (T::from_ratio(3, 4) + p.gamma) * nn;
    let delta = g.min_degree();
    if T::from_usize(delta) < need {
        let deficit = need - T::from_usize(delta);
        return Err(precondition(format!(
            "minimum degree {delta} is below (3/4 + gamma)·n = {need} (deficit {deficit})"
        )));
    }
    let at_eta = w.with_eta(p.eta);
    if verify_witness(g, &at_eta)? {
        Ok(SizeRule::Strict)
    } else if verify_witness_rounded(g, &at_eta)? {
        Ok(SizeRule::Rounded)
    } else {
        Err(precondition(format!(
            "the witness is not {}-extremal",
            p.eta
        )))
    }
}

/// Lemma hypotheses that fail inside the pipeline although the pipeline's
/// own hypotheses hold are a matter of constants, not of caller error.
fn in_regime(e: ExtremalError, step: &str) -> ExtremalError {
    match e {
        ExtremalError::Precondition(m) => ExtremalError::BelowRegime(format!("{step}: {m}")),
        other => other,
    }
}

fn below(msg: impl Into<String>) -> ExtremalError {
    ExtremalError::BelowRegime(msg.into())
}

fn bug(msg: impl Into<String>) -> ExtremalError {
    ExtremalError::Bug(msg.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), ExtremalError> {
    if cond {
        Ok(())
    } else {
        Err(ExtremalError::Bug(msg()))
    }
}

fn set_of(side: Side, s: VertexSet) -> String {
    let letter = if side == Side::X { 'x' } else { 'y' };
    let items: Vec<String> = s.iter().map(|i| format!("{letter}{i}")).collect();
    format!("{{{}}}", items.join(","))
}

type Found = (Vec<VertexRef>, Color, Option<PathResult>);

struct Router<'p, T> {
    g: ColoredBigraph,
    n: usize,
    nn: T,
    params: &'p RouteParams<T>,
    rule: SizeRule,
    trace: Vec<String>,
    state: RouteState<T>,
}

impl<'p, T: Scalar> Router<'p, T> {
    fn new(g: &ColoredBigraph, params: &'p RouteParams<T>, rule: SizeRule) -> Self {
        let e = VertexSet::EMPTY;
        Router {
            g: g.clone(),
            n: g.n(),
            nn: T::from_usize(g.n()),
            params,
            rule,
            trace: Vec::new(),
            state: RouteState {
                transposed: false,
                colors_swapped: false,
                size_rule_rounded: rule == SizeRule::Rounded,
                s: T::zero(),
                x1: e,
                x2: e,
                y1: e,
                y2: e,
                y1s: e,
                y2s: e,
                y1p: e,
                y2p: e,
                x1s: e,
                x2s: e,
                a2s: e,
                x1p: e,
                x2p: e,
                hats: None,
                w: None,
                u_star: None,
                v_star: None,
            },
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.trace.push(s.into());
    }

    fn transpose(&mut self) {
        self.g = self.g.transposed();
        self.state.transposed = !self.state.transposed;
    }

    fn swap_colors(&mut self) {
        self.g = self.g.colors_swapped();
        self.state.colors_swapped = !self.state.colors_swapped;
    }

    fn target(&self) -> usize {
        2 * self.n.div_ceil(2)
    }

    fn eta_times(&self, k: usize) -> T {
        T::from_usize(k) * self.params.eta * self.nn
    }

    fn theta(&self, k: usize) -> RouteParams<T> {
        self.params.with_theta(T::from_usize(k) * self.params.eta)
    }

    fn run(&mut self, w: &ExtremalWitness<T>) -> Result<Found, ExtremalError> {
        self.note(if self.rule == SizeRule::Strict {
            "witness: strict"
        } else {
            "witness: rounded part sizes"
        });
        let mut w = *w;
        if w.orientation == Side::Y {
            self.transpose();
            w = w.transposed();
            self.note("transpose: witness X' lies in Y");
        }
        let n = self.n;
        let full = VertexSet::full(n);
        let (gamma, eta) = (self.params.gamma, self.params.eta);
        let x1 = w.xprime;
        let s = T::from_usize(x1.len()) - self.nn / T::from_usize(2);
        let cut = s + gamma * self.nn;
        let (mut y1, mut y2) = (w.y1, w.y2);
        let split = |g: &ColoredBigraph, y1: VertexSet, y2: VertexSet| {
            let y1s = low_y(g, Color::Blue, x1, y1, cut);
            let y2s = low_y(g, Color::Red, x1, y2, cut);
            (y1s, y2s, y1.difference(y1s).union(y2s))
        };
        let (mut y1s, mut y2s, mut y1p) = split(&self.g, y1, y2);
        if 2 * y1p.len() < n {
            self.swap_colors();
            std::mem::swap(&mut y1, &mut y2);
            (y1s, y2s, y1p) = split(&self.g, y1, y2);
            self.note("swap colors: |Y1'| < |Y2'|");
        }
        let limit = self.eta_times(4);
        ensure(
            at_most(y1s.len(), limit) && at_most(y2s.len(), limit),
            || {
                format!(
                    "|Y1S| = {}, |Y2S| = {} exceed 4·eta·n",
                    y1s.len(),
                    y2s.len()
                )
            },
        )?;
        let y2p = full.difference(y1p);
        ensure(y1p.len() >= n.div_ceil(2), || {
            format!("|Y1'| = {} is below ceil(n/2)", y1p.len())
        })?;

        let x2 = full.difference(x1);
        let x1s = low_x(&self.g, Color::Blue, x1, y1p, gamma * self.nn);
        let x2s = low_x(&self.g, Color::Red, x2, y1p, gamma * self.nn);
        ensure(at_most(x1s.len(), self.eta_times(20)), || {
            format!("|X1S| = {} exceeds 20·eta·n", x1s.len())
        })?;
        let kept = x1.difference(x1s);
        let a2s = if 2 * kept.len() >= n {
            VertexSet::EMPTY
        } else {
            x2s.take_lowest((n - 2 * kept.len()) / 2)
        };
        ensure(at_most(a2s.len(), self.eta_times(21)), || {
            format!("|A2S| = {} exceeds 21·eta·n", a2s.len())
        })?;
        let x1p = kept.union(a2s);
        let x2p = x2.difference(a2s).union(x1s);
        self.state = RouteState {
            s,
            x1,
            x2,
            y1,
            y2,
            y1s,
            y2s,
            y1p,
            y2p,
            x1s,
            x2s,
            a2s,
            x1p,
            x2p,
            ..self.state.clone()
        };
        let _ = eta;

        if 4 * x1p.len() >= 3 * n {
            self.note("a: |X1'| >= 3n/4, blue cycle through the large part");
            let p = self.theta(9);
            let c = big_part_prop_with(&self.g, x1p, y1p, &p, self.rule)
                .map_err(|e| in_regime(e, "big part lemma"))?;
            return Ok((c.vertices, Color::Blue, None));
        }
        if 2 * x1p.len() >= n {
            self.note("b: n/2 <= |X1'| < 3n/4, blue Hamiltonian cycle of [X1', Y1']");
            return self.branch_b(x1p, y1p);
        }
        let e_blue = self.g.color_edge_count(x2p, y1p, Color::Blue);
        let c_threshold = T::from_usize(12) * eta * self.nn * self.nn;
        if e_blue > 0 && T::from_usize(e_blue) >= c_threshold {
            self.note(format!("c: e_B(X2', Y1') = {e_blue} >= 12·eta·n²"));
            match self.branch_c(x1p, x2p, y1p) {
                Ok(found) => return Ok(found),
                Err(e @ ExtremalError::Bug(_)) => return Err(e),
                Err(e) => self.note(format!("c: no blue link path ({e}), continuing with d")),
            }
        }
        self.note("d: red pairs [X2', Y1'] and [X1', Y2']");
        self.branch_d(x1p, x2p, y1p, y2p)
    }

    fn branch_b(&mut self, x1p: VertexSet, y1p: VertexSet) -> Result<Found, ExtremalError> {
        let p = self.theta(9);
        let pair = long_path_prop_with(&self.g, x1p, y1p, &p, Color::Blue, self.rule)
            .map_err(|e| in_regime(e, "long path lemma on [X1', Y1']"))?;
        let half = self.n.div_ceil(2);
        let m = pair.xs.len().min(pair.ys.len()).min(BLOCK_SIDE);
        if m < half {
            return Err(below(format!(
                "the blue pair has parts {} and {}, below ceil(n/2) = {half}",
                pair.xs.len(),
                pair.ys.len()
            )));
        }
        let mut sizes = vec![m];
        if half != m {
            sizes.push(half);
        }
        for size in sizes {
            let xs = top_by_degree(&self.g, Color::Blue, pair.xs, pair.ys, true, size, &[]);
            let ys = top_by_degree(&self.g, Color::Blue, pair.ys, xs, false, size, &[]);
            if let Some(c) = super::lemmas::ham_cycle_in_block(&self.g, Color::Blue, xs, ys, 8)? {
                self.note(format!(
                    "b: Hamiltonian blue cycle on a {size}x{size} sub-pair"
                ));
                return Ok((c, Color::Blue, None));
            }
        }
        Err(below("no Hamiltonian blue cycle in the bi-connected pair"))
    }

    /// A blue path `y … y'` through `⌈n/2⌉ − |X_L|` vertices of `X2'`, a blue
    /// edge `y'x` into `X_L`, and a Hamiltonian path `x … y` of the rest.
    fn branch_c(
        &mut self,
        x1p: VertexSet,
        x2p: VertexSet,
        y1p: VertexSet,
    ) -> Result<Found, ExtremalError> {
        let p = self.theta(9);
        let pair = long_path_prop_with(&self.g, x1p, y1p, &p, Color::Blue, self.rule)
            .map_err(|e| in_regime(e, "long path lemma on [X1', Y1']"))?;
        let m = pair.xs.len();
        let d = self.n.div_ceil(2) - m;
        let mut search = LinkSearch {
            g: &self.g,
            pair: &pair,
            x2p,
            y1p,
            d,
            m,
            attempts: 0,
            path: Vec::new(),
        };
        for y in pair.ys {
            search.path = vec![VertexRef::y(y)];
            if let Some(c) = search.extend(VertexSet::EMPTY, VertexSet::singleton(y))? {
                self.note(format!("c: link path with {d} vertices of X2'"));
                return Ok((c, Color::Blue, None));
            }
            if search.attempts >= LINK_ATTEMPTS {
                break;
            }
        }
        Err(below(format!(
            "no blue link path with {d} vertices of X2' closes a cycle"
        )))
    }

    fn branch_d(
        &mut self,
        x1p: VertexSet,
        x2p: VertexSet,
        y1p: VertexSet,
        y2p: VertexSet,
    ) -> Result<Found, ExtremalError> {
        let pa = long_path_prop_with(&self.g, x2p, y1p, &self.theta(12), Color::Red, self.rule)
            .map_err(|e| in_regime(e, "long path lemma on [X2', Y1']"))?;
        let pb = long_path_prop_with(&self.g, x1p, y2p, &self.theta(9), Color::Red, self.rule)
            .map_err(|e| in_regime(e, "long path lemma on [X1', Y2']"))?;
        let target = self.target();
        match separator_partition(&self.g, &pb, &pa)? {
            SeparatorOutcome::TwoPaths(_) => {
                self.note("d: two disjoint red paths join the pairs, long red cycle");
                let full = VertexSet::full(self.n);
                let c = self.cycle_search(Color::Red, full, full, target)?;
                c.map(|c| (c, Color::Red, None))
                    .ok_or_else(|| below("two red connections but no red cycle found by search"))
            }
            SeparatorOutcome::Separated { w, hats } => {
                let (mut w, mut hats) = (w, hats);
                match w {
                    None => self.note("d: no red path joins the pairs"),
                    Some(v) => self.note(format!("d: red separator {v}")),
                }
                if w.is_some_and(|v| v.side == Side::X) {
                    self.transpose();
                    hats = hats.transposed();
                    w = w.map(VertexRef::transposed);
                    self.note("transpose: separator lies in X");
                }
                self.state.w = w;
                self.state.hats = Some(hats);
                self.hats_cases(hats, w)
            }
        }
    }

    fn hats_cases(
        &mut self,
        mut hats: HatPartition,
        w: Option<VertexRef>,
    ) -> Result<Found, ExtremalError> {
        let n = self.n;
        let target = self.target();
        for (i, xs, ys) in [(1, hats.x1, hats.y1), (2, hats.x2, hats.y2)] {
            if 2 * xs.len() >= n && 2 * ys.len() >= n {
                self.note(format!(
                    "d: blue block [X^{i}, Y^{i}] with both parts >= n/2"
                ));
                return self.need_cycle(Color::Blue, xs, ys, target);
            }
        }
        if 2 * hats.x1.len() <= n {
            hats = hats.flipped();
            self.note("d: relabel hats so that |X^1| > n/2");
        }
        ensure(2 * hats.x1.len() > n && 2 * hats.y1.len() < n, || {
            format!(
                "hat sizes |X^1| = {}, |Y^1| = {} contradict the block case",
                hats.x1.len(),
                hats.y1.len()
            )
        })?;
        self.state.hats = Some(hats);
        let nu = max_matching(&self.g, Color::Blue, hats.x1, hats.y2).len();
        if nu >= 2 {
            self.note("d: blue matching of size >= 2 in [X^1, Y^2], long blue cycle");
            let full = VertexSet::full(n);
            return self.need_cycle(Color::Blue, full, full, target);
        }
        if nu == 0 {
            self.note("d: no blue edge in [X^1, Y^2]");
            if 2 * hats.y2.len() >= n {
                return self.need_cycle(Color::Red, hats.x1, hats.y2, target);
            }
            return self.separator_vertex_case(hats, w, false);
        }
        let (_, cover) = min_cover_of(&self.g, Color::Blue, hats.x1, hats.y2);
        if let Some(v) = cover.sy.first() {
            let vstar = VertexRef::y(v);
            self.state.v_star = Some(vstar);
            let red = self.g.deg_y_into(v, Color::Red, hats.x1);
            if 8 * red < n {
                hats.y2.remove(v);
                hats.y1.insert(v);
                self.note(format!(
                    "d: single blue matching edge, v* = {vstar} moved to Y^1"
                ));
            } else {
                self.note(format!(
                    "d: single blue matching edge, v* = {vstar} kept in Y^2"
                ));
            }
            self.state.hats = Some(hats);
            if 2 * hats.y2.len() >= n {
                return self.nu_one_cycle(Color::Red, hats.x1, hats.y2);
            }
            return self.separator_vertex_case(hats, w, true);
        }
        let u = cover
            .sx
            .first()
            .ok_or_else(|| bug("a matching of size 1 has an empty cover"))?;
        let ustar = VertexRef::x(u);
        self.state.u_star = Some(ustar);
        let blue = self.g.deg_x_into(u, Color::Blue, hats.y2);
        if 8 * blue < n {
            hats.x1.remove(u);
            hats.x2.insert(u);
            self.note(format!(
                "d: single blue matching edge, u* = {ustar} moved to X^2"
            ));
        } else {
            self.note(format!(
                "d: single blue matching edge, u* = {ustar} kept in X^1"
            ));
        }
        self.state.hats = Some(hats);
        if 2 * hats.y2.len() >= n {
            if 2 * hats.x1.len() >= n {
                return self.nu_one_cycle(Color::Red, hats.x1, hats.y2);
            }
            return self.nu_one_cycle(Color::Blue, hats.x2, hats.y2);
        }
        self.odd_sizes(hats, w)?;
        self.note("d: exceptional case, red cycle on 2*floor(n/2) and a separate blue path");
        let low = 2 * (n / 2);
        let (c, color, _) = self.need_cycle(Color::Red, hats.x1, hats.y2, low)?;
        let path = self.blue_path()?;
        Ok((c, color, Some(path)))
    }

    fn odd_sizes(&self, hats: HatPartition, w: Option<VertexRef>) -> Result<(), ExtremalError> {
        let n = self.n;
        ensure(
            n % 2 == 1 && w.is_some() && 2 * hats.y2.len() == n - 1 && 2 * hats.y1.len() == n - 1,
            || {
                format!(
                    "|Y^2| = {} < n/2 needs odd n, |Y^1| = |Y^2| = (n-1)/2 and one separator vertex",
                    hats.y2.len()
                )
            },
        )
    }

    /// `|Ŷ_2| < n/2`: route through the separator vertex `w_R ∈ Y`.
    /// `relaxed`: inside the single-matching-edge case, where a cycle on
    /// `2⌊n/2⌋` vertices plus a separate blue path is also enough here.
    fn separator_vertex_case(
        &mut self,
        hats: HatPartition,
        w: Option<VertexRef>,
        relaxed: bool,
    ) -> Result<Found, ExtremalError> {
        self.odd_sizes(hats, w)?;
        let w = w.expect("checked by odd_sizes");
        let red = self.g.deg_y_into(w.index, Color::Red, hats.x1);
        let (c, xs, ys) = if 8 * red >= self.n {
            self.note(format!("d: {w} has >= n/8 red edges to X^1"));
            (Color::Red, hats.x1, hats.y2.with(w.index))
        } else {
            self.note(format!("d: {w} has >= n/8 blue edges to X^1"));
            (Color::Blue, hats.x1, hats.y1.with(w.index))
        };
        if relaxed {
            self.nu_one_cycle(c, xs, ys)
        } else {
            self.need_cycle(c, xs, ys, self.target())
        }
    }

    /// A `c` cycle on `2⌈n/2⌉` vertices in `[xs, ys]`, or failing that one on
    /// `2⌊n/2⌋` vertices together with a blue path on `2⌈n/2⌉`.
    fn nu_one_cycle(
        &mut self,
        c: Color,
        xs: VertexSet,
        ys: VertexSet,
    ) -> Result<Found, ExtremalError> {
        if let Some(cyc) = self.cycle_search(c, xs, ys, self.target())? {
            return Ok((cyc, c, None));
        }
        let low = 2 * (self.n / 2);
        let (cyc, c, _) = self.need_cycle(c, xs, ys, low)?;
        self.note(format!(
            "d: {c} cycle on 2*floor(n/2) only, blue path taken separately"
        ));
        let path = self.blue_path()?;
        Ok((cyc, c, Some(path)))
    }

    fn blue_path(&mut self) -> Result<PathResult, ExtremalError> {
        let full = VertexSet::full(self.n);
        let target = self.target();
        let path = self
            .path_search(Color::Blue, full, full, target)?
            .ok_or_else(|| below(format!("no blue path on {target} vertices found")))?;
        Ok(PathResult::new(Color::Blue, path))
    }

    fn need_cycle(
        &mut self,
        c: Color,
        xs: VertexSet,
        ys: VertexSet,
        target: usize,
    ) -> Result<Found, ExtremalError> {
        match self.cycle_search(c, xs, ys, target)? {
            Some(cyc) => Ok((cyc, c, None)),
            None => Err(below(format!(
                "no {c} cycle on {target} vertices found in [{}, {}]",
                set_of(Side::X, xs),
                set_of(Side::Y, ys)
            ))),
        }
    }

    fn trim(&self, c: Color, xs: VertexSet, ys: VertexSet) -> (VertexSet, VertexSet) {
        if xs.len() + ys.len() <= 64 {
            return (xs, ys);
        }
        let xs2 = top_by_degree(&self.g, c, xs, ys, true, BLOCK_SIDE, &[]);
        let ys2 = top_by_degree(&self.g, c, ys, xs2, false, BLOCK_SIDE, &[]);
        (xs2, ys2)
    }

    fn cycle_search(
        &self,
        c: Color,
        xs: VertexSet,
        ys: VertexSet,
        target: usize,
    ) -> Result<Option<Vec<VertexRef>>, ExtremalError> {
        let (xs, ys) = self.trim(c, xs, ys);
        let block = ColorBlock::new(&self.g, c, xs, ys);
        let gv = &block.view.graph;
        Ok(
            find_cycle_at_least(gv, target, gv.all_mask(), gv.all_mask(), SEARCH_BUDGET)
                .map(|p| block.translate(&p)),
        )
    }

    fn path_search(
        &self,
        c: Color,
        xs: VertexSet,
        ys: VertexSet,
        target: usize,
    ) -> Result<Option<Vec<VertexRef>>, ExtremalError> {
        let (xs, ys) = self.trim(c, xs, ys);
        let block = ColorBlock::new(&self.g, c, xs, ys);
        let gv = &block.view.graph;
        Ok(
            find_path_at_least(gv, target, gv.all_mask(), gv.all_mask(), SEARCH_BUDGET)
                .map(|p| block.translate(&p)),
        )
    }

    /// Maps the result back to the input frame and re-validates it.
    fn certify(
        &mut self,
        g0: &ColoredBigraph,
        (cycle, color, path): Found,
    ) -> Result<RouteCertificate, ExtremalError> {
        let working = CycleResult::new(color, cycle);
        ensure(working.validate(&self.g), || {
            format!("{color} cycle does not validate in the working frame")
        })?;
        let map_v = |v: VertexRef| {
            if self.state.transposed {
                v.transposed()
            } else {
                v
            }
        };
        let map_c = |c: Color| {
            if self.state.colors_swapped {
                c.other()
            } else {
                c
            }
        };
        let cycle = CycleResult::new(
            map_c(working.color),
            working.vertices.iter().map(|&v| map_v(v)).collect(),
        );
        let path = match path {
            Some(p) => PathResult::new(
                map_c(p.color),
                p.vertices.iter().map(|&v| map_v(v)).collect(),
            ),
            None => cycle.to_path(),
        };
        let n = self.n;
        ensure(cycle.validate(g0), || {
            "cycle does not validate against the input".into()
        })?;
        ensure(path.validate(g0), || {
            "path does not validate against the input".into()
        })?;
        ensure(cycle.length >= 2 * (n / 2), || {
            format!(
                "cycle of length {} is below 2*floor(n/2) = {}",
                cycle.length,
                2 * (n / 2)
            )
        })?;
        ensure(path.order >= 2 * n.div_ceil(2), || {
            format!(
                "path of order {} is below 2*ceil(n/2) = {}",
                path.order,
                2 * n.div_ceil(2)
            )
        })?;
        Ok(RouteCertificate {
            n,
            path,
            cycle,
            branch_trace: std::mem::take(&mut self.trace),
        })
    }
}

const LINK_ATTEMPTS: usize = 256;

struct LinkSearch<'a> {
    g: &'a ColoredBigraph,
    pair: &'a BiConnectedPair,
    x2p: VertexSet,
    y1p: VertexSet,
    d: usize,
    m: usize,
    attempts: usize,
    path: Vec<VertexRef>,
}

impl LinkSearch<'_> {
    /// Extends `self.path` (which ends in `Y1'`) by blue `X2'`-`Y1'` steps.
    fn extend(
        &mut self,
        used_x: VertexSet,
        used_y: VertexSet,
    ) -> Result<Option<Vec<VertexRef>>, ExtremalError> {
        if self.attempts >= LINK_ATTEMPTS {
            return Ok(None);
        }
        let end = *self.path.last().expect("path starts with y");
        if used_x.len() == self.d {
            return self.close(end.index, used_y);
        }
        for x in self
            .g
            .neighbors(end, Color::Blue)
            .intersection(self.x2p)
            .difference(used_x)
        {
            for y in self
                .g
                .neighbors(VertexRef::x(x), Color::Blue)
                .intersection(self.y1p)
                .difference(used_y)
            {
                self.path.extend([VertexRef::x(x), VertexRef::y(y)]);
                let found = self.extend(used_x.with(x), used_y.with(y))?;
                self.path.truncate(self.path.len() - 2);
                if found.is_some() || self.attempts >= LINK_ATTEMPTS {
                    return Ok(found);
                }
            }
        }
        Ok(None)
    }

    fn close(
        &mut self,
        last: usize,
        used_y: VertexSet,
    ) -> Result<Option<Vec<VertexRef>>, ExtremalError> {
        let first = self.path[0].index;
        let free = self.pair.ys.difference(used_y).with(first);
        if free.len() < self.m {
            return Ok(None);
        }
        let ys = top_by_degree(
            self.g,
            Color::Blue,
            free,
            self.pair.xs,
            false,
            self.m,
            &[first],
        );
        for x in self
            .g
            .neighbors(VertexRef::y(last), Color::Blue)
            .intersection(self.pair.xs)
        {
            self.attempts += 1;
            let h = ham_path_in_block(
                self.g,
                Color::Blue,
                self.pair.xs,
                ys,
                VertexRef::x(x),
                VertexRef::y(first),
                HAM_BUDGET,
            );
            if let Ok(Some(h)) = h {
                let mut cyc = self.path.clone();
                cyc.extend(&h[..h.len() - 1]);
                return Ok(Some(cyc));
            }
            if self.attempts >= LINK_ATTEMPTS {
                break;
            }
        }
        Ok(None)
    }
}
