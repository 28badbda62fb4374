//! The two lemmas on blue-dense pairs: Hamiltonian bi-connected sub-pairs of
//! a pair with few edges of the other color, and a blue cycle on
//! `2⌈n/2⌉` vertices when one part is large.

use serde::Serialize;

use super::ExtremalError;
use crate::graph::{Color, ColoredBigraph, VertexRef};
use crate::routes::{berge_check, hamiltonian_path, ColorBlock, CycleResult, PathResult};
use crate::scalar::{sqrt_scaled_below, Scalar};
use crate::vertex_set::VertexSet;

/// Search-node budget for each Hamiltonian path search.
pub const HAM_BUDGET: u64 = 20_000_000;

/// `γ`, `η`, `θ` as used by the lemmas and the routing pipeline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RouteParams<T> {
    pub gamma: T,
    pub eta: T,
    pub theta: T,
}

impl<T: Scalar> RouteParams<T> {
    pub fn new(gamma: T, eta: T) -> Self {
        RouteParams {
            gamma,
            eta,
            theta: T::zero(),
        }
    }

    pub fn with_theta(self, theta: T) -> Self {
        RouteParams { theta, ..self }
    }
}

/// A pair `[xs, ys]` whose equal-size sub-pairs are Hamiltonian bi-connected
/// in `color`; `excluded_x`, `excluded_y` are the low-degree vertices that
/// were dropped (`X_S`, `Y_S`). The parts need not have equal size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BiConnectedPair {
    pub xs: VertexSet,
    pub ys: VertexSet,
    pub color: Color,
    pub excluded_x: VertexSet,
    pub excluded_y: VertexSet,
}

/// How size clauses `|S| ≥ b` / `|S| ≤ b` are read. `Rounded` compares
/// against `⌊b⌋` / `⌈b⌉`, which is what the pipeline uses once it has
/// accepted a witness with rounded part sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SizeRule {
    Strict,
    Rounded,
}

impl SizeRule {
    pub(crate) fn at_least<T: Scalar>(self, count: usize, bound: T) -> bool {
        match self {
            SizeRule::Strict => T::from_usize(count) >= bound,
            SizeRule::Rounded => count as i64 >= bound.floor_int(),
        }
    }

    pub(crate) fn at_most<T: Scalar>(self, count: usize, bound: T) -> bool {
        match self {
            SizeRule::Strict => T::from_usize(count) <= bound,
            SizeRule::Rounded => count as i64 <= bound.ceil_int(),
        }
    }
}

pub(crate) fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), ExtremalError> {
    if cond {
        Ok(())
    } else {
        Err(ExtremalError::Bug(msg()))
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), ExtremalError> {
    if cond {
        Ok(())
    } else {
        Err(ExtremalError::Precondition(msg()))
    }
}

/// `δ(G) ≥ (3/4+γ)n`, `n ≥ 3/γ`, `8√θ < γ ≤ 1/4`.
fn check_lemma_params<T: Scalar>(
    g: &ColoredBigraph,
    p: &RouteParams<T>,
) -> Result<(), ExtremalError> {
    let n = g.n();
    let nn = T::from_usize(n);
    require(p.gamma <= T::from_ratio(1, 4), || {
        format!("gamma = {} exceeds 1/4", p.gamma)
    })?;
    require(
        p.theta >= T::zero() && sqrt_scaled_below(8, p.theta, p.gamma),
        || {
            format!(
                "8·sqrt(theta) < gamma fails for theta = {}, gamma = {}",
                p.theta, p.gamma
            )
        },
    )?;
    require(nn * p.gamma >= T::from_usize(3), || {
        format!("n = {n} is below 3/gamma for gamma = {}", p.gamma)
    })?;
    let need = (T::from_ratio(3, 4) + p.gamma) * nn;
    let delta = g.min_degree();
    require(T::from_usize(delta) >= need, || {
        format!("minimum degree {delta} is below (3/4 + gamma)·n = {need}")
    })
}

/// Vertices of `xs` with at most `bound` `c`-neighbors in `ys`.
pub(crate) fn low_x<T: Scalar>(
    g: &ColoredBigraph,
    c: Color,
    xs: VertexSet,
    ys: VertexSet,
    bound: T,
) -> VertexSet {
    xs.iter()
        .filter(|&x| T::from_usize(g.deg_x_into(x, c, ys)) <= bound)
        .collect()
}

/// Vertices of `ys` with at most `bound` `c`-neighbors in `xs`.
pub(crate) fn low_y<T: Scalar>(
    g: &ColoredBigraph,
    c: Color,
    xs: VertexSet,
    ys: VertexSet,
    bound: T,
) -> VertexSet {
    ys.iter()
        .filter(|&y| T::from_usize(g.deg_y_into(y, c, xs)) <= bound)
        .collect()
}

/// Drops the vertices of low `color`-degree from `[xprime, yprime]`; every
/// equal-size sub-pair of what is left with parts of size at least
/// `(1/2−γ/4)n` is Hamiltonian bi-connected in `color`.
///
/// Requires `|X'|, |Y'| ≥ (1/2−γ/8)n` and at most `θn²` edges of the other
/// color in `[X', Y']`.
pub fn long_path_prop<T: Scalar>(
    g: &ColoredBigraph,
    xprime: VertexSet,
    yprime: VertexSet,
    params: &RouteParams<T>,
    color: Color,
) -> Result<BiConnectedPair, ExtremalError> {
    long_path_prop_with(g, xprime, yprime, params, color, SizeRule::Strict)
}

pub(crate) fn long_path_prop_with<T: Scalar>(
    g: &ColoredBigraph,
    xprime: VertexSet,
    yprime: VertexSet,
    params: &RouteParams<T>,
    color: Color,
    rule: SizeRule,
) -> Result<BiConnectedPair, ExtremalError> {
    check_lemma_params(g, params)?;
    let n = g.n();
    let nn = T::from_usize(n);
    let gamma = params.gamma;
    let size_bound = (T::half() - gamma / T::from_usize(8)) * nn;
    require(
        rule.at_least(xprime.len(), size_bound) && rule.at_least(yprime.len(), size_bound),
        || {
            format!(
                "parts of sizes {} and {} are not both at least (1/2 - gamma/8)·n = {size_bound}",
                xprime.len(),
                yprime.len()
            )
        },
    )?;
    let other = g.color_edge_count(xprime, yprime, color.other());
    let cap = params.theta * nn * nn;
    require(T::from_usize(other) <= cap, || {
        format!(
            "{} edges of [X', Y'] = {other} exceed theta·n² = {cap}",
            color.other()
        )
    })?;
    let half_gap = gamma * nn / T::from_usize(2) - nn / T::from_usize(2);
    let xs_low = low_x(
        g,
        color,
        xprime,
        yprime,
        T::from_usize(yprime.len()) + half_gap,
    );
    let ys_low = low_y(
        g,
        color,
        xprime,
        yprime,
        T::from_usize(xprime.len()) + half_gap,
    );
    let limit = T::from_usize(4) * params.theta * nn;
    ensure(
        at_most_t(xs_low.len(), limit) && at_most_t(ys_low.len(), limit),
        || {
            format!(
                "|X_S| = {}, |Y_S| = {} exceed 4·theta·n = {limit}",
                xs_low.len(),
                ys_low.len()
            )
        },
    )?;
    Ok(BiConnectedPair {
        xs: xprime.difference(xs_low),
        ys: yprime.difference(ys_low),
        color,
        excluded_x: xs_low,
        excluded_y: ys_low,
    })
}

fn at_most_t<T: Scalar>(count: usize, bound: T) -> bool {
    T::from_usize(count) <= bound
}

/// A Hamiltonian `color` path of `[xs, ys]` from `x` to `y` with at most
/// `budget` search nodes. `Ok(None)`: none exists; `Err(())`: gave up.
pub(crate) fn ham_path_in_block(
    g: &ColoredBigraph,
    color: Color,
    xs: VertexSet,
    ys: VertexSet,
    x: VertexRef,
    y: VertexRef,
    budget: u64,
) -> Result<Option<Vec<VertexRef>>, ()> {
    let block = ColorBlock::new(g, color, xs, ys);
    let (Some(s), Some(t)) = (block.index_of(x), block.index_of(y)) else {
        return Ok(None);
    };
    let graph = &block.view.graph;
    match hamiltonian_path(graph, s, t, graph.all_mask(), Some(budget)) {
        Ok(p) => Ok(p.map(|p| block.translate(&p))),
        Err(_) => Err(()),
    }
}

/// A Hamiltonian path of `[xstar, ystar]` in `pair.color` from `x` to `y`.
pub fn extract_ham_path(
    g: &ColoredBigraph,
    pair: &BiConnectedPair,
    xstar: VertexSet,
    ystar: VertexSet,
    x: VertexRef,
    y: VertexRef,
) -> Result<PathResult, ExtremalError> {
    require(xstar.is_subset(pair.xs) && ystar.is_subset(pair.ys), || {
        "the sub-pair is not contained in the pair".into()
    })?;
    require(xstar.len() == ystar.len(), || {
        format!(
            "sub-pair parts have sizes {} and {}",
            xstar.len(),
            ystar.len()
        )
    })?;
    require(
        x.side == crate::graph::Side::X && xstar.contains(x.index),
        || format!("{x} is not in the X part of the sub-pair"),
    )?;
    require(
        y.side == crate::graph::Side::Y && ystar.contains(y.index),
        || format!("{y} is not in the Y part of the sub-pair"),
    )?;
    match ham_path_in_block(g, pair.color, xstar, ystar, x, y, HAM_BUDGET) {
        Ok(Some(p)) => Ok(PathResult::new(pair.color, p)),
        Ok(None) => {
            let block = ColorBlock::new(g, pair.color, xstar, ystar);
            let berge = xstar.len() >= 2 && berge_check(&block.view) == Ok(true);
            if berge {
                Err(ExtremalError::Bug(format!(
                    "no Hamiltonian path {x}..{y} although the sub-pair meets the degree condition"
                )))
            } else {
                Err(ExtremalError::BelowRegime(format!(
                    "no Hamiltonian path {x}..{y}: the sub-pair is not bi-connected at this size"
                )))
            }
        }
        Err(()) => Err(ExtremalError::BelowRegime(format!(
            "Hamiltonian path search {x}..{y} exceeded its budget"
        ))),
    }
}

/// The `m` vertices of `pool` (an `X` set when `side_x`) with the most
/// `c`-neighbors in `other`, always including `must`.
pub(crate) fn top_by_degree(
    g: &ColoredBigraph,
    c: Color,
    pool: VertexSet,
    other: VertexSet,
    side_x: bool,
    m: usize,
    must: &[usize],
) -> VertexSet {
    let deg = |v: usize| {
        if side_x {
            g.deg_x_into(v, c, other)
        } else {
            g.deg_y_into(v, c, other)
        }
    };
    let mut chosen: VertexSet = must.iter().copied().collect();
    let mut rest: Vec<usize> = pool.difference(chosen).iter().collect();
    rest.sort_by_key(|&v| (std::cmp::Reverse(deg(v)), v));
    for v in rest {
        if chosen.len() >= m {
            break;
        }
        chosen.insert(v);
    }
    chosen
}

/// A Hamiltonian `c` cycle of `[xs, ys]` (equal sizes) closed through some
/// `c` edge `xy`: a Hamiltonian path from `x` to `y` plus the edge.
pub(crate) fn ham_cycle_in_block(
    g: &ColoredBigraph,
    c: Color,
    xs: VertexSet,
    ys: VertexSet,
    max_edges: usize,
) -> Result<Option<Vec<VertexRef>>, ExtremalError> {
    let mut tried = 0;
    let mut exhausted = false;
    for x in xs {
        for y in g.neighbors(VertexRef::x(x), c).intersection(ys) {
            if tried >= max_edges {
                break;
            }
            tried += 1;
            match ham_path_in_block(g, c, xs, ys, VertexRef::x(x), VertexRef::y(y), HAM_BUDGET) {
                Ok(Some(p)) => return Ok(Some(p)),
                Ok(None) => {}
                Err(()) => exhausted = true,
            }
        }
    }
    if exhausted {
        return Err(ExtremalError::BelowRegime(
            "Hamiltonian cycle search exceeded its budget".into(),
        ));
    }
    Ok(None)
}

/// A blue cycle on at least `2⌈n/2⌉` vertices, given `|X'| ≥ 3n/4`,
/// `n/2 ≤ |Y'| ≤ (1/2+θ)n`, `e_R(X', Y') ≤ θn²` and `δ_B(Y', X') ≥ γn`.
///
/// The low-degree part `Y_S` of `Y'` is threaded onto a blue path
/// `x_1 v_1 x_1' v_1' … x_t v_t x_t' v_t'`, which is closed by a Hamiltonian
/// path of the remaining blue-dense pair.
pub fn big_part_prop<T: Scalar>(
    g: &ColoredBigraph,
    xprime: VertexSet,
    yprime: VertexSet,
    params: &RouteParams<T>,
) -> Result<CycleResult, ExtremalError> {
    big_part_prop_with(g, xprime, yprime, params, SizeRule::Strict)
}

pub(crate) fn big_part_prop_with<T: Scalar>(
    g: &ColoredBigraph,
    xprime: VertexSet,
    yprime: VertexSet,
    params: &RouteParams<T>,
    rule: SizeRule,
) -> Result<CycleResult, ExtremalError> {
    check_lemma_params(g, params)?;
    let n = g.n();
    let nn = T::from_usize(n);
    let (gamma, theta) = (params.gamma, params.theta);
    let blue = Color::Blue;
    require(
        rule.at_least(xprime.len(), T::from_ratio(3, 4) * nn),
        || format!("|X'| = {} is below 3n/4", xprime.len()),
    )?;
    require(
        rule.at_least(yprime.len(), nn / T::from_usize(2))
            && rule.at_most(yprime.len(), (T::half() + theta) * nn),
        || format!("|Y'| = {} is outside [n/2, (1/2 + theta)·n]", yprime.len()),
    )?;
    let red = g.color_edge_count(xprime, yprime, Color::Red);
    require(T::from_usize(red) <= theta * nn * nn, || {
        format!("e_R(X', Y') = {red} exceeds theta·n²")
    })?;
    let weak = yprime
        .iter()
        .find(|&y| T::from_usize(g.deg_y_into(y, blue, xprime)) < gamma * nn);
    require(weak.is_none(), || {
        format!(
            "y{} has fewer than gamma·n blue neighbors in X'",
            weak.unwrap_or(0)
        )
    })?;
    big_part_construct(g, xprime, yprime, gamma, theta)
}

/// The construction behind [`big_part_prop`], without the hypothesis checks.
pub(crate) fn big_part_construct<T: Scalar>(
    g: &ColoredBigraph,
    xprime: VertexSet,
    yprime: VertexSet,
    gamma: T,
    theta: T,
) -> Result<CycleResult, ExtremalError> {
    let n = g.n();
    let nn = T::from_usize(n);
    let blue = Color::Blue;
    let four = T::from_usize(4);
    let x_low = low_x(
        g,
        blue,
        xprime,
        yprime,
        (T::from_ratio(1, 4) + T::from_ratio(3, 4) * gamma) * nn,
    );
    ensure(at_most_t(x_low.len(), four * theta / gamma * nn), || {
        format!("|X_S| = {} exceeds (4·theta/gamma)·n", x_low.len())
    })?;
    let x_big = xprime.difference(x_low);
    let y_low = low_y(
        g,
        blue,
        x_big,
        yprime,
        T::from_usize(x_big.len()) - nn / T::from_usize(2) + T::from_ratio(3, 4) * gamma * nn,
    );
    ensure(at_most_t(y_low.len(), four * theta * nn), || {
        format!("|Y_S| = {} exceeds 4·theta·n", y_low.len())
    })?;
    let y_big = yprime.difference(y_low);
    let target = 2 * n.div_ceil(2);

    if y_low.is_empty() {
        let m = x_big.len().min(yprime.len());
        let xs = top_by_degree(g, blue, x_big, yprime, true, m, &[]);
        let ys = top_by_degree(g, blue, yprime, xs, false, m, &[]);
        let cyc = ham_cycle_in_block(g, blue, xs, ys, 4)?.ok_or_else(|| {
            ExtremalError::Bug(format!(
                "no Hamiltonian blue cycle in a {m}×{m} blue-dense pair"
            ))
        })?;
        return finish(g, cyc, target);
    }

    // x_i, x_i' for each v_i, then linking vertices v_i' in Y_L
    let vs: Vec<usize> = y_low.iter().collect();
    let mut used_x = VertexSet::EMPTY;
    let mut ends = Vec::with_capacity(vs.len());
    for &v in &vs {
        let mut nb = g
            .neighbors(VertexRef::y(v), blue)
            .intersection(x_big)
            .difference(used_x)
            .iter();
        let (Some(a), Some(b)) = (nb.next(), nb.next()) else {
            return Err(ExtremalError::Bug(format!(
                "y{v} lacks two fresh blue neighbors in X_L"
            )));
        };
        used_x.insert(a);
        used_x.insert(b);
        ends.push((a, b));
    }
    let mut used_y = VertexSet::EMPTY;
    let mut path = Vec::with_capacity(4 * vs.len());
    for (i, &v) in vs.iter().enumerate() {
        let (a, b) = ends[i];
        let mut link = g
            .neighbors(VertexRef::x(b), blue)
            .intersection(y_big)
            .difference(used_y);
        if let Some(&(next, _)) = ends.get(i + 1) {
            link = link.intersection(g.neighbors(VertexRef::x(next), blue));
        }
        let Some(w) = link.first() else {
            return Err(ExtremalError::Bug(format!(
                "no blue link vertex after y{v}"
            )));
        };
        used_y.insert(w);
        path.extend([
            VertexRef::x(a),
            VertexRef::y(v),
            VertexRef::x(b),
            VertexRef::y(w),
        ]);
    }
    let x1 = ends[0].0;
    let vt = used_y_last(&path);
    let x_rest = x_big.difference(used_x).with(x1);
    let y_rest = yprime.difference(y_low).difference(used_y).with(vt);
    let m = x_rest.len().min(y_rest.len());
    let xs = top_by_degree(g, blue, x_rest, y_rest, true, m, &[x1]);
    let ys = top_by_degree(g, blue, y_rest, xs, false, m, &[vt]);
    let closing = ham_path_in_block(
        g,
        blue,
        xs,
        ys,
        VertexRef::x(x1),
        VertexRef::y(vt),
        HAM_BUDGET,
    )
    .map_err(|_| ExtremalError::BelowRegime("Hamiltonian path search exceeded its budget".into()))?
    .ok_or_else(|| {
        ExtremalError::Bug(format!(
            "no blue Hamiltonian path x{x1}..y{vt} closing the cycle"
        ))
    })?;
    let mut cyc = path;
    cyc.extend(closing[1..closing.len() - 1].iter().rev());
    finish(g, cyc, target)
}

fn used_y_last(path: &[VertexRef]) -> usize {
    path.last().expect("path is nonempty").index
}

fn finish(
    g: &ColoredBigraph,
    cyc: Vec<VertexRef>,
    target: usize,
) -> Result<CycleResult, ExtremalError> {
    let c = CycleResult::new(Color::Blue, cyc);
    ensure(c.validate(g), || {
        "constructed blue cycle does not validate".into()
    })?;
    ensure(c.length >= target, || {
        format!("blue cycle of length {} is shorter than {target}", c.length)
    })?;
    Ok(c)
}
