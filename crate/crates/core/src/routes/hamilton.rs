use super::view::{mask_iter, BipartiteView, SimpleGraphView};
use super::RouteError;

/// Search budget exhausted before the search space was closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exhausted;

/// A Hamiltonian path of `g[within]` from `s` to `t`, by backtracking.
///
/// Moves are tried fail-first: the next vertex is the unvisited neighbor of
/// the current endpoint with the fewest unvisited neighbors of its own.
/// `budget` bounds the number of search nodes (`None` = exhaustive).
pub fn hamiltonian_path(
    g: &SimpleGraphView,
    s: usize,
    t: usize,
    within: u64,
    budget: Option<u64>,
) -> Result<Option<Vec<usize>>, Exhausted> {
    if within >> s & 1 == 0 || within >> t & 1 == 0 {
        return Ok(None);
    }
    if s == t {
        return Ok((within == 1 << s).then(|| vec![s]));
    }
    let mut search = HamSearch {
        g,
        t,
        path: vec![s],
        nodes: 0,
        budget: budget.unwrap_or(u64::MAX),
    };
    let remaining = within & !(1 << s);
    match search.extend(s, remaining) {
        Step::Found => Ok(Some(search.path)),
        Step::Dead => Ok(None),
        Step::OutOfBudget => Err(Exhausted),
    }
}

enum Step {
    Found,
    Dead,
    OutOfBudget,
}

struct HamSearch<'a> {
    g: &'a SimpleGraphView,
    t: usize,
    path: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl HamSearch<'_> {
    fn extend(&mut self, v: usize, remaining: u64) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::OutOfBudget;
        }
        let t = self.t;
        if remaining == 1 << t {
            if self.g.has_edge(v, t) {
                self.path.push(t);
                return Step::Found;
            }
            return Step::Dead;
        }
        // Every vertex still to be visited needs two usable neighbors (one for
        // the target), and the rest must stay connected to the endpoint.
        let open = remaining | 1 << v;
        let mut forced: Option<usize> = None;
        for u in mask_iter(remaining) {
            let avail = (self.g.neighbors(u) & open).count_ones();
            let need = if u == t { 1 } else { 2 };
            if avail < need {
                return Step::Dead;
            }
            if u != t && avail == 2 && self.g.has_edge(u, v) {
                // u must be entered from v right now or it can never be left again
                // (one of its two options is the current endpoint).
                if forced.is_some_and(|f| f != u) {
                    return Step::Dead;
                }
                forced = Some(u);
            }
        }
        if self.g.reach(v, open) != open {
            return Step::Dead;
        }
        let mut cands: Vec<(u32, usize)> = mask_iter(self.g.neighbors(v) & remaining & !(1 << t))
            .map(|u| ((self.g.neighbors(u) & remaining).count_ones(), u))
            .collect();
        if let Some(f) = forced {
            cands.retain(|&(_, u)| u == f);
        }
        cands.sort_unstable();
        for (_, u) in cands {
            self.path.push(u);
            match self.extend(u, remaining & !(1 << u)) {
                Step::Dead => {
                    self.path.pop();
                }
                done => return done,
            }
        }
        Step::Dead
    }
}

/// Berge's sufficient condition for Hamiltonian bi-connectedness of a
/// balanced bipartite graph with parts of size `m ≥ 2`.
///
/// With degrees sorted ascending on each side (`d(u_1) ≤ … ≤ d(u_m)`), take
/// the smallest 1-based `j` with `d(u_j) ≤ j + 1` and likewise `k` on the
/// other side; the condition is `d(u_j) + d(v_k) ≥ m + 2`. Such indices always
/// exist since `d(u_m) ≤ m`.
pub fn berge_check(h: &BipartiteView) -> Result<bool, RouteError> {
    if !h.is_balanced() {
        return Err(RouteError::Precondition(format!(
            "parts have sizes {} and {}",
            h.left,
            h.right()
        )));
    }
    let m = h.left;
    if m < 2 {
        return Err(RouteError::Precondition(format!(
            "need m >= 2, got m = {m}"
        )));
    }
    let pick = |range: std::ops::Range<usize>| -> usize {
        let mut degs: Vec<(usize, usize)> = range.map(|v| (h.graph.degree(v), v)).collect();
        degs.sort_unstable();
        degs.iter()
            .enumerate()
            .find(|&(i, &(d, _))| d <= i + 2)
            .map(|(_, &(d, _))| d)
            .expect("index m always qualifies")
    };
    let du = pick(0..m);
    let dv = pick(m..2 * m);
    Ok(du + dv >= m + 2)
}

/// A Hamiltonian path from `u` to `v` (view indices on opposite sides) of a
/// balanced bipartite view, or `None` if there is none. Exhaustive search.
pub fn ham_path_between(
    h: &BipartiteView,
    u: usize,
    v: usize,
) -> Result<Option<Vec<usize>>, RouteError> {
    if !h.is_balanced() {
        return Err(RouteError::Precondition(format!(
            "parts have sizes {} and {}",
            h.left,
            h.right()
        )));
    }
    let n = h.graph.vertex_count();
    if u >= n || v >= n || (u < h.left) == (v < h.left) {
        return Err(RouteError::SideViolation);
    }
    let (s, t) = if u < h.left { (u, v) } else { (v, u) };
    let path = hamiltonian_path(&h.graph, s, t, h.graph.all_mask(), None)
        .expect("unbounded search cannot run out of budget");
    Ok(path.map(|mut p| {
        if s != u {
            p.reverse();
        }
        p
    }))
}
