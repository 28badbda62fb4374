use super::search::find_cycle_at_least;
use super::view::{mask_iter, SimpleGraphView};
use super::RouteError;

/// A cycle on at least `k + 1` vertices of a graph with `e(h) > k(n−1)/2`.
///
/// First peels vertices of degree at most `k/2` and closes a maximal path
/// through an endpoint's furthest neighbor; if that cycle is too short, falls
/// back to exhaustive search, which must succeed under the edge-count
/// hypothesis.
pub fn erdos_gallai_cycle(h: &SimpleGraphView, k: usize) -> Result<Vec<usize>, RouteError> {
    let n = h.vertex_count();
    let e = h.edge_count();
    if k < 2 {
        return Err(RouteError::Precondition(format!("need k >= 2, got {k}")));
    }
    if n == 0 || 2 * e <= k * (n - 1) {
        return Err(RouteError::Precondition(format!(
            "e(h) = {e} is not above k(n-1)/2 = {}/2",
            k * n.saturating_sub(1)
        )));
    }
    if let Some(c) = peel_and_close(h, k) {
        if c.len() > k {
            return Ok(c);
        }
    }
    find_cycle_at_least(h, k + 1, h.all_mask(), h.all_mask(), u64::MAX)
        .ok_or_else(|| RouteError::Precondition("no cycle of the guaranteed length exists".into()))
}

fn peel_and_close(h: &SimpleGraphView, k: usize) -> Option<Vec<usize>> {
    let mut core = h.all_mask();
    loop {
        let low =
            mask_iter(core).find(|&v| 2 * ((h.neighbors(v) & core).count_ones() as usize) <= k);
        match low {
            Some(v) => core &= !(1 << v),
            None => break,
        }
    }
    if core == 0 {
        return None;
    }
    let start = mask_iter(core).max_by_key(|&v| (h.neighbors(v) & core).count_ones())?;
    let mut path = std::collections::VecDeque::from([start]);
    let mut used = 1u64 << start;
    let pick = |v: usize, used: u64| {
        mask_iter(h.neighbors(v) & core & !used)
            .min_by_key(|&u| (h.neighbors(u) & core & !used).count_ones())
    };
    while let Some(u) = pick(*path.back()?, used) {
        path.push_back(u);
        used |= 1 << u;
    }
    while let Some(u) = pick(*path.front()?, used) {
        path.push_front(u);
        used |= 1 << u;
    }
    let path: Vec<usize> = path.into();
    // Both endpoints of a maximal path have all their core neighbors on it.
    let last = path.len() - 1;
    let from_back = (0..last)
        .find(|&i| h.has_edge(path[i], path[last]))
        .map(|i| path[i..].to_vec());
    let from_front = (1..=last)
        .rev()
        .find(|&i| h.has_edge(path[i], path[0]))
        .map(|i| path[..=i].to_vec());
    [from_back, from_front]
        .into_iter()
        .flatten()
        .filter(|c| c.len() >= 3)
        .max_by_key(|c| c.len())
}
