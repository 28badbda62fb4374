//! Exact longest path / longest cycle by dynamic programming over
//! (visited set, endpoint) states, run per connected component.

use super::view::{mask_iter, ColorBlock, SimpleGraphView};
use super::{CycleResult, PathResult, RouteError};
use crate::graph::{Color, ColoredBigraph};

/// Default bound on `n` (vertices per side) for the exact oracles.
pub const DEFAULT_SEARCH_CAP: usize = 12;

/// Largest component the subset DP will accept (`2^28` states of 4 bytes).
pub const MAX_COMPONENT_VERTICES: usize = 28;

/// A maximum-order path of `view` (vertex sequence; empty if `view` has no
/// vertices). Components above [`MAX_COMPONENT_VERTICES`] are rejected.
pub fn longest_path_in(view: &SimpleGraphView) -> Result<Vec<usize>, RouteError> {
    let mut best: Vec<usize> = Vec::new();
    for comp in view.components() {
        let size = comp.count_ones() as usize;
        if size <= best.len() {
            continue;
        }
        let (sub, old) = view.induced(comp);
        let local = path_dp(&sub)?;
        if local.len() > best.len() {
            best = local.into_iter().map(|i| old[i]).collect();
        }
    }
    Ok(best)
}

/// A maximum-length cycle of `view` with at least `min_len` vertices, if any.
pub fn longest_cycle_in(
    view: &SimpleGraphView,
    min_len: usize,
) -> Result<Option<Vec<usize>>, RouteError> {
    let mut best: Option<Vec<usize>> = None;
    for comp in view.components() {
        let size = comp.count_ones() as usize;
        if size < min_len.max(3) || best.as_ref().is_some_and(|b| b.len() >= size) {
            continue;
        }
        let (sub, old) = view.induced(comp);
        if let Some(local) = cycle_dp(&sub, min_len.max(3))? {
            if best.as_ref().is_none_or(|b| local.len() > b.len()) {
                best = Some(local.into_iter().map(|i| old[i]).collect());
            }
        }
    }
    Ok(best)
}

fn check_size(v: usize) -> Result<(), RouteError> {
    if v > MAX_COMPONENT_VERTICES {
        Err(RouteError::ComponentTooLarge(v))
    } else {
        Ok(())
    }
}

/// `reach[mask]` = endpoints of paths whose vertex set is exactly `mask`.
fn path_dp(g: &SimpleGraphView) -> Result<Vec<usize>, RouteError> {
    let v = g.vertex_count();
    check_size(v)?;
    if v == 0 {
        return Ok(Vec::new());
    }
    let adj: Vec<u32> = (0..v).map(|i| g.neighbors(i) as u32).collect();
    let full = 1usize << v;
    let mut reach = vec![0u32; full];
    for i in 0..v {
        reach[1 << i] = 1 << i;
    }
    let mut best = (1usize, 1usize, 0usize); // (order, mask, end)
    for mask in 1..full {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        let order = mask.count_ones() as usize;
        if order > best.0 {
            best = (order, mask, ends.trailing_zeros() as usize);
            if order == v {
                break;
            }
        }
        for end in mask_iter(ends as u64) {
            let fresh = adj[end] & !(mask as u32);
            for nb in mask_iter(fresh as u64) {
                reach[mask | 1 << nb] |= 1 << nb;
            }
        }
    }
    Ok(unwind(&reach, &adj, best.1, best.2))
}

/// Same table, but every path starts at the lowest vertex of its mask, so a
/// path whose end is adjacent to that start closes a cycle.
fn cycle_dp(g: &SimpleGraphView, min_len: usize) -> Result<Option<Vec<usize>>, RouteError> {
    let v = g.vertex_count();
    check_size(v)?;
    let adj: Vec<u32> = (0..v).map(|i| g.neighbors(i) as u32).collect();
    let full = 1usize << v;
    let mut reach = vec![0u32; full];
    for i in 0..v {
        reach[1 << i] = 1 << i;
    }
    let mut best: Option<(usize, usize, usize)> = None;
    for mask in 1..full {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        let start = mask.trailing_zeros() as usize;
        let order = mask.count_ones() as usize;
        if order >= min_len && best.is_none_or(|b| order > b.0) {
            let closing = ends & adj[start];
            if closing != 0 {
                best = Some((order, mask, closing.trailing_zeros() as usize));
            }
        }
        let above_start = !((1u32 << start) | ((1u32 << start) - 1));
        for end in mask_iter(ends as u64) {
            let fresh = adj[end] & !(mask as u32) & above_start;
            for nb in mask_iter(fresh as u64) {
                reach[mask | 1 << nb] |= 1 << nb;
            }
        }
    }
    Ok(best.map(|(_, mask, end)| unwind(&reach, &adj, mask, end)))
}

fn unwind(reach: &[u32], adj: &[u32], mut mask: usize, mut end: usize) -> Vec<usize> {
    let mut seq = vec![end];
    while mask.count_ones() > 1 {
        let prev = mask ^ (1 << end);
        let u = (reach[prev] & adj[end]).trailing_zeros() as usize;
        debug_assert!(u < 32, "DP table inconsistent");
        seq.push(u);
        mask = prev;
        end = u;
    }
    seq.reverse();
    seq
}

fn check_cap(g: &ColoredBigraph, cap: usize) -> Result<(), RouteError> {
    if g.n() > cap {
        Err(RouteError::CapExceeded { n: g.n(), cap })
    } else {
        Ok(())
    }
}

/// Maximum-order monochromatic path over both colors. A path needs at least
/// one edge; an edgeless graph yields the empty path (order 0).
pub fn longest_mono_path_exact(g: &ColoredBigraph, cap: usize) -> Result<PathResult, RouteError> {
    check_cap(g, cap)?;
    let mut best = PathResult::none();
    for c in Color::BOTH {
        let block = ColorBlock::whole(g, c);
        let seq = longest_path_in(&block.view.graph)?;
        if seq.len() >= 2 && seq.len() > best.order {
            best = PathResult::new(c, block.translate(&seq));
        }
    }
    Ok(best)
}

/// Maximum-length monochromatic cycle over both colors, if any exists.
pub fn longest_mono_cycle_exact(
    g: &ColoredBigraph,
    cap: usize,
) -> Result<Option<CycleResult>, RouteError> {
    check_cap(g, cap)?;
    let mut best: Option<CycleResult> = None;
    for c in Color::BOTH {
        let block = ColorBlock::whole(g, c);
        if let Some(seq) = longest_cycle_in(&block.view.graph, 4)? {
            if best.as_ref().is_none_or(|b| seq.len() > b.length) {
                best = Some(CycleResult::new(c, block.translate(&seq)));
            }
        }
    }
    Ok(best)
}
