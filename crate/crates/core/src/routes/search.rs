//! Budgeted depth-first searches for long (not necessarily Hamiltonian)
//! cycles and paths in dense graphs.

use super::view::{mask_iter, SimpleGraphView};

/// A cycle on at least `min_len` vertices inside `within`, starting the search
/// from each vertex of `starts` in turn. Returns `None` if the search space is
/// exhausted or `budget` search nodes have been spent.
pub fn find_cycle_at_least(
    g: &SimpleGraphView,
    min_len: usize,
    within: u64,
    starts: u64,
    budget: u64,
) -> Option<Vec<usize>> {
    let mut dfs = LongDfs {
        g,
        min_len,
        closed: true,
        path: Vec::new(),
        nodes: 0,
        budget,
    };
    dfs.run(within, starts)
}

/// A path on at least `min_len` vertices inside `within`, with the same
/// budget semantics as [`find_cycle_at_least`].
pub fn find_path_at_least(
    g: &SimpleGraphView,
    min_len: usize,
    within: u64,
    starts: u64,
    budget: u64,
) -> Option<Vec<usize>> {
    let mut dfs = LongDfs {
        g,
        min_len,
        closed: false,
        path: Vec::new(),
        nodes: 0,
        budget,
    };
    dfs.run(within, starts)
}

struct LongDfs<'a> {
    g: &'a SimpleGraphView,
    min_len: usize,
    closed: bool,
    path: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl LongDfs<'_> {
    fn run(&mut self, within: u64, starts: u64) -> Option<Vec<usize>> {
        if (within.count_ones() as usize) < self.min_len {
            return None;
        }
        let mut order: Vec<usize> = mask_iter(starts & within).collect();
        order.sort_by_key(|&v| (self.g.neighbors(v) & within).count_ones());
        for s in order {
            let comp = self.g.reach(s, within);
            if (comp.count_ones() as usize) < self.min_len {
                continue;
            }
            self.path.clear();
            self.path.push(s);
            match self.go(s, s, comp & !(1 << s)) {
                Some(true) => return Some(std::mem::take(&mut self.path)),
                Some(false) => {}
                None => return None,
            }
        }
        None
    }

    /// `Some(true)` found, `Some(false)` dead end, `None` out of budget.
    fn go(&mut self, start: usize, v: usize, remaining: u64) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if self.path.len() >= self.min_len && (!self.closed || self.g.has_edge(v, start)) {
            return Some(true);
        }
        let reachable = self.g.reach(v, remaining | 1 << v);
        if self.path.len() + (reachable.count_ones() as usize) - 1 < self.min_len {
            return Some(false);
        }
        if self.closed && self.g.neighbors(start) & reachable == 0 {
            return Some(false);
        }
        let mut cands: Vec<(u32, usize)> = mask_iter(self.g.neighbors(v) & remaining)
            .map(|u| ((self.g.neighbors(u) & remaining).count_ones(), u))
            .collect();
        cands.sort_unstable();
        for (_, u) in cands {
            self.path.push(u);
            match self.go(start, u, remaining & !(1 << u)) {
                Some(false) => {
                    self.path.pop();
                }
                other => return other,
            }
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_long_cycle_in_dense_graph() {
        let mut g = SimpleGraphView::new(10);
        for u in 0..10 {
            for v in u + 1..10 {
                if (u + v) % 3 != 0 {
                    g.add_edge(u, v);
                }
            }
        }
        let c = find_cycle_at_least(&g, 8, g.all_mask(), g.all_mask(), 100_000).unwrap();
        assert!(c.len() >= 8);
        assert!(g.is_walk_valid(&c, true));
        let p = find_path_at_least(&g, 10, g.all_mask(), 1, 100_000).unwrap();
        assert!(g.is_walk_valid(&p, false));
        assert_eq!(p[0], 0);
    }

    #[test]
    fn gives_up_when_impossible() {
        let star = SimpleGraphView::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(
            find_cycle_at_least(&star, 3, star.all_mask(), star.all_mask(), 1000),
            None
        );
        assert_eq!(
            find_path_at_least(&star, 4, star.all_mask(), star.all_mask(), 1000),
            None
        );
    }
}
