#![allow(dead_code)]

use bicolor::ColoredBigraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each pair is red with probability `pr` and, independently, blue with `pb`.
pub fn random_graph(n: usize, pr: f64, pb: f64, rng: &mut ChaCha8Rng) -> ColoredBigraph {
    ColoredBigraph::from_fn(n, |_, _| (rng.gen_bool(pr), rng.gen_bool(pb))).unwrap()
}

/// A coloring of `K_{n,n}` from the bits of `code` (bit `x·n + y` set = red).
pub fn coloring_from_code(n: usize, code: u64) -> ColoredBigraph {
    ColoredBigraph::from_fn(n, |x, y| {
        let red = code >> (x * n + y) & 1 == 1;
        (red, !red)
    })
    .unwrap()
}
