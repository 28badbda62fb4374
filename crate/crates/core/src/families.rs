//! The four tightness constructions and the parameters each one claims.
//!
//! Vertices are laid out block by block in index order, so `X_1` is always a
//! prefix of `0..n`; the `*_parts` helpers expose the blocks for callers that
//! need them (witness construction, tests).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Color, ColoredBigraph, GraphError};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    LargeDeg,
    MediumDeg,
    SmallDeg,
    CycleExtremal,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::LargeDeg,
        Family::MediumDeg,
        Family::SmallDeg,
        Family::CycleExtremal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::LargeDeg => "large-deg",
            Family::MediumDeg => "medium-deg",
            Family::SmallDeg => "small-deg",
            Family::CycleExtremal => "cycle-extremal",
        }
    }

    pub fn uses_k(self) -> bool {
        matches!(self, Family::MediumDeg | Family::SmallDeg)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family `{s}` (expected large-deg, medium-deg, small-deg or cycle-extremal)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    #[serde(default)]
    pub k: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, k: usize) -> Self {
        FamilySpec { family, n, k }
    }

    /// Every valid `(n, k)` of every family with `n ≤ max_n`.
    pub fn grid(max_n: usize) -> Vec<FamilySpec> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            out.push(FamilySpec::new(Family::LargeDeg, n, 0));
            if n % 4 == 0 {
                out.extend((0..=n / 12).map(|k| FamilySpec::new(Family::MediumDeg, n, k)));
            }
            out.extend((0..=n / 3).map(|k| FamilySpec::new(Family::SmallDeg, n, k)));
            if n % 2 == 1 && n >= 3 {
                out.push(FamilySpec::new(Family::CycleExtremal, n, 0));
            }
        }
        out
    }

    pub fn generate(&self) -> Result<(ColoredBigraph, FamilyClaims), FamilyError> {
        match self.family {
            Family::LargeDeg => gen_large_deg(self.n),
            Family::MediumDeg => gen_medium_deg(self.n, self.k),
            Family::SmallDeg => gen_small_deg(self.n, self.k),
            Family::CycleExtremal => gen_cycle_extremal(self.n),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family.uses_k() {
            write!(f, "{}({}, {})", self.family, self.n, self.k)
        } else {
            write!(f, "{}({})", self.family, self.n)
        }
    }
}

/// Minimum degree and longest monochromatic path/cycle (vertex counts) as the
/// construction states them. A cycle value below 4 is reported as 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyClaims {
    pub min_degree: usize,
    pub longest_mono_path: usize,
    pub longest_mono_cycle: usize,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("n must be divisible by 4, got {0}")]
    NotDivisibleBy4(usize),
    #[error("k = {k} exceeds the limit {limit} for n = {n}")]
    KTooLarge { k: usize, n: usize, limit: String },
    #[error("n must be odd, got {0}")]
    NotOdd(usize),
    #[error("n must be at least {min}, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn cycle_claim(len: usize) -> usize {
    if len >= 4 {
        len
    } else {
        0
    }
}

/// Consecutive index blocks of the given sizes.
fn blocks<const K: usize>(sizes: [usize; K]) -> [VertexSet; K] {
    let mut lo = 0;
    sizes.map(|s| {
        let b = VertexSet::range(lo, lo + s);
        lo += s;
        b
    })
}

fn paint(g: &mut ColoredBigraph, xs: VertexSet, ys: VertexSet, c: Color) {
    for x in xs {
        for y in ys {
            g.add_edge(x, y, c);
        }
    }
}

/// `(X_1, X_2)`, `(Y_1, Y_2)` of the large-degree construction, with
/// `|X_1| = |Y_1| = ⌈n/2⌉`.
pub fn large_deg_parts(n: usize) -> ([VertexSet; 2], [VertexSet; 2]) {
    let b = blocks([n.div_ceil(2), n / 2]);
    (b, b)
}

/// `K_{n,n}` with `[X_1,Y_1]`, `[X_2,Y_2]` blue and the cross pairs red.
pub fn gen_large_deg(n: usize) -> Result<(ColoredBigraph, FamilyClaims), FamilyError> {
    if n == 0 {
        return Err(FamilyError::TooSmall { n, min: 1 });
    }
    let mut g = ColoredBigraph::empty(n)?;
    let ([x1, x2], [y1, y2]) = large_deg_parts(n);
    paint(&mut g, x1, y1, Color::Blue);
    paint(&mut g, x2, y2, Color::Blue);
    paint(&mut g, x1, y2, Color::Red);
    paint(&mut g, x2, y1, Color::Red);
    let path = 2 * n.div_ceil(2);
    Ok((
        g,
        FamilyClaims {
            min_degree: n,
            longest_mono_path: path,
            longest_mono_cycle: cycle_claim(path),
        },
    ))
}

/// `[X_1..X_4]`, `[Y_1..Y_4]` of the medium-degree construction.
pub fn medium_deg_parts(n: usize, k: usize) -> ([VertexSet; 4], [VertexSet; 4]) {
    let (big, small) = (n / 4 + k, n / 4 - k);
    (
        blocks([big, big, small, small]),
        blocks([small, small, big, big]),
    )
}

/// The eight-block construction with minimum degree `3n/4 − k`; needs `4 | n`
/// and `k ≤ n/12`.
pub fn gen_medium_deg(n: usize, k: usize) -> Result<(ColoredBigraph, FamilyClaims), FamilyError> {
    if n == 0 || !n.is_multiple_of(4) {
        return Err(FamilyError::NotDivisibleBy4(n));
    }
    if 12 * k > n {
        return Err(FamilyError::KTooLarge {
            k,
            n,
            limit: "n/12".into(),
        });
    }
    let mut g = ColoredBigraph::empty(n)?;
    let ([x1, x2, x3, x4], [y1, y2, y3, y4]) = medium_deg_parts(n, k);
    paint(&mut g, x1.union(x2), y1.union(y2), Color::Blue);
    paint(&mut g, x3.union(x4), y3.union(y4), Color::Blue);
    paint(&mut g, x1, y3, Color::Red);
    paint(&mut g, x2, y4, Color::Red);
    paint(&mut g, x3, y1, Color::Red);
    paint(&mut g, x4, y2, Color::Red);
    let path = n - 4 * k;
    Ok((
        g,
        FamilyClaims {
            min_degree: 3 * n / 4 - k,
            longest_mono_path: path,
            longest_mono_cycle: cycle_claim(path),
        },
    ))
}

/// `[X_1, X_2, X_3]`, `[Y_1, Y_2, Y_3]` of the small-degree construction.
pub fn small_deg_parts(n: usize, k: usize) -> ([VertexSet; 3], [VertexSet; 3]) {
    let b = blocks([k.div_ceil(2), k / 2, n - k]);
    (b, b)
}

/// The six-block construction with minimum degree `k`; needs `k ≤ n/3`.
pub fn gen_small_deg(n: usize, k: usize) -> Result<(ColoredBigraph, FamilyClaims), FamilyError> {
    if n == 0 {
        return Err(FamilyError::TooSmall { n, min: 1 });
    }
    if 3 * k > n {
        return Err(FamilyError::KTooLarge {
            k,
            n,
            limit: "n/3".into(),
        });
    }
    let mut g = ColoredBigraph::empty(n)?;
    let ([x1, x2, x3], [y1, y2, y3]) = small_deg_parts(n, k);
    paint(&mut g, x1, y2, Color::Blue);
    paint(&mut g, x2, y3, Color::Blue);
    paint(&mut g, x3, y1, Color::Blue);
    paint(&mut g, x1, y3, Color::Red);
    paint(&mut g, x2, y1, Color::Red);
    paint(&mut g, x3, y2, Color::Red);
    let path = 2 * k.div_ceil(2);
    Ok((
        g,
        FamilyClaims {
            min_degree: k,
            longest_mono_path: path,
            longest_mono_cycle: cycle_claim(path),
        },
    ))
}

/// `(X_1, X_2, x*)` and `(Y_1, Y_2, y*)` of the odd cycle-extremal construction.
pub fn cycle_extremal_parts(n: usize) -> ([VertexSet; 2], usize) {
    let m = n / 2;
    (blocks([m, m]), 2 * m)
}

/// `K_{n,n}` for odd `n ≥ 3` whose longest monochromatic cycle has `2⌊n/2⌋`
/// vertices. The path claim `2n − 1` comes from joining the two blue blocks
/// through `x*` (symmetrically the red ones through `y*`).
pub fn gen_cycle_extremal(n: usize) -> Result<(ColoredBigraph, FamilyClaims), FamilyError> {
    if n.is_multiple_of(2) {
        return Err(FamilyError::NotOdd(n));
    }
    if n < 3 {
        return Err(FamilyError::TooSmall { n, min: 3 });
    }
    let mut g = ColoredBigraph::empty(n)?;
    let ([p1, p2], star) = cycle_extremal_parts(n);
    paint(&mut g, p1, p1, Color::Red);
    paint(&mut g, p2, p2, Color::Red);
    paint(&mut g, p1, p2, Color::Blue);
    paint(&mut g, p2, p1, Color::Blue);
    paint(
        &mut g,
        VertexSet::singleton(star),
        VertexSet::full(n),
        Color::Blue,
    );
    paint(&mut g, p1.union(p2), VertexSet::singleton(star), Color::Red);
    Ok((
        g,
        FamilyClaims {
            min_degree: n,
            longest_mono_path: 2 * n - 1,
            longest_mono_cycle: cycle_claim(2 * (n / 2)),
        },
    ))
}
