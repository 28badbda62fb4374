//! Where instances come from: generator families, graph files, seeded random
//! colorings, and exhaustive enumeration of single-colored `K_{n,n}`.

use std::fmt;
use std::ops::Range;
use std::path::PathBuf;
use std::str::FromStr;

use bicolor::families::{Family, FamilySpec};
use bicolor::{ColoredBigraph, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::CliError;

/// Attempts before `min_degree_floor` rejection sampling gives up.
pub const FLOOR_RETRIES: u32 = 1000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomSpec {
    pub n: usize,
    pub red_prob: Rational,
    pub blue_prob: Rational,
    pub min_degree_floor: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceSource {
    Family(FamilySpec),
    File(PathBuf),
    Random(RandomSpec),
}

impl InstanceSource {
    pub fn load(&self) -> Result<ColoredBigraph, CliError> {
        match self {
            InstanceSource::Family(spec) => spec
                .generate()
                .map(|(g, _)| g)
                .map_err(|e| CliError::usage(format!("{spec}: {e}"))),
            InstanceSource::File(path) => read_graph(path),
            InstanceSource::Random(r) => random_with_floor(r),
        }
    }
}

impl fmt::Display for InstanceSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceSource::Family(spec) => write!(f, "{spec}"),
            InstanceSource::File(p) => write!(f, "{}", p.display()),
            InstanceSource::Random(r) => write!(
                f,
                "random(n={}, red={}, blue={}, floor={}, seed={})",
                r.n, r.red_prob, r.blue_prob, r.min_degree_floor, r.seed
            ),
        }
    }
}

pub fn read_graph(path: &std::path::Path) -> Result<ColoredBigraph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    ColoredBigraph::parse_canonical(&text)
        .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))
}

/// One item of a `verify` source list, before expansion into instances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceArg {
    /// `family:<name>:<n>[:<k>]`
    Family(FamilySpec),
    /// `grid:<max_n>`, every valid family spec up to `max_n`
    Grid(usize),
    /// `file:<path>` or a bare path
    File(PathBuf),
    /// `random:<n>:<red>:<blue>[:<floor>]`, seeds taken from the command line
    Random {
        n: usize,
        red_prob: Rational,
        blue_prob: Rational,
        floor: usize,
    },
    /// `exhaustive:<n>`, all `2^(n²)` single-colored `K_{n,n}`
    Exhaustive(usize),
}

fn parse_num<T: FromStr>(s: &str, what: &str) -> Result<T, String> {
    s.trim().parse().map_err(|_| format!("bad {what} `{s}`"))
}

pub fn parse_prob(s: &str) -> Result<Rational, String> {
    let p: Rational = parse_num(s, "probability")?;
    if p < Rational::from_integer(0) || p > Rational::from_integer(1) {
        return Err(format!("probability {p} is outside [0, 1]"));
    }
    Ok(p)
}

pub fn parse_family(name: &str, n: &str, k: Option<&str>) -> Result<FamilySpec, String> {
    let family: Family = name.parse()?;
    let n = parse_num(n, "n")?;
    let k = match k {
        Some(k) => parse_num(k, "k")?,
        None if family.uses_k() => return Err(format!("{family} needs k")),
        None => 0,
    };
    Ok(FamilySpec::new(family, n, k))
}

impl FromStr for SourceArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["family", name, n] => parse_family(name, n, None).map(SourceArg::Family),
            ["family", name, n, k] => parse_family(name, n, Some(k)).map(SourceArg::Family),
            ["grid", n] => parse_num(n, "max n").map(SourceArg::Grid),
            ["exhaustive", n] => parse_num(n, "n").map(SourceArg::Exhaustive),
            ["random", n, r, b] | ["random", n, r, b, _] => Ok(SourceArg::Random {
                n: parse_num(n, "n")?,
                red_prob: parse_prob(r)?,
                blue_prob: parse_prob(b)?,
                floor: parts
                    .get(4)
                    .map_or(Ok(0), |f| parse_num(f, "degree floor"))?,
            }),
            ["file", rest @ ..] if !rest.is_empty() => Ok(SourceArg::File(rest.join(":").into())),
            [kind, ..] if ["family", "grid", "exhaustive", "random"].contains(kind) => {
                Err(format!("malformed source `{s}`"))
            }
            _ => Ok(SourceArg::File(s.into())),
        }
    }
}

/// `p` as `(numer, denom)` fitting `gen_ratio`.
fn ratio_u32(p: Rational) -> (u32, u32) {
    let (num, den) = (*p.numer(), *p.denom());
    (num as u32, den as u32)
}

fn draw(rng: &mut ChaCha8Rng, p: Rational) -> bool {
    let (num, den) = ratio_u32(p);
    rng.gen_ratio(num, den)
}

/// ChaCha8 keyed by `seed`, stream `stream`; pairs are visited in `(x, y)`
/// order and each draws red then blue.
fn coloring_from_stream(
    n: usize,
    red: Rational,
    blue: Rational,
    seed: u64,
    stream: u64,
) -> Result<ColoredBigraph, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    ColoredBigraph::from_fn(n, |_, _| {
        let r = draw(&mut rng, red);
        let b = draw(&mut rng, blue);
        (r, b)
    })
    .map_err(|e| CliError::usage(e.to_string()))
}

/// Each pair independently red with `red_prob` and blue with `blue_prob`.
pub fn random_coloring(
    n: usize,
    red_prob: Rational,
    blue_prob: Rational,
    seed: u64,
) -> Result<ColoredBigraph, CliError> {
    for p in [red_prob, blue_prob] {
        if !(Rational::from_integer(0)..=Rational::from_integer(1)).contains(&p)
            || *p.denom() > u32::MAX as i64
        {
            return Err(CliError::usage(format!(
                "probability {p} must be in [0, 1] with a 32-bit denominator"
            )));
        }
    }
    coloring_from_stream(n, red_prob, blue_prob, seed, 0)
}

/// [`random_coloring`] retried on fresh streams until `δ(G) ≥ floor`.
pub fn random_with_floor(spec: &RandomSpec) -> Result<ColoredBigraph, CliError> {
    let first = random_coloring(spec.n, spec.red_prob, spec.blue_prob, spec.seed)?;
    if first.min_degree() >= spec.min_degree_floor {
        return Ok(first);
    }
    for stream in 1..FLOOR_RETRIES as u64 {
        let g = coloring_from_stream(spec.n, spec.red_prob, spec.blue_prob, spec.seed, stream)?;
        if g.min_degree() >= spec.min_degree_floor {
            return Ok(g);
        }
    }
    Err(CliError::usage(format!(
        "no sample with minimum degree >= {} after {FLOOR_RETRIES} attempts",
        spec.min_degree_floor
    )))
}

/// The single-colored `K_{n,n}` whose pair `(x, y)` is red iff bit `x·n + y`
/// of `index` is set.
pub fn coloring_from_index(n: usize, index: u64) -> ColoredBigraph {
    ColoredBigraph::from_fn(n, |x, y| {
        let red = index >> (x * n + y) & 1 == 1;
        (red, !red)
    })
    .expect("n checked by caller")
}

pub fn exhaustive_total(n: usize) -> Result<u64, CliError> {
    if n == 0 || n * n > 36 {
        return Err(CliError::usage(format!(
            "exhaustive enumeration supports 1 <= n <= 6, got {n}"
        )));
    }
    Ok(1u64 << (n * n))
}

/// Contiguous index range of shard `k` out of `shards`.
pub fn shard_range(total: u64, shards: usize, k: usize) -> Range<u64> {
    let shards = shards.max(1) as u64;
    let k = k as u64;
    let lo = total * k / shards;
    let hi = total * (k + 1) / shards;
    lo..hi
}
