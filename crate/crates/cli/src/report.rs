//! Law evaluation for `verify`, and the CSV / JSON report.

use std::fmt;

use bicolor::mono::{
    best_balanced_component, best_connected_matching, component_bound, cycle_bound, matching_bound,
};
use bicolor::routes::{longest_mono_cycle_exact, longest_mono_path_exact};
use bicolor::{ColoredBigraph, Rational};
use serde::Serialize;

use crate::source::{coloring_from_index, exhaustive_total, shard_range};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    /// path on `2⌈n/2⌉` vertices in every 2-colored `K_{n,n}`
    #[value(name = "path-gl", alias = "path-GL")]
    PathGl,
    /// cycle on `2⌊n/2⌋` vertices in 2-colored `K_{n,n}` (large n only)
    #[value(name = "cycle-cor1")]
    CycleCor1,
    MatchingBound,
    ComponentBound,
    /// cycle of order `(f(δ) − ε)n` (asymptotic)
    CycleBound,
}

impl Law {
    pub const ALL: [Law; 5] = [
        Law::PathGl,
        Law::CycleCor1,
        Law::MatchingBound,
        Law::ComponentBound,
        Law::CycleBound,
    ];

    /// Hard laws hold for every n; the others are report-only.
    pub fn is_hard(self) -> bool {
        matches!(self, Law::PathGl | Law::MatchingBound | Law::ComponentBound)
    }

    fn needs_oracle(self) -> bool {
        matches!(self, Law::PathGl | Law::CycleCor1 | Law::CycleBound)
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Law::PathGl => "path-gl",
            Law::CycleCor1 => "cycle-cor1",
            Law::MatchingBound => "matching-bound",
            Law::ComponentBound => "component-bound",
            Law::CycleBound => "cycle-bound",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// report-only law met
    Met,
    /// report-only law missed
    Below,
    /// the law is about complete graphs and this one is not
    NotApplicable,
    NotRequested,
}

impl Verdict {
    fn of(law: Law, ok: bool) -> Verdict {
        match (law.is_hard(), ok) {
            (true, true) => Verdict::Pass,
            (true, false) => Verdict::Fail,
            (false, true) => Verdict::Met,
            (false, false) => Verdict::Below,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub cap: usize,
    pub eps: Rational,
}

/// One instance. Rationals are written exactly as `p/q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub source: String,
    pub n: usize,
    pub min_degree: usize,
    pub delta: String,
    pub matching_bound: String,
    pub matching: usize,
    pub component_bound: String,
    pub component_min_side: usize,
    pub longest_path: Option<usize>,
    pub longest_cycle: Option<usize>,
    pub f_delta_n: String,
    pub cycle_minus_f_delta_n: Option<String>,
    pub eps: String,
    pub path_gl: Verdict,
    pub cycle_cor1: Verdict,
    pub matching_bound_law: Verdict,
    pub component_bound_law: Verdict,
    pub cycle_bound_law: Verdict,
}

impl Row {
    pub fn verdict(&self, law: Law) -> Verdict {
        match law {
            Law::PathGl => self.path_gl,
            Law::CycleCor1 => self.cycle_cor1,
            Law::MatchingBound => self.matching_bound_law,
            Law::ComponentBound => self.component_bound_law,
            Law::CycleBound => self.cycle_bound_law,
        }
    }
}

fn int(v: usize) -> Rational {
    Rational::from_integer(v as i64)
}

pub fn evaluate(
    source: &str,
    g: &ColoredBigraph,
    laws: &[Law],
    cfg: &VerifyConfig,
) -> Result<Row, CliError> {
    let n = g.n();
    let d = g.min_degree();
    let delta = Rational::new(d as i64, n as i64);
    let internal = |e: bicolor::mono::MonoError| CliError::internal(e.to_string());
    let mb = matching_bound(delta, n).map_err(internal)?;
    let cb = component_bound(delta, n).map_err(internal)?;
    let f_n = cycle_bound(delta).map_err(internal)? * int(n);
    let matching = best_connected_matching(g).size();
    let component = best_balanced_component(g).map_or(0, |h| h.min_side());

    let wants = |l: Law| laws.contains(&l);
    let oracle = laws.iter().any(|l| l.needs_oracle());
    if oracle && n > cfg.cap {
        return Err(CliError::usage(format!(
            "{source}: n = {n} exceeds --cap {} needed by the exact laws",
            cfg.cap
        )));
    }
    let cap_err = |e: bicolor::routes::RouteError| CliError::usage(format!("{source}: {e}"));
    let (path, cycle) = if oracle {
        let p = longest_mono_path_exact(g, cfg.cap).map_err(cap_err)?.order;
        let c = longest_mono_cycle_exact(g, cfg.cap)
            .map_err(cap_err)?
            .map_or(0, |c| c.length);
        (Some(p), Some(c))
    } else {
        (None, None)
    };

    let complete = g.is_complete();
    let judge = |law: Law, ok: Option<bool>, needs_complete: bool| {
        if !wants(law) {
            Verdict::NotRequested
        } else if needs_complete && !complete {
            Verdict::NotApplicable
        } else {
            Verdict::of(law, ok.expect("oracle value computed for requested law"))
        }
    };
    Ok(Row {
        source: source.to_string(),
        n,
        min_degree: d,
        delta: delta.to_string(),
        matching_bound: mb.to_string(),
        matching,
        component_bound: cb.to_string(),
        component_min_side: component,
        longest_path: path,
        longest_cycle: cycle,
        f_delta_n: f_n.to_string(),
        cycle_minus_f_delta_n: cycle.map(|c| (int(c) - f_n).to_string()),
        eps: cfg.eps.to_string(),
        path_gl: judge(Law::PathGl, path.map(|p| p >= 2 * n.div_ceil(2)), true),
        cycle_cor1: judge(Law::CycleCor1, cycle.map(|c| c >= 2 * (n / 2)), true),
        matching_bound_law: judge(Law::MatchingBound, Some(int(matching) >= mb.ceil()), false),
        component_bound_law: judge(
            Law::ComponentBound,
            Some(int(component) >= cb.ceil()),
            false,
        ),
        cycle_bound_law: judge(
            Law::CycleBound,
            cycle.map(|c| int(c) >= f_n - cfg.eps * int(n)),
            false,
        ),
    })
}

/// Tallies of an exhaustive run over all single-colored `K_{n,n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExhaustiveSummary {
    pub n: usize,
    pub colorings: u64,
    pub shards: usize,
    /// colorings actually visited, summed over shards
    pub visited: u64,
    pub path_pass: u64,
    pub path_fail: u64,
    pub cycle_met: u64,
    pub cycle_below: u64,
    pub min_path: Option<usize>,
    pub min_cycle: Option<usize>,
    /// lowest failing index per hard law, for reproduction
    pub first_path_failure: Option<u64>,
}

impl ExhaustiveSummary {
    fn empty(n: usize, colorings: u64, shards: usize) -> Self {
        ExhaustiveSummary {
            n,
            colorings,
            shards,
            visited: 0,
            path_pass: 0,
            path_fail: 0,
            cycle_met: 0,
            cycle_below: 0,
            min_path: None,
            min_cycle: None,
            first_path_failure: None,
        }
    }

    /// Associative and commutative, so shard order does not matter.
    fn merge(mut self, o: &ExhaustiveSummary) -> Self {
        self.visited += o.visited;
        self.path_pass += o.path_pass;
        self.path_fail += o.path_fail;
        self.cycle_met += o.cycle_met;
        self.cycle_below += o.cycle_below;
        let min = |a: Option<usize>, b: Option<usize>| match (a, b) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.min_path = min(self.min_path, o.min_path);
        self.min_cycle = min(self.min_cycle, o.min_cycle);
        self.first_path_failure = match (self.first_path_failure, o.first_path_failure) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self
    }

    pub fn hard_failures(&self) -> u64 {
        self.path_fail
    }
}

/// Checks the complete-graph laws on every coloring of `K_{n,n}`, split
/// into `jobs` contiguous shards run on separate threads.
pub fn run_exhaustive(
    n: usize,
    laws: &[Law],
    cap: usize,
    jobs: usize,
) -> Result<ExhaustiveSummary, CliError> {
    let total = exhaustive_total(n)?;
    if n > cap {
        return Err(CliError::usage(format!(
            "exhaustive:{n} exceeds --cap {cap}"
        )));
    }
    let (want_path, want_cycle) = (laws.contains(&Law::PathGl), laws.contains(&Law::CycleCor1));
    let shards = jobs.max(1);
    let run_shard = |k: usize| {
        let mut s = ExhaustiveSummary::empty(n, total, shards);
        for index in shard_range(total, shards, k) {
            let g = coloring_from_index(n, index);
            s.visited += 1;
            if want_path {
                let p = longest_mono_path_exact(&g, cap)
                    .expect("n within cap")
                    .order;
                s.min_path = Some(s.min_path.map_or(p, |m| m.min(p)));
                if p >= 2 * n.div_ceil(2) {
                    s.path_pass += 1;
                } else {
                    s.path_fail += 1;
                    s.first_path_failure.get_or_insert(index);
                }
            }
            if want_cycle {
                let c = longest_mono_cycle_exact(&g, cap)
                    .expect("n within cap")
                    .map_or(0, |c| c.length);
                s.min_cycle = Some(s.min_cycle.map_or(c, |m| m.min(c)));
                if c >= 2 * (n / 2) {
                    s.cycle_met += 1;
                } else {
                    s.cycle_below += 1;
                }
            }
        }
        s
    };
    let parts: Vec<ExhaustiveSummary> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..shards)
            .map(|k| scope.spawn(move || run_shard(k)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("shard thread panicked"))
            .collect()
    });
    let merged = parts
        .iter()
        .fold(ExhaustiveSummary::empty(n, total, shards), |acc, p| {
            acc.merge(p)
        });
    if merged.visited != total {
        return Err(CliError::internal(format!(
            "shards visited {} colorings, expected {total}",
            merged.visited
        )));
    }
    Ok(merged)
}

/// Evaluates `items` on `jobs` threads; the output keeps the input order.
pub fn evaluate_all(
    items: &[(String, ColoredBigraph)],
    laws: &[Law],
    cfg: &VerifyConfig,
    jobs: usize,
) -> Result<Vec<Row>, CliError> {
    let jobs = jobs.max(1).min(items.len().max(1));
    let chunk = items.len().div_ceil(jobs).max(1);
    let results: Vec<Result<Vec<Row>, CliError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|(s, g)| evaluate(s, g, laws, cfg))
                        .collect()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker thread panicked"))
            .collect()
    });
    let mut rows = Vec::with_capacity(items.len());
    for r in results {
        rows.extend(r?);
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct LawTally {
    pub pass: usize,
    pub fail: usize,
    pub met: usize,
    pub below: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub laws: Vec<Law>,
    pub rows: Vec<Row>,
    pub exhaustive: Vec<ExhaustiveSummary>,
}

impl VerifyReport {
    pub fn tally(&self, law: Law) -> LawTally {
        let mut t = LawTally::default();
        for r in &self.rows {
            match r.verdict(law) {
                Verdict::Pass => t.pass += 1,
                Verdict::Fail => t.fail += 1,
                Verdict::Met => t.met += 1,
                Verdict::Below => t.below += 1,
                Verdict::NotApplicable => t.not_applicable += 1,
                Verdict::NotRequested => {}
            }
        }
        t
    }

    pub fn hard_failures(&self) -> usize {
        let rows: usize = Law::ALL.iter().map(|&l| self.tally(l).fail).sum();
        let ex: u64 = self.exhaustive.iter().map(|e| e.hard_failures()).sum();
        rows + ex as usize
    }

    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        if self.rows.is_empty() {
            // header only, so downstream tools see the columns
            w.write_record(ROW_COLUMNS)
                .map_err(|e| CliError::internal(e.to_string()))?;
        }
        for r in &self.rows {
            w.serialize(r)
                .map_err(|e| CliError::internal(e.to_string()))?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| CliError::internal(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| CliError::internal(e.to_string()))
    }

    pub fn summary_json(&self) -> serde_json::Value {
        let laws: serde_json::Map<String, serde_json::Value> = self
            .laws
            .iter()
            .map(|&l| {
                let mut v = serde_json::to_value(self.tally(l)).expect("plain struct");
                v["hard"] = l.is_hard().into();
                (l.to_string(), v)
            })
            .collect();
        serde_json::json!({
            "instances": self.rows.len(),
            "hard_failures": self.hard_failures(),
            "laws": laws,
            "exhaustive": self.exhaustive,
        })
    }
}

const ROW_COLUMNS: [&str; 18] = [
    "source",
    "n",
    "min_degree",
    "delta",
    "matching_bound",
    "matching",
    "component_bound",
    "component_min_side",
    "longest_path",
    "longest_cycle",
    "f_delta_n",
    "cycle_minus_f_delta_n",
    "eps",
    "path_gl",
    "cycle_cor1",
    "matching_bound_law",
    "component_bound_law",
    "cycle_bound_law",
];
