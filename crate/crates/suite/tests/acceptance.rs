//! Acceptance suite: one PASS/FAIL line per criterion. Tolerances are
//! pinned below; every criterion is zero-tolerance except the report-only
//! curve, which still checks the design points exactly.

use std::time::Instant;

use bicolor::extremal::{verify_witness, ExtremalWitness};
use bicolor::families::{gen_large_deg, large_deg_parts, Family, FamilySpec};
use bicolor::mono::{matching_or_witness, StabilityOutcome};
use bicolor::routes::{
    berge_check, erdos_gallai_cycle, ham_path_between, longest_mono_cycle_exact,
    longest_mono_path_exact, BipartiteView, SimpleGraphView,
};
use bicolor::{Color, ColoredBigraph, Rational, Side};
use bicolor_cli::certcheck::check_certificate;
use bicolor_cli::commands::run_captured;
use bicolor_cli::report::{evaluate, run_exhaustive, Law, VerifyConfig};
use bicolor_cli::source::random_coloring;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use serde_json::{json, Value};

const CAP: usize = 12;
/// Generator grid bound for criteria 3, 4, 5 and 10.
const GRID_N: usize = 12;
const RANDOM_INSTANCES: u64 = 500;
const RANDOM_MAX_N: usize = 10;
const PERTURBATIONS: u64 = 20;
const EG_GRAPHS: usize = 1000;
const BERGE_GRAPHS: usize = 200;
/// Allowed violations for every zero-tolerance criterion.
const TOLERANCE: usize = 0;

/// `bicolor <args>` run in-process.
struct Run {
    code: i32,
    stderr: String,
}

fn bicolor(args: &[&str]) -> Run {
    let (code, _, stderr) = run_captured(args);
    Run { code, stderr }
}

/// The block witness of `gen_large_deg(n)`: `X' = X1`, `Y1`, `Y2`.
fn canonical_witness_json(n: usize) -> Value {
    let ([x1, _], [y1, y2]) = large_deg_parts(n);
    json!({"orientation": "x", "xprime": x1, "y1": y1, "y2": y2, "eta": "0"})
}

fn write_json(path: &std::path::Path, v: &Value) {
    std::fs::write(path, serde_json::to_string_pretty(v).unwrap()).unwrap();
}

struct Outcome {
    pass: bool,
    detail: String,
    notes: Vec<String>,
}

impl Outcome {
    #[allow(clippy::absurd_extreme_comparisons)]
    fn new(failures: usize, detail: String) -> Self {
        Outcome {
            pass: failures <= TOLERANCE,
            detail,
            notes: Vec::new(),
        }
    }
}

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn q(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

fn exhaustive_paths() -> Outcome {
    let mut visited = 0;
    let mut fails = 0;
    let mut notes = Vec::new();
    for n in [2, 3, 4] {
        let s = run_exhaustive(n, &[Law::PathGl], CAP, jobs()).expect("exhaustive run");
        visited += s.visited;
        fails += s.path_fail as usize;
        notes.push(format!(
            "n = {n}: {} colorings, shortest longest path {:?}",
            s.visited, s.min_path
        ));
    }
    let mut o = Outcome::new(
        fails,
        format!("{visited} colorings, {fails} below 2*ceil(n/2)"),
    );
    o.notes = notes;
    o
}

fn exhaustive_cycles() -> Outcome {
    let s = run_exhaustive(4, &[Law::CycleCor1], CAP, jobs()).expect("exhaustive run");
    let fails = s.cycle_below as usize;
    Outcome::new(
        fails,
        format!(
            "{} colorings of K_4,4, shortest longest cycle {:?}, {fails} below 4",
            s.visited, s.min_cycle
        ),
    )
}

fn generator_claims() -> Outcome {
    let mut mismatches = Vec::new();
    let specs = FamilySpec::grid(GRID_N);
    for spec in &specs {
        let (g, claims) = spec.generate().unwrap();
        let path = longest_mono_path_exact(&g, CAP).unwrap().order;
        let cycle = longest_mono_cycle_exact(&g, CAP)
            .unwrap()
            .map_or(0, |c| c.length);
        let mut bad = Vec::new();
        if g.min_degree() != claims.min_degree {
            bad.push(format!(
                "min degree {} vs claim {}",
                g.min_degree(),
                claims.min_degree
            ));
        }
        if path != claims.longest_mono_path {
            bad.push(format!("path {path} vs claim {}", claims.longest_mono_path));
        }
        if cycle != claims.longest_mono_cycle {
            bad.push(format!(
                "cycle {cycle} vs claim {}",
                claims.longest_mono_cycle
            ));
        }
        if !bad.is_empty() {
            mismatches.push(format!("{spec}: {}", bad.join(", ")));
        }
    }
    let mut o = Outcome::new(
        mismatches.len(),
        format!(
            "{} specs with n <= {GRID_N}, {} disagree with the oracle",
            specs.len(),
            mismatches.len()
        ),
    );
    o.notes = mismatches;
    o
}

/// Generator outputs with n <= 12 and seeded random instances with n <= 10.
fn law_instances() -> Vec<(String, ColoredBigraph)> {
    let mut items: Vec<(String, ColoredBigraph)> = FamilySpec::grid(GRID_N)
        .into_iter()
        .map(|s| (s.to_string(), s.generate().unwrap().0))
        .collect();
    let probs = [q(1, 4), q(1, 2), q(3, 4), q(1, 1), q(0, 1)];
    for seed in 0..RANDOM_INSTANCES {
        let n = 1 + (seed as usize % RANDOM_MAX_N);
        let red = probs[(seed / 10) as usize % 4];
        let blue = probs[(seed / 40) as usize % probs.len()];
        let g = random_coloring(n, red, blue, seed).unwrap();
        items.push((
            format!("random(n={n}, red={red}, blue={blue}, seed={seed})"),
            g,
        ));
    }
    items
}

fn law_check(items: &[(String, ColoredBigraph)], law: Law) -> Outcome {
    let cfg = VerifyConfig {
        cap: CAP,
        eps: q(0, 1),
    };
    let mut failures = Vec::new();
    let mut tight_fraction = 0;
    for (name, g) in items {
        let row = evaluate(name, g, &[law], &cfg).unwrap();
        if row.verdict(law) != bicolor_cli::report::Verdict::Pass {
            failures.push(name.clone());
        }
        let (bound, measured) = match law {
            Law::MatchingBound => (&row.matching_bound, row.matching),
            _ => (&row.component_bound, row.component_min_side),
        };
        let b: Rational = bound.parse().unwrap();
        if !b.is_integer() && Rational::from_integer(measured as i64) == b.ceil() {
            tight_fraction += 1;
        }
    }
    let mut o = Outcome::new(
        failures.len(),
        format!(
            "{} instances, {} below the ceiling of the bound",
            items.len(),
            failures.len()
        ),
    );
    o.notes.push(format!(
        "compared against ceil(bound); {tight_fraction} instances sit exactly at the ceiling of a fractional bound"
    ));
    o.notes.extend(failures);
    o
}

fn stability() -> Outcome {
    let mut fails = Vec::new();
    for n in [6usize, 8, 10, 12] {
        let eta = q(1, 4 * n as i64);
        let (g, _) = gen_large_deg(n).unwrap();
        match matching_or_witness(&g, eta) {
            Ok(StabilityOutcome::Witness(w)) => {
                if !verify_witness(&g, &w.with_eta(eta * 2)).unwrap_or(false) {
                    fails.push(format!("large-deg({n}): witness rejected at 2 eta"));
                }
            }
            other => fails.push(format!("large-deg({n}): expected a witness, got {other:?}")),
        }
        let both = ColoredBigraph::from_fn(n, |_, _| (true, true)).unwrap();
        let want = ((q(1, 2) + eta) * Rational::from_integer(n as i64))
            .ceil()
            .to_integer() as usize;
        match matching_or_witness(&both, eta) {
            Ok(StabilityOutcome::Matching(m)) if m.size() >= want => {}
            other => fails.push(format!(
                "both colors K_{n},{n}: expected a matching of size >= {want}, got {other:?}"
            )),
        }
    }
    let mut o = Outcome::new(
        fails.len(),
        format!("n in {{6, 8, 10, 12}}, {} failures", fails.len()),
    );
    o.notes = fails;
    o
}

/// Routes `graph` through the binary with the canonical witness, then checks
/// the certificate with both `check-cert` and the in-process checker.
fn route_once(
    dir: &std::path::Path,
    tag: &str,
    source: &str,
    g: &ColoredBigraph,
) -> Result<Value, String> {
    let w = dir.join(format!("{tag}.witness.json"));
    let cert_path = dir.join(format!("{tag}.cert.json"));
    write_json(&w, &canonical_witness_json(g.n()));
    let o = bicolor(&[
        "route",
        source,
        "--witness",
        w.to_str().unwrap(),
        "--gamma",
        "1/4",
        "--eta",
        "0",
        "--out",
        cert_path.to_str().unwrap(),
    ]);
    if o.code != 0 {
        return Err(format!(
            "{tag}: route exited {}: {}",
            o.code,
            o.stderr.trim()
        ));
    }
    let o = bicolor(&["check-cert", source, cert_path.to_str().unwrap()]);
    if o.code != 0 {
        return Err(format!(
            "{tag}: check-cert exited {}: {}",
            o.code,
            o.stderr.trim()
        ));
    }
    let cert: Value = serde_json::from_str(&std::fs::read_to_string(&cert_path).unwrap()).unwrap();
    check_certificate(g, &cert).map_err(|e| format!("{tag}: {e}"))?;
    Ok(cert)
}

fn routing() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let mut fails = Vec::new();
    let mut notes = Vec::new();
    for n in [12usize, 13, 16] {
        let (g, _) = gen_large_deg(n).unwrap();
        match route_once(
            dir.path(),
            &format!("large-deg-{n}"),
            &format!("family:large-deg:{n}"),
            &g,
        ) {
            Ok(cert) => {
                let (cyc, path) = (
                    cert["cycle"].as_array().unwrap().len(),
                    cert["path"].as_array().unwrap().len(),
                );
                notes.push(format!("large-deg({n}): cycle {cyc}, path {path}"));
                if n == 12 {
                    let best_c = longest_mono_cycle_exact(&g, CAP)
                        .unwrap()
                        .map_or(0, |c| c.length);
                    let best_p = longest_mono_path_exact(&g, CAP).unwrap().order;
                    notes.push(format!("oracle at n = 12: cycle {best_c}, path {best_p}"));
                    if cyc > best_c || path > best_p {
                        fails.push("certificate longer than the exact optimum".to_string());
                    }
                }
            }
            Err(e) => fails.push(e),
        }
    }
    // recolor one edge at X2: degrees stay n and the witness stays exact
    let (g, _) = gen_large_deg(12).unwrap();
    let ([x1, x2], [y1, y2]) = large_deg_parts(12);
    let w = ExtremalWitness::new(Side::X, x1, y1, y2, q(0, 1));
    let mut rng = ChaCha8Rng::seed_from_u64(7007);
    for i in 0..PERTURBATIONS {
        let mut h = g.clone();
        let x = x2.iter().nth(rng.gen_range(0..x2.len())).unwrap();
        let y = rng.gen_range(0..12);
        let c = if h.has_edge(x, y, Color::Red) {
            Color::Red
        } else {
            Color::Blue
        };
        h.remove_edge(x, y, c);
        h.add_edge(x, y, c.other());
        if h.min_degree() < 12 || !verify_witness(&h, &w).unwrap() {
            fails.push(format!("perturbation {i} broke its own preconditions"));
            continue;
        }
        let file = dir.path().join(format!("p{i}.txt"));
        std::fs::write(&file, h.to_canonical()).unwrap();
        if let Err(e) = route_once(dir.path(), &format!("p{i}"), file.to_str().unwrap(), &h) {
            fails.push(e);
        }
    }
    let mut o = Outcome::new(
        fails.len(),
        format!(
            "3 canonical instances and {PERTURBATIONS} perturbations, {} failures",
            fails.len()
        ),
    );
    notes.extend(fails);
    o.notes = notes;
    o
}

fn erdos_gallai() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8008);
    let mut fails = 0;
    let mut done = 0;
    while done < EG_GRAPHS {
        let n = rng.gen_range(3..=12);
        let p = rng.gen_range(0.3..0.95);
        let k = rng.gen_range(2..n);
        let mut h = SimpleGraphView::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    h.add_edge(u, v);
                }
            }
        }
        if 2 * h.edge_count() <= k * (n - 1) {
            continue;
        }
        done += 1;
        match erdos_gallai_cycle(&h, k) {
            Ok(c) if c.len() > k && h.is_walk_valid(&c, true) => {}
            _ => fails += 1,
        }
    }
    Outcome::new(
        fails,
        format!("{done} graphs with e > k(n-1)/2, {fails} without a cycle of length >= k+1"),
    )
}

fn berge() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9009);
    let (mut graphs, mut pairs, mut fails) = (0, 0, 0);
    while graphs < BERGE_GRAPHS {
        let m = rng.gen_range(2..=7);
        let p = rng.gen_range(0.5..1.0);
        let edges: Vec<(usize, usize)> = (0..m)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let h = BipartiteView::from_edges(m, m, &edges);
        if !berge_check(&h).unwrap() {
            continue;
        }
        graphs += 1;
        for u in 0..m {
            for v in m..2 * m {
                pairs += 1;
                match ham_path_between(&h, u, v) {
                    Ok(Some(path))
                        if path.len() == 2 * m
                            && path[0] == u
                            && path[2 * m - 1] == v
                            && h.graph.is_walk_valid(&path, false) => {}
                    _ => fails += 1,
                }
            }
        }
    }
    Outcome::new(fails, format!("{graphs} graphs passing Berge's test, {pairs} endpoint pairs, {fails} without a Hamiltonian path"))
}

#[derive(Debug, Deserialize)]
struct CurveRow {
    source: String,
    n: usize,
    delta: String,
    longest_cycle: Option<usize>,
    f_delta_n: String,
    cycle_minus_f_delta_n: Option<String>,
}

/// `(family, k)` from a source label such as `medium-deg(12, 1)`.
fn label_family(source: &str) -> (Family, usize) {
    let (name, args) = source.split_once('(').unwrap();
    let nums: Vec<usize> = args
        .trim_end_matches(')')
        .split(", ")
        .map(|s| s.parse().unwrap())
        .collect();
    (name.parse().unwrap(), nums.get(1).copied().unwrap_or(0))
}

/// Where the construction's cycle is exactly `f(δ)n`. A claimed cycle on
/// fewer than 4 vertices is no cycle, hence `n >= 4` and `k >= 4`.
fn is_design_point(family: Family, n: usize, k: usize) -> bool {
    match family {
        Family::LargeDeg => n.is_multiple_of(2) && n >= 4,
        Family::MediumDeg => true,
        Family::SmallDeg => k.is_multiple_of(2) && k >= 4,
        Family::CycleExtremal => false,
    }
}

fn curve_report() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("curve.csv");
    let o = bicolor(&[
        "verify",
        &format!("grid:{GRID_N}"),
        "--laws",
        "cycle-bound",
        "--out",
        out.to_str().unwrap(),
    ]);
    if o.code != 0 {
        return Outcome::new(1, format!("verify exited {}: {}", o.code, o.stderr.trim()));
    }
    let mut reader = csv::Reader::from_path(&out).unwrap();
    let mut notes = vec![format!(
        "{:<22} {:>6} {:>9} {:>9}",
        "instance", "delta", "cycle/n", "f(delta)"
    )];
    let (mut design, mut off) = (0, Vec::new());
    for row in reader.deserialize::<CurveRow>() {
        let row = row.unwrap();
        let (family, k) = label_family(&row.source);
        if family == Family::CycleExtremal {
            continue;
        }
        let nn = Rational::from_integer(row.n as i64);
        let ratio = Rational::from_integer(row.longest_cycle.unwrap() as i64) / nn;
        let f: Rational = row.f_delta_n.parse::<Rational>().unwrap() / nn;
        let mark = if is_design_point(family, row.n, k) {
            " *"
        } else {
            ""
        };
        notes.push(format!(
            "{:<22} {:>6} {:>9} {:>9}{mark}",
            row.source,
            row.delta,
            ratio.to_string(),
            f.to_string()
        ));
        if is_design_point(family, row.n, k) {
            design += 1;
            if row.cycle_minus_f_delta_n.as_deref() != Some("0") {
                off.push(row.source.clone());
            }
        }
    }
    notes.push("* design point, where the construction should meet f(delta)*n exactly".into());
    let mut o = Outcome::new(
        off.len(),
        format!(
            "report only; {design} design points, {} not exactly on f(delta)*n",
            off.len()
        ),
    );
    o.notes.extend(notes);
    o.notes
        .extend(off.into_iter().map(|s| format!("off the curve: {s}")));
    o
}

fn main() {
    let instances = law_instances();
    type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        (
            "exhaustive longest path >= 2*ceil(n/2), n = 2, 3, 4",
            Box::new(exhaustive_paths),
        ),
        (
            "exhaustive longest cycle >= 4 at n = 4",
            Box::new(exhaustive_cycles),
        ),
        (
            "generator claims match the exact oracle",
            Box::new(generator_claims),
        ),
        (
            "connected matching >= ceil(matching bound)",
            Box::new(|| law_check(&instances, Law::MatchingBound)),
        ),
        (
            "balanced component >= ceil(component bound)",
            Box::new(|| law_check(&instances, Law::ComponentBound)),
        ),
        ("stability dichotomy", Box::new(stability)),
        ("extremal routing and certificate check", Box::new(routing)),
        ("Erdos-Gallai long cycle", Box::new(erdos_gallai)),
        ("Berge implies Hamiltonian bi-connected", Box::new(berge)),
        ("cycle length vs f(delta) curve", Box::new(curve_report)),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "{verdict} {:>2} {name}: {} ({:.1}s)",
            i + 1,
            o.detail,
            start.elapsed().as_secs_f64()
        );
        for note in &o.notes {
            println!("        {note}");
        }
        if !o.pass {
            failed.push(i + 1);
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
