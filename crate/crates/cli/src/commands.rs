//! Subcommands: `gen`, `random`, `verify`, `route`, `check-cert`.

use std::io::Write;
use std::path::{Path, PathBuf};

use bicolor::extremal::{
    extremal_route, find_witness_rounded, ExtremalError, ExtremalWitness, RouteParams,
};
use bicolor::families::FamilySpec;
use bicolor::{ColoredBigraph, Rational, Side, VertexSet};
use clap::{Args, Parser, Subcommand};
use serde::Deserialize;

use crate::certcheck::check_certificate;
use crate::report::{evaluate_all, run_exhaustive, Law, VerifyConfig, VerifyReport};
use crate::source::{
    parse_family, parse_prob, random_with_floor, InstanceSource, RandomSpec, SourceArg,
};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "bicolor",
    version,
    about = "Long monochromatic paths and cycles in 2-edge-colored bipartite graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generator family instance and its stated claims.
    Gen(GenArgs),
    /// Sample seeded random colorings.
    Random(RandomArgs),
    /// Evaluate the laws on a list of sources and write a CSV report.
    Verify(VerifyArgs),
    /// Route an extremal coloring to a long path and cycle certificate.
    Route(RouteArgs),
    /// Check a routing certificate against a graph.
    CheckCert(CheckCertArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// large-deg, medium-deg, small-deg or cycle-extremal
    pub family: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: Option<usize>,
    /// Graph file; claims go to `<out>.claims.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    #[arg(long)]
    pub n: usize,
    /// Probability of red on each pair, e.g. `1/2`.
    #[arg(long, default_value = "1/2", value_parser = parse_prob)]
    pub red: Rational,
    #[arg(long, default_value = "1/2", value_parser = parse_prob)]
    pub blue: Rational,
    /// Resample until the minimum degree is at least this.
    #[arg(long, default_value_t = 0)]
    pub floor: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sample `i` uses seed `seed + i`.
    #[arg(long, default_value_t = 1)]
    pub samples: u64,
    /// A file for one sample, a directory for several.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// `family:<name>:<n>[:<k>]`, `grid:<max_n>`, `random:<n>:<red>:<blue>[:<floor>]`,
    /// `exhaustive:<n>`, `file:<path>` or a path.
    #[arg(required = true)]
    pub sources: Vec<SourceArg>,
    #[arg(
        long,
        value_enum,
        value_delimiter = ',',
        ignore_case = true,
        default_value = "path-gl,cycle-cor1,matching-bound,component-bound,cycle-bound"
    )]
    pub laws: Vec<Law>,
    /// Largest n per side for the exact oracles.
    #[arg(long, default_value_t = 12)]
    pub cap: usize,
    /// Slack for the cycle-bound law.
    #[arg(long, default_value = "1/20")]
    pub eps: Rational,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Instances drawn per random source.
    #[arg(long, default_value_t = 1)]
    pub samples: u64,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// CSV report; the summary goes to `<out>.summary.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RouteArgs {
    /// `family:<name>:<n>[:<k>]`, `random:<n>:<red>:<blue>[:<floor>]` or a graph file.
    pub source: SourceArg,
    /// JSON `{"orientation": "x", "xprime": [..], "y1": [..], "y2": [..], "eta": "p/q"}`;
    /// searched for when absent.
    #[arg(long)]
    pub witness: Option<PathBuf>,
    #[arg(long, default_value = "1/4")]
    pub gamma: Rational,
    /// Defaults to the witness file's `eta`, else 0.
    #[arg(long)]
    pub eta: Option<Rational>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Certificate file; stdout otherwise.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckCertArgs {
    /// Graph source, as for `route`.
    pub graph: SourceArg,
    pub certificate: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Gen(a) => gen(&a, out, err),
        Command::Random(a) => random(&a, out),
        Command::Verify(a) => verify(&a, out, err),
        Command::Route(a) => route(&a, out, err),
        Command::CheckCert(a) => check_cert(&a, out),
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text)
        .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn gen(a: &GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let k = a.k.map(|k| k.to_string());
    let spec = parse_family(&a.family, &a.n.to_string(), k.as_deref()).map_err(CliError::usage)?;
    let (g, claims) = spec
        .generate()
        .map_err(|e| CliError::usage(format!("{spec}: {e}")))?;
    let claims = serde_json::to_string_pretty(&serde_json::json!({
        "family": spec.family.name(),
        "n": spec.n,
        "k": spec.k,
        "claims": claims,
    }))
    .map_err(|e| CliError::internal(e.to_string()))?;
    match &a.out {
        Some(path) => {
            write_file(path, &g.to_canonical())?;
            write_file(&with_suffix(path, ".claims.json"), &(claims + "\n"))
        }
        None => {
            out.write_all(g.to_canonical().as_bytes())?;
            writeln!(err, "{claims}")?;
            Ok(())
        }
    }
}

fn random(a: &RandomArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if a.samples == 0 {
        return Err(CliError::usage("--samples must be at least 1"));
    }
    if a.samples > 1 && a.out.is_none() {
        return Err(CliError::usage("several samples need --out <dir>"));
    }
    for i in 0..a.samples {
        let spec = RandomSpec {
            n: a.n,
            red_prob: a.red,
            blue_prob: a.blue,
            min_degree_floor: a.floor,
            seed: a.seed.wrapping_add(i),
        };
        let text = random_with_floor(&spec)?.to_canonical();
        match &a.out {
            None => out.write_all(text.as_bytes())?,
            Some(p) if a.samples == 1 => write_file(p, &text)?,
            Some(dir) => {
                std::fs::create_dir_all(dir)?;
                write_file(&dir.join(format!("random-{}.txt", spec.seed)), &text)?;
            }
        }
    }
    Ok(())
}

/// A single instance named by a source argument; random sources use `seed`.
fn single_instance(src: &SourceArg, seed: u64) -> Result<(String, ColoredBigraph), CliError> {
    let source = match src {
        SourceArg::Family(spec) => InstanceSource::Family(*spec),
        SourceArg::File(p) => InstanceSource::File(p.clone()),
        SourceArg::Random {
            n,
            red_prob,
            blue_prob,
            floor,
        } => InstanceSource::Random(RandomSpec {
            n: *n,
            red_prob: *red_prob,
            blue_prob: *blue_prob,
            min_degree_floor: *floor,
            seed,
        }),
        SourceArg::Grid(_) | SourceArg::Exhaustive(_) => {
            return Err(CliError::usage(
                "expected a single graph, not grid: or exhaustive:",
            ))
        }
    };
    Ok((source.to_string(), source.load()?))
}

/// Named instances, in source order.
pub type Instances = Vec<(String, ColoredBigraph)>;

/// Expands a source list into named instances plus exhaustive runs.
pub fn expand_sources(
    sources: &[SourceArg],
    seed: u64,
    samples: u64,
) -> Result<(Instances, Vec<usize>), CliError> {
    let mut items = Vec::new();
    let mut exhaustive = Vec::new();
    for src in sources {
        match src {
            SourceArg::Grid(max_n) => {
                for spec in FamilySpec::grid(*max_n) {
                    items.push(single_instance(&SourceArg::Family(spec), seed)?);
                }
            }
            SourceArg::Exhaustive(n) => exhaustive.push(*n),
            SourceArg::Random { .. } => {
                for i in 0..samples {
                    items.push(single_instance(src, seed.wrapping_add(i))?);
                }
            }
            _ => items.push(single_instance(src, seed)?),
        }
    }
    Ok((items, exhaustive))
}

fn verify(a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let mut laws = a.laws.clone();
    laws.sort();
    laws.dedup();
    let cfg = VerifyConfig {
        cap: a.cap,
        eps: a.eps,
    };
    let (items, exhaustive) = expand_sources(&a.sources, a.seed, a.samples)?;
    let rows = evaluate_all(&items, &laws, &cfg, a.jobs)?;
    let exhaustive = exhaustive
        .into_iter()
        .map(|n| run_exhaustive(n, &laws, a.cap, a.jobs))
        .collect::<Result<Vec<_>, _>>()?;
    let report = VerifyReport {
        laws,
        rows,
        exhaustive,
    };
    let csv = report.to_csv()?;
    let summary = serde_json::to_string_pretty(&report.summary_json())
        .map_err(|e| CliError::internal(e.to_string()))?;
    match &a.out {
        Some(path) => {
            write_file(path, &csv)?;
            write_file(
                &with_suffix(path, ".summary.json"),
                &(summary.clone() + "\n"),
            )?;
            writeln!(out, "{summary}")?;
        }
        None => {
            out.write_all(csv.as_bytes())?;
            writeln!(err, "{summary}")?;
        }
    }
    match report.hard_failures() {
        0 => Ok(()),
        k => Err(CliError::failure(format!("{k} hard law violation(s)"))),
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct WitnessFile {
    orientation: String,
    xprime: VertexSet,
    y1: VertexSet,
    y2: VertexSet,
    #[serde(default)]
    eta: Option<serde_json::Value>,
}

fn witness_invalid(msg: impl std::fmt::Display) -> CliError {
    CliError::usage(format!("witness invalid: {msg}"))
}

pub fn read_witness(path: &Path) -> Result<ExtremalWitness<Option<Rational>>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| witness_invalid(format!("{}: {e}", path.display())))?;
    let w: WitnessFile = serde_json::from_str(&text).map_err(witness_invalid)?;
    let orientation = match w.orientation.as_str() {
        "x" | "X" => Side::X,
        "y" | "Y" => Side::Y,
        other => {
            return Err(witness_invalid(format!(
                "orientation `{other}` is not x or y"
            )))
        }
    };
    let eta = match w.eta {
        None => None,
        Some(serde_json::Value::String(s)) => Some(
            s.parse::<Rational>()
                .map_err(|_| witness_invalid(format!("eta `{s}` is not p/q")))?,
        ),
        Some(serde_json::Value::Number(k)) if k.as_u64() == Some(0) => {
            Some(Rational::from_integer(0))
        }
        Some(v) => return Err(witness_invalid(format!("eta {v} must be a string `p/q`"))),
    };
    Ok(ExtremalWitness::new(orientation, w.xprime, w.y1, w.y2, eta))
}

fn route(a: &RouteArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    let (name, g) = single_instance(&a.source, a.seed)?;
    let given = a.witness.as_deref().map(read_witness).transpose()?;
    let eta = a
        .eta
        .or(given.as_ref().and_then(|w| w.eta))
        .unwrap_or(Rational::from_integer(0));
    let witness = match given {
        Some(w) => {
            w.with_eta(eta)
                .check_shape(g.n())
                .map_err(witness_invalid)?;
            w.with_eta(eta)
        }
        None => find_witness_rounded(&g, eta)
            .ok_or_else(|| CliError::usage(format!("{name}: no {eta}-extremal witness found")))?,
    };
    let params = RouteParams::new(a.gamma, eta);
    let cert = extremal_route(&g, &witness, &params).map_err(|e| {
        let msg = format!("{name}: {} ({})", e, e.class());
        match e {
            ExtremalError::Precondition(_) | ExtremalError::Witness(_) => CliError::usage(msg),
            ExtremalError::BelowRegime(_) => CliError::failure(msg),
            ExtremalError::Bug(_) => CliError::internal(msg),
        }
    })?;
    for step in &cert.branch_trace {
        writeln!(err, "trace: {step}")?;
    }
    let json =
        serde_json::to_string_pretty(&cert).map_err(|e| CliError::internal(e.to_string()))? + "\n";
    match &a.out {
        Some(p) => write_file(p, &json),
        None => Ok(out.write_all(json.as_bytes())?),
    }
}

fn check_cert(a: &CheckCertArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let (_, g) = single_instance(&a.graph, a.seed)?;
    let text = std::fs::read_to_string(&a.certificate)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", a.certificate.display())))?;
    let cert: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliError::failure(format!("certificate is not JSON: {e}")))?;
    let s = check_certificate(&g, &cert)
        .map_err(|e| CliError::failure(format!("certificate rejected: {e}")))?;
    writeln!(
        out,
        "ok: {} cycle on {} vertices, {} path on {} vertices (n = {})",
        s.cycle_color, s.cycle_len, s.path_color, s.path_order, s.n
    )?;
    Ok(())
}

/// Runs `bicolor <args>` in-process: `(exit code, stdout, stderr)`.
pub fn run_captured(args: &[&str]) -> (i32, String, String) {
    let cli = match Cli::try_parse_from(std::iter::once("bicolor").chain(args.iter().copied())) {
        Ok(cli) => cli,
        Err(e) => return (e.exit_code(), String::new(), e.render().to_string()),
    };
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = match run(cli, &mut out, &mut err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code
        }
    };
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}
