use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nsn_core::generators::{generate, GeneratorKind, GeneratorSpec};
use nsn_core::oracle::{brute_force_nsn_bounded, enumerate_minimal_cut_strategies_bounded, DEFAULT_MAX_N};
use nsn_core::validate::{run_validation, ValidationConfig, ValidationReport, DIAGNOSTIC_MAX_N};
use nsn_core::{
    arrangement_from_intervals, compute_nsn_with_arrangement, recognize_interval, CliqueArrangement, Graph, NsnOptions,
    NsnResult, PieceMark, Recognition, VertexSet,
};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::bench::{run_bench, BenchConfig, BenchReport};
use crate::error::{exit, CliError, Result};
use crate::input::{format_intervals, load, write_file, Input, InputFormat};

/// Hard ceiling for `oracle --max-n`.
pub const ORACLE_CEILING: usize = 24;

#[derive(Debug, Parser)]
#[command(name = "nsn", version, about = "Neighbor-scattering number of graphs")]
pub struct Cli {
    /// Output format; `validate` defaults to json, everything else to text.
    #[arg(long, value_enum, global = true)]
    pub format: Option<OutputFormat>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute S(G) of an interval graph by dynamic programming.
    Nsn(NsnArgs),
    /// Compute S(G) of a small graph by exhaustive search.
    Oracle(OracleArgs),
    /// Cross-check the dynamic program against exhaustive search on a seeded corpus.
    Validate(ValidateArgs),
    /// Write an interval file.
    Gen(GenArgs),
    /// Time the dynamic program on random interval graphs.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    pub input: PathBuf,
    /// Override format detection.
    #[arg(long, value_enum)]
    pub input_format: Option<InputFormat>,
}

#[derive(Debug, Args)]
pub struct NsnArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Print a maximizing strategy.
    #[arg(long)]
    pub witness: bool,
    /// Print the clique arrangement and the piece table.
    #[arg(long)]
    pub trace: bool,
    /// Threads for pieces of equal width.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Evaluate pieces without a single-vertex cut-strategy exhaustively instead of failing.
    #[arg(long)]
    pub fallback_oracle: bool,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Also list every minimal cut-strategy.
    #[arg(long)]
    pub minimal: bool,
    /// Largest accepted vertex count.
    #[arg(long, default_value_t = DEFAULT_MAX_N,
          value_parser = clap::builder::RangedU64ValueParser::<usize>::new().range(1..=ORACLE_CEILING as u64))]
    pub max_n: usize,
}

/// Inclusive vertex-count range written `a..b`, `a..=b`, or `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for NRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a vertex count"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => {
                let v = num(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(NRange { lo, hi })
    }
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    /// Vertex counts, inclusive.
    #[arg(long, default_value = "4..10")]
    pub n: NRange,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also check the recursive formula on graphs that need not be interval graphs.
    #[arg(long)]
    pub general_graphs: bool,
    /// Largest graph for the per-strategy minimality diagnostic.
    #[arg(long, default_value_t = DIAGNOSTIC_MAX_N)]
    pub diagnostic_max_n: usize,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// random-intervals, complete, path, star, or figure1.
    #[arg(long, default_value = "random-intervals")]
    pub kind: GeneratorKind,
    /// Vertex count; the number of leaves for `star`.
    #[arg(long, default_value_t = 10)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub max_coord: i64,
    /// Output file; standard output if absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "50,100,200")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Endpoints are drawn from 0..=factor*n.
    #[arg(long, default_value_t = 10)]
    pub coord_factor: i64,
}

/// Runs a parsed command, writing its report to `out`. Returns the exit
/// code for runs that complete; failures come back as errors.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    let format = cli.format;
    match cli.command {
        Command::Nsn(args) => cmd_nsn(&args, format.unwrap_or(OutputFormat::Text), out),
        Command::Oracle(args) => cmd_oracle(&args, format.unwrap_or(OutputFormat::Text), out),
        Command::Validate(args) => cmd_validate(&args, format.unwrap_or(OutputFormat::Json), out),
        Command::Gen(args) => cmd_gen(&args, out),
        Command::Bench(args) => cmd_bench(&args, format.unwrap_or(OutputFormat::Text), out),
    }
}

/// Writes a failure the way `format` expects: JSON on standard output, or a
/// message on standard error.
pub fn report_error(err: &CliError, format: Option<OutputFormat>, out: &mut dyn Write, err_out: &mut dyn Write) {
    match format {
        Some(OutputFormat::Json) => {
            let _ = writeln!(out, "{}", json!({ "nsn": null, "errors": [err.to_string()] }));
        }
        _ => {
            let _ = writeln!(err_out, "error: {err}");
        }
    }
}

fn set_labels(g: &Graph, set: &VertexSet) -> Vec<String> {
    g.labels_of(set)
}

fn braces(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(", "))
}

/// Graph and arrangement for the dynamic program. Interval files use the
/// endpoint sweep; edge files go through recognition.
fn prepare(input: &Input) -> Result<(Graph, CliqueArrangement)> {
    let g = input.graph();
    if g.vertex_count() == 0 {
        return Err(nsn_core::Error::EmptyGraph.into());
    }
    if !g.is_connected() {
        return Err(nsn_core::Error::Disconnected.into());
    }
    let arr = match input {
        Input::Intervals(rep) => arrangement_from_intervals(rep),
        Input::Edges(_) => match recognize_interval(&g) {
            Recognition::Interval(arr) => arr,
            Recognition::NotInterval(reason) => return Err(nsn_core::Error::NotInterval(reason).into()),
        },
    };
    Ok((g, arr))
}

#[derive(Serialize)]
struct PieceView {
    l: usize,
    r: usize,
    mark: PieceMark,
    vertices: Vec<String>,
    value: Option<i64>,
    witness: Option<Vec<String>>,
    choice: Option<String>,
    children: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    fallback: bool,
}

fn piece_views(g: &Graph, result: &NsnResult) -> Vec<PieceView> {
    let Some(table) = &result.table else { return Vec::new() };
    table
        .records()
        .iter()
        .map(|rec| PieceView {
            l: rec.l,
            r: rec.r,
            mark: rec.mark,
            vertices: set_labels(g, &rec.vertices),
            value: rec.value,
            witness: rec.witness.as_ref().map(|w| set_labels(g, w)),
            choice: rec.choice.map(|v| g.label(v).to_string()),
            children: rec.children.clone(),
            fallback: rec.fallback,
        })
        .collect()
}

fn mark_name(mark: PieceMark) -> &'static str {
    match mark {
        PieceMark::EmptyPiece => "empty",
        PieceMark::Complete => "complete",
        PieceMark::Noncomplete => "noncomplete",
        PieceMark::DisconnectedPiece => "disconnected",
    }
}

pub fn cmd_nsn(args: &NsnArgs, format: OutputFormat, out: &mut dyn Write) -> Result<i32> {
    let input = load(&args.input.input, args.input.input_format)?;
    let (g, arr) = prepare(&input)?;
    let options = NsnOptions { fallback_oracle: args.fallback_oracle, threads: args.threads };
    let result = compute_nsn_with_arrangement(&g, &arr, &options)?;
    let arrangement: Vec<Vec<String>> = arr.cliques().iter().map(|c| set_labels(&g, c)).collect();

    match format {
        OutputFormat::Json => {
            let mut obj = Map::new();
            obj.insert("nsn".into(), json!(result.value));
            obj.insert("method".into(), json!(result.method));
            if args.witness {
                obj.insert("witness".into(), json!(set_labels(&g, &result.witness)));
            }
            if args.trace {
                obj.insert("arrangement".into(), json!(arrangement));
                obj.insert("pieces".into(), serde_json::to_value(piece_views(&g, &result)).expect("serializable"));
            }
            writeln!(out, "{}", Value::Object(obj))?;
        }
        OutputFormat::Text => {
            writeln!(out, "S(G) = {}", result.value)?;
            if args.witness {
                writeln!(out, "witness: {}", braces(&set_labels(&g, &result.witness)))?;
            }
            if args.trace {
                writeln!(out, "arrangement ({} cliques):", arrangement.len())?;
                for (k, clique) in arrangement.iter().enumerate() {
                    writeln!(out, "  A{} = {}", k + 1, braces(clique))?;
                }
                writeln!(out, "pieces:")?;
                for p in piece_views(&g, &result) {
                    let mut line = format!("  P({},{}) {} {}", p.l, p.r, mark_name(p.mark), braces(&p.vertices));
                    if let Some(v) = p.value {
                        line += &format!(" value {v}");
                    }
                    if let Some(c) = &p.choice {
                        line += &format!(" choice {c}");
                    }
                    for (l, r) in &p.children {
                        line += &format!(" ({l},{r})");
                    }
                    if p.fallback {
                        line += " [exhaustive]";
                    }
                    writeln!(out, "{line}")?;
                }
                for event in &result.events {
                    writeln!(out, "note: {event}")?;
                }
            }
        }
    }
    Ok(exit::SUCCESS)
}

pub fn cmd_oracle(args: &OracleArgs, format: OutputFormat, out: &mut dyn Write) -> Result<i32> {
    let g = load(&args.input.input, args.input.input_format)?.graph();
    let result = brute_force_nsn_bounded(&g, args.max_n)?;
    let minimal = if args.minimal { Some(enumerate_minimal_cut_strategies_bounded(&g, args.max_n)?) } else { None };
    match format {
        OutputFormat::Json => {
            let mut obj = Map::new();
            obj.insert("nsn".into(), json!(result.value));
            obj.insert("method".into(), json!(result.method));
            obj.insert("witness".into(), json!(set_labels(&g, &result.witness)));
            if let Some(ms) = &minimal {
                let sets: Vec<Vec<String>> = ms.iter().map(|s| set_labels(&g, s)).collect();
                obj.insert("minimal".into(), json!(sets));
            }
            writeln!(out, "{}", Value::Object(obj))?;
        }
        OutputFormat::Text => {
            writeln!(out, "S(G) = {}", result.value)?;
            writeln!(out, "witness: {}", braces(&set_labels(&g, &result.witness)))?;
            if let Some(ms) = &minimal {
                writeln!(out, "minimal cut-strategies ({}):", ms.len())?;
                for s in ms {
                    writeln!(out, "  {}", braces(&set_labels(&g, s)))?;
                }
            }
        }
    }
    Ok(exit::SUCCESS)
}

pub fn validation_config(args: &ValidateArgs) -> ValidationConfig {
    ValidationConfig {
        trials: args.trials,
        n_min: args.n.lo,
        n_max: args.n.hi,
        seed: args.seed,
        general_graphs: args.general_graphs,
        diagnostic_max_n: args.diagnostic_max_n,
        threads: args.threads,
    }
}

fn validation_summary(report: &ValidationReport) -> Vec<String> {
    let a = &report.dp_vs_oracle;
    let mut lines = vec![
        format!("dp vs oracle: {}/{} agree", a.agreed, a.checked),
        format!(
            "recursive formula (interval): {}/{} agree",
            report.recursive_formula.interval.agreed, report.recursive_formula.interval.checked
        ),
    ];
    if let Some(g) = &report.recursive_formula.general {
        lines.push(format!("recursive formula (general): {}/{} agree", g.agreed, g.checked));
    }
    let m = &report.minimality_characterization;
    lines.push(format!(
        "minimality characterization: {}/{} strategies agree, {} disagreements",
        m.agreed,
        m.strategies,
        m.disagreements.len()
    ));
    lines.push(format!("two-clique pieces: {}/{} agree", report.two_clique.agreed, report.two_clique.pieces));
    lines.push(format!("three-clique pieces: {}/{} agree", report.three_clique.agreed, report.three_clique.pieces));
    lines.push(format!(
        "four-plus candidates: {}/{} pieces cover every disconnecting vertex",
        report.four_plus_candidates.agreed, report.four_plus_candidates.pieces
    ));
    lines.push(format!("piece mismatches: {}", report.piece_mismatches.len()));
    lines.push(format!("structure violations: {}", report.structure_violations.len()));
    lines.push(format!("characterization gaps: {}", report.characterization_gaps.len()));
    lines.push(format!("passed: {}", report.passed));
    lines
}

pub fn cmd_validate(args: &ValidateArgs, format: OutputFormat, out: &mut dyn Write) -> Result<i32> {
    let report = run_validation(&validation_config(args))?;
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &report).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        OutputFormat::Text => {
            for line in validation_summary(&report) {
                writeln!(out, "{line}")?;
            }
        }
    }
    Ok(if report.passed { exit::SUCCESS } else { exit::VALIDATION_FAILED })
}

pub fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<i32> {
    let spec = GeneratorSpec { kind: args.kind, n: args.n, seed: args.seed, max_coord: args.max_coord };
    let rep = generate(&spec)?;
    let header = vec![match spec.kind {
        GeneratorKind::Figure1 => "kind=figure1".to_string(),
        _ => format!("kind={} n={} seed={} max_coord={}", spec.kind, spec.n, spec.seed, spec.max_coord),
    }];
    let text = format_intervals(&rep, &header);
    match &args.output {
        Some(path) => write_file(path, &text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(exit::SUCCESS)
}

pub fn bench_config(args: &BenchArgs) -> BenchConfig {
    BenchConfig {
        sizes: args.sizes.clone(),
        seed: args.seed,
        trials: args.trials,
        threads: args.threads,
        coord_factor: args.coord_factor,
    }
}

fn write_bench(report: &BenchReport, format: OutputFormat, out: &mut dyn Write) -> Result<()> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, report).map_err(std::io::Error::from)?;
            writeln!(out)?;
        }
        OutputFormat::Text => {
            writeln!(
                out,
                "{:>6} {:>8} {:>7} {:>12} {:>12} {:>12}",
                "n", "cliques", "trials", "mean_s", "min_s", "max_s"
            )?;
            for r in &report.rows {
                writeln!(
                    out,
                    "{:>6} {:>8} {:>7} {:>12.6} {:>12.6} {:>12.6}",
                    r.n, r.cliques, r.trials, r.mean_secs, r.min_secs, r.max_secs
                )?;
            }
            match report.exponent {
                Some(e) => writeln!(out, "fitted exponent: {e:.3}")?,
                None => writeln!(out, "fitted exponent: n/a")?,
            }
        }
    }
    Ok(())
}

pub fn cmd_bench(args: &BenchArgs, format: OutputFormat, out: &mut dyn Write) -> Result<i32> {
    let report = run_bench(&bench_config(args))?;
    write_bench(&report, format, out)?;
    Ok(exit::SUCCESS)
}
