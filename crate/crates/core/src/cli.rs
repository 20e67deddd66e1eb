//! Command-line front end: analyze, route, render, catalog, verify.
//!
//! All output is deterministic byte-for-byte for identical arguments.
//! Floating-point values are serialized with nine significant digits, which
//! exceeds every test tolerance while staying stable across platforms.
//! `catalog` and `verify` evaluate their parameter grids in parallel; the
//! `RESIDUUM_THREADS` environment variable caps the worker count (0 or unset
//! means automatic).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::designgraph::{build_design, route, string_count};
use crate::metrics::{gross_length, net_length};
use crate::numtheory::enumerate_h;
use crate::numtheory::{doubled_subgroup, gcd, is_prime, is_primitive_root, DesignParams};
use crate::oracle::{brute_gross, brute_h, brute_net};
use crate::render::{to_svg, RenderStyle};

/// Fixed column order for CSV output.
pub const CSV_HEADER: &str = "n,a,r,gross,net,approx,m,generator,g1,g2,doubled_count,\
                              degenerate_count,string_count,is_prime,is_primitive_root";

/// Everything the CLI reports about a single design.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    pub n: u64,
    pub a: u64,
    pub r: f64,
    pub gross: f64,
    pub net: f64,
    pub approx: f64,
    pub m: u64,
    pub generator: u64,
    pub g1: u64,
    pub g2: u64,
    pub doubled_count: u64,
    pub degenerate_count: u64,
    pub string_count: u64,
    pub is_prime_n: bool,
    /// None when n is not prime or a is not a unit mod n.
    pub is_primitive_root_a: Option<bool>,
}

/// Rounds to nine significant digits so serialized floats are short and
/// platform-stable.
fn sig9(x: f64) -> f64 {
    format!("{x:.8e}").parse().expect("float round-trip")
}

/// Computes the full record for one design.
pub fn analyze_design(params: &DesignParams) -> AnalysisRecord {
    let report = net_length(params);
    let info = doubled_subgroup(params);
    let strings = string_count(&build_design(params));
    let prime = is_prime(params.n);
    let is_primitive_root_a = if prime && gcd(params.a % params.n, params.n) == 1 {
        Some(is_primitive_root(params.a, params.n).expect("prime modulus and unit base"))
    } else {
        None
    };
    AnalysisRecord {
        n: params.n,
        a: params.a,
        r: sig9(params.r),
        gross: sig9(report.gross),
        net: sig9(report.net),
        approx: sig9(report.approx),
        m: report.m,
        generator: info.generator,
        g1: report.g1,
        g2: report.g2,
        doubled_count: report.doubled_segment_count,
        degenerate_count: report.degenerate_count,
        string_count: strings,
        is_prime_n: prime,
        is_primitive_root_a,
    }
}

impl AnalysisRecord {
    /// One CSV row matching [`CSV_HEADER`]; an unknown primitive-root status
    /// serializes as an empty cell.
    pub fn csv_row(&self) -> String {
        let ipr = match self.is_primitive_root_a {
            Some(v) => v.to_string(),
            None => String::new(),
        };
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.a,
            self.r,
            self.gross,
            self.net,
            self.approx,
            self.m,
            self.generator,
            self.g1,
            self.g2,
            self.doubled_count,
            self.degenerate_count,
            self.string_count,
            self.is_prime_n,
            ipr,
        )
    }

    /// Human-readable key/value lines using the CSV column names.
    pub fn text_block(&self) -> String {
        let ipr = match self.is_primitive_root_a {
            Some(v) => v.to_string(),
            None => "n/a".to_string(),
        };
        format!(
            "n: {}\na: {}\nr: {}\ngross: {}\nnet: {}\napprox: {}\nm: {}\ngenerator: {}\n\
             g1: {}\ng2: {}\ndoubled_count: {}\ndegenerate_count: {}\nstring_count: {}\n\
             is_prime: {}\nis_primitive_root: {}",
            self.n,
            self.a,
            self.r,
            self.gross,
            self.net,
            self.approx,
            self.m,
            self.generator,
            self.g1,
            self.g2,
            self.doubled_count,
            self.degenerate_count,
            self.string_count,
            self.is_prime_n,
            ipr,
        )
    }
}

#[derive(Parser)]
#[command(
    name = "residuum",
    version,
    about = "Analyze, route, and render modular string-art designs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report lengths, subgroup structure, and string count for one design
    Analyze(AnalyzeArgs),
    /// Print each physical string as a comma-separated nail sequence
    Route(DesignArgs),
    /// Write an SVG drawing of a design
    Render(RenderArgs),
    /// Write a CSV of analysis records over a parameter grid
    Catalog(CatalogArgs),
    /// Check the closed forms against brute-force reference sums
    Verify(VerifyArgs),
}

#[derive(Args)]
struct DesignArgs {
    /// Number of nails on the circle
    #[arg(long)]
    n: u64,
    /// Multiplier: a chord joins every nail k to nail a*k mod n
    #[arg(long)]
    a: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    design: DesignArgs,
    /// Circle radius (lengths scale linearly with it)
    #[arg(long, default_value_t = 1.0)]
    r: f64,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct RenderArgs {
    #[command(flatten)]
    design: DesignArgs,
    /// Output file (defaults to design_n{n}_a{a}.svg)
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Canvas width and height in pixels
    #[arg(long, default_value_t = 800.0)]
    canvas_size: f64,
    /// Gap between the circle and the canvas edge in pixels
    #[arg(long, default_value_t = 40.0)]
    margin: f64,
    /// Chord stroke width in pixels
    #[arg(long, default_value_t = 1.0)]
    stroke_width: f64,
    /// Draw doubled chords heavier and mark degenerate nails
    #[arg(long)]
    highlight_doubled: bool,
    /// Draw nail numbers outside the circle
    #[arg(long)]
    labels: bool,
    /// Label every k-th nail
    #[arg(long, default_value_t = 1)]
    label_every: u64,
}

#[derive(Args)]
struct CatalogArgs {
    /// Smallest nail count to include
    #[arg(long, default_value_t = 1)]
    n_min: u64,
    /// Largest nail count to include
    #[arg(long)]
    n_max: u64,
    /// Smallest multiplier to include
    #[arg(long, default_value_t = 2)]
    a_min: u64,
    /// Largest multiplier to include (defaults to a-min)
    #[arg(long)]
    a_max: Option<u64>,
    /// Circle radius
    #[arg(long, default_value_t = 1.0)]
    r: f64,
    /// Output file (defaults to stdout)
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest nail count to sweep; multipliers run over [2, 2n] per n
    #[arg(long, default_value_t = 300)]
    n_max: u64,
    /// Sweep multipliers up to this multiple of n
    #[arg(long, default_value_t = 2)]
    a_factor: u64,
    /// Circle radius
    #[arg(long, default_value_t = 1.0)]
    r: f64,
    /// Perturb the closed forms by 1e-3 (negative control; must fail)
    #[arg(long, hide = true)]
    inject_fault: bool,
}

/// Parses the process arguments and runs the selected subcommand.
pub fn run() -> anyhow::Result<ExitCode> {
    match Cli::parse().command {
        Command::Analyze(args) => cmd_analyze(&args),
        Command::Route(args) => cmd_route(&args),
        Command::Render(args) => cmd_render(&args),
        Command::Catalog(args) => cmd_catalog(&args),
        Command::Verify(args) => cmd_verify(&args),
    }
}

fn cmd_analyze(args: &AnalyzeArgs) -> anyhow::Result<ExitCode> {
    let params = DesignParams::new(args.design.n, args.design.a, args.r)?;
    let record = analyze_design(&params);
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&record)?),
        Format::Text => println!("{}", record.text_block()),
        Format::Csv => println!("{}\n{}", CSV_HEADER, record.csv_row()),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_route(args: &DesignArgs) -> anyhow::Result<ExitCode> {
    let params = DesignParams::new(args.n, args.a, 1.0)?;
    let plan = route(&build_design(&params));
    for string in &plan.strings {
        let nails: Vec<String> = string.iter().map(u64::to_string).collect();
        println!("{}", nails.join(","));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_render(args: &RenderArgs) -> anyhow::Result<ExitCode> {
    let params = DesignParams::new(args.design.n, args.design.a, 1.0)?;
    let style = RenderStyle {
        canvas_size: args.canvas_size,
        margin: args.margin,
        stroke_width: args.stroke_width,
        highlight_doubled: args.highlight_doubled,
        show_labels: args.labels,
        label_every: args.label_every,
    };
    let svg = to_svg(&build_design(&params), &style)?;
    let path = args
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("design_n{}_a{}.svg", params.n, params.a)));
    fs::write(&path, svg).with_context(|| format!("writing {}", path.display()))?;
    println!("{}", path.display());
    Ok(ExitCode::SUCCESS)
}

/// Runs `body` under a thread pool sized by `RESIDUUM_THREADS` (0 or unset
/// means rayon's automatic choice).
fn with_thread_cap<T: Send>(body: impl FnOnce() -> T + Send) -> anyhow::Result<T> {
    let threads: usize = match std::env::var("RESIDUUM_THREADS") {
        Ok(raw) => raw
            .trim()
            .parse()
            .with_context(|| format!("RESIDUUM_THREADS must be an integer, got {raw:?}"))?,
        Err(_) => 0,
    };
    if threads == 0 {
        return Ok(body());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .context("building thread pool")?;
    Ok(pool.install(body))
}

fn cmd_catalog(args: &CatalogArgs) -> anyhow::Result<ExitCode> {
    let a_max = args.a_max.unwrap_or(args.a_min);
    if args.n_min < 1 || args.n_min > args.n_max {
        bail!("empty nail range [{}, {}]", args.n_min, args.n_max);
    }
    if args.a_min < 2 || args.a_min > a_max {
        bail!("empty multiplier range [{}, {}]", args.a_min, a_max);
    }
    let r = args.r;
    let cells: Vec<(u64, u64)> = (args.n_min..=args.n_max)
        .flat_map(|n| (args.a_min..=a_max).map(move |a| (n, a)))
        .collect();
    // The grid is generated sorted by (n, a) and the indexed parallel
    // collect preserves that order.
    let rows = with_thread_cap(move || {
        cells
            .par_iter()
            .map(|&(n, a)| {
                let params = DesignParams::new(n, a, r).expect("validated ranges");
                analyze_design(&params).csv_row()
            })
            .collect::<Vec<String>>()
    })?;
    let mut csv = String::with_capacity(rows.len() * 80 + CSV_HEADER.len() + 1);
    csv.push_str(CSV_HEADER);
    csv.push('\n');
    for row in &rows {
        csv.push_str(row);
        csv.push('\n');
    }
    match &args.out {
        Some(path) => {
            fs::write(path, csv).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{csv}"),
    }
    Ok(ExitCode::SUCCESS)
}

/// Worst absolute error and failure list for one verify check.
struct CheckSummary {
    name: &'static str,
    max_err: f64,
    failures: Vec<(u64, u64)>,
}

fn cmd_verify(args: &VerifyArgs) -> anyhow::Result<ExitCode> {
    if args.n_max < 1 {
        bail!("n-max must be at least 1");
    }
    let fault = if args.inject_fault { 1e-3 } else { 0.0 };
    let r = args.r;
    let cells: Vec<(u64, u64)> = (1..=args.n_max)
        .flat_map(|n| (2..=args.a_factor.max(2) * n.max(1)).map(move |a| (n, a)))
        .collect();
    let results = with_thread_cap(move || {
        cells
            .par_iter()
            .map(|&(n, a)| {
                let params = DesignParams::new(n, a, r).expect("validated ranges");
                let tolerance = 1e-9 * n as f64 * r;
                let gross_err = (gross_length(&params) + fault - brute_gross(&params)).abs();
                let net_err = (net_length(&params).net + fault - brute_net(&params)).abs();
                let h_ok = enumerate_h(&params) == brute_h(&params);
                (
                    n,
                    a,
                    gross_err,
                    net_err,
                    gross_err <= tolerance,
                    net_err <= tolerance,
                    h_ok,
                )
            })
            .collect::<Vec<_>>()
    })?;

    let mut checks = [
        CheckSummary {
            name: "gross",
            max_err: 0.0,
            failures: Vec::new(),
        },
        CheckSummary {
            name: "net",
            max_err: 0.0,
            failures: Vec::new(),
        },
        CheckSummary {
            name: "subgroup",
            max_err: 0.0,
            failures: Vec::new(),
        },
    ];
    for &(n, a, gross_err, net_err, gross_ok, net_ok, h_ok) in &results {
        checks[0].max_err = checks[0].max_err.max(gross_err);
        checks[1].max_err = checks[1].max_err.max(net_err);
        if !gross_ok {
            checks[0].failures.push((n, a));
        }
        if !net_ok {
            checks[1].failures.push((n, a));
        }
        if !h_ok {
            checks[2].failures.push((n, a));
        }
    }

    println!(
        "verified {} designs: n in [1, {}], a in [2, {}n], r = {}",
        results.len(),
        args.n_max,
        args.a_factor.max(2),
        args.r
    );
    let mut all_ok = true;
    for check in &checks {
        let status = if check.failures.is_empty() {
            "ok"
        } else {
            "FAIL"
        };
        if check.name == "subgroup" {
            println!("subgroup: {} mismatches ... {status}", check.failures.len());
        } else {
            println!(
                "{}: max |closed form - brute force| = {:.3e} ... {status}",
                check.name, check.max_err
            );
        }
        for &(n, a) in check.failures.iter().take(10) {
            println!("  failing: n={n} a={a} ({})", check.name);
        }
        all_ok &= check.failures.is_empty();
    }
    if all_ok {
        println!("PASS");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("FAIL");
        Ok(ExitCode::FAILURE)
    }
}
