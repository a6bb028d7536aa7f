//! Command-line front end. [`run`] parses arguments, dispatches and returns
//! the process exit code: 0 success, 1 usage error, 2 budget exceeded,
//! 3 internal verification failure.

use std::fs;
use std::io::Write;
use std::time::Instant;

use blowup_core::combinatorics::PartitionLabeling;
use blowup_core::constructions::{
    blown_up_star_forest, chvatal_hanson_graph, edge_blowup, extremal_family_layout, star, star_forest, turan,
};
use blowup_core::freeness::find_blowup_star_forest;
use blowup_core::search::{hill_climb, SearchConfig};
use blowup_core::spectral::{quotient_spectrum, spectral_radius};
use blowup_core::{Error, Graph, SpectralConfig, StarForestSpec};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::dot::emit_dot;
use crate::graph6::{decode_graph6, encode_graph6, Graph6Error};
use crate::parallel::{spectral_extremal_parallel, turan_number_parallel, verify_parallel};
use crate::report::{round12, to_json, FreenessJson, Report, RhoJson};

#[derive(Debug, Parser)]
#[command(name = "blowup-lab", version, about = "Turán and spectral Turán experiments on edge blow-ups of star forests")]
pub struct Cli {
    /// Power-iteration stopping tolerance.
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol: f64,
    /// Perron roots closer than this count as tied.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tie_tol: f64,
    /// Largest order accepted by the exhaustive searches (at most 9).
    #[arg(long, global = true, default_value_t = 8)]
    pub max_n: usize,
    /// Leading pair decisions fixed per parallel shard.
    #[arg(long, global = true, default_value_t = 8)]
    pub shard_bits: u32,
    /// More log output on stderr (repeatable).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct PatternArgs {
    /// Clique size around each center.
    #[arg(long)]
    pub p: usize,
    /// Clique counts per center, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub ks: Vec<usize>,
}

impl PatternArgs {
    fn spec(&self) -> Result<StarForestSpec, CliError> {
        Ok(StarForestSpec::new(self.p, &self.ks)?)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a named graph.
    Construct {
        #[arg(long, global = true, value_enum, default_value_t = Format::G6)]
        format: Format,
        #[command(subcommand)]
        kind: Construction,
    },
    /// Perron root of a graph6 graph.
    Rho { g6: String },
    /// Perron root of K_{q-1} joined with a complete multipartite graph.
    QuotientRho {
        /// Number of centers q; the joined clique has q - 1 vertices.
        #[arg(long)]
        q: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        parts: Vec<usize>,
    },
    /// Search a graph6 graph for the pattern; prints an embedding if found.
    CheckFree {
        g6: String,
        #[command(flatten)]
        pattern: PatternArgs,
    },
    /// Exact maximum edge count over pattern-free graphs on n vertices.
    TuranNumber {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        pattern: PatternArgs,
    },
    /// Exact maximum Perron root over pattern-free graphs on n vertices.
    SpectralExtremal {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        pattern: PatternArgs,
    },
    /// Run both searches and compare the extremal families.
    Verify {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        pattern: PatternArgs,
        /// Write the JSON report here (`-` for stdout) instead of a table.
        #[arg(long)]
        json: Option<String>,
    },
    /// Local search for a large Perron root beyond enumeration range.
    Hillclimb {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        pattern: PatternArgs,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum Construction {
    /// K_{1,k} with the center at 0.
    Star {
        #[arg(long)]
        k: usize,
    },
    /// Disjoint stars; with --p, every edge becomes a K_{p+1}.
    StarForest {
        #[arg(long, value_delimiter = ',', required = true)]
        ks: Vec<usize>,
        #[arg(long)]
        p: Option<usize>,
    },
    /// Complete r-partite graph with balanced parts.
    Turan {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    /// Replace every edge of a graph6 graph with a K_{p+1}.
    Blowup {
        #[arg(long)]
        g6: String,
        #[arg(long)]
        p: usize,
    },
    /// Maximum graph with matching number <= nu and maximum degree <= delta.
    ChvatalHanson {
        #[arg(long)]
        nu: usize,
        #[arg(long)]
        delta: usize,
    },
    /// Extremal-family member on n vertices for the pattern.
    Extremal {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        pattern: PatternArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    G6,
    Dot,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Budget(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            Error::Verification(_) | Error::NotConverged { .. } => CliError::Internal(e.to_string()),
            Error::Graph(_) | Error::InvalidArgument(_) => CliError::Usage(e.to_string()),
        }
    }
}

impl From<Graph6Error> for CliError {
    fn from(e: Graph6Error) -> Self {
        CliError::Usage(format!("bad graph6 input: {e}"))
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn parse_g6(s: &str) -> Result<Graph, CliError> {
    let s = s.trim();
    Ok(decode_graph6(s.strip_prefix(">>graph6<<").unwrap_or(s))?)
}

impl Cli {
    fn search_config(&self) -> Result<SearchConfig, CliError> {
        if !(self.tol > 0.0 && self.tie_tol > 0.0) {
            return Err(CliError::Usage("--tol and --tie-tol must be positive".into()));
        }
        Ok(SearchConfig {
            max_n: self.max_n,
            shard_bits: self.shard_bits,
            spectral: SpectralConfig { tol: self.tol, tie_tol: self.tie_tol, ..SpectralConfig::default() },
        })
    }
}

#[derive(Serialize)]
struct QuotientJson {
    rho: f64,
    clique_entry: Option<f64>,
    part_entries: Vec<f64>,
    converged: bool,
}

#[derive(Serialize)]
struct TuranJson {
    n: usize,
    p: usize,
    ks: Vec<usize>,
    ex: usize,
    extremal_g6: Vec<String>,
    visited: u64,
}

#[derive(Serialize)]
struct SpectralGraphJson {
    g6: String,
    rho: f64,
}

#[derive(Serialize)]
struct SpectralJson {
    n: usize,
    p: usize,
    ks: Vec<usize>,
    rho_max: f64,
    graphs: Vec<SpectralGraphJson>,
    visited: u64,
    scored: u64,
}

#[derive(Serialize)]
struct HillClimbJson {
    n: usize,
    g6: String,
    edges: usize,
    rho: f64,
    start_rho: f64,
    started_from_construction: bool,
    accepted_moves: usize,
}

fn construct(kind: &Construction, format: Format) -> Result<String, CliError> {
    let mut labeling = None;
    let g = match kind {
        Construction::Star { k } => star(*k)?,
        Construction::StarForest { ks, p: None } => star_forest(&StarForestSpec::new(1, ks)?),
        Construction::StarForest { ks, p: Some(p) } => blown_up_star_forest(&StarForestSpec::new(*p, ks)?),
        Construction::Turan { r, n } => turan(*r, *n)?,
        Construction::Blowup { g6, p } => edge_blowup(&parse_g6(g6)?, *p)?,
        Construction::ChvatalHanson { nu, delta } => chvatal_hanson_graph(*nu, *delta)?,
        Construction::Extremal { n, pattern } => {
            let layout = extremal_family_layout(*n, &pattern.spec()?)?;
            // Turán classes first, the joined clique last
            let mut classes = layout.classes.clone();
            if !layout.core.is_empty() {
                classes.push(layout.core.clone());
            }
            labeling = Some(PartitionLabeling::from_classes(layout.graph.n(), &classes)?);
            layout.graph
        }
    };
    Ok(match format {
        Format::G6 => encode_graph6(&g) + "\n",
        Format::Dot => emit_dot(&g, labeling.as_ref()),
    })
}

fn table(report: &Report) -> String {
    let mut s = String::new();
    let row = |s: &mut String, k: &str, v: String| s.push_str(&format!("{k:<20}{v}\n"));
    row(&mut s, "n", report.n.to_string());
    row(&mut s, "p", report.p.to_string());
    row(&mut s, "ks", format!("{:?}", report.ks));
    row(&mut s, "ex (search)", report.ex_brute.to_string());
    row(&mut s, "ex (formula)", report.ex_formula.map_or("-".into(), |v| v.to_string()));
    row(&mut s, "|Ex|", report.extremal_g6.len().to_string());
    row(&mut s, "rho_max", format!("{}", round12(report.rho_max)));
    row(&mut s, "|Ex_sp|", report.exsp_g6.len().to_string());
    row(&mut s, "containment", report.containment_holds.to_string());
    row(&mut s, "formula matches", report.formula_matches.to_string());
    for d in &report.diagnostics.spectral {
        row(&mut s, "spectral graph", format!("{} rho={} chen_gap={} (bound {})", d.g6, round12(d.rho), d.chen_gap, d.chen_bound));
    }
    s
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let cfg = cli.search_config()?;
    match &cli.command {
        Command::Construct { format, kind } => write!(out, "{}", construct(kind, *format)?)?,
        Command::Rho { g6 } => {
            let g = parse_g6(g6)?;
            let r = spectral_radius(&g, &cfg.spectral)?;
            if !r.converged {
                return Err(Error::NotConverged { iterations: r.iterations, estimate: r.rho }.into());
            }
            write!(out, "{}", to_json(&RhoJson::from(&r)))?;
        }
        Command::QuotientRho { q, parts } => {
            let clique = q.checked_sub(1).ok_or_else(|| CliError::Usage("--q must be at least 1".into()))?;
            let s = quotient_spectrum(clique, parts, &cfg.spectral)?;
            if !s.converged {
                return Err(Error::NotConverged { iterations: cfg.spectral.max_iter, estimate: s.rho }.into());
            }
            let json = QuotientJson {
                rho: round12(s.rho),
                clique_entry: s.clique_entry.map(round12),
                part_entries: s.part_entries.into_iter().map(round12).collect(),
                converged: s.converged,
            };
            write!(out, "{}", to_json(&json))?;
        }
        Command::CheckFree { g6, pattern } => {
            let g = parse_g6(g6)?;
            let spec = pattern.spec()?;
            if g.n() > blowup_core::freeness::MAX_HOST_ORDER {
                return Err(CliError::Budget(format!("host has {} vertices", g.n())));
            }
            let w = find_blowup_star_forest(&g, &spec);
            if let Some(w) = &w {
                if !w.verify(&g, &spec) {
                    return Err(CliError::Internal("embedding failed re-verification".into()));
                }
            }
            write!(out, "{}", to_json(&FreenessJson::from(w.as_ref())))?;
        }
        Command::TuranNumber { n, pattern } => {
            let spec = pattern.spec()?;
            let t = turan_number_parallel(*n, &spec, &cfg)?;
            let json = TuranJson {
                n: *n,
                p: spec.p(),
                ks: spec.ks().to_vec(),
                ex: t.ex,
                extremal_g6: t.extremal.iter().map(encode_graph6).collect(),
                visited: t.visited,
            };
            write!(out, "{}", to_json(&json))?;
        }
        Command::SpectralExtremal { n, pattern } => {
            let spec = pattern.spec()?;
            let s = spectral_extremal_parallel(*n, &spec, &cfg)?;
            let json = SpectralJson {
                n: *n,
                p: spec.p(),
                ks: spec.ks().to_vec(),
                rho_max: round12(s.rho_max),
                graphs: s.graphs.iter().map(|(g, rho)| SpectralGraphJson { g6: encode_graph6(g), rho: round12(*rho) }).collect(),
                visited: s.visited,
                scored: s.scored,
            };
            write!(out, "{}", to_json(&json))?;
        }
        Command::Verify { n, pattern, json } => {
            let spec = pattern.spec()?;
            let start = Instant::now();
            let r = verify_parallel(*n, &spec, &cfg)?;
            let report = Report::from_verification(&r, start.elapsed().as_millis() as u64);
            match json.as_deref() {
                Some("-") => write!(out, "{}", to_json(&report))?,
                Some(path) => {
                    fs::write(path, to_json(&report))?;
                    write!(out, "{}", table(&report))?;
                }
                None => write!(out, "{}", table(&report))?,
            }
        }
        Command::Hillclimb { n, pattern, steps, seed } => {
            let spec = pattern.spec()?;
            let h = hill_climb(*n, &spec, *steps, *seed, &cfg.spectral)?;
            let json = HillClimbJson {
                n: *n,
                g6: encode_graph6(&h.graph),
                edges: h.graph.edge_count(),
                rho: round12(h.rho),
                start_rho: round12(h.start_rho),
                started_from_construction: h.started_from_construction,
                accepted_moves: h.accepted_moves,
            };
            write!(out, "{}", to_json(&json))?;
        }
    }
    Ok(())
}

fn init_logging(verbose: u8) {
    let level = match verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        2 => log::LevelFilter::Debug,
        _ => log::LevelFilter::Trace,
    };
    // configured from flags only; the environment is not consulted
    let _ = env_logger::Builder::new().filter_level(level).try_init();
}

/// Runs the command line on `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    init_logging(cli.verbose);
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
