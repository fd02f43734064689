//! Command-line front end.
//!
//! Exit codes: 0 success, 1 domain error (or failed check), 2 usage error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::constructions::{build, BuildParams};
use crate::error::{Error, Result};
use crate::exec::Parallelism;
use crate::formulas::{ball_count, ball_enumerate, BallSpec};
use crate::graph_io;
use crate::lattice::{Family, LatticeParity};
use crate::solver::{solve_with, verify_witness, SolveMode, SolveRequest, DEFAULT_REGION_CAP};
use crate::verification::{check_conditions, sweep_table, table_csv, table_pretty};

#[derive(Parser, Debug)]
#[command(
    name = "mesh-ddbs",
    version,
    about = "Degree- and diameter-bounded subgraphs of the k-dimensional mesh"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a construction and print it as Graph JSON.
    Build {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long)]
        p: u32,
        /// Lattice for cycle and path (other families have a fixed lattice).
        #[arg(long)]
        parity: Option<ParityArg>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the family conditions of a Graph JSON file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Count lattice points of an l1 ball.
    Ball {
        #[arg(long)]
        parity: ParityArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long)]
        p: u32,
        /// Cross-check the formula against explicit enumeration.
        #[arg(long)]
        enumerate: bool,
    },
    /// Compare constructions with the ball bounds over a grid.
    Table {
        #[arg(long)]
        parity: ParityArg,
        /// Inclusive range `A..B` (or a single value).
        #[arg(long, value_parser = parse_range)]
        k: RangeInclusive<u32>,
        #[arg(long, value_parser = parse_range)]
        p: RangeInclusive<u32>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        delta: u32,
        #[arg(long, default_value = "csv")]
        format: TableFormat,
        #[arg(long)]
        sequential: bool,
    },
    /// Exactly solve a small instance.
    Solve {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        delta: u32,
        #[arg(long)]
        diameter: u32,
        #[arg(long, default_value = "exact")]
        mode: ModeArg,
        #[arg(long)]
        max_nodes: Option<u64>,
        #[arg(long)]
        time_limit_ms: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_REGION_CAP)]
        region_cap: usize,
        /// Print the full result as JSON.
        #[arg(long)]
        json: bool,
        #[arg(long)]
        sequential: bool,
    },
    /// Re-emit a Graph JSON file as canonical JSON or DOT.
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

impl From<ParityArg> for LatticeParity {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::Even => LatticeParity::Even,
            ParityArg::Odd => LatticeParity::Odd,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Csv,
    Pretty,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Exact,
    Induced,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<u32>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u32>()
            .map_err(|_| format!("expected a range A..B of non-negative integers, got `{s}`"))
    };
    match s.split_once("..") {
        Some((a, b)) => Ok(num(a)?..=num(b)?),
        None => {
            let v = num(s)?;
            Ok(v..=v)
        }
    }
}

/// Parses `argv` (including the program name) and runs one subcommand.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Build {
            family,
            k,
            p,
            parity,
            out: path,
        } => {
            let parity = parity
                .map(LatticeParity::from)
                .or(family.native_parity())
                .unwrap_or(LatticeParity::Even);
            let g = build(
                family,
                BuildParams {
                    k: k as usize,
                    p,
                    parity,
                },
            )?;
            emit(&graph_io::to_json(&g), path, out)?;
            Ok(0)
        }
        Command::Verify { input } => {
            let g = graph_io::from_json(&read(&input)?)?;
            let report = check_conditions(&g)?;
            writeln!(out, "{report}")?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Ball {
            parity,
            k,
            p,
            enumerate,
        } => {
            let spec = BallSpec::new(parity.into(), k as usize, p)?;
            let count = ball_count(spec);
            writeln!(out, "count={count}")?;
            if enumerate {
                let n = ball_enumerate(spec)?.len();
                let matched = num_bigint::BigUint::from(n) == count;
                writeln!(out, "enumerated={n}")?;
                writeln!(out, "oracle-match={matched}")?;
                if !matched {
                    return Ok(1);
                }
            }
            Ok(0)
        }
        Command::Table {
            parity,
            k,
            p,
            delta,
            format,
            sequential,
        } => {
            let ks = (*k.start() as usize)..=(*k.end() as usize);
            let rows = sweep_table(parity.into(), ks, delta, p, strategy(sequential))?;
            let text = match format {
                TableFormat::Csv => table_csv(&rows),
                TableFormat::Pretty => table_pretty(&rows),
            };
            out.write_all(text.as_bytes())?;
            Ok(0)
        }
        Command::Solve {
            k,
            delta,
            diameter,
            mode,
            max_nodes,
            time_limit_ms,
            region_cap,
            json,
            sequential,
        } => {
            let req = SolveRequest {
                k: k as usize,
                delta,
                diameter,
                mode: match mode {
                    ModeArg::Exact => SolveMode::Exact,
                    ModeArg::Induced => SolveMode::Induced,
                },
                max_nodes,
                time_limit_ms,
                region_cap,
            };
            let res = solve_with(&req, strategy(sequential))?;
            for note in &res.notes {
                writeln!(err, "note: {note}")?;
            }
            if json {
                out.write_all(res.to_json(&req).as_bytes())?;
            } else {
                writeln!(out, "optimum={}", res.optimum)?;
                writeln!(out, "optimal={}", res.optimal)?;
                writeln!(out, "verified={}", verify_witness(&res, &req))?;
                writeln!(out, "nodes={}", res.nodes)?;
                let edges: Vec<String> = res
                    .witness
                    .edge_points()
                    .map(|(a, b)| format!("{a}-{b}"))
                    .collect();
                writeln!(out, "witness_edges={}", edges.join(" "))?;
            }
            Ok(0)
        }
        Command::Export {
            input,
            format,
            out: path,
        } => {
            let g = graph_io::from_json(&read(&input)?)?;
            let text = match format {
                ExportFormat::Json => graph_io::to_json(&g),
                ExportFormat::Dot => graph_io::to_dot(&g),
            };
            emit(&text, path, out)?;
            Ok(0)
        }
    }
}

fn strategy(sequential: bool) -> Parallelism {
    if sequential {
        Parallelism::Sequential
    } else {
        Parallelism::default()
    }
}

fn read(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn emit(text: &str, path: Option<PathBuf>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(&p, text).map_err(|e| {
            Error::Io(std::io::Error::new(
                e.kind(),
                format!("{}: {e}", p.display()),
            ))
        }),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}
