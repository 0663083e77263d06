use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use jsubgraph::export::{export, ExportFormat};
use jsubgraph::oracle::{differential_check, subtype};
use jsubgraph::typelang::{parse_ground_type, ClassTable};
use jsubgraph::{run, IterationTrace};

const MISMATCH: u8 = 2;

#[derive(Parser)]
#[command(name = "jsubgraph", version, about = "Build and query ground generic Java subtyping graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the k-th approximation of the subtyping graph
    Build {
        #[arg(long)]
        decls: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        iterations: u32,
        #[arg(long, value_parser = parse_format)]
        format: ExportFormat,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decide `type1 <: type2` with both the graph and the rules
    Query {
        #[arg(long)]
        decls: PathBuf,
        type1: String,
        type2: String,
    },
    /// Print `iteration vertices edges` per approximation
    Stats {
        #[arg(long)]
        decls: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        iterations: u32,
    },
    /// Compare graph and rule-based subtyping on every pair up to a rank
    Selfcheck {
        #[arg(long)]
        decls: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_rank: u32,
    },
}

fn parse_format(s: &str) -> Result<ExportFormat, String> {
    s.parse()
}

fn load(path: &Path) -> Result<ClassTable, String> {
    let src = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    ClassTable::parse(&src).map_err(|e| format!("{}:{e}", path.display()))
}

fn print_stats(out: &mut impl Write, trace: &IterationTrace) -> io::Result<()> {
    for s in trace.stats() {
        writeln!(out, "{} {} {}", s.iteration, s.vertices, s.edges)?;
    }
    Ok(())
}

fn execute(command: Command) -> Result<ExitCode, String> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let io_err = |e: io::Error| e.to_string();
    match command {
        Command::Build {
            decls,
            iterations,
            format,
            out: path,
        } => {
            let table = load(&decls)?;
            let trace = run(&table, iterations as usize).map_err(|e| e.to_string())?;
            fs::write(&path, export(trace.last().graph(), format))
                .map_err(|e| format!("{}: {e}", path.display()))?;
            print_stats(&mut out, &trace).map_err(io_err)?;
        }
        Command::Stats { decls, iterations } => {
            let table = load(&decls)?;
            let trace = run(&table, iterations as usize).map_err(|e| e.to_string())?;
            print_stats(&mut out, &trace).map_err(io_err)?;
        }
        Command::Query {
            decls,
            type1,
            type2,
        } => {
            let table = load(&decls)?;
            let sub = parse_ground_type(&type1, &table).map_err(|e| e.to_string())?;
            let sup = parse_ground_type(&type2, &table).map_err(|e| e.to_string())?;
            let depth = sub.rank().max(sup.rank()).max(1);
            let trace = run(&table, depth).map_err(|e| e.to_string())?;
            let by_graph = trace.subtype(&sub, &sup).map_err(|e| e.to_string())?;
            let by_rules = subtype(&sub, &sup, &table);
            writeln!(out, "graph: {by_graph}").map_err(io_err)?;
            writeln!(out, "oracle: {by_rules}").map_err(io_err)?;
            if by_graph != by_rules {
                return Ok(ExitCode::from(MISMATCH));
            }
        }
        Command::Selfcheck { decls, max_rank } => {
            let table = load(&decls)?;
            let report = differential_check(&table, max_rank as usize).map_err(|e| e.to_string())?;
            for m in &report.mismatches {
                writeln!(
                    out,
                    "mismatch: {} <: {} graph={} oracle={}",
                    m.sub, m.sup, m.by_graph, m.by_rules
                )
                .map_err(io_err)?;
            }
            writeln!(
                out,
                "{} types, {} pairs, {} mismatches",
                report.types,
                report.pairs,
                report.mismatches.len()
            )
            .map_err(io_err)?;
            if !report.is_clean() {
                return Ok(ExitCode::from(MISMATCH));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
