//! `curvetop analyze`: certified topology of a plane curve from the command line.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use curvetop::topo::{analyze, emit, parse_poly, Format, Options, DEFAULT_MAX_DEGREE};
use curvetop::Error;

#[derive(Parser)]
#[command(name = "curvetop", version, about = "Certified topology of real plane algebraic curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the topology of P(x, y) = 0.
    Analyze {
        /// File holding the polynomial, as text or as JSON terms.
        #[arg(long, required_unless_present = "expr")]
        input: Option<PathBuf>,
        /// Polynomial given inline; takes precedence over --input.
        #[arg(long)]
        expr: Option<String>,
        /// Output file; standard output when omitted or "-".
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "json", value_parser = parse_format)]
        format: Format,
        /// Print sizes and timing to standard error.
        #[arg(long)]
        stats: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::ZeroPolynomial => 2,
        Error::NotSquareFree => 3,
        Error::DegreeCap { .. } => 5,
        _ => 4,
    }
}

fn main() -> ExitCode {
    let Command::Analyze { input, expr, out, format, stats, max_degree } = Cli::parse().command;
    let source = match (expr, input) {
        (Some(e), _) => e,
        (None, Some(path)) => match std::fs::read_to_string(&path) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("curvetop: cannot read {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        (None, None) => unreachable!("clap requires --input or --expr"),
    };
    let start = Instant::now();
    let result = parse_poly(&source).and_then(|p| analyze(&p, &Options { max_degree }));
    let analysis = match result {
        Ok(a) => a,
        Err(e) => {
            eprintln!("curvetop: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    let text = emit(&analysis, format);
    match out.filter(|p| p.as_os_str() != "-") {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                eprintln!("curvetop: cannot write {}: {e}", path.display());
                return ExitCode::from(4);
            }
        }
        None => print!("{text}"),
    }
    if stats {
        let s = &analysis.stats;
        eprintln!("total degree      {}", s.total_degree);
        eprintln!("special values    {}", s.special_values);
        eprintln!("roots of S_X/S_Y  {}/{}", s.sx_roots, s.sy_roots);
        eprintln!("critical points   {}", s.critical_points);
        eprintln!("vertical lines    {}", s.vertical_lines);
        eprintln!("audited facts     {}", s.audited);
        eprintln!("graph             {} vertices, {} edges", analysis.graph.vertex_count(), analysis.graph.edges.len());
        eprintln!("elapsed           {} ms", start.elapsed().as_millis());
    }
    ExitCode::SUCCESS
}
