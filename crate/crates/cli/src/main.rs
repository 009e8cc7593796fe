//! Command-line front end for the Pascal / Pauli Pascal structures:
//! generate triangles and pyramid layers, dump sequence tables, assign
//! values to divergent series, and run the cross-oracle verify suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O
//! failure.

use pauli_pascal_cli::{gfspec, render, serial, verify};

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::json;

use pauli_pascal::divergent::abel_sum;
use pauli_pascal::multi_index::CommutationMode;
use pauli_pascal::pyramid::{layer, negative_layer, LayerSpec};
use pauli_pascal::sequences::{
    pauli_fib_closed, pauli_jacobsthal_closed, split_order_k_closed, ClosedForm, SequenceKind,
};
use pauli_pascal::{CoefficientTable, Rational};

use render::{cells_of, center_rows, pyramid_grid_values, rows_to_svg, triangle_row_values};
use serial::{format_rational, parse_rational, table_to_csv, table_to_json};

#[derive(Parser)]
#[command(
    name = "pauli-pascal",
    version,
    about = "Pascal and Pauli Pascal structures, exactly"
)]
struct Cli {
    /// Output format (svg applies to triangle and pyramid only)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for the randomized verification suites
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
    Svg,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Commutative generators
    Plain,
    /// Anticommutative generators
    Pauli,
}

impl From<Mode> for CommutationMode {
    fn from(mode: Mode) -> CommutationMode {
        match mode {
            Mode::Plain => CommutationMode::Commutative,
            Mode::Pauli => CommutationMode::AntiCommutative,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Render rows of the (Pauli) Pascal triangle
    Triangle {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Inclusive row range, e.g. 0..6 or -3..-3
        #[arg(long, allow_hyphen_values = true)]
        rows: String,
        /// Dominant generator (1-based), required for negative rows
        #[arg(long)]
        dominant: Option<usize>,
        /// Retained correction orders, required for negative rows
        #[arg(long)]
        truncation: Option<u32>,
    },
    /// Render one layer of the three-generator (Pauli) Pascal pyramid
    Pyramid {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Layer (total exponent), any sign
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Dominant generator (1-based), required for negative layers
        #[arg(long)]
        dominant: Option<usize>,
        /// Retained correction orders, required for negative layers
        #[arg(long)]
        truncation: Option<u32>,
    },
    /// Dump a sequence table with exact values and closed-form floats
    Sequence {
        /// fib | jacobsthal | fib-k | pauli-fib | pauli-jacobsthal | pauli-fib-k
        #[arg(long)]
        kind: String,
        /// Order for the fib-k / pauli-fib-k kinds
        #[arg(long)]
        k: Option<u32>,
        /// Inclusive index range, e.g. -6..-1
        #[arg(long, allow_hyphen_values = true)]
        range: String,
    },
    /// Run cross-oracle verification suites (default: all)
    Verify {
        /// Suite names, or "all"
        suites: Vec<String>,
    },
    /// Assign a value to a series by evaluating its generating function
    Sum {
        /// GF spec: terms x^s/(1-r*x)^m joined by '+'
        spec: String,
        /// Evaluation point (exact rational, e.g. -1 or -2/3)
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
}

struct Failure {
    message: String,
    code: u8,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        message: message.into(),
        code: 2,
    }
}

fn parse_range(text: &str) -> Result<(i64, i64), Failure> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| usage(format!("invalid range '{text}', expected A..B")))?;
    let a: i64 = a
        .trim()
        .parse()
        .map_err(|_| usage(format!("invalid range start '{a}'")))?;
    let b: i64 = b
        .trim()
        .parse()
        .map_err(|_| usage(format!("invalid range end '{b}'")))?;
    if a > b {
        return Err(usage(format!("empty range '{text}'")));
    }
    Ok((a, b))
}

/// 1-based dominant flag to the engine's 0-based position.
fn dominant_position(dominant: Option<usize>, dim: usize) -> Result<usize, Failure> {
    let d = dominant.ok_or_else(|| usage("negative exponents require --dominant"))?;
    if d < 1 || d > dim {
        return Err(usage(format!("--dominant must be in 1..={dim}")));
    }
    Ok(d - 1)
}

fn build_layer(
    dim: usize,
    n: i64,
    mode: CommutationMode,
    dominant: Option<usize>,
    truncation: Option<u32>,
) -> Result<CoefficientTable, Failure> {
    if n >= 0 {
        layer(&LayerSpec::positive(dim, n as u32, mode))
            .map_err(|e| usage(format!("cannot build layer {n}: {e}")))
    } else {
        let position = dominant_position(dominant, dim)?;
        let t = truncation.ok_or_else(|| usage("negative exponents require --truncation"))?;
        negative_layer(&LayerSpec::negative(dim, n, mode, position, t))
            .map_err(|e| usage(format!("cannot build layer {n}: {e}")))
    }
}

fn cmd_triangle(
    format: Format,
    mode: Mode,
    rows: &str,
    dominant: Option<usize>,
    truncation: Option<u32>,
) -> Result<String, Failure> {
    let (first, last) = parse_range(rows)?;
    let mode = CommutationMode::from(mode);
    let mut tables = Vec::new();
    for n in first..=last {
        tables.push(build_layer(2, n, mode, dominant, truncation)?);
    }
    Ok(match format {
        Format::Text => {
            let rows: Vec<Vec<String>> = tables
                .iter()
                .map(|t| cells_of(&triangle_row_values(t)))
                .collect();
            center_rows(&rows)
        }
        Format::Csv => {
            let mut out = String::new();
            for table in &tables {
                out.push_str(&cells_of(&triangle_row_values(table)).join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = tables.iter().map(table_to_json).collect();
            format!("{}\n", json!({ "rows": rows }))
        }
        Format::Svg => {
            let rows: Vec<Vec<String>> = tables
                .iter()
                .map(|t| cells_of(&triangle_row_values(t)))
                .collect();
            rows_to_svg(&rows)
        }
    })
}

fn cmd_pyramid(
    format: Format,
    mode: Mode,
    n: i64,
    dominant: Option<usize>,
    truncation: Option<u32>,
) -> Result<String, Failure> {
    let table = build_layer(3, n, CommutationMode::from(mode), dominant, truncation)?;
    Ok(match format {
        Format::Text => {
            let rows: Vec<Vec<String>> = pyramid_grid_values(&table)
                .iter()
                .map(|row| cells_of(row))
                .collect();
            center_rows(&rows)
        }
        Format::Csv => table_to_csv(&table),
        Format::Json => format!("{}\n", table_to_json(&table)),
        Format::Svg => {
            let rows: Vec<Vec<String>> = pyramid_grid_values(&table)
                .iter()
                .map(|row| cells_of(row))
                .collect();
            rows_to_svg(&rows)
        }
    })
}

struct SequenceRow {
    n: i64,
    exact: Rational,
    closed: Option<ClosedForm>,
}

/// Maps the CLI kind names onto the sequence family (order, plain/Pauli).
fn resolve_kind(kind: &str, k: Option<u32>) -> Result<SequenceKind, Failure> {
    let explicit = || match k {
        Some(k) => Ok(k),
        None => Err(usage(format!("kind '{kind}' requires --k"))),
    };
    let (order, pauli) = match kind {
        "fib" => (1, false),
        "jacobsthal" => (2, false),
        "fib-k" => (explicit()?, false),
        "pauli-fib" => (1, true),
        "pauli-jacobsthal" => (2, true),
        "pauli-fib-k" => (explicit()?, true),
        other => return Err(usage(format!("unknown sequence kind '{other}'"))),
    };
    SequenceKind::new(order, pauli).map_err(|e| usage(e.to_string()))
}

fn closed_form_of(kind: SequenceKind, n: i64) -> Option<ClosedForm> {
    if !kind.pauli {
        return None;
    }
    Some(match kind.order {
        1 => pauli_fib_closed(n),
        2 => pauli_jacobsthal_closed(n),
        k => split_order_k_closed(n, k),
    })
}

fn sequence_rows(
    kind: &str,
    k: Option<u32>,
    first: i64,
    last: i64,
) -> Result<Vec<SequenceRow>, Failure> {
    let kind = resolve_kind(kind, k)?;
    let mut rows = Vec::new();
    for n in first..=last {
        let exact = kind.value(n).map_err(|e| usage(e.to_string()))?;
        rows.push(SequenceRow {
            n,
            exact,
            closed: closed_form_of(kind, n),
        });
    }
    Ok(rows)
}

/// Twelve significant digits, scientific notation.
fn format_float(value: f64) -> String {
    format!("{value:.11e}")
}

fn cmd_sequence(
    format: Format,
    kind: &str,
    k: Option<u32>,
    range: &str,
) -> Result<String, Failure> {
    let (first, last) = parse_range(range)?;
    let rows = sequence_rows(kind, k, first, last)?;
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            for row in &rows {
                out.push_str(&format!("{}: {}\n", row.n, format_rational(&row.exact)));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("n,exact_num,exact_den,closed_form_float,abs_error\n");
            for row in &rows {
                let (closed, error) = match &row.closed {
                    Some(c) => {
                        let exact_float = row.exact.to_f64().unwrap_or(f64::NAN);
                        (
                            format_float(c.value),
                            format_float((c.value - exact_float).abs()),
                        )
                    }
                    None => (String::new(), String::new()),
                };
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    row.n,
                    row.exact.numer(),
                    row.exact.denom(),
                    closed,
                    error
                ));
            }
            out
        }
        Format::Json => {
            let values: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let closed = row.closed.as_ref().map(|c| c.value);
                    let error = row
                        .closed
                        .as_ref()
                        .map(|c| (c.value - row.exact.to_f64().unwrap_or(f64::NAN)).abs());
                    json!({
                        "n": row.n,
                        "exact_num": row.exact.numer().to_string(),
                        "exact_den": row.exact.denom().to_string(),
                        "closed_form_float": closed,
                        "abs_error": error,
                    })
                })
                .collect();
            format!("{}\n", json!({ "kind": kind, "k": k, "values": values }))
        }
        Format::Svg => return Err(usage("svg output applies to triangle and pyramid only")),
    })
}

fn cmd_sum(spec: &str, at: &str) -> Result<String, Failure> {
    let gf = gfspec::parse_gf_spec(spec)
        .ok_or_else(|| usage(format!("cannot parse GF spec '{spec}'")))?;
    let x0 = parse_rational(at).ok_or_else(|| usage(format!("invalid evaluation point '{at}'")))?;
    let value = abel_sum(&gf, &x0).map_err(|e| usage(e.to_string()))?;
    Ok(format!("{}\n", format_rational(&value)))
}

fn run(cli: &Cli) -> Result<(String, u8), Failure> {
    match &cli.command {
        Command::Triangle {
            mode,
            rows,
            dominant,
            truncation,
        } => cmd_triangle(cli.format, *mode, rows, *dominant, *truncation).map(|s| (s, 0)),
        Command::Pyramid {
            mode,
            n,
            dominant,
            truncation,
        } => cmd_pyramid(cli.format, *mode, *n, *dominant, *truncation).map(|s| (s, 0)),
        Command::Sequence { kind, k, range } => {
            cmd_sequence(cli.format, kind, *k, range).map(|s| (s, 0))
        }
        Command::Verify { suites } => match verify::run(suites, cli.seed) {
            None => Err(usage(format!(
                "unknown suite; available: {}",
                verify::SUITES.join(", ")
            ))),
            Some((report, true)) => Ok((report, 0)),
            Some((report, false)) => Ok((report, 1)),
        },
        Command::Sum { spec, at } => cmd_sum(spec, at).map(|s| (s, 0)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((output, code)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &output) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(3);
                }
            } else {
                print!("{output}");
            }
            ExitCode::from(code)
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
