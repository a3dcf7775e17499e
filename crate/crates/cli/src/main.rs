//! `fractal-tutte`: batch front end for the fractal-tutte-core library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 resource cap, 4 domain error. Nothing is written to stdout unless the
//! command succeeds.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fractal_tutte_core::invariants::{
    acyclic_root_connected, bicycle_dimension, diagonal_closed_with_cap, growth_constant,
    indegree_sequences_strong, potts_lattice, spanning_trees_closed, PottsParams,
    MAX_CLOSED_FORM_GENERATION,
};
use fractal_tutte_core::oracle::tutte_deletion_contraction;
use fractal_tutte_core::recursion::{tutte_symbolic_with_cap, DEFAULT_SYMBOLIC_CAP};
use fractal_tutte_core::verify::{self, MAX_ORACLE_GENERATION};
use fractal_tutte_core::{
    build_lattice, parse_rational, tutte_eval, BiPoly, Error, ExactRational, LatticeFamily,
};
use serde_json::{json, Value};

const THREADS_ENV: &str = "FRACTAL_TUTTE_THREADS";

#[derive(Parser, Debug)]
#[command(name = "fractal-tutte", version, about = "Exact Tutte polynomials of self-similar lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit the lattice as an edge list or JSON graph.
    Gen {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
    /// Print the Tutte polynomial.
    Tutte {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Mode::Recursive)]
        mode: Mode,
        #[arg(long, default_value_t = DEFAULT_SYMBOLIC_CAP)]
        symbolic_cap: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
    /// Evaluate the Tutte polynomial at a rational point.
    Eval {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
    /// Closed-form invariants.
    Invariant {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum)]
        quantity: Quantity,
        #[arg(long, default_value_t = DEFAULT_SYMBOLIC_CAP)]
        symbolic_cap: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
    /// Potts partition function with q states and coupling v.
    Potts {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
    /// Spanning-tree growth constant and its finite-n approximants.
    Growth {
        #[arg(long, value_parser = parse_family)]
        family: LatticeFamily,
        #[arg(long)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
    /// Run the cross-check gates.
    Verify {
        #[arg(long, default_value_t = MAX_ORACLE_GENERATION)]
        n_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        out: Out,
    },
}

#[derive(Args, Debug)]
struct Target {
    #[arg(long, value_parser = parse_family)]
    family: LatticeFamily,
    #[arg(long)]
    n: u32,
}

#[derive(Args, Debug)]
struct Out {
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Recursive,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Quantity {
    SpanningTrees,
    AcyclicOrientations,
    StrongIndegreeSequences,
    BicycleDimension,
    Diagonal,
}

impl Quantity {
    fn name(self) -> &'static str {
        match self {
            Quantity::SpanningTrees => "spanning-trees",
            Quantity::AcyclicOrientations => "acyclic-orientations",
            Quantity::StrongIndegreeSequences => "strong-indegree-sequences",
            Quantity::BicycleDimension => "bicycle-dimension",
            Quantity::Diagonal => "diagonal",
        }
    }
}

fn parse_family(s: &str) -> Result<LatticeFamily, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => 2,
            Error::CapExceeded { .. } => 3,
            Error::Domain(_) | Error::NotDivisible { .. } | Error::InvalidGraph(_) => 4,
        };
        Self { code, message: e.to_string() }
    }
}

fn rational_json(v: &ExactRational) -> Value {
    if v.is_integer() {
        Value::String(v.numer().to_string())
    } else {
        json!({ "num": v.numer().to_string(), "den": v.denom().to_string() })
    }
}

fn record(target: &Target, quantity: &str, value: Value) -> Value {
    json!({
        "family": target.family.as_str(),
        "n": target.n,
        "quantity": quantity,
        "value": value,
    })
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Text form of a record value: the bare number or polynomial.
fn render_value_text(v: &Value) -> String {
    match v {
        Value::String(s) => format!("{s}\n"),
        Value::Object(m) if m.contains_key("num") => {
            format!("{}/{}\n", m["num"].as_str().unwrap_or(""), m["den"].as_str().unwrap_or(""))
        }
        other => render_json(other),
    }
}

fn render_record(format: Format, rec: Value) -> String {
    match format {
        Format::Json => render_json(&rec),
        Format::Text => render_value_text(&rec["value"]),
    }
}

fn render_poly(format: Format, p: &BiPoly) -> String {
    match format {
        Format::Json => format!("{}\n", p.to_json()),
        Format::Text => format!("{p}\n"),
    }
}

fn rational_flag(name: &str, s: &str) -> Result<ExactRational, Failure> {
    parse_rational(s).map_err(|e| Failure::usage(format!("--{name}: {e}")))
}

fn fractal_only(target: &Target, quantity: Quantity) -> Result<(), Failure> {
    if target.family == LatticeFamily::Fractal {
        Ok(())
    } else {
        Err(Failure {
            code: 4,
            message: format!("{} is only defined for the fractal family", quantity.name()),
        })
    }
}

/// Runs a command and returns its output text and destination.
fn execute(command: Command) -> Result<(String, Option<PathBuf>), Failure> {
    match command {
        Command::Gen { target, format, out } => {
            let g = build_lattice(target.family, target.n)?;
            let text = match format {
                Format::Text => g.to_edge_list(),
                Format::Json => render_json(&serde_json::to_value(&g).expect("graph serializes")),
            };
            Ok((text, out.out))
        }
        Command::Tutte { target, mode, symbolic_cap, format, out } => {
            let t = match mode {
                Mode::Recursive => tutte_symbolic_with_cap(target.family, target.n, symbolic_cap)?,
                Mode::Oracle => {
                    if target.n > MAX_ORACLE_GENERATION {
                        return Err(Error::CapExceeded {
                            what: "oracle generation",
                            value: target.n.into(),
                            cap: MAX_ORACLE_GENERATION.into(),
                        }
                        .into());
                    }
                    tutte_deletion_contraction(&build_lattice(target.family, target.n)?)?
                }
            };
            Ok((render_poly(format, &t), out.out))
        }
        Command::Eval { target, x, y, format, out } => {
            let x = rational_flag("x", &x)?;
            let y = rational_flag("y", &y)?;
            let value = tutte_eval(target.family, target.n, &x, &y)?;
            let rec = record(&target, "tutte", rational_json(&value));
            Ok((render_record(format, rec), out.out))
        }
        Command::Invariant { target, quantity, symbolic_cap, format, out } => {
            let n = target.n;
            if n > MAX_CLOSED_FORM_GENERATION {
                return Err(Error::CapExceeded {
                    what: "closed-form generation",
                    value: n.into(),
                    cap: MAX_CLOSED_FORM_GENERATION.into(),
                }
                .into());
            }
            if quantity != Quantity::SpanningTrees {
                fractal_only(&target, quantity)?;
            }
            let value = match quantity {
                Quantity::SpanningTrees => Value::String(spanning_trees_closed(target.family, n)?.to_string()),
                Quantity::AcyclicOrientations => Value::String(acyclic_root_connected(n)?.to_string()),
                Quantity::StrongIndegreeSequences => Value::String(indegree_sequences_strong(n)?.to_string()),
                Quantity::BicycleDimension => Value::String(bicycle_dimension(n).to_string()),
                Quantity::Diagonal => {
                    let p = diagonal_closed_with_cap(n, symbolic_cap)?;
                    if format == Format::Text {
                        return Ok((render_poly(format, &p), out.out));
                    }
                    serde_json::to_value(&p).expect("polynomial serializes")
                }
            };
            Ok((render_record(format, record(&target, quantity.name(), value)), out.out))
        }
        Command::Potts { target, q, v, format, out } => {
            let params = PottsParams::new(rational_flag("q", &q)?, rational_flag("v", &v)?);
            let z = potts_lattice(target.family, target.n, &params)?;
            let rec = record(&target, "potts", rational_json(&z));
            Ok((render_record(format, rec), out.out))
        }
        Command::Growth { family, n_max, format, out } => {
            let g = growth_constant(family, n_max)?;
            let text = match format {
                Format::Json => {
                    let sequence: Vec<Value> = g
                        .sequence
                        .iter()
                        .map(|&(n, v)| json!({ "n": n, "value": v }))
                        .collect();
                    render_json(&json!({
                        "family": family.as_str(),
                        "n": n_max,
                        "quantity": "growth",
                        "value": g.last(),
                        "exact": g.exact,
                        "decimal": g.decimal,
                        "sequence": sequence,
                    }))
                }
                Format::Text => {
                    let mut s = format!("limit {} = {:.6}\n", g.exact, g.decimal);
                    for (n, v) in &g.sequence {
                        s.push_str(&format!("n={n} {v:.6}\n"));
                    }
                    s
                }
            };
            Ok((text, out.out))
        }
        Command::Verify { n_max, format, out } => {
            // Asking for oracle generations beyond the cap is a usage error here.
            let report = verify::run(n_max).map_err(|e| Failure::usage(e.to_string()))?;
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => render_json(&serde_json::to_value(&report).expect("report serializes")),
            };
            if let Some(first) = report.first_failure() {
                let mut message = text.clone();
                message.push_str(&format!("first failing gate: {} ({})", first.name, first.detail));
                return Err(Failure { code: 1, message });
            }
            Ok((text, out.out))
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Failure::usage(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::usage(format!("{THREADS_ENV}: {e}")))
}

fn emit(text: &str, path: Option<PathBuf>) -> Result<(), Failure> {
    match path {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Failure::usage(format!("cannot write to stdout: {e}")))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = configure_threads()
        .and_then(|()| execute(cli.command))
        .and_then(|(text, path)| emit(&text, path));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("fractal-tutte: {}", f.message.trim_end());
            ExitCode::from(f.code)
        }
    }
}
