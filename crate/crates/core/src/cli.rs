//! Command-line front end. Exit codes: 0 all checks pass, 1 a mathematical
//! mismatch, 2 a usage or input error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::dsl::parse;
use crate::error::Error;
use crate::oracle::punctual::{DEFAULT_BUDGET, MAX_COLENGTH, MIN_BUDGET};
use crate::oracle::{self, Bridge, Curve, EnumOptions, FqCountResult, Status};
use crate::ring::MotiveClass;
use crate::strata::render::{suite_csv, suite_markdown, suite_text};
use crate::strata::{assemble, omega26_assembled, verify_all, Registry, Target, VerificationSuite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "motivic",
    version,
    about = "Motivic classes of moduli of plane sheaves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Gr,
    Punctual,
    Hilb2,
    Bridges,
}

/// `all` or a single target.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selection {
    All,
    One(Target),
}

fn parse_selection(s: &str) -> Result<Selection, String> {
    if s == "all" {
        return Ok(Selection::All);
    }
    s.parse().map(Selection::One).map_err(|e: Error| {
        format!("{e}; expected one of m11, m21, m31, m41, m51, m52, omega26, all")
    })
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression to its class.
    Eval { expr: String },
    /// Assemble moduli classes and compare them with the stated tables.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_selection)]
        target: Selection,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Registry JSON to use instead of the bundled one.
        #[arg(long)]
        registry: Option<PathBuf>,
    },
    /// Run finite-field counters and compare them with the classes.
    Oracle {
        #[arg(long, value_enum)]
        check: Check,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        q: Vec<u32>,
        /// Largest colength for the ideal counts (default 6, or 3 for bridges).
        #[arg(long)]
        max_colength: Option<u32>,
        /// Limit on the generator-pair space of one ideal count.
        #[arg(long, env = "MOTIVIC_BUDGET")]
        budget: Option<u128>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Every registry entry with its evaluated class.
    Report {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        registry: Option<PathBuf>,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "{msg}");
            EXIT_USAGE
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    // stderr stays unlocked: enumeration workers report progress on it
    run(
        std::env::args_os(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr(),
    )
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, String> {
    match cmd {
        Command::Eval { expr } => cmd_eval(&expr, out),
        Command::Verify {
            target,
            format,
            output,
            registry,
        } => cmd_verify(target, format, output, registry, out),
        Command::Oracle {
            check,
            q,
            max_colength,
            budget,
            output,
        } => cmd_oracle(check, &q, max_colength, budget, output, out, err),
        Command::Report {
            format,
            output,
            registry,
        } => cmd_report(format, output, registry, out),
    }
}

fn emit(text: &str, output: Option<PathBuf>, out: &mut dyn Write) -> Result<(), String> {
    match output {
        Some(path) => std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    }
}

fn load_registry(path: Option<PathBuf>) -> Result<Registry, String> {
    match path {
        None => Ok(Registry::builtin()),
        Some(path) => {
            let text =
                std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
            Registry::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
        }
    }
}

fn coefficient_array(class: &MotiveClass) -> String {
    let items: Vec<String> = class.coeffs().iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

pub fn cmd_eval(expr: &str, out: &mut dyn Write) -> Result<i32, String> {
    let class = parse(expr)
        .and_then(|e| e.eval())
        .map_err(|e| e.to_string())?;
    let text = format!(
        "{class}\ncoefficients: {}\neuler: {}\n",
        coefficient_array(&class),
        class.euler()
    );
    emit(&text, None, out)?;
    Ok(EXIT_OK)
}

fn render_suite(suite: &VerificationSuite, format: Format) -> String {
    match format {
        Format::Json => suite.to_json() + "\n",
        Format::Csv => suite_csv(suite),
        Format::Md => suite_markdown(suite),
        Format::Text => suite_text(suite),
    }
}

pub fn cmd_verify(
    target: Selection,
    format: Format,
    output: Option<PathBuf>,
    registry: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let registry = load_registry(registry)?;
    let suite = match target {
        Selection::All => verify_all(&registry),
        Selection::One(Target::Omega26) => {
            let (_, consistency) = omega26_assembled(&registry);
            VerificationSuite::new(
                vec![assemble(&registry, Target::Omega26)],
                Some(consistency),
            )
        }
        Selection::One(t) => VerificationSuite::new(vec![assemble(&registry, t)], None),
    };
    emit(&render_suite(&suite, format), output, out)?;
    Ok(if suite.hard_pass() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_oracle(
    check: Check,
    qs: &[u32],
    max_colength: Option<u32>,
    budget: Option<u128>,
    output: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, String> {
    if let Some(&q) = qs.iter().find(|q| !matches!(q, 2..=4)) {
        return Err(format!("q = {q} is not supported; use 2, 3 or 4"));
    }
    let budget = budget.unwrap_or(DEFAULT_BUDGET);
    if budget < MIN_BUDGET {
        return Err(format!("budget {budget} is below the minimum {MIN_BUDGET}"));
    }
    let default_colength = if check == Check::Bridges {
        3
    } else {
        MAX_COLENGTH
    };
    let max_colength = max_colength.unwrap_or(default_colength);
    if !(1..=MAX_COLENGTH).contains(&max_colength) {
        return Err(format!("--max-colength must be in 1..={MAX_COLENGTH}"));
    }
    let opts = EnumOptions {
        budget,
        progress: true,
        ..EnumOptions::default()
    };
    let bridges: Vec<Bridge> = match check {
        Check::Gr => oracle::grassmannian_bridges(),
        Check::Hilb2 => vec![Bridge::Hilb(2)],
        Check::Punctual => {
            if let Some(&q) = qs.iter().find(|&&q| q == 4) {
                return Err(format!("ideal counts need q in {{2, 3}}, got {q}"));
            }
            Curve::ALL
                .into_iter()
                .flat_map(|curve| (1..=max_colength).map(move |c| Bridge::Punctual { curve, c }))
                .collect()
        }
        Check::Bridges => oracle::registered_bridges(max_colength),
    };
    let mut rows: Vec<FqCountResult> = Vec::new();
    for bridge in bridges {
        for row in oracle::bridge_check(bridge, qs, &opts) {
            let _ = match row.status() {
                Status::Skipped => writeln!(
                    err,
                    "{bridge} q={}: skipped ({})",
                    row.q,
                    row.note.as_deref().unwrap_or("")
                ),
                s => writeln!(
                    err,
                    "{bridge} q={}: {} vs {} {s} ({} ms){}",
                    row.q,
                    row.count.unwrap_or_default(),
                    row.expected,
                    row.millis,
                    row.note
                        .as_ref()
                        .map(|n| format!("; table sum is {n}"))
                        .unwrap_or_default()
                ),
            };
            rows.push(row);
        }
    }
    emit(&oracle::to_csv(&rows), output, out)?;
    let failed = rows.iter().any(|r| r.status() == Status::Fail);
    Ok(if failed { EXIT_MISMATCH } else { EXIT_OK })
}

#[derive(Serialize)]
struct ReportEntry<'a> {
    id: &'a str,
    #[serde(rename = "paper_ref")]
    citation: &'a str,
    expr: String,
    class: &'a MotiveClass,
    #[serde(with = "crate::ring::json_int")]
    euler: num_bigint::BigInt,
    #[serde(skip_serializing_if = "Option::is_none")]
    matches_expected: Option<bool>,
}

pub fn cmd_report(
    format: Format,
    output: Option<PathBuf>,
    registry: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let registry = load_registry(registry)?;
    let entries: Vec<ReportEntry> = registry
        .strata()
        .iter()
        .map(|s| ReportEntry {
            id: &s.spec.id,
            citation: &s.spec.citation,
            expr: s.expr.format(),
            class: &s.class,
            euler: s.class.euler(),
            matches_expected: s.spec.expected.as_ref().map(|_| s.matches_expected()),
        })
        .collect();
    let mut text = String::new();
    match format {
        Format::Json => {
            text = serde_json::to_string_pretty(&entries).expect("entries serialize") + "\n";
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["id", "expr", "class", "euler"])
                .expect("in-memory write");
            for e in &entries {
                w.write_record([e.id, &e.expr, &e.class.to_string(), &e.euler.to_string()])
                    .expect("in-memory write");
            }
            text = String::from_utf8(w.into_inner().expect("flush")).expect("utf8");
        }
        Format::Md => {
            text.push_str("| id | expr | class | euler |\n|---|---|---|---:|\n");
            for e in &entries {
                let _ = writeln!(
                    text,
                    "| {} | `{}` | {} | {} |",
                    e.id, e.expr, e.class, e.euler
                );
            }
        }
        Format::Text => {
            for e in &entries {
                let _ = writeln!(text, "{:<22} {:<32} {}", e.id, e.expr, e.class);
            }
        }
    }
    emit(&text, output, out)?;
    let mismatched = entries.iter().any(|e| e.matches_expected == Some(false));
    Ok(if mismatched { EXIT_MISMATCH } else { EXIT_OK })
}
