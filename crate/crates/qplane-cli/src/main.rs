//! `qplane`: verification suites, uncertainty reports and dynamics tables.
//!
//! Exit status: 0 when every check passes, 1 when a check fails, 2 on usage
//! or parameter errors.

// `!(x > 0.0)` style tests are there to reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod dynamics;
mod error;
mod report;
mod uncertainty;
mod verify;

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde_json::Value;

use error::CliError;
use report::{write_file, Check, Document, Manifest, Plot, Table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Verify,
    Uncertainty,
    Dynamics,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Plus,
    Minus,
}

/// Exact and numerical checks of q-deformed quantum mechanics on the
/// quantum plane.
///
/// verify [all|algebra|hopf|circle]
///   exact identity suites, Hopf and pairing axioms, circle relations
/// uncertainty <gaussian|plane|radial>
///   uncertainty reports for the three packet families
/// dynamics <stationary|zeros|heisenberg>
///   Bessel stationary states, zero scaling, Heisenberg equations
#[derive(Debug, Parser)]
#[command(name = "qplane", version, verbatim_doc_comment)]
pub struct Args {
    pub command: Command,
    pub subcommand: Option<String>,
    /// q ∈ (0, 1); verify takes a comma-separated list [verify: 0.5,0.9,0.99;
    /// gaussian: 0.999; others: 0.9]
    #[arg(long, value_delimiter = ',')]
    pub q: Vec<f64>,
    /// polynomial degree [verify: 6 (max 8); plane: 20; heisenberg: 4 (max 8)]
    #[arg(long)]
    pub degree: Option<u32>,
    /// circle basis truncation |j| ≤ J [64]
    #[arg(long = "J")]
    pub big_j: Option<i64>,
    /// angular index [radial: 1; stationary: 0]
    #[arg(long)]
    pub j: Option<i64>,
    /// largest j in the zero table [5, max 8]
    #[arg(long)]
    pub jmax: Option<u32>,
    /// Gaussian width ε [1]
    #[arg(long)]
    pub eps: Option<f64>,
    /// stationary energy ε [1]
    #[arg(long)]
    pub energy: Option<f64>,
    /// stationary grid size [401]
    #[arg(long)]
    pub grid: Option<usize>,
    /// stationary grid radius [15/k with k = √(2mε)/ħ]
    #[arg(long)]
    pub rmax: Option<f64>,
    /// primary tolerance [circle: 1e-13; gaussian: 0.01 relative;
    /// plane: 1e-10 margin; radial: 1e-8; stationary, zeros: 1e-8]
    #[arg(long)]
    pub tol: Option<f64>,
    /// ⟨p̂₊⟩ as an exact decimal or fraction [1/2]
    #[arg(long = "p-plus", allow_hyphen_values = true)]
    pub p_plus: Option<String>,
    /// ⟨p̂₋⟩ as an exact decimal or fraction [1]
    #[arg(long = "p-minus", allow_hyphen_values = true)]
    pub p_minus: Option<String>,
    /// which eigen-equation the plane wave solves [plus]
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
    /// envelope width w of e^{−ξ/w²} for plane-wave moments [2]
    #[arg(long)]
    pub envelope: Option<f64>,
    /// |c| of the minimal radial packet [1]
    #[arg(long)]
    pub cmag: Option<f64>,
    /// RNG seed for random Hopf samples [7]
    #[arg(long)]
    pub seed: Option<u64>,
    /// number of random pairing samples [100]
    #[arg(long)]
    pub random: Option<usize>,
    /// report path; stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// SVG plot path
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// record the wall-clock time in the manifest (breaks byte identity)
    #[arg(long)]
    pub timestamp: bool,
}

impl Args {
    pub fn q_or(&self, default: f64) -> Result<f64, CliError> {
        match self.q.as_slice() {
            [] => Ok(default),
            [q] => Ok(*q),
            _ => Err(CliError::usage("this command takes a single --q")),
        }
    }

    pub fn tol_or(&self, default: f64) -> Result<f64, CliError> {
        match self.tol {
            None => Ok(default),
            Some(t) if t >= 0.0 && t.is_finite() => Ok(t),
            Some(t) => Err(CliError::usage(format!("--tol {t} must be a nonnegative number"))),
        }
    }
}

/// What a command hands back for assembly into the report.
pub struct Outcome {
    pub subcommand: String,
    pub parameters: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
    pub details: Value,
    pub table: Option<Table>,
    pub plot: Option<Plot>,
}

fn run(args: &Args) -> Result<bool, CliError> {
    let outcome = match args.command {
        Command::Verify => verify::run(args)?,
        Command::Uncertainty => uncertainty::run(args)?,
        Command::Dynamics => dynamics::run(args)?,
    };
    let mut outputs = Vec::new();
    if let Some(path) = &args.svg {
        let plot = outcome.plot.as_ref().ok_or_else(|| CliError::usage("this command has no plot"))?;
        outputs.push(write_file(path, &plot.to_svg())?);
    }
    let command = match args.command {
        Command::Verify => "verify",
        Command::Uncertainty => "uncertainty",
        Command::Dynamics => "dynamics",
    };
    let timestamp = args.timestamp.then(|| {
        let t = std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).unwrap_or_default();
        format!("{}", t.as_secs())
    });
    let doc = Document {
        manifest: Manifest {
            command: command.into(),
            subcommand: outcome.subcommand,
            parameters: outcome.parameters,
            library_version: qplane::VERSION.into(),
            timestamp,
            outputs,
        },
        checks: outcome.checks,
        warnings: outcome.warnings,
        details: outcome.details,
    };
    let text = match args.format {
        Format::Json => doc.to_json()?,
        Format::Csv => outcome.table.unwrap_or_else(|| Table::from_checks(&doc.checks)).to_csv()?,
    };
    match &args.out {
        Some(p) => {
            write_file(p, &text)?;
        }
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    for c in doc.checks.iter().filter(|c| c.status == report::Status::Fail) {
        eprintln!("FAIL {}", c.name);
    }
    Ok(doc.passed())
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let kind = match &e {
                CliError::Usage(_) => "usage",
                CliError::Library(_) => "parameter",
                _ => "io",
            };
            let msg = serde_json::json!({ "error": kind, "message": e.to_string() });
            eprintln!("{msg}");
            if matches!(e, CliError::Usage(_)) {
                eprintln!("run `qplane --help` for usage");
            }
            ExitCode::from(2)
        }
    }
}
