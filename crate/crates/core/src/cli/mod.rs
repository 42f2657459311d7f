//! Command-line front end.

mod parser;
mod pipeline;
mod report;
mod ringfile;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cech::{class_frobenius, component_basis, veronese_component_basis};
use crate::certify::{
    component_kernel, f_injectivity_with, f_rational_veronese_certificate, Strategy, Verdict, VeroneseOptions,
};
use crate::error::{Error, Result};

pub use parser::{line_col, parse_class, parse_poly, parse_scalar, ParseError, Scope};
pub use pipeline::{report_ring, run_family_a, run_family_b, DEFAULT_MAX_P_A, DEFAULT_MAX_P_B};
pub use report::{CertificateRecord, FieldRecord, Report, SCHEMA_VERSION};
pub use ringfile::{load_ring_file, parse_ring_file};

#[derive(Parser, Debug)]
#[command(name = "fsing", version, about = "Frobenius actions on top local cohomology over F_p(t)")]
pub struct Cli {
    /// Also write the report as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Zero all timings for reproducible output.
    #[arg(long, global = true)]
    pub no_timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the verification pipeline for one of the two families.
    Verify {
        family: Family,
        #[arg(long = "p")]
        p: u32,
        /// Largest prime accepted (defaults: family-a 5, family-b 3).
        #[arg(long)]
        max_p: Option<u32>,
    },
    /// Inspect a ring given by a TOML file.
    Analyze {
        ring: PathBuf,
        #[command(subcommand)]
        action: Analyze,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    FamilyA,
    FamilyB,
}

#[derive(Args, Debug)]
pub struct DegreeArg {
    /// Degree, comma separated for multigradings.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    pub degree: Vec<i64>,
}

#[derive(Subcommand, Debug)]
pub enum Analyze {
    /// List the canonical basis of a component.
    Basis {
        #[command(flatten)]
        degree: DegreeArg,
        /// Read the degree as a degree of the n-th Veronese subring.
        #[arg(long)]
        veronese: Option<u32>,
    },
    /// Apply F^e to a class literal.
    Frobenius {
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        #[arg(long, default_value_t = 1)]
        e: u32,
    },
    /// Kernel of F^e on a component; passes iff the kernel is empty.
    Kernel {
        #[command(flatten)]
        degree: DegreeArg,
        #[arg(long, default_value_t = 1)]
        e: u32,
        #[arg(long)]
        multigraded: bool,
    },
    /// F-rationality certificate for the n-th Veronese subring.
    Certify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        probe_cap: Option<u32>,
        #[arg(long)]
        multigraded: bool,
    },
}

fn strategy(multigraded: bool) -> Strategy {
    if multigraded {
        Strategy::Multigraded
    } else {
        Strategy::Direct
    }
}

pub fn run(command: &Command) -> Result<Report> {
    match command {
        Command::Verify { family: Family::FamilyA, p, max_p } => run_family_a(*p, max_p.unwrap_or(DEFAULT_MAX_P_A)),
        Command::Verify { family: Family::FamilyB, p, max_p } => run_family_b(*p, max_p.unwrap_or(DEFAULT_MAX_P_B)),
        Command::Analyze { ring, action } => analyze(&load_ring_file(ring)?, action),
    }
}

pub fn analyze(ring: &crate::rings::Ring, action: &Analyze) -> Result<Report> {
    let mut report = Report::new("custom", ring.field());
    report.data.insert("ring".into(), json!(ring.describe()));
    match action {
        Analyze::Basis { degree, veronese } => {
            let comp = match veronese {
                Some(n) => {
                    let [k] = degree.degree[..] else {
                        return Err(Error::DegreeRank { expected: 1, got: degree.degree.len() });
                    };
                    veronese_component_basis(ring, *n, k)?
                }
                None => component_basis(ring, &degree.degree)?,
            };
            report.data.insert("degree".into(), json!(comp.degree()));
            report.data.insert("dim".into(), json!(comp.dim()));
            let basis: Vec<String> = comp.basis().iter().map(|b| b.display(ring)).collect();
            report.data.insert("basis".into(), json!(basis));
        }
        Analyze::Frobenius { class, e } => {
            let eta = parse_class(class, ring)?;
            let image = class_frobenius(&eta, *e);
            report.data.insert("class".into(), json!(eta.display()));
            report.data.insert("e".into(), json!(e));
            report.data.insert("image".into(), json!(image.display()));
        }
        Analyze::Kernel { degree, e, multigraded } => {
            let k = component_kernel(ring, &degree.degree, *e, strategy(*multigraded))?;
            let kernel: Vec<String> = k.kernel.iter().map(|c| c.display()).collect();
            report.data.insert("dim".into(), json!(k.component.dim()));
            report.data.insert("kernel".into(), json!(kernel));
            let cert = f_injectivity_with(ring, &degree.degree, *e, strategy(*multigraded))?;
            report.push("f_injectivity", "S", Verdict::Pass, cert);
        }
        Analyze::Certify { n, probe_cap, multigraded } => {
            let opts = VeroneseOptions { strategy: strategy(*multigraded), probe_cap: *probe_cap };
            report.push("f_rational_veronese", "S", Verdict::Pass, f_rational_veronese_certificate(ring, *n, opts)?);
        }
    }
    Ok(report)
}

/// Runs a parsed command line: prints the summary, writes JSON if asked,
/// and returns the process exit code.
pub fn main_with(cli: Cli) -> i32 {
    let mut report = match run(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if cli.no_timings {
        report.strip_timings();
    }
    print!("{}", report.summary());
    if let Some(path) = &cli.json {
        if let Err(e) = std::fs::write(path, report.to_json()) {
            eprintln!("error: {}: {e}", path.display());
            return 2;
        }
    }
    if report.passed() {
        0
    } else {
        1
    }
}
