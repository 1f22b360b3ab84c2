//! Command-line front end. `run` returns the exit status and the text to
//! print, so the binary is a thin wrapper.

use std::ffi::OsString;

use clap::{Parser, Subcommand};

use crate::canonical::canonical_tableau;
use crate::classification::{classify, witness_connected, witness_disconnected, Witness};
use crate::error::{Error, Result};
use crate::expansion::{
    decompose_border_minus_one, decompose_row_strip, decompose_single_box, expand, lambda_flip,
    monomial_oracle, QExpansion,
};
use crate::shapes::{orthogonal_transpose, SkewShape, StrictPartition};
use crate::tableaux::Tableau;
use crate::verify::{sweep, SweepOptions};

#[derive(Parser, Debug)]
#[command(
    name = "shiftq",
    version,
    about = "Skew Schur Q-function expansions and Q-homogeneity"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Expand Q_{λ/μ} in the Q_ν basis.
    Expand {
        shape: String,
        #[arg(long)]
        machine: bool,
        /// Print the monomial expansion in this many variables instead.
        #[arg(long, value_name = "M")]
        variables: Option<usize>,
    },
    /// Coefficient of Q_ν in Q_{λ/μ}.
    Coeff { shape: String, nu: String },
    /// Decide whether Q_{λ/μ} is a multiple of a single Q_ν.
    Classify { shape: String },
    /// The canonical tableau and its bands.
    Canonical { shape: String },
    /// Orthogonal transpose of a shape, or the flip of a tableau read from a file.
    Ot {
        shape: String,
        #[arg(long, value_name = "FILE")]
        tableau: Option<String>,
    },
    /// Q_{λ/δ} for a row strip, a single box or the border minus one box.
    Decompose {
        lambda: String,
        /// `row N`, `box` or `border`.
        kind: String,
        n: Option<u32>,
        #[arg(long)]
        machine: bool,
    },
    /// Witness tableau showing a shape is not homogeneous.
    Witness { shape: String },
    /// Cross-check every module over all basic shapes up to a size.
    Sweep {
        #[arg(long)]
        max_cells: u32,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 6)]
        max_value: u32,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// 2 for bad input, 1 for anything that indicates a bug.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::WitnessFailed { .. } | Error::Overflow | Error::InvalidTableau(_) => 1,
        _ => 2,
    }
}

pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli.command),
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if status == 0 {
                Outcome {
                    status,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    status,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn run(command: &Command) -> Outcome {
    match execute(command) {
        Ok((ok, stdout)) => Outcome {
            status: if ok { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            status: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn shape(s: &str) -> Result<SkewShape> {
    s.parse()
}

fn partition(s: &str) -> Result<StrictPartition> {
    s.parse()
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn expansion_text(q: &QExpansion, machine: bool) -> String {
    if machine || !q.is_valid() || q.single_term().is_some_and(|(_, nu)| nu.is_empty()) {
        line(q.machine())
    } else {
        line(q)
    }
}

fn witness_text(w: &Witness) -> String {
    format!(
        "witness lemma={} transposed={} content={}\n{}\n",
        w.lemma, w.transposed, w.content, w.tableau
    )
}

fn execute(command: &Command) -> Result<(bool, String)> {
    let out = match command {
        Command::Expand {
            shape: s,
            machine,
            variables,
        } => {
            let d = shape(s)?;
            match variables {
                Some(m) => {
                    let poly = monomial_oracle(&d, *m);
                    if poly.is_zero() {
                        line("ZERO")
                    } else {
                        poly.terms
                            .iter()
                            .rev()
                            .map(|(e, c)| {
                                let e: Vec<String> = e.iter().map(u32::to_string).collect();
                                format!("{c} {}\n", e.join(","))
                            })
                            .collect()
                    }
                }
                None => expansion_text(&expand(&d), *machine),
            }
        }
        Command::Coeff { shape: s, nu } => {
            let d = shape(s)?;
            let nu = partition(nu)?;
            line(crate::expansion::lr_coefficient(&d, &nu)?)
        }
        Command::Classify { shape: s } => {
            let r = classify(&shape(s)?)?;
            let mut out = line(&r);
            if let Some(w) = r.witness() {
                out.push_str(&witness_text(w));
            }
            out
        }
        Command::Canonical { shape: s } => {
            let d = shape(s)?;
            let cells = d.cells()?;
            if cells.is_empty() {
                return Ok((true, line("EMPTY_SHAPE 1")));
            }
            let ct = canonical_tableau(&cells)?;
            let mut out = line(&ct.tableau);
            out.push_str(&format!("content={}\n", ct.content()));
            for (i, band) in ct.bands.iter().enumerate() {
                out.push_str(&format!("P{} {}\n", i + 1, band));
            }
            out
        }
        Command::Ot { shape: s, tableau } => match tableau {
            None => {
                let d = shape(s)?;
                let ot = orthogonal_transpose(&d.cells()?)?;
                line(ot)
            }
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::parse(path.as_str(), e.to_string()))?;
                let t: Tableau = text.parse().map_err(|e| match e {
                    Error::InvalidTableau(m) => Error::parse(path.as_str(), m),
                    e => e,
                })?;
                let d = shape(s)?;
                if t.cells() != &d.cells()? {
                    return Err(Error::PreconditionViolated(format!(
                        "tableau does not fill {d}"
                    )));
                }
                line(lambda_flip(&t)?)
            }
        },
        Command::Decompose {
            lambda,
            kind,
            n,
            machine,
        } => {
            let lambda = partition(lambda)?;
            let q = match (kind.as_str(), n) {
                ("row", Some(n)) => decompose_row_strip(&lambda, *n)?,
                ("row", None) => return Err(Error::parse("row", "missing strip length")),
                ("box", None) => decompose_single_box(&lambda),
                ("border", None) => decompose_border_minus_one(&lambda)?,
                ("box" | "border", Some(n)) => {
                    return Err(Error::parse(n.to_string(), "unexpected argument"))
                }
                (other, _) => return Err(Error::parse(other, "expected row, box or border")),
            };
            expansion_text(&q, *machine)
        }
        Command::Witness { shape: s } => {
            let d = shape(s)?;
            let basic = d.normalize_basic()?;
            let cells = basic.cells()?;
            let w = if cells.component_count() > 1 {
                witness_disconnected(&basic)?
            } else {
                witness_connected(&basic)?
            };
            match w {
                Some(w) => witness_text(&w),
                None => line("NONE"),
            }
        }
        Command::Sweep {
            max_cells,
            jobs,
            max_value,
        } => {
            if *jobs == 0 {
                return Err(Error::parse("0", "--jobs must be positive"));
            }
            let reports = sweep(&SweepOptions {
                max_cells: *max_cells,
                max_value: *max_value,
                jobs: *jobs,
            });
            let ok = reports.iter().all(|r| r.passed());
            let text = reports.iter().map(line).collect();
            return Ok((ok, text));
        }
    };
    Ok((true, out))
}
