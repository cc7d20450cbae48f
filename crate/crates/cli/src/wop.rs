use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hurwitz::symfunc::{format_rational, PSeries, TermRecord};
use hurwitz::wop::{
    apply_reconstructed_linear, apply_w2_explicit, apply_w3_explicit, apply_w_groupalg,
    local_coefficient, OperatorTermTable,
};
use hurwitz::Partition;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::{degree, parse_partition, positive, Budget, CliError, Output, Tool};

/// The `W([d])` operators on power sums.
#[derive(Debug, Parser)]
#[command(name = "wop", version)]
pub struct WopCli {
    /// Budget file; defaults to ./hurwitz.toml when present.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: WopCommand,
}

#[derive(Debug, Subcommand)]
pub enum WopCommand {
    /// `W([d]) p_α` as a series.
    Apply {
        #[arg(long)]
        d: usize,
        #[arg(long, value_parser = parse_partition)]
        alpha: Partition,
        #[arg(long, value_enum, default_value_t = Method::Groupalg)]
        method: Method,
    },
    /// The coefficient `c(B, A)` of `p_A ∂^B`, with `N(B, A)` and `|Aut(B)|`.
    Coeff {
        #[arg(long)]
        d: usize,
        #[arg(long = "B", value_parser = parse_partition)]
        b: Partition,
        #[arg(long = "A", value_parser = parse_partition)]
        a: Partition,
    },
    /// Every nonzero `c(B, A)` with `|B|` up to `--max-weight`.
    Table {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        max_weight: usize,
        /// Write the table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// The explicit differential operator, for `d = 2, 3`.
    Explicit,
    /// Multiplication by the class sum of `d`-cycles.
    Groupalg,
    /// The brute-forced term table.
    Reconstructed,
}

/// `W([d]) p_α` by the chosen method.
pub fn apply(d: usize, alpha: &Partition, method: Method) -> Result<PSeries, CliError> {
    let n = alpha.weight();
    let f = PSeries::monomial(n, alpha.clone(), BigRational::one());
    Ok(match (method, d) {
        (Method::Explicit, 2) => apply_w2_explicit(&f),
        (Method::Explicit, 3) => apply_w3_explicit(&f),
        (Method::Explicit, _) => {
            return Err(CliError::Usage(format!(
                "--method explicit exists for d = 2 and d = 3 only, got d = {d}"
            )))
        }
        (Method::Groupalg, _) => apply_w_groupalg(d, &f),
        (Method::Reconstructed, _) => {
            apply_reconstructed_linear(&OperatorTermTable::build(d, n), &f)?
        }
    })
}

#[derive(Serialize)]
struct ApplyOut<'a> {
    d: usize,
    alpha: &'a Partition,
    method: Method,
    budget: &'a Budget,
    terms: Vec<TermRecord>,
}

#[derive(Serialize)]
struct CoeffOut<'a> {
    d: usize,
    #[serde(rename = "B")]
    b: &'a Partition,
    #[serde(rename = "A")]
    a: &'a Partition,
    c: String,
    #[serde(rename = "N")]
    n: String,
    aut: String,
}

#[derive(Serialize)]
struct WrittenOut<'a> {
    d: usize,
    max_weight: usize,
    terms: usize,
    out: &'a Path,
}

impl Tool for WopCli {
    fn config(&self) -> Option<&Path> {
        self.config.as_deref()
    }

    fn execute(self, budget: &Budget) -> Result<Output, CliError> {
        match self.command {
            WopCommand::Apply { d, alpha, method } => {
                degree(d)?;
                budget.check_weight("weight", alpha.weight())?;
                let image = apply(d, &alpha, method)?;
                Output::json(
                    &ApplyOut {
                        d,
                        alpha: &alpha,
                        method,
                        budget,
                        terms: image.to_records(),
                    },
                    0,
                )
            }
            WopCommand::Coeff { d, b, a } => {
                degree(d)?;
                budget.check_weight("weight", b.weight())?;
                budget.check_weight("weight", a.weight())?;
                let c = local_coefficient(d, &b, &a);
                Output::json(
                    &CoeffOut {
                        d,
                        b: &b,
                        a: &a,
                        c: format_rational(&c.c),
                        n: c.n.to_string(),
                        aut: c.aut.to_string(),
                    },
                    0,
                )
            }
            WopCommand::Table {
                d,
                max_weight,
                out,
            } => {
                degree(d)?;
                positive("max-weight", max_weight)?;
                budget.check_weight("max_weight", max_weight)?;
                let table = OperatorTermTable::build(d, max_weight);
                match out {
                    None => Output::json(&table, 0),
                    Some(path) => {
                        let text = serde_json::to_string_pretty(&table)
                            .map_err(|e| CliError::Io(e.to_string()))?;
                        std::fs::write(&path, text + "\n")
                            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                        Output::json(
                            &WrittenOut {
                                d,
                                max_weight,
                                terms: table.len(),
                                out: &path,
                            },
                            0,
                        )
                    }
                }
            }
        }
    }
}
