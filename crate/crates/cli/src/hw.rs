use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hurwitz::factorize::{count_factorizations, minimal_k, CountTable};
use hurwitz::perm::mu;
use hurwitz::symfunc::format_rational;
use hurwitz::Partition;
use serde::Serialize;

use crate::{degree, parse_partition, positive, Budget, CliError, Output, Tool};

/// Counts of transitive factorizations into `d`-cycles.
#[derive(Debug, Parser)]
#[command(name = "hw", version)]
pub struct HwCli {
    /// Budget file; defaults to ./hurwitz.toml when present.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: HwCommand,
}

#[derive(Debug, Subcommand)]
pub enum HwCommand {
    /// Number of `k`-tuples of `d`-cycles whose product is a fixed permutation of type α.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_partition)]
        alpha: Partition,
        /// Count only tuples generating a transitive group.
        #[arg(long)]
        transitive: bool,
    },
    /// Least `k` with a transitive factorization, and the count there.
    Min {
        #[arg(long)]
        d: usize,
        #[arg(long, value_parser = parse_partition)]
        alpha: Partition,
    },
    /// `h^d(α)` at `k = μ^d(α)` for every α ⊢ n ≤ nmax with integral μ.
    Table {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Serialize)]
struct CountOut {
    count: String,
}

#[derive(Serialize)]
struct MinOut {
    k: Option<usize>,
    h: String,
}

#[derive(Debug, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub alpha: Partition,
    pub mu: String,
    pub h: String,
}

#[derive(Serialize)]
struct TableOut<'a> {
    d: usize,
    nmax: usize,
    budget: &'a Budget,
    rows: Vec<TableRow>,
}

/// Rows of `hw table`, ordered by `(n, α)`.
pub fn table_rows(d: usize, nmax: usize) -> Vec<TableRow> {
    let counts = CountTable::minimal(d, nmax);
    let mut alphas = Partition::all_up_to(nmax);
    alphas.sort();
    alphas
        .into_iter()
        .filter(|a| !a.is_empty() && mu(d, a).is_admissible())
        .map(|alpha| {
            let h = counts
                .minimal_count(d, &alpha)
                .expect("table covers every admissible type");
            TableRow {
                n: alpha.weight(),
                mu: format_rational(&mu(d, &alpha).to_big()),
                h: h.to_string(),
                alpha,
            }
        })
        .collect()
}

fn csv_table(rows: &[TableRow]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Io(e.to_string());
    w.write_record(["n", "alpha", "mu", "h"]).map_err(io)?;
    for r in rows {
        w.write_record([r.n.to_string(), r.alpha.to_string(), r.mu.clone(), r.h.clone()])
            .map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
}

impl Tool for HwCli {
    fn config(&self) -> Option<&Path> {
        self.config.as_deref()
    }

    fn execute(self, budget: &Budget) -> Result<Output, CliError> {
        match self.command {
            HwCommand::Count {
                n,
                d,
                k,
                alpha,
                transitive,
            } => {
                positive("n", n)?;
                degree(d)?;
                if alpha.weight() != n {
                    return Err(CliError::Usage(format!(
                        "--alpha {alpha} has weight {}, not --n {n}",
                        alpha.weight()
                    )));
                }
                budget.check_n("n", n)?;
                budget.check_k(k)?;
                let count = count_factorizations(n, d, k, &alpha, transitive)?;
                Output::json(
                    &CountOut {
                        count: count.to_string(),
                    },
                    0,
                )
            }
            HwCommand::Min { d, alpha } => {
                degree(d)?;
                let n = alpha.weight();
                budget.check_n("n", n)?;
                // the search runs k up to n + l − 2
                budget.check_k(n + alpha.len() - 2)?;
                let found = minimal_k(n, d, &alpha)?;
                let out = match found {
                    Some((k, h)) => MinOut {
                        k: Some(k),
                        h: h.to_string(),
                    },
                    None => MinOut {
                        k: None,
                        h: "0".into(),
                    },
                };
                Output::json(&out, 0)
            }
            HwCommand::Table { d, nmax, format } => {
                positive("nmax", nmax)?;
                degree(d)?;
                budget.check_n("nmax", nmax)?;
                // μ is largest on (1^nmax)
                budget.check_k((2 * nmax - 2) / (d - 1))?;
                let rows = table_rows(d, nmax);
                match format {
                    Format::Json => Output::json(
                        &TableOut {
                            d,
                            nmax,
                            budget,
                            rows,
                        },
                        0,
                    ),
                    Format::Csv => Ok(Output {
                        stdout: csv_table(&rows)?,
                        exit: 0,
                    }),
                }
            }
        }
    }
}
