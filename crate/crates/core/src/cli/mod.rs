//! Command-line front end. Every subcommand prints a tab-separated table: a
//! header row, then data rows. Series are printed one power of `q` per row.
//!
//! Exit codes: 0 on success, 1 when an identity fails (both sides are
//! printed to stderr), 2 on a usage or configuration error.

pub mod config;
pub mod selfcheck;

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::adhm::{self, AdhmError, MatrixTriple};
use crate::goettsche::{
    dim_equivariant_k, euler_hilbert, hodge_hilbert, poincare_hilbert_product, poincare_punctual,
    poincare_sym,
};
use crate::heisenberg::graded_character;
use crate::partitions;
use crate::stratification::{stalk_table, support_strata};
use crate::surface::{all_presets, SurfaceModel};

pub use config::{load_surface, ConfigError, SurfaceConfig};

const DEFAULT_ORDER: usize = 4;

#[derive(Parser, Debug)]
#[command(
    name = "hilbert-points",
    version,
    about = "Exact invariants of Hilbert schemes of points on surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Surface preset (delta, p2, p1xp1, k3, abelian) or path to a key=value file
    #[arg(long, global = true)]
    surface: Option<String>,
    /// Single number of points
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Highest power of q (or number of points) to compute
    #[arg(long, global = true)]
    order: Option<usize>,
    /// Write the table here instead of stdout
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Poincaré polynomials of X^[n] from the product formula
    Goettsche,
    /// Poincaré polynomials of the symmetric products X^(m)
    Sym,
    /// Poincaré polynomials of the punctual Hilbert schemes
    Punctual,
    /// Euler numbers of X^[n]
    Euler,
    /// Hodge polynomials of X^[n]
    Hodge,
    /// Graded character of the Fock space
    Fock,
    /// Random checks of the supercommutation relations
    Commutators {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Stalk dimensions per stratum, or the support of one direct image with --h
    Strata {
        #[arg(long)]
        h: Option<usize>,
    },
    /// Analyse a matrix triple file, or list the monomial-ideal triples for --n
    Adhm {
        #[arg(long)]
        triple: Option<PathBuf>,
    },
    /// Dimensions of equivariant K-theory against total Betti numbers
    Ktheory,
    /// Evaluate every cross-identity up to --order
    Selfcheck {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// A usage/configuration error (exit 2) or failed identities (exit 1).
#[derive(Debug)]
enum Failure {
    Usage(String),
    Identities(Vec<String>),
}

struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    fn new<S: ToString>(header: &[S]) -> Self {
        Table {
            header: header.iter().map(ToString::to_string).collect(),
            rows: Vec::new(),
        }
    }

    fn push<I, S>(&mut self, row: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        self.rows
            .push(row.into_iter().map(|s| s.to_string()).collect());
    }

    fn to_tsv(&self) -> String {
        let mut out = self.header.join("\t");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }
}

impl Cli {
    fn surface(&self) -> Result<SurfaceModel, Failure> {
        let spec = self
            .surface
            .as_deref()
            .ok_or_else(|| Failure::Usage("--surface is required for this subcommand".into()))?;
        load_surface(spec).map_err(Failure::Usage)
    }

    /// `--n` alone selects one row, `--order` the rows `0..=order`.
    fn rows(&self) -> Result<RangeInclusive<usize>, Failure> {
        match (self.n, self.order) {
            (Some(_), Some(_)) => Err(Failure::Usage(
                "--n and --order cannot be combined here".into(),
            )),
            (Some(n), None) => Ok(n..=n),
            (None, order) => Ok(0..=order.unwrap_or(DEFAULT_ORDER)),
        }
    }

    fn require_n(&self) -> Result<usize, Failure> {
        self.n
            .ok_or_else(|| Failure::Usage("--n is required for this subcommand".into()))
    }
}

fn series_table(
    label: &str,
    rows: RangeInclusive<usize>,
    mut value: impl FnMut(usize) -> Result<String, Failure>,
) -> Result<Table, Failure> {
    let mut t = Table::new(&["n", label]);
    for n in rows {
        t.push([n.to_string(), value(n)?]);
    }
    Ok(t)
}

fn execute(cli: &Cli) -> Result<Table, Failure> {
    match &cli.command {
        Command::Goettsche => {
            let s = cli.surface()?;
            let rows = cli.rows()?;
            let product = poincare_hilbert_product(&s, *rows.end());
            series_table("poincare", rows, |n| {
                Ok(product.coeff(n).expect("within order").to_string())
            })
        }
        Command::Sym => {
            let s = cli.surface()?;
            series_table("poincare", cli.rows()?, |m| {
                Ok(poincare_sym(&s, m).to_string())
            })
        }
        Command::Punctual => series_table("poincare", cli.rows()?, |n| {
            Ok(poincare_punctual(n).to_string())
        }),
        Command::Euler => {
            let s = cli.surface()?;
            series_table("euler", cli.rows()?, |n| {
                Ok(euler_hilbert(s.euler(), n).to_string())
            })
        }
        Command::Hodge => {
            let s = cli.surface()?;
            series_table("hodge", cli.rows()?, |n| {
                hodge_hilbert(&s, n)
                    .map(|p| p.to_string())
                    .map_err(|e| Failure::Usage(format!("--surface: {e}")))
            })
        }
        Command::Fock => {
            let s = cli.surface()?;
            let rows = cli.rows()?;
            let character = graded_character(&s, *rows.end());
            series_table("character", rows, |n| {
                Ok(character.coeff(n).expect("within order").to_string())
            })
        }
        Command::Commutators { samples, seed } => {
            let s = cli.surface()?;
            let max_mode = cli.order.unwrap_or(5) as u32;
            if max_mode == 0 {
                return Err(Failure::Usage(
                    "--order (the largest mode) must be positive".into(),
                ));
            }
            let checks = selfcheck::commutator_checks(&s, max_mode, *samples, *seed);
            report(
                checks,
                &["relation", "surface", "case", "failures"],
                |c| {
                    vec![
                        c.identity.to_string(),
                        c.surface.clone(),
                        c.case.clone(),
                        c.lhs.clone(),
                    ]
                },
                |c| c.case.ends_with("samples"),
            )
        }
        Command::Strata { h } => {
            let n = cli.require_n()?;
            if n == 0 {
                return Err(Failure::Usage("--n must be positive".into()));
            }
            match h {
                Some(h) => {
                    let mut t = Table::new(&["stratum"]);
                    for a in support_strata(n, *h) {
                        t.push([a]);
                    }
                    Ok(t)
                }
                None => {
                    let mut header = vec!["stratum".to_string()];
                    header.extend((0..n).map(|h| format!("h={h}")));
                    let mut t = Table::new(&header);
                    for nu in partitions::enumerate(n) {
                        let table = stalk_table(&nu);
                        let mut row = vec![nu.to_string()];
                        row.extend(table.rows.iter().map(ToString::to_string));
                        t.push(row);
                    }
                    Ok(t)
                }
            }
        }
        Command::Adhm { triple } => match triple {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Failure::Usage(format!("--triple {}: {e}", path.display())))?;
                let tr = adhm::parse_triple(&text)
                    .map_err(|e| Failure::Usage(format!("--triple {}: {e}", path.display())))?;
                Ok(describe_triple(&tr))
            }
            None => {
                let n = cli.require_n()?;
                let mut t = Table::new(&[
                    "partition",
                    "commuting",
                    "stable",
                    "support",
                    "in_bidisk",
                    "staircase",
                ]);
                for mu in partitions::enumerate(n) {
                    let tr = adhm::from_monomial_ideal(&mu);
                    t.push([
                        mu.to_string(),
                        adhm::is_commuting(&tr).to_string(),
                        show(adhm::is_stable(&tr)),
                        show(adhm::barlet_support(&tr)),
                        show(adhm::in_bidisk(&tr)),
                        show(adhm::nonvanishing_staircase(&tr)),
                    ]);
                }
                Ok(t)
            }
        },
        Command::Ktheory => {
            let s = cli.surface()?;
            let rows = cli.rows()?;
            let product = poincare_hilbert_product(&s, *rows.end());
            let mut t = Table::new(&["n", "dim_k", "total_betti"]);
            for n in rows {
                let total: BigRational = product.coeff(n).expect("within order").coefficient_sum();
                t.push([
                    n.to_string(),
                    dim_equivariant_k(&s, n).to_string(),
                    total.to_string(),
                ]);
            }
            Ok(t)
        }
        Command::Selfcheck { seed } => {
            let order = cli.order.or(cli.n).unwrap_or(DEFAULT_ORDER);
            let surfaces = match &cli.surface {
                Some(_) => vec![cli.surface()?],
                None => all_presets(),
            };
            let mut checks = Vec::new();
            for s in &surfaces {
                checks.extend(selfcheck::surface_checks(s, order, *seed));
            }
            checks.extend(selfcheck::local_checks(order));
            report(
                checks,
                &["identity", "surface", "case", "result"],
                |c| {
                    let result = if c.passed() { "pass" } else { "FAIL" };
                    vec![
                        c.identity.to_string(),
                        c.surface.clone(),
                        c.case.clone(),
                        result.to_string(),
                    ]
                },
                |_| true,
            )
        }
    }
}

fn show<T: ToString>(r: Result<T, AdhmError>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    }
}

fn describe_triple(tr: &MatrixTriple) -> Table {
    let mut t = Table::new(&["property", "value"]);
    t.push(["n".to_string(), tr.n().to_string()]);
    t.push(["commuting".to_string(), adhm::is_commuting(tr).to_string()]);
    t.push(["stable".to_string(), show(adhm::is_stable(tr))]);
    let support = adhm::barlet_support(tr);
    t.push(["support".to_string(), show(support.clone())]);
    t.push([
        "stratum".to_string(),
        show(support.map(|s| s.partition_type())),
    ]);
    t.push(["in_bidisk".to_string(), show(adhm::in_bidisk(tr))]);
    for k in 0..=2u32 {
        for l in 0..=2u32 - k {
            t.push([
                format!("trace(A^{k} B^{l})"),
                adhm::invariant(tr, k, l).to_string(),
            ]);
        }
    }
    t
}

/// Tabulates checks (rows chosen by `keep`), and turns failures into exit-1 messages.
fn report(
    checks: Vec<selfcheck::Check>,
    header: &[&str],
    row: impl Fn(&selfcheck::Check) -> Vec<String>,
    keep: impl Fn(&selfcheck::Check) -> bool,
) -> Result<Table, Failure> {
    let mut t = Table::new(header);
    let mut failed = Vec::new();
    for c in &checks {
        if keep(c) {
            t.push(row(c));
        }
        if !c.passed() {
            failed.push(format!(
                "FAIL {} [{}] {}: lhs = {} ; rhs = {}",
                c.identity, c.surface, c.case, c.lhs, c.rhs
            ));
        }
    }
    if failed.is_empty() {
        Ok(t)
    } else {
        // the table is still useful next to the failure list
        let _ = emit_stdout(&t);
        Err(Failure::Identities(failed))
    }
}

fn emit_stdout(t: &Table) -> std::io::Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(t.to_tsv().as_bytes())?;
    out.flush()
}

fn emit(cli: &Cli, t: &Table) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => std::fs::write(path, t.to_tsv())
            .map_err(|e| Failure::Usage(format!("--output {}: {e}", path.display()))),
        None => emit_stdout(t).map_err(|e| Failure::Usage(format!("writing stdout: {e}"))),
    }
}

/// Parses `argv` (program name first), runs the subcommand and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let Format::Tsv = cli.format;
    match execute(&cli).and_then(|t| emit(&cli, &t)) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Identities(lines)) => {
            for line in lines {
                eprintln!("{line}");
            }
            1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(args: &[&str]) -> String {
        let mut argv = vec!["hilbert-points"];
        argv.extend(args);
        let cli = Cli::try_parse_from(argv).unwrap();
        execute(&cli).unwrap().to_tsv()
    }

    #[test]
    fn golden_tables() {
        assert_eq!(
            table(&["goettsche", "--surface", "p2", "--order", "2"]),
            "n\tpoincare\n0\t1\n1\t1 + t^2 + t^4\n2\t1 + 2t^2 + 3t^4 + 2t^6 + t^8\n"
        );
        assert_eq!(
            table(&["euler", "--surface", "k3", "--order", "3"]),
            "n\teuler\n0\t1\n1\t24\n2\t324\n3\t3200\n"
        );
        assert_eq!(table(&["strata", "--n", "3", "--h", "2"]), "stratum\n(3)\n");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(["hilbert-points", "goettsche"]), 2);
        assert_eq!(
            run(["hilbert-points", "goettsche", "--surface", "nowhere"]),
            2
        );
        assert_eq!(run(["hilbert-points", "frobnicate"]), 2);
        assert_eq!(
            run([
                "hilbert-points",
                "hodge",
                "--surface",
                "delta",
                "--n",
                "1",
                "--order",
                "2"
            ]),
            2
        );
    }
}
