use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use detlink::bench::{bench, Strategy};
use detlink::families;
use detlink::verify::{run_checks, Check, Fault, VerifyConfig};
use detlink::{Budget, Polynomial, VarSpace};

#[derive(Parser)]
#[command(name = "detlink", version, about = "Exact Gröbner verification of determinantal links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Minors,
    A,
    #[value(name = "G")]
    G,
    #[value(name = "M")]
    M,
    Link,
    Chain,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchStrategy {
    Criteria,
    NoCriteria,
    Certificate,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification checks for one n.
    Verify {
        #[arg(long)]
        n: usize,
        /// `all` or a comma-separated list of check names.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = Budget::default().max_pairs)]
        budget_pairs: u64,
        #[arg(long)]
        timeout_secs: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Negate the trailing term of element K (1-based) of G before checking.
        #[arg(long, value_name = "K")]
        inject_fault: Option<usize>,
    },
    /// Print the generators of a family, one per line.
    Show {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// Time Buchberger on the families and write CSV rows.
    Bench {
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, value_enum, value_delimiter = ',', default_values_t = [BenchStrategy::Criteria, BenchStrategy::NoCriteria, BenchStrategy::Certificate])]
        strategies: Vec<BenchStrategy>,
        #[arg(long, default_value_t = Budget::default().max_pairs)]
        budget_pairs: u64,
        #[arg(long)]
        timeout_secs: Option<u64>,
    },
}

fn write_output(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn lines(polys: &[Polynomial]) -> String {
    polys.iter().map(|p| format!("{p}\n")).collect()
}

fn show(family: Family, n: usize) -> Result<String> {
    let space = VarSpace::new(n)?;
    Ok(match family {
        Family::Minors => lines(&families::minors(VarSpace::two_row(n)?)),
        Family::A => lines(&families::gens_a(n)?),
        Family::G => lines(&families::set_g(n)?),
        Family::M => {
            let mut out = String::new();
            for i in 1..=n {
                out.push_str(&format!("# M_{i}\n"));
                for m in families::m_set(n, i)? {
                    out.push_str(&format!("{}\n", families::monomial_poly(space, m)));
                }
            }
            out
        }
        Family::Link => lines(families::chain_link(n)?.1.gens()),
        Family::Chain => lines(families::chain_ideal(n)?.gens()),
    })
}

fn run() -> Result<ExitCode> {
    match Cli::parse().command {
        Command::Verify { n, checks, seed, budget_pairs, timeout_secs, format, out, inject_fault } => {
            let fault = match inject_fault {
                Some(0) => bail!("--inject-fault is 1-based"),
                Some(k) => Some(Fault::FlipTrailingSign { element: k - 1 }),
                None => None,
            };
            let config = VerifyConfig {
                n,
                checks: Check::parse_list(&checks)?,
                seed,
                budget_pairs,
                timeout: timeout_secs.map(Duration::from_secs),
                fault,
            };
            let report = run_checks(&config)?;
            let text = match format {
                Format::Json => report.to_json() + "\n",
                Format::Text => report.to_text(),
            };
            write_output(out.as_ref(), &text)?;
            Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Show { family, n } => {
            write_output(None, &show(family, n)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench { n_min, n_max, csv, strategies, budget_pairs, timeout_secs } => {
            if n_min < 4 || n_max < n_min {
                bail!("need 4 <= n-min <= n-max");
            }
            let budget = Budget::default()
                .with_max_pairs(budget_pairs)
                .with_deadline(timeout_secs.map(|s| Instant::now() + Duration::from_secs(s)));
            let strategies: Vec<Strategy> = strategies
                .into_iter()
                .map(|s| match s {
                    BenchStrategy::Criteria => Strategy::Criteria,
                    BenchStrategy::NoCriteria => Strategy::NoCriteria,
                    BenchStrategy::Certificate => Strategy::Certificate,
                })
                .collect();
            let rows = bench(n_min, n_max, budget, &strategies)?;
            let mut w = csv::Writer::from_writer(Vec::new());
            for row in &rows {
                w.serialize(row)?;
            }
            let bytes = w.into_inner().map_err(|e| anyhow::anyhow!("{e}"))?;
            write_output(csv.as_ref(), &String::from_utf8(bytes)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
