use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use privword::bounds::{h, hbar, log10_rho_qn, omega, rho, sigma, BoundParams};
use privword::enumeration::{census_table, CensusConfig};
use privword::output::{census_csv, census_json, report_csv, report_json, sig6, to_json, Meta};
use privword::verify::{run_suite, Suite, VerifyConfig};
use privword::word::{classify, BorderChain, Word};
use privword::{Error, DEFAULT_BUDGET};

const EXIT_VIOLATION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// Privileged and closed word census, avoidance counting and bound checks.
#[derive(Parser)]
#[command(name = "privword", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a single word written with letters a, b, ...
    Check {
        word: String,
        /// Alphabet size; defaults to the largest letter used plus one.
        #[arg(long)]
        q: Option<u8>,
        #[arg(long, value_enum, default_value = "table")]
        format: TableFormat,
    },
    /// Count privileged and closed words for n = min-n..=max-n.
    Census {
        #[arg(long)]
        q: u8,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, env = "PRIVWORD_THREADS")]
        threads: Option<usize>,
        #[arg(long, env = "PRIVWORD_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 2)]
        q: u8,
        #[arg(long, default_value_t = 14)]
        max_n: usize,
        #[arg(long, default_value_t = 2.0)]
        kappa: f64,
        #[arg(long, env = "PRIVWORD_THREADS")]
        threads: Option<usize>,
        #[arg(long, env = "PRIVWORD_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate omega, h, hbar, sigma_j, rho_j and log10(rho_j q^n).
    Bounds {
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long, default_value_t = 1)]
        j: u32,
        /// One or more lengths, comma separated or repeated.
        #[arg(long = "n", value_delimiter = ',', required = true)]
        n: Vec<u64>,
        #[arg(long, default_value_t = 2.0)]
        kappa: f64,
        #[arg(long, value_enum, default_value = "table")]
        format: TableFormat,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn threads_or_default(threads: Option<usize>) -> usize {
    threads.unwrap_or_else(|| CensusConfig::default().threads).max(1)
}

#[derive(Serialize)]
struct CheckOutput {
    word: String,
    q: u8,
    border_array: Vec<usize>,
    chain: Vec<ChainEntry>,
    closed: bool,
    privileged: bool,
}

#[derive(Serialize)]
struct ChainEntry {
    length: usize,
    border: String,
    occurrences: usize,
}

fn check(word: &str, q: Option<u8>, format: TableFormat) -> Result<u8, (u8, String)> {
    let u = Word::from_letters(word, q).map_err(|e| (EXIT_USAGE, e.to_string()))?;
    let chain = BorderChain::new(&u);
    let c = classify(&u);
    let out = CheckOutput {
        word: u.to_letters(),
        q: u.q(),
        border_array: chain.border_array.clone(),
        chain: chain
            .chain
            .iter()
            .zip(&chain.occurrences)
            .map(|(&m, &occ)| ChainEntry {
                length: m,
                border: u.prefix(m).to_letters(),
                occurrences: occ,
            })
            .collect(),
        closed: c.closed,
        privileged: c.privileged,
    };
    match format {
        TableFormat::Json => print!("{}", to_json(&Meta::now(), &out)),
        TableFormat::Table => {
            let entries: Vec<String> = out
                .chain
                .iter()
                .map(|e| format!("{}:\"{}\"x{}", e.length, e.border, e.occurrences))
                .collect();
            println!("word={:?}", out.word);
            println!("q={}", out.q);
            println!("border_array={:?}", out.border_array);
            println!("chain=[{}]", entries.join(", "));
            println!("closed={}", out.closed);
            println!("privileged={}", out.privileged);
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct BoundsRow {
    n: u64,
    omega: f64,
    h: u64,
    hbar: u64,
    sigma: f64,
    rho: f64,
    log10_rho_qn: f64,
}

fn bounds(q: u32, j: u32, ns: &[u64], kappa: f64, format: TableFormat) -> Result<u8, (u8, String)> {
    let params = BoundParams::new(q, kappa).map_err(|e| (EXIT_USAGE, e.to_string()))?;
    let rows = ns
        .iter()
        .map(|&n| {
            let nf = n as f64;
            Ok(BoundsRow {
                n,
                sigma: sigma(j, nf)?,
                rho: rho(j, nf)?,
                log10_rho_qn: log10_rho_qn(j, nf, &params)?,
                omega: omega(nf, &params)?,
                h: h(n, &params)?,
                hbar: hbar(n, &params)?,
            })
        })
        .collect::<Result<Vec<_>, Error>>()
        .map_err(|e| (EXIT_USAGE, e.to_string()))?;
    match format {
        TableFormat::Json => print!("{}", to_json(&Meta::now(), &rows)),
        TableFormat::Table => {
            println!("n,q,j,kappa,omega,h,hbar,sigma,rho,log10_rho_qn");
            for r in &rows {
                println!(
                    "{},{q},{j},{},{},{},{},{},{},{}",
                    r.n,
                    sig6(kappa),
                    sig6(r.omega),
                    r.h,
                    r.hbar,
                    sig6(r.sigma),
                    sig6(r.rho),
                    sig6(r.log10_rho_qn)
                );
            }
        }
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, (u8, String)> {
    match cli.command {
        Command::Check { word, q, format } => check(&word, q, format),
        Command::Census {
            q,
            max_n,
            min_n,
            threads,
            budget,
            format,
            out,
        } => {
            if min_n == 0 || min_n > max_n {
                return Err((EXIT_USAGE, format!("need 1 <= min-n <= max-n, got {min_n}..{max_n}")));
            }
            let cfg = CensusConfig {
                threads: threads_or_default(threads),
                budget,
                symmetry: true,
            };
            let table = census_table(q, min_n..=max_n, &cfg).map_err(|e| (exit_code(&e), e.to_string()))?;
            let meta = Meta::now();
            let text = match format {
                Format::Csv => census_csv(&meta, &table),
                Format::Json => census_json(&meta, &table),
            };
            emit(&text, out.as_ref()).map_err(|e| (EXIT_USAGE, e))?;
            Ok(0)
        }
        Command::Verify {
            suite,
            q,
            max_n,
            kappa,
            threads,
            budget,
            format,
            out,
        } => {
            let cfg = VerifyConfig {
                q,
                max_n,
                kappa,
                threads: threads_or_default(threads),
                budget,
            };
            let report = run_suite(suite, &cfg).map_err(|e| (exit_code(&e), e.to_string()))?;
            let meta = Meta::now();
            let text = match format {
                Format::Csv => report_csv(&meta, &report),
                Format::Json => report_json(&meta, &report),
            };
            emit(&text, out.as_ref()).map_err(|e| (EXIT_USAGE, e))?;
            for v in report.violations() {
                eprintln!("violation: {} {} lhs={} rhs={}", v.id, v.params, v.lhs, v.rhs);
            }
            eprintln!(
                "{}: {} checks, {} violations",
                report.suite, report.summary.checks_run, report.summary.violations
            );
            Ok(if report.is_clean() { 0 } else { EXIT_VIOLATION })
        }
        Command::Bounds { q, j, n, kappa, format } => bounds(q, j, &n, kappa, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
