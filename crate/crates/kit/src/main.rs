use std::collections::BTreeSet;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use congruence_kit::checks::{paper_check, parse_d_range, PaperCheckOptions};
use congruence_kit::commands::{self, CupFormSource, Options, Skip};
use congruence_kit::input::resolve;
use congruence_kit::report::Report;
use congruence_kit::{KitError, Result};

/// Invariants that obstruct weak d-congruence of closed oriented 3-manifolds.
///
/// Inputs are JSON files or `catalog:<name>` tokens such as `catalog:T3`,
/// `catalog:SumS1xS2(3)`, `catalog:Lens(6,1)` or `catalog:Unlink(3)`.
#[derive(Debug, Parser)]
#[command(name = "congruence-kit", version)]
struct Cli {
    /// Print the machine-readable report.
    #[arg(long, global = true)]
    json: bool,
    /// Largest |GL(n, Z_d)| a form search may enumerate [env: CONGRUENCE_KIT_BUDGET].
    #[arg(long, global = true)]
    budget: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// H_1(M; Z_d) of a surgery presentation, double branched cover or matrix.
    Homology {
        input: String,
        #[arg(long)]
        d: u64,
    },
    /// Runs every invariant on two manifolds.
    Distinguish {
        a: String,
        b: String,
        #[arg(long)]
        d: u64,
        #[arg(long, value_enum)]
        skip: Vec<Skip>,
    },
    /// Reproduces every claim the kit can check, one line each.
    PaperCheck {
        /// Moduli for the per-d lines, inclusive, as `a..b`.
        #[arg(long, value_parser = parse_d_range)]
        d_range: Option<std::ops::RangeInclusive<u64>>,
        #[arg(long, value_enum)]
        skip: Vec<Skip>,
    },
    /// Certificate that the free Burnside group B(r, d) is nonabelian.
    Burnside {
        #[arg(long, required_unless_present = "verify")]
        d: Option<u64>,
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Re-verify a stored certificate instead.
        #[arg(long, conflicts_with = "d")]
        verify: Option<String>,
    },
    /// The cup-product form on H^1(M; Z_d); `lens` with --s and --q gives L(ds, q).
    Cupform {
        input: String,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        q: Option<i64>,
    },
}

fn run(cli: &Cli, echo: Vec<String>) -> Result<Report> {
    let options = |skip: &[Skip]| Options::with_budget(cli.budget, skip.iter().copied().collect::<BTreeSet<_>>());
    match &cli.command {
        Command::Homology { input, d } => commands::homology(echo, &resolve(input)?, *d),
        Command::Distinguish { a, b, d, skip } => {
            commands::distinguish(echo, &resolve(a)?, &resolve(b)?, *d, &options(skip)?)
        }
        Command::PaperCheck { d_range, skip } => {
            Ok(paper_check(echo, &PaperCheckOptions { d_range: d_range.clone(), options: options(skip)? }))
        }
        Command::Burnside { verify: Some(path), .. } => commands::verify(echo, path),
        Command::Burnside { d, r, .. } => commands::burnside(echo, d.expect("clap requires --d"), *r),
        Command::Cupform { input, d, s, q } => {
            if input == "lens" {
                let (Some(s), Some(q)) = (s, q) else {
                    return Err(KitError::Usage("cupform lens needs --s and --q".into()));
                };
                commands::cupform(echo, CupFormSource::Lens { s: *s, q: *q }, *d)
            } else {
                if s.is_some() || q.is_some() {
                    return Err(KitError::Usage("--s and --q apply only to `cupform lens`".into()));
                }
                commands::cupform(echo, CupFormSource::Input(&resolve(input)?), *d)
            }
        }
    }
}

fn main() -> ExitCode {
    let echo: Vec<String> = std::env::args().skip(1).collect();
    let cli = Cli::parse();
    match run(&cli, echo) {
        Ok(report) => {
            let mut out = if cli.json { report.to_json() } else { report.to_text() };
            if !cli.json {
                let document = match &cli.command {
                    Command::Burnside { verify: None, .. } => Some("certificate"),
                    Command::Cupform { .. } => Some("form"),
                    _ => None,
                };
                if let Some(key) = document {
                    for c in &report.claims {
                        out += &serde_json::to_string_pretty(&c.payload[key]).expect("payloads serialize");
                        out.push('\n');
                    }
                }
            }
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::from(report.exit_status as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
