//! `orthocert`: homotopy-group lookups, decomposition certificates and the
//! matrix identity suite from the command line.
//!
//! Exit codes: 0 success or decomposable, 1 not decomposable (dimension
//! gate), 2 range or usage error, 3 invalid input, 4 failed check.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use orthocert_core::bezout::positive_bezout;
use orthocert_core::checker::{certify, CertificateStatus, DecompositionProblem};
use orthocert_core::homotopy::{first_unstable, pi_of, GroupFamily};
use orthocert_core::oracle::run_suite;
use orthocert_core::Error;

const EXIT_GATED: u8 = 1;
const EXIT_RANGE: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_CHECK_FAILED: u8 = 4;

#[derive(Parser)]
#[command(
    name = "orthocert",
    version,
    about = "Certificates for tensor decompositions of Azumaya algebras with orthogonal involution"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print pi_i of O(n), SO(n), PO(n) or PSO(n).
    Pi {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        i: u64,
    },
    /// Certify the connectivity of J for degrees m and n over a base of the given dimension.
    Certify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long)]
        dim: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check the block-swap and shuffle conjugation identities on random matrices.
    VerifyLemmas {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(2..=8))]
        max_size: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..=10_000))]
        samples: u64,
    },
    /// Least positive solution of |v b - u a| = 1.
    Bezout {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        a: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        b: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "O")]
    O,
    #[value(name = "SO")]
    So,
    #[value(name = "PO")]
    Po,
    #[value(name = "PSO")]
    Pso,
}

impl From<Family> for GroupFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::O => GroupFamily::O,
            Family::So => GroupFamily::SO,
            Family::Po => GroupFamily::PO,
            Family::Pso => GroupFamily::PSO,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::UnsupportedRange { .. } | Error::OutOfRange(_) => EXIT_RANGE,
        _ => EXIT_INVALID,
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Pi { family, n, i } => {
            let family = GroupFamily::from(family);
            let g = pi_of(family, n, i)?;
            println!("{g}");
            if n >= 2 && i == n - 1 {
                let u = first_unstable(n)?;
                println!("kernel: {}", u.kernel);
                println!("stable: {}", u.stable);
                println!("split: {}", if u.splits { "yes" } else { "no" });
            }
            Ok(0)
        }
        Command::Certify { m, n, dim, format } => {
            let c = certify(DecompositionProblem { m, n, dim_x: dim })?;
            match format {
                Format::Json => println!("{}", c.to_json()?),
                Format::Text => print!("{}", c.to_text()),
            }
            Ok(match c.status {
                CertificateStatus::Decomposable => 0,
                CertificateStatus::DimensionGated => EXIT_GATED,
                CertificateStatus::CheckFailed { degree } => {
                    match degree {
                        Some(i) => eprintln!(
                            "check failed: J_{i} does not meet the connectivity requirement"
                        ),
                        None => eprintln!("check failed: stable-range matrix is not unimodular"),
                    }
                    EXIT_CHECK_FAILED
                }
            })
        }
        Command::VerifyLemmas {
            max_size,
            seed,
            samples,
        } => {
            let report = run_suite(max_size as usize, seed, samples as usize)?;
            println!("{report}");
            if report.all_pass() {
                return Ok(0);
            }
            for t in report
                .tallies
                .iter()
                .filter(|t| !t.informational && t.failed > 0)
            {
                if let Some(w) = &t.first_failure {
                    eprintln!("{}: {w}", t.name);
                }
            }
            Ok(EXIT_CHECK_FAILED)
        }
        Command::Bezout { a, b } => {
            let p = positive_bezout(a, b)?;
            println!("u = {}, v = {}, sign = {:+}", p.u, p.v, p.sign);
            Ok(0)
        }
    }
}
