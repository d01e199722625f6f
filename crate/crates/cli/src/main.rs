use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qappell::{QContext, Scalar};
use qappell_cli::verify::{self, Suite, VerifyConfig};
use qappell_cli::{
    numbers_record, parse_q, parse_rational, polys_record, FamilyParams, Format, NumberFamily,
    PolyFamily, EXIT_USAGE, EXIT_VERIFY_FAILED,
};

#[derive(Parser)]
#[command(
    name = "qappell",
    version,
    about = "Type-II q-Appell tables and identity checks over exact rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print q-Bernoulli or q-Euler numbers of order m.
    Numbers {
        #[arg(long, value_enum)]
        family: NumberFamily,
        #[arg(long, value_parser = parse_q, allow_hyphen_values = true)]
        q: QContext,
        /// Highest index.
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        order: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Print polynomial coefficients, ascending in x.
    Polys {
        #[arg(long, value_enum)]
        family: PolyFamily,
        #[arg(long, value_parser = parse_q, allow_hyphen_values = true)]
        q: QContext,
        /// Highest degree.
        #[arg(long)]
        n: usize,
        /// Order m for bernoulli and euler.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        order: i64,
        /// asc2 with alpha = a, beta = 1.
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true, conflicts_with_all = ["alpha", "beta"])]
        a: Option<Scalar>,
        /// asc2 alpha (default 1).
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        alpha: Option<Scalar>,
        /// asc2 beta, nonzero (default 1).
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        beta: Option<Scalar>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check the identity suites exactly and report every check.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, value_parser = parse_q, allow_hyphen_values = true)]
        q: QContext,
        /// Highest degree checked.
        #[arg(long, default_value_t = 12)]
        n: usize,
        /// Quasi-orthogonal parameter.
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true, default_value = "1")]
        lambda: Scalar,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Numbers {
            family,
            q,
            n,
            order,
            format,
        } => {
            print!("{}", numbers_record(family, order, &q, n).render(format));
            ExitCode::SUCCESS
        }
        Command::Polys {
            family,
            q,
            n,
            order,
            a,
            alpha,
            beta,
            format,
        } => {
            let params = FamilyParams {
                order,
                a,
                alpha,
                beta,
            };
            match polys_record(family, &params, &q, n) {
                Ok(record) => {
                    print!("{}", record.render(format));
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(EXIT_USAGE as u8)
                }
            }
        }
        Command::Verify {
            suite,
            q,
            n,
            lambda,
        } => {
            if lambda == Scalar::from_integer(0.into()) {
                eprintln!("error: {}", qappell::Error::ZeroLambda);
                return ExitCode::from(EXIT_USAGE as u8);
            }
            let report = verify::run(suite, &VerifyConfig { ctx: q, n, lambda });
            println!("{report}");
            match report.first_failure() {
                None => ExitCode::SUCCESS,
                Some(check) => {
                    eprintln!(
                        "verification failed: [{}] {}: {}",
                        check.suite,
                        check.name,
                        check.failure.as_deref().unwrap_or("")
                    );
                    ExitCode::from(EXIT_VERIFY_FAILED as u8)
                }
            }
        }
    }
}
