use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lctop::{MonomialOrder, RealizeOptions};
use lctop_cli::report::render;
use lctop_cli::selftest::selftest;
use lctop_cli::{run_enumerate, run_session, RunConfig, Session};

/// Top local cohomology attached primes: queries and constructions.
#[derive(Parser)]
#[command(name = "lctop", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Bound on coefficients tried in the dimension-one prime search.
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=64))]
    max_coeff: u32,
    /// Order of the Gröbner bases printed for output ideals.
    #[arg(long, global = true, value_enum, default_value_t = Order::Grevlex)]
    order: Order,
    /// Run independent queries and subsets concurrently.
    #[arg(long, global = true)]
    parallel: bool,
    /// Add per-query wall-clock times to the report (makes it non-reproducible).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Grevlex,
    Lex,
}

#[derive(Subcommand)]
enum Command {
    /// Run every query of a session file.
    Run { file: PathBuf },
    /// Check the built-in four-plane corpus.
    Selftest,
    /// Realize every subset of one module's top-dimensional primes.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        module: String,
    },
}

fn load(path: &Path) -> Result<Session, ExitCode> {
    Session::load(path).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(1)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = RunConfig {
        options: RealizeOptions {
            max_coeff: cli.common.max_coeff,
            parallel: cli.common.parallel,
        },
        order: match cli.common.order {
            Order::Grevlex => MonomialOrder::Grevlex,
            Order::Lex => MonomialOrder::Lex,
        },
        timings: cli.common.timings,
    };
    let report = match cli.command {
        Command::Selftest => {
            let report = selftest(&config.options);
            print!("{}", render(&report));
            for line in report.diff() {
                eprintln!("{line}");
            }
            return if report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            };
        }
        Command::Run { file } => match load(&file) {
            Ok(session) => run_session(&session, &config),
            Err(code) => return code,
        },
        Command::Enumerate { file, module } => {
            let session = match load(&file) {
                Ok(s) => s,
                Err(code) => return code,
            };
            let Some(index) = session.module_index(&module) else {
                eprintln!("error: undeclared module `{module}`");
                return ExitCode::from(1);
            };
            run_enumerate(&session, index, &config)
        }
    };
    print!("{}", render(&report));
    for r in &report.results {
        if let lctop_cli::report::Outcome::Error { kind, message } = &r.outcome {
            eprintln!("query {} ({}), exit {}: {message}", r.query, r.op, kind.exit_code());
        }
    }
    ExitCode::from(report.exit_code())
}
