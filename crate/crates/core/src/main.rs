use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fiblucas::classical::Kind;
use fiblucas::cli::{self, EvalKind, Format, RunConfig};
use fiblucas::interpolants::Family;
use fiblucas::series::DEFAULT_ORDER;

#[derive(Parser)]
#[command(
    name = "fiblucas",
    version,
    about = "Interpolated Fibonacci and Lucas polynomials"
)]
struct Args {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum FormatArg {
    Text,
    Machine,
}

#[derive(Copy, Clone, ValueEnum)]
enum KindArg {
    Fib,
    Lucas,
}

#[derive(Copy, Clone, ValueEnum)]
enum EvalArg {
    Phi,
    Lambda,
}

#[derive(Subcommand)]
enum Command {
    /// Print F_n(x) or L_n(x).
    Poly { kind: KindArg, n: usize },
    /// Print a series, optionally at a rational t.
    Series {
        /// Phi0, Phi1, Lam0, Lam1 or AlphaT (any case)
        family: Family,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
    },
    /// Exact values at x = 1.
    Table {
        #[arg(long, default_value_t = 8)]
        max_k: usize,
    },
    /// Evaluate Phi_j or Lambda_j at real (t, x).
    Eval {
        kind: EvalArg,
        #[arg(long)]
        j: u8,
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        /// Show both computation routes.
        #[arg(long, short)]
        verbose: bool,
    },
    /// Check every built-in identity.
    VerifyBuiltin {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Check the identities in a file, one per line.
    Check {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long, default_value_t = cli::DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = cli::DEFAULT_SEED, value_parser = parse_seed)]
        seed: u64,
        #[arg(long, default_value_t = cli::DEFAULT_TOLERANCE)]
        tol: f64,
    },
}

fn parse_seed(s: &str) -> Result<u64, String> {
    match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    }
    .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() {
                cli::EXIT_INPUT
            } else {
                cli::EXIT_OK
            };
            return ExitCode::from(code as u8);
        }
    };
    let mut cfg = RunConfig {
        format: match args.format {
            FormatArg::Text => Format::Text,
            FormatArg::Machine => Format::Machine,
        },
        ..RunConfig::default()
    };
    let result = match args.command {
        Command::Poly { kind, n } => {
            let kind = match kind {
                KindArg::Fib => Kind::Fib,
                KindArg::Lucas => Kind::Lucas,
            };
            cli::cmd_poly(kind, n, &cfg)
        }
        Command::Series { family, order, t } => {
            cfg.order = order;
            cli::cmd_series(family, t.as_deref(), &cfg)
        }
        Command::Table { max_k } => cli::cmd_table(max_k, &cfg),
        Command::Eval {
            kind,
            j,
            t,
            x,
            verbose,
        } => {
            let kind = match kind {
                EvalArg::Phi => EvalKind::Phi,
                EvalArg::Lambda => EvalKind::Lambda,
            };
            cli::cmd_eval(kind, j, t, x, verbose, &cfg)
        }
        Command::VerifyBuiltin { order } => {
            cfg.order = order;
            cli::cmd_verify_builtin(&cfg)
        }
        Command::Check {
            file,
            order,
            samples,
            seed,
            tol,
        } => {
            cfg.order = order;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.tolerance = tol;
            cli::cmd_check(&file, &cfg)
        }
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.render(cfg.format).as_bytes());
            ExitCode::from(out.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
