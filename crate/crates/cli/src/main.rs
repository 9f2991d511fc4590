use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use wedge_core::proofs::DEFAULT_BOUND;
use wedge_core::Rational;

mod construct;
mod prove;
mod sex;
mod verify;

/// Exact checks of the BM 15285 and YBC 7289 tablet claims.
#[derive(Parser)]
#[command(name = "wedge", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a construction script and report every triangle's area.
    Construct {
        /// Path to a `.ct` script.
        script: Option<PathBuf>,
        /// Bundled script name instead of a path.
        #[arg(long, conflicts_with = "script")]
        builtin: Option<String>,
        /// Substituted for `$side`.
        #[arg(long, allow_hyphen_values = true)]
        side: Option<Rational>,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Fill triangles with the two-colour checker.
        #[arg(long)]
        shade: bool,
    },
    /// Check every claim made for a tablet figure.
    Verify {
        tablet: Tablet,
        #[arg(long, allow_hyphen_values = true)]
        side: Option<Rational>,
        /// Exhaustive search bound for the irrationality of √2.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
    },
    /// Decide whether √n is rational and print the certificate.
    Prove {
        n: u64,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Base-60 numerals.
    Sex {
        #[command(subcommand)]
        action: SexCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Tablet {
    Bm15285,
    Ybc7289,
}

#[derive(Subcommand)]
enum SexCmd {
    /// Print the canonical form and exact value.
    Parse {
        #[arg(allow_hyphen_values = true)]
        text: String,
    },
    /// Best approximation of √n with the given fractional digits.
    Approx {
        n: u64,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=64))]
        digits: u32,
        /// Approximate 1/√n instead.
        #[arg(long)]
        recip: bool,
    },
    /// Heron's iteration for √n, rounding after each step.
    Heron {
        n: u64,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        x0: String,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=64))]
        digits: u32,
        #[arg(long, default_value_t = 32)]
        max_iter: usize,
    },
}

/// `Ok(true)` exits 0, `Ok(false)` exits 1, `Err` is a usage or domain
/// error and exits 2.
type Outcome = Result<bool, String>;

fn positive_side(side: Option<Rational>) -> Result<Option<Rational>, String> {
    match side {
        Some(s) if !s.is_positive() => Err(format!("side must be positive, got {s}")),
        other => Ok(other),
    }
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Cmd::Construct { script, builtin, side, svg, json, shade } => {
            let source = match (script, builtin) {
                (Some(path), None) => construct::Source::File(path),
                (None, Some(name)) => construct::Source::Builtin(name),
                _ => return Err("give exactly one of a script path or --builtin".into()),
            };
            construct::run(source, positive_side(side)?, svg, json, shade)
        }
        Cmd::Verify { tablet, side, bound } => match tablet {
            Tablet::Bm15285 => verify::bm15285(positive_side(side)?, bound),
            Tablet::Ybc7289 => verify::ybc7289(positive_side(side)?, bound),
        },
        Cmd::Prove { n, bound, json } => prove::run(n, bound, json),
        Cmd::Sex { action } => match action {
            SexCmd::Parse { text } => sex::parse(&text),
            SexCmd::Approx { n, digits, recip } => sex::approx(n, digits as usize, recip),
            SexCmd::Heron { n, x0, digits, max_iter } => sex::heron(n, &x0, digits as usize, max_iter),
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
