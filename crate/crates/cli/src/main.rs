mod commands;
mod fixtures;
mod parse;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use descent_core::{Characteristic, Error};

/// Hard upper bound on `n` accepted on the command line.
pub const MAX_N: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "dk", version, about = "Exact computations in descent algebras of type A")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Degree of the descent algebra.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Characteristic of the prime field.
    #[arg(long, global = true, conflicts_with = "char0")]
    pub p: Option<u32>,
    /// Work over the rationals (the default when `--p` is absent).
    #[arg(long, global = true)]
    pub char0: bool,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Shorthand for `--format dot`.
    #[arg(long, global = true)]
    pub dot: bool,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    pub seed: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the compositions indexing the basis `Ξ^q`.
    Basis,
    /// Multiply two elements, e.g. `--lhs 21 --rhs "12 + -1*111"`.
    Multiply {
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
    },
    /// Values of `θ(x)` on each cycle type.
    Theta {
        /// Element, in the same syntax as `multiply`.
        element: String,
    },
    /// Dimensions of the radical powers and the nilpotency index.
    Radical,
    /// A complete set of primitive orthogonal idempotents.
    Idempotents,
    /// Cartan and decomposition matrices.
    Cartan {
        /// Compare `C̃` with `Dᵀ C D`; exit 1 on mismatch.
        #[arg(long)]
        verify_apw: bool,
    },
    /// The Ext quiver `Q_{n,p}`.
    Quiver,
    /// Representation type with evidence.
    Type,
    /// Checks for `Δ_s : D_n → D_{n-s}`.
    VerifyBgr {
        #[arg(long)]
        s: usize,
    },
    /// Loop counts and arrow multiplicities against the conjectured pattern.
    Conjecture {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Run the bundled fixtures.
    Fixtures {
        /// Restrict to a group (`cartan`, `quiver`, ...) or a fixture name.
        #[arg(long)]
        only: Option<String>,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
}

/// Outcome of a command: output already written, plus whether every
/// verification passed.
pub type Outcome = Result<bool, CliError>;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidComposition(_)
            | Error::InvalidPartition(_)
            | Error::NotPrime(_)
            | Error::BoundExceeded { .. }
            | Error::StepOutOfRange { .. }
            | Error::Parse(_)
            | Error::NotRegular(..)
            | Error::DegreeMismatch { .. }
            | Error::FieldMismatch { .. }
            | Error::WRequiresDegree3(_) => CliError::Usage(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failed(e.to_string())
    }
}

impl Opts {
    pub fn characteristic(&self) -> Result<Characteristic, CliError> {
        match self.p {
            None => Ok(Characteristic::Zero),
            Some(p) => Characteristic::prime(p as u64).map_err(CliError::from),
        }
    }

    pub fn n(&self) -> Result<usize, CliError> {
        let n = self
            .n
            .ok_or_else(|| CliError::Usage("--n is required".into()))?;
        if n == 0 || n > MAX_N {
            return Err(CliError::Usage(format!("--n must be in 1..={MAX_N}")));
        }
        Ok(n)
    }

    pub fn format(&self) -> Format {
        if self.dot {
            Format::Dot
        } else if self.json {
            Format::Json
        } else {
            self.format.unwrap_or(Format::Text)
        }
    }
}

fn run(cli: Cli, out: &mut dyn Write) -> Outcome {
    let o = &cli.opts;
    match cli.cmd {
        Command::Basis => commands::basis(o, out),
        Command::Multiply { lhs, rhs } => commands::multiply(o, &lhs, &rhs, out),
        Command::Theta { element } => commands::theta(o, &element, out),
        Command::Radical => commands::radical(o, out),
        Command::Idempotents => commands::idempotents(o, out),
        Command::Cartan { verify_apw } => commands::cartan(o, verify_apw, out),
        Command::Quiver => commands::quiver(o, out),
        Command::Type => commands::rep_type(o, out),
        Command::VerifyBgr { s } => commands::verify_bgr(o, s, out),
        Command::Conjecture { n_max } => commands::conjecture(o, n_max, out),
        Command::Fixtures { only, n_max } => fixtures::run(o, only.as_deref(), n_max, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli, &mut out) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            2
        }
        Err(CliError::Failed(m)) => {
            eprintln!("error: {m}");
            1
        }
    };
    let _ = out.flush();
    ExitCode::from(code)
}
