mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use coxeter_shuffle::coxeter::{Family, GroupDescriptor};
use coxeter_shuffle::{Caps, Error};

use output::Format;

/// Shuffling measures on finite Coxeter groups, checked in exact arithmetic.
#[derive(Debug, Parser)]
#[command(name = "coxshuffle", version, about)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,

    /// Cap override such as `a=5` or `budget=100000`; repeatable. Applied
    /// after COXSHUFFLE_CAPS.
    #[arg(long = "cap", value_name = "KEY=VALUE", global = true)]
    caps: Vec<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    /// A, B, D, I2 or G2.
    #[arg(long)]
    family: Option<Family>,
    /// Rank for A, B and D.
    #[arg(long)]
    rank: Option<usize>,
    /// Order parameter of I2(p).
    #[arg(long)]
    p: Option<usize>,
    /// The symmetric group S_n (same as --family A --rank n-1).
    #[arg(long)]
    sn: Option<usize>,
    /// Whole descriptor, e.g. `B3`, `S4`, `I2(5)`, `G2`.
    #[arg(long, conflicts_with_all = ["family", "rank", "p", "sn"])]
    group: Option<String>,
}

impl GroupArgs {
    fn descriptor(&self) -> Result<GroupDescriptor, Error> {
        if let Some(g) = &self.group {
            return g.parse();
        }
        if let Some(n) = self.sn {
            return Ok(GroupDescriptor::symmetric(n));
        }
        let missing = |what: &str| Error::InvalidParameter(format!("--{what} is required for this family"));
        match self.family {
            Some(Family::G2) => Ok(GroupDescriptor::g2()),
            Some(Family::I2) => Ok(GroupDescriptor::i2(self.p.or(self.rank).ok_or_else(|| missing("p"))?)),
            Some(f) => Ok(GroupDescriptor::new(f, self.rank.ok_or_else(|| missing("rank"))?)),
            None => Err(Error::InvalidParameter("give --family (with --rank or --p), --sn, or --group".into())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SampleMethod {
    /// Inverse transform on the exact coefficient table.
    Exact,
    /// Inverse riffle shuffles (type A, integer x >= 2).
    Gsr,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Order, exponents, conjugacy classes and subset classes.
    Group(GroupArgs),
    /// Coefficients of M_{W,x} with closed-form and sum checks.
    Measure {
        #[command(flatten)]
        group: GroupArgs,
        /// Nonzero rational parameter, e.g. 7, 1/2, -2.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// The idempotents e_λ and their orthogonality checks.
    Idempotents(GroupArgs),
    /// Eigenvalue multiplicities of the random walk and exact checks.
    Spectrum {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Compares polynomial orbit statistics over F_q with M_{W,q} (types A, B).
    Conjecture {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
    },
    /// Necklace and signed ornament counts with the class-by-class comparison.
    Necklaces {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u32,
    },
    /// Split cubics over F_5 with f(0) = 1 against the identity-class prediction.
    Counterexample,
    /// Draws from M_{W,x}.
    Sample {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "exact")]
        method: SampleMethod,
    },
}

fn caps(overrides: &[String]) -> Result<Caps, Error> {
    overrides.iter().try_fold(Caps::from_env()?, |caps, o| caps.with_overrides(o))
}

fn run(cli: &Cli) -> Result<output::OutputRecord, Error> {
    let caps = caps(&cli.caps)?;
    match &cli.command {
        Command::Group(g) => commands::group(&g.descriptor()?, &caps),
        Command::Measure { group, x } => commands::measure(&group.descriptor()?, x, &caps),
        Command::Idempotents(g) => commands::idempotents(&g.descriptor()?, &caps),
        Command::Spectrum { group, x } => commands::spectrum(&group.descriptor()?, x, &caps),
        Command::Conjecture { family, n, q } => commands::conjecture(*family, *n, *q, &caps),
        Command::Necklaces { n, q } => commands::necklaces(*n, *q, &caps),
        Command::Counterexample => commands::counterexample(),
        Command::Sample { group, x, count, seed, method } => {
            commands::sample(&group.descriptor()?, x, *count, *seed, *method, &caps)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(record) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = record.write(cli.format, &mut stdout) {
                eprintln!("coxshuffle: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if record.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e @ Error::VerificationFailure(_)) => {
            eprintln!("coxshuffle: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("coxshuffle: {e}");
            ExitCode::from(2)
        }
    }
}
