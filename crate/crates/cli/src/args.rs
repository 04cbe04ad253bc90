use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use lanke_core::Partition;

#[derive(Parser, Debug, Clone)]
#[command(name = "lanke", version, about = "Decompositions and verifications for the free n-ary Lie algebra")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Directory for cached reports; caching is off when unset.
    #[arg(long, global = true, env = "LANKE_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Irreducible decomposition of rho_{n,k} and its beta/gamma split.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Run one of the verifications.
    Verify {
        #[arg(value_enum)]
        target: Target,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Number of variables for the divided-power check (default 2n-2).
        #[arg(long = "N")]
        num_vars: Option<usize>,
        /// A nonzero gamma is expected: the column clause is then required to fail.
        #[arg(long)]
        expect_gamma: bool,
        /// Random instances for the lemma33 target.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Littlewood-Richardson coefficient c^lambda_{mu,nu}.
    Lr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Multiplicities of rho_{n,k} against their LR upper bound.
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Main,
    Lemma33,
    Phi2theta2,
    Bridge,
    Combspan,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::Main => "main",
            Target::Lemma33 => "lemma33",
            Target::Phi2theta2 => "phi2theta2",
            Target::Bridge => "bridge",
            Target::Combspan => "combspan",
        }
    }
}
