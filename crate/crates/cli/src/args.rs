use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact analysis of seeded diffusion with message loss.
#[derive(Debug, Parser)]
#[command(name = "diffusion", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Use exact rational arithmetic; numbers print as `num/den`.
    #[arg(long, global = true)]
    pub exact: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a scenario file and print its information structure.
    Validate(ScenarioArgs),
    /// Enumerate the outcome space and per-agent beliefs.
    Analyze {
        #[command(flatten)]
        scenario: ScenarioArgs,
        /// Also write the outcome table as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Common p-belief of an event.
    CommonBelief {
        #[command(flatten)]
        scenario: ScenarioArgs,
        #[arg(long)]
        p: String,
        #[arg(long, value_enum, default_value_t = EventArg::G)]
        event: EventArg,
    },
    /// Equilibrium of a binary coordination game.
    Solve {
        #[command(flatten)]
        scenario: ScenarioArgs,
        #[command(flatten)]
        game: GameArgs,
    },
    /// Diffusion, first-order and second-order orderings of two trees.
    Compare {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        rho: Option<String>,
        #[arg(long)]
        epsilon: Option<String>,
    },
    /// One CSV row per grid point.
    Sweep {
        #[command(flatten)]
        scenario: ScenarioArgs,
        #[arg(long, value_enum)]
        axis: Axis,
        /// `start:stop:step` (inclusive), a comma list, or empty.
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[command(flatten)]
        game: GameArgs,
        /// Belief threshold for the common-belief columns.
        #[arg(long)]
        p: Option<String>,
        /// Write the CSV here and print a JSON summary instead.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute a worked example from the model.
    Reproduce {
        #[arg(long, value_enum)]
        case: Case,
        #[arg(long, default_value = "0.5")]
        rho: String,
        #[arg(long, default_value = "0.1")]
        epsilon: String,
        #[arg(long)]
        c: String,
    },
    /// Compare Monte Carlo frequencies with exact probabilities.
    OracleCheck {
        #[arg(long, conflicts_with = "case")]
        scenario: Option<PathBuf>,
        #[arg(long)]
        general: bool,
        #[arg(long, value_enum)]
        case: Option<OracleCase>,
        #[arg(long)]
        rho: Option<String>,
        #[arg(long)]
        epsilon: Option<String>,
        #[arg(long, default_value_t = 1_000_000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        rng_seed: u64,
        /// Allowed deviation in standard errors.
        #[arg(long, default_value_t = 4.0)]
        sigmas: f64,
    },
    /// Check that C^p(G) is the same on every seeded tree and on sampled
    /// forests.
    EnumerateVerify {
        #[arg(long)]
        agents: usize,
        #[arg(long)]
        rho: String,
        #[arg(long)]
        epsilon: String,
        /// `auto` (twentieths plus breakpoints ± 1e-9) or a comma list.
        #[arg(long, default_value = "auto")]
        p_grid: String,
        #[arg(long, default_value_t = 200)]
        forest_samples: usize,
        #[arg(long, default_value_t = 1)]
        rng_seed: u64,
    },
}

#[derive(Debug, Clone, Args)]
pub struct ScenarioArgs {
    #[arg(long)]
    pub scenario: PathBuf,
    /// Allow cycles, several seeds per component, seeding mixtures and
    /// explicit link lists.
    #[arg(long)]
    pub general: bool,
    /// Overrides the scenario's `rho`.
    #[arg(long)]
    pub rho: Option<String>,
    /// Overrides the scenario's `epsilon`.
    #[arg(long)]
    pub epsilon: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct GameArgs {
    #[arg(long, value_enum, default_value_t = GameKind::Adoption)]
    pub game: GameKind,
    /// Adoption or protest cost.
    #[arg(long)]
    pub c: Option<String>,
    /// Protest reward `R`.
    #[arg(long)]
    pub reward: Option<String>,
    /// Protest damage per protester `d`.
    #[arg(long)]
    pub damage: Option<String>,
    /// Potential game `w`; may be negative.
    #[arg(long, allow_negative_numbers = true)]
    pub w: Option<String>,
    /// Potential game `γ`.
    #[arg(long)]
    pub gamma: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GameKind {
    Adoption,
    Protest,
    Potential,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EventArg {
    /// The good state.
    G,
    /// Everyone informed.
    Ystar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Axis {
    Epsilon,
    Rho,
    C,
    P,
}

impl Axis {
    pub fn name(self) -> &'static str {
        match self {
            Axis::Epsilon => "epsilon",
            Axis::Rho => "rho",
            Axis::C => "c",
            Axis::P => "p",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Case {
    Cycle,
    Multiseed,
    Randomseed,
    IntroLine,
    IntroBroadcast,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleCase {
    Line3,
    Star4,
    Cycle4,
    TwoSeed,
    RandomSeed,
}
