use std::path::PathBuf;

use diffusion_core::belief::BeliefError;
use diffusion_core::extensions::ExtensionError;
use diffusion_core::game::GameError;
use diffusion_core::informativeness::InformativenessError;
use diffusion_core::network::NetworkError;
use diffusion_core::probability::ProbabilityError;
use diffusion_core::scalar::ParseDecimalError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input: exit code 2.
    #[error("{0}")]
    Invalid(String),
    /// A size cap was hit: exit code 3.
    #[error("{0} (raise MAX_AGENTS / MAX_LINKS to allow it)")]
    Cap(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) | CliError::Read { .. } => 2,
            CliError::Cap(_) => 3,
            CliError::Write { .. } => 1,
        }
    }
}

impl From<NetworkError> for CliError {
    fn from(e: NetworkError) -> Self {
        match e {
            NetworkError::CapExceeded { .. } => CliError::Cap(format!("CapExceeded: {e}")),
            _ => CliError::Invalid(format!("{}: {e}", network_kind(&e))),
        }
    }
}

fn network_kind(e: &NetworkError) -> &'static str {
    match e {
        NetworkError::NoAgents => "NoAgents",
        NetworkError::BadEdge { .. } => "BadEdge",
        NetworkError::CycleDetected { .. } => "CycleDetected",
        NetworkError::SeedMismatch(_) => "SeedMismatch",
        NetworkError::NotATree(_) => "NotATree",
        NetworkError::UnknownAgent(_) => "UnknownAgent",
        NetworkError::BadLink { .. } => "BadLink",
        NetworkError::Unreachable(_) => "Unreachable",
        NetworkError::CapExceeded { .. } => "CapExceeded",
    }
}

impl From<ProbabilityError> for CliError {
    fn from(e: ProbabilityError) -> Self {
        match e {
            ProbabilityError::CapExceeded { .. } => CliError::Cap(format!("CapExceeded: {e}")),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<BeliefError> for CliError {
    fn from(e: BeliefError) -> Self {
        match e {
            BeliefError::Network(e) => e.into(),
            BeliefError::Probability(e) => e.into(),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<GameError> for CliError {
    fn from(e: GameError) -> Self {
        match e {
            GameError::Probability(e) => e.into(),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<InformativenessError> for CliError {
    fn from(e: InformativenessError) -> Self {
        match e {
            InformativenessError::Network(e) => e.into(),
            InformativenessError::Probability(e) => e.into(),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<ExtensionError> for CliError {
    fn from(e: ExtensionError) -> Self {
        match e {
            ExtensionError::Network(e) => e.into(),
            ExtensionError::Probability(e) => e.into(),
            ExtensionError::Game(e) => e.into(),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<ParseDecimalError> for CliError {
    fn from(e: ParseDecimalError) -> Self {
        CliError::Invalid(e.to_string())
    }
}
