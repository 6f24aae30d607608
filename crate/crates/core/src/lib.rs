//! Exact analysis of seeded information diffusion with message loss.
//!
//! A planner (agent `0`) learns a binary fundamental `θ ∈ {g, b}` and, only
//! in state `g`, seeds a message into a social network. Every forwarded
//! message is lost independently with probability `ε`. This crate builds the
//! induced finite probability space over world states, evaluates p-belief
//! operators and their common p-belief fixed point, certifies equilibria of
//! binary coordination games played on that space, and compares information
//! trees by diffusion speed and by Blackwell informativeness.
//!
//! The modules map onto the analysis pipeline:
//!
//! - [`network`]: forests, seedings, directed information structures.
//! - [`probability`]: outcome spaces, events, closed forms, Monte Carlo.
//! - [`belief`]: `B_i^p`, `B^p`, `C^p` and the irrelevance sweep.
//! - [`game`]: adoption / protest / potential games and their equilibria.
//! - [`informativeness`]: diffusion, first- and second-order orderings.
//! - [`extensions`]: cycle, double-seed and random-seed structures.

pub mod belief;
pub mod extensions;
pub mod game;
pub mod informativeness;
pub mod network;
pub mod probability;
pub mod scalar;

pub use scalar::{Exact, Scalar};

/// Size limits for exhaustive computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest agent count accepted by exhaustive tree enumeration.
    pub max_agents: usize,
    /// Largest number of directed links accepted by outcome enumeration.
    pub max_links: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_agents: 6,
            max_links: 24,
        }
    }
}

impl Caps {
    /// Defaults overridden by the `MAX_AGENTS` and `MAX_LINKS` environment
    /// variables when they parse as integers.
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Some(v) = read_env_usize("MAX_AGENTS") {
            caps.max_agents = v;
        }
        if let Some(v) = read_env_usize("MAX_LINKS") {
            caps.max_links = v;
        }
        caps
    }
}

fn read_env_usize(key: &str) -> Option<usize> {
    std::env::var(key).ok()?.trim().parse().ok()
}
