//! The probability space induced by an information structure.
//!
//! In state `g` the planner sends its messages; every link is delivered
//! independently with probability `1 - ε` and only matters if its sender
//! forwards. In state `b` nothing is sent. World states record the
//! fundamental and, per agent, the set of senders heard from. Link outcome
//! profiles that produce the same signal profile are merged.

mod closed_form;
mod event;
mod export;
mod monte_carlo;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::network::{AgentId, InformationStructure, SourceSet};
use crate::scalar::Scalar;
use crate::Caps;

pub use closed_form::{closed_form, epsilon_bar, ClosedForm, EpsilonBar};
pub use event::Event;
pub use export::OutcomeRow;
pub use monte_carlo::{
    monte_carlo, monte_carlo_mixture, oracle_agreement, EmpiricalOutcomes, OracleAgreement,
    StateAgreement,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProbabilityError {
    #[error("{name} must lie strictly between 0 and 1, got {value}")]
    OutOfUnitInterval { name: &'static str, value: String },
    #[error("conditioning event has probability zero")]
    ConditionOnNull,
    #[error("{links} links exceed the enumeration cap of {cap}")]
    CapExceeded { links: usize, cap: usize },
    #[error("index k = {k} outside 1..={agent_count}")]
    BadIndex { k: usize, agent_count: usize },
    #[error("mixture weights must be positive and sum to one")]
    BadMixture,
    #[error("structures in a mixture must have the same agent count")]
    AgentCountMismatch,
}

/// Prior of the good state and per-link loss probability.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelParams<S> {
    pub rho: S,
    pub epsilon: S,
}

impl<S: Scalar> ModelParams<S> {
    pub fn new(rho: S, epsilon: S) -> Result<Self, ProbabilityError> {
        for (name, value) in [("rho", &rho), ("epsilon", &epsilon)] {
            if *value <= S::zero() || *value >= S::one() {
                return Err(ProbabilityError::OutOfUnitInterval {
                    name,
                    value: value.to_wire(),
                });
            }
        }
        Ok(ModelParams { rho, epsilon })
    }

    /// Delivery probability `1 - ε`.
    pub fn delivery(&self) -> S {
        S::one() - self.epsilon.clone()
    }

    pub fn to_f64(&self) -> ModelParams<f64> {
        ModelParams {
            rho: self.rho.to_f64(),
            epsilon: self.epsilon.to_f64(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Theta {
    #[serde(rename = "g")]
    Good,
    #[serde(rename = "b")]
    Bad,
}

impl fmt::Display for Theta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theta::Good => "g",
            Theta::Bad => "b",
        })
    }
}

/// Fundamental plus each agent's received-source set (`signals[i - 1]`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WorldState {
    pub theta: Theta,
    pub signals: Vec<SourceSet>,
}

impl WorldState {
    pub fn signal(&self, agent: AgentId) -> SourceSet {
        self.signals[agent.0 - 1]
    }

    pub fn is_informed(&self, agent: AgentId) -> bool {
        self.signal(agent).is_informed()
    }

    /// Tree-style state from `y`/`n` flags; each informed agent is marked
    /// as having heard from `sources[i]`.
    pub fn from_flags(theta: Theta, informed: &[bool], sources: &[AgentId]) -> Self {
        WorldState {
            theta,
            signals: informed
                .iter()
                .zip(sources)
                .map(|(&y, &s)| if y { SourceSet::single(s) } else { SourceSet::EMPTY })
                .collect(),
        }
    }

    /// Replaces every source set by a plain informed / uninformed flag.
    pub fn collapsed(&self) -> WorldState {
        WorldState {
            theta: self.theta,
            signals: self
                .signals
                .iter()
                .map(|s| if s.is_informed() { SourceSet(1) } else { SourceSet::EMPTY })
                .collect(),
        }
    }
}

impl fmt::Display for WorldState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}", self.theta)?;
        for s in &self.signals {
            write!(f, ",{s}")?;
        }
        write!(f, ")")
    }
}

/// Finite world-state space with exact (or floating point) probabilities.
#[derive(Debug, Clone)]
pub struct OutcomeSpace<S> {
    agent_count: usize,
    states: Vec<WorldState>,
    probs: Vec<S>,
    index: HashMap<WorldState, usize>,
    /// Signals are plain y/n (every agent has a single possible sender).
    binary_signals: bool,
}

impl<S: Scalar> OutcomeSpace<S> {
    /// Builds a space from `(state, probability)` pairs, merging duplicate
    /// states and dropping zero-probability ones. States are sorted.
    pub fn from_pairs<I>(agent_count: usize, pairs: I, binary_signals: bool) -> Self
    where
        I: IntoIterator<Item = (WorldState, S)>,
    {
        let mut merged: BTreeMap<WorldState, S> = BTreeMap::new();
        for (state, p) in pairs {
            debug_assert_eq!(state.signals.len(), agent_count);
            let slot = merged.entry(state).or_insert_with(S::zero);
            *slot = slot.clone() + p;
        }
        let (states, probs): (Vec<_>, Vec<_>) = merged
            .into_iter()
            .filter(|(_, p)| !p.is_zero())
            .unzip();
        let index = states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();
        OutcomeSpace {
            agent_count,
            states,
            probs,
            index,
            binary_signals,
        }
    }

    /// Weighted mixture of spaces over the same agents.
    pub fn mixture(components: &[(S, OutcomeSpace<S>)]) -> Result<Self, ProbabilityError> {
        let Some((_, first)) = components.first() else {
            return Err(ProbabilityError::BadMixture);
        };
        let agent_count = first.agent_count;
        let mut total = S::zero();
        for (w, space) in components {
            if *w <= S::zero() {
                return Err(ProbabilityError::BadMixture);
            }
            if space.agent_count != agent_count {
                return Err(ProbabilityError::AgentCountMismatch);
            }
            total = total + w.clone();
        }
        if !total.approx_eq(&S::one()) {
            return Err(ProbabilityError::BadMixture);
        }
        let binary = components.iter().all(|(_, s)| s.binary_signals)
            && components.len() == 1;
        let pairs = components.iter().flat_map(|(w, space)| {
            space
                .states
                .iter()
                .zip(&space.probs)
                .map(move |(s, p)| (s.clone(), w.clone() * p.clone()))
        });
        Ok(OutcomeSpace::from_pairs(agent_count, pairs, binary))
    }

    pub fn agent_count(&self) -> usize {
        self.agent_count
    }

    pub fn agents(&self) -> impl Iterator<Item = AgentId> {
        (1..=self.agent_count).map(AgentId)
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[WorldState] {
        &self.states
    }

    pub fn probs(&self) -> &[S] {
        &self.probs
    }

    pub fn has_binary_signals(&self) -> bool {
        self.binary_signals
    }

    pub fn index_of(&self, state: &WorldState) -> Option<usize> {
        self.index.get(state).copied()
    }

    /// Probability of a single state; zero if it is not in the support.
    pub fn prob_of(&self, state: &WorldState) -> S {
        self.index_of(state)
            .map(|i| self.probs[i].clone())
            .unwrap_or_else(S::zero)
    }

    pub fn total(&self) -> S {
        self.probs.iter().cloned().fold(S::zero(), |a, b| a + b)
    }

    pub fn event<F: Fn(&WorldState) -> bool>(&self, f: F) -> Event {
        Event::from_fn(self.len(), |i| f(&self.states[i]))
    }

    /// `Ω`.
    pub fn whole(&self) -> Event {
        Event::full(self.len())
    }

    /// `∅`.
    pub fn nothing(&self) -> Event {
        Event::empty(self.len())
    }

    /// `G`: the fundamental is good.
    pub fn good(&self) -> Event {
        self.event(|s| s.theta == Theta::Good)
    }

    /// `Y_i`.
    pub fn informed(&self, agent: AgentId) -> Event {
        self.event(|s| s.is_informed(agent))
    }

    /// `N_i`.
    pub fn uninformed(&self, agent: AgentId) -> Event {
        self.event(|s| !s.is_informed(agent))
    }

    /// `Y*`: every agent informed.
    pub fn all_informed(&self) -> Event {
        self.event(|s| s.signals.iter().all(|x| x.is_informed()))
    }

    /// Agent heard from exactly this set of senders.
    pub fn signal_is(&self, agent: AgentId, sources: SourceSet) -> Event {
        self.event(|s| s.signal(agent) == sources)
    }

    /// Distinct signals of `agent`, sorted.
    pub fn signals_of(&self, agent: AgentId) -> Vec<SourceSet> {
        let mut v: Vec<SourceSet> = self.states.iter().map(|s| s.signal(agent)).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn probability(&self, event: &Event) -> S {
        assert_eq!(event.universe_len(), self.len(), "event from another space");
        event
            .iter()
            .fold(S::zero(), |acc, i| acc + self.probs[i].clone())
    }

    pub fn conditional(&self, event: &Event, given: &Event) -> Result<S, ProbabilityError> {
        let denom = self.probability(given);
        if denom.is_zero() {
            return Err(ProbabilityError::ConditionOnNull);
        }
        Ok(self.probability(&event.intersection(given)) / denom)
    }

    /// Same distribution with source sets reduced to informed / uninformed.
    pub fn collapsed(&self) -> OutcomeSpace<S> {
        OutcomeSpace::from_pairs(
            self.agent_count,
            self.states
                .iter()
                .zip(&self.probs)
                .map(|(s, p)| (s.collapsed(), p.clone())),
            true,
        )
    }

    /// Converts to floating point.
    pub fn to_f64(&self) -> OutcomeSpace<f64> {
        OutcomeSpace {
            agent_count: self.agent_count,
            states: self.states.clone(),
            probs: self.probs.iter().map(Scalar::to_f64).collect(),
            index: self.index.clone(),
            binary_signals: self.binary_signals,
        }
    }
}

/// `P[event]` or `P[event | given]`.
pub fn probability<S: Scalar>(
    space: &OutcomeSpace<S>,
    event: &Event,
    given: Option<&Event>,
) -> Result<S, ProbabilityError> {
    match given {
        Some(g) => space.conditional(event, g),
        None => Ok(space.probability(event)),
    }
}

/// Signal profiles reachable in state `g`, each with the number of link
/// outcome profiles producing it, broken down by how many links delivered.
///
/// Evaluating the table at `(ρ, ε)` gives the outcome space, so one table
/// serves every parameter pair for a structure.
#[derive(Debug, Clone)]
pub struct DeliveryTable {
    agent_count: usize,
    link_count: usize,
    binary_signals: bool,
    rows: Vec<(Vec<SourceSet>, Vec<u64>)>,
}

impl DeliveryTable {
    pub fn new(info: &InformationStructure, caps: &Caps) -> Result<Self, ProbabilityError> {
        let links = info.link_count();
        if links > caps.max_links || links >= 64 {
            return Err(ProbabilityError::CapExceeded {
                links,
                cap: caps.max_links.min(63),
            });
        }
        let mut rows: HashMap<Vec<SourceSet>, Vec<u64>> = HashMap::new();
        for mask in 0u64..(1u64 << links) {
            let received = info.received_sources(|l| mask & (1 << l) != 0);
            let counts = rows
                .entry(received[1..].to_vec())
                .or_insert_with(|| vec![0; links + 1]);
            counts[mask.count_ones() as usize] += 1;
        }
        let mut rows: Vec<_> = rows.into_iter().collect();
        rows.sort();
        Ok(DeliveryTable {
            agent_count: info.agent_count(),
            link_count: links,
            binary_signals: info.is_tree(),
            rows,
        })
    }

    pub fn link_count(&self) -> usize {
        self.link_count
    }

    /// Number of distinct signal profiles in state `g`.
    pub fn profile_count(&self) -> usize {
        self.rows.len()
    }

    pub fn evaluate<S: Scalar>(&self, params: &ModelParams<S>) -> OutcomeSpace<S> {
        let q = params.delivery();
        let up: Vec<S> = (0..=self.link_count).map(|a| q.powi(a)).collect();
        let down: Vec<S> = (0..=self.link_count)
            .map(|b| params.epsilon.powi(b))
            .collect();
        let good = self.rows.iter().map(|(signals, counts)| {
            let weight = counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .fold(S::zero(), |acc, (a, &c)| {
                    acc + S::from_ratio(c as i64, 1)
                        * up[a].clone()
                        * down[self.link_count - a].clone()
                });
            (
                WorldState {
                    theta: Theta::Good,
                    signals: signals.clone(),
                },
                params.rho.clone() * weight,
            )
        });
        let bad = std::iter::once((
            WorldState {
                theta: Theta::Bad,
                signals: vec![SourceSet::EMPTY; self.agent_count],
            },
            S::one() - params.rho.clone(),
        ));
        OutcomeSpace::from_pairs(self.agent_count, good.chain(bad), self.binary_signals)
    }
}

/// Exact distribution over world states for `info` at `params`.
pub fn enumerate_outcomes<S: Scalar>(
    info: &InformationStructure,
    params: &ModelParams<S>,
    caps: &Caps,
) -> Result<OutcomeSpace<S>, ProbabilityError> {
    Ok(DeliveryTable::new(info, caps)?.evaluate(params))
}
