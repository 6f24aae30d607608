//! Orderings of information trees.
//!
//! - Diffusion: `T` diffuses faster than `T'` if some renaming `π` of the
//!   agents gives `d_T(i) <= d_T'(π(i))` for every `i`.
//! - First order: each agent's signal, as an experiment about `G` versus
//!   its complement, is Blackwell superior to her counterpart's.
//! - Second order: the same for experiments about `Y*` versus its
//!   complement.
//!
//! Each agent's experiment is binary, so it is summarized by the
//! distribution of her posterior. Blackwell superiority between two such
//! experiments with a common prior is the convex order on posteriors,
//! checked through `E[(X - t)^+]` at every kink `t`. The existential
//! renaming is decided by sorting both sides and matching in order.

use serde::Serialize;
use thiserror::Error;

use crate::network::{AgentId, InformationStructure, NetworkError};
use crate::probability::{Event, OutcomeSpace, ProbabilityError};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InformativenessError {
    #[error("structures have {0} and {1} agents")]
    SizeMismatch(usize, usize),
    #[error("second-order experiments need a common prior on Y*, got {0} and {1}")]
    PriorMismatch(String, String),
    #[error(transparent)]
    Network(#[from] NetworkError),
    #[error(transparent)]
    Probability(#[from] ProbabilityError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Relation {
    FasterEq,
    SlowerEq,
    Equal,
    Incomparable,
}

impl Relation {
    /// Relation seen from the other side.
    pub fn reversed(self) -> Relation {
        match self {
            Relation::FasterEq => Relation::SlowerEq,
            Relation::SlowerEq => Relation::FasterEq,
            other => other,
        }
    }

    fn from_flags(forward: bool, backward: bool) -> Relation {
        match (forward, backward) {
            (true, true) => Relation::Equal,
            (true, false) => Relation::FasterEq,
            (false, true) => Relation::SlowerEq,
            (false, false) => Relation::Incomparable,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderingResult {
    pub relation: Relation,
    /// `(i, π(i))` pairs. For `FasterEq` and `Equal`, `i` is an agent of
    /// the first structure; for `SlowerEq`, of the second.
    pub witness: Option<Vec<(AgentId, AgentId)>>,
}

/// Depth of every agent, kept with the agent's name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthVector {
    pub depths: Vec<(AgentId, usize)>,
}

impl DepthVector {
    pub fn of(info: &InformationStructure) -> Result<Self, InformativenessError> {
        Ok(DepthVector {
            depths: info
                .agents()
                .map(|a| Ok((a, info.depth(a)?)))
                .collect::<Result<_, NetworkError>>()?,
        })
    }

    pub fn len(&self) -> usize {
        self.depths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.depths.is_empty()
    }

    /// Depths in ascending order.
    pub fn sorted(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.depths.iter().map(|d| d.1).collect();
        v.sort_unstable();
        v
    }

    fn sorted_agents(&self) -> Vec<AgentId> {
        let mut v = self.depths.clone();
        v.sort_by_key(|&(a, d)| (d, a));
        v.into_iter().map(|(a, _)| a).collect()
    }
}

/// Sorted-vector dominance with the matching as witness.
pub fn diffusion_compare_depths(
    a: &DepthVector,
    b: &DepthVector,
) -> Result<OrderingResult, InformativenessError> {
    if a.len() != b.len() {
        return Err(InformativenessError::SizeMismatch(a.len(), b.len()));
    }
    let (sa, sb) = (a.sorted(), b.sorted());
    let forward = sa.iter().zip(&sb).all(|(x, y)| x <= y);
    let backward = sa.iter().zip(&sb).all(|(x, y)| y <= x);
    let relation = Relation::from_flags(forward, backward);
    let (aa, ba) = (a.sorted_agents(), b.sorted_agents());
    let witness = match relation {
        Relation::FasterEq | Relation::Equal => Some(aa.into_iter().zip(ba).collect()),
        Relation::SlowerEq => Some(ba.into_iter().zip(aa).collect()),
        Relation::Incomparable => None,
    };
    Ok(OrderingResult { relation, witness })
}

pub fn diffusion_compare(
    a: &InformationStructure,
    b: &InformationStructure,
) -> Result<OrderingResult, InformativenessError> {
    diffusion_compare_depths(&DepthVector::of(a)?, &DepthVector::of(b)?)
}

/// Posterior distribution of a binary experiment: `(weight, posterior)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Experiment<S> {
    pub outcomes: Vec<(S, S)>,
}

impl<S: Scalar> Experiment<S> {
    pub fn prior(&self) -> S {
        self.outcomes
            .iter()
            .fold(S::zero(), |acc, (w, x)| acc + w.clone() * x.clone())
    }

    /// `E[(X - t)^+]`.
    fn call(&self, t: &S) -> S {
        self.outcomes.iter().fold(S::zero(), |acc, (w, x)| {
            if x > t {
                acc + w.clone() * (x.clone() - t.clone())
            } else {
                acc
            }
        })
    }

    /// Blackwell superiority for experiments with the same prior: the
    /// posterior distribution is a mean-preserving spread of `other`'s.
    pub fn superior_to(&self, other: &Experiment<S>) -> bool {
        if !self.prior().approx_eq(&other.prior()) {
            return false;
        }
        self.outcomes
            .iter()
            .chain(&other.outcomes)
            .all(|(_, t)| other.call(t).le_tol(&self.call(t)))
    }
}

/// One experiment per agent; index `i - 1` for agent `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct AgentExperiments<S> {
    pub experiments: Vec<Experiment<S>>,
    /// Agents from most to least informative.
    rank: Vec<AgentId>,
}

impl<S: Scalar> AgentExperiments<S> {
    fn build(space: &OutcomeSpace<S>, target: &Event) -> Result<Self, InformativenessError> {
        let mut experiments = Vec::with_capacity(space.agent_count());
        for a in space.agents() {
            let mut outcomes = Vec::new();
            for signal in [space.informed(a), space.uninformed(a)] {
                let w = space.probability(&signal);
                if !w.is_zero() {
                    outcomes.push((w, space.conditional(target, &signal)?));
                }
            }
            experiments.push(Experiment { outcomes });
        }
        // Call value at the prior grows with spread; it is a total-preorder
        // key for these two-point posterior distributions.
        let prior = experiments.first().map(|e| e.prior()).unwrap_or_else(S::zero);
        let mut keyed: Vec<(S, AgentId)> = experiments
            .iter()
            .enumerate()
            .map(|(i, e)| (e.call(&prior), AgentId(i + 1)))
            .collect();
        keyed.sort_by(|x, y| {
            y.0.partial_cmp(&x.0)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(x.1.cmp(&y.1))
        });
        Ok(AgentExperiments {
            experiments,
            rank: keyed.into_iter().map(|k| k.1).collect(),
        })
    }

    /// Experiments about `G`.
    pub fn first_order(space: &OutcomeSpace<S>) -> Result<Self, InformativenessError> {
        Self::build(space, &space.good())
    }

    /// Experiments about `Y*`.
    pub fn second_order(space: &OutcomeSpace<S>) -> Result<Self, InformativenessError> {
        Self::build(space, &space.all_informed())
    }

    pub fn len(&self) -> usize {
        self.experiments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.experiments.is_empty()
    }

    pub fn get(&self, agent: AgentId) -> &Experiment<S> {
        &self.experiments[agent.0 - 1]
    }

    fn matched_superior(&self, other: &AgentExperiments<S>) -> Option<Vec<(AgentId, AgentId)>> {
        let pairs: Vec<(AgentId, AgentId)> =
            self.rank.iter().copied().zip(other.rank.iter().copied()).collect();
        pairs
            .iter()
            .all(|&(i, j)| self.get(i).superior_to(other.get(j)))
            .then_some(pairs)
    }
}

/// Exists `π` with agent `i`'s experiment in `a` superior to `π(i)`'s in `b`.
pub fn compare_experiments<S: Scalar>(
    a: &AgentExperiments<S>,
    b: &AgentExperiments<S>,
) -> Result<OrderingResult, InformativenessError> {
    if a.len() != b.len() {
        return Err(InformativenessError::SizeMismatch(a.len(), b.len()));
    }
    let forward = a.matched_superior(b);
    let backward = b.matched_superior(a);
    let relation = Relation::from_flags(forward.is_some(), backward.is_some());
    let witness = match relation {
        Relation::FasterEq | Relation::Equal => forward,
        Relation::SlowerEq => backward,
        Relation::Incomparable => None,
    };
    Ok(OrderingResult { relation, witness })
}

pub fn first_order_compare<S: Scalar>(
    a: &OutcomeSpace<S>,
    b: &OutcomeSpace<S>,
) -> Result<OrderingResult, InformativenessError> {
    compare_experiments(
        &AgentExperiments::first_order(a)?,
        &AgentExperiments::first_order(b)?,
    )
}

/// Requires the same `P[Y*]` on both sides.
pub fn second_order_compare<S: Scalar>(
    a: &OutcomeSpace<S>,
    b: &OutcomeSpace<S>,
) -> Result<OrderingResult, InformativenessError> {
    let pa = a.probability(&a.all_informed());
    let pb = b.probability(&b.all_informed());
    if !pa.approx_eq(&pb) {
        return Err(InformativenessError::PriorMismatch(pa.to_wire(), pb.to_wire()));
    }
    compare_experiments(
        &AgentExperiments::second_order(a)?,
        &AgentExperiments::second_order(b)?,
    )
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InformativenessReport {
    pub diffusion: OrderingResult,
    pub first_order: OrderingResult,
    pub second_order: OrderingResult,
    pub depths_a: Vec<usize>,
    pub depths_b: Vec<usize>,
}

/// All three orderings between two trees with their outcome spaces.
pub fn compare_trees<S: Scalar>(
    a: (&InformationStructure, &OutcomeSpace<S>),
    b: (&InformationStructure, &OutcomeSpace<S>),
) -> Result<InformativenessReport, InformativenessError> {
    let (da, db) = (DepthVector::of(a.0)?, DepthVector::of(b.0)?);
    Ok(InformativenessReport {
        diffusion: diffusion_compare_depths(&da, &db)?,
        first_order: first_order_compare(a.1, b.1)?,
        second_order: second_order_compare(a.1, b.1)?,
        depths_a: da.sorted(),
        depths_b: db.sorted(),
    })
}
