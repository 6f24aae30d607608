//! p-belief operators over an outcome space.
//!
//! `B_i^p(E)` is the set of states where agent `i`, conditioning on her own
//! signal, assigns probability at least `p` to `E`. `B^p` intersects over
//! agents, and `C^p(E)` is the intersection of the iterates
//! `B^p(E), B^p(B^p(E)), ...` until they stop changing.

use std::collections::{HashMap, HashSet};

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::network::{
    enumerate_multi_tree_forests, enumerate_trees, orient, AgentId, NetworkError, SourceSet,
};
use crate::probability::{
    epsilon_bar, DeliveryTable, Event, ModelParams, OutcomeSpace, ProbabilityError,
};
use crate::scalar::{Exact, Scalar};
use crate::Caps;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BeliefError {
    #[error("belief iteration entered a cycle of length {period} after {iterations} steps")]
    NonStabilizing { iterations: usize, period: usize },
    #[error("p = {0} is outside [0, 1]")]
    BadThreshold(String),
    #[error(transparent)]
    Network(#[from] NetworkError),
    #[error(transparent)]
    Probability(#[from] ProbabilityError),
}

/// Shape of a common-belief set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CommonBeliefLabel {
    WholeSpace,
    /// Exactly the states where every agent is informed.
    Ystar,
    Empty,
    Other,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommonBelief<S> {
    pub event: Event,
    pub label: CommonBeliefLabel,
    pub probability: S,
    /// Applications of `B^p`, including the one that confirmed the fixed
    /// point.
    pub iterations: usize,
}

/// Signal partition of each agent with the mass of every cell.
pub struct BeliefEngine<'a, S> {
    space: &'a OutcomeSpace<S>,
    /// `class_of[i][state]` for agent `i + 1`.
    class_of: Vec<Vec<usize>>,
    class_mass: Vec<Vec<S>>,
    ystar: Event,
}

/// Per agent, per signal class: `P[E | class]`.
type Conditionals<S> = Vec<Vec<S>>;

impl<'a, S: Scalar> BeliefEngine<'a, S> {
    pub fn new(space: &'a OutcomeSpace<S>) -> Self {
        let mut class_of = Vec::with_capacity(space.agent_count());
        let mut class_mass = Vec::with_capacity(space.agent_count());
        for agent in space.agents() {
            let mut ids: HashMap<SourceSet, usize> = HashMap::new();
            let mut masses: Vec<S> = Vec::new();
            let mut of = Vec::with_capacity(space.len());
            for (state, p) in space.states().iter().zip(space.probs()) {
                let next = ids.len();
                let c = *ids.entry(state.signal(agent)).or_insert(next);
                if c == masses.len() {
                    masses.push(S::zero());
                }
                masses[c] = masses[c].clone() + p.clone();
                of.push(c);
            }
            class_of.push(of);
            class_mass.push(masses);
        }
        BeliefEngine {
            space,
            class_of,
            class_mass,
            ystar: space.all_informed(),
        }
    }

    pub fn space(&self) -> &OutcomeSpace<S> {
        self.space
    }

    fn conditionals(&self, event: &Event) -> Conditionals<S> {
        let probs = self.space.probs();
        (0..self.space.agent_count())
            .map(|i| {
                let mut hit = vec![S::zero(); self.class_mass[i].len()];
                for s in event.iter() {
                    let c = self.class_of[i][s];
                    hit[c] = hit[c].clone() + probs[s].clone();
                }
                hit.into_iter()
                    .zip(&self.class_mass[i])
                    .map(|(h, m)| h / m.clone())
                    .collect()
            })
            .collect()
    }

    fn believers(&self, cond: &Conditionals<S>, agent: usize, p: &S) -> Event {
        let passes: Vec<bool> = cond[agent].iter().map(|q| p.le_tol(q)).collect();
        Event::from_fn(self.space.len(), |s| passes[self.class_of[agent][s]])
    }

    fn mutual_from(&self, cond: &Conditionals<S>, p: &S) -> Event {
        let passes: Vec<Vec<bool>> = cond
            .iter()
            .map(|per| per.iter().map(|q| p.le_tol(q)).collect())
            .collect();
        Event::from_fn(self.space.len(), |s| {
            (0..passes.len()).all(|i| passes[i][self.class_of[i][s]])
        })
    }

    /// `B_i^p(E)`.
    pub fn p_belief(&self, agent: AgentId, event: &Event, p: &S) -> Event {
        let cond = self.conditionals(event);
        self.believers(&cond, agent.0 - 1, p)
    }

    /// `B^p(E)`.
    pub fn mutual_p_belief(&self, event: &Event, p: &S) -> Event {
        self.mutual_from(&self.conditionals(event), p)
    }

    /// `C^p(E)`.
    pub fn common_p_belief(&self, event: &Event, p: &S) -> Result<CommonBelief<S>, BeliefError> {
        let mut memo = HashMap::new();
        self.common_with_memo(event, p, &mut memo)
    }

    /// `C^p(E)` for several thresholds, sharing the conditional
    /// probabilities of every event met along the way.
    pub fn common_p_belief_grid(
        &self,
        event: &Event,
        grid: &[S],
    ) -> Result<Vec<CommonBelief<S>>, BeliefError> {
        let mut memo = HashMap::new();
        grid.iter()
            .map(|p| self.common_with_memo(event, p, &mut memo))
            .collect()
    }

    fn common_with_memo(
        &self,
        event: &Event,
        p: &S,
        memo: &mut HashMap<Event, Conditionals<S>>,
    ) -> Result<CommonBelief<S>, BeliefError> {
        if *p < S::zero() || *p > S::one() {
            return Err(BeliefError::BadThreshold(p.to_wire()));
        }
        let mut iterates: Vec<Event> = Vec::new();
        let mut seen: HashSet<Event> = HashSet::new();
        let mut current = event.clone();
        loop {
            let cond = memo
                .entry(current.clone())
                .or_insert_with(|| self.conditionals(&current));
            let next = self.mutual_from(cond, p);
            if iterates.last() == Some(&next) {
                break;
            }
            if seen.contains(&next) {
                let first = iterates.iter().position(|e| *e == next).unwrap_or(0);
                return Err(BeliefError::NonStabilizing {
                    iterations: iterates.len() + 1,
                    period: iterates.len() - first,
                });
            }
            seen.insert(next.clone());
            iterates.push(next.clone());
            current = next;
        }
        let iterations = iterates.len() + 1;
        let result = iterates
            .iter()
            .fold(self.space.whole(), |acc, e| acc.intersection(e));
        Ok(CommonBelief {
            label: self.label(&result),
            probability: self.space.probability(&result),
            event: result,
            iterations,
        })
    }

    pub fn label(&self, event: &Event) -> CommonBeliefLabel {
        if event.is_full() {
            CommonBeliefLabel::WholeSpace
        } else if event.is_empty() {
            CommonBeliefLabel::Empty
        } else if *event == self.ystar {
            CommonBeliefLabel::Ystar
        } else {
            CommonBeliefLabel::Other
        }
    }
}

/// One interval of `p` with a fixed common-belief set for `G`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "S: Scalar"))]
pub struct BeliefRegion<S> {
    pub label: CommonBeliefLabel,
    /// Exclusive lower end, except for the first region which starts at 0
    /// inclusive.
    #[serde(with = "crate::scalar::wire")]
    pub lo: S,
    /// Inclusive upper end.
    #[serde(with = "crate::scalar::wire")]
    pub hi: S,
    /// `P[C^p(G)]`.
    #[serde(with = "crate::scalar::wire")]
    pub probability: S,
    /// `P[C^p(G) | G]`.
    #[serde(with = "crate::scalar::wire")]
    pub probability_given_g: S,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "S: Scalar"))]
pub struct CommonBeliefClassification<S> {
    pub epsilon_bar: f64,
    /// `ε < ε̄`, decided exactly as `P[G|N_1] < P[Y*|Y_1]`.
    pub small_loss: bool,
    /// `P[G|N_1]`.
    #[serde(with = "crate::scalar::wire")]
    pub uninformed_seed_belief: S,
    /// `P[Y*|Y_1]`.
    #[serde(with = "crate::scalar::wire")]
    pub informed_seed_belief: S,
    #[serde(with = "crate::scalar::wire::vec")]
    pub breakpoints: Vec<S>,
    pub regions: Vec<BeliefRegion<S>>,
}

impl<S: Scalar> CommonBeliefClassification<S> {
    /// Region containing `p`.
    pub fn region_at(&self, p: &S) -> &BeliefRegion<S> {
        self.regions
            .iter()
            .find(|r| *p <= r.hi)
            .unwrap_or_else(|| self.regions.last().expect("at least one region"))
    }
}

/// Closed-form shape of `C^p(G)` for any seeded forest with
/// `agent_count` agents.
pub fn classify_common_belief_g<S: Scalar>(
    params: &ModelParams<S>,
    agent_count: usize,
) -> CommonBeliefClassification<S> {
    let rho = params.rho.clone();
    let eps = params.epsilon.clone();
    let q = params.delivery();
    let b1 = rho.clone() * eps / (S::one() - rho.clone() * q.clone());
    let b2 = q.powi(agent_count.saturating_sub(1));
    let informed_seed_belief = b2.clone();
    let ystar_given_g = q.powi(agent_count);
    let whole = |lo: S, hi: S| BeliefRegion {
        label: CommonBeliefLabel::WholeSpace,
        lo,
        hi,
        probability: S::one(),
        probability_given_g: S::one(),
    };
    let empty = |lo: S| BeliefRegion {
        label: CommonBeliefLabel::Empty,
        lo,
        hi: S::one(),
        probability: S::zero(),
        probability_given_g: S::zero(),
    };
    let small_loss = b1 < b2;
    let (breakpoints, regions) = if small_loss {
        (
            vec![b1.clone(), b2.clone()],
            vec![
                whole(S::zero(), b1.clone()),
                BeliefRegion {
                    label: CommonBeliefLabel::Ystar,
                    lo: b1,
                    hi: b2.clone(),
                    probability: rho * ystar_given_g.clone(),
                    probability_given_g: ystar_given_g,
                },
                empty(b2),
            ],
        )
    } else {
        (
            vec![b1.clone()],
            vec![whole(S::zero(), b1.clone()), empty(b1.clone())],
        )
    };
    CommonBeliefClassification {
        epsilon_bar: epsilon_bar(agent_count, params.rho.to_f64()).value,
        small_loss,
        uninformed_seed_belief: breakpoints[0].clone(),
        informed_seed_belief,
        breakpoints,
        regions,
    }
}

/// `0, 1/20, ..., 1` plus every breakpoint and the points `1e-9` on either
/// side of it, sorted and without duplicates.
pub fn p_grid_with_breakpoints(breakpoints: &[Exact]) -> Vec<Exact> {
    let offset = Exact::from_ratio(1, 1_000_000_000);
    let mut grid: Vec<Exact> = (0..=20).map(|i| Exact::from_ratio(i, 20)).collect();
    for b in breakpoints {
        for x in [b.clone() - offset.clone(), b.clone(), b.clone() + offset.clone()] {
            if x >= Exact::from_ratio(0, 1) && x <= Exact::from_ratio(1, 1) {
                grid.push(x);
            }
        }
    }
    grid.sort();
    grid.dedup();
    grid
}

/// How a structure was generated for the irrelevance sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureKind {
    Tree,
    MultiTreeForest,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "S: Scalar"))]
pub struct GridOutcome<S> {
    #[serde(with = "crate::scalar::wire")]
    pub p: S,
    pub label: CommonBeliefLabel,
    #[serde(with = "crate::scalar::wire")]
    pub probability: S,
    pub predicted_label: CommonBeliefLabel,
    #[serde(with = "crate::scalar::wire")]
    pub predicted_probability: S,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IrrelevanceMismatch {
    pub structure: String,
    pub p: String,
    pub label: CommonBeliefLabel,
    pub probability: String,
    pub expected_label: CommonBeliefLabel,
    pub expected_probability: String,
}

/// Result of comparing `C^p(G)` across every structure for one `(ρ, ε)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "S: Scalar"))]
pub struct IrrelevanceReport<S> {
    pub agent_count: usize,
    #[serde(with = "crate::scalar::wire")]
    pub rho: S,
    #[serde(with = "crate::scalar::wire")]
    pub epsilon: S,
    pub trees: usize,
    pub forests: usize,
    /// Outcomes on the reference structure (the first tree).
    pub grid: Vec<GridOutcome<S>>,
    /// Structures whose outcome differs from the reference at some `p`.
    pub mismatches: Vec<IrrelevanceMismatch>,
    /// Grid points where the reference differs from the closed-form
    /// classification.
    pub classification_mismatches: usize,
    /// Largest number of `B^p` applications needed on any structure.
    pub max_iterations: usize,
    pub non_stabilizing: usize,
}

impl<S> IrrelevanceReport<S> {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
            && self.classification_mismatches == 0
            && self.non_stabilizing == 0
    }

    /// Whether the closed-form middle region shows up on the grid.
    pub fn has_ystar_region(&self) -> bool {
        self.grid
            .iter()
            .any(|g| g.label == CommonBeliefLabel::Ystar)
    }
}

/// Structures used by the irrelevance sweep: every tree with every seed,
/// then up to `forest_samples` multi-tree seeded forests drawn without
/// replacement with a seeded RNG.
pub fn irrelevance_structures(
    agent_count: usize,
    forest_samples: usize,
    rng_seed: u64,
    caps: &Caps,
) -> Result<Vec<(StructureKind, DeliveryTable, String)>, BeliefError> {
    let mut out = Vec::new();
    for (forest, seeding) in enumerate_trees(agent_count, caps)? {
        let info = orient(&forest, &seeding)?;
        let name = format!("tree {:?} seed {:?}", forest.edges(), seeding.seeds);
        out.push((StructureKind::Tree, DeliveryTable::new(&info, caps)?, name));
    }
    let forests: Vec<_> = enumerate_multi_tree_forests(agent_count, caps)?.collect();
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut picked = sample(&mut rng, forests.len(), forest_samples.min(forests.len())).into_vec();
    picked.sort_unstable();
    for i in picked {
        let (forest, seeding) = &forests[i];
        let info = orient(forest, seeding)?;
        let name = format!("forest {:?} seeds {:?}", forest.edges(), seeding.seeds);
        out.push((StructureKind::MultiTreeForest, DeliveryTable::new(&info, caps)?, name));
    }
    Ok(out)
}

/// Evaluates `C^p(G)` on every structure at every grid point and checks
/// that label and probability never depend on the structure and match the
/// closed-form classification.
pub fn verify_irrelevance<S: Scalar>(
    structures: &[(StructureKind, DeliveryTable, String)],
    agent_count: usize,
    params: &ModelParams<S>,
    grid: &[S],
) -> IrrelevanceReport<S> {
    let classification = classify_common_belief_g(params, agent_count);
    let results: Vec<Result<Vec<CommonBelief<S>>, BeliefError>> = structures
        .par_iter()
        .map(|(_, table, _)| {
            let space = table.evaluate(params);
            let engine = BeliefEngine::new(&space);
            engine.common_p_belief_grid(&space.good(), grid)
        })
        .collect();

    let count = |kind| structures.iter().filter(|s| s.0 == kind).count();
    let mut report = IrrelevanceReport {
        agent_count,
        rho: params.rho.clone(),
        epsilon: params.epsilon.clone(),
        trees: count(StructureKind::Tree),
        forests: count(StructureKind::MultiTreeForest),
        grid: Vec::new(),
        mismatches: Vec::new(),
        classification_mismatches: 0,
        max_iterations: 0,
        non_stabilizing: 0,
    };
    let mut reference: Option<&Vec<CommonBelief<S>>> = None;
    for ((_, _, name), result) in structures.iter().zip(&results) {
        let Ok(beliefs) = result else {
            report.non_stabilizing += 1;
            continue;
        };
        for b in beliefs {
            report.max_iterations = report.max_iterations.max(b.iterations);
        }
        let Some(reference) = reference else {
            reference = Some(beliefs);
            continue;
        };
        for ((p, b), r) in grid.iter().zip(beliefs).zip(reference) {
            if b.label != r.label || !b.probability.approx_eq(&r.probability) {
                report.mismatches.push(IrrelevanceMismatch {
                    structure: name.clone(),
                    p: p.to_wire(),
                    label: b.label,
                    probability: b.probability.to_wire(),
                    expected_label: r.label,
                    expected_probability: r.probability.to_wire(),
                });
            }
        }
    }
    if let Some(reference) = reference {
        for (p, r) in grid.iter().zip(reference) {
            let region = classification.region_at(p);
            if region.label != r.label || !region.probability.approx_eq(&r.probability) {
                report.classification_mismatches += 1;
            }
            report.grid.push(GridOutcome {
                p: p.clone(),
                label: r.label,
                probability: r.probability.clone(),
                predicted_label: region.label,
                predicted_probability: region.probability.clone(),
            });
        }
    }
    report
}
