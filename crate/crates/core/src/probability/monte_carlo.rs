//! Sampling oracle for the enumerated spaces.
//!
//! Messages are propagated causally: a link is sampled only when its sender
//! actually forwards, which is a different route to the same distribution
//! as the static least-fixed-point enumeration.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{ModelParams, OutcomeSpace, ProbabilityError, Theta, WorldState};
use crate::network::{InformationStructure, SourceSet};

/// Independent random streams; fixed so results do not depend on the
/// number of worker threads.
const STREAMS: u64 = 64;

#[derive(Debug, Clone)]
pub struct EmpiricalOutcomes {
    pub trials: u64,
    pub agent_count: usize,
    pub states: Vec<WorldState>,
    pub counts: Vec<u64>,
}

impl EmpiricalOutcomes {
    /// Empirical frequencies as an outcome space.
    pub fn to_space(&self) -> OutcomeSpace<f64> {
        let n = self.trials as f64;
        OutcomeSpace::from_pairs(
            self.agent_count,
            self.states
                .iter()
                .zip(&self.counts)
                .map(|(s, &c)| (s.clone(), c as f64 / n)),
            false,
        )
    }

    pub fn count_of(&self, state: &WorldState) -> u64 {
        self.states
            .iter()
            .position(|s| s == state)
            .map(|i| self.counts[i])
            .unwrap_or(0)
    }
}

struct Propagator<'a> {
    info: &'a InformationStructure,
    out: Vec<Vec<usize>>,
}

impl<'a> Propagator<'a> {
    fn new(info: &'a InformationStructure) -> Self {
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); info.agent_count() + 1];
        for (l, link) in info.links().iter().enumerate() {
            out[link.from.0].push(l);
        }
        Propagator { info, out }
    }

    fn simulate<R: Rng>(&self, params: &ModelParams<f64>, rng: &mut R) -> WorldState {
        let n = self.info.agent_count();
        let mut sources = vec![SourceSet::EMPTY; n + 1];
        if rng.gen::<f64>() >= params.rho {
            return WorldState {
                theta: Theta::Bad,
                signals: sources[1..].to_vec(),
            };
        }
        let links = self.info.links();
        let mut fired = vec![false; links.len()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for &l in &self.out[u] {
                if fired[l] || !self.info.forwards(l, sources[u]) {
                    continue;
                }
                fired[l] = true;
                if rng.gen::<f64>() < params.epsilon {
                    continue;
                }
                let v = links[l].to.0;
                sources[v].insert(links[l].from);
                queue.push_back(v);
            }
        }
        WorldState {
            theta: Theta::Good,
            signals: sources[1..].to_vec(),
        }
    }
}

fn run_streams<F>(agent_count: usize, trials: u64, rng_seed: u64, sample: F) -> EmpiricalOutcomes
where
    F: Fn(&mut ChaCha8Rng) -> WorldState + Sync,
{
    let per_stream: Vec<u64> = (0..STREAMS)
        .map(|k| trials / STREAMS + u64::from(k < trials % STREAMS))
        .collect();
    let partials: Vec<HashMap<WorldState, u64>> = per_stream
        .par_iter()
        .enumerate()
        .map(|(k, &n)| {
            let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
            rng.set_stream(k as u64);
            let mut counts = HashMap::new();
            for _ in 0..n {
                *counts.entry(sample(&mut rng)).or_insert(0) += 1;
            }
            counts
        })
        .collect();
    let mut merged: BTreeMap<WorldState, u64> = BTreeMap::new();
    for partial in partials {
        for (state, c) in partial {
            *merged.entry(state).or_insert(0) += c;
        }
    }
    let (states, counts) = merged.into_iter().unzip();
    EmpiricalOutcomes {
        trials,
        agent_count,
        states,
        counts,
    }
}

/// Samples `trials` world states; deterministic for a given `rng_seed`.
pub fn monte_carlo(
    info: &InformationStructure,
    params: &ModelParams<f64>,
    trials: u64,
    rng_seed: u64,
) -> EmpiricalOutcomes {
    let propagator = Propagator::new(info);
    run_streams(info.agent_count(), trials.max(1), rng_seed, |rng| {
        propagator.simulate(params, rng)
    })
}

/// Samples a structure by weight, then a world state from it.
pub fn monte_carlo_mixture(
    components: &[(f64, InformationStructure)],
    params: &ModelParams<f64>,
    trials: u64,
    rng_seed: u64,
) -> Result<EmpiricalOutcomes, ProbabilityError> {
    let total: f64 = components.iter().map(|(w, _)| w).sum();
    if components.is_empty()
        || components.iter().any(|(w, _)| *w <= 0.0)
        || (total - 1.0).abs() > 1e-12
    {
        return Err(ProbabilityError::BadMixture);
    }
    let agent_count = components[0].1.agent_count();
    if components.iter().any(|(_, i)| i.agent_count() != agent_count) {
        return Err(ProbabilityError::AgentCountMismatch);
    }
    let propagators: Vec<(f64, Propagator)> = components
        .iter()
        .map(|(w, info)| (*w, Propagator::new(info)))
        .collect();
    Ok(run_streams(agent_count, trials.max(1), rng_seed, |rng| {
        let mut u = rng.gen::<f64>() * total;
        let mut chosen = &propagators[propagators.len() - 1].1;
        for (w, p) in &propagators {
            if u < *w {
                chosen = p;
                break;
            }
            u -= w;
        }
        chosen.simulate(params, rng)
    }))
}

#[derive(Debug, Clone, Serialize)]
pub struct StateAgreement {
    pub state: String,
    pub exact: f64,
    pub empirical: f64,
    pub std_error: f64,
    /// `|empirical - exact| / std_error`; infinite when a certain or
    /// impossible state is contradicted.
    pub z: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleAgreement {
    pub trials: u64,
    pub rows: Vec<StateAgreement>,
    pub max_z: f64,
    /// Sampled states that the exact space says are impossible.
    pub unexpected_states: usize,
}

impl OracleAgreement {
    pub fn within(&self, standard_errors: f64) -> bool {
        self.unexpected_states == 0 && self.max_z <= standard_errors
    }
}

/// Compares empirical frequencies with exact probabilities state by state.
pub fn oracle_agreement(exact: &OutcomeSpace<f64>, sampled: &EmpiricalOutcomes) -> OracleAgreement {
    let n = sampled.trials as f64;
    let rows: Vec<StateAgreement> = exact
        .states()
        .iter()
        .zip(exact.probs())
        .map(|(state, &p)| {
            let freq = sampled.count_of(state) as f64 / n;
            let std_error = (p * (1.0 - p) / n).sqrt();
            let diff = (freq - p).abs();
            let z = if std_error > 0.0 {
                diff / std_error
            } else if diff == 0.0 {
                0.0
            } else {
                f64::INFINITY
            };
            StateAgreement {
                state: state.to_string(),
                exact: p,
                empirical: freq,
                std_error,
                z,
            }
        })
        .collect();
    let unexpected_states = sampled
        .states
        .iter()
        .filter(|s| exact.index_of(s).is_none())
        .count();
    let max_z = rows.iter().map(|r| r.z).fold(0.0, f64::max);
    OracleAgreement {
        trials: sampled.trials,
        rows,
        max_z,
        unexpected_states,
    }
}
