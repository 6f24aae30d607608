//! Binary-action coordination games on an outcome space.
//!
//! Every game here has the same shape: acting pays off only if the state is
//! `g` and everybody acts. The best-response gain of acting for agent `i`
//! at signal `s` is `scale · P[G ∩ all others act | s] - cost`, so each game
//! is characterized by the threshold `cost / scale`:
//!
//! - adoption: gross payoff 1, cost `c`, threshold `c`;
//! - protest: reward `R`, private cost `c`, damage `d` per protester,
//!   threshold `(c + d) / R`;
//! - potential games of the form `v^g = w` if all act, `-(#acting)γ`
//!   otherwise, `v^b = -(#acting)γ`, threshold `γ / (w + γI)`.
//!
//! Equilibria are certified rather than searched: the candidate profile for
//! the applicable case is checked signal by signal for profitable
//! deviations, and iterated dominance rules out anything that adopts more.

use std::collections::{BTreeMap, VecDeque};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::network::{AgentId, InformationStructure, SourceSet};
use crate::probability::{OutcomeSpace, ProbabilityError, Theta, WorldState};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("invalid game parameters: {0}")]
    BadParams(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("no agent is seeded directly by the planner")]
    NoSeed,
    #[error("profile has {profile} agents but the space has {space}")]
    ProfileMismatch { profile: usize, space: usize },
    #[error(transparent)]
    Probability(#[from] ProbabilityError),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "S: Scalar"))]
pub struct AdoptionParams<S> {
    #[serde(with = "crate::scalar::wire")]
    pub c: S,
}

impl<S: Scalar> AdoptionParams<S> {
    pub fn new(c: S) -> Result<Self, GameError> {
        if c <= S::zero() || c >= S::one() {
            return Err(GameError::BadParams(format!(
                "cost must lie in (0, 1), got {}",
                c.to_wire()
            )));
        }
        Ok(AdoptionParams { c })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "S: Scalar"))]
pub struct ProtestParams<S> {
    #[serde(with = "crate::scalar::wire")]
    pub reward: S,
    #[serde(with = "crate::scalar::wire")]
    pub cost: S,
    #[serde(with = "crate::scalar::wire")]
    pub damage: S,
}

impl<S: Scalar> ProtestParams<S> {
    /// Requires `c > 0`, `d >= 0` and `R > c + d`.
    pub fn new(reward: S, cost: S, damage: S) -> Result<Self, GameError> {
        if cost <= S::zero() || damage < S::zero() {
            return Err(GameError::BadParams(
                "protest cost must be positive and damage non-negative".into(),
            ));
        }
        if reward <= cost.clone() + damage.clone() {
            return Err(GameError::BadParams(format!(
                "reward {} must exceed cost + damage {}",
                reward.to_wire(),
                (cost + damage).to_wire()
            )));
        }
        Ok(ProtestParams {
            reward,
            cost,
            damage,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "S: Scalar"))]
pub struct PotentialParams<S> {
    #[serde(with = "crate::scalar::wire")]
    pub w: S,
    #[serde(with = "crate::scalar::wire")]
    pub gamma: S,
}

impl<S: Scalar> PotentialParams<S> {
    /// Requires `γ > 0` and `w > -(I-1)γ`.
    pub fn new(w: S, gamma: S, agent_count: usize) -> Result<Self, GameError> {
        if gamma <= S::zero() {
            return Err(GameError::BadParams("gamma must be positive".into()));
        }
        let floor = -(S::from_usize(agent_count.saturating_sub(1)) * gamma.clone());
        if w <= floor {
            return Err(GameError::BadParams(format!(
                "w = {} must exceed -(I-1)γ = {}",
                w.to_wire(),
                floor.to_wire()
            )));
        }
        Ok(PotentialParams { w, gamma })
    }
}

/// `c' = (c + d) / R`.
pub fn reduce_protest<S: Scalar>(params: &ProtestParams<S>) -> Result<AdoptionParams<S>, GameError> {
    let p = ProtestParams::new(
        params.reward.clone(),
        params.cost.clone(),
        params.damage.clone(),
    )?;
    AdoptionParams::new((p.cost + p.damage) / p.reward)
}

/// `p = γ / (w + γI)`.
pub fn reduce_potential<S: Scalar>(
    params: &PotentialParams<S>,
    agent_count: usize,
) -> Result<S, GameError> {
    let p = PotentialParams::new(params.w.clone(), params.gamma.clone(), agent_count)?;
    Ok(p.gamma.clone() / (p.w + p.gamma * S::from_usize(agent_count)))
}

/// The adoption game as a member of the potential class: `γ = c`,
/// `w = 1 - Iγ`.
pub fn adoption_as_potential<S: Scalar>(
    params: &AdoptionParams<S>,
    agent_count: usize,
) -> Result<PotentialParams<S>, GameError> {
    let gamma = params.c.clone();
    let w = S::one() - S::from_usize(agent_count) * gamma.clone();
    PotentialParams::new(w, gamma, agent_count)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "game", rename_all = "snake_case", bound(serialize = "S: Scalar"))]
pub enum BinaryGame<S> {
    Adoption(AdoptionParams<S>),
    Protest(ProtestParams<S>),
    Potential(PotentialParams<S>),
}

impl<S: Scalar> BinaryGame<S> {
    /// Payoff to one player given the state, her own action and how many
    /// of the `others` other players act. Potential games pay their
    /// potential, which has the same best responses.
    pub fn payoff(&self, theta: Theta, acts: bool, others_acting: usize, others: usize) -> S {
        let total = others_acting + usize::from(acts);
        let everyone = total == others + 1;
        let good = theta == Theta::Good;
        match self {
            BinaryGame::Adoption(p) => {
                let gross = if acts && good && everyone {
                    S::one()
                } else {
                    S::zero()
                };
                if acts {
                    gross - p.c.clone()
                } else {
                    gross
                }
            }
            BinaryGame::Protest(p) => {
                let damage = p.damage.clone() * S::from_usize(total);
                let mut u = -damage;
                if acts {
                    u = u - p.cost.clone();
                    if good && everyone {
                        u = u + p.reward.clone();
                    }
                }
                u
            }
            BinaryGame::Potential(p) => {
                if good && everyone {
                    p.w.clone()
                } else {
                    -(p.gamma.clone() * S::from_usize(total))
                }
            }
        }
    }

    /// Belief in `G ∩ {all others act}` at which acting becomes a best
    /// response.
    pub fn threshold(&self, agent_count: usize) -> Result<S, GameError> {
        match self {
            BinaryGame::Adoption(p) => Ok(p.c.clone()),
            BinaryGame::Protest(p) => Ok(reduce_protest(p)?.c),
            BinaryGame::Potential(p) => reduce_potential(p, agent_count),
        }
    }
}

/// Per agent, per signal: probability of acting. Signals not listed never
/// act.
#[derive(Debug, Clone, PartialEq)]
pub struct StrategyProfile<S> {
    agents: Vec<BTreeMap<SourceSet, S>>,
}

impl<S: Scalar> StrategyProfile<S> {
    pub fn from_fn<F: Fn(AgentId, SourceSet) -> S>(space: &OutcomeSpace<S>, f: F) -> Self {
        StrategyProfile {
            agents: space
                .agents()
                .map(|a| {
                    space
                        .signals_of(a)
                        .into_iter()
                        .map(|s| (s, f(a, s)))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn always(space: &OutcomeSpace<S>) -> Self {
        Self::from_fn(space, |_, _| S::one())
    }

    pub fn never(space: &OutcomeSpace<S>) -> Self {
        Self::from_fn(space, |_, _| S::zero())
    }

    pub fn adopt_iff_informed(space: &OutcomeSpace<S>) -> Self {
        Self::from_fn(space, |_, s| {
            if s.is_informed() {
                S::one()
            } else {
                S::zero()
            }
        })
    }

    /// Copy with one entry replaced.
    pub fn with(mut self, agent: AgentId, signal: SourceSet, prob: S) -> Self {
        self.agents[agent.0 - 1].insert(signal, prob);
        self
    }

    pub fn agent_count(&self) -> usize {
        self.agents.len()
    }

    pub fn get(&self, agent: AgentId, signal: SourceSet) -> S {
        self.agents[agent.0 - 1]
            .get(&signal)
            .cloned()
            .unwrap_or_else(S::zero)
    }

    /// `(agent, signal, probability)` in agent then signal order.
    pub fn entries(&self) -> impl Iterator<Item = (AgentId, SourceSet, &S)> {
        self.agents.iter().enumerate().flat_map(|(i, m)| {
            m.iter().map(move |(s, p)| (AgentId(i + 1), *s, p))
        })
    }

    fn check(&self, space: &OutcomeSpace<S>) -> Result<(), GameError> {
        if self.agents.len() != space.agent_count() {
            return Err(GameError::ProfileMismatch {
                profile: self.agents.len(),
                space: space.agent_count(),
            });
        }
        Ok(())
    }
}

impl<S: Scalar> Serialize for StrategyProfile<S> {
    fn serialize<Z: Serializer>(&self, z: Z) -> Result<Z::Ok, Z::Error> {
        #[derive(Serialize)]
        struct Entry {
            agent: usize,
            signal: String,
            adopt: String,
        }
        let mut seq = z.serialize_seq(None)?;
        for (a, s, p) in self.entries() {
            seq.serialize_element(&Entry {
                agent: a.0,
                signal: s.to_string(),
                adopt: p.to_wire(),
            })?;
        }
        seq.end()
    }
}

/// Distribution of the number of acting agents other than `agent`.
fn others_acting<S: Scalar>(profile: &StrategyProfile<S>, state: &WorldState, agent: AgentId) -> Vec<S> {
    let mut dist = vec![S::one()];
    for j in 1..=profile.agent_count() {
        if j == agent.0 {
            continue;
        }
        let a = profile.get(AgentId(j), state.signal(AgentId(j)));
        let stay = S::one() - a.clone();
        let mut next = vec![S::zero(); dist.len() + 1];
        for (k, p) in dist.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            next[k] = next[k].clone() + p.clone() * stay.clone();
            next[k + 1] = next[k + 1].clone() + p.clone() * a.clone();
        }
        dist = next;
    }
    dist
}

fn expected_over<S: Scalar>(
    game: &BinaryGame<S>,
    dist: &[S],
    theta: Theta,
    acts: bool,
) -> S {
    let others = dist.len() - 1;
    dist.iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .fold(S::zero(), |acc, (k, p)| {
            acc + p.clone() * game.payoff(theta, acts, k, others)
        })
}

/// Ex-ante expected payoff of `agent`.
pub fn expected_payoff<S: Scalar>(
    space: &OutcomeSpace<S>,
    game: &BinaryGame<S>,
    profile: &StrategyProfile<S>,
    agent: AgentId,
) -> Result<S, GameError> {
    profile.check(space)?;
    let mut total = S::zero();
    for (state, p) in space.states().iter().zip(space.probs()) {
        let dist = others_acting(profile, state, agent);
        let a = profile.get(agent, state.signal(agent));
        let act = expected_over(game, &dist, state.theta, true);
        let idle = expected_over(game, &dist, state.theta, false);
        total = total + p.clone() * (a.clone() * act + (S::one() - a) * idle);
    }
    Ok(total)
}

pub fn expected_payoffs<S: Scalar>(
    space: &OutcomeSpace<S>,
    game: &BinaryGame<S>,
    profile: &StrategyProfile<S>,
) -> Result<Vec<S>, GameError> {
    space
        .agents()
        .map(|a| expected_payoff(space, game, profile, a))
        .collect()
}

/// Conditional gain of acting over not acting at `signal`.
pub fn deviation_gain<S: Scalar>(
    space: &OutcomeSpace<S>,
    game: &BinaryGame<S>,
    profile: &StrategyProfile<S>,
    agent: AgentId,
    signal: SourceSet,
) -> Result<S, GameError> {
    profile.check(space)?;
    let mut mass = S::zero();
    let mut gain = S::zero();
    for (state, p) in space.states().iter().zip(space.probs()) {
        if state.signal(agent) != signal {
            continue;
        }
        let dist = others_acting(profile, state, agent);
        let d = expected_over(game, &dist, state.theta, true)
            - expected_over(game, &dist, state.theta, false);
        gain = gain + p.clone() * d;
        mass = mass + p.clone();
    }
    if mass.is_zero() {
        return Err(ProbabilityError::ConditionOnNull.into());
    }
    Ok(gain / mass)
}

/// A signal at which the profile's action is not a best response.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "S: Scalar"))]
pub struct Violation<S> {
    pub agent: AgentId,
    #[serde(serialize_with = "serialize_signal")]
    pub signal: SourceSet,
    #[serde(with = "crate::scalar::wire")]
    pub adopt: S,
    #[serde(with = "crate::scalar::wire")]
    pub gain: S,
}

fn serialize_signal<Z: Serializer>(s: &SourceSet, z: Z) -> Result<Z::Ok, Z::Error> {
    z.serialize_str(&s.to_string())
}

/// Every agent-signal pair with a profitable deviation: acting with a
/// negative gain, not acting with a positive one, or mixing without
/// indifference.
pub fn best_response_violations<S: Scalar>(
    space: &OutcomeSpace<S>,
    game: &BinaryGame<S>,
    profile: &StrategyProfile<S>,
) -> Result<Vec<Violation<S>>, GameError> {
    profile.check(space)?;
    let mut out = Vec::new();
    for agent in space.agents() {
        for signal in space.signals_of(agent) {
            let adopt = profile.get(agent, signal);
            let gain = deviation_gain(space, game, profile, agent, signal)?;
            let wants_act = !gain.lt_tol(&S::zero());
            let wants_idle = !S::zero().lt_tol(&gain);
            let ok = if adopt.is_one() {
                wants_act
            } else if adopt.is_zero() {
                wants_idle
            } else {
                wants_act && wants_idle
            };
            if !ok {
                out.push(Violation {
                    agent,
                    signal,
                    adopt,
                    gain,
                });
            }
        }
    }
    Ok(out)
}

pub fn is_equilibrium<S: Scalar>(
    space: &OutcomeSpace<S>,
    game: &BinaryGame<S>,
    profile: &StrategyProfile<S>,
) -> Result<bool, GameError> {
    Ok(best_response_violations(space, game, profile)?.is_empty())
}

/// `P[everyone acts]` under the profile.
pub fn all_act_probability<S: Scalar>(space: &OutcomeSpace<S>, profile: &StrategyProfile<S>) -> S {
    all_act_mass(space, profile, |_| true)
}

/// `P[everyone acts | G]` under the profile.
pub fn all_act_probability_given_g<S: Scalar>(
    space: &OutcomeSpace<S>,
    profile: &StrategyProfile<S>,
) -> S {
    all_act_mass(space, profile, |s| s.theta == Theta::Good) / space.probability(&space.good())
}

fn all_act_mass<S: Scalar, F: Fn(&WorldState) -> bool>(
    space: &OutcomeSpace<S>,
    profile: &StrategyProfile<S>,
    keep: F,
) -> S {
    space
        .states()
        .iter()
        .zip(space.probs())
        .filter(|(state, _)| keep(state))
        .fold(S::zero(), |acc, (state, p)| {
            let all = space
                .agents()
                .fold(S::one(), |x, a| x * profile.get(a, state.signal(a)));
            acc + p.clone() * all
        })
}

/// Which signals iterated dominance may eliminate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DominanceScope {
    Uninformed,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Elimination {
    pub agent: AgentId,
    #[serde(serialize_with = "serialize_signal")]
    pub signal: SourceSet,
}

impl Elimination {
    pub fn new(agent: usize, signal: SourceSet) -> Self {
        Elimination {
            agent: AgentId(agent),
            signal,
        }
    }
}

/// Agents ordered by distance from the planner, ties by index.
pub fn elimination_order(info: &InformationStructure) -> Vec<AgentId> {
    let mut dist = vec![usize::MAX; info.agent_count() + 1];
    dist[0] = 0;
    let mut queue = VecDeque::from([AgentId::PLANNER]);
    while let Some(u) = queue.pop_front() {
        for link in info.links().iter().filter(|l| l.from == u) {
            if dist[link.to.0] == usize::MAX {
                dist[link.to.0] = dist[u.0] + 1;
                queue.push_back(link.to);
            }
        }
    }
    let mut agents: Vec<AgentId> = info.agents().collect();
    agents.sort_by_key(|a| (dist[a.0], a.0));
    agents
}

/// Iterated elimination of "act at this signal".
///
/// Acting at `(i, s)` is eliminated when it loses even if every other
/// agent acts at every signal not yet eliminated. Candidates are scanned in
/// `order` (uninformed signal first for each agent) and eliminations take
/// effect immediately; scans repeat until nothing changes.
pub fn iterated_dominance<S: Scalar>(
    space: &OutcomeSpace<S>,
    game: &BinaryGame<S>,
    order: &[AgentId],
    scope: DominanceScope,
) -> Result<Vec<Elimination>, GameError> {
    let mut profile = StrategyProfile::always(space);
    let mut trace = Vec::new();
    loop {
        let mut changed = false;
        for &agent in order {
            for signal in space.signals_of(agent) {
                if scope == DominanceScope::Uninformed && signal.is_informed() {
                    continue;
                }
                if profile.get(agent, signal).is_zero() {
                    continue;
                }
                let gain = deviation_gain(space, game, &profile, agent, signal)?;
                if gain.lt_tol(&S::zero()) {
                    profile = profile.with(agent, signal, S::zero());
                    trace.push(Elimination { agent, signal });
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok(trace);
        }
    }
}

/// `P[G | N_s]` and `P[Y* | Y_s]` for a seed `s`.
pub fn seed_thresholds<S: Scalar>(
    space: &OutcomeSpace<S>,
    seed: AgentId,
) -> Result<(S, S), GameError> {
    let g = space.conditional(&space.good(), &space.uninformed(seed))?;
    let y = space.conditional(&space.all_informed(), &space.informed(seed))?;
    Ok((g, y))
}

/// First agent that hears from the planner directly.
pub fn first_seed<S: Scalar>(space: &OutcomeSpace<S>) -> Result<AgentId, GameError> {
    space
        .agents()
        .find(|&a| {
            space
                .signals_of(a)
                .iter()
                .any(|s| s.contains(AgentId::PLANNER))
        })
        .ok_or(GameError::NoSeed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EquilibriumCase {
    AlwaysAdopt,
    AdoptIfInformed,
    NeverAdopt,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "S: Scalar"))]
pub struct EquilibriumReport<S> {
    pub case: EquilibriumCase,
    pub profile: StrategyProfile<S>,
    pub seed: AgentId,
    /// Effective cost the case is keyed to (`c`, `(c+d)/R` or `γ/(w+γI)`).
    #[serde(with = "crate::scalar::wire")]
    pub threshold: S,
    /// `P[G | N_seed]`.
    #[serde(with = "crate::scalar::wire")]
    pub uninformed_seed_belief: S,
    /// `P[Y* | Y_seed]`.
    #[serde(with = "crate::scalar::wire")]
    pub informed_seed_belief: S,
    /// Highest equilibrium probability that everyone acts.
    #[serde(with = "crate::scalar::wire")]
    pub max_all_adopt_prob: S,
    #[serde(with = "crate::scalar::wire")]
    pub max_all_adopt_prob_given_g: S,
    pub dominance_trace: Vec<Elimination>,
    pub violations: Vec<Violation<S>>,
    /// The profile is an equilibrium and dominance rules out any
    /// equilibrium with a higher all-act probability.
    pub certified: bool,
}

fn covers_uninformed<S: Scalar>(space: &OutcomeSpace<S>, trace: &[Elimination]) -> bool {
    space
        .agents()
        .all(|a| trace.iter().any(|e| e.agent == a && !e.signal.is_informed()))
}

fn covers_everything<S: Scalar>(space: &OutcomeSpace<S>, trace: &[Elimination]) -> bool {
    space.agents().all(|a| {
        space
            .signals_of(a)
            .iter()
            .all(|s| trace.iter().any(|e| e.agent == a && e.signal == *s))
    })
}

/// Solves a binary game on a tree-shaped space by comparing its threshold
/// with the seed's beliefs, then certifying the matching profile.
pub fn solve_binary_game<S: Scalar>(
    info: &InformationStructure,
    space: &OutcomeSpace<S>,
    game: &BinaryGame<S>,
) -> Result<EquilibriumReport<S>, GameError> {
    let seed = first_seed(space)?;
    let threshold = game.threshold(space.agent_count())?;
    let (b1, b2) = seed_thresholds(space, seed)?;
    let order = elimination_order(info);
    let (case, profile, trace, unique_enough) = if threshold <= b1 {
        (
            EquilibriumCase::AlwaysAdopt,
            StrategyProfile::always(space),
            Vec::new(),
            true,
        )
    } else if threshold <= b2 {
        let trace = iterated_dominance(space, game, &order, DominanceScope::Uninformed)?;
        let covered = covers_uninformed(space, &trace);
        (
            EquilibriumCase::AdoptIfInformed,
            StrategyProfile::adopt_iff_informed(space),
            trace,
            covered,
        )
    } else {
        let trace = iterated_dominance(space, game, &order, DominanceScope::All)?;
        let covered = covers_everything(space, &trace);
        (
            EquilibriumCase::NeverAdopt,
            StrategyProfile::never(space),
            trace,
            covered,
        )
    };
    let violations = best_response_violations(space, game, &profile)?;
    let all = all_act_probability(space, &profile);
    let all_given_g = all_act_probability_given_g(space, &profile);
    Ok(EquilibriumReport {
        case,
        seed,
        threshold,
        uninformed_seed_belief: b1,
        informed_seed_belief: b2,
        max_all_adopt_prob: all,
        max_all_adopt_prob_given_g: all_given_g,
        certified: violations.is_empty() && unique_enough,
        dominance_trace: trace,
        violations,
        profile,
    })
}

pub fn solve_adoption<S: Scalar>(
    info: &InformationStructure,
    space: &OutcomeSpace<S>,
    params: &AdoptionParams<S>,
) -> Result<EquilibriumReport<S>, GameError> {
    solve_binary_game(info, space, &BinaryGame::Adoption(params.clone()))
}

/// Eliminates adopting-when-uninformed for every agent; requires
/// `c > P[G | N_seed]`.
pub fn iterated_dominance_uninformed<S: Scalar>(
    info: &InformationStructure,
    space: &OutcomeSpace<S>,
    params: &AdoptionParams<S>,
) -> Result<Vec<Elimination>, GameError> {
    let seed = first_seed(space)?;
    let (b1, _) = seed_thresholds(space, seed)?;
    if params.c <= b1 {
        return Err(GameError::PreconditionFailed(format!(
            "c = {} does not exceed P[G|N_seed] = {}",
            params.c.to_wire(),
            b1.to_wire()
        )));
    }
    iterated_dominance(
        space,
        &BinaryGame::Adoption(params.clone()),
        &elimination_order(info),
        DominanceScope::Uninformed,
    )
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "S: Scalar"))]
pub struct ParetoComparison<S> {
    #[serde(with = "crate::scalar::wire::vec")]
    pub payoffs_a: Vec<S>,
    #[serde(with = "crate::scalar::wire::vec")]
    pub payoffs_b: Vec<S>,
    /// Per agent: `u_i(a) >= u_i(b)`.
    pub at_least_as_good: Vec<bool>,
    pub weakly_dominates: bool,
    /// Weakly better for everyone and strictly better for someone.
    pub strictly_dominates: bool,
}

pub fn pareto_dominates<S: Scalar>(
    space: &OutcomeSpace<S>,
    game: &BinaryGame<S>,
    a: &StrategyProfile<S>,
    b: &StrategyProfile<S>,
) -> Result<ParetoComparison<S>, GameError> {
    let payoffs_a = expected_payoffs(space, game, a)?;
    let payoffs_b = expected_payoffs(space, game, b)?;
    let at_least_as_good: Vec<bool> = payoffs_a
        .iter()
        .zip(&payoffs_b)
        .map(|(x, y)| y.le_tol(x))
        .collect();
    let weakly = at_least_as_good.iter().all(|&x| x);
    let strictly = weakly && payoffs_a.iter().zip(&payoffs_b).any(|(x, y)| y.lt_tol(x));
    Ok(ParetoComparison {
        payoffs_a,
        payoffs_b,
        at_least_as_good,
        weakly_dominates: weakly,
        strictly_dominates: strictly,
    })
}
