//! Structures outside the single-seed forest setting.
//!
//! Three small instances are modeled on the general source-set state
//! space: a four-agent network where agent 3 hears from both 2 and 4, two
//! agents seeded together who relay only what the planner sent them, and
//! two agents with a seed drawn uniformly at random. Each solver checks the
//! stated cost window, certifies the claimed profile, and reports closed
//! forms next to the enumerated values.
//!
//! A profile is certified when it has no profitable deviation and adopts
//! exactly at the signals that survive iterated dominance over all
//! signals. Any equilibrium adopts only at surviving signals, so a
//! certified profile also has the highest all-adopt probability.

use std::cmp::Ordering;
use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::game::{
    all_act_probability, all_act_probability_given_g, best_response_violations, elimination_order, expected_payoff,
    iterated_dominance, solve_adoption, AdoptionParams, BinaryGame, DominanceScope,
    Elimination, EquilibriumReport, GameError, StrategyProfile, Violation,
};
use crate::network::{
    line, orient, AgentId, InformationStructure, Link, NetworkError, Seeding, SourceSet,
    UndirectedGraph,
};
use crate::probability::{DeliveryTable, ModelParams, OutcomeSpace, ProbabilityError};
use crate::scalar::{Exact, Scalar};
use crate::Caps;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("c = {c} is outside the window: {reason}")]
    OutOfRange { c: String, reason: String },
    #[error("seeding weights must be non-negative and sum to one")]
    BadSeedingDistribution,
    #[error(transparent)]
    Network(#[from] NetworkError),
    #[error(transparent)]
    Probability(#[from] ProbabilityError),
    #[error(transparent)]
    Game(#[from] GameError),
}

/// One structure, or a distribution over structures on the same agents
/// (a random seeding). Agents see only their received-source sets.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneralScenario {
    components: Vec<(Exact, InformationStructure)>,
}

impl GeneralScenario {
    pub fn fixed(info: InformationStructure) -> Self {
        GeneralScenario {
            components: vec![(Exact::from_ratio(1, 1), info)],
        }
    }

    pub fn random(components: Vec<(Exact, InformationStructure)>) -> Result<Self, ExtensionError> {
        let Some((_, first)) = components.first() else {
            return Err(ExtensionError::BadSeedingDistribution);
        };
        let n = first.agent_count();
        let total = components
            .iter()
            .fold(Exact::from_ratio(0, 1), |acc, (w, _)| acc + w.clone());
        if components.iter().any(|(w, _)| *w < Exact::from_ratio(0, 1))
            || total != Exact::from_ratio(1, 1)
        {
            return Err(ExtensionError::BadSeedingDistribution);
        }
        if components.iter().any(|(_, i)| i.agent_count() != n) {
            return Err(ProbabilityError::AgentCountMismatch.into());
        }
        Ok(GeneralScenario { components })
    }

    pub fn components(&self) -> &[(Exact, InformationStructure)] {
        &self.components
    }

    pub fn agent_count(&self) -> usize {
        self.components[0].1.agent_count()
    }
}

/// Outcome space over source-profile states, mixed over the seeding
/// distribution. Zero-weight components are dropped.
pub fn general_outcomes<S: Scalar>(
    scenario: &GeneralScenario,
    params: &ModelParams<S>,
    caps: &Caps,
) -> Result<OutcomeSpace<S>, ExtensionError> {
    let mut parts = Vec::new();
    for (w, info) in &scenario.components {
        if *w == Exact::from_ratio(0, 1) {
            continue;
        }
        let space = DeliveryTable::new(info, caps)?.evaluate(params);
        parts.push((S::from_exact(w), space));
    }
    if parts.len() == 1 {
        return Ok(parts.pop().map(|(_, s)| s).unwrap_or_else(|| unreachable!()));
    }
    Ok(OutcomeSpace::mixture(&parts)?)
}

/// Orients a possibly cyclic graph away from the seeds.
///
/// Agents are layered by distance from the planner. Links point from each
/// layer to the next and fire whenever the sender is informed. An edge
/// inside a layer becomes a pair of links that carry only what the sender
/// heard from the previous layer, so nothing is relayed twice. On a forest
/// with one seed per tree this is [`orient`].
pub fn orient_general(
    graph: &UndirectedGraph,
    seeding: &Seeding,
) -> Result<InformationStructure, NetworkError> {
    let n = graph.agent_count();
    let mut dist = vec![usize::MAX; n + 1];
    dist[0] = 0;
    let mut queue = VecDeque::new();
    for &s in &seeding.seeds {
        if s.0 == 0 || s.0 > n {
            return Err(NetworkError::UnknownAgent(s));
        }
        if dist[s.0] == 1 {
            return Err(NetworkError::SeedMismatch(format!("agent {s} seeded twice")));
        }
        dist[s.0] = 1;
        queue.push_back(s);
    }
    while let Some(u) = queue.pop_front() {
        for v in graph.neighbors(u) {
            if dist[v.0] == usize::MAX {
                dist[v.0] = dist[u.0] + 1;
                queue.push_back(v);
            }
        }
    }
    let earlier = |u: usize| -> Vec<usize> {
        let mut from: Vec<usize> = graph
            .neighbors(AgentId(u))
            .map(|a| a.0)
            .filter(|&a| dist[a] + 1 == dist[u])
            .collect();
        if dist[u] == 1 {
            from.insert(0, 0);
        }
        from
    };
    let mut links: Vec<Link> = seeding.seeds.iter().map(|s| Link::new(0, s.0)).collect();
    for (a, b) in graph.edges() {
        if dist[a] == usize::MAX || dist[b] == usize::MAX {
            continue;
        }
        match dist[a].cmp(&dist[b]) {
            Ordering::Less => links.push(Link::new(a, b)),
            Ordering::Greater => links.push(Link::new(b, a)),
            Ordering::Equal => {
                links.push(Link::relaying_only(a, b, &earlier(a)));
                links.push(Link::relaying_only(b, a, &earlier(b)));
            }
        }
    }
    InformationStructure::new(n, links)
}

/// Seed 1 forwards to 2 and 4, both of which forward to 3.
pub fn cycle_four() -> InformationStructure {
    InformationStructure::new(
        4,
        vec![
            Link::new(0, 1),
            Link::new(1, 2),
            Link::new(1, 4),
            Link::new(2, 3),
            Link::new(4, 3),
        ],
    )
    .expect("valid cycle structure")
}

/// The 4-cycle as an undirected graph, for validation.
pub const CYCLE_EDGES: [(usize, usize); 4] = [(1, 2), (2, 3), (3, 4), (4, 1)];

/// Both agents seeded; each relays only the planner's message.
pub fn two_seed() -> InformationStructure {
    InformationStructure::new(
        2,
        vec![
            Link::new(0, 1),
            Link::new(0, 2),
            Link::relaying_only(1, 2, &[0]),
            Link::relaying_only(2, 1, &[0]),
        ],
    )
    .expect("valid two-seed structure")
}

/// Two connected agents seeded at `seed`.
pub fn single_seed_pair(seed: usize) -> InformationStructure {
    orient(&line(2).expect("two agents"), &Seeding::new([seed])).expect("valid seeding")
}

/// Seed 1 or 2 with probability one half each.
pub fn random_seed_pair() -> GeneralScenario {
    let half = Exact::from_ratio(1, 2);
    GeneralScenario {
        components: vec![(half.clone(), single_seed_pair(1)), (half, single_seed_pair(2))],
    }
}

pub fn line_four() -> InformationStructure {
    orient(&line(4).expect("four agents"), &Seeding::new([1])).expect("valid seeding")
}

/// A closed-form value next to its enumerated counterpart.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "S: Scalar"))]
pub struct Quantity<S> {
    pub name: String,
    #[serde(with = "crate::scalar::wire")]
    pub claimed: S,
    #[serde(with = "crate::scalar::wire")]
    pub computed: S,
    pub matches: bool,
}

impl<S: Scalar> Quantity<S> {
    /// Exact backends must agree exactly, floats within `1e-12`.
    pub fn new(name: &str, claimed: S, computed: S) -> Self {
        let matches = if S::EXACT {
            claimed == computed
        } else {
            (claimed.to_f64() - computed.to_f64()).abs() <= 1e-12
        };
        Quantity {
            name: name.to_string(),
            claimed,
            computed,
            matches,
        }
    }
}

/// A candidate profile with its certification data.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "S: Scalar"))]
pub struct CertifiedProfile<S> {
    pub profile: StrategyProfile<S>,
    pub dominance_trace: Vec<Elimination>,
    pub violations: Vec<Violation<S>>,
    /// The profile adopts exactly at the signals dominance leaves alive.
    pub matches_survivors: bool,
    #[serde(with = "crate::scalar::wire")]
    pub all_adopt_prob: S,
    #[serde(with = "crate::scalar::wire")]
    pub all_adopt_prob_given_g: S,
    pub certified: bool,
}

pub fn certify<S: Scalar>(
    space: &OutcomeSpace<S>,
    game: &BinaryGame<S>,
    order: &[AgentId],
    profile: StrategyProfile<S>,
) -> Result<CertifiedProfile<S>, ExtensionError> {
    let trace = iterated_dominance(space, game, order, DominanceScope::All)?;
    let matches_survivors = space.agents().all(|a| {
        space.signals_of(a).into_iter().all(|s| {
            let eliminated = trace.iter().any(|e| e.agent == a && e.signal == s);
            let p = profile.get(a, s);
            if eliminated {
                p.is_zero()
            } else {
                p.is_one()
            }
        })
    });
    let violations = best_response_violations(space, game, &profile)?;
    let all = all_act_probability(space, &profile);
    let all_given_g = all_act_probability_given_g(space, &profile);
    Ok(CertifiedProfile {
        certified: violations.is_empty() && matches_survivors,
        profile,
        dominance_trace: trace,
        violations,
        matches_survivors,
        all_adopt_prob: all,
        all_adopt_prob_given_g: all_given_g,
    })
}

/// Shape of a pure profile, for reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ProfileShape {
    AlwaysAdopt,
    AdoptIfInformed,
    NeverAdopt,
    Other,
}

pub fn profile_shape<S: Scalar>(space: &OutcomeSpace<S>, profile: &StrategyProfile<S>) -> ProfileShape {
    let matches = |f: &dyn Fn(SourceSet) -> bool| {
        space.agents().all(|a| {
            space
                .signals_of(a)
                .into_iter()
                .all(|s| if f(s) { profile.get(a, s).is_one() } else { profile.get(a, s).is_zero() })
        })
    };
    if matches(&|_| true) {
        ProfileShape::AlwaysAdopt
    } else if matches(&|s| s.is_informed()) {
        ProfileShape::AdoptIfInformed
    } else if matches(&|_| false) {
        ProfileShape::NeverAdopt
    } else {
        ProfileShape::Other
    }
}

/// Adopts exactly at the signals surviving iterated dominance, then checks
/// best responses. When certified this is the equilibrium with the highest
/// all-adopt probability.
pub fn solve_general<S: Scalar>(
    space: &OutcomeSpace<S>,
    game: &BinaryGame<S>,
    order: &[AgentId],
) -> Result<(ProfileShape, CertifiedProfile<S>), ExtensionError> {
    let trace = iterated_dominance(space, game, order, DominanceScope::All)?;
    let profile = StrategyProfile::from_fn(space, |a, s| {
        if trace.iter().any(|e| e.agent == a && e.signal == s) {
            S::zero()
        } else {
            S::one()
        }
    });
    let shape = profile_shape(space, &profile);
    Ok((shape, certify(space, game, order, profile)?))
}

fn out_of_range<S: Scalar>(c: &S, reason: String) -> ExtensionError {
    ExtensionError::OutOfRange {
        c: c.to_wire(),
        reason,
    }
}

/// `ρε / (ρε + 1 - ρ)`, the uninformed seed's belief in `G`.
/// `P[G | N_1]` for a single seed: `ρε / (ρε + 1 - ρ)`.
pub fn seed_uninformed_belief<S: Scalar>(params: &ModelParams<S>) -> S {
    let re = params.rho.clone() * params.epsilon.clone();
    re.clone() / (re + S::one() - params.rho.clone())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "S: Scalar"))]
pub struct CycleReport<S> {
    #[serde(with = "crate::scalar::wire")]
    pub c: S,
    /// `(1-ε)/(2-ε)`, `(1-ε)^4` and `ρε/(ρε+1-ρ)`.
    #[serde(with = "crate::scalar::wire::vec")]
    pub window: Vec<S>,
    pub cycle: CertifiedProfile<S>,
    pub line: EquilibriumReport<S>,
    pub quantities: Vec<Quantity<S>>,
    /// Cycle all-adopt probability strictly below the line's.
    pub cycle_below_line: bool,
}

/// Agents 1, 2, 4 adopt iff informed; 3 adopts iff she heard from both 2
/// and 4. Compared with line-4 at the same cost.
pub fn solve_cycle<S: Scalar>(
    params: &ModelParams<S>,
    c: S,
    caps: &Caps,
) -> Result<CycleReport<S>, ExtensionError> {
    let eps = params.epsilon.clone();
    let q = params.delivery();
    let two = S::from_usize(2);
    let lo = q.clone() / (two.clone() - eps.clone());
    let hi = q.powi(4);
    let uninformed = seed_uninformed_belief(params);
    if !(lo < c && c < hi) {
        return Err(out_of_range(
            &c,
            format!("need {} < c < {}", lo.to_wire(), hi.to_wire()),
        ));
    }
    if c <= uninformed {
        return Err(out_of_range(
            &c,
            format!("need c > P[G|N_1] = {}", uninformed.to_wire()),
        ));
    }

    let info = cycle_four();
    let space = general_outcomes(&GeneralScenario::fixed(info.clone()), params, caps)?;
    let adoption = AdoptionParams::new(c.clone())?;
    let game = BinaryGame::Adoption(adoption.clone());
    let both = SourceSet::from_agents([AgentId(2), AgentId(4)]);
    let profile = StrategyProfile::from_fn(&space, |a, s| {
        let adopt = if a == AgentId(3) { s == both } else { s.is_informed() };
        if adopt {
            S::one()
        } else {
            S::zero()
        }
    });
    let cycle = certify(&space, &game, &elimination_order(&info), profile)?;

    let line_info = line_four();
    let line_space = general_outcomes(&GeneralScenario::fixed(line_info.clone()), params, caps)?;
    let line = solve_adoption(&line_info, &line_space, &adoption)?;

    let y = |a: usize| space.informed(AgentId(a));
    let only = |a: usize, from: usize| space.signal_is(AgentId(a), SourceSet::single(AgentId(from)));
    let y3_both = space.signal_is(AgentId(3), both);
    let rest = y(2).intersection(&y(4)).intersection(&y3_both);
    let quantities = vec![
        Quantity::new(
            "P[G|N_1]",
            uninformed,
            space.conditional(&space.good(), &space.uninformed(AgentId(1)))?,
        ),
        Quantity::new("P[Y_4|Y_3^2]", lo, space.conditional(&y(4), &only(3, 2))?),
        Quantity::new("P[Y_2|Y_3^4]", q.clone() / (two - eps), space.conditional(&y(2), &only(3, 4))?),
        Quantity::new("P[Y_2 Y_4 Y_3^(2&4)|Y_1]", hi, space.conditional(&rest, &y(1))?),
        Quantity::new(
            "cycle all-adopt probability given G",
            q.powi(5),
            cycle.all_adopt_prob_given_g.clone(),
        ),
        Quantity::new(
            "line all-adopt probability given G",
            q.powi(4),
            line.max_all_adopt_prob_given_g.clone(),
        ),
    ];
    let cycle_below_line = cycle.all_adopt_prob < line.max_all_adopt_prob;
    Ok(CycleReport {
        window: vec![q.clone() / (S::from_usize(2) - params.epsilon.clone()), q.powi(4), seed_uninformed_belief(params)],
        c,
        cycle,
        line,
        quantities,
        cycle_below_line,
    })
}

/// Two-seed closed forms.
pub fn multiseed_uninformed_belief<S: Scalar>(params: &ModelParams<S>) -> S {
    let e = params.epsilon.clone();
    let num = params.rho.clone() * e.clone() * e.clone() * (S::from_usize(2) - e);
    num.clone() / (num + S::one() - params.rho.clone())
}

/// `π_M = ρ(1-ε)²(1+2ε)(1-c) - ρ(1-ε)ε²c`.
pub fn multiseed_payoff<S: Scalar>(params: &ModelParams<S>, c: &S) -> S {
    let (rho, e, q) = (params.rho.clone(), params.epsilon.clone(), params.delivery());
    rho.clone() * q.clone() * q.clone() * (S::one() + S::from_usize(2) * e.clone()) * (S::one() - c.clone())
        - rho * q * e.clone() * e * c.clone()
}

/// Cost at which `π_M = ρ - c`: `ρε²(3-2ε) / (ρε²(2-ε) + 1 - ρ)`.
pub fn multiseed_crossing_cost<S: Scalar>(params: &ModelParams<S>) -> S {
    let (rho, e) = (params.rho.clone(), params.epsilon.clone());
    let e2 = e.clone() * e.clone();
    rho.clone() * e2.clone() * (S::from_usize(3) - S::from_usize(2) * e.clone())
        / (rho.clone() * e2 * (S::from_usize(2) - e) + S::one() - rho)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "S: Scalar"))]
pub struct PayoffPoint<S> {
    #[serde(with = "crate::scalar::wire")]
    pub c: S,
    #[serde(with = "crate::scalar::wire")]
    pub pi_multi: S,
    #[serde(with = "crate::scalar::wire")]
    pub pi_single: S,
    #[serde(with = "crate::scalar::wire")]
    pub difference: S,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PayoffSign {
    Negative,
    Zero,
    Positive,
}

impl PayoffSign {
    pub fn of<S: Scalar>(x: &S) -> Self {
        if x.lt_tol(&S::zero()) {
            PayoffSign::Negative
        } else if S::zero().lt_tol(x) {
            PayoffSign::Positive
        } else {
            PayoffSign::Zero
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "S: Scalar"))]
pub struct MultiseedReport<S> {
    #[serde(with = "crate::scalar::wire")]
    pub c: S,
    /// `P_M[G|N_1]`, `P[G|N_1]` and `P_M[Y_2|Y_1^0] = 2(1-ε)/(2-ε)`, the
    /// belief of an agent who heard only from the planner.
    #[serde(with = "crate::scalar::wire::vec")]
    pub window: Vec<S>,
    pub two_seeds: CertifiedProfile<S>,
    pub single_seed: CertifiedProfile<S>,
    #[serde(with = "crate::scalar::wire")]
    pub pi_multi: S,
    #[serde(with = "crate::scalar::wire")]
    pub pi_single: S,
    pub sign: PayoffSign,
    #[serde(with = "crate::scalar::wire")]
    pub crossing_cost: S,
    pub quantities: Vec<Quantity<S>>,
}

/// Enumerated `(π_M, π)` at cost `c`, each agent 1's ex-ante payoff in the
/// respective equilibrium profile.
fn multiseed_payoffs<S: Scalar>(
    multi: &OutcomeSpace<S>,
    single: &OutcomeSpace<S>,
    c: &S,
) -> Result<(S, S), ExtensionError> {
    let game = BinaryGame::Adoption(AdoptionParams::new(c.clone())?);
    let pm = expected_payoff(multi, &game, &StrategyProfile::adopt_iff_informed(multi), AgentId(1))?;
    let ps = expected_payoff(single, &game, &StrategyProfile::always(single), AgentId(1))?;
    Ok((pm, ps))
}

/// Both seeds: adopt iff informed; single seed at 1: always adopt. Valid
/// for `P_M[G|N_1] < c <= P[G|N_1]` (and `c <= P_M[Y_2|Y_1^0]`).
pub fn solve_multiseed<S: Scalar>(
    params: &ModelParams<S>,
    c: S,
    caps: &Caps,
) -> Result<MultiseedReport<S>, ExtensionError> {
    let e = params.epsilon.clone();
    let pm_gn = multiseed_uninformed_belief(params);
    let p_gn = seed_uninformed_belief(params);
    let pm_y_only = S::from_usize(2) * params.delivery() / (S::from_usize(2) - e.clone());
    if !(pm_gn < c && c <= p_gn) {
        return Err(out_of_range(
            &c,
            format!("need {} < c <= {}", pm_gn.to_wire(), p_gn.to_wire()),
        ));
    }
    if c > pm_y_only {
        return Err(out_of_range(
            &c,
            format!("need c <= P_M[Y_2|Y_1^0] = {}", pm_y_only.to_wire()),
        ));
    }

    let multi_info = two_seed();
    let multi = general_outcomes(&GeneralScenario::fixed(multi_info.clone()), params, caps)?;
    let single_info = single_seed_pair(1);
    let single = general_outcomes(&GeneralScenario::fixed(single_info.clone()), params, caps)?;
    let game = BinaryGame::Adoption(AdoptionParams::new(c.clone())?);
    let two_seeds = certify(
        &multi,
        &game,
        &elimination_order(&multi_info),
        StrategyProfile::adopt_iff_informed(&multi),
    )?;
    let single_seed = certify(
        &single,
        &game,
        &elimination_order(&single_info),
        StrategyProfile::always(&single),
    )?;
    let (pi_multi, pi_single) = multiseed_payoffs(&multi, &single, &c)?;

    let a1 = AgentId(1);
    let a2 = AgentId(2);
    let y1_0 = multi.signal_is(a1, SourceSet::single(AgentId::PLANNER));
    let from_planner = multi.event(|w| w.signal(a1).contains(AgentId::PLANNER));
    let g = multi.good();
    let q = params.delivery();
    let quantities = vec![
        Quantity::new(
            "P_M[G|N_1]",
            pm_gn.clone(),
            multi.conditional(&g, &multi.uninformed(a1))?,
        ),
        Quantity::new(
            "P_M[Y_2|1 heard from planner]",
            S::one() - e.clone() * e.clone(),
            multi.conditional(&multi.informed(a2), &from_planner)?,
        ),
        Quantity::new(
            "P_M[Y_2|Y_1^0]",
            pm_y_only.clone(),
            multi.conditional(&multi.informed(a2), &y1_0)?,
        ),
        Quantity::new(
            "P_M[Y_1 Y_2|G]",
            q.clone() * q.clone() * (S::one() + S::from_usize(2) * e.clone()),
            multi.conditional(&multi.informed(a1).intersection(&multi.informed(a2)), &g)?,
        ),
        Quantity::new(
            "P_M[Y_1 N_2|G]",
            q * e.clone() * e,
            multi.conditional(&multi.informed(a1).intersection(&multi.uninformed(a2)), &g)?,
        ),
        Quantity::new(
            "P[G|N_1]",
            p_gn.clone(),
            single.conditional(&single.good(), &single.uninformed(a1))?,
        ),
        Quantity::new("pi_M", multiseed_payoff(params, &c), pi_multi.clone()),
        Quantity::new("pi", params.rho.clone() - c.clone(), pi_single.clone()),
    ];
    let sign = PayoffSign::of(&(pi_multi.clone() - pi_single.clone()));
    Ok(MultiseedReport {
        window: vec![pm_gn, p_gn, pm_y_only],
        c,
        two_seeds,
        single_seed,
        pi_multi,
        pi_single,
        sign,
        crossing_cost: multiseed_crossing_cost(params),
        quantities,
    })
}

/// `(π_M, π, π_M - π)` at each cost, by enumeration; no window check.
pub fn multiseed_sweep<S: Scalar>(
    params: &ModelParams<S>,
    costs: &[S],
    caps: &Caps,
) -> Result<Vec<PayoffPoint<S>>, ExtensionError> {
    let multi = general_outcomes(&GeneralScenario::fixed(two_seed()), params, caps)?;
    let single = general_outcomes(&GeneralScenario::fixed(single_seed_pair(1)), params, caps)?;
    costs
        .iter()
        .map(|c| {
            let (pi_multi, pi_single) = multiseed_payoffs(&multi, &single, c)?;
            Ok(PayoffPoint {
                c: c.clone(),
                difference: pi_multi.clone() - pi_single.clone(),
                pi_multi,
                pi_single,
            })
        })
        .collect()
}

/// `½ρε(3-ε) / (½ρε(3-ε) + 1 - ρ)`.
pub fn randomseed_uninformed_belief<S: Scalar>(params: &ModelParams<S>) -> S {
    let e = params.epsilon.clone();
    let num = params.rho.clone() * e.clone() * (S::from_usize(3) - e) / S::from_usize(2);
    num.clone() / (num + S::one() - params.rho.clone())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound(serialize = "S: Scalar"))]
pub struct RandomseedReport<S> {
    #[serde(with = "crate::scalar::wire")]
    pub c: S,
    /// `P^1[G|N_1]` and `P~[G|N_1]`.
    #[serde(with = "crate::scalar::wire::vec")]
    pub window: Vec<S>,
    pub random: CertifiedProfile<S>,
    /// Always-adopt under a fixed seed at 1; expected to fail.
    pub single_always: CertifiedProfile<S>,
    /// The single-seed equilibrium at the same cost.
    pub single: EquilibriumReport<S>,
    pub quantities: Vec<Quantity<S>>,
}

/// Always adopt under random seeding, for `P^1[G|N_1] < c < P~[G|N_1]`.
pub fn solve_randomseed<S: Scalar>(
    params: &ModelParams<S>,
    c: S,
    caps: &Caps,
) -> Result<RandomseedReport<S>, ExtensionError> {
    let lo = seed_uninformed_belief(params);
    let hi = randomseed_uninformed_belief(params);
    if !(lo < c && c < hi) {
        return Err(out_of_range(
            &c,
            format!("need {} < c < {}", lo.to_wire(), hi.to_wire()),
        ));
    }
    let scenario = random_seed_pair();
    let mixed = general_outcomes(&scenario, params, caps)?;
    let single_info = single_seed_pair(1);
    let single_space = general_outcomes(&GeneralScenario::fixed(single_info.clone()), params, caps)?;
    let adoption = AdoptionParams::new(c.clone())?;
    let game = BinaryGame::Adoption(adoption.clone());
    let order = [AgentId(1), AgentId(2)];
    let random = certify(&mixed, &game, &order, StrategyProfile::always(&mixed))?;
    let single_always = certify(
        &single_space,
        &game,
        &elimination_order(&single_info),
        StrategyProfile::always(&single_space),
    )?;
    let single = solve_adoption(&single_info, &single_space, &adoption)?;
    let a1 = AgentId(1);
    let quantities = vec![
        Quantity::new(
            "P~[G|N_1]",
            hi.clone(),
            mixed.conditional(&mixed.good(), &mixed.uninformed(a1))?,
        ),
        Quantity::new(
            "P~[G|N_2]",
            hi.clone(),
            mixed.conditional(&mixed.good(), &mixed.uninformed(AgentId(2)))?,
        ),
        Quantity::new(
            "P^1[G|N_1]",
            lo.clone(),
            single_space.conditional(&single_space.good(), &single_space.uninformed(a1))?,
        ),
        Quantity::new(
            "single-seed all-adopt probability",
            params.rho.clone() * params.delivery().powi(2),
            single.max_all_adopt_prob.clone(),
        ),
    ];
    Ok(RandomseedReport {
        window: vec![lo, hi],
        c,
        random,
        single_always,
        single,
        quantities,
    })
}
