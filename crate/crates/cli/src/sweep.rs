//! Parameter sweeps: one CSV row per grid point, in grid order.

use diffusion_core::belief::BeliefEngine;
use diffusion_core::extensions::{general_outcomes, solve_general};
use diffusion_core::game::{elimination_order, first_seed, seed_thresholds, solve_binary_game};
use diffusion_core::network::{AgentId, InformationStructure};
use diffusion_core::probability::ModelParams;
use diffusion_core::scalar::{parse_scalar, Exact, Scalar};
use diffusion_core::Caps;
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{Axis, GameArgs};
use crate::commands::build_game;
use crate::error::CliError;
use crate::scenario::Scenario;

pub const HEADER: &str = "axis,value,rho,epsilon,c,p,uninformed_seed_belief,informed_seed_belief,case,all_adopt_prob,all_adopt_prob_given_g,cp_label,cp_probability";

/// `start:stop:step` (inclusive, exact steps), `a,b,c`, or empty.
pub fn parse_grid(spec: &str) -> Result<Vec<Exact>, CliError> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Ok(Vec::new());
    }
    if let Some((start, rest)) = spec.split_once(':') {
        let (stop, step) = rest
            .split_once(':')
            .ok_or_else(|| CliError::Invalid(format!("grid {spec:?}: expected start:stop:step")))?;
        let start: Exact = parse_scalar(start)?;
        let stop: Exact = parse_scalar(stop)?;
        let step: Exact = parse_scalar(step)?;
        if step <= Exact::from_ratio(0, 1) {
            return Err(CliError::Invalid(format!("grid {spec:?}: step must be positive")));
        }
        let mut out = Vec::new();
        let mut x = start;
        while x <= stop {
            out.push(x.clone());
            x += step.clone();
        }
        return Ok(out);
    }
    spec.split(',')
        .map(|s| Ok(parse_scalar(s.trim())?))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub axis: &'static str,
    pub value: String,
    pub rho: String,
    pub epsilon: String,
    pub c: String,
    pub p: String,
    pub uninformed_seed_belief: String,
    pub informed_seed_belief: String,
    pub case: String,
    pub all_adopt_prob: String,
    pub all_adopt_prob_given_g: String,
    pub cp_label: String,
    pub cp_probability: String,
}

impl SweepRow {
    fn csv(&self) -> String {
        [
            self.axis,
            &self.value,
            &self.rho,
            &self.epsilon,
            &self.c,
            &self.p,
            &self.uninformed_seed_belief,
            &self.informed_seed_belief,
            &self.case,
            &self.all_adopt_prob,
            &self.all_adopt_prob_given_g,
            &self.cp_label,
            &self.cp_probability,
        ]
        .join(",")
    }
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv());
        out.push('\n');
    }
    out
}

pub struct SweepSpec<'a, S> {
    pub scenario: &'a Scenario,
    pub axis: Axis,
    pub base: ModelParams<S>,
    pub game: &'a GameArgs,
    pub p: Option<S>,
    pub caps: Caps,
}

fn label<T: Serialize>(x: &T) -> String {
    match serde_json::to_value(x) {
        Ok(serde_json::Value::String(s)) => s,
        _ => String::new(),
    }
}

fn wire<S: Scalar>(x: &Option<S>) -> String {
    x.as_ref().map(Scalar::to_wire).unwrap_or_default()
}

fn row<S: Scalar>(spec: &SweepSpec<'_, S>, value: S) -> Result<SweepRow, CliError> {
    let mut params = spec.base.clone();
    let mut c_override = None;
    let mut p = spec.p.clone();
    match spec.axis {
        Axis::Rho => params = ModelParams::new(value.clone(), params.epsilon)?,
        Axis::Epsilon => params = ModelParams::new(params.rho, value.clone())?,
        Axis::C => c_override = Some(value.clone()),
        Axis::P => p = Some(value.clone()),
    }
    let space = general_outcomes(&spec.scenario.scenario, &params, &spec.caps)?;
    let seed = first_seed(&space)?;
    let (b1, b2) = seed_thresholds(&space, seed)?;
    let game = build_game(spec.game, c_override.clone(), space.agent_count())?;

    let (case, all, all_g) = match &game {
        None => (String::new(), None, None),
        Some(game) => match spec.scenario.tree() {
            Some(info) => {
                let r = solve_binary_game(info, &space, game)?;
                (label(&r.case), Some(r.max_all_adopt_prob), Some(r.max_all_adopt_prob_given_g))
            }
            None => {
                let order = order_of(spec.scenario);
                let (shape, r) = solve_general(&space, game, &order)?;
                (label(&shape), Some(r.all_adopt_prob), Some(r.all_adopt_prob_given_g))
            }
        },
    };
    let (cp_label, cp_prob) = match &p {
        None => (String::new(), None),
        Some(p) => {
            let engine = BeliefEngine::new(&space);
            let cb = engine.common_p_belief(&space.good(), p)?;
            (label(&cb.label), Some(cb.probability))
        }
    };
    let c = c_override.or_else(|| game.as_ref().and_then(|g| g.threshold(space.agent_count()).ok()));
    Ok(SweepRow {
        axis: spec.axis.name(),
        value: value.to_wire(),
        rho: params.rho.to_wire(),
        epsilon: params.epsilon.to_wire(),
        c: wire(&c),
        p: wire(&p),
        uninformed_seed_belief: b1.to_wire(),
        informed_seed_belief: b2.to_wire(),
        case,
        all_adopt_prob: wire(&all),
        all_adopt_prob_given_g: wire(&all_g),
        cp_label,
        cp_probability: wire(&cp_prob),
    })
}

/// Dominance order for any scenario: BFS order of the first structure.
pub fn order_of(scenario: &Scenario) -> Vec<AgentId> {
    let infos: Vec<&InformationStructure> =
        scenario.scenario.components().iter().map(|(_, i)| i).collect();
    elimination_order(infos[0])
}

/// Grid points run in parallel; rows come back in grid order.
pub fn run<S: Scalar>(spec: &SweepSpec<'_, S>, grid: &[Exact]) -> Result<Vec<SweepRow>, CliError> {
    grid.par_iter()
        .map(|v| row(spec, S::from_exact(v)))
        .collect()
}
