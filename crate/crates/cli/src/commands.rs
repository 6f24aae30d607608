use std::path::Path;

use diffusion_core::belief::{
    classify_common_belief_g, irrelevance_structures, p_grid_with_breakpoints, verify_irrelevance,
    BeliefEngine,
};
use diffusion_core::extensions::{
    cycle_four, general_outcomes, multiseed_sweep, multiseed_uninformed_belief, random_seed_pair,
    solve_cycle, solve_general, solve_multiseed, solve_randomseed, two_seed, GeneralScenario,
};
use diffusion_core::game::{
    solve_adoption, solve_binary_game, AdoptionParams, BinaryGame, PotentialParams, ProtestParams,
};
use diffusion_core::informativeness::compare_trees;
use diffusion_core::network::{broadcast, line, orient, star, AgentId, Seeding};
use diffusion_core::probability::{
    monte_carlo, monte_carlo_mixture, oracle_agreement, ModelParams, OutcomeSpace,
};
use diffusion_core::scalar::{parse_scalar, Exact, Scalar};
use diffusion_core::Caps;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::{Case, Cli, Command, EventArg, GameArgs, GameKind, OracleCase, ScenarioArgs};
use crate::error::CliError;
use crate::report::RunReport;
use crate::scenario::{self, Scenario};
use crate::sweep::{self, order_of, SweepSpec};

/// What to print and the exit code.
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn json(report: &RunReport, ok: bool) -> Self {
        Outcome {
            stdout: report.to_json(),
            code: if ok { 0 } else { 1 },
        }
    }
}

pub fn run(cli: &Cli, argv: Vec<String>) -> Result<Outcome, CliError> {
    let caps = Caps::from_env();
    if cli.exact {
        dispatch::<Exact>(cli, argv, &caps)
    } else {
        dispatch::<f64>(cli, argv, &caps)
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("results serialize")
}

fn parse<S: Scalar>(s: &str) -> Result<S, CliError> {
    Ok(parse_scalar(s)?)
}

fn opt<S: Scalar>(s: &Option<String>) -> Result<Option<S>, CliError> {
    s.as_deref().map(parse).transpose()
}

/// The game described by the flags; `None` when the adoption cost is
/// missing. `c` overrides `--c`.
pub fn build_game<S: Scalar>(
    args: &GameArgs,
    c: Option<S>,
    agent_count: usize,
) -> Result<Option<BinaryGame<S>>, CliError> {
    let c = match c {
        Some(c) => Some(c),
        None => opt(&args.c)?,
    };
    let need = |name: &str, v: Option<S>| {
        v.ok_or_else(|| CliError::Invalid(format!("--{name} is required for this game")))
    };
    Ok(match args.game {
        GameKind::Adoption => match c {
            None => None,
            Some(c) => Some(BinaryGame::Adoption(AdoptionParams::new(c)?)),
        },
        GameKind::Protest => {
            let Some(c) = c else { return Ok(None) };
            let reward = need("reward", opt(&args.reward)?)?;
            let damage = opt(&args.damage)?.unwrap_or_else(S::zero);
            Some(BinaryGame::Protest(ProtestParams::new(reward, c, damage)?))
        }
        GameKind::Potential => {
            if c.is_some() {
                return Err(CliError::Invalid("potential games take --w and --gamma, not a cost".into()));
            }
            let w = need("w", opt(&args.w)?)?;
            let gamma = need("gamma", opt(&args.gamma)?)?;
            Some(BinaryGame::Potential(PotentialParams::new(w, gamma, agent_count)?))
        }
    })
}

fn load(args: &ScenarioArgs) -> Result<Scenario, CliError> {
    scenario::load(&args.scenario, args.general)
}

fn record_params<S: Scalar>(report: &mut RunReport, params: &ModelParams<S>) {
    report.param("rho", params.rho.to_wire());
    report.param("epsilon", params.epsilon.to_wire());
}

fn dispatch<S: Scalar>(cli: &Cli, argv: Vec<String>, caps: &Caps) -> Result<Outcome, CliError> {
    let mut report = RunReport::new(argv, cli.exact);
    match &cli.command {
        Command::Validate(args) => {
            let sc = load(args)?;
            report.result = validate(&sc);
            Ok(Outcome::json(&report, true))
        }
        Command::Analyze { scenario, csv } => {
            let sc = load(scenario)?;
            let params: ModelParams<S> = sc.params(scenario.rho.as_deref(), scenario.epsilon.as_deref())?;
            record_params(&mut report, &params);
            let space = general_outcomes(&sc.scenario, &params, caps)?;
            if let Some(path) = csv {
                write_file(path, &space.to_csv())?;
            }
            report.result = analyze(&sc, &space, &params)?;
            Ok(Outcome::json(&report, true))
        }
        Command::CommonBelief { scenario, p, event } => {
            let sc = load(scenario)?;
            let params: ModelParams<S> = sc.params(scenario.rho.as_deref(), scenario.epsilon.as_deref())?;
            record_params(&mut report, &params);
            let p: S = parse(p)?;
            report.param("p", p.to_wire());
            let space = general_outcomes(&sc.scenario, &params, caps)?;
            report.result = common_belief(&sc, &space, &params, &p, *event)?;
            Ok(Outcome::json(&report, true))
        }
        Command::Solve { scenario, game } => {
            let sc = load(scenario)?;
            let params: ModelParams<S> = sc.params(scenario.rho.as_deref(), scenario.epsilon.as_deref())?;
            record_params(&mut report, &params);
            let space = general_outcomes(&sc.scenario, &params, caps)?;
            let game = build_game(game, None, space.agent_count())?
                .ok_or_else(|| CliError::Invalid("--c is required".into()))?;
            report.result = json!({ "game": to_value(&game), "equilibrium": solve(&sc, &space, &game)? });
            Ok(Outcome::json(&report, true))
        }
        Command::Compare { a, b, rho, epsilon } => {
            let (sa, sb) = (scenario::load(a, false)?, scenario::load(b, false)?);
            let params: ModelParams<S> = sa.params(rho.as_deref(), epsilon.as_deref())?;
            record_params(&mut report, &params);
            let (ia, ib) = (sa.require_tree()?, sb.require_tree()?);
            let space_a = general_outcomes(&sa.scenario, &params, caps)?;
            let space_b = general_outcomes(&sb.scenario, &params, caps)?;
            report.result = to_value(&compare_trees((ia, &space_a), (ib, &space_b))?);
            Ok(Outcome::json(&report, true))
        }
        Command::Sweep {
            scenario,
            axis,
            grid,
            game,
            p,
            out,
        } => {
            let sc = load(scenario)?;
            let base: ModelParams<S> = sc.params(scenario.rho.as_deref(), scenario.epsilon.as_deref())?;
            let grid = sweep::parse_grid(grid)?;
            let spec = SweepSpec {
                scenario: &sc,
                axis: *axis,
                base,
                game,
                p: opt(p)?,
                caps: *caps,
            };
            let rows = sweep::run(&spec, &grid)?;
            let csv = sweep::to_csv(&rows);
            match out {
                None => Ok(Outcome { stdout: csv, code: 0 }),
                Some(path) => {
                    write_file(path, &csv)?;
                    record_params(&mut report, &spec.base);
                    report.param("axis", axis.name().to_string());
                    report.result = json!({ "rows": rows.len(), "csv": path.display().to_string() });
                    Ok(Outcome::json(&report, true))
                }
            }
        }
        Command::Reproduce {
            case,
            rho,
            epsilon,
            c,
        } => {
            let params = ModelParams::new(parse::<S>(rho)?, parse::<S>(epsilon)?)?;
            let c: S = parse(c)?;
            record_params(&mut report, &params);
            report.param("c", c.to_wire());
            let result = reproduce(*case, &params, c, caps)?;
            report.result = result;
            Ok(Outcome::json(&report, true))
        }
        Command::OracleCheck {
            scenario,
            general,
            case,
            rho,
            epsilon,
            trials,
            rng_seed,
            sigmas,
        } => {
            let sc = match (scenario, case) {
                (Some(path), _) => scenario::load(path, *general)?,
                (None, Some(case)) => oracle_case(*case),
                (None, None) => {
                    return Err(CliError::Invalid("pass --scenario or --case".into()));
                }
            };
            let params: ModelParams<S> = sc.params(rho.as_deref(), epsilon.as_deref())?;
            record_params(&mut report, &params);
            report.param("trials", trials.to_string());
            report.param("sigmas", sigmas.to_string());
            report.rng_seed = Some(*rng_seed);
            let exact = general_outcomes(&sc.scenario, &params, caps)?.to_f64();
            let p64 = params.to_f64();
            let sampled = match sc.single() {
                Some(info) => monte_carlo(info, &p64, *trials, *rng_seed),
                None => {
                    let parts: Vec<_> = sc
                        .scenario
                        .components()
                        .iter()
                        .map(|(w, i)| (w.to_f64(), i.clone()))
                        .collect();
                    monte_carlo_mixture(&parts, &p64, *trials, *rng_seed)?
                }
            };
            let agreement = oracle_agreement(&exact, &sampled);
            let pass = agreement.within(*sigmas);
            report.result = json!({ "pass": pass, "agreement": to_value(&agreement) });
            Ok(Outcome::json(&report, pass))
        }
        Command::EnumerateVerify {
            agents,
            rho,
            epsilon,
            p_grid,
            forest_samples,
            rng_seed,
        } => {
            let exact = ModelParams::new(parse::<Exact>(rho)?, parse::<Exact>(epsilon)?)?;
            let params = ModelParams::new(S::from_exact(&exact.rho), S::from_exact(&exact.epsilon))?;
            record_params(&mut report, &params);
            report.param("agents", agents.to_string());
            report.param("p_grid", p_grid.clone());
            report.param("forest_samples", forest_samples.to_string());
            report.rng_seed = Some(*rng_seed);
            let grid: Vec<Exact> = if p_grid.trim() == "auto" {
                p_grid_with_breakpoints(&classify_common_belief_g(&exact, *agents).breakpoints)
            } else {
                sweep::parse_grid(p_grid)?
            };
            let grid: Vec<S> = grid.iter().map(S::from_exact).collect();
            let structures = irrelevance_structures(*agents, *forest_samples, *rng_seed, caps)?;
            let verdict = verify_irrelevance(&structures, *agents, &params, &grid);
            let holds = verdict.holds();
            report.result = json!({ "holds": holds, "report": to_value(&verdict) });
            Ok(Outcome::json(&report, holds))
        }
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

fn validate(sc: &Scenario) -> Value {
    let structures: Vec<Value> = sc
        .scenario
        .components()
        .iter()
        .map(|(w, info)| {
            json!({
                "weight": w.to_wire(),
                "tree": info.is_tree(),
                "seeds": info.seeds(),
                "links": info.links(),
                "depths": info.depths().ok().map(|d| d[1..].to_vec()),
            })
        })
        .collect();
    json!({
        "valid": true,
        "agents": sc.scenario.agent_count(),
        "structures": structures,
    })
}

#[derive(Serialize)]
#[serde(bound(serialize = "S: Scalar"))]
struct AgentBeliefs<S> {
    agent: AgentId,
    #[serde(with = "diffusion_core::scalar::wire")]
    informed: S,
    /// `P[G | N_i]`.
    #[serde(with = "diffusion_core::scalar::wire")]
    good_given_uninformed: S,
    /// `P[Y* | Y_i]`.
    #[serde(with = "diffusion_core::scalar::wire")]
    all_informed_given_informed: S,
}

fn analyze<S: Scalar>(
    sc: &Scenario,
    space: &OutcomeSpace<S>,
    params: &ModelParams<S>,
) -> Result<Value, CliError> {
    let ystar = space.all_informed();
    let agents = space
        .agents()
        .map(|a| {
            Ok(AgentBeliefs {
                agent: a,
                informed: space.probability(&space.informed(a)),
                good_given_uninformed: space.conditional(&space.good(), &space.uninformed(a))?,
                all_informed_given_informed: space.conditional(&ystar, &space.informed(a))?,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let classification = sc
        .tree()
        .map(|_| to_value(&classify_common_belief_g(params, space.agent_count())));
    Ok(json!({
        "states": space.len(),
        "outcomes": space.to_rows(),
        "agents": agents,
        "all_informed": space.probability(&ystar).to_wire(),
        "common_belief_regions": classification,
    }))
}

fn common_belief<S: Scalar>(
    sc: &Scenario,
    space: &OutcomeSpace<S>,
    params: &ModelParams<S>,
    p: &S,
    event: EventArg,
) -> Result<Value, CliError> {
    let target = match event {
        EventArg::G => space.good(),
        EventArg::Ystar => space.all_informed(),
    };
    let engine = BeliefEngine::new(space);
    let cb = engine.common_p_belief(&target, p)?;
    let given_g = space.conditional(&cb.event, &space.good())?;
    let states: Vec<String> = cb.event.iter().map(|i| space.states()[i].to_string()).collect();
    let predicted = match (event, sc.tree()) {
        (EventArg::G, Some(_)) => {
            Some(to_value(classify_common_belief_g(params, space.agent_count()).region_at(p)))
        }
        _ => None,
    };
    Ok(json!({
        "event": match event { EventArg::G => "G", EventArg::Ystar => "Y*" },
        "label": cb.label,
        "probability": cb.probability.to_wire(),
        "probability_given_g": given_g.to_wire(),
        "iterations": cb.iterations,
        "states": states,
        "closed_form_region": predicted,
    }))
}

fn solve<S: Scalar>(
    sc: &Scenario,
    space: &OutcomeSpace<S>,
    game: &BinaryGame<S>,
) -> Result<Value, CliError> {
    Ok(match sc.tree() {
        Some(info) => to_value(&solve_binary_game(info, space, game)?),
        None => {
            let (shape, certified) = solve_general(space, game, &order_of(sc))?;
            json!({ "case": shape, "solution": to_value(&certified) })
        }
    })
}

fn reproduce<S: Scalar>(
    case: Case,
    params: &ModelParams<S>,
    c: S,
    caps: &Caps,
) -> Result<Value, CliError> {
    Ok(match case {
        Case::Cycle => to_value(&solve_cycle(params, c, caps)?),
        Case::Multiseed => {
            let report = solve_multiseed(params, c, caps)?;
            let lo = multiseed_uninformed_belief(params);
            let hi = report.window[1].clone();
            let steps = 20;
            let costs: Vec<S> = (1..=steps)
                .map(|k| lo.clone() + (hi.clone() - lo.clone()) * S::from_ratio(k, steps))
                .collect();
            let sweep = multiseed_sweep(params, &costs, caps)?;
            json!({ "report": to_value(&report), "window_sweep": to_value(&sweep) })
        }
        Case::Randomseed => to_value(&solve_randomseed(params, c, caps)?),
        Case::IntroLine | Case::IntroBroadcast => {
            let adoption = AdoptionParams::new(c)?;
            let infos = if case == Case::IntroLine {
                let forest = line(3)?;
                vec![
                    ("line seeded at 1", orient(&forest, &Seeding::new([1]))?),
                    ("line seeded at 2", orient(&forest, &Seeding::new([2]))?),
                ]
            } else {
                vec![("broadcast", broadcast(3)?)]
            };
            let mut out = Vec::new();
            for (name, info) in infos {
                let space = general_outcomes(&GeneralScenario::fixed(info.clone()), params, caps)?;
                let r = solve_adoption(&info, &space, &adoption)?;
                out.push(json!({ "structure": name, "equilibrium": to_value(&r) }));
            }
            Value::Array(out)
        }
    })
}

fn oracle_case(case: OracleCase) -> Scenario {
    let scenario = match case {
        OracleCase::Line3 => GeneralScenario::fixed(
            orient(&line(3).expect("line"), &Seeding::new([1])).expect("seeded line"),
        ),
        OracleCase::Star4 => GeneralScenario::fixed(
            orient(&star(4).expect("star"), &Seeding::new([1])).expect("seeded star"),
        ),
        OracleCase::Cycle4 => GeneralScenario::fixed(cycle_four()),
        OracleCase::TwoSeed => GeneralScenario::fixed(two_seed()),
        OracleCase::RandomSeed => random_seed_pair(),
    };
    Scenario {
        scenario,
        rho: Some(Exact::from_ratio(1, 2)),
        epsilon: Some(Exact::from_ratio(1, 10)),
    }
}
