//! Scenario files.
//!
//! ```json
//! {"agents": 3, "edges": [[1, 2], [2, 3]], "seeds": [1], "rho": 0.5, "epsilon": 0.1}
//! ```
//!
//! With `--general` the edge list may contain cycles and several seeds per
//! component, `seedings` may replace `seeds` with a weighted list
//! (`[{"seeds": [1], "weight": "1/2"}, ...]`), and `links` may give the
//! directed links outright (`{"from": 0, "to": 1, "relay": "any"}`).
//! Numbers may be JSON numbers or strings such as `"1/10"`.

use std::path::Path;

use diffusion_core::extensions::{orient_general, GeneralScenario};
use diffusion_core::network::{
    build_forest, orient, InformationStructure, Link, Seeding, UndirectedGraph,
};
use diffusion_core::probability::ModelParams;
use diffusion_core::scalar::{parse_scalar, Exact, Scalar};
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Float(f64),
    Text(String),
}

impl Number {
    pub fn to_exact(&self) -> Result<Exact, CliError> {
        Ok(match self {
            Number::Float(x) => Exact::from_f64(*x)?,
            Number::Text(s) => parse_scalar(s)?,
        })
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightedSeeding {
    pub seeds: Vec<usize>,
    pub weight: Number,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub agents: usize,
    #[serde(default)]
    pub edges: Vec<(usize, usize)>,
    #[serde(default)]
    pub seeds: Vec<usize>,
    #[serde(default)]
    pub seedings: Vec<WeightedSeeding>,
    #[serde(default)]
    pub links: Option<Vec<Link>>,
    #[serde(default)]
    pub rho: Option<Number>,
    #[serde(default)]
    pub epsilon: Option<Number>,
}

#[derive(Debug, Clone)]
pub struct Scenario {
    pub scenario: GeneralScenario,
    pub rho: Option<Exact>,
    pub epsilon: Option<Exact>,
}

impl Scenario {
    /// The structure when there is no seeding mixture.
    pub fn single(&self) -> Option<&InformationStructure> {
        match self.scenario.components() {
            [(_, info)] => Some(info),
            _ => None,
        }
    }

    /// The structure when it is a seeded forest.
    pub fn tree(&self) -> Option<&InformationStructure> {
        self.single().filter(|i| i.is_tree())
    }

    pub fn require_tree(&self) -> Result<&InformationStructure, CliError> {
        self.tree().ok_or_else(|| {
            CliError::Invalid("this command needs a seeded forest (one in-link per agent)".into())
        })
    }

    /// Parameters from the command line, falling back to the file.
    pub fn params<S: Scalar>(
        &self,
        rho: Option<&str>,
        epsilon: Option<&str>,
    ) -> Result<ModelParams<S>, CliError> {
        let rho = resolve("rho", rho, self.rho.as_ref())?;
        let epsilon = resolve("epsilon", epsilon, self.epsilon.as_ref())?;
        Ok(ModelParams::new(rho, epsilon)?)
    }
}

fn resolve<S: Scalar>(name: &str, flag: Option<&str>, file: Option<&Exact>) -> Result<S, CliError> {
    match (flag, file) {
        (Some(s), _) => Ok(parse_scalar(s)?),
        (None, Some(x)) => Ok(S::from_exact(x)),
        (None, None) => Err(CliError::Invalid(format!(
            "{name} is missing: pass --{name} or set it in the scenario file"
        ))),
    }
}

pub fn read(path: &Path) -> Result<ScenarioFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Invalid(format!("{}: {e}", path.display())))
}

pub fn load(path: &Path, general: bool) -> Result<Scenario, CliError> {
    build(read(path)?, general)
}

pub fn build(file: ScenarioFile, general: bool) -> Result<Scenario, CliError> {
    let rho = file.rho.as_ref().map(Number::to_exact).transpose()?;
    let epsilon = file.epsilon.as_ref().map(Number::to_exact).transpose()?;
    let scenario = if general {
        build_general(&file)?
    } else {
        if file.links.is_some() || !file.seedings.is_empty() {
            return Err(CliError::Invalid(
                "`links` and `seedings` need --general".into(),
            ));
        }
        let forest = build_forest(file.agents, &file.edges)?;
        GeneralScenario::fixed(orient(&forest, &Seeding::new(file.seeds.iter().copied()))?)
    };
    Ok(Scenario {
        scenario,
        rho,
        epsilon,
    })
}

fn build_general(file: &ScenarioFile) -> Result<GeneralScenario, CliError> {
    if let Some(links) = &file.links {
        if !file.edges.is_empty() || !file.seeds.is_empty() || !file.seedings.is_empty() {
            return Err(CliError::Invalid(
                "give either `links` or `edges` with seeds, not both".into(),
            ));
        }
        return Ok(GeneralScenario::fixed(InformationStructure::new(
            file.agents,
            links.clone(),
        )?));
    }
    let graph = UndirectedGraph::new(file.agents, &file.edges)?;
    if file.seedings.is_empty() {
        return Ok(GeneralScenario::fixed(orient_general(
            &graph,
            &Seeding::new(file.seeds.iter().copied()),
        )?));
    }
    if !file.seeds.is_empty() {
        return Err(CliError::Invalid("give either `seeds` or `seedings`, not both".into()));
    }
    let components = file
        .seedings
        .iter()
        .map(|s| {
            let info = orient_general(&graph, &Seeding::new(s.seeds.iter().copied()))?;
            Ok((s.weight.to_exact()?, info))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(GeneralScenario::random(components)?)
}
