use std::collections::BTreeMap;

use serde::Serialize;

/// Everything a run prints as JSON. Identical inputs give identical bytes.
#[derive(Debug, Serialize)]
pub struct RunReport {
    /// Arguments after the program name.
    pub command: Vec<String>,
    pub arithmetic: &'static str,
    /// Resolved parameters in wire format.
    pub parameters: BTreeMap<&'static str, String>,
    pub result: serde_json::Value,
    pub engine_version: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rng_seed: Option<u64>,
}

impl RunReport {
    pub fn new(command: Vec<String>, exact: bool) -> Self {
        RunReport {
            command,
            arithmetic: if exact { "exact" } else { "float" },
            parameters: BTreeMap::new(),
            result: serde_json::Value::Null,
            engine_version: env!("CARGO_PKG_VERSION"),
            rng_seed: None,
        }
    }

    pub fn param(&mut self, name: &'static str, value: String) {
        self.parameters.insert(name, value);
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
