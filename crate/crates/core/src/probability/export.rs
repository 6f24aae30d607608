use std::fmt::Write as _;

use serde::Serialize;

use super::OutcomeSpace;
use crate::scalar::Scalar;

/// One exported state: fundamental, per-agent signal, probability.
///
/// Signals are `y`/`n` when every agent has a single possible sender and
/// otherwise the received-source set, e.g. `y[2&4]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OutcomeRow {
    pub theta: String,
    pub signals: Vec<String>,
    pub probability: String,
}

impl<S: Scalar> OutcomeSpace<S> {
    pub fn to_rows(&self) -> Vec<OutcomeRow> {
        self.states()
            .iter()
            .zip(self.probs())
            .map(|(state, p)| OutcomeRow {
                theta: state.theta.to_string(),
                signals: state
                    .signals
                    .iter()
                    .map(|s| {
                        if self.has_binary_signals() {
                            if s.is_informed() { "y" } else { "n" }.to_string()
                        } else {
                            s.to_string()
                        }
                    })
                    .collect(),
                probability: p.to_wire(),
            })
            .collect()
    }

    /// `theta,x1,...,xI,probability` with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("theta");
        for i in 1..=self.agent_count() {
            let _ = write!(out, ",x{i}");
        }
        out.push_str(",probability\n");
        for row in self.to_rows() {
            out.push_str(&row.theta);
            for s in &row.signals {
                out.push(',');
                out.push_str(s);
            }
            out.push(',');
            out.push_str(&row.probability);
            out.push('\n');
        }
        out
    }
}
