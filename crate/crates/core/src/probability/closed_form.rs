use serde::{Deserialize, Serialize};

use super::{ModelParams, ProbabilityError};
use crate::scalar::Scalar;

/// Posteriors along a root-to-leaf path that depend only on the position
/// `k` of an agent on the path (the seed is `k = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClosedForm {
    /// `P[G | N_k] = ρ(1-(1-ε)^k) / (1-ρ(1-ε)^k)`.
    GGivenNK,
    /// `P[Y_{k-1} | N_k] = ρ(1-ε)^(k-1) ε / (1-ρ(1-ε)^k)`, with `Y_0 = G`.
    PrevYGivenNK,
    /// `P[Y* | Y_k] = (1-ε)^(I-k)`.
    YstarGivenYK,
    /// `P[Y* | G] = (1-ε)^I`.
    YstarGivenG,
    /// `P[Y* | Y_1] = (1-ε)^(I-1)`.
    YstarGivenY1,
}

pub fn closed_form<S: Scalar>(
    quantity: ClosedForm,
    k: usize,
    params: &ModelParams<S>,
    agent_count: usize,
) -> Result<S, ProbabilityError> {
    if k < 1 || k > agent_count {
        return Err(ProbabilityError::BadIndex { k, agent_count });
    }
    let rho = params.rho.clone();
    let eps = params.epsilon.clone();
    let q = params.delivery();
    let reach_k = rho.clone() * q.powi(k);
    Ok(match quantity {
        ClosedForm::GGivenNK => {
            rho * (S::one() - q.powi(k)) / (S::one() - reach_k)
        }
        ClosedForm::PrevYGivenNK => rho * q.powi(k - 1) * eps / (S::one() - reach_k),
        ClosedForm::YstarGivenYK => q.powi(agent_count - k),
        ClosedForm::YstarGivenG => q.powi(agent_count),
        ClosedForm::YstarGivenY1 => q.powi(agent_count - 1),
    })
}

/// Loss rate at which an uninformed seed's belief in `G` equals an
/// informed seed's belief that everyone is informed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EpsilonBar {
    pub value: f64,
    /// `|P[G|N_1] - P[Y*|Y_1]|` at `value`.
    pub residual: f64,
    /// No interior root: with one agent `P[Y*|Y_1] = 1` for every `ε`.
    pub degenerate: bool,
}

fn gap(eps: f64, rho: f64, agent_count: usize) -> f64 {
    rho * eps / (1.0 - rho * (1.0 - eps)) - (1.0 - eps).powi(agent_count as i32 - 1)
}

/// Bisection for the root of `ρε/(1-ρ(1-ε)) = (1-ε)^(I-1)` on `(0, 1)`.
///
/// The left side increases and the right side decreases in `ε`, so the
/// root is unique.
pub fn epsilon_bar(agent_count: usize, rho: f64) -> EpsilonBar {
    if agent_count <= 1 {
        return EpsilonBar {
            value: 1.0,
            residual: gap(1.0, rho, 1).abs(),
            degenerate: true,
        };
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if gap(mid, rho, agent_count) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let value = if gap(lo, rho, agent_count).abs() <= gap(hi, rho, agent_count).abs() {
        lo
    } else {
        hi
    };
    EpsilonBar {
        value,
        residual: gap(value, rho, agent_count).abs(),
        degenerate: false,
    }
}
