use serde::Serialize;

use super::{IdentityId, IdentityParams};

/// Where the largest relative residual of a report occurred.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WorstPoint {
    pub lambda: f64,
    pub a: f64,
    pub omega: f64,
    pub x: f64,
    pub y: f64,
}

/// Result of checking one identity instance over a grid.
///
/// `pass` holds exactly when `max_rel_residual ≤ tolerance`, where each
/// residual is `|LHS − RHS| / max(|LHS|, |RHS|, 1)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: IdentityParams,
    pub n_samples: usize,
    pub max_abs_residual: f64,
    pub max_rel_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub worst_point: Option<WorstPoint>,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl IdentityReport {
    /// A failed report standing in for an identity that could not be evaluated.
    pub fn failed(id: IdentityId, params: IdentityParams, tolerance: f64, seed: u64, error: String) -> Self {
        Self {
            id,
            params,
            n_samples: 0,
            max_abs_residual: f64::NAN,
            max_rel_residual: f64::NAN,
            tolerance,
            pass: false,
            worst_point: None,
            seed,
            error: Some(error),
        }
    }
}
