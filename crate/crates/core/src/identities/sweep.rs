use serde::Serialize;

use crate::error::{DegenError, Result};
use crate::exponential::{ensure_finite, omega, DegenContext};
use crate::trig::{cos_l, d_cos_l, d_sin_l, sin_l};

/// `λ = 2⁻³, 2⁻⁴, …, 2⁻¹⁵`.
pub fn default_sweep_lambdas() -> Vec<f64> {
    (3..=15).map(|k| 0.5f64.powi(k)).collect()
}

/// Distance of the degenerate sine/cosine from their classical limits along a `λ` sequence.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub lambdas: Vec<f64>,
    /// `|cos_λ(x:a) − cos(ax)| + |sin_λ(x:a) − sin(ax)|` per `λ`.
    pub errors: Vec<f64>,
    /// Least-squares slope of `ln error` against `ln λ`; `None` when fewer
    /// than two errors are nonzero.
    pub fitted_slope: Option<f64>,
}

pub fn classical_limit_sweep(x: f64, a: f64, lambdas: &[f64]) -> Result<SweepResult> {
    ensure_finite("x", x)?;
    ensure_finite("a", a)?;
    let (ca, sa) = ((a * x).cos(), (a * x).sin());
    let mut errors = Vec::with_capacity(lambdas.len());
    for &lambda in lambdas {
        if lambda.is_nan() || lambda <= 0.0 {
            return Err(DegenError::Domain(format!("sweep values of lambda must be positive, got {lambda}")));
        }
        let angle = x * omega(lambda, a)?;
        errors.push((angle.cos() - ca).abs() + (angle.sin() - sa).abs());
    }
    let fitted_slope = fit_log_log_slope(lambdas, &errors);
    Ok(SweepResult { lambdas: lambdas.to_vec(), errors, fitted_slope })
}

/// Least-squares slope of `ln ys` on `ln xs` over the pairs with both positive.
pub fn fit_log_log_slope(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = xs
        .iter()
        .zip(ys)
        .filter(|(x, y)| **x > 0.0 && **y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

/// `|central difference − analytic derivative|` of `sin_λ` (or `cos_λ`) at `x`
/// for each step in `steps`.
pub fn central_difference_errors(ctx: &DegenContext, x: f64, steps: &[f64], sine: bool) -> Vec<f64> {
    let f = |u: f64| if sine { sin_l(ctx, u) } else { cos_l(ctx, u) };
    let exact = if sine { d_sin_l(ctx, x) } else { d_cos_l(ctx, x) };
    steps
        .iter()
        .map(|&h| {
            let (hi, lo) = (x + h, x - h);
            ((f(hi) - f(lo)) / (hi - lo) - exact).abs()
        })
        .collect()
}
