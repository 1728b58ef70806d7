use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use super::grid::{SampleGrid, SamplePoint};
use super::report::{IdentityReport, WorstPoint};
use super::{IdentityId, IdentityParams, Mutation, ParamKind};
use crate::chebyshev::{cheb_eval, cheb_odd_sum, km_build, KmPoly};
use crate::error::{DegenError, Result};
use crate::exponential::DegenContext;
use crate::trig::{cos_l, cosh_l, cot_l, d_cos_l, d_sin_l, sin_l, sinh_l, tan_l};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Step of the central differences used by the derivative identities; the
/// estimate is Richardson-refined with a second difference at half the step.
const DERIVATIVE_STEP: f64 = 1e-5;

/// The `λ` standing in for the limit `λ → 0`.
const CLASSICAL_LAMBDA: f64 = 1e-12;

/// `−(i/2^{2m−1})·e^{−mπi}·e^{iπ/2}`, times `(−1)^m` for the sine product,
/// evaluated literally in complex arithmetic.
pub fn product_prefactor(m: u32, sine: bool) -> Complex64 {
    let lead = Complex64::new(0.0, -(0.5f64.powi(2 * m as i32 - 1)));
    let p = lead * Complex64::from_polar(1.0, -f64::from(m) * PI) * Complex64::from_polar(1.0, FRAC_PI_2);
    if sine && m % 2 == 1 {
        -p
    } else {
        p
    }
}

/// Real form of [`product_prefactor`]: `(−1)^m·2^{1−2m}` for cosines,
/// `2^{1−2m}` for sines.
pub fn product_real_constant(m: u32, sine: bool) -> f64 {
    let magnitude = 0.5f64.powi(2 * m as i32 - 1);
    if !sine && m % 2 == 1 {
        -magnitude
    } else {
        magnitude
    }
}

/// The shifted arguments `t + jπ/(2mω)`, `j = 0..2m`.
fn shifted(ctx: &DegenContext, t: f64, m: u32) -> impl Iterator<Item = f64> + '_ {
    let step = PI / (2.0 * f64::from(m) * ctx.omega());
    (0..2 * m).map(move |j| t + f64::from(j) * step)
}

/// Classical angles `θ + jπ/(2m)`.
fn classical_shifted(theta: f64, m: u32) -> impl Iterator<Item = f64> {
    let step = PI / (2.0 * f64::from(m));
    (0..2 * m).map(move |j| theta + f64::from(j) * step)
}

/// Values that must stay away from zero for the identity to be evaluated
/// reliably at `pt`: denominators and log arguments.
pub(crate) fn required_denominators(id: IdentityId, params: &IdentityParams, pt: &SamplePoint) -> Result<Vec<f64>> {
    let (ctx, t) = (&pt.ctx, pt.x);
    let out = match id {
        IdentityId::LogAbsCosSum | IdentityId::TanSum | IdentityId::TanShiftRemark => {
            let m = params.require_m(id)?;
            let mut d: Vec<f64> = shifted(ctx, t, m).map(|u| cos_l(ctx, u)).collect();
            if id != IdentityId::TanShiftRemark {
                d.push(sin_l(ctx, 2.0 * f64::from(m) * t));
            }
            d
        }
        IdentityId::LogAbsSinSum | IdentityId::CotSum => {
            let m = params.require_m(id)?;
            let mut d: Vec<f64> = shifted(ctx, t, m).map(|u| sin_l(ctx, u)).collect();
            d.push(sin_l(ctx, 2.0 * f64::from(m) * t));
            d
        }
        IdentityId::ClassicalLimit => {
            let m = params.require_m(id)?;
            let theta = ctx.a() * t;
            let mut d: Vec<f64> = classical_shifted(theta, m).flat_map(|u| [u.cos(), u.sin()]).collect();
            d.push((2.0 * f64::from(m) * theta).sin());
            d
        }
        _ => Vec::new(),
    };
    Ok(out)
}

/// Central difference over the representable spacing around `x`.
fn central_difference(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
    let (hi, lo) = (x + h, x - h);
    (f(hi) - f(lo)) / (hi - lo)
}

fn richardson_derivative(f: impl Fn(f64) -> f64, x: f64) -> f64 {
    let coarse = central_difference(&f, x, DERIVATIVE_STEP);
    let fine = central_difference(&f, x, DERIVATIVE_STEP / 2.0);
    (4.0 * fine - coarse) / 3.0
}

/// Per-report state that does not depend on the sample point.
struct Prepared {
    km: Option<KmPoly>,
}

fn prepare(id: IdentityId, params: &IdentityParams) -> Result<Prepared> {
    let km = match id {
        IdentityId::SinOddProduct | IdentityId::ClassicalLimit => Some(km_build(params.require_m(id)? as usize)?),
        _ => None,
    };
    Ok(Prepared { km })
}

/// `(LHS, RHS)` for every equality the identity asserts at `pt`.
fn evaluate(
    id: IdentityId,
    params: &IdentityParams,
    prep: &Prepared,
    pt: &SamplePoint,
    mutation: Mutation,
) -> Result<Vec<(f64, f64)>> {
    let (ctx, x, y) = (&pt.ctx, pt.x, pt.y);
    let (s, c) = (sin_l(ctx, x), cos_l(ctx, x));
    let pairs = match id {
        IdentityId::Pythagorean => {
            if mutation == Mutation::PythagoreanSign {
                vec![(s * s - c * c, 1.0)]
            } else {
                vec![(s * s + c * c, 1.0)]
            }
        }
        IdentityId::DoubleAngleCos => {
            let c2 = cos_l(ctx, 2.0 * x);
            vec![(c2, 1.0 - 2.0 * s * s), (c2, 2.0 * c * c - 1.0)]
        }
        IdentityId::DoubleAngleSin => vec![(sin_l(ctx, 2.0 * x), 2.0 * s * c)],
        IdentityId::AdditionSin => {
            let (sy, cy) = (sin_l(ctx, y), cos_l(ctx, y));
            let (plus, minus) = (s * cy + c * sy, s * cy - c * sy);
            let (plus, minus) = if mutation == Mutation::AdditionSign { (minus, plus) } else { (plus, minus) };
            vec![(sin_l(ctx, x + y), plus), (sin_l(ctx, x - y), minus)]
        }
        IdentityId::AdditionCos => {
            let (sy, cy) = (sin_l(ctx, y), cos_l(ctx, y));
            vec![(cos_l(ctx, x + y), c * cy - s * sy), (cos_l(ctx, x - y), c * cy + s * sy)]
        }
        IdentityId::DerivCos => vec![(richardson_derivative(|u| cos_l(ctx, u), x), d_cos_l(ctx, x))],
        IdentityId::DerivSin => vec![(richardson_derivative(|u| sin_l(ctx, u), x), d_sin_l(ctx, x))],
        IdentityId::CosProduct | IdentityId::SinProduct => {
            let m = params.require_m(id)?;
            let sine = id == IdentityId::SinProduct;
            let product: f64 = shifted(ctx, x, m)
                .map(|u| if sine { sin_l(ctx, u) } else { cos_l(ctx, u) })
                .product();
            let mut constant = product_real_constant(m, sine);
            if mutation == Mutation::CosProductParity && !sine {
                constant = constant.abs();
            }
            let prefactor = product_prefactor(m, sine);
            vec![
                (product, constant * sin_l(ctx, 2.0 * f64::from(m) * x)),
                (prefactor.re, constant),
                (prefactor.im, 0.0),
            ]
        }
        IdentityId::LogAbsCosSum | IdentityId::LogAbsSinSum => {
            let m = params.require_m(id)?;
            let lhs = (product_real_constant(m, true) * sin_l(ctx, 2.0 * f64::from(m) * x)).abs().ln();
            let rhs: f64 = shifted(ctx, x, m)
                .map(|u| if id == IdentityId::LogAbsSinSum { sin_l(ctx, u) } else { cos_l(ctx, u) })
                .map(|v| v.abs().ln())
                .sum();
            vec![(lhs, rhs)]
        }
        IdentityId::TanSum | IdentityId::CotSum => {
            let m = params.require_m(id)?;
            let two_m = 2.0 * f64::from(m);
            let cot = cot_l(ctx, two_m * x)?;
            let mut sum = 0.0;
            for u in shifted(ctx, x, m) {
                sum += if id == IdentityId::TanSum { tan_l(ctx, u)? } else { cot_l(ctx, u)? };
            }
            let lhs = if id == IdentityId::TanSum { -two_m * cot } else { two_m * cot };
            vec![(lhs, sum)]
        }
        IdentityId::TanShiftRemark => {
            let m = params.require_m(id)?;
            let theta = x * ctx.omega();
            let mut out = Vec::with_capacity(2 * m as usize);
            for (u, phi) in shifted(ctx, x, m).zip(classical_shifted(theta, m)) {
                out.push((tan_l(ctx, u)?, phi.tan()));
            }
            out
        }
        IdentityId::TripleRecurrence => {
            let k = f64::from(params.require_k(id)?);
            let lhs = cos_l(ctx, (k + 1.0) * x) + cos_l(ctx, (k - 1.0) * x);
            vec![(lhs, 2.0 * cos_l(ctx, k * x) * c)]
        }
        IdentityId::MultiAngleCos => {
            let n = params.require_n(id)?;
            vec![(cos_l(ctx, f64::from(n) * x), cheb_eval(n as usize, c))]
        }
        IdentityId::SinTelescope => {
            let k = f64::from(params.require_k(id)?);
            let lhs = sin_l(ctx, (2.0 * k + 1.0) * x) - sin_l(ctx, (2.0 * k - 1.0) * x);
            vec![(lhs, 2.0 * cos_l(ctx, 2.0 * k * x) * s)]
        }
        IdentityId::Cos2kViaT => {
            let k = params.require_k(id)?;
            let c2k = cos_l(ctx, 2.0 * f64::from(k) * x);
            vec![
                (c2k, cheb_eval(k as usize, cos_l(ctx, 2.0 * x))),
                (c2k, cheb_eval(k as usize, 1.0 - 2.0 * s * s)),
            ]
        }
        IdentityId::SinOddSum => {
            let m = params.require_m(id)?;
            let lhs = sin_l(ctx, (2.0 * f64::from(m) + 1.0) * x);
            vec![(lhs, s * cheb_odd_sum(m as usize, 1.0 - 2.0 * s * s))]
        }
        IdentityId::SinOddProduct => {
            let m = params.require_m(id)?;
            let km = prep.km.as_ref().expect("prepared");
            vec![(sin_l(ctx, (2.0 * f64::from(m) + 1.0) * x), s * km.eval(s * s))]
        }
        IdentityId::HyperbolicUnit => {
            let (ch, sh) = (cosh_l(ctx, x)?, sinh_l(ctx, x)?);
            vec![(ch * ch, 1.0 + sh * sh)]
        }
        IdentityId::ClassicalLimit => {
            let m = params.require_m(id)?;
            let a = ctx.a();
            let near = DegenContext::new(CLASSICAL_LAMBDA, a)?;
            let theta = a * x;
            let two_m = 2.0 * f64::from(m);
            let cot = 1.0 / (two_m * theta).tan();
            let tan_sum: f64 = classical_shifted(theta, m).map(f64::tan).sum();
            let cot_sum: f64 = classical_shifted(theta, m).map(|u| 1.0 / u.tan()).sum();
            let km = prep.km.as_ref().expect("prepared");
            let st = theta.sin();
            vec![
                (cos_l(&near, x), theta.cos()),
                (sin_l(&near, x), st),
                (-two_m * cot, tan_sum),
                (two_m * cot, cot_sum),
                (((two_m + 1.0) * theta).sin(), st * km.eval(st * st)),
            ]
        }
    };
    Ok(pairs)
}

/// Checks one identity instance at every admissible point of the grid.
pub fn run_identity(id: IdentityId, params: &IdentityParams, grid: &SampleGrid, tolerance: f64) -> Result<IdentityReport> {
    run_identity_mutated(id, params, grid, tolerance, Mutation::None)
}

#[doc(hidden)]
pub fn run_identity_mutated(
    id: IdentityId,
    params: &IdentityParams,
    grid: &SampleGrid,
    tolerance: f64,
    mutation: Mutation,
) -> Result<IdentityReport> {
    let prep = prepare(id, params)?;
    let points = grid.admissible(id, params)?;
    let mut max_abs = 0.0_f64;
    let mut max_rel = 0.0_f64;
    let mut worst = None;
    for pt in &points {
        for (lhs, rhs) in evaluate(id, params, &prep, pt, mutation)? {
            let abs = (lhs - rhs).abs();
            let rel = abs / lhs.abs().max(rhs.abs()).max(1.0);
            // NaN residuals must fail the report.
            let rel = if rel.is_nan() { f64::INFINITY } else { rel };
            max_abs = max_abs.max(if abs.is_nan() { f64::INFINITY } else { abs });
            if worst.is_none() || rel > max_rel {
                max_rel = rel;
                worst = Some(WorstPoint { lambda: pt.ctx.lambda(), a: pt.ctx.a(), omega: pt.ctx.omega(), x: pt.x, y: pt.y });
            }
        }
    }
    Ok(IdentityReport {
        id,
        params: *params,
        n_samples: points.len(),
        max_abs_residual: max_abs,
        max_rel_residual: max_rel,
        tolerance,
        pass: max_rel <= tolerance,
        worst_point: worst,
        seed: grid.seed(),
        error: None,
    })
}

/// Every catalog identity over `m = 1..=max_m` and `n, k = 1..=max_n`, in
/// catalog order. Per-identity errors become failed reports.
pub fn run_all(grid: &SampleGrid, max_m: u32, max_n: u32, tolerance: f64) -> Result<Vec<IdentityReport>> {
    run_all_mutated(grid, max_m, max_n, tolerance, Mutation::None)
}

#[doc(hidden)]
pub fn run_all_mutated(
    grid: &SampleGrid,
    max_m: u32,
    max_n: u32,
    tolerance: f64,
    mutation: Mutation,
) -> Result<Vec<IdentityReport>> {
    if max_m < 1 || max_n < 1 {
        return Err(DegenError::Param(format!("max_m and max_n must be at least 1, got {max_m} and {max_n}")));
    }
    let mut reports = Vec::new();
    for id in IdentityId::ALL {
        let kind = id.param_kind();
        let range = match kind {
            ParamKind::None => 0..=0,
            ParamKind::M => 1..=max_m,
            ParamKind::N | ParamKind::K => 1..=max_n,
        };
        for v in range {
            let params = IdentityParams::for_kind(kind, v);
            let report = run_identity_mutated(id, &params, grid, tolerance, mutation)
                .unwrap_or_else(|e| IdentityReport::failed(id, params, tolerance, grid.seed(), e.to_string()));
            reports.push(report);
        }
    }
    Ok(reports)
}
