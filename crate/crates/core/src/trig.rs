//! Degenerate trigonometric and hyperbolic functions.
//!
//! On the real branch `e_λ^{±xi}(a) = exp(±i·x·ω)`, so every function here is
//! its classical counterpart evaluated at the angle `x·ω`. The literal
//! exponential definitions are kept in [`cos_l_definition`] and
//! [`sin_l_definition`] for consistency checks.
//!
//! Quotients only report a pole when the denominator is exactly zero;
//! conditioning degrades sharply near poles and callers are expected to keep
//! their own margin.

use num_complex::Complex64;

use crate::error::{DegenError, Result};
use crate::exponential::{degen_exp_complex, degen_exp_closed, DegenContext};

pub fn cos_l(ctx: &DegenContext, x: f64) -> f64 {
    (x * ctx.omega()).cos()
}

pub fn sin_l(ctx: &DegenContext, x: f64) -> f64 {
    (x * ctx.omega()).sin()
}

fn quotient(function: &'static str, x: f64, num: f64, den: f64) -> Result<f64> {
    if den == 0.0 {
        Err(DegenError::Pole { function, x })
    } else {
        Ok(num / den)
    }
}

pub fn tan_l(ctx: &DegenContext, x: f64) -> Result<f64> {
    let (s, c) = (x * ctx.omega()).sin_cos();
    quotient("tan", x, s, c)
}

pub fn cot_l(ctx: &DegenContext, x: f64) -> Result<f64> {
    let (s, c) = (x * ctx.omega()).sin_cos();
    quotient("cot", x, c, s)
}

fn finite(function: &str, x: f64, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(DegenError::Domain(format!("{function}_lambda overflows at x = {x}")))
    }
}

pub fn cosh_l(ctx: &DegenContext, x: f64) -> Result<f64> {
    finite("cosh", x, (x * ctx.omega()).cosh())
}

pub fn sinh_l(ctx: &DegenContext, x: f64) -> Result<f64> {
    finite("sinh", x, (x * ctx.omega()).sinh())
}

pub fn tanh_l(ctx: &DegenContext, x: f64) -> Result<f64> {
    quotient("tanh", x, sinh_l(ctx, x)?, cosh_l(ctx, x)?)
}

/// Pole at `x = 0`.
pub fn coth_l(ctx: &DegenContext, x: f64) -> Result<f64> {
    quotient("coth", x, cosh_l(ctx, x)?, sinh_l(ctx, x)?)
}

/// `d/dx cos_λ(x:a) = −ω·sin_λ(x:a)`.
pub fn d_cos_l(ctx: &DegenContext, x: f64) -> f64 {
    -ctx.omega() * sin_l(ctx, x)
}

/// `d/dx sin_λ(x:a) = ω·cos_λ(x:a)`.
pub fn d_sin_l(ctx: &DegenContext, x: f64) -> f64 {
    ctx.omega() * cos_l(ctx, x)
}

/// `(e_λ^{xi}(a) + e_λ^{−xi}(a))/2`, evaluated in complex arithmetic.
pub fn cos_l_definition(ctx: &DegenContext, x: f64) -> Result<Complex64> {
    let plus = degen_exp_complex(Complex64::new(0.0, x), ctx.lambda(), ctx.a())?;
    let minus = degen_exp_complex(Complex64::new(0.0, -x), ctx.lambda(), ctx.a())?;
    Ok((plus + minus) / 2.0)
}

/// `(e_λ^{xi}(a) − e_λ^{−xi}(a))/2i`, evaluated in complex arithmetic.
pub fn sin_l_definition(ctx: &DegenContext, x: f64) -> Result<Complex64> {
    let plus = degen_exp_complex(Complex64::new(0.0, x), ctx.lambda(), ctx.a())?;
    let minus = degen_exp_complex(Complex64::new(0.0, -x), ctx.lambda(), ctx.a())?;
    Ok((plus - minus) / Complex64::new(0.0, 2.0))
}

/// `(e_λ^x(a) + e_λ^{−x}(a))/2` from the real closed form.
pub fn cosh_l_definition(ctx: &DegenContext, x: f64) -> Result<f64> {
    Ok((degen_exp_closed(x, ctx.lambda(), ctx.a())? + degen_exp_closed(-x, ctx.lambda(), ctx.a())?) / 2.0)
}

/// `(e_λ^x(a) − e_λ^{−x}(a))/2` from the real closed form.
pub fn sinh_l_definition(ctx: &DegenContext, x: f64) -> Result<f64> {
    Ok((degen_exp_closed(x, ctx.lambda(), ctx.a())? - degen_exp_closed(-x, ctx.lambda(), ctx.a())?) / 2.0)
}
