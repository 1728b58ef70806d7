//! Degenerate exponential, trigonometric and hyperbolic functions.
//!
//! For nonzero `λ`, the degenerate exponential is
//! `e_λ^x(t) = Σ (x)_{n,λ} tⁿ/n!` with `(x)_{n,λ} = x(x−λ)…(x−(n−1)λ)`, and
//! the degenerate sine and cosine are built from `e_λ^{±xi}(a)` exactly as the
//! classical ones are built from `e^{±ix}`. On the real branch `1 + λa > 0`
//! they reduce to the classical functions at the angle `x·ω`, where
//! `ω = ln(1 + λa)/λ`.
//!
//! Besides the functions themselves the crate carries two verification
//! engines for the identities they satisfy: a floating-point residual checker
//! over pole-filtered sample grids ([`identities`]) and an exact checker in the
//! ring of truncated power series in `a` with Gaussian-rational coefficients
//! ([`series`]).

pub mod chebyshev;
pub mod error;
pub mod exponential;
pub mod identities;
pub mod series;
pub mod trig;

pub use chebyshev::{cheb_coeffs, cheb_eval, km_build, km_eval, ChebCoeffs, KmPoly};
pub use error::{DegenError, Result};
pub use exponential::{
    degen_exp_closed, degen_exp_complex, degen_exp_series, falling_factorial, falling_factorial_complex, omega,
    DegenContext, SeriesSum,
};
pub use identities::{IdentityId, IdentityParams, IdentityReport, SampleGrid};
pub use num_complex::Complex64;
pub use series::{verify_exact, ExactOutcome, FormalSeries, GaussianRational, Rational};
pub use trig::{coth_l, cos_l, cosh_l, cot_l, d_cos_l, d_sin_l, sin_l, sinh_l, tan_l, tanh_l};
