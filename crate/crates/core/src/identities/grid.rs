use std::f64::consts::{E, PI};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::runner::required_denominators;
use super::{IdentityId, IdentityParams};
use crate::error::{DegenError, Result};
use crate::exponential::DegenContext;

pub const DEFAULT_POLE_MARGIN: f64 = 1e-3;

/// Raw points per context before pole filtering.
pub const DEFAULT_POINTS: usize = 96;

/// Reciprocal powers of the plastic number drive the 2-D additive recurrence.
const PLASTIC: f64 = 1.324_717_957_244_746;

/// Every `(λ, a)` in `{±0.5, ±0.1, 1, 2} × {0.3, 1, e−1, 2.5}` with `1 + λa > 0`.
pub fn default_contexts() -> Vec<DegenContext> {
    let lambdas = [0.5, -0.5, 0.1, -0.1, 1.0, 2.0];
    let args = [0.3, 1.0, E - 1.0, 2.5];
    lambdas
        .iter()
        .flat_map(|&l| args.iter().filter_map(move |&a| DegenContext::new(l, a).ok()))
        .collect()
}

/// One evaluation site: `x` (and `y` for two-variable identities) in a context.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplePoint {
    pub ctx: DegenContext,
    pub x: f64,
    pub y: f64,
}

/// Deterministic quasi-random sample sites over a set of contexts.
///
/// Points are stored as fractions in `(−1, 1)` of a half period and scaled to
/// `x ∈ (−π/ω, π/ω)` per context, so each context sees a full period of its
/// angle `x·ω`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleGrid {
    x_points: Vec<f64>,
    y_points: Vec<f64>,
    contexts: Vec<DegenContext>,
    pole_margin: f64,
    seed: u64,
}

impl SampleGrid {
    pub fn new(contexts: Vec<DegenContext>, points: usize, pole_margin: f64, seed: u64) -> Result<Self> {
        if contexts.is_empty() || points == 0 {
            return Err(DegenError::InvalidArgument("a sample grid needs contexts and points".into()));
        }
        if !(pole_margin.is_finite() && pole_margin >= 0.0) {
            return Err(DegenError::InvalidArgument(format!("invalid pole margin {pole_margin}")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (off_x, off_y): (f64, f64) = (rng.gen(), rng.gen());
        let (step_x, step_y) = (1.0 / PLASTIC, 1.0 / (PLASTIC * PLASTIC));
        let unit = |offset: f64, step: f64, i: usize| 2.0 * (offset + step * (i + 1) as f64).fract() - 1.0;
        let x_points = (0..points).map(|i| unit(off_x, step_x, i)).collect();
        let y_points = (0..points).map(|i| unit(off_y, step_y, i)).collect();
        Ok(Self { x_points, y_points, contexts, pole_margin, seed })
    }

    /// The standard context table with default density and pole margin.
    pub fn default_table(seed: u64) -> Self {
        Self::new(default_contexts(), DEFAULT_POINTS, DEFAULT_POLE_MARGIN, seed).expect("default grid is valid")
    }

    pub fn with_pole_margin(mut self, pole_margin: f64) -> Result<Self> {
        if !(pole_margin.is_finite() && pole_margin >= 0.0) {
            return Err(DegenError::InvalidArgument(format!("invalid pole margin {pole_margin}")));
        }
        self.pole_margin = pole_margin;
        Ok(self)
    }

    pub fn x_points(&self) -> &[f64] {
        &self.x_points
    }

    pub fn y_points(&self) -> &[f64] {
        &self.y_points
    }

    pub fn contexts(&self) -> &[DegenContext] {
        &self.contexts
    }

    pub fn pole_margin(&self) -> f64 {
        self.pole_margin
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Every site before pole filtering, context-major.
    pub fn points(&self) -> impl Iterator<Item = SamplePoint> + '_ {
        self.contexts.iter().flat_map(move |ctx| {
            let half_period = PI / ctx.omega();
            self.x_points.iter().zip(&self.y_points).map(move |(&u, &v)| SamplePoint {
                ctx: *ctx,
                x: u * half_period,
                y: v * half_period,
            })
        })
    }

    /// Sites where every denominator and log argument of the identity has
    /// magnitude at least the pole margin.
    pub fn admissible(&self, id: IdentityId, params: &IdentityParams) -> Result<Vec<SamplePoint>> {
        let mut out = Vec::new();
        for pt in self.points() {
            let dens = required_denominators(id, params, &pt)?;
            if dens.iter().all(|d| d.abs() >= self.pole_margin) {
                out.push(pt);
            }
        }
        if out.is_empty() {
            return Err(DegenError::EmptyGrid(id));
        }
        Ok(out)
    }
}
