//! Catalog of the degenerate trigonometric identities and the residual engine
//! that checks them over pole-aware sample grids.

mod grid;
mod report;
mod runner;
mod sweep;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{DegenError, Result};

pub use grid::{default_contexts, SampleGrid, SamplePoint, DEFAULT_POINTS, DEFAULT_POLE_MARGIN};
pub use report::{IdentityReport, WorstPoint};
pub use runner::{
    product_prefactor, product_real_constant, run_all, run_all_mutated, run_identity, run_identity_mutated,
    DEFAULT_TOLERANCE,
};
pub use sweep::{
    central_difference_errors, classical_limit_sweep, default_sweep_lambdas, fit_log_log_slope, SweepResult,
};

/// Whether an identity can be checked coefficient-exactly in the series ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    FloatOnly,
    ExactCapable,
}

/// The integer parameter an identity is indexed by, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    None,
    M,
    N,
    K,
}

/// Every checkable identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    Pythagorean,
    DoubleAngleCos,
    DoubleAngleSin,
    AdditionSin,
    AdditionCos,
    DerivCos,
    DerivSin,
    CosProduct,
    SinProduct,
    LogAbsCosSum,
    LogAbsSinSum,
    TanSum,
    CotSum,
    TanShiftRemark,
    TripleRecurrence,
    MultiAngleCos,
    SinTelescope,
    Cos2kViaT,
    SinOddSum,
    SinOddProduct,
    HyperbolicUnit,
    ClassicalLimit,
}

impl IdentityId {
    /// Catalog order; reports are always emitted in this order.
    pub const ALL: [IdentityId; 22] = [
        IdentityId::Pythagorean,
        IdentityId::DoubleAngleCos,
        IdentityId::DoubleAngleSin,
        IdentityId::AdditionSin,
        IdentityId::AdditionCos,
        IdentityId::DerivCos,
        IdentityId::DerivSin,
        IdentityId::CosProduct,
        IdentityId::SinProduct,
        IdentityId::LogAbsCosSum,
        IdentityId::LogAbsSinSum,
        IdentityId::TanSum,
        IdentityId::CotSum,
        IdentityId::TanShiftRemark,
        IdentityId::TripleRecurrence,
        IdentityId::MultiAngleCos,
        IdentityId::SinTelescope,
        IdentityId::Cos2kViaT,
        IdentityId::SinOddSum,
        IdentityId::SinOddProduct,
        IdentityId::HyperbolicUnit,
        IdentityId::ClassicalLimit,
    ];

    pub fn name(self) -> &'static str {
        use IdentityId::*;
        match self {
            Pythagorean => "PYTHAGOREAN",
            DoubleAngleCos => "DOUBLE_ANGLE_COS",
            DoubleAngleSin => "DOUBLE_ANGLE_SIN",
            AdditionSin => "ADDITION_SIN",
            AdditionCos => "ADDITION_COS",
            DerivCos => "DERIV_COS",
            DerivSin => "DERIV_SIN",
            CosProduct => "COS_PRODUCT",
            SinProduct => "SIN_PRODUCT",
            LogAbsCosSum => "LOG_ABS_COS_SUM",
            LogAbsSinSum => "LOG_ABS_SIN_SUM",
            TanSum => "TAN_SUM",
            CotSum => "COT_SUM",
            TanShiftRemark => "TAN_SHIFT_REMARK",
            TripleRecurrence => "TRIPLE_RECURRENCE",
            MultiAngleCos => "MULTI_ANGLE_COS",
            SinTelescope => "SIN_TELESCOPE",
            Cos2kViaT => "COS2K_VIA_T",
            SinOddSum => "SIN_ODD_SUM",
            SinOddProduct => "SIN_ODD_PRODUCT",
            HyperbolicUnit => "HYPERBOLIC_UNIT",
            ClassicalLimit => "CLASSICAL_LIMIT",
        }
    }

    /// The statement being checked, with `s = sin_λ(x:a)`, `c = cos_λ(x:a)`,
    /// `ω = log e_λ(a)` and `τ_j = t + jπ/(2mω)`.
    pub fn formula(self) -> &'static str {
        use IdentityId::*;
        match self {
            Pythagorean => "s^2 + c^2 = 1",
            DoubleAngleCos => "cos_l(2x) = 1 - 2s^2 = 2c^2 - 1",
            DoubleAngleSin => "sin_l(2x) = 2sc",
            AdditionSin => "sin_l(x +- y) = sin_l(x)cos_l(y) +- cos_l(x)sin_l(y)",
            AdditionCos => "cos_l(x +- y) = cos_l(x)cos_l(y) -+ sin_l(x)sin_l(y)",
            DerivCos => "d/dx cos_l(x) = -omega sin_l(x)",
            DerivSin => "d/dx sin_l(x) = omega cos_l(x)",
            CosProduct => "prod_{j<2m} cos_l(tau_j) = (-1)^m 2^(1-2m) sin_l(2mt)",
            SinProduct => "prod_{j<2m} sin_l(tau_j) = 2^(1-2m) sin_l(2mt)",
            LogAbsCosSum => "log|2^(1-2m) sin_l(2mt)| = sum_{j<2m} log|cos_l(tau_j)|",
            LogAbsSinSum => "log|2^(1-2m) sin_l(2mt)| = sum_{j<2m} log|sin_l(tau_j)|",
            TanSum => "-2m cot_l(2mt) = sum_{j<2m} tan_l(tau_j)",
            CotSum => "2m cot_l(2mt) = sum_{j<2m} cot_l(tau_j)",
            TanShiftRemark => "tan_l(tau_j) = tan(t omega + j pi/(2m))",
            TripleRecurrence => "cos_l((k+1)x) + cos_l((k-1)x) = 2 cos_l(kx) c",
            MultiAngleCos => "cos_l(nx) = T_n(c)",
            SinTelescope => "sin_l((2k+1)x) - sin_l((2k-1)x) = 2 cos_l(2kx) s",
            Cos2kViaT => "cos_l(2kx) = T_k(cos_l(2x)) = T_k(1 - 2s^2)",
            SinOddSum => "sin_l((2m+1)x) = s (1 + 2 sum_{k=1}^m T_k(1 - 2s^2))",
            SinOddProduct => "sin_l((2m+1)x) = (2m+1) s prod_{k=1}^m (1 - s^2/sin^2(k pi/(2m+1)))",
            HyperbolicUnit => "cosh_l(x)^2 - sinh_l(x)^2 = 1",
            ClassicalLimit => "lambda -> 0: cos_l(x) -> cos(ax), sin_l(x) -> sin(ax); classical multiple-angle formulas",
        }
    }

    /// Number of continuous free variables sampled per point.
    pub fn arity(self) -> usize {
        match self {
            IdentityId::AdditionSin | IdentityId::AdditionCos => 2,
            _ => 1,
        }
    }

    pub fn exactness(self) -> Exactness {
        use IdentityId::*;
        match self {
            Pythagorean | DoubleAngleCos | DoubleAngleSin | AdditionSin | AdditionCos | TripleRecurrence
            | MultiAngleCos | SinTelescope | Cos2kViaT | SinOddSum | HyperbolicUnit => Exactness::ExactCapable,
            _ => Exactness::FloatOnly,
        }
    }

    pub fn is_exact_capable(self) -> bool {
        self.exactness() == Exactness::ExactCapable
    }

    pub fn param_kind(self) -> ParamKind {
        use IdentityId::*;
        match self {
            CosProduct | SinProduct | LogAbsCosSum | LogAbsSinSum | TanSum | CotSum | TanShiftRemark | SinOddSum
            | SinOddProduct | ClassicalLimit => ParamKind::M,
            MultiAngleCos => ParamKind::N,
            TripleRecurrence | SinTelescope | Cos2kViaT => ParamKind::K,
            _ => ParamKind::None,
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = DegenError;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| DegenError::InvalidArgument(format!("unknown identity {s:?}")))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Integer parameters of an identity instance.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct IdentityParams {
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub k: Option<u32>,
}

impl IdentityParams {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn with_m(m: u32) -> Self {
        Self { m: Some(m), ..Self::default() }
    }

    pub fn with_n(n: u32) -> Self {
        Self { n: Some(n), ..Self::default() }
    }

    pub fn with_k(k: u32) -> Self {
        Self { k: Some(k), ..Self::default() }
    }

    /// The single parameter of `kind` with value `v`.
    pub fn for_kind(kind: ParamKind, v: u32) -> Self {
        match kind {
            ParamKind::None => Self::none(),
            ParamKind::M => Self::with_m(v),
            ParamKind::N => Self::with_n(v),
            ParamKind::K => Self::with_k(v),
        }
    }

    fn require(value: Option<u32>, name: &str, id: IdentityId, min: u32) -> Result<u32> {
        match value {
            Some(v) if v >= min => Ok(v),
            Some(v) => Err(DegenError::Param(format!("{id} needs {name} >= {min}, got {v}"))),
            None => Err(DegenError::Param(format!("{id} needs parameter {name}"))),
        }
    }

    pub fn require_m(&self, id: IdentityId) -> Result<u32> {
        Self::require(self.m, "m", id, 1)
    }

    pub fn require_n(&self, id: IdentityId) -> Result<u32> {
        Self::require(self.n, "n", id, 0)
    }

    pub fn require_k(&self, id: IdentityId) -> Result<u32> {
        Self::require(self.k, "k", id, 1)
    }
}

/// Deliberate single-sign faults for checking that the harness notices wrong
/// identities.
#[doc(hidden)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mutation {
    #[default]
    None,
    /// Float: `s² − c² = 1`. Exact: the cosine is built from `e^{xi}` twice.
    PythagoreanSign,
    /// `COS_PRODUCT` loses its `(−1)^m`.
    CosProductParity,
    /// The `±` of the sine addition formula is flipped.
    AdditionSign,
}
