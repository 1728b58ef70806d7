//! Generalized falling factorials and degenerate exponentials.
//!
//! The degenerate exponential `e_λ^x(t) = Σ (x)_{n,λ} tⁿ/n!` sums to
//! `(1 + λt)^{x/λ}` on the real branch `1 + λt > 0`. Both evaluation paths are
//! exposed so that each can serve as an oracle for the other.

use num_complex::Complex64;

use crate::error::{DegenError, Result};

/// Below this `|λa|` the frequency is summed from its alternating series.
const OMEGA_SERIES_SWITCH: f64 = 1e-4;

/// Largest `|x/λ|` for which the closed form uses repeated multiplication.
const MAX_INTEGER_POWER: f64 = 64.0;

pub(crate) fn ensure_finite(name: &str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(DegenError::Domain(format!("{name} must be finite, got {value}")))
    }
}

fn ensure_branch(lambda: f64, t: f64) -> Result<()> {
    ensure_finite("lambda", lambda)?;
    ensure_finite("t", t)?;
    if lambda == 0.0 {
        return Err(DegenError::Domain(
            "lambda must be nonzero (pass a directly for the classical limit)".into(),
        ));
    }
    if lambda * t <= -1.0 {
        return Err(DegenError::Domain(format!(
            "1 + lambda*t must be positive, got 1 + ({lambda})*({t}) = {}",
            1.0 + lambda * t
        )));
    }
    Ok(())
}

/// `(x)_{n,λ} = x(x-λ)(x-2λ)…(x-(n-1)λ)`, with `(x)_{0,λ} = 1`.
pub fn falling_factorial(x: f64, n: u32, lambda: f64) -> f64 {
    (0..n).map(|j| x - f64::from(j) * lambda).product()
}

/// The generalized falling factorial of a complex argument.
pub fn falling_factorial_complex(z: Complex64, n: u32, lambda: f64) -> Complex64 {
    (0..n).fold(Complex64::new(1.0, 0.0), |acc, j| {
        acc * (z - Complex64::new(f64::from(j) * lambda, 0.0))
    })
}

/// `1 - u/2 + u²/3 - …`, i.e. `ln(1+u)/u`, for small `|u|`.
fn log1p_ratio_series(u: f64) -> f64 {
    let mut sum = 1.0;
    let mut power = 1.0;
    for k in 2..64 {
        power *= -u;
        let term = power / f64::from(k);
        sum += term;
        if term.abs() <= f64::EPSILON * 0.5 * sum.abs() {
            break;
        }
    }
    sum
}

/// The degenerate frequency `ω = log e_λ(a) = ln(1 + λa)/λ`.
///
/// Accurate as `λ → 0`, where it tends to `a`. Fails with a domain error when
/// `λ = 0` or `1 + λa ≤ 0`.
pub fn omega(lambda: f64, a: f64) -> Result<f64> {
    ensure_branch(lambda, a)?;
    let u = lambda * a;
    if u.abs() < OMEGA_SERIES_SWITCH {
        Ok(a * log1p_ratio_series(u))
    } else {
        Ok(u.ln_1p() / lambda)
    }
}

/// Closed form `e_λ^x(t) = (1 + λt)^{x/λ} = exp(x·ω(λ, t))`.
///
/// When `x/λ` is a small integer the power is formed by repeated
/// multiplication, which is exact whenever `1 + λt` and its powers are
/// representable.
pub fn degen_exp_closed(x: f64, lambda: f64, t: f64) -> Result<f64> {
    ensure_finite("x", x)?;
    let w = omega(lambda, t)?;
    if x == 0.0 {
        return Ok(1.0);
    }
    let k = x / lambda;
    if k.fract() == 0.0 && k.abs() <= MAX_INTEGER_POWER && k * lambda == x {
        return Ok((1.0 + lambda * t).powi(k as i32));
    }
    let value = (x * w).exp();
    ensure_finite("e_lambda^x(t)", value)?;
    Ok(value)
}

/// Partial sum of the defining series together with truncation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: f64,
    /// Magnitude of the last term added to `value`.
    pub last_term_magnitude: f64,
    /// Number of terms summed (`n = 0..terms`).
    pub terms: u32,
    /// The falling factorial vanished, so the sum is the full series.
    pub terminated: bool,
    /// `|λt| ≥ 1` and the series did not terminate: outside the radius of convergence.
    pub convergence_warning: bool,
}

/// Sums `Σ_{n} (x)_{n,λ} tⁿ/n!` term by term.
///
/// Stops when a term is exactly zero, when `|term| ≤ 2⁻⁵³·|sum|`, or after
/// `max_terms` terms.
pub fn degen_exp_series(x: f64, lambda: f64, t: f64, max_terms: u32) -> Result<SeriesSum> {
    ensure_finite("x", x)?;
    ensure_finite("lambda", lambda)?;
    ensure_finite("t", t)?;
    if max_terms == 0 {
        return Err(DegenError::InvalidArgument("max_terms must be at least 1".into()));
    }
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut last = 1.0_f64;
    let mut terms = 1;
    let mut terminated = false;
    while terms < max_terms {
        let n = terms;
        term = term * (x - f64::from(n - 1) * lambda) * t / f64::from(n);
        if term == 0.0 {
            terminated = true;
            break;
        }
        sum += term;
        last = term.abs();
        terms += 1;
        if last <= f64::EPSILON * 0.5 * sum.abs() {
            break;
        }
    }
    Ok(SeriesSum {
        value: sum,
        last_term_magnitude: last,
        terms,
        terminated,
        convergence_warning: !terminated && (lambda * t).abs() >= 1.0,
    })
}

/// `e_λ^z(t) = exp(z·ω(λ, t))` for a complex exponent on the principal real branch.
pub fn degen_exp_complex(z: Complex64, lambda: f64, t: f64) -> Result<Complex64> {
    ensure_finite("Re z", z.re)?;
    ensure_finite("Im z", z.im)?;
    let w = omega(lambda, t)?;
    let value = (z * w).exp();
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(DegenError::Domain(format!("e_lambda^z(t) overflows for z = {z}")))
    }
}

/// A validated `(λ, a)` pair and its degenerate frequency `ω`.
///
/// Every degenerate trigonometric and hyperbolic function is evaluated in
/// one of these. Invariants: `λ ≠ 0`, `a ≠ 0`, `1 + λa > 0`, and `ω` finite,
/// nonzero and of the same sign as `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegenContext {
    lambda: f64,
    a: f64,
    omega: f64,
}

impl DegenContext {
    pub fn new(lambda: f64, a: f64) -> Result<Self> {
        ensure_finite("a", a)?;
        if a == 0.0 {
            return Err(DegenError::Domain("a must be nonzero".into()));
        }
        let omega = omega(lambda, a)?;
        if omega == 0.0 || !omega.is_finite() || omega.signum() != a.signum() {
            return Err(DegenError::Domain(format!(
                "degenerate frequency {omega} is unusable for lambda = {lambda}, a = {a}"
            )));
        }
        Ok(Self { lambda, a, omega })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// `ω = log e_λ(a)`.
    pub fn omega(&self) -> f64 {
        self.omega
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, ToPrimitive, Zero};

    fn rat(v: f64) -> BigRational {
        BigRational::from_float(v).unwrap()
    }

    /// `a·Σ_{k≥0} (−λa)^k/(k+1)` summed exactly.
    fn omega_oracle(lambda: f64, a: f64, terms: usize) -> f64 {
        let (l, a) = (rat(lambda), rat(a));
        let u = -(&l * &a);
        let mut power = BigRational::one();
        let mut sum = BigRational::zero();
        for k in 0..terms {
            sum += &power / BigRational::from_integer(BigInt::from(k + 1));
            power *= &u;
        }
        (a * sum).to_f64().unwrap()
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(17.25, 0, -3.0), 1.0);
        assert_eq!(falling_factorial(3.0, 3, 1.0), 6.0);
        assert_eq!(falling_factorial(1.0, 2, 0.5), 0.5);
    }

    #[test]
    fn complex_falling_factorial_examples() {
        let i = Complex64::i();
        assert_eq!(falling_factorial_complex(i, 1, 1.0), i);
        assert_eq!(falling_factorial_complex(i, 2, 1.0), Complex64::new(-1.0, -1.0));
        assert_eq!(falling_factorial_complex(2.0 * i, 0, 0.3), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn omega_examples() {
        assert!((omega(1.0, 1.0).unwrap() - std::f64::consts::LN_2).abs() < 1e-16);
        let e_minus_one = std::f64::consts::E - 1.0;
        assert!((omega(1.0, e_minus_one).unwrap() - 1.0).abs() < 2e-16);
        let w = omega(1e-8, 1.0).unwrap();
        let expected = omega_oracle(1e-8, 1.0, 8);
        assert!((w - expected).abs() <= 1e-16, "{w} vs {expected}");
        assert!((w - (1.0 - 5e-9)).abs() < 1e-16);
    }

    #[test]
    fn omega_small_lambda_is_stable() {
        let w = omega(1e-12, 1.0).unwrap();
        let expected = omega_oracle(1e-12, 1.0, 6);
        assert!(((w - expected) / expected).abs() <= 1e-12);
        // Both sides of the series switch agree with the oracle.
        for lambda in [0.9e-4, 1.1e-4, -0.9e-4, -1.1e-4, 3e-3] {
            let w = omega(lambda, 1.0).unwrap();
            let expected = omega_oracle(lambda, 1.0, 40);
            assert!(((w - expected) / expected).abs() <= 4e-16, "lambda = {lambda}");
        }
    }

    #[test]
    fn omega_domain_errors() {
        assert!(matches!(omega(0.0, 1.0), Err(DegenError::Domain(_))));
        assert!(matches!(omega(0.5, -2.0), Err(DegenError::Domain(_))));
        assert!(matches!(omega(0.5, -3.0), Err(DegenError::Domain(_))));
        assert!(omega(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(degen_exp_closed(1.0, 1.0, 0.5).unwrap(), 1.5);
        assert_eq!(degen_exp_closed(2.0, 1.0, 3.0).unwrap(), 16.0);
        assert_eq!(degen_exp_closed(0.0, -0.3, 1.0).unwrap(), 1.0);
        assert!(degen_exp_closed(1.0, -0.5, 2.0).is_err());
    }

    #[test]
    fn series_examples() {
        let s = degen_exp_series(1.0, 1.0, 0.7, 10).unwrap();
        assert_eq!(s.value, 1.7);
        assert!(s.terminated);
        assert_eq!(s.terms, 2);

        let s = degen_exp_series(2.0, 1.0, 3.0, 10).unwrap();
        assert_eq!(s.value, 16.0);
        assert!(s.terminated);
        assert_eq!(s.terms, 3);
        assert!(!s.convergence_warning);

        let s = degen_exp_series(0.5, 0.25, 0.8, 60).unwrap();
        let closed = degen_exp_closed(0.5, 0.25, 0.8).unwrap();
        assert!(((s.value - closed) / closed).abs() < 1e-13);
        // x/λ = 2 is a nonnegative integer, so the sum is a finite polynomial.
        assert!(s.terminated);
        assert_eq!(s.terms, 3);
    }

    #[test]
    fn series_flags_outside_radius() {
        let s = degen_exp_series(0.5, 1.0, 1.5, 30).unwrap();
        assert!(s.convergence_warning);
        assert_eq!(s.terms, 30);
        assert!(degen_exp_series(0.5, 1.0, 0.5, 0).is_err());
    }

    #[test]
    fn complex_examples() {
        let one = degen_exp_complex(Complex64::new(0.0, 0.0), 1.0, 1.0).unwrap();
        assert_eq!(one, Complex64::new(1.0, 0.0));
        let z = Complex64::new(0.0, std::f64::consts::PI / std::f64::consts::LN_2);
        let minus_one = degen_exp_complex(z, 1.0, 1.0).unwrap();
        assert!((minus_one - Complex64::new(-1.0, 0.0)).norm() < 1e-15);
        for x in [-2.5, -0.3, 0.7, 4.0] {
            let zx = Complex64::new(0.0, x);
            let p = degen_exp_complex(zx, 0.4, 1.3).unwrap() * degen_exp_complex(-zx, 0.4, 1.3).unwrap();
            assert!((p - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn context_invariants() {
        let ctx = DegenContext::new(-0.5, 1.0).unwrap();
        assert!(ctx.omega() > 0.0);
        let ctx = DegenContext::new(0.5, -1.0).unwrap();
        assert!(ctx.omega() < 0.0);
        assert!(DegenContext::new(0.5, 0.0).is_err());
        assert!(DegenContext::new(0.0, 1.0).is_err());
        assert!(DegenContext::new(0.5, -3.0).is_err());
    }
}
