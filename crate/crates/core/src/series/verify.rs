use num_bigint::BigInt;
use num_traits::Zero;

use super::scaled::{Grading, ScaledSeries};
use serde::Serialize;

use super::{rational, GaussianRational, Rational};
#[cfg(test)]
use super::{series_degen_exp, series_scale, series_sin_cos, series_sinh_cosh, FormalSeries, SinCosSeries};
use crate::chebyshev::{cheb_coeffs, ChebCoeffs};
use crate::error::{DegenError, Result};
use crate::identities::{IdentityId, IdentityParams, Mutation};

/// Outcome of an exact coefficient comparison of `LHS − RHS`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExactOutcome {
    pub pass: bool,
    /// Lowest power of `a` whose coefficient in `LHS − RHS` is nonzero.
    pub first_failing_coefficient: Option<usize>,
}

/// A fixed `(x, y, λ)` instance, each entry `(numerator, denominator)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalTriple {
    pub x: (i64, i64),
    pub y: (i64, i64),
    pub lambda: (i64, i64),
}

impl RationalTriple {
    pub fn x(&self) -> Rational {
        rational(self.x.0, self.x.1)
    }

    pub fn y(&self) -> Rational {
        rational(self.y.0, self.y.1)
    }

    pub fn lambda(&self) -> Rational {
        rational(self.lambda.0, self.lambda.1)
    }
}

/// Built-in instances for exact verification; half of them have `λ < 0`.
pub const RATIONAL_TRIPLES: [RationalTriple; 6] = [
    RationalTriple { x: (1, 1), y: (1, 2), lambda: (1, 1) },
    RationalTriple { x: (2, 3), y: (1, 5), lambda: (-1, 2) },
    RationalTriple { x: (-3, 4), y: (5, 7), lambda: (1, 3) },
    RationalTriple { x: (1, 2), y: (-2, 1), lambda: (-3, 2) },
    RationalTriple { x: (5, 3), y: (1, 4), lambda: (2, 1) },
    RationalTriple { x: (-1, 1), y: (3, 2), lambda: (-1, 7) },
];

/// Checks an exact-capable identity coefficient by coefficient up to `a^order`.
pub fn verify_exact(
    id: IdentityId,
    x: &Rational,
    y: &Rational,
    lambda: &Rational,
    params: &IdentityParams,
    order: usize,
) -> Result<ExactOutcome> {
    verify_exact_mutated(id, x, y, lambda, params, order, Mutation::None)
}

#[doc(hidden)]
pub fn verify_exact_mutated(
    id: IdentityId,
    x: &Rational,
    y: &Rational,
    lambda: &Rational,
    params: &IdentityParams,
    order: usize,
    mutation: Mutation,
) -> Result<ExactOutcome> {
    if !id.is_exact_capable() {
        return Err(DegenError::NotExactCapable(id));
    }
    if lambda.is_zero() {
        return Err(DegenError::Domain("lambda must be nonzero".into()));
    }
    let grading = Grading::new(lambda, Grading::common_scale(&[x, y, lambda]), order)?;
    let residuals = residuals(&grading, id, x, y, params, mutation)?;
    let first_failing_coefficient = residuals.iter().filter_map(|r| grading.first_nonzero(r)).min();
    Ok(ExactOutcome { pass: first_failing_coefficient.is_none(), first_failing_coefficient })
}

/// Exact series arithmetic the residual builder needs.
trait Engine {
    type S: Clone;
    fn one(&self) -> Self::S;
    fn constant(&self, c: &BigInt) -> Self::S;
    fn add(&self, f: &Self::S, g: &Self::S) -> Self::S;
    fn sub(&self, f: &Self::S, g: &Self::S) -> Self::S;
    fn mul(&self, f: &Self::S, g: &Self::S) -> Self::S;
    fn scale(&self, c: i64, f: &Self::S) -> Self::S;
    fn exp(&self, z: &GaussianRational) -> Result<Self::S>;
    fn cos_sin(&self, x: &Rational) -> Result<(Self::S, Self::S)>;
    fn cosh_sinh(&self, x: &Rational) -> Result<(Self::S, Self::S)>;
    fn first_nonzero(&self, f: &Self::S) -> Option<usize>;
}

/// Plain Gaussian-rational coefficients; the reference for [`Grading`].
#[cfg(test)]
struct RationalEngine {
    lambda: Rational,
    order: usize,
}

#[cfg(test)]
impl Engine for RationalEngine {
    type S = FormalSeries;

    fn one(&self) -> FormalSeries {
        FormalSeries::one(self.order)
    }

    fn constant(&self, c: &BigInt) -> FormalSeries {
        FormalSeries::constant(GaussianRational::real(Rational::from_integer(c.clone())), self.order)
    }

    fn add(&self, f: &FormalSeries, g: &FormalSeries) -> FormalSeries {
        f + g
    }

    fn sub(&self, f: &FormalSeries, g: &FormalSeries) -> FormalSeries {
        f - g
    }

    fn mul(&self, f: &FormalSeries, g: &FormalSeries) -> FormalSeries {
        f * g
    }

    fn scale(&self, c: i64, f: &FormalSeries) -> FormalSeries {
        series_scale(&GaussianRational::real(Rational::from_integer(BigInt::from(c))), f)
    }

    fn exp(&self, z: &GaussianRational) -> Result<FormalSeries> {
        series_degen_exp(z, &self.lambda, self.order)
    }

    fn cos_sin(&self, x: &Rational) -> Result<(FormalSeries, FormalSeries)> {
        let SinCosSeries { sin, cos } = series_sin_cos(x, &self.lambda, self.order)?;
        Ok((cos, sin))
    }

    fn cosh_sinh(&self, x: &Rational) -> Result<(FormalSeries, FormalSeries)> {
        let SinCosSeries { sin, cos } = series_sinh_cosh(x, &self.lambda, self.order)?;
        Ok((cos, sin))
    }

    fn first_nonzero(&self, f: &FormalSeries) -> Option<usize> {
        f.first_nonzero()
    }
}

impl Engine for Grading {
    type S = ScaledSeries;

    fn one(&self) -> ScaledSeries {
        Grading::one(self)
    }

    fn constant(&self, c: &BigInt) -> ScaledSeries {
        Grading::constant(self, c)
    }

    fn add(&self, f: &ScaledSeries, g: &ScaledSeries) -> ScaledSeries {
        Grading::add(self, f, g)
    }

    fn sub(&self, f: &ScaledSeries, g: &ScaledSeries) -> ScaledSeries {
        Grading::sub(self, f, g)
    }

    fn mul(&self, f: &ScaledSeries, g: &ScaledSeries) -> ScaledSeries {
        Grading::mul(self, f, g)
    }

    fn scale(&self, c: i64, f: &ScaledSeries) -> ScaledSeries {
        Grading::scale(self, &BigInt::from(c), f)
    }

    fn exp(&self, z: &GaussianRational) -> Result<ScaledSeries> {
        Grading::exp(self, z)
    }

    fn cos_sin(&self, x: &Rational) -> Result<(ScaledSeries, ScaledSeries)> {
        Grading::cos_sin(self, x)
    }

    fn cosh_sinh(&self, x: &Rational) -> Result<(ScaledSeries, ScaledSeries)> {
        Grading::cosh_sinh(self, x)
    }

    fn first_nonzero(&self, f: &ScaledSeries) -> Option<usize> {
        f.first_nonzero()
    }
}

/// `T(f)` by Horner's rule in `f²`, using the parity of `T`.
fn poly_apply<E: Engine>(e: &E, poly: &ChebCoeffs, f: &E::S) -> E::S {
    let n = poly.degree();
    let square = e.mul(f, f);
    let mut acc = e.constant(&poly.coeffs()[n]);
    let mut j = n;
    while j >= 2 {
        j -= 2;
        acc = e.add(&e.mul(&acc, &square), &e.constant(&poly.coeffs()[j]));
    }
    if n % 2 == 1 {
        acc = e.mul(&acc, f);
    }
    acc
}

/// `LHS − RHS` for every equality the identity asserts.
fn residuals<E: Engine>(
    e: &E,
    id: IdentityId,
    x: &Rational,
    y: &Rational,
    params: &IdentityParams,
    mutation: Mutation,
) -> Result<Vec<E::S>> {
    let at = |multiple: i64| e.cos_sin(&(x * Rational::from_integer(BigInt::from(multiple))));
    let (c, s) = at(1)?;
    let one = e.one();
    let one_minus_2s2 = || e.sub(&one, &e.scale(2, &e.mul(&s, &s)));

    let out = match id {
        IdentityId::Pythagorean => {
            let c = if mutation == Mutation::PythagoreanSign { e.exp(&GaussianRational::imag(x.clone()))? } else { c };
            vec![e.sub(&e.add(&e.mul(&s, &s), &e.mul(&c, &c)), &one)]
        }
        IdentityId::DoubleAngleCos => {
            let c2 = at(2)?.0;
            let twice_c2 = e.sub(&e.scale(2, &e.mul(&c, &c)), &one);
            vec![e.sub(&c2, &one_minus_2s2()), e.sub(&c2, &twice_c2)]
        }
        IdentityId::DoubleAngleSin => vec![e.sub(&at(2)?.1, &e.scale(2, &e.mul(&s, &c)))],
        IdentityId::AdditionSin | IdentityId::AdditionCos => {
            let (oc, os) = e.cos_sin(y)?;
            let (sum_c, sum_s) = e.cos_sin(&(x + y))?;
            let (diff_c, diff_s) = e.cos_sin(&(x - y))?;
            if id == IdentityId::AdditionSin {
                let (sc, cs) = (e.mul(&s, &oc), e.mul(&c, &os));
                let (plus, minus) = (e.add(&sc, &cs), e.sub(&sc, &cs));
                let (plus, minus) = if mutation == Mutation::AdditionSign { (minus, plus) } else { (plus, minus) };
                vec![e.sub(&sum_s, &plus), e.sub(&diff_s, &minus)]
            } else {
                let (cc, ss) = (e.mul(&c, &oc), e.mul(&s, &os));
                vec![e.sub(&sum_c, &e.sub(&cc, &ss)), e.sub(&diff_c, &e.add(&cc, &ss))]
            }
        }
        IdentityId::TripleRecurrence => {
            let k = i64::from(params.require_k(id)?);
            let lhs = e.add(&at(k + 1)?.0, &at(k - 1)?.0);
            vec![e.sub(&lhs, &e.scale(2, &e.mul(&at(k)?.0, &c)))]
        }
        IdentityId::MultiAngleCos => {
            let n = params.require_n(id)?;
            let t = cheb_coeffs(n as usize);
            vec![e.sub(&at(i64::from(n))?.0, &poly_apply(e, &t, &c))]
        }
        IdentityId::SinTelescope => {
            let k = i64::from(params.require_k(id)?);
            let lhs = e.sub(&at(2 * k + 1)?.1, &at(2 * k - 1)?.1);
            vec![e.sub(&lhs, &e.scale(2, &e.mul(&at(2 * k)?.0, &s)))]
        }
        IdentityId::Cos2kViaT => {
            let k = params.require_k(id)?;
            let t = cheb_coeffs(k as usize);
            let c2k = at(2 * i64::from(k))?.0;
            let c2 = at(2)?.0;
            vec![e.sub(&c2k, &poly_apply(e, &t, &c2)), e.sub(&c2k, &poly_apply(e, &t, &one_minus_2s2()))]
        }
        IdentityId::SinOddSum => {
            let m = params.require_m(id)?;
            // 1 + 2·Σ_{k=1}^m T_k(u) with T_k(u) generated by the recurrence.
            let u = one_minus_2s2();
            let (mut prev, mut cur) = (e.one(), u.clone());
            let mut sum = e.one();
            for _ in 1..=m {
                sum = e.add(&sum, &e.scale(2, &cur));
                let next = e.sub(&e.scale(2, &e.mul(&u, &cur)), &prev);
                prev = std::mem::replace(&mut cur, next);
            }
            vec![e.sub(&at(2 * i64::from(m) + 1)?.1, &e.mul(&s, &sum))]
        }
        IdentityId::HyperbolicUnit => {
            let (ch, sh) = e.cosh_sinh(x)?;
            vec![e.sub(&e.sub(&e.mul(&ch, &ch), &e.mul(&sh, &sh)), &one)]
        }
        _ => return Err(DegenError::NotExactCapable(id)),
    };
    Ok(out)
}
