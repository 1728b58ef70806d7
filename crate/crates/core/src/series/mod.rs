//! Truncated formal power series in the argument `a`, with exact
//! Gaussian-rational coefficients.
//!
//! For fixed rational `λ` and `x`, `e_λ^{xi}(a)` is a power series in `a`
//! whose coefficients are `(xi)_{n,λ}/n!`. Every identity that is polynomial
//! in the degenerate sine and cosine can therefore be checked coefficient by
//! coefficient with no rounding at all.

mod gaussian;
mod scaled;
mod verify;

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use crate::chebyshev::ChebCoeffs;
use crate::error::{DegenError, Result};

pub use gaussian::{rational, GaussianRational, Rational};
pub use verify::{verify_exact, verify_exact_mutated, ExactOutcome, RationalTriple, RATIONAL_TRIPLES};

/// Coefficients `0..=order` of a power series in `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalSeries {
    coeffs: Vec<GaussianRational>,
}

impl FormalSeries {
    /// Panics if `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<GaussianRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least its constant term");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![GaussianRational::zero(); order + 1] }
    }

    pub fn constant(c: GaussianRational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(GaussianRational::one(), order)
    }

    /// `1 + a` style monomial sums from small integer coefficients.
    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (slot, &c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = GaussianRational::real(Rational::from_integer(BigInt::from(c)));
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &GaussianRational {
        &self.coeffs[n]
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.first_nonzero().is_none()
    }

    /// Every coefficient has zero imaginary part.
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(GaussianRational::is_real)
    }

    /// Horner evaluation of the truncated polynomial at `a0` in `f64`.
    pub fn eval_f64(&self, a0: f64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| {
            let c = Complex64::new(c.re.to_f64().unwrap_or(f64::NAN), c.im.to_f64().unwrap_or(f64::NAN));
            acc * a0 + c
        })
    }

    fn check_order(&self, rhs: &Self) -> Result<()> {
        if self.order() == rhs.order() {
            Ok(())
        } else {
            Err(DegenError::OrderMismatch { lhs: self.order(), rhs: rhs.order() })
        }
    }
}

pub fn series_add(lhs: &FormalSeries, rhs: &FormalSeries) -> Result<FormalSeries> {
    lhs.check_order(rhs)?;
    let mut out = lhs.clone();
    for (o, r) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
        *o += r;
    }
    Ok(out)
}

pub fn series_sub(lhs: &FormalSeries, rhs: &FormalSeries) -> Result<FormalSeries> {
    lhs.check_order(rhs)?;
    let mut out = lhs.clone();
    for (o, r) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
        *o -= r;
    }
    Ok(out)
}

/// Cauchy product truncated at the common order.
pub fn series_mul(lhs: &FormalSeries, rhs: &FormalSeries) -> Result<FormalSeries> {
    lhs.check_order(rhs)?;
    let order = lhs.order();
    let mut out = FormalSeries::zero(order);
    for (i, l) in lhs.coeffs.iter().enumerate() {
        if l.is_zero() {
            continue;
        }
        for (r, o) in rhs.coeffs[..=order - i].iter().zip(&mut out.coeffs[i..]) {
            o.add_product(l, r);
        }
    }
    Ok(out)
}

pub fn series_scale(s: &GaussianRational, f: &FormalSeries) -> FormalSeries {
    FormalSeries { coeffs: f.coeffs.iter().map(|c| s * c).collect() }
}

/// Power-series long division; the denominator needs a nonzero constant term.
pub fn series_div(num: &FormalSeries, den: &FormalSeries) -> Result<FormalSeries> {
    num.check_order(den)?;
    let inv0 = den.coeffs[0].inv().ok_or(DegenError::NonInvertible)?;
    let mut q: Vec<GaussianRational> = Vec::with_capacity(num.coeffs.len());
    for n in 0..num.coeffs.len() {
        let mut acc = num.coeffs[n].clone();
        for k in 1..=n {
            let mut p = GaussianRational::zero();
            p.add_product(&den.coeffs[k], &q[n - k]);
            acc -= &p;
        }
        q.push(&acc * &inv0);
    }
    Ok(FormalSeries { coeffs: q })
}

/// `e_λ^z(a) = Σ (z)_{n,λ} aⁿ/n!` with exact coefficients.
pub fn series_degen_exp(z: &GaussianRational, lambda: &Rational, order: usize) -> Result<FormalSeries> {
    if lambda.is_zero() {
        return Err(DegenError::Domain("lambda must be nonzero".into()));
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut c = GaussianRational::one();
    coeffs.push(c.clone());
    for n in 1..=order {
        let shift = GaussianRational::real(lambda * Rational::from_integer(BigInt::from(n - 1)));
        let factor = (z - &shift).scale(&Rational::new(BigInt::one(), BigInt::from(n)));
        c = &c * &factor;
        coeffs.push(c.clone());
    }
    Ok(FormalSeries { coeffs })
}

/// Degenerate sine and cosine as series in `a`:
/// `cos = (e^{xi} + e^{−xi})/2`, `sin = (e^{xi} − e^{−xi})/2i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SinCosSeries {
    pub sin: FormalSeries,
    pub cos: FormalSeries,
}

pub fn series_sin_cos(x: &Rational, lambda: &Rational, order: usize) -> Result<SinCosSeries> {
    let plus = series_degen_exp(&GaussianRational::imag(x.clone()), lambda, order)?;
    let minus = series_degen_exp(&GaussianRational::imag(-x), lambda, order)?;
    let half = GaussianRational::real(rational(1, 2));
    let minus_half_i = GaussianRational::imag(rational(-1, 2));
    Ok(SinCosSeries {
        cos: series_scale(&half, &(&plus + &minus)),
        sin: series_scale(&minus_half_i, &(&plus - &minus)),
    })
}

/// Degenerate hyperbolic sine and cosine: `(e^x ∓ e^{−x})/2`.
pub fn series_sinh_cosh(x: &Rational, lambda: &Rational, order: usize) -> Result<SinCosSeries> {
    let plus = series_degen_exp(&GaussianRational::real(x.clone()), lambda, order)?;
    let minus = series_degen_exp(&GaussianRational::real(-x), lambda, order)?;
    let half = GaussianRational::real(rational(1, 2));
    Ok(SinCosSeries {
        cos: series_scale(&half, &(&plus + &minus)),
        sin: series_scale(&half, &(&plus - &minus)),
    })
}

/// Applies the integer polynomial `T_n` to `f` by Horner's rule in `f²`,
/// using the parity of `T_n`.
pub fn series_poly_apply(poly: &ChebCoeffs, f: &FormalSeries) -> FormalSeries {
    let order = f.order();
    let n = poly.degree();
    let square = f * f;
    let coeff = |j: usize| {
        FormalSeries::constant(GaussianRational::real(Rational::from_integer(poly.coeffs()[j].clone())), order)
    };
    let mut acc = coeff(n);
    let mut j = n;
    while j >= 2 {
        j -= 2;
        acc = &(&acc * &square) + &coeff(j);
    }
    if n % 2 == 1 {
        acc = &acc * f;
    }
    acc
}

// Operator forms for code that builds series of a single order; they panic on
// order mismatch. Use the `series_*` functions for fallible arithmetic.

impl<'a> Add<&'a FormalSeries> for &'a FormalSeries {
    type Output = FormalSeries;
    fn add(self, rhs: &FormalSeries) -> FormalSeries {
        series_add(self, rhs).expect("series orders must match")
    }
}

impl<'a> Sub<&'a FormalSeries> for &'a FormalSeries {
    type Output = FormalSeries;
    fn sub(self, rhs: &FormalSeries) -> FormalSeries {
        series_sub(self, rhs).expect("series orders must match")
    }
}

impl<'a> Mul<&'a FormalSeries> for &'a FormalSeries {
    type Output = FormalSeries;
    fn mul(self, rhs: &FormalSeries) -> FormalSeries {
        series_mul(self, rhs).expect("series orders must match")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chebyshev::cheb_coeffs;
    use crate::exponential::DegenContext;
    use crate::trig::{cos_l, sin_l};

    fn r(n: i64, d: i64) -> Rational {
        rational(n, d)
    }

    fn g(re: Rational, im: Rational) -> GaussianRational {
        GaussianRational::new(re, im)
    }

    #[test]
    fn degen_exp_examples() {
        let zero = GaussianRational::zero();
        assert_eq!(series_degen_exp(&zero, &r(3, 7), 8).unwrap(), FormalSeries::one(8));
        let one = GaussianRational::one();
        assert_eq!(series_degen_exp(&one, &r(1, 1), 8).unwrap(), FormalSeries::from_integers(&[1, 1], 8));
        let e = series_degen_exp(&GaussianRational::i(), &r(1, 1), 3).unwrap();
        let expected = vec![
            GaussianRational::one(),
            GaussianRational::i(),
            g(r(-1, 2), r(-1, 2)),
            // i(i−1)(i−2)/6 = (3 + i)/6
            g(r(1, 2), r(1, 6)),
        ];
        assert_eq!(e.coeffs(), expected.as_slice());
        assert!(series_degen_exp(&one, &r(0, 1), 4).is_err());
    }

    #[test]
    fn ring_examples() {
        let f = series_degen_exp(&g(r(2, 3), r(-1, 5)), &r(-1, 2), 10).unwrap();
        assert_eq!(series_add(&f, &FormalSeries::zero(10)).unwrap(), f);
        let i = GaussianRational::i();
        let plus = series_degen_exp(&i, &r(1, 3), 12).unwrap();
        let minus = series_degen_exp(&-i, &r(1, 3), 12).unwrap();
        assert_eq!(series_mul(&plus, &minus).unwrap(), FormalSeries::one(12));
        let one_plus_a = FormalSeries::from_integers(&[1, 1], 8);
        assert_eq!(&one_plus_a * &one_plus_a, FormalSeries::from_integers(&[1, 2, 1], 8));
        assert!(matches!(
            series_mul(&one_plus_a, &FormalSeries::one(4)),
            Err(DegenError::OrderMismatch { lhs: 8, rhs: 4 })
        ));
    }

    #[test]
    fn division() {
        let f = series_degen_exp(&g(r(1, 2), r(3, 1)), &r(2, 5), 10).unwrap();
        let h = series_degen_exp(&g(r(-4, 3), r(1, 7)), &r(2, 5), 10).unwrap();
        assert_eq!(series_div(&f, &f).unwrap(), FormalSeries::one(10));
        let q = series_div(&f, &h).unwrap();
        assert_eq!(&q * &h, f);
        let sc = series_sin_cos(&r(1, 1), &r(1, 1), 10).unwrap();
        assert_eq!(series_div(&sc.cos, &sc.sin), Err(DegenError::NonInvertible));
        let tan = series_div(&sc.sin, &sc.cos).unwrap();
        assert!(tan.coeff(0).is_zero());
        assert_eq!(tan.coeff(1), &GaussianRational::one());
    }

    #[test]
    fn sin_cos_shape() {
        let x = r(3, 4);
        let sc = series_sin_cos(&x, &r(-2, 3), 16).unwrap();
        assert!(sc.sin.is_real() && sc.cos.is_real());
        assert_eq!(sc.cos.coeff(0), &GaussianRational::one());
        assert!(sc.sin.coeff(0).is_zero());
        assert_eq!(sc.sin.coeff(1), &GaussianRational::real(x));
        assert!(sc.cos.coeff(1).is_zero());
    }

    #[test]
    fn poly_apply() {
        let sc = series_sin_cos(&r(1, 1), &r(1, 1), 24).unwrap();
        assert_eq!(series_poly_apply(&cheb_coeffs(0), &sc.cos), FormalSeries::one(24));
        assert_eq!(series_poly_apply(&cheb_coeffs(1), &sc.cos), sc.cos);
        let double = series_sin_cos(&r(2, 1), &r(1, 1), 24).unwrap();
        assert_eq!(series_poly_apply(&cheb_coeffs(2), &sc.cos), double.cos);
        // Independent expansion: 2c² − 1 by plain ring arithmetic.
        let two_c2 = series_scale(&GaussianRational::real(r(2, 1)), &(&sc.cos * &sc.cos));
        assert_eq!(&two_c2 - &FormalSeries::one(24), double.cos);
    }

    #[test]
    fn float_consistency() {
        let order = 32;
        for (x, lambda, a0) in [((1, 1), (1, 1), (1, 8)), ((-2, 3), (-1, 2), (1, 5)), ((5, 2), (1, 3), (-1, 10))] {
            let (xr, lr) = (r(x.0, x.1), r(lambda.0, lambda.1));
            let sc = series_sin_cos(&xr, &lr, order).unwrap();
            let a0f = a0.0 as f64 / a0.1 as f64;
            let xf = x.0 as f64 / x.1 as f64;
            let ctx = DegenContext::new(lambda.0 as f64 / lambda.1 as f64, a0f).unwrap();
            let bound = 1e-10 + a0f.abs().powi(order as i32 + 1) * 2f64.powi(order as i32);
            assert!((sc.cos.eval_f64(a0f).re - cos_l(&ctx, xf)).abs() <= bound);
            assert!((sc.sin.eval_f64(a0f).re - sin_l(&ctx, xf)).abs() <= bound);
        }
    }
}
