//! Gcd-free exact series arithmetic for the verification engine.
//!
//! When `x·L` and `λ·L` are integers, `n!·Lⁿ·(xi)_{n,λ}/n!` is a Gaussian
//! integer. Storing coefficient `n` as `num[n] / (den · n! · Lⁿ)` turns the
//! Cauchy product into the binomial convolution
//! `num_h[n] = Σ C(n,i)·num_f[i]·num_g[n−i]`, which needs no normalisation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[cfg(test)]
use super::FormalSeries;
use super::{GaussianRational, Rational};
use crate::error::{DegenError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
struct Gauss {
    re: BigInt,
    im: BigInt,
}

impl Gauss {
    fn zero() -> Self {
        Self { re: BigInt::zero(), im: BigInt::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn scale(&self, c: &BigInt) -> Self {
        Self { re: &self.re * c, im: &self.im * c }
    }

    /// `self += c·a·b`.
    fn add_product(&mut self, c: &BigInt, a: &Gauss, b: &Gauss) {
        let (a_real, b_real) = (a.im.is_zero(), b.im.is_zero());
        if a_real && b_real {
            self.re += c * &a.re * &b.re;
        } else if b_real {
            let t = c * &b.re;
            self.re += &a.re * &t;
            self.im += &a.im * &t;
        } else if a_real {
            let t = c * &a.re;
            self.re += &b.re * &t;
            self.im += &b.im * &t;
        } else {
            self.re += c * (&a.re * &b.re - &a.im * &b.im);
            self.im += c * (&a.re * &b.im + &a.im * &b.re);
        }
    }
}

/// Series over a shared grading; see the module docs for the encoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct ScaledSeries {
    num: Vec<Gauss>,
    den: BigInt,
}

impl ScaledSeries {
    pub(crate) fn first_nonzero(&self) -> Option<usize> {
        self.num.iter().position(|c| !c.is_zero())
    }
}

/// Truncation order, the scale `L`, and cached binomial coefficients.
#[derive(Debug, Clone)]
pub(crate) struct Grading {
    order: usize,
    scale: BigInt,
    lambda_scaled: BigInt,
    binomials: Vec<Vec<BigInt>>,
}

fn to_integer(v: &Rational, scale: &BigInt) -> Option<BigInt> {
    let t = v * Rational::from_integer(scale.clone());
    t.is_integer().then(|| t.to_integer())
}

impl Grading {
    /// `scale` must clear the denominators of `λ` and of every exponent used later.
    pub(crate) fn new(lambda: &Rational, scale: BigInt, order: usize) -> Result<Self> {
        if lambda.is_zero() {
            return Err(DegenError::Domain("lambda must be nonzero".into()));
        }
        if !scale.is_positive() {
            return Err(DegenError::InvalidArgument("grading scale must be positive".into()));
        }
        let lambda_scaled = to_integer(lambda, &scale)
            .ok_or_else(|| DegenError::InvalidArgument(format!("scale {scale} does not clear lambda = {lambda}")))?;
        let mut binomials: Vec<Vec<BigInt>> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let row = (0..=n)
                .map(|k| if k == 0 || k == n { BigInt::one() } else { &binomials[n - 1][k - 1] + &binomials[n - 1][k] })
                .collect();
            binomials.push(row);
        }
        Ok(Self { order, scale, lambda_scaled, binomials })
    }

    /// The least common multiple of the denominators of `values`.
    pub(crate) fn common_scale(values: &[&Rational]) -> BigInt {
        values.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
    }

    fn zero_series(&self, den: BigInt) -> ScaledSeries {
        ScaledSeries { num: vec![Gauss::zero(); self.order + 1], den }
    }

    pub(crate) fn constant(&self, c: &BigInt) -> ScaledSeries {
        let mut s = self.zero_series(BigInt::one());
        s.num[0].re = c.clone();
        s
    }

    pub(crate) fn one(&self) -> ScaledSeries {
        self.constant(&BigInt::one())
    }

    /// `e_λ^z(a)` for a Gaussian-rational exponent.
    pub(crate) fn exp(&self, z: &GaussianRational) -> Result<ScaledSeries> {
        let not_cleared = || DegenError::InvalidArgument(format!("scale {} does not clear exponent {z}", self.scale));
        let re = to_integer(&z.re, &self.scale).ok_or_else(not_cleared)?;
        let im = to_integer(&z.im, &self.scale).ok_or_else(not_cleared)?;
        let mut s = self.zero_series(BigInt::one());
        s.num[0].re = BigInt::one();
        for n in 1..=self.order {
            // num[n] = num[n−1]·(zL − (n−1)λL)
            let shift = &re - &self.lambda_scaled * BigInt::from(n - 1);
            let prev = &s.num[n - 1];
            s.num[n] = Gauss { re: &prev.re * &shift - &prev.im * &im, im: &prev.re * &im + &prev.im * &shift };
        }
        Ok(s)
    }

    fn combine(&self, f: &ScaledSeries, g: &ScaledSeries, sign: i32) -> ScaledSeries {
        let den = f.den.lcm(&g.den);
        let (cf, cg) = (&den / &f.den, &den / &g.den);
        let cg = if sign < 0 { -cg } else { cg };
        let num = f
            .num
            .iter()
            .zip(&g.num)
            .map(|(a, b)| Gauss { re: &a.re * &cf + &b.re * &cg, im: &a.im * &cf + &b.im * &cg })
            .collect();
        ScaledSeries { num, den }
    }

    pub(crate) fn add(&self, f: &ScaledSeries, g: &ScaledSeries) -> ScaledSeries {
        self.combine(f, g, 1)
    }

    pub(crate) fn sub(&self, f: &ScaledSeries, g: &ScaledSeries) -> ScaledSeries {
        self.combine(f, g, -1)
    }

    pub(crate) fn scale(&self, c: &BigInt, f: &ScaledSeries) -> ScaledSeries {
        ScaledSeries { num: f.num.iter().map(|v| v.scale(c)).collect(), den: f.den.clone() }
    }

    pub(crate) fn mul(&self, f: &ScaledSeries, g: &ScaledSeries) -> ScaledSeries {
        let mut out = self.zero_series(&f.den * &g.den);
        for (i, a) in f.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in g.num[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.num[i + j].add_product(&self.binomials[i + j][i], a, b);
                }
            }
        }
        out
    }

    /// `(cos, sin)` from `(e^{xi} ± e^{−xi})`, with the `1/2` and `−i/2` in `den`.
    pub(crate) fn cos_sin(&self, x: &Rational) -> Result<(ScaledSeries, ScaledSeries)> {
        let plus = self.exp(&GaussianRational::imag(x.clone()))?;
        let minus = self.exp(&GaussianRational::imag(-x))?;
        let two = BigInt::from(2);
        let mut cos = self.add(&plus, &minus);
        cos.den = two.clone();
        let diff = self.sub(&plus, &minus);
        let sin = ScaledSeries {
            num: diff.num.into_iter().map(|c| Gauss { re: c.im, im: -c.re }).collect(),
            den: two,
        };
        Ok((cos, sin))
    }

    pub(crate) fn cosh_sinh(&self, x: &Rational) -> Result<(ScaledSeries, ScaledSeries)> {
        let plus = self.exp(&GaussianRational::real(x.clone()))?;
        let minus = self.exp(&GaussianRational::real(-x))?;
        let mut cosh = self.add(&plus, &minus);
        let mut sinh = self.sub(&plus, &minus);
        cosh.den = BigInt::from(2);
        sinh.den = BigInt::from(2);
        Ok((cosh, sinh))
    }

    /// Decodes into ordinary Gaussian-rational coefficients.
    #[cfg(test)]
    pub(crate) fn to_formal(&self, f: &ScaledSeries) -> FormalSeries {
        let mut weight = f.den.clone();
        let coeffs = f
            .num
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    weight *= &self.scale * BigInt::from(n);
                }
                GaussianRational::new(Rational::new(c.re.clone(), weight.clone()), Rational::new(c.im.clone(), weight.clone()))
            })
            .collect();
        FormalSeries::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rational, series_degen_exp, series_sin_cos, series_sinh_cosh};
    use super::*;

    fn grading(x: &Rational, lambda: &Rational, order: usize) -> Grading {
        Grading::new(lambda, Grading::common_scale(&[x, lambda]), order).unwrap()
    }

    #[test]
    fn exp_matches_rational_engine() {
        for (x, l) in [(rational(2, 3), rational(-1, 2)), (rational(-5, 7), rational(1, 3)), (rational(4, 1), rational(2, 1))] {
            let g = grading(&x, &l, 20);
            for z in [GaussianRational::imag(x.clone()), GaussianRational::new(x.clone(), -&x)] {
                assert_eq!(g.to_formal(&g.exp(&z).unwrap()), series_degen_exp(&z, &l, 20).unwrap());
            }
            let (c, s) = g.cos_sin(&x).unwrap();
            let oracle = series_sin_cos(&x, &l, 20).unwrap();
            assert_eq!(g.to_formal(&c), oracle.cos);
            assert_eq!(g.to_formal(&s), oracle.sin);
            let (ch, sh) = g.cosh_sinh(&x).unwrap();
            let oracle = series_sinh_cosh(&x, &l, 20).unwrap();
            assert_eq!(g.to_formal(&ch), oracle.cos);
            assert_eq!(g.to_formal(&sh), oracle.sin);
        }
    }

    #[test]
    fn ring_operations_match() {
        let (x, l) = (rational(-3, 4), rational(1, 3));
        let g = grading(&x, &l, 16);
        let (c, s) = g.cos_sin(&x).unwrap();
        let e = g.exp(&GaussianRational::new(rational(1, 4), x.clone())).unwrap();
        let (fc, fs, fe) = (g.to_formal(&c), g.to_formal(&s), g.to_formal(&e));
        assert_eq!(g.to_formal(&g.mul(&c, &s)), &fc * &fs);
        assert_eq!(g.to_formal(&g.mul(&e, &s)), &fe * &fs);
        assert_eq!(g.to_formal(&g.mul(&e, &e)), &fe * &fe);
        assert_eq!(g.to_formal(&g.sub(&e, &g.scale(&BigInt::from(3), &c))), &fe - &(&fc + &(&fc + &fc)));
        let pyth = g.sub(&g.add(&g.mul(&c, &c), &g.mul(&s, &s)), &g.one());
        assert_eq!(pyth.first_nonzero(), None);
    }

    #[test]
    fn uncleared_inputs_are_rejected() {
        let g = Grading::new(&rational(1, 2), BigInt::from(2), 4).unwrap();
        assert!(g.exp(&GaussianRational::real(rational(1, 3))).is_err());
        assert!(Grading::new(&rational(1, 3), BigInt::from(2), 4).is_err());
        assert!(Grading::new(&rational(0, 1), BigInt::from(2), 4).is_err());
    }
}
