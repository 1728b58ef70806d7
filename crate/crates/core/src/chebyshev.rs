//! Chebyshev-type multiple-angle polynomials.
//!
//! `T_n` satisfies `cos_λ(nx:a) = T_n(cos_λ(x:a))` and is generated by
//! `T_{k+1}(y) = 2y·T_k(y) − T_{k−1}(y)`. `K_m` satisfies
//! `sin_λ((2m+1)x:a) = sin_λ(x:a)·K_m(sin²_λ(x:a))` and is kept in product form.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{DegenError, Result};

/// Exact integer coefficients of `T_n`; `coeffs[j]` multiplies `y^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebCoeffs {
    n: usize,
    coeffs: Vec<BigInt>,
}

impl ChebCoeffs {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BigInt {
        &self.coeffs[self.n]
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_exact(&self, y: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
            acc * y + BigRational::from_integer(c.clone())
        })
    }

    /// Exact evaluation at the rational value of `y`, rounded once to `f64`.
    pub fn eval_exact_f64(&self, y: f64) -> f64 {
        let y = BigRational::from_float(y).expect("finite argument");
        self.eval_exact(&y).to_f64().unwrap_or(f64::NAN)
    }
}

/// Coefficients of `T_n` via the three-term recurrence in exact integers.
pub fn cheb_coeffs(n: usize) -> ChebCoeffs {
    let mut prev = vec![BigInt::one()];
    if n == 0 {
        return ChebCoeffs { n, coeffs: prev };
    }
    let mut cur = vec![BigInt::zero(), BigInt::one()];
    for _ in 1..n {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (j, c) in cur.iter().enumerate() {
            next[j + 1] += c * 2;
        }
        for (j, c) in prev.iter().enumerate() {
            next[j] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    ChebCoeffs { n, coeffs: cur }
}

/// `Σ_k c_k·T_k(y)` by Clenshaw's backward recurrence `b_k = c_k + 2y·b_{k+1} − b_{k+2}`.
pub fn clenshaw(coeffs: &[f64], y: f64) -> f64 {
    let Some((&c0, rest)) = coeffs.split_first() else {
        return 0.0;
    };
    let (mut b1, mut b2) = (0.0_f64, 0.0_f64);
    for &c in rest.iter().rev() {
        let b0 = c + 2.0 * y * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    c0 + y * b1 - b2
}

/// `T_n(y)`.
pub fn cheb_eval(n: usize, y: f64) -> f64 {
    let mut coeffs = vec![0.0; n + 1];
    coeffs[n] = 1.0;
    clenshaw(&coeffs, y)
}

/// `1 + 2·Σ_{k=1}^m T_k(y)`.
pub fn cheb_odd_sum(m: usize, y: f64) -> f64 {
    let mut coeffs = vec![2.0; m + 1];
    coeffs[0] = 1.0;
    clenshaw(&coeffs, y)
}

/// `K_m(s) = (2m+1)·∏_{k=1}^m (1 − s/sin²(kπ/(2m+1)))`.
#[derive(Debug, Clone, PartialEq)]
pub struct KmPoly {
    m: usize,
    zeros: Vec<f64>,
    leading_constant: f64,
}

impl KmPoly {
    pub fn m(&self) -> usize {
        self.m
    }

    /// The zeros `sin²(kπ/(2m+1))`, `k = 1..=m`, increasing in `(0, 1)`.
    pub fn zeros(&self) -> &[f64] {
        &self.zeros
    }

    pub fn leading_constant(&self) -> f64 {
        self.leading_constant
    }

    pub fn eval(&self, s: f64) -> f64 {
        self.zeros.iter().fold(self.leading_constant, |acc, z| acc * (1.0 - s / z))
    }
}

pub fn km_build(m: usize) -> Result<KmPoly> {
    if m == 0 {
        return Err(DegenError::InvalidArgument("K_m needs m >= 1".into()));
    }
    let odd = (2 * m + 1) as f64;
    let zeros = (1..=m)
        .map(|k| (k as f64 * PI / odd).sin().powi(2))
        .collect();
    Ok(KmPoly { m, zeros, leading_constant: odd })
}

pub fn km_eval(poly: &KmPoly, s: f64) -> f64 {
    poly.eval(s)
}
