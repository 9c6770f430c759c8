//! Truncated power series in one variable with arbitrary-precision real
//! coefficients.
//!
//! A [`TruncatedSeries`] of order `K` stores `c₀..c_K` and never reads past
//! them. Precision is given in decimal digits and travels with each value;
//! binary operations require both operands to agree on order and precision.

mod closed_form;
mod elementary;
mod matching;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::{Float, Rational};
use thiserror::Error;

pub use closed_form::{expand_r, expand_rprime_at_1, expand_rs, ClosedFormParams, RExpansion, MAX_ORDER};
pub use matching::{series_match, CoefficientMatch, MatchReport};

/// Smallest working precision accepted anywhere in the module.
pub const MIN_DIGITS: u32 = 30;
/// Default working precision.
pub const DEFAULT_DIGITS: u32 = 60;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("precision of {digits} digits is below the minimum of {MIN_DIGITS}")]
    Precision { digits: u32 },
    #[error("operands differ: order {left_order} at {left_digits} digits vs order {right_order} at {right_digits} digits")]
    Mismatch {
        left_order: usize,
        left_digits: u32,
        right_order: usize,
        right_digits: u32,
    },
    #[error("division by a series whose constant term is numerically zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("branch error: {0}")]
    Branch(String),
    #[error("order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("{given} exact values supplied for a series of order {order}")]
    TooManyValues { given: usize, order: usize },
}

/// Arithmetic operations accepted by [`ts_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
}

/// Elementary functions accepted by [`ts_elementary`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elementary {
    Sin,
    Cos,
    Tan,
    Exp,
    Log,
    Atan,
    Sqrt,
}

/// Bits of binary precision used for `digits` decimal digits, with a guard margin.
pub fn precision_bits(digits: u32) -> u32 {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + 32
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Float>,
    digits: u32,
}

impl TruncatedSeries {
    /// The zero series of the given order.
    pub fn zero(order: usize, digits: u32) -> Result<Self, SeriesError> {
        check_digits(digits)?;
        let prec = precision_bits(digits);
        Ok(Self {
            coeffs: vec![Float::new(prec); order + 1],
            digits,
        })
    }

    /// Builds a series from coefficients, rounding each to the working precision.
    /// Missing high coefficients are zero; extra ones are dropped.
    pub fn from_coeffs(coeffs: &[Float], order: usize, digits: u32) -> Result<Self, SeriesError> {
        let mut s = Self::zero(order, digits)?;
        for (dst, src) in s.coeffs.iter_mut().zip(coeffs) {
            *dst = Float::with_val(dst.prec(), src);
        }
        Ok(s)
    }

    pub fn from_rationals(coeffs: &[Rational], order: usize, digits: u32) -> Result<Self, SeriesError> {
        let mut s = Self::zero(order, digits)?;
        for (dst, src) in s.coeffs.iter_mut().zip(coeffs) {
            *dst = Float::with_val(dst.prec(), src);
        }
        Ok(s)
    }

    pub fn constant(c: &Float, order: usize, digits: u32) -> Result<Self, SeriesError> {
        Self::from_coeffs(std::slice::from_ref(c), order, digits)
    }

    /// `a + b·t`
    pub fn linear(a: &Float, b: &Float, order: usize, digits: u32) -> Result<Self, SeriesError> {
        Self::from_coeffs(&[a.clone(), b.clone()], order, digits)
    }

    /// The series variable `t`.
    pub fn variable(order: usize, digits: u32) -> Result<Self, SeriesError> {
        let prec = precision_bits(digits);
        Self::linear(&Float::new(prec), &Float::with_val(prec, 1), order, digits)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn prec(&self) -> u32 {
        precision_bits(self.digits)
    }

    pub fn coeffs(&self) -> &[Float] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &Float {
        &self.coeffs[n]
    }

    pub fn constant_term(&self) -> &Float {
        &self.coeffs[0]
    }

    /// `n!·cₙ`, the exponential-generating-function reading of coefficient `n`.
    pub fn egf_coeff(&self, n: usize) -> Float {
        let f = rug::Integer::from(rug::Integer::factorial(n as u32));
        Float::with_val(self.prec(), &self.coeffs[n] * &f)
    }

    /// `n!·cₙ` for every `n ≤ order`.
    pub fn egf_coeffs(&self) -> Vec<Float> {
        (0..=self.order()).map(|n| self.egf_coeff(n)).collect()
    }

    /// Magnitude below which a coefficient counts as numerically zero.
    pub fn zero_threshold(&self) -> Float {
        zero_threshold(self.digits)
    }

    pub fn scale(&self, c: &Float) -> Self {
        self.map(|a| Float::with_val(a.prec(), a * c))
    }

    pub fn add_constant(&self, c: &Float) -> Self {
        let mut out = self.clone();
        out.coeffs[0] += c;
        out
    }

    fn map(&self, f: impl Fn(&Float) -> Float) -> Self {
        let prec = self.prec();
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    let mut v = f(a);
                    v.set_prec(prec);
                    v
                })
                .collect(),
            digits: self.digits,
        }
    }

    fn zeroed(&self) -> Self {
        Self {
            coeffs: vec![Float::new(self.prec()); self.coeffs.len()],
            digits: self.digits,
        }
    }

    fn compatible(&self, other: &Self) -> Result<(), SeriesError> {
        if self.coeffs.len() == other.coeffs.len() && self.digits == other.digits {
            Ok(())
        } else {
            Err(SeriesError::Mismatch {
                left_order: self.order(),
                left_digits: self.digits,
                right_order: other.order(),
                right_digits: other.digits,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Ok(out)
    }

    /// Truncated Cauchy product.
    pub fn try_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.compatible(other)?;
        let mut out = self.zeroed();
        for (n, c) in out.coeffs.iter_mut().enumerate() {
            for k in 0..=n {
                *c += &self.coeffs[k] * &other.coeffs[n - k];
            }
        }
        Ok(out)
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, SeriesError> {
        self.compatible(other)?;
        let b0 = &other.coeffs[0];
        if Float::with_val(self.prec(), b0.abs_ref()) <= self.zero_threshold() {
            return Err(SeriesError::DivisionByZero);
        }
        let mut out = self.zeroed();
        for n in 0..out.coeffs.len() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                acc -= &other.coeffs[k] * &out.coeffs[n - k];
            }
            out.coeffs[n] = acc / b0;
        }
        Ok(out)
    }

    pub fn recip(&self) -> Result<Self, SeriesError> {
        let one = Self::constant(&Float::with_val(self.prec(), 1), self.order(), self.digits)?;
        one.try_div(self)
    }

    pub fn square(&self) -> Self {
        self.try_mul(self).expect("same shape")
    }

    /// Formal derivative, one order lower (order 0 stays at order 0 with value 0).
    pub fn derivative(&self) -> Self {
        let k = self.order();
        let mut out = Self {
            coeffs: vec![Float::new(self.prec()); k.max(1)],
            digits: self.digits,
        };
        for n in 0..k {
            out.coeffs[n] = Float::with_val(self.prec(), &self.coeffs[n + 1] * (n as u32 + 1));
        }
        out
    }

    /// Formal antiderivative with constant term `c`, one order higher.
    pub fn integrate(&self, c: &Float) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Float::with_val(self.prec(), c));
        for (n, a) in self.coeffs.iter().enumerate() {
            coeffs.push(Float::with_val(self.prec(), a / (n as u32 + 1)));
        }
        Self {
            coeffs,
            digits: self.digits,
        }
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        let mut out = self.clone();
        out.coeffs.truncate(order + 1);
        out
    }
}

pub(crate) fn check_digits(digits: u32) -> Result<(), SeriesError> {
    if digits < MIN_DIGITS {
        Err(SeriesError::Precision { digits })
    } else {
        Ok(())
    }
}

/// `10^(−digits/2)` at the working precision for `digits`.
pub fn zero_threshold(digits: u32) -> Float {
    let prec = precision_bits(digits);
    let exp = Float::with_val(prec, -f64::from(digits) / 2.0);
    Float::with_val(prec, exp.exp10_ref())
}

/// Fallible arithmetic entry point.
pub fn ts_arith(a: &TruncatedSeries, b: &TruncatedSeries, op: Op) -> Result<TruncatedSeries, SeriesError> {
    match op {
        Op::Add => a.try_add(b),
        Op::Sub => a.try_sub(b),
        Op::Mul => a.try_mul(b),
        Op::Div => a.try_div(b),
    }
}

/// Composes an elementary function with `s`, expanding about the constant term.
pub fn ts_elementary(f: Elementary, s: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    match f {
        Elementary::Sin => Ok(s.sin()),
        Elementary::Cos => Ok(s.cos()),
        Elementary::Tan => s.tan(),
        Elementary::Exp => Ok(s.exp()),
        Elementary::Log => s.ln(),
        Elementary::Atan => s.atan(),
        Elementary::Sqrt => s.sqrt(),
    }
}

/// `s^e` for real `e`; requires a positive constant term.
pub fn ts_pow_real(s: &TruncatedSeries, e: &Float) -> Result<TruncatedSeries, SeriesError> {
    s.pow_real(e)
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    /// Panics on order or precision mismatch.
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.map(|a| Float::with_val(a.prec(), -a))
    }
}

/// Coefficients to 20 significant digits, comma separated.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&c.to_string_radix(10, Some(20)))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const D: u32 = 40;

    fn series(c: &[i64], order: usize) -> TruncatedSeries {
        let q: Vec<Rational> = c.iter().map(|&v| Rational::from(v)).collect();
        TruncatedSeries::from_rationals(&q, order, D).unwrap()
    }

    pub(super) fn assert_close(s: &TruncatedSeries, want: &[Rational]) {
        let tol = s.zero_threshold();
        for (n, w) in want.iter().enumerate() {
            let err = Float::with_val(s.prec(), s.coeff(n) - w).abs();
            assert!(err < tol, "coefficient {n}: {} vs {w}", s.coeff(n));
        }
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn product_and_difference() {
        let a = series(&[1, 1], 2);
        let b = series(&[1, -1], 2);
        assert_close(&(&a * &b), &ints(&[1, 0, -1]));
        assert_close(&(&a - &a), &ints(&[0, 0, 0]));
    }

    #[test]
    fn geometric_series() {
        let one = series(&[1], 3);
        let den = series(&[1, -1], 3);
        let q = ts_arith(&one, &den, Op::Div).unwrap();
        assert_close(&q, &ints(&[1, 1, 1, 1]));
    }

    #[test]
    fn division_by_zero_constant() {
        let zero_const = series(&[0, 1], 3);
        assert_eq!(series(&[1], 3).try_div(&zero_const), Err(SeriesError::DivisionByZero));
    }

    #[test]
    fn mismatch_and_precision_errors() {
        let a = series(&[1], 2);
        let b = series(&[1], 3);
        assert!(matches!(ts_arith(&a, &b, Op::Add), Err(SeriesError::Mismatch { .. })));
        assert_eq!(TruncatedSeries::zero(3, 29), Err(SeriesError::Precision { digits: 29 }));
    }

    #[test]
    #[should_panic]
    fn operator_panics_on_mismatch() {
        let _ = &series(&[1], 2) + &series(&[1], 4);
    }

    #[test]
    fn calculus() {
        let s = series(&[1, 2, 3], 2);
        assert_close(&s.derivative(), &ints(&[2, 6]));
        let back = s.derivative().integrate(&Float::with_val(s.prec(), 1));
        assert_close(&back, &ints(&[1, 2, 3]));
    }

    #[test]
    fn egf_reading() {
        let e = series(&[1, 1], 3).exp();
        // exp(1 + t): every n!·cₙ equals e
        let want = Float::with_val(e.prec(), 1).exp();
        for c in e.egf_coeffs() {
            assert!(Float::with_val(e.prec(), &c - &want).abs() < e.zero_threshold());
        }
    }
}
