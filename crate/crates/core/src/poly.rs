//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::{Integer, Rational};

/// `coeffs[k]` is the coefficient of `x^k`. Trailing zeros are never stored,
/// so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<Integer>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Integer::from(1))
    }

    pub fn constant(c: Integer) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c · x^k`
    pub fn monomial(c: Integer, k: usize) -> Self {
        let mut coeffs = vec![Integer::new(); k];
        coeffs.push(c);
        Self::from_coeffs(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(Integer::from(1), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Integer>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Integer> {
        self.coeffs
    }

    /// Coefficient of `x^k`; zero outside the stored range.
    pub fn coeff(&self, k: usize) -> Integer {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Like [`coeff`](Self::coeff) but accepts negative indices (always zero).
    pub fn coeff_at(&self, k: i64) -> Integer {
        if k < 0 {
            Integer::new()
        } else {
            self.coeff(k as usize)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of stored coefficients, `degree + 1` (0 for the zero polynomial).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| Integer::from(c * k as u64))
                .collect(),
        )
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Integer::new(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Exact division by `x^k`; `None` if any of the low `k` coefficients is nonzero.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| *c != 0) {
            return None;
        }
        Some(Self::from_coeffs(self.coeffs.iter().skip(k).cloned().collect()))
    }

    pub fn scale(&self, c: &Integer) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| Integer::from(a * c)).collect())
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&Integer::from(c))
    }

    /// The operator `x(1 − 2x)·d/dx` shared by every recurrence of the family.
    pub fn x_one_minus_2x_derivative(&self) -> Self {
        let d = self.derivative();
        &d.shift(1) - &d.shift(2).scale_i64(2)
    }

    pub fn eval_integer(&self, x: &Integer) -> Integer {
        let mut acc = Integer::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    /// Sum of coefficients.
    pub fn total(&self) -> Integer {
        self.coeffs.iter().sum()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| *c >= 0)
    }

    /// Human-oriented rendering such as `1 + 76x + 121x^2`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            let negative = *c < 0;
            let mag = Integer::from(c.abs_ref());
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let show_mag = k == 0 || mag != 1;
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match k {
                0 => {}
                1 => out.push('x'),
                _ => out.push_str(&format!("x^{k}")),
            }
        }
        out
    }
}

/// Comma-separated coefficients, `0` for the zero polynomial.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.len().max(rhs.len());
        IntPoly::from_coeffs(
            (0..n)
                .map(|k| self.coeff(k) + rhs.coeff(k))
                .collect(),
        )
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.len().max(rhs.len());
        IntPoly::from_coeffs(
            (0..n)
                .map(|k| self.coeff(k) - rhs.coeff(k))
                .collect(),
        )
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![Integer::new(); self.len() + rhs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| Integer::from(-c)).collect())
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_and_degree() {
        let p = IntPoly::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(IntPoly::from_i64s(&[0, 0]).degree(), None);
        assert!(IntPoly::from_i64s(&[0]).is_zero());
    }

    #[test]
    fn arithmetic() {
        let a = IntPoly::from_i64s(&[1, 1]);
        let b = IntPoly::from_i64s(&[1, -1]);
        assert_eq!(&a * &b, IntPoly::from_i64s(&[1, 0, -1]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(&a + &b, IntPoly::from_i64s(&[2]));
        assert_eq!(-&a, IntPoly::from_i64s(&[-1, -1]));
    }

    #[test]
    fn derivative_operator() {
        // x(1-2x) d/dx (1 + 3x + 5x^2) = x(1-2x)(3 + 10x) = 3x + 4x^2 - 20x^3
        let p = IntPoly::from_i64s(&[1, 3, 5]);
        assert_eq!(
            p.x_one_minus_2x_derivative(),
            IntPoly::from_i64s(&[0, 3, 4, -20])
        );
        assert_eq!(IntPoly::one().x_one_minus_2x_derivative(), IntPoly::zero());
    }

    #[test]
    fn shift_unshift() {
        let p = IntPoly::from_i64s(&[1, 2]);
        assert_eq!(p.shift(2), IntPoly::from_i64s(&[0, 0, 1, 2]));
        assert_eq!(p.shift(2).unshift(2), Some(p.clone()));
        assert_eq!(p.unshift(1), None);
        assert_eq!(IntPoly::zero().shift(3), IntPoly::zero());
    }

    #[test]
    fn evaluation() {
        let p = IntPoly::from_i64s(&[1, 36, 62]);
        assert_eq!(p.eval_integer(&Integer::from(-1)), 27);
        assert_eq!(p.eval(&Rational::from((1, 2))), Rational::from((69, 2)));
        assert_eq!(p.total(), 99);
    }

    #[test]
    fn rendering() {
        assert_eq!(IntPoly::from_i64s(&[1, 76, 121]).pretty(), "1 + 76x + 121x^2");
        assert_eq!(IntPoly::from_i64s(&[-1, 0, 4]).pretty(), "-1 + 4x^2");
        assert_eq!(IntPoly::from_i64s(&[0, 1]).pretty(), "x");
        assert_eq!(IntPoly::zero().pretty(), "0");
        assert_eq!(IntPoly::from_i64s(&[0, 40, 59]).to_string(), "0,40,59");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
