//! Elementary functions of a truncated series.
//!
//! Each function is expanded about the constant term `c₀` by the linear
//! recurrence its derivative satisfies, so `s` need not vanish at zero.

use rug::ops::Pow;
use rug::Float;

use super::{SeriesError, TruncatedSeries};

impl TruncatedSeries {
    fn with_coeffs(&self, coeffs: Vec<Float>) -> Self {
        Self {
            coeffs,
            digits: self.digits,
        }
    }

    /// `k·s_k` for `k = 0..=K`.
    fn weighted(&self) -> Vec<Float> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| Float::with_val(self.prec(), c * k as u32))
            .collect()
    }

    /// `(sin s, cos s)` from `n·Sₙ = Σ k sₖ C_{n−k}` and `n·Cₙ = −Σ k sₖ S_{n−k}`.
    pub fn sin_cos(&self) -> (Self, Self) {
        let prec = self.prec();
        let len = self.coeffs.len();
        let ks = self.weighted();
        let (s0, c0) = self.coeffs[0].clone().sin_cos(Float::new(prec));
        let mut sin = vec![s0];
        let mut cos = vec![c0];
        for n in 1..len {
            let mut a = Float::new(prec);
            let mut b = Float::new(prec);
            for k in 1..=n {
                a += &ks[k] * &cos[n - k];
                b -= &ks[k] * &sin[n - k];
            }
            sin.push(a / n as u32);
            cos.push(b / n as u32);
        }
        (self.with_coeffs(sin), self.with_coeffs(cos))
    }

    pub fn sin(&self) -> Self {
        self.sin_cos().0
    }

    pub fn cos(&self) -> Self {
        self.sin_cos().1
    }

    /// Fails when `cos c₀` is numerically zero.
    pub fn tan(&self) -> Result<Self, SeriesError> {
        let (s, c) = self.sin_cos();
        s.try_div(&c).map_err(|_| SeriesError::Domain("tan: cos of the constant term is zero".into()))
    }

    /// `n·gₙ = Σ k sₖ g_{n−k}`.
    pub fn exp(&self) -> Self {
        let prec = self.prec();
        let ks = self.weighted();
        let mut g = vec![self.coeffs[0].clone().exp()];
        for n in 1..self.coeffs.len() {
            let mut acc = Float::new(prec);
            for k in 1..=n {
                acc += &ks[k] * &g[n - k];
            }
            g.push(acc / n as u32);
        }
        self.with_coeffs(g)
    }

    /// Natural logarithm; the constant term must be positive.
    pub fn ln(&self) -> Result<Self, SeriesError> {
        let s0 = &self.coeffs[0];
        if !(s0.is_sign_positive() && !s0.is_zero()) {
            return Err(SeriesError::Domain("log: constant term is not positive".into()));
        }
        let prec = self.prec();
        let mut g = vec![s0.clone().ln()];
        for n in 1..self.coeffs.len() {
            // s₀·n·gₙ = n·sₙ − Σ_{k=1}^{n−1} k gₖ s_{n−k}
            let mut acc = Float::with_val(prec, &self.coeffs[n] * n as u32);
            for k in 1..n {
                let kg = Float::with_val(prec, &g[k] * k as u32);
                acc -= kg * &self.coeffs[n - k];
            }
            g.push(acc / s0 / n as u32);
        }
        Ok(self.with_coeffs(g))
    }

    /// `atan s = atan c₀ + ∫ s′/(1+s²)`.
    pub fn atan(&self) -> Result<Self, SeriesError> {
        let c = self.coeffs[0].clone().atan();
        if self.order() == 0 {
            return Ok(self.with_coeffs(vec![c]));
        }
        let low = self.truncate(self.order() - 1);
        let den = low.square().add_constant(&Float::with_val(self.prec(), 1));
        let q = self.derivative().try_div(&den)?;
        Ok(q.integrate(&c))
    }

    /// Square root; the constant term must be positive.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let s0 = &self.coeffs[0];
        if !(s0.is_sign_positive() && !s0.is_zero()) {
            return Err(SeriesError::Domain("sqrt: constant term is not positive".into()));
        }
        let prec = self.prec();
        let g0 = s0.clone().sqrt();
        let two_g0 = Float::with_val(prec, &g0 * 2u32);
        let mut g = vec![g0];
        for n in 1..self.coeffs.len() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc -= &g[k] * &g[n - k];
            }
            g.push(acc / &two_g0);
        }
        Ok(self.with_coeffs(g))
    }

    /// `s^e`, via `n·s₀·gₙ = Σ_{k=1}^{n} (e·k − (n−k)) sₖ g_{n−k}`.
    pub fn pow_real(&self, e: &Float) -> Result<Self, SeriesError> {
        let s0 = &self.coeffs[0];
        if !(s0.is_sign_positive() && !s0.is_zero()) {
            return Err(SeriesError::Domain("pow: constant term is not positive".into()));
        }
        let prec = self.prec();
        let e = Float::with_val(prec, e);
        let mut g = vec![s0.clone().pow(&e)];
        for n in 1..self.coeffs.len() {
            let mut acc = Float::new(prec);
            for k in 1..=n {
                let w = Float::with_val(prec, &e * k as u32) - (n - k) as u32;
                acc += w * &self.coeffs[k] * &g[n - k];
            }
            g.push(acc / s0 / n as u32);
        }
        Ok(self.with_coeffs(g))
    }
}

#[cfg(test)]
mod tests {
    use rug::Rational;

    use super::super::tests::assert_close;
    use super::*;

    const D: u32 = 50;

    fn t(order: usize) -> TruncatedSeries {
        TruncatedSeries::variable(order, D).unwrap()
    }

    fn q(num: i64, den: i64) -> Rational {
        Rational::from((num, den))
    }

    fn one_plus_t(order: usize) -> TruncatedSeries {
        t(order).add_constant(&Float::with_val(t(order).prec(), 1))
    }

    #[test]
    fn sine_maclaurin() {
        assert_close(&t(5).sin(), &[q(0, 1), q(1, 1), q(0, 1), q(-1, 6), q(0, 1), q(1, 120)]);
        assert_close(&t(4).cos(), &[q(1, 1), q(0, 1), q(-1, 2), q(0, 1), q(1, 24)]);
    }

    #[test]
    fn exp_log_inverse() {
        let s = one_plus_t(6);
        let back = s.ln().unwrap().exp();
        assert_close(&back, &[q(1, 1), q(1, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1)]);
        assert_close(&t(3).exp(), &[q(1, 1), q(1, 1), q(1, 2), q(1, 6)]);
    }

    #[test]
    fn cosine_about_nonzero_constant() {
        let prec = t(3).prec();
        let pi4 = Float::with_val(prec, rug::float::Constant::Pi) / 4u32;
        let s = t(3).add_constant(&-pi4);
        let c = s.cos();
        let half_root2 = Float::with_val(prec, 2).sqrt() / 2u32;
        let err = Float::with_val(prec, c.constant_term() - &half_root2).abs();
        assert!(err < c.zero_threshold());
        // cos(t − π/4) = (cos t + sin t)/√2
        let want = &(&t(3).cos() + &t(3).sin()).scale(&half_root2) - &c;
        for cf in want.coeffs() {
            assert!(Float::with_val(prec, cf.abs_ref()) < c.zero_threshold());
        }
    }

    #[test]
    fn tangent_and_arctangent() {
        assert_close(&t(5).tan().unwrap(), &[q(0, 1), q(1, 1), q(0, 1), q(1, 3), q(0, 1), q(2, 15)]);
        let back = t(7).tan().unwrap().atan().unwrap();
        let mut want = vec![q(0, 1); 8];
        want[1] = q(1, 1);
        assert_close(&back, &want);
        // atan(1 + t) = π/4 + t/2 − t²/4 + t³/12
        let a = one_plus_t(3).atan().unwrap();
        assert_close(&a.truncate(3).add_constant(&-(Float::with_val(a.prec(), rug::float::Constant::Pi) / 4u32)),
            &[q(0, 1), q(1, 2), q(-1, 4), q(1, 12)]);
    }

    #[test]
    fn roots_and_powers() {
        let half = Float::with_val(t(2).prec(), 0.5);
        assert_close(&one_plus_t(2).pow_real(&half).unwrap(), &[q(1, 1), q(1, 2), q(-1, 8)]);
        assert_close(&one_plus_t(2).sqrt().unwrap(), &[q(1, 1), q(1, 2), q(-1, 8)]);
        let sq = one_plus_t(4).square();
        assert_close(&sq.pow_real(&half).unwrap(), &[q(1, 1), q(1, 1), q(0, 1), q(0, 1), q(0, 1)]);
        let zero = Float::new(t(3).prec());
        assert_close(&one_plus_t(3).pow_real(&zero).unwrap(), &[q(1, 1), q(0, 1), q(0, 1), q(0, 1)]);
    }

    #[test]
    fn pow_agrees_with_exp_log() {
        let prec = t(8).prec();
        let s = one_plus_t(8).square().add_constant(&Float::with_val(prec, 2)).sin().add_constant(&Float::with_val(prec, 3));
        let e = Float::with_val(prec, 2).sqrt().recip();
        let direct = s.pow_real(&e).unwrap();
        let via = s.ln().unwrap().scale(&e).exp();
        for (a, b) in direct.coeffs().iter().zip(via.coeffs()) {
            assert!(Float::with_val(prec, a - b).abs() < direct.zero_threshold());
        }
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(t(3).ln(), Err(SeriesError::Domain(_))));
        assert!(matches!(t(3).sqrt(), Err(SeriesError::Domain(_))));
        let neg = t(3).add_constant(&Float::with_val(t(3).prec(), -1));
        assert!(matches!(neg.pow_real(&Float::with_val(neg.prec(), 0.5)), Err(SeriesError::Domain(_))));
        let prec = t(3).prec();
        let half_pi = Float::with_val(prec, rug::float::Constant::Pi) / 2u32;
        assert!(matches!(t(3).add_constant(&half_pi).tan(), Err(SeriesError::Domain(_))));
    }
}
