//! Closed-form exponential generating functions, expanded as truncated series in `t`.

use rug::ops::Pow;
use rug::{Float, Rational};

use super::{check_digits, precision_bits, SeriesError, TruncatedSeries};

/// Largest order accepted by the expansions.
pub const MAX_ORDER: usize = 24;

/// Constants derived from a fixed `x > 1/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormParams {
    pub x: Rational,
    /// `√(2x−1)`
    pub r: Float,
    /// `√x`
    pub sqrt_x: Float,
    /// `u(x, 0) = −arctan √(2x−1)`
    pub u0: Float,
    /// `((√(2x)+1)/(√(2x)−1))^{√2/4}`
    pub p: Float,
}

impl ClosedFormParams {
    pub fn new(x: &Rational, digits: u32) -> Result<Self, SeriesError> {
        check_digits(digits)?;
        if *x <= Rational::from((1, 2)) {
            return Err(SeriesError::Domain(format!("x = {x} must exceed 1/2")));
        }
        let prec = precision_bits(digits);
        let xf = Float::with_val(prec, x);
        let r = Float::with_val(prec, Float::with_val(prec, &xf * 2u32) - 1u32).sqrt();
        let sqrt_x = xf.clone().sqrt();
        let u0 = -r.clone().atan();
        let s2x = Float::with_val(prec, &xf * 2u32).sqrt();
        let ratio = Float::with_val(prec, &s2x + 1u32) / Float::with_val(prec, &s2x - 1u32);
        let exponent = Float::with_val(prec, 2u32).sqrt() / 4u32;
        let p = ratio.pow(&exponent);
        Ok(Self {
            x: x.clone(),
            r,
            sqrt_x,
            u0,
            p,
        })
    }
}

/// The three expansions `R⁺(x;t)`, `R⁻(x;t)` and `R(x;t) = R⁺ + R⁻`.
#[derive(Debug, Clone, PartialEq)]
pub struct RExpansion {
    pub plus: TruncatedSeries,
    pub minus: TruncatedSeries,
    pub total: TruncatedSeries,
}

fn check_order(order: usize) -> Result<(), SeriesError> {
    if order > MAX_ORDER {
        Err(SeriesError::OrderTooLarge { order, max: MAX_ORDER })
    } else {
        Ok(())
    }
}

fn positive_constant(s: &TruncatedSeries, what: &str) -> Result<(), SeriesError> {
    let c = s.constant_term();
    if *c > s.zero_threshold() {
        Ok(())
    } else {
        Err(SeriesError::Branch(format!(
            "{what} has constant term {}, expected a positive value",
            c.to_string_radix(10, Some(12))
        )))
    }
}

/// `(F₁(u), F₂(u))` with `F_{1,2}(u) = −1/(√2 sin u) · (−sin u/(1+cos u))^{∓1/√2}`.
fn f_pair(u: &TruncatedSeries) -> Result<(TruncatedSeries, TruncatedSeries), SeriesError> {
    let prec = u.prec();
    let (sin, cos) = u.sin_cos();
    let one = Float::with_val(prec, 1);
    let base = (-&sin).try_div(&cos.add_constant(&one))?;
    positive_constant(&base, "-sin u/(1+cos u)")?;
    let e = Float::with_val(prec, 2u32).sqrt().recip();
    let pre = sin
        .scale(&Float::with_val(prec, 2u32).sqrt())
        .recip()?
        .scale(&Float::with_val(prec, -1));
    let f1 = &pre * &base.pow_real(&Float::with_val(prec, -&e))?;
    let f2 = &pre * &base.pow_real(&e)?;
    Ok((f1, f2))
}

/// Expands `R⁺(x;t)`, `R⁻(x;t)` and `R(x;t)` to order `K` at precision `digits`.
pub fn expand_r(x: &Rational, order: usize, digits: u32) -> Result<RExpansion, SeriesError> {
    check_order(order)?;
    let cf = ClosedFormParams::new(x, digits)?;
    let prec = precision_bits(digits);
    let u = TruncatedSeries::linear(&cf.u0, &cf.r, order, digits)?;
    let (f1, f2) = f_pair(&u)?;
    let p2 = Float::with_val(prec, cf.p.square_ref());
    let p2f2 = f2.scale(&p2);

    let plus_scale = Float::with_val(prec, &cf.r / Float::with_val(prec, &cf.sqrt_x * &cf.p)) / 2u32;
    let minus_scale = -(Float::with_val(prec, &cf.r / &cf.p) / 2u32);
    let plus = (&p2f2 + &f1).scale(&plus_scale);
    let minus = (&p2f2 - &f1).scale(&minus_scale);
    let total = &plus + &minus;
    Ok(RExpansion { plus, minus, total })
}

/// Expands the closed form of `(d/dx) R(x;t)` at `x = 1`.
pub fn expand_rprime_at_1(order: usize, digits: u32) -> Result<TruncatedSeries, SeriesError> {
    check_order(order)?;
    check_digits(digits)?;
    let prec = precision_bits(digits);
    let f = |v: i32| Float::with_val(prec, v);
    let alpha = Float::with_val(prec, 2u32).sqrt();
    let t = TruncatedSeries::variable(order, digits)?;
    let (sin, cos) = t.sin_cos();
    let sin2 = t.scale(&f(2)).sin();

    let one_minus_sin2 = (-&sin2).add_constant(&f(1));
    let c0 = one_minus_sin2.constant_term();
    let unit_err = Float::with_val(prec, c0 - 1u32).abs();
    if unit_err > one_minus_sin2.zero_threshold() {
        return Err(SeriesError::Domain("1 - sin 2t must have constant term 1".into()));
    }
    let den = one_minus_sin2.scale(&f(4));

    // (3 + 4t) cos t + (4t − 7) sin t + 4t − 2
    let a = t.scale(&f(4)).add_constant(&f(3));
    let b = t.scale(&f(4)).add_constant(&f(-7));
    let num1 = &(&(&a * &cos) + &(&b * &sin)) + &t.scale(&f(4)).add_constant(&f(-2));
    let num2 = &sin - &cos;

    let base = (&cos - &sin).try_div(&(&sin + &cos).add_constant(&alpha))?;
    positive_constant(&base, "(cos t - sin t)/(sqrt2 + sin t + cos t)")?;
    let half_alpha = Float::with_val(prec, &alpha / 2u32);
    let ratio = Float::with_val(prec, &alpha - 1u32) / Float::with_val(prec, &alpha + 1u32);
    let k1 = ratio.pow(Float::with_val(prec, &alpha / 4u32));
    let k2 = k1.clone().recip();

    let term1 = (&num1.try_div(&den)? * &base.pow_real(&Float::with_val(prec, -&half_alpha))?).scale(&k1);
    let term2 = (&num2.try_div(&den)? * &base.pow_real(&half_alpha)?).scale(&k2);
    Ok(&term1 + &term2)
}

/// Expands `RS(x, z) = (r·sec(zr/2) / (r − tan(zr/2)))²` with `r = √(2x−1)`.
pub fn expand_rs(x: &Rational, order: usize, digits: u32) -> Result<TruncatedSeries, SeriesError> {
    check_order(order)?;
    let cf = ClosedFormParams::new(x, digits)?;
    let prec = precision_bits(digits);
    let zero = Float::new(prec);
    let half_r = Float::with_val(prec, &cf.r / 2u32);
    let arg = TruncatedSeries::linear(&zero, &half_r, order, digits)?;
    let (sin, cos) = arg.sin_cos();
    let tan = sin.try_div(&cos)?;
    let sec_r = cos.recip()?.scale(&cf.r);
    let den = (-&tan).add_constant(&cf.r);
    let inner = sec_r.try_div(&den)?;
    Ok(inner.square())
}

#[cfg(test)]
mod tests {
    use rug::float::Constant;

    use super::*;
    use crate::triangles::{table_r, table_s};

    fn close(a: &Float, b: i64, rel: f64) -> bool {
        let b = Float::with_val(a.prec(), b);
        if b == 0 {
            return Float::with_val(a.prec(), a.abs_ref()) < 1e-25;
        }
        let err = Float::with_val(a.prec(), a - &b).abs() / b.abs();
        err < rel
    }

    #[test]
    fn example_one_coefficients() {
        let e = expand_r(&Rational::from(1), 7, 60).unwrap();
        let want = [1, 2, 7, 33, 198, 1439, 12291, 120622];
        for (n, w) in want.iter().enumerate() {
            assert!(close(&e.total.egf_coeff(n), *w, 1e-6), "n={n}: {}", e.total.egf_coeff(n));
        }
        assert!(close(&e.minus.egf_coeff(0), 0, 1e-6));
        assert!(close(&e.plus.egf_coeff(0), 1, 1e-6));
    }

    #[test]
    fn example_two_coefficients() {
        let s = expand_rprime_at_1(7, 60).unwrap();
        let want = [0, 1, 6, 41, 318, 2840, 28736, 325991];
        for (n, w) in want.iter().enumerate() {
            assert!(close(&s.egf_coeff(n), *w, 1e-6), "n={n}: {}", s.egf_coeff(n));
        }
    }

    #[test]
    fn parts_match_tables_at_several_points() {
        let r = table_r(12);
        for x in [Rational::from(2), Rational::from(3), Rational::from((5, 2))] {
            let e = expand_r(&x, 12, 60).unwrap();
            for n in 0..=12 {
                for (tri, s) in [(&r.plus, &e.plus), (&r.minus, &e.minus), (&r.total, &e.total)] {
                    let exact = tri.row(n).eval(&x);
                    let exact_f = Float::with_val(s.prec(), &exact);
                    let got = s.egf_coeff(n);
                    if exact == 0 {
                        assert!(Float::with_val(s.prec(), got.abs_ref()) < s.zero_threshold());
                    } else {
                        let rel = Float::with_val(s.prec(), &got - &exact_f).abs() / exact_f.abs();
                        assert!(rel < 1e-6, "x={x} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn chow_shiu_matches_s_rows() {
        let s = table_s(10);
        for x in [Rational::from(1), Rational::from(2)] {
            let e = expand_rs(&x, 10, 60).unwrap();
            for n in 0..=10 {
                let exact = Float::with_val(e.prec(), &s.row(n).eval(&x));
                let rel = Float::with_val(e.prec(), &e.egf_coeff(n) - &exact).abs() / exact;
                assert!(rel < 1e-6, "x={x} n={n}");
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(expand_r(&Rational::from((1, 2)), 3, 60), Err(SeriesError::Domain(_))));
        assert!(matches!(expand_r(&Rational::from((1, 3)), 3, 60), Err(SeriesError::Domain(_))));
        assert!(matches!(expand_r(&Rational::from(1), 25, 60), Err(SeriesError::OrderTooLarge { .. })));
        assert!(matches!(expand_rs(&Rational::from(1), 3, 20), Err(SeriesError::Precision { .. })));
        assert!(matches!(expand_rprime_at_1(30, 60), Err(SeriesError::OrderTooLarge { .. })));
    }

    #[test]
    fn params_branch_data() {
        let cf = ClosedFormParams::new(&Rational::from(1), 40).unwrap();
        let pi4 = Float::with_val(cf.u0.prec(), Constant::Pi) / 4u32;
        assert!(Float::with_val(cf.u0.prec(), &cf.u0 + &pi4).abs() < 1e-30);
        assert!(cf.u0 < 0);
        assert!(cf.p > 1);
    }
}
