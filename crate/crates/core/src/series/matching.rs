//! Comparison of expanded coefficients `n!·cₙ` against exact values.

use rug::{Float, Rational};
use serde_json::{json, Value};

use super::{SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientMatch {
    pub n: usize,
    pub exact: Rational,
    pub numeric: Float,
    /// Relative error, or absolute error when `exact` is zero.
    pub error: Float,
    pub absolute: bool,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatchReport {
    pub x: Option<Rational>,
    pub order: usize,
    pub digits: u32,
    pub rel_tol: f64,
    pub coefficients: Vec<CoefficientMatch>,
    pub pass: bool,
}

impl MatchReport {
    pub fn with_x(mut self, x: &Rational) -> Self {
        self.x = Some(x.clone());
        self
    }

    /// Largest error over all coefficients, as a double.
    pub fn max_error(&self) -> f64 {
        self.coefficients
            .iter()
            .map(|c| c.error.to_f64())
            .fold(0.0, f64::max)
    }

    pub fn first_failure(&self) -> Option<&CoefficientMatch> {
        self.coefficients.iter().find(|c| !c.pass)
    }

    pub fn to_json(&self) -> Value {
        let coefficients: Vec<Value> = self
            .coefficients
            .iter()
            .map(|c| {
                json!({
                    "n": c.n,
                    "exact": c.exact.to_string(),
                    "numeric": c.numeric.to_string_radix(10, Some(30)),
                    "rel_err": format!("{:.3e}", c.error.to_f64()),
                })
            })
            .collect();
        json!({
            "x": self.x.as_ref().map(|x| x.to_string()),
            "order": self.order,
            "digits": self.digits,
            "coefficients": coefficients,
            "pass": self.pass,
        })
    }
}

/// Compares `n!·cₙ` with `exact[n]` for every supplied value.
///
/// Nonzero values pass when the relative error is below `rel_tol`; zero values
/// pass when the coefficient's magnitude is below `10^(−digits/2)`.
pub fn series_match(s: &TruncatedSeries, exact: &[Rational], rel_tol: f64) -> Result<MatchReport, SeriesError> {
    if exact.len() > s.order() + 1 {
        return Err(SeriesError::TooManyValues {
            given: exact.len(),
            order: s.order(),
        });
    }
    let prec = s.prec();
    let zero_tol = s.zero_threshold();
    let coefficients: Vec<CoefficientMatch> = exact
        .iter()
        .enumerate()
        .map(|(n, e)| {
            let numeric = s.egf_coeff(n);
            let exact_f = Float::with_val(prec, e);
            let diff = Float::with_val(prec, &numeric - &exact_f).abs();
            let absolute = *e == 0;
            let (error, pass) = if absolute {
                let pass = diff < zero_tol;
                (diff, pass)
            } else {
                let rel = diff / exact_f.abs();
                let pass = rel < rel_tol;
                (rel, pass)
            };
            CoefficientMatch {
                n,
                exact: e.clone(),
                numeric,
                error,
                absolute,
                pass,
            }
        })
        .collect();
    let pass = coefficients.iter().all(|c| c.pass);
    Ok(MatchReport {
        x: None,
        order: s.order(),
        digits: s.digits(),
        rel_tol,
        coefficients,
        pass,
    })
}
