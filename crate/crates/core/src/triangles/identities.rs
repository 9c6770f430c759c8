//! Exact verification of the polynomial identities satisfied by the triangles.
//!
//! The enumeration-free checks work coefficientwise on recurrence tables and
//! scale to `n` in the hundreds. Identities involving `Ŵₙ` or `E(n,k)` need
//! brute-force rows and are limited by the enumeration caps. Identities
//! between rational functions are checked at sample points in exact
//! rationals; a row is *certified* when the number of distinct points exceeds
//! the degree of the cleared polynomial identity.

use rug::ops::Pow;
use rug::{Integer, Rational};
use serde_json::{json, Value};
use thiserror::Error;

use super::{
    binomial, chebyshev_u, chebyshev_u_explicit, eulerian_a, fibonacci, leftpeak_w, table_dt,
    table_dt_with, table_r, table_r_with, table_s, DtSeeds, RSeeds, Route,
};
use crate::enumerate::{BruteForce, EnumerateError, Family};
use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error("sample point x = -1 is a pole")]
    PoleAtMinusOne,
}

/// A concrete counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub n: usize,
    pub k: Option<usize>,
    pub x: Option<Rational>,
    pub lhs: Rational,
    pub rhs: Rational,
    /// Which side or leg of the identity disagreed.
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowStatus {
    Holds,
    Fails(Witness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCheck {
    pub n: usize,
    pub status: RowStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub n_min: usize,
    pub n_max: usize,
    pub rows: Vec<RowCheck>,
    /// For sample-point checks: whether every row had enough distinct points
    /// to certify polynomial equality. `None` for coefficientwise checks.
    pub certified: Option<bool>,
}

impl IdentityReport {
    fn new(name: &str, rows: Vec<RowCheck>) -> Self {
        let n_min = rows.first().map_or(0, |r| r.n);
        let n_max = rows.last().map_or(0, |r| r.n);
        Self {
            name: name.to_string(),
            n_min,
            n_max,
            rows,
            certified: None,
        }
    }

    /// All rows hold (and, for sample-point checks, the points certify them).
    pub fn holds(&self) -> bool {
        self.certified != Some(false) && self.rows.iter().all(|r| r.status == RowStatus::Holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Witness> {
        self.rows.iter().filter_map(|r| match &r.status {
            RowStatus::Fails(w) => Some(w),
            RowStatus::Holds => None,
        })
    }

    pub fn to_json(&self) -> Value {
        let failures: Vec<Value> = self
            .failures()
            .map(|w| {
                json!({
                    "n": w.n,
                    "k": w.k,
                    "x": w.x.as_ref().map(|x| x.to_string()),
                    "lhs": w.lhs.to_string(),
                    "rhs": w.rhs.to_string(),
                    "detail": w.detail,
                })
            })
            .collect();
        json!({
            "identity": self.name,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "rows_checked": self.rows.len(),
            "certified": self.certified,
            "holds": self.holds(),
            "failures": failures,
        })
    }

    pub fn to_text(&self) -> String {
        let verdict = if self.holds() { "holds" } else { "FAILS" };
        let mut out = format!("{} n={}..{}: {verdict}\n", self.name, self.n_min, self.n_max);
        if self.certified == Some(false) {
            out.push_str("  too few sample points to certify polynomial equality\n");
        }
        for w in self.failures() {
            out.push_str(&format!("  n={}", w.n));
            if let Some(k) = w.k {
                out.push_str(&format!(" k={k}"));
            }
            if let Some(x) = &w.x {
                out.push_str(&format!(" x={x}"));
            }
            out.push_str(&format!(" lhs={} rhs={} ({})\n", w.lhs, w.rhs, w.detail));
        }
        out
    }
}

fn q(v: &Integer) -> Rational {
    Rational::from(v)
}

/// First coefficient where `lhs` and `rhs` differ.
fn compare_coeffs(n: usize, lhs: &IntPoly, rhs: &IntPoly, detail: &str) -> RowStatus {
    let len = lhs.len().max(rhs.len());
    for k in 0..len {
        let (a, b) = (lhs.coeff(k), rhs.coeff(k));
        if a != b {
            return RowStatus::Fails(Witness {
                n,
                k: Some(k),
                x: None,
                lhs: q(&a),
                rhs: q(&b),
                detail: detail.to_string(),
            });
        }
    }
    RowStatus::Holds
}

fn first_failure(statuses: impl IntoIterator<Item = RowStatus>) -> RowStatus {
    statuses
        .into_iter()
        .find(|s| *s != RowStatus::Holds)
        .unwrap_or(RowStatus::Holds)
}

/// `Σ_k (−1)^k C(n−k+1, k) x^k`.
pub fn signed_binomial_row(n: usize) -> IntPoly {
    let n = n as i64;
    IntPoly::from_coeffs(
        (0..=(n + 1) / 2 + 1)
            .map(|k| {
                let c = binomial(n - k + 1, k);
                if k % 2 == 0 { c } else { -c }
            })
            .collect(),
    )
}

/// `x^{(n+1)/2} U_{n+1}(1/(2√x))` read off the coefficients of `U_{n+1}`:
/// the coefficient of `x^j` is `[y^{n+1−2j}] U_{n+1}(y) / 2^{n+1−2j}`.
/// `None` if some coefficient is not divisible by its power of two.
pub fn chebyshev_reflected(n: usize) -> Option<IntPoly> {
    let m = n + 1;
    let u = chebyshev_u(m);
    let mut coeffs = Vec::new();
    for j in 0..=m / 2 {
        let power = m - 2 * j;
        let c = u.coeff(power);
        let (quot, rem) = c.div_rem_euc(Integer::from(1) << power as u32);
        if rem != 0 {
            return None;
        }
        coeffs.push(quot);
    }
    Some(IntPoly::from_coeffs(coeffs))
}

/// `D(n,k) − T(n,k) = (−1)^k C(n−k+1, k)`.
pub fn check_dnk(n_max: usize) -> IdentityReport {
    let dt = table_dt(n_max);
    let rows = (0..=n_max)
        .map(|n| RowCheck {
            n,
            status: compare_coeffs(n, &(dt.d.row(n) - dt.t.row(n)), &signed_binomial_row(n), "D-T vs (-1)^k C(n-k+1,k)"),
        })
        .collect();
    IdentityReport::new("dnk", rows)
}

/// `Dₙ − Tₙ = D⁺_{n+1} − T⁺_{n+1} = (T⁻_{n+2} − D⁻_{n+2})/x = x^{(n+1)/2}U_{n+1}(1/(2√x))`.
pub fn check_thm02_chain(n_max: usize) -> IdentityReport {
    let dt = table_dt(n_max + 2);
    let rows = (0..=n_max)
        .map(|n| {
            let base = dt.d.row(n) - dt.t.row(n);
            let plus_leg = dt.d_plus.row(n + 1) - dt.t_plus.row(n + 1);
            let minus_diff = dt.t_minus.row(n + 2) - dt.d_minus.row(n + 2);
            let mut statuses = vec![compare_coeffs(n, &base, &plus_leg, "D+_{n+1}-T+_{n+1}")];
            match minus_diff.unshift(1) {
                Some(minus_leg) => statuses.push(compare_coeffs(n, &base, &minus_leg, "(T-_{n+2}-D-_{n+2})/x")),
                None => statuses.push(RowStatus::Fails(Witness {
                    n,
                    k: Some(0),
                    x: None,
                    lhs: q(&minus_diff.coeff(0)),
                    rhs: Rational::new(),
                    detail: "T-_{n+2}-D-_{n+2} not divisible by x".to_string(),
                })),
            }
            statuses.push(compare_coeffs(n, &base, &signed_binomial_row(n), "sum (-1)^k C(n-k+1,k) x^k"));
            match chebyshev_reflected(n) {
                Some(u_leg) => statuses.push(compare_coeffs(n, &base, &u_leg, "x^((n+1)/2) U_{n+1}(1/(2 sqrt x))")),
                None => statuses.push(RowStatus::Fails(Witness {
                    n,
                    k: None,
                    x: None,
                    lhs: Rational::new(),
                    rhs: Rational::new(),
                    detail: "U_{n+1} coefficients not divisible by powers of two".to_string(),
                })),
            }
            RowCheck {
                n,
                status: first_failure(statuses),
            }
        })
        .collect();
    IdentityReport::new("thm02", rows)
}

/// `D(n,k) = ½R(n,k) + ½(−1)^k C(n−k+1,k)` and `T(n,k) = ½R(n,k) − ½(−1)^k C(n−k+1,k)`.
pub fn check_corollary_split(n_max: usize) -> IdentityReport {
    let r = table_r(n_max);
    let dt = table_dt(n_max);
    let half = Rational::from((1, 2));
    let rows = (0..=n_max)
        .map(|n| {
            let len = r.total.row(n).len().max(n / 2 + 2);
            let mut status = RowStatus::Holds;
            'k: for k in 0..len {
                let rk = q(&r.total.row(n).coeff(k));
                let mut b = q(&binomial(n as i64 - k as i64 + 1, k as i64));
                if k % 2 == 1 {
                    b = -b;
                }
                let d_want = Rational::from(&half * &rk) + Rational::from(&half * &b);
                let t_want = Rational::from(&half * &rk) - Rational::from(&half * &b);
                for (got, want, detail) in [
                    (q(&dt.d.row(n).coeff(k)), d_want, "D(n,k)"),
                    (q(&dt.t.row(n).coeff(k)), t_want, "T(n,k)"),
                ] {
                    if got != want {
                        status = RowStatus::Fails(Witness {
                            n,
                            k: Some(k),
                            x: None,
                            lhs: got,
                            rhs: want,
                            detail: detail.to_string(),
                        });
                        break 'k;
                    }
                }
            }
            RowCheck { n, status }
        })
        .collect();
    IdentityReport::new("split", rows)
}

/// `Dₙ(−1) − Tₙ(−1) = F_{n+2}`.
pub fn check_fibonacci_corollary(n_max: usize) -> IdentityReport {
    let dt = table_dt(n_max);
    let minus_one = Integer::from(-1);
    let rows = (0..=n_max)
        .map(|n| {
            let lhs = dt.d.row(n).eval_integer(&minus_one) - dt.t.row(n).eval_integer(&minus_one);
            let rhs = fibonacci(n + 2);
            let status = if lhs == rhs {
                RowStatus::Holds
            } else {
                RowStatus::Fails(Witness {
                    n,
                    k: None,
                    x: Some(Rational::from(-1)),
                    lhs: q(&lhs),
                    rhs: q(&rhs),
                    detail: "d_n - t_n vs F_{n+2}".to_string(),
                })
            };
            RowCheck { n, status }
        })
        .collect();
    IdentityReport::new("fib", rows)
}

/// `deg R⁺ₙ = ⌊n/2⌋`, `deg R⁻ₙ = deg Rₙ = ⌈n/2⌉` for `n ≥ 1`.
pub fn check_degrees(n_max: usize) -> IdentityReport {
    let r = table_r(n_max);
    let deg = |p: &IntPoly| p.degree().map_or(-1, |d| d as i64);
    let rows = (1..=n_max)
        .map(|n| {
            let floor = (n / 2) as i64;
            let ceil = n.div_ceil(2) as i64;
            let checks = [
                (deg(r.plus.row(n)), floor, "deg R+_n"),
                (deg(r.minus.row(n)), ceil, "deg R-_n"),
                (deg(r.total.row(n)), ceil, "deg R_n"),
            ];
            let status = checks
                .into_iter()
                .find(|(got, want, _)| got != want)
                .map_or(RowStatus::Holds, |(got, want, detail)| {
                    RowStatus::Fails(Witness {
                        n,
                        k: None,
                        x: None,
                        lhs: Rational::from(got),
                        rhs: Rational::from(want),
                        detail: detail.to_string(),
                    })
                });
            RowCheck { n, status }
        })
        .collect();
    IdentityReport::new("degrees", rows)
}

/// Recurrence and explicit-sum forms of `Uₙ` agree.
pub fn check_chebyshev_paths(n_max: usize) -> IdentityReport {
    let rows = (0..=n_max)
        .map(|n| RowCheck {
            n,
            status: compare_coeffs(n, &chebyshev_u(n), &chebyshev_u_explicit(n), "recurrence vs explicit sum"),
        })
        .collect();
    IdentityReport::new("chebyshev", rows)
}

/// Coefficient and operator recurrences give the same nine triangles.
pub fn check_routes(n_max: usize) -> IdentityReport {
    let seeds = RSeeds::stated();
    let dt_seeds = DtSeeds::stated();
    let coef = table_dt_with(n_max, Route::Coefficient, &seeds, &dt_seeds);
    let oper = table_dt_with(n_max, Route::Operator, &seeds, &dt_seeds);
    let r_coef = table_r_with(n_max, Route::Coefficient, &seeds);
    let r_oper = table_r_with(n_max, Route::Operator, &seeds);
    let rows = (0..=n_max)
        .map(|n| {
            let statuses = Family::SIGNED_SIMSUN.iter().map(|&f| {
                let (a, b) = match (r_coef.get(f), r_oper.get(f)) {
                    (Some(a), Some(b)) => (a, b),
                    _ => (coef.get(f).unwrap(), oper.get(f).unwrap()),
                };
                compare_coeffs(n, a.row(n), b.row(n), f.name())
            });
            RowCheck {
                n,
                status: first_failure(statuses.collect::<Vec<_>>()),
            }
        })
        .collect();
    IdentityReport::new("routes", rows)
}

/// `E(n,k) − Ẽ(n,k) = (−1)^k C(n,k)` from brute-force type-D Eulerian rows.
pub fn check_enk(n_max: usize, brute: &BruteForce) -> Result<IdentityReport, IdentityError> {
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let e = brute.brute_polynomial(Family::EulerianD, n)?.poly;
        let et = brute.brute_polynomial(Family::EulerianT, n)?.poly;
        let want = IntPoly::from_coeffs(
            (0..=n as i64)
                .map(|k| {
                    let c = binomial(n as i64, k);
                    if k % 2 == 0 { c } else { -c }
                })
                .collect(),
        );
        rows.push(RowCheck {
            n,
            status: compare_coeffs(n, &(&e - &et), &want, "E(n,k)-Et(n,k) vs (-1)^k C(n,k)"),
        });
    }
    Ok(IdentityReport::new("enk", rows))
}

fn distinct_points(xs: &[Rational]) -> usize {
    let mut v: Vec<&Rational> = xs.iter().collect();
    v.sort();
    v.dedup();
    v.len()
}

fn sample_status(n: usize, x: &Rational, lhs: Rational, rhs: Rational, detail: &str) -> RowStatus {
    if lhs == rhs {
        RowStatus::Holds
    } else {
        RowStatus::Fails(Witness {
            n,
            k: None,
            x: Some(x.clone()),
            lhs,
            rhs,
            detail: detail.to_string(),
        })
    }
}

/// `Sₙ(2x/(1+x)²) = A_{n+1}(x)/(1+x)ⁿ` at each sample point.
///
/// Multiplying through by `(1+x)ⁿ` turns both sides into polynomials of
/// degree `≤ n`, so `n+1` distinct points certify row `n`.
pub fn check_foata(n_max: usize, xs: &[Rational]) -> Result<IdentityReport, IdentityError> {
    if xs.iter().any(|x| *x == -1) {
        return Err(IdentityError::PoleAtMinusOne);
    }
    let s = table_s(n_max);
    let a = eulerian_a(n_max + 1);
    let rows = (0..=n_max)
        .map(|n| {
            let statuses: Vec<_> = xs
                .iter()
                .map(|x| {
                    let one_plus = Rational::from(x + 1u32);
                    let y = Rational::from(2u32 * x) / Rational::from(one_plus.square_ref());
                    let lhs = s.row(n).eval(&y);
                    let denom = one_plus.pow(n as u32);
                    let rhs = a.row(n + 1).eval(x) / denom;
                    sample_status(n, x, lhs, rhs, "S_n(2x/(1+x)^2) vs A_{n+1}(x)/(1+x)^n")
                })
                .collect();
            RowCheck {
                n,
                status: first_failure(statuses),
            }
        })
        .collect();
    let mut report = IdentityReport::new("foata", rows);
    report.certified = Some(distinct_points(xs) > n_max);
    Ok(report)
}

/// `Sₙ(x) = 2⁻ⁿ Σ_k C(n,k) Ŵ_k(2x) Ŵ_{n−k}(2x)` at each sample point.
///
/// Both sides have degree `≤ n`, so `n+1` distinct points certify row `n`.
pub fn check_convolution_w(
    n_max: usize,
    xs: &[Rational],
    brute: &BruteForce,
) -> Result<IdentityReport, IdentityError> {
    let s = table_s(n_max);
    let w = leftpeak_w(n_max, brute)?;
    let rows = (0..=n_max)
        .map(|n| {
            let statuses: Vec<_> = xs
                .iter()
                .map(|x| {
                    let two_x = Rational::from(2u32 * x);
                    let wv: Vec<Rational> = (0..=n).map(|k| w.row(k).eval(&two_x)).collect();
                    let mut sum = Rational::new();
                    for k in 0..=n {
                        let term = Rational::from(&wv[k] * &wv[n - k]) * binomial(n as i64, k as i64);
                        sum += term;
                    }
                    let rhs = sum / Rational::from(Integer::from(1) << n as u32);
                    let lhs = s.row(n).eval(x);
                    sample_status(n, x, lhs, rhs, "S_n(x) vs 2^-n sum C(n,k) W_k(2x) W_{n-k}(2x)")
                })
                .collect();
            RowCheck {
                n,
                status: first_failure(statuses),
            }
        })
        .collect();
    let mut report = IdentityReport::new("convolution", rows);
    report.certified = Some(distinct_points(xs) > n_max);
    Ok(report)
}

/// Brute-force `RB`, `RB⁺`, `RB⁻` rows equal the recurrence rows.
pub fn check_oracle_r(n_max: usize, brute: &BruteForce) -> Result<IdentityReport, IdentityError> {
    let r = table_r(n_max);
    oracle(
        "oracle-R",
        n_max,
        brute,
        &[Family::Rb, Family::RbPlus, Family::RbMinus],
        |f, n| r.get(f).map(|t| t.row(n).clone()),
    )
}

/// Brute-force rows of the six `D`/`T` classes equal the recurrence rows.
pub fn check_oracle_dt(n_max: usize, brute: &BruteForce) -> Result<IdentityReport, IdentityError> {
    let dt = table_dt(n_max);
    oracle(
        "oracle-DT",
        n_max,
        brute,
        &[
            Family::Rd,
            Family::RdPlus,
            Family::RdMinus,
            Family::Rt,
            Family::RtPlus,
            Family::RtMinus,
        ],
        |f, n| dt.get(f).map(|t| t.row(n).clone()),
    )
}

/// Brute-force type-A simsun rows equal the `Sₙ` recurrence rows.
pub fn check_oracle_s(n_max: usize, brute: &BruteForce) -> Result<IdentityReport, IdentityError> {
    let s = table_s(n_max);
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let got = brute.brute_polynomial(Family::Rs, n)?.poly;
        rows.push(RowCheck {
            n,
            status: compare_coeffs(n, &got, s.row(n), "RS brute vs S_n recurrence"),
        });
    }
    Ok(IdentityReport::new("oracle-S", rows))
}

/// All nine signed classes from one enumeration pass per `n`.
pub fn check_oracle_signed(n_max: usize, brute: &BruteForce) -> Result<IdentityReport, IdentityError> {
    let r = table_r(n_max);
    let dt = table_dt(n_max);
    oracle("oracle-signed", n_max, brute, &Family::SIGNED_SIMSUN, |f, n| {
        r.get(f).or_else(|| dt.get(f)).map(|t| t.row(n).clone())
    })
}

fn oracle(
    name: &str,
    n_max: usize,
    brute: &BruteForce,
    families: &[Family],
    recurrence: impl Fn(Family, usize) -> Option<IntPoly>,
) -> Result<IdentityReport, IdentityError> {
    let mut rows = Vec::new();
    for n in 0..=n_max {
        let profile = brute.signed_profile(n)?;
        let statuses: Vec<_> = families
            .iter()
            .map(|&f| {
                let got = profile.get(f).expect("signed family");
                let want = recurrence(f, n).expect("recurrence family");
                compare_coeffs(n, got, &want, &format!("{f} brute vs recurrence"))
            })
            .collect();
        rows.push(RowCheck {
            n,
            status: first_failure(statuses),
        });
    }
    Ok(IdentityReport::new(name, rows))
}

/// Sample points `1, 2, …, count`.
pub fn default_points(count: usize) -> Vec<Rational> {
    (1..=count as u32).map(Rational::from).collect()
}
