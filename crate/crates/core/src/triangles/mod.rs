//! Exact descent-polynomial triangles computed by recurrence, plus the
//! auxiliary sequences that appear in the identities ([`identities`]).
//!
//! Every table is built in exact integer arithmetic. Rows 0 and 1 are seeded
//! from the stated initial conditions; rows `n ≥ 2` come from the coefficient
//! recurrences (the default) or from the equivalent derivative-operator
//! recurrences, selected with [`Route`].

pub mod identities;

use std::fmt;

use rug::Integer;
use serde_json::{json, Value};

use crate::enumerate::{BruteForce, DescentPolynomial, EnumerateError, Family};
use crate::poly::IntPoly;

pub use identities::{IdentityError, IdentityReport, RowCheck, RowStatus, Witness};

/// What a triangle tabulates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TriangleClass {
    Family(Family),
    /// Chebyshev polynomials of the second kind (signed coefficients).
    ChebyshevU,
}

impl fmt::Display for TriangleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriangleClass::Family(fam) => f.write_str(fam.name()),
            TriangleClass::ChebyshevU => f.write_str("U"),
        }
    }
}

/// Rows `0..=N` of one class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    pub class: TriangleClass,
    pub rows: Vec<IntPoly>,
}

impl Triangle {
    pub fn new(class: TriangleClass, rows: Vec<IntPoly>) -> Self {
        Self { class, rows }
    }

    fn of(family: Family, rows: Vec<IntPoly>) -> Self {
        Self::new(TriangleClass::Family(family), rows)
    }

    pub fn row(&self, n: usize) -> &IntPoly {
        &self.rows[n]
    }

    /// Largest row index.
    pub fn n_max(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    /// Row `n` as a descent polynomial; `None` for non-family triangles.
    pub fn polynomial(&self, n: usize) -> Option<DescentPolynomial> {
        match self.class {
            TriangleClass::Family(f) => Some(DescentPolynomial::new(f, n, self.rows[n].clone())),
            TriangleClass::ChebyshevU => None,
        }
    }

    /// First `rows` rows.
    pub fn truncated(&self, rows: usize) -> Triangle {
        Triangle::new(self.class, self.rows[..rows.min(self.rows.len())].to_vec())
    }

    /// One line per row, coefficients left to right, no header.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&row.to_string());
            out.push('\n');
        }
        out
    }

    /// `{"class": ..., "rows": [[...], ...]}` with coefficients as decimal strings.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| {
                if row.is_zero() {
                    vec!["0".to_string()]
                } else {
                    row.coeffs().iter().map(|c| c.to_string()).collect()
                }
            })
            .collect();
        json!({ "class": self.class.to_string(), "rows": rows })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (n, row) in self.rows.iter().enumerate() {
            out.push_str(&format!("{n}: {}\n", row.pretty()));
        }
        out
    }
}

/// Which form of the recurrences builds rows `n ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Route {
    /// Coefficient recurrences for `R(n,k)`, `D(n,k)`, ….
    #[default]
    Coefficient,
    /// Polynomial recurrences with the operator `x(1−2x)·d/dx`.
    Operator,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RTriangles {
    pub plus: Triangle,
    pub minus: Triangle,
    pub total: Triangle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DtTriangles {
    pub d_plus: Triangle,
    pub d_minus: Triangle,
    pub t_plus: Triangle,
    pub t_minus: Triangle,
    pub d: Triangle,
    pub t: Triangle,
}

impl RTriangles {
    pub fn get(&self, family: Family) -> Option<&Triangle> {
        match family {
            Family::Rb => Some(&self.total),
            Family::RbPlus => Some(&self.plus),
            Family::RbMinus => Some(&self.minus),
            _ => None,
        }
    }
}

impl DtTriangles {
    pub fn get(&self, family: Family) -> Option<&Triangle> {
        match family {
            Family::Rd => Some(&self.d),
            Family::RdPlus => Some(&self.d_plus),
            Family::RdMinus => Some(&self.d_minus),
            Family::Rt => Some(&self.t),
            Family::RtPlus => Some(&self.t_plus),
            Family::RtMinus => Some(&self.t_minus),
            _ => None,
        }
    }
}

/// Rows 0 and 1 of the `R` tables as `(R⁺, R⁻, R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RSeeds {
    pub rows: [(IntPoly, IntPoly, IntPoly); 2],
}

impl RSeeds {
    /// `R₀⁺ = R₀ = 1`, `R₀⁻ = 0`, `R₁⁺ = 1`, `R₁⁻ = x`, `R₁ = 1 + x`.
    pub fn stated() -> Self {
        let p = IntPoly::from_i64s;
        Self {
            rows: [(p(&[1]), p(&[0]), p(&[1])), (p(&[1]), p(&[0, 1]), p(&[1, 1]))],
        }
    }

    /// Seeds taken from enumeration instead of the stated values.
    pub fn brute(brute: &BruteForce) -> Result<Self, EnumerateError> {
        let row = |n| -> Result<_, EnumerateError> {
            Ok((
                brute.brute_polynomial(Family::RbPlus, n)?.poly,
                brute.brute_polynomial(Family::RbMinus, n)?.poly,
                brute.brute_polynomial(Family::Rb, n)?.poly,
            ))
        };
        Ok(Self {
            rows: [row(0)?, row(1)?],
        })
    }
}

/// Rows 0 and 1 of the six `D`/`T` tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DtSeeds {
    /// `[D⁺, D⁻, T⁺, T⁻, D, T]` for each of rows 0 and 1.
    pub rows: [[IntPoly; 6]; 2],
}

impl DtSeeds {
    pub fn stated() -> Self {
        let p = IntPoly::from_i64s;
        Self {
            rows: [
                [p(&[1]), p(&[0]), p(&[0]), p(&[0]), p(&[1]), p(&[0])],
                [p(&[1]), p(&[0]), p(&[0]), p(&[0, 1]), p(&[1]), p(&[0, 1])],
            ],
        }
    }

    pub fn brute(brute: &BruteForce) -> Result<Self, EnumerateError> {
        let fams = [
            Family::RdPlus,
            Family::RdMinus,
            Family::RtPlus,
            Family::RtMinus,
            Family::Rd,
            Family::Rt,
        ];
        let row = |n| -> Result<[IntPoly; 6], EnumerateError> {
            let mut out: [IntPoly; 6] = Default::default();
            for (slot, f) in out.iter_mut().zip(fams) {
                *slot = brute.brute_polynomial(f, n)?.poly;
            }
            Ok(out)
        };
        Ok(Self {
            rows: [row(0)?, row(1)?],
        })
    }
}

fn int(v: i64) -> Integer {
    Integer::from(v)
}

/// `Σ_k f(k) x^k` for `k = 0..len`.
fn build_row(len: usize, f: impl Fn(i64) -> Integer) -> IntPoly {
    IntPoly::from_coeffs((0..len as i64).map(f).collect())
}

pub fn table_r(n_max: usize) -> RTriangles {
    table_r_with(n_max, Route::Coefficient, &RSeeds::stated())
}

pub fn table_r_with(n_max: usize, route: Route, seeds: &RSeeds) -> RTriangles {
    let mut plus = Vec::with_capacity(n_max + 1);
    let mut minus = Vec::with_capacity(n_max + 1);
    let mut total = Vec::with_capacity(n_max + 1);
    for (p, m, r) in seeds.rows.iter().take(n_max + 1) {
        plus.push(p.clone());
        minus.push(m.clone());
        total.push(r.clone());
    }
    for n in 2..=n_max {
        let (rp, rm, r) = (&plus[n - 1], &minus[n - 1], &total[n - 1]);
        let (np, nm, nr) = match route {
            Route::Coefficient => {
                let ni = n as i64;
                let len = n / 2 + 2;
                (
                    build_row(len, |k| {
                        int(2 * k) * rp.coeff_at(k)
                            + int(2 * ni - 4 * k + 2) * rp.coeff_at(k - 1)
                            + r.coeff_at(k)
                    }),
                    build_row(len, |k| {
                        int(2 * k) * rm.coeff_at(k)
                            + int(2 * ni - 4 * k + 3) * rm.coeff_at(k - 1)
                            + r.coeff_at(k - 1)
                    }),
                    build_row(len, |k| {
                        int(2 * k + 1) * r.coeff_at(k)
                            + int(2 * ni - 4 * k + 3) * r.coeff_at(k - 1)
                            + rm.coeff_at(k - 1)
                    }),
                )
            }
            Route::Operator => {
                // step from row m = n-1 to row m+1
                let m = (n - 1) as i64;
                let op = |p: &IntPoly| p.x_one_minus_2x_derivative().scale_i64(2);
                let x = IntPoly::x();
                (
                    &(&rp.shift(1).scale_i64(2 * m) + &op(rp)) + r,
                    &(&rm.shift(1).scale_i64(2 * m + 1) + &op(rm)) + &r.shift(1),
                    &(&(r + &r.shift(1).scale_i64(2 * m + 1)) + &op(r)) + &(&x * rm),
                )
            }
        };
        plus.push(np);
        minus.push(nm);
        total.push(nr);
    }
    RTriangles {
        plus: Triangle::of(Family::RbPlus, plus),
        minus: Triangle::of(Family::RbMinus, minus),
        total: Triangle::of(Family::Rb, total),
    }
}

pub fn table_dt(n_max: usize) -> DtTriangles {
    table_dt_with(n_max, Route::Coefficient, &RSeeds::stated(), &DtSeeds::stated())
}

pub fn table_dt_with(n_max: usize, route: Route, r_seeds: &RSeeds, seeds: &DtSeeds) -> DtTriangles {
    let r = table_r_with(n_max, route, r_seeds);
    let mut rows: Vec<[IntPoly; 6]> = seeds.rows.iter().take(n_max + 1).cloned().collect();
    for n in 2..=n_max {
        let [dp, dm, tp, tm, d, t] = &rows[n - 1];
        let rp = r.plus.row(n - 1);
        let rm = r.minus.row(n - 1);
        let next = match route {
            Route::Coefficient => {
                let ni = n as i64;
                let len = n / 2 + 2;
                // shared parts of the + and - recurrences
                let plus_core = |k: i64| int(k) * rp.coeff_at(k) + int(ni - 2 * k + 1) * rp.coeff_at(k - 1);
                let minus_core = |k: i64| int(k) * rm.coeff_at(k) + int(ni - 2 * k + 2) * rm.coeff_at(k - 1);
                let whole = |same: &IntPoly, other: &IntPoly, minus_same: &IntPoly, k: i64| {
                    int(1 + k) * same.coeff_at(k)
                        + int(ni - 2 * k + 1) * same.coeff_at(k - 1)
                        + int(k) * other.coeff_at(k)
                        + int(ni - 2 * k + 2) * other.coeff_at(k - 1)
                        + minus_same.coeff_at(k - 1)
                };
                [
                    build_row(len, |k| plus_core(k) + d.coeff_at(k)),
                    build_row(len, |k| minus_core(k) + tp.coeff_at(k - 1)),
                    build_row(len, |k| plus_core(k) + t.coeff_at(k)),
                    build_row(len, |k| minus_core(k) + dp.coeff_at(k - 1)),
                    build_row(len, |k| whole(d, t, dm, k)),
                    build_row(len, |k| whole(t, d, tm, k)),
                ]
            }
            Route::Operator => {
                let m = (n - 1) as i64;
                let x = IntPoly::x();
                let plus_core = &rp.shift(1).scale_i64(m) + &rp.x_one_minus_2x_derivative();
                let minus_core = &rm.shift(1).scale_i64(m + 1) + &rm.x_one_minus_2x_derivative();
                let r_op = r.total.row(n - 1).x_one_minus_2x_derivative();
                let one_plus_mx = IntPoly::from_coeffs(vec![int(1), int(m)]);
                let whole = |same: &IntPoly, other: &IntPoly, minus_same: &IntPoly| {
                    &(&(&(&one_plus_mx * same) + &other.shift(1).scale_i64(m + 1)) + &r_op)
                        + &(&x * minus_same)
                };
                [
                    &plus_core + d,
                    &minus_core + &tp.shift(1),
                    &plus_core + t,
                    &minus_core + &dp.shift(1),
                    whole(d, t, dm),
                    whole(t, d, tm),
                ]
            }
        };
        rows.push(next);
    }
    let column = |i: usize, f: Family| Triangle::of(f, rows.iter().map(|r| r[i].clone()).collect());
    DtTriangles {
        d_plus: column(0, Family::RdPlus),
        d_minus: column(1, Family::RdMinus),
        t_plus: column(2, Family::RtPlus),
        t_minus: column(3, Family::RtMinus),
        d: column(4, Family::Rd),
        t: column(5, Family::Rt),
    }
}

/// Type-A simsun descent polynomials: `S₀ = 1`, `S_{n+1} = (1+nx)Sₙ + x(1−2x)Sₙ'`.
pub fn table_s(n_max: usize) -> Triangle {
    let mut rows = vec![IntPoly::one()];
    for n in 0..n_max {
        let s = &rows[n];
        let one_plus_nx = IntPoly::from_coeffs(vec![int(1), int(n as i64)]);
        let next = &(&one_plus_nx * s) + &s.x_one_minus_2x_derivative();
        rows.push(next);
    }
    Triangle::of(Family::Rs, rows)
}

/// Classical Eulerian triangle: `A(n,k) = (k+1)A(n−1,k) + (n−k)A(n−1,k−1)`.
pub fn eulerian_a(n_max: usize) -> Triangle {
    let mut rows = vec![IntPoly::one()];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let ni = n as i64;
        let row = build_row(n.max(1), |k| {
            int(k + 1) * prev.coeff_at(k) + int(ni - k) * prev.coeff_at(k - 1)
        });
        rows.push(row);
    }
    Triangle::of(Family::EulerianA, rows)
}

/// Left-peak polynomials `Ŵₙ` by enumeration.
pub fn leftpeak_w(n_max: usize, brute: &BruteForce) -> Result<Triangle, EnumerateError> {
    let rows = (0..=n_max)
        .map(|n| brute.brute_polynomial(Family::LeftPeakW, n).map(|p| p.poly))
        .collect::<Result<_, _>>()?;
    Ok(Triangle::of(Family::LeftPeakW, rows))
}

/// Any family by enumeration, rows `0..=n_max`.
pub fn brute_triangle(family: Family, n_max: usize, brute: &BruteForce) -> Result<Triangle, EnumerateError> {
    let rows = (0..=n_max)
        .map(|n| brute.brute_polynomial(family, n).map(|p| p.poly))
        .collect::<Result<_, _>>()?;
    Ok(Triangle::of(family, rows))
}

/// `Uₙ` by `U₀ = 1`, `U₁ = 2x`, `U_{n+1} = 2xUₙ − U_{n−1}`.
pub fn chebyshev_u(n: usize) -> IntPoly {
    let two_x = IntPoly::from_i64s(&[0, 2]);
    let (mut prev, mut cur) = (IntPoly::one(), two_x.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `Uₙ` by `Σ_{k ≤ n/2} (−1)^k C(n−k, k) (2x)^{n−2k}`.
pub fn chebyshev_u_explicit(n: usize) -> IntPoly {
    let mut coeffs = vec![Integer::new(); n + 1];
    for k in 0..=n / 2 {
        let power = n - 2 * k;
        let mut c = binomial((n - k) as i64, k as i64) << power as u32;
        if k % 2 == 1 {
            c = -c;
        }
        coeffs[power] += c;
    }
    IntPoly::from_coeffs(coeffs)
}

pub fn chebyshev_triangle(n_max: usize) -> Triangle {
    Triangle::new(TriangleClass::ChebyshevU, (0..=n_max).map(chebyshev_u).collect())
}

/// `F₀ = 0`, `F₁ = 1`, `Fₙ = F_{n−1} + F_{n−2}`.
pub fn fibonacci(n: usize) -> Integer {
    let (mut a, mut b) = (Integer::new(), Integer::from(1));
    for _ in 0..n {
        let next = Integer::from(&a + &b);
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `C(n, k)`, zero when `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> Integer {
    if n < 0 || k < 0 || k > n {
        return Integer::new();
    }
    Integer::from(Integer::binomial_u(n as u32, k as u32))
}
