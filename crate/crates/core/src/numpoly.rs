//! Bivariate numerical polynomials in the binomial basis.
//!
//! A [`NumPoly2`] stores integers `a[i][j]` and represents
//!
//! ```text
//! f(t1, t2) = sum_{i, j} a[i][j] * C(t1 + i, i) * C(t2 + j, j)
//! ```
//!
//! Every integer-valued polynomial has exactly one such representation with
//! integer coefficients, so equality of polynomials is equality of the
//! (trimmed) coefficient matrices.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumPolyError {
    #[error("polynomial is not numerical: binomial coefficient ({i}, {j}) = {value} is not an integer")]
    NonNumerical { i: usize, j: usize, value: String },
    #[error("grid point ({r}, {s}) disagrees with the fitted polynomial: expected {expected}, fitted {fitted}")]
    ValidationMismatch {
        r: i64,
        s: i64,
        expected: String,
        fitted: String,
    },
    #[error("fitted coefficient ({i}, {j}) = {value} is not an integer")]
    NonIntegralFit { i: usize, j: usize, value: String },
    #[error("grid is missing point ({r}, {s}) of the fitting block")]
    MissingGridPoint { r: i64, s: i64 },
    #[error("grid has no validation points beyond the {rows}x{cols} fitting block")]
    NoValidationPoints { rows: usize, cols: usize },
    #[error("malformed coefficient matrix: {0}")]
    Malformed(String),
}

/// `C(t + i, i)` for an integer `t`, i.e. `(t+i)(t+i-1)...(t+1) / i!`.
///
/// This is the polynomial binomial, so negative `t` is allowed.
pub fn binomial_shifted(t: &BigInt, i: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for k in 1..=i {
        num *= t + BigInt::from(k);
        den *= BigInt::from(k);
    }
    num / den
}

/// Polynomial binomial `C(x, k) = x(x-1)...(x-k+1)/k!` at an integer.
pub fn binomial_poly(x: &BigInt, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for q in 0..k {
        num *= x - BigInt::from(q);
        den *= BigInt::from(q + 1);
    }
    num / den
}

fn small_binomial(n: usize, k: usize) -> BigInt {
    binomial_poly(&BigInt::from(n), k)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumPoly2 {
    // Row i is the t1-index, column j the t2-index. Always at least 1x1,
    // rectangular, and trimmed of zero fringes (except the lone zero).
    coeffs: Vec<Vec<BigInt>>,
}

impl NumPoly2 {
    pub fn zero() -> Self {
        NumPoly2 {
            coeffs: vec![vec![BigInt::zero()]],
        }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![vec![c.into()]]).expect("1x1 matrix")
    }

    /// Builds a polynomial from a (possibly ragged or untrimmed) coefficient
    /// matrix. Missing entries are zero.
    pub fn from_coeffs(rows: Vec<Vec<BigInt>>) -> Result<Self, NumPolyError> {
        if rows.is_empty() {
            return Err(NumPolyError::Malformed("no rows".into()));
        }
        let width = rows.iter().map(Vec::len).max().unwrap_or(0).max(1);
        let mut coeffs: Vec<Vec<BigInt>> = rows
            .into_iter()
            .map(|mut row| {
                row.resize(width, BigInt::zero());
                row
            })
            .collect();
        trim(&mut coeffs);
        Ok(NumPoly2 { coeffs })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_coeffs(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .expect("non-empty literal")
    }

    /// `C(t1 + i, i) * C(t2 + j, j)`.
    pub fn basis(i: usize, j: usize) -> Self {
        let mut rows = vec![vec![BigInt::zero(); j + 1]; i + 1];
        rows[i][j] = BigInt::one();
        Self::from_coeffs(rows).expect("non-empty")
    }

    /// `C(t1 + m - b, m) * (t2 + 1 - c)`, the summand shape of the
    /// inclusion-exclusion formula for staircase complements.
    pub fn shifted_cone(m: usize, b: i64, c: i64) -> Self {
        // C(t + m - b, m) in the power basis.
        let mut t1 = vec![BigRational::one()];
        for k in 0..m as i64 {
            // multiply by (t + m - b - k)
            let shift = BigRational::from_integer(BigInt::from(m as i64 - b - k));
            let mut next = vec![BigRational::zero(); t1.len() + 1];
            for (p, c0) in t1.iter().enumerate() {
                next[p + 1] += c0;
                next[p] += c0 * &shift;
            }
            t1 = next;
        }
        let fact = BigRational::from_integer((1..=m).fold(BigInt::one(), |acc, k| acc * k));
        let t1: Vec<BigRational> = t1.into_iter().map(|c0| c0 / &fact).collect();
        let t2 = [BigRational::from_integer(BigInt::from(1 - c)), BigRational::one()];
        let power: Vec<Vec<BigRational>> = t1.iter().map(|a| t2.iter().map(|b| a * b).collect()).collect();
        Self::from_power_basis(&power).expect("products of binomials are numerical")
    }

    pub fn coeffs(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.coeffs
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_default()
    }

    /// Degree bound in `t1` (equal to the true partial degree after trimming).
    pub fn d1(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn d2(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].len() == 1 && self.coeffs[0][0].is_zero()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<usize> {
        let mut best = None;
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    best = best.max(Some(i + j));
                }
            }
        }
        best
    }

    pub fn eval(&self, r: i64, s: i64) -> BigInt {
        self.eval_big(&BigInt::from(r), &BigInt::from(s))
    }

    pub fn eval_big(&self, r: &BigInt, s: &BigInt) -> BigInt {
        let b1: Vec<BigInt> = (0..=self.d1()).map(|i| binomial_shifted(r, i)).collect();
        let b2: Vec<BigInt> = (0..=self.d2()).map(|j| binomial_shifted(s, j)).collect();
        let mut acc = BigInt::zero();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    acc += c * &b1[i] * &b2[j];
                }
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .map(|row| row.iter().map(|a| a * c).collect())
                .collect(),
        )
        .expect("non-empty")
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let rows = self.coeffs.len().max(other.coeffs.len());
        let cols = self.coeffs[0].len().max(other.coeffs[0].len());
        let out = (0..rows)
            .map(|i| (0..cols).map(|j| f(&self.coeff(i, j), &other.coeff(i, j))).collect())
            .collect();
        Self::from_coeffs(out).expect("non-empty")
    }

    /// Splits `f = f1(t1) * t2 + f0(t1)` (valid when `d2 <= 1`); the parts
    /// are returned as polynomials in `t1` alone.
    pub fn split_t2_linear(&self) -> Option<(NumPoly2, NumPoly2)> {
        if self.d2() > 1 {
            return None;
        }
        // a_i0 C(t1+i,i) + a_i1 C(t1+i,i)(t2+1)
        let slope: Vec<Vec<BigInt>> = (0..=self.d1()).map(|i| vec![self.coeff(i, 1)]).collect();
        let intercept: Vec<Vec<BigInt>> = (0..=self.d1())
            .map(|i| vec![self.coeff(i, 0) + self.coeff(i, 1)])
            .collect();
        Some((Self::from_coeffs(slope).ok()?, Self::from_coeffs(intercept).ok()?))
    }

    /// Converts from power-basis coefficients `c[i][j]` of `t1^i t2^j`.
    ///
    /// Uses `a[k] = sum_l (-1)^l C(k, l) f(-1 - l)` in each variable, which
    /// inverts the binomial basis exactly.
    pub fn from_power_basis(power: &[Vec<BigRational>]) -> Result<Self, NumPolyError> {
        if power.is_empty() {
            return Err(NumPolyError::Malformed("no rows".into()));
        }
        let d1 = power.len() - 1;
        let d2 = power.iter().map(Vec::len).max().unwrap_or(1).max(1) - 1;
        let eval_power = |x: i64, y: i64| -> BigRational {
            let x = BigRational::from_integer(BigInt::from(x));
            let y = BigRational::from_integer(BigInt::from(y));
            let mut acc = BigRational::zero();
            let mut xp = BigRational::one();
            for row in power {
                let mut yp = BigRational::one();
                for c in row {
                    acc += c * &xp * &yp;
                    yp *= &y;
                }
                xp *= &x;
            }
            acc
        };
        let samples: Vec<Vec<BigRational>> = (0..=d1)
            .map(|l| (0..=d2).map(|q| eval_power(-1 - l as i64, -1 - q as i64)).collect())
            .collect();
        let mut rows = vec![vec![BigInt::zero(); d2 + 1]; d1 + 1];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                let mut acc = BigRational::zero();
                for (l, sample_row) in samples.iter().enumerate().take(i + 1) {
                    for (q, sample) in sample_row.iter().enumerate().take(j + 1) {
                        let sign = if (l + q) % 2 == 0 { 1 } else { -1 };
                        let w = small_binomial(i, l) * small_binomial(j, q) * BigInt::from(sign);
                        acc += sample * BigRational::from_integer(w);
                    }
                }
                if !acc.is_integer() {
                    return Err(NumPolyError::NonNumerical {
                        i,
                        j,
                        value: acc.to_string(),
                    });
                }
                *slot = acc.to_integer();
            }
        }
        Self::from_coeffs(rows)
    }

    /// Power-basis coefficients `c[i][j]` of `t1^i t2^j`.
    pub fn to_power_basis(&self) -> Vec<Vec<BigRational>> {
        let e1: Vec<Vec<BigRational>> = (0..=self.d1()).map(binomial_in_power_basis).collect();
        let e2: Vec<Vec<BigRational>> = (0..=self.d2()).map(binomial_in_power_basis).collect();
        let mut out = vec![vec![BigRational::zero(); self.d2() + 1]; self.d1() + 1];
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let a = BigRational::from_integer(a.clone());
                for (p, x) in e1[i].iter().enumerate() {
                    for (q, y) in e2[j].iter().enumerate() {
                        out[p][q] += &a * x * y;
                    }
                }
            }
        }
        out
    }

    /// Fits the unique polynomial with partial degrees at most
    /// `(d1max, d2max)` through the lowest-corner block of `values` and
    /// checks it against every remaining grid point.
    pub fn fit_from_grid(
        values: &BTreeMap<(i64, i64), BigInt>,
        d1max: usize,
        d2max: usize,
    ) -> Result<Self, NumPolyError> {
        let r0 = values.keys().map(|k| k.0).min().unwrap_or(0);
        let s0 = values.keys().map(|k| k.1).min().unwrap_or(0);
        let block: Vec<(i64, i64)> = (0..=d1max as i64)
            .flat_map(|x| (0..=d2max as i64).map(move |y| (r0 + x, s0 + y)))
            .collect();
        for &(r, s) in &block {
            if !values.contains_key(&(r, s)) {
                return Err(NumPolyError::MissingGridPoint { r, s });
            }
        }
        if values.len() <= block.len() {
            return Err(NumPolyError::NoValidationPoints {
                rows: d1max + 1,
                cols: d2max + 1,
            });
        }
        let unknowns: Vec<(usize, usize)> = (0..=d1max).flat_map(|i| (0..=d2max).map(move |j| (i, j))).collect();
        let matrix: Vec<Vec<BigRational>> = block
            .iter()
            .map(|&(r, s)| {
                unknowns
                    .iter()
                    .map(|&(i, j)| {
                        BigRational::from_integer(
                            binomial_shifted(&BigInt::from(r), i) * binomial_shifted(&BigInt::from(s), j),
                        )
                    })
                    .collect()
            })
            .collect();
        let rhs: Vec<BigRational> = block
            .iter()
            .map(|k| BigRational::from_integer(values[k].clone()))
            .collect();
        let solution = solve_dense(matrix, rhs).expect("binomial interpolation matrix is invertible");
        let mut rows = vec![vec![BigInt::zero(); d2max + 1]; d1max + 1];
        for (&(i, j), x) in unknowns.iter().zip(solution) {
            if !x.is_integer() {
                return Err(NumPolyError::NonIntegralFit {
                    i,
                    j,
                    value: x.to_string(),
                });
            }
            rows[i][j] = x.to_integer();
        }
        let fitted = Self::from_coeffs(rows)?;
        for (&(r, s), expected) in values {
            let got = fitted.eval(r, s);
            if &got != expected {
                return Err(NumPolyError::ValidationMismatch {
                    r,
                    s,
                    expected: expected.to_string(),
                    fitted: got.to_string(),
                });
            }
        }
        Ok(fitted)
    }

    /// `2 C(t1+2,2) + 2 C(t1+1,1) C(t2+1,1) - ...`
    pub fn binomial_form(&self) -> String {
        let mut parts: Vec<(bool, String)> = Vec::new();
        for i in (0..=self.d1()).rev() {
            for j in (0..=self.d2()).rev() {
                let c = self.coeff(i, j);
                if c.is_zero() {
                    continue;
                }
                let mut factors = Vec::new();
                if i > 0 {
                    factors.push(format!("C(t1+{i},{i})"));
                }
                if j > 0 {
                    factors.push(format!("C(t2+{j},{j})"));
                }
                let mag = c.abs();
                let body = match (factors.is_empty(), mag.is_one()) {
                    (true, _) => mag.to_string(),
                    (false, true) => factors.join(" "),
                    (false, false) => format!("{} {}", mag, factors.join(" ")),
                };
                parts.push((c.is_negative(), body));
            }
        }
        join_signed(&parts)
    }

    /// Expanded form grouped by powers of `t2`, e.g.
    /// `(2 t1 + 1) t2 + t1^2 + t1 + 1`.
    pub fn power_form(&self) -> String {
        render_power(&self.to_power_basis(), &PlainStyle)
    }

    /// LaTeX version of [`NumPoly2::power_form`].
    pub fn latex(&self) -> String {
        render_power(&self.to_power_basis(), &LatexStyle)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

impl fmt::Debug for NumPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumPoly2[{}]", self.binomial_form())
    }
}

impl fmt::Display for NumPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.power_form())
    }
}

impl Default for NumPoly2 {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &NumPoly2 {
    type Output = NumPoly2;
    fn add(self, rhs: &NumPoly2) -> NumPoly2 {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Add for NumPoly2 {
    type Output = NumPoly2;
    fn add(self, rhs: NumPoly2) -> NumPoly2 {
        &self + &rhs
    }
}

impl Sub for &NumPoly2 {
    type Output = NumPoly2;
    fn sub(self, rhs: &NumPoly2) -> NumPoly2 {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Sub for NumPoly2 {
    type Output = NumPoly2;
    fn sub(self, rhs: NumPoly2) -> NumPoly2 {
        &self - &rhs
    }
}

impl Neg for &NumPoly2 {
    type Output = NumPoly2;
    fn neg(self) -> NumPoly2 {
        self.scale(&BigInt::from(-1))
    }
}

impl std::iter::Sum for NumPoly2 {
    fn sum<I: Iterator<Item = NumPoly2>>(iter: I) -> Self {
        iter.fold(NumPoly2::zero(), |a, b| a + b)
    }
}

fn trim(coeffs: &mut Vec<Vec<BigInt>>) {
    while coeffs.len() > 1 && coeffs.last().unwrap().iter().all(Zero::is_zero) {
        coeffs.pop();
    }
    while coeffs[0].len() > 1 && coeffs.iter().all(|row| row.last().unwrap().is_zero()) {
        for row in coeffs.iter_mut() {
            row.pop();
        }
    }
}

/// Power-basis coefficients of `C(t + i, i)`.
fn binomial_in_power_basis(i: usize) -> Vec<BigRational> {
    let mut poly = vec![BigRational::one()];
    for k in 1..=i {
        let shift = BigRational::from_integer(BigInt::from(k));
        let mut next = vec![BigRational::zero(); poly.len() + 1];
        for (p, c) in poly.iter().enumerate() {
            next[p + 1] += c;
            next[p] += c * &shift;
        }
        poly = next;
    }
    let fact = BigRational::from_integer((1..=i).fold(BigInt::one(), |acc, k| acc * k));
    poly.into_iter().map(|c| c / &fact).collect()
}

/// Gauss-Jordan over the rationals. Returns `None` for singular systems.
pub(crate) fn solve_dense(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&row| !a[row][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        b[col] *= &inv;
        for row in 0..n {
            if row == col || a[row][col].is_zero() {
                continue;
            }
            let factor = a[row][col].clone();
            let pivot = a[col].clone();
            for (x, p) in a[row][col..].iter_mut().zip(&pivot[col..]) {
                *x -= &factor * p;
            }
            let delta = &factor * &b[col];
            b[row] -= delta;
        }
    }
    Some(b)
}

fn join_signed(parts: &[(bool, String)]) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (neg, body)) in parts.iter().enumerate() {
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(body);
    }
    out
}

trait PowerStyle {
    fn var(&self, name: &str, exp: usize) -> String;
    fn rational(&self, q: &BigRational) -> String;
    fn sep(&self) -> &'static str;
}

struct PlainStyle;
struct LatexStyle;

impl PowerStyle for PlainStyle {
    fn var(&self, name: &str, exp: usize) -> String {
        if exp == 1 {
            name.to_string()
        } else {
            format!("{name}^{exp}")
        }
    }
    fn rational(&self, q: &BigRational) -> String {
        q.to_string()
    }
    fn sep(&self) -> &'static str {
        " "
    }
}

impl PowerStyle for LatexStyle {
    fn var(&self, name: &str, exp: usize) -> String {
        let base = format!("{}_{{{}}}", &name[..1], &name[1..]);
        if exp == 1 {
            base
        } else {
            format!("{base}^{{{exp}}}")
        }
    }
    fn rational(&self, q: &BigRational) -> String {
        if q.is_integer() {
            q.to_integer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
        }
    }
    fn sep(&self) -> &'static str {
        ""
    }
}

/// Renders a univariate coefficient list in `t1` as signed parts.
fn univariate_parts(coeffs: &[BigRational], style: &dyn PowerStyle) -> Vec<(bool, String)> {
    let mut parts = Vec::new();
    for (p, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let body = if p == 0 {
            style.rational(&mag)
        } else if mag.is_one() {
            style.var("t1", p)
        } else {
            format!("{}{}{}", style.rational(&mag), style.sep(), style.var("t1", p))
        };
        parts.push((c.is_negative(), body));
    }
    parts
}

fn render_power(power: &[Vec<BigRational>], style: &dyn PowerStyle) -> String {
    let d2 = power.first().map_or(0, Vec::len).saturating_sub(1);
    let mut parts: Vec<(bool, String)> = Vec::new();
    for q in (0..=d2).rev() {
        let column: Vec<BigRational> = power.iter().map(|row| row[q].clone()).collect();
        let inner = univariate_parts(&column, style);
        if inner.is_empty() {
            continue;
        }
        if q == 0 {
            parts.extend(inner);
            continue;
        }
        let t2 = style.var("t2", q);
        if inner.len() == 1 {
            let (neg, body) = &inner[0];
            let only_constant = column.iter().skip(1).all(Zero::is_zero);
            let text = if only_constant && column[0].abs().is_one() {
                t2
            } else {
                format!("{body}{}{t2}", style.sep())
            };
            parts.push((*neg, text));
        } else {
            // Pull a leading minus out of the bracket so "-(..)" never appears.
            let flip = inner[0].0;
            let inner: Vec<(bool, String)> = inner.into_iter().map(|(neg, body)| (neg ^ flip, body)).collect();
            parts.push((flip, format!("({}){}{t2}", join_signed(&inner), style.sep())));
        }
    }
    join_signed(&parts)
}

#[derive(Serialize, Deserialize)]
struct NumPolyJson {
    d1: usize,
    d2: usize,
    coeffs: Vec<Vec<serde_json::Number>>,
}

pub(crate) fn int_to_number(v: &BigInt) -> serde_json::Number {
    v.to_string().parse().expect("integer literal is a JSON number")
}

pub(crate) fn number_to_int(v: &serde_json::Number) -> Option<BigInt> {
    v.to_string().parse().ok()
}

impl Serialize for NumPoly2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        NumPolyJson {
            d1: self.d1(),
            d2: self.d2(),
            coeffs: self
                .coeffs
                .iter()
                .map(|row| row.iter().map(int_to_number).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NumPoly2 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = NumPolyJson::deserialize(deserializer)?;
        if raw.coeffs.len() != raw.d1 + 1 || raw.coeffs.iter().any(|r| r.len() != raw.d2 + 1) {
            return Err(D::Error::custom("coefficient matrix does not match d1/d2"));
        }
        let rows = raw
            .coeffs
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| number_to_int(v).ok_or_else(|| D::Error::custom("non-integer coefficient")))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        NumPoly2::from_coeffs(rows).map_err(D::Error::custom)
    }
}

/// `C(r + m, m)` as an integer; counts of `{ord <= r}` in `m` variables.
pub fn simplex_count(r: i64, m: usize) -> BigInt {
    if r < 0 {
        return BigInt::zero();
    }
    binomial_shifted(&BigInt::from(r), m)
}
