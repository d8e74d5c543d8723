//! Dimension polynomials of linear ideals given by a characteristic set of
//! the reflexive closure and per-element shifts.
//!
//! For a presentation `(A_1..A_p; s_1..s_p)` the ideal is
//! `P = [sigma^{s_j} A_j]` and its reflexive closure is `P* = [A_1..A_p]`.
//! Every window term `u` falls in one of four classes:
//!
//! * `U'`: `u` is a multiple of no leader `v_j`;
//! * `U''`: every `(tau, j)` with `u = tau v_j` has
//!   `ord_delta(tau) + ord_delta(u_j) > r`;
//! * `lambda`: the pairs with `ord_delta(tau) + ord_delta(u_j) <= r` exist
//!   and all have `ord_sigma(tau) < s_j`;
//! * everything else, which is eliminated inside the window.
//!
//! `psi = U' + U'' + lambda`, each part a numerical polynomial from some
//! corner on.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::dpoly::DPoly;
use crate::field::{CoeffField, QConstants};
use crate::lattice::{omega, stability_threshold, LatticeError, MultiIndex, PointSet};
use crate::numpoly::{NumPoly2, NumPolyError};
use crate::oracle::{self, ideal_member_linear, max_cells, window_size, OracleError};
use crate::reduction::{certify_charset, complete_linear, AutoreducedSet, ReductionError};
use crate::termalg::{enumerate_ops, enumerate_terms, DTerm, Operator};

/// Widening attempts after the first fit grid fails validation.
pub const MAX_WIDENINGS: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimensionError {
    #[error(transparent)]
    Certification(#[from] ReductionError),
    #[error("{count} shifts given for {elements} charset elements")]
    ShiftCountMismatch { count: usize, elements: usize },
    #[error("no shift up to {max} puts element {index} into the ideal")]
    ShiftNotFound { index: usize, max: u32 },
    #[error("{part} did not settle on a numerical polynomial: {source}")]
    FitUnstable {
        part: &'static str,
        #[source]
        source: NumPolyError,
    },
    #[error("psi({r}, {s}) = {psi} but the elimination oracle gives {oracle}")]
    OracleMismatch { r: u32, s: u32, psi: String, oracle: u64 },
    #[error("single-leader closed form {closed} disagrees with the fitted part {fitted}")]
    ClosedFormMismatch { closed: String, fitted: String },
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("enumeration of {cells} cells exceeds the cap of {cap}")]
    CellCapExceeded { cells: u64, cap: u64 },
}

/// A certified characteristic set of `P*` with the shifts presenting `P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPresentation {
    m: usize,
    n: usize,
    charset: AutoreducedSet,
    shifts: Vec<u32>,
}

impl IdealPresentation {
    /// Certifies `charset` (autoreduced, linear, coherent) and pairs each
    /// element with its shift. Elements are reordered by rank together
    /// with their shifts.
    pub fn new(m: usize, n: usize, charset: Vec<DPoly>, shifts: Vec<u32>) -> Result<Self, DimensionError> {
        Self::with_cone(m, n, charset, shifts, None)
    }

    /// Like [`new`](Self::new) with an explicit coherence cone.
    pub fn with_cone(
        m: usize,
        n: usize,
        charset: Vec<DPoly>,
        shifts: Vec<u32>,
        cone: Option<(u32, u32)>,
    ) -> Result<Self, DimensionError> {
        if shifts.len() != charset.len() {
            return Err(DimensionError::ShiftCountMismatch {
                count: shifts.len(),
                elements: charset.len(),
            });
        }
        let mut pairs: Vec<(DPoly, u32)> = charset.into_iter().zip(shifts).collect();
        pairs.sort_by(|a, b| a.0.rank_cmp(&b.0));
        let (elements, shifts): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let cert = certify_charset(elements, &[], cone)?;
        Ok(IdealPresentation {
            m,
            n,
            charset: cert.charset,
            shifts,
        })
    }

    /// Builds a presentation from generators of `P`: strips each
    /// generator's common shift, completes the stripped set (best effort),
    /// certifies it, and finds each element's shift with the membership
    /// oracle.
    pub fn from_generators(m: usize, n: usize, generators: &[DPoly]) -> Result<Self, DimensionError> {
        let stripped: Vec<DPoly> = generators.iter().map(|g| g.unshift(g.sigma_content())).collect();
        let completed = complete_linear(&stripped, None)?;
        let cert = certify_charset(completed.elements().to_vec(), &stripped, None)?;
        let reach = generators.iter().map(DPoly::sigma_content).max().unwrap_or(0)
            + generators.iter().map(|g| g.orders().1).max().unwrap_or(0)
            + 1;
        let mut shifts = Vec::with_capacity(cert.charset.len());
        for (index, a) in cert.charset.elements().iter().enumerate() {
            let mut found = None;
            for k in 0..=reach {
                let shifted = a.apply_operator(&Operator::sigma_pow(m, k));
                if ideal_member_linear(&shifted, generators)? {
                    found = Some(k);
                    break;
                }
            }
            shifts.push(found.ok_or(DimensionError::ShiftNotFound { index, max: reach })?);
        }
        Ok(IdealPresentation {
            m,
            n,
            charset: cert.charset,
            shifts,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn charset(&self) -> &AutoreducedSet {
        &self.charset
    }

    pub fn shifts(&self) -> &[u32] {
        &self.shifts
    }

    /// Whether `P = P*`.
    pub fn is_reflexive(&self) -> bool {
        self.shifts.iter().all(|&s| s == 0)
    }

    /// `sigma^{s_j}(A_j)` for every `j`.
    pub fn generators_of_p(&self) -> Vec<DPoly> {
        self.charset
            .elements()
            .iter()
            .zip(&self.shifts)
            .map(|(a, &k)| a.apply_operator(&Operator::sigma_pow(self.m, k)))
            .collect()
    }
}

/// Per-element data used by the counters.
struct Leader {
    v: DTerm,
    /// `ord_delta` of the delta-leader.
    d: u32,
}

fn leaders(set: &AutoreducedSet) -> Vec<Leader> {
    set.elements()
        .iter()
        .map(|a| Leader {
            v: a.sigma_leader().expect("charset elements are not constant"),
            d: a.delta_leader().expect("charset elements are not constant").ord_delta(),
        })
        .collect()
}

enum Class {
    Free,
    Escaping,
    Lambda,
    Eliminated,
}

fn classify(u: &DTerm, leads: &[Leader], shifts: Option<&[u32]>, r: u32) -> Class {
    let mut multiple = false;
    let mut inside_all_escape = true;
    let mut inside_any = false;
    for (j, l) in leads.iter().enumerate() {
        let Some(tau) = l.v.divides(u) else {
            continue;
        };
        multiple = true;
        if tau.ord_delta() + l.d <= r {
            inside_any = true;
            match shifts {
                Some(sh) if tau.sigma_exp() < sh[j] => {}
                _ => inside_all_escape = false,
            }
        }
    }
    match (multiple, inside_any, inside_all_escape) {
        (false, _, _) => Class::Free,
        (true, false, _) => Class::Escaping,
        (true, true, true) if shifts.is_some() => Class::Lambda,
        _ => Class::Eliminated,
    }
}

/// `(Card U'_rs, Card U''_rs)` for the characteristic set of `pres`.
pub fn count_u(pres: &IdealPresentation, r: u32, s: u32) -> (u64, u64) {
    let leads = leaders(&pres.charset);
    let (m, n) = (pres.m, pres.n);
    let mut free = 0;
    let mut escaping = 0;
    for u in enumerate_terms(m, n, r, s) {
        match classify(&u, &leads, None, r) {
            Class::Free => free += 1,
            Class::Escaping => escaping += 1,
            _ => {}
        }
    }
    (free, escaping)
}

/// Number of window terms that are reducible in `P*` within the window but
/// only through shifts of `A_j` below `sigma^{s_j}`.
pub fn count_lambda(pres: &IdealPresentation, r: u32, s: u32) -> u64 {
    if pres.is_reflexive() {
        return 0;
    }
    let leads = leaders(&pres.charset);
    enumerate_terms(pres.m, pres.n, r, s)
        .iter()
        .filter(|u| matches!(classify(u, &leads, Some(&pres.shifts), r), Class::Lambda))
        .count() as u64
}

/// `U' + U'' + lambda` at `(r, s)`; with an empty charset, `Card T(r,s)Y`.
pub fn count_total(pres: &IdealPresentation, r: u32, s: u32) -> u64 {
    let (a, b) = count_u(pres, r, s);
    a + b + count_lambda(pres, r, s)
}

/// `sum_i omega(exponents of the leaders in y_i)`.
pub fn u_prime_polynomial(m: usize, n: usize, set: &AutoreducedSet) -> Result<NumPoly2, DimensionError> {
    let leads = leaders(set);
    let mut total = NumPoly2::zero();
    for i in 1..=n {
        let points = leads
            .iter()
            .filter(|l| l.v.idx == i)
            .map(|l| MultiIndex::new(l.v.exponents()))
            .collect();
        total = total + omega(&PointSet::new(m, points)?)?;
    }
    Ok(total)
}

/// A rectangular grid `[r_lo, r_hi] x [s_lo, s_hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Grid {
    pub r: (u32, u32),
    pub s: (u32, u32),
}

impl Grid {
    pub fn new(r_lo: u32, r_hi: u32, s_lo: u32, s_hi: u32) -> Self {
        Grid {
            r: (r_lo, r_hi),
            s: (s_lo, s_hi),
        }
    }

    pub fn cells(&self) -> Vec<(u32, u32)> {
        (self.r.0..=self.r.1)
            .flat_map(|r| (self.s.0..=self.s.1).map(move |s| (r, s)))
            .collect()
    }

    fn shifted(&self, dr: u32, ds: u32) -> Grid {
        Grid::new(self.r.0 + dr, self.r.1 + dr, self.s.0 + ds, self.s.1 + ds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionOptions {
    /// Compare with the elimination oracle and fail on disagreement.
    pub oracle_check: bool,
    /// Fit on this grid instead of the automatic one.
    pub grid: Option<Grid>,
    /// Allow moving the automatic grid outward when validation fails.
    pub widen: bool,
    /// Cells beyond the corner checked by the oracle in each direction.
    pub oracle_span: u32,
}

impl Default for DimensionOptions {
    fn default() -> Self {
        DimensionOptions {
            oracle_check: false,
            grid: None,
            widen: true,
            oracle_span: 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCheck {
    pub grid: Grid,
    pub cells: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionResult {
    pub psi: NumPoly2,
    pub phi: NumPoly2,
    pub u_prime: NumPoly2,
    pub u_dprime: NumPoly2,
    pub lambda: NumPoly2,
    /// Corner from which the grid counts matched the fitted parts.
    pub stability: (u32, u32),
    pub fit_grid: Grid,
    pub oracle: Option<OracleCheck>,
}

impl DimensionResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "psi": self.psi.to_json(),
            "psi_text": self.psi.power_form(),
            "phi": self.phi.to_json(),
            "breakdown": {
                "u_prime": self.u_prime.to_json(),
                "u_dprime": self.u_dprime.to_json(),
                "lambda": self.lambda.to_json(),
            },
            "stability": [self.stability.0, self.stability.1],
            "fit_grid": self.fit_grid,
            "oracle": self.oracle.as_ref().map(|o| serde_json::json!({
                "grid": o.grid,
                "cells": o.cells,
            })),
        })
    }
}

/// Starting corner for the automatic fit grid.
pub fn fit_corner(pres: &IdealPresentation) -> (u32, u32) {
    let leads = leaders(&pres.charset);
    let mut r_lat = 0u32;
    let mut s_lat = 0u32;
    for i in 1..=pres.n {
        let points: Vec<MultiIndex> = leads
            .iter()
            .filter(|l| l.v.idx == i)
            .map(|l| MultiIndex::new(l.v.exponents()))
            .collect();
        let (r, s) = stability_threshold(&PointSet { m: pres.m, points });
        r_lat = r_lat.max(r as u32);
        s_lat = s_lat.max(s as u32);
    }
    let d_max = leads.iter().map(|l| l.d).max().unwrap_or(0);
    let shift_max = pres.shifts.iter().copied().max().unwrap_or(0);
    (r_lat + d_max, s_lat + shift_max)
}

fn check_cells(pres: &IdealPresentation, grid: &Grid) -> Result<(), DimensionError> {
    let cells: u64 = grid
        .cells()
        .iter()
        .map(|&(r, s)| window_size(pres.m, pres.n, r, s))
        .sum();
    let cap = max_cells();
    if cells > cap {
        return Err(DimensionError::CellCapExceeded { cells, cap });
    }
    Ok(())
}

fn fit_part(
    part: &'static str,
    values: &BTreeMap<(i64, i64), BigInt>,
    d1: usize,
    d2: usize,
) -> Result<NumPoly2, DimensionError> {
    NumPoly2::fit_from_grid(values, d1, d2).map_err(|source| DimensionError::FitUnstable { part, source })
}

struct Fitted {
    u_dprime: NumPoly2,
    lambda: NumPoly2,
    grid: Grid,
}

fn fit_on(pres: &IdealPresentation, grid: Grid) -> Result<Fitted, DimensionError> {
    check_cells(pres, &grid)?;
    let m = pres.m;
    let counts: Vec<((u32, u32), u64, u64)> = grid
        .cells()
        .into_par_iter()
        .map(|(r, s)| {
            let (_, dp) = count_u(pres, r, s);
            ((r, s), dp, count_lambda(pres, r, s))
        })
        .collect();
    let dprime: BTreeMap<(i64, i64), BigInt> = counts
        .iter()
        .map(|&((r, s), dp, _)| ((i64::from(r), i64::from(s)), BigInt::from(dp)))
        .collect();
    let u_dprime = fit_part("U''", &dprime, m, 1)?;
    // lambda depends on r only once s is large enough; fit it along the
    // top row and check it on every row.
    let top = grid.s.1;
    let lam_row: BTreeMap<(i64, i64), BigInt> = counts
        .iter()
        .filter(|c| c.0 .1 == top)
        .map(|&((r, _), _, l)| ((i64::from(r), 0), BigInt::from(l)))
        .collect();
    let lambda = fit_part("lambda", &lam_row, m, 0)?;
    for &((r, s), _, l) in &counts {
        let want = lambda.eval(i64::from(r), 0);
        if want != BigInt::from(l) {
            return Err(DimensionError::FitUnstable {
                part: "lambda",
                source: NumPolyError::ValidationMismatch {
                    r: i64::from(r),
                    s: i64::from(s),
                    expected: l.to_string(),
                    fitted: want.to_string(),
                },
            });
        }
    }
    Ok(Fitted { u_dprime, lambda, grid })
}

/// `phi` for the reflexive closure and `psi` for `P`, with breakdown.
pub fn psi(pres: &IdealPresentation, opts: &DimensionOptions) -> Result<DimensionResult, DimensionError> {
    let (m, n) = (pres.m, pres.n);
    let u_prime = u_prime_polynomial(m, n, &pres.charset)?;

    let fitted = if pres.charset.is_empty() {
        Fitted {
            u_dprime: NumPoly2::zero(),
            lambda: NumPoly2::zero(),
            grid: opts.grid.unwrap_or(Grid::new(0, 0, 0, 0)),
        }
    } else if let Some(grid) = opts.grid {
        fit_on(pres, grid)?
    } else {
        let (r0, s0) = fit_corner(pres);
        // (m+3) x 4 block plus a two-wide validation band
        let base = Grid::new(r0, r0 + m as u32 + 4, s0, s0 + 5);
        let attempts = if opts.widen { MAX_WIDENINGS + 1 } else { 1 };
        let mut last_err = None;
        let mut done = None;
        for k in 0..attempts {
            let grid = base.shifted(k * (m as u32 + 3), k * 4);
            match fit_on(pres, grid) {
                Ok(f) => {
                    done = Some(f);
                    break;
                }
                Err(e @ DimensionError::FitUnstable { .. }) => last_err = Some(e),
                Err(e) => return Err(e),
            }
        }
        match done {
            Some(f) => f,
            None => return Err(last_err.expect("at least one attempt")),
        }
    };

    if pres.charset.len() == 1 {
        let closed = single_leader_u_dprime(pres);
        if closed != fitted.u_dprime {
            return Err(DimensionError::ClosedFormMismatch {
                closed: closed.power_form(),
                fitted: fitted.u_dprime.power_form(),
            });
        }
    }

    let phi = &u_prime + &fitted.u_dprime;
    let psi = &phi + &fitted.lambda;
    let stability = (fitted.grid.r.0, fitted.grid.s.0);

    let oracle = if opts.oracle_check {
        let grid = match opts.grid {
            Some(g) => g,
            None => Grid::new(
                stability.0,
                stability.0 + opts.oracle_span,
                stability.1,
                stability.1 + opts.oracle_span,
            ),
        };
        check_against_oracle(pres, &psi, &grid)?;
        Some(OracleCheck {
            cells: grid.cells().len(),
            grid,
        })
    } else {
        None
    };

    Ok(DimensionResult {
        psi,
        phi,
        u_prime,
        u_dprime: fitted.u_dprime,
        lambda: fitted.lambda,
        stability,
        fit_grid: fitted.grid,
        oracle,
    })
}

/// `phi` for the reflexive closure `[A_1..A_p]`.
pub fn phi_reflexive(pres: &IdealPresentation, opts: &DimensionOptions) -> Result<NumPoly2, DimensionError> {
    let reflexive = IdealPresentation {
        shifts: vec![0; pres.shifts.len()],
        ..pres.clone()
    };
    let opts = DimensionOptions {
        oracle_check: false,
        ..opts.clone()
    };
    Ok(psi(&reflexive, &opts)?.phi)
}

/// `[C(t1+m-|a|, m) - C(t1+m-d, m)] (t2 + 1 - l0)` for a single leader
/// `v = theta sigma^{l0} y` with `|a| = ord theta`.
pub fn single_leader_u_dprime(pres: &IdealPresentation) -> NumPoly2 {
    let a = &pres.charset.elements()[0];
    let v = a.sigma_leader().expect("non-constant");
    let d = a.delta_leader().expect("non-constant").ord_delta();
    let m = pres.m;
    let l0 = i64::from(v.ord_sigma());
    NumPoly2::shifted_cone(m, i64::from(v.ord_delta()), l0) - NumPoly2::shifted_cone(m, i64::from(d), l0)
}

/// Fails with [`DimensionError::OracleMismatch`] at the first grid cell
/// where `psi` and the elimination oracle disagree.
pub fn check_against_oracle(pres: &IdealPresentation, psi: &NumPoly2, grid: &Grid) -> Result<(), DimensionError> {
    let gens = pres.generators_of_p();
    let table = oracle::trdeg_grid(pres.m, pres.n, &gens, grid.r.0..=grid.r.1, grid.s.0..=grid.s.1)?;
    for ((r, s), v) in table {
        let want = psi.eval(i64::from(r), i64::from(s));
        if want != BigInt::from(v) {
            return Err(DimensionError::OracleMismatch {
                r,
                s,
                psi: want.to_string(),
                oracle: v,
            });
        }
    }
    Ok(())
}

/// `k = max s_j`, the exponent with `P* = sigma^{-k}(P)`.
pub fn reflexive_gap(pres: &IdealPresentation) -> u32 {
    pres.shifts.iter().copied().max().unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapVerification {
    pub k: u32,
    pub samples: usize,
    /// Every sampled `sigma^k f` was a member of `P`.
    pub shifted_members: bool,
    /// Every `sigma^{s_j - 1} A_j` was rejected (shifts are minimal).
    pub shifts_minimal: bool,
}

impl GapVerification {
    pub fn holds(&self) -> bool {
        self.shifted_members && self.shifts_minimal
    }
}

/// A random element `sum c tau A_j` of `P*` with small operators and
/// coefficients.
pub fn sample_ideal_element(pres: &IdealPresentation, rng: &mut impl Rng) -> DPoly {
    let ops = enumerate_ops(pres.m, 1, 1);
    let mut f = DPoly::zero(pres.m, pres.n);
    for a in pres.charset.elements() {
        for op in &ops {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                f = f.add(&a.apply_operator(op).scale(&QConstants::from_integer(c)));
            }
        }
    }
    f
}

/// Spot-checks `P* = sigma^{-k}(P)` with the membership oracle.
pub fn verify_gap(pres: &IdealPresentation, samples: usize, seed: u64) -> Result<GapVerification, DimensionError> {
    let k = reflexive_gap(pres);
    let gens = pres.generators_of_p();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let elements: Vec<DPoly> = (0..samples).map(|_| sample_ideal_element(pres, &mut rng)).collect();
    let sigma_k = Operator::sigma_pow(pres.m, k);
    let shifted_members = elements
        .par_iter()
        .map(|f| ideal_member_linear(&f.apply_operator(&sigma_k), &gens))
        .collect::<Result<Vec<bool>, _>>()?
        .into_iter()
        .all(|b| b);
    let mut shifts_minimal = true;
    for (a, &sj) in pres.charset.elements().iter().zip(&pres.shifts) {
        if sj > 0 && ideal_member_linear(&a.apply_operator(&Operator::sigma_pow(pres.m, sj - 1)), &gens)? {
            shifts_minimal = false;
        }
    }
    Ok(GapVerification {
        k,
        samples,
        shifted_members,
        shifts_minimal,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrengthReport {
    pub result: DimensionResult,
    /// Leading binomial coefficient of the `t2`-linear part.
    pub leading_t2_coefficient: BigInt,
    pub lines: Vec<String>,
}

/// Counts of independent values of the unknowns and their derivatives, as
/// given by `psi`.
pub fn strength_report(pres: &IdealPresentation, opts: &DimensionOptions) -> Result<StrengthReport, DimensionError> {
    let result = psi(pres, opts)?;
    let (m, n) = (pres.m, pres.n);
    let (slope, _) = result.psi.split_t2_linear().expect("psi is linear in t2");
    let leading = slope.coeff(m, 0);
    let mut lines = Vec::new();
    if pres.charset.is_empty() {
        lines.push(format!("unconstrained: S_rs = {n} C(r+{m},{m}) (s+1)"));
    }
    lines.push(format!("S_rs = psi(r, s) = {}", result.psi.power_form()));
    lines.push(
        "S_rs counts independent values of the unknowns and their derivatives of order <= r at nodes of shift order <= s"
            .to_string(),
    );
    lines.push(format!(
        "leading coefficient of the t2-linear part (C(t1+{m},{m}) t2): {leading}"
    ));
    lines.push(format!(
        "breakdown: U' = {}, U'' = {}, lambda = {}",
        result.u_prime.power_form(),
        result.u_dprime.power_form(),
        result.lambda.power_form()
    ));
    if pres.is_reflexive() {
        lines.push("the ideal is reflexive: psi = phi".to_string());
    } else {
        lines.push(format!(
            "reflexive closure: phi = {} (gap k = {})",
            result.phi.power_form(),
            reflexive_gap(pres)
        ));
    }
    let (r0, s0) = result.stability;
    let samples = [(r0, s0), (r0 + 1, s0 + 1), (r0 + 2, s0 + 2)];
    for (r, s) in samples {
        lines.push(format!(
            "S_{{{r},{s}}} = {}",
            result.psi.eval(i64::from(r), i64::from(s))
        ));
    }
    Ok(StrengthReport {
        result,
        leading_t2_coefficient: leading,
        lines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::termalg::Operator;

    fn t(d: &[u32], s: u32, i: usize) -> DTerm {
        DTerm::new(Operator::new(d.to_vec(), s), i)
    }

    fn b1() -> DPoly {
        DPoly::linear_int(
            2,
            1,
            &[(1, t(&[0, 0], 1, 1)), (1, t(&[2, 0], 0, 1)), (1, t(&[0, 2], 0, 1))],
        )
    }

    fn example(shift: u32) -> IdealPresentation {
        IdealPresentation::new(2, 1, vec![b1()], vec![shift]).unwrap()
    }

    fn binom(n: i64, k: i64) -> i64 {
        if n < k || k < 0 {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn example_counts() {
        let pres = example(1);
        assert_eq!(count_u(&pres, 3, 2), (10, 14));
        assert_eq!(count_lambda(&pres, 4, 3), 6);
        assert_eq!(count_lambda(&pres, 1, 3), 0);
        assert_eq!(count_lambda(&example(0), 4, 3), 0);
        for r in 0..6u32 {
            for s in 1..4u32 {
                let (a, b) = count_u(&pres, r, s);
                assert_eq!(a as i64, binom(i64::from(r) + 2, 2));
                if r >= 2 {
                    assert_eq!(b as i64, (2 * i64::from(r) + 1) * i64::from(s));
                }
            }
        }
    }

    #[test]
    fn example_polynomials() {
        let res = psi(&example(1), &DimensionOptions::default()).unwrap();
        assert_eq!(res.psi.power_form(), "(2 t1 + 1) t2 + t1^2 + t1 + 1");
        assert_eq!(res.u_prime, NumPoly2::basis(2, 0));
        assert_eq!(res.lambda, NumPoly2::from_i64(&[&[1], &[-2], &[1]]));
        assert_eq!(res.psi, &(&res.u_prime + &res.u_dprime) + &res.lambda);
        assert_eq!(res.stability, (2, 2));

        let reflexive = psi(&example(0), &DimensionOptions::default()).unwrap();
        assert_eq!(reflexive.psi, reflexive.phi);
        assert_eq!(reflexive.psi, res.phi);
    }

    #[test]
    fn empty_and_trivial_charsets() {
        let empty = IdealPresentation::new(2, 3, vec![], vec![]).unwrap();
        let res = psi(&empty, &DimensionOptions::default()).unwrap();
        assert_eq!(res.psi, NumPoly2::basis(2, 1).scale(&BigInt::from(3)));

        let y = IdealPresentation::new(1, 1, vec![DPoly::term(1, 1, t(&[0], 0, 1))], vec![0]).unwrap();
        assert!(psi(&y, &DimensionOptions::default()).unwrap().psi.is_zero());
    }

    #[test]
    fn gap() {
        assert_eq!(reflexive_gap(&example(1)), 1);
        assert_eq!(reflexive_gap(&example(0)), 0);
        let v = verify_gap(&example(1), 5, 7).unwrap();
        assert!(v.holds(), "{v:?}");
    }

    #[test]
    fn shift_count_must_match() {
        assert!(matches!(
            IdealPresentation::new(2, 1, vec![b1()], vec![]),
            Err(DimensionError::ShiftCountMismatch { .. })
        ));
    }

    #[test]
    fn presentation_from_generators() {
        let sb = b1().apply_operator(&Operator::sigma_pow(2, 1));
        let pres = IdealPresentation::from_generators(2, 1, &[sb]).unwrap();
        assert_eq!(pres.charset().elements(), &[b1()]);
        assert_eq!(pres.shifts(), &[1]);
    }

    #[test]
    fn oracle_gate_on_example() {
        let opts = DimensionOptions {
            oracle_check: true,
            ..Default::default()
        };
        let res = psi(&example(1), &opts).unwrap();
        assert_eq!(res.oracle.unwrap().cells, 25);
    }

    #[test]
    fn strength() {
        let rep = strength_report(&example(1), &DimensionOptions::default()).unwrap();
        assert!(rep.lines.iter().any(|l| l == "S_{2,2} = 17"));
        assert_eq!(rep.leading_t2_coefficient, BigInt::from(0));
        let empty = IdealPresentation::new(2, 1, vec![], vec![]).unwrap();
        let rep = strength_report(&empty, &DimensionOptions::default()).unwrap();
        assert_eq!(rep.lines[0], "unconstrained: S_rs = 1 C(r+2,2) (s+1)");
    }

    #[test]
    fn pure_difference() {
        let a = DPoly::linear_int(0, 1, &[(1, t(&[], 1, 1)), (-2, t(&[], 0, 1))]);
        let pres = IdealPresentation::new(0, 1, vec![a], vec![1]).unwrap();
        let res = psi(
            &pres,
            &DimensionOptions {
                oracle_check: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(res.psi, NumPoly2::constant(2));
    }
}
