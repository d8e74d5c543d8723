//! Brute-force ground truth for linear constant-coefficient ideals.
//!
//! For generators `g_j`, the window system collects every `tau g_j` that
//! fits in an enlarged window `T(r + w, s + w)Y` and row-reduces it over the
//! rationals with the out-of-window columns eliminated first. Rows left
//! entirely inside `T(r, s)Y` then span `P_rs`.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::dpoly::DPoly;
use crate::numpoly::simplex_count;
use crate::termalg::{enumerate_ops, enumerate_terms, DTerm, Operator};

/// Buffers tried in order until two consecutive ones agree.
pub const BUFFERS: [u32; 5] = [1, 2, 4, 8, 16];

/// Default cap on the number of window cells a single computation may touch.
pub const DEFAULT_MAX_CELLS: u64 = 10_000_000;

/// The cell cap, overridable through `DSDIM_MAX_CELLS`.
pub fn max_cells() -> u64 {
    std::env::var("DSDIM_MAX_CELLS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_CELLS)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("generator {0} is not linear and homogeneous")]
    NonLinear(usize),
    #[error("generator {0} lives in a different ring")]
    RingMismatch(usize),
    #[error("window ({r}, {s}) did not stabilize for buffers up to {max_buffer}")]
    BufferCapExceeded { r: u32, s: u32, max_buffer: u32 },
    #[error("window of {cells} cells exceeds the cap of {cap}")]
    CellCapExceeded { cells: u64, cap: u64 },
}

/// `Card T(r, s)Y = n C(r+m, m) (s+1)`.
pub fn window_size(m: usize, n: usize, r: u32, s: u32) -> u64 {
    let cone: u64 = simplex_count(i64::from(r), m)
        .try_into()
        .expect("window size fits in u64");
    n as u64 * cone * (u64::from(s) + 1)
}

type SparseRow = Vec<(usize, BigRational)>;

fn axpy(row: &SparseRow, factor: &BigRational, pivot: &SparseRow) -> SparseRow {
    // row - factor * pivot, both sorted by column
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut a, mut b) = (row.iter().peekable(), pivot.iter().peekable());
    loop {
        match (a.peek(), b.peek()) {
            (Some((ca, va)), Some((cb, vb))) => {
                if ca < cb {
                    out.push((*ca, va.clone()));
                    a.next();
                } else if cb < ca {
                    out.push((*cb, -(factor * vb)));
                    b.next();
                } else {
                    let v = va - factor * vb;
                    if !v.is_zero() {
                        out.push((*ca, v));
                    }
                    a.next();
                    b.next();
                }
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                a.next();
            }
            (None, Some((cb, vb))) => {
                out.push((*cb, -(factor * vb)));
                b.next();
            }
            (None, None) => break,
        }
    }
    out
}

fn combine_book(book: &SparseRow, factor: &BigRational, other: &SparseRow) -> SparseRow {
    let mut map: BTreeMap<usize, BigRational> = book.iter().cloned().collect();
    for (k, v) in other {
        let e = map.entry(*k).or_insert_with(BigRational::zero);
        *e -= factor * v;
    }
    map.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// Row-echelon form of all generator transforms fitting in an enlarged
/// window.
#[derive(Debug, Clone)]
pub struct LinearWindowSystem {
    m: usize,
    n: usize,
    r: u32,
    s: u32,
    buffer: u32,
    columns: Vec<DTerm>,
    col_index: HashMap<DTerm, usize>,
    in_window_from: usize,
    pivots: BTreeMap<usize, SparseRow>,
    /// `(operator, generator)` of every row fed in.
    origins: Vec<(Operator, usize)>,
    /// Per pivot, the combination of origins it equals.
    books: Option<BTreeMap<usize, SparseRow>>,
}

fn check_generators(m: usize, n: usize, gens: &[DPoly]) -> Result<(), OracleError> {
    for (j, g) in gens.iter().enumerate() {
        if g.m() != m || g.n() != n {
            return Err(OracleError::RingMismatch(j));
        }
        if !g.is_linear_homogeneous() {
            return Err(OracleError::NonLinear(j));
        }
    }
    Ok(())
}

impl LinearWindowSystem {
    pub fn build(m: usize, n: usize, gens: &[DPoly], r: u32, s: u32, buffer: u32) -> Result<Self, OracleError> {
        Self::build_inner(m, n, gens, r, s, buffer, false)
    }

    /// Like [`build`](Self::build) but records, for every pivot row, the
    /// combination of generator transforms it came from.
    pub fn build_with_bookkeeping(
        m: usize,
        n: usize,
        gens: &[DPoly],
        r: u32,
        s: u32,
        buffer: u32,
    ) -> Result<Self, OracleError> {
        Self::build_inner(m, n, gens, r, s, buffer, true)
    }

    fn build_inner(
        m: usize,
        n: usize,
        gens: &[DPoly],
        r: u32,
        s: u32,
        buffer: u32,
        bookkeeping: bool,
    ) -> Result<Self, OracleError> {
        check_generators(m, n, gens)?;
        let (big_r, big_s) = (r + buffer, s + buffer);
        let cells = window_size(m, n, big_r, big_s);
        let cap = max_cells();
        if cells > cap {
            return Err(OracleError::CellCapExceeded { cells, cap });
        }

        let mut outside = Vec::new();
        let mut inside = Vec::new();
        for t in enumerate_terms(m, n, big_r, big_s).into_iter().rev() {
            if t.ord_delta() <= r && t.ord_sigma() <= s {
                inside.push(t);
            } else {
                outside.push(t);
            }
        }
        let in_window_from = outside.len();
        let columns: Vec<DTerm> = outside.into_iter().chain(inside).collect();
        let col_index = columns.iter().cloned().enumerate().map(|(k, t)| (t, k)).collect();

        let mut sys = LinearWindowSystem {
            m,
            n,
            r,
            s,
            buffer,
            columns,
            col_index,
            in_window_from,
            pivots: BTreeMap::new(),
            origins: Vec::new(),
            books: bookkeeping.then(BTreeMap::new),
        };

        for (j, g) in gens.iter().enumerate() {
            let coeffs = g.linear_coeffs().expect("checked linear");
            let (od, os) = g.orders();
            if od > big_r || os > big_s {
                continue;
            }
            for op in enumerate_ops(m, big_r - od, big_s - os) {
                let row: SparseRow = {
                    let mut row: Vec<(usize, BigRational)> = coeffs
                        .iter()
                        .map(|(t, c)| (sys.col_index[&t.apply(&op)], c.value().clone()))
                        .collect();
                    row.sort_by_key(|(k, _)| *k);
                    row
                };
                let origin = sys.origins.len();
                sys.origins.push((op, j));
                sys.insert(row, vec![(origin, BigRational::one())]);
            }
        }
        Ok(sys)
    }

    fn insert(&mut self, mut row: SparseRow, mut book: SparseRow) {
        while let Some((lead, coeff)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                Some(p) => {
                    if let Some(books) = &self.books {
                        book = combine_book(&book, &coeff, &books[&lead]);
                    }
                    row = axpy(&row, &coeff, p);
                }
                None => {
                    let inv = coeff.recip();
                    for (_, v) in &mut row {
                        *v *= &inv;
                    }
                    if let Some(books) = &mut self.books {
                        for (_, v) in &mut book {
                            *v *= &inv;
                        }
                        books.insert(lead, book);
                    }
                    self.pivots.insert(lead, row);
                    return;
                }
            }
        }
    }

    pub fn window(&self) -> (u32, u32) {
        (self.r, self.s)
    }

    pub fn buffer(&self) -> u32 {
        self.buffer
    }

    pub fn num_rows(&self) -> usize {
        self.origins.len()
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// `dim_K` of the part of the row space supported inside the window.
    pub fn window_dim(&self) -> usize {
        self.pivots.range(self.in_window_from..).count()
    }

    /// `Card T(r, s)Y - dim`.
    pub fn trdeg(&self) -> u64 {
        window_size(self.m, self.n, self.r, self.s) - self.window_dim() as u64
    }

    /// Whether a linear polynomial lies in the row space. Terms outside the
    /// enlarged window make the answer `false`.
    pub fn contains(&self, f: &DPoly) -> bool {
        let Some(coeffs) = f.linear_coeffs() else {
            return false;
        };
        let mut row: SparseRow = Vec::with_capacity(coeffs.len());
        for (t, c) in coeffs {
            match self.col_index.get(&t) {
                Some(&k) => row.push((k, c.value().clone())),
                None => return false,
            }
        }
        row.sort_by_key(|(k, _)| *k);
        while let Some((lead, coeff)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                Some(p) => row = axpy(&row, &coeff, p),
                None => return false,
            }
        }
        true
    }

    /// Re-expands every pivot row from its recorded combination. `None`
    /// when bookkeeping was not requested.
    pub fn verify_bookkeeping(&self, gens: &[DPoly]) -> Option<bool> {
        let books = self.books.as_ref()?;
        let ok = self.pivots.iter().all(|(lead, row)| {
            let mut acc = DPoly::zero(self.m, self.n);
            for (origin, c) in &books[lead] {
                let (op, j) = &self.origins[*origin];
                acc = acc.add(&gens[*j].apply_operator(op).scale(&c.clone().into()));
            }
            let want = DPoly::linear(
                self.m,
                self.n,
                row.iter().map(|(k, v)| (v.clone().into(), self.columns[*k].clone())),
            );
            acc == want
        });
        Some(ok)
    }
}

/// `trdeg_K L_rs` of the linear ideal generated by `gens`.
pub fn linear_trdeg(m: usize, n: usize, gens: &[DPoly], r: u32, s: u32) -> Result<u64, OracleError> {
    let mut last: Option<u64> = None;
    for &w in &BUFFERS {
        let d = LinearWindowSystem::build(m, n, gens, r, s, w)?.trdeg();
        if last == Some(d) {
            return Ok(d);
        }
        last = Some(d);
    }
    Err(OracleError::BufferCapExceeded {
        r,
        s,
        max_buffer: *BUFFERS.last().expect("nonempty"),
    })
}

/// `dim_K P_rs`, with the same buffer stabilization as [`linear_trdeg`].
pub fn window_ideal_dim(m: usize, n: usize, gens: &[DPoly], r: u32, s: u32) -> Result<u64, OracleError> {
    Ok(window_size(m, n, r, s) - linear_trdeg(m, n, gens, r, s)?)
}

/// Membership of a linear `f` in the ideal generated by `gens`, decided in
/// the window spanned by `f`'s support.
pub fn ideal_member_linear(f: &DPoly, gens: &[DPoly]) -> Result<bool, OracleError> {
    if f.is_zero() {
        return Ok(true);
    }
    if !f.is_linear_homogeneous() {
        return Ok(false);
    }
    let (m, n) = (f.m(), f.n());
    let (r, s) = f.orders();
    let mut last: Option<(bool, usize)> = None;
    for &w in &BUFFERS {
        let sys = LinearWindowSystem::build(m, n, gens, r, s, w)?;
        if sys.contains(f) {
            return Ok(true);
        }
        let dim = sys.window_dim();
        if last == Some((false, dim)) {
            return Ok(false);
        }
        last = Some((false, dim));
    }
    Err(OracleError::BufferCapExceeded {
        r,
        s,
        max_buffer: *BUFFERS.last().expect("nonempty"),
    })
}

/// `linear_trdeg` over a rectangular grid, computed in parallel, in
/// row-major `(r, s)` order.
pub fn trdeg_grid(
    m: usize,
    n: usize,
    gens: &[DPoly],
    rs: std::ops::RangeInclusive<u32>,
    ss: std::ops::RangeInclusive<u32>,
) -> Result<Vec<TrdegCell>, OracleError> {
    let cells: Vec<(u32, u32)> = rs.flat_map(|r| ss.clone().map(move |s| (r, s))).collect();
    cells
        .into_par_iter()
        .map(|(r, s)| linear_trdeg(m, n, gens, r, s).map(|v| ((r, s), v)))
        .collect()
}

/// `((r, s), trdeg)` for one grid cell.
pub type TrdegCell = ((u32, u32), u64);

/// One row of [`enumerate_counts`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub r: u32,
    pub s: u32,
    pub u_prime: u64,
    pub u_dprime: u64,
    pub lambda: u64,
}

impl CountRow {
    pub fn total(&self) -> u64 {
        self.u_prime + self.u_dprime + self.lambda
    }
}

/// The exact counts table over a grid (row-major).
pub fn enumerate_counts(
    pres: &crate::dimension::IdealPresentation,
    rs: std::ops::RangeInclusive<u32>,
    ss: std::ops::RangeInclusive<u32>,
) -> Vec<CountRow> {
    let cells: Vec<(u32, u32)> = rs.flat_map(|r| ss.clone().map(move |s| (r, s))).collect();
    cells
        .into_par_iter()
        .map(|(r, s)| {
            let (u_prime, u_dprime) = crate::dimension::count_u(pres, r, s);
            CountRow {
                r,
                s,
                u_prime,
                u_dprime,
                lambda: crate::dimension::count_lambda(pres, r, s),
            }
        })
        .collect()
}

/// Renders a count table as CSV with a header line.
pub fn counts_csv(rows: &[CountRow], trdeg: Option<&[TrdegCell]>) -> String {
    let lookup: HashMap<(u32, u32), u64> = trdeg.unwrap_or(&[]).iter().cloned().collect();
    let mut out = String::from("r,s,u_prime,u_dprime,lambda,total");
    if trdeg.is_some() {
        out.push_str(",trdeg");
    }
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}",
            row.r,
            row.s,
            row.u_prime,
            row.u_dprime,
            row.lambda,
            row.total()
        ));
        if trdeg.is_some() {
            match lookup.get(&(row.r, row.s)) {
                Some(v) => out.push_str(&format!(",{v}")),
                None => out.push(','),
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::QConstants;
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

    fn sb1() -> DPoly {
        b1().apply_operator(&Operator::sigma_pow(2, 1))
    }

    #[test]
    fn spot_values() {
        assert_eq!(linear_trdeg(2, 1, &[sb1()], 2, 1).unwrap(), 12);
        assert_eq!(linear_trdeg(2, 1, &[sb1()], 2, 2).unwrap(), 17);
        assert_eq!(linear_trdeg(2, 3, &[], 3, 2).unwrap(), window_size(2, 3, 3, 2));
        assert_eq!(window_size(2, 3, 3, 2), 3 * 10 * 3);
    }

    #[test]
    fn membership() {
        assert!(ideal_member_linear(&sb1(), &[sb1()]).unwrap());
        assert!(!ideal_member_linear(&b1(), &[sb1()]).unwrap());
        assert!(ideal_member_linear(&DPoly::zero(2, 1), &[sb1()]).unwrap());
        let combo = sb1()
            .apply_operator(&Operator::delta(2, 1))
            .scale(&QConstants::new(3, 2))
            .add(&sb1().apply_operator(&Operator::sigma_pow(2, 2)));
        assert!(ideal_member_linear(&combo, &[sb1()]).unwrap());
    }

    #[test]
    fn bookkeeping_reexpands() {
        // Two generators whose transforms interact, so elimination mixes rows.
        let g1 = DPoly::linear_int(1, 1, &[(1, t(&[0], 1, 1)), (-1, t(&[1], 0, 1))]);
        let g2 = DPoly::linear_int(1, 1, &[(1, t(&[2], 0, 1)), (2, t(&[0], 0, 1))]);
        let gens = [g1, g2];
        let sys = LinearWindowSystem::build_with_bookkeeping(1, 1, &gens, 2, 2, 2).unwrap();
        assert!(sys.num_rows() > sys.rank());
        assert_eq!(sys.verify_bookkeeping(&gens), Some(true));
        let plain = LinearWindowSystem::build(1, 1, &gens, 2, 2, 2).unwrap();
        assert_eq!(plain.verify_bookkeeping(&gens), None);
        assert_eq!(plain.window_dim(), sys.window_dim());
    }

    #[test]
    fn cancellation_outside_the_window_is_seen() {
        // s y - d1 y and s y: together they put d1 y in the ideal even though
        // neither generator fits in T(1, 0).
        let g1 = DPoly::linear_int(1, 1, &[(1, t(&[0], 1, 1)), (-1, t(&[1], 0, 1))]);
        let g2 = DPoly::term(1, 1, t(&[0], 1, 1));
        assert_eq!(linear_trdeg(1, 1, &[g1, g2], 1, 0).unwrap(), 1);
    }

    #[test]
    fn non_linear_is_rejected() {
        let g = DPoly::term(1, 1, t(&[0], 1, 1)).pow(2);
        assert_eq!(linear_trdeg(1, 1, &[g], 1, 1), Err(OracleError::NonLinear(0)));
    }

    #[test]
    fn csv_shape() {
        let rows = [CountRow {
            r: 2,
            s: 1,
            u_prime: 6,
            u_dprime: 5,
            lambda: 1,
        }];
        assert_eq!(
            counts_csv(&rows, Some(&[((2, 1), 12)])),
            "r,s,u_prime,u_dprime,lambda,total,trdeg\n2,1,6,5,1,12,12\n"
        );
    }
}
