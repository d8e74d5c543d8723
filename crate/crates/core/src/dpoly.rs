//! Sparse difference-differential polynomials.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::field::{CoeffField, QConstants};
use crate::termalg::{cmp_delta, DTerm, Operator};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DPolyError {
    #[error("polynomial is a constant and has no leader")]
    ConstantPolynomial,
}

/// A power product of terms, kept sorted by the sigma-ordering with no
/// zero exponents. The empty product is the constant monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(DTerm, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn of(term: DTerm, exp: u32) -> Self {
        if exp == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(term, exp)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(DTerm, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent_of(&self, t: &DTerm) -> u32 {
        self.0
            .binary_search_by(|(u, _)| u.cmp(t))
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    /// The single term of a degree-one monomial.
    pub fn as_term(&self) -> Option<&DTerm> {
        match self.0.as_slice() {
            [(t, 1)] => Some(t),
            _ => None,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut map: BTreeMap<DTerm, u32> = self.0.iter().cloned().collect();
        for (t, e) in &other.0 {
            *map.entry(t.clone()).or_insert(0) += e;
        }
        Monomial(map.into_iter().collect())
    }

    /// Removes `t` entirely.
    pub fn without(&self, t: &DTerm) -> Monomial {
        Monomial(self.0.iter().filter(|(u, _)| u != t).cloned().collect())
    }

    /// Changes the exponent of `t` by `delta` (which must not go negative).
    fn with_exponent_delta(&self, t: &DTerm, delta: i64) -> Monomial {
        let mut map: BTreeMap<DTerm, u32> = self.0.iter().cloned().collect();
        let e = map.entry(t.clone()).or_insert(0);
        let next = i64::from(*e) + delta;
        assert!(next >= 0, "negative exponent");
        *e = next as u32;
        Monomial(map.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    fn map_terms(&self, f: impl Fn(&DTerm) -> DTerm) -> Monomial {
        let mut map: BTreeMap<DTerm, u32> = BTreeMap::new();
        for (t, e) in &self.0 {
            *map.entry(f(t)).or_insert(0) += e;
        }
        Monomial(map.into_iter().collect())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct DPoly<K: CoeffField = QConstants> {
    m: usize,
    n: usize,
    terms: BTreeMap<Monomial, K>,
}

/// Constants rank below everything else; otherwise compare
/// `(sigma-leader, its degree, ord_delta of the delta-leader)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Rank {
    Constant,
    Ranked(RankVector),
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RankVector {
    pub sigma_leader: DTerm,
    pub leader_degree: u32,
    pub delta_order_of_delta_leader: u32,
}

impl<K: CoeffField> DPoly<K> {
    pub fn zero(m: usize, n: usize) -> Self {
        DPoly {
            m,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(m: usize, n: usize, c: K) -> Self {
        Self::monomial(m, n, Monomial::one(), c)
    }

    pub fn monomial(m: usize, n: usize, mono: Monomial, c: K) -> Self {
        let mut p = Self::zero(m, n);
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    pub fn term(m: usize, n: usize, t: DTerm) -> Self {
        debug_assert!(t.idx <= n && t.op.m() == m);
        Self::monomial(m, n, Monomial::of(t, 1), K::one())
    }

    /// `sum c_i * u_i`.
    pub fn linear(m: usize, n: usize, parts: impl IntoIterator<Item = (K, DTerm)>) -> Self {
        parts.into_iter().fold(Self::zero(m, n), |acc, (c, t)| {
            acc.add(&Self::monomial(m, n, Monomial::of(t, 1), c))
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no term `tau y_i` occurs (including the zero polynomial).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn as_constant(&self) -> Option<K> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.get(&Monomial::one()).cloned().unwrap_or_else(K::zero))
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn num_monomials(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, mono: &Monomial) -> K {
        self.terms.get(mono).cloned().unwrap_or_else(K::zero)
    }

    /// Distinct terms occurring in any monomial.
    pub fn support(&self) -> BTreeSet<DTerm> {
        self.terms
            .keys()
            .flat_map(|mono| mono.factors().iter().map(|(t, _)| t.clone()))
            .collect()
    }

    pub fn is_linear_homogeneous(&self) -> bool {
        self.terms.keys().all(|mono| mono.as_term().is_some())
    }

    /// Coefficients of a linear homogeneous polynomial.
    pub fn linear_coeffs(&self) -> Option<BTreeMap<DTerm, K>> {
        self.terms
            .iter()
            .map(|(mono, c)| mono.as_term().map(|t| (t.clone(), c.clone())))
            .collect()
    }

    fn insert_add(&mut self, mono: Monomial, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&mono);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    fn same_ring(&self, other: &Self) {
        debug_assert_eq!((self.m, self.n), (other.m, other.n), "polynomials over different rings");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_ring(other);
        let mut out = self.clone();
        for (mono, c) in &other.terms {
            out.insert_add(mono.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&K::one().neg())
    }

    pub fn scale(&self, c: &K) -> Self {
        let mut out = Self::zero(self.m, self.n);
        for (mono, a) in &self.terms {
            out.insert_add(mono.clone(), a.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_ring(other);
        let mut out = Self::zero(self.m, self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_add(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &K) -> Self {
        let mut out = Self::zero(self.m, self.n);
        for (ma, ca) in &self.terms {
            out.insert_add(ma.mul(mono), ca.mul(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(self.m, self.n, K::one()), |acc, _| acc.mul(self))
    }

    /// `sigma(A)`: shifts every term and applies `sigma` to coefficients.
    pub fn apply_sigma(&self) -> Self {
        let step = Operator::sigma_pow(self.m, 1);
        let mut out = Self::zero(self.m, self.n);
        for (mono, c) in &self.terms {
            out.insert_add(mono.map_terms(|t| t.apply(&step)), c.shift());
        }
        out
    }

    /// `delta_k(A)` by the Leibniz rule; `k` is 1-based.
    pub fn apply_delta(&self, k: usize) -> Self {
        let step = Operator::delta(self.m, k);
        let mut out = Self::zero(self.m, self.n);
        for (mono, c) in &self.terms {
            out.insert_add(mono.clone(), c.derive(k));
            for (t, e) in mono.factors() {
                let lowered = mono.with_exponent_delta(t, -1);
                let raised = lowered.mul(&Monomial::of(t.apply(&step), 1));
                out.insert_add(raised, c.mul(&K::from_integer(i64::from(*e))));
            }
        }
        out
    }

    /// Applies `d1^k1 ... dm^km s^l`.
    pub fn apply_operator(&self, op: &Operator) -> Self {
        debug_assert_eq!(op.m(), self.m);
        let mut out = self.clone();
        for _ in 0..op.sigma_exp() {
            out = out.apply_sigma();
        }
        for (k, &e) in op.delta_exps().iter().enumerate() {
            for _ in 0..e {
                out = out.apply_delta(k + 1);
            }
        }
        out
    }

    /// The highest term under the delta-ordering (`u_A`).
    pub fn delta_leader(&self) -> Result<DTerm, DPolyError> {
        self.support()
            .into_iter()
            .max_by(cmp_delta)
            .ok_or(DPolyError::ConstantPolynomial)
    }

    /// The highest term under the sigma-ordering (`v_A`).
    pub fn sigma_leader(&self) -> Result<DTerm, DPolyError> {
        self.support()
            .into_iter()
            .next_back()
            .ok_or(DPolyError::ConstantPolynomial)
    }

    pub fn degree_in(&self, t: &DTerm) -> u32 {
        self.terms.keys().map(|mono| mono.exponent_of(t)).max().unwrap_or(0)
    }

    /// Coefficient of `t^k` when the polynomial is read as univariate in `t`.
    pub fn coefficient_of_power(&self, t: &DTerm, k: u32) -> Self {
        let mut out = Self::zero(self.m, self.n);
        for (mono, c) in &self.terms {
            if mono.exponent_of(t) == k {
                out.insert_add(mono.without(t), c.clone());
            }
        }
        out
    }

    /// `I_A`, the coefficient of the top power of the sigma-leader.
    pub fn leading_coefficient(&self) -> Result<Self, DPolyError> {
        let v = self.sigma_leader()?;
        Ok(self.coefficient_of_power(&v, self.degree_in(&v)))
    }

    /// `S_A = dA / dv_A`.
    pub fn separant(&self) -> Result<Self, DPolyError> {
        let v = self.sigma_leader()?;
        Ok(self.partial_derivative(&v))
    }

    pub fn partial_derivative(&self, t: &DTerm) -> Self {
        let mut out = Self::zero(self.m, self.n);
        for (mono, c) in &self.terms {
            let e = mono.exponent_of(t);
            if e > 0 {
                out.insert_add(mono.with_exponent_delta(t, -1), c.mul(&K::from_integer(i64::from(e))));
            }
        }
        out
    }

    pub fn rank(&self) -> Rank {
        match (self.sigma_leader(), self.delta_leader()) {
            (Ok(v), Ok(u)) => Rank::Ranked(RankVector {
                leader_degree: self.degree_in(&v),
                sigma_leader: v,
                delta_order_of_delta_leader: u.ord_delta(),
            }),
            _ => Rank::Constant,
        }
    }

    pub fn rank_cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }

    /// Largest `ord_delta` and `ord_sigma` over the support.
    pub fn orders(&self) -> (u32, u32) {
        let support = self.support();
        (
            support.iter().map(DTerm::ord_delta).max().unwrap_or(0),
            support.iter().map(DTerm::ord_sigma).max().unwrap_or(0),
        )
    }

    /// Largest `l` with every term divisible by `sigma^l` (0 for constants).
    pub fn sigma_content(&self) -> u32 {
        if self.terms.keys().any(Monomial::is_one) {
            return 0;
        }
        self.support().iter().map(DTerm::ord_sigma).min().unwrap_or(0)
    }

    /// Inverse of `sigma^l` on a polynomial with constant-free coefficients
    /// action; panics if some term is not divisible by `sigma^l`.
    pub fn unshift(&self, l: u32) -> Self {
        let mut out = Self::zero(self.m, self.n);
        for (mono, c) in &self.terms {
            let mono = mono.map_terms(|t| {
                let mut delta = t.op.delta_exps().to_vec();
                delta.truncate(self.m);
                let sigma =
                    t.op.sigma_exp()
                        .checked_sub(l)
                        .expect("term not divisible by the shift");
                DTerm::new(Operator::new(delta, sigma), t.idx)
            });
            out.insert_add(mono, c.clone());
        }
        out
    }

    /// Multiplies by the inverse of the leading coefficient when it is a
    /// unit of `K`.
    pub fn monic(&self) -> Self {
        match self
            .leading_coefficient()
            .ok()
            .and_then(|i| i.as_constant())
            .and_then(|c| c.inv())
        {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }
}

impl DPoly<QConstants> {
    /// Linear homogeneous polynomial from `(numerator, term)` pairs.
    pub fn linear_int(m: usize, n: usize, parts: &[(i64, DTerm)]) -> Self {
        Self::linear(
            m,
            n,
            parts.iter().map(|(c, t)| (QConstants::from_integer(*c), t.clone())),
        )
    }
}

fn render_factor(t: &DTerm, e: u32, alone: bool) -> String {
    let body = if t.op.is_identity() || (alone && e == 1) {
        t.to_string()
    } else {
        format!("({t})")
    };
    if e == 1 {
        body
    } else {
        format!("{body}^{e}")
    }
}

fn render_monomial(mono: &Monomial) -> String {
    let alone = mono.factors().len() == 1;
    mono.factors()
        .iter()
        .rev()
        .map(|(t, e)| render_factor(t, *e, alone))
        .collect::<Vec<_>>()
        .join("*")
}

impl<K: CoeffField> fmt::Display for DPoly<K> {
    /// Renders in the DSL accepted by [`crate::dsl::parse_poly`], highest
    /// monomial first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (mono, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = if negative { c.neg() } else { c.clone() };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mono.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&render_monomial(mono))?;
            } else {
                write!(f, "{mag}*{}", render_monomial(mono))?;
            }
        }
        Ok(())
    }
}

impl<K: CoeffField> fmt::Debug for DPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DPoly[{self}]")
    }
}
