//! Operators `d1^k1 ... dm^km s^l`, terms `tau * y_i`, and the two term
//! orderings.
//!
//! [`DTerm`]'s `Ord` is the sigma-ordering: lexicographic on
//! `(ord_sigma, ord_delta, k1, ..., km, i)`. The delta-ordering swaps the
//! first two components and is exposed as [`cmp_delta`].

use std::cmp::Ordering;
use std::fmt;

/// Maximum number of derivations supported.
pub const MAX_DERIVATIONS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Operator {
    delta: Vec<u32>,
    sigma: u32,
}

impl Operator {
    pub fn new(delta: Vec<u32>, sigma: u32) -> Self {
        assert!(
            delta.len() <= MAX_DERIVATIONS,
            "at most {MAX_DERIVATIONS} derivations are supported"
        );
        Operator { delta, sigma }
    }

    pub fn identity(m: usize) -> Self {
        Self::new(vec![0; m], 0)
    }

    /// `sigma^l`.
    pub fn sigma_pow(m: usize, l: u32) -> Self {
        Self::new(vec![0; m], l)
    }

    /// `delta_k` (1-based).
    pub fn delta(m: usize, k: usize) -> Self {
        let mut d = vec![0; m];
        d[k - 1] = 1;
        Self::new(d, 0)
    }

    pub fn m(&self) -> usize {
        self.delta.len()
    }

    pub fn delta_exps(&self) -> &[u32] {
        &self.delta
    }

    pub fn sigma_exp(&self) -> u32 {
        self.sigma
    }

    pub fn ord_delta(&self) -> u32 {
        self.delta.iter().sum()
    }

    pub fn ord_sigma(&self) -> u32 {
        self.sigma
    }

    pub fn is_identity(&self) -> bool {
        self.sigma == 0 && self.delta.iter().all(|&k| k == 0)
    }

    /// Composition (the semigroup is commutative).
    pub fn compose(&self, other: &Operator) -> Operator {
        assert_eq!(self.m(), other.m(), "operators over different derivation sets");
        Operator {
            delta: self
                .delta
                .iter()
                .zip(&other.delta)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
            sigma: self.sigma.checked_add(other.sigma).expect("exponent overflow"),
        }
    }

    /// `(ord_delta, ord_sigma, k1..km)` ordering key without the index.
    fn delta_key(&self) -> (u32, u32, &[u32]) {
        (self.ord_delta(), self.sigma, &self.delta)
    }

    fn sigma_key(&self) -> (u32, u32, &[u32]) {
        (self.sigma, self.ord_delta(), &self.delta)
    }
}

impl fmt::Display for Operator {
    /// `d1^2*d2*s^3`; the identity renders as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, &e) in self.delta.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("d{}", k + 1)),
                _ => parts.push(format!("d{}^{}", k + 1, e)),
            }
        }
        match self.sigma {
            0 => {}
            1 => parts.push("s".to_string()),
            l => parts.push(format!("s^{l}")),
        }
        f.write_str(&parts.join("*"))
    }
}

/// Returns `b / a` when `a` divides `b`.
pub fn divides(a: &Operator, b: &Operator) -> Option<Operator> {
    assert_eq!(a.m(), b.m(), "operators over different derivation sets");
    if a.sigma > b.sigma || a.delta.iter().zip(&b.delta).any(|(x, y)| x > y) {
        return None;
    }
    Some(Operator {
        delta: a.delta.iter().zip(&b.delta).map(|(x, y)| y - x).collect(),
        sigma: b.sigma - a.sigma,
    })
}

/// Coordinatewise maximum; `None` for an empty list.
pub fn lcm_ops(ops: &[Operator]) -> Option<Operator> {
    let (first, rest) = ops.split_first()?;
    Some(rest.iter().fold(first.clone(), |acc, op| {
        assert_eq!(acc.m(), op.m(), "operators over different derivation sets");
        Operator {
            delta: acc.delta.iter().zip(&op.delta).map(|(a, b)| *a.max(b)).collect(),
            sigma: acc.sigma.max(op.sigma),
        }
    }))
}

/// A term `tau * y_idx`, with `idx` 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DTerm {
    pub op: Operator,
    pub idx: usize,
}

impl DTerm {
    pub fn new(op: Operator, idx: usize) -> Self {
        assert!(idx >= 1, "indeterminates are numbered from 1");
        DTerm { op, idx }
    }

    /// The bare indeterminate `y_idx`.
    pub fn var(m: usize, idx: usize) -> Self {
        Self::new(Operator::identity(m), idx)
    }

    pub fn ord_delta(&self) -> u32 {
        self.op.ord_delta()
    }

    pub fn ord_sigma(&self) -> u32 {
        self.op.ord_sigma()
    }

    /// `alpha(tau y) = (alpha tau) y`.
    pub fn apply(&self, alpha: &Operator) -> DTerm {
        DTerm {
            op: alpha.compose(&self.op),
            idx: self.idx,
        }
    }

    /// `other / self` when `self` divides `other` (same indeterminate).
    pub fn divides(&self, other: &DTerm) -> Option<Operator> {
        if self.idx != other.idx {
            return None;
        }
        divides(&self.op, &other.op)
    }

    /// Exponent vector `(k1, ..., km, l)` as a point of `N^(m+1)`.
    pub fn exponents(&self) -> Vec<u32> {
        let mut v = self.op.delta.clone();
        v.push(self.op.sigma);
        v
    }
}

impl Ord for DTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_sigma(self, other)
    }
}

impl PartialOrd for DTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.op.is_identity() {
            write!(f, "y{}", self.idx)
        } else {
            write!(f, "{}*y{}", self.op, self.idx)
        }
    }
}

/// Lexicographic on `(ord_delta, ord_sigma, k1..km, i)`.
pub fn cmp_delta(u: &DTerm, v: &DTerm) -> Ordering {
    u.op.delta_key().cmp(&v.op.delta_key()).then(u.idx.cmp(&v.idx))
}

/// Lexicographic on `(ord_sigma, ord_delta, k1..km, i)`.
pub fn cmp_sigma(u: &DTerm, v: &DTerm) -> Ordering {
    u.op.sigma_key().cmp(&v.op.sigma_key()).then(u.idx.cmp(&v.idx))
}

/// `lcm(u, v)`; `None` when the indeterminates differ.
pub fn lcm_terms(terms: &[DTerm]) -> Option<DTerm> {
    let first = terms.first()?;
    if terms.iter().any(|t| t.idx != first.idx) {
        return None;
    }
    let ops: Vec<Operator> = terms.iter().map(|t| t.op.clone()).collect();
    Some(DTerm::new(lcm_ops(&ops)?, first.idx))
}

/// All `theta` with `ord_delta <= r` in `m` derivations, as exponent vectors.
pub fn delta_monomials(m: usize, r: u32) -> Vec<Vec<u32>> {
    fn rec(m: usize, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in 0..=budget {
            cur.push(x);
            rec(m, budget - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, r, &mut Vec::with_capacity(m), &mut out);
    out
}

/// All operators in `T(r, s)`.
pub fn enumerate_ops(m: usize, r: u32, s: u32) -> Vec<Operator> {
    let thetas = delta_monomials(m, r);
    (0..=s)
        .flat_map(|l| thetas.iter().map(move |d| Operator::new(d.clone(), l)))
        .collect()
}

/// All terms of `T(r, s)Y`, ascending in the sigma-ordering.
pub fn enumerate_terms(m: usize, n: usize, r: u32, s: u32) -> Vec<DTerm> {
    let mut out: Vec<DTerm> = enumerate_ops(m, r, s)
        .into_iter()
        .flat_map(|op| (1..=n).map(move |i| DTerm::new(op.clone(), i)))
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(d: &[u32], s: u32) -> Operator {
        Operator::new(d.to_vec(), s)
    }

    fn term(d: &[u32], s: u32, i: usize) -> DTerm {
        DTerm::new(op(d, s), i)
    }

    #[test]
    fn divisibility() {
        let b = op(&[2, 1], 3);
        assert_eq!(divides(&Operator::identity(2), &b), Some(b.clone()));
        assert_eq!(divides(&op(&[1, 0], 1), &op(&[2, 0], 1)), Some(op(&[1, 0], 0)));
        assert_eq!(divides(&op(&[0, 1], 0), &op(&[2, 0], 0)), None);
    }

    #[test]
    fn lcms() {
        assert_eq!(lcm_ops(&[op(&[1, 0], 1), op(&[0, 1], 0)]), Some(op(&[1, 1], 1)));
        let t = op(&[2, 1], 3);
        assert_eq!(lcm_ops(&[t.clone(), t.clone()]), Some(t));
        assert_eq!(lcm_terms(&[term(&[1, 0], 0, 1), term(&[0, 1], 0, 2)]), None);
        assert_eq!(
            lcm_terms(&[term(&[1, 0], 0, 1), term(&[0, 1], 2, 1)]),
            Some(term(&[1, 1], 2, 1))
        );
        assert_eq!(lcm_ops(&[]), None);
    }

    #[test]
    fn orderings() {
        // s^2 y > s d1^2 y in the sigma-ordering
        assert_eq!(cmp_sigma(&term(&[0, 0], 2, 1), &term(&[2, 0], 1, 1)), Ordering::Greater);
        // s d1^2 y > s d2^2 y in the delta-ordering
        assert_eq!(cmp_delta(&term(&[2, 0], 1, 1), &term(&[0, 2], 1, 1)), Ordering::Greater);
        let u = term(&[1, 1], 1, 2);
        assert_eq!(cmp_delta(&u, &u), Ordering::Equal);
        assert_eq!(cmp_sigma(&u, &u), Ordering::Equal);
        // index is the last tie-breaker
        assert_eq!(cmp_sigma(&term(&[1], 0, 1), &term(&[1], 0, 2)), Ordering::Less);
        // delta-ordering ranks derivation order first
        assert_eq!(cmp_delta(&term(&[0, 0], 2, 1), &term(&[2, 0], 1, 1)), Ordering::Less);
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_terms(2, 1, 2, 1).len(), 12);
        let base = enumerate_terms(2, 3, 0, 0);
        assert_eq!(base, vec![DTerm::var(2, 1), DTerm::var(2, 2), DTerm::var(2, 3)]);
        let small: Vec<String> = enumerate_terms(1, 1, 1, 1).iter().map(|t| t.to_string()).collect();
        assert_eq!(small, vec!["y1", "d1*y1", "s*y1", "d1*s*y1"]);
        let big = enumerate_terms(2, 2, 3, 2);
        assert!(big.windows(2).all(|w| cmp_sigma(&w[0], &w[1]) == Ordering::Less));
    }

    #[test]
    fn apply_operator_to_terms() {
        let u = term(&[0, 0], 1, 1);
        assert_eq!(u.apply(&Operator::identity(2)), u);
        assert_eq!(u.apply(&Operator::sigma_pow(2, 1)), term(&[0, 0], 2, 1));
        assert_eq!(term(&[1, 0], 1, 2).apply(&Operator::delta(2, 1)), term(&[2, 0], 1, 2));
    }

    #[test]
    fn rendering() {
        assert_eq!(term(&[2, 1], 3, 1).to_string(), "d1^2*d2*s^3*y1");
        assert_eq!(Operator::identity(2).to_string(), "");
        assert_eq!(term(&[0, 0], 0, 4).to_string(), "y4");
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn overflow_is_checked() {
        op(&[u32::MAX], 0).compose(&op(&[1], 0));
    }
}
