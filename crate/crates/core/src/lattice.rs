//! Staircase counting in `N^(m+1)` under the product order.
//!
//! The first `m` coordinates are graded together by `ord1`, the last one by
//! `ord2`. For a finite `A`, [`omega`] returns the bivariate polynomial that
//! counts the points of `{ord1 <= r, ord2 <= s}` lying above no element of
//! `A`, and [`v_count`] counts the same set by enumeration.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numpoly::NumPoly2;

/// Largest antichain accepted by the inclusion-exclusion formula.
pub const MAX_ANTICHAIN: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0} minimal elements exceed the inclusion-exclusion cap of {MAX_ANTICHAIN}")]
    TooManyPoints(usize),
}

/// A point of `N^(m+1)`; the last entry is the `sigma` coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn new(entries: Vec<u32>) -> Self {
        assert!(!entries.is_empty(), "a multi-index has at least one coordinate");
        MultiIndex(entries)
    }

    pub fn m(&self) -> usize {
        self.0.len() - 1
    }

    pub fn ord1(&self) -> u64 {
        self.0[..self.m()].iter().map(|&x| u64::from(x)).sum()
    }

    pub fn ord2(&self) -> u64 {
        u64::from(self.0[self.m()])
    }
}

pub fn leq_product(a: &MultiIndex, b: &MultiIndex) -> Result<bool, LatticeError> {
    if a.0.len() != b.0.len() {
        return Err(LatticeError::DimensionMismatch {
            expected: a.0.len(),
            got: b.0.len(),
        });
    }
    Ok(a.0.iter().zip(&b.0).all(|(x, y)| x <= y))
}

fn leq(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointSet {
    pub m: usize,
    pub points: Vec<MultiIndex>,
}

impl PointSet {
    pub fn new(m: usize, points: Vec<MultiIndex>) -> Result<Self, LatticeError> {
        for p in &points {
            if p.0.len() != m + 1 {
                return Err(LatticeError::DimensionMismatch {
                    expected: m + 1,
                    got: p.0.len(),
                });
            }
        }
        Ok(PointSet { m, points })
    }

    pub fn empty(m: usize) -> Self {
        PointSet { m, points: vec![] }
    }

    pub fn from_slices(m: usize, points: &[&[u32]]) -> Result<Self, LatticeError> {
        Self::new(m, points.iter().map(|p| MultiIndex::new(p.to_vec())).collect())
    }

    /// Validates a deserialized set (serde does not check point lengths).
    pub fn validate(&self) -> Result<(), LatticeError> {
        Self::new(self.m, self.points.clone()).map(|_| ())
    }
}

/// The product-order minimal points of `a`, sorted and deduplicated.
pub fn minimal_elements(a: &PointSet) -> PointSet {
    let mut pts = a.points.clone();
    pts.sort();
    pts.dedup();
    let minimal = pts
        .iter()
        .filter(|p| !pts.iter().any(|q| q != *p && leq(&q.0, &p.0)))
        .cloned()
        .collect();
    PointSet {
        m: a.m,
        points: minimal,
    }
}

/// Counts `{v : ord1 v <= r, ord2 v <= s, no a in A with a <= v}`.
pub fn v_count(a: &PointSet, r: u64, s: u64) -> u64 {
    let m = a.m;
    let mut head = vec![0u32; m];
    let mut total = 0u64;
    count_rec(a, &mut head, 0, r, s, &mut total);
    total
}

fn count_rec(a: &PointSet, head: &mut Vec<u32>, pos: usize, budget: u64, s: u64, total: &mut u64) {
    if pos == head.len() {
        // Points below `head` in the first m coordinates cut the sigma column
        // at their last coordinate.
        let cut = a
            .points
            .iter()
            .filter(|p| leq(&p.0[..head.len()], head))
            .map(|p| u64::from(p.0[head.len()]))
            .min()
            .unwrap_or(u64::MAX);
        *total += cut.min(s + 1);
        return;
    }
    for x in 0..=budget {
        head[pos] = x as u32;
        count_rec(a, head, pos + 1, budget - x, s, total);
    }
    head[pos] = 0;
}

/// Closed-form dimension polynomial of a finite set, by inclusion-exclusion
/// over subsets of its minimal elements.
pub fn omega(a: &PointSet) -> Result<NumPoly2, LatticeError> {
    let min = minimal_elements(a);
    let q = min.points.len();
    if q > MAX_ANTICHAIN {
        return Err(LatticeError::TooManyPoints(q));
    }
    let m = a.m;
    let mut acc = NumPoly2::zero();
    for mask in 0u32..(1u32 << q) {
        let mut joined = vec![0u32; m + 1];
        for (i, p) in min.points.iter().enumerate() {
            if mask & (1 << i) != 0 {
                for (slot, &x) in joined.iter_mut().zip(&p.0) {
                    *slot = (*slot).max(x);
                }
            }
        }
        let b: i64 = joined[..m].iter().map(|&x| i64::from(x)).sum();
        let c = i64::from(joined[m]);
        let term = NumPoly2::shifted_cone(m, b, c);
        if mask.count_ones() % 2 == 0 {
            acc = acc + term;
        } else {
            acc = acc - term;
        }
    }
    Ok(acc)
}

/// Corner `(sum_j max_i a_ij, max_i a_i,m+1)` from which [`omega`] and
/// [`v_count`] agree.
pub fn stability_threshold(a: &PointSet) -> (u64, u64) {
    let m = a.m;
    let r0 = (0..m)
        .map(|j| a.points.iter().map(|p| u64::from(p.0[j])).max().unwrap_or(0))
        .sum();
    let s0 = a.points.iter().map(|p| u64::from(p.0[m])).max().unwrap_or(0);
    (r0, s0)
}
