//! Reduction with respect to autoreduced sets, coherence, and
//! characteristic-set certification for linear ideals.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::dpoly::{DPoly, Monomial};
use crate::field::{CoeffField, QConstants};
use crate::termalg::{enumerate_ops, lcm_terms, DTerm, Operator};

/// Upper bound on elimination steps in a single [`reduce`] call.
pub const MAX_REDUCTION_STEPS: usize = 10_000;

/// Upper bound on passes of [`complete_linear`].
pub const MAX_COMPLETION_ROUNDS: usize = 64;

/// Which certification condition failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    /// Some element is constant or not reduced with respect to another.
    Autoreduced,
    /// Some `tau A_i` in the checked cone has a nonzero remainder.
    TransformsReduce,
    /// Some cross combination over an lcm of leaders has a nonzero remainder.
    CrossPairs,
    /// Some supplied generator has a nonzero remainder.
    GeneratorReduces,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::Autoreduced => "autoreduced",
            Clause::TransformsReduce => "transforms reduce to zero",
            Clause::CrossPairs => "cross pairs reduce to zero",
            Clause::GeneratorReduces => "generators reduce to zero",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("cannot reduce with respect to a constant")]
    ConstantDivisor,
    #[error("input set is not autoreduced: element {0} is constant or not reduced with respect to element {1}")]
    NonAutoreducedInput(usize, usize),
    #[error("reduction did not finish within {0} steps")]
    IterationCapExceeded(usize),
    #[error("element {0} is not linear and homogeneous")]
    NonLinearInput(usize),
    #[error("certification failed ({clause}): {detail}; witness {witness}")]
    CertificationFailed {
        clause: Clause,
        detail: String,
        witness: String,
    },
    #[error("completion did not settle within {0} rounds")]
    CompletionCapExceeded(usize),
}

/// Whether the occurrence of `t` in `b` violates the reducedness conditions
/// with respect to `a`. Returns the operator `tau` with `tau v_A = t`.
fn violation<K: CoeffField>(
    b: &DPoly<K>,
    b_delta_order: u32,
    t: &DTerm,
    a_lead: &(DTerm, u32, u32),
) -> Option<Operator> {
    let (v_a, deg_a, ord_u_a) = a_lead;
    let tau = v_a.divides(t)?;
    let od = tau.ord_delta();
    let hit = if od > 0 {
        od + ord_u_a <= b_delta_order
    } else {
        *ord_u_a <= b_delta_order && b.degree_in(t) >= *deg_a
    };
    hit.then_some(tau)
}

/// `(v_A, deg_{v_A} A, ord_delta u_A)`.
fn lead_data<K: CoeffField>(a: &DPoly<K>) -> Result<(DTerm, u32, u32), ReductionError> {
    let v = a.sigma_leader().map_err(|_| ReductionError::ConstantDivisor)?;
    let u = a.delta_leader().map_err(|_| ReductionError::ConstantDivisor)?;
    Ok((v.clone(), a.degree_in(&v), u.ord_delta()))
}

fn delta_order<K: CoeffField>(b: &DPoly<K>) -> u32 {
    b.delta_leader().map(|u| u.ord_delta()).unwrap_or(0)
}

/// Whether `b` is reduced with respect to `a`.
pub fn is_reduced<K: CoeffField>(b: &DPoly<K>, a: &DPoly<K>) -> Result<bool, ReductionError> {
    let lead = lead_data(a)?;
    let od = delta_order(b);
    Ok(b.support().iter().all(|t| violation(b, od, t, &lead).is_none()))
}

/// Whether `b` is reduced with respect to every element of `set`.
pub fn is_reduced_set<K: CoeffField>(b: &DPoly<K>, set: &[DPoly<K>]) -> Result<bool, ReductionError> {
    for a in set {
        if !is_reduced(b, a)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// No constants, and every element reduced with respect to every other.
pub fn is_autoreduced<K: CoeffField>(set: &[DPoly<K>]) -> bool {
    first_autoreduction_failure(set).is_none()
}

fn first_autoreduction_failure<K: CoeffField>(set: &[DPoly<K>]) -> Option<(usize, usize)> {
    if let Some(i) = set.iter().position(DPoly::is_constant) {
        return Some((i, i));
    }
    for (i, b) in set.iter().enumerate() {
        for (j, a) in set.iter().enumerate() {
            if i != j && !is_reduced(b, a).unwrap_or(false) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Compares sets sorted by increasing rank; `Less` means lower rank. A
/// longer set with a matching prefix ranks lower.
pub fn set_rank_cmp<K: CoeffField>(a: &[DPoly<K>], b: &[DPoly<K>]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.rank_cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    b.len().cmp(&a.len())
}

/// An autoreduced set, stored in order of increasing rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutoreducedSet<K: CoeffField = QConstants> {
    elements: Vec<DPoly<K>>,
    coherent: bool,
}

impl<K: CoeffField> AutoreducedSet<K> {
    pub fn new(mut elements: Vec<DPoly<K>>) -> Result<Self, ReductionError> {
        elements.sort_by(|a, b| a.rank_cmp(b));
        if let Some((i, j)) = first_autoreduction_failure(&elements) {
            return Err(ReductionError::NonAutoreducedInput(i, j));
        }
        Ok(AutoreducedSet {
            elements,
            coherent: false,
        })
    }

    pub fn empty() -> Self {
        AutoreducedSet {
            elements: Vec::new(),
            coherent: false,
        }
    }

    pub fn elements(&self) -> &[DPoly<K>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Set once [`certify_charset`] has succeeded.
    pub fn is_coherent_verified(&self) -> bool {
        self.coherent
    }

    pub fn is_linear(&self) -> bool {
        self.elements.iter().all(DPoly::is_linear_homogeneous)
    }
}

/// One summand `coefficient * operator(A_index)` of a reduction witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessTerm<K: CoeffField = QConstants> {
    pub coefficient: DPoly<K>,
    pub operator: Operator,
    pub index: usize,
}

/// `multiplier * input - remainder = sum coefficient * operator(A_index)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate<K: CoeffField = QConstants> {
    pub input: DPoly<K>,
    pub remainder: DPoly<K>,
    pub multiplier: DPoly<K>,
    pub combination: Vec<WitnessTerm<K>>,
    pub steps: usize,
}

impl<K: CoeffField> ReductionCertificate<K> {
    /// Expands the witness and checks the identity exactly.
    pub fn verify(&self, set: &[DPoly<K>]) -> bool {
        let mut rhs = DPoly::zero(self.input.m(), self.input.n());
        for w in &self.combination {
            let Some(a) = set.get(w.index) else {
                return false;
            };
            rhs = rhs.add(&w.coefficient.mul(&a.apply_operator(&w.operator)));
        }
        self.multiplier.mul(&self.input).sub(&self.remainder) == rhs
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "input": self.input.to_string(),
            "remainder": self.remainder.to_string(),
            "multiplier": self.multiplier.to_string(),
            "combination": self.combination.iter().map(|w| serde_json::json!({
                "coefficient": w.coefficient.to_string(),
                "operator": w.operator.to_string(),
                "index": w.index,
            })).collect::<Vec<_>>(),
            "steps": self.steps,
        })
    }
}

/// Reduces `b` modulo an autoreduced set.
pub fn reduce<K: CoeffField>(b: &DPoly<K>, set: &AutoreducedSet<K>) -> Result<ReductionCertificate<K>, ReductionError> {
    reduce_with(b, set.elements())
}

/// Reduction against an arbitrary list of non-constant polynomials; the
/// list is used in the given order when several elements apply.
pub fn reduce_with<K: CoeffField>(b: &DPoly<K>, set: &[DPoly<K>]) -> Result<ReductionCertificate<K>, ReductionError> {
    let leads: Vec<_> = set.iter().map(lead_data).collect::<Result<_, _>>()?;
    let (m, n) = (b.m(), b.n());
    let one = DPoly::constant(m, n, K::one());
    let mut cur = b.clone();
    let mut multiplier = one.clone();
    let mut combination: Vec<WitnessTerm<K>> = Vec::new();
    let mut steps = 0;

    loop {
        let od = delta_order(&cur);
        let support = cur.support();
        let found = support.iter().rev().find_map(|t| {
            leads
                .iter()
                .enumerate()
                .find_map(|(j, lead)| violation(&cur, od, t, lead).map(|tau| (t.clone(), j, tau)))
        });
        let Some((t, j, tau)) = found else {
            break;
        };
        steps += 1;
        if steps > MAX_REDUCTION_STEPS {
            return Err(ReductionError::IterationCapExceeded(MAX_REDUCTION_STEPS));
        }

        let shifted = set[j].apply_operator(&tau);
        let d = shifted.degree_in(&t);
        let e = cur.degree_in(&t);
        debug_assert!(d >= 1 && e >= d);
        let head = shifted.coefficient_of_power(&t, d);
        let c_e = cur.coefficient_of_power(&t, e);
        let mut coeff = c_e.mul(&DPoly::monomial(m, n, Monomial::of(t.clone(), e - d), K::one()));
        match head.as_constant().and_then(|h| h.inv()) {
            Some(inv) => {
                coeff = coeff.scale(&inv);
                cur = cur.sub(&coeff.mul(&shifted));
            }
            None => {
                cur = head.mul(&cur).sub(&coeff.mul(&shifted));
                multiplier = head.mul(&multiplier);
                for w in &mut combination {
                    w.coefficient = head.mul(&w.coefficient);
                }
            }
        }
        combination.push(WitnessTerm {
            coefficient: coeff,
            operator: tau,
            index: j,
        });
    }

    Ok(ReductionCertificate {
        input: b.clone(),
        remainder: cur,
        multiplier,
        combination,
        steps,
    })
}

/// Default cone `(2 max ord_delta + m, 2 max ord_sigma + 1)` for the
/// transform condition of coherence.
pub fn default_coherence_cone<K: CoeffField>(set: &[DPoly<K>]) -> (u32, u32) {
    let m = set.first().map(DPoly::m).unwrap_or(0) as u32;
    let (od, os) = set
        .iter()
        .map(DPoly::orders)
        .fold((0, 0), |(a, b), (x, y)| (a.max(x), b.max(y)));
    (2 * od + m, 2 * os + 1)
}

/// A failed coherence or generator check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation<K: CoeffField = QConstants> {
    pub clause: Clause,
    pub detail: String,
    pub remainder: DPoly<K>,
}

impl<K: CoeffField> Violation<K> {
    fn into_error(self) -> ReductionError {
        ReductionError::CertificationFailed {
            clause: self.clause,
            detail: self.detail,
            witness: self.remainder.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherenceReport<K: CoeffField = QConstants> {
    pub cone: (u32, u32),
    pub transforms_checked: usize,
    pub pairs_checked: usize,
    pub violation: Option<Violation<K>>,
}

impl<K: CoeffField> CoherenceReport<K> {
    pub fn is_coherent(&self) -> bool {
        self.violation.is_none()
    }
}

fn require_linear<K: CoeffField>(set: &[DPoly<K>]) -> Result<(), ReductionError> {
    match set.iter().position(|a| !a.is_linear_homogeneous()) {
        Some(i) => Err(ReductionError::NonLinearInput(i)),
        None => Ok(()),
    }
}

/// `(tau'' I_j)(tau' A_i) - (tau' I_i)(tau'' A_j)` for `w = lcm(v_i, v_j)`,
/// or `None` when the leaders involve different indeterminates.
pub fn cross_combination<K: CoeffField>(a_i: &DPoly<K>, a_j: &DPoly<K>) -> Option<DPoly<K>> {
    let v_i = a_i.sigma_leader().ok()?;
    let v_j = a_j.sigma_leader().ok()?;
    let w = lcm_terms(&[v_i.clone(), v_j.clone()])?;
    let t1 = v_i.divides(&w)?;
    let t2 = v_j.divides(&w)?;
    let i_i = a_i.leading_coefficient().ok()?;
    let i_j = a_j.leading_coefficient().ok()?;
    Some(
        i_j.apply_operator(&t2)
            .mul(&a_i.apply_operator(&t1))
            .sub(&i_i.apply_operator(&t1).mul(&a_j.apply_operator(&t2))),
    )
}

/// Checks both coherence conditions, the transform condition over the
/// cone `T(cone.0, cone.1)` (default [`default_coherence_cone`]).
pub fn coherence_report<K: CoeffField>(
    set: &AutoreducedSet<K>,
    cone: Option<(u32, u32)>,
) -> Result<CoherenceReport<K>, ReductionError> {
    let elems = set.elements();
    require_linear(elems)?;
    let cone = cone.unwrap_or_else(|| default_coherence_cone(elems));
    let mut report = CoherenceReport {
        cone,
        transforms_checked: 0,
        pairs_checked: 0,
        violation: None,
    };
    let Some(first) = elems.first() else {
        return Ok(report);
    };
    for op in enumerate_ops(first.m(), cone.0, cone.1) {
        for (i, a) in elems.iter().enumerate() {
            report.transforms_checked += 1;
            let cert = reduce_with(&a.apply_operator(&op), elems)?;
            if !cert.remainder.is_zero() {
                report.violation = Some(Violation {
                    clause: Clause::TransformsReduce,
                    detail: format!("({op}) applied to element {i} leaves a remainder"),
                    remainder: cert.remainder,
                });
                return Ok(report);
            }
        }
    }
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            let Some(c) = cross_combination(&elems[i], &elems[j]) else {
                continue;
            };
            report.pairs_checked += 1;
            let cert = reduce_with(&c, elems)?;
            if !cert.remainder.is_zero() {
                report.violation = Some(Violation {
                    clause: Clause::CrossPairs,
                    detail: format!("pair ({i}, {j}) leaves a remainder"),
                    remainder: cert.remainder,
                });
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// Whether a linear autoreduced set is coherent (default cone).
pub fn is_coherent<K: CoeffField>(set: &AutoreducedSet<K>) -> Result<bool, ReductionError> {
    Ok(coherence_report(set, None)?.is_coherent())
}

/// Evidence that a linear set is a characteristic set of the ideal
/// generated by `generators`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharsetCertificate<K: CoeffField = QConstants> {
    pub charset: AutoreducedSet<K>,
    pub coherence: CoherenceReport<K>,
    pub generator_certificates: Vec<ReductionCertificate<K>>,
}

/// Certifies `elements` as an autoreduced, coherent linear set to which
/// every generator reduces to zero.
pub fn certify_charset<K: CoeffField>(
    elements: Vec<DPoly<K>>,
    generators: &[DPoly<K>],
    cone: Option<(u32, u32)>,
) -> Result<CharsetCertificate<K>, ReductionError> {
    require_linear(&elements)?;
    let mut charset = AutoreducedSet::new(elements).map_err(|e| match e {
        ReductionError::NonAutoreducedInput(i, j) => ReductionError::CertificationFailed {
            clause: Clause::Autoreduced,
            detail: format!("element {i} is constant or not reduced with respect to element {j}"),
            witness: String::new(),
        },
        other => other,
    })?;
    let coherence = coherence_report(&charset, cone)?;
    if let Some(v) = coherence.violation.clone() {
        return Err(v.into_error());
    }
    let mut generator_certificates = Vec::with_capacity(generators.len());
    for (k, g) in generators.iter().enumerate() {
        let cert = reduce(g, &charset)?;
        if !cert.remainder.is_zero() {
            return Err(Violation {
                clause: Clause::GeneratorReduces,
                detail: format!("generator {k} ({g}) leaves a remainder"),
                remainder: cert.remainder,
            }
            .into_error());
        }
        generator_certificates.push(cert);
    }
    charset.coherent = true;
    Ok(CharsetCertificate {
        charset,
        coherence,
        generator_certificates,
    })
}

/// Best-effort completion of linear generators into a coherent autoreduced
/// set: alternately autoreduce and add nonzero remainders of the coherence
/// checks. Not guaranteed to produce a characteristic set.
pub fn complete_linear<K: CoeffField>(
    generators: &[DPoly<K>],
    cone: Option<(u32, u32)>,
) -> Result<AutoreducedSet<K>, ReductionError> {
    require_linear(generators)?;
    let mut set: Vec<DPoly<K>> = Vec::new();
    let mut pending: Vec<DPoly<K>> = generators.to_vec();
    for _ in 0..MAX_COMPLETION_ROUNDS {
        while let Some(g) = pending.pop() {
            let r = reduce_with(&g, &set)?.remainder;
            if r.is_zero() {
                continue;
            }
            let r = r.monic();
            let (keep, evicted): (Vec<_>, Vec<_>) = set.into_iter().partition(|a| is_reduced(a, &r).unwrap_or(false));
            pending.extend(evicted);
            set = keep;
            set.push(r);
            set.sort_by(|a, b| a.rank_cmp(b));
        }
        let candidate = AutoreducedSet::new(set.clone())?;
        match coherence_report(&candidate, cone)?.violation {
            None => return Ok(candidate),
            Some(v) => pending.push(v.remainder),
        }
    }
    Err(ReductionError::CompletionCapExceeded(MAX_COMPLETION_ROUNDS))
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

    fn sigma() -> Operator {
        Operator::sigma_pow(2, 1)
    }

    #[test]
    fn reducedness_cases() {
        let a = b1();
        let b = DPoly::term(2, 1, t(&[1, 0], 1, 1));
        assert!(is_reduced(&b, &a).unwrap());
        assert!(!is_reduced(&a.apply_operator(&sigma()), &a).unwrap());
        assert!(is_reduced(&DPoly::term(2, 1, t(&[0, 0], 0, 1)), &a).unwrap());
        let five = DPoly::constant(2, 1, QConstants::from_integer(5));
        assert_eq!(is_reduced(&b, &five), Err(ReductionError::ConstantDivisor));
    }

    #[test]
    fn head_reduction_of_a_shift() {
        let set = AutoreducedSet::new(vec![b1()]).unwrap();
        let cert = reduce(&b1().apply_operator(&sigma()), &set).unwrap();
        assert!(cert.remainder.is_zero());
        assert_eq!(cert.multiplier, DPoly::constant(2, 1, QConstants::one()));
        assert_eq!(cert.combination.len(), 1);
        assert_eq!(cert.combination[0].operator, sigma());
        assert!(cert.verify(set.elements()));

        let doubled = b1().apply_operator(&sigma()).scale(&QConstants::from_integer(2));
        let cert = reduce(&doubled, &set).unwrap();
        assert!(cert.remainder.is_zero());
        assert_eq!(
            cert.combination[0].coefficient,
            DPoly::constant(2, 1, QConstants::from_integer(2))
        );
    }

    #[test]
    fn reduced_input_is_left_alone() {
        let set = AutoreducedSet::new(vec![b1()]).unwrap();
        let b = DPoly::term(2, 1, t(&[1, 0], 1, 1));
        let cert = reduce(&b, &set).unwrap();
        assert_eq!(cert.remainder, b);
        assert!(cert.combination.is_empty());
    }

    #[test]
    fn autoreduced_cases() {
        assert!(is_autoreduced(&[b1()]));
        assert!(!is_autoreduced(&[b1(), b1().apply_operator(&sigma())]));
        let pair = [
            DPoly::linear_int(0, 2, &[(1, t(&[], 1, 1)), (1, t(&[], 0, 2))]),
            DPoly::linear_int(0, 2, &[(1, t(&[], 1, 2)), (1, t(&[], 0, 1))]),
        ];
        assert!(is_autoreduced(&pair));
        assert!(matches!(
            AutoreducedSet::new(vec![b1(), b1().apply_operator(&sigma())]),
            Err(ReductionError::NonAutoreducedInput(..))
        ));
    }

    #[test]
    fn set_ranks() {
        let y = DPoly::<QConstants>::term(1, 1, t(&[0], 0, 1));
        let sy = DPoly::term(1, 1, t(&[0], 1, 1));
        let one = std::slice::from_ref(&y);
        assert_eq!(set_rank_cmp(one, std::slice::from_ref(&sy)), Ordering::Less);
        assert_eq!(set_rank_cmp(&[y.clone(), sy.clone()], one), Ordering::Less);
        assert_eq!(set_rank_cmp(one, &[y.clone(), sy]), Ordering::Greater);
        assert_eq!(set_rank_cmp(one, one), Ordering::Equal);
    }

    #[test]
    fn coherence_cases() {
        let single = AutoreducedSet::new(vec![b1()]).unwrap();
        assert!(is_coherent(&single).unwrap());
        let pair = AutoreducedSet::new(vec![
            DPoly::linear_int(0, 2, &[(1, t(&[], 1, 1)), (-1, t(&[], 0, 2))]),
            DPoly::linear_int(0, 2, &[(1, t(&[], 1, 2)), (-1, t(&[], 0, 1))]),
        ])
        .unwrap();
        assert!(is_coherent(&pair).unwrap());

        let nonlinear = AutoreducedSet::new(vec![DPoly::<QConstants>::term(1, 1, t(&[0], 1, 1)).pow(2)]).unwrap();
        assert_eq!(is_coherent(&nonlinear), Err(ReductionError::NonLinearInput(0)));
    }

    #[test]
    fn transform_condition_failure_is_found() {
        // {d1 y1 - y2, s y1}: d1 applied to the second element is taken by
        // the first (lower rank), leaving s y2.
        let a = DPoly::linear_int(1, 2, &[(1, t(&[1], 0, 1)), (-1, t(&[0], 0, 2))]);
        let b = DPoly::term(1, 2, t(&[0], 1, 1));
        let set = AutoreducedSet::new(vec![b, a]).unwrap();
        let report = coherence_report(&set, None).unwrap();
        let v = report.violation.unwrap();
        assert_eq!(v.clause, Clause::TransformsReduce);
        assert_eq!(v.remainder, DPoly::term(1, 2, t(&[0], 1, 2)));
    }

    #[test]
    fn certification() {
        let gens = vec![b1().apply_operator(&sigma())];
        let cert = certify_charset(vec![b1()], &gens, None).unwrap();
        assert!(cert.charset.is_coherent_verified());
        let unrelated = vec![DPoly::term(2, 1, t(&[0, 0], 1, 1))];
        assert!(matches!(
            certify_charset(vec![b1()], &unrelated, None),
            Err(ReductionError::CertificationFailed {
                clause: Clause::GeneratorReduces,
                ..
            })
        ));
        assert!(certify_charset::<QConstants>(vec![], &[], None).is_ok());
    }

    #[test]
    fn nonlinear_reduction_accumulates_a_multiplier() {
        // A = (d1 y) * (s y) + y, B = (s^2 y)^2: the sigma case needs the
        // transformed leading coefficient s(d1 y).
        let dy = DPoly::<QConstants>::term(1, 1, t(&[1], 0, 1));
        let sy = DPoly::term(1, 1, t(&[0], 1, 1));
        let y = DPoly::term(1, 1, t(&[0], 0, 1));
        let a = dy.mul(&sy).add(&y);
        let b = DPoly::term(1, 1, t(&[1], 2, 1)).mul(&DPoly::term(1, 1, t(&[0], 2, 1)));
        let set = AutoreducedSet::new(vec![a]).unwrap();
        let cert = reduce(&b, &set).unwrap();
        assert!(cert.verify(set.elements()));
        assert!(is_reduced_set(&cert.remainder, set.elements()).unwrap());
        assert!(cert.multiplier.as_constant().is_none());
        assert_ne!(cert.remainder.rank_cmp(&b), Ordering::Greater);
    }

    #[test]
    fn completion_recovers_a_singleton() {
        let got = complete_linear(&[b1()], None).unwrap();
        assert_eq!(got.elements(), &[b1()]);
    }
}
