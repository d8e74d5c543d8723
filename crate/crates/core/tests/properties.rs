//! Algebraic laws and cross-checks over randomly generated inputs.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use dsdim::dimension::{count_total, psi, DimensionOptions, IdealPresentation};
use dsdim::dpoly::DPoly;
use dsdim::dsl::{parse_poly, parse_problem, CharsetEntry, Mode, ProblemFile};
use dsdim::field::QConstants;
use dsdim::lattice::{v_count, MultiIndex, PointSet};
use dsdim::numpoly::NumPoly2;
use dsdim::oracle::{ideal_member_linear, linear_trdeg};
use dsdim::reduction::{complete_linear, is_reduced_set, reduce, AutoreducedSet};
use dsdim::termalg::{cmp_delta, cmp_sigma, DTerm, Operator};

fn op(m: usize) -> impl Strategy<Value = Operator> {
    (prop::collection::vec(0..=2u32, m), 0..=2u32).prop_map(|(d, s)| Operator::new(d, s))
}

fn term(m: usize, n: usize) -> impl Strategy<Value = DTerm> {
    (op(m), 1..=n).prop_map(|(o, i)| DTerm::new(o, i))
}

fn coeff() -> impl Strategy<Value = i64> {
    prop_oneof![-3..=-1i64, 1..=3i64]
}

fn linear(m: usize, n: usize, max_terms: usize) -> impl Strategy<Value = DPoly> {
    prop::collection::vec((coeff(), term(m, n)), 1..=max_terms)
        .prop_map(move |parts| DPoly::linear_int(m, n, &parts))
        .prop_filter("nonzero", |p| !p.is_zero())
}

/// Sums of products of up to two terms with small rational coefficients.
fn poly(m: usize, n: usize) -> impl Strategy<Value = DPoly> {
    let monomial = (coeff(), 1..=2i64, prop::collection::vec(term(m, n), 0..=2));
    prop::collection::vec(monomial, 1..=3).prop_map(move |parts| {
        parts.into_iter().fold(DPoly::zero(m, n), |acc, (num, den, terms)| {
            let c = DPoly::constant(m, n, QConstants::new(num, den));
            let product = terms.into_iter().fold(c, |p, t| p.mul(&DPoly::term(m, n, t)));
            acc.add(&product)
        })
    })
}

fn ring() -> impl Strategy<Value = (usize, usize)> {
    (1..=2usize, 1..=2usize)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sigma_is_a_ring_endomorphism(a in poly(2, 2), b in poly(2, 2)) {
        prop_assert_eq!(a.mul(&b).apply_sigma(), a.apply_sigma().mul(&b.apply_sigma()));
        prop_assert_eq!(a.add(&b).apply_sigma(), a.apply_sigma().add(&b.apply_sigma()));
    }

    #[test]
    fn delta_obeys_leibniz(a in poly(2, 2), b in poly(2, 2), k in 1..=2usize) {
        let lhs = a.mul(&b).apply_delta(k);
        let rhs = a.apply_delta(k).mul(&b).add(&a.mul(&b.apply_delta(k)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn operators_compose(a in poly(2, 2), x in op(2), y in op(2)) {
        let stepwise = a.apply_operator(&y).apply_operator(&x);
        prop_assert_eq!(stepwise, a.apply_operator(&x.compose(&y)));
    }

    #[test]
    fn sigma_leader_moves_with_sigma(a in linear(2, 2, 4)) {
        let lead = a.sigma_leader().unwrap();
        let shifted = a.apply_sigma().sigma_leader().unwrap();
        prop_assert_eq!(shifted, lead.apply(&Operator::sigma_pow(2, 1)));
    }

    #[test]
    fn rank_comparison_is_antisymmetric(a in poly(2, 2), b in poly(2, 2)) {
        prop_assert_eq!(a.rank_cmp(&b), b.rank_cmp(&a).reverse());
        prop_assert_eq!(a.rank_cmp(&a), Ordering::Equal);
    }

    #[test]
    fn term_orders_are_total(u in term(2, 2), v in term(2, 2)) {
        prop_assert_eq!(cmp_sigma(&u, &v) == Ordering::Equal, u == v);
        prop_assert_eq!(cmp_delta(&u, &v) == Ordering::Equal, u == v);
        prop_assert_eq!(cmp_sigma(&u, &v), cmp_sigma(&v, &u).reverse());
    }

    #[test]
    fn term_orders_are_compatible_with_operators(u in term(2, 2), v in term(2, 2), x in op(2)) {
        prop_assert_eq!(cmp_sigma(&u.apply(&x), &v.apply(&x)), cmp_sigma(&u, &v));
        prop_assert_eq!(cmp_delta(&u.apply(&x), &v.apply(&x)), cmp_delta(&u, &v));
    }

    #[test]
    fn polynomials_survive_render_and_parse((m, n, p) in ring().prop_flat_map(|(m, n)| (Just(m), Just(n), poly(m, n)))) {
        prop_assert_eq!(parse_poly(&p.to_string(), m, n).unwrap(), p);
    }

    #[test]
    fn problem_files_survive_render_and_parse(
        a in linear(1, 2, 3),
        b in linear(1, 2, 3),
        shift in 0..=3u32,
    ) {
        let mut pf = ProblemFile::new(1, 2);
        pf.mode = Some(Mode::Psi);
        pf.charset.push(CharsetEntry { poly: a.clone(), shift });
        pf.generators.push(b.clone());
        pf.targets.push(a.add(&b));
        pf.options.insert("check".into(), "true".into());
        prop_assert_eq!(parse_problem(&pf.render()).unwrap(), pf.clone());
        let json = pf.to_json().to_string();
        prop_assert_eq!(parse_problem(&json).unwrap(), pf);
    }

    #[test]
    fn binomial_and_power_bases_round_trip(rows in prop::collection::vec(prop::collection::vec(-5..=5i64, 1..=3), 1..=4)) {
        let width = rows.iter().map(Vec::len).max().unwrap();
        let coeffs: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| (0..width).map(|j| BigInt::from(*r.get(j).unwrap_or(&0))).collect())
            .collect();
        let p = NumPoly2::from_coeffs(coeffs).unwrap();
        let power = p.to_power_basis();
        prop_assert_eq!(&NumPoly2::from_power_basis(&power).unwrap(), &p);
        for r in -2..=4i64 {
            for s in -2..=4i64 {
                let mut v = BigRational::from_integer(BigInt::from(0));
                for (i, row) in power.iter().enumerate() {
                    for (j, c) in row.iter().enumerate() {
                        v += c * BigRational::from_integer(BigInt::from(r).pow(i as u32) * BigInt::from(s).pow(j as u32));
                    }
                }
                prop_assert_eq!(v, BigRational::from_integer(p.eval(r, s)));
            }
        }
    }

    #[test]
    fn fitting_recovers_a_polynomial(rows in prop::collection::vec(prop::collection::vec(-5..=5i64, 2), 1..=3)) {
        let coeffs: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&c| BigInt::from(c)).collect()).collect();
        let p = NumPoly2::from_coeffs(coeffs).unwrap();
        let mut values = BTreeMap::new();
        for r in 3..=8i64 {
            for s in 2..=5i64 {
                values.insert((r, s), p.eval(r, s));
            }
        }
        prop_assert_eq!(NumPoly2::fit_from_grid(&values, 2, 1).unwrap(), p);
    }

    #[test]
    fn staircase_counts_match_enumeration(
        m in 1..=2usize,
        raw in prop::collection::vec(prop::collection::vec(0..=3u32, 3), 0..=3),
        r in 0..=5u64,
        s in 0..=5u64,
    ) {
        let points: Vec<MultiIndex> = raw.iter().map(|p| MultiIndex::new(p[..=m].to_vec())).collect();
        let set = PointSet::new(m, points.clone()).unwrap();
        let mut brute = 0u64;
        let mut v = vec![0u32; m + 1];
        loop {
            let head: u64 = v[..m].iter().map(|&x| u64::from(x)).sum();
            if head <= r && u64::from(v[m]) <= s {
                let covered = raw.iter().any(|p| (0..=m).all(|k| p[k] <= v[k]));
                if !covered {
                    brute += 1;
                }
            }
            // odometer over [0, max(r, s)]^(m+1)
            let top = r.max(s) as u32;
            let mut k = 0;
            while k <= m && v[k] == top {
                v[k] = 0;
                k += 1;
            }
            if k > m {
                break;
            }
            v[k] += 1;
        }
        prop_assert_eq!(v_count(&set, r, s), brute);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduction_is_idempotent(
        (candidates, b) in ring().prop_flat_map(|(m, n)| {
            (prop::collection::vec(linear(m, n, 3), 1..=3), linear(m, n, 5))
        }),
    ) {
        let set = match AutoreducedSet::new(candidates) {
            Ok(set) => set,
            Err(_) => return Ok(()),
        };
        let first = reduce(&b, &set).unwrap();
        let second = reduce(&first.remainder, &set).unwrap();
        prop_assert_eq!(second.steps, 0);
        prop_assert_eq!(&second.remainder, &first.remainder);
        prop_assert!(first.verify(set.elements()));
    }

    #[test]
    fn nonlinear_reduction_keeps_its_contract(a in poly(1, 1), b in poly(1, 1)) {
        prop_assume!(!a.is_constant());
        let set = AutoreducedSet::new(vec![a]).unwrap();
        let cert = reduce(&b, &set).unwrap();
        prop_assert!(cert.verify(set.elements()));
        prop_assert!(is_reduced_set(&cert.remainder, set.elements()).unwrap());
        prop_assert_ne!(cert.remainder.rank_cmp(&b), Ordering::Greater);
    }

    #[test]
    fn nonzero_ideal_elements_are_never_reduced(
        gens in prop::collection::vec(linear(1, 2, 2), 1..=2),
        combo in prop::collection::vec((coeff(), op(1), 0..4usize), 1..=4),
    ) {
        let set = match complete_linear(&gens, None) {
            Ok(set) => set,
            Err(_) => return Ok(()),
        };
        let elems = set.elements();
        let f = combo.iter().fold(DPoly::zero(1, 2), |acc, (c, x, j)| {
            acc.add(&elems[j % elems.len()].apply_operator(x).scale(&QConstants::new(*c, 1)))
        });
        prop_assume!(!f.is_zero());
        prop_assert!(!is_reduced_set(&f, elems).unwrap());
        prop_assert!(reduce(&f, &set).unwrap().remainder.is_zero());
    }

    #[test]
    fn shifted_transforms_of_a_single_element_reduce_to_zero(a in linear(2, 2, 3), x in op(2)) {
        let set = AutoreducedSet::new(vec![a.clone()]).unwrap();
        let cert = reduce(&a.apply_operator(&x), &set).unwrap();
        prop_assert!(cert.remainder.is_zero());
    }

    #[test]
    fn membership_is_closed_under_the_ring_operations(
        g in linear(1, 1, 3),
        x in op(1),
        y in op(1),
        c in coeff(),
    ) {
        let gens = [g.clone()];
        let f = g.apply_operator(&x);
        let h = g.apply_operator(&y).scale(&QConstants::new(c, 1));
        prop_assert!(ideal_member_linear(&f, &gens).unwrap());
        prop_assert!(ideal_member_linear(&f.add(&h), &gens).unwrap());
        prop_assert!(ideal_member_linear(&f.apply_sigma(), &gens).unwrap());
        prop_assert!(ideal_member_linear(&f.apply_delta(1), &gens).unwrap());
    }

    #[test]
    fn window_trdeg_is_monotone(
        gens in prop::collection::vec(linear(1, 2, 3), 1..=2),
        r in 0..=3u32,
        s in 0..=3u32,
    ) {
        let base = linear_trdeg(1, 2, &gens, r, s).unwrap();
        prop_assert!(linear_trdeg(1, 2, &gens, r + 1, s).unwrap() >= base);
        prop_assert!(linear_trdeg(1, 2, &gens, r, s + 1).unwrap() >= base);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn dimension_parts_add_up(a in linear(1, 2, 3), shift in 0..=2u32) {
        let pres = match IdealPresentation::new(1, 2, vec![a], vec![shift]) {
            Ok(p) => p,
            Err(_) => return Ok(()),
        };
        let res = psi(&pres, &DimensionOptions::default()).unwrap();
        prop_assert_eq!(&res.psi, &(&(&res.u_prime + &res.u_dprime) + &res.lambda));
        prop_assert_eq!(res.psi == res.phi, shift == 0);
        prop_assert!(res.psi.d1() <= 1 && res.psi.d2() <= 1);
        let (r0, s0) = res.stability;
        for r in r0..r0 + 3 {
            for s in s0..s0 + 3 {
                let (ri, si) = (i64::from(r), i64::from(s));
                prop_assert_eq!(res.psi.eval(ri, si), BigInt::from(count_total(&pres, r, s)));
                prop_assert!(res.psi.eval(ri, si) >= res.phi.eval(ri, si));
            }
        }
    }
}
