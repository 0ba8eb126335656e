//! Randomized invariants: closed forms against the root-system formulas, the
//! N → −N dualities, q-ratio symmetry and dimension conservation.

use casimirlab::casimir::{self, AlgebraId};
use casimirlab::composite::{check_duality, dim_composite_formal, CompositePair};
use casimirlab::decomp::{mult_by_adjoint, Decomposition};
use casimirlab::exact::{int, QPoint, Rational};
use casimirlab::label::{self, IrrepLabel};
use casimirlab::qdim::{self, sample_points};
use casimirlab::young::{self, Partition};
use proptest::prelude::*;

/// Partitions with at most `rows` rows and first row at most `width`.
fn partition(rows: usize, width: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=width, 0..=rows).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn pair(size: usize) -> impl Strategy<Value = CompositePair> {
    (partition(size, size), partition(size, size))
        .prop_filter("bounded size", move |(a, b)| a.size() + b.size() <= size + 1)
        .prop_map(|(a, b)| CompositePair::new(a, b))
}

/// Pairs (μ,λ) with |μ| = |λ| ≤ `size`.
fn balanced_pair(size: usize) -> impl Strategy<Value = CompositePair> {
    (0..=size).prop_flat_map(|k| {
        let ps = young::partitions(k);
        let n = ps.len();
        (0..n, 0..n).prop_map(move |(i, j)| CompositePair::balanced(ps[i].clone(), ps[j].clone()).unwrap())
    })
}

fn nonzero_q() -> impl Strategy<Value = QPoint> {
    (1i64..30, 1i64..30, any::<bool>()).prop_map(|(a, b, neg)| {
        let v = Rational::new(if neg { -a } else { a }.into(), b.into());
        QPoint::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn sl_closed_forms_match_weyl((n, p) in (2usize..8).prop_flat_map(|n| (Just(n), partition(n - 1, 4)))) {
        let g = AlgebraId::sl(n as u32).unwrap();
        let l = IrrepLabel::Diagram(p.clone());
        prop_assert_eq!(young::dim_sl(n, &p), label::weyl_dim(&g, &l).unwrap());
        prop_assert_eq!(young::dim_sl_hook_content(n as i64, &p), young::dim_sl(n, &p));
        prop_assert_eq!(casimir::casimir_sl(n, &p).unwrap(), label::casimir_weyl(&g, &l).unwrap());
    }

    #[test]
    fn so_closed_forms_match_weyl((n, p) in (7usize..13).prop_flat_map(|n| (Just(n), partition((n - 1) / 2 - usize::from(n % 2 == 0), 3)))) {
        let g = AlgebraId::so(n as u32).unwrap();
        let l = IrrepLabel::Diagram(p.clone());
        prop_assert_eq!(young::dim_so(n, &p).unwrap(), label::weyl_dim(&g, &l).unwrap());
        prop_assert_eq!(casimir::casimir_so(n, &p).unwrap(), label::casimir_weyl(&g, &l).unwrap());
    }

    #[test]
    fn sp_closed_forms_match_weyl((n, p) in (2usize..6).prop_flat_map(|r| (Just(2 * r), partition(r, 3)))) {
        let g = AlgebraId::sp(n as u32).unwrap();
        let l = IrrepLabel::Diagram(p.clone());
        prop_assert_eq!(young::dim_sp(n, &p).unwrap(), label::weyl_dim(&g, &l).unwrap());
        prop_assert_eq!(casimir::casimir_sp(n, &p).unwrap(), label::casimir_weyl(&g, &l).unwrap());
    }

    #[test]
    fn transpose_is_an_involution(p in partition(6, 6)) {
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.transpose().size(), p.size());
    }

    #[test]
    fn composite_duality(p in pair(3)) {
        let range: Vec<usize> = (1..=24).collect();
        prop_assert!(check_duality(&p, &range).unwrap());
    }

    #[test]
    fn balanced_pairs_are_invariant_under_transpose_at_minus_n(p in balanced_pair(3), n in 1i64..20) {
        let t = p.transpose();
        prop_assert_eq!(dim_composite_formal(&p, -n), dim_composite_formal(&t, n));
    }

    #[test]
    fn branch_ratios_are_palindromic(big_n in 2usize..11, n in 1usize..6, part in 1usize..4, at in nonzero_q()) {
        let r = qdim::branch_ratio(big_n, n, part).unwrap();
        let (a, b) = (r.eval(&at), r.eval(&at.inverse()));
        match (a, b) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
            (a, b) => prop_assert_eq!(a.is_err(), b.is_err()),
        }
    }

    #[test]
    fn second_q_identity_for_any_sizes(big_n in 1i64..15, m in 1i64..15) {
        let id = qdim::q_identity_2(big_n, m);
        prop_assert!(qdim::verify_q_identity_2(big_n, m, &sample_points(id.required_samples())).unwrap());
    }

    #[test]
    fn multiplying_by_adjoint_conserves_dimension(p in balanced_pair(3), n in 2i64..12) {
        let mut d = Decomposition::new();
        d.add(IrrepLabel::Composite(p), 1);
        let before = d.formal_dimension_sum_sl(n).unwrap();
        let after = mult_by_adjoint(&d).unwrap().formal_dimension_sum_sl(n).unwrap();
        prop_assert_eq!(after, before * int(n * n - 1));
    }
}
