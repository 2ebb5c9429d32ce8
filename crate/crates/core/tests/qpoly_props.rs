mod common;

use num_bigint::BigInt;
use num_integer::binomial;
use proptest::prelude::*;
use rand::Rng;
use scpoly::qpoly::{q_by_recurrence_with, PivotRule, RecurrenceOptions};
use scpoly::{q_by_definition, q_by_recurrence, q_polynomial, Graph, MemoTable, VertexSet};

use common::*;

#[test]
fn recurrence_matches_subset_oracle() {
    let mut rng = rng(21);
    let memo = MemoTable::unbounded();
    for i in 0..200 {
        let g = random_graph_any_density(&mut rng, 6 + i % 5);
        let oracle = q_oracle(&g);
        assert_eq!(q_by_recurrence(&g, &memo).unwrap().polynomial, oracle, "{g:?}");
        assert_eq!(q_by_definition(&g).unwrap().polynomial, oracle, "{g:?}");
    }
}

#[test]
fn coefficient_identities() {
    let mut rng = rng(22);
    for i in 0..60 {
        let g = random_graph_any_density(&mut rng, i % 14);
        let n = g.order() as u32;
        let q = q_polynomial(&g);
        let one = BigInt::from(1);
        assert_eq!(q.eval(&one, &one), BigInt::from(1) << n);
        assert_eq!(q.terms().map(|t| t.0).max(), Some(n));
        let top: Vec<_> = q.terms().filter(|t| t.0 == n).map(|(i, j, c)| (i, j, c.clone())).collect();
        assert_eq!(top, vec![(n, component_oracle(&g) as u32, one.clone())]);
        for size in 0..=n {
            let row: BigInt = q.terms().filter(|t| t.0 == size).map(|t| t.2.clone()).sum();
            assert_eq!(row, BigInt::from(binomial(n as u64, size as u64)), "{g:?} row {size}");
        }
    }
}

#[test]
fn pivot_choice_does_not_matter() {
    let mut rng = rng(23);
    for i in 0..50 {
        let g = random_graph_any_density(&mut rng, 5 + i % 8);
        let run = |pivot| {
            let opts = RecurrenceOptions { pivot, ..RecurrenceOptions::default() };
            q_by_recurrence_with(&g, &MemoTable::unbounded(), opts).unwrap().polynomial
        };
        assert_eq!(run(PivotRule::LowestLabel), run(PivotRule::MaxDegree), "{g:?}");
    }
}

#[test]
fn parallel_recurrence_matches_serial() {
    let mut rng = rng(24);
    for _ in 0..10 {
        let g = random_graph_any_density(&mut rng, 14);
        let opts = RecurrenceOptions { parallel: true, ..RecurrenceOptions::default() };
        let par = q_by_recurrence_with(&g, &MemoTable::unbounded(), opts).unwrap().polynomial;
        assert_eq!(par, q_by_recurrence(&g, &MemoTable::unbounded()).unwrap().polynomial);
    }
}

#[test]
fn multiplicative_over_disjoint_union() {
    let mut rng = rng(25);
    for i in 0..50 {
        let g = random_graph_any_density(&mut rng, i % 7);
        let h = random_graph_any_density(&mut rng, (i * 3) % 6);
        let u = g.disjoint_union(&h).unwrap();
        assert_eq!(q_oracle(&u), &q_oracle(&g) * &q_oracle(&h));
        assert_eq!(q_polynomial(&u), &q_polynomial(&g) * &q_polynomial(&h));
    }
}

#[test]
fn induced_subgraph_coefficients_are_dominated() {
    let mut rng = rng(26);
    for i in 0..80 {
        let n = 1 + i % 7;
        let g = random_graph_any_density(&mut rng, n);
        let mask = rng.gen_range(0..1u64 << n);
        let sub = g.induced_subgraph(VertexSet(mask)).unwrap();
        let (q, qs) = (q_polynomial(&g), q_polynomial(&sub));
        for (a, b, c) in qs.terms() {
            assert!(*c <= q.coeff(a, b), "{g:?} on {mask:#b}: q_{a},{b}");
        }
    }
}

proptest! {
    #[test]
    fn memo_reuse_does_not_change_results(seed in any::<u64>()) {
        let mut r = rng(seed);
        let memo = MemoTable::unbounded();
        for _ in 0..3 {
            let g = random_graph_any_density(&mut r, 9);
            prop_assert_eq!(q_by_recurrence(&g, &memo).unwrap().polynomial, q_oracle(&g));
        }
    }
}

#[test]
fn larger_orders_use_recurrence() {
    let mut rng = rng(27);
    let g: Graph = random_graph(&mut rng, 22, 0.3);
    let q = q_polynomial(&g);
    assert_eq!(q.eval(&BigInt::from(1), &BigInt::from(1)), BigInt::from(1) << 22);
    assert_eq!(q, q_by_definition(&g).unwrap().polynomial);
}
