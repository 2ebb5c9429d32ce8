mod common;

use std::collections::HashMap;

use scpoly::census::{enumerate_graphs, q_classes, q_classes_with, CensusOptions, QClassTable, KNOWN_CLASS_COUNTS};
use scpoly::families::{fig4_pair, make, FamilySpec};
use scpoly::{are_isomorphic, from_graph6, q_polynomial, Graph};

use common::*;

fn fam(spec: FamilySpec) -> Graph {
    make(&spec).unwrap()
}

#[test]
fn family_orders_and_sizes() {
    for n in 1..=8 {
        let f = fam(FamilySpec::Friendship(n));
        assert_eq!((f.order(), f.size()), (2 * n + 1, 3 * n));
        let b = fam(FamilySpec::Book(n));
        assert_eq!((b.order(), b.size()), (2 * n + 2, 3 * n + 1));
    }
    for m in 1..=5 {
        for n in 3..=7 {
            let t = fam(FamilySpec::Tadpole { path: m, cycle: n });
            assert_eq!((t.order(), t.size()), (m + n, m + n));
            assert!(t.is_connected());
        }
    }
    for n in 0..=5 {
        let q = fam(FamilySpec::Hypercube(n));
        assert_eq!(q.order(), 1 << n);
        assert_eq!(q.size(), n * (1 << n) / 2);
        assert_eq!(q.regular_degree(), Some(n));
        assert!(q.is_bipartite() && q.is_connected());
    }
}

#[test]
fn fig4_elimination_identities() {
    let f4 = fam(FamilySpec::Fan(4));
    let p3 = fam(FamilySpec::Path(3));
    let (g1, g2) = fig4_pair();
    for g in [&g1, &g2] {
        assert!(isomorphic_oracle(&g.delete_vertex(5).unwrap(), &f4));
        assert!(isomorphic_oracle(&g.extract_closed_neighborhood(5).unwrap(), &p3));
        assert!(isomorphic_oracle(&g.contract_vertex(5).unwrap(), &f4));
    }
    assert_eq!(q_oracle(&g1), q_oracle(&g2));
    assert!(!isomorphic_oracle(&g1, &g2));
}

/// Bucket key that every isomorphism preserves.
fn invariant(g: &Graph) -> (usize, Vec<usize>, usize) {
    let mut degs = g.degree_profile().2;
    degs.sort_unstable();
    let n = g.order();
    let triangles = (0..n)
        .flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| (a, b, c))))
        .filter(|&(a, b, c)| g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))
        .count();
    (g.size(), degs, triangles)
}

/// One graph per class of order `n + 1`, grown from the classes of order
/// `n` by adding a vertex with every possible neighborhood.
fn extend_classes(reps: &[Graph]) -> Vec<Graph> {
    let mut buckets: HashMap<(usize, Vec<usize>, usize), Vec<Graph>> = HashMap::new();
    let mut out = Vec::new();
    for g in reps {
        let n = g.order();
        for nbhd in 0..(1u64 << n) {
            let mut h = g.disjoint_union(&Graph::edgeless(1)).unwrap();
            for v in (0..n).filter(|v| nbhd >> v & 1 == 1) {
                h.add_edge(v, n);
            }
            let bucket = buckets.entry(invariant(&h)).or_default();
            if !bucket.iter().any(|r| isomorphic_oracle(r, &h)) {
                bucket.push(h.clone());
                out.push(h);
            }
        }
    }
    out
}

#[test]
fn enumeration_counts_match_relabeling_oracle() {
    for n in 0..=5 {
        let found = enumerate_graphs(n).unwrap();
        assert_eq!(found.len(), class_count_by_relabeling(n), "order {n}");
        assert_eq!(found.len(), KNOWN_CLASS_COUNTS[n]);
    }
}

#[test]
fn enumeration_matches_extension_oracle() {
    let mut reps = enumerate_graphs(5).unwrap();
    for n in 6..=7 {
        reps = extend_classes(&reps);
        let found = enumerate_graphs(n).unwrap();
        assert_eq!(found.len(), reps.len(), "order {n}");
        let mut buckets: HashMap<_, Vec<&Graph>> = HashMap::new();
        for r in &reps {
            buckets.entry(invariant(r)).or_default().push(r);
        }
        for g in &found {
            let matches = buckets[&invariant(g)].iter().filter(|r| isomorphic_oracle(r, g)).count();
            assert_eq!(matches, 1, "{g:?}");
        }
    }
}

#[test]
fn q_classes_share_basic_invariants() {
    for n in 0..=7 {
        let t = q_classes(n).unwrap();
        assert_eq!(t.entries().len(), KNOWN_CLASS_COUNTS[n]);
        for (q, keys) in t.classes() {
            let footprint = |g: &Graph| {
                let alpha = independent_profile_oracle(g).len() - 1;
                (g.order(), g.size(), g.component_count(), alpha, connectivity_oracle(g), g.regular_degree())
            };
            let first = footprint(&keys[0].to_graph());
            for k in keys {
                let g = k.to_graph();
                assert_eq!(footprint(&g), first, "class {q}");
                assert_eq!(q_oracle(&g), *q);
            }
        }
    }
}

#[test]
fn bowtie_has_a_q_equivalent_mate() {
    let bowtie = fam(FamilySpec::Friendship(2));
    let mate = from_graph6("DJk").unwrap();
    assert_eq!(q_oracle(&bowtie), q_oracle(&mate));
    assert!(!isomorphic_oracle(&bowtie, &mate));
    let t = q_classes(5).unwrap();
    let class = t.class_of(&q_polynomial(&bowtie));
    assert_eq!(class.len(), 2);
    assert!(class.iter().any(|k| are_isomorphic(&k.to_graph(), &mate)));
}

#[test]
fn census_file_round_trip_order_6() {
    let t = q_classes(6).unwrap();
    let mut buf = Vec::new();
    t.write_census(&mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let keys: Vec<&str> = text.lines().map(|l| l.split('\t').next().unwrap()).collect();
    assert!(keys.windows(2).all(|w| w[0].as_bytes() < w[1].as_bytes()));
    let back = QClassTable::read_census(text.as_bytes()).unwrap();
    assert_eq!(back, t);
    back.verify().unwrap();
}

#[test]
fn worker_count_does_not_change_census() {
    let serial = q_classes(7).unwrap();
    let opts = CensusOptions { workers: 4, ..CensusOptions::default() };
    assert_eq!(q_classes_with(7, &opts, &|_, _| {}).unwrap(), serial);
}

#[test]
#[ignore = "order-8 census, run with --ignored"]
fn order_8_count() {
    let opts = CensusOptions { workers: 4, ..CensusOptions::default().with_order_8() };
    let t = q_classes_with(8, &opts, &|_, _| {}).unwrap();
    assert_eq!(t.entries().len(), 12346);
}
