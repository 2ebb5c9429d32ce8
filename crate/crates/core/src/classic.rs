//! Characteristic, matching and Tutte polynomials over the integers.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::graph::{bit, bits, low_mask, Graph};
use crate::poly::{BiPoly, UniPoly};
use crate::qpoly::q_polynomial;

/// `det(xI - A)` by Berkowitz's division-free algorithm.
pub fn characteristic_poly(g: &Graph) -> UniPoly {
    let n = g.order();
    let a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(g.has_edge(i, j) as u8)).collect())
        .collect();
    let desc = berkowitz(&a);
    UniPoly::from_coeffs(desc.into_iter().rev().collect())
}

/// Characteristic polynomial coefficients, highest degree first.
///
/// Grows the leading principal submatrix one row at a time: with `M` the
/// current `r x r` block, `R` and `C` the new row and column and `a` the new
/// diagonal entry, the next polynomial is `T p` where `T` is the lower
/// triangular Toeplitz matrix with first column
/// `(1, -a, -RC, -RMC, ..., -RM^(r-1)C)`.
pub fn berkowitz(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    let mut p = vec![BigInt::one()];
    for r in 0..n {
        let mut col = Vec::with_capacity(r + 2);
        col.push(BigInt::one());
        col.push(-a[r][r].clone());
        // v = M^k C, starting at k = 0
        let mut v: Vec<BigInt> = (0..r).map(|i| a[i][r].clone()).collect();
        for _ in 0..r {
            let dot: BigInt = (0..r).map(|i| &a[r][i] * &v[i]).sum();
            col.push(-dot);
            v = (0..r)
                .map(|i| (0..r).map(|j| &a[i][j] * &v[j]).sum())
                .collect();
        }
        let next: Vec<BigInt> = (0..r + 2)
            .map(|row| {
                (0..=row.min(r))
                    .map(|c| &col[row - c] * &p[c])
                    .sum()
            })
            .collect();
        p = next;
    }
    p
}

/// `m_i`, the number of `i`-edge matchings, for `i = 0..=n/2`.
pub fn matching_numbers(g: &Graph) -> Vec<BigInt> {
    fn go(adj: &[u64], avail: u64, memo: &mut HashMap<u64, Vec<BigInt>>) -> Vec<BigInt> {
        // drop vertices with no available neighbor
        let mut live = avail;
        for v in bits(avail) {
            if adj[v] & avail == 0 {
                live &= !bit(v);
            }
        }
        if live == 0 {
            return vec![BigInt::one()];
        }
        if let Some(r) = memo.get(&live) {
            return r.clone();
        }
        let v = live.trailing_zeros() as usize;
        let rest = live & !bit(v);
        let mut out = go(adj, rest, memo);
        for u in bits(adj[v] & rest) {
            let sub = go(adj, rest & !bit(u), memo);
            if out.len() < sub.len() + 1 {
                out.resize(sub.len() + 1, BigInt::zero());
            }
            for (k, c) in sub.into_iter().enumerate() {
                out[k + 1] += c;
            }
        }
        memo.insert(live, out.clone());
        out
    }
    go(g.rows(), low_mask(g.order()), &mut HashMap::new())
}

/// `m(G; x) = sum_i (-1)^i m_i x^(n - 2i)`.
pub fn matching_poly(g: &Graph) -> UniPoly {
    let n = g.order();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (i, m) in matching_numbers(g).into_iter().enumerate() {
        coeffs[n - 2 * i] = if i % 2 == 0 { m } else { -m };
    }
    UniPoly::from_coeffs(coeffs)
}

/// Loops and parallel edges allowed. Vertices merged away by contraction
/// stay as isolated labels, which does not affect the Tutte polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    order: usize,
    edges: BTreeMap<(usize, usize), usize>,
    loops: Vec<usize>,
}

impl Multigraph {
    pub fn new(order: usize) -> Self {
        Multigraph {
            order,
            edges: BTreeMap::new(),
            loops: vec![0; order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.order && v < self.order, "vertex out of range");
        if u == v {
            self.loops[u] += 1;
        } else {
            *self.edges.entry((u.min(v), u.max(v))).or_insert(0) += 1;
        }
    }

    /// Count of non-loop edges, with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges.values().sum()
    }

    pub fn loop_count(&self) -> usize {
        self.loops.iter().sum()
    }

    fn delete_one(&self, e: (usize, usize)) -> Multigraph {
        let mut out = self.clone();
        let m = out.edges.get_mut(&e).expect("edge present");
        *m -= 1;
        if *m == 0 {
            out.edges.remove(&e);
        }
        out
    }

    /// Contracts one copy of `e = (u, v)` by merging `v` into `u`; the other
    /// copies of `e` become loops at `u`.
    fn contract_one(&self, (u, v): (usize, usize)) -> Multigraph {
        let mut out = Multigraph::new(self.order);
        out.loops.clone_from(&self.loops);
        out.loops[u] += out.loops[v];
        out.loops[v] = 0;
        let mut skipped = false;
        for (&(a, b), &m) in &self.edges {
            let a2 = if a == v { u } else { a };
            let b2 = if b == v { u } else { b };
            let mut m = m;
            if (a, b) == (u, v) && !skipped {
                m -= 1;
                skipped = true;
            }
            for _ in 0..m {
                out.add_edge(a2, b2);
            }
        }
        out
    }

    /// Whether removing one copy of `e` separates its endpoints.
    fn is_bridge(&self, e: (usize, usize)) -> bool {
        if self.edges[&e] > 1 {
            return false;
        }
        let mut seen = vec![false; self.order];
        let mut stack = vec![e.0];
        seen[e.0] = true;
        while let Some(x) = stack.pop() {
            for &(a, b) in self.edges.keys() {
                if (a, b) == e {
                    continue;
                }
                let y = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        !seen[e.1]
    }
}

impl From<&Graph> for Multigraph {
    fn from(g: &Graph) -> Self {
        let mut mg = Multigraph::new(g.order());
        for (u, v) in g.edges() {
            mg.add_edge(u, v);
        }
        mg
    }
}

/// Deletion-contraction on the first non-bridge, non-loop edge in key order.
/// Loops contribute `y` each; once every edge is a bridge the rest is `x^m`.
pub fn tutte_poly(mg: &Multigraph) -> BiPoly {
    let loops = mg.loop_count() as u32;
    let mut g = mg.clone();
    g.loops.iter_mut().for_each(|l| *l = 0);
    let rest = match g.edges.keys().copied().find(|&e| !g.is_bridge(e)) {
        None => BiPoly::monomial(g.edge_count() as u32, 0, 1),
        Some(e) => tutte_poly(&g.delete_one(e)) + tutte_poly(&g.contract_one(e)),
    };
    if loops == 0 {
        rest
    } else {
        &BiPoly::monomial(0, loops, 1) * &rest
    }
}

pub fn tutte_of_graph(g: &Graph) -> BiPoly {
    tutte_poly(&Multigraph::from(g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PowerComparison {
    pub q_equal: bool,
    pub charpoly_equal: bool,
    pub matching_equal: bool,
    pub tutte_equal: bool,
}

pub fn compare_powers(g: &Graph, h: &Graph) -> PowerComparison {
    PowerComparison {
        q_equal: q_polynomial(g) == q_polynomial(h),
        charpoly_equal: characteristic_poly(g) == characteristic_poly(h),
        matching_equal: matching_poly(g) == matching_poly(h),
        tutte_equal: tutte_of_graph(g) == tutte_of_graph(h),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// det(xI - A) by Leibniz expansion over all permutations, with
    /// polynomial entries. Test oracle only.
    fn leibniz_charpoly(g: &Graph) -> UniPoly {
        let n = g.order();
        let entry = |i: usize, j: usize| {
            if i == j {
                UniPoly::x()
            } else if g.has_edge(i, j) {
                UniPoly::from_i64s(&[-1])
            } else {
                UniPoly::zero()
            }
        };
        let mut total = UniPoly::zero();
        let mut perm: Vec<usize> = (0..n).collect();
        fn heap(k: usize, perm: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
            if k <= 1 {
                visit(perm);
                return;
            }
            for i in 0..k {
                heap(k - 1, perm, visit);
                let j = if k % 2 == 0 { i } else { 0 };
                perm.swap(j, k - 1);
            }
        }
        heap(n, &mut perm, &mut |p: &[usize]| {
            let mut inversions = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if p[a] > p[b] {
                        inversions += 1;
                    }
                }
            }
            let mut term = UniPoly::one();
            for (i, &j) in p.iter().enumerate() {
                term = &term * &entry(i, j);
            }
            total = if inversions % 2 == 0 { &total + &term } else { &total - &term };
        });
        total
    }

    #[test]
    fn berkowitz_two_by_two() {
        let m = vec![
            vec![BigInt::from(1), BigInt::from(2)],
            vec![BigInt::from(3), BigInt::from(4)],
        ];
        // x^2 - 5x - 2
        assert_eq!(berkowitz(&m), vec![BigInt::from(1), BigInt::from(-5), BigInt::from(-2)]);
    }

    #[test]
    fn characteristic_matches_leibniz() {
        let graphs = [
            path(3),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 1)]).unwrap(),
            Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (4, 5), (3, 5)]).unwrap(),
            Graph::edgeless(4).complement(),
            Graph::empty(),
        ];
        for g in &graphs {
            assert_eq!(characteristic_poly(g), leibniz_charpoly(g), "{g:?}");
        }
        assert_eq!(characteristic_poly(&path(3)), UniPoly::from_i64s(&[0, -2, 0, 1]));
    }

    #[test]
    fn matching_examples() {
        assert_eq!(matching_poly(&path(3)), UniPoly::from_i64s(&[0, -2, 0, 1]));
        let k4 = Graph::edgeless(4).complement();
        // m0 = 1, m1 = 6, m2 = 3
        assert_eq!(matching_poly(&k4), UniPoly::from_i64s(&[3, 0, -6, 0, 1]));
        assert_eq!(matching_poly(&Graph::empty()), UniPoly::one());
    }

    #[test]
    fn matching_numbers_match_edge_subset_scan() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3), (1, 4)]).unwrap();
        let edges = g.edges();
        let mut scan = vec![0u64; 4];
        for s in 0u32..(1 << edges.len()) {
            let mut used = 0u64;
            let mut ok = true;
            for (k, &(u, v)) in edges.iter().enumerate() {
                if s & (1 << k) != 0 {
                    if used & (bit(u) | bit(v)) != 0 {
                        ok = false;
                        break;
                    }
                    used |= bit(u) | bit(v);
                }
            }
            if ok {
                scan[s.count_ones() as usize] += 1;
            }
        }
        let got: Vec<u64> = matching_numbers(&g).iter().map(|c| u64::try_from(c).unwrap()).collect();
        assert_eq!(got, scan);
    }

    #[test]
    fn tutte_examples() {
        let k3 = Graph::edgeless(3).complement();
        assert_eq!(tutte_of_graph(&k3), BiPoly::parse("x + x^2 + y").unwrap());
        assert_eq!(tutte_of_graph(&path(5)), BiPoly::monomial(4, 0, 1));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(tutte_of_graph(&star), BiPoly::monomial(3, 0, 1));
        assert_eq!(tutte_of_graph(&Graph::edgeless(3)), BiPoly::one());
    }

    #[test]
    fn tutte_handles_loops_and_parallel_edges() {
        // a double edge: T = x + y
        let mut mg = Multigraph::new(2);
        mg.add_edge(0, 1);
        mg.add_edge(0, 1);
        assert_eq!(tutte_poly(&mg), BiPoly::parse("x + y").unwrap());
        mg.add_edge(1, 1);
        assert_eq!(tutte_poly(&mg), BiPoly::parse("x*y + y^2").unwrap());
    }

    #[test]
    fn tutte_of_disjoint_union_multiplies() {
        let k3 = Graph::edgeless(3).complement();
        let two = k3.disjoint_union(&path(3)).unwrap();
        let expect = &tutte_of_graph(&k3) * &tutte_of_graph(&path(3));
        assert_eq!(tutte_of_graph(&two), expect);
    }

    #[test]
    fn identical_graphs_compare_equal() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let c = compare_powers(&g, &g);
        assert!(c.q_equal && c.charpoly_equal && c.matching_equal && c.tutte_equal);
    }
}
