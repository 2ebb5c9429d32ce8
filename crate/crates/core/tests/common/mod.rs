//! Independent reference implementations shared by the integration tests.
//! They work on plain adjacency matrices so they share no code with the
//! library beyond `Graph` accessors.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use scpoly::{BiPoly, Graph};

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_graph_any_density(rng: &mut impl Rng, n: usize) -> Graph {
    let p = rng.gen_range(0.05..0.95);
    random_graph(rng, n, p)
}

/// Components of the subgraph induced by `members`, by union-find.
pub fn components_of(adj: &[Vec<bool>], members: &[usize]) -> usize {
    let mut parent: Vec<usize> = (0..members.len()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for a in 0..members.len() {
        for b in a + 1..members.len() {
            if adj[members[a]][members[b]] {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                parent[ra] = rb;
            }
        }
    }
    (0..members.len()).filter(|&a| find(&mut parent, a) == a).count()
}

fn members(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Q by direct subset enumeration.
pub fn q_oracle(g: &Graph) -> BiPoly {
    let adj = matrix(g);
    let n = g.order();
    let mut counts: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    for mask in 0..(1u64 << n) {
        let m = members(mask, n);
        let k = components_of(&adj, &m);
        *counts.entry((m.len() as u32, k as u32)).or_default() += 1;
    }
    BiPoly::from_terms(counts.into_iter().map(|((i, j), c)| (i, j, BigInt::from(c))))
}

pub fn edge_count(g: &Graph) -> usize {
    let adj = matrix(g);
    (0..g.order()).map(|u| (u + 1..g.order()).filter(|&v| adj[u][v]).count()).sum()
}

pub fn component_oracle(g: &Graph) -> usize {
    components_of(&matrix(g), &(0..g.order()).collect::<Vec<_>>())
}

pub fn independent_profile_oracle(g: &Graph) -> Vec<u64> {
    let adj = matrix(g);
    let n = g.order();
    let mut out = vec![0u64; n + 1];
    for mask in 0..(1u64 << n) {
        let m = members(mask, n);
        if m.iter().all(|&a| m.iter().all(|&b| !adj[a][b])) {
            out[m.len()] += 1;
        }
    }
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Smallest separating set by trying every vertex subset; `n - 1` for
/// complete graphs, 0 when disconnected or of order at most 1.
pub fn connectivity_oracle(g: &Graph) -> usize {
    let n = g.order();
    let adj = matrix(g);
    if n <= 1 || components_of(&adj, &(0..n).collect::<Vec<_>>()) != 1 {
        return 0;
    }
    let mut best = n - 1;
    for mask in 0..(1u64 << n) {
        let removed = mask.count_ones() as usize;
        if removed >= best || removed + 2 > n {
            continue;
        }
        let rest = members(!mask & ((1u64 << n) - 1), n);
        if components_of(&adj, &rest) > 1 {
            best = removed;
        }
    }
    best
}

/// Isomorphism by backtracking over degree-compatible bijections.
pub fn isomorphic_oracle(g: &Graph, h: &Graph) -> bool {
    let n = g.order();
    if n != h.order() || edge_count(g) != edge_count(h) {
        return false;
    }
    let (a, b) = (matrix(g), matrix(h));
    let degrees = |m: &[Vec<bool>]| -> Vec<usize> { m.iter().map(|r| r.iter().filter(|&&e| e).count()).collect() };
    let (da, db) = (degrees(&a), degrees(&b));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(v: usize, a: &[Vec<bool>], b: &[Vec<bool>], deg: (&[usize], &[usize]), map: &mut [usize], used: &mut [bool]) -> bool {
        let n = a.len();
        if v == n {
            return true;
        }
        for w in 0..n {
            if used[w] || deg.0[v] != deg.1[w] || (0..v).any(|u| a[u][v] != b[map[u]][w]) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            if go(v + 1, a, b, deg, map, used) {
                return true;
            }
            used[w] = false;
        }
        false
    }
    go(0, &a, &b, (&da, &db), &mut map, &mut used)
}

/// Isomorphism classes of order `n` as counted by exhaustive relabeling:
/// each labeled graph is reduced to the lexicographically least adjacency
/// string over all `n!` permutations.
pub fn class_count_by_relabeling(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    for mask in 0..(1u64 << pairs.len()) {
        let mut adj = vec![vec![false; n]; n];
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
        let best = perms
            .iter()
            .map(|p| pairs.iter().fold(0u64, |acc, &(u, v)| acc << 1 | adj[p[u]][p[v]] as u64))
            .min()
            .unwrap();
        seen.insert(best);
    }
    seen.len()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Number of spanning trees by cofactor expansion of the Laplacian,
/// computed with exact fraction-free elimination.
pub fn spanning_trees(g: &Graph) -> BigInt {
    let n = g.order();
    if n <= 1 {
        return BigInt::from(1);
    }
    let adj = matrix(g);
    let mut m: Vec<Vec<BigInt>> = (1..n)
        .map(|u| {
            (1..n)
                .map(|v| {
                    if u == v {
                        BigInt::from(adj[u].iter().filter(|&&e| e).count())
                    } else if adj[u][v] {
                        BigInt::from(-1)
                    } else {
                        BigInt::from(0)
                    }
                })
                .collect()
        })
        .collect();
    bareiss_det(&mut m)
}

fn bareiss_det(m: &mut [Vec<BigInt>]) -> BigInt {
    let k = m.len();
    let zero = BigInt::from(0);
    let mut sign = 1i32;
    let mut prev = BigInt::from(1);
    for i in 0..k {
        if m[i][i] == zero {
            match (i + 1..k).find(|&r| m[r][i] != zero) {
                Some(r) => {
                    m.swap(i, r);
                    sign = -sign;
                }
                None => return zero,
            }
        }
        for r in i + 1..k {
            for c in i + 1..k {
                let v = (&m[r][c] * &m[i][i] - &m[r][i] * &m[i][c]) / &prev;
                m[r][c] = v;
            }
        }
        prev = m[i][i].clone();
    }
    prev * sign
}
