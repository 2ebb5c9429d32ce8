//! Exact canonical forms for small graphs.
//!
//! The search starts from the coarsest equitable ordered partition reachable
//! from the unit partition (so cells come out sorted by degree first), then
//! individualizes vertices of the first non-singleton cell and refines again,
//! down to discrete partitions. Each leaf is a labeling; the canonical form is
//! the leaf whose graph6 bit string is lexicographically smallest.
//!
//! Two prunings keep symmetric graphs cheap. Vertices of the target cell that
//! are twins (equal neighborhoods apart from each other) are interchangeable,
//! and automorphisms found from equal leaves are used to skip candidates in
//! the same orbit of the pointwise stabilizer of the current prefix.

use std::cmp::Ordering;
use std::fmt;

use crate::format::{from_graph6, to_graph6};
use crate::graph::{bit, bits, low_mask, Graph};

/// Canonical graph6 bytes: equal exactly for isomorphic graphs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey(Vec<u8>);

impl CanonKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_graph6(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    pub fn order(&self) -> usize {
        (self.0[0] - 63) as usize
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        from_graph6(self.as_graph6()).expect("canonical keys hold valid graph6")
    }
}

impl fmt::Display for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_graph6())
    }
}

impl fmt::Debug for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonKey({})", self.as_graph6())
    }
}

/// Splits cells until every cell is equitable with respect to every other.
/// Sub-cells are ordered by neighbor count, so the result is invariant.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    let mut s = 0;
    let mut counts = [0u32; 64];
    while s < cells.len() {
        let splitter = cells[s];
        let mut out: Option<Vec<u64>> = None;
        for idx in 0..cells.len() {
            let cell = cells[idx];
            let mut uniform = true;
            let mut first = None;
            for v in bits(cell) {
                let c = (adj[v] & splitter).count_ones();
                counts[v] = c;
                match first {
                    None => first = Some(c),
                    Some(f) if f != c => uniform = false,
                    _ => {}
                }
            }
            if uniform {
                if let Some(o) = out.as_mut() {
                    o.push(cell);
                }
                continue;
            }
            let o = out.get_or_insert_with(|| cells[..idx].to_vec());
            let mut keys: Vec<u32> = bits(cell).map(|v| counts[v]).collect();
            keys.sort_unstable();
            keys.dedup();
            for k in keys {
                let sub = bits(cell).filter(|&v| counts[v] == k).fold(0u64, |m, v| m | bit(v));
                o.push(sub);
            }
        }
        match out {
            Some(o) => {
                *cells = o;
                s = 0;
            }
            None => s += 1,
        }
    }
}

fn root_partition(g: &Graph) -> Vec<u64> {
    let mut cells = if g.order() == 0 { vec![] } else { vec![low_mask(g.order())] };
    refine(g.rows(), &mut cells);
    cells
}

struct Searcher<'a> {
    adj: &'a [u64],
    n: usize,
    best_code: Vec<u64>,
    best_lab: Vec<usize>,
    have_best: bool,
    code: Vec<u64>,
    autos: Vec<Vec<usize>>,
}

const MAX_STORED_AUTOMORPHISMS: usize = 128;

impl<'a> Searcher<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        Searcher {
            adj: g.rows(),
            n,
            best_code: vec![0; n.saturating_sub(1)],
            best_lab: (0..n).collect(),
            have_best: false,
            code: vec![0; n.saturating_sub(1)],
            autos: Vec::new(),
        }
    }

    fn is_twin(&self, u: usize, v: usize) -> bool {
        self.adj[u] & !bit(v) == self.adj[v] & !bit(u)
    }

    fn orbit_roots(&self, fixed: &[usize]) -> Option<Vec<usize>> {
        let gens: Vec<&Vec<usize>> = self
            .autos
            .iter()
            .filter(|a| fixed.iter().all(|&f| a[f] == f))
            .collect();
        if gens.is_empty() {
            return None;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in gens {
            for v in 0..self.n {
                let (r1, r2) = (find(&mut parent, v), find(&mut parent, a[v]));
                if r1 != r2 {
                    parent[r1.max(r2)] = r1.min(r2);
                }
            }
        }
        Some((0..self.n).map(|v| find(&mut parent, v)).collect())
    }

    fn search(&mut self, cells: &[u64], fixed: &mut Vec<usize>) {
        let Some(t) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(cells);
            return;
        };
        let cell = cells[t];
        let mut covered = 0u64;
        let mut roots = self.orbit_roots(fixed);
        for v in bits(cell) {
            if bits(covered).any(|u| self.is_twin(u, v)) {
                covered |= bit(v);
                continue;
            }
            if let Some(r) = &roots {
                if bits(covered).any(|u| r[u] == r[v]) {
                    covered |= bit(v);
                    continue;
                }
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..t]);
            next.push(bit(v));
            next.push(cell & !bit(v));
            next.extend_from_slice(&cells[t + 1..]);
            refine(self.adj, &mut next);
            let known = self.autos.len();
            fixed.push(v);
            self.search(&next, fixed);
            fixed.pop();
            covered |= bit(v);
            if self.autos.len() != known {
                roots = self.orbit_roots(fixed);
            }
        }
    }

    fn leaf(&mut self, cells: &[u64]) {
        let mut inv = [0usize; 64];
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        for (p, &v) in lab.iter().enumerate() {
            inv[v] = p;
        }
        let mut ord = if self.have_best { Ordering::Equal } else { Ordering::Less };
        for j in 1..self.n {
            let mut val = 0u64;
            for u in bits(self.adj[lab[j]]) {
                let i = inv[u];
                if i < j {
                    val |= 1u64 << (j - 1 - i);
                }
            }
            if ord == Ordering::Equal {
                match val.cmp(&self.best_code[j - 1]) {
                    Ordering::Greater => return,
                    Ordering::Less => ord = Ordering::Less,
                    Ordering::Equal => {}
                }
            }
            self.code[j - 1] = val;
        }
        match ord {
            Ordering::Less => {
                std::mem::swap(&mut self.best_code, &mut self.code);
                self.best_lab = lab;
                self.have_best = true;
            }
            _ => {
                // same relabeled graph: best^-1 . current is an automorphism
                let gamma: Vec<usize> = (0..self.n).map(|v| self.best_lab[inv[v]]).collect();
                let identity = gamma.iter().enumerate().all(|(v, &w)| v == w);
                if !identity && self.autos.len() < MAX_STORED_AUTOMORPHISMS {
                    self.autos.push(gamma);
                }
            }
        }
    }
}

/// Canonical labeling as `lab[position] = vertex`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 1 {
        return (0..n).collect();
    }
    let cells = root_partition(g);
    let mut s = Searcher::new(g);
    s.search(&cells, &mut Vec::with_capacity(n));
    s.best_lab
}

pub fn canonical_form(g: &Graph) -> Graph {
    let lab = canonical_labeling(g);
    let mut perm = vec![0usize; g.order()];
    for (p, &v) in lab.iter().enumerate() {
        perm[v] = p;
    }
    g.relabel(&perm).expect("canonical labeling is a permutation")
}

pub fn canonical_key(g: &Graph) -> CanonKey {
    CanonKey(to_graph6(&canonical_form(g)).into_bytes())
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() {
        return false;
    }
    let (mut dg, mut dh) = (g.degree_profile().2, h.degree_profile().2);
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && canonical_key(g) == canonical_key(h)
}

/// True iff `g` is, as a labeled graph, its own canonical form.
///
/// Cheap necessary conditions are checked first: a canonical form lists its
/// vertices by non-decreasing degree, and every cell of the root partition
/// occupies a contiguous run of labels.
pub fn is_canonical(g: &Graph) -> bool {
    let n = g.order();
    let adj = g.rows();
    if (1..n).any(|v| adj[v - 1].count_ones() > adj[v].count_ones()) {
        return false;
    }
    let cells = root_partition(g);
    let mut start = 0;
    for c in &cells {
        let size = c.count_ones() as usize;
        if *c != low_mask(start + size) & !low_mask(start) {
            return false;
        }
        start += size;
    }
    canonical_form(g) == *g
}
