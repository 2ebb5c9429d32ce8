//! Simple undirected graphs stored as adjacency-row bitsets.
//!
//! Vertices are labeled `0..n`. Row `v` holds the neighbors of `v` as bits of
//! a `u64`, which caps the order at [`MAX_ORDER`]. Every operation that drops
//! vertices relabels the survivors in ascending order of their old labels.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order. Matches the short form of graph6.
pub const MAX_ORDER: usize = 62;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of `mask` in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Packs the bits of `value` selected by `mask` into the low bits of the
/// result, preserving their order.
#[inline]
pub(crate) fn compress(value: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    for (k, v) in bits(mask).enumerate() {
        if value & bit(v) != 0 {
            out |= bit(k);
        }
    }
    out
}

/// A subset of the vertices of some ambient graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Result<Self> {
        let mut mask = 0u64;
        for v in vertices {
            if v >= MAX_ORDER {
                return Err(Error::VertexOutOfRange { vertex: v, order: MAX_ORDER });
            }
            mask |= bit(v);
        }
        Ok(VertexSet(mask))
    }

    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & bit(v) != 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        bits(self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The graph of order `n` with no edges.
    ///
    /// Panics if `n > MAX_ORDER`.
    pub fn edgeless(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds MAX_ORDER");
        Graph { n, adj: vec![0; n] }
    }

    pub fn empty() -> Self {
        Graph::edgeless(0)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
        }
        let mut g = Graph::edgeless(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and looplessness.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
        }
        for (u, &row) in rows.iter().enumerate() {
            if row & !low_mask(n) != 0 {
                return Err(Error::InvalidSubset { mask: row, order: n });
            }
            if row & bit(u) != 0 {
                return Err(Error::Loop { u, v: u });
            }
            for v in bits(row) {
                if rows[v] & bit(u) == 0 {
                    return Err(Error::PreconditionViolated(format!(
                        "adjacency not symmetric at ({u}, {v})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Rows are trusted to be symmetric, loopless and in range.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { n: rows.len(), adj: rows }
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop { u, v });
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    /// Panics on a loop or an out-of-range label.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, order: self.n })
        } else {
            Ok(())
        }
    }

    fn check_subset(&self, x: VertexSet) -> Result<()> {
        if x.0 & !low_mask(self.n) != 0 {
            Err(Error::InvalidSubset { mask: x.0, order: self.n })
        } else {
            Ok(())
        }
    }

    pub fn induced_subgraph(&self, x: VertexSet) -> Result<Graph> {
        self.check_subset(x)?;
        Ok(self.induced_unchecked(x.0))
    }

    pub(crate) fn induced_unchecked(&self, mask: u64) -> Graph {
        let rows = bits(mask).map(|v| compress(self.adj[v], mask)).collect();
        Graph::from_rows_unchecked(rows)
    }

    /// `G - v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced_unchecked(low_mask(self.n) & !bit(v)))
    }

    /// `G - N[v]`: removes `v` together with all of its neighbors.
    pub fn extract_closed_neighborhood(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        Ok(self.induced_unchecked(low_mask(self.n) & !(self.adj[v] | bit(v))))
    }

    /// `G / v`: removes `v` and makes its neighborhood a clique.
    pub fn contract_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let nb = self.adj[v];
        let mut rows = self.adj.clone();
        for u in bits(nb) {
            rows[u] |= nb & !bit(u);
        }
        let g = Graph { n: self.n, adj: rows };
        Ok(g.induced_unchecked(low_mask(self.n) & !bit(v)))
    }

    /// Bitmask of the component containing `start`, restricted to `within`.
    pub(crate) fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        seen
    }

    /// Connected components as vertex bitmasks, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = low_mask(self.n);
        let mut out = Vec::new();
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            let comp = self.reach(v, remaining);
            remaining &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components_within(low_mask(self.n))
    }

    /// Number of components of `G[mask]`.
    pub(crate) fn components_within(&self, mask: u64) -> usize {
        let mut remaining = mask;
        let mut count = 0;
        while remaining != 0 {
            let v = remaining.trailing_zeros() as usize;
            remaining &= !self.reach(v, remaining);
            count += 1;
        }
        count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_complete(&self) -> bool {
        let full = low_mask(self.n);
        (0..self.n).all(|v| self.adj[v] == full & !bit(v))
    }

    /// Common degree if every vertex has the same degree. The empty graph
    /// is not considered regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let (lo, hi, _) = self.degree_profile();
        (self.n > 0 && lo == hi).then_some(lo)
    }

    /// Two-coloring if one exists, as the mask of color-1 vertices.
    pub fn bipartition(&self) -> Option<u64> {
        let mut side = 0u64;
        let mut colored = 0u64;
        for s in 0..self.n {
            if colored & bit(s) != 0 {
                continue;
            }
            colored |= bit(s);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let u_side = side & bit(u) != 0;
                for w in bits(self.adj[u]) {
                    if colored & bit(w) == 0 {
                        colored |= bit(w);
                        if !u_side {
                            side |= bit(w);
                        }
                        stack.push(w);
                    } else if (side & bit(w) != 0) == u_side {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// `(min degree, max degree, degrees in label order)`; `(0, 0, [])` on
    /// the empty graph.
    pub fn degree_profile(&self) -> (usize, usize, Vec<usize>) {
        let seq: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let lo = seq.iter().copied().min().unwrap_or(0);
        let hi = seq.iter().copied().max().unwrap_or(0);
        (lo, hi, seq)
    }

    /// Vertex connectivity by brute force over separator candidates of
    /// increasing size. Complete graphs give `n - 1`, disconnected graphs 0.
    pub fn connectivity_direct(&self) -> usize {
        let n = self.n;
        if self.is_complete() {
            return n.saturating_sub(1);
        }
        if !self.is_connected() {
            return 0;
        }
        let full = low_mask(n);
        for s in 1..n {
            let found = subsets_of_size(n, s).any(|sep| self.components_within(full & !sep) >= 2);
            if found {
                return s;
            }
        }
        unreachable!("a non-complete connected graph has a separating set")
    }

    /// Applies `perm` as old label -> new label.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for graph of order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen |= bit(p);
        }
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for v in bits(self.adj[u]) {
                rows[perm[u]] |= bit(perm[v]);
            }
        }
        Ok(Graph { n: self.n, adj: rows })
    }

    /// `G ⊎ H` with the labels of `self` first.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, max: MAX_ORDER });
        }
        let mut rows = self.adj.clone();
        rows.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj: rows })
    }

    pub fn complement(&self) -> Graph {
        let full = low_mask(self.n);
        let rows = (0..self.n).map(|v| full & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj: rows }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.n, self.edges())
    }
}

/// Masks over `0..n` with exactly `k` bits set, in increasing numeric order.
pub(crate) fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    debug_assert!(n < 64);
    let limit = 1u64 << n;
    let mut cur = (k <= n).then(|| low_mask(k));
    std::iter::from_fn(move || {
        let c = cur.filter(|&c| c < limit || c == 0)?;
        cur = if c == 0 {
            None
        } else {
            // Gosper's hack
            let t = c & c.wrapping_neg();
            let r = c + t;
            Some((((r ^ c) >> 2) / t) | r)
        };
        Some(c)
    })
}
