//! The subgraph component polynomial
//! `Q(G; x, y) = sum over X ⊆ V of x^|X| y^k(G[X])`.
//!
//! Two independent routes: [`q_by_definition`] walks all `2^n` vertex subsets,
//! and [`q_by_recurrence`] applies the vertex-elimination identity
//! `Q(G) = Q(G - v) + x(y - 1) Q(G - N[v]) + x Q(G / v)`
//! with component factorization, a closed form for complete graphs, and a
//! memo keyed by exact canonical form.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use dashmap::DashMap;
use num_bigint::BigInt;
use num_integer::binomial;
use serde::Serialize;

use crate::canon::{canonical_key, CanonKey};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::BiPoly;

/// Largest order `q_by_definition` accepts unless told otherwise.
pub const DEFAULT_DEFINITION_BOUND: usize = 24;

/// Orders at or below this use the definition under [`MethodChoice::Auto`].
pub const AUTO_DEFINITION_MAX_ORDER: usize = 15;

/// Recursion depth below which branches are forked in parallel mode.
const PARALLEL_DEPTH: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Definition,
    Recurrence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MethodChoice {
    #[default]
    Auto,
    Definition,
    Recurrence,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct QStats {
    pub subsets_enumerated: u64,
    pub memo_hits: u64,
    pub memo_misses: u64,
    pub max_depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QResult {
    pub polynomial: BiPoly,
    pub method: Method,
    pub stats: QStats,
}

/// Concurrent map from canonical form to `Q`. Any two writers for the same
/// key carry equal values, so insert order is immaterial.
#[derive(Debug)]
pub struct MemoTable {
    map: DashMap<CanonKey, BiPoly>,
    capacity: usize,
}

impl MemoTable {
    pub fn new(capacity: usize) -> Self {
        MemoTable {
            map: DashMap::new(),
            capacity,
        }
    }

    pub fn unbounded() -> Self {
        MemoTable::new(usize::MAX)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn get(&self, key: &CanonKey) -> Option<BiPoly> {
        self.map.get(key).map(|e| e.value().clone())
    }

    pub fn insert(&self, key: CanonKey, q: BiPoly) -> Result<()> {
        if self.map.len() >= self.capacity && !self.map.contains_key(&key) {
            return Err(Error::ResourceLimit {
                what: "memo table capacity exhausted".into(),
                limit: self.capacity,
            });
        }
        self.map.insert(key, q);
        Ok(())
    }
}

impl Default for MemoTable {
    fn default() -> Self {
        MemoTable::unbounded()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PivotRule {
    /// Highest degree, lowest label among ties.
    #[default]
    MaxDegree,
    LowestLabel,
}

impl PivotRule {
    fn pick(self, g: &Graph) -> usize {
        match self {
            PivotRule::LowestLabel => 0,
            PivotRule::MaxDegree => (0..g.order())
                .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
                .unwrap_or(0),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RecurrenceOptions {
    pub pivot: PivotRule,
    /// Fork the three branches onto the current rayon pool.
    pub parallel: bool,
}

pub fn q_by_definition(g: &Graph) -> Result<QResult> {
    q_by_definition_bounded(g, DEFAULT_DEFINITION_BOUND)
}

pub fn q_by_definition_bounded(g: &Graph, max_order: usize) -> Result<QResult> {
    let n = g.order();
    if n > max_order {
        return Err(Error::ResourceLimit {
            what: format!("subset enumeration on a graph of order {n}"),
            limit: max_order,
        });
    }
    let mut counts = vec![vec![0u64; n + 1]; n + 1];
    let total = 1u64 << n;
    for mask in 0..total {
        let i = mask.count_ones() as usize;
        let j = g.components_within(mask);
        counts[i][j] += 1;
    }
    let mut q = BiPoly::zero();
    for (i, row) in counts.iter().enumerate() {
        for (j, &c) in row.iter().enumerate() {
            q.add_term(i as u32, j as u32, BigInt::from(c));
        }
    }
    Ok(QResult {
        polynomial: q,
        method: Method::Definition,
        stats: QStats {
            subsets_enumerated: total,
            ..QStats::default()
        },
    })
}

/// `Q(K_n) = 1 + sum_{i=1..n} C(n, i) x^i y`.
pub fn complete_graph_q(n: usize) -> BiPoly {
    let mut q = BiPoly::one();
    for i in 1..=n {
        q.add_term(i as u32, 1, binomial(BigInt::from(n), BigInt::from(i)));
    }
    q
}

struct Engine<'a> {
    memo: &'a MemoTable,
    opts: RecurrenceOptions,
    hits: AtomicU64,
    misses: AtomicU64,
    depth: AtomicUsize,
}

impl Engine<'_> {
    fn eval(&self, g: &Graph, depth: usize) -> Result<BiPoly> {
        self.depth.fetch_max(depth, Ordering::Relaxed);
        let n = g.order();
        if n == 0 {
            return Ok(BiPoly::one());
        }
        let comps = g.components();
        if comps.len() > 1 {
            let mut q = BiPoly::one();
            for c in comps {
                let part = self.eval(&g.induced_unchecked(c.0), depth + 1)?;
                q = &q * &part;
            }
            return Ok(q);
        }
        if g.is_complete() {
            return Ok(complete_graph_q(n));
        }
        let key = canonical_key(g);
        if let Some(q) = self.memo.get(&key) {
            self.hits.fetch_add(1, Ordering::Relaxed);
            return Ok(q);
        }
        self.misses.fetch_add(1, Ordering::Relaxed);

        let v = self.opts.pivot.pick(g);
        let deleted = g.delete_vertex(v)?;
        let extracted = g.extract_closed_neighborhood(v)?;
        let contracted = g.contract_vertex(v)?;
        let (a, (b, c)) = if self.opts.parallel && depth < PARALLEL_DEPTH {
            rayon::join(
                || self.eval(&deleted, depth + 1),
                || {
                    rayon::join(
                        || self.eval(&extracted, depth + 1),
                        || self.eval(&contracted, depth + 1),
                    )
                },
            )
        } else {
            (
                self.eval(&deleted, depth + 1),
                (self.eval(&extracted, depth + 1), self.eval(&contracted, depth + 1)),
            )
        };
        let x = BiPoly::x();
        let x_y_minus_1 = &x * &(&BiPoly::y() - &BiPoly::one());
        let q = a? + &x_y_minus_1 * &b? + &x * &c?;
        self.memo.insert(key, q.clone())?;
        Ok(q)
    }
}

pub fn q_by_recurrence(g: &Graph, memo: &MemoTable) -> Result<QResult> {
    q_by_recurrence_with(g, memo, RecurrenceOptions::default())
}

pub fn q_by_recurrence_with(g: &Graph, memo: &MemoTable, opts: RecurrenceOptions) -> Result<QResult> {
    let engine = Engine {
        memo,
        opts,
        hits: AtomicU64::new(0),
        misses: AtomicU64::new(0),
        depth: AtomicUsize::new(0),
    };
    let polynomial = engine.eval(g, 0)?;
    Ok(QResult {
        polynomial,
        method: Method::Recurrence,
        stats: QStats {
            subsets_enumerated: 0,
            memo_hits: engine.hits.into_inner(),
            memo_misses: engine.misses.into_inner(),
            max_depth: engine.depth.into_inner(),
        },
    })
}

/// Settings shared by the front ends.
#[derive(Clone, Copy, Debug)]
pub struct QConfig {
    pub method: MethodChoice,
    pub definition_bound: usize,
    pub memo_capacity: usize,
    pub parallel: bool,
}

impl Default for QConfig {
    fn default() -> Self {
        QConfig {
            method: MethodChoice::Auto,
            definition_bound: DEFAULT_DEFINITION_BOUND,
            memo_capacity: usize::MAX,
            parallel: false,
        }
    }
}

/// Runs `job` on a dedicated pool of `workers` threads, or on the calling
/// thread when `workers <= 1`.
pub fn with_workers<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    if workers <= 1 {
        return Ok(job());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start {workers} workers: {e}")))?;
    Ok(pool.install(job))
}

pub fn compute_q(g: &Graph, config: &QConfig) -> Result<QResult> {
    let use_definition = match config.method {
        MethodChoice::Definition => true,
        MethodChoice::Recurrence => false,
        MethodChoice::Auto => g.order() <= AUTO_DEFINITION_MAX_ORDER,
    };
    if use_definition {
        q_by_definition_bounded(g, config.definition_bound)
    } else {
        let memo = MemoTable::new(config.memo_capacity);
        let opts = RecurrenceOptions {
            parallel: config.parallel,
            ..RecurrenceOptions::default()
        };
        q_by_recurrence_with(g, &memo, opts)
    }
}

/// `Q(G)` by the automatic method with no resource bounds.
pub fn q_polynomial(g: &Graph) -> BiPoly {
    if g.order() <= AUTO_DEFINITION_MAX_ORDER {
        q_by_definition_bounded(g, AUTO_DEFINITION_MAX_ORDER)
            .expect("order within bound")
            .polynomial
    } else {
        q_by_recurrence(g, &MemoTable::unbounded())
            .expect("unbounded memo cannot overflow")
            .polynomial
    }
}

pub fn q_equivalent(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && q_polynomial(g) == q_polynomial(h)
}
