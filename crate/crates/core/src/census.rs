//! Isomorph-free census of small graphs, grouped by `Q`.
//!
//! Every upper-triangle adjacency mask of order `n` is visited and kept only
//! if the labeled graph is its own canonical form, so each isomorphism class
//! is produced exactly once without a dedup table. Mask ranges split freely
//! across workers; results are merged in graph6 byte order.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_key, is_canonical, CanonKey};
use crate::error::{Error, Result};
use crate::format::{from_graph6, to_graph6, triangle_pairs};
use crate::graph::{bit, Graph};
use crate::poly::BiPoly;
use crate::qpoly::{q_by_definition, q_polynomial, with_workers};

/// Hard ceiling: `2^28` masks at order 8.
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Default ceiling for Q-class censuses; order 8 must be requested.
pub const DEFAULT_CENSUS_ORDER: usize = 7;

const CHUNK: u64 = 1 << 16;

/// Non-isomorphic graph counts for orders `0..=8`.
pub const KNOWN_CLASS_COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];

#[derive(Clone, Copy, Debug)]
pub struct CensusOptions {
    pub max_order: usize,
    /// 1 runs on the calling thread, the reference path.
    pub workers: usize,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            max_order: DEFAULT_CENSUS_ORDER,
            workers: 1,
        }
    }
}

impl CensusOptions {
    pub fn with_order_8(self) -> Self {
        CensusOptions {
            max_order: MAX_ENUMERATION_ORDER,
            ..self
        }
    }
}

fn check_order(n: usize, max: usize) -> Result<()> {
    let limit = max.min(MAX_ENUMERATION_ORDER);
    if n > limit {
        return Err(Error::ResourceLimit {
            what: format!("census of order {n}"),
            limit,
        });
    }
    Ok(())
}

fn canonical_in_range(n: usize, pairs: &[(usize, usize)], lo: u64, hi: u64) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut rows = vec![0u64; n];
    for mask in lo..hi {
        rows.iter_mut().for_each(|r| *r = 0);
        let mut m = mask;
        while m != 0 {
            let k = m.trailing_zeros() as usize;
            m &= m - 1;
            let (i, j) = pairs[k];
            rows[i] |= bit(j);
            rows[j] |= bit(i);
        }
        // cheap reject before building a Graph: canonical forms list
        // vertices by non-decreasing degree
        if rows.windows(2).any(|w| w[0].count_ones() > w[1].count_ones()) {
            continue;
        }
        let g = Graph::from_rows_unchecked(rows.clone());
        if is_canonical(&g) {
            out.push(g);
        }
    }
    out
}

/// One representative per isomorphism class, each in canonical form,
/// sorted by graph6.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    enumerate_graphs_with(n, &CensusOptions::default().with_order_8(), &|_, _| {})
}

/// `progress(done_masks, total_masks)` is called after every chunk.
pub fn enumerate_graphs_with(
    n: usize,
    opts: &CensusOptions,
    progress: &(dyn Fn(u64, u64) + Sync),
) -> Result<Vec<Graph>> {
    check_order(n, opts.max_order)?;
    let pairs: Vec<(usize, usize)> = triangle_pairs(n).collect();
    let total = 1u64 << pairs.len();
    let chunks = total.div_ceil(CHUNK);
    let done = AtomicU64::new(0);
    let work = |c: u64| {
        let lo = c * CHUNK;
        let hi = (lo + CHUNK).min(total);
        let found = canonical_in_range(n, &pairs, lo, hi);
        let d = done.fetch_add(hi - lo, Ordering::Relaxed) + (hi - lo);
        progress(d, total);
        found
    };
    let mut graphs: Vec<Graph> = if opts.workers <= 1 {
        (0..chunks).flat_map(work).collect()
    } else {
        with_workers(opts.workers, || (0..chunks).into_par_iter().flat_map_iter(work).collect())?
    };
    graphs.sort_by_cached_key(to_graph6);
    Ok(graphs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub key: CanonKey,
    pub q: BiPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub order: usize,
    pub graphs: usize,
    pub classes: usize,
    pub largest_class: usize,
    pub non_singleton_classes: usize,
    pub graphs_in_non_singleton_classes: usize,
}

/// All graphs of one order grouped by `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QClassTable {
    order: usize,
    entries: Vec<CensusEntry>,
    classes: BTreeMap<BiPoly, Vec<CanonKey>>,
}

impl QClassTable {
    fn from_entries(order: usize, mut entries: Vec<CensusEntry>) -> Self {
        entries.sort_by(|a, b| a.key.cmp(&b.key));
        let mut classes: BTreeMap<BiPoly, Vec<CanonKey>> = BTreeMap::new();
        for e in &entries {
            classes.entry(e.q.clone()).or_default().push(e.key.clone());
        }
        QClassTable { order, entries, classes }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Sorted by graph6 byte order.
    pub fn entries(&self) -> &[CensusEntry] {
        &self.entries
    }

    pub fn classes(&self) -> impl Iterator<Item = (&BiPoly, &[CanonKey])> {
        self.classes.iter().map(|(q, ks)| (q, ks.as_slice()))
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, q: &BiPoly) -> &[CanonKey] {
        self.classes.get(q).map_or(&[], Vec::as_slice)
    }

    pub fn non_singleton_classes(&self) -> impl Iterator<Item = (&BiPoly, &[CanonKey])> {
        self.classes().filter(|(_, ks)| ks.len() > 1)
    }

    pub fn summary(&self) -> CensusSummary {
        let non_singleton: Vec<usize> = self.non_singleton_classes().map(|(_, ks)| ks.len()).collect();
        CensusSummary {
            order: self.order,
            graphs: self.entries.len(),
            classes: self.classes.len(),
            largest_class: self.classes.values().map(Vec::len).max().unwrap_or(0),
            non_singleton_classes: non_singleton.len(),
            graphs_in_non_singleton_classes: non_singleton.iter().sum(),
        }
    }

    /// Lines `<graph6>\t<Q as JSON>`, sorted by graph6.
    pub fn write_census<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        for e in &self.entries {
            writeln!(w, "{}\t{}", e.key, e.q.to_json_string())?;
        }
        Ok(())
    }

    /// Reads a census file back. Lines must be sorted, canonical, of one
    /// order, and distinct.
    pub fn read_census<R: BufRead>(r: R) -> Result<Self> {
        let mut entries = Vec::new();
        let mut order = None;
        for (lineno, line) in r.lines().enumerate() {
            let line = line.map_err(|e| Error::parse("census", format!("line {}", lineno + 1), e.to_string()))?;
            if line.is_empty() {
                continue;
            }
            let (g6, json) = line
                .split_once('\t')
                .ok_or_else(|| Error::parse("census", &line, "expected <graph6>TAB<json>"))?;
            let g = from_graph6(g6)?;
            let key = canonical_key(&g);
            if key.as_graph6() != g6 {
                return Err(Error::parse("census", g6, "graph is not in canonical form"));
            }
            if *order.get_or_insert(g.order()) != g.order() {
                return Err(Error::parse("census", g6, "mixed orders"));
            }
            if entries.last().is_some_and(|e: &CensusEntry| e.key >= key) {
                return Err(Error::parse("census", g6, "lines not strictly sorted by graph6"));
            }
            entries.push(CensusEntry {
                key,
                q: BiPoly::from_json_str(json)?,
            });
        }
        Ok(QClassTable::from_entries(order.unwrap_or(0), entries))
    }

    /// Recomputes `Q` for every member and checks it against its class.
    pub fn verify(&self) -> Result<()> {
        for e in &self.entries {
            let q = q_polynomial(&e.key.to_graph());
            if q != e.q {
                return Err(Error::InternalConsistency {
                    invariant: "census Q",
                    extracted: e.q.to_string(),
                    direct: q.to_string(),
                });
            }
        }
        Ok(())
    }
}

pub fn q_classes(n: usize) -> Result<QClassTable> {
    q_classes_with(n, &CensusOptions::default(), &|_, _| {})
}

pub fn q_classes_with(
    n: usize,
    opts: &CensusOptions,
    progress: &(dyn Fn(u64, u64) + Sync),
) -> Result<QClassTable> {
    let graphs = enumerate_graphs_with(n, opts, progress)?;
    let entry = |g: &Graph| -> Result<CensusEntry> {
        Ok(CensusEntry {
            key: canonical_key(g),
            q: q_by_definition(g)?.polynomial,
        })
    };
    let entries: Vec<CensusEntry> = if opts.workers <= 1 {
        graphs.iter().map(entry).collect::<Result<_>>()?
    } else {
        with_workers(opts.workers, || graphs.par_iter().map(entry).collect::<Result<_>>())??
    };
    Ok(QClassTable::from_entries(n, entries))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniquenessReport {
    pub graph6: String,
    pub unique: bool,
    /// Other members of the Q-class, as canonical graph6.
    pub co_members: Vec<String>,
}

pub fn verify_q_unique(g: &Graph, table: &QClassTable) -> Result<UniquenessReport> {
    if g.order() != table.order() {
        return Err(Error::PreconditionViolated(format!(
            "graph of order {} checked against a census of order {}",
            g.order(),
            table.order()
        )));
    }
    let key = canonical_key(g);
    let class = table.class_of(&q_polynomial(g));
    if !class.contains(&key) {
        return Err(Error::InternalConsistency {
            invariant: "census membership",
            extracted: format!("{} members", class.len()),
            direct: key.to_string(),
        });
    }
    Ok(UniquenessReport {
        graph6: key.to_string(),
        unique: class.len() == 1,
        co_members: class.iter().filter(|k| **k != key).map(ToString::to_string).collect(),
    })
}

/// Builds the census for `g`'s order first.
pub fn verify_q_unique_fresh(g: &Graph, opts: &CensusOptions) -> Result<UniquenessReport> {
    let table = q_classes_with(g.order(), opts, &|_, _| {})?;
    verify_q_unique(g, &table)
}
