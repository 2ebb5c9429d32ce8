//! Subgraph component polynomial toolkit.
//!
//! Computes `Q(G; x, y)` for simple graphs two independent ways, reads graph
//! invariants back out of it, compares its distinguishing power with the
//! characteristic, matching and Tutte polynomials, and runs isomorph-free
//! censuses of small graphs grouped by `Q`.

pub mod canon;
pub mod census;
pub mod classic;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod invariants;
pub mod poly;
pub mod qpoly;

pub use canon::{are_isomorphic, canonical_form, canonical_key, CanonKey};
pub use error::{Error, Result};
pub use format::{from_graph6, parse_graph, to_graph6};
pub use graph::{Graph, VertexSet, MAX_ORDER};
pub use poly::{Axis, BiPoly, UniPoly};
pub use qpoly::{q_by_definition, q_by_recurrence, q_equivalent, q_polynomial, with_workers, MemoTable, QResult};
