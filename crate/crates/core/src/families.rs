//! Named graph families with fixed labelings.
//!
//! | family | labeling |
//! |---|---|
//! | `complete n` | `0..n` |
//! | `path n` | `0 - 1 - ... - (n-1)` |
//! | `cycle n` | path plus `(n-1, 0)` |
//! | `star n` | `K_{1,n}`, center 0, leaves `1..=n` |
//! | `complete_bipartite m n` | parts `0..m` and `m..m+n` |
//! | `tadpole m n` | cycle on `0..n`, path on `n..n+m`, bridge `0 - n` |
//! | `friendship n` | hub 0, triangles `(0, 2i-1, 2i)` |
//! | `book n` | spine `0 - 1`, page `i` is `0 - (2+2i) - (3+2i) - 1` |
//! | `hypercube n` | `n`-bit words, adjacent at Hamming distance 1 |
//! | `fan n` | hub 0 joined to the path `1 - ... - n` |
//! | `fan_plus n` | `fan (n-1)` plus vertex `n` adjacent to `n-2` and `n-1` |

use std::fmt;

use crate::canon::{are_isomorphic, canonical_key};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Complete(usize),
    Edgeless(usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    Tadpole { path: usize, cycle: usize },
    Friendship(usize),
    Book(usize),
    Hypercube(usize),
    Fan(usize),
    FanPlus(usize),
}

impl FamilySpec {
    pub const NAMES: [&'static str; 12] = [
        "complete",
        "edgeless",
        "path",
        "cycle",
        "star",
        "complete_bipartite",
        "tadpole",
        "friendship",
        "book",
        "hypercube",
        "fan",
        "fan_plus",
    ];

    pub fn from_name(name: &str, params: &[usize]) -> Result<Self> {
        let want = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParameter(format!(
                    "family {name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let spec = match name {
            "complete" => want(1).map(|_| FamilySpec::Complete(params[0])),
            "edgeless" => want(1).map(|_| FamilySpec::Edgeless(params[0])),
            "path" => want(1).map(|_| FamilySpec::Path(params[0])),
            "cycle" => want(1).map(|_| FamilySpec::Cycle(params[0])),
            "star" => want(1).map(|_| FamilySpec::Star(params[0])),
            "complete_bipartite" => want(2).map(|_| FamilySpec::CompleteBipartite(params[0], params[1])),
            "tadpole" => want(2).map(|_| FamilySpec::Tadpole {
                path: params[0],
                cycle: params[1],
            }),
            "friendship" => want(1).map(|_| FamilySpec::Friendship(params[0])),
            "book" => want(1).map(|_| FamilySpec::Book(params[0])),
            "hypercube" => want(1).map(|_| FamilySpec::Hypercube(params[0])),
            "fan" => want(1).map(|_| FamilySpec::Fan(params[0])),
            "fan_plus" => want(1).map(|_| FamilySpec::FanPlus(params[0])),
            _ => Err(Error::InvalidParameter(format!(
                "unknown family {name:?}; expected one of {}",
                Self::NAMES.join(", ")
            ))),
        }?;
        spec.check()?;
        Ok(spec)
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Complete(n) | FamilySpec::Edgeless(n) | FamilySpec::Path(n) | FamilySpec::Cycle(n) => n,
            FamilySpec::Star(n) | FamilySpec::Fan(n) | FamilySpec::FanPlus(n) => n + 1,
            FamilySpec::CompleteBipartite(m, n) => m + n,
            FamilySpec::Tadpole { path, cycle } => path + cycle,
            FamilySpec::Friendship(n) => 2 * n + 1,
            FamilySpec::Book(n) => 2 * n + 2,
            FamilySpec::Hypercube(n) => 1usize.checked_shl(n as u32).unwrap_or(usize::MAX),
        }
    }

    fn check(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidParameter(format!("{self}: {why}")));
        match *self {
            FamilySpec::Path(0) => return bad("path needs n >= 1"),
            FamilySpec::Cycle(n) if n < 3 => return bad("cycle needs n >= 3"),
            FamilySpec::CompleteBipartite(m, n) if m == 0 || n == 0 => {
                return bad("complete bipartite needs both parts non-empty")
            }
            FamilySpec::Tadpole { path, cycle } if path == 0 || cycle < 3 => {
                return bad("tadpole needs path m >= 1 and cycle n >= 3")
            }
            FamilySpec::Friendship(0) | FamilySpec::Book(0) | FamilySpec::Fan(0) => {
                return bad("parameter must be at least 1")
            }
            FamilySpec::FanPlus(n) if n < 3 => return bad("fan_plus needs n >= 3"),
            FamilySpec::Hypercube(n) if n > 5 => return bad("hypercube dimension above 5 exceeds the order limit"),
            _ => {}
        }
        if self.order() > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order: self.order(),
                max: MAX_ORDER,
            });
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Complete(n) => write!(f, "complete {n}"),
            FamilySpec::Edgeless(n) => write!(f, "edgeless {n}"),
            FamilySpec::Path(n) => write!(f, "path {n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle {n}"),
            FamilySpec::Star(n) => write!(f, "star {n}"),
            FamilySpec::CompleteBipartite(m, n) => write!(f, "complete_bipartite {m} {n}"),
            FamilySpec::Tadpole { path, cycle } => write!(f, "tadpole {path} {cycle}"),
            FamilySpec::Friendship(n) => write!(f, "friendship {n}"),
            FamilySpec::Book(n) => write!(f, "book {n}"),
            FamilySpec::Hypercube(n) => write!(f, "hypercube {n}"),
            FamilySpec::Fan(n) => write!(f, "fan {n}"),
            FamilySpec::FanPlus(n) => write!(f, "fan_plus {n}"),
        }
    }
}

fn path_edges(g: &mut Graph, vertices: impl IntoIterator<Item = usize>) {
    let vs: Vec<usize> = vertices.into_iter().collect();
    for w in vs.windows(2) {
        g.add_edge(w[0], w[1]);
    }
}

pub fn make(spec: &FamilySpec) -> Result<Graph> {
    spec.check()?;
    let n = spec.order();
    let mut g = Graph::edgeless(n);
    match *spec {
        FamilySpec::Complete(_) => return Ok(Graph::edgeless(n).complement()),
        FamilySpec::Edgeless(_) => {}
        FamilySpec::Path(_) => path_edges(&mut g, 0..n),
        FamilySpec::Cycle(_) => {
            path_edges(&mut g, 0..n);
            g.add_edge(n - 1, 0);
        }
        FamilySpec::Star(k) => (1..=k).for_each(|v| g.add_edge(0, v)),
        FamilySpec::CompleteBipartite(a, b) => {
            return join(&Graph::edgeless(a), &Graph::edgeless(b));
        }
        FamilySpec::Tadpole { path, cycle } => {
            path_edges(&mut g, 0..cycle);
            g.add_edge(cycle - 1, 0);
            path_edges(&mut g, cycle..cycle + path);
            g.add_edge(0, cycle);
        }
        FamilySpec::Friendship(k) => {
            for i in 1..=k {
                let (a, b) = (2 * i - 1, 2 * i);
                g.add_edge(0, a);
                g.add_edge(0, b);
                g.add_edge(a, b);
            }
        }
        FamilySpec::Book(k) => {
            g.add_edge(0, 1);
            for i in 0..k {
                path_edges(&mut g, [0, 2 + 2 * i, 3 + 2 * i, 1]);
            }
        }
        FamilySpec::Hypercube(d) => {
            for v in 0..n {
                for b in 0..d {
                    let w = v ^ (1 << b);
                    if v < w {
                        g.add_edge(v, w);
                    }
                }
            }
        }
        FamilySpec::Fan(k) => return join(&Graph::edgeless(1), &make(&FamilySpec::Path(k))?),
        FamilySpec::FanPlus(k) => return fan_plus(k),
    }
    Ok(g)
}

/// `G ∨ H`: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let mut out = g.disjoint_union(h)?;
    let off = g.order();
    for u in 0..g.order() {
        for v in 0..h.order() {
            out.add_edge(u, off + v);
        }
    }
    Ok(out)
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    g.disjoint_union(h)
}

/// `F_{n-1}^+`: the fan on hub 0 and path `1..n-1`, plus vertex `n`
/// adjacent to `n-2` and `n-1`.
pub fn fan_plus(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("fan_plus {n}: fan_plus needs n >= 3")));
    }
    let base = make(&FamilySpec::Fan(n - 1))?;
    let mut g = base.disjoint_union(&Graph::edgeless(1))?;
    g.add_edge(n - 2, n);
    g.add_edge(n - 1, n);
    Ok(g)
}

/// All ways to attach a sixth vertex `u` to `F_4` such that
/// `G - u ≅ F_4`, `G - N[u] ≅ P_3` and `G / u ≅ F_4`, one per isomorphism
/// class. Every nonempty neighborhood is tried, not only those of size two.
pub fn search_fig4_candidates() -> Vec<Graph> {
    let f4 = make(&FamilySpec::Fan(4)).expect("valid");
    let p3 = make(&FamilySpec::Path(3)).expect("valid");
    let u = f4.order();
    let mut found: Vec<Graph> = Vec::new();
    for nbhd in 1u64..(1 << u) {
        let mut g = f4.disjoint_union(&Graph::edgeless(1)).expect("small");
        for v in crate::graph::bits(nbhd) {
            g.add_edge(u, v);
        }
        let ok = are_isomorphic(&g.delete_vertex(u).expect("in range"), &f4)
            && are_isomorphic(&g.extract_closed_neighborhood(u).expect("in range"), &p3)
            && are_isomorphic(&g.contract_vertex(u).expect("in range"), &f4);
        if ok && !found.iter().any(|h| are_isomorphic(h, &g)) {
            found.push(g);
        }
    }
    found.sort_by_key(canonical_key);
    found
}

/// The Q-equivalent pair `(G1, G2)`: `F_4` (hub 0, path 1-2-3-4) plus a
/// vertex 5 attached to `{0, 1}` and to `{2, 3}` respectively. The pair is
/// the output of [`search_fig4_candidates`], which the tests re-run.
pub fn fig4_pair() -> (Graph, Graph) {
    let fan = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)];
    let mut g1 = Graph::from_edges(6, &fan).expect("valid");
    g1.add_edge(5, 0);
    g1.add_edge(5, 1);
    let mut g2 = Graph::from_edges(6, &fan).expect("valid");
    g2.add_edge(5, 2);
    g2.add_edge(5, 3);
    (g1, g2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degree_profile().2;
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    #[test]
    fn constructor_examples() {
        let f = make(&FamilySpec::Friendship(2)).unwrap();
        assert_eq!((f.order(), f.size()), (5, 6));
        assert_eq!(sorted_degrees(&f), vec![4, 2, 2, 2, 2]);
        let b = make(&FamilySpec::Book(3)).unwrap();
        assert_eq!((b.order(), b.size()), (8, 10));
        let q3 = make(&FamilySpec::Hypercube(3)).unwrap();
        assert_eq!((q3.order(), q3.size(), q3.regular_degree()), (8, 12, Some(3)));
        assert!(q3.is_bipartite());
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::edgeless(1);
        let p4 = make(&FamilySpec::Path(4)).unwrap();
        assert_eq!(join(&k1, &p4).unwrap(), make(&FamilySpec::Fan(4)).unwrap());
        assert_eq!(join(&k1, &k1).unwrap(), make(&FamilySpec::Complete(2)).unwrap());
        assert_eq!(
            join(&Graph::edgeless(2), &Graph::edgeless(3)).unwrap(),
            make(&FamilySpec::CompleteBipartite(2, 3)).unwrap()
        );
    }

    #[test]
    fn disjoint_union_examples() {
        let k1 = Graph::edgeless(1);
        assert_eq!(disjoint_union(&k1, &k1).unwrap(), Graph::edgeless(2));
        let k3 = make(&FamilySpec::Complete(3)).unwrap();
        let k2 = make(&FamilySpec::Complete(2)).unwrap();
        assert_eq!(disjoint_union(&k3, &k2).unwrap().component_count(), 2);
        assert_eq!(disjoint_union(&k3, &Graph::empty()).unwrap(), k3);
    }

    #[test]
    fn fan_plus_has_fan_order_and_size() {
        for n in 3..9 {
            let a = make(&FamilySpec::Fan(n)).unwrap();
            let b = fan_plus(n).unwrap();
            assert_eq!((a.order(), a.size()), (b.order(), b.size()));
        }
        let b = fan_plus(5).unwrap();
        assert_eq!((b.order(), b.size()), (6, 9));
        assert!(fan_plus(2).is_err());
    }

    #[test]
    fn parameter_ranges() {
        for (name, params) in [
            ("cycle", vec![2]),
            ("tadpole", vec![0, 3]),
            ("tadpole", vec![1, 2]),
            ("hypercube", vec![6]),
            ("fan", vec![0]),
            ("complete_bipartite", vec![0, 3]),
            ("path", vec![1, 2]),
            ("wheel", vec![5]),
            ("complete", vec![63]),
        ] {
            assert!(FamilySpec::from_name(name, &params).is_err(), "{name} {params:?}");
        }
        assert_eq!(FamilySpec::from_name("hypercube", &[0]).unwrap().order(), 1);
    }

    #[test]
    fn fig4_degree_sequences() {
        let (g1, g2) = fig4_pair();
        assert_eq!(sorted_degrees(&g1), vec![5, 3, 3, 3, 2, 2]);
        assert_eq!(sorted_degrees(&g2), vec![4, 4, 4, 2, 2, 2]);
        assert_eq!((g1.size(), g2.size()), (9, 9));
        assert!(!are_isomorphic(&g1, &g2));
    }
}
