//! Graph invariants read off `Q` alone, and their direct counterparts.
//!
//! From `Q` of a graph of order `n`:
//! * order `n = deg_x Q = log2 Q(1,1) = [xy] Q`
//! * size `[x^2 y] Q`
//! * components `deg_y [x^n] Q`
//! * independent sets of size `i`: `[x^i y^i] Q`; independence number `deg_y Q`
//! * connectivity `n - max { deg_x [y^j] Q : j >= 2 }`
//! * for `k`-regular bipartite graphs, induced `P4` and `C4` counts from
//!   `[x^3 y] Q` and `[x^4 y] Q`.

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, bits, low_mask, subsets_of_size, Graph};
use crate::poly::{Axis, BiPoly};
use crate::qpoly::{compute_q, QConfig};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasicInvariants {
    pub order: usize,
    pub size: u64,
    pub components: usize,
    pub independence_number: usize,
    /// Entry `i` counts independent sets of size `i`.
    pub independent_set_profile: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FourVertexCounts {
    /// Induced paths on four vertices.
    pub p: u64,
    /// Induced four-cycles.
    pub c4: u64,
    pub claws: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub order: usize,
    pub size: u64,
    pub components: usize,
    pub independence_number: usize,
    pub independent_set_profile: Vec<u64>,
    pub connectivity: usize,
    pub min_degree: usize,
    pub regular_degree: Option<usize>,
    pub bipartite: bool,
    pub four_vertex: Option<FourVertexCounts>,
}

fn small(c: &BigInt, what: &str) -> Result<u64> {
    c.to_u64()
        .ok_or_else(|| Error::MalformedPolynomial(format!("{what} coefficient {c} out of range")))
}

/// Checks the shape every subgraph component polynomial has and returns
/// its order.
fn validated_order(q: &BiPoly) -> Result<usize> {
    if q.coeff(0, 0) != BigInt::one() {
        return Err(Error::MalformedPolynomial("constant term is not 1".into()));
    }
    if !q.has_nonnegative_coefficients() {
        return Err(Error::MalformedPolynomial("negative coefficient".into()));
    }
    let by_degree = q.degree(Axis::X)?;
    let total = q.eval(&BigInt::one(), &BigInt::one());
    let by_log = total.bits().saturating_sub(1);
    if total != BigInt::one() << by_log {
        return Err(Error::MalformedPolynomial(format!("Q(1,1) = {total} is not a power of two")));
    }
    let by_linear = small(&q.coeff(1, 1), "[xy]")?;
    if u64::from(by_degree) != by_log || by_log != by_linear {
        return Err(Error::MalformedPolynomial(format!(
            "order formulas disagree: deg_x = {by_degree}, log2 Q(1,1) = {by_log}, [xy] = {by_linear}"
        )));
    }
    Ok(by_degree as usize)
}

pub fn extract_basic(q: &BiPoly) -> Result<BasicInvariants> {
    let n = validated_order(q)?;
    let size = small(&q.coeff(2, 1), "[x^2 y]")?;
    let components = q.y_degree_at_x(n as u32)? as usize;
    let alpha = q.degree(Axis::Y)? as usize;
    let profile = (0..=alpha)
        .map(|i| small(&q.coeff(i as u32, i as u32), "[x^i y^i]"))
        .collect::<Result<Vec<_>>>()?;
    Ok(BasicInvariants {
        order: n,
        size,
        components,
        independence_number: alpha,
        independent_set_profile: profile,
    })
}

/// Complete graphs (no monomial with `j >= 2`) give `n - 1`, disconnected
/// graphs give 0.
pub fn extract_connectivity(q: &BiPoly) -> Result<usize> {
    let n = validated_order(q)?;
    match q.x_degree_at_y_at_least(2) {
        Ok(i) => Ok(n - i as usize),
        Err(_) => Ok(n.saturating_sub(1)),
    }
}

/// Solves `[x^4 y] = p + c4 + n C(k,3)` and `(2k - 2) [x^3 y] = 2p + 8 c4`
/// for a `k`-regular bipartite graph of order `n`.
pub fn four_vertex_counts(q: &BiPoly, n: usize, k: usize) -> Result<FourVertexCounts> {
    if k == 0 {
        return Err(Error::PreconditionViolated("regular degree must be at least 1".into()));
    }
    let a3 = q.coeff(3, 1);
    let a4 = q.coeff(4, 1);
    let claws = BigInt::from(n) * binomial(BigInt::from(k), BigInt::from(3));
    let rest = &a4 - &claws;
    let num = BigInt::from(2 * k - 2) * &a3 - BigInt::from(2) * &rest;
    let (c4, r) = num.div_rem(&BigInt::from(6));
    let p = &rest - &c4;
    if !r.is_zero() || c4 < BigInt::zero() || p < BigInt::zero() {
        return Err(Error::PreconditionViolated(format!(
            "no non-negative integer solution (a3 = {a3}, a4 = {a4}, n = {n}, k = {k}); \
             graph is not {k}-regular bipartite"
        )));
    }
    Ok(FourVertexCounts {
        p: small(&p, "p")?,
        c4: small(&c4, "c4")?,
        claws: small(&claws, "claws")?,
    })
}

/// Classifies every induced 4-vertex subgraph.
pub fn count_induced_four_vertex_direct(g: &Graph) -> FourVertexCounts {
    let mut counts = FourVertexCounts { p: 0, c4: 0, claws: 0 };
    for mask in subsets_of_size(g.order(), 4) {
        let mut degs: Vec<u32> = bits(mask).map(|v| (g.rows()[v] & mask).count_ones()).collect();
        degs.sort_unstable();
        match degs.as_slice() {
            [1, 1, 2, 2] => counts.p += 1,
            [2, 2, 2, 2] => counts.c4 += 1,
            [1, 1, 1, 3] => counts.claws += 1,
            _ => {}
        }
    }
    counts
}

/// Independent-set counts by size, by branching on the lowest vertex.
pub fn independent_set_profile_direct(g: &Graph) -> Vec<u64> {
    fn go(adj: &[u64], avail: u64, out: &mut Vec<u64>, size: usize) {
        if out.len() <= size {
            out.resize(size + 1, 0);
        }
        out[size] += 1;
        let mut rest = avail;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // sets whose smallest member is v
            go(adj, rest & !adj[v], out, size + 1);
        }
    }
    let mut out = Vec::new();
    go(g.rows(), low_mask(g.order()), &mut out, 0);
    out
}

fn agree<T: PartialEq + std::fmt::Debug>(invariant: &'static str, from_q: T, direct: T) -> Result<()> {
    if from_q == direct {
        Ok(())
    } else {
        Err(Error::InternalConsistency {
            invariant,
            extracted: format!("{from_q:?}"),
            direct: format!("{direct:?}"),
        })
    }
}

/// Computes `Q`, extracts everything it determines, recomputes each
/// invariant directly and fails on any disagreement.
pub fn full_report(g: &Graph) -> Result<InvariantReport> {
    full_report_with(g, &QConfig::default())
}

pub fn full_report_with(g: &Graph, config: &QConfig) -> Result<InvariantReport> {
    let q = compute_q(g, config)?.polynomial;
    let basic = extract_basic(&q)?;
    let connectivity = extract_connectivity(&q)?;

    agree("order", basic.order, g.order())?;
    agree("size", basic.size, g.size() as u64)?;
    agree("components", basic.components, g.component_count())?;
    let profile = independent_set_profile_direct(g);
    agree("independence number", basic.independence_number, profile.len() - 1)?;
    agree("independent set profile", &basic.independent_set_profile, &profile)?;
    agree("connectivity", connectivity, g.connectivity_direct())?;

    let (min_degree, _, _) = g.degree_profile();
    let regular_degree = g.regular_degree();
    let bipartite = g.is_bipartite();
    let four_vertex = match regular_degree {
        Some(k) if k >= 1 && bipartite => {
            let from_q = four_vertex_counts(&q, g.order(), k)?;
            agree("four-vertex counts", from_q, count_induced_four_vertex_direct(g))?;
            Some(from_q)
        }
        _ => None,
    };

    Ok(InvariantReport {
        order: basic.order,
        size: basic.size,
        components: basic.components,
        independence_number: basic.independence_number,
        independent_set_profile: basic.independent_set_profile,
        connectivity,
        min_degree,
        regular_degree,
        bipartite,
        four_vertex,
    })
}

/// True iff `mask` is an independent set of `g`.
pub fn is_independent(g: &Graph, mask: u64) -> bool {
    bits(mask).all(|v| g.rows()[v] & mask & !bit(v) == 0)
}
