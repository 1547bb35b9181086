//! Brute-force ground truth straight from the definitions: covers,
//! minimality, maximal independent sets and their enumeration.
//!
//! Everything here is exponential in the worst case and meant for small
//! graphs only.

use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::unmixed::{MixedReason, UnmixedReport, Verdict};

/// Default vertex limit for enumeration.
pub const DEFAULT_CAP: usize = 24;
/// Hard limit imposed by the 64-bit vertex masks.
pub const MAX_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the oracle cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn is_vertex_cover(g: &Graph, c: &VertexSet) -> Result<bool, OracleError> {
    g.check_set(c)?;
    let mut inside = vec![false; g.n()];
    for v in c {
        inside[v] = true;
    }
    Ok(covers(g, &inside))
}

fn covers(g: &Graph, inside: &[bool]) -> bool {
    (0..g.n()).all(|u| inside[u] || g.adj(u).iter().all(|&v| inside[v]))
}

/// A cover is minimal iff dropping any single member uncovers some edge,
/// i.e. every member has a neighbor outside the cover.
pub fn is_minimal_vertex_cover(g: &Graph, c: &VertexSet) -> Result<bool, OracleError> {
    g.check_set(c)?;
    let mut inside = vec![false; g.n()];
    for v in c {
        inside[v] = true;
    }
    if !covers(g, &inside) {
        return Ok(false);
    }
    for v in c {
        inside[v] = false;
        let still = covers(g, &inside);
        inside[v] = true;
        if still {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_maximal_independent(g: &Graph, a: &VertexSet) -> Result<bool, OracleError> {
    g.check_set(a)?;
    let mut inside = vec![false; g.n()];
    for v in a {
        inside[v] = true;
    }
    for v in 0..g.n() {
        let hits = g.adj(v).iter().any(|&w| inside[w]);
        if inside[v] == hits {
            // Either an edge inside `a`, or an addable vertex outside it.
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_cap(g: &Graph, cap: usize) -> Result<(), OracleError> {
    let cap = cap.min(MAX_CAP);
    if g.n() > cap {
        Err(OracleError::TooLarge { n: g.n(), cap })
    } else {
        Ok(())
    }
}

fn mask_to_set(mut mask: u64) -> VertexSet {
    let mut v = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        v.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    VertexSet::from_sorted(v)
}

/// All maximal independent sets as bitmasks, via Bron–Kerbosch with
/// pivoting on the complement graph.
fn maximal_independent_masks(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // Vertices compatible with v: not v itself and not adjacent to it.
    let compat: Vec<u64> = (0..n)
        .map(|v| {
            let closed = g.adj(v).iter().fold(1u64 << v, |m, &w| m | 1u64 << w);
            all & !closed
        })
        .collect();

    let mut out = Vec::new();
    let mut stack = vec![(0u64, all, 0u64)];
    while let Some((r, mut p, mut x)) = stack.pop() {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            continue;
        }
        let px = p | x;
        let mut pivot = px.trailing_zeros() as usize;
        let mut best = 0;
        let mut rest = px;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let c = (p & compat[u]).count_ones();
            if c >= best {
                best = c;
                pivot = u;
            }
        }
        let mut branch = p & !compat[pivot];
        while branch != 0 {
            let v = branch.trailing_zeros() as usize;
            branch &= branch - 1;
            let bit = 1u64 << v;
            stack.push((r | bit, p & compat[v], x & compat[v]));
            p &= !bit;
            x |= bit;
        }
    }
    out
}

/// Maximal independent sets, sorted lexicographically.
pub fn enumerate_maximal_independent_sets(
    g: &Graph,
    cap: usize,
) -> Result<Vec<VertexSet>, OracleError> {
    check_cap(g, cap)?;
    let mut sets: Vec<VertexSet> = maximal_independent_masks(g)
        .into_iter()
        .map(mask_to_set)
        .collect();
    sets.sort();
    Ok(sets)
}

/// Minimal vertex covers (complements of maximal independent sets), sorted
/// lexicographically as index sequences.
pub fn enumerate_minimal_covers(g: &Graph, cap: usize) -> Result<Vec<VertexSet>, OracleError> {
    check_cap(g, cap)?;
    let n = g.n();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut covers: Vec<VertexSet> = maximal_independent_masks(g)
        .into_iter()
        .map(|a| mask_to_set(all & !a))
        .collect();
    covers.sort();
    Ok(covers)
}

/// Whether all minimal covers have the same size, with the sorted multiset
/// of sizes.
pub fn unmixed_by_definition(g: &Graph, cap: usize) -> Result<(bool, Vec<usize>), OracleError> {
    let mut sizes: Vec<usize> = enumerate_minimal_covers(g, cap)?
        .iter()
        .map(VertexSet::len)
        .collect();
    sizes.sort_unstable();
    let equal = sizes.first() == sizes.last();
    Ok((equal, sizes))
}

pub fn well_covered_by_definition(g: &Graph, cap: usize) -> Result<bool, OracleError> {
    check_cap(g, cap)?;
    let masks = maximal_independent_masks(g);
    let first = masks.first().map(|m| m.count_ones());
    Ok(masks.iter().all(|m| Some(m.count_ones()) == first))
}

/// Size of a smallest minimal cover (the vertex covering number).
pub fn min_cover_size(g: &Graph, cap: usize) -> Result<usize, OracleError> {
    Ok(unmixed_by_definition(g, cap)?.1[0])
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("the {0} cover is not a minimal vertex cover")]
    CoverNotMinimal(&'static str),
    #[error("cover sizes {0} and {1} are not strictly increasing")]
    SizesNotIncreasing(usize, usize),
    #[error("labeling is malformed: {0}")]
    BadLabeling(&'static str),
    #[error("labels ({i}, {j}, {k}) violate the closure condition")]
    ClosureViolated { i: usize, j: usize, k: usize },
    #[error("failing triple does not match the graph")]
    BadTriple,
    #[error("odd cycle does not verify")]
    BadCycle,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Checks a report's certificate against `g` using only definitions: cover
/// minimality, a direct scan of every label triple, and cycle adjacency.
pub fn verify_report(g: &Graph, report: &UnmixedReport) -> Result<(), CertificateError> {
    let minimal = |c: &VertexSet| match is_minimal_vertex_cover(g, c) {
        Ok(b) => Ok(b),
        Err(OracleError::Graph(e)) => Err(CertificateError::Graph(e)),
        Err(OracleError::TooLarge { .. }) => unreachable!("no cap on predicates"),
    };
    match &report.verdict {
        Verdict::Mixed {
            cover_small,
            cover_large,
            reason,
        } => {
            if let MixedReason::ConditionBFails(_, [xi, yj, xj, yk]) = *reason {
                g.check_set(&[xi, yj, xj, yk].into_iter().collect())?;
                if !g.has_edge(xi, yj) || !g.has_edge(xj, yk) || g.has_edge(xi, yk) {
                    return Err(CertificateError::BadTriple);
                }
            }
            if !minimal(cover_small)? {
                return Err(CertificateError::CoverNotMinimal("small"));
            }
            if !minimal(cover_large)? {
                return Err(CertificateError::CoverNotMinimal("large"));
            }
            if cover_small.len() >= cover_large.len() {
                return Err(CertificateError::SizesNotIncreasing(
                    cover_small.len(),
                    cover_large.len(),
                ));
            }
            Ok(())
        }
        Verdict::Unmixed { labeling } => {
            let (x, y) = (&labeling.x, &labeling.y);
            if x.len() != y.len() {
                return Err(CertificateError::BadLabeling("sides differ in length"));
            }
            let xs: VertexSet = x.iter().copied().collect();
            let ys: VertexSet = y.iter().copied().collect();
            g.check_set(&xs)?;
            g.check_set(&ys)?;
            if xs.len() != x.len() || ys.len() != y.len() {
                return Err(CertificateError::BadLabeling("a vertex repeats"));
            }
            let mut side = vec![0u8; g.n()];
            for v in &xs {
                side[v] = 1;
            }
            for v in &ys {
                if side[v] != 0 {
                    return Err(CertificateError::BadLabeling("sides overlap"));
                }
                side[v] = 2;
            }
            for v in 0..g.n() {
                if (side[v] == 0) != (g.degree(v) == 0) {
                    return Err(CertificateError::BadLabeling(
                        "sides do not cover exactly the non-isolated vertices",
                    ));
                }
                if g.adj(v).iter().any(|&w| side[w] == side[v]) {
                    return Err(CertificateError::BadLabeling("an edge stays inside a side"));
                }
            }
            if x.iter().zip(y).any(|(&a, &b)| !g.has_edge(a, b)) {
                return Err(CertificateError::BadLabeling(
                    "a matched pair is not an edge",
                ));
            }
            let size = x.len();
            for i in 0..size {
                for j in 0..size {
                    for k in 0..size {
                        if i != j
                            && j != k
                            && i != k
                            && g.has_edge(x[i], y[j])
                            && g.has_edge(x[j], y[k])
                            && !g.has_edge(x[i], y[k])
                        {
                            return Err(CertificateError::ClosureViolated { i, j, k });
                        }
                    }
                }
            }
            Ok(())
        }
        Verdict::NotBipartite { cycle } => {
            if cycle.verify(g) {
                Ok(())
            } else {
                Err(CertificateError::BadCycle)
            }
        }
    }
}
