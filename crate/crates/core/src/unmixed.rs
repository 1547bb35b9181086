//! Deciding whether a bipartite graph is unmixed, with certificates.
//!
//! A bipartite graph without isolated vertices is unmixed exactly when its
//! two sides can be labeled `x_1..x_g`, `y_1..y_g` so that every `x_i y_i` is
//! an edge and, for pairwise distinct `i, j, k`, edges `x_i y_j` and `x_j y_k`
//! force the edge `x_i y_k`. [`decide_unmixed`] checks this in polynomial
//! time and backs every verdict with something an independent checker can
//! verify: the labeling itself, or two minimal vertex covers of different
//! sizes, or an odd cycle.

use thiserror::Error;

use crate::bipartite::{
    konig_min_cover, maximum_matching, two_color, Bipartition, Matching, OddCycle,
};
use crate::bits::BitMatrix;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UnmixedError {
    #[error("matching is not perfect: vertex {0} is unmatched")]
    NotPerfect(usize),
    #[error("triple ({i}, {j}, {k}) does not witness a failure of the closure condition")]
    InvalidTriple { i: usize, j: usize, k: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("tree has {0} vertices; at least 3 are required")]
    TooSmall(usize),
}

/// Matched pairs `(x[i], y[i])`, each an edge. `x` lists side 1, `y` side 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchedLabeling {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl MatchedLabeling {
    pub fn g(&self) -> usize {
        self.x.len()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.x.iter().copied().zip(self.y.iter().copied())
    }

    /// Checks the labeling invariants against `g` and `bp`.
    pub fn is_valid_for(&self, g: &Graph, bp: &Bipartition) -> bool {
        let xs: VertexSet = self.x.iter().copied().collect();
        let ys: VertexSet = self.y.iter().copied().collect();
        self.x.len() == self.y.len()
            && xs.len() == self.x.len()
            && ys.len() == self.y.len()
            && xs == bp.side1
            && ys == bp.side2
            && self.pairs().all(|(a, b)| g.has_edge(a, b))
    }

    /// Side-2 label index of each vertex (`usize::MAX` elsewhere).
    fn y_positions(&self, n: usize) -> Vec<usize> {
        let mut pos = vec![usize::MAX; n];
        for (k, &v) in self.y.iter().enumerate() {
            pos[v] = k;
        }
        pos
    }

    fn x_positions(&self, n: usize) -> Vec<usize> {
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.x.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Zero-based label indices `i, j, k` with `x_i y_j` and `x_j y_k` edges but
/// `x_i y_k` missing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FailingTriple {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl FailingTriple {
    pub fn holds_in(&self, g: &Graph, lab: &MatchedLabeling) -> bool {
        let FailingTriple { i, j, k } = *self;
        let gg = lab.g();
        i < gg
            && j < gg
            && k < gg
            && i != j
            && j != k
            && i != k
            && g.has_edge(lab.x[i], lab.y[j])
            && g.has_edge(lab.x[j], lab.y[k])
            && !g.has_edge(lab.x[i], lab.y[k])
    }
}

/// Why a graph is mixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixedReason {
    UnequalSides,
    NoPerfectMatching,
    /// The triple, plus its vertices `[x_i, y_j, x_j, y_k]`.
    ConditionBFails(FailingTriple, [usize; 4]),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Unmixed {
        labeling: MatchedLabeling,
    },
    Mixed {
        cover_small: VertexSet,
        cover_large: VertexSet,
        reason: MixedReason,
    },
    NotBipartite {
        cycle: OddCycle,
    },
}

/// Outcome of [`decide_unmixed`]. All vertex indices refer to the input
/// graph, not to the graph with isolated vertices removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnmixedReport {
    pub stripped_isolated: VertexSet,
    /// Vertex covering number of the input: the common cover size when
    /// unmixed, the size of a minimum cover when mixed. `None` when the
    /// graph is not bipartite.
    pub covering_number: Option<usize>,
    pub verdict: Verdict,
}

impl UnmixedReport {
    pub fn is_unmixed(&self) -> bool {
        matches!(self.verdict, Verdict::Unmixed { .. })
    }

    pub fn is_mixed(&self) -> bool {
        matches!(self.verdict, Verdict::Mixed { .. })
    }
}

/// Labels side 1 in ascending index order, pairing each `x_i` with its mate.
pub fn build_labeling(
    g: &Graph,
    bp: &Bipartition,
    m: &Matching,
) -> Result<MatchedLabeling, UnmixedError> {
    if let Some(v) = (0..g.n()).find(|&v| m.mate(v).is_none()) {
        return Err(UnmixedError::NotPerfect(v));
    }
    let x: Vec<usize> = bp.side1.iter().collect();
    let y = x.iter().map(|&v| m.mate(v).unwrap()).collect();
    Ok(MatchedLabeling { x, y })
}

// Beyond this many labels the dense label matrix is skipped in favor of the
// graph's hashed edge set.
const DENSE_LABEL_LIMIT: usize = 1 << 13;

/// Runs the closure-condition scan and also returns how many adjacency
/// tests it performed.
///
/// For each pivot `j` ascending, `i` ranges over the labels of `N(y_j)` and
/// `k` over the labels of `N(x_j)`, both ascending; the first failing triple
/// in that order is returned.
pub fn check_condition_b_counted(
    g: &Graph,
    lab: &MatchedLabeling,
) -> (Result<(), FailingTriple>, u64) {
    let size = lab.g();
    if size <= DENSE_LABEL_LIMIT {
        let ypos = lab.y_positions(g.n());
        let mut m = BitMatrix::new(size);
        for (i, &x) in lab.x.iter().enumerate() {
            for &w in g.adj(x) {
                if ypos[w] != usize::MAX {
                    m.set(i, ypos[w], true);
                }
            }
        }
        scan(g, lab, |i| {
            let row = m.row(i);
            move |k: usize| row[k / 64] >> (k % 64) & 1 == 1
        })
    } else {
        scan(g, lab, |i| move |k: usize| g.has_edge(lab.x[i], lab.y[k]))
    }
}

// `row_of(i)` yields the membership test `k ↦ x_i ~ y_k`.
fn scan<'a, R: Fn(usize) -> bool + 'a>(
    g: &Graph,
    lab: &MatchedLabeling,
    row_of: impl Fn(usize) -> R,
) -> (Result<(), FailingTriple>, u64) {
    let n = g.n();
    let xpos = lab.x_positions(n);
    let ypos = lab.y_positions(n);
    let label_list = |v: usize, pos: &[usize], out: &mut Vec<usize>| {
        out.clear();
        out.extend(
            g.adj(v)
                .iter()
                .map(|&w| pos[w])
                .filter(|&p| p != usize::MAX),
        );
        out.sort_unstable();
    };

    // into: labels i with x_i ~ y_j.  out: labels k with x_j ~ y_k.
    let (mut into, mut out) = (Vec::new(), Vec::new());
    let mut tests = 0u64;
    for j in 0..lab.g() {
        label_list(lab.y[j], &xpos, &mut into);
        label_list(lab.x[j], &ypos, &mut out);
        out.retain(|&k| k != j);
        for &i in &into {
            if i == j {
                continue;
            }
            let adjacent = row_of(i);
            // `out` without `i`, as two runs.
            let split = out.partition_point(|&k| k < i);
            let skip = usize::from(out.get(split) == Some(&i));
            for run in [&out[..split], &out[split + skip..]] {
                if let Some(pos) = run.iter().position(|&k| !adjacent(k)) {
                    tests += pos as u64 + 1;
                    return (Err(FailingTriple { i, j, k: run[pos] }), tests);
                }
                tests += run.len() as u64;
            }
        }
    }
    (Ok(()), tests)
}

pub fn check_condition_b(g: &Graph, lab: &MatchedLabeling) -> Result<(), FailingTriple> {
    check_condition_b_counted(g, lab).0
}

/// Predicted work of the scan: `Σ_j deg(x_j)·deg(y_j)`.
pub fn condition_b_cost_bound(g: &Graph, lab: &MatchedLabeling) -> u64 {
    lab.pairs()
        .map(|(x, y)| g.degree(x) as u64 * g.degree(y) as u64)
        .sum()
}

/// Extends `{x_i, y_k}` greedily (ascending vertex index) to a maximal
/// independent set `A` and returns `V \ A`, a minimal cover containing both
/// `x_j` and `y_j`, hence of size at least `g + 1`.
pub fn mixed_witness_from_triple(
    g: &Graph,
    lab: &MatchedLabeling,
    t: FailingTriple,
) -> Result<VertexSet, UnmixedError> {
    if !t.holds_in(g, lab) {
        return Err(UnmixedError::InvalidTriple {
            i: t.i,
            j: t.j,
            k: t.k,
        });
    }
    let n = g.n();
    let mut in_a = vec![false; n];
    let mut blocked = vec![false; n];
    let seeds = [lab.x[t.i], lab.y[t.k]];
    for v in seeds.into_iter().chain(0..n) {
        if in_a[v] || blocked[v] {
            continue;
        }
        in_a[v] = true;
        for &w in g.adj(v) {
            blocked[w] = true;
        }
    }
    Ok((0..n).filter(|&v| !in_a[v]).collect())
}

/// Ravindra's neighborhood test: for every matched edge `{x, y}`, each
/// neighbor of `y` must be adjacent to each neighbor of `x`. Returns the
/// first failing matched edge as `(x, y)` with `x` on side 1, ascending by
/// `x`.
pub fn check_ravindra(
    g: &Graph,
    bp: &Bipartition,
    m: &Matching,
) -> Result<Option<(usize, usize)>, UnmixedError> {
    if let Some(v) = (0..g.n()).find(|&v| m.mate(v).is_none()) {
        return Err(UnmixedError::NotPerfect(v));
    }
    for x in bp.side1.iter() {
        let y = m.mate(x).unwrap();
        let complete = g
            .adj(y)
            .iter()
            .all(|&u| g.adj(x).iter().all(|&v| g.has_edge(u, v)));
        if !complete {
            return Ok(Some((x, y)));
        }
    }
    Ok(None)
}

/// Tree specialization: a tree on at least three vertices is unmixed iff it
/// has a perfect matching in which every pair contains a leaf.
pub fn check_tree_corollary(g: &Graph) -> Result<bool, UnmixedError> {
    if !g.is_tree() {
        return Err(UnmixedError::NotATree);
    }
    if g.n() < 3 {
        return Err(UnmixedError::TooSmall(g.n()));
    }
    let bp = two_color(g).expect("trees are bipartite");
    let m = maximum_matching(g, &bp);
    if !m.is_perfect() {
        return Ok(false);
    }
    Ok(m.pairs()
        .into_iter()
        .all(|(a, b)| g.degree(a).min(g.degree(b)) == 1))
}

/// Decides unmixedness of an arbitrary graph, stripping isolated vertices
/// first and using the canonical 2-coloring.
pub fn decide_unmixed(g: &Graph) -> UnmixedReport {
    let (core, removed) = g.strip_isolated();
    let kept = removed.complement(g.n());
    let (verdict, covering_number) = match two_color(&core) {
        Err(cycle) => (Verdict::NotBipartite { cycle }, None),
        Ok(bp) => {
            let (v, nu) = decide_bipartite(&core, &bp);
            (v, Some(nu))
        }
    };
    lift_report(&core, &kept, removed, verdict, covering_number)
}

/// As [`decide_unmixed`], but with a caller-supplied bipartition of `g`.
/// Isolated vertices are dropped from it before deciding.
///
/// Panics if `bp` is not a valid bipartition of `g`.
pub fn decide_with_bipartition(g: &Graph, bp: &Bipartition) -> UnmixedReport {
    assert!(bp.is_valid_for(g), "bipartition does not fit the graph");
    let (core, removed) = g.strip_isolated();
    let kept = removed.complement(g.n());
    let mut new_index = vec![usize::MAX; g.n()];
    for (i, v) in kept.iter().enumerate() {
        new_index[v] = i;
    }
    let restrict = |s: &VertexSet| -> VertexSet {
        s.iter()
            .map(|v| new_index[v])
            .filter(|&v| v != usize::MAX)
            .collect()
    };
    let core_bp = Bipartition {
        side1: restrict(&bp.side1),
        side2: restrict(&bp.side2),
    };
    let (verdict, nu) = decide_bipartite(&core, &core_bp);
    lift_report(&core, &kept, removed, verdict, Some(nu))
}

// `g` has no isolated vertices and `bp` is a valid bipartition of it.
// Also returns the maximum matching size.
fn decide_bipartite(g: &Graph, bp: &Bipartition) -> (Verdict, usize) {
    let m = maximum_matching(g, bp);
    (decide_with_matching(g, bp, &m), m.len())
}

fn decide_with_matching(g: &Graph, bp: &Bipartition, m: &Matching) -> Verdict {
    if g.n() == 0 {
        return Verdict::Unmixed {
            labeling: MatchedLabeling {
                x: Vec::new(),
                y: Vec::new(),
            },
        };
    }
    // With no isolated vertices both sides are minimal covers.
    if bp.side1.len() != bp.side2.len() {
        let (small, large) = if bp.side1.len() < bp.side2.len() {
            (&bp.side1, &bp.side2)
        } else {
            (&bp.side2, &bp.side1)
        };
        return Verdict::Mixed {
            cover_small: small.clone(),
            cover_large: large.clone(),
            reason: MixedReason::UnequalSides,
        };
    }
    if m.len() < bp.side1.len() {
        let cover = konig_min_cover(g, bp, m).expect("matching is maximum");
        return Verdict::Mixed {
            cover_small: cover,
            cover_large: bp.side1.clone(),
            reason: MixedReason::NoPerfectMatching,
        };
    }
    let labeling = build_labeling(g, bp, m).expect("matching is perfect");
    match check_condition_b(g, &labeling) {
        Ok(()) => Verdict::Unmixed { labeling },
        Err(t) => {
            let witness = mixed_witness_from_triple(g, &labeling, t).expect("triple fails");
            Verdict::Mixed {
                cover_small: bp.side1.clone(),
                cover_large: witness,
                reason: MixedReason::ConditionBFails(
                    t,
                    [
                        labeling.x[t.i],
                        labeling.y[t.j],
                        labeling.x[t.j],
                        labeling.y[t.k],
                    ],
                ),
            }
        }
    }
}

// Maps a verdict on the stripped graph back to indices of the input graph.
fn lift_report(
    core: &Graph,
    kept: &VertexSet,
    removed: VertexSet,
    verdict: Verdict,
    covering_number: Option<usize>,
) -> UnmixedReport {
    let map = kept.as_slice();
    debug_assert_eq!(map.len(), core.n());
    let lift = |s: &VertexSet| -> VertexSet { s.iter().map(|v| map[v]).collect() };
    let verdict = match verdict {
        Verdict::Unmixed { labeling } => Verdict::Unmixed {
            labeling: MatchedLabeling {
                x: labeling.x.iter().map(|&v| map[v]).collect(),
                y: labeling.y.iter().map(|&v| map[v]).collect(),
            },
        },
        Verdict::Mixed {
            cover_small,
            cover_large,
            reason,
        } => Verdict::Mixed {
            cover_small: lift(&cover_small),
            cover_large: lift(&cover_large),
            reason: match reason {
                MixedReason::ConditionBFails(t, vs) => {
                    MixedReason::ConditionBFails(t, vs.map(|v| map[v]))
                }
                r => r,
            },
        },
        Verdict::NotBipartite { cycle } => Verdict::NotBipartite {
            cycle: OddCycle(cycle.0.iter().map(|&v| map[v]).collect()),
        },
    };
    UnmixedReport {
        stripped_isolated: removed,
        covering_number,
        verdict,
    }
}
