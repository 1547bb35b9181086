//! Two-coloring, maximum bipartite matching (Hopcroft–Karp) and the
//! constructive König minimum vertex cover.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BipartiteError {
    #[error("matching is not maximum: an augmenting path starts at vertex {0}")]
    NotMaximum(usize),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
}

/// The two color classes of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side1: VertexSet,
    pub side2: VertexSet,
}

impl Bipartition {
    /// `in_side1[v]` for every vertex of an `n`-vertex graph.
    pub fn side1_mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for v in &self.side1 {
            mask[v] = true;
        }
        mask
    }

    /// Checks disjointness, coverage of all `g.n()` vertices and that every
    /// edge crosses.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.n();
        if !self.side1.is_within(n) || !self.side2.is_within(n) {
            return false;
        }
        if self.side1.len() + self.side2.len() != n {
            return false;
        }
        let mask = self.side1_mask(n);
        if self.side2.iter().any(|v| mask[v]) {
            return false;
        }
        g.edges_sorted()
            .into_iter()
            .all(|(u, v)| mask[u] != mask[v])
    }

    pub fn swapped(&self) -> Bipartition {
        Bipartition {
            side1: self.side2.clone(),
            side2: self.side1.clone(),
        }
    }
}

/// A closed walk of odd length through distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle(pub Vec<usize>);

impl OddCycle {
    pub fn verify(&self, g: &Graph) -> bool {
        let c = &self.0;
        if c.len().is_multiple_of(2) || c.len() < 3 {
            return false;
        }
        let distinct: VertexSet = c.iter().copied().collect();
        distinct.len() == c.len()
            && distinct.is_within(g.n())
            && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
    }
}

/// Canonical 2-coloring. Components are visited in ascending order of their
/// minimum vertex, which goes to `side1`.
pub fn two_color(g: &Graph) -> Result<Bipartition, OddCycle> {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();

    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(true);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for &w in g.adj(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        parent[w] = v;
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cv => {
                        return Err(odd_cycle(v, w, &parent, &depth));
                    }
                    Some(_) => {}
                }
            }
        }
    }

    let side1 = (0..n).filter(|&v| color[v] == Some(true)).collect();
    let side2 = (0..n).filter(|&v| color[v] == Some(false)).collect();
    Ok(Bipartition { side1, side2 })
}

// BFS tree paths from `u` and `w` up to their common ancestor, closed by the
// same-colored edge {u, w}.
fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> OddCycle {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    OddCycle(left)
}

/// A set of pairwise vertex-disjoint edges, stored as a mate array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            mate: vec![None; n],
        }
    }

    /// Builds a matching from pairs; fails if a vertex repeats or a pair is
    /// not an edge of `g`.
    pub fn from_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Result<Self, BipartiteError> {
        let mut m = Matching::empty(g.n());
        for &(u, v) in pairs {
            if !g.has_edge(u, v) {
                return Err(BipartiteError::InvalidMatching(format!(
                    "{{{u}, {v}}} is not an edge"
                )));
            }
            if m.mate[u].is_some() || m.mate[v].is_some() {
                return Err(BipartiteError::InvalidMatching(format!(
                    "pair {{{u}, {v}}} reuses a matched vertex"
                )));
            }
            m.mate[u] = Some(v);
            m.mate[v] = Some(u);
        }
        Ok(m)
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn len(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Pairs `(u, v)` with `u < v`, ascending.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.mate.len() == g.n()
            && self.mate.iter().enumerate().all(|(u, m)| match *m {
                None => true,
                Some(v) => v < g.n() && self.mate[v] == Some(u) && g.has_edge(u, v),
            })
    }
}

/// Maximum matching. Side-1 vertices are processed in ascending index and
/// neighbors in ascending index, so the result is reproducible.
pub fn maximum_matching(g: &Graph, bp: &Bipartition) -> Matching {
    let left: Vec<usize> = bp.side1.iter().collect();
    let nbrs: Vec<Vec<usize>> = (0..g.n()).map(|v| g.adj(v).to_vec()).collect();
    hopcroft_karp(g.n(), &left, &nbrs)
}

/// Maximum matching with side-1 order and neighbor orders shuffled by `rng`.
/// Different seeds tend to reach different maximum matchings.
pub fn maximum_matching_randomized<R: Rng + ?Sized>(
    g: &Graph,
    bp: &Bipartition,
    rng: &mut R,
) -> Matching {
    let mut left: Vec<usize> = bp.side1.iter().collect();
    left.shuffle(rng);
    let mut nbrs: Vec<Vec<usize>> = (0..g.n()).map(|v| g.adj(v).to_vec()).collect();
    for list in &mut nbrs {
        list.shuffle(rng);
    }
    hopcroft_karp(g.n(), &left, &nbrs)
}

const UNREACHED: usize = usize::MAX;

fn hopcroft_karp(n: usize, left: &[usize], nbrs: &[Vec<usize>]) -> Matching {
    let mut mate: Vec<Option<usize>> = vec![None; n];
    let mut dist = vec![UNREACHED; n];
    let mut queue = VecDeque::new();
    // Per-vertex cursor into its neighbor list for the current phase.
    let mut cursor = vec![0usize; n];

    loop {
        // BFS layering from free left vertices.
        queue.clear();
        for &u in left {
            if mate[u].is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = UNREACHED;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &nbrs[u] {
                match mate[v] {
                    None => found = true,
                    Some(w) if dist[w] == UNREACHED => {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            break;
        }

        for &u in left {
            cursor[u] = 0;
        }
        for &u in left {
            if mate[u].is_none() {
                augment(u, nbrs, &mut mate, &mut dist, &mut cursor);
            }
        }
    }
    Matching { mate }
}

// Iterative layered DFS; flips the path on success.
fn augment(
    root: usize,
    nbrs: &[Vec<usize>],
    mate: &mut [Option<usize>],
    dist: &mut [usize],
    cursor: &mut [usize],
) -> bool {
    let mut stack = vec![root];
    // For each stacked left vertex, the right vertex used to descend from it.
    let mut via: Vec<usize> = Vec::new();
    while let Some(&u) = stack.last() {
        let mut descended = false;
        while cursor[u] < nbrs[u].len() {
            let v = nbrs[u][cursor[u]];
            cursor[u] += 1;
            match mate[v] {
                None => {
                    via.push(v);
                    for (&l, &r) in stack.iter().zip(via.iter()) {
                        mate[l] = Some(r);
                        mate[r] = Some(l);
                    }
                    return true;
                }
                Some(w) if dist[w] == dist[u] + 1 => {
                    via.push(v);
                    stack.push(w);
                    descended = true;
                    break;
                }
                Some(_) => {}
            }
        }
        if !descended {
            dist[u] = UNREACHED;
            stack.pop();
            via.pop();
        }
    }
    false
}

/// Minimum vertex cover from a maximum matching by alternating reachability
/// from the unmatched side-1 vertices: `(side1 \ Z) ∪ (side2 ∩ Z)`.
pub fn konig_min_cover(
    g: &Graph,
    bp: &Bipartition,
    m: &Matching,
) -> Result<VertexSet, BipartiteError> {
    if !m.is_valid_for(g) {
        return Err(BipartiteError::InvalidMatching(
            "matching does not belong to this graph".into(),
        ));
    }
    let n = g.n();
    let in_side1 = bp.side1_mask(n);
    let mut reached = vec![false; n];
    let mut queue = VecDeque::new();
    for u in bp.side1.iter() {
        if m.mate(u).is_none() {
            reached[u] = true;
            queue.push_back(u);
        }
    }
    while let Some(u) = queue.pop_front() {
        debug_assert!(in_side1[u]);
        for &v in g.adj(u) {
            if reached[v] || m.mate(u) == Some(v) {
                continue;
            }
            reached[v] = true;
            match m.mate(v) {
                None => return Err(BipartiteError::NotMaximum(u)),
                Some(w) => {
                    if !reached[w] {
                        reached[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    Ok((0..n).filter(|&v| in_side1[v] != reached[v]).collect())
}
