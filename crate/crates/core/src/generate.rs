//! Graph generators: unmixed bipartite graphs from preorders, plus seeded
//! random bipartite graphs and uniform random labeled trees.
//!
//! A labeled bipartite graph with matched pairs `(x_i, y_i)` is read as the
//! relation `rel[i][j] ⟺ x_i ~ y_j`. Matched pairs make the relation
//! reflexive, and the closure condition on distinct triples makes it
//! transitive (the `i = k` case is covered by reflexivity), so unmixed
//! bipartite graphs correspond exactly to preorders.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bits::BitMatrix;
use crate::graph::{Graph, GraphBuilder};
use crate::unmixed::MatchedLabeling;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenerateError {
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not transitive: {i}→{j}, {j}→{k} but not {i}→{k}")]
    NotTransitive { i: usize, j: usize, k: usize },
    #[error("probability {0} is outside [0, 1]")]
    BadProbability(f64),
}

/// A binary relation on `0..g`, intended to be a preorder.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PreorderRelation {
    rel: BitMatrix,
}

impl PreorderRelation {
    /// Wraps a matrix without checking the preorder axioms;
    /// [`from_preorder`] checks them.
    pub fn from_matrix(rel: BitMatrix) -> Self {
        PreorderRelation { rel }
    }

    pub fn identity(g: usize) -> Self {
        Self::from_matrix(BitMatrix::identity(g))
    }

    pub fn full(g: usize) -> Self {
        Self::from_matrix(BitMatrix::full(g))
    }

    /// `i ≤ j`.
    pub fn total_order(g: usize) -> Self {
        let mut m = BitMatrix::new(g);
        for i in 0..g {
            for j in i..g {
                m.set(i, j, true);
            }
        }
        Self::from_matrix(m)
    }

    pub fn g(&self) -> usize {
        self.rel.size()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rel.get(i, j)
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.rel
    }

    pub fn pair_count(&self) -> usize {
        self.rel.count_ones()
    }

    /// Transitive closure (reflexivity is left as is).
    pub fn closed(&self) -> Self {
        let mut m = self.rel.clone();
        m.transitive_closure();
        Self::from_matrix(m)
    }

    pub fn validate(&self) -> Result<(), GenerateError> {
        if let Some(i) = (0..self.g()).find(|&i| !self.get(i, i)) {
            return Err(GenerateError::NotReflexive(i));
        }
        match self.rel.first_intransitive() {
            Some((i, j, k)) => Err(GenerateError::NotTransitive { i, j, k }),
            None => Ok(()),
        }
    }

    /// Relation matrix of a labeled bipartite graph: `rel[i][j] ⟺ x_i ~ y_j`.
    pub fn of_labeling(g: &Graph, lab: &MatchedLabeling) -> Self {
        let size = lab.g();
        let mut m = BitMatrix::new(size);
        for i in 0..size {
            for j in 0..size {
                if g.has_edge(lab.x[i], lab.y[j]) {
                    m.set(i, j, true);
                }
            }
        }
        Self::from_matrix(m)
    }
}

/// Vertex names used by [`from_preorder`] for label `i` (zero-based).
pub fn x_name(i: usize) -> String {
    format!("x{}", i + 1)
}

pub fn y_name(i: usize) -> String {
    format!("y{}", i + 1)
}

/// Builds the bipartite graph of a preorder on vertices `x1..xg, y1..yg`
/// (declared in that order), with `x_i ~ y_j` exactly when `rel[i][j]`.
pub fn from_preorder(r: &PreorderRelation) -> Result<(Graph, MatchedLabeling), GenerateError> {
    r.validate()?;
    let size = r.g();
    let mut b = GraphBuilder::new();
    for i in 0..size {
        b.vertex(&x_name(i));
    }
    for i in 0..size {
        b.vertex(&y_name(i));
    }
    for i in 0..size {
        for j in r.matrix().row_ones(i) {
            b.edge_by_index(i, size + j)
                .expect("indices declared above");
        }
    }
    let labeling = MatchedLabeling {
        x: (0..size).collect(),
        y: (size..2 * size).collect(),
    };
    Ok((b.build(), labeling))
}

fn check_probability(p: f64) -> Result<(), GenerateError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenerateError::BadProbability(p))
    }
}

/// Identity plus each off-diagonal pair independently with probability `p`
/// (row-major order), then transitively closed.
pub fn random_preorder(g: usize, p: f64, seed: u64) -> Result<PreorderRelation, GenerateError> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = BitMatrix::identity(g);
    for i in 0..g {
        for j in 0..g {
            if i != j && rng.gen_bool(p) {
                m.set(i, j, true);
            }
        }
    }
    m.transitive_closure();
    Ok(PreorderRelation::from_matrix(m))
}

/// Random bipartite graph on `a1..a{n1}` and `b1..b{n2}`; each cross pair is
/// an edge independently with probability `p`.
pub fn random_bipartite(n1: usize, n2: usize, p: f64, seed: u64) -> Result<Graph, GenerateError> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new();
    for i in 0..n1 {
        b.vertex(&format!("a{}", i + 1));
    }
    for j in 0..n2 {
        b.vertex(&format!("b{}", j + 1));
    }
    for i in 0..n1 {
        for j in 0..n2 {
            if rng.gen_bool(p) {
                b.edge_by_index(i, n1 + j).expect("indices declared above");
            }
        }
    }
    Ok(b.build())
}

/// Uniform random labeled tree on vertices `1..=n`, decoded from a uniform
/// Prüfer sequence.
///
/// Panics if `n == 0`.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "a tree needs at least one vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new();
    for v in 0..n {
        b.vertex(&(v + 1).to_string());
    }
    if n == 2 {
        b.edge_by_index(0, 1).unwrap();
    }
    if n <= 2 {
        return b.build();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    for (u, v) in prufer_decode(n, &code) {
        b.edge_by_index(u, v).unwrap();
    }
    b.build()
}

/// Linear-time Prüfer decoding.
fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &v in code {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&v| degree[v] == 1).unwrap();
    let mut leaf = ptr;
    for &v in code {
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 && v < ptr {
            leaf = v;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{unmixed_by_definition, DEFAULT_CAP};
    use crate::unmixed::{check_condition_b, decide_unmixed};
    use std::collections::HashMap;

    #[test]
    fn preorder_examples() {
        let (g, lab) = from_preorder(&PreorderRelation::identity(3)).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.components().len(), 3);
        assert_eq!(check_condition_b(&g, &lab), Ok(()));

        let (g, _) = from_preorder(&PreorderRelation::full(3)).unwrap();
        assert_eq!(g.edge_count(), 9);

        let (g, lab) = from_preorder(&PreorderRelation::total_order(3)).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(decide_unmixed(&g).is_unmixed());
        assert_eq!(
            unmixed_by_definition(&g, DEFAULT_CAP).unwrap(),
            (true, vec![3; 4])
        );
        assert_eq!(
            PreorderRelation::of_labeling(&g, &lab),
            PreorderRelation::total_order(3)
        );
    }

    #[test]
    fn preorder_rejections() {
        let mut m = BitMatrix::identity(3);
        m.set(1, 1, false);
        assert_eq!(
            from_preorder(&PreorderRelation::from_matrix(m)).unwrap_err(),
            GenerateError::NotReflexive(1)
        );
        let mut m = BitMatrix::identity(3);
        m.set(0, 1, true);
        m.set(1, 2, true);
        assert_eq!(
            from_preorder(&PreorderRelation::from_matrix(m)).unwrap_err(),
            GenerateError::NotTransitive { i: 0, j: 1, k: 2 }
        );
    }

    #[test]
    fn random_preorder_examples() {
        assert_eq!(
            random_preorder(5, 0.0, 1).unwrap(),
            PreorderRelation::identity(5)
        );
        assert_eq!(
            random_preorder(5, 1.0, 1).unwrap(),
            PreorderRelation::full(5)
        );
        assert_eq!(
            random_preorder(12, 0.1, 42).unwrap(),
            random_preorder(12, 0.1, 42).unwrap()
        );
        assert!(random_preorder(4, 1.5, 0).is_err());
        for seed in 0..50 {
            random_preorder(9, 0.15, seed).unwrap().validate().unwrap();
        }
    }

    /// Closure is idempotent, and every added pair is forced by a chain in
    /// the original relation (checked by plain graph search).
    #[test]
    fn closure_is_minimal() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let g = rng.gen_range(1..10);
            let mut m = BitMatrix::identity(g);
            for i in 0..g {
                for j in 0..g {
                    if rng.gen_bool(0.15) {
                        m.set(i, j, true);
                    }
                }
            }
            let base = PreorderRelation::from_matrix(m);
            let once = base.closed();
            assert_eq!(once.closed(), once);
            for i in 0..g {
                // DFS reachability from i in the base relation.
                let mut seen = vec![false; g];
                let mut stack = vec![i];
                seen[i] = true;
                while let Some(u) = stack.pop() {
                    for (w, s) in seen.iter_mut().enumerate() {
                        if !*s && base.get(u, w) {
                            *s = true;
                            stack.push(w);
                        }
                    }
                }
                for (k, &reached) in seen.iter().enumerate() {
                    assert_eq!(once.get(i, k), reached, "{i} {k}");
                }
            }
        }
    }

    #[test]
    fn random_bipartite_examples() {
        let g = random_bipartite(2, 2, 1.0, 9).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(
            g,
            Graph::parse_edge_list("a1\na2\nb1\nb2\na1 b1\na1 b2\na2 b1\na2 b2").unwrap()
        );
        let g = random_bipartite(3, 3, 0.0, 9).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 0));
        assert_eq!(
            random_bipartite(5, 4, 0.5, 77).unwrap(),
            random_bipartite(5, 4, 0.5, 77).unwrap()
        );
    }

    #[test]
    fn random_tree_shapes() {
        let g = random_tree(1, 0);
        assert_eq!((g.n(), g.edge_count()), (1, 0));
        let g = random_tree(2, 0);
        assert_eq!((g.n(), g.edge_count()), (2, 1));
        for n in 1..40 {
            for seed in 0..5 {
                let t = random_tree(n, seed);
                assert_eq!(t.edge_count(), n - 1);
                assert!(t.is_tree());
            }
        }
    }

    /// Cayley: 4^2 = 16 labeled trees on 4 vertices; each should appear with
    /// frequency near 1/16.
    #[test]
    fn random_tree_is_uniform_on_four_vertices() {
        let samples = 32_000;
        let mut counts: HashMap<Vec<(usize, usize)>, usize> = HashMap::new();
        for seed in 0..samples {
            *counts
                .entry(random_tree(4, seed).edges_sorted())
                .or_default() += 1;
        }
        assert_eq!(counts.len(), 16);
        let expected = samples as f64 / 16.0;
        // Chi-square with 15 degrees of freedom; 0.999 quantile is ~37.7.
        let chi2: f64 = counts
            .values()
            .map(|&c| (c as f64 - expected).powi(2) / expected)
            .sum();
        assert!(chi2 < 37.7, "chi2 = {chi2}");
    }
}
