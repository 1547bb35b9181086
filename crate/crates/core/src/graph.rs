//! Finite simple undirected graphs with named vertices.
//!
//! Vertex names are opaque strings; internally every vertex is a dense index
//! `0..n` assigned in first-appearance order. A [`Graph`] is immutable once
//! built.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt::{self, Write as _};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("line {0}: expected one or two vertex names")]
    MalformedLine(usize),
    #[error("unknown vertex index {0}")]
    UnknownVertex(usize),
}

/// A sorted, duplicate-free set of vertex indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds a set from already sorted, duplicate-free indices.
    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        VertexSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Every index is `< n`.
    pub fn is_within(&self, n: usize) -> bool {
        self.0.last().is_none_or(|&v| v < n)
    }

    /// `{0..n} \ self`.
    pub fn complement(&self, n: usize) -> VertexSet {
        (0..n).filter(|&v| !self.contains(v)).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

#[inline]
fn edge_key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Incrementally assembles a [`Graph`]. Vertices get indices in the order
/// they are first mentioned; repeated edges collapse.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    names: Vec<String>,
    index: HashMap<String, usize>,
    edges: HashSet<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns the index of `name`, declaring it if needed.
    pub fn vertex(&mut self, name: &str) -> usize {
        if let Some(&i) = self.index.get(name) {
            return i;
        }
        let i = self.names.len();
        self.names.push(name.to_owned());
        self.index.insert(name.to_owned(), i);
        i
    }

    pub fn edge(&mut self, a: &str, b: &str) -> Result<(), GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop(a.to_owned()));
        }
        let u = self.vertex(a);
        let v = self.vertex(b);
        self.edges.insert(edge_key(u, v));
        Ok(())
    }

    /// Adds an edge between already declared vertices.
    pub fn edge_by_index(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.names.len();
        if u >= n {
            return Err(GraphError::UnknownVertex(u));
        }
        if v >= n {
            return Err(GraphError::UnknownVertex(v));
        }
        if u == v {
            return Err(GraphError::SelfLoop(self.names[u].clone()));
        }
        self.edges.insert(edge_key(u, v));
        Ok(())
    }

    pub fn build(self) -> Graph {
        let n = self.names.len();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            names: self.names,
            index: self.index,
            adj,
            edges: self.edges,
        }
    }
}

/// A finite simple undirected graph.
///
/// Neighbor lists are kept sorted; edge membership is an O(1) expected hash
/// lookup.
#[derive(Debug, Clone)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    edges: HashSet<(usize, usize)>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn empty() -> Self {
        GraphBuilder::new().build()
    }

    /// Parses the edge-list text format.
    ///
    /// Each line holds one name (an isolated vertex declaration) or two names
    /// (an edge). `#` starts a comment that runs to the end of the line.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::new();
        for (lineno, line) in text.lines().enumerate() {
            let content = match line.find('#') {
                Some(p) => &line[..p],
                None => line,
            };
            let mut tokens = content.split_whitespace();
            match (tokens.next(), tokens.next(), tokens.next()) {
                (None, _, _) => {}
                (Some(a), None, _) => {
                    b.vertex(a);
                }
                (Some(a), Some(c), None) => b.edge(a, c)?,
                (Some(_), Some(_), Some(_)) => return Err(GraphError::MalformedLine(lineno + 1)),
            }
        }
        Ok(b.build())
    }

    /// Writes the graph in the edge-list format such that re-parsing the
    /// output reproduces the same name-to-index mapping.
    ///
    /// Edges are written in ascending `(min, max)` index order. A vertex is
    /// declared on its own line only when an edge line would otherwise
    /// introduce it out of order, or when it is isolated.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let mut seen = vec![false; self.n()];
        let mut next = 0;
        for (u, v) in self.edges_sorted() {
            // Every index below `next` has already appeared.
            let high = if seen[v] { u } else { v };
            let pending: Vec<usize> = (next..high).filter(|&w| !seen[w]).collect();
            // The line itself can introduce `u` before `v` only if nothing
            // else pending sits between them.
            let inline_u = high == v && !seen[u] && pending.last().is_none_or(|&w| w == u);
            for w in pending {
                if inline_u && w == u {
                    continue;
                }
                seen[w] = true;
                out.push_str(&self.names[w]);
                out.push('\n');
            }
            next = next.max(high);
            seen[u] = true;
            seen[v] = true;
            let _ = writeln!(out, "{} {}", self.names[u], self.names[v]);
        }
        for (v, name) in self.names.iter().enumerate() {
            if !seen[v] {
                out.push_str(name);
                out.push('\n');
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Sorted neighbor list of `v`. Panics if `v` is out of range.
    pub fn adj(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check(v)?;
        Ok(VertexSet::from_sorted(self.adj[v].clone()))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&edge_key(u, v))
    }

    /// All edges as `(u, v)` with `u < v`, in ascending order.
    pub fn edges_sorted(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<_> = self.edges.iter().copied().collect();
        e.sort_unstable();
        e
    }

    pub fn check(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.iter().find(|&v| v >= self.n()) {
            Some(v) => Err(GraphError::UnknownVertex(v)),
            None => Ok(()),
        }
    }

    /// Subgraph induced by `s`. Vertex `s[i]` becomes index `i`; names are
    /// kept.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        self.check_set(s)?;
        let mut b = GraphBuilder::new();
        let mut new_index = vec![usize::MAX; self.n()];
        for (i, v) in s.iter().enumerate() {
            b.vertex(&self.names[v]);
            new_index[v] = i;
        }
        for v in s.iter() {
            for &w in &self.adj[v] {
                if v < w && new_index[w] != usize::MAX {
                    b.edges.insert((new_index[v], new_index[w]));
                }
            }
        }
        Ok(b.build())
    }

    pub fn isolated(&self) -> VertexSet {
        VertexSet::from_sorted((0..self.n()).filter(|&v| self.adj[v].is_empty()).collect())
    }

    /// Removes degree-0 vertices. Returns the remaining graph and the removed
    /// vertices (as indices of `self`).
    pub fn strip_isolated(&self) -> (Graph, VertexSet) {
        let removed = self.isolated();
        if removed.is_empty() {
            return (self.clone(), removed);
        }
        let kept = removed.complement(self.n());
        let g = self
            .induced_subgraph(&kept)
            .expect("kept vertices are in range");
        (g, removed)
    }

    /// Connected components, each sorted, ordered by their minimum vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..self.n() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            queue.push_back(s);
            let mut members = vec![s];
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            out.push(members.into_iter().collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() > 0 && self.edge_count() + 1 == self.n() && self.is_connected()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}
