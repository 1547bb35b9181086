//! Recognition of unmixed bipartite graphs.
//!
//! A graph is *unmixed* when all of its minimal vertex covers have the same
//! size (equivalently, it is well covered: all maximal independent sets have
//! the same size). For bipartite graphs this is decidable in polynomial time
//! through a perfect matching and a transitivity-like closure condition on
//! the matched labels; see [`unmixed::decide_unmixed`].
//!
//! Modules:
//! - [`graph`]: simple graphs, edge-list parsing, induced subgraphs.
//! - [`bipartite`]: 2-coloring, Hopcroft–Karp matching, König covers.
//! - [`unmixed`]: the decision procedure and its certificates.
//! - [`oracle`]: exponential brute force from the definitions.
//! - [`generate`]: preorder-based and random generators.

pub mod bipartite;
pub mod bits;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod unmixed;

pub use bipartite::{Bipartition, Matching, OddCycle};
pub use graph::{Graph, GraphBuilder, GraphError, VertexSet};
pub use unmixed::{decide_unmixed, MatchedLabeling, MixedReason, UnmixedReport, Verdict};
