#![allow(dead_code)]

use unmixed_core::bipartite::two_color;
use unmixed_core::generate::PreorderRelation;
use unmixed_core::graph::{Graph, GraphBuilder};
use unmixed_core::oracle::verify_report;
use unmixed_core::unmixed::UnmixedReport;

/// Verifies a report's certificate against `g` with oracle predicates only.
pub fn certificate_sound(g: &Graph, report: &UnmixedReport) -> Result<(), String> {
    verify_report(g, report).map_err(|e| e.to_string())
}

/// `x1..x{g}`, `y1..y{g}` declared first, then the given edges as
/// `(i, j)` meaning `x_i ~ y_j`.
pub fn labeled_bipartite(size: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let mut b = GraphBuilder::new();
    for i in 0..size {
        b.vertex(&format!("x{}", i + 1));
    }
    for i in 0..size {
        b.vertex(&format!("y{}", i + 1));
    }
    for (i, j) in edges {
        b.edge_by_index(i, size + j).unwrap();
    }
    b.build()
}

/// All graphs on the 9 possible edges of K_{3,3}.
pub fn k33_subgraphs() -> Vec<Graph> {
    (0u32..512)
        .map(|mask| {
            labeled_bipartite(
                3,
                (0..9)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| (b / 3, b % 3)),
            )
        })
        .collect()
}

pub fn is_bipartite(g: &Graph) -> bool {
    two_color(g).is_ok()
}

pub fn relation_key(r: &PreorderRelation) -> Vec<bool> {
    let g = r.g();
    (0..g * g).map(|t| r.get(t / g, t % g)).collect()
}
