//! JSON documents printed by the `check` and `oracle` commands.
//!
//! Vertices are always written by name. Label indices in a failing triple
//! are one-based, matching the `x1..xg` / `y1..yg` naming.

use serde::{Deserialize, Serialize};

use unmixed_core::graph::{Graph, VertexSet};
use unmixed_core::unmixed::{FailingTriple, MatchedLabeling, MixedReason, UnmixedReport, Verdict};
use unmixed_core::OddCycle;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    Unmixed,
    Mixed,
    NotBipartite,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Reason {
    UnequalSides,
    NoPerfectMatching,
    ConditionBFails {
        i: usize,
        j: usize,
        k: usize,
        /// `{x_i, y_j}` and `{x_j, y_k}`.
        edges: [[String; 2]; 2],
        /// The non-edge `{x_i, y_k}`.
        missing_edge: [String; 2],
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    pub size: usize,
    pub vertices: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    Labeling {
        pairs: Vec<[String; 2]>,
    },
    Covers {
        cover_small: Cover,
        cover_large: Cover,
    },
    OddCycle {
        cycle: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub verdict: VerdictKind,
    pub g: Option<usize>,
    pub stripped_isolated: Vec<String>,
    pub reason: Option<Reason>,
    pub certificate: Certificate,
}

fn names(g: &Graph, s: &VertexSet) -> Vec<String> {
    s.iter().map(|v| g.name(v).to_owned()).collect()
}

fn cover(g: &Graph, s: &VertexSet) -> Cover {
    Cover {
        size: s.len(),
        vertices: names(g, s),
    }
}

impl CheckReport {
    pub fn new(g: &Graph, report: &UnmixedReport) -> Self {
        let stripped_isolated = names(g, &report.stripped_isolated);
        let (verdict, reason, certificate) = match &report.verdict {
            Verdict::Unmixed { labeling } => (
                VerdictKind::Unmixed,
                None,
                Certificate::Labeling {
                    pairs: labeling
                        .pairs()
                        .map(|(x, y)| [g.name(x).to_owned(), g.name(y).to_owned()])
                        .collect(),
                },
            ),
            Verdict::Mixed {
                cover_small,
                cover_large,
                reason,
            } => {
                let reason = match *reason {
                    MixedReason::UnequalSides => Reason::UnequalSides,
                    MixedReason::NoPerfectMatching => Reason::NoPerfectMatching,
                    MixedReason::ConditionBFails(t, [xi, yj, xj, yk]) => {
                        let name = |v: usize| g.name(v).to_owned();
                        Reason::ConditionBFails {
                            i: t.i + 1,
                            j: t.j + 1,
                            k: t.k + 1,
                            edges: [[name(xi), name(yj)], [name(xj), name(yk)]],
                            missing_edge: [name(xi), name(yk)],
                        }
                    }
                };
                (
                    VerdictKind::Mixed,
                    Some(reason),
                    Certificate::Covers {
                        cover_small: cover(g, cover_small),
                        cover_large: cover(g, cover_large),
                    },
                )
            }
            Verdict::NotBipartite { cycle } => (
                VerdictKind::NotBipartite,
                None,
                Certificate::OddCycle {
                    cycle: cycle.0.iter().map(|&v| g.name(v).to_owned()).collect(),
                },
            ),
        };
        CheckReport {
            verdict,
            g: report.covering_number,
            stripped_isolated,
            reason,
            certificate,
        }
    }

    /// Rebuilds the in-memory report against `g`, resolving names. Returns
    /// `None` if a name is unknown.
    pub fn resolve(&self, g: &Graph) -> Option<UnmixedReport> {
        let index = |name: &String| g.index_of(name);
        let set = |names: &[String]| -> Option<VertexSet> { names.iter().map(index).collect() };
        let verdict = match &self.certificate {
            Certificate::Labeling { pairs } => Verdict::Unmixed {
                labeling: MatchedLabeling {
                    x: pairs.iter().map(|p| index(&p[0])).collect::<Option<_>>()?,
                    y: pairs.iter().map(|p| index(&p[1])).collect::<Option<_>>()?,
                },
            },
            Certificate::Covers {
                cover_small,
                cover_large,
            } => Verdict::Mixed {
                cover_small: set(&cover_small.vertices)?,
                cover_large: set(&cover_large.vertices)?,
                reason: match self.reason.as_ref()? {
                    Reason::UnequalSides => MixedReason::UnequalSides,
                    Reason::NoPerfectMatching => MixedReason::NoPerfectMatching,
                    Reason::ConditionBFails { i, j, k, edges, .. } => MixedReason::ConditionBFails(
                        FailingTriple {
                            i: i.checked_sub(1)?,
                            j: j.checked_sub(1)?,
                            k: k.checked_sub(1)?,
                        },
                        [
                            index(&edges[0][0])?,
                            index(&edges[0][1])?,
                            index(&edges[1][0])?,
                            index(&edges[1][1])?,
                        ],
                    ),
                },
            },
            Certificate::OddCycle { cycle } => Verdict::NotBipartite {
                cycle: OddCycle(cycle.iter().map(index).collect::<Option<_>>()?),
            },
        };
        Some(UnmixedReport {
            stripped_isolated: set(&self.stripped_isolated)?,
            covering_number: self.g,
            verdict,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub verdict: VerdictKind,
    pub n: usize,
    pub sizes: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub covers: Option<Vec<Vec<String>>>,
}
