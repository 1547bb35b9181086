//! `check`, `oracle` and `generate`.

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use serde::Serialize;
use unmixed_core::generate::{from_preorder, random_bipartite, random_preorder, random_tree};
use unmixed_core::oracle::{enumerate_minimal_covers, DEFAULT_CAP, MAX_CAP};
use unmixed_core::{decide_unmixed, Graph, Verdict};

use crate::report::{CheckReport, OracleReport, VerdictKind};
use crate::{CliError, EXIT_MIXED, EXIT_UNMIXED};

/// Reads and parses an edge list; `-` is standard input.
pub fn read_graph(path: &str) -> Result<Graph, CliError> {
    let shown = if path == "-" { "<stdin>" } else { path };
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|source| CliError::Io {
                path: shown.into(),
                source,
            })?;
        s
    } else {
        fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.into(),
            source,
        })?
    };
    Graph::parse_edge_list(&text).map_err(|source| CliError::Parse {
        path: shown.into(),
        source,
    })
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T, pretty: bool) -> Result<(), CliError> {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("report types serialize");
    writeln!(out, "{text}")?;
    Ok(())
}

pub fn check(g: &Graph, quiet: bool, pretty: bool, out: &mut dyn Write) -> Result<u8, CliError> {
    let report = decide_unmixed(g);
    if !quiet {
        emit(out, &CheckReport::new(g, &report), pretty)?;
    }
    Ok(match report.verdict {
        Verdict::Unmixed { .. } => EXIT_UNMIXED,
        _ => EXIT_MIXED,
    })
}

/// Resolves `--max-n`: absent means the default cap, and nothing above the
/// hard maximum is accepted.
pub fn oracle_cap(max_n: Option<usize>) -> Result<usize, CliError> {
    match max_n {
        None => Ok(DEFAULT_CAP),
        Some(n) if n <= MAX_CAP => Ok(n),
        Some(n) => Err(CliError::Param(format!(
            "--max-n {n} exceeds the oracle's hard limit of {MAX_CAP}"
        ))),
    }
}

pub fn oracle(
    g: &Graph,
    covers: bool,
    max_n: Option<usize>,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let cap = oracle_cap(max_n)?;
    let all = enumerate_minimal_covers(g, cap)?;
    let mut sizes: Vec<usize> = all.iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    let unmixed = sizes.first() == sizes.last();
    let report = OracleReport {
        verdict: if unmixed {
            VerdictKind::Unmixed
        } else {
            VerdictKind::Mixed
        },
        n: g.n(),
        sizes,
        covers: covers.then(|| {
            all.iter()
                .map(|c| c.iter().map(|v| g.name(v).to_owned()).collect())
                .collect()
        }),
    };
    emit(out, &report, false)?;
    Ok(if unmixed { EXIT_UNMIXED } else { EXIT_MIXED })
}

#[derive(Debug, Clone, PartialEq)]
pub enum GenKind {
    Preorder { g: usize, p: f64 },
    Bipartite { n1: usize, n2: usize, p: f64 },
    Tree { n: usize },
}

/// Renders a generated graph as edge-list text. Preorder graphs are preceded
/// by their labeling as `# pair x_i y_i` comment lines.
pub fn generate(kind: &GenKind, seed: u64) -> Result<String, CliError> {
    match *kind {
        GenKind::Preorder { g, p } => {
            let r = random_preorder(g, p, seed)?;
            let (graph, lab) = from_preorder(&r)?;
            let mut text = String::new();
            for (x, y) in lab.pairs() {
                text.push_str(&format!("# pair {} {}\n", graph.name(x), graph.name(y)));
            }
            text.push_str(&graph.to_edge_list());
            Ok(text)
        }
        GenKind::Bipartite { n1, n2, p } => Ok(random_bipartite(n1, n2, p, seed)?.to_edge_list()),
        GenKind::Tree { n } => {
            if n == 0 {
                return Err(CliError::Param("a tree needs at least one vertex".into()));
            }
            Ok(random_tree(n, seed).to_edge_list())
        }
    }
}

pub fn write_output(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}
