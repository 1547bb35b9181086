//! Batch agreement test between the fast decision and everything that can
//! second-guess it.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use unmixed_core::bipartite::{maximum_matching, two_color};
use unmixed_core::generate::{random_bipartite, random_tree};
use unmixed_core::oracle::{unmixed_by_definition, verify_report, MAX_CAP};
use unmixed_core::unmixed::{check_ravindra, check_tree_corollary};
use unmixed_core::{decide_unmixed, Graph};

use crate::report::CheckReport;
use crate::{CliError, EXIT_MIXED, EXIT_UNMIXED};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Bipartite,
    Tree,
    /// Alternates bipartite and tree items.
    All,
}

#[derive(Debug, Clone)]
pub struct Options {
    pub count: usize,
    pub max_n: usize,
    pub seed: u64,
    pub family: Family,
    pub dump_dir: PathBuf,
    /// Inverts the fast verdict on item 0, to exercise the failure path.
    pub inject_fault: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub item: usize,
    pub checks: Vec<String>,
    pub dump: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub count: usize,
    pub unmixed: usize,
    pub trees_checked: usize,
    pub ravindra_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

fn item_graph(rng: &mut ChaCha8Rng, family: Family, item: usize, max_n: usize) -> Graph {
    let tree = match family {
        Family::Bipartite => false,
        Family::Tree => true,
        Family::All => item % 2 == 1,
    };
    let seed = rng.gen();
    if tree {
        random_tree(rng.gen_range(1..=max_n), seed)
    } else {
        let n1 = rng.gen_range(1..=max_n / 2);
        let n2 = if rng.gen_bool(0.5) {
            n1
        } else {
            rng.gen_range(1..=max_n - n1)
        };
        let p = rng.gen_range(0.1..0.9);
        random_bipartite(n1, n2, p, seed).expect("probability in range")
    }
}

/// Runs every applicable check on `g`, returning the names of the ones that
/// disagree with the oracle.
fn failing_checks(g: &Graph, cap: usize, fault: bool, stats: &mut Summary) -> Vec<String> {
    let mut failed = Vec::new();
    let report = decide_unmixed(g);
    let (truth, sizes) = unmixed_by_definition(g, cap).expect("size bounded by max-n");
    if truth {
        stats.unmixed += 1;
    }
    if report.is_unmixed() != fault ^ truth {
        failed.push("decide_unmixed vs oracle".to_owned());
    }
    if let Err(e) = verify_report(g, &report) {
        failed.push(format!("certificate: {e}"));
    }
    if report.covering_number != Some(sizes[0]) {
        failed.push("covering number vs smallest minimal cover".to_owned());
    }
    let json = serde_json::to_string(&CheckReport::new(g, &report)).expect("serializable");
    let back: CheckReport = serde_json::from_str(&json).expect("own output parses");
    match back.resolve(g) {
        Some(r) if r == report => {}
        _ => failed.push("JSON round trip".to_owned()),
    }

    let (core, _) = g.strip_isolated();
    if let Ok(bp) = two_color(&core) {
        let m = maximum_matching(&core, &bp);
        if m.is_perfect() {
            stats.ravindra_checked += 1;
            let complete = check_ravindra(&core, &bp, &m).expect("perfect").is_none();
            if complete != truth {
                failed.push("Ravindra test vs oracle".to_owned());
            }
        }
    }
    if g.is_tree() && g.n() >= 3 {
        stats.trees_checked += 1;
        if check_tree_corollary(g).expect("tree on 3+ vertices") != truth {
            failed.push("tree corollary vs oracle".to_owned());
        }
    }
    failed
}

fn dump(
    dir: &Path,
    seed: u64,
    item: usize,
    g: &Graph,
    checks: &[String],
) -> Result<PathBuf, CliError> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.display().to_string(),
        source,
    })?;
    let path = dir.join(format!("crosscheck-{seed}-{item}.txt"));
    let mut text = format!("# crosscheck seed {seed} item {item}\n");
    for c in checks {
        text.push_str(&format!("# failed: {c}\n"));
    }
    text.push_str(&g.to_edge_list());
    fs::write(&path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(path)
}

pub fn validate(opts: &Options) -> Result<(), CliError> {
    let min = if opts.family == Family::Tree { 1 } else { 2 };
    if opts.max_n < min || opts.max_n > MAX_CAP {
        return Err(CliError::Param(format!(
            "--max-n must lie in {min}..={MAX_CAP} for this family, got {}",
            opts.max_n
        )));
    }
    Ok(())
}

pub fn run(opts: &Options, log: &mut dyn Write) -> Result<Summary, CliError> {
    validate(opts)?;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut summary = Summary {
        count: opts.count,
        unmixed: 0,
        trees_checked: 0,
        ravindra_checked: 0,
        mismatches: Vec::new(),
    };
    for item in 0..opts.count {
        let g = item_graph(&mut rng, opts.family, item, opts.max_n);
        let fault = opts.inject_fault && item == 0;
        let checks = failing_checks(&g, opts.max_n, fault, &mut summary);
        if !checks.is_empty() {
            let path = dump(&opts.dump_dir, opts.seed, item, &g, &checks)?;
            writeln!(
                log,
                "item {item}: {} ; dumped to {}",
                checks.join(", "),
                path.display()
            )?;
            summary.mismatches.push(Mismatch {
                item,
                checks,
                dump: path.display().to_string(),
            });
        }
    }
    Ok(summary)
}

pub fn exit_code(summary: &Summary) -> u8 {
    if summary.mismatches.is_empty() {
        EXIT_UNMIXED
    } else {
        EXIT_MIXED
    }
}
