mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use unmixed_core::bipartite::{
    konig_min_cover, maximum_matching, maximum_matching_randomized, two_color, Bipartition,
};
use unmixed_core::bits::BitMatrix;
use unmixed_core::generate::{
    from_preorder, random_bipartite, random_preorder, random_tree, PreorderRelation,
};
use unmixed_core::graph::{Graph, GraphBuilder, VertexSet};
use unmixed_core::oracle::{
    is_minimal_vertex_cover, is_vertex_cover, min_cover_size, unmixed_by_definition, DEFAULT_CAP,
};
use unmixed_core::unmixed::{
    build_labeling, check_condition_b, check_ravindra, check_tree_corollary, decide_unmixed,
    decide_with_bipartition, mixed_witness_from_triple, MatchedLabeling, MixedReason, Verdict,
};

use common::{certificate_sound, labeled_bipartite, relation_key};

fn arb_bipartite(max_side: usize) -> impl Strategy<Value = Graph> {
    (0..=max_side, 0..=max_side, 0.0..=1.0f64, any::<u64>())
        .prop_map(|(n1, n2, p, seed)| random_bipartite(n1, n2, p, seed).unwrap())
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.0..0.6f64, any::<u64>()).prop_map(|(n, p, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut b = GraphBuilder::new();
        for v in 0..n {
            b.vertex(&format!("v{v}"));
        }
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    b.edge_by_index(u, v).unwrap();
                }
            }
        }
        b.build()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn two_coloring_is_valid_or_cycle_verifies(g in arb_graph(12)) {
        match two_color(&g) {
            Ok(bp) => {
                for (u, v) in g.edges_sorted() {
                    prop_assert!(bp.side1.contains(u) != bp.side1.contains(v));
                }
                prop_assert!(bp.is_valid_for(&g));
            }
            Err(cycle) => prop_assert!(cycle.verify(&g)),
        }
    }

    #[test]
    fn konig_cover_is_minimum(g in arb_bipartite(6)) {
        let bp = two_color(&g).unwrap();
        let m = maximum_matching(&g, &bp);
        prop_assert!(m.is_valid_for(&g));
        let cover = konig_min_cover(&g, &bp, &m).unwrap();
        prop_assert_eq!(cover.len(), m.len());
        prop_assert!(is_vertex_cover(&g, &cover).unwrap());
        prop_assert!(is_minimal_vertex_cover(&g, &cover).unwrap());
        prop_assert_eq!(min_cover_size(&g, DEFAULT_CAP).unwrap(), m.len());
    }

    #[test]
    fn decision_matches_oracle(g in arb_bipartite(7)) {
        let report = decide_unmixed(&g);
        let (truth, _) = unmixed_by_definition(&g, DEFAULT_CAP).unwrap();
        prop_assert_eq!(report.is_unmixed(), truth);
        prop_assert!(certificate_sound(&g, &report).is_ok());
    }

    #[test]
    fn nonbipartite_reports_verify(g in arb_graph(10)) {
        let report = decide_unmixed(&g);
        prop_assert!(certificate_sound(&g, &report).is_ok());
        prop_assert_eq!(two_color(&g).is_err(), matches!(report.verdict, Verdict::NotBipartite { .. }));
    }

    #[test]
    fn encodings_agree(size in 1usize..6, p in 0.0..1.0f64, seed in any::<u64>()) {
        // Random labeled graph containing the matching x_i y_i.
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for i in 0..size {
            for j in 0..size {
                if i == j || rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = labeled_bipartite(size, edges);
        let lab = MatchedLabeling { x: (0..size).collect(), y: (size..2 * size).collect() };
        let rel = PreorderRelation::of_labeling(&g, &lab);
        prop_assert_eq!(check_condition_b(&g, &lab).is_ok(), rel.validate().is_ok());
    }
}

#[test]
fn oracle_equivalence_up_to_fourteen_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for seed in 0..400 {
        let n1 = rng.gen_range(1..=7);
        let n2 = rng.gen_range(1..=7);
        let g = random_bipartite(n1, n2, rng.gen_range(0.1..0.9), seed).unwrap();
        let (truth, _) = unmixed_by_definition(&g, DEFAULT_CAP).unwrap();
        assert_eq!(decide_unmixed(&g).is_unmixed(), truth, "\n{g}");
    }
}

#[test]
fn matching_choice_does_not_matter() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut graphs_with_many = 0;
    for seed in 0..300 {
        let n = rng.gen_range(3..=6);
        let g = random_bipartite(n, n, 0.7, seed).unwrap();
        let bp = two_color(&g).unwrap();
        if !maximum_matching(&g, &bp).is_perfect() {
            continue;
        }
        let mut matchings = HashSet::new();
        let mut verdicts = HashSet::new();
        for _ in 0..60 {
            let m = maximum_matching_randomized(&g, &bp, &mut rng);
            if matchings.insert(m.pairs()) {
                let lab = build_labeling(&g, &bp, &m).unwrap();
                verdicts.insert(check_condition_b(&g, &lab).is_ok());
            }
        }
        if matchings.len() >= 10 {
            graphs_with_many += 1;
        }
        assert_eq!(verdicts.len(), 1, "\n{g}");
    }
    assert!(
        graphs_with_many > 20,
        "only {graphs_with_many} graphs had 10 distinct matchings"
    );
}

#[test]
fn flipping_components_keeps_verdict() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for seed in 0..300 {
        // Two or three disjoint random pieces glued by renaming.
        let mut b = GraphBuilder::new();
        for piece in 0..rng.gen_range(2..=3) {
            let n1 = rng.gen_range(1..=3);
            let n2 = rng.gen_range(1..=3);
            let h = random_bipartite(n1, n2, 0.6, seed * 7 + piece).unwrap();
            for v in 0..h.n() {
                b.vertex(&format!("p{piece}{}", h.name(v)));
            }
            for (u, v) in h.edges_sorted() {
                b.edge(
                    &format!("p{piece}{}", h.name(u)),
                    &format!("p{piece}{}", h.name(v)),
                )
                .unwrap();
            }
        }
        let g = b.build();
        let base = decide_unmixed(&g);
        let bp = two_color(&g).unwrap();
        let comps = g.components();
        for flip_mask in 0u32..(1 << comps.len().min(6)) {
            let mut side1 = Vec::new();
            let mut side2 = Vec::new();
            for (c, comp) in comps.iter().enumerate() {
                let flip = flip_mask >> c & 1 == 1;
                for v in comp.iter() {
                    if bp.side1.contains(v) != flip {
                        side1.push(v);
                    } else {
                        side2.push(v);
                    }
                }
            }
            let flipped = Bipartition {
                side1: side1.into_iter().collect(),
                side2: side2.into_iter().collect(),
            };
            let r = decide_with_bipartition(&g, &flipped);
            assert_eq!(r.is_unmixed(), base.is_unmixed(), "\n{g}");
            assert!(certificate_sound(&g, &r).is_ok());
        }
    }
}

#[test]
fn ravindra_agrees_and_no_perfect_matching_means_mixed() {
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for seed in 0..600 {
        let n1 = rng.gen_range(1..=6);
        let n2 = rng.gen_range(1..=6);
        let g = random_bipartite(n1, n2, 0.6, seed).unwrap();
        let (core, _) = g.strip_isolated();
        if core.n() == 0 {
            continue;
        }
        let bp = two_color(&core).unwrap();
        let m = maximum_matching(&core, &bp);
        let verdict = decide_unmixed(&core);
        if m.is_perfect() {
            let ok = check_ravindra(&core, &bp, &m).unwrap().is_none();
            assert_eq!(ok, verdict.is_unmixed(), "\n{core}");
        } else {
            assert!(verdict.is_mixed(), "\n{core}");
            assert!(matches!(
                verdict.verdict,
                Verdict::Mixed {
                    reason: MixedReason::UnequalSides | MixedReason::NoPerfectMatching,
                    ..
                }
            ));
        }
    }
}

#[test]
fn tree_corollary_matches_decision() {
    for seed in 0..500 {
        let n = 3 + (seed as usize % 18);
        let t = random_tree(n, seed);
        assert_eq!(
            check_tree_corollary(&t).unwrap(),
            decide_unmixed(&t).is_unmixed(),
            "\n{t}"
        );
    }
}

#[test]
fn witness_is_a_large_minimal_cover() {
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    let mut seen = 0;
    for seed in 0..500 {
        let n = rng.gen_range(3..=7);
        let g = random_bipartite(n, n, 0.5, seed).unwrap();
        let bp = two_color(&g).unwrap();
        let m = maximum_matching(&g, &bp);
        let Ok(lab) = build_labeling(&g, &bp, &m) else {
            continue;
        };
        let Err(t) = check_condition_b(&g, &lab) else {
            continue;
        };
        seen += 1;
        let c = mixed_witness_from_triple(&g, &lab, t).unwrap();
        assert!(c.len() > lab.g());
        assert!(is_minimal_vertex_cover(&g, &c).unwrap());
        assert!(c.contains(lab.x[t.j]) && c.contains(lab.y[t.j]));
    }
    assert!(seen > 50);
}

#[test]
fn generated_preorders_are_unmixed() {
    for seed in 0..300u64 {
        let size = 1 + (seed as usize % 8);
        let p = [0.05, 0.15, 0.3][seed as usize % 3];
        let r = random_preorder(size, p, seed).unwrap();
        let (g, lab) = from_preorder(&r).unwrap();
        assert_eq!(check_condition_b(&g, &lab), Ok(()));
        assert!(decide_unmixed(&g).is_unmixed());
        assert!(unmixed_by_definition(&g, DEFAULT_CAP).unwrap().0);
    }
}

#[test]
fn random_bipartite_extremes() {
    for (n1, n2) in [(0, 0), (1, 4), (3, 3), (5, 2)] {
        let full = random_bipartite(n1, n2, 1.0, 1).unwrap();
        assert_eq!(full.edge_count(), n1 * n2);
        let none = random_bipartite(n1, n2, 0.0, 1).unwrap();
        assert_eq!(none.edge_count(), 0);
        assert_eq!(none.n(), n1 + n2);
    }
}

/// Completeness at g = 4: the unmixed graphs containing a fixed perfect
/// matching are exactly the graphs of the 355 preorders on four points.
#[test]
fn preorders_generate_every_unmixed_graph_at_four() {
    let size = 4;
    let off: Vec<(usize, usize)> = (0..size)
        .flat_map(|i| (0..size).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut preorders = HashSet::new();
    for mask in 0u32..1 << off.len() {
        let mut m = BitMatrix::identity(size);
        for (b, &(i, j)) in off.iter().enumerate() {
            if mask >> b & 1 == 1 {
                m.set(i, j, true);
            }
        }
        preorders.insert(relation_key(&PreorderRelation::from_matrix(m).closed()));
    }
    assert_eq!(preorders.len(), 355);

    let lab = MatchedLabeling {
        x: (0..size).collect(),
        y: (size..2 * size).collect(),
    };
    let mut unmixed = HashSet::new();
    for mask in 0u32..1 << off.len() {
        let edges = (0..size).map(|i| (i, i)).chain(
            off.iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &e)| e),
        );
        let g = labeled_bipartite(size, edges);
        if unmixed_by_definition(&g, DEFAULT_CAP).unwrap().0 {
            let rel = PreorderRelation::of_labeling(&g, &lab);
            let (h, _) = from_preorder(&rel).unwrap();
            assert_eq!(h, g);
            unmixed.insert(relation_key(&rel));
        }
    }
    assert_eq!(unmixed, preorders);
}

#[test]
fn report_indices_refer_to_input_graph() {
    let g = Graph::parse_edge_list("iso\nx1 y1\nx2 y2\nx1 y2\nlone").unwrap();
    let report = decide_unmixed(&g);
    let expected: VertexSet = [0, 5].into_iter().collect();
    assert_eq!(report.stripped_isolated, expected);
    match report.verdict {
        Verdict::Unmixed { labeling } => {
            let names: Vec<&str> = labeling.pairs().map(|(x, _)| g.name(x)).collect();
            assert_eq!(names, ["x1", "x2"]);
        }
        v => panic!("{v:?}"),
    }
}
