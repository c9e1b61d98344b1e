use std::collections::HashSet;

use treedist::distinguishing::{distinguishing_number_bruteforce, distinguishing_number_tree};
use treedist::enumeration::oracle::{
    connected_graphs_by_bitmask, count_free_trees_by_otter, count_free_trees_by_prufer,
};
use treedist::enumeration::*;
use treedist::graph::{parse_graph6, write_graph6};
use treedist::par::Execution;
use treedist::self_centered::is_two_self_centered;
use treedist::symmetry::are_isomorphic;
use treedist::tree::Tree;
use treedist::{Family, Graph};

fn tree(f: Family) -> Tree {
    Tree::new(f.build().unwrap()).unwrap()
}

fn contains_tree(list: &[Tree], t: &Tree) -> bool {
    list.iter().any(|x| x.is_isomorphic(t))
}

#[test]
fn tree_counts_match_prufer_oracle() {
    let layers = free_trees_upto(9);
    for (i, layer) in layers.iter().enumerate() {
        assert_eq!(
            layer.len(),
            count_free_trees_by_prufer(i + 1),
            "n = {}",
            i + 1
        );
    }
}

#[test]
fn tree_counts_up_to_sixteen() {
    let counts: Vec<usize> = free_trees_upto(16).iter().map(Vec::len).collect();
    assert_eq!(
        counts,
        [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320]
    );
    for (i, &c) in counts.iter().enumerate() {
        assert_eq!(c as u128, count_free_trees_by_otter(i + 1));
    }
}

#[test]
fn free_tree_examples() {
    assert_eq!(free_trees(1).unwrap().len(), 1);
    assert_eq!(free_trees(7).unwrap().len(), 11);
    let four = free_trees(4).unwrap();
    assert!(contains_tree(&four, &tree(Family::Path(4))));
    assert!(contains_tree(&four, &tree(Family::Star(3))));
}

#[test]
fn generated_trees_are_pairwise_distinct() {
    for layer in free_trees_upto(10) {
        let keys: HashSet<_> = layer.iter().map(Tree::canonical_key).collect();
        assert_eq!(keys.len(), layer.len());
    }
}

#[test]
fn graph_counts_match_bitmask_oracle() {
    let layers = connected_graphs_upto(6);
    for (i, layer) in layers.iter().enumerate() {
        let oracle = connected_graphs_by_bitmask(i + 1);
        assert_eq!(layer.len(), oracle.len(), "n = {}", i + 1);
        for g in &oracle {
            assert_eq!(layer.iter().filter(|h| are_isomorphic(g, h)).count(), 1);
        }
    }
}

#[test]
fn graph_counts_up_to_seven() {
    let counts: Vec<usize> = connected_graphs_upto(7).iter().map(Vec::len).collect();
    assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853]);
}

#[test]
fn generated_graphs_round_trip() {
    for g in all_connected_graphs(7).unwrap() {
        assert_eq!(parse_graph6(&write_graph6(&g).unwrap()).unwrap(), g);
        assert!(g.is_connected());
    }
    for t in all_trees(12).unwrap() {
        assert_eq!(
            parse_graph6(&write_graph6(t.graph()).unwrap()).unwrap(),
            *t.graph()
        );
    }
}

#[test]
fn census_examples() {
    let p2 = census(Universe::Trees(2), Execution::Parallel).unwrap();
    assert_eq!(p2.len(), 1);
    assert_eq!(p2[0].distinguishing_number, 2);
    let k1 = census(Universe::Trees(1), Execution::Parallel).unwrap();
    assert_eq!(
        (k1[0].distinguishing_number, k1[0].aut_order.as_str()),
        (1, "1")
    );
    let four = census(Universe::Graphs(4), Execution::Parallel).unwrap();
    let k4 = four.iter().find(|r| r.graph6 == "C~").unwrap();
    assert_eq!((k4.distinguishing_number, k4.aut_order.as_str()), (4, "24"));
    assert_eq!(
        census(Universe::Trees(4), Execution::Parallel)
            .unwrap()
            .len(),
        2
    );
    assert_eq!(
        census(Universe::Graphs(3), Execution::Parallel)
            .unwrap()
            .len(),
        2
    );
    assert!(census(Universe::Graphs(8), Execution::Parallel)
        .unwrap_err()
        .is_capacity());
}

#[test]
fn census_records_are_recomputable() {
    for r in census(Universe::Graphs(5), Execution::Parallel).unwrap() {
        let g = parse_graph6(&r.graph6).unwrap();
        assert_eq!(census_record(&g).unwrap(), r);
        assert!(r.radius <= r.diameter);
    }
}

#[test]
fn census_is_deterministic() {
    for u in [Universe::Trees(10), Universe::Graphs(6)] {
        let a = to_ndjson(&census(u, Execution::Parallel).unwrap());
        let b = to_ndjson(&census(u, Execution::Sequential).unwrap());
        let c = to_ndjson(&census(u, Execution::Parallel).unwrap());
        assert_eq!(a, b);
        assert_eq!(a, c);
    }
}

#[test]
fn tree_census_agrees_with_brute_force() {
    for n in 1..=8 {
        for r in census(Universe::Trees(n), Execution::Parallel).unwrap() {
            let g = parse_graph6(&r.graph6).unwrap();
            let group = treedist::symmetry::automorphisms(&g).unwrap();
            assert_eq!(r.aut_order, group.order().to_string());
            let d = distinguishing_number_bruteforce(&g).unwrap().value;
            assert_eq!(r.distinguishing_number, d);
        }
    }
}

#[test]
fn main_theorem_examples() {
    let outcome = verify_main_theorem(10, Execution::Parallel).unwrap();
    assert_eq!(outcome.report.status, ReportStatus::Verified);
    let members: Vec<Tree> = outcome.catalog.iter().map(|e| e.tree.clone()).collect();
    for n in 2..=5 {
        assert!(contains_tree(&members, &tree(Family::Path(n))), "P_{n}");
    }
    assert!(!contains_tree(&members, &tree(Family::Star(3))));
    assert!(outcome
        .catalog
        .iter()
        .all(|e| e.dot().starts_with("graph ")));
}

// Three legs of length two: each leg (middle, tip) can be labeled in four
// ways with two labels, so the legs can be made pairwise different while
// the center takes any label. Hence two labels suffice.
#[test]
fn spider_with_three_long_legs() {
    let spider =
        Tree::new(Graph::new(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap())
            .unwrap();
    assert_eq!(
        distinguishing_number_bruteforce(spider.graph())
            .unwrap()
            .value,
        2
    );
    assert_eq!(distinguishing_number_tree(&spider).value, 2);
    assert!(main_theorem_predicate(&spider));
    // With one more leg the four leg labelings per label choice still
    // suffice; with five legs they do not.
    let legs = |k: usize| {
        let edges = (0..k).flat_map(|i| [(0, 2 * i + 1), (2 * i + 1, 2 * i + 2)]);
        Tree::new(Graph::new(2 * k + 1, edges).unwrap()).unwrap()
    };
    assert_eq!(distinguishing_number_tree(&legs(4)).value, 2);
    assert_eq!(distinguishing_number_tree(&legs(5)).value, 3);
}

#[test]
fn predicate_matches_counting_beyond_twelve() {
    let catalog: HashSet<String> = main_theorem_catalog()
        .into_iter()
        .map(|e| e.graph6)
        .collect();
    let mut found = HashSet::new();
    for t in all_trees(16).unwrap() {
        let in_s =
            t.graph().metric_profile().radius() <= 2 && distinguishing_number_tree(&t).value == 2;
        assert_eq!(
            in_s,
            main_theorem_predicate(&t),
            "{}",
            write_graph6(t.graph()).unwrap()
        );
        if in_s {
            found.insert(write_graph6(t.graph()).unwrap());
        }
    }
    // Only the 17-vertex member lies beyond the generation bound.
    assert_eq!(found.len(), 40);
    assert!(found.is_subset(&catalog));
}

#[test]
fn thmrad_examples() {
    let r = verify_thmrad(10, Execution::Parallel).unwrap();
    assert_eq!(r.status, ReportStatus::Vacuous);
    assert_eq!(r.instances_checked, 0);
    assert!(r.violations.is_empty());
    let p4 = Family::Path(4).build().unwrap().metric_profile();
    assert_eq!((p4.diameter(), p4.radius()), (3, 2));
}

#[test]
fn geq4_examples() {
    for n in [7, 8] {
        let t = tree(Family::Path(n));
        assert_eq!(
            t.graph().metric_profile().radius(),
            if n == 7 { 3 } else { 4 }
        );
        assert_eq!(distinguishing_number_tree(&t).value, 2);
        let c = t.graph().complement();
        assert!(c.is_connected() && is_two_self_centered(&c) && !c.is_bipartite());
    }
    let r = verify_geq4(12, Execution::Parallel).unwrap();
    assert_eq!(r.status, ReportStatus::Verified);
    assert!(r.instances_checked > 0);
}

#[test]
fn center_complement_examples() {
    let centered = |t: &Graph| {
        let c = t.complement();
        c.induced_subgraph(c.metric_profile().center())
    };
    let p4 = Family::Path(4).build().unwrap();
    assert!(are_isomorphic(
        &centered(&p4),
        &Family::Complete(2).build().unwrap()
    ));
    let p5 = Family::Path(5).build().unwrap();
    assert!(are_isomorphic(&centered(&p5), &p5.complement()));
    assert_eq!(Family::DoubleStar(1, 1).build().unwrap(), p4);
    let r = verify_center_complement(10, Execution::Parallel).unwrap();
    assert_eq!(r.status, ReportStatus::Verified);
}

#[test]
fn corollary7_examples() {
    use treedist::self_centered::locally_geodesic_cycle_at;
    let k22 = Family::CompleteBipartite(2, 2).build().unwrap();
    assert!(is_two_self_centered(&k22) && k22.is_block());
    assert!(locally_geodesic_cycle_at(&k22, 0, 5).unwrap().is_none());
    let c6 = Family::Cycle(6).build().unwrap();
    assert!(c6.is_k_self_centered(3) && !is_two_self_centered(&c6));
    assert!(locally_geodesic_cycle_at(&c6, 0, 5).unwrap().is_some());
    let k14 = Family::Star(4).build().unwrap();
    assert!(!is_two_self_centered(&k14) && !k14.is_block());
    let r = verify_corollary7(7, Execution::Parallel).unwrap();
    assert_eq!(r.status, ReportStatus::Verified);
}

#[test]
fn theorem15_examples() {
    // The smallest edge-minimal 2-self-centered graphs with a triangle have
    // six vertices; the tritip-apex graph appears at seven.
    let r5 = verify_theorem15(5, Execution::Parallel).unwrap();
    assert_eq!(r5.status, ReportStatus::Vacuous);
    let r6 = verify_theorem15(6, Execution::Parallel).unwrap();
    assert_eq!(
        (r6.status, r6.instances_checked),
        (ReportStatus::Verified, 1)
    );
    let r = verify_theorem15(7, Execution::Parallel).unwrap();
    assert_eq!((r.status, r.instances_checked), (ReportStatus::Verified, 5));
    let tritip = Family::T7FamilyIII(1, 1, 1).build().unwrap();
    assert!(treedist::self_centered::is_edge_minimal_2sc(&tritip) && tritip.has_triangle());
    assert!(verify_theorem15(8, Execution::Parallel)
        .unwrap_err()
        .is_capacity());
}

#[test]
fn verify_all_runs_every_check() {
    let reports = verify_all(7, Execution::Parallel).unwrap();
    assert_eq!(reports.len(), TheoremId::ALL.len());
    assert!(reports.iter().all(TheoremReport::holds));
    let json = serde_json::to_string(&reports).unwrap();
    let back: Vec<TheoremReport> = serde_json::from_str(&json).unwrap();
    assert_eq!(back, reports);
}
