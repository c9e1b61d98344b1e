//! Exhaustive generation of free trees and small connected graphs up to
//! isomorphism, the invariant census, and exhaustive theorem checks.

mod catalog;
mod census;
pub mod oracle;
mod verify;

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::graph::{bits, write_graph6, Graph};
use crate::symmetry::are_isomorphic;
use crate::tree::Tree;

pub use catalog::{main_theorem_catalog, main_theorem_predicate, CatalogEntry, StarProfile};
pub use census::{census, census_record, to_ndjson, CensusRecord, Universe};
pub use verify::{
    verify_all, verify_center_complement, verify_corollary7, verify_geq4, verify_main_theorem,
    verify_theorem15, verify_theorem7, verify_thmrad, MainTheoremOutcome, ReportStatus, TheoremId,
    TheoremReport,
};

/// Largest order for free-tree generation.
pub const MAX_TREE_ORDER: usize = 16;
/// Largest order for connected-graph generation.
pub const MAX_GRAPH_ORDER: usize = 7;
/// Largest order for tree checks that cross-check with brute force.
pub const MAX_TREE_CHECK_ORDER: usize = 12;

fn check_bound(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::Capacity {
            what,
            value: n,
            limit,
        })
    } else {
        Ok(())
    }
}

/// One tree per isomorphism class on `n` vertices, each in canonical form,
/// sorted by graph6. `n = 0` yields nothing.
///
/// Classes on `n` vertices are obtained by hanging a leaf anywhere on the
/// classes on `n - 1` vertices and keeping one canonical form per result.
pub fn free_trees(n: usize) -> Result<Vec<Tree>> {
    check_bound("order for free-tree generation", n, MAX_TREE_ORDER)?;
    Ok(free_trees_upto(n).pop().unwrap_or_default())
}

/// `free_trees(k)` for `k = 1..=n`, as one vector per order.
pub fn free_trees_upto(n: usize) -> Vec<Vec<Tree>> {
    let mut layers: Vec<Vec<Tree>> = Vec::with_capacity(n);
    if n == 0 {
        return layers;
    }
    layers.push(vec![Tree::new(Graph::empty(1).unwrap()).unwrap()]);
    for k in 2..=n {
        let mut next: BTreeMap<String, Tree> = BTreeMap::new();
        for t in &layers[k - 2] {
            for v in 0..k - 1 {
                let mut edges = t.graph().edges().to_vec();
                edges.push((v, k - 1));
                let grown = Tree::new(Graph::new(k, edges).unwrap())
                    .unwrap()
                    .canonical_form();
                next.entry(write_graph6(grown.graph()).unwrap())
                    .or_insert(grown);
            }
        }
        layers.push(next.into_values().collect());
    }
    layers
}

/// All trees with `1 <= n <= nmax`, ordered by `(n, graph6)`.
pub fn all_trees(nmax: usize) -> Result<Vec<Tree>> {
    check_bound("order for free-tree generation", nmax, MAX_TREE_ORDER)?;
    Ok(free_trees_upto(nmax).into_iter().flatten().collect())
}

/// Isomorphism-invariant fingerprint used to bucket graphs before exact
/// isomorphism tests.
pub(crate) fn invariant(g: &Graph) -> (usize, Vec<(usize, Vec<usize>, u32)>) {
    let mut per_vertex: Vec<(usize, Vec<usize>, u32)> = g
        .vertices()
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            let tri: u32 = g
                .neighbors(v)
                .map(|w| (g.neighbor_mask(v) & g.neighbor_mask(w)).count_ones())
                .sum();
            (g.degree(v), nd, tri / 2)
        })
        .collect();
    per_vertex.sort_unstable();
    (g.size(), per_vertex)
}

/// Keeps the first graph of every isomorphism class, in input order.
pub(crate) fn dedup_isomorphic(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut buckets: HashMap<_, Vec<usize>> = HashMap::new();
    let mut kept: Vec<Graph> = Vec::new();
    for g in graphs {
        let bucket = buckets.entry(invariant(&g)).or_default();
        if bucket.iter().all(|&i| !are_isomorphic(&kept[i], &g)) {
            bucket.push(kept.len());
            kept.push(g);
        }
    }
    kept
}

/// One connected graph per isomorphism class on `n` vertices, sorted by
/// graph6.
///
/// Every connected graph on `n >= 2` vertices has a vertex whose removal
/// leaves it connected (a leaf of a spanning tree), so the classes on `n`
/// vertices arise from the classes on `n - 1` by adding a vertex joined to a
/// nonempty subset.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    check_bound("order for connected-graph generation", n, MAX_GRAPH_ORDER)?;
    Ok(connected_graphs_upto(n).pop().unwrap_or_default())
}

/// `connected_graphs(k)` for `k = 1..=n`.
pub fn connected_graphs_upto(n: usize) -> Vec<Vec<Graph>> {
    let mut layers: Vec<Vec<Graph>> = Vec::with_capacity(n);
    if n == 0 {
        return layers;
    }
    layers.push(vec![Graph::empty(1).unwrap()]);
    for k in 2..=n {
        let candidates = layers[k - 2].iter().flat_map(|g| {
            (1u64..1 << (k - 1)).map(move |subset| {
                let mut edges = g.edges().to_vec();
                edges.extend(bits(subset).map(|v| (v, k - 1)));
                Graph::new(k, edges).unwrap()
            })
        });
        let mut layer = dedup_isomorphic(candidates);
        layer.sort_by_cached_key(|g| write_graph6(g).unwrap());
        layers.push(layer);
    }
    layers
}

/// All connected graphs with `1 <= n <= nmax`, ordered by `(n, graph6)`.
pub fn all_connected_graphs(nmax: usize) -> Result<Vec<Graph>> {
    check_bound(
        "order for connected-graph generation",
        nmax,
        MAX_GRAPH_ORDER,
    )?;
    Ok(connected_graphs_upto(nmax).into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = free_trees_upto(12).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
        assert!(free_trees(17).unwrap_err().is_capacity());
        assert!(free_trees(0).unwrap().is_empty());
    }

    #[test]
    fn four_vertex_trees() {
        let trees = free_trees(4).unwrap();
        assert_eq!(trees.len(), 2);
        let p4 = Tree::new(Family::Path(4).build().unwrap()).unwrap();
        let k13 = Tree::new(Family::Star(3).build().unwrap()).unwrap();
        assert!(trees.iter().any(|t| t.is_isomorphic(&p4)));
        assert!(trees.iter().any(|t| t.is_isomorphic(&k13)));
    }

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = connected_graphs_upto(6).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert!(connected_graphs(8).unwrap_err().is_capacity());
        let three = connected_graphs(3).unwrap();
        assert!(three
            .iter()
            .any(|g| are_isomorphic(g, &Family::Path(3).build().unwrap())));
        assert!(three
            .iter()
            .any(|g| are_isomorphic(g, &Family::Complete(3).build().unwrap())));
    }
}
