#![allow(dead_code)]

use proptest::prelude::*;
use treedist::Graph;

/// Graph on `n` vertices whose upper-triangle pairs, in `(0,1), (0,2),
/// (1,2), ...` order, are selected by `bits`.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
    let edges = pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e);
    Graph::new(n, edges).unwrap()
}

/// Arbitrary simple graph, possibly disconnected, with `lo..=hi` vertices.
pub fn any_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Uniform labeled tree from a random Prüfer sequence.
pub fn any_tree(lo: usize, hi: usize) -> impl Strategy<Value = treedist::tree::Tree> {
    (lo.max(2)..=hi).prop_flat_map(|n| {
        prop::collection::vec(0..n, n - 2)
            .prop_map(|seq| treedist::enumeration::oracle::prufer_decode(&seq))
    })
}

/// A permutation of `0..n`.
pub fn any_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}
