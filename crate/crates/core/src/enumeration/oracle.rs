//! Independent generators used to cross-check the main enumerators: Prüfer
//! decoding of every labeled tree, Otter's counting formula, and raw
//! enumeration of adjacency bitmasks.

use std::collections::HashSet;

use super::dedup_isomorphic;
use crate::graph::Graph;
use crate::par::{self, Execution};
use crate::tree::Tree;

/// The labeled tree on `seq.len() + 2` vertices with Prüfer sequence `seq`.
/// Entries must be below `seq.len() + 2`.
pub fn prufer_decode(seq: &[usize]) -> Tree {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let mut rest = (0..n).filter(|&v| degree[v] == 1);
    let (a, b) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((a, b));
    Tree::new(Graph::new(n, edges).unwrap()).unwrap()
}

/// Number of unlabeled free trees on `n` vertices from Otter's formula,
/// using the rooted-tree counts of the Euler transform recurrence.
pub fn count_free_trees_by_otter(n: usize) -> u128 {
    if n == 0 {
        return 0;
    }
    // rooted[k] counts rooted trees on k vertices.
    let mut rooted = vec![0u128; n + 1];
    rooted[1] = 1;
    for m in 1..n {
        let mut sum = 0u128;
        for k in 1..=m {
            let s: u128 = (1..=k)
                .filter(|&d| k.is_multiple_of(d))
                .map(|d| d as u128 * rooted[d])
                .sum();
            sum += s * rooted[m - k + 1];
        }
        rooted[m + 1] = sum / m as u128;
    }
    let pairs: u128 = (1..n).map(|i| rooted[i] * rooted[n - i]).sum();
    let fixed = if n.is_multiple_of(2) {
        rooted[n / 2]
    } else {
        0
    };
    (2 * rooted[n] + fixed - pairs) / 2
}

/// Number of isomorphism classes among all `n^(n-2)` labeled trees.
pub fn count_free_trees_by_prufer(n: usize) -> usize {
    if n <= 2 {
        return usize::from(n > 0);
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    // Split on the leading entry so the classes of each share can be
    // collected independently.
    let shares = par::map_range(n, Execution::Parallel, |first| {
        let mut keys = HashSet::new();
        let mut seq = vec![0; len];
        for idx in 0..total / n {
            let mut x = idx;
            seq[0] = first;
            for slot in seq[1..].iter_mut() {
                *slot = x % n;
                x /= n;
            }
            keys.insert(prufer_decode(&seq).canonical_key());
        }
        keys
    });
    shares.into_iter().flatten().collect::<HashSet<_>>().len()
}

/// Connected graphs on `n` vertices, one per class, by scanning every
/// upper-triangle bitmask.
pub fn connected_graphs_by_bitmask(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let all = (0u64..1 << pairs.len()).filter_map(|mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::new(n, edges).unwrap();
        g.is_connected().then_some(g)
    });
    dedup_isomorphic(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decode_known_sequence() {
        // Textbook example: sequence (3, 3, 3, 4) on 6 vertices.
        let t = prufer_decode(&[3, 3, 3, 4]);
        assert_eq!(t.graph().edges(), &[(0, 3), (1, 3), (2, 3), (3, 4), (4, 5)]);
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=7).map(count_free_trees_by_prufer).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11]);
        let otter: Vec<u128> = (1..=7).map(count_free_trees_by_otter).collect();
        assert_eq!(otter, vec![1, 1, 1, 2, 3, 6, 11]);
        let graphs: Vec<usize> = (1..=5)
            .map(|n| connected_graphs_by_bitmask(n).len())
            .collect();
        assert_eq!(graphs, vec![1, 1, 2, 6, 21]);
    }
}
