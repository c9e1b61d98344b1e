//! Simple undirected graphs on dense vertex sets `0..n`, their metric
//! invariants, named constructions and text formats.
//!
//! A [`Graph`] is immutable once built. Adjacency is kept twice: as a sorted
//! edge list (for hashing, serialization and equality) and as one `u64`
//! neighbourhood bitset per vertex (for fast traversal). The bitset
//! representation bounds the order at [`MAX_ORDER`] vertices.

mod families;
mod formats;
mod metric;

pub use families::{Family, FAMILY_NAMES};
pub use formats::{
    parse_edge_list, parse_graph6, write_dot, write_edge_list, write_graph6, GRAPH6_MAX_ORDER,
};
pub use metric::{MetricProfile, INFINITY};

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

/// An undirected simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

/// Outcome of a 2-colouring attempt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// `side[v]` is the colour class of `v`; every edge joins different sides.
    Bipartite { side: Vec<bool> },
    /// A closed walk `c[0] - c[1] - ... - c[k-1] - c[0]` of odd length `k`
    /// that is a simple cycle of the graph.
    OddCycle { cycle: Vec<usize> },
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Bipartite { .. })
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range
    /// endpoints. Edges are unordered: `(u, v)` and `(v, u)` are the same
    /// edge and listing both is a duplicate.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_ORDER {
            return Err(Error::Capacity {
                what: "graph order",
                value: n,
                limit: MAX_ORDER,
            });
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            adj,
            edges: list,
        })
    }

    /// Builds a graph from neighbourhood bitsets. The caller guarantees
    /// symmetry and an empty diagonal.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        debug_assert!(n <= MAX_ORDER);
        let mut edges = Vec::new();
        for u in 0..n {
            debug_assert_eq!(adj[u] >> u & 1, 0);
            let mut higher = adj[u] & !low_mask(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                debug_assert_eq!(adj[v] >> u & 1, 1);
                edges.push((u, v));
                higher &= higher - 1;
            }
        }
        Graph { n, adj, edges }
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Graph> {
        Graph::new(n, std::iter::empty())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Neighbourhood of `v` as a bitset.
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Bitset with every vertex of the graph set.
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    /// Common neighbourhood of `u` and `v` as a bitset.
    pub fn common_neighbors(&self, u: usize, v: usize) -> u64 {
        self.adj[u] & self.adj[v]
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1u64 << v))
            .collect();
        Graph::from_adjacency(adj)
    }

    /// True iff the graph has at most one connected component.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.component_mask(0) == self.vertex_mask()
    }

    /// Vertices reachable from `start`, as a bitset.
    pub fn component_mask(&self, start: usize) -> u64 {
        self.reachable_within(start, self.vertex_mask())
    }

    /// Vertices reachable from `start` using only vertices in `allowed`.
    pub(crate) fn reachable_within(&self, start: usize, allowed: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Breadth-first 2-colouring. On failure returns an odd cycle found from
    /// the first non-bipartite component.
    pub fn bipartition(&self) -> Bipartition {
        let mut side = vec![false; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![usize::MAX; self.n];
        for s in 0..self.n {
            if depth[s] != usize::MAX {
                continue;
            }
            depth[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if depth[w] == usize::MAX {
                        depth[w] = depth[u] + 1;
                        parent[w] = u;
                        side[w] = !side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return Bipartition::OddCycle {
                            cycle: odd_cycle(u, w, &parent, &depth),
                        };
                    }
                }
            }
        }
        Bipartition::Bipartite { side }
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_bipartite()
    }

    pub fn metric_profile(&self) -> MetricProfile {
        MetricProfile::new(self)
    }

    /// Connected with radius = diameter = `k`.
    pub fn is_k_self_centered(&self, k: usize) -> bool {
        if !self.is_connected() || self.n == 0 {
            return false;
        }
        let p = self.metric_profile();
        p.radius() as usize == k && p.diameter() as usize == k
    }

    /// Subgraph induced by the vertices in `keep`, renumbered in increasing
    /// order of their original index.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut edges = Vec::new();
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(sorted.len(), edges).expect("induced subgraph of a valid graph")
    }

    /// Copy with the `removed` edges deleted and the `added` edges inserted.
    pub fn edit(&self, removed: &[(usize, usize)], added: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = self.adj.clone();
        for &(u, v) in removed {
            if !self.has_edge(u, v) {
                return Err(Error::Contract(format!("edge {u}-{v} is not present")));
            }
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
        }
        for &(u, v) in added {
            if u >= self.n || v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n: self.n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges.iter().map(|&(u, v)| (perm[u], perm[v]));
        Graph::new(self.n, edges).expect("permutation of a valid graph")
    }

    /// Every triangle `(u, v, w)` with `u < v < w`, in lexicographic order.
    pub fn triangles(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for &(u, v) in &self.edges {
            let above = self.adj[u] & self.adj[v] & !low_mask(v + 1);
            out.extend(bits(above).map(|w| (u, v, w)));
        }
        out.sort_unstable();
        out
    }

    pub fn has_triangle(&self) -> bool {
        self.edges
            .iter()
            .any(|&(u, v)| self.adj[u] & self.adj[v] != 0)
    }

    /// Connected and without a cut vertex. `K_1` and `K_2` count as blocks.
    pub fn is_block(&self) -> bool {
        if self.n == 0 || !self.is_connected() {
            return false;
        }
        if self.n <= 2 {
            return true;
        }
        let full = self.vertex_mask();
        (0..self.n).all(|v| {
            let rest = full & !(1 << v);
            let start = rest.trailing_zeros() as usize;
            self.reachable_within(start, rest) == rest
        })
    }

    /// Disjoint union followed by complete joins between consecutive parts.
    /// Vertices are numbered part by part in list order.
    pub fn sequential_join(parts: &[Graph]) -> Result<Graph> {
        if parts.is_empty() {
            return Err(Error::Contract("sequential join of an empty list".into()));
        }
        let total: usize = parts.iter().map(Graph::order).sum();
        if total > MAX_ORDER {
            return Err(Error::Capacity {
                what: "graph order",
                value: total,
                limit: MAX_ORDER,
            });
        }
        let mut edges = Vec::new();
        let mut offset = 0;
        let mut prev: Option<std::ops::Range<usize>> = None;
        for part in parts {
            let here = offset..offset + part.order();
            edges.extend(part.edges().iter().map(|&(u, v)| (u + offset, v + offset)));
            if let Some(p) = prev {
                for u in p {
                    edges.extend(here.clone().map(|v| (u, v)));
                }
            }
            offset += part.order();
            prev = Some(here);
        }
        Graph::new(total, edges)
    }

    /// Vertices of degree `d`, ascending.
    pub fn vertices_of_degree(&self, d: usize) -> Vec<usize> {
        self.vertices().filter(|&v| self.degree(v) == d).collect()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl std::fmt::Display for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&write_graph6(self).unwrap_or_else(|_| format!("{self:?}")))
    }
}

/// Mask with the low `k` bits set.
pub(crate) fn low_mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

// Walks both endpoints of a same-colour edge up the BFS tree to their
// lowest common ancestor.
fn odd_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}
