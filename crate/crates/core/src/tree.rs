//! Trees, their centers, center rooting and canonical rooted-tree codes.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A connected acyclic graph with at least one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    graph: Graph,
}

/// The center of a tree: one vertex, or two adjacent ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Center {
    Unicentral(usize),
    Bicentral(usize, usize),
}

impl Center {
    pub fn vertices(&self) -> Vec<usize> {
        match *self {
            Center::Unicentral(c) => vec![c],
            Center::Bicentral(a, b) => vec![a, b],
        }
    }

    pub fn is_bicentral(&self) -> bool {
        matches!(self, Center::Bicentral(..))
    }
}

impl Tree {
    pub fn new(graph: Graph) -> Result<Tree> {
        let n = graph.order();
        if n == 0 {
            return Err(Error::NotATree("no vertices".into()));
        }
        if graph.size() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} edges on {n} vertices",
                graph.size()
            )));
        }
        if !graph.is_connected() {
            return Err(Error::NotATree("disconnected".into()));
        }
        Ok(Tree { graph })
    }

    /// Tree with `parent[v]` the parent of `v`; exactly one entry is `None`.
    pub fn from_parents(parent: &[Option<usize>]) -> Result<Tree> {
        let edges = parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (p, v)));
        Tree::new(Graph::new(parent.len(), edges)?)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Center by repeated removal of all current leaves.
    pub fn center(&self) -> Center {
        let n = self.order();
        let mut degree: Vec<usize> = self
            .graph
            .vertices()
            .map(|v| self.graph.degree(v))
            .collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &leaf in &layer {
                for w in self.graph.neighbors(leaf) {
                    if degree[w] > 1 {
                        degree[w] -= 1;
                        if degree[w] == 1 {
                            next.push(w);
                        }
                    }
                }
                degree[leaf] = 0;
            }
            layer = next;
        }
        layer.sort_unstable();
        match layer[..] {
            [c] => Center::Unicentral(c),
            [a, b] => Center::Bicentral(a, b),
            _ => unreachable!("tree center has one or two vertices"),
        }
    }

    /// Key equal for two trees iff they are isomorphic.
    pub fn canonical_key(&self) -> (usize, AhuCode) {
        (self.order(), RootedTree::at_center(self).code().clone())
    }

    pub fn is_isomorphic(&self, other: &Tree) -> bool {
        self.order() == other.order() && self.canonical_key() == other.canonical_key()
    }

    /// Relabels vertices in breadth-first order from the center, siblings in
    /// canonical order. Isomorphic trees give identical graphs.
    pub fn canonical_form(&self) -> Tree {
        let rt = RootedTree::at_center(self);
        let mut perm = vec![0; self.order()];
        let order = rt.bfs_order().into_iter().filter_map(|v| rt.origin(v));
        for (i, o) in order.enumerate() {
            perm[o] = i;
        }
        Tree {
            graph: self.graph.permuted(&perm),
        }
    }
}

/// Interned canonical code of a rooted tree.
///
/// Equality and hashing use the interned id; ordering uses the parenthesis
/// string, so sorting by code is deterministic across runs and threads.
#[derive(Clone)]
pub struct AhuCode {
    id: u32,
    repr: Arc<str>,
}

impl AhuCode {
    pub fn id(&self) -> u32 {
        self.id
    }

    /// Balanced-parenthesis form: `()` for a single vertex, otherwise `(`
    /// followed by the children's codes in sorted order and `)`.
    pub fn as_str(&self) -> &str {
        &self.repr
    }

    /// Number of vertices of the coded tree.
    pub fn vertex_count(&self) -> usize {
        self.repr.len() / 2
    }

    /// Code of the tree with the given child codes under a new root.
    pub fn from_children(children: &mut [AhuCode]) -> AhuCode {
        children.sort();
        let mut repr =
            String::with_capacity(2 + children.iter().map(|c| c.repr.len()).sum::<usize>());
        repr.push('(');
        for c in children.iter() {
            repr.push_str(&c.repr);
        }
        repr.push(')');
        interner().intern(repr)
    }

    pub fn leaf() -> AhuCode {
        AhuCode::from_children(&mut [])
    }
}

impl PartialEq for AhuCode {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for AhuCode {}

impl Hash for AhuCode {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.id.hash(state)
    }
}

impl Ord for AhuCode {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.id == other.id {
            Ordering::Equal
        } else {
            self.repr.cmp(&other.repr)
        }
    }
}

impl PartialOrd for AhuCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for AhuCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AhuCode#{}{}", self.id, self.repr)
    }
}

impl fmt::Display for AhuCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.repr)
    }
}

#[derive(Default)]
struct Interner {
    table: RwLock<HashMap<Arc<str>, u32>>,
}

impl Interner {
    fn intern(&self, repr: String) -> AhuCode {
        if let Some((key, &id)) = self.table.read().unwrap().get_key_value(repr.as_str()) {
            return AhuCode {
                id,
                repr: key.clone(),
            };
        }
        let mut table = self.table.write().unwrap();
        let next = table.len() as u32;
        let repr: Arc<str> = repr.into();
        let id = *table.entry(repr.clone()).or_insert(next);
        let key = table.get_key_value(&repr).unwrap().0.clone();
        AhuCode { id, repr: key }
    }
}

fn interner() -> &'static Interner {
    static INTERNER: OnceLock<Interner> = OnceLock::new();
    INTERNER.get_or_init(Interner::default)
}

/// A rooted tree with children kept in canonical order.
///
/// Vertices are `0..n`. After [`RootedTree::at_center`] a bicentral input
/// gains one extra vertex; `origin` maps every vertex back to the source
/// tree (`None` for the added vertex).
#[derive(Debug, Clone)]
pub struct RootedTree {
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    codes: Vec<AhuCode>,
    origin: Vec<Option<usize>>,
}

impl RootedTree {
    /// Roots `t` at `root` without changing it.
    pub fn new(t: &Tree, root: usize) -> RootedTree {
        let origin = (0..t.order()).map(Some).collect();
        RootedTree::build(t.graph(), root, origin)
    }

    /// Builds from a parent array (one `None`, the root).
    pub fn from_parents(parent: &[Option<usize>]) -> Result<RootedTree> {
        let t = Tree::from_parents(parent)?;
        let root = parent
            .iter()
            .position(Option::is_none)
            .expect("tree has a root");
        Ok(RootedTree::new(&t, root))
    }

    /// Rooting at the unique center. A unicentral tree is rooted at its
    /// center as is. For a bicentral tree with centers `a`, `b` a new vertex
    /// `n` is joined to both, the edge `ab` is deleted, and the new vertex
    /// becomes the root; it is then the unique center of the result.
    pub fn at_center(t: &Tree) -> RootedTree {
        match t.center() {
            Center::Unicentral(c) => RootedTree::new(t, c),
            Center::Bicentral(a, b) => {
                let n = t.order();
                let mid = n;
                let mut edges: Vec<(usize, usize)> = t
                    .graph()
                    .edges()
                    .iter()
                    .copied()
                    .filter(|&e| e != (a, b))
                    .collect();
                edges.push((a, mid));
                edges.push((b, mid));
                let g = Graph::new(n + 1, edges).expect("subdivided tree fits");
                let mut origin: Vec<Option<usize>> = (0..n).map(Some).collect();
                origin.push(None);
                RootedTree::build(&g, mid, origin)
            }
        }
    }

    fn build(g: &Graph, root: usize, origin: Vec<Option<usize>>) -> RootedTree {
        let n = g.order();
        let mut parent = vec![None; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[root] = true;
        order.push(root);
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    order.push(w);
                }
            }
            i += 1;
        }
        debug_assert_eq!(order.len(), n);
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &v in &order[1..] {
            children[parent[v].unwrap()].push(v);
        }
        let mut codes: Vec<Option<AhuCode>> = vec![None; n];
        for &v in order.iter().rev() {
            let mut kids: Vec<AhuCode> = children[v]
                .iter()
                .map(|&c| codes[c].clone().unwrap())
                .collect();
            codes[v] = Some(AhuCode::from_children(&mut kids));
        }
        let codes: Vec<AhuCode> = codes.into_iter().map(Option::unwrap).collect();
        for list in &mut children {
            list.sort_by(|&x, &y| codes[x].cmp(&codes[y]).then(x.cmp(&y)));
        }
        RootedTree {
            root,
            parent,
            children,
            codes,
            origin,
        }
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn order(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Children of `v`, sorted by canonical code.
    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    /// Code of the whole rooted tree.
    pub fn code(&self) -> &AhuCode {
        &self.codes[self.root]
    }

    /// Code of the subtree hanging from `v`.
    pub fn code_of(&self, v: usize) -> &AhuCode {
        &self.codes[v]
    }

    /// Vertex of the source tree that `v` came from.
    pub fn origin(&self, v: usize) -> Option<usize> {
        self.origin[v]
    }

    /// True when rooting added a vertex (bicentral source).
    pub fn has_added_vertex(&self) -> bool {
        self.origin.iter().any(Option::is_none)
    }

    /// Children of `v` grouped into runs of equal code, in canonical order.
    pub fn child_classes(&self, v: usize) -> Vec<&[usize]> {
        self.children[v]
            .chunk_by(|&x, &y| self.codes[x] == self.codes[y])
            .collect()
    }

    /// Vertices in breadth-first order from the root.
    pub fn bfs_order(&self) -> Vec<usize> {
        let mut order = vec![self.root];
        let mut i = 0;
        while i < order.len() {
            order.extend_from_slice(&self.children[order[i]]);
            i += 1;
        }
        order
    }

    /// The rooted tree as a plain tree (the root becomes an ordinary vertex).
    pub fn to_tree(&self) -> Tree {
        Tree::from_parents(&self.parent).expect("rooted tree is a tree")
    }
}
