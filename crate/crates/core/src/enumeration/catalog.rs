//! Closed-form description of the trees of radius at most two with
//! distinguishing number two.
//!
//! With two labels, `L(leaf) = 2`, a child carrying one leaf has
//! `L = 2 * C(2, 1) = 4`, one carrying two leaves `L = 2 * C(2, 2) = 2`, and
//! one carrying three or more leaves `L = 0`. At the center the count is
//! `2 * C(2, m0) * C(4, m1) * C(2, m2)`, nonzero iff `m0 <= 2`, `m1 <= 4`,
//! `m2 <= 2`. `D = 1` instead when the tree has no symmetry at all.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::{write_dot, write_graph6, Graph};
use crate::tree::{RootedTree, Tree};

/// Shape of a center-rooted tree of height at most two whose root children
/// each carry at most two leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct StarProfile {
    pub bicentral: bool,
    /// Root children that are leaves.
    pub leaves: usize,
    /// Root children carrying exactly one leaf.
    pub one_leaf: usize,
    /// Root children carrying exactly two leaves.
    pub two_leaf: usize,
}

impl StarProfile {
    /// `None` when the tree is taller or some root child has 3+ leaves.
    pub fn of(t: &Tree) -> Option<StarProfile> {
        let rt = RootedTree::at_center(t);
        let mut counts = [0usize; 3];
        for &c in rt.children(rt.root()) {
            let kids = rt.children(c);
            if kids.len() > 2 || kids.iter().any(|&k| !rt.children(k).is_empty()) {
                return None;
            }
            counts[kids.len()] += 1;
        }
        Some(StarProfile {
            bicentral: rt.has_added_vertex(),
            leaves: counts[0],
            one_leaf: counts[1],
            two_leaf: counts[2],
        })
    }

    fn admits_two_labels(&self) -> bool {
        self.leaves <= 2 && self.one_leaf <= 4 && self.two_leaf <= 2
    }

    fn is_asymmetric(&self) -> bool {
        self.two_leaf == 0 && self.leaves <= 1 && self.one_leaf <= 1
    }
}

/// Radius at most two and distinguishing number exactly two, decided from
/// the shape alone.
pub fn main_theorem_predicate(t: &Tree) -> bool {
    StarProfile::of(t).is_some_and(|p| p.admits_two_labels() && !p.is_asymmetric())
}

/// One tree of the closed-form family.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub graph6: String,
    pub n: usize,
    pub profile: StarProfile,
    #[serde(skip)]
    pub tree: Tree,
}

impl CatalogEntry {
    pub fn new(tree: Tree) -> CatalogEntry {
        let tree = tree.canonical_form();
        CatalogEntry {
            graph6: write_graph6(tree.graph()).expect("catalog trees are small"),
            n: tree.order(),
            profile: StarProfile::of(&tree).expect("catalog trees have a star profile"),
            tree,
        }
    }

    pub fn dot(&self) -> String {
        write_dot(self.tree.graph(), &self.graph6)
    }
}

fn spider(leaves: usize, one_leaf: usize, two_leaf: usize) -> Tree {
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..leaves {
        edges.push((0, next));
        next += 1;
    }
    for k in std::iter::repeat_n(1, one_leaf).chain(std::iter::repeat_n(2, two_leaf)) {
        let hub = next;
        edges.push((0, hub));
        next += 1;
        for _ in 0..k {
            edges.push((hub, next));
            next += 1;
        }
    }
    Tree::new(Graph::new(next, edges).unwrap()).unwrap()
}

fn double_broom(a: usize, b: usize) -> Tree {
    let mut edges = vec![(0, 1)];
    for i in 0..a {
        edges.push((0, 2 + i));
    }
    for i in 0..b {
        edges.push((1, 2 + a + i));
    }
    Tree::new(Graph::new(2 + a + b, edges).unwrap()).unwrap()
}

/// Every tree matched by [`main_theorem_predicate`], generated from its
/// parameters and ordered by `(n, graph6)`.
pub fn main_theorem_catalog() -> Vec<CatalogEntry> {
    let mut candidates = Vec::new();
    for leaves in 0..=2 {
        for one_leaf in 0..=4 {
            for two_leaf in 0..=2 {
                candidates.push(spider(leaves, one_leaf, two_leaf));
            }
        }
    }
    for a in 0..=2 {
        for b in a..=2 {
            candidates.push(double_broom(a, b));
        }
    }
    let mut by_key = BTreeMap::new();
    for t in candidates.into_iter().filter(main_theorem_predicate) {
        let entry = CatalogEntry::new(t);
        by_key.insert((entry.n, entry.graph6.clone()), entry);
    }
    by_key.into_values().collect()
}
