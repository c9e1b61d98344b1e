//! Automorphisms and isomorphisms of small graphs.
//!
//! One backtracking engine serves every query. Both sides of the search hold
//! an ordered partition of the vertices that is refined to a fixpoint by the
//! invariant "current cell, then number of neighbours in each cell". The
//! search individualizes the first vertex of the smallest non-singleton cell
//! on the left and tries every vertex of the matching cell on the right.
//! Branches whose refinement traces differ are cut; discrete leaves are
//! checked edge by edge.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::tree::RootedTree;

/// Default bound on the order of graphs whose group is materialized.
pub const DEFAULT_MAX_ORDER: usize = 12;
/// Default bound on the number of materialized group elements.
pub const DEFAULT_MAX_ELEMENTS: usize = 1_000_000;

/// A bijection on `0..n`, stored as the image of each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Contract(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Swaps `a` and `b`, fixes everything else.
    pub fn transposition(n: usize, a: usize, b: usize) -> Permutation {
        let mut p = Permutation::identity(n);
        p.images.swap(a, b);
        p
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` after `other`: `v -> self(other(v))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }
}

/// Bounds for materializing a group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_order: usize,
    pub max_elements: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_order: DEFAULT_MAX_ORDER,
            max_elements: DEFAULT_MAX_ELEMENTS,
        }
    }
}

/// The automorphism group of a graph, with every element listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    n: usize,
    elements: Vec<Permutation>,
}

impl AutGroup {
    pub fn degree(&self) -> usize {
        self.n
    }

    /// Elements in the order the search produced them; the identity is first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> BigUint {
        BigUint::from(self.elements.len())
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn non_identity(&self) -> impl Iterator<Item = &Permutation> {
        self.elements.iter().filter(|p| !p.is_identity())
    }

    /// Orbit partition, each orbit ascending, orbits ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits(self, self.n)
    }
}

/// True iff `p` maps edges to edges and non-edges to non-edges.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> bool {
    p.len() == g.order() && is_isomorphism(g, g, p.images())
}

fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    g.vertices().all(|u| {
        let mapped = bits(g.neighbor_mask(u)).fold(0u64, |acc, w| acc | 1 << map[w]);
        mapped == h.neighbor_mask(map[u])
    })
}

/// Every automorphism of `g` under the default limits.
pub fn automorphisms(g: &Graph) -> Result<AutGroup> {
    automorphisms_with(g, SearchLimits::default())
}

pub fn automorphisms_with(g: &Graph, limits: SearchLimits) -> Result<AutGroup> {
    if g.order() > limits.max_order {
        return Err(Error::Capacity {
            what: "order for automorphism enumeration",
            value: g.order(),
            limit: limits.max_order,
        });
    }
    let colors = vec![0u32; g.order()];
    let mut elements = Vec::new();
    let mut overflow = false;
    Search::new(g, g, &colors, &colors).run(&mut |p| {
        if elements.len() == limits.max_elements {
            overflow = true;
            return false;
        }
        elements.push(Permutation { images: p.to_vec() });
        true
    });
    if overflow {
        return Err(Error::Capacity {
            what: "automorphism group elements",
            value: limits.max_elements + 1,
            limit: limits.max_elements,
        });
    }
    Ok(AutGroup {
        n: g.order(),
        elements,
    })
}

/// A non-identity automorphism of `g` preserving `colors`, if one exists.
pub fn find_nontrivial_automorphism(g: &Graph, colors: &[u32]) -> Option<Permutation> {
    assert_eq!(colors.len(), g.order());
    let mut found = None;
    Search::new(g, g, colors, colors).run(&mut |p| {
        if p.iter().enumerate().all(|(i, &x)| i == x) {
            true
        } else {
            found = Some(Permutation { images: p.to_vec() });
            false
        }
    });
    found
}

/// An isomorphism `g -> h` (as the image of each vertex of `g`), if any.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Permutation> {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence()
    {
        return None;
    }
    let colors = vec![0u32; g.order()];
    let mut found = None;
    Search::new(g, h, &colors, &colors).run(&mut |p| {
        found = Some(Permutation { images: p.to_vec() });
        false
    });
    found
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}

/// Orbit partition of the vertices `0..n` under the elements of `group`.
pub fn orbits(group: &AutGroup, n: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for p in group.elements() {
        for v in 0..n {
            let (a, b) = (find(&mut parent, v), find(&mut parent, p.apply(v)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        if index[r] == usize::MAX {
            index[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[index[r]].push(v);
    }
    classes
}

/// Order of the group of root-fixing automorphisms of a rooted tree: the
/// product, over all vertices, of `m!` for every run of `m` children with
/// equal canonical code.
pub fn tree_aut_order(rt: &RootedTree) -> BigUint {
    let mut order = BigUint::one();
    for v in 0..rt.order() {
        for class in rt.child_classes(v) {
            for k in 2..=class.len() {
                order *= k;
            }
        }
    }
    order
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    left: &'a Graph,
    right: &'a Graph,
    left_cells: Cells,
    right_cells: Cells,
}

impl<'a> Search<'a> {
    fn new(left: &'a Graph, right: &'a Graph, lc: &[u32], rc: &[u32]) -> Search<'a> {
        Search {
            left,
            right,
            left_cells: color_cells(lc),
            right_cells: color_cells(rc),
        }
    }

    /// Calls `visit` on every isomorphism consistent with the colourings
    /// until it returns `false`.
    fn run(self, visit: &mut dyn FnMut(&[usize]) -> bool) {
        if self.left.order() != self.right.order() {
            return;
        }
        let shapes = |c: &Cells| c.iter().map(Vec::len).collect::<Vec<_>>();
        if shapes(&self.left_cells) != shapes(&self.right_cells) {
            return;
        }
        let (l, lt) = refine(self.left, self.left_cells);
        let (r, rt) = refine(self.right, self.right_cells);
        if lt != rt {
            return;
        }
        descend(self.left, self.right, l, r, visit);
    }
}

fn color_cells(colors: &[u32]) -> Cells {
    let mut order: Vec<usize> = (0..colors.len()).collect();
    order.sort_by_key(|&v| (colors[v], v));
    let mut cells: Cells = Vec::new();
    for v in order {
        match cells.last_mut() {
            Some(cell) if colors[cell[0]] == colors[v] => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    cells
}

// Returns false when the visitor asked to stop.
fn descend(
    left: &Graph,
    right: &Graph,
    lcells: Cells,
    rcells: Cells,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let n = left.order();
    let target = lcells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(k) = target else {
        let mut map = vec![0; n];
        for (lc, rc) in lcells.iter().zip(&rcells) {
            map[lc[0]] = rc[0];
        }
        if is_isomorphism(left, right, &map) {
            return visit(&map);
        }
        return true;
    };
    let v = lcells[k][0];
    let (l, lt) = refine(left, individualize(&lcells, k, v));
    for &w in &rcells[k] {
        let (r, rt) = refine(right, individualize(&rcells, k, w));
        if lt == rt && !descend(left, right, l.clone(), r, visit) {
            return false;
        }
    }
    true
}

fn individualize(cells: &Cells, k: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend_from_slice(&cells[..k]);
    out.push(vec![v]);
    out.push(cells[k].iter().copied().filter(|&x| x != v).collect());
    out.extend_from_slice(&cells[k + 1..]);
    out
}

/// Refines to the coarsest equitable partition below `cells`. The trace
/// records every split key so two refinements can be compared.
fn refine(g: &Graph, mut cells: Cells) -> (Cells, Vec<u32>) {
    let mut trace = Vec::new();
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
            .collect();
        let key = |v: usize| -> Vec<u32> {
            masks
                .iter()
                .map(|m| (g.neighbor_mask(v) & m).count_ones())
                .collect()
        };
        let mut next: Cells = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell.iter().map(|&v| (key(v), v)).collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    trace.push((i - start) as u32);
                    trace.extend_from_slice(&keyed[start].0);
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
            trace.push(u32::MAX);
        }
        let done = next.len() == cells.len();
        cells = next;
        if done {
            return (cells, trace);
        }
    }
}
