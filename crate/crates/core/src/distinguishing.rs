//! Distinguishing numbers.
//!
//! Two independent routes are provided. [`distinguishing_number_bruteforce`]
//! searches vertex labelings of an arbitrary small graph directly.
//! [`distinguishing_number_tree`] roots a tree at its center and counts
//! classes of distinguishing labelings bottom-up:
//!
//! ```text
//! L(leaf, d) = d
//! L(v, d)    = d * prod over classes of isomorphic children C(L(child, d), m)
//! ```
//!
//! where `m` is the size of the class and `C` the binomial coefficient.
//! Isomorphic siblings must carry pairwise inequivalent labelings, so a class
//! of `m` siblings picks an `m`-subset of the `L(child, d)` labeled classes.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::symmetry::{find_nontrivial_automorphism, AutGroup};
use crate::tree::{RootedTree, Tree};

/// Default bound on the order accepted by the brute-force search.
pub const DEFAULT_BRUTEFORCE_MAX_ORDER: usize = 10;

/// A vertex labeling with labels `1..=d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Labeling {
    labels: Vec<u32>,
    d: u32,
}

impl Labeling {
    pub fn new(labels: Vec<u32>, d: u32) -> Result<Labeling> {
        if d == 0 {
            return Err(Error::Contract("label count must be at least 1".into()));
        }
        if let Some(bad) = labels.iter().find(|&&l| l == 0 || l > d) {
            return Err(Error::Contract(format!("label {bad} outside 1..={d}")));
        }
        Ok(Labeling { labels, d })
    }

    /// Every vertex labeled `1`.
    pub fn constant(n: usize) -> Labeling {
        Labeling {
            labels: vec![1; n],
            d: 1,
        }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> u32 {
        self.labels[v]
    }

    pub fn label_count(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// `D(G)` with a witness labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishingResult {
    pub value: usize,
    pub witness: Labeling,
    /// `L(root, d)` for `d = 1..=value` (tree route only).
    pub class_counts: Option<Vec<BigUint>>,
}

/// True iff every non-identity element of `group` moves some label.
pub fn is_distinguishing(g: &Graph, phi: &Labeling, group: &AutGroup) -> bool {
    debug_assert_eq!(group.degree(), g.order());
    phi.len() == g.order()
        && group
            .non_identity()
            .all(|s| (0..phi.len()).any(|x| phi.label(x) != phi.label(s.apply(x))))
}

/// Smallest `d` admitting a distinguishing labeling, by exhaustive search
/// with the default order bound.
pub fn distinguishing_number_bruteforce(g: &Graph) -> Result<DistinguishingResult> {
    distinguishing_number_bruteforce_with(g, DEFAULT_BRUTEFORCE_MAX_ORDER)
}

pub fn distinguishing_number_bruteforce_with(
    g: &Graph,
    max_order: usize,
) -> Result<DistinguishingResult> {
    let n = g.order();
    if n > max_order {
        return Err(Error::Capacity {
            what: "order for brute-force distinguishing search",
            value: n,
            limit: max_order,
        });
    }
    if find_nontrivial_automorphism(g, &vec![0; n]).is_none() {
        return Ok(DistinguishingResult {
            value: 1,
            witness: Labeling::constant(n),
            class_counts: None,
        });
    }
    for d in twin_bound(g).max(2)..=n {
        if let Some(witness) = find_distinguishing_labeling(g, d) {
            return Ok(DistinguishingResult {
                value: d,
                witness,
                class_counts: None,
            });
        }
    }
    unreachable!("all-distinct labels always distinguish")
}

/// Size of the largest set of vertices sharing the same open or the same
/// closed neighbourhood. Any two of them can be swapped by an automorphism
/// fixing everything else, so they need pairwise distinct labels.
fn twin_bound(g: &Graph) -> usize {
    let mut open: HashMap<u64, usize> = HashMap::new();
    let mut closed: HashMap<u64, usize> = HashMap::new();
    for v in g.vertices() {
        *open.entry(g.neighbor_mask(v)).or_default() += 1;
        *closed.entry(g.neighbor_mask(v) | 1 << v).or_default() += 1;
    }
    open.values()
        .chain(closed.values())
        .copied()
        .max()
        .unwrap_or(0)
}

/// The lexicographically first distinguishing labeling with at most `d`
/// labels, if any.
///
/// Vertices are labeled in index order. After each assignment the partial
/// labeling is rejected if some non-identity automorphism fixes every
/// unlabeled vertex and preserves the labels given so far, since no
/// completion can break it. Renaming labels keeps a labeling distinguishing
/// and the lexicographically first one introduces labels in increasing
/// order, so each vertex gets at most one label not used before it.
pub fn find_distinguishing_labeling(g: &Graph, d: usize) -> Option<Labeling> {
    let n = g.order();
    if d == 0 {
        return None;
    }
    let mut colors: Vec<u32> = (0..n as u32).map(|v| d as u32 + v).collect();
    if extend(g, d as u32, 0, 0, &mut colors) {
        let labels = colors.iter().map(|&c| c + 1).collect();
        Some(Labeling {
            labels,
            d: d as u32,
        })
    } else {
        None
    }
}

fn extend(g: &Graph, d: u32, v: usize, used: u32, colors: &mut [u32]) -> bool {
    if v == colors.len() {
        return true;
    }
    for label in 0..d.min(used + 1) {
        colors[v] = label;
        if find_nontrivial_automorphism(g, colors).is_none()
            && extend(g, d, v + 1, used.max(label + 1), colors)
        {
            return true;
        }
    }
    colors[v] = d + v as u32;
    false
}

/// Exact binomial coefficient `C(a, m)`, zero when `a < m`.
pub fn binomial(a: &BigUint, m: usize) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..m {
        let i_big = BigUint::from(i);
        if *a <= i_big {
            return BigUint::zero();
        }
        num *= a - i_big;
        den *= i + 1;
    }
    num / den
}

/// `L(v, d)` for every vertex of `rt`.
pub fn class_counts(rt: &RootedTree, d: usize) -> Vec<BigUint> {
    let mut counts = vec![BigUint::zero(); rt.order()];
    let dd = BigUint::from(d);
    for v in rt.bfs_order().into_iter().rev() {
        let mut acc = dd.clone();
        for class in rt.child_classes(v) {
            if acc.is_zero() {
                break;
            }
            acc *= binomial(&counts[class[0]], class.len());
        }
        counts[v] = acc;
    }
    counts
}

/// `L(root, d)`: number of classes of distinguishing `d`-labelings of the
/// rooted tree, two labelings being equivalent when a root-fixing
/// automorphism carries one to the other.
pub fn count_rooted_distinguishing_classes(rt: &RootedTree, d: usize) -> BigUint {
    class_counts(rt, d).swap_remove(rt.root())
}

/// `D(T)` through the center-rooted counting recursion. The witness assigns,
/// within every class of isomorphic siblings, the lexicographically smallest
/// set of labeled classes.
pub fn distinguishing_number_tree(t: &Tree) -> DistinguishingResult {
    let rt = RootedTree::at_center(t);
    let mut history = Vec::new();
    for d in 1..=rt.order() {
        let counts = class_counts(&rt, d);
        let total = counts[rt.root()].clone();
        history.push(total.clone());
        if !total.is_zero() {
            let mut labels = vec![0u32; rt.order()];
            unrank(&rt, &counts, d, rt.root(), BigUint::zero(), &mut labels);
            let mut original = vec![0u32; t.order()];
            for (v, &l) in labels.iter().enumerate() {
                if let Some(o) = rt.origin(v) {
                    original[o] = l;
                }
            }
            return DistinguishingResult {
                value: d,
                witness: Labeling {
                    labels: original,
                    d: d as u32,
                },
                class_counts: Some(history),
            };
        }
    }
    unreachable!("d = order always admits a distinguishing labeling")
}

/// Writes into `labels` the labeling of the subtree at `v` with rank `index`.
/// Ranks are mixed-radix numbers whose most significant digit is the root
/// label, followed by one combination rank per child class in canonical
/// order.
fn unrank(
    rt: &RootedTree,
    counts: &[BigUint],
    d: usize,
    v: usize,
    mut index: BigUint,
    labels: &mut [u32],
) {
    let classes = rt.child_classes(v);
    let mut digits = vec![BigUint::zero(); classes.len()];
    for (k, class) in classes.iter().enumerate().rev() {
        let radix = binomial(&counts[class[0]], class.len());
        digits[k] = &index % &radix;
        index /= radix;
    }
    let root_label = index.to_u32().expect("root digit below d");
    debug_assert!((root_label as usize) < d);
    labels[v] = root_label + 1;
    for (class, digit) in classes.iter().zip(digits) {
        let ranks = unrank_combination(&counts[class[0]], class.len(), digit);
        for (&child, rank) in class.iter().zip(ranks) {
            unrank(rt, counts, d, child, rank, labels);
        }
    }
}

/// The `index`-th `m`-subset of `{0, .., total-1}` in lexicographic order.
fn unrank_combination(total: &BigUint, m: usize, mut index: BigUint) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(m);
    let mut x = BigUint::zero();
    for p in 0..m {
        loop {
            let rest = total - &x - 1u32;
            let with_x = binomial(&rest, m - p - 1);
            if index < with_x {
                out.push(x.clone());
                x += 1u32;
                break;
            }
            index -= with_x;
            x += 1u32;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;
    use crate::symmetry::automorphisms;

    fn graph(f: Family) -> Graph {
        f.build().unwrap()
    }

    fn tree(f: Family) -> Tree {
        Tree::new(graph(f)).unwrap()
    }

    fn labeling(v: &[u32], d: u32) -> Labeling {
        Labeling::new(v.to_vec(), d).unwrap()
    }

    #[test]
    fn distinguishing_predicate() {
        let k3 = graph(Family::Complete(3));
        let group = automorphisms(&k3).unwrap();
        assert!(is_distinguishing(&k3, &labeling(&[1, 2, 3], 3), &group));
        assert!(!is_distinguishing(&k3, &labeling(&[1, 1, 2], 2), &group));
        let p4 = graph(Family::Path(4));
        let group = automorphisms(&p4).unwrap();
        assert!(is_distinguishing(&p4, &labeling(&[1, 1, 1, 2], 2), &group));
        assert!(!is_distinguishing(&p4, &labeling(&[1, 2, 2, 1], 2), &group));
    }

    #[test]
    fn labeling_validation() {
        assert!(Labeling::new(vec![1, 3], 2).is_err());
        assert!(Labeling::new(vec![0], 2).is_err());
        assert!(Labeling::new(vec![], 0).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(
            distinguishing_number_bruteforce(&graph(Family::Path(7)))
                .unwrap()
                .value,
            2
        );
        assert_eq!(
            distinguishing_number_bruteforce(&graph(Family::Complete(5)))
                .unwrap()
                .value,
            5
        );
        assert_eq!(
            distinguishing_number_bruteforce(&graph(Family::Star(3)))
                .unwrap()
                .value,
            3
        );
        let k1 = distinguishing_number_bruteforce(&graph(Family::Path(1))).unwrap();
        assert_eq!((k1.value, k1.witness.labels()), (1, &[1][..]));
        assert!(distinguishing_number_bruteforce(&graph(Family::Path(11)))
            .unwrap_err()
            .is_capacity());
    }

    #[test]
    fn bruteforce_witness_is_lexicographically_first() {
        let r = distinguishing_number_bruteforce(&graph(Family::Path(4))).unwrap();
        assert_eq!(r.witness.labels(), &[1, 1, 1, 2]);
        let r = distinguishing_number_bruteforce(&graph(Family::Star(3))).unwrap();
        assert_eq!(r.witness.labels(), &[1, 1, 2, 3]);
    }

    #[test]
    fn binomials() {
        let b = |a: u32, m| binomial(&BigUint::from(a), m);
        assert_eq!(b(2, 3), BigUint::zero());
        assert_eq!(b(2, 2), BigUint::one());
        assert_eq!(b(5, 2), BigUint::from(10u32));
        assert_eq!(b(7, 0), BigUint::one());
        assert_eq!(b(0, 0), BigUint::one());
    }

    #[test]
    fn counting_examples() {
        let single = RootedTree::from_parents(&[None]).unwrap();
        assert_eq!(count_rooted_distinguishing_classes(&single, 2), 2u32.into());
        let three = RootedTree::from_parents(&[None, Some(0), Some(0), Some(0)]).unwrap();
        assert_eq!(count_rooted_distinguishing_classes(&three, 2), 0u32.into());
        let two = RootedTree::from_parents(&[None, Some(0), Some(0)]).unwrap();
        assert_eq!(count_rooted_distinguishing_classes(&two, 2), 2u32.into());
    }

    // P_3 rooted at the middle, 2 labels: of the 8 labelings, those with
    // distinct leaf labels break the swap; the swap pairs them up.
    #[test]
    fn cherry_class_count_by_enumeration() {
        let g = graph(Family::Path(3));
        let swap = |l: [u32; 3]| [l[2], l[1], l[0]];
        let mut classes = std::collections::BTreeSet::new();
        for code in 0..8u32 {
            let l = [code & 1, code >> 1 & 1, code >> 2 & 1];
            if l[0] != l[2] {
                classes.insert(l.min(swap(l)));
            }
        }
        let rt = RootedTree::new(&Tree::new(g).unwrap(), 1);
        assert_eq!(
            count_rooted_distinguishing_classes(&rt, 2),
            BigUint::from(classes.len())
        );
    }

    #[test]
    fn tree_examples() {
        assert_eq!(distinguishing_number_tree(&tree(Family::Path(2))).value, 2);
        assert_eq!(distinguishing_number_tree(&tree(Family::Star(4))).value, 4);
        let single = distinguishing_number_tree(&tree(Family::Path(1)));
        assert_eq!(single.value, 1);
        assert_eq!(single.witness.labels(), &[1]);
        assert_eq!(single.class_counts, Some(vec![BigUint::one()]));
    }

    #[test]
    fn tree_witnesses_distinguish() {
        for f in [
            Family::Path(2),
            Family::Path(4),
            Family::Path(9),
            Family::Star(5),
            Family::DoubleStar(2, 2),
            Family::DoubleStar(3, 5),
        ] {
            let t = tree(f);
            let r = distinguishing_number_tree(&t);
            let group = automorphisms(t.graph()).unwrap();
            assert!(is_distinguishing(t.graph(), &r.witness, &group), "{f:?}");
            assert_eq!(r.witness.label_count() as usize, r.value);
            assert_eq!(
                r.value,
                distinguishing_number_bruteforce(t.graph()).unwrap().value
            );
        }
    }

    #[test]
    fn combination_unranking() {
        let total = BigUint::from(5u32);
        let all: Vec<Vec<u32>> = (0..10u32)
            .map(|i| {
                unrank_combination(&total, 2, i.into())
                    .into_iter()
                    .map(|x| x.to_u32().unwrap())
                    .collect()
            })
            .collect();
        let mut expected = Vec::new();
        for a in 0..5 {
            for b in a + 1..5 {
                expected.push(vec![a, b]);
            }
        }
        assert_eq!(all, expected);
    }

    #[test]
    fn long_paths_use_two_labels() {
        let r = distinguishing_number_tree(&tree(Family::Path(50)));
        assert_eq!(r.value, 2);
        let w = r.witness.labels();
        assert!((0..50).any(|i| w[i] != w[49 - i]));
    }
}
