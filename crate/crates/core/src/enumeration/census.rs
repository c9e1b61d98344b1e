use serde::{Deserialize, Serialize};

use super::{connected_graphs, free_trees};
use crate::distinguishing::{distinguishing_number_bruteforce_with, distinguishing_number_tree};
use crate::error::{Error, Result};
use crate::graph::{write_graph6, Graph};
use crate::par::{self, Execution};
use crate::self_centered::{is_edge_minimal_2sc, is_two_self_centered};
use crate::symmetry::{automorphisms, tree_aut_order};
use crate::tree::{RootedTree, Tree};

/// Invariants of one isomorphism class. `aut_order` is a decimal string so
/// that large groups survive JSON round trips exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub graph6: String,
    pub n: usize,
    pub radius: u32,
    pub diameter: u32,
    pub center_size: usize,
    pub distinguishing_number: usize,
    pub aut_order: String,
    pub is_tree: bool,
    pub is_bipartite: bool,
    pub is_2_self_centered: bool,
    pub is_edge_minimal_2sc: bool,
}

/// Which classes a census covers: every class on exactly `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Universe {
    Trees(usize),
    Graphs(usize),
}

impl Universe {
    pub fn describe(&self) -> String {
        match self {
            Universe::Trees(n) => format!("all trees on {n} vertices"),
            Universe::Graphs(n) => format!("all connected graphs on {n} vertices"),
        }
    }
}

/// Record for a single connected graph. Trees go through the counting
/// recursion; other graphs through exhaustive search.
pub fn census_record(g: &Graph) -> Result<CensusRecord> {
    if !g.is_connected() || g.order() == 0 {
        return Err(Error::Contract(
            "census records need a nonempty connected graph".into(),
        ));
    }
    let profile = g.metric_profile();
    let is_tree = g.size() + 1 == g.order();
    let (d, aut) = if is_tree {
        let t = Tree::new(g.clone())?;
        // Every automorphism fixes the center, so the root-fixing group of
        // the center rooting is the whole group.
        let aut = tree_aut_order(&RootedTree::at_center(&t));
        (distinguishing_number_tree(&t).value, aut)
    } else {
        let group = automorphisms(g)?;
        let d = distinguishing_number_bruteforce_with(g, g.order())?.value;
        (d, group.order())
    };
    Ok(CensusRecord {
        graph6: write_graph6(g)?,
        n: g.order(),
        radius: profile.radius(),
        diameter: profile.diameter(),
        center_size: profile.center().len(),
        distinguishing_number: d,
        aut_order: aut.to_string(),
        is_tree,
        is_bipartite: g.is_bipartite(),
        is_2_self_centered: is_two_self_centered(g),
        is_edge_minimal_2sc: is_edge_minimal_2sc(g),
    })
}

/// Records for every class in the universe, sorted by `(n, graph6)`.
pub fn census(universe: Universe, exec: Execution) -> Result<Vec<CensusRecord>> {
    let graphs: Vec<Graph> = match universe {
        Universe::Trees(n) => free_trees(n)?.into_iter().map(Tree::into_graph).collect(),
        Universe::Graphs(n) => connected_graphs(n)?,
    };
    let mut records = par::map(&graphs, exec, census_record)
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| (a.n, &a.graph6).cmp(&(b.n, &b.graph6)));
    Ok(records)
}

/// Newline-delimited JSON, one record per line.
pub fn to_ndjson(records: &[CensusRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("record serializes"));
        out.push('\n');
    }
    out
}
