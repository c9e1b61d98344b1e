use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::catalog::{main_theorem_predicate, CatalogEntry};
use super::MAX_TREE_ORDER;
use super::{all_connected_graphs, all_trees, check_bound, MAX_GRAPH_ORDER, MAX_TREE_CHECK_ORDER};
use crate::distinguishing::{distinguishing_number_bruteforce, distinguishing_number_tree};
use crate::error::{Error, Result};
use crate::graph::{write_graph6, Bipartition, Family, Graph};
use crate::par::{self, Execution};
use crate::self_centered::{
    classify_theorem7, is_edge_minimal_2sc, is_two_self_centered, iterate_procedure,
    locally_geodesic_cycle_at, run_procedure_to_fixpoint, triangle_edges_without_critical_end,
    FixpointStatus, Theorem7Class,
};
use crate::symmetry::{are_isomorphic, automorphisms};
use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportStatus {
    Verified,
    Violated,
    Vacuous,
}

/// Outcome of one exhaustive check. `violations` holds graph6 witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub universe: String,
    pub instances_checked: usize,
    pub violations: Vec<String>,
    pub status: ReportStatus,
    pub notes: Vec<String>,
}

impl TheoremReport {
    fn new(
        id: TheoremId,
        universe: String,
        instances_checked: usize,
        mut violations: Vec<String>,
        notes: Vec<String>,
    ) -> TheoremReport {
        violations.sort();
        violations.dedup();
        let status = if !violations.is_empty() {
            ReportStatus::Violated
        } else if instances_checked == 0 {
            ReportStatus::Vacuous
        } else {
            ReportStatus::Verified
        };
        TheoremReport {
            theorem_id: id.to_string(),
            universe,
            instances_checked,
            violations,
            status,
            notes,
        }
    }

    /// Verified or vacuous.
    pub fn holds(&self) -> bool {
        self.status != ReportStatus::Violated
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    Main,
    Thmrad,
    Geq4,
    CenterComplement,
    Corollary7,
    Theorem15,
    Theorem7,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::Main,
        TheoremId::Thmrad,
        TheoremId::Geq4,
        TheoremId::CenterComplement,
        TheoremId::Corollary7,
        TheoremId::Theorem15,
        TheoremId::Theorem7,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Main => "main",
            TheoremId::Thmrad => "thmrad",
            TheoremId::Geq4 => "geq4",
            TheoremId::CenterComplement => "center_complement",
            TheoremId::Corollary7 => "corollary7",
            TheoremId::Theorem15 => "theorem15",
            TheoremId::Theorem7 => "theorem7",
        }
    }

    /// Largest `nmax` the check accepts.
    pub fn max_order(self) -> usize {
        match self {
            TheoremId::Thmrad => MAX_TREE_ORDER,
            TheoremId::Main | TheoremId::Geq4 | TheoremId::CenterComplement => MAX_TREE_CHECK_ORDER,
            TheoremId::Corollary7 | TheoremId::Theorem15 => MAX_GRAPH_ORDER,
            TheoremId::Theorem7 => 10,
        }
    }

    pub fn run(self, nmax: usize, exec: Execution) -> Result<TheoremReport> {
        match self {
            TheoremId::Main => verify_main_theorem(nmax, exec).map(|o| o.report),
            TheoremId::Thmrad => verify_thmrad(nmax, exec),
            TheoremId::Geq4 => verify_geq4(nmax, exec),
            TheoremId::CenterComplement => verify_center_complement(nmax, exec),
            TheoremId::Corollary7 => verify_corollary7(nmax, exec),
            TheoremId::Theorem15 => verify_theorem15(nmax, exec),
            TheoremId::Theorem7 => verify_theorem7(nmax, exec),
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<TheoremId> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Contract(format!("unknown theorem id `{s}`")))
    }
}

/// Every check, each with `nmax` lowered to its own bound where needed.
pub fn verify_all(nmax: usize, exec: Execution) -> Result<Vec<TheoremReport>> {
    TheoremId::ALL
        .into_iter()
        .map(|id| {
            let bound = id.max_order();
            let mut report = id.run(nmax.min(bound), exec)?;
            if nmax > bound {
                report
                    .notes
                    .push(format!("nmax lowered from {nmax} to {bound}"));
            }
            Ok(report)
        })
        .collect()
}

fn g6(g: &Graph) -> String {
    write_graph6(g).expect("checked graphs are small")
}

fn trees_upto(id: TheoremId, nmax: usize) -> Result<Vec<Tree>> {
    check_bound("nmax for tree checks", nmax, id.max_order())?;
    all_trees(nmax)
}

/// The computed catalog of trees with radius at most two and `D = 2`, and
/// its comparison with the closed-form predicate.
#[derive(Debug, Clone)]
pub struct MainTheoremOutcome {
    pub report: TheoremReport,
    pub catalog: Vec<CatalogEntry>,
}

pub fn verify_main_theorem(nmax: usize, exec: Execution) -> Result<MainTheoremOutcome> {
    let trees = trees_upto(TheoremId::Main, nmax)?;
    let flags = par::map(&trees, exec, |t| {
        let in_s =
            t.graph().metric_profile().radius() <= 2 && distinguishing_number_tree(t).value == 2;
        (in_s, main_theorem_predicate(t))
    });
    let mut catalog = Vec::new();
    let mut violations = Vec::new();
    for (t, &(in_s, in_p)) in trees.iter().zip(&flags) {
        if in_s {
            catalog.push(CatalogEntry::new(t.clone()));
        }
        if in_s != in_p {
            violations.push(g6(t.graph()));
        }
    }
    let notes = vec![
        format!("catalog size {}", catalog.len()),
        format!(
            "computed catalog and closed-form predicate differ on {} trees",
            violations.len()
        ),
    ];
    let report = TheoremReport::new(
        TheoremId::Main,
        format!("all trees n <= {nmax}"),
        trees.len(),
        violations,
        notes,
    );
    Ok(MainTheoremOutcome { report, catalog })
}

/// No tree of diameter 3 and radius at least 3 has `D = 2`. The hypothesis
/// class is empty since a diameter-3 tree has radius 2.
pub fn verify_thmrad(nmax: usize, exec: Execution) -> Result<TheoremReport> {
    let trees = trees_upto(TheoremId::Thmrad, nmax)?;
    let rows = par::map(&trees, exec, |t| {
        let p = t.graph().metric_profile();
        (p.diameter(), p.radius())
    });
    let diameter3 = rows.iter().filter(|r| r.0 == 3).count();
    let hypothesis: Vec<&Tree> = trees
        .iter()
        .zip(&rows)
        .filter(|(_, &(d, r))| d == 3 && r >= 3)
        .map(|(t, _)| t)
        .collect();
    let violations = hypothesis
        .iter()
        .filter(|t| distinguishing_number_tree(t).value == 2)
        .map(|t| g6(t.graph()))
        .collect();
    let notes = vec![
        format!("{} trees scanned, {diameter3} of diameter 3", trees.len()),
        format!("hypothesis class size {}", hypothesis.len()),
    ];
    Ok(TheoremReport::new(
        TheoremId::Thmrad,
        format!("all trees n <= {nmax}"),
        hypothesis.len(),
        violations,
        notes,
    ))
}

/// Trees with radius at least 3 and `D = 2` have connected, 2-self-centered,
/// non-bipartite complements.
pub fn verify_geq4(nmax: usize, exec: Execution) -> Result<TheoremReport> {
    let trees = trees_upto(TheoremId::Geq4, nmax)?;
    let rows = par::map(&trees, exec, |t| {
        let in_class =
            t.graph().metric_profile().radius() >= 3 && distinguishing_number_tree(t).value == 2;
        if !in_class {
            return (false, true);
        }
        let c = t.graph().complement();
        (
            true,
            c.is_connected() && is_two_self_centered(&c) && !c.is_bipartite(),
        )
    });
    let instances = rows.iter().filter(|r| r.0).count();
    let violations = trees
        .iter()
        .zip(&rows)
        .filter(|(_, r)| !r.1)
        .map(|(t, _)| g6(t.graph()))
        .collect();
    Ok(TheoremReport::new(
        TheoremId::Geq4,
        format!("all trees n <= {nmax}"),
        instances,
        violations,
        vec![format!("{} trees scanned", trees.len())],
    ))
}

/// The subgraph induced by the center of the complement is the whole
/// complement iff the diameter is not 3, and is `K_{n-2}` otherwise.
///
/// The complement of a star is disconnected; all its eccentricities are
/// infinite, so its center is every vertex.
pub fn verify_center_complement(nmax: usize, exec: Execution) -> Result<TheoremReport> {
    let trees = trees_upto(TheoremId::CenterComplement, nmax)?;
    let (small, checked): (Vec<Tree>, Vec<Tree>) = trees.into_iter().partition(|t| t.order() < 4);
    let ok = par::map(&checked, exec, |t| {
        let n = t.order();
        let comp = t.graph().complement();
        let centered = comp.induced_subgraph(comp.metric_profile().center());
        let whole = are_isomorphic(&centered, &comp);
        let k = are_isomorphic(&centered, &Family::Complete(n - 2).build().unwrap());
        let diam3 = t.graph().metric_profile().diameter() == 3;
        whole == !diam3 && (whole || k) && (!diam3 || k)
    });
    let violations = checked
        .iter()
        .zip(&ok)
        .filter(|(_, &ok)| !ok)
        .map(|(t, _)| g6(t.graph()))
        .collect();
    Ok(TheoremReport::new(
        TheoremId::CenterComplement,
        format!("all trees 4 <= n <= {nmax}"),
        checked.len(),
        violations,
        vec![format!("{} trees with n < 4 not checked", small.len())],
    ))
}

fn complete_bipartite_parts(g: &Graph) -> Option<(usize, usize)> {
    match g.bipartition() {
        Bipartition::Bipartite { side } => {
            let a = side.iter().filter(|&&s| !s).count();
            let b = g.order() - a;
            (a * b == g.size()).then_some((a.min(b), a.max(b)))
        }
        Bipartition::OddCycle { .. } => None,
    }
}

/// Over connected bipartite graphs: complete bipartite with both parts of
/// size at least 2, 2-self-centered, and (for `n >= 3`) a block with no
/// locally geodesic cycle longer than 4 are equivalent.
pub fn verify_corollary7(nmax: usize, exec: Execution) -> Result<TheoremReport> {
    check_bound(
        "nmax for graph checks",
        nmax,
        TheoremId::Corollary7.max_order(),
    )?;
    let graphs: Vec<Graph> = all_connected_graphs(nmax)?
        .into_iter()
        .filter(Graph::is_bipartite)
        .collect();
    let rows = par::map(&graphs, exec, |g| {
        let complete = complete_bipartite_parts(g).is_some_and(|(a, _)| a >= 2);
        let sc = is_two_self_centered(g);
        let local = (g.order() >= 3).then(|| {
            g.is_block()
                && g.vertices()
                    .all(|v| locally_geodesic_cycle_at(g, v, 5).unwrap().is_none())
        });
        (complete, sc, local)
    });
    let mut violations = Vec::new();
    let mut mismatch_12 = 0;
    let mut mismatch_23 = 0;
    for (g, &(i, ii, iii)) in graphs.iter().zip(&rows) {
        if i != ii {
            mismatch_12 += 1;
            violations.push(g6(g));
        }
        if iii.is_some_and(|iii| iii != ii) {
            mismatch_23 += 1;
            violations.push(g6(g));
        }
    }
    let holding = rows.iter().filter(|r| r.1).count();
    let notes = vec![
        format!("{holding} graphs are 2-self-centered"),
        format!("(i) vs (ii) disagreements: {mismatch_12}"),
        format!("(ii) vs (iii) disagreements: {mismatch_23}"),
        "condition (iii) evaluated for n >= 3 only".to_string(),
    ];
    Ok(TheoremReport::new(
        TheoremId::Corollary7,
        format!("all connected bipartite graphs n <= {nmax}"),
        graphs.len(),
        violations,
        notes,
    ))
}

/// Edge-minimal 2-self-centered graphs with a triangle: every triangle edge
/// has a critical end, and iterating the rewrite reaches a triangle-free
/// 2-self-centered graph within the triangle budget. The converse is
/// examined on the non-minimal 2-self-centered graphs with a triangle and
/// reported in the notes.
pub fn verify_theorem15(nmax: usize, exec: Execution) -> Result<TheoremReport> {
    check_bound(
        "nmax for graph checks",
        nmax,
        TheoremId::Theorem15.max_order(),
    )?;
    let graphs: Vec<Graph> = all_connected_graphs(nmax)?
        .into_iter()
        .filter(|g| g.has_triangle() && is_two_self_centered(g))
        .collect();
    // (edge-minimal, condition i, condition ii)
    let rows = par::map(&graphs, exec, |g| {
        let minimal = is_edge_minimal_2sc(g);
        let cond_i = triangle_edges_without_critical_end(g).is_empty();
        let outcome = if minimal {
            run_procedure_to_fixpoint(g)
        } else {
            iterate_procedure(g)
        };
        let cond_ii = outcome.is_ok_and(|o| o.status == FixpointStatus::Reached);
        (minimal, cond_i, cond_ii)
    });
    let mut violations = Vec::new();
    let mut converse = Vec::new();
    let mut minimal_count = 0;
    for (g, &(minimal, i, ii)) in graphs.iter().zip(&rows) {
        if minimal {
            minimal_count += 1;
            if !(i && ii) {
                violations.push(g6(g));
            }
        } else if i && ii {
            converse.push(g6(g));
        }
    }
    let mut notes = vec![
        format!(
            "{} 2-self-centered graphs with a triangle, {minimal_count} edge-minimal",
            graphs.len()
        ),
        format!(
            "converse: {} non-minimal graphs satisfy both conditions",
            converse.len()
        ),
    ];
    notes.extend(converse.iter().map(|w| format!("converse witness {w}")));
    Ok(TheoremReport::new(
        TheoremId::Theorem15,
        format!("all connected graphs n <= {nmax}"),
        minimal_count,
        violations,
        notes,
    ))
}

fn theorem7_constructions(nmax: usize) -> Vec<Family> {
    let mut out = Vec::new();
    if nmax >= 10 {
        out.push(Family::Petersen);
    }
    for a in 1..nmax {
        for b in 1..nmax {
            if a + b + 3 <= nmax {
                out.push(Family::T7FamilyII(a, b));
            }
            for c in 1..nmax {
                if a + b + c + 4 <= nmax {
                    out.push(Family::T7FamilyIII(a, b, c));
                }
            }
        }
    }
    out
}

fn recognized_as(f: Family, class: Theorem7Class) -> bool {
    let sorted = |mut v: Vec<usize>| {
        v.sort_unstable();
        v
    };
    match (f, class) {
        (Family::Petersen, Theorem7Class::Petersen) => true,
        (Family::T7FamilyII(a, b), Theorem7Class::FamilyII { a: x, b: y }) => {
            sorted(vec![a, b]) == vec![x, y]
        }
        (Family::T7FamilyIII(a, b, c), Theorem7Class::FamilyIII { a: x, b: y, c: z }) => {
            sorted(vec![a, b, c]) == vec![x, y, z]
        }
        _ => false,
    }
}

/// The minimum-size constructions: each is 2-self-centered, deletion-minimal
/// and recognized with its own parameters. Separately, for `5 <= n <= 7`,
/// every 2-self-centered graph of minimum size must be one of them.
pub fn verify_theorem7(nmax: usize, exec: Execution) -> Result<TheoremReport> {
    check_bound(
        "nmax for constructions",
        nmax,
        TheoremId::Theorem7.max_order(),
    )?;
    let families = theorem7_constructions(nmax);
    let ok = par::map(&families, exec, |&f| {
        let g = f.build().unwrap();
        is_two_self_centered(&g)
            && is_edge_minimal_2sc(&g)
            && recognized_as(f, classify_theorem7(&g))
    });
    let mut violations: Vec<String> = families
        .iter()
        .zip(&ok)
        .filter(|(_, &ok)| !ok)
        .map(|(f, _)| g6(&f.build().unwrap()))
        .collect();
    let mut notes = vec![format!("{} constructions", families.len())];
    let mut instances = families.len();

    if nmax >= 10 {
        let p = Family::Petersen.build().unwrap();
        let d = distinguishing_number_bruteforce(&p)?.value;
        let aut = automorphisms(&p)?.order();
        notes.push(format!("Petersen graph: D = {d}, |Aut| = {aut}"));
        if d != 3 || aut != 120u32.into() {
            violations.push(g6(&p));
        }
    }

    for n in 5..=nmax.min(MAX_GRAPH_ORDER) {
        let sc: Vec<Graph> = all_connected_graphs(n)?
            .into_iter()
            .filter(|g| g.order() == n && is_two_self_centered(g))
            .collect();
        let Some(min) = sc.iter().map(Graph::size).min() else {
            continue;
        };
        let smallest: Vec<&Graph> = sc.iter().filter(|g| g.size() == min).collect();
        let unrecognized: Vec<String> = smallest
            .iter()
            .filter(|g| classify_theorem7(g) == Theorem7Class::None)
            .map(|g| g6(g))
            .collect();
        notes.push(format!(
            "n = {n}: minimum size {min}, {} graphs, {} unrecognized",
            smallest.len(),
            unrecognized.len()
        ));
        let too_big = families
            .iter()
            .map(|f| f.build().unwrap())
            .filter(|g| g.order() == n && g.size() != min)
            .count();
        if too_big > 0 {
            notes.push(format!(
                "n = {n}: {too_big} constructions above minimum size"
            ));
        }
        instances += smallest.len();
        violations.extend(unrecognized);
    }
    Ok(TheoremReport::new(
        TheoremId::Theorem7,
        format!(
            "constructions n <= {nmax}; minimum-size graphs 5 <= n <= {}",
            nmax.min(MAX_GRAPH_ORDER)
        ),
        instances,
        violations,
        notes,
    ))
}
