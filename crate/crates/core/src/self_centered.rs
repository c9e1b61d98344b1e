//! Structure of 2-self-centered graphs: critical vertices, locally geodesic
//! cycles, the triangle-removal rewrite and edge-minimality.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bits, write_graph6, Family, Graph, MetricProfile};
use crate::symmetry::are_isomorphic;

/// Bound on the order for the cycle scans and the family recognizer.
pub const MAX_SCAN_ORDER: usize = 12;

/// True iff `g` is connected with radius = diameter = 2.
pub fn is_two_self_centered(g: &Graph) -> bool {
    g.is_k_self_centered(2)
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v < g.order() {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        })
    }
}

/// Whether `x` is critical for `u` and `v`: `uv` is not an edge and `x` is
/// their only common neighbour. Defined for 2-self-centered graphs only.
pub fn is_critical(g: &Graph, x: usize, u: usize, v: usize) -> Result<bool> {
    for w in [x, u, v] {
        check_vertex(g, w)?;
    }
    if u == v {
        return Err(Error::Contract(format!("u and v must differ (both {u})")));
    }
    if !is_two_self_centered(g) {
        return Err(Error::Contract("graph is not 2-self-centered".into()));
    }
    Ok(!g.has_edge(u, v) && g.common_neighbors(u, v) == 1 << x)
}

/// Every `y` for which `x` is critical for `u` and `y`, ascending.
pub fn critical_partners(g: &Graph, x: usize, u: usize) -> Vec<usize> {
    let others = g.vertex_mask() & !g.neighbor_mask(u) & !(1 << u);
    bits(others)
        .filter(|&y| g.common_neighbors(u, y) == 1 << x)
        .collect()
}

fn validate_cycle(g: &Graph, cycle: &[usize]) -> Result<()> {
    if cycle.len() < 3 {
        return Err(Error::Contract(format!(
            "a cycle needs at least 3 vertices, got {}",
            cycle.len()
        )));
    }
    let mut seen = 0u64;
    for (i, &a) in cycle.iter().enumerate() {
        check_vertex(g, a)?;
        if seen >> a & 1 == 1 {
            return Err(Error::Contract(format!("vertex {a} repeats on the cycle")));
        }
        seen |= 1 << a;
        let b = cycle[(i + 1) % cycle.len()];
        if !g.has_edge(a, b) {
            return Err(Error::Contract(format!("{a}-{b} is not an edge")));
        }
    }
    Ok(())
}

/// Whether the cycle is locally geodesic at `v`: for every `u` on it, the
/// distance from `v` to `u` along the cycle equals the distance in `g`.
pub fn is_locally_geodesic(g: &Graph, cycle: &[usize], v: usize) -> Result<bool> {
    validate_cycle(g, cycle)?;
    let Some(pos) = cycle.iter().position(|&c| c == v) else {
        return Err(Error::Contract(format!("vertex {v} is not on the cycle")));
    };
    let profile = g.metric_profile();
    let len = cycle.len();
    Ok(cycle.iter().enumerate().all(|(j, &u)| {
        let gap = pos.abs_diff(j);
        profile.distance(v, u) as usize == gap.min(len - gap)
    }))
}

/// A cycle of length at least `min_len` that is locally geodesic at `v`,
/// listed starting from `v`, if one exists.
///
/// Along such a cycle `v = p0, p1, .., p(L-1)` the graph distance from `v`
/// to `pk` is `min(k, L-k)`: it climbs by one per step, then descends by one
/// per step back to `v`. The depth-first search only follows paths with that
/// shape, and the first descending step fixes `L`.
pub fn locally_geodesic_cycle_at(
    g: &Graph,
    v: usize,
    min_len: usize,
) -> Result<Option<Vec<usize>>> {
    check_vertex(g, v)?;
    if g.order() > MAX_SCAN_ORDER {
        return Err(Error::Capacity {
            what: "order for locally geodesic cycle scan",
            value: g.order(),
            limit: MAX_SCAN_ORDER,
        });
    }
    let profile = g.metric_profile();
    let mut path = vec![v];
    let found = geodesic_dfs(g, &profile, min_len.max(3), &mut path, 1 << v, None);
    Ok(found.then_some(path))
}

fn geodesic_dfs(
    g: &Graph,
    profile: &MetricProfile,
    min_len: usize,
    path: &mut Vec<usize>,
    used: u64,
    target: Option<usize>,
) -> bool {
    let v = path[0];
    let last = *path.last().unwrap();
    let k = path.len();
    if target == Some(k) {
        return g.has_edge(last, v);
    }
    for w in bits(g.neighbor_mask(last) & !used) {
        let dw = profile.distance(v, w) as usize;
        let next_target = match target {
            None if dw == k => None,
            None => {
                let len = k + dw;
                if dw == 0 || len < min_len {
                    continue;
                }
                Some(len)
            }
            Some(len) if dw == len - k => Some(len),
            Some(_) => continue,
        };
        path.push(w);
        if geodesic_dfs(g, profile, min_len, path, used | 1 << w, next_target) {
            return true;
        }
        path.pop();
    }
    false
}

/// One application of the triangle-removal rewrite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleRewrite {
    pub before: Graph,
    pub triangle: (usize, usize, usize),
    pub removed_edge: (usize, usize),
    pub added_edges: Vec<(usize, usize)>,
    pub after: Graph,
}

#[derive(Serialize)]
struct RewriteTrace {
    before: String,
    triangle: [usize; 3],
    removed_edge: [usize; 2],
    added_edges: Vec<[usize; 2]>,
    after: String,
}

impl TriangleRewrite {
    /// JSON trace with both graphs in graph6.
    pub fn to_json(&self) -> serde_json::Value {
        let (a, b, c) = self.triangle;
        let trace = RewriteTrace {
            before: write_graph6(&self.before).unwrap_or_default(),
            triangle: [a, b, c],
            removed_edge: [self.removed_edge.0, self.removed_edge.1],
            added_edges: self.added_edges.iter().map(|&(x, y)| [x, y]).collect(),
            after: write_graph6(&self.after).unwrap_or_default(),
        };
        serde_json::to_value(trace).expect("trace serializes")
    }
}

/// Rewrites the edge `uv` of the triangle `uvw`: with `V` the vertices for
/// which `v` is critical together with `u`, and `U` those for which `u` is
/// critical together with `v`, delete `uv` and add `u-y` for `y` in `V` and
/// `v-y` for `y` in `U`.
pub fn procedure_step(g: &Graph, triangle: (usize, usize, usize)) -> Result<TriangleRewrite> {
    let (u, v, w) = triangle;
    for x in [u, v, w] {
        check_vertex(g, x)?;
    }
    if !(g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w)) {
        return Err(Error::Contract(format!(
            "{u}, {v}, {w} do not form a triangle"
        )));
    }
    let for_u = critical_partners(g, v, u);
    let for_v = critical_partners(g, u, v);
    if for_u.is_empty() && for_v.is_empty() {
        return Err(Error::Inapplicable(format!(
            "neither {u} nor {v} is critical for the other end of edge {u}-{v}"
        )));
    }
    let added: Vec<(usize, usize)> = for_u
        .iter()
        .map(|&y| (u, y))
        .chain(for_v.iter().map(|&y| (v, y)))
        .collect();
    let after = g.edit(&[(u, v)], &added)?;
    Ok(TriangleRewrite {
        before: g.clone(),
        triangle,
        removed_edge: (u, v),
        added_edges: added,
        after,
    })
}

/// The edge `ab` of a triangle has a critical end: `a` is critical for `b`
/// and some vertex, or `b` is critical for `a` and some vertex.
pub fn has_critical_end(g: &Graph, a: usize, b: usize) -> bool {
    !critical_partners(g, a, b).is_empty() || !critical_partners(g, b, a).is_empty()
}

/// Triangle edges with no critical end, in lexicographic order.
pub fn triangle_edges_without_critical_end(g: &Graph) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = g
        .triangles()
        .into_iter()
        .flat_map(|(a, b, c)| [(a, b), (a, c), (b, c)])
        .filter(|&(a, b)| !has_critical_end(g, a, b))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// 2-self-centered, and deleting any single edge destroys that.
pub fn is_edge_minimal_2sc(g: &Graph) -> bool {
    is_two_self_centered(g)
        && g.edges()
            .iter()
            .all(|&e| !is_two_self_centered(&g.edit(&[e], &[]).expect("edge exists")))
}

/// How an iteration of the rewrite ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FixpointStatus {
    /// Triangle-free and 2-self-centered.
    Reached,
    /// Triangle-free, but no longer 2-self-centered.
    LostSelfCentered,
    /// Triangles remain after the step budget.
    BudgetExhausted,
    /// Triangles remain and no triangle edge admits a rewrite.
    Stuck,
}

#[derive(Debug, Clone)]
pub struct FixpointOutcome {
    pub result: Graph,
    pub steps: Vec<TriangleRewrite>,
    pub budget: usize,
    pub status: FixpointStatus,
}

impl FixpointOutcome {
    pub fn diverged(&self) -> bool {
        self.status != FixpointStatus::Reached
    }
}

/// Iterates [`procedure_step`] on an edge-minimal 2-self-centered graph with
/// a triangle, for at most as many steps as it has triangles.
///
/// Each step takes the lexicographically first triangle `(a, b, c)`,
/// `a < b < c`, having an edge with a critical end, and rewrites the first
/// such edge among `ab`, `ac`, `bc`.
pub fn run_procedure_to_fixpoint(g: &Graph) -> Result<FixpointOutcome> {
    if !g.has_triangle() {
        return Err(Error::Contract("graph has no triangle".into()));
    }
    if !is_edge_minimal_2sc(g) {
        return Err(Error::Contract(
            "graph is not an edge-minimal 2-self-centered graph".into(),
        ));
    }
    iterate_procedure(g)
}

/// The same iteration on any graph with a triangle, without the
/// edge-minimality check.
pub fn iterate_procedure(g: &Graph) -> Result<FixpointOutcome> {
    if !g.has_triangle() {
        return Err(Error::Contract("graph has no triangle".into()));
    }
    let budget = g.triangles().len();
    let mut current = g.clone();
    let mut steps = Vec::new();
    let status = loop {
        if !current.has_triangle() {
            break if is_two_self_centered(&current) {
                FixpointStatus::Reached
            } else {
                FixpointStatus::LostSelfCentered
            };
        }
        if steps.len() == budget {
            break FixpointStatus::BudgetExhausted;
        }
        let choice = current.triangles().into_iter().find_map(|(a, b, c)| {
            [(a, b, c), (a, c, b), (b, c, a)]
                .into_iter()
                .find(|&(x, y, _)| has_critical_end(&current, x, y))
        });
        let Some(tri) = choice else {
            break FixpointStatus::Stuck;
        };
        let step = procedure_step(&current, tri)?;
        current = step.after.clone();
        steps.push(step);
    };
    Ok(FixpointOutcome {
        result: current,
        steps,
        budget,
        status,
    })
}

/// Which minimum-size construction a graph is, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Theorem7Class {
    Petersen,
    FamilyII { a: usize, b: usize },
    FamilyIII { a: usize, b: usize, c: usize },
    None,
}

/// Recognizes the Petersen graph and the two apex families by brute-force
/// isomorphism against every construction of the same order. Parameters are
/// reported in non-decreasing order.
pub fn classify_theorem7(g: &Graph) -> Theorem7Class {
    let n = g.order();
    if !(5..=MAX_SCAN_ORDER).contains(&n) || !is_two_self_centered(g) {
        return Theorem7Class::None;
    }
    let matches = |f: Family| {
        f.build()
            .map(|h| h.size() == g.size() && are_isomorphic(g, &h))
            .unwrap_or(false)
    };
    if n == 10 && matches(Family::Petersen) {
        return Theorem7Class::Petersen;
    }
    for a in 1..=(n - 3) / 2 {
        let b = n - 3 - a;
        if matches(Family::T7FamilyII(a, b)) {
            return Theorem7Class::FamilyII { a, b };
        }
    }
    if n >= 7 {
        let s = n - 4;
        for a in 1..=s / 3 {
            for b in a..=(s - a) / 2 {
                let c = s - a - b;
                if matches(Family::T7FamilyIII(a, b, c)) {
                    return Theorem7Class::FamilyIII { a, b, c };
                }
            }
        }
    }
    Theorem7Class::None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(f: Family) -> Graph {
        f.build().unwrap()
    }

    #[test]
    fn critical_examples() {
        // C_4 as 0-1-2-3-0: 1 and 3 are both common neighbours of 0 and 2.
        let c4 = graph(Family::Cycle(4));
        assert_eq!(is_critical(&c4, 1, 0, 2), Ok(false));
        // K_{2,3}: parts {0,1} and {2,3,4}.
        let k23 = graph(Family::CompleteBipartite(2, 3));
        assert_eq!(is_critical(&k23, 0, 2, 3), Ok(false));
        assert!(is_critical(&c4, 1, 0, 0).is_err());
        assert!(is_critical(&graph(Family::Path(4)), 1, 0, 2).is_err());
    }

    // Brute-force common-neighbourhood scan of the 5-cycle built as
    // S_{1,1} plus apex: each non-adjacent pair has exactly one common
    // neighbour, which is therefore critical.
    #[test]
    fn critical_pairs_in_family_ii() {
        let g = graph(Family::T7FamilyII(1, 1));
        let mut pairs = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                for x in 0..5 {
                    if is_critical(&g, x, u, v).unwrap() {
                        pairs.push((x, u, v));
                    }
                }
            }
        }
        assert_eq!(
            pairs,
            vec![(1, 0, 2), (4, 0, 3), (2, 1, 3), (0, 1, 4), (3, 2, 4)]
        );
        assert_eq!(critical_partners(&g, 1, 0), vec![2]);
    }

    #[test]
    fn locally_geodesic_examples() {
        let c6 = graph(Family::Cycle(6));
        for v in 0..6 {
            assert_eq!(is_locally_geodesic(&c6, &[0, 1, 2, 3, 4, 5], v), Ok(true));
        }
        let k23 = graph(Family::CompleteBipartite(2, 3));
        for v in [0, 2, 1, 3] {
            assert_eq!(is_locally_geodesic(&k23, &[0, 2, 1, 3], v), Ok(true));
        }
        // K_{3,3}: antipode at cycle distance 3 has graph distance 1.
        let k33 = graph(Family::CompleteBipartite(3, 3));
        for v in [0, 3, 1, 4, 2, 5] {
            assert_eq!(is_locally_geodesic(&k33, &[0, 3, 1, 4, 2, 5], v), Ok(false));
        }
        assert!(is_locally_geodesic(&c6, &[0, 1, 3], 0).is_err());
        assert!(is_locally_geodesic(&c6, &[0, 1, 2, 3, 4, 5], 7).is_err());
        assert!(is_locally_geodesic(&k23, &[0, 2, 1, 3], 4).is_err());
    }

    #[test]
    fn geodesic_cycle_scan() {
        let c6 = graph(Family::Cycle(6));
        let cyc = locally_geodesic_cycle_at(&c6, 0, 5).unwrap().unwrap();
        assert_eq!(cyc.len(), 6);
        assert_eq!(is_locally_geodesic(&c6, &cyc, 0), Ok(true));
        let k33 = graph(Family::CompleteBipartite(3, 3));
        assert_eq!(locally_geodesic_cycle_at(&k33, 0, 5).unwrap(), None);
        assert!(locally_geodesic_cycle_at(&k33, 0, 4).unwrap().is_some());
        let c5 = graph(Family::Cycle(5));
        assert_eq!(
            locally_geodesic_cycle_at(&c5, 2, 5).unwrap().unwrap().len(),
            5
        );
        let petersen = graph(Family::Petersen);
        assert!(locally_geodesic_cycle_at(&petersen, 0, 5)
            .unwrap()
            .is_some());
    }

    #[test]
    fn edge_minimal_examples() {
        assert!(is_edge_minimal_2sc(&graph(Family::Cycle(4))));
        assert!(!is_edge_minimal_2sc(&graph(Family::Complete(4))));
        assert!(is_edge_minimal_2sc(&graph(Family::Petersen)));
    }

    // All six single-edge deletions of K_{2,3} leave a pendant-path graph of
    // diameter 3.
    #[test]
    fn k23_deletions_by_brute_force() {
        let k23 = graph(Family::CompleteBipartite(2, 3));
        assert!(is_two_self_centered(&k23));
        for &e in k23.edges() {
            let h = k23.edit(&[e], &[]).unwrap();
            assert_eq!(h.metric_profile().diameter(), 3);
        }
        assert!(is_edge_minimal_2sc(&k23));
    }

    #[test]
    fn procedure_on_tritip_apex() {
        // Triangle 0,1,2; pendants 3,4,5; apex 6.
        let g = graph(Family::T7FamilyIII(1, 1, 1));
        // Brute-force critical sets for edge 0-1: 1 is the only common
        // neighbour of 0 and 4; 0 the only one of 1 and 3.
        assert_eq!(critical_partners(&g, 1, 0), vec![4]);
        assert_eq!(critical_partners(&g, 0, 1), vec![3]);
        let step = procedure_step(&g, (0, 1, 2)).unwrap();
        assert_eq!(step.removed_edge, (0, 1));
        assert_eq!(step.added_edges, vec![(0, 4), (1, 3)]);
        assert!(!step.after.has_edge(0, 1));
        assert_eq!(step.after.order(), 7);
        assert_eq!(step.after.size(), g.size() + 1);
        let json = step.to_json();
        assert_eq!(json["removed_edge"], serde_json::json!([0, 1]));
    }

    #[test]
    fn procedure_inapplicable_in_k4() {
        let k4 = graph(Family::Complete(4));
        assert!(matches!(
            procedure_step(&k4, (0, 1, 2)),
            Err(Error::Inapplicable(_))
        ));
        assert!(matches!(
            procedure_step(&graph(Family::Cycle(4)), (0, 1, 2)),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn fixpoint_on_tritip_apex() {
        for f in [Family::T7FamilyIII(1, 1, 1), Family::T7FamilyIII(2, 1, 1)] {
            let g = graph(f);
            let out = run_procedure_to_fixpoint(&g).unwrap();
            assert_eq!(out.status, FixpointStatus::Reached, "{f:?}");
            assert!(!out.result.has_triangle());
            assert!(is_two_self_centered(&out.result));
            assert!(out.steps.len() <= out.budget);
        }
        assert!(run_procedure_to_fixpoint(&graph(Family::Cycle(4))).is_err());
    }

    #[test]
    fn recognizer() {
        assert_eq!(
            classify_theorem7(&graph(Family::Petersen)),
            Theorem7Class::Petersen
        );
        let g = graph(Family::T7FamilyIII(1, 2, 1)).permuted(&[6, 5, 4, 3, 2, 1, 0, 7]);
        assert_eq!(
            classify_theorem7(&g),
            Theorem7Class::FamilyIII { a: 1, b: 1, c: 2 }
        );
        assert_eq!(
            classify_theorem7(&graph(Family::T7FamilyII(3, 1))),
            Theorem7Class::FamilyII { a: 1, b: 3 }
        );
        assert_eq!(
            classify_theorem7(&graph(Family::Cycle(6))),
            Theorem7Class::None
        );
        assert_eq!(
            classify_theorem7(&graph(Family::Cycle(5))),
            Theorem7Class::FamilyII { a: 1, b: 1 }
        );
    }
}
