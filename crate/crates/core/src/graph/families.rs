use super::Graph;
use crate::error::{Error, Result};

/// Named graph constructions.
///
/// Vertex numbering is fixed for every family so that fixtures stay stable:
///
/// * `Path(n)`: `0 - 1 - ... - (n-1)`.
/// * `Cycle(n)`: the path plus the edge `(n-1) - 0`.
/// * `Star(k)`: `K_{1,k}`, hub `0`, leaves `1..=k`.
/// * `Complete(n)`: `K_n`.
/// * `CompleteBipartite(a, b)`: parts `0..a` and `a..a+b`.
/// * `DoubleStar(a, b)`: the sequential join `K̄_a + K_1 + K_1 + K̄_b`, so
///   leaves `0..a`, hubs `a` and `a+1`, leaves `a+2..a+2+b`.
/// * `Tritip(a, b, c)`: triangle `0, 1, 2`, then `a` pendants on `0`,
///   `b` pendants on `1` and `c` pendants on `2`, numbered in that order.
/// * `Petersen`: outer cycle `0..5`, spokes `i - i+5`, inner pentagram
///   `5+i - 5+(i+2)%5`.
/// * `T7FamilyII(a, b)`: `DoubleStar(a, b)` plus an apex `a+b+2` joined to
///   every leaf.
/// * `T7FamilyIII(a, b, c)`: `Tritip(a, b, c)` plus an apex `a+b+c+3` joined
///   to every pendant vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    DoubleStar(usize, usize),
    Tritip(usize, usize, usize),
    Petersen,
    T7FamilyII(usize, usize),
    T7FamilyIII(usize, usize, usize),
}

/// Identifiers accepted by [`Family::from_name`].
pub const FAMILY_NAMES: &[&str] = &[
    "path",
    "cycle",
    "star",
    "complete",
    "complete_bipartite",
    "double_star",
    "tritip",
    "petersen",
    "t7_family_ii",
    "t7_family_iii",
];

impl Family {
    /// Looks a family up by identifier and positional integer parameters.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Family> {
        let arity = |family: &'static str, k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::param(
                    family,
                    format!("expected {k} parameter(s), got {}", params.len()),
                ))
            }
        };
        let fam = match name {
            "path" => {
                arity("path", 1)?;
                Family::Path(params[0])
            }
            "cycle" => {
                arity("cycle", 1)?;
                Family::Cycle(params[0])
            }
            "star" => {
                arity("star", 1)?;
                Family::Star(params[0])
            }
            "complete" => {
                arity("complete", 1)?;
                Family::Complete(params[0])
            }
            "complete_bipartite" => {
                arity("complete_bipartite", 2)?;
                Family::CompleteBipartite(params[0], params[1])
            }
            "double_star" => {
                arity("double_star", 2)?;
                Family::DoubleStar(params[0], params[1])
            }
            "tritip" => {
                arity("tritip", 3)?;
                Family::Tritip(params[0], params[1], params[2])
            }
            "petersen" => {
                arity("petersen", 0)?;
                Family::Petersen
            }
            "t7_family_ii" => {
                arity("t7_family_ii", 2)?;
                Family::T7FamilyII(params[0], params[1])
            }
            "t7_family_iii" => {
                arity("t7_family_iii", 3)?;
                Family::T7FamilyIII(params[0], params[1], params[2])
            }
            other => {
                return Err(Error::param(
                    "family",
                    format!("unknown family `{other}`; expected one of {FAMILY_NAMES:?}"),
                ))
            }
        };
        Ok(fam)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Star(_) => "star",
            Family::Complete(_) => "complete",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::DoubleStar(..) => "double_star",
            Family::Tritip(..) => "tritip",
            Family::Petersen => "petersen",
            Family::T7FamilyII(..) => "t7_family_ii",
            Family::T7FamilyIII(..) => "t7_family_iii",
        }
    }

    /// Number of vertices the construction will have.
    pub fn order(&self) -> usize {
        match *self {
            Family::Path(n) | Family::Cycle(n) | Family::Complete(n) => n,
            Family::Star(k) => k + 1,
            Family::CompleteBipartite(a, b) => a + b,
            Family::DoubleStar(a, b) => a + b + 2,
            Family::Tritip(a, b, c) => a + b + c + 3,
            Family::Petersen => 10,
            Family::T7FamilyII(a, b) => a + b + 3,
            Family::T7FamilyIII(a, b, c) => a + b + c + 4,
        }
    }

    fn validate(&self) -> Result<()> {
        let fail = |c: &str| Err(Error::param(self.name(), c));
        match *self {
            Family::Path(n) | Family::Complete(n) if n < 1 => fail("n >= 1"),
            Family::Cycle(n) if n < 3 => fail("n >= 3"),
            Family::CompleteBipartite(a, b) if a < 1 || b < 1 => fail("a >= 1 and b >= 1"),
            Family::DoubleStar(a, b) | Family::T7FamilyII(a, b) if a < 1 || b < 1 => {
                fail("a >= 1 and b >= 1")
            }
            Family::T7FamilyIII(a, b, c) if a < 1 || b < 1 || c < 1 => {
                fail("a >= 1, b >= 1 and c >= 1")
            }
            _ => Ok(()),
        }
    }

    /// Builds the graph, validating parameters first.
    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.order();
        if n > super::MAX_ORDER {
            return Err(Error::Capacity {
                what: "graph order",
                value: n,
                limit: super::MAX_ORDER,
            });
        }
        match *self {
            Family::Path(n) => Graph::new(n, (1..n).map(|i| (i - 1, i))),
            Family::Cycle(n) => Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))),
            Family::Star(k) => Graph::new(k + 1, (1..=k).map(|i| (0, i))),
            Family::Complete(n) => {
                Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            Family::CompleteBipartite(a, b) => {
                Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            }
            Family::DoubleStar(a, b) => {
                let k1 = Graph::empty(1)?;
                Graph::sequential_join(&[Graph::empty(a)?, k1.clone(), k1, Graph::empty(b)?])
            }
            Family::Tritip(a, b, c) => {
                let mut edges = vec![(0, 1), (1, 2), (0, 2)];
                let mut next = 3;
                for (corner, count) in [(0, a), (1, b), (2, c)] {
                    for _ in 0..count {
                        edges.push((corner, next));
                        next += 1;
                    }
                }
                Graph::new(n, edges)
            }
            Family::Petersen => {
                let mut edges = Vec::with_capacity(15);
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                    edges.push((5 + i, 5 + (i + 2) % 5));
                }
                Graph::new(10, edges)
            }
            Family::T7FamilyII(a, b) => {
                let base = Family::DoubleStar(a, b).build()?;
                with_apex(&base)
            }
            Family::T7FamilyIII(a, b, c) => {
                let base = Family::Tritip(a, b, c).build()?;
                with_apex(&base)
            }
        }
    }
}

// Adds one vertex adjacent to every degree-1 vertex.
fn with_apex(base: &Graph) -> Result<Graph> {
    let apex = base.order();
    let mut edges = base.edges().to_vec();
    edges.extend(base.vertices_of_degree(1).into_iter().map(|v| (v, apex)));
    Graph::new(apex + 1, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_star_hubs() {
        let g = Family::DoubleStar(2, 3).build().unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.size(), 6);
        assert!(g.has_edge(2, 3));
        assert_eq!((g.degree(2), g.degree(3)), (3, 4));
    }

    #[test]
    fn tritip_shape() {
        let g = Family::Tritip(1, 1, 1).build().unwrap();
        assert_eq!((g.order(), g.size()), (6, 6));
        assert_eq!(g.triangles(), vec![(0, 1, 2)]);
        assert_eq!(g.vertices_of_degree(1), vec![3, 4, 5]);
    }

    #[test]
    fn petersen_shape() {
        let g = Family::Petersen.build().unwrap();
        assert_eq!((g.order(), g.size()), (10, 15));
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert!(!g.has_triangle());
        // No 4-cycles: adjacent-free pairs share at most one neighbour,
        // adjacent pairs share none.
        for u in 0..10 {
            for v in u + 1..10 {
                let common = g.common_neighbors(u, v).count_ones();
                assert!(common <= 1);
                if g.has_edge(u, v) {
                    assert_eq!(common, 0);
                }
            }
        }
    }

    #[test]
    fn apex_families() {
        // S_{1,1} plus apex is the 5-cycle with the same numbering.
        let g = Family::T7FamilyII(1, 1).build().unwrap();
        assert_eq!(g, Family::Cycle(5).build().unwrap());

        let g = Family::T7FamilyIII(1, 1, 1).build().unwrap();
        assert_eq!((g.order(), g.size()), (7, 9));
        assert_eq!(g.neighbors(6).collect::<Vec<_>>(), vec![3, 4, 5]);
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(
            Family::T7FamilyIII(0, 1, 1).build(),
            Err(Error::Parameter {
                family: "t7_family_iii",
                ..
            })
        ));
        assert!(Family::Cycle(2).build().is_err());
        assert!(Family::from_name("path", &[]).is_err());
        assert!(Family::from_name("moebius", &[3]).is_err());
        assert_eq!(
            Family::from_name("double_star", &[2, 3]).unwrap(),
            Family::DoubleStar(2, 3)
        );
        assert!(Family::Path(65).build().unwrap_err().is_capacity());
    }
}
