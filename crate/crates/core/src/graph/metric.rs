use super::{bits, Graph};

/// Distance between vertices in different components.
pub const INFINITY: u32 = u32::MAX;

/// All-pairs hop distances with the derived eccentricity invariants.
///
/// Disconnected graphs follow the convention that every eccentricity is
/// infinite, so radius = diameter = [`INFINITY`] and every vertex is central.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricProfile {
    n: usize,
    distances: Vec<u32>,
    eccentricities: Vec<u32>,
    radius: u32,
    diameter: u32,
    center: Vec<usize>,
}

impl MetricProfile {
    pub fn new(g: &Graph) -> MetricProfile {
        let n = g.order();
        let mut distances = vec![INFINITY; n * n];
        for s in 0..n {
            let row = &mut distances[s * n..(s + 1) * n];
            row[s] = 0;
            let mut seen = 1u64 << s;
            let mut frontier = seen;
            let mut level = 0;
            while frontier != 0 {
                level += 1;
                let mut next = 0;
                for v in bits(frontier) {
                    next |= g.neighbor_mask(v);
                }
                next &= !seen;
                for v in bits(next) {
                    row[v] = level;
                }
                seen |= next;
                frontier = next;
            }
        }
        let eccentricities: Vec<u32> = (0..n)
            .map(|v| {
                distances[v * n..(v + 1) * n]
                    .iter()
                    .copied()
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let radius = eccentricities.iter().copied().min().unwrap_or(0);
        let diameter = eccentricities.iter().copied().max().unwrap_or(0);
        let center = (0..n).filter(|&v| eccentricities[v] == radius).collect();
        MetricProfile {
            n,
            distances,
            eccentricities,
            radius,
            diameter,
            center,
        }
    }

    pub fn distance(&self, u: usize, v: usize) -> u32 {
        self.distances[u * self.n + v]
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.eccentricities[v]
    }

    pub fn eccentricities(&self) -> &[u32] {
        &self.eccentricities
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// Vertices of minimum eccentricity, ascending.
    pub fn center(&self) -> &[usize] {
        &self.center
    }

    pub fn is_finite(&self) -> bool {
        self.diameter != INFINITY
    }
}
