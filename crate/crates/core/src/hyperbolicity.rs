//! Exact Gromov four-point hyperbolicity.
//!
//! For a quadruple `(w,x,y,z)` the three pair sums are
//! `d(w,x)+d(y,z)`, `d(w,y)+d(x,z)` and `d(w,z)+d(x,y)`; the excess is the
//! largest minus the second largest, and `delta` is half the maximum excess.
//! Quadruples with a repeated vertex always have excess 0, so only 4-subsets
//! of each component are visited. Values are carried as `2 * delta`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{DistanceProfile, Graph, Vertex};
use crate::par;

/// Components at least this large split their outer loop across workers.
pub const PARALLEL_THRESHOLD: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HyperbolicityError {
    #[error("vertices {0:?} do not lie in one connected component")]
    DifferentComponents([Vertex; 4]),
}

/// Hyperbolicity of one connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComponentDelta {
    pub component: usize,
    pub twice_delta: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperbolicityResult {
    /// `2 * delta`, the maximum excess over all components.
    pub twice_delta: u32,
    /// Lexicographically smallest sorted quadruple attaining the maximum, if
    /// some component has at least four vertices.
    pub witness: Option<[Vertex; 4]>,
    pub per_component: Vec<ComponentDelta>,
    pub connected: bool,
}

impl HyperbolicityResult {
    pub fn delta(&self) -> f64 {
        f64::from(self.twice_delta) / 2.0
    }

    pub fn is_zero(&self) -> bool {
        self.twice_delta == 0
    }
}

/// `2 * delta` rendered as a half-integer: `0`, `1/2`, `1`, `3/2`, ...
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfInteger(pub u32);

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

fn excess_of_sums(d1: u32, d2: u32, d3: u32) -> u32 {
    let mut sums = [d1, d2, d3];
    sums.sort_unstable();
    sums[2] - sums[1]
}

/// Four-point excess `h(w,x,y,z)` of a quadruple within one component.
pub fn four_point_excess(
    profile: &DistanceProfile,
    w: Vertex,
    x: Vertex,
    y: Vertex,
    z: Vertex,
) -> Result<u32, HyperbolicityError> {
    let component = profile.component_of(w);
    if [x, y, z].iter().any(|&v| profile.component_of(v) != component) {
        return Err(HyperbolicityError::DifferentComponents([w, x, y, z]));
    }
    let d = |a, b| profile.dist(a, b).finite().expect("same component");
    Ok(excess_of_sums(
        d(w, x) + d(y, z),
        d(w, y) + d(x, z),
        d(w, z) + d(x, y),
    ))
}

/// Best `(excess, quadruple)` found so far. Larger excess wins; ties go to
/// the lexicographically smaller quadruple, so the fold is order-independent.
type Best = Option<(u32, [usize; 4])>;

fn better(a: Best, b: Best) -> Best {
    match (a, b) {
        (None, other) | (other, None) => other,
        (Some((ea, qa)), Some((eb, qb))) => {
            if ea > eb || (ea == eb && qa <= qb) {
                Some((ea, qa))
            } else {
                Some((eb, qb))
            }
        }
    }
}

/// Local dense distance matrix of one component.
struct LocalMetric {
    k: usize,
    dist: Vec<u32>,
}

impl LocalMetric {
    fn new(profile: &DistanceProfile, vertices: &[Vertex]) -> Self {
        let k = vertices.len();
        let mut dist = Vec::with_capacity(k * k);
        for &a in vertices {
            for &b in vertices {
                dist.push(profile.dist(a, b).finite().expect("same component"));
            }
        }
        LocalMetric { k, dist }
    }

    fn d(&self, a: usize, b: usize) -> u32 {
        self.dist[a * self.k + b]
    }

    /// Best quadruple whose smallest local index is `i`.
    fn best_from(&self, i: usize) -> Best {
        let k = self.k;
        let mut best: Best = None;
        for j in i + 1..k {
            let dij = self.d(i, j);
            for l in j + 1..k {
                let dil = self.d(i, l);
                let djl = self.d(j, l);
                for m in l + 1..k {
                    let e = excess_of_sums(
                        dij + self.d(l, m),
                        dil + self.d(j, m),
                        self.d(i, m) + djl,
                    );
                    if best.is_none_or(|(b, _)| e > b) {
                        best = Some((e, [i, j, l, m]));
                    }
                }
            }
        }
        best
    }
}

fn component_best(profile: &DistanceProfile, vertices: &[Vertex], parallel: bool) -> Best {
    let metric = LocalMetric::new(profile, vertices);
    let k = vertices.len();
    let local = if parallel && k >= PARALLEL_THRESHOLD {
        par::map_reduce(k, None, |i| metric.best_from(i), better)
    } else {
        (0..k).map(|i| metric.best_from(i)).fold(None, better)
    };
    local.map(|(e, q)| (e, q.map(|i| vertices[i])))
}

fn compute(g: &Graph, parallel: bool) -> HyperbolicityResult {
    let profile = g.distance_profile();
    let mut overall: Best = None;
    let mut per_component = Vec::with_capacity(profile.components.len());
    for (component, metrics) in profile.components.iter().enumerate() {
        let best = component_best(&profile, &metrics.vertices, parallel);
        per_component.push(ComponentDelta {
            component,
            twice_delta: best.map_or(0, |(e, _)| e),
        });
        overall = better(overall, best);
    }
    HyperbolicityResult {
        twice_delta: overall.map_or(0, |(e, _)| e),
        witness: overall.map(|(_, q)| q),
        per_component,
        connected: profile.connected,
    }
}

/// Exact hyperbolicity; large components are scanned in parallel when the
/// `parallel` feature is enabled. The result, witness included, is identical
/// to [`hyperbolicity_sequential`].
pub fn hyperbolicity(g: &Graph) -> HyperbolicityResult {
    compute(g, true)
}

pub fn hyperbolicity_sequential(g: &Graph) -> HyperbolicityResult {
    compute(g, false)
}
