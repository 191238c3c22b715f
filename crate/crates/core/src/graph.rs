//! Finite simple graphs on dense vertex ids `0..n`, with BFS distances,
//! eccentricities and centres.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// A vertex is a dense index in `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    Loop(usize),
}

/// Immutable finite simple graph.
///
/// Adjacency lists are kept sorted and deduplicated, so two `Graph` values
/// compare equal exactly when they have the same vertex count and edge set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; loops and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (x, y) in edges {
            for v in [x, y] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if x == y {
                return Err(GraphError::Loop(x));
            }
            adj[x].push(y);
            adj[y].push(x);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    fn from_raw_adjacency(mut adj: Vec<Vec<Vertex>>) -> Self {
        let mut twice_m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        Graph { adj, m: twice_m / 2 }
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&u| u != v).collect())
            .collect();
        Graph { adj, m: n * n.saturating_sub(1) / 2 }
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v));
        Self::new(n, edges).expect("path edges are valid")
    }

    /// Cycle on `n >= 3` vertices; smaller `n` degenerates to a path.
    pub fn cycle(n: usize) -> Self {
        if n < 3 {
            return Self::path(n);
        }
        let edges = (0..n).map(|v| (v, (v + 1) % n));
        Self::new(n, edges).expect("cycle edges are valid")
    }

    /// Star `K_{1,leaves}` with hub 0.
    pub fn star(leaves: usize) -> Self {
        let edges = (1..=leaves).map(|v| (0, v));
        Self::new(leaves + 1, edges).expect("star edges are valid")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, x: Vertex, y: Vertex) -> bool {
        x < self.n() && self.adj[x].binary_search(&y).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degrees.sort_unstable();
        degrees
    }

    /// Applies the vertex map `perm` (old id -> new id), which must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n(), "relabeling must cover every vertex");
        let mut adj = vec![Vec::new(); self.n()];
        for (u, list) in self.adj.iter().enumerate() {
            adj[perm[u]] = list.iter().map(|&v| perm[v]).collect();
        }
        Self::from_raw_adjacency(adj)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut present = vec![false; n];
                present[v] = true;
                for &u in &self.adj[v] {
                    present[u] = true;
                }
                (0..n).filter(|&u| !present[u]).collect()
            })
            .collect();
        Self::from_raw_adjacency(adj)
    }

    /// Induced subgraph on `vertices` (deduplicated and sorted). Returns the
    /// subgraph and the map from new ids to the original ids.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Result<(Graph, Vec<Vertex>), GraphError> {
        let n = self.n();
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&v) = keep.iter().find(|&&v| v >= n) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n });
        }
        let mut new_id = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&u| (new_id[u] != usize::MAX).then_some(new_id[u]))
                    .collect()
            })
            .collect();
        Ok((Self::from_raw_adjacency(adj), keep))
    }

    /// Vertex sets of the connected components, each sorted, ordered by their
    /// smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<Vertex>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut cell = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        cell.push(u);
                        stack.push(u);
                    }
                }
            }
            cell.sort_unstable();
            components.push(cell);
        }
        components
    }

    /// A graph with no vertices counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// BFS distances from `source`.
    pub fn bfs(&self, source: Vertex) -> Vec<Dist> {
        let mut dist = vec![Dist::Inf; self.n()];
        dist[source] = Dist::Finite(0);
        let mut queue = VecDeque::from([(source, 0u32)]);
        while let Some((v, d)) = queue.pop_front() {
            for &u in &self.adj[v] {
                if dist[u].is_inf() {
                    dist[u] = Dist::Finite(d + 1);
                    queue.push_back((u, d + 1));
                }
            }
        }
        dist
    }

    pub fn distance_profile(&self) -> DistanceProfile {
        DistanceProfile::new(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Disjoint union of `graphs`, with the vertex offset of each summand.
pub fn disjoint_union(graphs: &[Graph]) -> (Graph, Vec<usize>) {
    let mut adj = Vec::new();
    let mut offsets = Vec::with_capacity(graphs.len());
    for g in graphs {
        let offset = adj.len();
        offsets.push(offset);
        adj.extend(g.adj.iter().map(|list| list.iter().map(|&v| v + offset).collect()));
    }
    (Graph::from_raw_adjacency(adj), offsets)
}

/// Graph distance in `[0, +inf]`. Only comparisons are defined; there is
/// no arithmetic on `Inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(u32),
    Inf,
}

impl Dist {
    pub fn is_inf(self) -> bool {
        matches!(self, Dist::Inf)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Inf => None,
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Inf => f.write_str("inf"),
        }
    }
}

/// Metric data of one connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentMetrics {
    pub vertices: Vec<Vertex>,
    pub radius: u32,
    pub diameter: u32,
    pub centre: Vec<Vertex>,
}

/// All-pairs distances with eccentricities and centre.
///
/// `ecc`, `eccentric_sets`, `radius`, `diameter` and `centre` are taken over
/// the whole vertex set, so on a disconnected graph every eccentricity is
/// `Inf` and the global radius/diameter/centre are absent; the per-component
/// values live in `components`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    n: usize,
    dist: Vec<Dist>,
    pub ecc: Vec<Dist>,
    pub eccentric_sets: Vec<Vec<Vertex>>,
    pub connected: bool,
    pub radius: Option<u32>,
    pub diameter: Option<u32>,
    pub centre: Vec<Vertex>,
    pub components: Vec<ComponentMetrics>,
    component_of: Vec<usize>,
}

impl DistanceProfile {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut dist = Vec::with_capacity(n * n);
        for v in 0..n {
            dist.extend(g.bfs(v));
        }
        let row = |v: usize| &dist[v * n..(v + 1) * n];

        let ecc: Vec<Dist> = (0..n)
            .map(|v| row(v).iter().copied().max().unwrap_or(Dist::Finite(0)))
            .collect();
        let eccentric_sets = (0..n)
            .map(|v| (0..n).filter(|&u| row(v)[u] == ecc[v]).collect())
            .collect();

        let cells = g.connected_components();
        let mut component_of = vec![0; n];
        let components: Vec<ComponentMetrics> = cells
            .into_iter()
            .enumerate()
            .map(|(id, vertices)| {
                let local_ecc: Vec<u32> = vertices
                    .iter()
                    .map(|&v| {
                        component_of[v] = id;
                        vertices
                            .iter()
                            .map(|&u| row(v)[u].finite().expect("same component"))
                            .max()
                            .unwrap_or(0)
                    })
                    .collect();
                let radius = *local_ecc.iter().min().expect("nonempty component");
                let diameter = *local_ecc.iter().max().expect("nonempty component");
                let centre = vertices
                    .iter()
                    .zip(&local_ecc)
                    .filter(|&(_, &e)| e == radius)
                    .map(|(&v, _)| v)
                    .collect();
                ComponentMetrics { vertices, radius, diameter, centre }
            })
            .collect();

        let connected = components.len() == 1;
        let (radius, diameter, centre) = if connected {
            let c = &components[0];
            (Some(c.radius), Some(c.diameter), c.centre.clone())
        } else {
            (None, None, Vec::new())
        };

        DistanceProfile {
            n,
            dist,
            ecc,
            eccentric_sets,
            connected,
            radius,
            diameter,
            centre,
            components,
            component_of,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dist(&self, x: Vertex, y: Vertex) -> Dist {
        self.dist[x * self.n + y]
    }

    /// Index into `components` of the component holding `v`.
    pub fn component_of(&self, v: Vertex) -> usize {
        self.component_of[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::bull;

    #[test]
    fn build_deduplicates_and_rejects_loops() {
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.m(), 2);
        let g = Graph::new(4, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.connected_components().len(), 3);
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn complement_examples() {
        let c4c = Graph::cycle(4).complement();
        assert_eq!(c4c.m(), 2);
        assert_eq!(c4c.connected_components(), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(Graph::complete(5).complement(), Graph::empty(5));
        assert_eq!(bull().complement().complement(), bull());
    }

    #[test]
    fn disjoint_union_offsets() {
        let (g, offsets) = disjoint_union(&[Graph::complete(2), Graph::complete(2)]);
        assert_eq!((g.n(), g.m()), (4, 2));
        assert_eq!(offsets, vec![0, 2]);
        assert_eq!(disjoint_union(&[Graph::empty(1)]).0, Graph::empty(1));
        let (g, _) = disjoint_union(&[Graph::path(3), Graph::complete(3)]);
        assert_eq!((g.n(), g.m(), g.connected_components().len()), (6, 5, 2));
    }

    #[test]
    fn induced_subgraphs() {
        let (tri, map) = bull().induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(tri, Graph::complete(3));
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(bull().induced_subgraph(&[]).unwrap().0.n(), 0);
        assert_eq!(bull().induced_subgraph(&[0, 1, 2, 3, 4]).unwrap().0, bull());
        assert!(bull().induced_subgraph(&[7]).is_err());
    }

    #[test]
    fn components_examples() {
        let (two_k2, _) = disjoint_union(&[Graph::complete(2), Graph::complete(2)]);
        assert_eq!(two_k2.connected_components().len(), 2);
        assert_eq!(Graph::cycle(5).connected_components(), vec![vec![0, 1, 2, 3, 4]]);
        assert_eq!(Graph::empty(3).connected_components().len(), 3);
    }

    #[test]
    fn distance_profile_examples() {
        let p5 = Graph::path(5).distance_profile();
        assert_eq!((p5.radius, p5.diameter), (Some(2), Some(4)));
        assert_eq!(p5.centre, vec![2]);

        let k4 = Graph::complete(4).distance_profile();
        assert_eq!(k4.centre, vec![0, 1, 2, 3]);
        assert!((0..4).all(|x| (0..4).all(|y| k4.dist(x, y) == Dist::Finite(u32::from(x != y)))));

        let b = bull().distance_profile();
        assert_eq!(b.centre, vec![0, 1, 2]);
        assert_eq!((b.radius, b.diameter), (Some(2), Some(3)));
        assert_eq!(b.eccentric_sets[3], vec![4]);
    }

    #[test]
    fn disconnected_profile_is_flagged() {
        let (g, _) = disjoint_union(&[Graph::path(3), Graph::complete(1)]);
        let p = g.distance_profile();
        assert!(!p.connected);
        assert_eq!(p.radius, None);
        assert!(p.centre.is_empty());
        assert!(p.ecc.iter().all(|e| e.is_inf()));
        assert_eq!(p.components[0].centre, vec![1]);
        assert_eq!(p.components[1].radius, 0);
        assert_eq!(p.component_of(3), 1);
    }

    #[test]
    fn inf_orders_above_every_distance() {
        assert!(Dist::Finite(u32::MAX) < Dist::Inf);
        assert_eq!(Dist::Inf.finite(), None);
    }
}
