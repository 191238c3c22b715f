//! Brute-force ground truth: automorphism enumeration, Schmidt's
//! criterion, isomorphism search, exhaustive enumeration of labeled graphs
//! and seeded random generators.
//!
//! Nothing here depends on the block-graph machinery; these routines only
//! use adjacency and BFS distances, so they can check it independently.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{disjoint_union, Dist, Graph, Vertex};

/// Default bound on the number of automorphisms enumerated.
pub const DEFAULT_CAP: usize = 1_000_000;
pub const MAX_AUTOMORPHISM_VERTICES: usize = 12;
pub const MAX_ISOMORPHISM_VERTICES: usize = 10;
pub const MAX_EXHAUSTIVE_VERTICES: usize = 6;
/// Reachable only with the long-running flag.
pub const MAX_LONG_EXHAUSTIVE_VERTICES: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph on {n} vertices exceeds the brute-force limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("more than {0} automorphisms; raise the cap to enumerate them")]
    CapExceeded(usize),
    #[error("exhaustive enumeration on {0} vertices needs the long-running flag")]
    NeedsLongRunning(usize),
}

/// Every automorphism of a graph, identity included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismSet {
    /// `perm[v]` is the image of `v`.
    pub perms: Vec<Vec<Vertex>>,
    pub order: usize,
    pub generators_hint: Option<Vec<Vec<Vertex>>>,
}

fn distance_signatures(g: &Graph) -> (Vec<Vec<Dist>>, Vec<Vec<Dist>>) {
    let rows: Vec<Vec<Dist>> = (0..g.n()).map(|v| g.bfs(v)).collect();
    let signatures = rows
        .iter()
        .map(|row| {
            let mut sorted = row.clone();
            sorted.sort_unstable();
            sorted
        })
        .collect();
    (rows, signatures)
}

/// Backtracking over vertex images, pruned by degree, sorted distance rows
/// and distances to already-mapped vertices.
pub fn enumerate_automorphisms(g: &Graph, cap: usize) -> Result<AutomorphismSet, OracleError> {
    let n = g.n();
    if n > MAX_AUTOMORPHISM_VERTICES {
        return Err(OracleError::TooLarge { n, limit: MAX_AUTOMORPHISM_VERTICES });
    }
    let (dist, signature) = distance_signatures(g);

    struct Search<'a> {
        g: &'a Graph,
        dist: &'a [Vec<Dist>],
        signature: &'a [Vec<Dist>],
        image: Vec<Option<Vertex>>,
        used: Vec<bool>,
        found: Vec<Vec<Vertex>>,
        cap: usize,
    }

    impl Search<'_> {
        fn extend(&mut self, v: Vertex) -> Result<(), OracleError> {
            let n = self.g.n();
            if v == n {
                if self.found.len() == self.cap {
                    return Err(OracleError::CapExceeded(self.cap));
                }
                self.found.push(self.image.iter().map(|x| x.expect("complete")).collect());
                return Ok(());
            }
            for candidate in 0..n {
                if self.used[candidate]
                    || self.g.degree(candidate) != self.g.degree(v)
                    || self.signature[candidate] != self.signature[v]
                {
                    continue;
                }
                let consistent = (0..v).all(|u| {
                    let iu = self.image[u].expect("mapped");
                    self.dist[u][v] == self.dist[iu][candidate]
                        && self.g.has_edge(u, v) == self.g.has_edge(iu, candidate)
                });
                if !consistent {
                    continue;
                }
                self.image[v] = Some(candidate);
                self.used[candidate] = true;
                self.extend(v + 1)?;
                self.used[candidate] = false;
                self.image[v] = None;
            }
            Ok(())
        }
    }

    let mut search = Search {
        g,
        dist: &dist,
        signature: &signature,
        image: vec![None; n],
        used: vec![false; n],
        found: Vec::new(),
        cap,
    };
    search.extend(0)?;
    let perms = search.found;
    Ok(AutomorphismSet { order: perms.len(), perms, generators_hint: None })
}

/// Whether `perm` preserves adjacency and non-adjacency of `g`.
pub fn is_automorphism(g: &Graph, perm: &[Vertex]) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    if perm.len() != n || perm.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true)) {
        return false;
    }
    (0..n).all(|x| (x + 1..n).all(|y| g.has_edge(x, y) == g.has_edge(perm[x], perm[y])))
}

fn support_mask(perm: &[Vertex]) -> u64 {
    perm.iter()
        .enumerate()
        .filter(|&(v, &image)| v != image)
        .fold(0, |mask, (v, _)| mask | (1 << v))
}

/// Schmidt's criterion: two nontrivial automorphisms with disjoint
/// supports.
pub fn schmidt_bruteforce(g: &Graph, cap: usize) -> Result<bool, OracleError> {
    Ok(schmidt_witness(g, cap)?.is_some())
}

/// Two automorphisms, as image vectors.
pub type DisjointPair = (Vec<Vertex>, Vec<Vertex>);

/// A pair of nontrivial automorphisms with disjoint supports, if any.
pub fn schmidt_witness(g: &Graph, cap: usize) -> Result<Option<DisjointPair>, OracleError> {
    let auts = enumerate_automorphisms(g, cap)?;
    let mut by_support: Vec<(u64, usize)> = auts
        .perms
        .iter()
        .enumerate()
        .map(|(i, p)| (support_mask(p), i))
        .filter(|&(mask, _)| mask != 0)
        .collect();
    by_support.sort_unstable();
    by_support.dedup_by_key(|(mask, _)| *mask);
    for (i, &(a, ia)) in by_support.iter().enumerate() {
        for &(b, ib) in &by_support[i + 1..] {
            if a & b == 0 {
                return Ok(Some((auts.perms[ia].clone(), auts.perms[ib].clone())));
            }
        }
    }
    Ok(None)
}

/// Exact isomorphism test by bijection search.
pub fn is_isomorphic_bruteforce(g: &Graph, h: &Graph) -> Result<bool, OracleError> {
    for graph in [g, h] {
        if graph.n() > MAX_ISOMORPHISM_VERTICES {
            return Err(OracleError::TooLarge { n: graph.n(), limit: MAX_ISOMORPHISM_VERTICES });
        }
    }
    if g.n() != h.n() || g.m() != h.m() || g.degree_sequence() != h.degree_sequence() {
        return Ok(false);
    }

    fn extend(g: &Graph, h: &Graph, image: &mut Vec<Vertex>, used: &mut [bool]) -> bool {
        let v = image.len();
        if v == g.n() {
            return true;
        }
        for candidate in 0..h.n() {
            if used[candidate] || h.degree(candidate) != g.degree(v) {
                continue;
            }
            if (0..v).any(|u| g.has_edge(u, v) != h.has_edge(image[u], candidate)) {
                continue;
            }
            used[candidate] = true;
            image.push(candidate);
            if extend(g, h, image, used) {
                return true;
            }
            image.pop();
            used[candidate] = false;
        }
        false
    }

    Ok(extend(g, h, &mut Vec::with_capacity(g.n()), &mut vec![false; h.n()]))
}

/// Iterator over every labeled graph on `n` vertices, one per edge subset.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(Vertex, Vertex)>,
    next: u64,
    end: u64,
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next == self.end {
            return None;
        }
        let mask = self.next;
        self.next += 1;
        let edges = self
            .pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Some(Graph::new(self.n, edges).expect("pairs are valid"))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}

/// All `2^(n(n-1)/2)` labeled graphs on `n` vertices. `n = 7` requires
/// `long_running`.
pub fn enumerate_labeled_graphs(n: usize, long_running: bool) -> Result<LabeledGraphs, OracleError> {
    let limit = if long_running { MAX_LONG_EXHAUSTIVE_VERTICES } else { MAX_EXHAUSTIVE_VERTICES };
    if n > limit {
        return if n <= MAX_LONG_EXHAUSTIVE_VERTICES {
            Err(OracleError::NeedsLongRunning(n))
        } else {
            Err(OracleError::TooLarge { n, limit })
        };
    }
    let pairs: Vec<(Vertex, Vertex)> =
        (0..n).flat_map(|y| (0..y).map(move |x| (x, y))).collect();
    Ok(LabeledGraphs { n, end: 1u64 << pairs.len(), pairs, next: 0 })
}

fn grow_block_graph<R: Rng>(rng: &mut R, target: usize, exact: bool) -> Graph {
    let mut edges = Vec::new();
    let mut n = 1;
    while n < target {
        let mut size = rng.random_range(2..=5);
        if exact {
            size = size.min(target - n + 1);
        }
        let anchor = rng.random_range(0..n);
        let members: Vec<Vertex> = std::iter::once(anchor).chain(n..n + size - 1).collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                edges.push((a, b));
            }
        }
        n += size - 1;
    }
    Graph::new(n.max(target.min(1)), edges).expect("generated edges are valid")
}

/// Connected block graph grown from `K_1` by attaching complete blocks of
/// size 2..=5 at uniformly random vertices until there are at least `n`
/// vertices (so at most `n + 3`). Deterministic per seed.
pub fn random_block_graph(n: usize, seed: u64) -> Graph {
    grow_block_graph(&mut ChaCha8Rng::seed_from_u64(seed), n.max(1), false)
}

/// Connected block graph on exactly `n >= 1` vertices, randomly relabeled.
pub fn random_block_graph_exact<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let g = grow_block_graph(rng, n.max(1), true);
    let perm = random_permutation(rng, g.n());
    g.relabel(&perm)
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<Vertex> {
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Random block-cograph on exactly `n` vertices built from a random cotree:
/// disjoint unions, complements, and block-graph (or co-block-graph) leaves.
pub fn random_block_cograph<R: Rng>(rng: &mut R, n: usize) -> Graph {
    fn build<R: Rng>(rng: &mut R, n: usize) -> Graph {
        if n <= 1 {
            return Graph::empty(n);
        }
        match rng.random_range(0..4) {
            0 => random_block_graph_exact(rng, n),
            1 => random_block_graph_exact(rng, n).complement(),
            2 => {
                let left = rng.random_range(1..n);
                disjoint_union(&[build(rng, left), build(rng, n - left)]).0
            }
            _ => build(rng, n).complement(),
        }
    }
    let g = build(rng, n);
    let perm = random_permutation(rng, g.n());
    g.relabel(&perm)
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
