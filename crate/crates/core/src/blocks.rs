//! Blocks (maximal 2-connected subgraphs), cut vertices and block graphs.
//!
//! An isolated vertex forms a singleton block and counts as a cut vertex,
//! so every vertex lies in at least one block and every one-vertex component
//! is anchored at a cut vertex.

use serde::Serialize;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockCutStructure {
    /// Sorted vertex sets, ordered by size then lexicographically.
    pub blocks: Vec<Vec<Vertex>>,
    pub cut_vertices: Vec<Vertex>,
    /// Per block: its vertices that lie in no other block.
    pub internal_vertices: Vec<Vec<Vertex>>,
    /// Per block: the cut vertices it contains.
    pub block_cuts: Vec<Vec<Vertex>>,
    /// Per vertex: indices of the blocks containing it.
    pub vertex_blocks: Vec<Vec<usize>>,
}

impl BlockCutStructure {
    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.cut_vertices.binary_search(&v).is_ok()
    }

    /// Index of the block whose vertex set is exactly `vertices` (sorted).
    pub fn find_block(&self, vertices: &[Vertex]) -> Option<usize> {
        self.blocks.iter().position(|b| b == vertices)
    }
}

/// Hopcroft-Tarjan lowpoint biconnectivity, iterative, linear in `n + m`.
pub fn block_cut_decomposition(g: &Graph) -> BlockCutStructure {
    let n = g.n();
    const UNSEEN: usize = usize::MAX;
    let mut depth = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();

    for root in 0..n {
        if depth[root] != UNSEEN {
            continue;
        }
        if g.degree(root) == 0 {
            depth[root] = 0;
            is_cut[root] = true;
            blocks.push(vec![root]);
            continue;
        }
        depth[root] = 0;
        low[root] = 0;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack: Vec<(Vertex, Vertex, usize)> = vec![(root, UNSEEN, 0)];
        while let Some(frame) = stack.last_mut() {
            let (v, parent, next) = *frame;
            if let Some(&u) = g.neighbors(v).get(next) {
                frame.2 += 1;
                if depth[u] == UNSEEN {
                    edge_stack.push((v, u));
                    depth[u] = depth[v] + 1;
                    low[u] = depth[u];
                    stack.push((u, v, 0));
                } else if u != parent && depth[u] < depth[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(depth[u]);
                }
                continue;
            }
            stack.pop();
            if parent == UNSEEN {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= depth[parent] {
                if parent == root {
                    root_children += 1;
                } else {
                    is_cut[parent] = true;
                }
                let mut block = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    block.push(a);
                    block.push(b);
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                block.sort_unstable();
                block.dedup();
                blocks.push(block);
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }

    blocks.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut vertex_blocks = vec![Vec::new(); n];
    for (i, block) in blocks.iter().enumerate() {
        for &v in block {
            vertex_blocks[v].push(i);
        }
    }
    let internal_vertices = blocks
        .iter()
        .map(|b| b.iter().copied().filter(|&v| vertex_blocks[v].len() == 1).collect())
        .collect();
    let block_cuts = blocks
        .iter()
        .map(|b| b.iter().copied().filter(|&v| is_cut[v]).collect())
        .collect();
    let cut_vertices = (0..n).filter(|&v| is_cut[v]).collect();

    BlockCutStructure {
        blocks,
        cut_vertices,
        internal_vertices,
        block_cuts,
        vertex_blocks,
    }
}

fn is_clique(g: &Graph, vertices: &[Vertex]) -> bool {
    vertices
        .iter()
        .enumerate()
        .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// Whether every block of `g` is complete.
pub fn is_block_graph(g: &Graph) -> bool {
    block_cut_decomposition(g)
        .blocks
        .iter()
        .all(|b| is_clique(g, b))
}

/// Intersection graph of the blocks of `g`; vertex `i` is block `i` of
/// [`block_cut_decomposition`].
pub fn block_graph_of(g: &Graph) -> Graph {
    let bc = block_cut_decomposition(g);
    let mut edges = Vec::new();
    for incident in &bc.vertex_blocks {
        for (i, &a) in incident.iter().enumerate() {
            for &b in &incident[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    Graph::new(bc.blocks.len(), edges).expect("block indices are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{bowtie, bull, diamond};

    #[test]
    fn bull_blocks() {
        let bc = block_cut_decomposition(&bull());
        assert_eq!(bc.blocks, vec![vec![1, 3], vec![2, 4], vec![0, 1, 2]]);
        assert_eq!(bc.cut_vertices, vec![1, 2]);
        assert_eq!(bc.internal_vertices[2], vec![0]);
        assert_eq!(bc.block_cuts[2], vec![1, 2]);
    }

    #[test]
    fn path_and_single_vertex() {
        let bc = block_cut_decomposition(&Graph::path(3));
        assert_eq!(bc.blocks, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(bc.cut_vertices, vec![1]);

        let k1 = block_cut_decomposition(&Graph::empty(1));
        assert_eq!(k1.blocks, vec![vec![0]]);
        assert_eq!(k1.cut_vertices, vec![0]);
    }

    #[test]
    fn cycle_with_pendant() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
        let bc = block_cut_decomposition(&g);
        assert_eq!(bc.blocks, vec![vec![3, 4], vec![0, 1, 2, 3]]);
        assert_eq!(bc.cut_vertices, vec![3]);
    }

    #[test]
    fn root_cut_vertex_detected() {
        let bc = block_cut_decomposition(&bowtie());
        assert_eq!(bc.cut_vertices, vec![0]);
        assert_eq!(bc.blocks, vec![vec![0, 1, 2], vec![0, 3, 4]]);
    }

    #[test]
    fn recognition_examples() {
        assert!(is_block_graph(&bull()));
        assert!(!is_block_graph(&Graph::cycle(4)));
        assert!(!is_block_graph(&diamond()));
        assert!(is_block_graph(&Graph::star(5)));
        assert!(is_block_graph(&Graph::path(7)));
        assert!(is_block_graph(&Graph::empty(3)));
    }

    #[test]
    fn block_graph_examples() {
        assert_eq!(block_graph_of(&bull()), Graph::path(3).relabel(&[0, 2, 1]));
        assert_eq!(block_graph_of(&Graph::cycle(6)), Graph::empty(1));
        let p4 = block_graph_of(&Graph::path(4));
        assert_eq!((p4.n(), p4.m()), (3, 2));
        assert_eq!(p4.degree_sequence(), vec![1, 1, 2]);
    }
}
