//! Anchored and rooted block graphs, the Ψ-operation, recursive
//! decompositions and canonical codes.
//!
//! An anchored graph is a connected graph marked with a cut vertex or a
//! whole block. Ψ turns it into a rooted graph: a cut-vertex anchor `r` is
//! split into one copy per component of `G - r`, while a block anchor loses
//! the edges inside it and every anchor vertex becomes a root.
//!
//! On a block graph the repeated application of Ψ is read off the block-cut
//! tree: below a vertex hang the blocks not yet visited, below a block hang
//! its remaining vertices. The resulting [`DecompositionNode`] tree keeps
//! every multiset of children sorted by canonical code, so structural
//! equality of nodes coincides with isomorphism of the rooted graphs they
//! describe.

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::blocks::{block_cut_decomposition, is_block_graph, BlockCutStructure};
use crate::graph::{disjoint_union, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PsiError {
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not a block graph; use the brute-force oracle for general graphs")]
    NotBlockGraph,
    #[error("anchor {0:?} is neither a cut vertex nor a block")]
    InvalidAnchor(Vec<Vertex>),
    #[error("roots {0:?} do not pick exactly one vertex per component")]
    InvalidRoots(Vec<Vertex>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "vertices")]
pub enum Anchor {
    CutVertex(Vertex),
    Block(Vec<Vertex>),
}

impl Anchor {
    pub fn vertices(&self) -> Vec<Vertex> {
        match self {
            Anchor::CutVertex(v) => vec![*v],
            Anchor::Block(b) => b.clone(),
        }
    }
}

/// Connected graph with an anchor that is a single cut vertex or one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchoredGraph {
    graph: Graph,
    anchor: Anchor,
}

impl AnchoredGraph {
    pub fn new(graph: Graph, anchor: &[Vertex]) -> Result<Self, PsiError> {
        if !graph.is_connected() {
            return Err(PsiError::NotConnected);
        }
        let mut set = anchor.to_vec();
        set.sort_unstable();
        set.dedup();
        let bc = block_cut_decomposition(&graph);
        let anchor = match set.as_slice() {
            [v] if *v < graph.n() && bc.is_cut_vertex(*v) => Anchor::CutVertex(*v),
            _ if set.len() >= 2 && bc.find_block(&set).is_some() => Anchor::Block(set),
            _ => return Err(PsiError::InvalidAnchor(set)),
        };
        Ok(AnchoredGraph { graph, anchor })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn anchor(&self) -> &Anchor {
        &self.anchor
    }
}

/// Graph with exactly one root per connected component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedGraph {
    graph: Graph,
    roots: Vec<Vertex>,
}

impl RootedGraph {
    pub fn new(graph: Graph, roots: &[Vertex]) -> Result<Self, PsiError> {
        let mut roots = roots.to_vec();
        roots.sort_unstable();
        let components = graph.connected_components();
        let mut hits = vec![0usize; components.len()];
        for &r in &roots {
            let Some(c) = components.iter().position(|cell| cell.binary_search(&r).is_ok()) else {
                return Err(PsiError::InvalidRoots(roots));
            };
            hits[c] += 1;
        }
        if hits.iter().any(|&h| h != 1) {
            return Err(PsiError::InvalidRoots(roots));
        }
        Ok(RootedGraph { graph, roots })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn roots(&self) -> &[Vertex] {
        &self.roots
    }

    /// Each component as its own graph with its root, in component order.
    pub fn components(&self) -> Vec<(Graph, Vertex)> {
        self.graph
            .connected_components()
            .into_iter()
            .map(|cell| {
                let root = *self
                    .roots
                    .iter()
                    .find(|r| cell.binary_search(r).is_ok())
                    .expect("one root per component");
                let (sub, map) = self.graph.induced_subgraph(&cell).expect("cell in range");
                let local = map.binary_search(&root).expect("root in cell");
                (sub, local)
            })
            .collect()
    }
}

/// Anchors a connected block graph at its centre, which is a cut vertex or
/// exactly one block.
pub fn select_anchor(g: &Graph) -> Result<AnchoredGraph, PsiError> {
    if !g.is_connected() {
        return Err(PsiError::NotConnected);
    }
    if !is_block_graph(g) {
        return Err(PsiError::NotBlockGraph);
    }
    let centre = g.distance_profile().centre;
    AnchoredGraph::new(g.clone(), &centre)
}

/// Ψ of an anchored graph.
pub fn psi(ag: &AnchoredGraph) -> RootedGraph {
    psi_with_origin(ag).0
}

/// Ψ together with the original vertex behind each vertex of the result.
pub fn psi_with_origin(ag: &AnchoredGraph) -> (RootedGraph, Vec<Vertex>) {
    let g = &ag.graph;
    match &ag.anchor {
        Anchor::CutVertex(r) => {
            let r = *r;
            let others: Vec<Vertex> = (0..g.n()).filter(|&v| v != r).collect();
            let (rest, rest_map) = g.induced_subgraph(&others).expect("in range");
            let mut parts = Vec::new();
            let mut origin = Vec::new();
            let mut roots = Vec::new();
            for cell in rest.connected_components() {
                let mut vertices: Vec<Vertex> = cell.iter().map(|&v| rest_map[v]).collect();
                vertices.push(r);
                let (part, map) = g.induced_subgraph(&vertices).expect("in range");
                roots.push(origin.len() + map.binary_search(&r).expect("root kept"));
                origin.extend(&map);
                parts.push(part);
            }
            let (union, _) = disjoint_union(&parts);
            (RootedGraph::new(union, &roots).expect("one copy of r per part"), origin)
        }
        Anchor::Block(q) => {
            let inside = |v: Vertex| q.binary_search(&v).is_ok();
            let edges = g.edges().filter(|&(a, b)| !(inside(a) && inside(b)));
            let stripped = Graph::new(g.n(), edges).expect("subset of valid edges");
            let rooted = RootedGraph::new(stripped, q).expect("anchor block meets every part once");
            (rooted, (0..g.n()).collect())
        }
    }
}

/// One class of isomorphic rooted components with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ClassEntry {
    pub multiplicity: usize,
    pub node: DecompositionNode,
}

/// Recursive record of the Ψ-decomposition.
///
/// `LeafK1`, `DegreeOneRoot`, `CutRoot` and `BlockRoot` describe connected
/// rooted block graphs; `TopCut` and `TopBlock` describe an anchored graph by
/// the rooted components of its Ψ-image. Child multisets are sorted by code.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind")]
pub enum DecompositionNode {
    LeafK1,
    DegreeOneRoot { child: Box<DecompositionNode> },
    CutRoot { children: Vec<DecompositionNode> },
    BlockRoot { children: Vec<DecompositionNode> },
    TopCut { children: Vec<DecompositionNode> },
    TopBlock { z: usize, classes: Vec<ClassEntry> },
}

impl DecompositionNode {
    /// Number of vertices of the (rooted or anchored) graph this node
    /// describes.
    pub fn covers(&self) -> usize {
        use DecompositionNode::*;
        match self {
            LeafK1 => 1,
            DegreeOneRoot { child } => 1 + child.covers(),
            CutRoot { children } | TopCut { children } => {
                1 + children.iter().map(|c| c.covers() - 1).sum::<usize>()
            }
            BlockRoot { children } => 1 + children.iter().map(Self::covers).sum::<usize>(),
            TopBlock { z, classes } => {
                z + classes.iter().map(|c| c.multiplicity * c.node.covers()).sum::<usize>()
            }
        }
    }

    pub fn code(&self) -> String {
        let mut out = String::new();
        self.write_code(&mut out);
        out
    }

    fn write_code(&self, out: &mut String) {
        use DecompositionNode::*;
        let list = |out: &mut String, open: &str, children: &[DecompositionNode]| {
            out.push_str(open);
            for (i, c) in children.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                c.write_code(out);
            }
            out.push('}');
        };
        match self {
            LeafK1 => out.push('•'),
            DegreeOneRoot { child } => {
                out.push_str("L(");
                child.write_code(out);
                out.push(')');
            }
            CutRoot { children } => list(out, "C{", children),
            BlockRoot { children } => list(out, "B{", children),
            TopCut { children } => list(out, "A{", children),
            TopBlock { z, classes } => {
                write!(out, "Q{{{z};").expect("string write");
                for (i, class) in classes.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    write!(out, "{}*", class.multiplicity).expect("string write");
                    class.node.write_code(out);
                }
                out.push('}');
            }
        }
    }
}

/// A node with its code, so sorting never re-renders subtrees.
struct Coded {
    node: DecompositionNode,
    code: String,
}

fn sorted_children(mut items: Vec<Coded>) -> (Vec<DecompositionNode>, Vec<String>) {
    items.sort_by(|a, b| a.code.cmp(&b.code));
    items.into_iter().map(|c| (c.node, c.code)).unzip()
}

fn bracketed(open: &str, codes: &[String]) -> String {
    format!("{open}{}}}", codes.join(","))
}

/// Walks the block-cut tree of a block graph.
struct BlockTree<'a> {
    bc: &'a BlockCutStructure,
}

impl BlockTree<'_> {
    fn child_blocks(&self, v: Vertex, parent: Option<usize>) -> Vec<usize> {
        self.bc.vertex_blocks[v]
            .iter()
            .copied()
            .filter(|&b| Some(b) != parent && self.bc.blocks[b].len() >= 2)
            .collect()
    }

    /// Rooted graph at `v` made of everything reachable from `v` without
    /// entering `parent`.
    fn vertex_node(&self, v: Vertex, parent: Option<usize>) -> Coded {
        let blocks = self.child_blocks(v, parent);
        match blocks.as_slice() {
            [] => Coded { node: DecompositionNode::LeafK1, code: "•".to_string() },
            [b] => self.block_node(*b, v),
            _ => {
                let (children, codes) =
                    sorted_children(blocks.iter().map(|&b| self.block_node(b, v)).collect());
                Coded {
                    node: DecompositionNode::CutRoot { children },
                    code: bracketed("C{", &codes),
                }
            }
        }
    }

    /// Rooted graph at `v` made of block `b` and everything hanging below
    /// its other vertices.
    fn block_node(&self, b: usize, v: Vertex) -> Coded {
        let others: Vec<Vertex> = self.bc.blocks[b].iter().copied().filter(|&u| u != v).collect();
        if let [u] = others.as_slice() {
            let child = self.vertex_node(*u, Some(b));
            return Coded {
                code: format!("L({})", child.code),
                node: DecompositionNode::DegreeOneRoot { child: Box::new(child.node) },
            };
        }
        let (children, codes) =
            sorted_children(others.iter().map(|&u| self.vertex_node(u, Some(b))).collect());
        Coded {
            node: DecompositionNode::BlockRoot { children },
            code: bracketed("B{", &codes),
        }
    }

    fn anchored(&self, anchor: &Anchor) -> Coded {
        match anchor {
            Anchor::CutVertex(c) => {
                let blocks = self.child_blocks(*c, None);
                let (children, codes) =
                    sorted_children(blocks.iter().map(|&b| self.block_node(b, *c)).collect());
                Coded {
                    node: DecompositionNode::TopCut { children },
                    code: bracketed("A{", &codes),
                }
            }
            Anchor::Block(q) => {
                let bq = self.bc.find_block(q).expect("anchor is a block");
                let (children, codes) =
                    sorted_children(q.iter().map(|&u| self.vertex_node(u, Some(bq))).collect());
                let mut z = 0;
                let mut classes: Vec<(ClassEntry, String)> = Vec::new();
                for (node, code) in children.into_iter().zip(codes) {
                    if node == DecompositionNode::LeafK1 {
                        z += 1;
                        continue;
                    }
                    match classes.last_mut() {
                        Some((entry, last)) if *last == code => entry.multiplicity += 1,
                        _ => classes.push((ClassEntry { multiplicity: 1, node }, code)),
                    }
                }
                let mut code = format!("Q{{{z};");
                for (i, (entry, c)) in classes.iter().enumerate() {
                    if i > 0 {
                        code.push(',');
                    }
                    write!(code, "{}*{c}", entry.multiplicity).expect("string write");
                }
                code.push('}');
                Coded {
                    node: DecompositionNode::TopBlock {
                        z,
                        classes: classes.into_iter().map(|(e, _)| e).collect(),
                    },
                    code,
                }
            }
        }
    }
}

fn require_block_graph(g: &Graph) -> Result<(), PsiError> {
    if is_block_graph(g) {
        Ok(())
    } else {
        Err(PsiError::NotBlockGraph)
    }
}

/// Decomposition of a connected rooted block graph `(G, r)`.
pub fn decompose_rooted(g: &Graph, root: Vertex) -> Result<DecompositionNode, PsiError> {
    RootedGraph::new(g.clone(), &[root])?;
    require_block_graph(g)?;
    let bc = block_cut_decomposition(g);
    Ok(BlockTree { bc: &bc }.vertex_node(root, None).node)
}

/// Decomposition of an anchored block graph from the rooted components of
/// its Ψ-image.
pub fn decompose_anchored(ag: &AnchoredGraph) -> Result<DecompositionNode, PsiError> {
    require_block_graph(&ag.graph)?;
    let bc = block_cut_decomposition(&ag.graph);
    Ok(BlockTree { bc: &bc }.anchored(&ag.anchor).node)
}

/// Decomposition of a connected block graph anchored at its centre.
pub fn decompose(g: &Graph) -> Result<DecompositionNode, PsiError> {
    decompose_anchored(&select_anchor(g)?)
}

fn anchored_code_of(g: &Graph) -> Result<String, PsiError> {
    let ag = select_anchor(g)?;
    let bc = block_cut_decomposition(g);
    Ok(BlockTree { bc: &bc }.anchored(&ag.anchor).code)
}

/// Canonical code of a block graph: equal codes exactly for isomorphic
/// graphs. Disconnected graphs get `U{...}` over their component codes.
pub fn canonical_code(g: &Graph) -> Result<String, PsiError> {
    require_block_graph(g)?;
    let components = g.connected_components();
    if components.len() == 1 {
        return anchored_code_of(g);
    }
    let mut codes = components
        .iter()
        .map(|cell| anchored_code_of(&g.induced_subgraph(cell).expect("in range").0))
        .collect::<Result<Vec<_>, _>>()?;
    codes.sort();
    Ok(bracketed("U{", &codes))
}

/// Canonical code of a rooted block graph; several components give
/// `U{...}` over the rooted component codes.
pub fn rooted_code(rg: &RootedGraph) -> Result<String, PsiError> {
    require_block_graph(&rg.graph)?;
    let mut codes = Vec::new();
    for (sub, root) in rg.components() {
        let bc = block_cut_decomposition(&sub);
        codes.push(BlockTree { bc: &bc }.vertex_node(root, None).code);
    }
    if codes.len() == 1 {
        return Ok(codes.pop().expect("one code"));
    }
    codes.sort();
    Ok(bracketed("U{", &codes))
}

pub fn anchored_code(ag: &AnchoredGraph) -> Result<String, PsiError> {
    require_block_graph(&ag.graph)?;
    let bc = block_cut_decomposition(&ag.graph);
    Ok(BlockTree { bc: &bc }.anchored(&ag.anchor).code)
}

/// Isomorphism of block graphs by canonical code. Block graphs are
/// superrigid, so the verdict also decides quantum isomorphism.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool, PsiError> {
    if g.n() != h.n() || g.m() != h.m() {
        require_block_graph(g)?;
        require_block_graph(h)?;
        return Ok(false);
    }
    Ok(canonical_code(g)? == canonical_code(h)?)
}
