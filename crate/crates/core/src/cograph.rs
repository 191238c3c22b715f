//! Block-cographs: the closure of block graphs under complement and
//! disjoint union.
//!
//! A graph is split into components when disconnected and complemented when
//! its complement is disconnected; what remains (connected with connected
//! complement) must be a block graph or the complement of one. Block-cographs
//! strictly contain the tree-cographs: the bull is a block graph but is
//! self-complementary, so it is no tree-cograph.

use serde::Serialize;
use thiserror::Error;

use crate::blocks::is_block_graph;
use crate::graph::Graph;
use crate::group::{block_graph_expr, product_of_classes, GroupExpr};
use crate::psi;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CographError {
    #[error("graph is not a block-cograph")]
    NotInClass,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LeafTag {
    /// The leaf itself is a block graph (its complement may be one too).
    BlockGraph,
    /// Only the complement of the leaf is a block graph.
    CoBlockGraph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CotreeNode {
    /// Disjoint union of at least two connected parts.
    Union(Vec<CotreeNode>),
    /// Complement of a disconnected graph.
    Complement(Box<CotreeNode>),
    /// Connected, co-connected graph that is a block graph or the complement
    /// of one.
    Leaf { graph: Graph, tag: LeafTag },
}

impl CotreeNode {
    pub fn vertex_count(&self) -> usize {
        match self {
            CotreeNode::Union(children) => children.iter().map(Self::vertex_count).sum(),
            CotreeNode::Complement(child) => child.vertex_count(),
            CotreeNode::Leaf { graph, .. } => graph.n(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            CotreeNode::Union(children) => 1 + children.iter().map(Self::depth).max().unwrap_or(0),
            CotreeNode::Complement(child) => 1 + child.depth(),
            CotreeNode::Leaf { .. } => 1,
        }
    }

    /// Canonical code, see [`canonical_code_cograph`].
    pub fn code(&self) -> String {
        match self {
            CotreeNode::Union(children) => {
                let mut codes: Vec<String> = children.iter().map(Self::code).collect();
                codes.sort();
                format!("u{{{}}}", codes.join(","))
            }
            CotreeNode::Complement(child) => format!("c({})", child.code()),
            CotreeNode::Leaf { graph, .. } => leaf_code(graph),
        }
    }

    pub fn expr(&self) -> GroupExpr {
        match self {
            CotreeNode::Union(children) => {
                let mut parts: Vec<(String, &CotreeNode)> =
                    children.iter().map(|c| (c.code(), c)).collect();
                parts.sort_by(|a, b| a.0.cmp(&b.0));
                let codes: Vec<&String> = parts.iter().map(|(c, _)| c).collect();
                product_of_classes(&codes, |code| {
                    let (_, node) = parts.iter().find(|(c, _)| c == *code).expect("listed code");
                    node.expr()
                })
            }
            // a graph and its complement share their (quantum) automorphisms
            CotreeNode::Complement(child) => child.expr(),
            CotreeNode::Leaf { graph, tag } => match tag {
                LeafTag::BlockGraph => block_graph_expr(graph),
                LeafTag::CoBlockGraph => block_graph_expr(&graph.complement()),
            }
            .expect("leaf side is a block graph"),
        }
    }
}

fn leaf_code(graph: &Graph) -> String {
    let mut options = Vec::with_capacity(2);
    if let Ok(code) = psi::canonical_code(graph) {
        options.push(format!("b:{code}"));
    }
    if let Ok(code) = psi::canonical_code(&graph.complement()) {
        options.push(format!("cb:{code}"));
    }
    options.into_iter().min().expect("leaf or its complement is a block graph")
}

/// Cotree of `g`, or `None` when `g` is not a block-cograph.
///
/// A complement node always has a union child, so the depth is at most
/// `2n + 1`.
pub fn cotree_decompose(g: &Graph) -> Option<CotreeNode> {
    let node = decompose_inner(g, 2 * g.n() + 2)?;
    debug_assert_eq!(node.vertex_count(), g.n());
    Some(node)
}

fn decompose_inner(g: &Graph, budget: usize) -> Option<CotreeNode> {
    assert!(budget > 0, "cotree recursion exceeded its depth bound");
    let components = g.connected_components();
    if components.len() >= 2 {
        let children = components
            .iter()
            .map(|cell| decompose_inner(&g.induced_subgraph(cell).expect("in range").0, budget - 1))
            .collect::<Option<Vec<_>>>()?;
        return Some(CotreeNode::Union(children));
    }
    let complement = g.complement();
    if complement.connected_components().len() >= 2 {
        let child = decompose_inner(&complement, budget - 1)?;
        return Some(CotreeNode::Complement(Box::new(child)));
    }
    let tag = if is_block_graph(g) {
        LeafTag::BlockGraph
    } else if is_block_graph(&complement) {
        LeafTag::CoBlockGraph
    } else {
        return None;
    };
    Some(CotreeNode::Leaf { graph: g.clone(), tag })
}

pub fn is_block_cograph(g: &Graph) -> bool {
    cotree_decompose(g).is_some()
}

pub fn expr_block_cograph(g: &Graph) -> Result<GroupExpr, CographError> {
    Ok(cotree_decompose(g).ok_or(CographError::NotInClass)?.expr())
}

/// Canonical code of a block-cograph: `u{...}` for unions (children sorted),
/// `c(...)` for complements, and for leaves the smaller of `b:` + the block
/// code of the leaf and `cb:` + the block code of its complement, over the
/// sides that are block graphs. Equal codes exactly for isomorphic graphs;
/// by superrigidity also exactly for quantum isomorphic ones.
pub fn canonical_code_cograph(g: &Graph) -> Result<String, CographError> {
    Ok(cotree_decompose(g).ok_or(CographError::NotInClass)?.code())
}

pub fn is_isomorphic_cograph(g: &Graph, h: &Graph) -> Result<bool, CographError> {
    Ok(canonical_code_cograph(g)? == canonical_code_cograph(h)?)
}

/// Serializable view of a cotree for reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum CotreeView {
    Union { children: Vec<CotreeView> },
    Complement { child: Box<CotreeView> },
    Leaf { n: usize, m: usize, tag: LeafTag, code: String },
}

impl From<&CotreeNode> for CotreeView {
    fn from(node: &CotreeNode) -> Self {
        match node {
            CotreeNode::Union(children) => {
                let mut sorted: Vec<(String, &CotreeNode)> =
                    children.iter().map(|c| (c.code(), c)).collect();
                sorted.sort_by(|a, b| a.0.cmp(&b.0));
                CotreeView::Union {
                    children: sorted.into_iter().map(|(_, c)| c.into()).collect(),
                }
            }
            CotreeNode::Complement(child) => {
                CotreeView::Complement { child: Box::new(child.as_ref().into()) }
            }
            CotreeNode::Leaf { graph, tag } => CotreeView::Leaf {
                n: graph.n(),
                m: graph.m(),
                tag: *tag,
                code: leaf_code(graph),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupExpr::*;
    use crate::named::{bull, copies};

    #[test]
    fn c4_is_complement_of_two_edges() {
        let tree = cotree_decompose(&Graph::cycle(4)).unwrap();
        let CotreeNode::Complement(inner) = &tree else { panic!("{tree:?}") };
        let CotreeNode::Union(parts) = inner.as_ref() else { panic!("{inner:?}") };
        assert_eq!(parts.len(), 2);
        // K_2 itself has a disconnected complement
        let k1 = CotreeNode::Leaf { graph: Graph::empty(1), tag: LeafTag::BlockGraph };
        let k2 = CotreeNode::Complement(Box::new(CotreeNode::Union(vec![k1.clone(), k1])));
        assert!(parts.iter().all(|p| p == &k2));
    }

    #[test]
    fn bull_is_a_leaf_and_c5_is_outside() {
        assert_eq!(
            cotree_decompose(&bull()),
            Some(CotreeNode::Leaf { graph: bull(), tag: LeafTag::BlockGraph })
        );
        assert_eq!(cotree_decompose(&Graph::cycle(5)), None);
        assert_eq!(expr_block_cograph(&Graph::cycle(5)), Err(CographError::NotInClass));
    }

    #[test]
    fn co_block_leaf() {
        // the house graph, complement of P_5
        let p5c = Graph::path(5).complement();
        assert!(!is_block_graph(&p5c));
        let tree = cotree_decompose(&p5c).unwrap();
        assert!(matches!(tree, CotreeNode::Leaf { tag: LeafTag::CoBlockGraph, .. }));
        assert_eq!(tree.expr(), Sym(2));
    }

    #[test]
    fn expression_examples() {
        assert_eq!(expr_block_cograph(&Graph::cycle(4)), Ok(GroupExpr::wreath(Sym(2), 2)));
        assert_eq!(
            expr_block_cograph(&copies(3, &Graph::complete(2))),
            Ok(GroupExpr::wreath(Sym(2), 3))
        );
        assert_eq!(expr_block_cograph(&bull()), Ok(Sym(2)));
        assert_eq!(expr_block_cograph(&Graph::star(3)), Ok(Sym(3)));
    }

    #[test]
    fn codes() {
        let c4 = Graph::cycle(4);
        let relabeled = c4.relabel(&[2, 0, 3, 1]);
        assert_eq!(canonical_code_cograph(&c4), canonical_code_cograph(&relabeled));
        assert_eq!(canonical_code_cograph(&c4).unwrap(), "c(u{c(u{b:A{},b:A{}}),c(u{b:A{},b:A{}})})");
        assert!(is_isomorphic_cograph(&bull(), &bull().complement()).unwrap());
        assert_eq!(
            canonical_code_cograph(&bull()).unwrap(),
            canonical_code_cograph(&bull().complement()).unwrap()
        );
        assert!(!is_isomorphic_cograph(&c4, &copies(2, &Graph::complete(2))).unwrap());
    }

    fn add_isolated(g: &Graph) -> (Graph, Vec<usize>) {
        crate::graph::disjoint_union(&[g.clone(), Graph::empty(1)])
    }

    #[test]
    fn depth_is_bounded_by_vertex_count() {
        // threshold graphs alternate union and complement all the way down
        let mut g = Graph::empty(1);
        for k in 2..=12 {
            let (union, _) = add_isolated(&g);
            g = if k % 2 == 0 { union.complement() } else { union };
            let tree = cotree_decompose(&g).unwrap();
            assert!(tree.depth() <= 2 * g.n() + 1);
        }
        assert!(cotree_decompose(&g).unwrap().depth() >= g.n());
    }
}
