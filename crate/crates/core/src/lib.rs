//! Hyperbolicity, block-graph recognition, Ψ-decomposition, canonical codes
//! and (quantum) automorphism group expressions for block graphs and
//! block-cographs, with brute-force oracles for checking them.

pub mod blocks;
pub mod cograph;
pub mod graph;
pub mod group;
pub mod hyperbolicity;
pub mod io;
pub mod named;
pub mod oracle;
pub mod par;
pub mod psi;
pub mod report;

pub use blocks::{block_cut_decomposition, block_graph_of, is_block_graph, BlockCutStructure};
pub use cograph::{
    canonical_code_cograph, cotree_decompose, expr_block_cograph, is_block_cograph,
    is_isomorphic_cograph, CotreeNode,
};
pub use graph::{disjoint_union, Dist, DistanceProfile, Graph, GraphError, Vertex};
pub use group::{
    classical_order, classify, graph_expr, has_quantum_symmetry, is_commutative_quantum,
    is_quantum_asymmetric, normalize_expr, GraphClass, GroupError, GroupExpr,
};
pub use hyperbolicity::{hyperbolicity, hyperbolicity_sequential, HyperbolicityResult};
pub use psi::{
    canonical_code, decompose, decompose_anchored, decompose_rooted, is_isomorphic, psi,
    select_anchor, AnchoredGraph, DecompositionNode, PsiError, RootedGraph,
};
pub use report::{analyze, AnalysisReport};
