//! One-graph analysis record, serialized as deterministic JSON.

use serde::Serialize;

use crate::blocks::block_cut_decomposition;
use crate::cograph::{cotree_decompose, expr_block_cograph, CotreeView};
use crate::graph::{Graph, Vertex};
use crate::group::{
    block_graph_expr, classical_order, expr_from_decomposition, is_commutative_quantum,
    GraphClass, GroupExpr,
};
use crate::hyperbolicity::{hyperbolicity, ComponentDelta};
use crate::io::encode_graph6;
use crate::oracle::{self, MAX_AUTOMORPHISM_VERTICES};
use crate::psi::{self, Anchor, DecompositionNode};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderSource {
    Expression,
    BruteForce,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub graph6: Option<String>,
    pub connected: bool,
    pub hyperbolicity: f64,
    pub twice_delta: u32,
    pub hyperbolicity_witness: Option<[Vertex; 4]>,
    pub per_component: Vec<ComponentDelta>,
    pub is_block_graph: bool,
    pub is_block_cograph: bool,
    pub class: &'static str,
    pub blocks: Vec<Vec<Vertex>>,
    pub cut_vertices: Vec<Vertex>,
    pub centre: Vec<Vertex>,
    pub anchor: Option<Anchor>,
    pub decomposition: Option<DecompositionNode>,
    pub cotree: Option<CotreeView>,
    pub canonical_code: Option<String>,
    pub aut_expr: Option<String>,
    pub aut_text: Option<String>,
    pub qaut_text: Option<String>,
    pub aut_order: Option<u128>,
    pub aut_order_source: Option<OrderSource>,
    pub has_quantum_symmetry: Option<bool>,
    pub is_quantum_asymmetric: Option<bool>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn expr_class(&self) -> Option<GraphClass> {
        match self.class {
            "block-graph" => Some(GraphClass::BlockGraph),
            "block-cograph" => Some(GraphClass::BlockCograph),
            _ => None,
        }
    }
}

/// Full analysis of `g`. For graphs outside both classes the automorphism
/// order falls back to brute force when `g` is small and has at most `cap`
/// automorphisms; quantum fields stay `None`.
pub fn analyze(id: &str, g: &Graph, cap: usize) -> AnalysisReport {
    let hyp = hyperbolicity(g);
    let profile = g.distance_profile();
    let bc = block_cut_decomposition(g);
    let block_graph = crate::blocks::is_block_graph(g);
    let cotree = cotree_decompose(g);

    let (anchor, decomposition) = if block_graph && g.is_connected() {
        let ag = psi::select_anchor(g).expect("connected block graph");
        let node = psi::decompose_anchored(&ag).expect("block graph");
        (Some(ag.anchor().clone()), Some(node))
    } else {
        (None, None)
    };

    let (class, expr, canonical_code): (&'static str, Option<GroupExpr>, Option<String>) =
        if block_graph {
            let expr = match &decomposition {
                Some(node) => expr_from_decomposition(node),
                None => block_graph_expr(g).expect("block graph"),
            };
            ("block-graph", Some(expr), psi::canonical_code(g).ok())
        } else if let Some(tree) = &cotree {
            ("block-cograph", Some(tree.expr()), Some(tree.code()))
        } else {
            ("unsupported", None, None)
        };
    debug_assert!(class != "block-cograph" || expr_block_cograph(g).is_ok());

    let (aut_order, aut_order_source) = match &expr {
        Some(e) => (classical_order(e).ok(), Some(OrderSource::Expression)),
        None if g.n() <= MAX_AUTOMORPHISM_VERTICES => match oracle::enumerate_automorphisms(g, cap) {
            Ok(auts) => (Some(auts.order as u128), Some(OrderSource::BruteForce)),
            Err(_) => (None, None),
        },
        None => (None, None),
    };

    AnalysisReport {
        schema: SCHEMA_VERSION,
        id: id.to_string(),
        n: g.n(),
        m: g.m(),
        graph6: encode_graph6(g).ok(),
        connected: g.is_connected(),
        hyperbolicity: hyp.delta(),
        twice_delta: hyp.twice_delta,
        hyperbolicity_witness: hyp.witness,
        per_component: hyp.per_component.clone(),
        is_block_graph: block_graph,
        is_block_cograph: cotree.is_some(),
        class,
        blocks: bc.blocks,
        cut_vertices: bc.cut_vertices,
        centre: profile.centre.clone(),
        anchor,
        decomposition,
        cotree: cotree.as_ref().map(CotreeView::from),
        canonical_code,
        aut_expr: expr.as_ref().map(ToString::to_string),
        aut_text: expr.as_ref().map(GroupExpr::classical_text),
        qaut_text: expr.as_ref().map(GroupExpr::quantum_text),
        aut_order,
        aut_order_source,
        has_quantum_symmetry: expr.as_ref().map(|e| !is_commutative_quantum(e)),
        is_quantum_asymmetric: aut_order.filter(|_| expr.is_some()).map(|o| o == 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::bull;
    use crate::oracle::DEFAULT_CAP;

    #[test]
    fn bull_report() {
        let r = analyze("bull", &bull(), DEFAULT_CAP);
        assert_eq!(r.class, "block-graph");
        assert_eq!(r.twice_delta, 0);
        assert_eq!(r.aut_expr.as_deref(), Some("Sym(2)"));
        assert_eq!(r.aut_order, Some(2));
        assert_eq!(r.has_quantum_symmetry, Some(false));
        assert_eq!(r.is_quantum_asymmetric, Some(false));
        assert_eq!(r.canonical_code.as_deref(), Some("Q{1;2*L(•)}"));
        assert_eq!(r.centre, vec![0, 1, 2]);
        assert_eq!(r.expr_class(), Some(GraphClass::BlockGraph));
    }

    #[test]
    fn cycle_reports() {
        let c4 = analyze("c4", &Graph::cycle(4), DEFAULT_CAP);
        assert_eq!(c4.class, "block-cograph");
        assert_eq!(c4.hyperbolicity, 1.0);
        assert_eq!(c4.aut_order, Some(8));
        assert_eq!(c4.has_quantum_symmetry, Some(true));

        let c5 = analyze("c5", &Graph::cycle(5), DEFAULT_CAP);
        assert_eq!(c5.class, "unsupported");
        assert_eq!(c5.aut_order, Some(10));
        assert_eq!(c5.aut_order_source, Some(OrderSource::BruteForce));
        assert_eq!(c5.has_quantum_symmetry, None);
        assert_eq!(c5.is_quantum_asymmetric, None);
    }

    #[test]
    fn json_is_deterministic() {
        let a = analyze("x", &bull(), DEFAULT_CAP).to_json();
        let b = analyze("x", &bull(), DEFAULT_CAP).to_json();
        assert_eq!(a, b);
        let value: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(value["schema"], 1);
        assert_eq!(value["anchor"]["kind"], "Block");
        assert_eq!(value["decomposition"]["kind"], "TopBlock");
    }
}
