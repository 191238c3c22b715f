use serde::Serialize;
use serde_json::{json, Value};

use qblock_core::cograph::{canonical_code_cograph, cotree_decompose, CotreeView};
use qblock_core::group::{block_graph_expr, classical_order, classify, GraphClass};
use qblock_core::hyperbolicity::{hyperbolicity, HalfInteger};
use qblock_core::oracle::{self, MAX_AUTOMORPHISM_VERTICES};
use qblock_core::psi::{self, Anchor, DecompositionNode};
use qblock_core::report::analyze;
use qblock_core::{block_cut_decomposition, Graph};

/// Result of one command on one graph (or pair).
pub struct Record {
    pub json: Value,
    pub text: String,
    pub failed: bool,
}

impl Record {
    fn ok<T: Serialize>(value: &T, text: String) -> Record {
        Record { json: serde_json::to_value(value).expect("serializable"), text, failed: false }
    }

    pub fn error(id: &str, message: &str) -> Record {
        Record {
            json: json!({ "id": id, "error": message }),
            text: format!("{id}: error: {message}"),
            failed: true,
        }
    }
}

fn class_name(class: Option<GraphClass>) -> &'static str {
    match class {
        Some(GraphClass::BlockGraph) => "block-graph",
        Some(GraphClass::BlockCograph) => "block-cograph",
        None => "unsupported",
    }
}

fn opt_text<T: ToString>(value: Option<T>, missing: &str) -> String {
    value.map_or_else(|| missing.to_string(), |v| v.to_string())
}

pub fn analyze_cmd(id: &str, g: &Graph, cap: usize) -> Record {
    let r = analyze(id, g, cap);
    let text = format!(
        "{id}: n = {}, m = {}, delta = {}, class = {}, Aut = {}, Qu = {}, |Aut| = {}, quantum symmetry = {}",
        r.n,
        r.m,
        HalfInteger(r.twice_delta),
        r.class,
        opt_text(r.aut_text.as_ref(), "?"),
        opt_text(r.qaut_text.as_ref(), "?"),
        opt_text(r.aut_order, "?"),
        opt_text(r.has_quantum_symmetry, "unknown"),
    );
    Record::ok(&r, text)
}

pub fn hyperbolicity_cmd(id: &str, g: &Graph) -> Record {
    let h = hyperbolicity(g);
    let value = json!({
        "id": id,
        "n": g.n(),
        "delta": h.delta(),
        "twice_delta": h.twice_delta,
        "witness": h.witness,
        "per_component": h.per_component,
    });
    Record::ok(&value, format!("delta = {}", HalfInteger(h.twice_delta)))
}

#[derive(Serialize)]
pub struct DeltaRow {
    pub id: String,
    pub n: usize,
    pub m: usize,
    pub delta: f64,
    pub twice_delta: u32,
    pub is_block_graph: bool,
}

pub fn delta_row(id: &str, g: &Graph) -> DeltaRow {
    let h = hyperbolicity(g);
    DeltaRow {
        id: id.to_string(),
        n: g.n(),
        m: g.m(),
        delta: h.delta(),
        twice_delta: h.twice_delta,
        is_block_graph: qblock_core::is_block_graph(g),
    }
}

pub fn recognize_cmd(id: &str, g: &Graph) -> Record {
    let bc = block_cut_decomposition(g);
    let block_graph = qblock_core::is_block_graph(g);
    let block_cograph = cotree_decompose(g).is_some();
    let class = class_name(classify(g));
    let value = json!({
        "id": id,
        "is_block_graph": block_graph,
        "is_block_cograph": block_cograph,
        "class": class,
        "blocks": bc.blocks,
        "cut_vertices": bc.cut_vertices,
    });
    let text = format!("block graph: {block_graph}; block-cograph: {block_cograph}; class: {class}");
    Record::ok(&value, text)
}

#[derive(Serialize)]
struct DecomposeOut {
    id: String,
    class: &'static str,
    anchor: Option<Anchor>,
    decomposition: Option<DecompositionNode>,
    cotree: Option<CotreeView>,
    code: String,
}

pub fn decompose_cmd(id: &str, g: &Graph) -> Record {
    if qblock_core::is_block_graph(g) && g.is_connected() {
        let ag = psi::select_anchor(g).expect("connected block graph");
        let node = psi::decompose_anchored(&ag).expect("block graph");
        let code = node.code();
        let anchor = match ag.anchor() {
            Anchor::CutVertex(v) => format!("cut vertex {v}"),
            Anchor::Block(b) => format!("block {b:?}"),
        };
        let text = format!("anchor: {anchor}; code: {code}");
        let out = DecomposeOut {
            id: id.to_string(),
            class: "block-graph",
            anchor: Some(ag.anchor().clone()),
            decomposition: Some(node),
            cotree: None,
            code,
        };
        return Record::ok(&out, text);
    }
    match cotree_decompose(g) {
        Some(tree) => {
            let code = tree.code();
            let text = format!("cotree: {code}");
            let out = DecomposeOut {
                id: id.to_string(),
                class: class_name(classify(g)),
                anchor: None,
                decomposition: None,
                cotree: Some(CotreeView::from(&tree)),
                code,
            };
            Record::ok(&out, text)
        }
        None => Record::error(id, "graph is neither a block graph nor a block-cograph"),
    }
}

pub fn group_cmd(id: &str, g: &Graph, cap: usize) -> Record {
    let class = classify(g);
    let expr = match class {
        Some(GraphClass::BlockGraph) => Some(block_graph_expr(g).expect("block graph")),
        Some(GraphClass::BlockCograph) => Some(cotree_decompose(g).expect("block-cograph").expr()),
        None => None,
    };
    let (order, source) = match &expr {
        Some(e) => (classical_order(e).ok(), "expression"),
        None if g.n() <= MAX_AUTOMORPHISM_VERTICES => match oracle::enumerate_automorphisms(g, cap) {
            Ok(auts) => (Some(auts.order as u128), "brute-force"),
            Err(e) => return Record::error(id, &e.to_string()),
        },
        None => (None, "none"),
    };
    let value = json!({
        "id": id,
        "class": class_name(class),
        "aut_expr": expr.as_ref().map(ToString::to_string),
        "aut_text": expr.as_ref().map(|e| e.classical_text()),
        "qaut_text": expr.as_ref().map(|e| e.quantum_text()),
        "aut_order": order,
        "aut_order_source": source,
    });
    let text = match &expr {
        Some(e) => format!(
            "Aut = {}; Qu = {}; |Aut| = {}",
            e.classical_text(),
            e.quantum_text(),
            opt_text(order, "overflow")
        ),
        None => format!("class: unsupported; |Aut| = {} ({source})", opt_text(order, "?")),
    };
    Record::ok(&value, text)
}

pub fn schmidt_cmd(id: &str, g: &Graph, cap: usize) -> Record {
    match oracle::schmidt_witness(g, cap) {
        Ok(witness) => {
            let holds = witness.is_some();
            let value = json!({ "id": id, "schmidt": holds, "witness": witness });
            Record::ok(&value, format!("schmidt: {holds}"))
        }
        Err(e) => Record::error(id, &e.to_string()),
    }
}

pub fn qsym_cmd(id: &str, g: &Graph) -> Record {
    let class = classify(g);
    let (symmetry, asymmetric) = match class {
        Some(_) => (
            qblock_core::has_quantum_symmetry(g).ok(),
            qblock_core::is_quantum_asymmetric(g).ok(),
        ),
        None => (None, None),
    };
    let value = json!({
        "id": id,
        "class": class_name(class),
        "has_quantum_symmetry": symmetry,
        "is_quantum_asymmetric": asymmetric,
    });
    let text = match class {
        Some(_) => format!(
            "quantum symmetry: {}; quantum asymmetric: {}",
            opt_text(symmetry, "unknown"),
            opt_text(asymmetric, "unknown")
        ),
        None => "quantum symmetry: unknown (unsupported class)".to_string(),
    };
    Record::ok(&value, text)
}

fn supported_code(g: &Graph) -> Option<(GraphClass, String)> {
    match classify(g)? {
        GraphClass::BlockGraph => Some((GraphClass::BlockGraph, psi::canonical_code(g).ok()?)),
        GraphClass::BlockCograph => {
            Some((GraphClass::BlockCograph, canonical_code_cograph(g).ok()?))
        }
    }
}

pub fn canon_cmd(id: &str, g: &Graph) -> Record {
    match supported_code(g) {
        Some((class, code)) => {
            let value = json!({ "id": id, "class": class_name(Some(class)), "code": code });
            Record::ok(&value, code)
        }
        None => Record::error(id, "graph is neither a block graph nor a block-cograph"),
    }
}

/// Isomorphism of a pair. Inside the supported classes canonical codes
/// decide both verdicts (superrigidity); a supported graph is never
/// (quantum) isomorphic to an unsupported one. Two unsupported graphs fall
/// back to the brute-force classical test.
pub fn iso_cmd(ids: (&str, &str), g: &Graph, h: &Graph) -> Record {
    let pair = format!("{} ~ {}", ids.0, ids.1);
    let (iso, quantum, method) = match (classify(g), classify(h)) {
        (Some(a), Some(b)) => {
            let iso = if a == GraphClass::BlockGraph && b == GraphClass::BlockGraph {
                psi::is_isomorphic(g, h).expect("block graphs")
            } else {
                canonical_code_cograph(g).ok() == canonical_code_cograph(h).ok()
            };
            (iso, Some(iso), "canonical-code")
        }
        (Some(_), None) | (None, Some(_)) => (false, Some(false), "class-membership"),
        (None, None) => match oracle::is_isomorphic_bruteforce(g, h) {
            Ok(iso) => (iso, None, "brute-force"),
            Err(e) => return Record::error(&pair, &e.to_string()),
        },
    };
    let value = json!({
        "pair": [ids.0, ids.1],
        "isomorphic": iso,
        "quantum_isomorphic": quantum,
        "method": method,
    });
    let text = match quantum {
        Some(q) => format!("isomorphic: {iso}; quantum-isomorphic: {q} (superrigidity)"),
        None => format!("isomorphic: {iso}; quantum-isomorphic: unknown (unsupported class)"),
    };
    Record::ok(&value, text)
}
