//! Pinned values computed once with the brute-force oracle.

use qblock_core::cograph::is_block_cograph;
use qblock_core::named::{bowtie, bull, copies, diamond};
use qblock_core::oracle::enumerate_labeled_graphs;
use qblock_core::{
    classical_order, graph_expr, has_quantum_symmetry, hyperbolicity, is_block_graph,
    is_quantum_asymmetric, Graph, GroupExpr,
};

struct Counts {
    total: usize,
    connected: usize,
    block: usize,
    connected_block: usize,
    block_cograph: usize,
    quantum_symmetric: usize,
}

fn counts(n: usize) -> Counts {
    let all: Vec<Graph> = enumerate_labeled_graphs(n, false).unwrap().collect();
    let count = |p: &dyn Fn(&Graph) -> bool| all.iter().filter(|g| p(g)).count();
    Counts {
        total: all.len(),
        connected: count(&|g| g.is_connected()),
        block: count(&|g| is_block_graph(g)),
        connected_block: count(&|g| g.is_connected() && is_block_graph(g)),
        block_cograph: count(&|g| is_block_cograph(g)),
        quantum_symmetric: count(&|g| has_quantum_symmetry(g) == Ok(true)),
    }
}

#[test]
fn labeled_graph_counts() {
    let table = [
        (3, 8, 4, 8, 4, 8, 0),
        (4, 64, 38, 55, 29, 64, 20),
        (5, 1024, 728, 562, 311, 1012, 312),
        (6, 32768, 26704, 7739, 4447, 20264, 6344),
    ];
    for (n, total, connected, block, connected_block, block_cograph, qsym) in table {
        let c = counts(n);
        assert_eq!(
            (c.total, c.connected, c.block, c.connected_block, c.block_cograph, c.quantum_symmetric),
            (total, connected, block, connected_block, block_cograph, qsym),
            "n = {n}"
        );
    }
}

#[test]
fn group_texts() {
    let cases = [
        (bull(), "S2", "S2+"),
        (bowtie(), "(S2 wr S2)", "(S2+ fwr S2+)"),
        (Graph::star(4), "S4", "S4+"),
        (Graph::path(4), "S2", "S2+"),
        (Graph::cycle(4), "(S2 wr S2)", "(S2+ fwr S2+)"),
        (copies(2, &Graph::complete(3)), "(S3 wr S2)", "(S3+ fwr S2+)"),
    ];
    for (g, classical, quantum) in cases {
        let e = graph_expr(&g).unwrap();
        assert_eq!(e.classical_text(), classical);
        assert_eq!(e.quantum_text(), quantum);
    }
}

#[test]
fn orders_and_asymmetry() {
    assert_eq!(classical_order(&graph_expr(&copies(3, &bull())).unwrap()), Ok(48));
    assert_eq!(classical_order(&graph_expr(&Graph::complete(12)).unwrap()), Ok(479_001_600));
    // the smallest asymmetric tree has seven vertices
    let asym = Graph::new(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]).unwrap();
    assert!(is_quantum_asymmetric(&asym).unwrap());
    assert!(!is_quantum_asymmetric(&Graph::path(7)).unwrap());
    assert_eq!(graph_expr(&Graph::empty(1)), Ok(GroupExpr::Triv));
}

#[test]
fn hyperbolicity_values() {
    assert_eq!(hyperbolicity(&Graph::cycle(4)).twice_delta, 2);
    assert_eq!(hyperbolicity(&Graph::cycle(5)).twice_delta, 1);
    assert_eq!(hyperbolicity(&Graph::cycle(6)).twice_delta, 2);
    assert_eq!(hyperbolicity(&diamond()).twice_delta, 1);
    assert_eq!(hyperbolicity(&bull()).twice_delta, 0);
    let two_squares = qblock_core::disjoint_union(&[Graph::cycle(4), Graph::cycle(5)]).0;
    assert_eq!(hyperbolicity(&two_squares).twice_delta, 2);
}
