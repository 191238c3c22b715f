//! The block-cut tree decomposition against a direct reading of the
//! recursive definition, built only from `psi` and induced subgraphs.

use qblock_core::blocks::block_cut_decomposition;
use qblock_core::oracle::{enumerate_labeled_graphs, random_block_graph_exact, seeded_rng};
use qblock_core::psi::{self, AnchoredGraph, ClassEntry, DecompositionNode};
use qblock_core::{is_block_graph, Graph};

fn sorted(mut nodes: Vec<DecompositionNode>) -> Vec<DecompositionNode> {
    nodes.sort_by_cached_key(DecompositionNode::code);
    nodes
}

fn without(g: &Graph, r: usize) -> (Graph, Vec<usize>) {
    let rest: Vec<usize> = (0..g.n()).filter(|&v| v != r).collect();
    g.induced_subgraph(&rest).unwrap()
}

fn rooted_parts(ag: &AnchoredGraph) -> Vec<DecompositionNode> {
    psi::psi(ag)
        .components()
        .into_iter()
        .map(|(part, root)| by_definition(&part, root))
        .collect()
}

fn by_definition(g: &Graph, r: usize) -> DecompositionNode {
    if g.n() == 1 {
        return DecompositionNode::LeafK1;
    }
    let (rest, map) = without(g, r);
    if g.degree(r) == 1 {
        let neighbour = map.binary_search(&g.neighbors(r)[0]).unwrap();
        return DecompositionNode::DegreeOneRoot { child: Box::new(by_definition(&rest, neighbour)) };
    }
    if !rest.is_connected() {
        let ag = AnchoredGraph::new(g.clone(), &[r]).unwrap();
        return DecompositionNode::CutRoot { children: sorted(rooted_parts(&ag)) };
    }
    let block: Vec<usize> = g.neighbors(r).iter().map(|&v| map.binary_search(&v).unwrap()).collect();
    let ag = AnchoredGraph::new(rest, &block).unwrap();
    DecompositionNode::BlockRoot { children: sorted(rooted_parts(&ag)) }
}

fn top_by_definition(g: &Graph) -> DecompositionNode {
    let ag = psi::select_anchor(g).unwrap();
    let parts = rooted_parts(&ag);
    if let psi::Anchor::CutVertex(_) = ag.anchor() {
        return DecompositionNode::TopCut { children: sorted(parts) };
    }
    let z = parts.iter().filter(|p| **p == DecompositionNode::LeafK1).count();
    let mut classes: Vec<ClassEntry> = Vec::new();
    for node in sorted(parts.into_iter().filter(|p| *p != DecompositionNode::LeafK1).collect()) {
        match classes.last_mut() {
            Some(last) if last.node == node => last.multiplicity += 1,
            _ => classes.push(ClassEntry { multiplicity: 1, node }),
        }
    }
    DecompositionNode::TopBlock { z, classes }
}

#[test]
fn rooted_decomposition_matches_definition_exhaustively() {
    let mut checked = 0;
    for n in 1..=6 {
        for g in enumerate_labeled_graphs(n, false).unwrap() {
            if !g.is_connected() || !is_block_graph(&g) {
                continue;
            }
            for r in 0..n {
                assert_eq!(psi::decompose_rooted(&g, r).unwrap(), by_definition(&g, r), "{g:?} at {r}");
                checked += 1;
            }
            assert_eq!(psi::decompose(&g).unwrap(), top_by_definition(&g), "{g:?}");
        }
    }
    assert_eq!(checked, 1 + 2 + 3 * 4 + 4 * 29 + 5 * 311 + 6 * 4447);
}

#[test]
fn anchored_decomposition_matches_definition_on_larger_graphs() {
    let mut rng = seeded_rng(31);
    for i in 0..300 {
        let g = random_block_graph_exact(&mut rng, 10 + i % 30);
        assert_eq!(psi::decompose(&g).unwrap(), top_by_definition(&g));
        let r = i % g.n();
        assert_eq!(psi::decompose_rooted(&g, r).unwrap(), by_definition(&g, r));
    }
}

#[test]
fn psi_examples() {
    let bull = qblock_core::named::bull();
    let ag = AnchoredGraph::new(bull.clone(), &[0, 1, 2]).unwrap();
    let image = psi::psi(&ag);
    let mut sizes: Vec<usize> = image.components().iter().map(|(c, _)| c.n()).collect();
    sizes.sort();
    assert_eq!(sizes, vec![1, 2, 2]);
    assert_eq!(image.roots(), &[0, 1, 2]);

    let k4 = AnchoredGraph::new(Graph::complete(4), &[0, 1, 2, 3]).unwrap();
    assert_eq!(psi::psi(&k4).graph(), &Graph::empty(4));

    let bowtie = AnchoredGraph::new(qblock_core::named::bowtie(), &[0]).unwrap();
    let parts = psi::psi(&bowtie).components();
    assert_eq!(parts.len(), 2);
    assert!(parts.iter().all(|(c, _)| c == &Graph::complete(3)));

    assert!(AnchoredGraph::new(bull.clone(), &[0]).is_err());
    assert!(AnchoredGraph::new(bull, &[0, 1]).is_err());
}

#[test]
fn decomposition_examples() {
    use DecompositionNode::*;
    let leaf = || LeafK1;
    assert_eq!(psi::decompose_rooted(&Graph::complete(3), 0).unwrap(), BlockRoot { children: vec![leaf(), leaf()] });
    assert_eq!(
        psi::decompose_rooted(&Graph::path(3), 0).unwrap(),
        DegreeOneRoot { child: Box::new(DegreeOneRoot { child: Box::new(leaf()) }) }
    );
    let spoke = DegreeOneRoot { child: Box::new(leaf()) };
    assert_eq!(psi::decompose_rooted(&Graph::star(4), 0).unwrap(), CutRoot { children: vec![spoke.clone(); 4] });
    assert_eq!(
        psi::decompose(&qblock_core::named::bowtie()).unwrap(),
        TopCut { children: vec![BlockRoot { children: vec![leaf(), leaf()] }; 2] }
    );
    assert_eq!(psi::decompose(&Graph::complete(4)).unwrap(), TopBlock { z: 4, classes: vec![] });
    assert_eq!(
        psi::decompose(&qblock_core::named::bull()).unwrap(),
        TopBlock { z: 1, classes: vec![ClassEntry { multiplicity: 2, node: spoke }] }
    );
}

#[test]
fn anchors_and_codes() {
    let bull = qblock_core::named::bull();
    assert_eq!(psi::select_anchor(&bull).unwrap().anchor(), &psi::Anchor::Block(vec![0, 1, 2]));
    assert_eq!(psi::select_anchor(&Graph::path(5)).unwrap().anchor(), &psi::Anchor::CutVertex(2));
    assert_eq!(psi::select_anchor(&Graph::complete(4)).unwrap().anchor(), &psi::Anchor::Block(vec![0, 1, 2, 3]));
    assert_eq!(psi::select_anchor(&Graph::cycle(4)).unwrap_err(), psi::PsiError::NotBlockGraph);
    assert_eq!(psi::select_anchor(&Graph::empty(2)).unwrap_err(), psi::PsiError::NotConnected);

    assert_ne!(psi::canonical_code(&bull).unwrap(), psi::canonical_code(&Graph::path(5)).unwrap());
    let k3 = psi::RootedGraph::new(Graph::complete(3), &[0]).unwrap();
    let p3 = psi::RootedGraph::new(Graph::path(3), &[0]).unwrap();
    assert_eq!(psi::rooted_code(&k3).unwrap(), "B{•,•}");
    assert_eq!(psi::rooted_code(&p3).unwrap(), "L(L(•))");
    assert!(!psi::is_isomorphic(&Graph::star(3), &Graph::path(4)).unwrap());
    assert_eq!(psi::is_isomorphic(&Graph::cycle(4), &Graph::cycle(4)), Err(psi::PsiError::NotBlockGraph));
}

#[test]
fn internal_vertices_of_the_centre_block() {
    let mut rng = seeded_rng(5);
    for i in 0..200 {
        let g = random_block_graph_exact(&mut rng, 2 + i % 25);
        let ag = psi::select_anchor(&g).unwrap();
        if let (psi::Anchor::Block(q), DecompositionNode::TopBlock { z, .. }) =
            (ag.anchor(), psi::decompose(&g).unwrap())
        {
            let bc = block_cut_decomposition(&g);
            let internal = q.iter().filter(|&&v| !bc.is_cut_vertex(v)).count();
            assert_eq!(z, internal);
        }
    }
}

#[test]
fn long_paths_decompose_on_worker_threads() {
    let n = 4_001;
    let code = qblock_core::par::with_workers(1, || psi::canonical_code(&Graph::path(n)).unwrap());
    let arm = (0..n / 2).fold("•".to_string(), |c, _| format!("L({c})"));
    assert_eq!(code, format!("A{{{arm},{arm}}}"));
}
