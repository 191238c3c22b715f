//! Small named graphs used throughout the test suites and the self-test.

use crate::graph::Graph;

/// Triangle `0,1,2` with horns `3-1` and `4-2`; vertex 0 is the chin.
pub fn bull() -> Graph {
    Graph::new(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)]).expect("valid edges")
}

/// Two triangles sharing the cut vertex 0.
pub fn bowtie() -> Graph {
    Graph::new(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).expect("valid edges")
}

/// `K_4` minus the edge `{2,3}`.
pub fn diamond() -> Graph {
    Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).expect("valid edges")
}

/// `k.g`, the disjoint union of `k` copies of `g`.
pub fn copies(k: usize, g: &Graph) -> Graph {
    let parts = vec![g.clone(); k];
    crate::graph::disjoint_union(&parts).0
}
