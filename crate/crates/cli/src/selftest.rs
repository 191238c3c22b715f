//! Reduced-scale oracle equivalence checks.

use serde::Serialize;

use qblock_core::oracle::{
    self, enumerate_labeled_graphs, random_block_cograph, random_block_graph_exact,
    random_permutation, seeded_rng,
};
use qblock_core::{
    classical_order, graph_expr, has_quantum_symmetry, hyperbolicity, is_block_graph, psi, Graph,
};

#[derive(Debug, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn suite(name: &'static str, cases: impl IntoIterator<Item = Result<(), String>>) -> SuiteResult {
    let mut result = SuiteResult { name, cases: 0, failures: 0, first_failure: None };
    for case in cases {
        result.cases += 1;
        if let Err(message) = case {
            result.failures += 1;
            result.first_failure.get_or_insert(message);
        }
    }
    result
}

fn g6(g: &Graph) -> String {
    qblock_core::io::encode_graph6(g).unwrap_or_else(|_| "<large>".into())
}

fn group_checks(g: &Graph, cap: usize) -> Result<(), String> {
    let expr = graph_expr(g).map_err(|e| format!("{}: {e}", g6(g)))?;
    let order = classical_order(&expr).map_err(|e| format!("{}: {e}", g6(g)))?;
    let auts = oracle::enumerate_automorphisms(g, cap).map_err(|e| e.to_string())?;
    if order != auts.order as u128 {
        return Err(format!("{}: order {order} from {expr}, brute force {}", g6(g), auts.order));
    }
    let schmidt = oracle::schmidt_bruteforce(g, cap).map_err(|e| e.to_string())?;
    if has_quantum_symmetry(g) != Ok(schmidt) {
        return Err(format!("{}: quantum symmetry disagrees with Schmidt's criterion", g6(g)));
    }
    Ok(())
}

pub fn run(seed: u64, cap: usize) -> Vec<SuiteResult> {
    let mut rng = seeded_rng(seed);
    let mut results = Vec::new();

    results.push(suite(
        "delta-zero-iff-block-graph (n <= 5)",
        (0..=5).flat_map(|n| enumerate_labeled_graphs(n, false).expect("small n")).map(|g| {
            let zero = hyperbolicity(&g).is_zero();
            if zero == is_block_graph(&g) {
                Ok(())
            } else {
                Err(format!("{}: delta zero = {zero}", g6(&g)))
            }
        }),
    ));

    let block_graphs: Vec<Graph> =
        (0..100).map(|i| random_block_graph_exact(&mut rng, 1 + i % 9)).collect();
    results.push(suite(
        "block-graph order and Schmidt (100 random)",
        block_graphs.iter().map(|g| group_checks(g, cap)),
    ));

    let pairs: Vec<(Graph, Graph)> = (0..100)
        .map(|i| {
            let n = 1 + i % 8;
            let g = random_block_graph_exact(&mut rng, n);
            let h = if i % 2 == 0 {
                g.relabel(&random_permutation(&mut rng, n))
            } else {
                random_block_graph_exact(&mut rng, n)
            };
            (g, h)
        })
        .collect();
    results.push(suite(
        "canonical code vs brute-force isomorphism (100 pairs)",
        pairs.iter().map(|(g, h)| {
            let fast = psi::is_isomorphic(g, h).map_err(|e| e.to_string())?;
            let slow = oracle::is_isomorphic_bruteforce(g, h).map_err(|e| e.to_string())?;
            if fast == slow {
                Ok(())
            } else {
                Err(format!("{} vs {}: code {fast}, brute force {slow}", g6(g), g6(h)))
            }
        }),
    ));

    let cographs: Vec<Graph> = (0..100).map(|i| random_block_cograph(&mut rng, 1 + i % 9)).collect();
    results.push(suite(
        "block-cograph order, Schmidt and complement (100 random)",
        cographs.iter().map(|g| {
            group_checks(g, cap)?;
            if graph_expr(g) != graph_expr(&g.complement()) {
                return Err(format!("{}: expression changes under complement", g6(g)));
            }
            Ok(())
        }),
    ));

    results
}
