use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qblock_core::oracle::{random_block_graph, random_block_cograph, seeded_rng, DEFAULT_CAP};
use qblock_core::{hyperbolicity, hyperbolicity_sequential, par, report, Graph};
use std::hint::black_box;

fn hyperbolicity_paths(c: &mut Criterion) {
    let mut group = c.benchmark_group("hyperbolicity");
    group.sample_size(10);
    let mut rng = seeded_rng(11);
    let inputs = [
        ("block-graph-60", random_block_graph(60, 5)),
        ("cycle-48", Graph::cycle(48)),
        ("block-cograph-40", random_block_cograph(&mut rng, 40)),
    ];
    for (name, g) in &inputs {
        group.bench_with_input(BenchmarkId::new("parallel", name), g, |b, g| {
            b.iter(|| hyperbolicity(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("sequential", name), g, |b, g| {
            b.iter(|| hyperbolicity_sequential(black_box(g)))
        });
    }
    group.finish();
}

fn batch_analysis(c: &mut Criterion) {
    let mut group = c.benchmark_group("batch-analysis");
    group.sample_size(10);
    let graphs: Vec<Graph> = (0..64).map(|seed| random_block_graph(20, seed)).collect();
    group.bench_function("parallel", |b| {
        b.iter(|| par::map(&graphs, |g| report::analyze("g", g, DEFAULT_CAP).to_json()))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| {
            graphs
                .iter()
                .map(|g| report::analyze("g", g, DEFAULT_CAP).to_json())
                .collect::<Vec<_>>()
        })
    });
    group.finish();
}

criterion_group!(benches, hyperbolicity_paths, batch_analysis);
criterion_main!(benches);
