use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use cyclink::invariants::{bracket, f_expansion, f_recursive};
use cyclink_bench::{random_graph, torus_diagram};

fn diagrams(c: &mut Criterion) {
    let mut group = c.benchmark_group("bracket");
    for n in [3, 7, 11, 15] {
        let d = torus_diagram(n);
        group.bench_with_input(BenchmarkId::from_parameter(d.crossing_count()), &d, |b, d| b.iter(|| bracket(black_box(d))));
    }
    group.finish();
}

fn graphs(c: &mut Criterion) {
    let mut group = c.benchmark_group("graph_polynomial");
    for e in [4, 8, 12] {
        let g = random_graph(e, 7);
        group.bench_with_input(BenchmarkId::new("expansion", e), &g, |b, g| b.iter(|| f_expansion(black_box(g))));
        group.bench_with_input(BenchmarkId::new("recursive", e), &g, |b, g| b.iter(|| f_recursive(black_box(g))));
    }
    group.finish();
}

criterion_group!(benches, diagrams, graphs);
criterion_main!(benches);
