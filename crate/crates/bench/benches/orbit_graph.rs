use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use glso_core::{build_orbit_graph, enumerate_involutions, orbit_codimension_oracle, GraphOptions};

fn bench_graph_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("orbit_graph");
    for n in [3usize, 4, 5] {
        group.bench_with_input(BenchmarkId::new("fpf_sequential", n), &n, |b, &n| {
            b.iter(|| build_orbit_graph(n, true, GraphOptions::default()).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("fpf_parallel", n), &n, |b, &n| {
            b.iter(|| {
                build_orbit_graph(
                    n,
                    true,
                    GraphOptions {
                        parallel: true,
                        ..Default::default()
                    },
                )
                .unwrap()
            })
        });
    }
    group.finish();
}

fn bench_codim_oracle(c: &mut Criterion) {
    let involutions = enumerate_involutions(8, false).unwrap();
    c.bench_function("codim_oracle_2n8_all", |b| {
        b.iter(|| {
            involutions
                .iter()
                .map(orbit_codimension_oracle)
                .sum::<usize>()
        })
    });
}

criterion_group!(benches, bench_graph_build, bench_codim_oracle);
criterion_main!(benches);
