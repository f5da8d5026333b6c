use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPoolBuilder;

use qtan_core::cfrac::{convergent, tangent_expansion, verify_identity};
use qtan_core::qseries::bracket_simplification_check;

fn pools() -> Vec<(String, rayon::ThreadPool)> {
    let default = ThreadPoolBuilder::new().build().unwrap();
    let single = ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    vec![
        ("default".to_string(), default),
        ("single".to_string(), single),
    ]
}

fn bench_expand(c: &mut Criterion) {
    let mut g = c.benchmark_group("expand");
    g.sample_size(10);
    for (name, pool) in pools() {
        for depth in [6usize, 12] {
            g.bench_with_input(BenchmarkId::new(&name, depth), &depth, |b, &d| {
                b.iter(|| pool.install(|| tangent_expansion(black_box(d), d + 4).unwrap()))
            });
        }
    }
    g.finish();
}

fn bench_verify(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify_identity");
    g.sample_size(10);
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::new(&name, "12x16"), |b| {
            b.iter(|| pool.install(|| verify_identity(black_box(12), 16).unwrap()))
        });
    }
    g.finish();
}

fn bench_convergent(c: &mut Criterion) {
    let exp = tangent_expansion(10, 11).unwrap();
    let mut g = c.benchmark_group("convergent");
    g.sample_size(10);
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::new(&name, "10x14"), |b| {
            b.iter(|| pool.install(|| convergent(exp.partials(), 10, black_box(14)).unwrap()))
        });
    }
    g.finish();
}

fn bench_brackets(c: &mut Criterion) {
    let mut g = c.benchmark_group("bracket_grid");
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::new(&name, "13x13"), |b| {
            b.iter(|| {
                pool.install(|| {
                    (0..=12).all(|i| (0..=12).all(|n| bracket_simplification_check(i, n).unwrap()))
                })
            })
        });
    }
    g.finish();
}

criterion_group!(benches, bench_expand, bench_verify, bench_convergent, bench_brackets);
criterion_main!(benches);
