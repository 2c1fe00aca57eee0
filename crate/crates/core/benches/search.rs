use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use popkit_core::random::{simple_nonconvex_polygon, simple_polygon};
use popkit_core::{
    canonical_example, convexify_by_flips, exhaustive_family_search_with, search_pop_convexification, CanonicalKind,
    Execution, FlipMode, PocketStrategy, Polygon, Rational, SearchConfig, DEFAULT_FLIP_CAP,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn family(c: &mut Criterion) {
    let mut group = c.benchmark_group("family_search");
    group.sample_size(10);
    for k in [4usize, 5, 6] {
        let x: Vec<Rational> = (1..=k as i64).rev().map(Rational::from).collect();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, k), &x, |b, x| {
                b.iter(|| exhaustive_family_search_with(x, x, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bfs(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let hard: Vec<Polygon> = (0..4).map(|_| simple_polygon(&mut rng, 7, 30)).collect();
    let p1 = canonical_example(CanonicalKind::P1, 8).unwrap().build();

    let mut group = c.benchmark_group("bfs");
    group.sample_size(10);
    for (name, exec) in MODES {
        let config = SearchConfig::new(4).execution(exec);
        group.bench_function(BenchmarkId::new(name, "random-7gons"), |b| {
            b.iter(|| hard.iter().map(|p| search_pop_convexification(p, &config).states_explored).sum::<u64>())
        });
        let config = SearchConfig::new(16).execution(exec);
        group.bench_function(BenchmarkId::new(name, "p1-k8-sign-space"), |b| {
            b.iter(|| search_pop_convexification(&p1, &config))
        });
    }
    group.finish();
}

fn flips(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let corpus: Vec<Polygon> = (0..20).map(|_| simple_nonconvex_polygon(&mut rng, 10, 20)).collect();
    c.bench_function("flip_convexify_10gons", |b| {
        b.iter(|| {
            corpus
                .iter()
                .map(|p| convexify_by_flips(p, FlipMode::Flip, PocketStrategy::First, DEFAULT_FLIP_CAP).unwrap())
                .map(|out| out.operations())
                .sum::<usize>()
        })
    });
}

criterion_group!(benches, family, bfs, flips);
criterion_main!(benches);
