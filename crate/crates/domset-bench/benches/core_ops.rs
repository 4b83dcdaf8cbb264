use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use domset::{filter, fitness, greedy_mds, repair, CandidateSolution, LevyParams};
use domset_bench::geometric_instance;

fn random_solution(n: usize, density: f64, seed: u64) -> CandidateSolution {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = CandidateSolution::zeros(n);
    for i in 0..n {
        if rng.gen_range(0.0..1.0) < density {
            s.set(i, true);
        }
    }
    s
}

fn bench_fitness(c: &mut Criterion) {
    let mut group = c.benchmark_group("fitness");
    for n in [100usize, 400] {
        let g = geometric_instance(n, 1);
        let s = random_solution(n, 0.2, 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| fitness(black_box(&g), black_box(&s)).unwrap())
        });
    }
    group.finish();
}

fn bench_filter_repair(c: &mut Criterion) {
    let mut group = c.benchmark_group("intensification");
    for n in [100usize, 400] {
        let g = geometric_instance(n, 1);
        let dense = random_solution(n, 0.5, 3);
        group.bench_with_input(BenchmarkId::new("filter", n), &n, |b, _| {
            b.iter(|| filter(black_box(&g), black_box(&dense)).unwrap())
        });
        let sparse = random_solution(n, 0.05, 4);
        group.bench_with_input(BenchmarkId::new("repair", n), &n, |b, _| {
            b.iter(|| repair(black_box(&g), black_box(&sparse)).unwrap())
        });
    }
    group.finish();
}

fn bench_levy(c: &mut Criterion) {
    let g = geometric_instance(200, 1);
    let s = greedy_mds(&g);
    let p = LevyParams::default();
    c.bench_function("levy_perturb/200", |b| {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        b.iter(|| domset::levy_perturb(black_box(&g), black_box(&s), &p, &mut rng).unwrap())
    });
}

criterion_group!(benches, bench_fitness, bench_filter_repair, bench_levy);
criterion_main!(benches);
