use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use eliminant::{discriminant, resultant, Algorithm, ResultantOptions};
use eliminant_bench::{classic, dense_ternary, fermat_sextic};

fn algorithms(c: &mut Criterion) {
    let mut group = c.benchmark_group("classic");
    let sys = classic();
    for algorithm in [Algorithm::Poisson, Algorithm::Macaulay] {
        let opts = ResultantOptions::with_algorithm(algorithm);
        group.bench_function(algorithm.name(), |b| b.iter(|| resultant(&sys, &opts).unwrap()));
    }
    group.finish();

    let mut group = c.benchmark_group("dense_ternary");
    group.sample_size(10);
    for d in [2, 3, 4] {
        let sys = dense_ternary(d);
        for algorithm in [Algorithm::Poisson, Algorithm::Macaulay] {
            let opts = ResultantOptions::with_algorithm(algorithm);
            group.bench_with_input(BenchmarkId::new(algorithm.name(), d), &sys, |b, s| {
                b.iter(|| resultant(s, &opts).unwrap())
            });
        }
    }
    group.finish();
}

fn sextic(c: &mut Criterion) {
    let f = fermat_sextic();
    let opts = ResultantOptions::with_algorithm(Algorithm::Poisson);
    c.bench_function("fermat_sextic_discriminant", |b| b.iter(|| discriminant(&f, None, &opts).unwrap()));
}

criterion_group!(benches, algorithms, sextic);
criterion_main!(benches);
