use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use exactcolor::corpus::{random_formulas, DEFAULT_SEED};
use exactcolor::verify::{composite_chi_via, ChiMode};
use exactcolor::{
    canonical_chain, chromatic_number, maximum_clique, sigma, wagner_combine, CnfFormula,
    SatConfig, SolverConfig,
};

fn sigma_graphs(c: &mut Criterion) {
    let cfg = SolverConfig::default();
    let mut group = c.benchmark_group("chi/sigma");
    for (name, phi) in [
        ("canonical-sat", CnfFormula::canonical_satisfiable()),
        ("canonical-unsat", CnfFormula::canonical_unsatisfiable()),
    ] {
        let g = sigma(&phi);
        group.bench_function(name, |b| b.iter(|| chromatic_number(black_box(&g), &cfg)));
    }
    let corpus: Vec<_> = random_formulas(DEFAULT_SEED, 20)
        .iter()
        .map(sigma)
        .collect();
    group.bench_function("random-20", |b| {
        b.iter(|| {
            for g in &corpus {
                chromatic_number(black_box(g), &cfg).unwrap();
            }
        })
    });
    group.finish();
}

fn combined(c: &mut Criterion) {
    let cfg = SolverConfig::default();
    let mut group = c.benchmark_group("chi/combined");
    group.sample_size(10);
    for k in 1..=2 {
        for t in 0..=2 * k {
            let combo =
                wagner_combine(&canonical_chain(k, t).unwrap(), &SatConfig::default()).unwrap();
            for mode in [ChiMode::Compositional, ChiMode::Monolithic] {
                let id = BenchmarkId::new(format!("k{k}-{}", mode.name()), t);
                group.bench_with_input(id, &combo, |b, combo| {
                    b.iter(|| composite_chi_via(black_box(combo), mode, &cfg).unwrap())
                });
            }
        }
    }
    group.finish();
}

fn clique(c: &mut Criterion) {
    let g = wagner_combine(&canonical_chain(2, 0).unwrap(), &SatConfig::default())
        .unwrap()
        .flatten();
    c.bench_function("maximum_clique/k2-t0", |b| {
        b.iter(|| maximum_clique(black_box(&g)))
    });
}

criterion_group!(benches, sigma_graphs, combined, clique);
criterion_main!(benches);
