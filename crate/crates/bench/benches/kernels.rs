//! Criterion benchmarks for the hot kernels: the matching oracle, the
//! log-space slit products, exact bar counts, and the equilibrium solver.

use aztec_gaps::asym::logspace::ln_p_slit;
use aztec_gaps::equilibrium::find_equilibrium;
use aztec_gaps::forms::bars::{bars_count, BarConfig};
use aztec_gaps::forms::count::count_exact;
use aztec_gaps::lattice::DefectConfig;
use aztec_gaps::oracle::count_config;
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn bench_oracle(c: &mut Criterion) {
    let ad6 = DefectConfig::diamond(3);
    c.bench_function("oracle/AD_6", |b| {
        b.iter(|| count_config(black_box(&ad6)).unwrap())
    });
    let ad8 = DefectConfig::diamond(4);
    c.bench_function("oracle/AD_8", |b| {
        b.iter(|| count_config(black_box(&ad8)).unwrap())
    });
    let defects = DefectConfig::new(3, vec![1, 4], vec![2, 6]).unwrap();
    c.bench_function("oracle/AD_6_defects", |b| {
        b.iter(|| count_config(black_box(&defects)).unwrap())
    });
}

fn bench_closed_forms(c: &mut Criterion) {
    let cfg = DefectConfig::new(6, vec![3, 7, 11], vec![]).unwrap();
    c.bench_function("count_exact/move_chain_k3", |b| {
        b.iter(|| count_exact(black_box(&cfg)).unwrap())
    });
    let bar = BarConfig::new(40, 10, 10, 10, 10).unwrap();
    c.bench_function("bars_count/n40", |b| b.iter(|| bars_count(black_box(&bar)).unwrap()));
}

fn bench_logspace(c: &mut Criterion) {
    c.bench_function("ln_p_slit/3000", |b| b.iter(|| ln_p_slit(black_box(3000))));
}

fn bench_equilibrium(c: &mut Criterion) {
    c.bench_function("equilibrium/two_bars", |b| {
        b.iter(|| find_equilibrium(black_box(&[0.25, 0.25])).unwrap())
    });
}

criterion_group!(benches, bench_oracle, bench_closed_forms, bench_logspace, bench_equilibrium);
criterion_main!(benches);
