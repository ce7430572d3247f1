use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use specht_bench::{disconnected, lr_pairs, parse};
use specht_core::classify::build_witness;
use specht_core::fock::canonical_basis;
use specht_core::lr::lr_support;
use specht_core::{FockVector, LadderWord};

fn llt(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_basis");
    group.sample_size(10);
    for n in [10, 14, 16] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| canonical_basis(n).unwrap())
        });
    }
    group.finish();
}

fn witnesses(c: &mut Criterion) {
    let inputs = disconnected(14);
    c.bench_function("build_witness/n=14", |b| {
        b.iter(|| {
            inputs
                .iter()
                .map(|l| build_witness(l).unwrap().steps.len())
                .sum::<usize>()
        })
    });
}

fn littlewood_richardson(c: &mut Criterion) {
    let pairs = lr_pairs();
    c.bench_function("lr_support", |b| {
        b.iter(|| {
            pairs
                .iter()
                .map(|(l, r)| lr_support(l, r).len())
                .sum::<usize>()
        })
    });
}

fn fock_word(c: &mut Criterion) {
    let word: LadderWord = "1:4,0:3,1:2".parse().unwrap();
    let base = FockVector::basis(parse("7,6,3,2,1"));
    c.bench_function("fock_apply/1:4,0:3,1:2", |b| {
        b.iter(|| word.apply(&base).len())
    });
}

criterion_group!(benches, llt, witnesses, littlewood_richardson, fock_word);
criterion_main!(benches);
