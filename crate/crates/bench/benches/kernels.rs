use criterion::{black_box, criterion_group, criterion_main, Criterion};
use qset_bench::dense_vector;
use qset_core::fock::inner;
use qset_core::lattice::fixtures::{odd13, p9, three_block};
use qset_core::lattice::{
    center, chain2, exists_global_valuation, from_greechie, greechie_valuation_fast, product,
};
use qset_core::modal::{identity_extension, mks_verify};
use qset_core::oracle::compare_all;
use qset_core::Statistics;

fn fock(c: &mut Criterion) {
    for stats in [Statistics::Boson, Statistics::Fermion] {
        let u = dense_vector(4, 5, stats);
        let v = dense_vector(4, 5, stats);
        c.bench_function(&format!("inner/{stats}/4x5"), |b| {
            b.iter(|| inner(black_box(&u), black_box(&v), stats).unwrap())
        });
        c.bench_function(&format!("compare_all/{stats}/3x3"), |b| {
            b.iter(|| compare_all(black_box(3), black_box(3), stats))
        });
    }
}

fn lattice(c: &mut Criterion) {
    let g = odd13();
    c.bench_function("from_greechie/three-block", |b| {
        b.iter(|| from_greechie(black_box(&three_block())).unwrap())
    });
    let l = from_greechie(&g).unwrap();
    c.bench_function("center/odd13", |b| b.iter(|| center(black_box(&l))));
    c.bench_function("valuation/odd13", |b| {
        b.iter(|| exists_global_valuation(black_box(&l)))
    });
    let p = p9();
    c.bench_function("valuation_fast/p9", |b| {
        b.iter(|| greechie_valuation_fast(black_box(&p)).unwrap())
    });
    let prod = product(&chain2(), &from_greechie(&three_block()).unwrap()).unwrap();
    let ext = identity_extension(&prod).unwrap();
    c.bench_function("mks/chain2x3block", |b| {
        b.iter(|| mks_verify(black_box(&ext)))
    });
}

criterion_group!(benches, fock, lattice);
criterion_main!(benches);
