//! Timing for the hot kernels: float eigensolve, exact characteristic
//! polynomial, certified comparison, canonical form, and enumeration.

use criterion::{criterion_group, criterion_main, Criterion};
use num::rational::BigRational;
use num::FromPrimitive;

use slq_bench::{canon_instance, certify_instance, charpoly_instances, jacobi_instances};
use slq_core::{charpoly, enumerate, spectral};

fn bench_jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi");
    for (name, g) in jacobi_instances() {
        group.bench_function(name, |b| {
            b.iter(|| spectral::q_spectrum(std::hint::black_box(&g)).unwrap())
        });
    }
    group.finish();
}

fn bench_charpoly(c: &mut Criterion) {
    let mut group = c.benchmark_group("charpoly");
    for (name, g) in charpoly_instances() {
        group.bench_function(name, |b| {
            b.iter(|| charpoly::char_poly_q(std::hint::black_box(&g)).unwrap())
        });
    }
    group.finish();
}

fn bench_certify(c: &mut Criterion) {
    let g = certify_instance();
    let rhs = BigRational::from_usize(g.edge_count() + 6).unwrap();
    c.bench_function("certify/topk_leq_k3", |b| {
        b.iter(|| charpoly::certify_topk_sum_leq(std::hint::black_box(&g), 3, &rhs).unwrap())
    });
}

fn bench_canonical(c: &mut Criterion) {
    let g = canon_instance();
    c.bench_function("canonical/tstar(11,2)", |b| {
        b.iter(|| enumerate::certificate(std::hint::black_box(&g)).unwrap())
    });
}

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("enumerate/n6", |b| {
        b.iter(|| {
            let gs = enumerate::connected_graphs(std::hint::black_box(6)).unwrap();
            assert_eq!(gs.len(), 112);
            gs
        })
    });
}

criterion_group!(
    kernels,
    bench_jacobi,
    bench_charpoly,
    bench_certify,
    bench_canonical,
    bench_enumeration
);
criterion_main!(kernels);
