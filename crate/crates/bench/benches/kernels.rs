use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use deligne::arith::ratio;
use deligne::diagrams::{basis, SetPartitionDiagram};
use deligne::frob::{binom_product_expand, functor_exists};
use deligne::oracle::{frobenius_gram, fun_g_algebra, invariant_simple};
use deligne::repst::{Engine, RepObject};
use deligne::{FiniteSubgroup, Partition};
use std::hint::black_box;

fn diagram_kernels(c: &mut Criterion) {
    let mut g = c.benchmark_group("diagrams");
    for n in [2usize, 3] {
        g.bench_with_input(BenchmarkId::new("basis", n), &n, |b, &n| {
            b.iter(|| basis(black_box(n), black_box(n)).len())
        });
    }
    let fp2 = basis(2, 2);
    g.bench_function("compose_fp2_pairs", |b| {
        b.iter(|| {
            let mut loops = 0;
            for x in &fp2 {
                for y in &fp2 {
                    loops += x.compose_basis(y).unwrap().0;
                }
            }
            loops
        })
    });
    let id = SetPartitionDiagram::identity(3);
    g.bench_function("tensor_dual", |b| {
        b.iter(|| black_box(&id).tensor(&id).dual())
    });
    g.finish();
}

fn repst_kernels(c: &mut Criterion) {
    let mut g = c.benchmark_group("repst");
    g.sample_size(20);
    // A fresh engine each time would still hit the character caches, so
    // these measure the stabilization loop rather than table construction.
    let engine = Engine::default();
    for m in [2usize, 4] {
        g.bench_with_input(BenchmarkId::new("power", m), &m, |b, &m| {
            b.iter(|| engine.power(m).unwrap().result)
        });
    }
    let a = RepObject::from_terms([(Partition::new(vec![2]), 1), (Partition::new(vec![1]), 1)]);
    let v = RepObject::simple(Partition::new(vec![2, 1]));
    g.bench_function("tensor", |b| {
        b.iter(|| engine.tensor(&a, &a).unwrap().result)
    });
    g.bench_function("restrict", |b| {
        b.iter(|| engine.restrict(&v, 2).unwrap().result)
    });
    g.finish();
}

fn oracle_kernels(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    let s2 = FiniteSubgroup::symmetric(2);
    g.bench_function("fun_g_algebra_n4", |b| {
        b.iter(|| fun_g_algebra(4, &s2, 1, None).unwrap().dim())
    });
    let a = fun_g_algebra(4, &s2, 1, None).unwrap();
    g.bench_function("invariant_simple_n4", |b| {
        b.iter(|| invariant_simple(&a).simple)
    });
    g.bench_function("frobenius_gram_n5", |b| {
        b.iter(|| frobenius_gram(5, &s2).unwrap().rows)
    });
    g.finish();
}

fn frob_kernels(c: &mut Criterion) {
    let mut g = c.benchmark_group("frob");
    g.bench_function("binom_expand_6_6", |b| {
        b.iter(|| binom_product_expand(black_box(6), black_box(6)))
    });
    let (src, tgt) = (ratio(-1, 8), ratio(1, 2));
    g.bench_function("functor_exists", |b| {
        b.iter(|| functor_exists(&src, &tgt).unwrap().exists)
    });
    g.finish();
}

criterion_group!(
    benches,
    diagram_kernels,
    repst_kernels,
    oracle_kernels,
    frob_kernels
);
criterion_main!(benches);
