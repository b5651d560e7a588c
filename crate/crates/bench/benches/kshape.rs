use criterion::{black_box, criterion_group, criterion_main, Criterion};
use kshape_core::verify::{dual_kschur_truncated, weak_shapes, Weighting};
use kshape_core::weak::enumerate_standard;
use kshape_core::{enumerate_paths, full_descent, weak_bijection_standard, Filling, Partition, Poset};

fn poset(c: &mut Criterion) {
    c.bench_function("poset k=3 N=7", |b| b.iter(|| Poset::build(black_box(3), black_box(7)).unwrap()));
}

fn paths(c: &mut Criterion) {
    let from: Partition = "3,1,1,1".parse().unwrap();
    let to: Partition = "4,2,1,1".parse().unwrap();
    c.bench_function("paths k=3", |b| b.iter(|| enumerate_paths(black_box(&from), black_box(&to), 3).unwrap()));
}

fn bijection(c: &mut Criterion) {
    let cores = weak_shapes(3, 6).unwrap();
    let tableaux: Vec<_> = cores.iter().flat_map(|l| enumerate_standard(l, 3).unwrap()).collect();
    c.bench_function("weak bijection k=3 n=6", |b| {
        b.iter(|| {
            for q in &tableaux {
                black_box(weak_bijection_standard(q).unwrap());
            }
        })
    });
}

fn descent(c: &mut Criterion) {
    let t: Filling = "1 2 4 6 / 3 5 / 7".parse().unwrap();
    c.bench_function("full descent n=7", |b| b.iter(|| full_descent(black_box(&t)).unwrap()));
}

fn dual_kschur(c: &mut Criterion) {
    let l = weak_shapes(3, 5).unwrap().into_iter().max_by_key(Partition::size).unwrap();
    c.bench_function(&format!("dual k-Schur k=3 {l} 4 vars"), |b| {
        b.iter(|| dual_kschur_truncated(black_box(&l), 3, 4, Weighting::Charge).unwrap())
    });
}

criterion_group!(benches, poset, paths, bijection, descent, dual_kschur);
criterion_main!(benches);
