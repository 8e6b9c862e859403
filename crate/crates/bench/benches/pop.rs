use criterion::{black_box, criterion_group, criterion_main, Criterion};
use poplat_core::dyck::build_j_a;
use poplat_core::lattice::{BuildOptions, PopDirection};
use poplat_core::perm::Permutation;
use poplat_core::series;
use poplat_core::tamari::{tam_b_elements, tam_b_lattice};
use poplat_core::weak::{pop_direct, weak_b_lattice};

fn lattices(c: &mut Criterion) {
    let opts = BuildOptions::default();
    c.bench_function("build Weak(B_4)", |b| b.iter(|| weak_b_lattice(black_box(4), &opts).unwrap()));
    let weak = weak_b_lattice(4, &opts).unwrap();
    c.bench_function("Pop polynomial Weak(B_4)", |b| b.iter(|| weak.pop_polynomial(PopDirection::Down)));
    c.bench_function("build Tam(B_4)", |b| b.iter(|| tam_b_lattice(black_box(4), &opts).unwrap()));
    let tam = tam_b_lattice(4, &opts).unwrap();
    c.bench_function("Pop polynomial Tam(B_4)", |b| b.iter(|| tam.pop_polynomial(PopDirection::Down)));
    c.bench_function("enumerate Tam(B_5)", |b| b.iter(|| tam_b_elements(black_box(5))));
    let j = build_j_a(8, &opts).unwrap();
    c.bench_function("Pop-up polynomial J_A(8)", |b| b.iter(|| j.pop_polynomial(PopDirection::Up)));
}

fn direct(c: &mut Criterion) {
    let p: Permutation = "5,1,7,6,3,2,8,4,10,9,12,11".parse().unwrap();
    c.bench_function("run reversal n=12", |b| b.iter(|| pop_direct(black_box(&p))));
}

fn series_solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("series");
    group.sample_size(10);
    group.bench_function("G order 12", |b| b.iter(|| series::solve_g(black_box(12)).unwrap()));
    group.bench_function("J order 12", |b| b.iter(|| series::solve_j(black_box(12)).unwrap()));
    group.finish();
}

criterion_group!(benches, lattices, direct, series_solve);
criterion_main!(benches);
