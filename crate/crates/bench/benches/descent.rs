use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use descent_core::algebra::StructureTable;
use descent_core::idempotents::orthogonal_idempotent_set;
use descent_core::quiver::ext_quiver;
use descent_core::{DescentElement, PrimeField, Rationals};

fn structure_table(c: &mut Criterion) {
    let mut g = c.benchmark_group("structure_table");
    for n in [5, 7, 8] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| StructureTable::build(n).unwrap())
        });
    }
    g.finish();
}

fn multiply(c: &mut Criterion) {
    let q = Rationals;
    let mut g = c.benchmark_group("multiply_sum_of_basis");
    for n in [6, 8] {
        let basis = DescentElement::basis(n, &q);
        let x = basis.iter().try_fold(DescentElement::zero(n, &q), |a, b| a.add(b)).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &x, |b, x| b.iter(|| x.multiply(x).unwrap()));
    }
    g.finish();
}

fn idempotents(c: &mut Criterion) {
    let f = PrimeField::new(2).unwrap();
    c.bench_function("idempotents_6_p2", |b| b.iter(|| orthogonal_idempotent_set(6, &f).unwrap()));
    c.bench_function("idempotents_6_char0", |b| {
        b.iter(|| orthogonal_idempotent_set(6, &Rationals).unwrap())
    });
}

fn quiver(c: &mut Criterion) {
    let mut g = c.benchmark_group("ext_quiver");
    g.sample_size(10);
    for p in [2, 3, 7] {
        let f = PrimeField::new(p).unwrap();
        g.bench_with_input(BenchmarkId::new("n6", p), &f, |b, f| b.iter(|| ext_quiver(6, f).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, structure_table, multiply, idempotents, quiver);
criterion_main!(benches);
