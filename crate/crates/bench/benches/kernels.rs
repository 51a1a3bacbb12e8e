//! Timings for the centre map, module normal forms, operator materialization and PBW products.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use suzuki_core::affine::{Affine, LevelForm, Mode, OpSpec};
use suzuki_core::cherednik::Cherednik;
use suzuki_core::suzuki::{theta, HModule};
use suzuki_core::Scalar;

fn bench_theta(c: &mut Criterion) {
    for (n, op) in [(2, OpSpec::T(2, 0)), (3, OpSpec::T(2, 0)), (3, OpSpec::T(3, -4))] {
        c.bench_function(&format!("theta {op} n={n}"), |b| {
            b.iter(|| {
                let h = HModule::new(n).unwrap();
                black_box(theta(&h, &op).unwrap())
            })
        });
    }
}

fn bench_h_normal_form(c: &mut Criterion) {
    let word = vec![Mode::new(0, 1, 1), Mode::new(1, 0, -2), Mode::new(0, 0, 1), Mode::new(1, 1, -1), Mode::new(1, 0, 0)];
    c.bench_function("h_normal_form n=2 len 5", |b| {
        b.iter(|| {
            let h = HModule::new(2).unwrap();
            black_box(h.h_normal_form(&word))
        })
    });
}

fn bench_materialize(c: &mut Criterion) {
    for (n, op, depth) in [(2, OpSpec::T(2, 0), 3), (3, OpSpec::T(3, -2), 2), (3, OpSpec::L(0), 3)] {
        let alg = Affine::<Scalar>::new(n, LevelForm::Critical).unwrap();
        c.bench_function(&format!("materialize {op} n={n} depth {depth}"), |b| {
            b.iter(|| black_box(alg.materialize(&op, depth).unwrap()))
        });
    }
}

fn bench_pbw(c: &mut Criterion) {
    let alg = Cherednik::at_zero(3);
    let x = alg.mul(&alg.x(1).unwrap(), &alg.x(2).unwrap().add(&alg.x(3).unwrap()));
    let y = alg.mul(&alg.y(1).unwrap(), &alg.y(3).unwrap().add(&alg.s(1, 2).unwrap()));
    let x3 = alg.pow(&x, 2);
    let y3 = alg.pow(&y, 2);
    c.bench_function("pbw product m=3 degree 8", |b| b.iter(|| black_box(alg.mul(&y3, &x3))));
}

criterion_group!(benches, bench_theta, bench_h_normal_form, bench_materialize, bench_pbw);
criterion_main!(benches);
