use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use quasihopf::dimodule::{attach_kx_right_coaction, check_long_equation};
use quasihopf::galois::check_reconstruction;
use quasihopf::hopf::{check_associator, check_hopf_axioms};
use quasihopf::linalg::Chain;
use quasihopf::quasigroup::{enumerate_ip_loops, PropertyFilter};
use quasihopf::quasimodule::fundamental_theorem_check;
use quasihopf::smash::{build_smash, QuasimoduleHopfQuasigroup};
use quasihopf::{Field, HopfQuasigroupData};
use quasihopf_bench::{kl, kq, kx};

fn hopf_axioms(c: &mut Criterion) {
    let mut g = c.benchmark_group("hopf_axioms");
    for name in ["S3", "Q8", "moufang12"] {
        let h = kq(name);
        g.bench_function(format!("kQ {name}"), |b| b.iter(|| check_hopf_axioms(black_box(&h))));
    }
    let h = kl("moufang12");
    g.bench_function("kL moufang12", |b| b.iter(|| check_hopf_axioms(black_box(&h))));
    g.finish();
}

fn associator(c: &mut Criterion) {
    let h = kl("moufang12");
    c.bench_function("associator kL moufang12", |b| b.iter(|| check_associator(black_box(&h))));
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_ip_loops");
    g.sample_size(10);
    for n in [6, 7, 8] {
        g.bench_function(format!("order {n}"), |b| b.iter(|| enumerate_ip_loops(black_box(n), &PropertyFilter::default())));
    }
    g.finish();
}

fn galois(c: &mut Criterion) {
    let h = kq("moufang12");
    c.bench_function("antipode reconstruction kQ moufang12", |b| b.iter(|| check_reconstruction(black_box(&h))));
}

fn modules(c: &mut Criterion) {
    let m = kx("moufang12", 2);
    c.bench_function("fundamental theorem kX moufang12 s=2", |b| b.iter(|| fundamental_theorem_check(black_box(&m))));
    let d = attach_kx_right_coaction(kx("S3", 3).base()).expect("kX dimodule");
    c.bench_function("long equation kX S3 s=3", |b| b.iter(|| check_long_equation(black_box(&d))));
}

fn smash(c: &mut Criterion) {
    let host = std::sync::Arc::new(kq("S3"));
    let algebra = HopfQuasigroupData::loop_algebra(&quasihopf::quasigroup::catalog("moufang12").expect("catalog"), Field::Rational);
    let x = QuasimoduleHopfQuasigroup::trivial_action(host, algebra).expect("trivial action");
    c.bench_function("smash product kL moufang12 by kS3", |b| b.iter(|| build_smash(black_box(&x))));
}

fn tensor_chain(c: &mut Criterion) {
    let h = kq("moufang12");
    let chain = Chain::new(Field::Rational, &[1, 1, 1]).binary(0, h.mult(3, 5)).binary(0, h.mult(h.gm(3, 5), 7));
    c.bench_function("chain build", |b| b.iter(|| black_box(&chain).build()));
}

criterion_group!(benches, hopf_axioms, associator, enumeration, galois, modules, smash, tensor_chain);
criterion_main!(benches);
