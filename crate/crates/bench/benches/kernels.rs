use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use dioph_core::classforms::h_form;
use dioph_core::lehmer::{is_defective, verify_table1};
use dioph_core::search::{run_search, Arithmetic, SearchConfig};
use dioph_core::{Field, LehmerPair, RingElement};

fn ring(c: &mut Criterion) {
    let f = Field::biquadratic_e(3, 35).unwrap();
    let x = RingElement::from_halves(f, [0, 3, 5, 0]);
    let mut g = c.benchmark_group("ring_power");
    for e in [5u32, 31, 127] {
        g.bench_with_input(BenchmarkId::from_parameter(e), &e, |b, &e| {
            b.iter(|| black_box(&x).pow(e))
        });
    }
    g.finish();
}

fn lehmer(c: &mut Criterion) {
    let p = LehmerPair::new(14, 9).unwrap();
    c.bench_function("lehmer_sequence_200", |b| {
        b.iter(|| black_box(&p).sequence(200))
    });
    c.bench_function("is_defective_30", |b| {
        b.iter(|| is_defective(black_box(&p), 30).unwrap())
    });
    c.bench_function("verify_table1", |b| b.iter(verify_table1));
}

fn classnum(c: &mut Criterion) {
    let mut g = c.benchmark_group("h_form");
    for d in [-20i64, -4 * 4999, -1_000_004] {
        g.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, &d| {
            b.iter(|| h_form(d).unwrap())
        });
    }
    g.finish();
}

fn search(c: &mut Criterion) {
    let cfg = SearchConfig::main(13, 60, 20, 12).with_jobs(1);
    let mut g = c.benchmark_group("search_main");
    g.sample_size(20);
    g.bench_function("filtered", |b| b.iter(|| run_search(&cfg).unwrap()));
    g.bench_function("unfiltered", |b| {
        b.iter(|| run_search(&cfg.with_filter(false)).unwrap())
    });
    let big = SearchConfig {
        arithmetic: Arithmetic::BigOnly,
        ..cfg
    };
    g.bench_function("filtered_bigint_only", |b| {
        b.iter(|| run_search(&big).unwrap())
    });
    g.finish();
}

criterion_group!(benches, ring, lehmer, classnum, search);
criterion_main!(benches);
