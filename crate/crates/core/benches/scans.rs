use alexinv::exec::Execution;
use alexinv::laurent::LaurentPoly;
use alexinv::modules::Presentation;
use alexinv::residue::DEFAULT_BOUND;
use alexinv::scenario;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn charvar(c: &mut Criterion) {
    let sc = scenario::load("example_4_1").unwrap().unwrap();
    let mut g = c.benchmark_group("charvar_scan_example_4_1");
    g.sample_size(10);
    for level in [5u64, 7] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, level), &level, |b, &n| {
                b.iter(|| sc.charvar_scan_with(black_box(n), 1, DEFAULT_BOUND, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn support(c: &mut Criterion) {
    let p = Presentation::cyclic(3, vec![LaurentPoly::parse("t1*t2^2*t3^2 - 1", 3).unwrap()]).unwrap();
    let mut g = c.benchmark_group("support_scan_cyclic");
    g.sample_size(10);
    for level in [6u64, 12] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, level), &level, |b, &n| {
                b.iter(|| p.support_scan_with(black_box(n), exec).unwrap())
            });
        }
    }
    g.finish();
}

criterion_group!(benches, charvar, support);
criterion_main!(benches);
