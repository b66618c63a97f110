use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use codecalc_core::verify::{self, Bounds, Suite};
use codecalc_core::Execution;

type Sweep = fn(&Bounds, Execution) -> verify::VerifyReport;

fn modes(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    let cases: [(&str, Suite, Sweep); 4] = [
        ("straighten", Suite::Codes, verify::straightening_agreement),
        ("series", Suite::Bernstein, verify::series_action),
        ("y-straighten", Suite::Qvertex, verify::y_straightening),
        ("bialternant", Suite::Oracle, verify::bialternant_law),
    ];
    for (name, suite, sweep) in cases {
        let bounds = Bounds::for_suite(suite);
        for execution in [Execution::Sequential, Execution::Parallel] {
            group.bench_with_input(BenchmarkId::new(name, format!("{execution:?}")), &bounds, |b, bounds| {
                b.iter(|| {
                    let report = sweep(bounds, execution);
                    assert!(report.passed());
                    report.cases
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, modes);
criterion_main!(benches);
