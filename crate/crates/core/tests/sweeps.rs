use codecalc_core::verify::{run_suite, Bounds, Suite};
use codecalc_core::Execution;

fn full(suite: Suite) {
    let report = run_suite(suite, &Bounds::for_suite(suite), Execution::Parallel);
    let shown = &report.failures[..report.failures.len().min(5)];
    assert!(report.passed(), "{report}\n{shown:#?}");
    println!("{report}");
}

#[test]
fn codes_at_default_bounds() {
    full(Suite::Codes);
}

#[test]
fn bernstein_at_default_bounds() {
    full(Suite::Bernstein);
}

#[test]
fn qvertex_at_default_bounds() {
    full(Suite::Qvertex);
}

#[test]
fn shifted_at_default_bounds() {
    full(Suite::Shifted);
}

#[test]
fn oracle_at_default_bounds() {
    full(Suite::Oracle);
}
