//! Acceptance criteria, one line each on stdout. Failures are reported together at the end.

use imtw_cli::verify::{self, SuiteOutcome, VerifyConfig};
use std::io::Write;
use std::time::Duration;

struct Criterion {
    id: u32,
    title: &'static str,
    suites: &'static [&'static str],
    cfg: VerifyConfig,
    limit: Option<Duration>,
}

fn cfg(max_n: usize, count: usize) -> VerifyConfig {
    VerifyConfig { seed: 42, max_n, count }
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, title: "MWIS DP equals exhaustive MWIS", suites: &["mwis"], cfg: cfg(10, 200), limit: Some(Duration::from_secs(60)) },
        Criterion { id: 2, title: "forest DP (both families) equals exhaustive", suites: &["forest"], cfg: cfg(10, 200), limit: Some(Duration::from_secs(600)) },
        Criterion { id: 3, title: "trace coverage and n^3k bound", suites: &["traces"], cfg: cfg(10, 200), limit: None },
        Criterion { id: 4, title: "signature coverage and family bound", suites: &["signatures"], cfg: cfg(8, 200), limit: None },
        Criterion { id: 5, title: "skeleton meets bags in at most 8 mu vertices", suites: &["skeleton"], cfg: cfg(10, 200), limit: None },
        Criterion { id: 6, title: "blob graph of balls equals a power", suites: &["blob-power"], cfg: cfg(12, 100), limit: None },
        Criterion { id: 7, title: "blob and odd-power width transfers", suites: &["transfers"], cfg: cfg(10, 200), limit: None },
        Criterion { id: 8, title: "packings equal exhaustive optimum", suites: &["packing"], cfg: cfg(12, 150), limit: None },
        Criterion { id: 9, title: "approximation guarantee for induced forests", suites: &["ptas"], cfg: cfg(10, 100), limit: None },
        Criterion { id: 10, title: "structured DP agreement and algebra laws", suites: &["structured"], cfg: cfg(10, 200), limit: None },
        Criterion { id: 11, title: "exact-width anchors and recognizer", suites: &["anchors"], cfg: cfg(8, 100), limit: None },
        Criterion { id: 12, title: "width inequality suite", suites: &["inequalities"], cfg: cfg(8, 100), limit: None },
        Criterion { id: 13, title: "smoke timings on complete bipartite graphs", suites: &["smoke"], cfg: cfg(8, 1), limit: None },
    ]
}

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    let out = std::io::stdout();
    for c in criteria() {
        let outcomes: Vec<SuiteOutcome> = c.suites.iter().map(|s| verify::run_suite(s, &c.cfg).expect("known suite")).collect();
        let elapsed: Duration = outcomes.iter().map(|o| o.elapsed).sum();
        let checks: u64 = outcomes.iter().map(|o| o.checks).sum();
        let in_time = c.limit.is_none_or(|l| elapsed < l);
        let pass = in_time && outcomes.iter().all(|o| o.passed);
        let mut line = format!(
            "criterion {:>2} {}: {} ({checks} checks, {:.2}s)",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.title,
            elapsed.as_secs_f64()
        );
        if !in_time {
            line += &format!(" over the {:?} limit", c.limit.unwrap_or_default());
        }
        for o in &outcomes {
            for f in o.failures.iter().take(3) {
                line += &format!("\n    {}: {f}", o.name);
            }
        }
        writeln!(out.lock(), "{line}").unwrap();
        if !pass {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
