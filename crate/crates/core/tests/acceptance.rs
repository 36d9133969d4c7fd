//! Acceptance gate: runs the full cross-check suite and prints one line per
//! criterion. Run with `cargo test --test acceptance -- --nocapture` to see
//! the lines even when everything passes.

use ellimod_core::{run_all, DEFAULT_ORBIT_BOUND};

#[test]
fn acceptance() {
    let reports = run_all(0xE11_1_40D, DEFAULT_ORBIT_BOUND);
    assert_eq!(reports.len(), 11);

    for r in &reports {
        println!(
            "criterion {:02} {:<20} {} ({} ms) {}",
            r.index,
            r.name,
            if r.passed { "PASS" } else { "FAIL" },
            r.elapsed_ms,
            r.details
        );
    }

    let budget_ms = |index: usize| -> Option<u128> {
        match index {
            1..=3 => Some(1_000),
            5 => Some(30_000),
            6 => Some(60_000),
            _ => None,
        }
    };
    for r in &reports {
        assert!(r.passed, "criterion {} ({}) failed: {}", r.index, r.name, r.details);
        if let Some(limit) = budget_ms(r.index) {
            assert!(
                r.elapsed_ms < limit,
                "criterion {} ({}) took {} ms, budget {} ms",
                r.index,
                r.name,
                r.elapsed_ms,
                limit
            );
        }
    }
}
