//! Runs every acceptance criterion and prints one line per criterion.

use std::process::ExitCode;

use deligne::acceptance::{report, run_criterion, DEFAULT_SEED};

fn main() -> ExitCode {
    let mut results = Vec::new();
    for id in 1..=14 {
        let r = run_criterion(id, DEFAULT_SEED);
        println!("{}", r.line());
        results.push(r);
    }
    let summary = report(&results);
    println!("{}", summary.lines().last().unwrap_or_default());
    if results.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
