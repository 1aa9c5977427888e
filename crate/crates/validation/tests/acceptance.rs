//! Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
//! any fails. Every check is exact; the runtime limits (1 s for the octic
//! splitting, 5 s for the explicit cubic lift, 60 s for the corpus round trip)
//! are enforced inside the criteria.
//!
//! Free arguments select criteria by number: `cargo test -p
//! syzlift-validation -- 3 7`.

use std::process::ExitCode;

use syzlift::battery::{Battery, CRITERIA};
use syzlift::curve::DEFAULT_SEED;

fn main() -> ExitCode {
    let selected: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ids: Vec<usize> = if selected.is_empty() { (1..=CRITERIA).collect() } else { selected };
    let battery = Battery::new(DEFAULT_SEED);
    let mut failed = 0;
    let run = ids.len();
    for id in ids {
        let outcome = battery.run(id);
        println!("{outcome}");
        failed += usize::from(!outcome.passed);
    }
    println!("acceptance: {failed} of {run} criteria failed");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
