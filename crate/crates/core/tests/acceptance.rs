//! Runs the full verification suite, prints one line per criterion and
//! checks that exactly the documented criteria fail.

use std::io::Write;

use verlie::verify::{run_all, KNOWN_FAILURES};

#[test]
fn acceptance() {
    let outcomes = run_all();
    // Written to stderr directly so the lines survive output capture.
    let mut err = std::io::stderr().lock();
    for o in &outcomes {
        writeln!(err, "{}", o.line()).unwrap();
    }
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    assert_eq!(outcomes.len(), 14);
    assert_eq!(failed, KNOWN_FAILURES.to_vec(), "unexpected set of failing criteria");
}
