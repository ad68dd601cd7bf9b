//! Run the built-in verification suite from library code (the `verify`
//! subcommand of the CLI wraps the same call).
//!
//! ```bash
//! cargo run --release --example verify_published_results
//! ```

use dominoflip::verify::{run_suite, Tier};

fn main() {
    let results = run_suite(Tier::Fast);
    let width = results.iter().map(|r| r.name.len()).max().unwrap_or(0);
    for r in &results {
        println!(
            "[{}] {:width$} ({:>5} ms)  {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.millis,
            r.details
        );
    }
    let good = results.iter().filter(|r| r.passed).count();
    println!("{good}/{} checks passed", results.len());
    std::process::exit(if good == results.len() { 0 } else { 1 });
}
