//! Forcing spectra: the set of forcing numbers over all tilings.
//!
//! Odd-column cylinders and odd-by-even tori give gap-free intervals;
//! even-column cylinders such as C(1,10) and C(1,12) skip the value 3.
//!
//! ```bash
//! cargo run --release --example forcing_spectrum
//! ```

use dominoflip::forcing::{forcing_spectrum, Budget};
use dominoflip::{paper_cylinder, paper_torus, GridGraph};

fn main() {
    let cases: Vec<(String, GridGraph)> = vec![
        ("C(1,10)".into(), paper_cylinder(1, 10).unwrap()),
        ("C(1,12)".into(), paper_cylinder(1, 12).unwrap()),
        ("C(3,3)".into(), paper_cylinder(3, 3).unwrap()),
        ("C(3,5)".into(), paper_cylinder(3, 5).unwrap()),
        ("T(3,4)".into(), paper_torus(3, 4).unwrap()),
        ("T(3,6)".into(), paper_torus(3, 6).unwrap()),
    ];
    for (label, g) in cases {
        let report = forcing_spectrum(&g, Budget::default(), false);
        println!(
            "{label}: {} tilings, Spec = {:?}, min {}, max {}, continuous: {}{}",
            report.matchings_seen,
            report.spectrum,
            report.min_forcing,
            report.max_forcing,
            report.continuous,
            if report.gaps.is_empty() {
                String::new()
            } else {
                format!(", gaps {:?}", report.gaps)
            }
        );
    }
}
