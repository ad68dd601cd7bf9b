//! Odd-column cylinders have connected flip graphs: any tiling reaches any
//! other by flips. Also measures a few flip distances by BFS.
//!
//! ```bash
//! cargo run --release --example cylinder_connectivity
//! ```

use dominoflip::flip::{build_flip_graph, components};
use dominoflip::{enumerate_perfect_matchings, paper_cylinder};

fn main() {
    for (a, b) in [(1, 3), (1, 5), (3, 3), (3, 5), (5, 3), (5, 5)] {
        let g = paper_cylinder(a, b).unwrap();
        let store = enumerate_perfect_matchings(&g, None);
        let flips = build_flip_graph(&g, &store).unwrap();
        let report = components(&flips);
        let diameter_probe = flips.distance(0, store.len() - 1);
        println!(
            "C({a},{b}) = cylinder {}x{}: {} tilings, {} component(s), \
             distance from first to last tiling: {:?} flips",
            a + 1,
            b,
            store.len(),
            report.component_count(),
            diameter_probe
        );
    }
}
