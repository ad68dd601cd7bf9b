//! Build the flip graph of the 4x4 torus and break it into components.
//!
//! The 272 tilings fall into 17 flip classes: one of 132, four of 32, and
//! twelve isolated tilings that admit no flip at all.
//!
//! ```bash
//! cargo run --release --example flip_components
//! ```

use dominoflip::flip::{build_flip_graph, components};
use dominoflip::{build_grid, enumerate_perfect_matchings, Topology};

fn main() {
    let g = build_grid(Topology::torus(4, 4).unwrap());
    let store = enumerate_perfect_matchings(&g, None);
    let flips = build_flip_graph(&g, &store).unwrap();
    let report = components(&flips);

    println!(
        "4x4 torus: {} matchings, {} flip edges",
        store.len(),
        flips.edge_count()
    );
    println!(
        "{} components (sizes {:?}), {} trivial, bipartite: {}",
        report.component_count(),
        report.sizes,
        report.trivial_count,
        report.bipartite
    );

    for (rank, &size) in report.sizes.iter().enumerate() {
        if size == 1 {
            let id = report.members(rank as u32)[0];
            println!("isolated tiling {id}: edges {:?}", store.get(id).edges());
        }
    }
}
