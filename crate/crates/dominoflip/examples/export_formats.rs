//! The machine-readable exports: grid JSON, matching list JSON, flip-graph
//! DOT, component report JSON, forcing CSV and trace JSON.
//!
//! ```bash
//! cargo run --release --example export_formats
//! ```

use dominoflip::constructions::ladder_reduce;
use dominoflip::flip::{build_flip_graph, components};
use dominoflip::forcing::{forcing_results_csv, forcing_spectrum, Budget};
use dominoflip::matching::matchings_to_json;
use dominoflip::{build_grid, enumerate_perfect_matchings, paper_torus, Topology};

fn main() {
    let g = build_grid(Topology::rectangle(2, 2).unwrap());
    println!("grid JSON:\n{}\n", g.to_json());

    let store = enumerate_perfect_matchings(&g, None);
    println!("matchings JSON:\n{}\n", matchings_to_json(&store));

    let flips = build_flip_graph(&g, &store).unwrap();
    println!("flip graph DOT:\n{}", flips.to_dot());
    println!("component report JSON:\n{}\n", components(&flips).to_json());

    let report = forcing_spectrum(&g, Budget::default(), true);
    println!("spectrum JSON:\n{}\n", report.to_json(g.topology()));
    println!(
        "forcing CSV:\n{}",
        forcing_results_csv(report.per_matching.as_ref().unwrap())
    );

    let t = paper_torus(3, 4).unwrap();
    let ts = enumerate_perfect_matchings(&t, None);
    let trace = ladder_reduce(&t, ts.get(0)).unwrap();
    println!("flip trace JSON:\n{}", trace.to_json());
}
