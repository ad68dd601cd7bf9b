//! Ladder reduction walks any tiling of an odd-by-even torus, by flips,
//! to one that leaves a whole horizontal edge class empty. Cutting the
//! torus along that class then gives a cylinder, whose flip graph is
//! connected — the engine behind the two-component structure.
//!
//! ```bash
//! cargo run --release --example ladder_reduction
//! ```

use dominoflip::constructions::{ladder_reduce, torus_minus_column};
use dominoflip::matching::count_horizontal;
use dominoflip::{ascii_tiling, enumerate_perfect_matchings, paper_torus, verify_perfect};

fn main() {
    let g = paper_torus(3, 4).unwrap();
    let store = enumerate_perfect_matchings(&g, None);

    // pick a tiling that occupies every horizontal class, so the trace
    // actually has to flip something
    let m = store
        .iter()
        .filter(|m| {
            (1..=4).all(|i| g.horiz_class(i).unwrap().iter().any(|&e| m.contains(e)))
        })
        .max_by_key(|m| count_horizontal(&g, m))
        .unwrap();
    println!("start ({} horizontal edges):", count_horizontal(&g, m));
    print!("{}", ascii_tiling(&g, m).unwrap());

    let trace = ladder_reduce(&g, m).unwrap();
    println!(
        "\n{} flips in {} phase(s): faces {:?}",
        trace.flips.len(),
        trace.phase_ends.len(),
        trace.flips
    );
    println!("end ({} horizontal edges):", count_horizontal(&g, &trace.end));
    print!("{}", ascii_tiling(&g, &trace.end).unwrap());

    let empty_class = (1..=4)
        .find(|&i| {
            g.horiz_class(i)
                .unwrap()
                .iter()
                .all(|&e| !trace.end.contains(e))
        })
        .expect("reduction empties a class");
    println!("\nhorizontal class {empty_class} is now empty; cutting there:");

    let cut = torus_minus_column(&g, empty_class).unwrap();
    let cm = cut.matching_to_cylinder(&trace.end).unwrap();
    println!(
        "cylinder {}x{} inherits the tiling (perfect: {})",
        cut.cylinder().topology().vrows,
        cut.cylinder().topology().vcols,
        verify_perfect(cut.cylinder(), &cm).unwrap()
    );
}
