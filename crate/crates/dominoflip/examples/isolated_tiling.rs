//! Even-column cylinders can have tilings with no flip at all: the brick
//! wall staggers its horizontal dominoes so that no two line up on a face.
//!
//! ```bash
//! cargo run --release --example isolated_tiling
//! ```

use dominoflip::constructions::brick_wall;
use dominoflip::flip::{build_flip_graph, components, flippable_faces};
use dominoflip::{ascii_tiling, enumerate_perfect_matchings, paper_cylinder};

fn main() {
    let g = paper_cylinder(3, 6).unwrap();
    let bw = brick_wall(&g).unwrap();
    println!("brick wall on the 4x6 cylinder:");
    print!("{}", ascii_tiling(&g, &bw).unwrap());
    println!("flippable faces: {:?}", flippable_faces(&g, &bw));

    let store = enumerate_perfect_matchings(&g, None);
    let flips = build_flip_graph(&g, &store).unwrap();
    let report = components(&flips);
    let id = store.id_of(&bw).unwrap();
    println!(
        "\nC(3,6) flip graph: {} tilings, component sizes {:?}",
        store.len(),
        report.sizes
    );
    println!(
        "the brick wall is matching {id}, alone in a component of size {}",
        report.sizes[report.component_of[id] as usize],
    );
}
