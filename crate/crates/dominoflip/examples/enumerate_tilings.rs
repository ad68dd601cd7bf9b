//! Enumerate all domino tilings (perfect matchings) of a few grids and
//! render one as ASCII art.
//!
//! ```bash
//! cargo run --release --example enumerate_tilings
//! ```

use dominoflip::{ascii_tiling, build_grid, enumerate_perfect_matchings, Topology};

fn main() {
    for topo in [
        Topology::rectangle(2, 2).unwrap(),
        Topology::cylinder(4, 5).unwrap(),
        Topology::torus(4, 4).unwrap(),
        Topology::torus(3, 4).unwrap(),
    ] {
        let g = build_grid(topo);
        let store = enumerate_perfect_matchings(&g, None);
        println!(
            "{} {}x{}: {} vertices, {} edges, {} faces, {} perfect matchings",
            topo.kind,
            topo.vrows,
            topo.vcols,
            g.vertex_count(),
            g.edge_count(),
            g.face_count(),
            store.len()
        );
    }

    let g = build_grid(Topology::torus(5, 8).unwrap());
    let store = enumerate_perfect_matchings(&g, Some(1));
    println!("\nfirst tiling of the 5x8 torus (>< horizontal, ^v vertical):");
    print!("{}", ascii_tiling(&g, store.get(0)).unwrap());
}
