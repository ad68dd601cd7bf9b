//! The flip graph of an odd-by-even torus always splits into exactly two
//! components of equal size, and the one-column translation is an
//! isomorphism between them.
//!
//! ```bash
//! cargo run --release --example two_component_torus
//! ```

use dominoflip::constructions::canonical_matchings;
use dominoflip::flip::{
    build_flip_graph, components, translation, verify_component_isomorphism,
};
use dominoflip::{build_grid, enumerate_perfect_matchings, Topology};

fn main() {
    for (vrows, vcols) in [(3, 4), (3, 6), (5, 4)] {
        let g = build_grid(Topology::torus(vrows, vcols).unwrap());
        let store = enumerate_perfect_matchings(&g, None);
        let flips = build_flip_graph(&g, &store).unwrap();
        let report = components(&flips);

        let (m1, m2) = canonical_matchings(&g).unwrap();
        let id1 = store.id_of(&m1).unwrap();
        let id2 = store.id_of(&m2).unwrap();
        let c1 = report.component_of[id1];
        let c2 = report.component_of[id2];

        let phi = translation(&g, 1, 0).unwrap();
        let iso = verify_component_isomorphism(&flips, &store, &report, &phi, c1, c2).unwrap();

        println!(
            "{vrows}x{vcols} torus: {} matchings -> components {:?}; \
             all-horizontal matchings sit in components {c1} and {c2}; \
             column shift is an isomorphism: {iso}",
            store.len(),
            report.sizes,
        );
    }
}
