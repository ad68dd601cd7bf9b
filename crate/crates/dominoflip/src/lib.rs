//! Domino tilings of quadriculated rectangles, cylinders and tori.
//!
//! A tiling of a quadriculated region is a perfect matching of its inner
//! dual grid graph. This crate enumerates those matchings exactly, builds
//! the flip (resonance) graph in which two tilings are adjacent when one
//! is a 90-degree rotation of a domino pair of the other, analyzes its
//! components and bipartiteness, and computes forcing numbers and forcing
//! spectra, with the torus-specific constructions (canonical horizontal
//! matchings, ladder reduction, marked-vertex forcing sets, cutting a
//! torus open into a cylinder) available as explicit operations.
//!
//! ```
//! use dominoflip::{build_grid, enumerate_perfect_matchings, Topology};
//! use dominoflip::flip::{build_flip_graph, components};
//!
//! let g = build_grid(Topology::torus(4, 4).unwrap());
//! let store = enumerate_perfect_matchings(&g, None);
//! assert_eq!(store.len(), 272);
//!
//! let flips = build_flip_graph(&g, &store).unwrap();
//! let report = components(&flips);
//! assert_eq!(report.component_count(), 17);
//! assert_eq!(report.trivial_count, 12);
//! ```
//!
//! ## Examples
//!
//! Each major capability has a runnable example:
//!
//! - **`enumerate_tilings`** — counts and ASCII-renders tilings
//! - **`flip_components`** — the 17-component census of the 4x4 torus
//! - **`two_component_torus`** — the two isomorphic halves of odd-by-even
//!   tori and the translation between them
//! - **`cylinder_connectivity`** — connected flip graphs of odd-column
//!   cylinders, with BFS flip distances
//! - **`isolated_tiling`** — the flip-free brick wall on the 4x6 cylinder
//! - **`forcing_spectrum`** — spectra with and without gaps
//! - **`marked_forcing_set`** — forcing sets of size (n+1)m from marked
//!   vertices
//! - **`ladder_reduction`** — flipping a torus tiling until a horizontal
//!   class empties, then cutting to a cylinder
//! - **`export_formats`** — JSON / DOT / CSV / ASCII exports
//! - **`verify_published_results`** — the full verification suite
//!
//! ```bash
//! cargo run --release --example flip_components
//! ```
//!
//! The thin `dominoflip` binary exposes the same operations as
//! subcommands (`enumerate`, `flipgraph`, `spectrum`, `forcing`,
//! `verify`).

pub mod bitset;
pub mod constructions;
pub mod error;
pub mod flip;
pub mod forcing;
pub mod grid;
pub mod job;
pub mod matching;
pub mod verify;

pub use error::{Error, Result};
pub use grid::{
    build_grid, paper_cylinder, paper_torus, region_to_dual, GridGraph, Kind, Topology,
};
pub use matching::{
    ascii_tiling, count_horizontal, enumerate_perfect_matchings, enumerate_with_budget,
    for_each_perfect_matching, has_unique_pm, is_elementary, verify_perfect, Budget, Matching,
    MatchingStore,
};
