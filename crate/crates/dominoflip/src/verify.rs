//! Built-in verification suite.
//!
//! Re-derives the published counts, component structures, spectra and
//! forcing values for the small cylinder and torus instances, plus the
//! structural checks (bipartiteness, flip-Lipschitz, marked forcing sets,
//! ladder reduction, enumerator-vs-oracle equivalence). The fast tier
//! finishes in seconds; the extended tier adds the 537,636-matching sweep
//! of the 4 x 10 torus.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::constructions::{brick_wall, canonical_matchings, ladder_reduce, marked_forcing_set};
use crate::flip::{
    build_flip_graph, components, flippable_faces, translation, verify_component_isomorphism,
    ComponentReport, FlipGraph,
};
use crate::forcing::{
    flip_lipschitz_check, forcing_spectrum, is_forcing_set, Budget, SpectrumReport,
};
use crate::grid::{build_grid, paper_cylinder, paper_torus, GridGraph, Topology};
use crate::matching::{count_horizontal, enumerate_perfect_matchings, MatchingStore};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Fast,
    Extended,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub details: String,
    #[serde(skip)]
    pub millis: u128,
}

fn check(name: &str, body: impl FnOnce() -> (bool, String)) -> CheckResult {
    let start = Instant::now();
    let (passed, details) = body();
    CheckResult {
        name: name.to_string(),
        passed,
        details,
        millis: start.elapsed().as_millis(),
    }
}

struct Built {
    graph: GridGraph,
    store: MatchingStore,
    flips: FlipGraph,
    report: ComponentReport,
}

fn build_all(topo: Topology) -> Built {
    let graph = build_grid(topo);
    let store = enumerate_perfect_matchings(&graph, None);
    let flips = build_flip_graph(&graph, &store).expect("complete store");
    let report = components(&flips);
    Built {
        graph,
        store,
        flips,
        report,
    }
}

fn torus_census() -> (bool, String) {
    let b = build_all(Topology::torus(4, 4).unwrap());
    let want_sizes: Vec<usize> = [vec![132, 32, 32, 32, 32], vec![1; 12]].concat();
    let ok = b.store.len() == 272
        && b.report.sizes == want_sizes
        && b.report.trivial_count == 12
        && b.report.component_count() == 17;
    (
        ok,
        format!(
            "4x4 torus: {} matchings, {} components, sizes {:?}, {} trivial",
            b.store.len(),
            b.report.component_count(),
            &b.report.sizes[..b.report.sizes.len().min(5)],
            b.report.trivial_count
        ),
    )
}

fn two_components() -> (bool, String) {
    let mut ok = true;
    let mut details = String::new();
    for (r, c) in [(3, 4), (3, 6), (5, 4)] {
        let b = build_all(Topology::torus(r, c).unwrap());
        let (m1, m2) = canonical_matchings(&b.graph).unwrap();
        let id1 = b.store.id_of(&m1).unwrap();
        let id2 = b.store.id_of(&m2).unwrap();
        let c1 = b.report.component_of[id1];
        let c2 = b.report.component_of[id2];
        let phi = translation(&b.graph, 1, 0).unwrap();
        let iso =
            verify_component_isomorphism(&b.flips, &b.store, &b.report, &phi, c1, c2).unwrap();
        let this = b.report.component_count() == 2
            && b.report.sizes[0] == b.report.sizes[1]
            && c1 != c2
            && iso;
        ok &= this;
        let _ = write!(
            details,
            "{r}x{c}: components {:?} split {}/{} iso {}; ",
            b.report.sizes, c1, c2, iso
        );
    }
    (ok, details)
}

fn cylinder_connectivity() -> (bool, String) {
    let mut ok = true;
    let mut details = String::new();
    for (a, b) in [(1, 3), (1, 5), (3, 3), (3, 5), (5, 3)] {
        let g = paper_cylinder(a, b).unwrap();
        let store = enumerate_perfect_matchings(&g, None);
        let flips = build_flip_graph(&g, &store).unwrap();
        let report = components(&flips);
        ok &= report.component_count() == 1;
        let _ = write!(
            details,
            "C({a},{b}): {} matchings in {} component(s); ",
            store.len(),
            report.component_count()
        );
    }
    (ok, details)
}

fn isolated_tiling() -> (bool, String) {
    let g = paper_cylinder(3, 6).unwrap();
    let store = enumerate_perfect_matchings(&g, None);
    let flips = build_flip_graph(&g, &store).unwrap();
    let report = components(&flips);
    let bw = brick_wall(&g).unwrap();
    let no_flips = flippable_faces(&g, &bw).is_empty();
    let bw_id = store.id_of(&bw).unwrap();
    let bw_trivial = report.sizes[report.component_of[bw_id] as usize] == 1;
    let ok = report.trivial_count >= 1 && no_flips && bw_trivial;
    (
        ok,
        format!(
            "C(3,6): {} trivial component(s), brick wall flips = {}",
            report.trivial_count,
            flippable_faces(&g, &bw).len()
        ),
    )
}

fn bipartiteness() -> (bool, String) {
    let mut ok = true;
    let mut details = String::new();
    for (r, c) in [(4usize, 4usize), (3, 4), (3, 6), (5, 4)] {
        let b = build_all(Topology::torus(r, c).unwrap());
        ok &= b.report.bipartite;
        let _ = write!(details, "T {r}x{c}: {}; ", b.report.bipartite);
    }
    for (a, b) in [(1, 3), (1, 5), (3, 3), (3, 5), (5, 3), (3, 6)] {
        let g = paper_cylinder(a, b).unwrap();
        let store = enumerate_perfect_matchings(&g, None);
        let flips = build_flip_graph(&g, &store).unwrap();
        let bip = components(&flips).bipartite;
        ok &= bip;
        let _ = write!(details, "C({a},{b}): {bip}; ");
    }
    (ok, details)
}

fn spectra_with_gap() -> (bool, String) {
    let s10 = forcing_spectrum(&paper_cylinder(1, 10).unwrap(), Budget::default(), false);
    let s12 = forcing_spectrum(&paper_cylinder(1, 12).unwrap(), Budget::default(), false);
    let ok = s10.spectrum == vec![2, 4, 5]
        && s10.gaps == vec![3]
        && s12.spectrum == vec![2, 4, 5, 6]
        && s12.gaps == vec![3];
    (
        ok,
        format!(
            "Spec C(1,10) = {:?} gaps {:?}; Spec C(1,12) = {:?} gaps {:?}",
            s10.spectrum, s10.gaps, s12.spectrum, s12.gaps
        ),
    )
}

fn minimum_forcing() -> (bool, String) {
    let cases = [
        ((1usize, 5usize), 2usize),
        ((1, 7), 3),
        ((1, 9), 3),
        ((3, 3), 2),
        ((3, 5), 2),
        ((5, 5), 3),
    ];
    let mut ok = true;
    let mut details = String::new();
    for ((a, b), want) in cases {
        let g = paper_cylinder(a, b).unwrap();
        let report = forcing_spectrum(&g, Budget::default(), false);
        ok &= report.min_forcing == want;
        let _ = write!(details, "f(C({a},{b})) = {} (want {want}); ", report.min_forcing);
    }
    (ok, details)
}

fn spectrum_of(topo_kind: &str, a: usize, b: usize) -> SpectrumReport {
    let g = match topo_kind {
        "T" => paper_torus(a, b).unwrap(),
        _ => paper_cylinder(a, b).unwrap(),
    };
    forcing_spectrum(&g, Budget::default(), false)
}

fn maximum_forcing() -> (bool, String) {
    let cases = [("T", 3, 4, 4usize), ("T", 3, 6, 6), ("C", 3, 5, 6), ("C", 3, 3, 4)];
    let mut ok = true;
    let mut details = String::new();
    for (k, a, b, want) in cases {
        let report = spectrum_of(k, a, b);
        ok &= report.max_forcing == want;
        let _ = write!(details, "F({k}({a},{b})) = {} (want {want}); ", report.max_forcing);
    }
    (ok, details)
}

fn spectrum_continuity() -> (bool, String) {
    let cases = [("T", 3, 4), ("T", 3, 6), ("C", 3, 5), ("C", 3, 3)];
    let mut ok = true;
    let mut details = String::new();
    for (k, a, b) in cases {
        let report = spectrum_of(k, a, b);
        ok &= report.continuous;
        let _ = write!(details, "Spec {k}({a},{b}) = {:?} continuous {}; ", report.spectrum, report.continuous);
    }
    (ok, details)
}

fn lipschitz() -> (bool, String) {
    let mut ok = true;
    let mut details = String::new();
    for (g, label) in [
        (paper_torus(3, 4).unwrap(), "T(3,4)"),
        (paper_cylinder(3, 5).unwrap(), "C(3,5)"),
    ] {
        let store = enumerate_perfect_matchings(&g, None);
        let flips = build_flip_graph(&g, &store).unwrap();
        let report = forcing_spectrum(&g, Budget::default(), true);
        let by_id: Vec<usize> = report
            .per_matching
            .as_ref()
            .unwrap()
            .iter()
            .map(|r| r.forcing_number)
            .collect();
        let this = flip_lipschitz_check(&flips, &by_id);
        ok &= this;
        let _ = write!(details, "{label}: every flip changes f by <= 1: {this}; ");
    }
    (ok, details)
}

fn marked_sets() -> (bool, String) {
    let mut ok = true;
    let mut details = String::new();
    for (a, b, want) in [(3usize, 4usize, 4usize), (3, 6, 6)] {
        let g = paper_torus(a, b).unwrap();
        let store = enumerate_perfect_matchings(&g, None);
        let mut all = true;
        for m in store.iter() {
            let (_, s) = marked_forcing_set(&g, m).unwrap();
            all &= s.len() == want && is_forcing_set(&g, m, &s).unwrap();
        }
        ok &= all;
        let _ = write!(
            details,
            "T({a},{b}): marked forcing set of size {want} valid on all {} matchings: {all}; ",
            store.len()
        );
    }
    (ok, details)
}

fn ladder_reduction() -> (bool, String) {
    let g = paper_torus(3, 4).unwrap();
    let store = enumerate_perfect_matchings(&g, None);
    let mut all = true;
    for m in store.iter() {
        let trace = match ladder_reduce(&g, m) {
            Ok(t) => t,
            Err(_) => {
                all = false;
                continue;
            }
        };
        let replayed = trace.replay(&g);
        let legal = matches!(replayed, Ok(ref end) if *end == trace.end);
        let cleared = (1..=4).any(|i| {
            g.horiz_class(i)
                .unwrap()
                .iter()
                .all(|&e| !trace.end.contains(e))
        });
        let drop_per_phase = {
            let start_count = count_horizontal(&g, m);
            let end_count = count_horizontal(&g, &trace.end);
            start_count == end_count + 2 * trace.phase_ends.len()
        };
        all &= legal && cleared && drop_per_phase;
    }
    (
        all,
        format!(
            "every matching of T(3,4) reduces by legal flips to an empty class ({} matchings)",
            store.len()
        ),
    )
}

fn extended_torus_spectrum() -> (bool, String) {
    let g = paper_torus(4, 10).unwrap();
    let report = forcing_spectrum(&g, Budget::default(), false);
    let ok = report.matchings_seen == 537_636
        && report.spectrum == vec![4, 6, 7, 8, 9, 10]
        && report.gaps == vec![5]
        && report.min_forcing == 4
        && report.max_forcing == 10;
    (
        ok,
        format!(
            "T(4,10): {} matchings, Spec {:?}, gaps {:?}",
            report.matchings_seen, report.spectrum, report.gaps
        ),
    )
}

/// Set-based reference enumerator, deliberately independent of the
/// bit-packed engine: plain vectors, no fingerprints, no parallelism.
fn naive_matchings(g: &GridGraph) -> BTreeSet<Vec<usize>> {
    fn rec(g: &GridGraph, covered: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        let v = match covered.iter().position(|&c| !c) {
            None => {
                let mut m = cur.clone();
                m.sort_unstable();
                out.insert(m);
                return;
            }
            Some(v) => v,
        };
        for &e in g.incident_edges(v) {
            let o = g.edge(e).other(v);
            if !covered[o] {
                covered[v] = true;
                covered[o] = true;
                cur.push(e);
                rec(g, covered, cur, out);
                cur.pop();
                covered[v] = false;
                covered[o] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    rec(
        g,
        &mut vec![false; g.vertex_count()],
        &mut Vec::new(),
        &mut out,
    );
    out
}

fn oracle_equivalence() -> (bool, String) {
    let instances: Vec<(String, GridGraph)> = vec![
        ("T(3,4)".into(), paper_torus(3, 4).unwrap()),
        ("T(3,6)".into(), paper_torus(3, 6).unwrap()),
        ("T(5,4)".into(), paper_torus(5, 4).unwrap()),
        ("T(4,4)".into(), build_grid(Topology::torus(4, 4).unwrap())),
        ("C(1,3)".into(), paper_cylinder(1, 3).unwrap()),
        ("C(1,5)".into(), paper_cylinder(1, 5).unwrap()),
        ("C(1,7)".into(), paper_cylinder(1, 7).unwrap()),
        ("C(1,9)".into(), paper_cylinder(1, 9).unwrap()),
        ("C(1,10)".into(), paper_cylinder(1, 10).unwrap()),
        ("C(1,12)".into(), paper_cylinder(1, 12).unwrap()),
        ("C(3,3)".into(), paper_cylinder(3, 3).unwrap()),
        ("C(3,5)".into(), paper_cylinder(3, 5).unwrap()),
        ("C(3,6)".into(), paper_cylinder(3, 6).unwrap()),
        ("C(5,3)".into(), paper_cylinder(5, 3).unwrap()),
        ("C(5,5)".into(), paper_cylinder(5, 5).unwrap()),
    ];
    let mut ok = true;
    let mut details = String::new();
    for (label, g) in instances {
        let store = enumerate_perfect_matchings(&g, None);
        if store.len() > 5000 {
            continue;
        }
        let fast: BTreeSet<Vec<usize>> = store.iter().map(|m| m.edges()).collect();
        let naive = naive_matchings(&g);
        let same = fast == naive && fast.len() == store.len();
        ok &= same;
        let _ = write!(details, "{label}: {} = {}; ", store.len(), naive.len());
    }
    (ok, details)
}

/// Runs the verification suite. Every check re-derives its target from
/// scratch; nothing is cached between checks.
pub fn run_suite(tier: Tier) -> Vec<CheckResult> {
    let mut out = vec![
        check("torus-4x4-census", torus_census),
        check("odd-torus-two-components", two_components),
        check("odd-cylinder-connected", cylinder_connectivity),
        check("even-cylinder-isolated-tiling", isolated_tiling),
        check("flip-graphs-bipartite", bipartiteness),
        check("even-cylinder-spectrum-gaps", spectra_with_gap),
        check("minimum-forcing-values", minimum_forcing),
        check("maximum-forcing-values", maximum_forcing),
        check("odd-spectra-continuous", spectrum_continuity),
        check("flip-lipschitz", lipschitz),
        check("marked-forcing-sets", marked_sets),
        check("ladder-reduction", ladder_reduction),
        check("enumerator-matches-oracle", oracle_equivalence),
    ];
    if tier == Tier::Extended {
        out.push(check("extended-torus-4x10-spectrum", extended_torus_spectrum));
    }
    out
}

pub fn suite_to_json(results: &[CheckResult], tier: Tier) -> serde_json::Value {
    serde_json::json!({
        "schema": "v1",
        "tier": tier,
        "passed": results.iter().all(|r| r.passed),
        "checks": results.iter().map(|r| serde_json::json!({
            "name": r.name,
            "passed": r.passed,
            "details": r.details,
        })).collect::<Vec<_>>(),
    })
}
