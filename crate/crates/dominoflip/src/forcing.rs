//! Forcing numbers and forcing spectra.
//!
//! A forcing set of a perfect matching M is a subset contained in no other
//! perfect matching; equivalently, deleting its end vertices leaves a graph
//! in which the rest of M is the unique perfect matching. The forcing
//! number is the minimum size of such a set.
//!
//! `forcing_number` runs an exact branch-and-bound over M-alternating
//! cycles: if the current candidate set S leaves an alternating cycle
//! untouched, every forcing superset of S must pick one of that cycle's
//! matching edges, so the search branches on exactly those edges. Square
//! faces are tried before general cycles to keep the branching factor at
//! two. The bound from pairwise vertex-disjoint alternating squares prunes
//! the search and is exposed for verification.

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::flip::FlipGraph;
use crate::grid::{EdgeId, GridGraph};
use crate::matching::{
    count_matchings_limited, enumerate_with_budget, verify_perfect, visit_matchings, Matching,
};

pub use crate::matching::Budget;

/// Forcing number of one matching together with a minimum witness set.
#[derive(Debug, Clone, Serialize)]
pub struct ForcingResult {
    pub matching_id: Option<usize>,
    pub forcing_number: usize,
    pub witness: Vec<EdgeId>,
}

/// True iff forcing `s` pins down `m`: the graph left after deleting the
/// end vertices of `s` has `m \ s` as its unique perfect matching. Decided
/// by enumeration with limit 2 on the reduced graph.
pub fn is_forcing_set(g: &GridGraph, m: &Matching, s: &[EdgeId]) -> Result<bool> {
    if m.graph_id() != g.topology() {
        return Err(Error::GraphMismatch);
    }
    if s.iter().any(|&e| !m.contains(e)) {
        return Err(Error::NotASubset);
    }
    let mut blocked = BitSet::new(g.vertex_count());
    for &e in s {
        for v in g.edge(e).ends {
            blocked.insert(v);
        }
    }
    Ok(count_matchings_limited(g, &blocked, 2) == 1)
}

/// First face that is alternating in `m` and avoids `blocked`, if any.
fn find_free_alternating_square(g: &GridGraph, m: &Matching, blocked: &BitSet) -> Option<usize> {
    'faces: for (fi, face) in g.faces().iter().enumerate() {
        let [t, b] = face.horizontal_pair();
        let [l, r] = face.vertical_pair();
        let h = m.contains(t) && m.contains(b);
        let v = m.contains(l) && m.contains(r);
        let alternating = (h && !m.contains(l) && !m.contains(r))
            || (v && !m.contains(t) && !m.contains(b));
        if !alternating {
            continue;
        }
        for &e in &face.edges {
            for vx in g.edge(e).ends {
                if blocked.contains(vx) {
                    continue 'faces;
                }
            }
        }
        return Some(fi);
    }
    None
}

/// Matching edges of some M-alternating cycle avoiding `blocked`, or None
/// if no such cycle exists (i.e. the restriction of `m` is forced).
///
/// Found by enumerating a second perfect matching of the reduced graph and
/// extracting, from the symmetric difference, the cycle through its lowest
/// edge index. Deterministic because enumeration order is canonical.
fn find_alternating_cycle_edges(
    g: &GridGraph,
    m: &Matching,
    blocked: &BitSet,
) -> Option<Vec<EdgeId>> {
    if let Some(f) = find_free_alternating_square(g, m, blocked) {
        let face = g.face(f);
        let mut me: Vec<EdgeId> = face.edges.iter().copied().filter(|&e| m.contains(e)).collect();
        me.sort_unstable();
        return Some(me);
    }
    // collect up to two perfect matchings of the reduced graph
    let mut found: Vec<BitSet> = Vec::with_capacity(2);
    visit_matchings(g, blocked, &mut |bits| {
        found.push(bits.clone());
        found.len() < 2
    });
    if found.len() < 2 {
        return None;
    }
    let rest = {
        let mut r = m.bits().clone();
        for e in m.bits().iter() {
            for v in g.edge(e).ends {
                if blocked.contains(v) {
                    r.remove(e);
                    break;
                }
            }
        }
        r
    };
    let other = if found[0] == rest { &found[1] } else { &found[0] };
    let diff = rest.xor(other);
    debug_assert!(!diff.is_empty());
    // walk the cycle through the lowest edge of the difference
    let start = diff.first().unwrap();
    let mut cycle_m_edges = Vec::new();
    let start_v = g.edge(start).ends[0];
    let mut prev = start_v;
    let mut cur_edge = start;
    loop {
        if rest.contains(cur_edge) {
            cycle_m_edges.push(cur_edge);
        }
        let next_v = g.edge(cur_edge).other(prev);
        if next_v == start_v {
            break;
        }
        let next_edge = g
            .incident_edges(next_v)
            .iter()
            .copied()
            .find(|&e| e != cur_edge && diff.contains(e))
            .expect("symmetric difference decomposes into cycles");
        prev = next_v;
        cur_edge = next_edge;
    }
    cycle_m_edges.sort_unstable();
    Some(cycle_m_edges)
}

/// Exact maximum number of pairwise vertex-disjoint M-alternating square
/// faces. Each such face needs its own witness edge, so this is a lower
/// bound on the forcing number.
pub fn disjoint_alternating_squares(g: &GridGraph, m: &Matching) -> usize {
    let squares: Vec<BitSet> = g
        .faces()
        .iter()
        .enumerate()
        .filter(|&(fi, _)| crate::flip::is_face_alternating(g, m, fi))
        .map(|(_, face)| {
            BitSet::from_indices(
                g.vertex_count(),
                face.edges.iter().flat_map(|&e| g.edge(e).ends),
            )
        })
        .collect();
    fn rec(squares: &[BitSet], i: usize, used: &BitSet, picked: usize, best: &mut usize) {
        if picked + (squares.len() - i) <= *best {
            return;
        }
        if i == squares.len() {
            *best = (*best).max(picked);
            return;
        }
        if !squares[i].intersects(used) {
            let mut used2 = used.clone();
            used2.xor_assign(&squares[i]);
            rec(squares, i + 1, &used2, picked + 1, best);
        }
        rec(squares, i + 1, used, picked, best);
    }
    let mut best = 0;
    if !squares.is_empty() {
        let used = BitSet::new(g.vertex_count());
        rec(&squares, 0, &used, 0, &mut best);
    }
    best
}

/// Greedy variant used inside the search: scan faces in index order and
/// take every alternating square disjoint from the ones already taken and
/// from `blocked`. Still a valid lower bound.
fn greedy_disjoint_squares(g: &GridGraph, m: &Matching, blocked: &BitSet) -> usize {
    let mut used = blocked.clone();
    let mut count = 0;
    'faces: for (fi, face) in g.faces().iter().enumerate() {
        if !crate::flip::is_face_alternating(g, m, fi) {
            continue;
        }
        let verts: Vec<usize> = face.edges.iter().flat_map(|&e| g.edge(e).ends).collect();
        for &v in &verts {
            if used.contains(v) {
                continue 'faces;
            }
        }
        for &v in &verts {
            used.insert(v);
        }
        count += 1;
    }
    count
}

struct SearchState<'a> {
    g: &'a GridGraph,
    m: &'a Matching,
    best: usize,
    best_witness: Vec<EdgeId>,
    visited: HashSet<Box<[u64]>>,
}

fn search(state: &mut SearchState, chosen: &mut Vec<EdgeId>, blocked: &BitSet) {
    if chosen.len() >= state.best {
        return;
    }
    let cycle = match find_alternating_cycle_edges(state.g, state.m, blocked) {
        None => {
            state.best = chosen.len();
            state.best_witness = chosen.clone();
            return;
        }
        Some(c) => c,
    };
    if chosen.len() + 1 >= state.best {
        return;
    }
    if chosen.len() + greedy_disjoint_squares(state.g, state.m, blocked) >= state.best {
        return;
    }
    for e in cycle {
        let mut blocked2 = blocked.clone();
        for v in state.g.edge(e).ends {
            blocked2.insert(v);
        }
        if !state.visited.insert(blocked2.words().into()) {
            continue;
        }
        chosen.push(e);
        search(state, chosen, &blocked2);
        chosen.pop();
    }
}

/// Exact forcing number of `m` with a minimum witness. Deterministic:
/// the branch order is fixed, and the first minimum found wins.
pub fn forcing_number(g: &GridGraph, m: &Matching) -> Result<ForcingResult> {
    if m.graph_id() != g.topology() {
        return Err(Error::GraphMismatch);
    }
    if !verify_perfect(g, m)? {
        return Err(Error::NotPerfect);
    }
    let mut state = SearchState {
        g,
        m,
        best: m.edge_count().max(1),
        best_witness: m.edges(),
        visited: HashSet::new(),
    };
    let blocked = BitSet::new(g.vertex_count());
    let mut chosen = Vec::new();
    search(&mut state, &mut chosen, &blocked);
    debug_assert!(disjoint_alternating_squares(g, m) <= state.best);
    Ok(ForcingResult {
        matching_id: None,
        forcing_number: state.best,
        witness: state.best_witness,
    })
}

/// Forcing numbers of all perfect matchings, aggregated.
///
/// `authoritative` is false when a budget cut the sweep short; the
/// spectrum then covers only the matchings that were processed.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    pub spectrum: Vec<usize>,
    pub min_forcing: usize,
    pub max_forcing: usize,
    pub continuous: bool,
    pub gaps: Vec<usize>,
    pub matchings_seen: usize,
    pub authoritative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_matching: Option<Vec<ForcingResult>>,
}

impl SpectrumReport {
    pub fn to_json(&self, topo: crate::grid::Topology) -> serde_json::Value {
        serde_json::json!({
            "schema": "v1",
            "kind": topo.kind,
            "vrows": topo.vrows,
            "vcols": topo.vcols,
            "matchings": self.matchings_seen,
            "spectrum": self.spectrum,
            "min": self.min_forcing,
            "max": self.max_forcing,
            "continuous": self.continuous,
            "gaps": self.gaps,
            "authoritative": self.authoritative,
        })
    }
}

/// Sweeps the forcing number of every perfect matching of `g` in parallel.
/// Set `keep_per_matching` to retain one [`ForcingResult`] per matching id.
pub fn forcing_spectrum(g: &GridGraph, budget: Budget, keep_per_matching: bool) -> SpectrumReport {
    let (store, truncated) = enumerate_with_budget(g, budget);
    let n = store.len();
    let mut authoritative = !truncated;

    let timed_out = AtomicBool::new(false);
    let results: Vec<Option<ForcingResult>> = (0..n)
        .into_par_iter()
        .map(|id| {
            if let Some(deadline) = budget.deadline {
                if timed_out.load(Ordering::Relaxed) || Instant::now() >= deadline {
                    timed_out.store(true, Ordering::Relaxed);
                    return None;
                }
            }
            let mut r = forcing_number(g, store.get(id)).expect("store holds perfect matchings");
            r.matching_id = Some(id);
            Some(r)
        })
        .collect();
    if timed_out.load(Ordering::Relaxed) {
        authoritative = false;
    }

    let done: Vec<ForcingResult> = results.into_iter().flatten().collect();
    let matchings_seen = done.len();
    let mut values: Vec<usize> = done.iter().map(|r| r.forcing_number).collect();
    values.sort_unstable();
    values.dedup();
    let (min_forcing, max_forcing) = match (values.first(), values.last()) {
        (Some(&lo), Some(&hi)) => (lo, hi),
        _ => (0, 0),
    };
    let gaps: Vec<usize> = (min_forcing..=max_forcing)
        .filter(|v| !values.contains(v))
        .collect();
    SpectrumReport {
        spectrum: values,
        min_forcing,
        max_forcing,
        continuous: gaps.is_empty() && matchings_seen > 0,
        gaps,
        matchings_seen,
        authoritative,
        per_matching: keep_per_matching.then_some(done),
    }
}

/// True iff every flip-graph edge joins matchings whose forcing numbers
/// differ by at most one. `forcing` is indexed by matching id.
pub fn flip_lipschitz_check(f: &FlipGraph, forcing: &[usize]) -> bool {
    (0..f.vertex_count()).all(|id| {
        f.neighbors(id)
            .iter()
            .all(|&(nb, _)| forcing[id].abs_diff(forcing[nb as usize]) <= 1)
    })
}

/// CSV export: `matching_id,forcing_number,witness` with the witness as a
/// space-separated edge list.
pub fn forcing_results_csv(results: &[ForcingResult]) -> String {
    let mut out = String::from("matching_id,forcing_number,witness\n");
    for r in results {
        let witness: Vec<String> = r.witness.iter().map(|e| e.to_string()).collect();
        out.push_str(&format!(
            "{},{},{}\n",
            r.matching_id.map(|i| i.to_string()).unwrap_or_default(),
            r.forcing_number,
            witness.join(" ")
        ));
    }
    out
}
