//! Perfect matching enumeration and storage.
//!
//! Matchings are bit vectors over edge indices, bound to their graph by the
//! graph's topology (construction is deterministic, so the topology is the
//! identity). Enumeration branches on the lowest-index uncovered vertex and
//! tries incident edges in ascending index order, which fixes a canonical
//! enumeration order.

use std::collections::HashMap;
use std::time::Instant;

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::grid::{EdgeId, GridGraph, Orientation, Topology};

/// Resource limits for enumerations and sweeps.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    pub max_matchings: Option<usize>,
    pub deadline: Option<Instant>,
}

/// A perfect matching (or candidate edge set) of one grid graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matching {
    graph_id: Topology,
    bits: BitSet,
}

impl Matching {
    pub fn from_edges<I: IntoIterator<Item = EdgeId>>(graph: &GridGraph, edges: I) -> Self {
        Matching {
            graph_id: graph.topology(),
            bits: BitSet::from_indices(graph.edge_count(), edges),
        }
    }

    pub(crate) fn from_bits(graph_id: Topology, bits: BitSet) -> Self {
        Matching { graph_id, bits }
    }

    #[inline]
    pub fn graph_id(&self) -> Topology {
        self.graph_id
    }

    #[inline]
    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    #[inline]
    pub fn contains(&self, e: EdgeId) -> bool {
        self.bits.contains(e)
    }

    pub fn edge_count(&self) -> usize {
        self.bits.len()
    }

    /// Edge indices in ascending order.
    pub fn edges(&self) -> Vec<EdgeId> {
        self.bits.iter().collect()
    }

    pub fn fingerprint(&self) -> u64 {
        self.bits.fingerprint()
    }

    /// Symmetric difference with an edge set, as a new matching candidate.
    pub fn symmetric_difference(&self, edges: &[EdgeId]) -> Matching {
        let mut bits = self.bits.clone();
        for &e in edges {
            bits.toggle(e);
        }
        Matching {
            graph_id: self.graph_id,
            bits,
        }
    }
}

impl std::fmt::Debug for Matching {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Matching{:?}", self.bits)
    }
}

/// True iff `m` is a perfect matching of `g`.
pub fn verify_perfect(g: &GridGraph, m: &Matching) -> Result<bool> {
    if m.graph_id() != g.topology() {
        return Err(Error::GraphMismatch);
    }
    let mut covered = vec![0u8; g.vertex_count()];
    for e in m.bits.iter() {
        for v in g.edge(e).ends {
            covered[v] += 1;
        }
    }
    Ok(covered.iter().all(|&c| c == 1))
}

/// Number of horizontal edges used by `m`.
pub fn count_horizontal(g: &GridGraph, m: &Matching) -> usize {
    m.bits
        .iter()
        .filter(|&e| g.edge(e).orientation == Orientation::Horizontal)
        .count()
}

/// Dense, duplicate-free store of matchings in enumeration order, with a
/// fingerprint index for O(1) lookup. Frozen after enumeration; reads are
/// safe to share.
pub struct MatchingStore {
    graph_id: Topology,
    matchings: Vec<Matching>,
    index: HashMap<u64, Vec<u32>>,
}

impl MatchingStore {
    fn with_capacity(graph_id: Topology, cap: usize) -> Self {
        MatchingStore {
            graph_id,
            matchings: Vec::with_capacity(cap),
            index: HashMap::with_capacity(cap * 2),
        }
    }

    fn push(&mut self, m: Matching) {
        debug_assert_eq!(m.graph_id(), self.graph_id);
        let id = self.matchings.len() as u32;
        self.index.entry(m.fingerprint()).or_default().push(id);
        self.matchings.push(m);
    }

    #[inline]
    pub fn graph_id(&self) -> Topology {
        self.graph_id
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    #[inline]
    pub fn get(&self, id: usize) -> &Matching {
        &self.matchings[id]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Matching> {
        self.matchings.iter()
    }

    /// Id of a matching equal to `m`, if stored. Hash collisions fall back
    /// to full bit-vector comparison.
    pub fn id_of(&self, m: &Matching) -> Option<usize> {
        self.index.get(&m.fingerprint()).and_then(|ids| {
            ids.iter()
                .find(|&&id| self.matchings[id as usize].bits == m.bits)
                .map(|&id| id as usize)
        })
    }
}

/// Backtracking core: visits every perfect matching of the subgraph of `g`
/// induced by the vertices NOT in `blocked`. The visitor returns `false` to
/// stop early. Returns `false` if the visitor stopped the walk.
pub(crate) fn visit_matchings<F: FnMut(&BitSet) -> bool>(
    g: &GridGraph,
    blocked: &BitSet,
    visit: &mut F,
) -> bool {
    let mut covered = blocked.clone();
    let mut chosen = BitSet::new(g.edge_count());
    fn rec<F: FnMut(&BitSet) -> bool>(
        g: &GridGraph,
        covered: &mut BitSet,
        chosen: &mut BitSet,
        visit: &mut F,
    ) -> bool {
        let v = match covered.first_missing() {
            None => return visit(chosen),
            Some(v) => v,
        };
        for &e in g.incident_edges(v) {
            let o = g.edge(e).other(v);
            if !covered.contains(o) {
                covered.insert(v);
                covered.insert(o);
                chosen.insert(e);
                let go_on = rec(g, covered, chosen, visit);
                chosen.remove(e);
                covered.remove(v);
                covered.remove(o);
                if !go_on {
                    return false;
                }
            }
        }
        true
    }
    rec(g, &mut covered, &mut chosen, visit)
}

/// Counts perfect matchings of `g` minus the `blocked` vertices, stopping
/// at `limit`.
pub(crate) fn count_matchings_limited(g: &GridGraph, blocked: &BitSet, limit: usize) -> usize {
    let mut n = 0usize;
    visit_matchings(g, blocked, &mut |_| {
        n += 1;
        n < limit
    });
    n
}

fn empty_blocked(g: &GridGraph) -> BitSet {
    BitSet::new(g.vertex_count())
}

/// Streams every perfect matching of `g` in canonical order without storing
/// them. The callback returns `false` to stop early.
pub fn for_each_perfect_matching<F: FnMut(&Matching) -> bool>(g: &GridGraph, mut f: F) {
    let id = g.topology();
    visit_matchings(g, &empty_blocked(g), &mut |bits| {
        f(&Matching::from_bits(id, bits.clone()))
    });
}

/// Enumerates all perfect matchings of `g` (or the first `limit` in
/// canonical order). A graph with no perfect matching yields an empty
/// store.
///
/// The unbounded enumeration splits on the first branch vertex's edge
/// choices and walks the subtrees in parallel; concatenating the subtree
/// outputs in edge order reproduces the canonical serial order exactly.
pub fn enumerate_perfect_matchings(g: &GridGraph, limit: Option<usize>) -> MatchingStore {
    let id = g.topology();
    if let Some(limit) = limit {
        let mut store = MatchingStore::with_capacity(id, limit.min(1 << 20));
        if limit == 0 {
            return store;
        }
        visit_matchings(g, &empty_blocked(g), &mut |bits| {
            store.push(Matching::from_bits(id, bits.clone()));
            store.len() < limit
        });
        return store;
    }

    if g.vertex_count() % 2 == 1 {
        return MatchingStore::with_capacity(id, 0);
    }

    // Split at vertex 0: one subtree per incident edge whose other end is
    // free, i.e. every incident edge.
    let branches: Vec<EdgeId> = g.incident_edges(0).to_vec();
    let chunks: Vec<Vec<BitSet>> = branches
        .par_iter()
        .map(|&e| {
            let mut blocked = empty_blocked(g);
            for v in g.edge(e).ends {
                blocked.insert(v);
            }
            let mut out = Vec::new();
            visit_matchings(g, &blocked, &mut |bits| {
                let mut full = bits.clone();
                full.insert(e);
                out.push(full);
                true
            });
            out
        })
        .collect();

    let total: usize = chunks.iter().map(|c| c.len()).sum();
    let mut store = MatchingStore::with_capacity(id, total);
    for chunk in chunks {
        for bits in chunk {
            store.push(Matching::from_bits(id, bits));
        }
    }
    store
}

/// Enumerates under a budget. Returns the store plus a flag saying the
/// budget cut the enumeration short (count cap reached with more to come,
/// or the deadline passed).
pub fn enumerate_with_budget(g: &GridGraph, budget: Budget) -> (MatchingStore, bool) {
    if budget.max_matchings.is_none() && budget.deadline.is_none() {
        return (enumerate_perfect_matchings(g, None), false);
    }
    let id = g.topology();
    let mut store = MatchingStore::with_capacity(id, 1024);
    let mut exceeded = false;
    let mut ticker = 0u32;
    visit_matchings(g, &empty_blocked(g), &mut |bits| {
        if let Some(maxm) = budget.max_matchings {
            if store.len() >= maxm {
                exceeded = true;
                return false;
            }
        }
        if let Some(deadline) = budget.deadline {
            ticker = ticker.wrapping_add(1);
            if ticker.is_multiple_of(256) && Instant::now() >= deadline {
                exceeded = true;
                return false;
            }
        }
        store.push(Matching::from_bits(id, bits.clone()));
        true
    });
    (store, exceeded)
}

/// True iff `g` has exactly one perfect matching.
pub fn has_unique_pm(g: &GridGraph) -> bool {
    count_matchings_limited(g, &empty_blocked(g), 2) == 1
}

/// True iff the edge lies in some perfect matching: force it by deleting
/// both endpoints and test the remainder for a perfect matching.
pub fn is_edge_allowed(g: &GridGraph, e: EdgeId) -> bool {
    let mut blocked = empty_blocked(g);
    for v in g.edge(e).ends {
        blocked.insert(v);
    }
    count_matchings_limited(g, &blocked, 1) == 1
}

fn is_connected(g: &GridGraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = BitSet::new(n);
    let mut stack = vec![0usize];
    seen.insert(0);
    while let Some(v) = stack.pop() {
        for &e in g.incident_edges(v) {
            let o = g.edge(e).other(v);
            if !seen.contains(o) {
                seen.insert(o);
                stack.push(o);
            }
        }
    }
    seen.len() == n
}

/// True iff `g` is connected and every edge is allowed.
pub fn is_elementary(g: &GridGraph) -> bool {
    is_connected(g) && (0..g.edge_count()).all(|e| is_edge_allowed(g, e))
}

/// ASCII tiling diagram: one character per region cell, `<>` for the two
/// halves of a horizontal domino and `^v` for a vertical one.
pub fn ascii_tiling(g: &GridGraph, m: &Matching) -> Result<String> {
    if m.graph_id() != g.topology() {
        return Err(Error::GraphMismatch);
    }
    let (rows, cols) = (g.topology().vrows, g.topology().vcols);
    let mut cells = vec![b'.'; rows * cols];
    for e in m.bits.iter() {
        let edge = g.edge(e);
        let (ar, ac) = g.position(edge.ends[0]);
        let (br, bc) = g.position(edge.ends[1]);
        match edge.orientation {
            Orientation::Horizontal => {
                // edge.class is the left column of the domino (wrap-aware)
                let (lc, rc) = (edge.class, (edge.class + 1) % cols);
                debug_assert!(ac == lc || bc == lc);
                debug_assert_eq!(ar, br);
                cells[ar * cols + lc] = b'>';
                cells[ar * cols + rc] = b'<';
            }
            Orientation::Vertical => {
                let (tr, brr) = (edge.class, (edge.class + 1) % rows);
                debug_assert!(ar == tr || br == tr);
                debug_assert_eq!(ac, bc);
                cells[tr * cols + ac] = b'v';
                cells[brr * cols + ac] = b'^';
            }
        }
    }
    let mut out = String::with_capacity(rows * (cols + 1));
    for r in 0..rows {
        out.push_str(std::str::from_utf8(&cells[r * cols..(r + 1) * cols]).unwrap());
        out.push('\n');
    }
    Ok(out)
}

/// JSON export: matchings as arrays of edge indices, in store order.
pub fn matchings_to_json(store: &MatchingStore) -> serde_json::Value {
    serde_json::json!({
        "schema": "v1",
        "kind": store.graph_id().kind,
        "vrows": store.graph_id().vrows,
        "vcols": store.graph_id().vcols,
        "count": store.len(),
        "matchings": store.iter().map(|m| m.edges()).collect::<Vec<_>>(),
    })
}
