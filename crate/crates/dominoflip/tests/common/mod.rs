//! Independent oracles for the integration tests.
//!
//! Everything here recomputes from first principles with plain data
//! structures: set-based backtracking enumeration, pairwise symmetric
//! differences for flip adjacency, and increasing-cardinality subset
//! search for forcing numbers. None of it shares code with the bit-packed
//! engine it checks.
#![allow(dead_code)] // each test binary uses its own slice of the oracles

use std::collections::{BTreeSet, HashMap};

use dominoflip::grid::GridGraph;

pub type EdgeSet = BTreeSet<usize>;

/// All perfect matchings as sorted edge sets, found by naive backtracking
/// on the first uncovered vertex.
pub fn naive_matchings(g: &GridGraph) -> BTreeSet<EdgeSet> {
    fn rec(
        g: &GridGraph,
        covered: &mut Vec<bool>,
        cur: &mut EdgeSet,
        out: &mut BTreeSet<EdgeSet>,
    ) {
        let v = match covered.iter().position(|&c| !c) {
            None => {
                out.insert(cur.clone());
                return;
            }
            Some(v) => v,
        };
        for &e in g.incident_edges(v) {
            let o = g.edge(e).other(v);
            if !covered[o] {
                covered[v] = true;
                covered[o] = true;
                cur.insert(e);
                rec(g, covered, cur, out);
                cur.remove(&e);
                covered[v] = false;
                covered[o] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    rec(
        g,
        &mut vec![false; g.vertex_count()],
        &mut BTreeSet::new(),
        &mut out,
    );
    out
}

/// Counts perfect matchings of `g` minus `removed` vertices, stopping at
/// `limit`.
pub fn naive_count_limited(g: &GridGraph, removed: &[usize], limit: usize) -> usize {
    fn rec(g: &GridGraph, covered: &mut Vec<bool>, count: &mut usize, limit: usize) {
        if *count >= limit {
            return;
        }
        let v = match covered.iter().position(|&c| !c) {
            None => {
                *count += 1;
                return;
            }
            Some(v) => v,
        };
        for &e in g.incident_edges(v) {
            let o = g.edge(e).other(v);
            if !covered[o] {
                covered[v] = true;
                covered[o] = true;
                rec(g, covered, count, limit);
                covered[v] = false;
                covered[o] = false;
                if *count >= limit {
                    return;
                }
            }
        }
    }
    let mut covered = vec![false; g.vertex_count()];
    for &v in removed {
        covered[v] = true;
    }
    let mut count = 0;
    rec(g, &mut covered, &mut count, limit);
    count
}

/// Forcing test straight from the definition: delete the end vertices of
/// `s` and ask whether exactly one perfect matching remains.
pub fn naive_is_forcing(g: &GridGraph, s: &[usize]) -> bool {
    let removed: Vec<usize> = s.iter().flat_map(|&e| g.edge(e).ends).collect();
    naive_count_limited(g, &removed, 2) == 1
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rest in combinations(&items[1..], k - 1) {
        let mut with = vec![items[0]];
        with.extend(rest);
        out.push(with);
    }
    out.extend(combinations(&items[1..], k));
    out
}

/// Exact forcing number by increasing-cardinality subset search over the
/// matching's edges, uniqueness decided by bounded naive enumeration.
pub fn naive_forcing_number(g: &GridGraph, m: &EdgeSet) -> usize {
    let edges: Vec<usize> = m.iter().copied().collect();
    for k in 0..=edges.len() {
        for subset in combinations(&edges, k) {
            if naive_is_forcing(g, &subset) {
                return k;
            }
        }
    }
    unreachable!("the whole matching is always a forcing set");
}

/// Flip adjacency by pairwise symmetric differences: two matchings are
/// adjacent iff their difference is exactly the edge set of one face.
pub fn naive_flip_adjacency(g: &GridGraph, pms: &[EdgeSet]) -> Vec<BTreeSet<usize>> {
    let face_sets: Vec<EdgeSet> = g
        .faces()
        .iter()
        .map(|f| f.edges.iter().copied().collect())
        .collect();
    let mut adj = vec![BTreeSet::new(); pms.len()];
    for i in 0..pms.len() {
        for j in i + 1..pms.len() {
            let diff: EdgeSet = pms[i].symmetric_difference(&pms[j]).copied().collect();
            if face_sets.contains(&diff) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    adj
}

/// Connected components over a naive adjacency table; returns sizes in
/// descending order.
pub fn naive_component_sizes(adj: &[BTreeSet<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut comp = vec![usize::MAX; n];
    let mut next = 0;
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = next;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if comp[y] == usize::MAX {
                    comp[y] = next;
                    stack.push(y);
                }
            }
        }
        next += 1;
    }
    let mut sizes = vec![0usize; next];
    for &c in &comp {
        sizes[c] += 1;
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

/// Converts a flip-graph component into a petgraph graph for the generic
/// isomorphism oracle.
pub fn component_as_petgraph(
    members: &[usize],
    neighbors: impl Fn(usize) -> Vec<usize>,
) -> petgraph::graph::UnGraph<(), ()> {
    let mut gr = petgraph::graph::UnGraph::<(), ()>::new_undirected();
    let mut node_of = HashMap::new();
    for &id in members {
        node_of.insert(id, gr.add_node(()));
    }
    for &id in members {
        for nb in neighbors(id) {
            if nb > id && node_of.contains_key(&nb) {
                gr.add_edge(node_of[&id], node_of[&nb], ());
            }
        }
    }
    gr
}
