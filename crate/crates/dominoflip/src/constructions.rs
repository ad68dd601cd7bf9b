//! Named matchings and matching transformations on the torus.
//!
//! * the two all-horizontal canonical matchings of an odd-by-even torus,
//!   built from alternating horizontal edge classes;
//! * the brick-wall matching of an even-column cylinder (no flippable
//!   face at all, so it is an isolated flip-graph vertex);
//! * ladder reduction: a recorded flip sequence that empties one
//!   horizontal edge class, lowering the horizontal edge count by exactly
//!   two per phase;
//! * marked-vertex forcing sets of size (n+1)m on the (2n+1) x 2m torus;
//! * cutting a torus open along one horizontal edge class, which yields a
//!   cylinder rotated a quarter turn, with index maps back to the torus.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::flip::{flip, is_face_alternating};
use crate::grid::{build_grid, EdgeId, FaceId, GridGraph, Kind, Topology, VertexId};
use crate::matching::{verify_perfect, Matching};

fn require_odd_by_even_torus(g: &GridGraph) -> Result<(usize, usize)> {
    let t = g.topology();
    let odd_rows = t.vrows % 2 == 1;
    let even_cols = t.vcols.is_multiple_of(2);
    if t.kind != Kind::Torus || !odd_rows || !even_cols {
        return Err(Error::UnsupportedTopology {
            required: "a torus with an odd number of rows and an even number of columns",
        });
    }
    Ok((t.vrows, t.vcols))
}

/// The two disjoint all-horizontal perfect matchings of an odd-by-even
/// torus: the union of the odd-numbered horizontal classes, and of the
/// even-numbered ones. Together they cover every horizontal edge.
pub fn canonical_matchings(g: &GridGraph) -> Result<(Matching, Matching)> {
    require_odd_by_even_torus(g)?;
    let classes = g.horiz_class_count();
    let mut odd = Vec::new();
    let mut even = Vec::new();
    for i in 1..=classes {
        let class = g.horiz_class(i)?;
        if i % 2 == 1 {
            odd.extend_from_slice(class);
        } else {
            even.extend_from_slice(class);
        }
    }
    Ok((Matching::from_edges(g, odd), Matching::from_edges(g, even)))
}

/// The staggered all-horizontal matching of an even-column cylinder: row r
/// uses the horizontal edges starting at columns congruent to r mod 2. No
/// face boundary alternates in it, so it has no flips at all.
pub fn brick_wall(g: &GridGraph) -> Result<Matching> {
    let t = g.topology();
    if t.kind != Kind::Cylinder || t.vcols % 2 == 1 {
        return Err(Error::UnsupportedTopology {
            required: "a cylinder with an even number of columns",
        });
    }
    let mut edges = Vec::with_capacity(t.vrows * t.vcols / 2);
    for r in 0..t.vrows {
        let mut c = r % 2;
        while c < t.vcols + (r % 2) {
            let c0 = c % t.vcols;
            let u = r * t.vcols + c0;
            let v = r * t.vcols + (c0 + 1) % t.vcols;
            edges.push(g.edge_between(u, v).expect("horizontal edge exists"));
            c += 2;
        }
    }
    Ok(Matching::from_edges(g, edges))
}

/// A replayable flip sequence from `start` to `end`.
///
/// `phase_ends` marks the trace positions at which one ladder phase (one
/// net reduction of the horizontal edge count by two) completes.
#[derive(Debug, Clone)]
pub struct FlipTrace {
    pub start: Matching,
    pub flips: Vec<FaceId>,
    pub phase_ends: Vec<usize>,
    pub end: Matching,
}

impl FlipTrace {
    /// Replays the trace from `start`, validating that every step is a
    /// legal flip, and returns the resulting matching.
    pub fn replay(&self, g: &GridGraph) -> Result<Matching> {
        let mut m = self.start.clone();
        for &f in &self.flips {
            m = flip(g, &m, f)?;
        }
        Ok(m)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": "v1",
            "start_matching": self.start.edges(),
            "flips": self.flips,
        })
    }
}

/// Horizontal crossing step used by the ladder scan: which matched
/// horizontal edge, if any, leaves `(row, col)` in the given direction.
fn hedge(g: &GridGraph, row: usize, class: usize) -> EdgeId {
    let t = g.topology();
    let u = row * t.vcols + class;
    let v = row * t.vcols + (class + 1) % t.vcols;
    g.edge_between(u, v).expect("horizontal edge exists")
}

/// Flips `m` into a matching that misses at least one horizontal edge
/// class entirely, recording the flips.
///
/// Each phase locates a column with at least three matched crossing edges,
/// picks the first cyclically consecutive same-side pair, walks column by
/// column in that direction until the interior path has no further
/// crossings (the ladder), and applies the two rounds of face flips that
/// convert all ladder horizontals to verticals. Every phase lowers the
/// horizontal edge count by exactly two, so the procedure terminates; the
/// scan order (columns ascending, start rows ascending) makes the trace
/// deterministic.
pub fn ladder_reduce(g: &GridGraph, m: &Matching) -> Result<FlipTrace> {
    let (vrows, vcols) = require_odd_by_even_torus(g)?;
    if m.graph_id() != g.topology() {
        return Err(Error::GraphMismatch);
    }
    if !verify_perfect(g, m)? {
        return Err(Error::NotPerfect);
    }

    let mut work = m.clone();
    let mut flips: Vec<FaceId> = Vec::new();
    let mut phase_ends: Vec<usize> = Vec::new();

    let class_is_empty = |w: &Matching, i0: usize| -> bool {
        g.horiz_class(i0 + 1)
            .expect("class index in range")
            .iter()
            .all(|&e| !w.contains(e))
    };

    loop {
        if (0..vcols).any(|i0| class_is_empty(&work, i0)) {
            break;
        }

        // Find the first same-side pair of cyclically consecutive crossing
        // rows. Side +1 means the crossing edge leaves to the right
        // (higher column), -1 to the left.
        let mut start: Option<(usize, usize, usize, i64)> = None;
        'scan: for j in 0..vcols {
            let left_class = (j + vcols - 1) % vcols;
            let cross: Vec<(usize, i64)> = (0..vrows)
                .filter_map(|r| {
                    if work.contains(hedge(g, r, j)) {
                        Some((r, 1))
                    } else if work.contains(hedge(g, r, left_class)) {
                        Some((r, -1))
                    } else {
                        None
                    }
                })
                .collect();
            debug_assert_eq!(cross.len() % 2, 1, "odd column cut parity");
            if cross.len() < 3 {
                continue;
            }
            for idx in 0..cross.len() {
                let (r1, s1) = cross[idx];
                let (r2, s2) = cross[(idx + 1) % cross.len()];
                if s1 == s2 {
                    start = Some((j, r1, r2, s1));
                    break 'scan;
                }
            }
        }
        let (mut jcol, mut ra, mut rb, dir) = start
            .expect("a column with three or more crossings always has a same-side pair");

        // Walk outward until the interior path at the next column carries
        // no matched crossing edges; shrink the arc to the first two
        // crossings otherwise. The arc shrinks every step, so this stops.
        let (ladder_col, arc_start, arc_span) = loop {
            let next_col = ((jcol as i64 + dir).rem_euclid(vcols as i64)) as usize;
            let out_class = if dir == 1 {
                next_col
            } else {
                (next_col + vcols - 1) % vcols
            };
            let span = (rb + vrows - ra) % vrows + 1;
            debug_assert!(span >= 2 && span % 2 == 0);
            let mut interior_cross = (1..span - 1).filter_map(|k| {
                let q = (ra + k) % vrows;
                work.contains(hedge(g, q, out_class)).then_some(q)
            });
            match (interior_cross.next(), interior_cross.next()) {
                (None, _) => {
                    let anchor = if dir == 1 { jcol } else { next_col };
                    break (anchor, ra, span);
                }
                (Some(q1), Some(q2)) => {
                    jcol = next_col;
                    ra = q1;
                    rb = q2;
                }
                (Some(_), None) => unreachable!("interior crossings come in pairs"),
            }
        };

        // Two flip rounds over the ladder: first the faces whose vertical
        // pairs sit in the matching, then the faces whose horizontal pairs
        // do after the first round.
        let t_steps = (arc_span - 2) / 2;
        let mut apply = |w: &mut Matching, row: usize| {
            let face = g
                .face_at(row, ladder_col)
                .expect("torus face exists at every cell");
            debug_assert!(is_face_alternating(g, w, face));
            *w = flip(g, w, face).expect("ladder face must be alternating");
            flips.push(face);
        };
        for x in 1..=t_steps {
            apply(&mut work, (arc_start + 2 * x - 1) % vrows);
        }
        for x in 0..=t_steps {
            apply(&mut work, (arc_start + 2 * x) % vrows);
        }
        phase_ends.push(flips.len());
    }

    Ok(FlipTrace {
        start: m.clone(),
        flips,
        phase_ends,
        end: work,
    })
}

/// An independent vertex set T and the matching edges it pins.
#[derive(Debug, Clone, Serialize)]
pub struct MarkedSet {
    pub marked_vertices: Vec<VertexId>,
    pub induced_edges: Vec<EdgeId>,
}

impl MarkedSet {
    pub fn to_json(&self, forcing_set: &[EdgeId]) -> serde_json::Value {
        serde_json::json!({
            "schema": "v1",
            "T": self.marked_vertices,
            "S": forcing_set,
        })
    }
}

/// Builds the marked-vertex forcing set of `m` on the (2n+1) x 2m torus:
/// T picks n vertices from every other column, alternating between the
/// odd-row slice and the even-row slice of the column; `E_T` is the set of
/// matching edges with an end in T, and the returned forcing set is
/// `S = M \ E_T` of size (n+1)m.
pub fn marked_forcing_set(g: &GridGraph, m: &Matching) -> Result<(MarkedSet, Vec<EdgeId>)> {
    let (vrows, vcols) = require_odd_by_even_torus(g)?;
    if m.graph_id() != g.topology() {
        return Err(Error::GraphMismatch);
    }
    if !verify_perfect(g, m)? {
        return Err(Error::NotPerfect);
    }
    let n = (vrows - 1) / 2;
    let half_cols = vcols / 2;
    let k = half_cols / 2;

    // 0-based column lists: odd-row slices at columns 0, 4, 8, ...; even-row
    // slices at columns 2, 6, 10, ... plus one more for odd m.
    let mut marked: Vec<VertexId> = Vec::with_capacity(half_cols * n);
    for q in 0..k {
        let col = 4 * q;
        for rr in 0..n {
            marked.push((2 * rr) * vcols + col);
        }
    }
    let mut even_cols: Vec<usize> = (0..k).map(|q| 4 * q + 2).collect();
    if half_cols % 2 == 1 {
        even_cols.push(4 * k);
    }
    for col in even_cols {
        for rr in 0..n {
            marked.push((2 * rr + 1) * vcols + col);
        }
    }
    marked.sort_unstable();
    debug_assert_eq!(marked.len(), half_cols * n);

    let in_t = BitSet::from_indices(g.vertex_count(), marked.iter().copied());
    let mut induced = Vec::with_capacity(marked.len());
    let mut forcing = Vec::new();
    for e in m.bits().iter() {
        let ends = g.edge(e).ends;
        match (in_t.contains(ends[0]), in_t.contains(ends[1])) {
            (false, false) => forcing.push(e),
            (true, true) => unreachable!("marked vertices form an independent set"),
            _ => induced.push(e),
        }
    }
    debug_assert_eq!(induced.len(), marked.len());
    Ok((
        MarkedSet {
            marked_vertices: marked,
            induced_edges: induced,
        },
        forcing,
    ))
}

/// A torus cut open along one horizontal edge class. The result is the
/// cylinder grid graph rotated a quarter turn: old columns become rows
/// (starting just past the cut), old rows become the wrapped columns.
pub struct ColumnCut {
    torus_id: Topology,
    cut_class: usize,
    cylinder: GridGraph,
    vertex_to_torus: Vec<VertexId>,
    edge_to_torus: Vec<EdgeId>,
    face_to_torus: Vec<FaceId>,
    edge_from_torus: Vec<Option<EdgeId>>,
}

impl ColumnCut {
    pub fn cylinder(&self) -> &GridGraph {
        &self.cylinder
    }

    /// 1-based class index that was removed.
    pub fn cut_class(&self) -> usize {
        self.cut_class
    }

    pub fn vertex_to_torus(&self, v: VertexId) -> VertexId {
        self.vertex_to_torus[v]
    }

    pub fn edge_to_torus(&self, e: EdgeId) -> EdgeId {
        self.edge_to_torus[e]
    }

    pub fn face_to_torus(&self, f: FaceId) -> FaceId {
        self.face_to_torus[f]
    }

    /// Carries a torus matching that avoids the cut class over to the
    /// cylinder.
    pub fn matching_to_cylinder(&self, m: &Matching) -> Result<Matching> {
        if m.graph_id() != self.torus_id {
            return Err(Error::GraphMismatch);
        }
        let mut edges = Vec::with_capacity(m.edge_count());
        for e in m.bits().iter() {
            match self.edge_from_torus[e] {
                Some(ce) => edges.push(ce),
                None => return Err(Error::ClassNotEmpty {
                    class: self.cut_class,
                }),
            }
        }
        Ok(Matching::from_edges(&self.cylinder, edges))
    }

    /// Carries a cylinder matching back onto the torus.
    pub fn matching_to_torus(&self, m: &Matching) -> Result<Matching> {
        if m.graph_id() != self.cylinder.topology() {
            return Err(Error::GraphMismatch);
        }
        let edges: Vec<EdgeId> = m.edges().into_iter().map(|e| self.edge_to_torus[e]).collect();
        Ok(Matching::from_bits(
            self.torus_id,
            BitSet::from_indices(self.edge_from_torus.len(), edges),
        ))
    }
}

/// Deletes the 1-based horizontal class `i` from a torus, returning the
/// resulting cylinder with index maps in both directions.
pub fn torus_minus_column(g: &GridGraph, i: usize) -> Result<ColumnCut> {
    let t = g.topology();
    if t.kind != Kind::Torus {
        return Err(Error::UnsupportedTopology { required: "a torus" });
    }
    if i == 0 || i > t.vcols {
        return Err(Error::IndexOutOfRange {
            what: "edge class",
            index: i,
            max: t.vcols,
        });
    }
    let i0 = i - 1;
    let (vrows, vcols) = (t.vrows, t.vcols);
    // new rows = old columns in cyclic order starting just past the cut;
    // new columns = old rows (wrapped)
    let cyl = build_grid(Topology::cylinder(vcols, vrows)?);

    let vertex_to_torus: Vec<VertexId> = (0..cyl.vertex_count())
        .map(|v| {
            let (nr, nc) = cyl.position(v);
            let old_row = nc;
            let old_col = (i0 + 1 + nr) % vcols;
            old_row * vcols + old_col
        })
        .collect();
    let edge_to_torus: Vec<EdgeId> = cyl
        .edges()
        .iter()
        .map(|e| {
            g.edge_between(vertex_to_torus[e.ends[0]], vertex_to_torus[e.ends[1]])
                .expect("cut preserves all edges outside the removed class")
        })
        .collect();
    let face_to_torus: Vec<FaceId> = cyl
        .faces()
        .iter()
        .map(|f| {
            let old_row = f.col;
            let old_col = (i0 + 1 + f.row) % vcols;
            g.face_at(old_row, old_col).expect("torus face exists")
        })
        .collect();
    let mut edge_from_torus = vec![None; g.edge_count()];
    for (ce, &te) in edge_to_torus.iter().enumerate() {
        edge_from_torus[te] = Some(ce);
    }
    Ok(ColumnCut {
        torus_id: t,
        cut_class: i,
        cylinder: cyl,
        vertex_to_torus,
        edge_to_torus,
        face_to_torus,
        edge_from_torus,
    })
}
