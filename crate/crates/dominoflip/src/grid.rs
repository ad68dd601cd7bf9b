//! Grid graphs on the rectangle, cylinder and torus.
//!
//! Vertices form a `vrows` x `vcols` array. The cylinder wraps the column
//! dimension (every row is a cycle), the torus wraps both, the rectangle
//! wraps neither. Indexing is deterministic: vertices are row-major, edges
//! are sorted by `(min endpoint, max endpoint)`, faces are the unit squares
//! in row-major anchor order. Two constructions from the same parameters
//! produce identical index assignments.
//!
//! The face set holds unit squares only. The cylinder's two boundary
//! cycles (its caps, when drawn on a sphere) are not faces here, so every
//! flip downstream is a rotation across a square; for even column counts
//! this makes the flip graph the tiling flip graph, which can be a proper
//! subgraph of the resonance graph taken over all embedded faces.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Rectangle,
    Cylinder,
    Torus,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Kind::Rectangle => write!(f, "rectangle"),
            Kind::Cylinder => write!(f, "cylinder"),
            Kind::Torus => write!(f, "torus"),
        }
    }
}

/// Shape parameters of a grid graph: the kind of wrapping plus the number
/// of vertex rows and vertex columns.
///
/// Because graph construction is deterministic, a `Topology` value fully
/// identifies a [`GridGraph`]; it doubles as the graph id carried by
/// matchings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Topology {
    pub kind: Kind,
    pub vrows: usize,
    pub vcols: usize,
}

impl Topology {
    /// Validates the dimension constraints: a wrapped dimension needs
    /// length >= 3 (shorter wraps create parallel edges or loops), an
    /// unwrapped dimension needs length >= 2.
    pub fn new(kind: Kind, vrows: usize, vcols: usize) -> Result<Self> {
        let t = Topology { kind, vrows, vcols };
        if t.wraps_rows() {
            if vrows < 3 {
                return Err(Error::WrappedTooShort {
                    dim: "vrows",
                    len: vrows,
                });
            }
        } else if vrows < 2 {
            return Err(Error::DimensionTooShort {
                dim: "vrows",
                len: vrows,
            });
        }
        if t.wraps_cols() {
            if vcols < 3 {
                return Err(Error::WrappedTooShort {
                    dim: "vcols",
                    len: vcols,
                });
            }
        } else if vcols < 2 {
            return Err(Error::DimensionTooShort {
                dim: "vcols",
                len: vcols,
            });
        }
        Ok(t)
    }

    pub fn rectangle(vrows: usize, vcols: usize) -> Result<Self> {
        Self::new(Kind::Rectangle, vrows, vcols)
    }

    pub fn cylinder(vrows: usize, vcols: usize) -> Result<Self> {
        Self::new(Kind::Cylinder, vrows, vcols)
    }

    pub fn torus(vrows: usize, vcols: usize) -> Result<Self> {
        Self::new(Kind::Torus, vrows, vcols)
    }

    /// The column dimension is a cycle (rows wrap around horizontally).
    #[inline]
    pub fn wraps_cols(&self) -> bool {
        matches!(self.kind, Kind::Cylinder | Kind::Torus)
    }

    /// The row dimension is a cycle (columns wrap around vertically).
    #[inline]
    pub fn wraps_rows(&self) -> bool {
        matches!(self.kind, Kind::Torus)
    }

    pub fn vertex_count(&self) -> usize {
        self.vrows * self.vcols
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// An undirected grid edge. Endpoints are stored with `ends[0] < ends[1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub ends: [VertexId; 2],
    pub orientation: Orientation,
    /// For a horizontal edge, the 0-based index of its left column (the
    /// column class it belongs to). For a vertical edge, the 0-based index
    /// of its upper row.
    pub class: usize,
}

impl Edge {
    pub fn other(&self, v: VertexId) -> VertexId {
        if self.ends[0] == v {
            self.ends[1]
        } else {
            self.ends[0]
        }
    }
}

/// A square face, anchored at its top-left vertex `(row, col)` (0-based).
///
/// `edges` holds the boundary in the fixed order top, bottom, left, right;
/// the first two are horizontal, the last two vertical.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Face {
    pub row: usize,
    pub col: usize,
    pub edges: [EdgeId; 4],
}

impl Face {
    pub fn horizontal_pair(&self) -> [EdgeId; 2] {
        [self.edges[0], self.edges[1]]
    }

    pub fn vertical_pair(&self) -> [EdgeId; 2] {
        [self.edges[2], self.edges[3]]
    }
}

/// Immutable grid graph with indexed vertices, edges, square faces and
/// horizontal edge classes. Construction is single-threaded; afterwards the
/// structure is read-only and safe to share across threads.
#[derive(Debug, Clone)]
pub struct GridGraph {
    topology: Topology,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    horiz_class: Vec<Vec<EdgeId>>,
    incidence: Vec<Vec<EdgeId>>,
    edge_index: HashMap<(VertexId, VertexId), EdgeId>,
}

/// Builds the grid graph for a validated topology.
pub fn build_grid(topology: Topology) -> GridGraph {
    GridGraph::new(topology)
}

/// Translates a quadriculated region (`region_rows` x `region_cols` unit
/// squares with the given wrap pattern) into its inner dual grid graph:
/// one vertex per square, same dimensions, same wrapping.
pub fn region_to_dual(region_rows: usize, region_cols: usize, kind: Kind) -> Result<GridGraph> {
    Ok(build_grid(Topology::new(kind, region_rows, region_cols)?))
}

/// The cylinder grid graph conventionally called C(a,b): a+1 vertex rows,
/// b vertex columns, columns wrapped. It is the inner dual of the
/// (a+1) x b quadriculated cylinder region.
pub fn paper_cylinder(a: usize, b: usize) -> Result<GridGraph> {
    Ok(build_grid(Topology::cylinder(a + 1, b)?))
}

/// The torus grid graph conventionally called T(a,b): a vertex rows, b
/// vertex columns, both wrapped. The torus region is self-dual.
pub fn paper_torus(a: usize, b: usize) -> Result<GridGraph> {
    Ok(build_grid(Topology::torus(a, b)?))
}

impl GridGraph {
    pub fn new(topology: Topology) -> Self {
        let (rows, cols) = (topology.vrows, topology.vcols);
        let vid = |r: usize, c: usize| r * cols + c;

        // Collect raw edges, then sort by (min, max) endpoint for the
        // canonical index assignment.
        let mut raw: Vec<Edge> = Vec::with_capacity(2 * rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                if c + 1 < cols || topology.wraps_cols() {
                    let c2 = (c + 1) % cols;
                    let (u, v) = (vid(r, c), vid(r, c2));
                    raw.push(Edge {
                        ends: [u.min(v), u.max(v)],
                        orientation: Orientation::Horizontal,
                        class: c,
                    });
                }
                if r + 1 < rows || topology.wraps_rows() {
                    let r2 = (r + 1) % rows;
                    let (u, v) = (vid(r, c), vid(r2, c));
                    raw.push(Edge {
                        ends: [u.min(v), u.max(v)],
                        orientation: Orientation::Vertical,
                        class: r,
                    });
                }
            }
        }
        raw.sort_by_key(|e| e.ends);
        let edges = raw;

        let mut edge_index = HashMap::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            edge_index.insert((e.ends[0], e.ends[1]), i);
        }
        let eid = |a: usize, b: usize| edge_index[&(a.min(b), a.max(b))];

        let mut faces = Vec::new();
        for r in 0..rows {
            if r + 1 >= rows && !topology.wraps_rows() {
                continue;
            }
            let r2 = (r + 1) % rows;
            for c in 0..cols {
                if c + 1 >= cols && !topology.wraps_cols() {
                    continue;
                }
                let c2 = (c + 1) % cols;
                faces.push(Face {
                    row: r,
                    col: c,
                    edges: [
                        eid(vid(r, c), vid(r, c2)),   // top
                        eid(vid(r2, c), vid(r2, c2)), // bottom
                        eid(vid(r, c), vid(r2, c)),   // left
                        eid(vid(r, c2), vid(r2, c2)), // right
                    ],
                });
            }
        }

        let class_count = if topology.wraps_cols() { cols } else { cols - 1 };
        let mut horiz_class = vec![Vec::with_capacity(rows); class_count];
        let mut incidence = vec![Vec::with_capacity(4); rows * cols];
        for (i, e) in edges.iter().enumerate() {
            if e.orientation == Orientation::Horizontal {
                horiz_class[e.class].push(i);
            }
            incidence[e.ends[0]].push(i);
            incidence[e.ends[1]].push(i);
        }

        GridGraph {
            topology,
            edges,
            faces,
            horiz_class,
            incidence,
            edge_index,
        }
    }

    #[inline]
    pub fn topology(&self) -> Topology {
        self.topology
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.topology.vertex_count()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    #[inline]
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    #[inline]
    pub fn face(&self, f: FaceId) -> &Face {
        &self.faces[f]
    }

    /// Edges incident to `v`, ascending by edge index.
    #[inline]
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.edge_index.get(&(u.min(v), u.max(v))).copied()
    }

    /// Vertex id at 1-based `(row, col)`.
    pub fn vertex(&self, row: usize, col: usize) -> Result<VertexId> {
        if row == 0 || row > self.topology.vrows {
            return Err(Error::IndexOutOfRange {
                what: "row",
                index: row,
                max: self.topology.vrows,
            });
        }
        if col == 0 || col > self.topology.vcols {
            return Err(Error::IndexOutOfRange {
                what: "column",
                index: col,
                max: self.topology.vcols,
            });
        }
        Ok((row - 1) * self.topology.vcols + (col - 1))
    }

    /// 0-based `(row, col)` of a vertex id.
    #[inline]
    pub fn position(&self, v: VertexId) -> (usize, usize) {
        (v / self.topology.vcols, v % self.topology.vcols)
    }

    /// The vertices of 1-based column `i` in row order. On a torus this is
    /// an induced cycle (the wrap edge closes it); on a rectangle or
    /// cylinder it is an induced path.
    pub fn column_cycle(&self, i: usize) -> Result<Vec<VertexId>> {
        if i == 0 || i > self.topology.vcols {
            return Err(Error::IndexOutOfRange {
                what: "column",
                index: i,
                max: self.topology.vcols,
            });
        }
        Ok((0..self.topology.vrows)
            .map(|r| r * self.topology.vcols + (i - 1))
            .collect())
    }

    /// The vertices of 1-based row `j` in column order. A cycle on the
    /// cylinder and torus, a path on the rectangle.
    pub fn row_cycle(&self, j: usize) -> Result<Vec<VertexId>> {
        if j == 0 || j > self.topology.vrows {
            return Err(Error::IndexOutOfRange {
                what: "row",
                index: j,
                max: self.topology.vrows,
            });
        }
        Ok((0..self.topology.vcols)
            .map(|c| (j - 1) * self.topology.vcols + c)
            .collect())
    }

    /// Number of horizontal edge classes (`vcols` when columns wrap,
    /// `vcols - 1` otherwise).
    pub fn horiz_class_count(&self) -> usize {
        self.horiz_class.len()
    }

    /// The horizontal edge class E_i (1-based): all edges joining column
    /// `i` to column `i+1`, wrap-aware.
    pub fn horiz_class(&self, i: usize) -> Result<&[EdgeId]> {
        if i == 0 || i > self.horiz_class.len() {
            return Err(Error::IndexOutOfRange {
                what: "edge class",
                index: i,
                max: self.horiz_class.len(),
            });
        }
        Ok(&self.horiz_class[i - 1])
    }

    /// Face id of the unit square anchored at 0-based `(row, col)`, if that
    /// square exists.
    pub fn face_at(&self, row: usize, col: usize) -> Option<FaceId> {
        let frows = if self.topology.wraps_rows() {
            self.topology.vrows
        } else {
            self.topology.vrows - 1
        };
        let fcols = if self.topology.wraps_cols() {
            self.topology.vcols
        } else {
            self.topology.vcols - 1
        };
        if row < frows && col < fcols {
            Some(row * fcols + col)
        } else {
            None
        }
    }

    /// JSON document: `{kind, vrows, vcols, edges, faces}` with
    /// deterministic field and element order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": self.topology.kind,
            "vrows": self.topology.vrows,
            "vcols": self.topology.vcols,
            "edges": self.edges.iter().map(|e| [e.ends[0], e.ends[1]]).collect::<Vec<_>>(),
            "faces": self.faces.iter().map(|f| f.edges).collect::<Vec<_>>(),
        })
    }
}
