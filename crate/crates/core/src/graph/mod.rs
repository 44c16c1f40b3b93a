//! Connected multigraphs stored as dart (half-edge) systems.
//!
//! Edge `e` owns darts `2e` and `2e + 1`; the twin of a dart is obtained by
//! flipping its lowest bit. Every vertex keeps its darts in a fixed reference
//! rotation: ascending neighbour order, with parallel edges and the two ends
//! of a loop ordered by insertion.

mod catalog;
mod graph6;
mod petersen;
mod rotation;

pub use catalog::{named_graph, NamedGraph};
pub use graph6::{parse_graph6, write_graph6};
pub use petersen::generalized_petersen;
pub(crate) use rotation::vertex_order;
pub use rotation::{decode_rotation, rotation_count, RotationIndex, RotationSpace, RotationSystem};

use std::collections::VecDeque;

use thiserror::Error;

/// Dart identifier, an index in `[0, 2E)`.
pub type Dart = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("graph has no vertices")]
    Empty,
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("invalid generalized Petersen parameters G({n}, {k}): need n >= 3 and 1 <= k < n/2")]
    PetersenDomain { n: usize, k: usize },
    #[error("unknown named graph {0:?}")]
    UnknownName(String),
    #[error("rotation index {index} out of range (rotation count {count})")]
    IndexOutOfRange { index: String, count: String },
    #[error("rotation system invalid at vertex {vertex}: {reason}")]
    InvalidRotation { vertex: usize, reason: String },
    #[error("graph6 writer supports simple graphs only")]
    NotSimple,
}

/// An immutable connected multigraph with a reference rotation at every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    dart_vertex: Vec<u32>,
    vertex_darts: Vec<Vec<Dart>>,
}

impl Graph {
    /// Builds a connected multigraph from an edge list. Loops and parallel
    /// edges are allowed; edge `i` of the list owns darts `2i` (at `u`) and
    /// `2i + 1` (at `v`).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut dart_vertex = Vec::with_capacity(2 * edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            dart_vertex.push(u as u32);
            dart_vertex.push(v as u32);
        }
        let mut vertex_darts: Vec<Vec<Dart>> = vec![Vec::new(); n];
        for (d, &v) in dart_vertex.iter().enumerate() {
            vertex_darts[v as usize].push(d as Dart);
        }
        // Reference rotation: by neighbour, then by dart id (insertion order).
        for darts in &mut vertex_darts {
            darts.sort_by_key(|&d| (dart_vertex[(d ^ 1) as usize], d));
        }
        let g = Graph {
            dart_vertex,
            vertex_darts,
        };
        let components = g.component_count();
        if components != 1 {
            return Err(GraphError::Disconnected { components });
        }
        g.check_invariants();
        Ok(g)
    }

    fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut components = 0;
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                for &d in &self.vertex_darts[v] {
                    let w = self.dart_vertex[twin(d) as usize] as usize;
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        components
    }

    fn check_invariants(&self) {
        let degree_sum: usize = self.vertex_darts.iter().map(Vec::len).sum();
        assert_eq!(degree_sum, self.dart_count(), "degree sum must equal 2E");
        for d in 0..self.dart_count() as Dart {
            assert_ne!(twin(d), d);
            assert_eq!(twin(twin(d)), d);
        }
        if self.vertex_count() > 1 {
            assert!(self.vertex_darts.iter().all(|ds| !ds.is_empty()));
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_darts.len()
    }

    pub fn edge_count(&self) -> usize {
        self.dart_vertex.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.dart_vertex.len()
    }

    /// Vertex owning dart `d`.
    pub fn vertex_of(&self, d: Dart) -> usize {
        self.dart_vertex[d as usize] as usize
    }

    /// The opposite dart of the same edge.
    pub fn twin(&self, d: Dart) -> Dart {
        twin(d)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.vertex_darts[v].len()
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertex_darts.iter().map(Vec::len)
    }

    /// Darts at `v` in reference rotation order.
    pub fn darts_at(&self, v: usize) -> &[Dart] {
        &self.vertex_darts[v]
    }

    /// Edges as `(tail, head)` pairs, in insertion order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.dart_vertex
            .chunks_exact(2)
            .map(|p| (p[0] as usize, p[1] as usize))
    }

    /// Neighbours of `v` in reference rotation order (with repetition for
    /// parallel edges and loops).
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.vertex_darts[v]
            .iter()
            .map(|&d| self.dart_vertex[twin(d) as usize] as usize)
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.degrees().all(|d| d == k)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        (0..self.vertex_count()).all(|v| {
            let ns: Vec<usize> = self.neighbors(v).collect();
            ns.iter().all(|&w| w != v) && ns.windows(2).all(|p| p[0] != p[1])
        })
    }

    /// Length of a shortest cycle, `None` for forests. Loops count as
    /// 1-cycles and parallel edges as 2-cycles.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for v in 0..self.vertex_count() {
            let mut ns: Vec<usize> = self.neighbors(v).collect();
            if ns.contains(&v) {
                return Some(1);
            }
            let len = ns.len();
            ns.dedup();
            if ns.len() != len {
                best = Some(2);
            }
        }
        if best.is_some() {
            return best;
        }
        let n = self.vertex_count();
        for root in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut via = vec![Dart::MAX; n];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &d in &self.vertex_darts[v] {
                    if via[v] != Dart::MAX && d == twin(via[v]) {
                        continue;
                    }
                    let w = self.vertex_of(twin(d));
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        via[w] = d;
                        queue.push_back(w);
                    } else {
                        let cycle = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(cycle, |b| b.min(cycle)));
                    }
                }
            }
        }
        best
    }

    /// Two-colourability check by BFS.
    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut colour = vec![u8::MAX; n];
        colour[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if colour[w] == u8::MAX {
                    colour[w] = 1 - colour[v];
                    queue.push_back(w);
                } else if colour[w] == colour[v] {
                    return false;
                }
            }
        }
        true
    }
}

#[inline]
pub(crate) fn twin(d: Dart) -> Dart {
    d ^ 1
}
