//! Hand-transcribed cubic graphs with known non-real-rooted genus polynomials.

use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    /// 18-vertex cubic graph with a cone-violating root pair.
    G18,
    /// 20-vertex cubic graph with a cone-violating root pair.
    G20,
    /// 22-vertex cubic graph with a cone-violating root pair.
    G22,
    /// 10-vertex cubic graph with non-real genus roots.
    NonReal10,
    /// 16-vertex cubic graph with non-real genus roots.
    NonReal16,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 5] = [
        NamedGraph::G18,
        NamedGraph::G20,
        NamedGraph::G22,
        NamedGraph::NonReal10,
        NamedGraph::NonReal16,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::G18 => "G18",
            NamedGraph::G20 => "G20",
            NamedGraph::G22 => "G22",
            NamedGraph::NonReal10 => "NR10",
            NamedGraph::NonReal16 => "NR16",
        }
    }

    pub fn order(self) -> usize {
        match self {
            NamedGraph::G18 => 18,
            NamedGraph::G20 => 20,
            NamedGraph::G22 => 22,
            NamedGraph::NonReal10 => 10,
            NamedGraph::NonReal16 => 16,
        }
    }

    fn edges(self) -> &'static [(usize, usize)] {
        match self {
            NamedGraph::G18 => G18_EDGES,
            NamedGraph::G20 => G20_EDGES,
            NamedGraph::G22 => G22_EDGES,
            NamedGraph::NonReal10 => NR10_EDGES,
            NamedGraph::NonReal16 => NR16_EDGES,
        }
    }

    pub fn build(self) -> Graph {
        let g = Graph::from_edges(self.order(), self.edges())
            .unwrap_or_else(|e| panic!("{} transcription invalid: {e}", self.name()));
        assert!(
            g.is_cubic() && g.is_simple(),
            "{} must be simple cubic",
            self.name()
        );
        assert_eq!(g.edge_count(), 3 * self.order() / 2);
        g
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedGraph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedGraph::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| GraphError::UnknownName(s.to_string()))
    }
}

/// Looks up a catalog graph by name (`G18`, `G20`, `G22`, `NR10`, `NR16`,
/// case-insensitive).
pub fn named_graph(name: &str) -> Result<Graph, GraphError> {
    name.parse::<NamedGraph>().map(NamedGraph::build)
}

#[rustfmt::skip]
const G18_EDGES: &[(usize, usize)] = &[
    (0, 1), (1, 4), (4, 3), (3, 2), (2, 0), (4, 5), (5, 6), (6, 7), (7, 3),
    (2, 8), (8, 9), (9, 7), (6, 11), (11, 10), (10, 9), (8, 12), (12, 10),
    (14, 13), (13, 1), (0, 14), (14, 17), (17, 12), (17, 16), (16, 11),
    (16, 15), (15, 5), (15, 13),
];

// Drawn with labels 0..=14 and 17..=21; the last five are renumbered 15..=19.
#[rustfmt::skip]
const G20_EDGES: &[(usize, usize)] = &[
    (0, 1), (1, 3), (3, 4), (4, 2), (2, 0), (2, 5), (5, 7), (7, 6), (6, 4),
    (3, 8), (8, 9), (9, 6), (1, 10), (10, 11), (11, 8), (11, 12), (12, 13),
    (13, 9), (10, 14), (14, 12), (15, 0), (5, 16), (17, 14), (17, 15),
    (15, 16), (7, 18), (16, 18), (17, 19), (19, 13), (19, 18),
];

#[rustfmt::skip]
const G22_EDGES: &[(usize, usize)] = &[
    (0, 1), (1, 3), (3, 4), (4, 2), (2, 0), (2, 5), (5, 7), (7, 6), (6, 4),
    (3, 8), (8, 9), (9, 6), (1, 10), (10, 11), (11, 8), (11, 12), (12, 13),
    (13, 9), (10, 14), (14, 12), (15, 0), (15, 16), (16, 5), (17, 15),
    (16, 18), (19, 14), (19, 17), (17, 18), (7, 20), (18, 20), (19, 21),
    (21, 13), (21, 20),
];

#[rustfmt::skip]
const NR10_EDGES: &[(usize, usize)] = &[
    (1, 0), (0, 4), (4, 3), (3, 2), (2, 1), (1, 6), (6, 5), (5, 0), (5, 9),
    (9, 4), (9, 8), (8, 3), (8, 7), (7, 2), (7, 6),
];

#[rustfmt::skip]
const NR16_EDGES: &[(usize, usize)] = &[
    (2, 0), (0, 1), (1, 7), (7, 6), (6, 5), (5, 4), (4, 3), (3, 2), (0, 8),
    (8, 15), (15, 2), (14, 15), (14, 3), (14, 13), (13, 4), (12, 13),
    (12, 5), (12, 11), (11, 6), (11, 10), (10, 7), (10, 9), (9, 1), (9, 8),
];
