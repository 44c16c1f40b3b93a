//! Rotation systems and their mixed-radix enumeration coordinates.
//!
//! Vertex `v` of degree `k` has `(k - 1)!` cyclic orders. Keeping the first
//! reference dart fixed, digit `r` of `v` selects the `r`-th permutation (in
//! lexicographic order) of the remaining `k - 1` reference darts. Vertex 0 is
//! the least significant digit, so for cubic graphs bit `v` of the index says
//! whether vertex `v` is reversed.

use num_bigint::BigUint;
use num_traits::One;

use super::{twin, Dart, Graph, GraphError};

/// A point of the embedding space: a cyclic successor map on the darts of
/// every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RotationSystem {
    next: Vec<Dart>,
}

/// Mixed-radix coordinate of a rotation system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RotationIndex(pub u64);

impl From<u64> for RotationIndex {
    fn from(i: u64) -> Self {
        RotationIndex(i)
    }
}

fn factorial(m: usize) -> BigUint {
    (1..=m as u64).fold(BigUint::one(), |acc, i| acc * i)
}

/// `Π_v (deg(v) - 1)!`, the number of rotation systems of `g`.
pub fn rotation_count(g: &Graph) -> BigUint {
    g.degrees()
        .map(|d| factorial(d.saturating_sub(1)))
        .fold(BigUint::one(), |acc, f| acc * f)
}

impl RotationSystem {
    /// The reference rotation (index 0).
    pub fn reference(g: &Graph) -> Self {
        let mut next = vec![0; g.dart_count()];
        for v in 0..g.vertex_count() {
            link_cycle(&mut next, g.darts_at(v));
        }
        RotationSystem { next }
    }

    /// Builds a rotation from explicit per-vertex cyclic orders.
    pub fn from_orders(g: &Graph, orders: &[Vec<Dart>]) -> Result<Self, GraphError> {
        if orders.len() != g.vertex_count() {
            return Err(GraphError::InvalidRotation {
                vertex: orders.len().min(g.vertex_count()),
                reason: format!("expected {} vertex orders", g.vertex_count()),
            });
        }
        let mut next = vec![Dart::MAX; g.dart_count()];
        for (v, order) in orders.iter().enumerate() {
            let mut own: Vec<Dart> = g.darts_at(v).to_vec();
            let mut given = order.clone();
            own.sort_unstable();
            given.sort_unstable();
            if own != given {
                return Err(GraphError::InvalidRotation {
                    vertex: v,
                    reason: "order is not a permutation of the vertex's darts".into(),
                });
            }
            link_cycle(&mut next, order);
        }
        Ok(RotationSystem { next })
    }

    /// Builds a rotation from a successor map, checking that it restricts to
    /// a single cycle on each vertex.
    pub fn from_successors(g: &Graph, next: Vec<Dart>) -> Result<Self, GraphError> {
        if next.len() != g.dart_count() {
            return Err(GraphError::InvalidRotation {
                vertex: 0,
                reason: format!("expected {} successors, got {}", g.dart_count(), next.len()),
            });
        }
        let rot = RotationSystem { next };
        for v in 0..g.vertex_count() {
            let darts = g.darts_at(v);
            let Some(&start) = darts.first() else {
                continue;
            };
            let mut d = start;
            let mut steps = 0;
            loop {
                let n = rot.next[d as usize];
                if n as usize >= g.dart_count() || g.vertex_of(n) != v {
                    return Err(GraphError::InvalidRotation {
                        vertex: v,
                        reason: format!("successor of dart {d} leaves the vertex"),
                    });
                }
                d = n;
                steps += 1;
                if d == start || steps > darts.len() {
                    break;
                }
            }
            if steps != darts.len() || d != start {
                return Err(GraphError::InvalidRotation {
                    vertex: v,
                    reason: "successor map is not a single cycle".into(),
                });
            }
        }
        Ok(rot)
    }

    /// Successor of `d` in the cyclic order around its vertex.
    #[inline]
    pub fn next(&self, d: Dart) -> Dart {
        self.next[d as usize]
    }

    pub fn successors(&self) -> &[Dart] {
        &self.next
    }

    /// Cyclic order at `v`, starting from its first reference dart.
    pub fn order_at(&self, g: &Graph, v: usize) -> Vec<Dart> {
        let darts = g.darts_at(v);
        let Some(&start) = darts.first() else {
            return Vec::new();
        };
        let mut out = Vec::with_capacity(darts.len());
        let mut d = start;
        loop {
            out.push(d);
            d = self.next(d);
            if d == start {
                break;
            }
        }
        out
    }

    /// Reverses every vertex rotation (the mirror-image embedding).
    pub fn mirrored(&self) -> Self {
        let mut next = vec![0; self.next.len()];
        for (d, &n) in self.next.iter().enumerate() {
            next[n as usize] = d as Dart;
        }
        RotationSystem { next }
    }

    /// Face permutation `d -> next(twin(d))`.
    #[inline]
    pub fn face_step(&self, d: Dart) -> Dart {
        self.next[twin(d) as usize]
    }
}

fn link_cycle(next: &mut [Dart], order: &[Dart]) {
    for (i, &d) in order.iter().enumerate() {
        next[d as usize] = order[(i + 1) % order.len()];
    }
}

/// The index space of a graph's rotation systems.
#[derive(Debug, Clone)]
pub struct RotationSpace<'g> {
    graph: &'g Graph,
    radices: Vec<u64>,
    count: Option<u64>,
}

impl<'g> RotationSpace<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let radices: Vec<u64> = graph
            .degrees()
            .map(|d| {
                (1..d.max(1) as u64)
                    .try_fold(1u64, |acc, i| acc.checked_mul(i))
                    .unwrap_or(0)
            })
            .collect();
        let count = if radices.contains(&0) {
            None
        } else {
            radices.iter().try_fold(1u64, |acc, &r| acc.checked_mul(r))
        };
        RotationSpace {
            graph,
            radices,
            count,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    /// Number of rotation systems, if it fits in 64 bits.
    pub fn count(&self) -> Option<u64> {
        self.count
    }

    /// Exact number of rotation systems.
    pub fn count_exact(&self) -> BigUint {
        rotation_count(self.graph)
    }

    /// Per-vertex radix `(deg - 1)!`.
    pub fn radices(&self) -> &[u64] {
        &self.radices
    }

    fn check(&self, idx: RotationIndex) -> Result<(), GraphError> {
        match self.count {
            Some(c) if idx.0 < c => Ok(()),
            _ if self.count.is_none() => Ok(()),
            _ => Err(GraphError::IndexOutOfRange {
                index: idx.0.to_string(),
                count: self.count_exact().to_string(),
            }),
        }
    }

    /// Mixed-radix digits of `idx`, vertex 0 first.
    pub fn digits(&self, idx: RotationIndex) -> Result<Vec<u64>, GraphError> {
        self.check(idx)?;
        let mut rest = idx.0;
        Ok(self
            .radices
            .iter()
            .map(|&r| {
                // Radix 0 marks a factorial beyond u64: the digit takes the rest.
                if r == 0 {
                    return std::mem::take(&mut rest);
                }
                let d = rest % r;
                rest /= r;
                d
            })
            .collect())
    }

    /// Rotation system with coordinate `idx`.
    pub fn decode(&self, idx: RotationIndex) -> Result<RotationSystem, GraphError> {
        let digits = self.digits(idx)?;
        let mut next = vec![0; self.graph.dart_count()];
        let mut order = Vec::new();
        for (v, &digit) in digits.iter().enumerate() {
            vertex_order(self.graph.darts_at(v), digit, &mut order);
            if !order.is_empty() {
                link_cycle(&mut next, &order);
            }
        }
        Ok(RotationSystem { next })
    }

    /// Coordinate of `rot`; inverse of [`RotationSpace::decode`]. Requires
    /// the space to fit in 64 bits.
    pub fn encode(&self, rot: &RotationSystem) -> RotationIndex {
        let mut idx = 0u64;
        for v in (0..self.graph.vertex_count()).rev() {
            let digit = vertex_digit(self.graph.darts_at(v), &rot.order_at(self.graph, v));
            idx = idx * self.radices[v] + digit;
        }
        RotationIndex(idx)
    }
}

/// Writes into `out` the cyclic order selected by `digit` (Lehmer code over
/// the reference darts after the first).
pub(crate) fn vertex_order(reference: &[Dart], digit: u64, out: &mut Vec<Dart>) {
    out.clear();
    let Some((&first, rest)) = reference.split_first() else {
        return;
    };
    out.push(first);
    let mut pool: Vec<Dart> = rest.to_vec();
    let mut r = digit;
    let m = pool.len();
    for i in 0..m {
        let f = small_factorial(m - 1 - i);
        let q = (r / f) as usize;
        r %= f;
        out.push(pool.remove(q));
    }
}

fn vertex_digit(reference: &[Dart], order: &[Dart]) -> u64 {
    let mut pool: Vec<Dart> = reference.iter().skip(1).copied().collect();
    let m = pool.len();
    let mut digit = 0u64;
    for (i, d) in order.iter().skip(1).enumerate() {
        let q = pool
            .iter()
            .position(|p| p == d)
            .expect("dart belongs to vertex");
        pool.remove(q);
        digit += q as u64 * small_factorial(m - 1 - i);
    }
    digit
}

fn small_factorial(m: usize) -> u64 {
    (1..=m as u64).product()
}

/// Decodes `idx` on `g`.
pub fn decode_rotation(g: &Graph, idx: RotationIndex) -> Result<RotationSystem, GraphError> {
    RotationSpace::new(g).decode(idx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generalized_petersen, parse_graph6};
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn k4() -> Graph {
        parse_graph6("C~").unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(rotation_count(&k4()), BigUint::from(16u32));
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(rotation_count(&c5), BigUint::one());
        let g82 = generalized_petersen(8, 2).unwrap();
        assert_eq!(rotation_count(&g82), BigUint::from(65536u32));
        assert_eq!(RotationSpace::new(&g82).count(), Some(65536));
        let k5 = parse_graph6("D~{").unwrap();
        assert_eq!(rotation_count(&k5), BigUint::from(6u32.pow(5)));
    }

    #[test]
    fn index_zero_is_reference() {
        let g = generalized_petersen(5, 2).unwrap();
        let space = RotationSpace::new(&g);
        assert_eq!(
            space.decode(RotationIndex(0)).unwrap(),
            RotationSystem::reference(&g)
        );
    }

    #[test]
    fn all_ones_reverses_every_cubic_vertex() {
        let g = generalized_petersen(5, 2).unwrap();
        let space = RotationSpace::new(&g);
        let rot = space.decode(RotationIndex((1 << 10) - 1)).unwrap();
        assert_eq!(rot, RotationSystem::reference(&g).mirrored());
    }

    #[test]
    fn out_of_range() {
        let g = k4();
        assert!(matches!(
            decode_rotation(&g, RotationIndex(16)),
            Err(GraphError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn decode_is_injective_on_small_spaces() {
        // K5: 6^5 = 7776 <= 2^12 rotations of degree-4 vertices.
        for g in [
            k4(),
            parse_graph6("D~{").unwrap(),
            generalized_petersen(5, 2).unwrap(),
        ] {
            let space = RotationSpace::new(&g);
            let mut seen = HashSet::new();
            for i in 0..space.count().unwrap() {
                let rot = space.decode(RotationIndex(i)).unwrap();
                assert!(RotationSystem::from_successors(&g, rot.successors().to_vec()).is_ok());
                assert!(seen.insert(rot));
            }
        }
    }

    #[test]
    fn invalid_successors_rejected() {
        let g = k4();
        let mut next = RotationSystem::reference(&g).successors().to_vec();
        // Point a dart at itself: splits the vertex cycle.
        let d = g.darts_at(0)[0];
        next[d as usize] = d;
        assert!(RotationSystem::from_successors(&g, next).is_err());
    }

    #[test]
    fn from_orders_checks_dart_sets() {
        let g = k4();
        let mut orders: Vec<Vec<Dart>> = (0..4).map(|v| g.darts_at(v).to_vec()).collect();
        assert_eq!(
            RotationSystem::from_orders(&g, &orders).unwrap(),
            RotationSystem::reference(&g)
        );
        orders[0][0] = orders[1][0];
        assert!(RotationSystem::from_orders(&g, &orders).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn encode_decode_round_trip(idx in 0u64..(6u64.pow(5))) {
            let g = parse_graph6("D~{").unwrap();
            let space = RotationSpace::new(&g);
            let rot = space.decode(RotationIndex(idx)).unwrap();
            prop_assert_eq!(space.encode(&rot), RotationIndex(idx));
        }

        #[test]
        fn random_rotation_round_trip(seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let g = parse_graph6("D~{").unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let orders: Vec<Vec<Dart>> = (0..g.vertex_count())
                .map(|v| {
                    let mut o = g.darts_at(v).to_vec();
                    o.shuffle(&mut rng);
                    o
                })
                .collect();
            let rot = RotationSystem::from_orders(&g, &orders).unwrap();
            let space = RotationSpace::new(&g);
            prop_assert_eq!(space.decode(space.encode(&rot)).unwrap(), rot);
        }
    }
}
