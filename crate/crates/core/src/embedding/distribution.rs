use std::fmt;
use std::ops::Range;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::graph::{vertex_order, Dart, Graph, RotationIndex, RotationSpace};
use crate::poly::IntPoly;

use super::faces::euler_genus;
use super::EmbeddingError;

/// Default cap on the number of rotation systems enumerated without `force`.
pub const DEFAULT_BUDGET: u64 = 1 << 26;

const CHUNK: u64 = 1 << 14;

/// Embedding counts `g_k` by genus `k`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GenusDistribution {
    counts: Vec<u64>,
}

impl GenusDistribution {
    pub fn from_counts(mut counts: Vec<u64>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        GenusDistribution { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `g_k`, zero beyond the support.
    pub fn get(&self, k: usize) -> u64 {
        self.counts.get(k).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Smallest genus with a nonzero count.
    pub fn min_genus(&self) -> Option<usize> {
        self.counts.iter().position(|&c| c != 0)
    }

    /// Largest genus with a nonzero count.
    pub fn max_genus(&self) -> Option<usize> {
        self.counts.len().checked_sub(1)
    }

    /// Elementwise sum of two partial distributions.
    pub fn merge(&self, other: &Self) -> Result<Self, EmbeddingError> {
        Ok(Self::from_counts(add_counts(
            self.counts.clone(),
            &other.counts,
        )?))
    }

    /// The genus polynomial with these coefficients.
    pub fn to_polynomial(&self) -> IntPoly {
        IntPoly::new(self.counts.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl fmt::Display for GenusDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn add_counts(mut acc: Vec<u64>, other: &[u64]) -> Result<Vec<u64>, EmbeddingError> {
    if acc.len() < other.len() {
        acc.resize(other.len(), 0);
    }
    for (a, &b) in acc.iter_mut().zip(other) {
        *a = a.checked_add(b).ok_or(EmbeddingError::CountOverflow)?;
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Refuse spaces larger than this unless `force` is set.
    pub budget: u64,
    pub force: bool,
    /// Worker threads; `None` uses the ambient rayon pool, `Some(1)` runs
    /// on the calling thread.
    pub workers: Option<usize>,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            budget: DEFAULT_BUDGET,
            force: false,
            workers: None,
        }
    }
}

/// Walks a contiguous index range, updating only the vertices whose digit
/// changes between consecutive indices, and retracing every face each step.
struct Enumerator<'g> {
    graph: &'g Graph,
    radices: &'g [u64],
    digits: Vec<u64>,
    /// Per-vertex permutation of reference positions `1..deg` currently in use.
    perms: Vec<Vec<u8>>,
    next: Vec<Dart>,
    stamp: Vec<u32>,
    epoch: u32,
    max_genus: usize,
}

impl<'g> Enumerator<'g> {
    fn new(space: &'g RotationSpace<'g>, start: RotationIndex) -> Result<Self, EmbeddingError> {
        let graph = space.graph();
        let digits = space.digits(start)?;
        let mut e = Enumerator {
            graph,
            radices: space.radices(),
            perms: Vec::with_capacity(graph.vertex_count()),
            next: vec![0; graph.dart_count()],
            stamp: vec![0; graph.dart_count()],
            epoch: 0,
            max_genus: (graph.edge_count() + 1).saturating_sub(graph.vertex_count()) / 2,
            digits,
        };
        let mut order = Vec::new();
        for v in 0..graph.vertex_count() {
            let reference = graph.darts_at(v);
            vertex_order(reference, e.digits[v], &mut order);
            let perm: Vec<u8> = order
                .iter()
                .skip(1)
                .map(|d| reference.iter().position(|r| r == d).unwrap() as u8)
                .collect();
            e.perms.push(perm);
            e.relink(v);
        }
        Ok(e)
    }

    fn relink(&mut self, v: usize) {
        let reference = self.graph.darts_at(v);
        let Some(&first) = reference.first() else {
            return;
        };
        let mut prev = first;
        for &p in &self.perms[v] {
            let d = reference[p as usize];
            self.next[prev as usize] = d;
            prev = d;
        }
        self.next[prev as usize] = first;
    }

    /// Moves to the next index in mixed-radix order.
    fn advance(&mut self) {
        for v in 0..self.digits.len() {
            if self.radices[v] == 1 {
                continue;
            }
            if self.digits[v] + 1 < self.radices[v] {
                self.digits[v] += 1;
                next_permutation(&mut self.perms[v]);
                self.relink(v);
                return;
            }
            self.digits[v] = 0;
            self.perms[v].sort_unstable();
            self.relink(v);
        }
    }

    fn face_count(&mut self) -> usize {
        if self.next.is_empty() {
            return 1;
        }
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.stamp.fill(0);
            self.epoch = 1;
        }
        let epoch = self.epoch;
        let mut faces = 0;
        for start in 0..self.next.len() {
            if self.stamp[start] == epoch {
                continue;
            }
            faces += 1;
            let mut d = start;
            loop {
                self.stamp[d] = epoch;
                d = self.next[d ^ 1] as usize;
                if d == start {
                    break;
                }
            }
        }
        faces
    }

    fn genus(&mut self) -> Result<usize, EmbeddingError> {
        let faces = self.face_count();
        let k = euler_genus(self.graph.vertex_count(), self.graph.edge_count(), faces)?;
        debug_assert!(k <= self.max_genus);
        Ok(k)
    }
}

/// Lexicographic successor; the caller guarantees one exists.
fn next_permutation(p: &mut [u8]) {
    let i = (0..p.len().saturating_sub(1))
        .rev()
        .find(|&i| p[i] < p[i + 1])
        .expect("permutation has a successor");
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
}

fn count_range(space: &RotationSpace<'_>, range: Range<u64>) -> Result<Vec<u64>, EmbeddingError> {
    let g = space.graph();
    let mut counts = vec![0u64; (g.edge_count() + 1).saturating_sub(g.vertex_count()) / 2 + 1];
    if range.is_empty() {
        return Ok(counts);
    }
    let mut e = Enumerator::new(space, RotationIndex(range.start))?;
    for i in range.clone() {
        counts[e.genus()?] += 1;
        if i + 1 < range.end {
            e.advance();
        }
    }
    Ok(counts)
}

fn checked_count(space: &RotationSpace<'_>) -> Result<u64, EmbeddingError> {
    space
        .count()
        .ok_or_else(|| EmbeddingError::IndexSpaceTooLarge {
            required: space.count_exact().to_string(),
        })
}

/// Distribution restricted to rotation indices `[lo, hi)`.
pub fn distribution_partial(
    g: &Graph,
    lo: RotationIndex,
    hi: RotationIndex,
) -> Result<GenusDistribution, EmbeddingError> {
    let space = RotationSpace::new(g);
    let count = checked_count(&space)?;
    if lo > hi || hi.0 > count {
        return Err(EmbeddingError::RangeOutOfBounds {
            lo: lo.0,
            hi: hi.0,
            count,
        });
    }
    Ok(GenusDistribution::from_counts(count_range(
        &space,
        lo.0..hi.0,
    )?))
}

/// Exact genus distribution with default options (budget `2^26`, ambient
/// thread pool).
pub fn genus_distribution(g: &Graph) -> Result<GenusDistribution, EmbeddingError> {
    genus_distribution_with(g, &EnumerationOptions::default())
}

/// Exact genus distribution over all rotation systems, split into disjoint
/// index chunks and merged by vector addition.
pub fn genus_distribution_with(
    g: &Graph,
    opts: &EnumerationOptions,
) -> Result<GenusDistribution, EmbeddingError> {
    let space = RotationSpace::new(g);
    let count = checked_count(&space)?;
    if count > opts.budget && !opts.force {
        return Err(EmbeddingError::BudgetExceeded {
            required: count.to_string(),
            budget: opts.budget,
        });
    }
    let run = || -> Result<Vec<u64>, EmbeddingError> {
        let chunks = count.div_ceil(CHUNK);
        (0..chunks)
            .into_par_iter()
            .map(|c| count_range(&space, c * CHUNK..((c + 1) * CHUNK).min(count)))
            .try_reduce(Vec::new, |a, b| add_counts(a, &b))
    };
    let counts = match opts.workers {
        Some(1) => count_range(&space, 0..count)?,
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| EmbeddingError::ThreadPool(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    Ok(GenusDistribution::from_counts(counts))
}
