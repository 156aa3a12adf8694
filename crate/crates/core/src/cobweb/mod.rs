//! Cobweb posets: the graded posets in which level `s` holds `F_s`
//! vertices `(j, s)` and every vertex lies below every vertex of every
//! higher level. Their Hasse diagrams are chains of complete bipartite
//! layers ("di-bicliques").
//!
//! A [`CobwebTruncation`] keeps levels `0..=L` and numbers the vertices
//! level-major, column-ascending. That numbering is the chain `X` of the
//! dimension-2 realizer, so `chain_x` is always the identity permutation.

mod sequence;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digraph::{
    chain_intersection, hasse_from_relation, Chain, Digraph, DigraphError, Relation,
};

pub use sequence::{parse_sequence_values, LevelSequence, SequenceSpec};

/// Default cap on the number of vertices in a truncation.
pub const DEFAULT_VERTEX_BUDGET: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CobwebError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("sequence defines only {len} levels, level {level} requested")]
    SequenceExhausted { level: usize, len: usize },
    #[error("level size overflows at level {level}")]
    Overflow { level: usize },
    #[error("truncation needs more than {budget} vertices")]
    BudgetExceeded { budget: usize },
    #[error("vertex {0} is not in the truncation")]
    InvalidVertex(CobwebVertex),
    #[error("level {level} out of range (max level {max_level})")]
    LevelOutOfRange { level: usize, max_level: usize },
    #[error("arc ({0}, {1}) is not a cobweb arc")]
    ForeignArc(usize, usize),
    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}

pub type Result<T, E = CobwebError> = std::result::Result<T, E>;

/// The element `(j, s)`: column `j ≥ 1` on level `s ≥ 0`. Serializes as the
/// pair `[j, s]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct CobwebVertex {
    pub column: usize,
    pub level: usize,
}

impl CobwebVertex {
    pub const fn new(column: usize, level: usize) -> Self {
        CobwebVertex { column, level }
    }
}

impl From<(usize, usize)> for CobwebVertex {
    fn from((column, level): (usize, usize)) -> Self {
        CobwebVertex { column, level }
    }
}

impl From<CobwebVertex> for (usize, usize) {
    fn from(v: CobwebVertex) -> Self {
        (v.column, v.level)
    }
}

impl fmt::Display for CobwebVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.column, self.level)
    }
}

/// Levels `0..=max_level` of a cobweb poset with dense vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CobwebTruncation {
    sequence: LevelSequence,
    max_level: usize,
    // offsets[s]..offsets[s + 1] are the indices of level s.
    offsets: Vec<usize>,
}

impl CobwebTruncation {
    pub fn new(sequence: LevelSequence, max_level: usize) -> Result<Self> {
        Self::with_budget(sequence, max_level, DEFAULT_VERTEX_BUDGET)
    }

    pub fn with_budget(sequence: LevelSequence, max_level: usize, budget: usize) -> Result<Self> {
        let mut offsets = Vec::with_capacity(max_level.saturating_add(2).min(budget + 2));
        offsets.push(0usize);
        let mut total = 0usize;
        for level in 0..=max_level {
            let size = sequence.size(level)?;
            if size == 0 {
                return Err(CobwebError::InvalidSequence(format!(
                    "level {level} has size 0"
                )));
            }
            total = usize::try_from(size)
                .ok()
                .and_then(|size| total.checked_add(size))
                .filter(|&t| t <= budget)
                .ok_or(CobwebError::BudgetExceeded { budget })?;
            offsets.push(total);
        }
        Ok(CobwebTruncation {
            sequence,
            max_level,
            offsets,
        })
    }

    pub fn sequence(&self) -> &LevelSequence {
        &self.sequence
    }

    pub fn max_level(&self) -> usize {
        self.max_level
    }

    pub fn vertex_count(&self) -> usize {
        *self.offsets.last().expect("at least one level")
    }

    /// `F_level` for a level inside the truncation.
    pub fn level_size(&self, level: usize) -> usize {
        self.offsets[level + 1] - self.offsets[level]
    }

    /// Dense indices of the vertices on `level`.
    pub fn level_range(&self, level: usize) -> Range<usize> {
        self.offsets[level]..self.offsets[level + 1]
    }

    pub fn contains(&self, v: CobwebVertex) -> bool {
        v.level <= self.max_level && v.column >= 1 && v.column <= self.level_size(v.level)
    }

    pub fn index_of(&self, v: CobwebVertex) -> Result<usize> {
        if !self.contains(v) {
            return Err(CobwebError::InvalidVertex(v));
        }
        Ok(self.offsets[v.level] + v.column - 1)
    }

    /// The vertex with dense index `index`; panics when out of range.
    pub fn vertex(&self, index: usize) -> CobwebVertex {
        assert!(
            index < self.vertex_count(),
            "vertex index {index} out of range"
        );
        let level = self.offsets.partition_point(|&o| o <= index) - 1;
        CobwebVertex::new(index - self.offsets[level] + 1, level)
    }

    /// All vertices in index order.
    pub fn vertices(&self) -> impl Iterator<Item = CobwebVertex> + '_ {
        (0..=self.max_level)
            .flat_map(move |s| (1..=self.level_size(s)).map(move |j| CobwebVertex::new(j, s)))
    }

    /// Arcs of the complete bipartite block from `level` to `level + 1`.
    fn block_arcs(&self, level: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let upper = self.level_range(level + 1);
        self.level_range(level)
            .flat_map(move |u| upper.clone().map(move |v| (u, v)))
    }

    fn is_cobweb_arc(&self, (u, v): (usize, usize)) -> bool {
        let n = self.vertex_count();
        u < n && v < n && self.vertex(v).level == self.vertex(u).level + 1
    }
}

/// The Hasse diagram: every vertex of level `p` points at every vertex of
/// level `p + 1`.
pub fn cobweb_edges(t: &CobwebTruncation) -> Digraph {
    let arcs = (0..t.max_level()).flat_map(|p| t.block_arcs(p));
    Digraph::from_arcs(t.vertex_count(), arcs).expect("cobweb arcs are distinct forward pairs")
}

/// `(s, t) ≤ (u, v)` iff `t < v`, or `t = v` and `s = u`.
pub fn poset_leq(t: &CobwebTruncation, x: CobwebVertex, y: CobwebVertex) -> Result<bool> {
    for v in [x, y] {
        if !t.contains(v) {
            return Err(CobwebError::InvalidVertex(v));
        }
    }
    Ok(leq(x, y))
}

fn leq(x: CobwebVertex, y: CobwebVertex) -> bool {
    x.level < y.level || (x.level == y.level && x.column == y.column)
}

/// The partial order as a relation over dense indices.
pub fn order_relation(t: &CobwebTruncation) -> Relation {
    Relation::from_fn(t.vertex_count(), |a, b| leq(t.vertex(a), t.vertex(b)))
}

/// Level-ascending, column-ascending. Coincides with index order.
pub fn chain_x(t: &CobwebTruncation) -> Chain {
    Chain::identity(t.vertex_count())
}

/// Level-ascending, column-descending.
pub fn chain_y(t: &CobwebTruncation) -> Chain {
    let order = (0..=t.max_level())
        .flat_map(|s| t.level_range(s).rev())
        .collect();
    Chain::new(order).expect("levels partition the index range")
}

/// A verified dimension-2 realizer of a cobweb truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realizer {
    pub x: Chain,
    pub y: Chain,
    pub relation: Relation,
}

/// Returns `(X, Y, X ∩ Y)` after checking that the intersection equals the
/// cobweb order on every pair and that its Hasse diagram is the cobweb edge
/// set.
pub fn realizer(t: &CobwebTruncation) -> Result<Realizer> {
    let x = chain_x(t);
    let y = chain_y(t);
    let relation = chain_intersection(&x, &y)?;

    let n = t.vertex_count();
    for a in 0..n {
        for b in 0..n {
            let (va, vb) = (t.vertex(a), t.vertex(b));
            if relation.leq(a, b) != leq(va, vb) {
                return Err(CobwebError::ConsistencyFailure(format!(
                    "X ∩ Y disagrees with the cobweb order at ({va}) ≤ ({vb})"
                )));
            }
        }
    }
    if hasse_from_relation(&relation)? != cobweb_edges(t) {
        return Err(CobwebError::ConsistencyFailure(
            "Hasse diagram of X ∩ Y differs from the cobweb edges".into(),
        ));
    }
    Ok(Realizer { x, y, relation })
}

/// The complete bipartite block between levels `p` and `p + 1`, over the
/// truncation's full vertex set.
pub fn di_biclique(t: &CobwebTruncation, p: usize) -> Result<Digraph> {
    if p >= t.max_level() {
        return Err(CobwebError::LevelOutOfRange {
            level: p,
            max_level: t.max_level(),
        });
    }
    Ok(Digraph::from_arcs(t.vertex_count(), t.block_arcs(p))?)
}

/// The cobweb edges minus `removed`: an arbitrary chain of relations
/// `R_p ⊆ Φ_p × Φ_{p+1}`.
pub fn delete_arcs(t: &CobwebTruncation, removed: &BTreeSet<(usize, usize)>) -> Result<Digraph> {
    if let Some(&(u, v)) = removed.iter().find(|&&a| !t.is_cobweb_arc(a)) {
        return Err(CobwebError::ForeignArc(u, v));
    }
    let kept = (0..t.max_level())
        .flat_map(|p| t.block_arcs(p))
        .filter(|a| !removed.contains(a));
    Ok(Digraph::from_arcs(t.vertex_count(), kept)?)
}
