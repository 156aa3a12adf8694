//! Finite digraphs over dense vertex indices `0..n`, and the machinery for
//! deciding whether a DAG is the Hasse diagram of a dimension-2 poset.
//!
//! Vertex identity here is always a plain `usize`. Callers that carry richer
//! labels (cobweb `(j, s)` pairs, for instance) keep their own mapping.

mod chain;
mod extensions;
mod odag;
mod relation;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::bitmatrix::BitMatrix;

pub use chain::{chain_intersection, conjugate_chain, is_admissible, is_linear_extension, Chain};
pub use extensions::{enumerate_linear_extensions, LinearExtensions, DEFAULT_SEARCH_BOUND};
pub use odag::{is_odag, OdagFailure, OdagResult};
pub use relation::{hasse_from_relation, Relation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("digraph contains a directed cycle")]
    NotAcyclic,
    #[error("length mismatch: expected {expected} vertices, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("chain is not a permutation of 0..{0}")]
    InvalidChain(usize),
    #[error("chain is not a linear extension of the digraph")]
    NotLinearExtension,
    #[error("conjugate relation is not a total order (chain is not admissible)")]
    NotTotalOrder,
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("{vertex_count} vertices exceed the exhaustive search bound of {bound}")]
    SearchBoundExceeded { vertex_count: usize, bound: usize },
    #[error("consistency failure: {0}")]
    ConsistencyFailure(String),
}

pub type Result<T, E = DigraphError> = std::result::Result<T, E>;

/// A finite digraph without loops or multiple arcs. Acyclicity is not
/// assumed; use [`is_dag`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Digraph {
    vertex_count: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl Digraph {
    /// A digraph on `vertex_count` vertices with no arcs.
    pub fn empty(vertex_count: usize) -> Self {
        Digraph {
            vertex_count,
            arcs: BTreeSet::new(),
        }
    }

    pub fn from_arcs<I>(vertex_count: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Digraph::empty(vertex_count);
        for (u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    /// Inserts `(u, v)`, rejecting loops, out-of-range endpoints and
    /// duplicates.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.vertex_count {
                return Err(DigraphError::VertexOutOfRange {
                    vertex: w,
                    vertex_count: self.vertex_count,
                });
            }
        }
        if u == v {
            return Err(DigraphError::Loop(u));
        }
        if !self.arcs.insert((u, v)) {
            return Err(DigraphError::DuplicateArc(u, v));
        }
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[inline]
    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arcs in ascending `(u, v)` order.
    pub fn arcs(&self) -> impl ExactSizeIterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn arc_set(&self) -> &BTreeSet<(usize, usize)> {
        &self.arcs
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    /// Direct successors of `u`, ascending.
    pub fn successors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.arcs.range((u, 0)..(u + 1, 0)).map(|&(_, v)| v)
    }

    /// The digraph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        let chain = Chain::new(perm.to_vec())?;
        if chain.len() != self.vertex_count {
            return Err(DigraphError::LengthMismatch {
                expected: self.vertex_count,
                found: chain.len(),
            });
        }
        Digraph::from_arcs(
            self.vertex_count,
            self.arcs().map(|(u, v)| (perm[u], perm[v])),
        )
    }

    pub(crate) fn adjacency(&self) -> BitMatrix {
        let mut m = BitMatrix::new(self.vertex_count);
        for (u, v) in self.arcs() {
            m.set(u, v, true);
        }
        m
    }
}

/// The path predicate: `reaches(u, v)` iff a directed path of one or more
/// arcs leads from `u` to `v`.
#[derive(Clone, PartialEq, Eq)]
pub struct ReachMatrix {
    reach: BitMatrix,
}

impl ReachMatrix {
    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.reach.size()
    }

    #[inline]
    pub fn reaches(&self, u: usize, v: usize) -> bool {
        self.reach.get(u, v)
    }

    /// Neither vertex reaches the other.
    #[inline]
    pub fn incomparable(&self, u: usize, v: usize) -> bool {
        !self.reach.get(u, v) && !self.reach.get(v, u)
    }

    /// Vertices reachable from `u`, ascending.
    pub fn reachable_from(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.reach.iter_row(u)
    }

    pub fn is_acyclic(&self) -> bool {
        (0..self.vertex_count()).all(|v| !self.reach.get(v, v))
    }

    /// The reflexive closure, i.e. the partial order a DAG generates.
    pub fn to_order(&self) -> Result<Relation> {
        if !self.is_acyclic() {
            return Err(DigraphError::NotAcyclic);
        }
        let mut m = self.reach.clone();
        for v in 0..m.size() {
            m.set(v, v, true);
        }
        Ok(Relation::from_bits(m))
    }
}

impl std::fmt::Debug for ReachMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.reach.fmt(f)
    }
}

/// Kahn's algorithm; true iff `g` has no directed cycle.
pub fn is_dag(g: &Digraph) -> bool {
    let n = g.vertex_count();
    let mut indegree = vec![0usize; n];
    for (_, v) in g.arcs() {
        indegree[v] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut removed = 0;
    while let Some(u) = ready.pop() {
        removed += 1;
        for v in g.successors(u) {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                ready.push(v);
            }
        }
    }
    removed == n
}

/// Transitive closure by row-wise Warshall over packed bit rows. Works on
/// cyclic input too; a cycle shows up as a set diagonal bit.
pub fn reachability(g: &Digraph) -> ReachMatrix {
    let mut reach = g.adjacency();
    let n = reach.size();
    for k in 0..n {
        for i in 0..n {
            if reach.get(i, k) {
                reach.union_row_into(k, i);
            }
        }
    }
    ReachMatrix { reach }
}

/// True iff no arc `(u, v)` is shadowed by a longer path `u -> w -> ... -> v`,
/// i.e. `g` equals its own transitive reduction.
pub fn is_regular(g: &Digraph) -> Result<bool> {
    let reach = reachability(g);
    if !reach.is_acyclic() {
        return Err(DigraphError::NotAcyclic);
    }
    Ok(g.arcs().all(|(u, v)| !has_detour(g, &reach, u, v)))
}

/// The unique minimal sub-digraph with the same reachability as `g`.
pub fn transitive_reduction(g: &Digraph) -> Result<Digraph> {
    let reach = reachability(g);
    if !reach.is_acyclic() {
        return Err(DigraphError::NotAcyclic);
    }
    let kept = g.arcs().filter(|&(u, v)| !has_detour(g, &reach, u, v));
    Digraph::from_arcs(g.vertex_count(), kept)
}

fn has_detour(g: &Digraph, reach: &ReachMatrix, u: usize, v: usize) -> bool {
    g.successors(u).any(|w| w != v && reach.reaches(w, v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shortcut_triangle() -> Digraph {
        Digraph::from_arcs(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_arcs() {
        assert_eq!(Digraph::from_arcs(2, [(1, 1)]), Err(DigraphError::Loop(1)));
        assert_eq!(
            Digraph::from_arcs(2, [(0, 2)]),
            Err(DigraphError::VertexOutOfRange {
                vertex: 2,
                vertex_count: 2
            })
        );
        assert_eq!(
            Digraph::from_arcs(2, [(0, 1), (0, 1)]),
            Err(DigraphError::DuplicateArc(0, 1))
        );
    }

    #[test]
    fn dag_detection() {
        assert!(is_dag(&Digraph::empty(3)));
        assert!(is_dag(&Digraph::empty(0)));
        let cycle = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(!is_dag(&cycle));
        assert!(is_dag(&shortcut_triangle()));
    }

    #[test]
    fn reachability_on_path_and_empty() {
        let path = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        let r = reachability(&path);
        assert!(r.reaches(0, 2));
        assert!(!r.reaches(2, 0));
        assert!(!r.reaches(0, 0));

        let r = reachability(&Digraph::empty(4));
        assert!((0..4).all(|u| r.reachable_from(u).next().is_none()));
    }

    #[test]
    fn reachability_shortcut_triangle() {
        // Paths from 0 to 2: the arc itself and 0 -> 1 -> 2.
        let r = reachability(&shortcut_triangle());
        assert!(r.reaches(0, 2));
        assert!(r.reaches(0, 1) && r.reaches(1, 2));
        assert_eq!(r.reachable_from(0).collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn cycle_has_set_diagonal() {
        let cycle = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = reachability(&cycle);
        assert!(!r.is_acyclic());
        assert!(r.to_order().is_err());
    }

    #[test]
    fn regularity() {
        assert_eq!(is_regular(&shortcut_triangle()), Ok(false));
        let path = Digraph::from_arcs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(is_regular(&path), Ok(true));
        assert_eq!(is_regular(&Digraph::empty(0)), Ok(true));
        let cycle = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(is_regular(&cycle), Err(DigraphError::NotAcyclic));
    }

    #[test]
    fn reduction_drops_shortcut() {
        let red = transitive_reduction(&shortcut_triangle()).unwrap();
        assert_eq!(red.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn successors_are_range_scoped() {
        let g = Digraph::from_arcs(4, [(0, 3), (1, 0), (1, 2), (2, 3)]).unwrap();
        assert_eq!(g.successors(1).collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(g.successors(3).count(), 0);
    }

    #[test]
    fn relabel_maps_arcs() {
        let g = Digraph::from_arcs(3, [(0, 1)]).unwrap();
        let h = g.relabel(&[2, 0, 1]).unwrap();
        assert_eq!(h.arcs().collect::<Vec<_>>(), vec![(2, 0)]);
        assert!(g.relabel(&[0, 1]).is_err());
    }
}
