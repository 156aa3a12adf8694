use crate::bitmatrix::BitMatrix;

use super::{Digraph, DigraphError, Result};

/// A boolean pair-matrix over `0..n`, meant to hold a partial order
/// (`leq(u, v)` reads "u ≤ v"). Construction does not enforce the order
/// axioms; [`Relation::check_partial_order`] does.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    leq: BitMatrix,
}

impl Relation {
    pub(crate) fn from_bits(leq: BitMatrix) -> Self {
        Relation { leq }
    }

    /// Reflexive pairs only: the antichain on `n` elements.
    pub fn identity(n: usize) -> Self {
        Relation::from_fn(n, |u, v| u == v)
    }

    pub fn from_fn(n: usize, mut leq: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = BitMatrix::new(n);
        for u in 0..n {
            for v in 0..n {
                if leq(u, v) {
                    m.set(u, v, true);
                }
            }
        }
        Relation { leq: m }
    }

    /// Builds from explicit rows; every row must have length `rows.len()`.
    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(DigraphError::LengthMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(Relation::from_fn(n, |u, v| rows[u][v]))
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.leq.size()
    }

    #[inline]
    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.leq.get(u, v)
    }

    /// Pairs `(u, v)` with `u ≤ v`, row-major.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count()).flat_map(move |u| self.leq.iter_row(u).map(move |v| (u, v)))
    }

    /// Checks reflexivity, antisymmetry and transitivity.
    pub fn check_partial_order(&self) -> Result<()> {
        let n = self.vertex_count();
        if let Some(v) = (0..n).find(|&v| !self.leq(v, v)) {
            return Err(DigraphError::NotPartialOrder(format!(
                "not reflexive at {v}"
            )));
        }
        for u in 0..n {
            for v in self.leq.iter_row(u) {
                if v != u && self.leq(v, u) {
                    return Err(DigraphError::NotPartialOrder(format!(
                        "not antisymmetric at ({u}, {v})"
                    )));
                }
                // u ≤ v ⇒ everything above v is above u.
                if !self.leq.row_subset(v, u) {
                    return Err(DigraphError::NotPartialOrder(format!(
                        "not transitive through ({u}, {v})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_partial_order(&self) -> bool {
        self.check_partial_order().is_ok()
    }

    /// True when every pair is comparable.
    pub fn is_total(&self) -> bool {
        let n = self.vertex_count();
        (0..n).all(|u| (u + 1..n).all(|v| self.leq(u, v) || self.leq(v, u)))
    }

    fn strict(&self) -> BitMatrix {
        let mut m = self.leq.clone();
        for v in 0..m.size() {
            m.set(v, v, false);
        }
        m
    }
}

impl std::fmt::Debug for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.leq.fmt(f)
    }
}

/// The covering digraph of a partial order: `(u, v)` is an arc iff `u < v`
/// and nothing lies strictly between them.
pub fn hasse_from_relation(r: &Relation) -> Result<Digraph> {
    r.check_partial_order()?;
    let above = r.strict();
    let below = above.transpose();
    let n = r.vertex_count();
    let mut g = Digraph::empty(n);
    for u in 0..n {
        for v in above.iter_row(u) {
            if !above.rows_intersect(u, &below, v) {
                g.add_arc(u, v)?;
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hasse_of_total_order_is_path() {
        let r = Relation::from_fn(3, |u, v| u <= v);
        let h = hasse_from_relation(&r).unwrap();
        assert_eq!(h.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn hasse_of_antichain_is_empty() {
        let h = hasse_from_relation(&Relation::identity(4)).unwrap();
        assert_eq!(h.vertex_count(), 4);
        assert_eq!(h.arc_count(), 0);
    }

    #[test]
    fn hasse_of_diamond() {
        // 0 < 1, 0 < 2, 1 < 3, 2 < 3, 0 < 3
        let r = Relation::from_fn(4, |u, v| u == v || u == 0 || v == 3);
        let h = hasse_from_relation(&r).unwrap();
        assert_eq!(
            h.arcs().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 3), (2, 3)]
        );
    }

    #[test]
    fn rejects_non_orders() {
        let not_reflexive = Relation::from_fn(2, |u, v| u < v);
        assert!(matches!(
            hasse_from_relation(&not_reflexive),
            Err(DigraphError::NotPartialOrder(_))
        ));
        let symmetric = Relation::from_fn(2, |_, _| true);
        assert!(!symmetric.is_partial_order());
        // 0 ≤ 1, 1 ≤ 2 but not 0 ≤ 2.
        let intransitive =
            Relation::from_fn(3, |u, v| u == v || (u, v) == (0, 1) || (u, v) == (1, 2));
        assert!(!intransitive.is_partial_order());
    }

    #[test]
    fn from_rows_checks_shape() {
        assert!(Relation::from_rows(&[vec![true, false], vec![true]]).is_err());
        let r = Relation::from_rows(&[vec![true, true], vec![false, true]]).unwrap();
        assert!(r.leq(0, 1) && !r.leq(1, 0));
        assert!(r.is_total());
        assert_eq!(r.pairs().collect::<Vec<_>>(), vec![(0, 0), (0, 1), (1, 1)]);
    }
}
