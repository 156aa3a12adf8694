use serde::{Deserialize, Serialize};

use crate::bitmatrix::BitMatrix;

use super::{reachability, Digraph, DigraphError, ReachMatrix, Relation, Result};

/// A total order on `0..n`, stored as the list of vertices from least to
/// greatest together with its inverse permutation.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Chain {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl Chain {
    /// Fails unless `order` is a permutation of `0..order.len()`.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let mut position = vec![usize::MAX; n];
        for (rank, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(DigraphError::InvalidChain(n));
            }
            position[v] = rank;
        }
        Ok(Chain { order, position })
    }

    pub fn identity(n: usize) -> Self {
        Chain {
            order: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.order.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    /// `u ≤ v` in this chain.
    #[inline]
    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.position[u] <= self.position[v]
    }

    /// The total order this chain induces, as a relation.
    pub fn to_relation(&self) -> Relation {
        Relation::from_fn(self.len(), |u, v| self.leq(u, v))
    }

    pub fn reversed(&self) -> Chain {
        let mut order = self.order.clone();
        order.reverse();
        Chain::new(order).expect("reversal of a permutation")
    }

    fn expect_len(&self, expected: usize) -> Result<()> {
        if self.len() != expected {
            return Err(DigraphError::LengthMismatch {
                expected,
                found: self.len(),
            });
        }
        Ok(())
    }
}

impl TryFrom<Vec<usize>> for Chain {
    type Error = DigraphError;

    fn try_from(order: Vec<usize>) -> Result<Self> {
        Chain::new(order)
    }
}

impl From<Chain> for Vec<usize> {
    fn from(c: Chain) -> Self {
        c.order
    }
}

impl std::fmt::Debug for Chain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Chain{:?}", self.order)
    }
}

/// Every arc of `g` goes forward in `c`.
pub fn is_linear_extension(c: &Chain, g: &Digraph) -> Result<bool> {
    c.expect_len(g.vertex_count())?;
    Ok(g.arcs().all(|(u, v)| c.position(u) < c.position(v)))
}

/// True iff `c` lists the vertices of `g` with no inadmissible triple: chain
/// positions `i1 < i2 < i3` where `v_i1` reaches `v_i3` but neither
/// `v_i1 -> v_i2` nor `v_i2 -> v_i3` is a path.
pub fn is_admissible(c: &Chain, g: &Digraph) -> Result<bool> {
    if !is_linear_extension(c, g)? {
        return Err(DigraphError::NotLinearExtension);
    }
    let reach = reachability(g);
    Ok(first_inadmissible_triple(c, &reach).is_none())
}

/// Positions `(i1, i2, i3)` of the first bad triple in scan order.
pub(crate) fn first_inadmissible_triple(
    c: &Chain,
    reach: &ReachMatrix,
) -> Option<(usize, usize, usize)> {
    let order = c.order();
    let n = order.len();
    for i1 in 0..n {
        let a = order[i1];
        for i3 in i1 + 2..n {
            let b = order[i3];
            if !reach.reaches(a, b) {
                continue;
            }
            for (i2, &mid) in order.iter().enumerate().take(i3).skip(i1 + 1) {
                if !reach.reaches(a, mid) && !reach.reaches(mid, b) {
                    return Some((i1, i2, i3));
                }
            }
        }
    }
    None
}

/// The chain `Y` that keeps every pair ordered by `g` and reverses every
/// pair `x` orders but `g` leaves incomparable.
///
/// `u <_Y v` iff `u` reaches `v`, or `u, v` are incomparable and `v <_X u`.
/// The relation is built as a tournament and topologically sorted; it is a
/// total order exactly when `x` is admissible, otherwise
/// [`DigraphError::NotTotalOrder`] is returned.
pub fn conjugate_chain(x: &Chain, g: &Digraph) -> Result<Chain> {
    let reach = reachability(g);
    if !reach.is_acyclic() {
        return Err(DigraphError::NotAcyclic);
    }
    if !is_linear_extension(x, g)? {
        return Err(DigraphError::NotLinearExtension);
    }
    let n = g.vertex_count();
    let mut before = BitMatrix::new(n);
    let mut indegree = vec![0usize; n];
    for u in 0..n {
        for (v, deg) in indegree.iter_mut().enumerate() {
            if u == v {
                continue;
            }
            let below = reach.reaches(u, v) || (reach.incomparable(u, v) && x.leq(v, u));
            if below {
                before.set(u, v, true);
                *deg += 1;
            }
        }
    }

    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        // A tournament has at most one remaining source.
        let source = (0..n)
            .find(|&v| !placed[v] && indegree[v] == 0)
            .ok_or(DigraphError::NotTotalOrder)?;
        placed[source] = true;
        order.push(source);
        for v in before.iter_row(source) {
            indegree[v] -= 1;
        }
    }
    Chain::new(order)
}

/// `u ≤ v` iff `u` precedes-or-equals `v` in both chains.
pub fn chain_intersection(x: &Chain, y: &Chain) -> Result<Relation> {
    y.expect_len(x.len())?;
    Ok(Relation::from_fn(x.len(), |u, v| {
        x.leq(u, v) && y.leq(u, v)
    }))
}
