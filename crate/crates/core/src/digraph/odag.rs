use serde::{Deserialize, Serialize};

use super::chain::first_inadmissible_triple;
use super::{
    chain_intersection, conjugate_chain, has_detour, hasse_from_relation, reachability, Chain,
    Digraph, DigraphError, LinearExtensions, Result,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OdagFailure {
    NotAcyclic,
    NotRegular,
    NoAdmissibleChain,
}

/// Verdict of [`is_odag`]. When `representable` holds, both witnesses are
/// present and the Hasse diagram of their intersection is the input digraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OdagResult {
    pub representable: bool,
    pub witness_x: Option<Chain>,
    pub witness_y: Option<Chain>,
    pub failure_reason: Option<OdagFailure>,
}

impl OdagResult {
    fn rejected(reason: OdagFailure) -> Self {
        OdagResult {
            representable: false,
            witness_x: None,
            witness_y: None,
            failure_reason: Some(reason),
        }
    }
}

/// Decides whether `g` is the Hasse diagram of a dimension-2 poset.
///
/// `g` qualifies iff it is acyclic, regular, and some linear extension lists
/// its vertices in admissible form. Acyclicity and regularity are settled in
/// polynomial time; only the admissible-chain search is bounded by
/// `search_bound`. The witness `x` is the first admissible extension in
/// lexicographic order and `y` is its conjugate. The realizer is re-checked
/// before returning, and a mismatch is reported as
/// [`DigraphError::ConsistencyFailure`].
pub fn is_odag(g: &Digraph, search_bound: usize) -> Result<OdagResult> {
    let reach = reachability(g);
    if !reach.is_acyclic() {
        return Ok(OdagResult::rejected(OdagFailure::NotAcyclic));
    }
    if g.arcs().any(|(u, v)| has_detour(g, &reach, u, v)) {
        return Ok(OdagResult::rejected(OdagFailure::NotRegular));
    }

    let mut extensions = LinearExtensions::new(g, search_bound)?;
    let Some(x) = extensions.find(|c| first_inadmissible_triple(c, &reach).is_none()) else {
        return Ok(OdagResult::rejected(OdagFailure::NoAdmissibleChain));
    };

    let y = conjugate_chain(&x, g).map_err(|e| {
        DigraphError::ConsistencyFailure(format!(
            "admissible chain {:?} has no conjugate: {e}",
            x.order()
        ))
    })?;
    let hasse = hasse_from_relation(&chain_intersection(&x, &y)?)?;
    if hasse != *g {
        return Err(DigraphError::ConsistencyFailure(format!(
            "realizer ({:?}, {:?}) does not reproduce the input arcs",
            x.order(),
            y.order()
        )));
    }
    Ok(OdagResult {
        representable: true,
        witness_x: Some(x),
        witness_y: Some(y),
        failure_reason: None,
    })
}
