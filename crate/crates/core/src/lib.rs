//! Cobweb posets as orderable DAGs.
//!
//! * [`digraph`]: reachability, regularity, linear extensions, admissible
//!   chains, conjugate chains, Hasse diagrams and the bounded decision of
//!   whether a DAG is the Hasse diagram of a dimension-2 poset.
//! * [`cobweb`]: level sequences, cobweb truncations, their edge sets and
//!   the explicit two-chain realizer.
//! * [`oracle`]: brute-force references used to cross-check the above.
//! * [`format`]: the plain-text digraph, chain and relation encodings.

mod bitmatrix;
pub mod cobweb;
pub mod digraph;
pub mod format;
pub mod oracle;
