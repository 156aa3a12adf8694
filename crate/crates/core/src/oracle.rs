//! Brute-force reference implementations for checking the digraph and cobweb
//! algorithms on small instances.
//!
//! Nothing here uses [`reachability`](crate::digraph::reachability), the
//! linear-extension enumerator, or the admissibility scan. Paths are found by
//! plain depth-first search and realizers by trying every pair of
//! permutations. The only shared helpers are `chain_intersection` and
//! `hasse_from_relation`, which are definitional and checked by hand-sized
//! cases of their own.

use serde::{Deserialize, Serialize};

use crate::digraph::{
    chain_intersection, enumerate_linear_extensions, hasse_from_relation, is_admissible,
    is_regular, Chain, Digraph, DigraphError, Relation, Result,
};

/// Largest vertex count [`brute_force_dim2`] and [`DagCatalog`] accept.
pub const ORACLE_MAX_VERTICES: usize = 5;

/// Largest vertex count [`verify_theorem1`] accepts.
pub const THEOREM1_MAX_VERTICES: usize = 4;

fn check_bound(vertex_count: usize, bound: usize) -> Result<()> {
    if vertex_count > bound {
        return Err(DigraphError::SearchBoundExceeded {
            vertex_count,
            bound,
        });
    }
    Ok(())
}

fn successor_lists(g: &Digraph) -> Vec<Vec<usize>> {
    let mut succ = vec![Vec::new(); g.vertex_count()];
    for (u, v) in g.arcs() {
        succ[u].push(v);
    }
    succ
}

/// Vertices reachable from `start` by one or more arcs, skipping the arc
/// `skip` if given.
fn dfs_reachable(succ: &[Vec<usize>], start: usize, skip: Option<(usize, usize)>) -> Vec<bool> {
    let mut seen = vec![false; succ.len()];
    let mut stack: Vec<usize> = succ[start]
        .iter()
        .copied()
        .filter(|&v| skip != Some((start, v)))
        .collect();
    while let Some(v) = stack.pop() {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        for &w in &succ[v] {
            if skip != Some((v, w)) && !seen[w] {
                stack.push(w);
            }
        }
    }
    seen
}

/// `leq(u, v)` iff `u = v` or a path leads from `u` to `v`, by depth-first
/// search from every vertex.
pub fn brute_force_order(g: &Digraph) -> Result<Relation> {
    let succ = successor_lists(g);
    let n = g.vertex_count();
    let mut rows = Vec::with_capacity(n);
    for u in 0..n {
        let mut row = dfs_reachable(&succ, u, None);
        if row[u] {
            return Err(DigraphError::NotAcyclic);
        }
        row[u] = true;
        rows.push(row);
    }
    Relation::from_rows(&rows)
}

/// Keeps an arc `(u, v)` iff no other route leads from `u` to `v`.
pub fn brute_force_transitive_reduction(g: &Digraph) -> Result<Digraph> {
    brute_force_order(g)?;
    let succ = successor_lists(g);
    let kept = g
        .arcs()
        .filter(|&(u, v)| !dfs_reachable(&succ, u, Some((u, v)))[v]);
    Digraph::from_arcs(g.vertex_count(), kept)
}

/// Lexicographic successor permutation in place; false after the last one.
fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    while next_permutation(&mut p) {
        out.push(p.clone());
    }
    out
}

/// Two linear extensions realizing the order generated by `g`, provided `g`
/// is exactly that order's Hasse diagram; `None` otherwise.
pub fn brute_force_dim2_witness(g: &Digraph) -> Result<Option<(Chain, Chain)>> {
    check_bound(g.vertex_count(), ORACLE_MAX_VERTICES)?;
    let order = brute_force_order(g)?;
    if hasse_from_relation(&order)? != *g {
        return Ok(None);
    }
    let n = g.vertex_count();
    let extensions: Vec<Chain> = all_permutations(n)
        .into_iter()
        .map(|p| Chain::new(p).expect("permutation"))
        .filter(|c| order.pairs().all(|(u, v)| c.position(u) <= c.position(v)))
        .collect();
    for (i, a) in extensions.iter().enumerate() {
        for b in &extensions[i..] {
            if chain_intersection(a, b)? == order {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}

/// True iff `g` is the Hasse diagram of a poset of dimension at most 2.
pub fn brute_force_dim2(g: &Digraph) -> Result<bool> {
    Ok(brute_force_dim2_witness(g)?.is_some())
}

/// Every labeled DAG on `n ≤ 5` vertices, each exactly once. Each unordered
/// pair `{i, j}` is absent, `i -> j`, or `j -> i`; assignments are visited in
/// base-3 counting order and cyclic ones skipped.
pub struct DagCatalog {
    vertex_count: usize,
    pairs: Vec<(usize, usize)>,
    next_code: u64,
    end: u64,
}

impl DagCatalog {
    pub fn new(vertex_count: usize) -> Result<Self> {
        check_bound(vertex_count, ORACLE_MAX_VERTICES)?;
        let pairs: Vec<_> = (0..vertex_count)
            .flat_map(|i| (i + 1..vertex_count).map(move |j| (i, j)))
            .collect();
        let end = 3u64.pow(pairs.len() as u32);
        Ok(DagCatalog {
            vertex_count,
            pairs,
            next_code: 0,
            end,
        })
    }

    fn decode(&self, mut code: u64) -> Digraph {
        let mut g = Digraph::empty(self.vertex_count);
        for &(i, j) in &self.pairs {
            let arc = match code % 3 {
                0 => None,
                1 => Some((i, j)),
                _ => Some((j, i)),
            };
            code /= 3;
            if let Some((u, v)) = arc {
                g.add_arc(u, v).expect("distinct pairs");
            }
        }
        g
    }
}

impl Iterator for DagCatalog {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        while self.next_code < self.end {
            let g = self.decode(self.next_code);
            self.next_code += 1;
            if brute_force_order(&g).is_ok() {
                return Some(g);
            }
        }
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub arcs: Vec<(usize, usize)>,
    pub brute_force_dim2: bool,
    pub regular: bool,
    pub admissible_chain_exists: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Report {
    pub n: usize,
    pub dags_checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

/// Checks, for every labeled DAG on `n ≤ 4` vertices, that being the Hasse
/// diagram of a dimension-2 poset (by brute force) coincides with being
/// regular and having an admissible linear extension.
pub fn verify_theorem1(n: usize) -> Result<Theorem1Report> {
    check_bound(n, THEOREM1_MAX_VERTICES)?;
    let mut report = Theorem1Report {
        n,
        dags_checked: 0,
        counterexamples: Vec::new(),
    };
    for g in DagCatalog::new(n)? {
        report.dags_checked += 1;
        let brute = brute_force_dim2(&g)?;
        let regular = is_regular(&g)?;
        let mut admissible = false;
        for c in enumerate_linear_extensions(&g, usize::MAX, THEOREM1_MAX_VERTICES)? {
            if is_admissible(&c, &g)? {
                admissible = true;
                break;
            }
        }
        if brute != (regular && admissible) {
            report.counterexamples.push(Counterexample {
                arcs: g.arcs().collect(),
                brute_force_dim2: brute,
                regular,
                admissible_chain_exists: admissible,
            });
        }
    }
    Ok(report)
}
