use super::{is_dag, Chain, Digraph, DigraphError, Result};

/// Largest vertex count the exhaustive searches accept unless told otherwise.
pub const DEFAULT_SEARCH_BOUND: usize = 12;

/// Lazily enumerates the linear extensions of a DAG in lexicographic order
/// of their vertex sequences: at every position the smallest available
/// source is tried first.
pub struct LinearExtensions {
    successors: Vec<Vec<usize>>,
    indegree: Vec<usize>,
    placed: Vec<bool>,
    prefix: Vec<usize>,
    // cursor[d]: smallest vertex not yet tried at depth d.
    cursor: Vec<usize>,
    done: bool,
}

impl LinearExtensions {
    pub fn new(g: &Digraph, search_bound: usize) -> Result<Self> {
        if g.vertex_count() > search_bound {
            return Err(DigraphError::SearchBoundExceeded {
                vertex_count: g.vertex_count(),
                bound: search_bound,
            });
        }
        if !is_dag(g) {
            return Err(DigraphError::NotAcyclic);
        }
        let n = g.vertex_count();
        let mut indegree = vec![0; n];
        let successors = (0..n)
            .map(|u| {
                let succ: Vec<usize> = g.successors(u).collect();
                for &v in &succ {
                    indegree[v] += 1;
                }
                succ
            })
            .collect();
        Ok(LinearExtensions {
            successors,
            indegree,
            placed: vec![false; n],
            prefix: Vec::with_capacity(n),
            cursor: vec![0; n + 1],
            done: false,
        })
    }

    fn place(&mut self, v: usize) {
        self.placed[v] = true;
        for &w in &self.successors[v] {
            self.indegree[w] -= 1;
        }
        self.prefix.push(v);
    }

    /// Undoes the last placement; false when the prefix was already empty.
    fn retreat(&mut self) -> bool {
        let Some(v) = self.prefix.pop() else {
            return false;
        };
        self.placed[v] = false;
        for &w in &self.successors[v] {
            self.indegree[w] += 1;
        }
        true
    }
}

impl Iterator for LinearExtensions {
    type Item = Chain;

    fn next(&mut self) -> Option<Chain> {
        let n = self.placed.len();
        while !self.done {
            let depth = self.prefix.len();
            if depth == n {
                let chain = Chain::new(self.prefix.clone()).expect("prefix is a permutation");
                if !self.retreat() {
                    self.done = true;
                }
                return Some(chain);
            }
            let start = self.cursor[depth];
            match (start..n).find(|&v| !self.placed[v] && self.indegree[v] == 0) {
                Some(v) => {
                    self.cursor[depth] = v + 1;
                    self.cursor[depth + 1] = 0;
                    self.place(v);
                }
                None => {
                    if !self.retreat() {
                        self.done = true;
                    }
                }
            }
        }
        None
    }
}

/// The first `cap` linear extensions of `g` in lexicographic order (all of
/// them when there are at most `cap`).
pub fn enumerate_linear_extensions(
    g: &Digraph,
    cap: usize,
    search_bound: usize,
) -> Result<Vec<Chain>> {
    Ok(LinearExtensions::new(g, search_bound)?.take(cap).collect())
}
