//! Maximal independent sets in lexicographic order with polynomial delay.
//!
//! Sets are compared as ascending vertex lists. From each output `S` and each
//! vertex `j ∉ S` with a smaller neighbor in `S`, the candidate
//! `(S ∩ {0..j}) \ N(j) ∪ {j}` is kept if it is maximal within `{0..=j}`; its
//! lexicographically first completion goes into a priority queue.

use std::collections::{BTreeSet, HashSet};

use crate::graph::ColoredGraph;

fn complete(g: &ColoredGraph, mut set: Vec<usize>, from: usize) -> Vec<usize> {
    let mut blocked = vec![false; g.n()];
    for &v in &set {
        blocked[v] = true;
        for &w in g.neighbors(v) {
            blocked[w] = true;
        }
    }
    for v in from..g.n() {
        if !blocked[v] {
            set.push(v);
            for &w in g.neighbors(v) {
                blocked[w] = true;
            }
            blocked[v] = true;
        }
    }
    set.sort_unstable();
    set
}

/// Streams every maximal independent set of `g` exactly once, smallest
/// (lexicographically) first. Stops at the first sink error.
pub fn mis_enumerate<E>(g: &ColoredGraph, mut sink: impl FnMut(&[usize]) -> Result<(), E>) -> Result<(), E> {
    let n = g.n();
    let mut queue: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let first = complete(g, Vec::new(), 0);
    seen.insert(first.clone());
    queue.insert(first);
    while let Some(s) = queue.pop_first() {
        sink(&s)?;
        let mut in_s = vec![false; n];
        for &v in &s {
            in_s[v] = true;
        }
        for j in 0..n {
            if in_s[j] || !g.neighbors(j).iter().any(|&w| w < j && in_s[w]) {
                continue;
            }
            let mut t: Vec<usize> = s.iter().copied().filter(|&v| v < j && !g.adjacent(v, j)).collect();
            t.push(j);
            // T must be maximal independent in G[{0..=j}]
            let maximal = (0..j).all(|v| t.contains(&v) || g.neighbors(v).iter().any(|w| t.contains(w)));
            if !maximal {
                continue;
            }
            let cand = complete(g, t, j + 1);
            if seen.insert(cand.clone()) {
                queue.insert(cand);
            }
        }
    }
    Ok(())
}

/// All maximal independent sets, in emission order.
pub fn maximal_independent_sets(g: &ColoredGraph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let _ = mis_enumerate(g, |s| -> Result<(), ()> {
        out.push(s.to_vec());
        Ok(())
    });
    out
}
