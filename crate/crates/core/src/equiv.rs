//! d-neighbor equivalence at the cuts of a linear ordering.
//!
//! At cut `i` the prefix side groups subsets of `A_i ∩ Red` by their
//! truncated neighbor counts on `Ā_i ∩ Blue`; the suffix side groups subsets
//! of `Ā_i ∩ Red` by their counts on `A_i ∩ Blue`. Each class is represented
//! by its minimum-size member, ties broken lexicographically by position in
//! the ordering.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, LinearOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Prefix,
    Suffix,
}

/// Truncated neighbor-count profile over the opposite side's blue vertices,
/// listed in ordering position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NeighborKey(pub Vec<u8>);

fn ground_and_columns(g: &ColoredGraph, ord: &LinearOrder, cut: usize, side: Side) -> (Vec<usize>, Vec<usize>) {
    let (own, other) = match side {
        Side::Prefix => (ord.prefix(cut), ord.suffix(cut)),
        Side::Suffix => (ord.suffix(cut), ord.prefix(cut)),
    };
    let ground = own.iter().copied().filter(|&v| g.is_red(v)).collect();
    let columns = other.iter().copied().filter(|&v| g.is_blue(v)).collect();
    (ground, columns)
}

fn truncated_key(g: &ColoredGraph, columns: &[usize], x: &[usize], dhat: u32) -> Vec<u8> {
    columns
        .iter()
        .map(|&c| {
            let k = x.iter().filter(|&&v| g.adjacent(v, c)).count() as u32;
            k.min(dhat) as u8
        })
        .collect()
}

fn check_cut(ord: &LinearOrder, cut: usize) -> Result<()> {
    if cut > ord.len() {
        Err(Error::pre(format!("cut {cut} out of range 0..={}", ord.len())))
    } else {
        Ok(())
    }
}

/// The neighbor key of `X` at cut `cut` on `side`, with counts capped at `dhat`.
pub fn key_of(
    g: &ColoredGraph,
    ord: &LinearOrder,
    cut: usize,
    side: Side,
    x: &[usize],
    dhat: u32,
) -> Result<NeighborKey> {
    check_cut(ord, cut)?;
    let (ground, columns) = ground_and_columns(g, ord, cut, side);
    if let Some(v) = x.iter().find(|v| !ground.contains(v)) {
        return Err(Error::pre(format!("vertex {v} is not in the ground set of this side")));
    }
    Ok(NeighborKey(truncated_key(g, &columns, x, dhat)))
}

/// Canonical representatives of every equivalence class at one cut.
#[derive(Clone, Debug)]
pub struct RepTable {
    cut: usize,
    side: Side,
    dhat: u32,
    ground: Vec<usize>,
    /// Opposite-side blue vertices with at least one ground neighbor; every
    /// other column is identically zero and is left out of lookup keys.
    active_columns: Vec<usize>,
    reps: Vec<Vec<usize>>,
    lookup: HashMap<Vec<u8>, usize>,
}

impl RepTable {
    /// Builds the complete representative list.
    ///
    /// Ground vertices are scanned in ordering position; after each step the
    /// table holds, for every key reachable from the scanned prefix, its
    /// (size, lexicographic)-least generator. Appending the newest vertex to a
    /// least generator yields the least generator among sets containing it,
    /// so the final table is exact.
    pub fn build(g: &ColoredGraph, ord: &LinearOrder, cut: usize, side: Side, dhat: u32) -> Result<Self> {
        check_cut(ord, cut)?;
        let (ground, columns) = ground_and_columns(g, ord, cut, side);
        let active_columns: Vec<usize> = columns
            .into_iter()
            .filter(|&c| ground.iter().any(|&v| g.adjacent(v, c)))
            .collect();
        let width = active_columns.len();
        let cap = dhat.min(u8::MAX as u32) as u8;

        // best[key] = least generator (by position sequence)
        let mut best: HashMap<Vec<u8>, Vec<usize>> = HashMap::new();
        best.insert(vec![0; width], Vec::new());
        for &v in &ground {
            let contrib: Vec<usize> = (0..width).filter(|&c| g.adjacent(v, active_columns[c])).collect();
            if contrib.is_empty() {
                continue;
            }
            let snapshot: Vec<(Vec<u8>, Vec<usize>)> = best.iter().map(|(k, s)| (k.clone(), s.clone())).collect();
            for (key, set) in snapshot {
                let mut next = key;
                for &c in &contrib {
                    next[c] = (next[c] + 1).min(cap);
                }
                let mut cand = set;
                cand.push(v);
                match best.get(&next) {
                    Some(cur) if !less(ord, &cand, cur) => {}
                    _ => {
                        best.insert(next, cand);
                    }
                }
            }
        }

        let mut entries: Vec<(Vec<u8>, Vec<usize>)> = best.into_iter().collect();
        entries.sort_by_key(|e| order_key(ord, &e.1));
        let mut reps = Vec::with_capacity(entries.len());
        let mut lookup = HashMap::with_capacity(entries.len());
        for (i, (key, set)) in entries.into_iter().enumerate() {
            lookup.insert(key, i);
            reps.push(set);
        }
        Ok(RepTable {
            cut,
            side,
            dhat,
            ground,
            active_columns,
            reps,
            lookup,
        })
    }

    pub fn cut(&self) -> usize {
        self.cut
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn reps(&self) -> &[Vec<usize>] {
        &self.reps
    }

    /// Representative `i`, as vertices in ordering position.
    pub fn rep(&self, i: usize) -> &[usize] {
        &self.reps[i]
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    /// Index of the class of `∅`.
    pub fn empty_class(&self) -> usize {
        self.lookup[&vec![0u8; self.active_columns.len()]]
    }

    pub(crate) fn compact_key(&self, g: &ColoredGraph, x: &[usize]) -> Vec<u8> {
        truncated_key(g, &self.active_columns, x, self.dhat)
    }

    /// Index of the representative equivalent to `X`.
    pub fn find_rep(&self, g: &ColoredGraph, x: &[usize]) -> Result<usize> {
        if let Some(v) = x.iter().find(|v| !self.ground.contains(v)) {
            return Err(Error::pre(format!("vertex {v} is not in the ground set of this table")));
        }
        Ok(self.find_rep_unchecked(g, x))
    }

    pub(crate) fn find_rep_unchecked(&self, g: &ColoredGraph, x: &[usize]) -> usize {
        let key = self.compact_key(g, x);
        *self
            .lookup
            .get(&key)
            .expect("representative table is complete: every key is present")
    }
}

fn order_key(ord: &LinearOrder, set: &[usize]) -> (usize, Vec<usize>) {
    let mut pos: Vec<usize> = set.iter().map(|&v| ord.position(v)).collect();
    pos.sort_unstable();
    (set.len(), pos)
}

fn less(ord: &LinearOrder, a: &[usize], b: &[usize]) -> bool {
    order_key(ord, a) < order_key(ord, b)
}

/// Convenience wrapper matching [`RepTable::build`].
pub fn build_reps(g: &ColoredGraph, ord: &LinearOrder, cut: usize, side: Side, dhat: u32) -> Result<RepTable> {
    RepTable::build(g, ord, cut, side, dhat)
}

/// Prefix and suffix tables for every cut `0..=n`.
#[derive(Clone, Debug)]
pub struct CutTables {
    pub prefix: Vec<RepTable>,
    pub suffix: Vec<RepTable>,
}

impl CutTables {
    pub fn build(g: &ColoredGraph, ord: &LinearOrder, dhat: u32) -> Result<Self> {
        let n = ord.len();
        let prefix = (0..=n)
            .map(|i| RepTable::build(g, ord, i, Side::Prefix, dhat))
            .collect::<Result<Vec<_>>>()?;
        let suffix = (0..=n)
            .map(|i| RepTable::build(g, ord, i, Side::Suffix, dhat))
            .collect::<Result<Vec<_>>>()?;
        Ok(CutTables { prefix, suffix })
    }

    /// `(prefix size, suffix size)` per cut.
    pub fn sizes(&self) -> Vec<(usize, usize)> {
        self.prefix
            .iter()
            .zip(&self.suffix)
            .map(|(p, s)| (p.len(), s.len()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> (ColoredGraph, LinearOrder) {
        (
            ColoredGraph::new(3, [(0, 1), (1, 2)]).unwrap(),
            LinearOrder::identity(3),
        )
    }

    #[test]
    fn keys() {
        let (g, o) = p3();
        assert_eq!(
            key_of(&g, &o, 1, Side::Prefix, &[], 2).unwrap(),
            NeighborKey(vec![0, 0])
        );
        assert_eq!(
            key_of(&g, &o, 1, Side::Prefix, &[0], 2).unwrap(),
            NeighborKey(vec![1, 0])
        );
        assert_eq!(
            key_of(&g, &o, 2, Side::Suffix, &[2], 2).unwrap(),
            NeighborKey(vec![0, 1])
        );
        assert!(key_of(&g, &o, 2, Side::Suffix, &[0], 2).is_err());
    }

    #[test]
    fn tables() {
        let (g, o) = p3();
        let t = build_reps(&g, &o, 1, Side::Prefix, 2).unwrap();
        assert_eq!(t.reps(), &[vec![], vec![0]]);
        let t = build_reps(&g, &o, 2, Side::Suffix, 2).unwrap();
        assert_eq!(t.reps(), &[vec![], vec![2]]);

        let colored = ColoredGraph::new(3, [(0, 1), (1, 2)])
            .unwrap()
            .with_colors([1, 2], [0, 1, 2])
            .unwrap();
        let t = build_reps(&colored, &o, 1, Side::Prefix, 2).unwrap();
        assert_eq!(t.reps(), &[Vec::<usize>::new()]);
    }

    #[test]
    fn lookups() {
        let (g, o) = p3();
        let t = build_reps(&g, &o, 1, Side::Prefix, 2).unwrap();
        assert_eq!(t.rep(t.find_rep(&g, &[0]).unwrap()), &[0]);
        assert_eq!(t.rep(t.find_rep(&g, &[]).unwrap()), &[] as &[usize]);
        assert!(t.find_rep(&g, &[2]).is_err());

        let k3 = ColoredGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let t = build_reps(&k3, &o, 2, Side::Prefix, 2).unwrap();
        assert_eq!(t.rep(t.find_rep(&k3, &[0, 1]).unwrap()), &[0, 1]);
        assert_eq!(t.len(), 3);
    }
}
