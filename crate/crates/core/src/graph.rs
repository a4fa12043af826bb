//! Colored graphs, linear orderings and induced-matching width.
//!
//! Vertices are dense indices `0..n`. A colored graph carries two vertex
//! subsets, `red` and `blue`, whose union is the whole vertex set; they may
//! overlap. An uncolored graph is the special case `red = blue = V`.

use fixedbitset::FixedBitSet;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// A set of vertices, stored as a bit set over `0..n`.
pub type VertexSet = FixedBitSet;

/// Exact rational coordinate / endpoint.
pub type Rational = BigRational;

/// Builds a vertex set of capacity `n` from an iterator of members.
pub fn vertex_set(n: usize, members: impl IntoIterator<Item = usize>) -> VertexSet {
    let mut s = FixedBitSet::with_capacity(n);
    for v in members {
        s.insert(v);
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    n: usize,
    adj: Vec<VertexSet>,
    nbrs: Vec<Vec<usize>>,
    red: VertexSet,
    blue: VertexSet,
}

impl ColoredGraph {
    /// Uncolored graph (`red = blue = V`) from an edge list.
    ///
    /// Parallel edges are merged; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let nbrs = adj.iter().map(|row| row.ones().collect()).collect();
        let mut all = FixedBitSet::with_capacity(n);
        all.insert_range(..);
        Ok(ColoredGraph {
            n,
            adj,
            nbrs,
            red: all.clone(),
            blue: all,
        })
    }

    /// Replaces the coloring. Every vertex must be red, blue, or both.
    pub fn with_colors(
        mut self,
        red: impl IntoIterator<Item = usize>,
        blue: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let n = self.n;
        let mut r = FixedBitSet::with_capacity(n);
        let mut b = FixedBitSet::with_capacity(n);
        for (set, it) in [
            (&mut r, red.into_iter().collect::<Vec<_>>()),
            (&mut b, blue.into_iter().collect()),
        ] {
            for v in it {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                set.insert(v);
            }
        }
        if let Some(v) = (0..n).find(|&v| !r.contains(v) && !b.contains(v)) {
            return Err(Error::Uncolored(v));
        }
        self.red = r;
        self.blue = b;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.nbrs.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.nbrs[v]
    }

    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn is_red(&self, v: usize) -> bool {
        self.red.contains(v)
    }

    #[inline]
    pub fn is_blue(&self, v: usize) -> bool {
        self.blue.contains(v)
    }

    pub fn red(&self) -> &VertexSet {
        &self.red
    }

    pub fn blue(&self) -> &VertexSet {
        &self.blue
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.nbrs[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Number of edges of `G[set]`.
    pub fn induced_edge_count(&self, set: &[usize]) -> usize {
        let mut count = 0;
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if self.adjacent(u, v) {
                    count += 1;
                }
            }
        }
        count
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// `G[S]` with inherited adjacency and colors.
    ///
    /// Vertices of the result are numbered in the order they appear in `s`
    /// after sorting and deduplication; the returned map sends each new index
    /// to its original vertex.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(ColoredGraph, Vec<usize>)> {
        let mut keep: Vec<usize> = s.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            self.check_vertex(v)?;
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = keep.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.nbrs[v]
                .iter()
                .filter(move |&&w| index[w] != usize::MAX && i < index[w])
                .map(move |&w| (i, index[w]))
        });
        let edges: Vec<_> = edges.collect();
        let sub = ColoredGraph::new(keep.len(), edges)?;
        let red = keep.iter().enumerate().filter(|(_, &v)| self.is_red(v)).map(|(i, _)| i);
        let blue = keep
            .iter()
            .enumerate()
            .filter(|(_, &v)| self.is_blue(v))
            .map(|(i, _)| i);
        let sub = sub.with_colors(red.collect::<Vec<_>>(), blue.collect::<Vec<_>>())?;
        Ok((sub, keep))
    }
}

/// A linear ordering `x_1, ..., x_n` of the vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearOrder {
    seq: Vec<usize>,
    pos: Vec<usize>,
}

impl LinearOrder {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        let n = seq.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidOrder(format!("vertex {v} out of range (n = {n})")));
            }
            if pos[v] != usize::MAX {
                return Err(Error::InvalidOrder(format!("vertex {v} appears twice")));
            }
            pos[v] = i;
        }
        Ok(LinearOrder { seq, pos })
    }

    pub fn identity(n: usize) -> Self {
        LinearOrder {
            seq: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Vertex at 0-based position `i` (that is, `x_{i+1}`).
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.seq[i]
    }

    /// 0-based position of vertex `v`.
    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.seq
    }

    /// The prefix `A_i = {x_1, ..., x_i}`.
    pub fn prefix(&self, i: usize) -> &[usize] {
        &self.seq[..i]
    }

    /// The suffix `Ā_i = {x_{i+1}, ..., x_n}`.
    pub fn suffix(&self, i: usize) -> &[usize] {
        &self.seq[i..]
    }
}

/// Size of a maximum induced matching of the bipartite graph `G[A, B]`.
///
/// Exhaustive branch and bound over the cross edges; intended for small
/// inputs (validation and width checks).
pub fn mim(g: &ColoredGraph, a: &[usize], b: &[usize]) -> Result<usize> {
    let mut in_a = FixedBitSet::with_capacity(g.n());
    for &v in a {
        g.check_vertex(v)?;
        in_a.insert(v);
    }
    for &v in b {
        g.check_vertex(v)?;
        if in_a.contains(v) {
            return Err(Error::pre(format!("A and B overlap in vertex {v}")));
        }
    }
    let mut cross = Vec::new();
    for &u in a {
        for &v in b {
            if g.adjacent(u, v) {
                cross.push((u, v));
            }
        }
    }
    let e = cross.len();
    if e == 0 {
        return Ok(0);
    }
    // compat[i] = cross edges that may share an induced matching with edge i
    let compat: Vec<FixedBitSet> = cross
        .iter()
        .map(|&(a1, b1)| {
            let mut row = FixedBitSet::with_capacity(e);
            for (j, &(a2, b2)) in cross.iter().enumerate() {
                if a1 != a2 && b1 != b2 && !g.adjacent(a1, b2) && !g.adjacent(a2, b1) {
                    row.insert(j);
                }
            }
            row
        })
        .collect();
    let mut all = FixedBitSet::with_capacity(e);
    all.insert_range(..);
    let mut best = 0;
    max_clique(&compat, all, 0, &mut best);
    Ok(best)
}

fn max_clique(compat: &[FixedBitSet], cand: FixedBitSet, size: usize, best: &mut usize) {
    let left = cand.count_ones(..);
    if size + left <= *best {
        return;
    }
    let Some(v) = cand.ones().next() else {
        *best = size;
        return;
    };
    let mut with = cand.clone();
    with.intersect_with(&compat[v]);
    max_clique(compat, with, size + 1, best);
    let mut without = cand;
    without.set(v, false);
    max_clique(compat, without, size, best);
}

/// Per-cut widths `max(mim(A_i ∩ Red, Ā_i ∩ Blue), mim(A_i ∩ Blue, Ā_i ∩ Red))`
/// for `i = 1..n-1`.
pub fn cut_widths(g: &ColoredGraph, ord: &LinearOrder) -> Result<Vec<usize>> {
    if ord.len() != g.n() {
        return Err(Error::InvalidOrder(format!(
            "ordering has {} vertices, graph has {}",
            ord.len(),
            g.n()
        )));
    }
    let n = g.n();
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let pick = |side: &[usize], red: bool| -> Vec<usize> {
            side.iter()
                .copied()
                .filter(|&v| if red { g.is_red(v) } else { g.is_blue(v) })
                .collect()
        };
        let (pre, suf) = (ord.prefix(i), ord.suffix(i));
        let w1 = mim(g, &pick(pre, true), &pick(suf, false))?;
        let w2 = mim(g, &pick(pre, false), &pick(suf, true))?;
        out.push(w1.max(w2));
    }
    Ok(out)
}

/// MIM-width of a linear ordering of a colored graph (`n >= 2`).
pub fn order_mim_width(g: &ColoredGraph, ord: &LinearOrder) -> Result<usize> {
    if g.n() < 2 {
        return Err(Error::pre("MIM-width of an ordering needs at least two vertices"));
    }
    Ok(cut_widths(g, ord)?.into_iter().max().unwrap_or(0))
}

fn check_intervals(intervals: &[(Rational, Rational)]) -> Result<()> {
    for (i, (l, r)) in intervals.iter().enumerate() {
        if l > r {
            return Err(Error::pre(format!(
                "interval {i} has left endpoint {l} > right endpoint {r}"
            )));
        }
    }
    Ok(())
}

/// Interval graph of closed intervals: vertices adjacent iff the intervals meet.
pub fn interval_graph(intervals: &[(Rational, Rational)]) -> Result<ColoredGraph> {
    check_intervals(intervals)?;
    let n = intervals.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (li, ri) = &intervals[i];
            let (lj, rj) = &intervals[j];
            if li.max(lj) <= ri.min(rj) {
                edges.push((i, j));
            }
        }
    }
    ColoredGraph::new(n, edges)
}

/// Orders interval vertices by left endpoint, then right endpoint, then index.
pub fn interval_order(intervals: &[(Rational, Rational)]) -> Result<LinearOrder> {
    check_intervals(intervals)?;
    let mut seq: Vec<usize> = (0..intervals.len()).collect();
    seq.sort_by(|&a, &b| {
        let (la, ra) = &intervals[a];
        let (lb, rb) = &intervals[b];
        la.cmp(lb).then_with(|| ra.cmp(rb)).then(a.cmp(&b))
    });
    LinearOrder::new(seq)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut clean = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(Error::pre(format!("hyperedge {i} is empty")));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            e.sort_unstable();
            e.dedup();
            clean.push(e);
        }
        Ok(Hypergraph { n, edges: clean })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// True if `t` meets every hyperedge.
    pub fn is_transversal(&self, t: &[usize]) -> bool {
        self.edges.iter().all(|e| e.iter().any(|v| t.contains(v)))
    }

    /// Incidence-graph ordering for an interval hypergraph: vertex `i` is the
    /// point interval `[i, i]`, hyperedge `e` is `[min e, max e]`; everything
    /// is sorted by left endpoint (ties: right endpoint, then node index).
    pub fn interval_incidence_order(&self) -> LinearOrder {
        let n = self.n;
        let mut spans: Vec<(usize, usize, usize)> = (0..n).map(|v| (v, v, v)).collect();
        for (i, e) in self.edges.iter().enumerate() {
            spans.push((e[0], e[e.len() - 1], n + i));
        }
        spans.sort();
        LinearOrder::new(spans.into_iter().map(|(_, _, id)| id).collect()).expect("permutation by construction")
    }
}

/// Incidence graph of `h`: hypergraph vertices `0..n` are red, hyperedge nodes
/// `n..n+k` are blue. Minimal red (ℕ, ℕ*)-dominating sets of the result are
/// exactly the minimal transversals of `h`.
pub fn hypergraph_to_colored(h: &Hypergraph) -> Result<ColoredGraph> {
    let n = h.n;
    let k = h.edges.len();
    let edges = h
        .edges
        .iter()
        .enumerate()
        .flat_map(|(i, e)| e.iter().map(move |&v| (v, n + i)));
    ColoredGraph::new(n + k, edges.collect::<Vec<_>>())?.with_colors(0..n, n..n + k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(num: i64, den: i64) -> Rational {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn p3() -> ColoredGraph {
        ColoredGraph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn induced_subgraph_cases() {
        let (sub, map) = p3().induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(map, vec![0, 1]);
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1)]);

        let g = p3();
        let (same, map) = g.induced_subgraph(&[2, 0, 1]).unwrap();
        assert_eq!(same, g);
        assert_eq!(map, vec![0, 1, 2]);

        let k3 = ColoredGraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let (single, map) = k3.induced_subgraph(&[1]).unwrap();
        assert_eq!((single.n(), single.m(), map), (1, 0, vec![1]));

        assert!(matches!(g.induced_subgraph(&[3]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn colors_must_cover() {
        let err = ColoredGraph::new(3, [(0, 1)])
            .unwrap()
            .with_colors([0], [1])
            .unwrap_err();
        assert!(matches!(err, Error::Uncolored(2)));
        assert!(matches!(ColoredGraph::new(2, [(1, 1)]), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn mim_small_cases() {
        let two_k2 = ColoredGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(mim(&two_k2, &[0, 2], &[1, 3]).unwrap(), 2);
        let k22 = ColoredGraph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(mim(&k22, &[0, 1], &[2, 3]).unwrap(), 1);
        let p4 = ColoredGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(mim(&p4, &[0, 1], &[2, 3]).unwrap(), 1);
        assert!(mim(&p4, &[0, 1], &[1, 2]).is_err());
    }

    #[test]
    fn width_cases() {
        let iv = [(q(1, 1), q(2, 1)), (q(3, 2), q(3, 1)), (q(5, 2), q(4, 1))];
        let g = interval_graph(&iv).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let ord = interval_order(&iv).unwrap();
        assert_eq!(ord.as_slice(), &[0, 1, 2]);
        assert_eq!(order_mim_width(&g, &ord).unwrap(), 1);

        let empty = ColoredGraph::new(4, []).unwrap();
        assert_eq!(
            order_mim_width(&empty, &LinearOrder::new(vec![3, 1, 0, 2]).unwrap()).unwrap(),
            0
        );

        // edges a-b (0-1), c-d (2-3), order a, c, b, d
        let two_k2 = ColoredGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        let ord = LinearOrder::new(vec![0, 2, 1, 3]).unwrap();
        assert_eq!(cut_widths(&two_k2, &ord).unwrap(), vec![1, 2, 1]);

        assert!(order_mim_width(&ColoredGraph::new(1, []).unwrap(), &LinearOrder::identity(1)).is_err());
    }

    #[test]
    fn interval_order_edge_cases() {
        assert_eq!(interval_order(&[(q(1, 1), q(1, 1))]).unwrap().as_slice(), &[0]);
        assert!(interval_order(&[(q(2, 1), q(1, 1))]).is_err());
        // ties broken by right endpoint, then index
        let iv = [(q(0, 1), q(3, 1)), (q(0, 1), q(1, 1)), (q(0, 1), q(1, 1))];
        assert_eq!(interval_order(&iv).unwrap().as_slice(), &[1, 2, 0]);
    }

    #[test]
    fn order_validation() {
        assert!(LinearOrder::new(vec![0, 0]).is_err());
        assert!(LinearOrder::new(vec![0, 2]).is_err());
        let o = LinearOrder::new(vec![2, 0, 1]).unwrap();
        assert_eq!((o.position(2), o.at(2)), (0, 1));
    }

    #[test]
    fn hypergraph_incidence() {
        let h = Hypergraph::new(2, vec![vec![0], vec![0, 1]]).unwrap();
        let g = hypergraph_to_colored(&h).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (0, 3), (1, 3)]);
        assert!(g.is_red(0) && !g.is_blue(0) && g.is_blue(3) && !g.is_red(3));
        assert!(Hypergraph::new(2, vec![vec![]]).is_err());
        assert!(Hypergraph::new(2, vec![vec![2]]).is_err());
        let ord = h.interval_incidence_order();
        assert_eq!(ord.as_slice(), &[0, 2, 3, 1]);
    }
}
