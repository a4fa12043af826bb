//! Unit square graphs: realizations, the fractional-part ordering, and the
//! flipping enumeration of all minimal dominating sets.

use std::collections::{HashSet, VecDeque};

use num_traits::Signed;

use crate::dag::{EnumMode, LayeredDag};
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, LinearOrder, Rational};
use crate::mis::mis_enumerate;
use crate::sigma_rho::SigmaRho;

/// Plane coordinates of every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    points: Vec<(Rational, Rational)>,
}

impl Realization {
    pub fn new(points: Vec<(Rational, Rational)>) -> Self {
        Realization { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, v: usize) -> &(Rational, Rational) {
        &self.points[v]
    }

    /// Fractional part of the x coordinate.
    pub fn frac(&self, v: usize) -> Rational {
        let x = &self.points[v].0;
        x - x.floor()
    }

    /// True iff the L∞ distance between the two points is below one.
    pub fn close(&self, u: usize, v: usize) -> bool {
        let (xu, yu) = &self.points[u];
        let (xv, yv) = &self.points[v];
        let one = Rational::from_integer(1.into());
        (xu - xv).abs() < one && (yu - yv).abs() < one
    }
}

/// The unit square graph of `points` (red = blue = V) with its realization.
pub fn realize(points: Vec<(Rational, Rational)>) -> Result<(ColoredGraph, Realization)> {
    let f = Realization::new(points);
    let n = f.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if f.close(u, v) {
                edges.push((u, v));
            }
        }
    }
    Ok((ColoredGraph::new(n, edges)?, f))
}

/// Vertices of `s` by increasing fractional x, ties by index.
pub fn frac_order(f: &Realization, s: &[usize]) -> Result<Vec<usize>> {
    if s.is_empty() {
        return Err(Error::pre("frac_order needs a non-empty vertex set"));
    }
    if let Some(&v) = s.iter().find(|&&v| v >= f.len()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: f.len() });
    }
    let mut seq = s.to_vec();
    seq.sort_unstable();
    seq.dedup();
    seq.sort_by(|&a, &b| f.frac(a).cmp(&f.frac(b)).then(a.cmp(&b)));
    Ok(seq)
}

/// `frac_order` over the whole vertex set.
pub fn frac_linear_order(f: &Realization) -> Result<LinearOrder> {
    if f.is_empty() {
        return Ok(LinearOrder::identity(0));
    }
    LinearOrder::new(frac_order(f, &(0..f.len()).collect::<Vec<_>>())?)
}

/// Vertices at distance at most `r` from `u`, ascending.
pub fn ball(g: &ColoredGraph, u: usize, r: usize) -> Result<Vec<usize>> {
    g.check_vertex(u)?;
    let mut dist = vec![usize::MAX; g.n()];
    dist[u] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(v) = queue.pop_front() {
        if dist[v] == r {
            continue;
        }
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    Ok((0..g.n()).filter(|&v| dist[v] != usize::MAX).collect())
}

fn marks(g: &ColoredGraph, d: &[usize]) -> Result<Vec<bool>> {
    let mut m = vec![false; g.n()];
    for &v in d {
        g.check_vertex(v)?;
        m[v] = true;
    }
    Ok(m)
}

/// `cover[v]` = number of members of `d` in `N[v]`.
fn cover_counts(g: &ColoredGraph, in_d: &[bool]) -> Vec<usize> {
    (0..g.n())
        .map(|v| in_d[v] as usize + g.neighbors(v).iter().filter(|&&w| in_d[w]).count())
        .collect()
}

/// Minimal dominating subset of `d` obtained by repeatedly deleting the
/// smallest-index vertex whose deletion keeps domination.
pub fn greedy_removal(g: &ColoredGraph, d: &[usize]) -> Result<Vec<usize>> {
    let mut in_d = marks(g, d)?;
    let mut cover = cover_counts(g, &in_d);
    if cover.contains(&0) {
        return Err(Error::pre("greedy removal needs a dominating set"));
    }
    // a vertex that cannot be removed never becomes removable later, so one
    // ascending pass applies the rule to exhaustion
    for v in 0..g.n() {
        if in_d[v] && cover[v] >= 2 && g.neighbors(v).iter().all(|&w| cover[w] >= 2) {
            in_d[v] = false;
            cover[v] -= 1;
            for &w in g.neighbors(v) {
                cover[w] -= 1;
            }
        }
    }
    Ok((0..g.n()).filter(|&v| in_d[v]).collect())
}

/// Certificates of `u ∈ D`: vertices of `N[u]` (closed) or `N(u)` (open)
/// dominated by no vertex of `D \ {u}`.
pub fn cert_set(g: &ColoredGraph, d: &[usize], u: usize, closed: bool) -> Result<Vec<usize>> {
    let in_d = marks(g, d)?;
    g.check_vertex(u)?;
    if !in_d[u] {
        return Err(Error::pre(format!("vertex {u} is not in D")));
    }
    let private = |v: usize| !(v != u && in_d[v]) && !g.neighbors(v).iter().any(|&w| w != u && in_d[w]);
    let mut out: Vec<usize> = g.neighbors(u).iter().copied().filter(|&v| private(v)).collect();
    if closed && private(u) {
        out.push(u);
    }
    out.sort_unstable();
    Ok(out)
}

fn is_independent(g: &ColoredGraph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &a)| set[i + 1..].iter().all(|&b| !g.adjacent(a, b)))
}

fn has_isolated(g: &ColoredGraph, d: &[usize]) -> bool {
    d.iter().any(|&v| !d.iter().any(|&w| g.adjacent(v, w)))
}

/// Runs the child-generating step for one `(u, X)`: every minimal red
/// dominating set `R` of the auxiliary colored graph yields
/// `greedy_removal((D★ \ X) ∪ {u} ∪ R)`.
pub fn flip_children(
    g: &ColoredGraph,
    f: &Realization,
    dstar: &[usize],
    u: usize,
    x: &[usize],
    mut sink: impl FnMut(Vec<usize>) -> Result<()>,
) -> Result<()> {
    let in_star = marks(g, dstar)?;
    g.check_vertex(u)?;
    if in_star[u] {
        return Err(Error::pre(format!("vertex {u} is already in D★")));
    }
    if x.is_empty() || x.iter().any(|&v| v >= g.n() || !in_star[v] || !g.adjacent(u, v)) {
        return Err(Error::pre("X must be a non-empty subset of D★ ∩ N(u)"));
    }
    if !is_independent(g, x) {
        return Err(Error::pre("X must be independent"));
    }
    if !has_isolated(g, dstar) {
        return Err(Error::pre("G[D★] has no isolated vertex"));
    }
    let mut in_prime = in_star.clone();
    for &v in x {
        in_prime[v] = false;
    }
    in_prime[u] = true;
    let d_prime: Vec<usize> = (0..g.n()).filter(|&v| in_prime[v]).collect();
    let cover = cover_counts(g, &in_prime);
    let blue: Vec<usize> = (0..g.n()).filter(|&v| cover[v] == 0).collect();
    if blue.is_empty() {
        return sink(greedy_removal(g, &d_prime)?);
    }
    let near_x = |v: usize| x.iter().any(|&a| a == v || g.adjacent(a, v));
    let mut red: Vec<usize> = blue
        .iter()
        .flat_map(|&b| g.neighbors(b).iter().copied())
        .filter(|&v| !near_x(v))
        .collect();
    red.sort_unstable();
    red.dedup();
    let mut verts: Vec<usize> = blue.iter().chain(&red).copied().collect();
    verts.sort_unstable();
    verts.dedup();
    let (sub, map) = g.induced_subgraph(&verts)?;
    let local = |v: usize| map.binary_search(&v).expect("vertex of H");
    let h = sub.with_colors(
        red.iter().map(|&v| local(v)).collect::<Vec<_>>(),
        blue.iter().map(|&v| local(v)).collect::<Vec<_>>(),
    )?;
    let seq: Vec<usize> = frac_order(f, &verts)?.into_iter().map(local).collect();
    let ord = LinearOrder::new(seq)?;
    let dag = LayeredDag::build(&h, &SigmaRho::domination(), &ord, EnumMode::Minimal)?;
    dag.enumerate(|r| {
        let mut all = d_prime.clone();
        all.extend(r.iter().map(|&i| map[i]));
        sink(greedy_removal(g, &all)?)
    })?;
    Ok(())
}

/// Non-empty independent subsets of `cands`, in lexicographic DFS order.
fn independent_subsets(g: &ColoredGraph, cands: &[usize]) -> Vec<Vec<usize>> {
    fn rec(g: &ColoredGraph, cands: &[usize], start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for i in start..cands.len() {
            let v = cands[i];
            if cur.iter().any(|&w| g.adjacent(v, w)) {
                continue;
            }
            cur.push(v);
            out.push(cur.clone());
            rec(g, cands, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(g, cands, 0, &mut Vec::new(), &mut out);
    out
}

/// How a set was first reached by the driver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// A maximal independent set.
    Seed,
    /// Produced by flipping `u` and `x` in the set with output index `parent`.
    Flip { parent: usize, u: usize, x: Vec<usize> },
}

/// Every set the driver emitted, in emission order, with provenance.
#[derive(Clone, Debug, Default)]
pub struct FlipLog {
    pub sets: Vec<Vec<usize>>,
    pub provenance: Vec<Provenance>,
    /// Calls to [`flip_children`].
    pub flips: usize,
}

/// Emits every minimal dominating set of the unit square graph `g` realized
/// by `f` exactly once: all maximal independent sets first, then children
/// found by flipping, breadth first.
pub fn enumerate_all_mds(
    g: &ColoredGraph,
    f: &Realization,
    mut sink: impl FnMut(&[usize]) -> Result<()>,
) -> Result<FlipLog> {
    if f.len() != g.n() {
        return Err(Error::pre("realization and graph sizes differ"));
    }
    let mut log = FlipLog::default();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    mis_enumerate(g, |s| {
        seen.insert(s.to_vec());
        queue.push_back(log.sets.len());
        log.sets.push(s.to_vec());
        log.provenance.push(Provenance::Seed);
        sink(s)
    })?;
    while let Some(idx) = queue.pop_front() {
        let dstar = log.sets[idx].clone();
        if !has_isolated(g, &dstar) {
            continue;
        }
        let in_star = marks(g, &dstar)?;
        for u in (0..g.n()).filter(|&u| !in_star[u]) {
            let cands: Vec<usize> = g.neighbors(u).iter().copied().filter(|&v| in_star[v]).collect();
            let mut cands = cands;
            cands.sort_unstable();
            for x in independent_subsets(g, &cands) {
                debug_assert!(
                    x.len() <= 4,
                    "independent subsets of a neighborhood have at most 4 vertices"
                );
                log.flips += 1;
                flip_children(g, f, &dstar, u, &x, |d| {
                    if seen.insert(d.clone()) {
                        sink(&d)?;
                        queue.push_back(log.sets.len());
                        log.sets.push(d);
                        log.provenance.push(Provenance::Flip {
                            parent: idx,
                            u,
                            x: x.clone(),
                        });
                    }
                    Ok(())
                })?;
            }
        }
    }
    Ok(log)
}

/// The lexicographically first maximal independent subset of `C_D(u)`.
pub fn canonical_flip_set(g: &ColoredGraph, d: &[usize], u: usize) -> Result<Vec<usize>> {
    let certs = cert_set(g, d, u, false)?;
    let mut x: Vec<usize> = Vec::new();
    for v in certs {
        if !x.iter().any(|&w| g.adjacent(v, w)) {
            x.push(v);
        }
    }
    Ok(x)
}

/// The parent of the minimal dominating set `D` with respect to flipping `u`
/// and `X`: `greedy_removal((D \ {u}) ∪ X)`. Requires `u` to have a neighbor
/// in `D` and `X` to be a maximal independent subset of `C_D(u)`.
pub fn parent_of(g: &ColoredGraph, d: &[usize], u: usize, x: &[usize]) -> Result<Vec<usize>> {
    let certs = cert_set(g, d, u, false)?;
    if !d.iter().any(|&w| g.adjacent(u, w)) {
        return Err(Error::pre(format!("vertex {u} is isolated in G[D]")));
    }
    if x.is_empty() || !x.iter().all(|v| certs.contains(v)) || !is_independent(g, x) {
        return Err(Error::pre("X must be a non-empty independent subset of C_D(u)"));
    }
    if certs
        .iter()
        .any(|&c| !x.contains(&c) && !x.iter().any(|&w| g.adjacent(c, w)))
    {
        return Err(Error::pre("X is not maximal in C_D(u)"));
    }
    let mut set: Vec<usize> = d.iter().copied().filter(|&v| v != u).collect();
    set.extend_from_slice(x);
    greedy_removal(g, &set)
}

/// True iff `D` is a child of `D★` with respect to flipping `u` and `X`.
pub fn is_child(g: &ColoredGraph, dstar: &[usize], d: &[usize], u: usize, x: &[usize]) -> bool {
    if !d.contains(&u) {
        return false;
    }
    match parent_of(g, d, u, x) {
        Ok(mut p) => {
            let mut want = dstar.to_vec();
            want.sort_unstable();
            p.sort_unstable();
            p == want
        }
        Err(_) => false,
    }
}
