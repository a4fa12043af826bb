//! Layered path DAG whose source-to-terminal paths are in bijection with the
//! 1-minimal (or 1-maximal) red (σ, ρ)-dominating sets of a colored graph.
//!
//! Layer `j` (0..=n) holds tuples `(R, R', C, C')` describing a solution `D`
//! after the first `j` vertices of the ordering have been decided:
//!
//! * `R`  is the representative of `D ∩ A_j` (prefix table at cut `j`);
//! * `R'` is the representative of `D ∩ Ā_j` (suffix table at cut `j`);
//! * `C`  is a canonical subset of the certificate carriers in `A_j ∩ Blue`
//!   with the same red neighborhood in `Ā_j`;
//! * `C'` is the same for carriers in `Ā_j ∩ Blue` towards `A_j`.
//!
//! An arc from layer `j` to `j + 1` either skips `x_{j+1}` or selects it. The
//! count of `x_{j+1}` is read off `R_j` and `R'_{j+1}`; that is enough to
//! check that `x_{j+1}` is dominated, whether it carries certificates, and
//! whether a vertex that needs a certificate (selected vertices when
//! enumerating 1-minimal sets, unselected red vertices for 1-maximal sets)
//! has one. `R` and `C` are pushed forward deterministically, `R'` and `C'`
//! are guessed and verified against the next layer, and nodes that cannot
//! reach the terminal are pruned after counting.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::equiv::CutTables;
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, LinearOrder};
use crate::sigma_rho::{NatSet, SigmaRho};

/// Which family the DAG enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EnumMode {
    /// 1-minimal red (σ, ρ)-dominating sets.
    Minimal,
    /// 1-maximal red (σ, ρ)-dominating sets.
    Maximal,
}

/// A DAG node in vertex terms. `layer` is the number of decided vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tuple4 {
    pub layer: usize,
    pub rep: Vec<usize>,
    pub suffix_rep: Vec<usize>,
    pub carriers: Vec<usize>,
    pub suffix_carriers: Vec<usize>,
}

fn reduce_positions(
    g: &ColoredGraph,
    ord: &LinearOrder,
    mut set: Vec<usize>,
    in_target: impl Fn(usize) -> bool,
    greatest_first: bool,
) -> Vec<usize> {
    set.sort_unstable();
    set.dedup();
    let target_nbrs = |p: usize| -> Vec<usize> {
        g.neighbors(ord.at(p))
            .iter()
            .map(|&w| ord.position(w))
            .filter(|&q| in_target(q))
            .collect()
    };
    loop {
        let nbrs: Vec<Vec<usize>> = set.iter().map(|&p| target_nbrs(p)).collect();
        let mut cover: HashMap<usize, usize> = HashMap::new();
        for list in &nbrs {
            for &t in list {
                *cover.entry(t).or_default() += 1;
            }
        }
        let removable = |i: usize| nbrs[i].iter().all(|t| cover[t] >= 2);
        let pick = if greatest_first {
            (0..set.len()).rev().find(|&i| removable(i))
        } else {
            (0..set.len()).find(|&i| removable(i))
        };
        match pick {
            Some(i) => {
                set.remove(i);
            }
            None => return set,
        }
    }
}

fn to_positions(g: &ColoredGraph, ord: &LinearOrder, set: &[usize]) -> Result<Vec<usize>> {
    set.iter()
        .map(|&v| g.check_vertex(v).map(|_| ord.position(v)))
        .collect()
}

fn to_vertices(ord: &LinearOrder, pos: &[usize]) -> Vec<usize> {
    pos.iter().map(|&p| ord.at(p)).collect()
}

/// `SG_j(C)`: repeatedly drop the greatest vertex of `C` whose removal keeps
/// `N(C) ∩ Ā_j ∩ Red` unchanged. `C ⊆ A_j ∩ Blue`.
pub fn sg(g: &ColoredGraph, ord: &LinearOrder, j: usize, c: &[usize]) -> Result<Vec<usize>> {
    let pos = to_positions(g, ord, c)?;
    if pos.iter().any(|&p| p >= j || !g.is_blue(ord.at(p))) {
        return Err(Error::pre("SG expects blue vertices of the prefix"));
    }
    let out = reduce_positions(g, ord, pos, |q| q >= j && g.is_red(ord.at(q)), true);
    Ok(to_vertices(ord, &out))
}

/// `GG_j(C')`: repeatedly drop the smallest vertex of `C'` whose removal
/// keeps `N(C') ∩ A_j ∩ Red` unchanged. `C' ⊆ Ā_j ∩ Blue`.
pub fn gg(g: &ColoredGraph, ord: &LinearOrder, j: usize, c: &[usize]) -> Result<Vec<usize>> {
    let pos = to_positions(g, ord, c)?;
    if pos.iter().any(|&p| p < j || !g.is_blue(ord.at(p))) {
        return Err(Error::pre("GG expects blue vertices of the suffix"));
    }
    let out = reduce_positions(g, ord, pos, |q| q < j && g.is_red(ord.at(q)), false);
    Ok(to_vertices(ord, &out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Node {
    r: u32,
    rs: u32,
    c: u32,
    cs: u32,
}

#[derive(Clone, Copy, Debug)]
struct Successor {
    r: u32,
    rs: u32,
    /// whether `x_{j+1}` joins the forward carriers before reduction
    add_forward: bool,
    cs: u32,
}

/// Precomputed tables for the arcs between consecutive layers.
#[derive(Clone, Debug)]
pub struct DagTables {
    g: ColoredGraph,
    ord: LinearOrder,
    spec: SigmaRho,
    mode: EnumMode,
    cuts: CutTables,
    /// `advance[j][sel][r]`: prefix class at cut `j+1` of `R_j ∪ {x_{j+1}}?`.
    advance: Vec<[Vec<u32>; 2]>,
    /// `coarsen[j][(R'_j, sel)]`: suffix classes `R'_{j+1}` that coarsen to `R'_j`.
    coarsen: Vec<HashMap<(u32, bool), Vec<u32>>>,
    /// `prefix_count[j][r]`: `|N(x_{j+1}) ∩ R_j|`, uncapped.
    prefix_count: Vec<Vec<u32>>,
    /// `suffix_count[j][r']`: `|N(x_{j+1}) ∩ R'_{j+1}|`, uncapped.
    suffix_count: Vec<Vec<u32>>,
    /// `GG_j` fixpoints per cut, as sorted positions.
    fix: Vec<Vec<Vec<usize>>>,
    fix_index: Vec<HashMap<Vec<usize>, u32>>,
    /// `fix_back[j][(C'_j, add)]`: fixpoints `C'_{j+1}` with `GG_j(C'_{j+1} ∪ {x_{j+1}}?) = C'_j`.
    fix_back: Vec<HashMap<(u32, bool), Vec<u32>>>,
    /// `fix_touch[j][c']`: `x_{j+1}` has a neighbor in fixpoint `c'` of cut `j+1`.
    fix_touch: Vec<Vec<bool>>,
    future_red: Vec<bool>,
    past_red: Vec<bool>,
}

impl DagTables {
    pub fn new(g: &ColoredGraph, spec: &SigmaRho, ord: &LinearOrder, mode: EnumMode) -> Result<Self> {
        if ord.len() != g.n() {
            return Err(Error::InvalidOrder(format!(
                "ordering has {} vertices, graph has {}",
                ord.len(),
                g.n()
            )));
        }
        if spec.dhat > u8::MAX as u32 {
            return Err(Error::pre("σ/ρ boundaries too large for truncated counts"));
        }
        let n = g.n();
        let cuts = CutTables::build(g, ord, spec.dhat)?;

        let mut advance = Vec::with_capacity(n);
        let mut coarsen = Vec::with_capacity(n);
        let mut prefix_count = Vec::with_capacity(n);
        let mut suffix_count = Vec::with_capacity(n);
        let mut future_red = Vec::with_capacity(n);
        let mut past_red = Vec::with_capacity(n);
        for j in 0..n {
            let x = ord.at(j);
            let red = g.is_red(x);
            let (pre, next_pre) = (&cuts.prefix[j], &cuts.prefix[j + 1]);
            let mut adv = [Vec::with_capacity(pre.len()), Vec::with_capacity(pre.len())];
            for rep in pre.reps() {
                adv[0].push(next_pre.find_rep_unchecked(g, rep) as u32);
                adv[1].push(if red {
                    let mut with = rep.clone();
                    with.push(x);
                    next_pre.find_rep_unchecked(g, &with) as u32
                } else {
                    u32::MAX
                });
            }
            advance.push(adv);

            let (suf, next_suf) = (&cuts.suffix[j], &cuts.suffix[j + 1]);
            let mut back: HashMap<(u32, bool), Vec<u32>> = HashMap::new();
            for (i, rep) in next_suf.reps().iter().enumerate() {
                back.entry((suf.find_rep_unchecked(g, rep) as u32, false))
                    .or_default()
                    .push(i as u32);
                if red {
                    let mut with = rep.clone();
                    with.push(x);
                    back.entry((suf.find_rep_unchecked(g, &with) as u32, true))
                        .or_default()
                        .push(i as u32);
                }
            }
            coarsen.push(back);

            let count = |set: &[usize]| set.iter().filter(|&&v| g.adjacent(v, x)).count() as u32;
            prefix_count.push(pre.reps().iter().map(|r| count(r)).collect());
            suffix_count.push(next_suf.reps().iter().map(|r| count(r)).collect());

            future_red.push(g.neighbors(x).iter().any(|&w| ord.position(w) > j && g.is_red(w)));
            past_red.push(g.neighbors(x).iter().any(|&w| ord.position(w) < j && g.is_red(w)));
        }

        let fix: Vec<Vec<Vec<usize>>> = (0..=n).map(|j| gg_fixpoints(g, ord, j)).collect();
        let fix_index: Vec<HashMap<Vec<usize>, u32>> = fix
            .iter()
            .map(|list| list.iter().enumerate().map(|(i, s)| (s.clone(), i as u32)).collect())
            .collect();
        let mut fix_back = Vec::with_capacity(n);
        let mut fix_touch = Vec::with_capacity(n);
        for j in 0..n {
            let x = ord.at(j);
            let mut back: HashMap<(u32, bool), Vec<u32>> = HashMap::new();
            for (i, cand) in fix[j + 1].iter().enumerate() {
                for add in [false, true] {
                    if add && !g.is_blue(x) {
                        continue;
                    }
                    let mut set = cand.clone();
                    if add {
                        set.push(j);
                    }
                    let reduced = reduce_positions(g, ord, set, |q| q < j && g.is_red(ord.at(q)), false);
                    let target = fix_index[j][&reduced];
                    back.entry((target, add)).or_default().push(i as u32);
                }
            }
            fix_back.push(back);
            fix_touch.push(
                fix[j + 1]
                    .iter()
                    .map(|s| s.iter().any(|&p| g.adjacent(x, ord.at(p))))
                    .collect(),
            );
        }

        Ok(DagTables {
            g: g.clone(),
            ord: ord.clone(),
            spec: spec.clone(),
            mode,
            cuts,
            advance,
            coarsen,
            prefix_count,
            suffix_count,
            fix,
            fix_index,
            fix_back,
            fix_touch,
            future_red,
            past_red,
        })
    }

    pub fn graph(&self) -> &ColoredGraph {
        &self.g
    }

    pub fn order(&self) -> &LinearOrder {
        &self.ord
    }

    pub fn mode(&self) -> EnumMode {
        self.mode
    }

    pub fn cut_tables(&self) -> &CutTables {
        &self.cuts
    }

    fn source(&self, carriers: &mut Interner) -> Node {
        Node {
            r: self.cuts.prefix[0].empty_class() as u32,
            rs: self.cuts.suffix[0].empty_class() as u32,
            c: carriers.intern(Vec::new()),
            cs: self.fix_index[0][&Vec::new()],
        }
    }

    /// Every successor of a layer-`j` node when `x_{j+1}` is skipped
    /// (`select == false`) or selected.
    fn successors(&self, j: usize, node: Node, c: &[usize], select: bool, mut emit: impl FnMut(Successor)) {
        let x = self.ord.at(j);
        let red = self.g.is_red(x);
        let blue = self.g.is_blue(x);
        if select && !red {
            return;
        }
        let Some(next_suffix) = self.coarsen[j].get(&(node.rs, select)) else {
            return;
        };
        let spec = &self.spec;
        let minimal = self.mode == EnumMode::Minimal;
        let needs_cert = if minimal { select } else { !select && red };
        let (dom, carrier, own): (&NatSet, &NatSet, Option<&NatSet>) = match (select, minimal) {
            (true, true) => (&spec.sigma, &spec.sigma_minus, Some(&spec.sigma_star)),
            (true, false) => (&spec.sigma, &spec.sigma_plus, None),
            (false, true) => (&spec.rho, &spec.rho_minus, None),
            (false, false) => (&spec.rho, &spec.rho_plus, Some(&spec.rho_star)),
        };
        let r_next = self.advance[j][select as usize][node.r as usize];
        let pc = self.prefix_count[j][node.r as usize];
        let c_touch = c.iter().any(|&p| self.g.adjacent(x, self.ord.at(p)));
        for &rs_next in next_suffix {
            let k = (pc + self.suffix_count[j][rs_next as usize]).min(spec.dhat);
            let (is_carrier, self_cert) = if blue {
                if !dom.contains(k) {
                    continue;
                }
                (carrier.contains(k), own.is_some_and(|s| s.contains(k)))
            } else {
                (false, false)
            };
            let must_touch = needs_cert && !self_cert && !c_touch;
            let add_back = is_carrier && self.past_red[j];
            let Some(cands) = self.fix_back[j].get(&(node.cs, add_back)) else {
                continue;
            };
            for &cs_next in cands {
                if must_touch && !self.fix_touch[j][cs_next as usize] {
                    continue;
                }
                emit(Successor {
                    r: r_next,
                    rs: rs_next,
                    add_forward: is_carrier && self.future_red[j],
                    cs: cs_next,
                });
            }
        }
    }

    fn forward_carriers(&self, j: usize, c: &[usize], add: bool) -> Vec<usize> {
        let mut set = c.to_vec();
        if add {
            set.push(j);
        }
        reduce_positions(
            &self.g,
            &self.ord,
            set,
            |q| q > j && self.g.is_red(self.ord.at(q)),
            true,
        )
    }

    fn to_node(&self, t: &Tuple4) -> Result<(Node, Vec<usize>)> {
        let j = t.layer;
        if j >= self.g.n() {
            return Err(Error::pre(format!("no arcs leave layer {j}")));
        }
        let r = self.cuts.prefix[j].find_rep(&self.g, &t.rep)? as u32;
        let rs = self.cuts.suffix[j].find_rep(&self.g, &t.suffix_rep)? as u32;
        let mut c = to_positions(&self.g, &self.ord, &t.carriers)?;
        c.sort_unstable();
        let mut cs = to_positions(&self.g, &self.ord, &t.suffix_carriers)?;
        cs.sort_unstable();
        let cs = *self.fix_index[j]
            .get(&cs)
            .ok_or_else(|| Error::pre("suffix carriers are not a GG fixpoint of this cut"))?;
        Ok((Node { r, rs, c: 0, cs }, c))
    }

    fn step_public(&self, t: &Tuple4, select: bool) -> Result<Vec<Tuple4>> {
        let (node, c) = self.to_node(t)?;
        let j = t.layer;
        let mut out = Vec::new();
        self.successors(j, node, &c, select, |s| {
            let carriers = self.forward_carriers(j, &c, s.add_forward);
            out.push(Tuple4 {
                layer: j + 1,
                rep: self.cuts.prefix[j + 1].rep(s.r as usize).to_vec(),
                suffix_rep: self.cuts.suffix[j + 1].rep(s.rs as usize).to_vec(),
                carriers: to_vertices(&self.ord, &carriers),
                suffix_carriers: to_vertices(&self.ord, &self.fix[j + 1][s.cs as usize]),
            });
        });
        out.sort();
        Ok(out)
    }

    /// Successors of `t` that leave `x_{layer+1}` unselected.
    pub fn eps1_step(&self, t: &Tuple4) -> Result<Vec<Tuple4>> {
        self.step_public(t, false)
    }

    /// Successors of `t` that select `x_{layer+1}`.
    pub fn eps2_step(&self, t: &Tuple4) -> Result<Vec<Tuple4>> {
        self.step_public(t, true)
    }

    /// The source tuple at layer 0.
    pub fn source_tuple(&self) -> Tuple4 {
        Tuple4 {
            layer: 0,
            rep: Vec::new(),
            suffix_rep: Vec::new(),
            carriers: Vec::new(),
            suffix_carriers: Vec::new(),
        }
    }
}

/// All sets `X ⊆ Ā_j ∩ Blue` that `GG_j` leaves unchanged, i.e. every member
/// has a private neighbor in `A_j ∩ Red`. The property is hereditary, so the
/// search only extends fixpoints.
fn gg_fixpoints(g: &ColoredGraph, ord: &LinearOrder, j: usize) -> Vec<Vec<usize>> {
    let n = g.n();
    let target = |v: usize| ord.position(v) < j && g.is_red(v);
    let cands: Vec<(usize, Vec<usize>)> = (j..n)
        .filter(|&p| g.is_blue(ord.at(p)))
        .map(|p| {
            let t: Vec<usize> = g.neighbors(ord.at(p)).iter().copied().filter(|&w| target(w)).collect();
            (p, t)
        })
        .filter(|(_, t)| !t.is_empty())
        .collect();
    let mut out = vec![Vec::new()];
    let mut cover = vec![0usize; n];
    let mut chosen: Vec<usize> = Vec::new();
    extend_fixpoints(&cands, 0, &mut chosen, &mut cover, &mut out);
    out
}

fn extend_fixpoints(
    cands: &[(usize, Vec<usize>)],
    start: usize,
    chosen: &mut Vec<usize>,
    cover: &mut [usize],
    out: &mut Vec<Vec<usize>>,
) {
    for i in start..cands.len() {
        let nbrs = &cands[i].1;
        if nbrs.iter().all(|&t| cover[t] > 0) {
            continue;
        }
        for &t in nbrs {
            cover[t] += 1;
        }
        let keeps_private = chosen.iter().all(|&ci| cands[ci].1.iter().any(|&t| cover[t] == 1));
        if keeps_private {
            chosen.push(i);
            out.push(chosen.iter().map(|&ci| cands[ci].0).collect());
            extend_fixpoints(cands, i + 1, chosen, cover, out);
            chosen.pop();
        }
        for &t in nbrs {
            cover[t] -= 1;
        }
    }
}

#[derive(Default, Clone, Debug)]
struct Interner {
    sets: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, u32>,
}

impl Interner {
    fn intern(&mut self, set: Vec<usize>) -> u32 {
        if let Some(&i) = self.index.get(&set) {
            return i;
        }
        let i = self.sets.len() as u32;
        self.index.insert(set.clone(), i);
        self.sets.push(set);
        i
    }
}

#[derive(Clone, Debug, Default)]
struct Layer {
    nodes: Vec<Node>,
    carriers: Interner,
    /// `(target, selected)` sorted with skips first.
    out: Vec<Vec<(u32, bool)>>,
    paths: Vec<BigUint>,
}

/// Delay instrumentation for one enumeration run.
///
/// A step is one arc traversal forward or backward during the depth-first
/// walk; delays are counted in steps, not wall time.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumStats {
    pub outputs: u64,
    pub total_steps: u64,
    /// Steps before the first output.
    pub first_delay: u64,
    /// Largest number of steps between consecutive outputs (including the
    /// stretch after the last output until the walk ends).
    pub max_delay: u64,
}

impl EnumStats {
    pub fn mean_delay(&self) -> f64 {
        if self.outputs == 0 {
            0.0
        } else {
            self.total_steps as f64 / self.outputs as f64
        }
    }
}

/// The pruned layered DAG with exact path counts.
#[derive(Clone, Debug)]
pub struct LayeredDag {
    tables: DagTables,
    layers: Vec<Layer>,
    built_nodes: usize,
    built_arcs: usize,
}

impl LayeredDag {
    pub fn build(g: &ColoredGraph, spec: &SigmaRho, ord: &LinearOrder, mode: EnumMode) -> Result<Self> {
        let tables = DagTables::new(g, spec, ord, mode)?;
        Ok(Self::from_tables(tables))
    }

    pub fn from_tables(tables: DagTables) -> Self {
        let n = tables.g.n();
        let mut layers: Vec<Layer> = (0..=n).map(|_| Layer::default()).collect();
        let src = tables.source(&mut layers[0].carriers);
        layers[0].nodes.push(src);
        let mut built_arcs = 0;

        for j in 0..n {
            let (head, tail) = layers.split_at_mut(j + 1);
            let cur = &mut head[j];
            let next = &mut tail[0];
            let mut index: HashMap<Node, u32> = HashMap::new();
            let mut carrier_cache: HashMap<(u32, bool), u32> = HashMap::new();
            cur.out = vec![Vec::new(); cur.nodes.len()];
            for (i, &node) in cur.nodes.iter().enumerate() {
                let c = cur.carriers.sets[node.c as usize].clone();
                for select in [false, true] {
                    let mut succ = Vec::new();
                    tables.successors(j, node, &c, select, |s| succ.push(s));
                    for s in succ {
                        let c_next = *carrier_cache
                            .entry((node.c, s.add_forward))
                            .or_insert_with(|| next.carriers.intern(tables.forward_carriers(j, &c, s.add_forward)));
                        let key = Node {
                            r: s.r,
                            rs: s.rs,
                            c: c_next,
                            cs: s.cs,
                        };
                        let id = *index.entry(key).or_insert_with(|| {
                            next.nodes.push(key);
                            (next.nodes.len() - 1) as u32
                        });
                        cur.out[i].push((id, select));
                        built_arcs += 1;
                    }
                }
            }
        }
        layers[n].out = vec![Vec::new(); layers[n].nodes.len()];
        debug_assert!(layers[n].nodes.len() <= 1, "the last layer holds only the terminal");
        let built_nodes = layers.iter().map(|l| l.nodes.len()).sum();

        // Path counts, then drop every node without a path to the terminal.
        layers[n].paths = vec![BigUint::one(); layers[n].nodes.len()];
        for j in (0..n).rev() {
            let (head, tail) = layers.split_at_mut(j + 1);
            let cur = &mut head[j];
            let next = &tail[0];
            cur.paths = cur
                .out
                .iter()
                .map(|arcs| arcs.iter().map(|&(t, _)| &next.paths[t as usize]).sum())
                .collect();
        }
        for j in (0..=n).rev() {
            let keep: Vec<bool> = layers[j].paths.iter().map(|p| !p.is_zero()).collect();
            let mut remap = vec![u32::MAX; keep.len()];
            let mut fresh = 0u32;
            for (i, &k) in keep.iter().enumerate() {
                if k {
                    remap[i] = fresh;
                    fresh += 1;
                }
            }
            let layer = &mut layers[j];
            layer.nodes = retain_by(&layer.nodes, &keep);
            layer.paths = retain_by(&layer.paths, &keep);
            layer.out = retain_by(&layer.out, &keep);
            if j > 0 {
                // earlier layer arcs point into this one
                let prev = &mut layers[j - 1];
                for arcs in &mut prev.out {
                    arcs.retain(|&(t, _)| remap[t as usize] != u32::MAX);
                    for arc in arcs.iter_mut() {
                        arc.0 = remap[arc.0 as usize];
                    }
                }
            }
        }
        for j in 0..n {
            let (head, tail) = layers.split_at_mut(j + 1);
            let next = &tail[0];
            for arcs in &mut head[j].out {
                arcs.sort_by_key(|&(t, sel)| (sel, next.nodes[t as usize]));
            }
        }

        LayeredDag {
            tables,
            layers,
            built_nodes,
            built_arcs,
        }
    }

    pub fn tables(&self) -> &DagTables {
        &self.tables
    }

    pub fn mode(&self) -> EnumMode {
        self.tables.mode
    }

    /// Number of solutions (paths from source to terminal).
    pub fn count(&self) -> BigUint {
        self.layers[0].paths.first().cloned().unwrap_or_default()
    }

    /// Nodes kept after pruning, per layer.
    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.nodes.len()).collect()
    }

    pub fn node_count(&self) -> usize {
        self.layers.iter().map(|l| l.nodes.len()).sum()
    }

    pub fn arc_count(&self) -> usize {
        self.layers.iter().flat_map(|l| &l.out).map(Vec::len).sum()
    }

    /// `(nodes, arcs)` generated before pruning.
    pub fn built_size(&self) -> (usize, usize) {
        (self.built_nodes, self.built_arcs)
    }

    fn tuple_of(&self, j: usize, node: Node) -> Tuple4 {
        let t = &self.tables;
        Tuple4 {
            layer: j,
            rep: t.cuts.prefix[j].rep(node.r as usize).to_vec(),
            suffix_rep: t.cuts.suffix[j].rep(node.rs as usize).to_vec(),
            carriers: to_vertices(&t.ord, &self.layers[j].carriers.sets[node.c as usize]),
            suffix_carriers: to_vertices(&t.ord, &t.fix[j][node.cs as usize]),
        }
    }

    /// Tuples of one layer, in node order.
    pub fn tuples(&self, layer: usize) -> Vec<Tuple4> {
        self.layers[layer]
            .nodes
            .iter()
            .map(|&node| self.tuple_of(layer, node))
            .collect()
    }

    /// Path counts of one layer, aligned with [`LayeredDag::tuples`].
    pub fn path_counts(&self, layer: usize) -> &[BigUint] {
        &self.layers[layer].paths
    }

    /// Checks that every kept node's count is the sum over its kept
    /// out-neighbors and that the terminal counts one.
    pub fn check_path_sums(&self) -> bool {
        let n = self.layers.len() - 1;
        if self.layers[n].paths.iter().any(|p| !p.is_one()) {
            return false;
        }
        (0..n).all(|j| {
            let next = &self.layers[j + 1];
            self.layers[j].out.iter().zip(&self.layers[j].paths).all(|(arcs, p)| {
                !p.is_zero() && arcs.iter().map(|&(t, _)| &next.paths[t as usize]).sum::<BigUint>() == *p
            })
        })
    }

    /// Largest `|C|` and `|C'|` over all kept nodes.
    pub fn max_carrier_sizes(&self) -> (usize, usize) {
        let mut best = (0, 0);
        for (j, layer) in self.layers.iter().enumerate() {
            for node in &layer.nodes {
                best.0 = best.0.max(layer.carriers.sets[node.c as usize].len());
                best.1 = best.1.max(self.tables.fix[j][node.cs as usize].len());
            }
        }
        best
    }

    /// Nodes entered by selecting the first vertex of a solution: reached
    /// from the source by skips only, then one selection. Returned with the
    /// selection's layer (the 1-based index of the selected vertex).
    pub fn source_arcs(&self) -> Vec<(usize, Tuple4)> {
        let n = self.layers.len() - 1;
        let mut out = Vec::new();
        let mut frontier: Vec<u32> = if self.layers[0].nodes.is_empty() {
            Vec::new()
        } else {
            vec![0]
        };
        for j in 0..n {
            let mut next = Vec::new();
            for &i in &frontier {
                for &(t, sel) in &self.layers[j].out[i as usize] {
                    if sel {
                        out.push((j + 1, self.tuple_of(j + 1, self.layers[j + 1].nodes[t as usize])));
                    } else {
                        next.push(t);
                    }
                }
            }
            next.sort_unstable();
            next.dedup();
            frontier = next;
        }
        out.sort();
        out.dedup();
        out
    }

    /// True if `t` is a kept node from which the terminal is reached without
    /// selecting any further vertex.
    pub fn is_terminal_arc(&self, t: &Tuple4) -> bool {
        let n = self.layers.len() - 1;
        let Some(mut i) = self.find_node(t) else {
            return false;
        };
        for j in t.layer..n {
            match self.layers[j].out[i].iter().find(|&&(_, sel)| !sel) {
                Some(&(next, _)) => i = next as usize,
                None => return false,
            }
        }
        true
    }

    fn find_node(&self, t: &Tuple4) -> Option<usize> {
        if t.layer >= self.layers.len() {
            return None;
        }
        self.layers[t.layer]
            .nodes
            .iter()
            .position(|&node| self.tuple_of(t.layer, node) == *t)
    }

    /// Streams every solution (vertices ascending) to `sink`, depth first,
    /// skips before selections. Stops at the first sink error.
    pub fn enumerate<E>(&self, sink: impl FnMut(&[usize]) -> Result<(), E>) -> Result<EnumStats, E> {
        self.walk(u64::MAX, sink)
    }

    /// Like [`LayeredDag::enumerate`] but returns right after the
    /// `limit`-th output; the stats then cover only the steps walked so far.
    pub fn enumerate_first<E>(&self, limit: u64, sink: impl FnMut(&[usize]) -> Result<(), E>) -> Result<EnumStats, E> {
        self.walk(limit, sink)
    }

    fn walk<E>(&self, limit: u64, mut sink: impl FnMut(&[usize]) -> Result<(), E>) -> Result<EnumStats, E> {
        let n = self.layers.len() - 1;
        let mut stats = EnumStats::default();
        if self.layers[0].nodes.is_empty() {
            return Ok(stats);
        }
        let ord = &self.tables.ord;
        // (layer, node, next arc, entered by selection)
        let mut stack: Vec<(usize, u32, usize, bool)> = vec![(0, 0, 0, false)];
        let mut chosen: Vec<usize> = Vec::new();
        let mut since = 0u64;
        let mut buf = Vec::new();
        while let Some(top) = stack.last_mut() {
            let (j, i, next, _) = *top;
            if j == n {
                buf.clear();
                buf.extend_from_slice(&chosen);
                buf.sort_unstable();
                if stats.outputs == 0 {
                    stats.first_delay = since;
                }
                stats.max_delay = stats.max_delay.max(since);
                stats.outputs += 1;
                since = 0;
                sink(&buf)?;
                if stats.outputs >= limit {
                    return Ok(stats);
                }
            }
            let arcs = if j < n {
                &self.layers[j].out[i as usize]
            } else {
                &Vec::new()
            };
            if next < arcs.len() {
                top.2 += 1;
                let (t, sel) = arcs[next];
                if sel {
                    chosen.push(ord.at(j));
                }
                stack.push((j + 1, t, 0, sel));
            } else {
                let (_, _, _, sel) = stack.pop().expect("non-empty");
                if sel {
                    chosen.pop();
                }
            }
            since += 1;
            stats.total_steps += 1;
        }
        stats.max_delay = stats.max_delay.max(since);
        Ok(stats)
    }

    /// Collects every solution.
    pub fn solutions(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let _ = self.enumerate(|s| -> Result<(), ()> {
            out.push(s.to_vec());
            Ok(())
        });
        out
    }
}

fn retain_by<T: Clone>(items: &[T], keep: &[bool]) -> Vec<T> {
    items
        .iter()
        .zip(keep)
        .filter(|(_, &k)| k)
        .map(|(x, _)| x.clone())
        .collect()
}

/// Number of 1-minimal / 1-maximal red (σ, ρ)-dominating sets.
pub fn count(g: &ColoredGraph, spec: &SigmaRho, ord: &LinearOrder, mode: EnumMode) -> Result<BigUint> {
    Ok(LayeredDag::build(g, spec, ord, mode)?.count())
}
