//! Brute-force references. Deliberately naive and independent of the DAG,
//! the representative tables and the certificate characterization.

use crate::error::{Error, Result};
use crate::graph::{order_mim_width, ColoredGraph, LinearOrder};
use crate::sigma_rho::SigmaRho;

pub const FAMILY_CAP: usize = 24;
pub const MDS_CAP: usize = 24;
pub const LMIMW_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    OneMinimal,
    OneMaximal,
}

fn cap(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::SizeCap { what, actual, limit })
    } else {
        Ok(())
    }
}

/// Direct check from the definition: every blue vertex has an allowed
/// number of neighbors in `d`.
fn dominated(g: &ColoredGraph, spec: &SigmaRho, in_d: &[bool]) -> bool {
    (0..g.n()).filter(|&v| g.is_blue(v)).all(|v| {
        let k = g.neighbors(v).iter().filter(|&&w| in_d[w]).count() as u32;
        if in_d[v] {
            spec.sigma.contains(k)
        } else {
            spec.rho.contains(k)
        }
    })
}

fn members(mask: u32, red: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = (0..red.len()).filter(|&i| mask >> i & 1 == 1).map(|i| red[i]).collect();
    out.sort_unstable();
    out
}

/// Every red subset that is a red (σ, ρ)-dominating set and from which no
/// single vertex can be removed (resp. to which none can be added) keeping
/// that property. Sorted by size, then lexicographically.
pub fn brute_family(g: &ColoredGraph, spec: &SigmaRho, kind: Kind) -> Result<Vec<Vec<usize>>> {
    let red: Vec<usize> = (0..g.n()).filter(|&v| g.is_red(v)).collect();
    cap("red vertex count", red.len(), FAMILY_CAP)?;
    let mut out = Vec::new();
    let mut in_d = vec![false; g.n()];
    for mask in 0u32..(1u32 << red.len()) {
        for (i, &v) in red.iter().enumerate() {
            in_d[v] = mask >> i & 1 == 1;
        }
        if !dominated(g, spec, &in_d) {
            continue;
        }
        let ok = red.iter().all(|&v| {
            let flips = match kind {
                Kind::OneMinimal => in_d[v],
                Kind::OneMaximal => !in_d[v],
            };
            if !flips {
                return true;
            }
            in_d[v] = !in_d[v];
            let still = dominated(g, spec, &in_d);
            in_d[v] = !in_d[v];
            !still
        });
        if ok {
            out.push(members(mask, &red));
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// All minimal dominating sets of the uncolored graph.
pub fn brute_mds(g: &ColoredGraph) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    cap("vertex count", n, MDS_CAP)?;
    let closed: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(1u32 << v, |acc, &w| acc | 1 << w))
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let dominates = |mask: u32| {
        (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .fold(0u32, |acc, v| acc | closed[v])
            == full
    };
    let mut out = Vec::new();
    for mask in 0u32..=full {
        if dominates(mask)
            && (0..n)
                .filter(|&v| mask >> v & 1 == 1)
                .all(|v| !dominates(mask & !(1 << v)))
        {
            out.push((0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<usize>>());
        }
        if n == 0 {
            break;
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// Exact linear MIM-width over all `n!` orderings. Graphs with fewer than
/// two vertices have width 0.
pub fn brute_lmimw(g: &ColoredGraph) -> Result<usize> {
    let n = g.n();
    cap("vertex count", n, LMIMW_CAP)?;
    if n < 2 {
        return Ok(0);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    // Heap's algorithm
    let mut c = vec![0usize; n];
    best = best.min(order_mim_width(g, &LinearOrder::new(perm.clone())?)?);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(order_mim_width(g, &LinearOrder::new(perm.clone())?)?);
            if best == 0 {
                break;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

/// All maximal independent sets by subset enumeration.
pub fn brute_mis(g: &ColoredGraph) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    cap("vertex count", n, MDS_CAP)?;
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |a, &w| a | 1 << w))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if set.iter().any(|&v| adj[v] & mask != 0) {
            continue;
        }
        if (0..n).all(|v| mask >> v & 1 == 1 || adj[v] & mask != 0) {
            out.push(set);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// All minimal transversals of a hypergraph given as edge lists.
pub fn brute_transversals(n: usize, edges: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    cap("vertex count", n, MDS_CAP)?;
    let masks: Vec<u32> = edges.iter().map(|e| e.iter().fold(0u32, |a, &v| a | 1 << v)).collect();
    let hits = |m: u32| masks.iter().all(|&e| e & m != 0);
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if hits(mask) && (0..n).filter(|&v| mask >> v & 1 == 1).all(|v| !hits(mask & !(1 << v))) {
            out.push((0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<usize>>());
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}
