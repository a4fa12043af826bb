//! Finite / co-finite sets of naturals and (σ, ρ)-domination semantics.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::ColoredGraph;

/// A finite or co-finite subset of ℕ, stored by its boundary list: the
/// members of a finite set, or the non-members of a co-finite one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NatSet {
    cofinite: bool,
    boundary: Vec<u32>,
}

impl NatSet {
    pub fn finite(members: impl IntoIterator<Item = u32>) -> Self {
        Self::build(false, members)
    }

    pub fn cofinite(non_members: impl IntoIterator<Item = u32>) -> Self {
        Self::build(true, non_members)
    }

    fn build(cofinite: bool, items: impl IntoIterator<Item = u32>) -> Self {
        let mut boundary: Vec<u32> = items.into_iter().collect();
        boundary.sort_unstable();
        boundary.dedup();
        NatSet { cofinite, boundary }
    }

    /// ℕ
    pub fn all() -> Self {
        Self::cofinite([])
    }

    /// ℕ* = ℕ \ {0}
    pub fn positive() -> Self {
        Self::cofinite([0])
    }

    pub fn empty() -> Self {
        Self::finite([])
    }

    pub fn is_cofinite(&self) -> bool {
        self.cofinite
    }

    pub fn boundary(&self) -> &[u32] {
        &self.boundary
    }

    #[inline]
    pub fn contains(&self, k: u32) -> bool {
        self.boundary.binary_search(&k).is_ok() != self.cofinite
    }

    /// Smallest `t` such that membership is constant on `[t, ∞)`:
    /// 0 for ℕ (and ∅), `1 + max boundary` otherwise.
    pub fn d_value(&self) -> u32 {
        self.boundary.last().map_or(0, |&m| m + 1)
    }

    /// Membership of every `k >= d_value()`.
    fn tail(&self) -> bool {
        self.cofinite
    }

    /// Set defined pointwise by `pred` below `limit` and constant `tail` above.
    fn tabulate(limit: u32, tail: bool, pred: impl Fn(u32) -> bool) -> Self {
        let boundary = (0..limit).filter(|&k| pred(k) != tail);
        Self::build(tail, boundary)
    }

    fn horizon(&self, other: &NatSet) -> u32 {
        self.d_value().max(other.d_value()) + 2
    }

    pub fn difference(&self, other: &NatSet) -> NatSet {
        Self::tabulate(self.horizon(other), self.tail() && !other.tail(), |k| {
            self.contains(k) && !other.contains(k)
        })
    }

    /// `{i ∈ S | i - 1 ∉ S}` (with `-1 ∉ S`).
    pub fn minus_boundary(&self) -> NatSet {
        Self::tabulate(self.d_value() + 2, false, |k| {
            self.contains(k) && (k == 0 || !self.contains(k - 1))
        })
    }

    /// `{i ∈ S | i + 1 ∉ S}`.
    pub fn plus_boundary(&self) -> NatSet {
        Self::tabulate(self.d_value() + 2, false, |k| self.contains(k) && !self.contains(k + 1))
    }
}

impl fmt::Display for NatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.cofinite { "cofinite" } else { "finite" };
        write!(f, "{kind}:{{")?;
        for (i, b) in self.boundary.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for NatSet {
    type Err = Error;

    /// Parses `finite:{a,b,...}` or `cofinite:{a,b,...}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(1, format!("expected finite:{{..}} or cofinite:{{..}}, got {s:?}")))?;
        let body = rest
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::parse(1, format!("missing braces in {s:?}")))?;
        let items = body
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|e| Error::parse(1, format!("bad natural {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        match kind.trim() {
            "finite" => Ok(NatSet::finite(items)),
            "cofinite" => Ok(NatSet::cofinite(items)),
            other => Err(Error::parse(1, format!("unknown set kind {other:?}"))),
        }
    }
}

/// Which pair of sets a domination test uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// (σ, ρ)
    Base,
    /// (σ*, ρ*)
    Star,
    /// (σ⁻, ρ⁻)
    Minus,
    /// (σ⁺, ρ⁺)
    Plus,
}

/// σ, ρ and their derived sets, with truncation depths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaRho {
    pub sigma: NatSet,
    pub rho: NatSet,
    pub sigma_star: NatSet,
    pub rho_star: NatSet,
    pub sigma_minus: NatSet,
    pub rho_minus: NatSet,
    pub sigma_plus: NatSet,
    pub rho_plus: NatSet,
    /// `max(d(σ), d(ρ))`
    pub d: u32,
    /// Truncation depth for neighbor counts; large enough to decide all four
    /// mode pairs.
    pub dhat: u32,
}

impl SigmaRho {
    pub fn new(sigma: NatSet, rho: NatSet) -> Self {
        let sigma_star = sigma.difference(&rho);
        let rho_star = rho.difference(&sigma);
        let sigma_minus = sigma.minus_boundary();
        let rho_minus = rho.minus_boundary();
        let sigma_plus = sigma.plus_boundary();
        let rho_plus = rho.plus_boundary();
        let d = sigma.d_value().max(rho.d_value());
        SigmaRho {
            sigma,
            rho,
            sigma_star,
            rho_star,
            sigma_minus,
            rho_minus,
            sigma_plus,
            rho_plus,
            d,
            dhat: d + 1,
        }
    }

    /// Classical domination: (ℕ, ℕ*).
    pub fn domination() -> Self {
        Self::new(NatSet::all(), NatSet::positive())
    }

    /// Named presets: `domination`, `total-domination`,
    /// `independent-domination`, `perfect-domination`.
    pub fn preset(name: &str) -> Option<Self> {
        let (s, r) = match name {
            "domination" => (NatSet::all(), NatSet::positive()),
            "total-domination" => (NatSet::positive(), NatSet::positive()),
            "independent-domination" => (NatSet::finite([0]), NatSet::positive()),
            "perfect-domination" => (NatSet::all(), NatSet::finite([1])),
            _ => return None,
        };
        Some(Self::new(s, r))
    }

    /// The `(σ-like, ρ-like)` pair selected by `mode`.
    pub fn pair(&self, mode: Mode) -> (&NatSet, &NatSet) {
        match mode {
            Mode::Base => (&self.sigma, &self.rho),
            Mode::Star => (&self.sigma_star, &self.rho_star),
            Mode::Minus => (&self.sigma_minus, &self.rho_minus),
            Mode::Plus => (&self.sigma_plus, &self.rho_plus),
        }
    }

    /// d-value of the pair selected by `mode`.
    pub fn d_of(&self, mode: Mode) -> u32 {
        let (a, b) = self.pair(mode);
        a.d_value().max(b.d_value())
    }
}

fn to_set(g: &ColoredGraph, d: &[usize]) -> Result<Vec<bool>> {
    let mut mark = vec![false; g.n()];
    for &v in d {
        g.check_vertex(v)?;
        mark[v] = true;
    }
    Ok(mark)
}

fn check_red(g: &ColoredGraph, d: &[usize]) -> Result<()> {
    match d.iter().find(|&&v| !g.is_red(v)) {
        Some(v) => Err(Error::pre(format!("vertex {v} of D is not red"))),
        None => Ok(()),
    }
}

#[inline]
fn count_in(g: &ColoredGraph, v: usize, mark: &[bool]) -> u32 {
    g.neighbors(v).iter().filter(|&&w| mark[w]).count() as u32
}

/// True iff `D` (μ, μ')-dominates every vertex of `U`, where `(μ, μ')` is the
/// pair picked by `mode`.
pub fn dominates(g: &ColoredGraph, spec: &SigmaRho, d: &[usize], u: &[usize], mode: Mode) -> Result<bool> {
    check_red(g, d)?;
    let mark = to_set(g, d)?;
    for &v in u {
        g.check_vertex(v)?;
    }
    let (mu_in, mu_out) = spec.pair(mode);
    Ok(u.iter().all(|&v| {
        let k = count_in(g, v, &mark);
        if mark[v] {
            mu_in.contains(k)
        } else {
            mu_out.contains(k)
        }
    }))
}

/// True iff `D` is a red (σ, ρ)-dominating set.
pub fn is_dominating(g: &ColoredGraph, spec: &SigmaRho, d: &[usize]) -> Result<bool> {
    let blue: Vec<usize> = g.blue().ones().collect();
    dominates(g, spec, d, &blue, Mode::Base)
}

fn check_certificate_pre(g: &ColoredGraph, spec: &SigmaRho, d: &[usize]) -> Result<Vec<bool>> {
    if !is_dominating(g, spec, d)? {
        return Err(Error::pre("D is not a red (σ,ρ)-dominating set"));
    }
    to_set(g, d)
}

fn certifies(g: &ColoredGraph, spec: &SigmaRho, mark: &[bool], u: usize, v: usize) -> bool {
    if !g.is_blue(v) {
        return false;
    }
    let k = count_in(g, v, mark);
    if u == v {
        return if mark[u] {
            spec.sigma_star.contains(k)
        } else {
            spec.rho_star.contains(k)
        };
    }
    if !g.adjacent(u, v) {
        return false;
    }
    let (sm, rm) = if mark[u] {
        (&spec.sigma_minus, &spec.rho_minus)
    } else {
        (&spec.sigma_plus, &spec.rho_plus)
    };
    if mark[v] {
        sm.contains(k)
    } else {
        rm.contains(k)
    }
}

/// True iff `v` certifies `u` with respect to the dominating set `D`: for
/// `u ∈ D`, `D \ {u}` fails to dominate `v`; for `u ∉ D`, `D ∪ {u}` does.
pub fn is_certificate(g: &ColoredGraph, spec: &SigmaRho, d: &[usize], u: usize, v: usize) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if !g.is_red(u) {
        return Err(Error::pre(format!("vertex {u} is not red")));
    }
    if !g.is_blue(v) {
        return Err(Error::pre(format!("vertex {v} is not blue")));
    }
    let mark = check_certificate_pre(g, spec, d)?;
    Ok(certifies(g, spec, &mark, u, v))
}

fn has_certificate(g: &ColoredGraph, spec: &SigmaRho, mark: &[bool], u: usize) -> bool {
    certifies(g, spec, mark, u, u) || g.neighbors(u).iter().any(|&v| certifies(g, spec, mark, u, v))
}

/// Every vertex of `D` has a certificate.
pub fn is_one_minimal(g: &ColoredGraph, spec: &SigmaRho, d: &[usize]) -> Result<bool> {
    let mark = check_certificate_pre(g, spec, d)?;
    Ok(d.iter().all(|&u| has_certificate(g, spec, &mark, u)))
}

/// Every red vertex outside `D` has a certificate.
pub fn is_one_maximal(g: &ColoredGraph, spec: &SigmaRho, d: &[usize]) -> Result<bool> {
    let mark = check_certificate_pre(g, spec, d)?;
    Ok(g.red()
        .ones()
        .filter(|&u| !mark[u])
        .all(|u| has_certificate(g, spec, &mark, u)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> ColoredGraph {
        ColoredGraph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    #[test]
    fn membership() {
        let nat_star = NatSet::positive();
        assert!(!nat_star.contains(0));
        assert!(nat_star.contains(7));
        assert!(!NatSet::finite([0, 2]).contains(1));
    }

    #[test]
    fn d_values() {
        assert_eq!(NatSet::all().d_value(), 0);
        assert_eq!(NatSet::positive().d_value(), 1);
        assert_eq!(NatSet::finite([0, 2]).d_value(), 3);
        assert_eq!(NatSet::empty().d_value(), 0);
    }

    #[test]
    fn derived_sets_classical() {
        let s = SigmaRho::domination();
        assert_eq!(s.sigma_star, NatSet::finite([0]));
        assert_eq!(s.rho_star, NatSet::empty());
        assert_eq!(s.sigma_minus, NatSet::finite([0]));
        assert_eq!(s.rho_minus, NatSet::finite([1]));
        assert_eq!(s.sigma_plus, NatSet::empty());
        assert_eq!(s.rho_plus, NatSet::empty());
        assert_eq!((s.d, s.dhat), (1, 2));
    }

    #[test]
    fn derived_sets_total() {
        let s = SigmaRho::new(NatSet::positive(), NatSet::positive());
        assert_eq!(s.sigma_star, NatSet::empty());
        assert_eq!(s.rho_star, NatSet::empty());
        assert_eq!(s.sigma_minus, NatSet::finite([1]));
        assert_eq!(s.rho_minus, NatSet::finite([1]));
        assert_eq!(s.sigma_plus, NatSet::empty());
        assert_eq!(s.rho_plus, NatSet::empty());
    }

    #[test]
    fn derived_sets_independent_maximal() {
        let s = SigmaRho::new(NatSet::finite([0]), NatSet::all());
        assert_eq!(s.sigma_plus, NatSet::finite([0]));
        assert_eq!(s.rho_plus, NatSet::empty());
        assert_eq!(s.sigma_minus, NatSet::finite([0]));
        assert_eq!(s.rho_minus, NatSet::finite([0]));
        assert_eq!(s.sigma_star, NatSet::empty());
        assert_eq!(s.rho_star, NatSet::positive());
    }

    #[test]
    fn parse_and_display() {
        let s: NatSet = "cofinite:{0}".parse().unwrap();
        assert_eq!(s, NatSet::positive());
        let s: NatSet = " finite:{ 2, 0 ,2}".parse().unwrap();
        assert_eq!(s.to_string(), "finite:{0,2}");
        assert_eq!("cofinite:{}".parse::<NatSet>().unwrap(), NatSet::all());
        assert!("finite:0,1".parse::<NatSet>().is_err());
        assert!("weird:{1}".parse::<NatSet>().is_err());
        assert!(SigmaRho::preset("perfect-domination").is_some());
        assert!(SigmaRho::preset("nope").is_none());
    }

    #[test]
    fn domination_checks() {
        let g = p3();
        let s = SigmaRho::domination();
        assert!(dominates(&g, &s, &[1], &[0, 1, 2], Mode::Base).unwrap());
        assert!(!dominates(&g, &s, &[0], &[2], Mode::Base).unwrap());
        assert!(dominates(&g, &s, &[0, 2], &[0, 1, 2], Mode::Base).unwrap());
        let colored = p3().with_colors([1], [0, 2]).unwrap();
        assert!(dominates(&colored, &s, &[0], &[1], Mode::Base).is_err());
    }

    #[test]
    fn certificate_checks() {
        let g = p3();
        let s = SigmaRho::domination();
        assert!(is_certificate(&g, &s, &[0, 2], 0, 0).unwrap());
        assert!(is_certificate(&g, &s, &[1], 1, 0).unwrap());
        assert!(!is_certificate(&g, &s, &[0, 2], 0, 1).unwrap());
        assert!(is_certificate(&g, &s, &[0], 0, 0).is_err());
    }

    #[test]
    fn one_minimal_and_maximal() {
        let g = p3();
        let s = SigmaRho::domination();
        assert!(is_one_minimal(&g, &s, &[1]).unwrap());
        assert!(!is_one_minimal(&g, &s, &[0, 1]).unwrap());
        let mis = SigmaRho::new(NatSet::finite([0]), NatSet::all());
        assert!(is_one_maximal(&g, &mis, &[1]).unwrap());
        assert!(is_one_maximal(&g, &mis, &[0, 2]).unwrap());
        assert!(!is_one_maximal(&g, &mis, &[0]).unwrap());
        assert!(is_one_minimal(&g, &s, &[0]).is_err());
    }
}
