//! Plain-text input formats.
//!
//! * graph: `n m`, then `m` lines `u v`, then optional `red: ...` and
//!   `blue: ...` lines (a missing color line means every vertex);
//! * ordering: one line with a permutation of `0..n`;
//! * hypergraph: `n k`, then `k` lines listing each hyperedge;
//! * realization: lines `v x y`, coordinates as decimals or `p/q`.
//!
//! Blank lines and lines starting with `#` are ignored everywhere.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Hypergraph, LinearOrder, Rational};
use crate::usq::Realization;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(line: usize, tok: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a non-negative integer, found {tok:?}")))
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace().map(|t| parse_usize(line, t)).collect()
}

pub fn parse_graph(text: &str) -> Result<ColoredGraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header \"n m\""))?;
    let head = numbers(hl, header)?;
    let [n, m] = head[..] else {
        return Err(Error::parse(hl, "header must be \"n m\""));
    };
    let mut edges = Vec::with_capacity(m);
    let mut red = None;
    let mut blue = None;
    for (ln, l) in lines {
        if let Some(rest) = l.strip_prefix("red:") {
            if red.replace(numbers(ln, rest)?).is_some() {
                return Err(Error::parse(ln, "duplicate red line"));
            }
        } else if let Some(rest) = l.strip_prefix("blue:") {
            if blue.replace(numbers(ln, rest)?).is_some() {
                return Err(Error::parse(ln, "duplicate blue line"));
            }
        } else {
            if red.is_some() || blue.is_some() {
                return Err(Error::parse(ln, "edge line after a color line"));
            }
            let e = numbers(ln, l)?;
            let [u, v] = e[..] else {
                return Err(Error::parse(ln, "edge line must be \"u v\""));
            };
            edges.push((u, v));
        }
    }
    if edges.len() != m {
        return Err(Error::parse(
            hl,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    let g = ColoredGraph::new(n, edges)?;
    let red = red.unwrap_or_else(|| (0..n).collect());
    let blue = blue.unwrap_or_else(|| (0..n).collect());
    g.with_colors(red, blue)
}

pub fn parse_order(text: &str, n: usize) -> Result<LinearOrder> {
    let mut lines = content_lines(text);
    let seq = match lines.next() {
        Some((ln, l)) => numbers(ln, l)?,
        None => Vec::new(),
    };
    if let Some((ln, _)) = lines.next() {
        return Err(Error::parse(ln, "ordering must be a single line"));
    }
    if seq.len() != n {
        return Err(Error::InvalidOrder(format!(
            "expected {n} vertices, found {}",
            seq.len()
        )));
    }
    LinearOrder::new(seq)
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header \"n k\""))?;
    let head = numbers(hl, header)?;
    let [n, k] = head[..] else {
        return Err(Error::parse(hl, "header must be \"n k\""));
    };
    let edges = lines.map(|(ln, l)| numbers(ln, l)).collect::<Result<Vec<_>>>()?;
    if edges.len() != k {
        return Err(Error::parse(
            hl,
            format!("header announces {k} hyperedges, found {}", edges.len()),
        ));
    }
    Hypergraph::new(n, edges)
}

/// Parses `p/q`, an integer, or a decimal such as `-1.25`.
pub fn parse_rational(tok: &str) -> Option<Rational> {
    if let Some((p, q)) = tok.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q == BigInt::from(0) {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    let (neg, body) = match tok.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, tok.strip_prefix('+').unwrap_or(tok)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int}{frac}");
    let num: BigInt = if digits.is_empty() {
        BigInt::from(0)
    } else {
        digits.parse().ok()?
    };
    let den = BigInt::from(10u32).pow(frac.len() as u32);
    let r = Rational::new(num, den);
    Some(if neg { -r } else { r })
}

pub fn parse_realization(text: &str) -> Result<Realization> {
    let mut points: Vec<Option<(Rational, Rational)>> = Vec::new();
    for (ln, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [v, x, y] = toks[..] else {
            return Err(Error::parse(ln, "realization line must be \"v x y\""));
        };
        let v = parse_usize(ln, v)?;
        let coord = |t: &str| parse_rational(t).ok_or_else(|| Error::parse(ln, format!("bad coordinate {t:?}")));
        let p = (coord(x)?, coord(y)?);
        if v >= points.len() {
            points.resize(v + 1, None);
        }
        if points[v].replace(p).is_some() {
            return Err(Error::parse(ln, format!("vertex {v} listed twice")));
        }
    }
    let n = points.len();
    let points = points
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| Error::pre(format!("vertex {v} has no coordinates (n = {n})"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(Realization::new(points))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(a.into(), b.into())
    }

    #[test]
    fn graphs() {
        let g = parse_graph("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert!(g.is_red(2) && g.is_blue(0));
        let g = parse_graph("# comment\n3 1\n0 1\n\nred: 0 1\nblue: 1 2\n").unwrap();
        assert!(!g.is_red(2) && !g.is_blue(0));
        assert!(matches!(parse_graph("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("3 1\n0 3\n"), Err(Error::VertexOutOfRange { .. })));
        assert!(matches!(
            parse_graph("3 0\nred: 0\nblue: 1\n"),
            Err(Error::Uncolored(2))
        ));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn orders() {
        assert_eq!(parse_order("2 0 1\n", 3).unwrap().as_slice(), &[2, 0, 1]);
        assert!(parse_order("0 1\n", 3).is_err());
        assert!(parse_order("0 0 1\n", 3).is_err());
        assert!(parse_order("0 1\n2\n", 3).is_err());
    }

    #[test]
    fn hypergraphs() {
        let h = parse_hypergraph("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(h.edges(), &[vec![0, 1], vec![1, 2]]);
        assert!(parse_hypergraph("3 2\n0 1\n").is_err());
        assert!(parse_hypergraph("3 1\n5\n").is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1.8"), Some(q(9, 5)));
        assert_eq!(parse_rational("-0.25"), Some(q(-1, 4)));
        assert_eq!(parse_rational("3/6"), Some(q(1, 2)));
        assert_eq!(parse_rational("7"), Some(q(7, 1)));
        assert_eq!(parse_rational(".5"), Some(q(1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
        assert_eq!(parse_rational("-"), None);
    }

    #[test]
    fn realizations() {
        let f = parse_realization("0 1 1\n1 1.8 1\n2 13/5 1\n").unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.point(2).0, q(13, 5));
        assert!(parse_realization("0 1 1\n2 1 1\n").is_err());
        assert!(parse_realization("0 1 1\n0 2 2\n").is_err());
        assert!(parse_realization("0 1\n").is_err());
    }
}
