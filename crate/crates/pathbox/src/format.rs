//! Text forms for polynomials, matrices, and graphs.
//!
//! Integers are always written as decimal strings so that arbitrary-precision
//! values survive JSON parsers that would round them.

use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use num_bigint::BigInt;
use pathbox_core::{Graph, IntMatrix, IntPoly};

/// Ascending coefficients as a JSON array of decimal strings: `q_3` is `["0","2","0","-1"]`.
pub fn poly_to_json(p: &IntPoly) -> String {
    let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
    serde_json::to_string(&coeffs).expect("string arrays always serialize")
}

pub fn poly_from_json(s: &str) -> Result<IntPoly> {
    let coeffs: Vec<String> =
        serde_json::from_str(s).context("expected a JSON array of strings")?;
    let coeffs = coeffs
        .iter()
        .map(|c| BigInt::from_str(c).with_context(|| format!("bad integer {c:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::from_coeffs(coeffs))
}

/// A JSON array of rows, each an array of decimal strings.
pub fn matrix_to_json(m: &IntMatrix) -> String {
    let rows: Vec<Vec<String>> = m
        .rows()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    serde_json::to_string(&rows).expect("string arrays always serialize")
}

pub fn matrix_from_json(s: &str) -> Result<IntMatrix> {
    let rows: Vec<Vec<String>> =
        serde_json::from_str(s).context("expected a JSON array of arrays of strings")?;
    let rows = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|c| BigInt::from_str(c).with_context(|| format!("bad integer {c:?}")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_rows(rows).map_err(|e| anyhow!(e))
}

/// Edge-list form: the vertex count on the first line, then one `u v` pair per
/// line, 1-based, in ascending order.
pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n_vertices());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the edge-list form. Blank lines and lines starting with `#` are skipped.
pub fn graph_from_text(s: &str) -> Result<Graph> {
    let mut lines = s
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| anyhow!("empty graph description"))?;
    let n: usize = header
        .parse()
        .with_context(|| format!("line 1: expected a vertex count, got {header:?}"))?;
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let mut parts = line.split_whitespace();
        let (Some(u), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            bail!("line {lineno}: expected \"u v\", got {line:?}");
        };
        let u: usize = u
            .parse()
            .with_context(|| format!("line {lineno}: bad vertex {u:?}"))?;
        let v: usize = v
            .parse()
            .with_context(|| format!("line {lineno}: bad vertex {v:?}"))?;
        edges.push((u, v));
    }
    Graph::new(n, edges).map_err(|e| anyhow!(e))
}
