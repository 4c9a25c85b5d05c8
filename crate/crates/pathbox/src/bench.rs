//! Wall-clock comparison of the four methods.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use anyhow::{anyhow, Context, Result};
use num_bigint::BigInt;
use pathbox_core::{Limits, Method};

/// Parses `10x10,15x20`. An empty or blank string is an empty list.
pub fn parse_sizes(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (n, m) = p
                .split_once(['x', 'X'])
                .ok_or_else(|| anyhow!("size {p:?} is not of the form NxM"))?;
            let n: usize = n.parse().with_context(|| format!("bad n in {p:?}"))?;
            let m: usize = m.parse().with_context(|| format!("bad m in {p:?}"))?;
            if n == 0 || m == 0 {
                return Err(anyhow!("size {p:?}: path sizes start at 1"));
            }
            Ok((n, m))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Ran { value: BigInt, elapsed: Duration },
    SkippedCeiling,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub method: Method,
    pub outcome: Outcome,
}

/// Runs each method `reps` times per size and keeps the fastest time.
pub fn run_bench(
    sizes: &[(usize, usize)],
    methods: &[Method],
    limits: &Limits,
    reps: usize,
) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &(n, m) in sizes {
        for &method in methods {
            if method.exceeds(n, m, limits) {
                rows.push(BenchRow {
                    n,
                    m,
                    method,
                    outcome: Outcome::SkippedCeiling,
                });
                continue;
            }
            let mut best: Option<(BigInt, Duration)> = None;
            for _ in 0..reps.max(1) {
                let start = Instant::now();
                let value = method.run(n, m, limits)?;
                let t = start.elapsed();
                if best.as_ref().is_none_or(|(_, b)| t < *b) {
                    best = Some((value, t));
                }
            }
            let (value, elapsed) = best.expect("at least one repetition");
            rows.push(BenchRow {
                n,
                m,
                method,
                outcome: Outcome::Ran { value, elapsed },
            });
        }
    }
    Ok(rows)
}

/// Sizes where two methods that ran returned different values.
pub fn disagreements(rows: &[BenchRow]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for group in rows.chunk_by(|a, b| (a.n, a.m) == (b.n, b.m)) {
        let mut values = group.iter().filter_map(|r| match &r.outcome {
            Outcome::Ran { value, .. } => Some(value),
            Outcome::SkippedCeiling => None,
        });
        if let Some(first) = values.next() {
            if values.any(|v| v != first) {
                out.push((group[0].n, group[0].m));
            }
        }
    }
    out
}

pub const BENCH_HEADER: &str = "n,m,method,status,det,elapsed_ms";

pub fn render_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(BENCH_HEADER);
    out.push('\n');
    for r in rows {
        match &r.outcome {
            Outcome::Ran { value, elapsed } => {
                let _ = writeln!(
                    out,
                    "{},{},{},ok,{value},{:.3}",
                    r.n,
                    r.m,
                    r.method.name(),
                    elapsed.as_secs_f64() * 1e3
                );
            }
            Outcome::SkippedCeiling => {
                let _ = writeln!(
                    out,
                    "{},{},{},skipped (ceiling),,",
                    r.n,
                    r.m,
                    r.method.name()
                );
            }
        }
    }
    out
}
