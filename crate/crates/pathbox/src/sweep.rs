//! Grid sweeps over `(n, m)`.

use std::fmt::Write as _;

use anyhow::{bail, Result};
use pathbox_core::{Limits, Method};
use rayon::prelude::*;

use crate::report::{verify, DetReport, DetReportJson, CSV_HEADER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

impl Format {
    pub fn from_name(s: &str) -> Option<Format> {
        match s {
            "json" => Some(Format::Json),
            "csv" => Some(Format::Csv),
            "pretty" => Some(Format::Pretty),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    pub max_m: usize,
    pub methods: Vec<Method>,
    pub format: Format,
    pub limits: Limits,
    /// Worker count; `None` means the available parallelism.
    pub threads: Option<usize>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 12,
            max_m: 12,
            methods: Method::ALL.to_vec(),
            format: Format::Json,
            limits: Limits::default(),
            threads: None,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_n < 1 || self.max_m < 1 {
            bail!("sweep bounds must be at least 1");
        }
        if self.methods.is_empty() {
            bail!("at least one method is required");
        }
        if self.limits.direct < 1 || self.limits.block < 1 {
            bail!("ceilings must be at least 1");
        }
        if self.threads == Some(0) {
            bail!("thread count must be at least 1");
        }
        Ok(())
    }
}

pub fn thread_pool(threads: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    Ok(builder.build()?)
}

/// One report per `(n, m)`, sorted by `n` then `m` regardless of scheduling.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<DetReport>> {
    config.validate()?;
    let pairs: Vec<(usize, usize)> = (1..=config.max_n)
        .flat_map(|n| (1..=config.max_m).map(move |m| (n, m)))
        .collect();
    let pool = thread_pool(config.threads)?;
    Ok(pool.install(|| {
        pairs
            .par_iter()
            .map(|&(n, m)| verify(n, m, &config.methods, &config.limits))
            .collect()
    }))
}

pub fn render(reports: &[DetReport], format: Format) -> String {
    match format {
        Format::Json => {
            let wire: Vec<DetReportJson> = reports.iter().map(DetReport::to_wire).collect();
            let mut s = serde_json::to_string_pretty(&wire).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from(CSV_HEADER);
            s.push('\n');
            for r in reports {
                s.push_str(&r.csv_row());
                s.push('\n');
            }
            s
        }
        Format::Pretty => render_grid(reports),
    }
}

/// Determinant grid with `n` down and `m` across; `!` marks a disagreement.
fn render_grid(reports: &[DetReport]) -> String {
    let max_m = reports.iter().map(|r| r.m).max().unwrap_or(0);
    let cell = |r: &DetReport| format!("{}{}", r.value(), if r.agree { "" } else { "!" });
    let width = reports
        .iter()
        .map(|r| cell(r).len())
        .chain([max_m.to_string().len(), 2])
        .max()
        .unwrap_or(2)
        + 1;
    let mut out = String::from("n\\m");
    for m in 1..=max_m {
        let _ = write!(out, "{m:>width$}");
    }
    out.push('\n');
    for row in reports.chunk_by(|a, b| a.n == b.n) {
        let _ = write!(out, "{:>3}", row[0].n);
        for r in row {
            let _ = write!(out, "{:>width$}", cell(r));
        }
        out.push('\n');
    }
    out
}

pub fn disagreements(reports: &[DetReport]) -> Vec<(usize, usize)> {
    reports
        .iter()
        .filter(|r| !r.agree)
        .map(|r| (r.n, r.m))
        .collect()
}
