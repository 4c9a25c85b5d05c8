//! Parallel runs of the identity suite and their summary table.

use std::fmt::Write as _;

use anyhow::Result;
use pathbox_core::{Identity, IdentityReport, PathPolys, SuiteBounds};
use rayon::prelude::*;

use crate::sweep::thread_pool;

/// Reports in the same order as `bounds.cases()`.
pub fn run_suite(bounds: &SuiteBounds, threads: Option<usize>) -> Result<Vec<IdentityReport>> {
    let cases = bounds.cases();
    let pool = thread_pool(threads)?;
    let reports = pool.install(|| {
        cases
            .par_iter()
            .map_init(PathPolys::new, |polys, case| case.run(polys))
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok(reports)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySummary {
    pub identity: Identity,
    pub cases: usize,
    pub passed: usize,
}

impl FamilySummary {
    pub fn failed(&self) -> usize {
        self.cases - self.passed
    }
}

pub fn summarize(reports: &[IdentityReport]) -> Vec<FamilySummary> {
    Identity::ALL
        .iter()
        .map(|&identity| {
            let of_family = reports.iter().filter(|r| r.identity() == identity);
            let (cases, passed) =
                of_family.fold((0, 0), |(c, p), r| (c + 1, p + usize::from(r.passed())));
            FamilySummary {
                identity,
                cases,
                passed,
            }
        })
        .collect()
}

pub fn all_passed(reports: &[IdentityReport]) -> bool {
    reports.iter().all(IdentityReport::passed)
}

/// Fixed-width table, one row per family, then any failing cases with witnesses.
pub fn render(reports: &[IdentityReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<18}{:>7}{:>8}{:>8}  status",
        "identity", "cases", "passed", "failed"
    );
    for s in summarize(reports) {
        let status = if s.failed() == 0 { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{:<18}{:>7}{:>8}{:>8}  {status}",
            s.identity.name(),
            s.cases,
            s.passed,
            s.failed()
        );
    }
    for r in reports.iter().filter(|r| !r.passed()) {
        let witness = r.witness().map(ToString::to_string).unwrap_or_default();
        let _ = writeln!(out, "FAILED {}: {witness}", r.case());
    }
    let _ = writeln!(
        out,
        "overall: {}",
        if all_passed(reports) { "PASS" } else { "FAIL" }
    );
    out
}
