//! Per-pair determinant reports and their JSON / CSV encodings.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use pathbox_core::det::gcd;
use pathbox_core::{Limits, Method, MethodError};
use serde::{Deserialize, Serialize};

/// Results of every method that ran for one `(n, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetReport {
    pub n: usize,
    pub m: usize,
    pub direct: Option<BigInt>,
    pub block: Option<BigInt>,
    pub resultant: Option<BigInt>,
    pub closed_form: BigInt,
    /// All present results are pairwise equal.
    pub agree: bool,
    pub elapsed: Elapsed,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Elapsed {
    pub direct: Option<Duration>,
    pub block: Option<Duration>,
    pub resultant: Option<Duration>,
    pub closed_form: Duration,
}

fn timed(
    method: Method,
    n: usize,
    m: usize,
    limits: &Limits,
) -> (Result<BigInt, MethodError>, Duration) {
    let start = Instant::now();
    let r = method.run(n, m, limits);
    (r, start.elapsed())
}

/// Runs the requested methods (the closed form always runs) and checks agreement.
///
/// Methods rejected by their ceiling are left out of the report.
pub fn verify(n: usize, m: usize, methods: &[Method], limits: &Limits) -> DetReport {
    assert!(n >= 1 && m >= 1, "path sizes start at 1");
    let run = |method: Method| -> (Option<BigInt>, Option<Duration>) {
        if !methods.contains(&method) || method.exceeds(n, m, limits) {
            return (None, None);
        }
        match timed(method, n, m, limits) {
            (Ok(v), t) => (Some(v), Some(t)),
            (Err(_), _) => (None, None),
        }
    };
    let (direct, t_direct) = run(Method::Direct);
    let (block, t_block) = run(Method::Block);
    let (resultant, t_resultant) = run(Method::Resultant);
    let (closed, t_closed) = timed(Method::Closed, n, m, limits);
    let closed_form = closed.expect("closed form is total for n, m >= 1");

    let mut report = DetReport {
        n,
        m,
        direct,
        block,
        resultant,
        closed_form,
        agree: false,
        elapsed: Elapsed {
            direct: t_direct,
            block: t_block,
            resultant: t_resultant,
            closed_form: t_closed,
        },
    };
    report.agree = report.results_agree();
    report
}

/// Every method that fits, with the direct-method ceiling given and the default block ceiling.
pub fn verify_all(n: usize, m: usize, ceiling: usize) -> DetReport {
    let limits = Limits {
        direct: ceiling,
        ..Limits::default()
    };
    verify(n, m, &Method::ALL, &limits)
}

impl DetReport {
    /// Whether every present result equals the closed form.
    pub fn results_agree(&self) -> bool {
        [&self.direct, &self.block, &self.resultant]
            .into_iter()
            .flatten()
            .all(|v| *v == self.closed_form)
    }

    pub fn gcd(&self) -> u64 {
        gcd(self.n as u64 + 1, self.m as u64 + 1)
    }

    /// The first computed value among direct, block, resultant, and closed form.
    pub fn value(&self) -> &BigInt {
        self.direct
            .as_ref()
            .or(self.block.as_ref())
            .or(self.resultant.as_ref())
            .unwrap_or(&self.closed_form)
    }

    /// Number of methods that produced a value, counting the closed form.
    pub fn methods_run(&self) -> usize {
        1 + [&self.direct, &self.block, &self.resultant]
            .into_iter()
            .filter(|v| v.is_some())
            .count()
    }

    pub fn to_wire(&self) -> DetReportJson {
        let s = |v: &Option<BigInt>| v.as_ref().map(ToString::to_string);
        let ms = |d: Duration| d.as_secs_f64() * 1e3;
        DetReportJson {
            n: self.n,
            m: self.m,
            results: ResultsJson {
                direct: s(&self.direct),
                block: s(&self.block),
                resultant: s(&self.resultant),
                closed_form: self.closed_form.to_string(),
            },
            agree: self.agree,
            elapsed_ms: ElapsedJson {
                direct: self.elapsed.direct.map(ms),
                block: self.elapsed.block.map(ms),
                resultant: self.elapsed.resultant.map(ms),
                closed_form: ms(self.elapsed.closed_form),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_wire()).expect("report serializes")
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.n,
            self.m,
            self.gcd(),
            self.value(),
            self.agree
        )
    }

    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "P_{} x P_{}  (gcd({}, {}) = {})",
            self.n,
            self.m,
            self.n + 1,
            self.m + 1,
            self.gcd()
        );
        let rows = [
            ("direct", self.direct.as_ref(), self.elapsed.direct),
            ("block", self.block.as_ref(), self.elapsed.block),
            ("resultant", self.resultant.as_ref(), self.elapsed.resultant),
            (
                "closed_form",
                Some(&self.closed_form),
                Some(self.elapsed.closed_form),
            ),
        ];
        for (name, value, t) in rows {
            match (value, t) {
                (Some(v), Some(t)) => {
                    let _ = writeln!(
                        out,
                        "  {name:<12} {v:>6}  {:>10.3} ms",
                        t.as_secs_f64() * 1e3
                    );
                }
                _ => {
                    let _ = writeln!(out, "  {name:<12} {:>6}", "-");
                }
            }
        }
        let _ = writeln!(
            out,
            "  agree        {}",
            if self.agree { "yes" } else { "NO" }
        );
        out
    }
}

pub const CSV_HEADER: &str = "n,m,gcd,det,methods_agree";

/// Stable JSON schema for a report. Determinants are decimal strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DetReportJson {
    pub n: usize,
    pub m: usize,
    pub results: ResultsJson,
    pub agree: bool,
    pub elapsed_ms: ElapsedJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultsJson {
    pub direct: Option<String>,
    pub block: Option<String>,
    pub resultant: Option<String>,
    pub closed_form: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ElapsedJson {
    pub direct: Option<f64>,
    pub block: Option<f64>,
    pub resultant: Option<f64>,
    pub closed_form: f64,
}
