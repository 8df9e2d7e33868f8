use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::bounds::{mvr_bounds, CertClass, MvrBounds};
use super::{seed_for, OracleConfig};
use crate::criticality::check_criticality;
use crate::graph::{parse_graph6, write_graph6, Graph};
use crate::rank::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GccStatus {
    /// Certified upper bounds already satisfy `mvr(G) + mvr(complement) <= n + 2`.
    Verified,
    /// The bounds could not confirm the inequality; needs exact follow-up.
    Flagged,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GccVerdict {
    pub graph: String,
    pub order: usize,
    pub status: GccStatus,
    pub graph_rank: Value,
    pub complement_rank: Value,
    pub sum_hi: usize,
    pub sum_lo: usize,
    /// Exact when both upper bounds come from exact rational representations.
    pub certificate: CertClass,
    /// Both ranks exact and their sum is `n + 2`.
    pub equality: bool,
}

fn verdict(g: &Graph, a: &MvrBounds, b: &MvrBounds) -> GccVerdict {
    let n = g.order();
    let sum_hi = a.hi() + b.hi();
    let sum_lo = a.lo() + b.lo();
    let certificate = if a.upper.class == CertClass::Exact && b.upper.class == CertClass::Exact {
        CertClass::Exact
    } else {
        CertClass::Numeric
    };
    GccVerdict {
        graph: write_graph6(g),
        order: n,
        status: if sum_hi <= n + 2 {
            GccStatus::Verified
        } else {
            GccStatus::Flagged
        },
        graph_rank: a.value,
        complement_rank: b.value,
        sum_hi,
        sum_lo,
        certificate,
        equality: sum_lo == sum_hi && sum_hi == n + 2,
    }
}

/// Checks `mvr(G) + mvr(complement(G)) <= n + 2` with certified upper bounds.
pub fn gcc_check(g: &Graph, cfg: &OracleConfig) -> GccVerdict {
    let a = mvr_bounds(g, cfg);
    let b = mvr_bounds(&g.complement(), cfg);
    verdict(g, &a, &b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineError {
    /// 1-based line number in the input stream.
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub graphs_checked: usize,
    pub gcc_verified: usize,
    /// graph6 of every flagged graph, in input order.
    pub flagged: Vec<String>,
    /// Complement critical graphs decided exactly, in input order.
    pub complement_critical_found: Vec<String>,
    /// Graphs with exact ranks summing to `n + 2`, in input order.
    pub equality_cases: Vec<String>,
    /// Verified graphs whose certificate needed a numeric representation.
    pub numeric_backed: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<LineError>,
}

enum Outcome {
    Blank,
    Bad(LineError),
    Done { verdict: GccVerdict, critical: bool },
}

fn scan_line(i: usize, line: &str, cfg: &OracleConfig) -> Outcome {
    let text = line.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    if text.is_empty() {
        return Outcome::Blank;
    }
    let g = match parse_graph6(text) {
        Ok(g) => g,
        Err(e) => {
            return Outcome::Bad(LineError {
                line: i + 1,
                message: e.to_string(),
            })
        }
    };
    let local = OracleConfig {
        rng_seed: seed_for(cfg.rng_seed, text),
        ..cfg.clone()
    };
    let verdict = gcc_check(&g, &local);
    let critical = check_criticality(&g).is_ok_and(|r| r.complement_critical);
    Outcome::Done { verdict, critical }
}

/// Runs [`gcc_check`] on every graph6 line and collects the exactly decided
/// complement critical graphs. Lines are processed in parallel; the report
/// does not depend on scheduling.
pub fn gcc_scan<I, S>(lines: I, cfg: &OracleConfig) -> ScanReport
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let lines: Vec<String> = lines.into_iter().map(|l| l.as_ref().to_owned()).collect();
    let outcomes: Vec<Outcome> = lines
        .par_iter()
        .enumerate()
        .map(|(i, l)| scan_line(i, l, cfg))
        .collect();
    let mut report = ScanReport::default();
    for o in outcomes {
        match o {
            Outcome::Blank => {}
            Outcome::Bad(e) => report.errors.push(e),
            Outcome::Done { verdict, critical } => {
                report.graphs_checked += 1;
                match verdict.status {
                    GccStatus::Verified => {
                        report.gcc_verified += 1;
                        if verdict.certificate == CertClass::Numeric {
                            report.numeric_backed += 1;
                        }
                    }
                    GccStatus::Flagged => report.flagged.push(verdict.graph.clone()),
                }
                if verdict.equality {
                    report.equality_cases.push(verdict.graph.clone());
                }
                if critical {
                    report.complement_critical_found.push(verdict.graph);
                }
            }
        }
    }
    report
}
