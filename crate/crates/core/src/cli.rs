//! Command-line surface: `mvr`, `represent`, `critical` and `scan`.
//!
//! Every command produces a [`Report`] printed as JSON (default) or text.
//! Exit codes: 0 success or verified, 1 negative verdict or flagged, 2 usage or
//! parse error.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::criticality::{
    analyze_criticality, msr_criticality, CriticalityAnalysis, CriticalityReport,
};
use crate::error::{Error, Result};
use crate::graph::{parse_graph_input, write_graph6, Graph};
use crate::oracle::{gcc_scan, mvr_bounds, MvrBounds, OracleConfig, ScanReport};
use crate::rank::{mr_plus_exact, mvr_exact, Derivation, MvrResult, Value};
use crate::rep::{
    build_complement_rep, verify_representation, BuildTrace, Representation, Verdict,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "mvrank",
    version,
    about = "Minimum vector rank of graphs and their complements"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(flatten)]
    pub oracle: OracleArgs,
    #[command(subcommand)]
    pub command: Command,
}

/// Oracle settings; each flag can also come from the named environment variable.
#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, global = true, env = "MVRANK_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Largest |inner product| accepted as zero.
    #[arg(long, global = true, env = "MVRANK_TOLERANCE", default_value_t = 1e-7)]
    pub tolerance: f64,
    #[arg(
        long,
        global = true,
        env = "MVRANK_NONZERO_FLOOR",
        default_value_t = 1e-4
    )]
    pub nonzero_floor: f64,
    #[arg(long, global = true, env = "MVRANK_RESTARTS", default_value_t = 200)]
    pub restarts: usize,
    #[arg(
        long,
        global = true,
        env = "MVRANK_MAX_ITERATIONS",
        default_value_t = 5000
    )]
    pub max_iterations: usize,
}

impl OracleArgs {
    fn config(&self) -> OracleConfig {
        OracleConfig {
            restarts: self.restarts,
            max_iterations: self.max_iterations,
            zero_tolerance: self.tolerance,
            nonzero_floor: self.nonzero_floor,
            rng_seed: self.seed,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimum vector rank (or mr+) with its derivation.
    Mvr {
        /// graph6 string, edge-list file, or `-` for stdin.
        input: String,
        /// Work on the complement of the input.
        #[arg(long)]
        complement: bool,
        /// Report mr+ instead of mvr.
        #[arg(long)]
        msr: bool,
    },
    /// Exact rational representation of the complement of the input.
    Represent {
        input: String,
        /// Check a representation JSON file against the complement instead of building one.
        #[arg(long, value_name = "REP_FILE")]
        verify_only: Option<String>,
    },
    /// Vector and complement criticality by every applicable method.
    Critical {
        input: String,
        /// Also report criticality with respect to mr+.
        #[arg(long)]
        msr: bool,
    },
    /// Complement conjecture scan over a graph6 stream.
    Scan {
        /// File with one graph6 per line, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, env = "MVRANK_JOBS")]
        jobs: Option<usize>,
    },
}

// one per process; boxing buys nothing
#[allow(clippy::large_enum_variant)]
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Outcome {
    Mvr {
        measure: String,
        complement: bool,
        /// Best known value: the rule engine's, tightened by the oracle when it is an interval.
        value: Value,
        result: MvrResult,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        bounds: Option<MvrBounds>,
    },
    Represent {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        representation: Option<Representation>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        trace: Option<BuildTrace>,
        verdict: Verdict,
    },
    Critical {
        analysis: CriticalityAnalysis,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        msr: Option<CriticalityReport>,
    },
    Scan {
        report: ScanReport,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub input: Vec<String>,
    pub version: String,
    pub config: OracleConfig,
    pub outcome: Outcome,
}

impl Report {
    /// 0 for success, 1 for a negative verdict.
    pub fn exit_code(&self) -> i32 {
        match &self.outcome {
            Outcome::Mvr { .. } => 0,
            Outcome::Represent { verdict, .. } => i32::from(!verdict.is_accepted()),
            Outcome::Critical { analysis, .. } => i32::from(!analysis.complement_critical),
            Outcome::Scan { report } => {
                i32::from(!report.flagged.is_empty() || !report.errors.is_empty())
            }
        }
    }
}

fn read_source(input: &str) -> Result<String> {
    if input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Error::arg(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    match std::fs::read_to_string(input) {
        Ok(s) => Ok(s),
        Err(_) => Ok(input.to_owned()),
    }
}

fn read_graph(input: &str) -> Result<Graph> {
    parse_graph_input(&read_source(input)?)
}

/// Runs a parsed command and returns its report.
pub fn run(cli: &Cli, argv: Vec<String>) -> Result<Report> {
    let config = cli.oracle.config();
    config.validate()?;
    let (input, outcome) = match &cli.command {
        Command::Mvr {
            input,
            complement,
            msr,
        } => {
            let g = read_graph(input)?;
            let h = if *complement {
                g.complement()
            } else {
                g.clone()
            };
            let result = if *msr {
                mr_plus_exact(&h)
            } else {
                mvr_exact(&h)
            };
            let (value, bounds) = match result.value {
                Value::Exact(_) => (result.value, None),
                Value::Interval { .. } => {
                    let b = mvr_bounds(&h, &config);
                    let r = if *msr { h.isolated_count() } else { 0 };
                    let lo = b.lo().max(result.value.lo() + r) - r;
                    let hi = b.hi().min(result.value.hi() + r) - r;
                    let v = if lo == hi {
                        Value::Exact(lo)
                    } else {
                        Value::Interval { lo, hi }
                    };
                    (v, Some(b))
                }
            };
            let measure = if *msr { "mr_plus" } else { "mvr" }.to_owned();
            (
                vec![write_graph6(&g)],
                Outcome::Mvr {
                    measure,
                    complement: *complement,
                    value,
                    result,
                    bounds,
                },
            )
        }
        Command::Represent { input, verify_only } => {
            let g = read_graph(input)?;
            let outcome = match verify_only {
                Some(path) => {
                    let text = read_source(path)?;
                    let rep: Representation = serde_json::from_str(&text).map_err(|e| {
                        Error::format(e.column(), format!("representation JSON: {e}"))
                    })?;
                    Outcome::Represent {
                        representation: None,
                        trace: None,
                        verdict: verify_representation(&g.complement(), &rep)?,
                    }
                }
                None => {
                    let (rep, trace) = build_complement_rep(&g)?;
                    let verdict = verify_representation(&g.complement(), &rep)?;
                    Outcome::Represent {
                        representation: Some(rep),
                        trace: Some(trace),
                        verdict,
                    }
                }
            };
            (vec![write_graph6(&g)], outcome)
        }
        Command::Critical { input, msr } => {
            let g = read_graph(input)?;
            let analysis = analyze_criticality(&g)?;
            let msr = if *msr {
                Some(msr_criticality(&g)?)
            } else {
                None
            };
            (vec![write_graph6(&g)], Outcome::Critical { analysis, msr })
        }
        Command::Scan { input, jobs } => {
            let text = if input == "-" {
                read_source("-")?
            } else {
                std::fs::read_to_string(input)
                    .map_err(|e| Error::arg(format!("reading {input}: {e}")))?
            };
            let lines: Vec<&str> = text.lines().collect();
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs.unwrap_or(0))
                .build()
                .map_err(|e| Error::arg(format!("thread pool: {e}")))?;
            let report = pool.install(|| gcc_scan(&lines, &config));
            (Vec::new(), Outcome::Scan { report })
        }
    };
    Ok(Report {
        command: argv,
        input,
        version: env!("CARGO_PKG_VERSION").to_owned(),
        config,
        outcome,
    })
}

fn trace_lines(d: &Derivation, depth: usize, out: &mut String) {
    out.push_str(&format!(
        "{}{} {:?}: {}\n",
        "  ".repeat(depth),
        d.value,
        d.rule,
        d.graph
    ));
    for c in &d.children {
        trace_lines(c, depth + 1, out);
    }
}

/// Plain-text rendering of a report.
pub fn render_text(r: &Report) -> String {
    let mut s = String::new();
    match &r.outcome {
        Outcome::Mvr {
            measure,
            value,
            result,
            bounds,
            ..
        } => {
            s.push_str(&format!("{measure} = {value}\n"));
            trace_lines(&result.trace, 1, &mut s);
            if let Some(b) = bounds {
                s.push_str(&format!(
                    "  oracle: lo {} ({:?}), hi {} ({:?}, {:?})\n",
                    b.lo(),
                    b.lower.reason,
                    b.hi(),
                    b.upper.source,
                    b.upper.class
                ));
            }
        }
        Outcome::Represent {
            representation,
            verdict,
            ..
        } => {
            if let Some(rep) = representation {
                s.push_str(&format!("dimension {}\n", rep.dim));
                for (i, v) in rep.vectors.iter().enumerate() {
                    let cells: Vec<String> = v.iter().map(crate::rational::format_q).collect();
                    s.push_str(&format!("  {i}: ({})\n", cells.join(", ")));
                }
            }
            match verdict {
                Verdict::Accepted { dim } => s.push_str(&format!("verified in dimension {dim}\n")),
                Verdict::Rejected { violation } => s.push_str(&format!("rejected: {violation}\n")),
            }
        }
        Outcome::Critical { analysis, msr } => {
            s.push_str(&format!(
                "vector critical: {}\ncomplement critical: {}\nmethods agree: {}\n",
                analysis.vector_critical, analysis.complement_critical, analysis.agree
            ));
            for rep in [
                &analysis.definitional,
                &analysis.structural,
                &analysis.disconnected,
            ]
            .into_iter()
            .flatten()
            {
                s.push_str(&format!("  {:?}: {:?}\n", rep.method, rep.basis));
                if let Some(w) = rep.witness {
                    s.push_str(&format!("    deleting {w} does not lower the sum\n"));
                }
            }
            if let Some(m) = msr {
                s.push_str(&format!(
                    "mr+ vector critical: {}\nmr+ complement critical: {}\n",
                    m.vector_critical, m.complement_critical
                ));
            }
        }
        Outcome::Scan { report } => {
            s.push_str(&format!(
                "checked {}, verified {}, flagged {}, numeric-backed {}\n",
                report.graphs_checked,
                report.gcc_verified,
                report.flagged.len(),
                report.numeric_backed
            ));
            for f in &report.flagged {
                s.push_str(&format!("  flagged {f}\n"));
            }
            s.push_str(&format!(
                "equality cases: {}\n",
                report.equality_cases.join(" ")
            ));
            s.push_str(&format!(
                "complement critical: {}\n",
                report.complement_critical_found.join(" ")
            ));
            for e in &report.errors {
                s.push_str(&format!("  line {}: {}\n", e.line, e.message));
            }
        }
    }
    s
}

/// Parses `args`, runs the command and prints the report. Returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let argv = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    match run(&cli, argv) {
        Ok(report) => {
            let text = match cli.format {
                Format::Json => {
                    serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
                }
                Format::Text => render_text(&report),
            };
            // a closed pipe (`| head`) is not an error
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            report.exit_code()
        }
        Err(e) => {
            eprintln!("mvrank: {e}");
            match e {
                Error::Format { .. } | Error::Argument(_) => 2,
                _ => 1,
            }
        }
    }
}
