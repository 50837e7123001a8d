//! The `tourney` command line: generate family members, analyze decomposition
//! structure, test embeddings, enumerate isomorphism classes, and run the
//! exhaustive claim checkers.
//!
//! Machine output goes to standard out as text or JSON lines; diagnostics go
//! to standard error. Exit code 0 means success, 1 means a verification
//! failed, 2 means the invocation itself was rejected.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, IsTerminal, Write};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde::Serialize;
use tourney::verify::{self, Claim, ClassCache, VerificationReport};
use tourney::{dot, parallel, pattern};
use tourney_core::{
    criticality_by_seven, embedding_witness, exterior_partition, i5_profile, is_critical,
    is_indecomposable, nontrivial_intervals, Tournament, VertexSet,
};

#[derive(Parser)]
#[command(
    name = "tourney",
    version,
    about = "Tournament combinatorics: families, decomposition, embeddings, enumeration, checks"
)]
struct Cli {
    /// Cap the worker pool (default: one worker per CPU).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print one family member as a code, or as Graphviz with --dot.
    Gen {
        /// Family tag: t|u|w|p7|b6|c3|d4|d4d|tr|e|f|g.
        #[arg(long)]
        family: String,
        /// Number of vertices; required for sized families, checked for fixed ones.
        #[arg(long)]
        order: Option<usize>,
        /// Emit a Graphviz digraph instead of a code.
        #[arg(long)]
        dot: bool,
    },
    /// Read codes and print one JSON record per tournament.
    Analyze {
        /// File of codes, or - for standard input.
        #[arg(long = "in", value_name = "FILE")]
        input: String,
        /// Include the full list of nontrivial intervals.
        #[arg(long)]
        intervals: bool,
        /// Include the seven-vertex criticality test (null when inapplicable).
        #[arg(long)]
        critical: bool,
        /// Partition the outside of this base, e.g. X=0,1,4.
        #[arg(long, value_name = "X=CSV")]
        partition: Option<String>,
    },
    /// Test whether a pattern embeds into each host.
    Embed {
        /// Pattern: a code like 5:1100110111, or a family spec like p7 or w:7.
        #[arg(long)]
        pattern: String,
        /// Host code, file of host codes, or - for standard input.
        #[arg(long)]
        host: String,
    },
    /// Report which five-vertex indecomposable classes embed in each input.
    Profile5 {
        /// File of codes, or - for standard input.
        #[arg(long = "in", value_name = "FILE")]
        input: String,
    },
    /// List every isomorphism class on n vertices, one code per line.
    Enumerate {
        /// Number of vertices (1 through 10).
        #[arg(long)]
        n: usize,
        /// Keep only indecomposable classes.
        #[arg(long, conflicts_with = "critical")]
        indecomposable: bool,
        /// Keep only critical classes.
        #[arg(long)]
        critical: bool,
        /// Print the class count instead of the codes.
        #[arg(long)]
        count_only: bool,
        /// Write codes to this file instead of standard out.
        #[arg(long, value_name = "FILE")]
        out: Option<String>,
        /// Confirm an order-10 run (about ten million classes).
        #[arg(long)]
        allow_big: bool,
    },
    /// Run exhaustive claim checks and report pass or fail.
    Verify {
        /// Claim id (T1, T2, T3, P4, L6, P7, C8, R9, R10, L11, L12, R13, C14, P15, C16, X17) or all.
        #[arg(long)]
        claim: String,
        /// Scan bound; defaults to the claim's standard bound.
        #[arg(long, value_name = "K")]
        max_n: Option<usize>,
        /// Write JSON reports (one per line) to this file, or - for standard out.
        #[arg(long, value_name = "FILE")]
        json: Option<String>,
        /// List every counterexample instead of the first ten.
        #[arg(long)]
        all_counterexamples: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            let paint = io::stderr().is_terminal()
                && std::env::var_os("TOURNEY_COLOR").is_none_or(|v| v != "0");
            let prefix = if paint { "\x1b[31merror:\x1b[0m" } else { "error:" };
            eprintln!("{prefix} {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring the worker pool")?;
    }
    match cli.cmd {
        Cmd::Gen { family, order, dot: as_dot } => {
            let t = pattern::family(&family, order)?;
            if as_dot {
                print!("{}", dot::to_dot(&t));
            } else {
                println!("{t}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Analyze { input, intervals, critical, partition } => {
            let base = partition.as_deref().map(pattern::parse_vertex_list).transpose()?;
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for t in pattern::read_codes(&input)? {
                let record = analyze_one(&t, intervals, critical, base.as_deref());
                writeln!(out, "{}", serde_json::to_string(&record)?)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Embed { pattern: pat, host } => {
            let pat = pattern::parse_pattern(&pat)?;
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for host in pattern::read_hosts(&host)? {
                let witness = embedding_witness(&pat, &host).map(set_to_vec);
                let record = EmbedRecord {
                    host: host.to_string(),
                    embeds: witness.is_some(),
                    witness,
                };
                writeln!(out, "{}", serde_json::to_string(&record)?)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Profile5 { input } => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            for t in pattern::read_codes(&input)? {
                let p = i5_profile(&t);
                let record = ProfileRecord {
                    code: t.to_string(),
                    t5: p.t5,
                    u5: p.u5,
                    w5: p.w5,
                };
                writeln!(out, "{}", serde_json::to_string(&record)?)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Enumerate { n, indecomposable, critical, count_only, out, allow_big } => {
            if n == 10 && !allow_big {
                bail!("order 10 produces 9733056 classes; pass --allow-big to run it");
            }
            let mut classes = parallel::all_tournaments(n)?;
            if indecomposable {
                classes = parallel::filter(&classes, is_indecomposable);
            } else if critical {
                classes = parallel::filter(&classes, is_critical);
            }
            let mut sink: Box<dyn Write> = match out.as_deref() {
                Some("-") | None => Box::new(io::stdout().lock()),
                Some(path) => {
                    Box::new(File::create(path).with_context(|| format!("creating {path}"))?)
                }
            };
            if count_only {
                writeln!(sink, "{}", classes.len())?;
            } else {
                for t in &classes {
                    writeln!(sink, "{t}")?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { claim, max_n, json, all_counterexamples } => {
            let cap = if all_counterexamples { None } else { Some(10) };
            let mut cache = ClassCache::new();
            let reports = if claim.eq_ignore_ascii_case("all") {
                verify::verify_all(max_n, cap, &mut cache)?
            } else {
                let claim = Claim::from_id(&claim)
                    .ok_or(verify::VerifyError::UnknownClaim { id: claim })?;
                vec![verify::verify_claim(claim, max_n, cap, &mut cache)?]
            };
            emit_reports(&reports, json.as_deref())?;
            let all_passed = reports.iter().all(VerificationReport::passed);
            Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

#[derive(Serialize)]
struct AnalyzeRecord {
    code: String,
    indecomposable: bool,
    critical: bool,
    nontrivial_interval_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    intervals: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    criticality_by_seven: Option<Option<bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    partition: Option<PartitionRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    partition_error: Option<String>,
}

#[derive(Serialize)]
struct PartitionRecord {
    base: Vec<usize>,
    ext: Vec<usize>,
    bracket: Vec<usize>,
    slots: BTreeMap<usize, Vec<usize>>,
}

#[derive(Serialize)]
struct EmbedRecord {
    host: String,
    embeds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct ProfileRecord {
    code: String,
    t5: bool,
    u5: bool,
    w5: bool,
}

fn set_to_vec(set: VertexSet) -> Vec<usize> {
    set.iter().collect()
}

fn analyze_one(
    t: &Tournament,
    intervals: bool,
    critical: bool,
    base: Option<&[usize]>,
) -> AnalyzeRecord {
    let found = nontrivial_intervals(t);
    let mut record = AnalyzeRecord {
        code: t.to_string(),
        indecomposable: is_indecomposable(t),
        critical: is_critical(t),
        nontrivial_interval_count: found.len(),
        intervals: None,
        criticality_by_seven: None,
        partition: None,
        partition_error: None,
    };
    if intervals {
        record.intervals = Some(found.into_iter().map(set_to_vec).collect());
    }
    if critical {
        record.criticality_by_seven = Some(criticality_by_seven(t).ok());
    }
    if let Some(base) = base {
        let set: VertexSet = base.iter().copied().collect();
        match exterior_partition(t, set) {
            Ok(p) => {
                record.partition = Some(PartitionRecord {
                    base: set_to_vec(p.base()),
                    ext: set_to_vec(p.ext()),
                    bracket: set_to_vec(p.bracket()),
                    slots: p
                        .slots()
                        .filter(|(_, s)| !s.is_empty())
                        .map(|(u, s)| (u, set_to_vec(s)))
                        .collect(),
                });
            }
            Err(e) => record.partition_error = Some(e.to_string()),
        }
    }
    record
}

fn emit_reports(reports: &[VerificationReport], json: Option<&str>) -> Result<()> {
    if let Some("-") = json {
        let stdout = io::stdout();
        let mut out = stdout.lock();
        for report in reports {
            writeln!(out, "{}", serde_json::to_string(report)?)?;
        }
        return Ok(());
    }
    if let Some(path) = json {
        let mut sink = File::create(path).with_context(|| format!("creating {path}"))?;
        for report in reports {
            writeln!(sink, "{}", serde_json::to_string(report)?)?;
        }
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for report in reports {
        let verdict = if report.passed() { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{:<4} {}  max_n={} classes={}@{}  {:.2}s",
            report.claim,
            verdict,
            report.bounds.max_n,
            report.universe.classes,
            report.universe.n,
            report.seconds
        )?;
        for v in &report.violations {
            writeln!(out, "    counterexample {}: {}", v.code, v.condition)?;
        }
        if !report.witnesses.is_empty() {
            writeln!(out, "    witnesses: {}", report.witnesses.len())?;
            for w in report.witnesses.iter().take(10) {
                writeln!(out, "    witness {w}")?;
            }
            if report.witnesses.len() > 10 {
                writeln!(out, "    ... and {} more", report.witnesses.len() - 10)?;
            }
        }
    }
    Ok(())
}
