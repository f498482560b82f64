//! Command-line front end: decision, recognition, reduction, enumeration
//! and the verification suite.
//!
//! Exit codes: `decide` uses 0 = YES, 1 = NO, 3 = INDETERMINATE; `recognize`
//! uses 0 = all evaluated conditions hold, 1 = some condition fails;
//! `suite` uses 0 = all pass, 1 = any failure; usage, parse and
//! precondition errors exit 2 everywhere.

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use pintersect_core::enumerate::enumerate_graphs;
use pintersect_core::family::{split_family, star_family, ForbiddenFamily};
use pintersect_core::graph::Graph;
use pintersect_core::graph6::{emit_graph6, parse_edge_list, parse_graph6};
use pintersect_core::mfis::enumerate_mfis;
use pintersect_core::named::NamedGraphSpec;
use pintersect_core::recognize::{
    check_split_law_with, check_star_law, ReductionKind, Verdict,
};
use pintersect_core::solver::{decide_theta_leq, theta_p, Decision, SearchConfig, ThetaResult};
use pintersect_core::star::verify_star_mfis;
use pintersect_core::suite;
use pintersect_core::twins::{twin_reduction_iterated, twin_reduction_with, TwinMode};

#[derive(Parser)]
#[command(name = "pintersect", version, about = "Exact p-intersection number toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TwinModeArg {
    True,
    Open,
    Iterated,
}

#[derive(Args)]
struct InputArgs {
    /// Input path, or "-" for standard input.
    #[arg(default_value = "-")]
    input: String,
    /// Input format. graph6 files may hold one graph per line; edge-list
    /// files hold a single graph.
    #[arg(long, value_enum, default_value = "graph6")]
    format: FormatArg,
    /// Process multi-graph inputs in parallel.
    #[arg(long)]
    parallel: bool,
}

#[derive(Args)]
struct BudgetArgs {
    /// Search node budget per decision call.
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether theta_p(G) <= d; writes a certificate on YES.
    Decide {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Certificate output path (defaults to stdout).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute theta_p(G) exactly with a dimension-minimal certificate.
    Theta {
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the equivalent conditions of one of the characterizations.
    Recognize {
        /// 2 = star law (threshold d-1), 3 = split law (threshold d-2).
        #[arg(long)]
        theorem: u8,
        #[arg(long)]
        d: usize,
        /// Also evaluate condition (i) with the exact solver.
        #[arg(long)]
        with_solver: bool,
        /// Twin notion for the split law's reduction.
        #[arg(long, value_enum, default_value = "true")]
        twin_mode: TwinModeArg,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Twin-reduce graphs.
    Reduce {
        #[arg(long, value_enum, default_value = "true")]
        twin_mode: TwinModeArg,
        /// Also print the vertex-to-class map as a comment line.
        #[arg(long, short)]
        verbose: bool,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Print a forbidden family, one graph6 line per member.
    Family {
        #[arg(long)]
        theorem: u8,
        #[arg(long)]
        d: usize,
    },
    /// Build a named graph, or enumerate all graphs of an order.
    Gen {
        /// Graph spec such as K_5, P_4, C_6, K_{1,3}, K_5-e, K_{2,3}+e,
        /// K_4^+(2), K_3^+(2,1), K_3^+(2,1,1), (K_4-e)^+(1), 2K_2, K_2+~K_3.
        spec: Option<String>,
        /// Enumerate all graphs of this order up to isomorphism instead.
        #[arg(long)]
        enumerate: Option<usize>,
    },
    /// Enumerate minimal forbidden induced subgraphs into a catalog.
    EnumerateMfis {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        max_n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify that the critical star is a minimal forbidden graph.
    VerifyStar {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run verification suite criteria by name, or "all".
    Suite {
        #[arg(default_value = "all")]
        name: String,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Run the criteria in parallel.
        #[arg(long)]
        parallel: bool,
    },
}

const EXIT_OK: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_INDETERMINATE: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading standard input")?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

/// Parses the input into (line-number, graph) pairs. graph6 inputs may
/// carry one graph per line; edge-list inputs are a single graph.
fn read_graphs(input: &InputArgs) -> Result<Vec<(usize, Graph)>> {
    let text = read_input(&input.input)?;
    match input.format {
        FormatArg::Graph6 => {
            let mut graphs = Vec::new();
            for (idx, line) in text.lines().enumerate() {
                if line.trim().is_empty() {
                    continue;
                }
                let g = parse_graph6(line)
                    .with_context(|| format!("line {}", idx + 1))?;
                graphs.push((idx + 1, g));
            }
            if graphs.is_empty() {
                anyhow::bail!("no graphs in input");
            }
            Ok(graphs)
        }
        FormatArg::Edgelist => Ok(vec![(1, parse_edge_list(&text)?)]),
    }
}

fn write_out(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, content).with_context(|| format!("writing {path:?}"))?;
        }
        None => print!("{content}"),
    }
    Ok(())
}

/// Computes one result per input graph, in input order, optionally in
/// parallel.
fn map_graphs<T, F>(graphs: &[(usize, Graph)], parallel: bool, job: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&Graph) -> Result<T> + Sync + Send,
{
    if parallel {
        graphs.par_iter().map(|(_, g)| job(g)).collect()
    } else {
        graphs.iter().map(|(_, g)| job(g)).collect()
    }
}

/// Prints one status line per graph (line-prefixed for multi-graph inputs)
/// and routes certificate text to `--out` or stdout.
fn emit_status_and_certificates(
    graphs: &[(usize, Graph)],
    statuses: impl Iterator<Item = (String, u8)>,
    certificates: impl Iterator<Item = String>,
    out: &Option<PathBuf>,
) -> Result<u8> {
    let many = graphs.len() > 1;
    let mut worst = EXIT_OK;
    for ((line, _), (status, code)) in graphs.iter().zip(statuses) {
        if many {
            println!("{line}: {status}");
        } else {
            println!("{status}");
        }
        worst = combine_exit(worst, code);
    }
    let body: String = certificates.collect();
    if !body.is_empty() {
        write_out(out, &body)?;
    }
    Ok(worst)
}

/// Runs `job` over every input graph, in order, optionally in parallel.
/// Returns (prefixed output, worst exit code).
fn over_graphs<F>(graphs: Vec<(usize, Graph)>, parallel: bool, job: F) -> Result<(String, u8)>
where
    F: Fn(&Graph) -> Result<(String, u8)> + Sync + Send,
{
    let many = graphs.len() > 1;
    let results: Vec<Result<(usize, String, u8)>> = if parallel {
        graphs
            .par_iter()
            .map(|(line, g)| job(g).map(|(text, code)| (*line, text, code)))
            .collect()
    } else {
        graphs
            .iter()
            .map(|(line, g)| job(g).map(|(text, code)| (*line, text, code)))
            .collect()
    };
    let mut output = String::new();
    let mut worst = EXIT_OK;
    for result in results {
        let (line, text, code) = result?;
        for row in text.lines() {
            if many {
                output.push_str(&format!("{line}: {row}\n"));
            } else {
                output.push_str(row);
                output.push('\n');
            }
        }
        worst = combine_exit(worst, code);
    }
    Ok((output, worst))
}

fn combine_exit(a: u8, b: u8) -> u8 {
    // severity order: error > indeterminate > no > yes
    let rank = |c: u8| match c {
        EXIT_ERROR => 3,
        EXIT_INDETERMINATE => 2,
        EXIT_NO => 1,
        _ => 0,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Decide {
            d,
            p,
            input,
            budget,
            out,
        } => {
            let cfg = SearchConfig::with_budget(budget.budget);
            let graphs = read_graphs(&input)?;
            let decisions = map_graphs(&graphs, input.parallel, |g| {
                decide_theta_leq(g, d, p, &cfg).map_err(Into::into)
            })?;
            let statuses = decisions.iter().map(|decision| match decision {
                Decision::Yes(_) => ("YES".to_string(), EXIT_OK),
                Decision::No => ("NO".to_string(), EXIT_NO),
                Decision::Indeterminate { nodes } => {
                    (format!("INDETERMINATE (nodes={nodes})"), EXIT_INDETERMINATE)
                }
            });
            let certificates = decisions
                .iter()
                .filter_map(|d| d.certificate().map(|r| r.to_text()));
            emit_status_and_certificates(&graphs, statuses, certificates, &out)
        }

        Command::Theta {
            p,
            input,
            budget,
            out,
        } => {
            let cfg = SearchConfig::with_budget(budget.budget);
            let graphs = read_graphs(&input)?;
            let results = map_graphs(&graphs, input.parallel, |g| {
                theta_p(g, p, &cfg).map_err(Into::into)
            })?;
            let statuses = results.iter().map(|result| match result {
                ThetaResult::Exact { value, .. } => (format!("theta={value}"), EXIT_OK),
                ThetaResult::Indeterminate { lower, upper } => (
                    format!("theta>={lower} theta<={upper} INDETERMINATE"),
                    EXIT_INDETERMINATE,
                ),
            });
            let certificates = results.iter().filter_map(|r| match r {
                ThetaResult::Exact { certificate, .. } => Some(certificate.to_text()),
                ThetaResult::Indeterminate { .. } => None,
            });
            emit_status_and_certificates(&graphs, statuses, certificates, &out)
        }

        Command::Recognize {
            theorem,
            d,
            with_solver,
            twin_mode,
            input,
            budget,
            out,
        } => {
            let cfg = SearchConfig::with_budget(budget.budget);
            let reduction = match twin_mode {
                TwinModeArg::True | TwinModeArg::Open => ReductionKind::TrueTwins,
                TwinModeArg::Iterated => ReductionKind::TrueAndOpenIterated,
            };
            let graphs = read_graphs(&input)?;
            let mut all_certificates = String::new();
            let mut worst = EXIT_OK;
            let many = graphs.len() > 1;
            for (line, g) in &graphs {
                let verdict: Verdict = match theorem {
                    2 => check_star_law(g, d, with_solver, &cfg)?,
                    3 => check_split_law_with(g, d, with_solver, &cfg, reduction)?,
                    other => anyhow::bail!("--theorem must be 2 or 3, got {other}"),
                };
                let prefix = if many {
                    format!("{line}: ")
                } else {
                    String::new()
                };
                for row in verdict.report_lines() {
                    println!("{prefix}{row}");
                }
                let code = if verdict.any_fails() {
                    EXIT_NO
                } else if verdict.all_evaluated_hold() {
                    EXIT_OK
                } else {
                    EXIT_INDETERMINATE
                };
                println!(
                    "{prefix}result={}",
                    match code {
                        EXIT_OK => "HOLDS",
                        EXIT_NO => "FAILS",
                        _ => "INDETERMINATE",
                    }
                );
                if let Some(rep) = &verdict.certificate {
                    all_certificates.push_str(&rep.to_text());
                }
                worst = combine_exit(worst, code);
            }
            if out.is_some() && !all_certificates.is_empty() {
                write_out(&out, &all_certificates)?;
            }
            Ok(worst)
        }

        Command::Reduce {
            twin_mode,
            verbose,
            input,
        } => {
            let graphs = read_graphs(&input)?;
            let (output, code) = over_graphs(graphs, input.parallel, |g| {
                let (reduced, map) = match twin_mode {
                    TwinModeArg::True => {
                        let r = twin_reduction_with(g, TwinMode::TrueTwins);
                        (r.graph, Some(r.class_of))
                    }
                    TwinModeArg::Open => {
                        let r = twin_reduction_with(g, TwinMode::OpenTwins);
                        (r.graph, Some(r.class_of))
                    }
                    TwinModeArg::Iterated => (twin_reduction_iterated(g), None),
                };
                let mut text = emit_graph6(&reduced);
                if verbose {
                    match map {
                        Some(classes) => {
                            let pairs: Vec<String> = classes
                                .iter()
                                .enumerate()
                                .map(|(v, c)| format!("{v}:{c}"))
                                .collect();
                            text.push_str(&format!("\n# classes={}", pairs.join(",")));
                        }
                        None => text.push_str("\n# classes=iterated"),
                    }
                }
                Ok((text, EXIT_OK))
            })?;
            print!("{output}");
            Ok(code)
        }

        Command::Family { theorem, d } => {
            let family: ForbiddenFamily = match theorem {
                2 => star_family(d)?,
                3 => split_family(d)?,
                other => anyhow::bail!("--theorem must be 2 or 3, got {other}"),
            };
            for member in &family.members {
                println!("{} name={}", emit_graph6(&member.graph), member.name);
            }
            Ok(EXIT_OK)
        }

        Command::Gen { spec, enumerate } => match (spec, enumerate) {
            (Some(spec), None) => {
                let parsed: NamedGraphSpec = spec.parse()?;
                println!("{}", emit_graph6(&parsed.build()?));
                Ok(EXIT_OK)
            }
            (None, Some(n)) => {
                for g in enumerate_graphs(n)? {
                    println!("{}", emit_graph6(&g));
                }
                Ok(EXIT_OK)
            }
            _ => anyhow::bail!("pass either a graph spec or --enumerate <n>"),
        },

        Command::EnumerateMfis {
            d,
            p,
            max_n,
            budget,
            out,
        } => {
            let cfg = SearchConfig::with_budget(budget.budget);
            let catalog = enumerate_mfis(d, p, max_n, &cfg)?;
            write_out(&out, &catalog.to_text())?;
            Ok(EXIT_OK)
        }

        Command::VerifyStar { d, p, budget } => {
            let cfg = SearchConfig::with_budget(budget.budget);
            let report = verify_star_mfis(d, p, &cfg)?;
            if report.is_mfis {
                println!("MFIS confirmed k={}", report.k);
            } else {
                println!("MFIS refuted k={}", report.k);
                println!(
                    "star_excluded={} leaf_deleted_included={} center_deleted_included={}",
                    report.star_excluded,
                    report.leaf_deleted_included,
                    report.center_deleted_included
                );
            }
            Ok(if report.is_mfis { EXIT_OK } else { EXIT_NO })
        }

        Command::Suite {
            name,
            budget,
            parallel,
        } => {
            let cfg = SearchConfig::with_budget(budget.budget);
            let names: Vec<&str> = if name == "all" {
                suite::CRITERIA.to_vec()
            } else {
                vec![name.as_str()]
            };
            let reports: Vec<_> = if parallel {
                names
                    .par_iter()
                    .map(|n| suite::run_by_name(n, &cfg))
                    .collect::<pintersect_core::Result<Vec<_>>>()?
            } else {
                names
                    .iter()
                    .map(|n| suite::run_by_name(n, &cfg))
                    .collect::<pintersect_core::Result<Vec<_>>>()?
            };
            let mut all_pass = true;
            for report in &reports {
                println!("{}", report.summary());
                for note in &report.notes {
                    println!("  note: {note}");
                }
                for failure in &report.failures {
                    println!("  failure: {failure}");
                }
                all_pass &= report.pass;
            }
            Ok(if all_pass { EXIT_OK } else { EXIT_NO })
        }
    }
}
