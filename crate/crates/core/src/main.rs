//! Command-line interface.
//!
//! Exit codes: 0 success / property holds, 1 error, 2 bad input,
//! 3 property fails, 4 enumeration budget exceeded (partial report).

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use toric_ci::analyzer;
use toric_ci::budget::Budget;
use toric_ci::error::Error;
use toric_ci::fiber;
use toric_ci::graph::Graph;
use toric_ci::report::{self, BinomialJson};
use toric_ci::walks;

#[derive(Parser)]
#[command(
    name = "toric-ci",
    version,
    about = "Complete intersection and normality analysis for toric ideals of graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input path (file or directory for batch mode); stdin when omitted or "-".
    #[arg(global = true)]
    input: Option<PathBuf>,

    /// Input format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Edgelist)]
    format: Format,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Out::Text)]
    out: Out,

    /// Edge budget for both the walk and fiber enumerations
    /// (env fallback: TORIC_BUDGET_EDGES).
    #[arg(long, global = true)]
    budget_edges: Option<usize>,

    /// Total-degree bound for fiber scans (default: edge count).
    #[arg(long, global = true)]
    degree_bound: Option<usize>,

    /// Omit timings so reports are byte-identical across runs.
    #[arg(long, global = true)]
    no_timings: bool,

    /// Seed reserved for randomized subcommands; accepted and unused today.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Worker threads for batch mode over a directory.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
}

#[derive(Subcommand, Clone, Copy, PartialEq, Eq)]
enum Command {
    /// Full analysis report per connected component.
    Analyze,
    /// One-line complete intersection verdict (exit 0 CI, 3 not CI).
    IsCi,
    /// One-line normality verdict (exit 0 normal, 3 not normal).
    IsNormal,
    /// Block decomposition with per-block profiles.
    Blocks,
    /// Minimal binomials of the toric ideal.
    Generators,
    /// The Graver basis via primitive walks.
    Graver,
    /// Brute-force Markov result (mu, per-degree counts, chosen set).
    Oracle,
    /// Structural necessary-condition screen.
    Screen,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Edgelist,
    Json,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Out {
    Json,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = run(&cli);
    ExitCode::from(code as u8)
}

fn budget_from(cli: &Cli) -> Budget {
    let mut budget = Budget::default();
    let env_limit = std::env::var("TORIC_BUDGET_EDGES")
        .ok()
        .and_then(|s| s.parse::<usize>().ok());
    if let Some(limit) = cli.budget_edges.or(env_limit) {
        budget = Budget::with_edge_limit(limit);
    }
    if cli.degree_bound.is_some() {
        budget.max_total_degree = cli.degree_bound;
    }
    budget
}

fn run(cli: &Cli) -> i32 {
    let budget = budget_from(cli);
    match &cli.input {
        Some(path) if path.is_dir() => run_batch(cli, path, &budget),
        _ => {
            let text = match read_input(cli.input.as_deref()) {
                Ok(t) => t,
                Err(e) => return fail(&e),
            };
            match run_one(cli, &budget, &text) {
                Ok((output, code)) => {
                    print!("{output}");
                    code
                }
                Err(e) => fail(&e),
            }
        }
    }
}

fn fail(e: &Error) -> i32 {
    eprintln!("error: {e}");
    e.exit_code()
}

fn read_input(path: Option<&Path>) -> Result<String, Error> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(std::fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn parse_graph(format: Format, text: &str) -> Result<Graph, Error> {
    match format {
        Format::Edgelist => Graph::parse_edge_list(text),
        Format::Json => Graph::parse_json(text),
    }
}

/// Runs one command on one input; returns (stdout text, exit code).
fn run_one(cli: &Cli, budget: &Budget, text: &str) -> Result<(String, i32), Error> {
    let g = parse_graph(cli.format, text)?;
    let json = cli.out == Out::Json;
    match cli.command {
        Command::Analyze => {
            let rep = report::analyze(&g, budget, !cli.no_timings)?;
            let code = if rep.summary.incomplete { 4 } else { 0 };
            let out = if json {
                report::to_json_string(&rep)
            } else {
                report::to_text(&rep)
            };
            Ok((out, code))
        }
        Command::IsCi => {
            let rep = report::analyze(&g, budget, false)?;
            let mu = rep
                .components
                .iter()
                .try_fold(0u64, |acc, c| c.mu.map(|m| acc + m));
            let h: i64 = rep.components.iter().map(|c| c.height).sum();
            match rep.summary.ci {
                Some(ci) => {
                    let verdict = if ci { "CI" } else { "not CI" };
                    let mu_txt = mu.map(|m| m.to_string()).unwrap_or_else(|| "?".into());
                    let line = format!("{verdict}: mu={mu_txt} h={h}\n");
                    let out = if json {
                        report::to_json_string(&rep)
                    } else {
                        line
                    };
                    Ok((out, if ci { 0 } else { 3 }))
                }
                None => Ok((format!("incomplete: budget exceeded (h={h})\n"), 4)),
            }
        }
        Command::IsNormal => {
            let rep = report::analyze(&g, budget, false)?;
            match rep.summary.normal {
                Some(normal) => {
                    let line = if normal { "normal\n" } else { "not normal\n" };
                    let out = if json {
                        report::to_json_string(&rep)
                    } else {
                        line.to_string()
                    };
                    Ok((out, if normal { 0 } else { 3 }))
                }
                None => Ok(("incomplete: budget exceeded\n".into(), 4)),
            }
        }
        Command::Blocks => {
            let mut reports = Vec::new();
            for comp in g.connected_components() {
                reports.push(report::block_report(&comp.graph)?);
            }
            let out = if json {
                report::to_json_string(&ComponentsJson { components: reports })
            } else {
                let mut s = String::new();
                for (i, r) in reports.iter().enumerate() {
                    s.push_str(&format!("component {i}:\n"));
                    for b in &r.blocks {
                        s.push_str(&format!(
                            "  block edges={:?} bipartite={} type=T{}\n",
                            b.edges, b.bipartite, b.t_type
                        ));
                    }
                    s.push_str(&format!("  cut vertices: {:?}\n", r.cut_vertices));
                }
                s
            };
            Ok((out, 0))
        }
        Command::Generators => per_component_binomials(cli, budget, &g, |comp, budget| {
            Ok(walks::enumerate_minimal_binomials(comp, budget)?
                .into_iter()
                .map(|(_, b)| b)
                .collect())
        }),
        Command::Graver => per_component_binomials(cli, budget, &g, |comp, budget| {
            Ok(walks::enumerate_graver(comp, budget)?
                .into_iter()
                .map(|(_, b)| b)
                .collect())
        }),
        Command::Oracle => {
            let mut out_json = Vec::new();
            let mut out_text = String::new();
            for (i, comp) in g.connected_components().into_iter().enumerate() {
                let r = fiber::markov_mu(&comp.graph, budget)?;
                out_text.push_str(&format!("component {i}: mu={}\n", r.mu));
                for (deg, c) in r.per_degree.iter().filter(|(_, c)| *c > 0) {
                    out_text.push_str(&format!("  degree {:?}: {} generators\n", deg.0, c));
                }
                for b in &r.chosen_generators {
                    out_text.push_str(&format!("  {}\n", b.render()));
                }
                out_json.push(OracleJson {
                    mu: r.mu as u64,
                    per_degree: r
                        .per_degree
                        .iter()
                        .map(|(d, c)| PerDegreeJson {
                            degree: d.0.clone(),
                            count: *c as u64,
                        })
                        .collect(),
                    chosen_generators: r.chosen_generators.iter().map(BinomialJson::of).collect(),
                });
            }
            let out = if json {
                report::to_json_string(&ComponentsJson {
                    components: out_json,
                })
            } else {
                out_text
            };
            Ok((out, 0))
        }
        Command::Screen => {
            let mut all_pass = true;
            let mut out_json = Vec::new();
            let mut out_text = String::new();
            let mut code = 0;
            for (i, comp) in g.connected_components().into_iter().enumerate() {
                let rep = analyzer::screen_structural(&comp.graph, budget)?;
                if !rep.complete {
                    code = 4;
                }
                all_pass &= rep.all_passed();
                out_text.push_str(&format!(
                    "component {i}: {}\n",
                    if rep.all_passed() { "pass" } else { "FAIL" }
                ));
                for c in &rep.checks {
                    out_text.push_str(&format!(
                        "  {}: {}{}\n",
                        c.id,
                        if c.passed { "pass" } else { "FAIL" },
                        c.witness
                            .as_ref()
                            .map(|w| format!(" ({w})"))
                            .unwrap_or_default()
                    ));
                }
                out_json.push(ScreenJson {
                    complete: rep.complete,
                    checks: rep
                        .checks
                        .into_iter()
                        .map(|c| report::CheckJson {
                            id: c.id.to_string(),
                            passed: c.passed,
                            witness: c.witness,
                        })
                        .collect(),
                });
            }
            let out = if json {
                report::to_json_string(&ComponentsJson {
                    components: out_json,
                })
            } else {
                out_text
            };
            // Screening failure proves "not CI": signal with exit 3.
            Ok((out, if code != 0 { code } else if all_pass { 0 } else { 3 }))
        }
    }
}

fn per_component_binomials(
    cli: &Cli,
    budget: &Budget,
    g: &Graph,
    list: impl Fn(&Graph, &Budget) -> Result<Vec<toric_ci::Binomial>, Error>,
) -> Result<(String, i32), Error> {
    let mut out_json = Vec::new();
    let mut out_text = String::new();
    for (i, comp) in g.connected_components().into_iter().enumerate() {
        let bs = list(&comp.graph, budget)?;
        out_text.push_str(&format!("component {i}: {} binomials\n", bs.len()));
        for b in &bs {
            out_text.push_str(&format!("  {}\n", b.render()));
        }
        out_json.push(bs.iter().map(BinomialJson::of).collect::<Vec<_>>());
    }
    let out = if cli.out == Out::Json {
        report::to_json_string(&ComponentsJson {
            components: out_json,
        })
    } else {
        out_text
    };
    Ok((out, 0))
}

#[derive(serde::Serialize)]
struct ComponentsJson<T: serde::Serialize> {
    components: Vec<T>,
}

#[derive(serde::Serialize)]
struct OracleJson {
    mu: u64,
    per_degree: Vec<PerDegreeJson>,
    chosen_generators: Vec<BinomialJson>,
}

#[derive(serde::Serialize)]
struct PerDegreeJson {
    degree: Vec<u32>,
    count: u64,
}

#[derive(serde::Serialize)]
struct ScreenJson {
    complete: bool,
    checks: Vec<report::CheckJson>,
}

/// Batch mode: one report per file, sorted by file name, optionally
/// analyzed by a worker pool. Output order and bytes are independent of
/// the thread count.
fn run_batch(cli: &Cli, dir: &Path, budget: &Budget) -> i32 {
    let mut files: Vec<PathBuf> = match std::fs::read_dir(dir) {
        Ok(rd) => rd
            .filter_map(|e| e.ok())
            .map(|e| e.path())
            .filter(|p| p.is_file())
            .collect(),
        Err(e) => return fail(&Error::Io(e)),
    };
    files.sort();

    let n = files.len();
    let workers = cli.threads.max(1).min(n.max(1));
    let mut slots: Vec<Option<(String, i32)>> = vec![None; n];
    let next = std::sync::atomic::AtomicUsize::new(0);
    let slots_mutex = std::sync::Mutex::new(&mut slots);

    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::SeqCst);
                if i >= n {
                    break;
                }
                let outcome = std::fs::read_to_string(&files[i])
                    .map_err(Error::Io)
                    .and_then(|text| run_one(cli, budget, &text));
                let cell = match outcome {
                    Ok((out, code)) => (out, code),
                    Err(e) => (format!("error: {e}\n"), e.exit_code()),
                };
                slots_mutex.lock().unwrap()[i] = Some(cell);
            });
        }
    });

    let mut worst = 0;
    for (path, slot) in files.iter().zip(slots.into_iter()) {
        let (out, code) = slot.expect("worker filled every slot");
        println!("== {}", path.display());
        print!("{out}");
        worst = worse_exit(worst, code);
    }
    worst
}

/// Severity order for batch aggregation: 1 > 2 > 4 > 3 > 0.
fn worse_exit(a: i32, b: i32) -> i32 {
    let rank = |c: i32| match c {
        1 => 4,
        2 => 3,
        4 => 2,
        3 => 1,
        _ => 0,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}
