//! Command-line front end. Exit codes: 0 success / verdict true,
//! 1 verdict false / counterexample found, 2 usage or parse error.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use treedepth::codec;
use treedepth::criticality::{self, OneUniqueMethod};
use treedepth::families::{self, FamilySpec};
use treedepth::graph::Graph;
use treedepth::scanner;
use treedepth::solver::{self, Ranking, RankingVerdict};

#[derive(Parser)]
#[command(name = "treedepth", version, about = "Exact tree-depth toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute exact tree-depth of a graph.
    Td {
        /// Inline graph6, a file path (graph6 or JSON), or '-' for stdin.
        input: String,
        /// Also print an optimal ranking as JSON.
        #[arg(long)]
        certificate: bool,
        #[arg(long, value_enum, default_value_t = TdMethod::Recurse)]
        method: TdMethod,
    },
    /// Decision procedures.
    Check {
        #[command(subcommand)]
        what: CheckCmd,
    },
    /// Generate a family instance.
    Gen {
        #[command(subcommand)]
        family: GenCmd,
    },
    /// Scan small connected graphs for critical ones and check the
    /// conjectures. Exits nonzero if any counterexample is found.
    Scan {
        /// Enumerate all connected graphs up to this order (max 7).
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Scan graphs from a graph6 file instead of enumerating.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Worker threads; output bytes do not depend on this.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce the formula and family results at the given bounds.
    Verify {
        /// Check td(P_n) for n up to this bound.
        #[arg(long, default_value_t = 32)]
        paths: u32,
        /// Check td(C_n) for n up to this bound.
        #[arg(long, default_value_t = 33)]
        cycles: u32,
        /// Verify K/P/C/R/Q instances with tree-depth up to this bound
        /// as critical and 1-unique.
        #[arg(long, default_value_t = 5)]
        families: u32,
        /// Check critical-tree orders among trees up to this many vertices.
        #[arg(long, default_value_t = 12)]
        trees: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TdMethod {
    Recurse,
    Separator,
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Validate a claimed ranking (JSON array of labels).
    Ranking { graph: String, ranking: String },
    /// Is the graph critical?
    Critical { graph: String },
    /// Is the graph (or one vertex of it) 1-unique?
    OneUnique {
        graph: String,
        #[arg(long)]
        vertex: Option<usize>,
        #[arg(long, value_enum, default_value_t = MethodArg::StarClique)]
        method: MethodArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    StarClique,
    Oracle,
}

#[derive(Subcommand)]
enum GenCmd {
    /// Complete graph K_k.
    Complete {
        k: u32,
        #[command(flatten)]
        fmt: FormatOpt,
    },
    /// Path P_n.
    Path {
        n: u32,
        #[command(flatten)]
        fmt: FormatOpt,
    },
    /// Cycle C_n.
    Cycle {
        n: u32,
        #[command(flatten)]
        fmt: FormatOpt,
    },
    /// R_{k,t}: cycle with two pendant paths of length t.
    R {
        k: u32,
        t: u32,
        #[command(flatten)]
        fmt: FormatOpt,
    },
    /// Q_{k,s} member for a partition of s (comma-separated parts).
    Q {
        k: u32,
        s: u32,
        partition: String,
        #[command(flatten)]
        fmt: FormatOpt,
    },
}

#[derive(Args)]
struct FormatOpt {
    #[arg(long, value_enum, default_value_t = OutFormat::G6)]
    format: OutFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    G6,
    Dot,
    Json,
}

/// Usage/parse failures exit 2, negative verdicts exit 1.
enum CmdError {
    Usage(String),
    VerdictFalse,
}

macro_rules! usage_from {
    ($($t:ty),* $(,)?) => {
        $(impl From<$t> for CmdError {
            fn from(e: $t) -> Self {
                CmdError::Usage(e.to_string())
            }
        })*
    };
}

usage_from!(
    codec::CodecError,
    treedepth::graph::GraphError,
    treedepth::solver::SolverError,
    treedepth::families::FamilyError,
    treedepth::scanner::ScanError,
    std::io::Error,
);

fn read_graph(input: &str) -> Result<Graph, CmdError> {
    let content = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else if Path::new(input).is_file() {
        std::fs::read_to_string(input)?
    } else {
        input.to_string()
    };
    let content = content.trim();
    if content.starts_with('{') {
        Ok(codec::parse_json(content)?.0)
    } else {
        let line = content.lines().next().unwrap_or("");
        Ok(codec::parse_graph6(line)?)
    }
}

fn read_ranking(input: &str) -> Result<Ranking, CmdError> {
    let content = if Path::new(input).is_file() {
        std::fs::read_to_string(input)?
    } else {
        input.to_string()
    };
    let labels: Vec<u32> = serde_json::from_str(content.trim())
        .map_err(|e| CmdError::Usage(format!("ranking must be a JSON array of labels: {e}")))?;
    Ok(Ranking::new(labels)?)
}

fn run(cli: Cli) -> Result<(), CmdError> {
    match cli.cmd {
        Cmd::Td {
            input,
            certificate,
            method,
        } => {
            let g = read_graph(&input)?;
            match method {
                TdMethod::Recurse => {
                    let result = solver::tree_depth(&g);
                    println!("{}", result.td);
                    if certificate {
                        println!(
                            "{}",
                            serde_json::to_string(result.certificate.labels())
                                .expect("labels serialize")
                        );
                    }
                }
                TdMethod::Separator => {
                    let td = solver::tree_depth_via_separators(&g)?;
                    println!("{td}");
                    if certificate {
                        let result = solver::tree_depth(&g);
                        println!(
                            "{}",
                            serde_json::to_string(result.certificate.labels())
                                .expect("labels serialize")
                        );
                    }
                }
            }
            Ok(())
        }
        Cmd::Check { what } => match what {
            CheckCmd::Ranking { graph, ranking } => {
                let g = read_graph(&graph)?;
                let r = read_ranking(&ranking)?;
                match solver::is_valid_ranking(&g, &r)? {
                    RankingVerdict::Valid => {
                        println!("valid");
                        Ok(())
                    }
                    RankingVerdict::Invalid { path } => {
                        println!("invalid: violating path {path:?}");
                        Err(CmdError::VerdictFalse)
                    }
                }
            }
            CheckCmd::Critical { graph } => {
                let g = read_graph(&graph)?;
                let v = criticality::is_critical(&g);
                if v.is_critical {
                    println!("critical (tree-depth {})", v.td);
                    Ok(())
                } else {
                    println!(
                        "not critical (tree-depth {}); witness: {}",
                        v.td,
                        v.witness.expect("witness present on failure")
                    );
                    Err(CmdError::VerdictFalse)
                }
            }
            CheckCmd::OneUnique {
                graph,
                vertex,
                method,
            } => {
                let g = read_graph(&graph)?;
                let method = match method {
                    MethodArg::StarClique => OneUniqueMethod::StarClique,
                    MethodArg::Oracle => OneUniqueMethod::Oracle,
                };
                match vertex {
                    Some(v) => {
                        if criticality::is_one_unique_vertex(&g, v, method)? {
                            println!("vertex {v} is 1-unique");
                            Ok(())
                        } else {
                            println!("vertex {v} is not 1-unique");
                            Err(CmdError::VerdictFalse)
                        }
                    }
                    None => {
                        let mut failing = None;
                        for v in g.vertices() {
                            if !criticality::is_one_unique_vertex(&g, v, method)? {
                                failing = Some(v);
                                break;
                            }
                        }
                        match failing {
                            None => {
                                println!("1-unique");
                                Ok(())
                            }
                            Some(v) => {
                                println!("not 1-unique; first failing vertex: {v}");
                                Err(CmdError::VerdictFalse)
                            }
                        }
                    }
                }
            }
        },
        Cmd::Gen { family } => {
            let (spec, fmt) = match family {
                GenCmd::Complete { k, fmt } => (FamilySpec::Complete { k }, fmt),
                GenCmd::Path { n, fmt } => (FamilySpec::Path { n }, fmt),
                GenCmd::Cycle { n, fmt } => (FamilySpec::Cycle { n }, fmt),
                GenCmd::R { k, t, fmt } => (FamilySpec::R { k, t }, fmt),
                GenCmd::Q {
                    k,
                    s,
                    partition,
                    fmt,
                } => {
                    let parts: Result<Vec<u32>, _> =
                        partition.split(',').map(|p| p.trim().parse()).collect();
                    let partition = parts
                        .map_err(|e| CmdError::Usage(format!("bad partition: {e}")))?;
                    (FamilySpec::Q { k, s, partition }, fmt)
                }
            };
            let g = families::generate(&spec)?;
            match fmt.format {
                OutFormat::G6 => println!("{}", codec::emit_graph6(&g)),
                OutFormat::Dot => print!("{}", codec::emit_dot(&g, None)),
                OutFormat::Json => println!("{}", codec::emit_json(&g, None, None)),
            }
            Ok(())
        }
        Cmd::Scan {
            max_n,
            input,
            jobs,
            out,
        } => {
            let (graphs, provenance) = match input {
                Some(path) => {
                    let (graphs, diagnostics) = scanner::ingest_graph6(&path)?;
                    for d in &diagnostics {
                        eprintln!("{}:{}: {}", path.display(), d.line, d.message);
                    }
                    let count = graphs.len();
                    (graphs, scanner::file_provenance(count))
                }
                None => {
                    if max_n > scanner::MAX_ENUM_N {
                        return Err(CmdError::Usage(format!(
                            "--max-n {max_n} exceeds the internal enumeration cap \
                             {}; supply --input with pre-generated graphs",
                            scanner::MAX_ENUM_N
                        )));
                    }
                    let mut graphs = Vec::new();
                    for n in 1..=max_n {
                        graphs.extend(scanner::enumerate_connected(n)?);
                    }
                    let count = graphs.len();
                    (graphs, scanner::internal_provenance(max_n, count))
                }
            };
            let mut report = scanner::find_critical(&graphs, jobs, provenance);
            scanner::verify_conjectures(&mut report)?;
            let json = report.to_json();
            match out {
                Some(path) => std::fs::write(path, &json)?,
                None => println!("{json}"),
            }
            if report.has_counterexamples() {
                Err(CmdError::VerdictFalse)
            } else {
                Ok(())
            }
        }
        Cmd::Verify {
            paths,
            cycles,
            families: kmax,
            trees,
        } => run_verify(paths, cycles, kmax, trees),
    }
}

const PATHS_CAP: u32 = 40;
const CYCLES_CAP: u32 = 41;
const TREES_CAP: usize = 12;
const FAMILIES_CAP: u32 = 6;

fn run_verify(paths: u32, cycles: u32, kmax: u32, trees: usize) -> Result<(), CmdError> {
    let paths = truncate("paths", paths, PATHS_CAP);
    let cycles = truncate("cycles", cycles, CYCLES_CAP);
    let trees = truncate("trees", trees as u32, TREES_CAP as u32) as usize;
    let kmax = truncate("families", kmax, FAMILIES_CAP);

    let mut all_pass = true;
    let formulas = scanner::verify_formulas(paths, cycles, trees);
    for c in &formulas.checks {
        println!(
            "{:<8} expected {} computed {} {}",
            c.instance,
            c.expected,
            c.computed,
            pass_str(c.pass)
        );
    }
    for t in &formulas.critical_trees {
        println!(
            "critical tree {} order {} td {} {}",
            t.graph6,
            t.order,
            t.td,
            pass_str(t.pass)
        );
    }
    all_pass &= formulas.all_pass();

    for spec in verify_family_specs(kmax) {
        let g = families::generate(&spec).expect("bounded specs are valid");
        if g.n() > 16 {
            continue;
        }
        let expected = families::expected_treedepth(&spec).expect("valid spec");
        let verdict = criticality::is_critical(&g);
        let unique = criticality::is_one_unique(&g).one_unique;
        let pass = verdict.is_critical && verdict.td == expected && unique;
        println!(
            "{spec:?}: td {} critical {} 1-unique {} {}",
            verdict.td,
            verdict.is_critical,
            unique,
            pass_str(pass)
        );
        all_pass &= pass;
    }

    if all_pass {
        Ok(())
    } else {
        Err(CmdError::VerdictFalse)
    }
}

fn verify_family_specs(kmax: u32) -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for k in 1..=kmax {
        specs.push(FamilySpec::Complete { k });
        specs.push(FamilySpec::Path { n: 1 << (k - 1) });
        if k >= 3 {
            specs.push(FamilySpec::Cycle {
                n: (1 << (k - 2)) + 1,
            });
            for t in 0..=(1u32 << (k - 2)) - 2 {
                specs.push(FamilySpec::R { k, t });
            }
        }
        for s in 1..k {
            for partition in families::partitions(s) {
                specs.push(FamilySpec::Q { k, s, partition });
            }
        }
    }
    specs
}

fn truncate(name: &str, value: u32, cap: u32) -> u32 {
    if value > cap {
        eprintln!("warning: --{name} {value} beyond practical range, truncating to {cap}");
        cap
    } else {
        value
    }
}

fn pass_str(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError::VerdictFalse) => ExitCode::from(1),
        Err(CmdError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
