//! Argument parsing and the subcommands.
//!
//! Exit codes: 0 success, 2 negative answer or refused input, 3 oracle
//! mismatch, 64 usage or malformed input, 74 I/O failure.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use prismatic_core::covering::{bounded_hitting_set, clique_cover, min_clique_cover_oracle, CoverConfig, OracleLimits};
use prismatic_core::families::generate;
use prismatic_core::recognition::{is_cobridge_free, is_orientable, is_prismatic, three_coloring, Verdict};
use prismatic_core::Graph;
use serde_json::{json, Value};

use crate::report::{parts_json, CertificateReport, Report, StatsReport};
use crate::{edgelist, selftest, specfile};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 2;
pub const EXIT_MISMATCH: u8 = 3;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_IO: u8 = 74;

#[derive(Parser, Debug)]
#[command(name = "prismatic", version, about = "Clique covers of co-bridge-free prismatic graphs")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Report wall time; off by default so that output is reproducible.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum What {
    Prismatic,
    Cobridge,
    Orientable,
    #[value(name = "3color")]
    ThreeColor,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a family graph as an edge list.
    Gen {
        /// Family or fixture name (prism, line_k33, schlafli, core_ring_of_five,
        /// ring_of_five, mantled, path, cycle, minimal, ladder, ladder500, cycle8).
        family: String,
        /// `key = value` spec file; keys not given keep the family defaults.
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Overrides the seed of the spec.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Test structural predicates and print certificates.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = What::All)]
        what: What,
    },
    /// Look for a triangle hitting set of at most k vertices.
    Hit {
        file: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Minimum clique cover.
    Cover {
        file: PathBuf,
        /// Refuse inputs that are not prismatic or contain a co-bridge.
        #[arg(long)]
        verify: bool,
        /// Cross-check against the exhaustive oracle.
        #[arg(long)]
        oracle: bool,
        /// Largest graph the oracle accepts.
        #[arg(long, default_value_t = 30)]
        oracle_max: usize,
    },
    /// Generator corpus tools.
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
}

#[derive(Subcommand, Debug)]
enum FamiliesAction {
    /// Generate seeded instances of every family and check their invariants.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

/// What a run printed and how it exits.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

struct Failure {
    code: u8,
    msg: String,
}

fn fail(code: u8, msg: impl Into<String>) -> Failure {
    Failure { code, msg: msg.into() }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| fail(EXIT_IO, format!("{}: {e}", path.display())))?;
    edgelist::parse(&text).map_err(|e| fail(EXIT_USAGE, format!("{}: {e}", path.display())))
}

/// Parses `args` (without the program name) and runs the subcommand.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("prismatic".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let start = Instant::now();
    let result = match &cli.command {
        Command::Gen {
            family,
            spec,
            seed,
            output,
        } => cmd_gen(family, spec.as_deref(), *seed, output.as_deref()),
        Command::Check { file, what } => cmd_check(file, *what),
        Command::Hit { file, k } => cmd_hit(file, *k),
        Command::Cover {
            file,
            verify,
            oracle,
            oracle_max,
        } => cmd_cover(file, *verify, *oracle, *oracle_max),
        Command::Families {
            action: FamiliesAction::Selftest { seed, count },
        } => cmd_selftest(*seed, *count),
    };
    match result {
        Ok(mut done) => {
            if cli.timing {
                done.report.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            let stdout = match cli.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&done.report).expect("reports serialise");
                    s.push('\n');
                    s
                }
                Format::Text => {
                    let mut s = done.text;
                    if let Some(ms) = done.report.elapsed_ms {
                        writeln!(s, "elapsed_ms {ms:.3}").expect("write to string");
                    }
                    s
                }
            };
            Outcome {
                code: done.code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(f) => Outcome {
            code: f.code,
            stdout: String::new(),
            stderr: format!("{}\n", f.msg),
        },
    }
}

struct Done {
    code: u8,
    text: String,
    report: Report,
}

fn report(input: Option<&Path>, subcommand: &str, result: Value, seed: u64) -> Report {
    Report {
        input: input.map(|p| p.display().to_string()),
        subcommand: subcommand.to_string(),
        result,
        certificate: None,
        stats: None,
        branch: None,
        elapsed_ms: None,
        seed,
    }
}

fn cmd_gen(family: &str, spec_path: Option<&Path>, seed: Option<u64>, output: Option<&Path>) -> Result<Done, Failure> {
    let mut spec = match spec_path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| fail(EXIT_IO, format!("{}: {e}", p.display())))?;
            specfile::parse(&text, Some(family)).map_err(|e| fail(EXIT_USAGE, format!("{}: {e}", p.display())))?
        }
        None => specfile::builtin(family).map_err(|e| fail(EXIT_USAGE, e.to_string()))?,
    };
    if let Some(s) = seed {
        spec = spec.with_seed(s);
    }
    let gen = generate(&spec).map_err(|e| fail(EXIT_NEGATIVE, e.to_string()))?;
    let g = &gen.graph;
    let el = edgelist::emit(g);
    let mut result = json!({
        "family": spec.name(),
        "n": g.n(),
        "m": g.edge_count(),
        "output": output.map(|p| p.display().to_string()),
    });
    let text = match output {
        Some(p) => {
            std::fs::write(p, &el).map_err(|e| fail(EXIT_IO, format!("{}: {e}", p.display())))?;
            format!("{} n={} m={} -> {}\n", spec.name(), g.n(), g.edge_count(), p.display())
        }
        None => {
            result["edge_list"] = Value::String(el.clone());
            el
        }
    };
    Ok(Done {
        code: EXIT_OK,
        text,
        report: report(None, "gen", result, spec.seed().unwrap_or(0)),
    })
}

fn cmd_check(file: &Path, what: What) -> Result<Done, Failure> {
    let g = read_graph(file)?;
    let wanted = |w: What| what == w || what == What::All;
    let mut text = String::new();
    let mut result = serde_json::Map::new();
    let mut first_cert = None;
    let mut all_yes = true;
    let mut record = |name: &str, verdict: Result<Verdict<()>, String>| {
        let entry = match verdict {
            Ok(Verdict::Yes(())) => {
                writeln!(text, "{name}: yes").expect("write to string");
                json!({"answer": "yes"})
            }
            Ok(Verdict::No(c)) => {
                all_yes = false;
                writeln!(text, "{name}: no {c}").expect("write to string");
                let cr = CertificateReport::from(&c);
                first_cert.get_or_insert_with(|| cr.clone());
                json!({"answer": "no", "certificate": cr})
            }
            Err(e) => {
                all_yes = false;
                writeln!(text, "{name}: error {e}").expect("write to string");
                json!({"answer": "error", "error": e})
            }
        };
        result.insert(name.to_string(), entry);
    };
    if wanted(What::Prismatic) {
        record("prismatic", Ok(is_prismatic(&g)));
    }
    if wanted(What::Cobridge) {
        record("cobridge_free", Ok(is_cobridge_free(&g)));
    }
    if wanted(What::Orientable) {
        let v = is_orientable(&g).map(|v| match v {
            Verdict::Yes(_) => Verdict::Yes(()),
            Verdict::No(c) => Verdict::No(c),
        });
        record("orientable", v.map_err(|e| e.to_string()));
    }
    if wanted(What::ThreeColor) {
        let name = "3color";
        match three_coloring(&g) {
            Ok(Some(c)) => {
                writeln!(text, "{name}: yes {:?}", c.colors()).expect("write to string");
                result.insert(name.into(), json!({"answer": "yes", "colors": c.colors()}));
            }
            Ok(None) => {
                all_yes = false;
                writeln!(text, "{name}: no").expect("write to string");
                result.insert(name.into(), json!({"answer": "no"}));
            }
            Err(e) => {
                all_yes = false;
                writeln!(text, "{name}: error {e}").expect("write to string");
                result.insert(name.into(), json!({"answer": "error", "error": e.to_string()}));
            }
        }
    }
    let mut r = report(Some(file), "check", Value::Object(result), 0);
    r.certificate = first_cert;
    Ok(Done {
        code: if all_yes { EXIT_OK } else { EXIT_NEGATIVE },
        text,
        report: r,
    })
}

fn cmd_hit(file: &Path, k: usize) -> Result<Done, Failure> {
    let g = read_graph(file)?;
    let h = bounded_hitting_set(&g, k);
    let (text, result) = match &h {
        Some(h) => {
            let vs = h.vertices.as_slice();
            let list: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
            (format!("yes {}\n", list.join(" ")), json!({"k": k, "answer": "yes", "hitting_set": vs}))
        }
        None => ("no\n".to_string(), json!({"k": k, "answer": "no", "hitting_set": null})),
    };
    Ok(Done {
        code: if h.is_some() { EXIT_OK } else { EXIT_NEGATIVE },
        text,
        report: report(Some(file), "hit", result, 0),
    })
}

fn cmd_cover(file: &Path, verify: bool, oracle: bool, oracle_max: usize) -> Result<Done, Failure> {
    let g = read_graph(file)?;
    if verify {
        for verdict in [is_prismatic(&g), is_cobridge_free(&g)] {
            if let Verdict::No(c) = verdict {
                return Err(fail(EXIT_NEGATIVE, format!("PreconditionViolated: {c}")));
            }
        }
    }
    let limits = OracleLimits {
        max_vertices: oracle_max,
        ..OracleLimits::default()
    };
    let config = CoverConfig {
        oracle: limits,
        ..CoverConfig::default()
    };
    let (cover, rep) = clique_cover(&g, &config).map_err(|e| fail(EXIT_NEGATIVE, e.to_string()))?;
    let stats = StatsReport::of(&cover);
    let hs = rep.hitting_set.as_ref().map(|h| h.vertices.as_slice().to_vec());
    let mut text = String::new();
    writeln!(text, "size {}", cover.size()).expect("write to string");
    writeln!(text, "branch {}", rep.branch.name()).expect("write to string");
    if let Some(h) = &hs {
        let list: Vec<String> = h.iter().map(|v| v.to_string()).collect();
        writeln!(text, "hitting_set {}", list.join(" ")).expect("write to string");
    }
    writeln!(text, "stats t={} m={} r={}", stats.t, stats.m, stats.r).expect("write to string");
    writeln!(text, "parts {cover}").expect("write to string");
    let mut result = json!({
        "size": cover.size(),
        "parts": parts_json(&cover),
        "hitting_set": hs,
        "candidates": rep.candidates,
        "embedding": rep.embedding,
    });
    let mut code = EXIT_OK;
    if oracle {
        let o = min_clique_cover_oracle(&g, &limits).map_err(|e| fail(EXIT_NEGATIVE, e.to_string()))?;
        let agrees = o.size() == cover.size();
        writeln!(text, "oracle {} {}", o.size(), if agrees { "agrees" } else { "MISMATCH" }).expect("write to string");
        result["oracle"] = json!({"size": o.size(), "agrees": agrees});
        if !agrees {
            code = EXIT_MISMATCH;
        }
    }
    let mut r = report(Some(file), "cover", result, 0);
    r.stats = Some(stats);
    r.branch = Some(rep.branch.name().to_string());
    Ok(Done { code, text, report: r })
}

fn cmd_selftest(seed: u64, count: usize) -> Result<Done, Failure> {
    let rows = selftest::sweep(seed, count);
    let mut text = format!("{:<20} {:>9} {:>6} {:>6} {:>7}\n", "family", "instances", "pass", "fail", "skipped");
    for r in &rows {
        writeln!(
            text,
            "{:<20} {:>9} {:>6} {:>6} {:>7}",
            r.family, r.instances, r.passed, r.failed, r.skipped
        )
        .expect("write to string");
        if let Some(f) = &r.first_failure {
            writeln!(text, "  first failure: {f}").expect("write to string");
        }
    }
    let ok = rows.iter().all(|r| r.failed == 0);
    writeln!(text, "{}", if ok { "PASS" } else { "FAIL" }).expect("write to string");
    Ok(Done {
        code: if ok { EXIT_OK } else { EXIT_NEGATIVE },
        text,
        report: report(None, "families selftest", json!({"rows": rows, "pass": ok}), seed),
    })
}
