use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use domdodom::checks::{CheckParams, CheckRegistry, CheckReport, DEFAULT_SEED};
use domdodom::constructions::{ConstructionParams, ConstructionRegistry};
use domdodom::covers::minimal_covers;
use domdodom::domdodom::{BetaQuery, EvaluatorRegistry, Variant};
use domdodom::io::{family_to_text, generators_from_str, read_family};
use domdodom::search::{
    beta_constant_with, enumerate_maximal_with, enumerate_tau_full_with, exact_beta_over, EnumerationResult,
    SearchOptions,
};
use domdodom::{Family, Result};

#[derive(Parser)]
#[command(name = "domdodom", version, about = "Compute beta_{p,q}, covers and exact searches for intersecting set families")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the output document here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for the parallel regions.
    #[arg(long, global = true, env = "DOMDODOM_THREADS")]
    threads: Option<usize>,
    /// Lift the size guards (instance size, support, vertex budget).
    #[arg(long, global = true)]
    force: bool,
    /// Abort searches after this many nodes.
    #[arg(long, global = true)]
    max_nodes: Option<u64>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Report real wall-clock times (otherwise elapsed_ms is 0 so output is reproducible).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// beta_{p,q} (or beta'_{p,q}) of a family with its least witness.
    Beta {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(short)]
        p: usize,
        #[arg(short)]
        q: usize,
        #[arg(long, default_value = "containment")]
        variant: Variant,
        /// Use the naive evaluator.
        #[arg(long, conflicts_with = "evaluator")]
        naive: bool,
        /// Evaluator by name (naive, fast, parallel).
        #[arg(long)]
        evaluator: Option<String>,
    },
    /// Covering number and minimal covers.
    Covers {
        #[arg(long = "in")]
        input: PathBuf,
        /// Largest cover size to list (defaults to k).
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Build a named family.
    Construct {
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// File with generator sets (JSON lists or one comma-separated set per line).
        #[arg(long)]
        generators: Option<PathBuf>,
    },
    /// Exhaustive enumerations.
    Enumerate {
        #[command(subcommand)]
        what: Enumerate,
    },
    /// The constant beta(q) over (q+1)-uniform families with tau = q+1.
    SearchBetaConstant {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        max_vertices: usize,
        #[command(flatten)]
        split: Split,
    },
    /// Run a named check of an exact result.
    Verify {
        #[command(subcommand)]
        check: Verify,
    },
}

#[derive(Args)]
struct Split {
    /// Progress file; an existing file resumes the run.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    split_depth: usize,
}

#[derive(Subcommand)]
enum Enumerate {
    /// All maximal intersecting k-uniform families on [n]; with -p and -q also the exact beta.
    Maximal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(short, requires = "q")]
        p: Option<usize>,
        #[arg(short, requires = "p")]
        q: Option<usize>,
    },
    /// (q+1)-uniform intersecting families with tau = q+1, up to isomorphism.
    TauFull {
        #[arg(long)]
        q: usize,
        #[arg(long)]
        max_vertices: usize,
        #[command(flatten)]
        split: Split,
    },
}

#[derive(Subcommand)]
enum Verify {
    LemmaCharact,
    Thm02 {
        #[arg(long, default_value_t = 2)]
        part: u8,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        p: usize,
    },
    Tau {
        #[arg(long, default_value_t = 100)]
        random: usize,
    },
    CoverBound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    Ekr {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

/// What a command produced: a JSON document, its text rendering, and whether a check failed.
struct Output {
    json: Value,
    text: String,
    failed: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output { json, text, failed: false }
    }
}

fn set_text(elements: &[usize]) -> String {
    if elements.is_empty() {
        "-".into()
    } else {
        elements.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
    }
}

fn families_text(families: &[Family]) -> String {
    families.iter().map(family_to_text).collect::<Vec<_>>().join("\n")
}

fn search_options(g: &Global, split: Option<&Split>) -> SearchOptions {
    SearchOptions {
        force: g.force,
        max_nodes: g.max_nodes,
        checkpoint: split.and_then(|s| s.checkpoint.clone()),
        split_depth: split.map_or(3, |s| s.split_depth),
    }
}

fn enumeration_output(g: &Global, mut res: EnumerationResult) -> Result<Value> {
    if !g.timing {
        res.stats.elapsed_ms = 0;
    }
    Ok(serde_json::to_value(&res)?)
}

fn check_output(report: CheckReport) -> Result<Output> {
    let mut text = format!("check: {}\nclaim: {}\npass: {}\nobserved: {}\n", report.check, report.claim, report.pass, report.observed);
    for n in &report.notes {
        text.push_str(&format!("note: {n}\n"));
    }
    let failed = !report.pass;
    Ok(Output { json: serde_json::to_value(&report)?, text, failed })
}

fn run(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    match &cli.command {
        Command::Beta { input, p, q, variant, naive, evaluator } => {
            let f = read_family(input)?;
            let query = BetaQuery { p: *p, q: *q, variant: *variant };
            let name = match (naive, evaluator) {
                (true, _) => "naive",
                (false, Some(name)) => name.as_str(),
                (false, None) => "parallel",
            };
            let w = EvaluatorRegistry::builtin().get(name)?.evaluate(&f, &query)?;
            let text = format!("value {}\nA {}\nB {}\n", w.value, set_text(&w.witness_a.elements()), set_text(&w.witness_b.elements()));
            Ok(Output::ok(serde_json::to_value(w)?, text))
        }
        Command::Covers { input, max_size } => {
            let f = read_family(input)?;
            let r = minimal_covers(&f, max_size.unwrap_or(f.k()));
            let mut text = format!("tau {}\n", r.tau);
            for c in &r.minimal_covers {
                text.push_str(&set_text(&c.elements()));
                text.push('\n');
            }
            Ok(Output::ok(serde_json::to_value(&r)?, text))
        }
        Command::Construct { name, n, k, generators } => {
            let generators = match generators {
                Some(path) => Some(generators_from_str(&fs::read_to_string(path)?)?),
                None => None,
            };
            let params = ConstructionParams { n: *n, k: *k, generators };
            let f = ConstructionRegistry::builtin().get(name)?.build(&params)?;
            Ok(Output::ok(serde_json::to_value(&f)?, family_to_text(&f)))
        }
        Command::Enumerate { what: Enumerate::Maximal { n, k, p, q } } => {
            let res = enumerate_maximal_with(*n, *k, &search_options(g, None))?;
            let exact = match (p, q) {
                (Some(p), Some(q)) => {
                    let query = BetaQuery::containment(*p, *q);
                    query.validate(*n)?;
                    Some((*p, *q, exact_beta_over(&res.families, &query)?))
                }
                _ => None,
            };
            let mut text = families_text(&res.families);
            let mut json = enumeration_output(g, res)?;
            if let Some((p, q, e)) = exact {
                text = format!("# beta_{p},{q}({n},{k}) = {} attained by {} families\n{text}", e.value, e.extremal.len());
                json["exact_beta"] = json!({ "p": p, "q": q, "value": e.value, "extremal": e.extremal });
            }
            Ok(Output::ok(json, text))
        }
        Command::Enumerate { what: Enumerate::TauFull { q, max_vertices, split } } => {
            let res = enumerate_tau_full_with(*q, *max_vertices, &search_options(g, Some(split)))?;
            let text = families_text(&res.families);
            Ok(Output::ok(enumeration_output(g, res)?, text))
        }
        Command::SearchBetaConstant { q, max_vertices, split } => {
            let b = beta_constant_with(*q, *max_vertices, &search_options(g, Some(split)))?;
            let text = format!("beta({q}) = {} over {} classes on <= {max_vertices} vertices\n{}", b.value, b.classes_examined, families_text(&b.extremal));
            Ok(Output::ok(serde_json::to_value(&b)?, text))
        }
        Command::Verify { check } => {
            let mut params = CheckParams { seed: g.seed, search: search_options(g, None), ..CheckParams::default() };
            let name = match check {
                Verify::LemmaCharact => "lemma-charact",
                Verify::Thm02 { part, n, k, p } => {
                    params.part = Some(*part);
                    (params.n, params.k, params.p) = (Some(*n), Some(*k), Some(*p));
                    "thm02"
                }
                Verify::Tau { random } => {
                    params.random = *random;
                    "tau"
                }
                Verify::CoverBound { n, k } => {
                    (params.n, params.k) = (Some(*n), Some(*k));
                    "cover-bound"
                }
                Verify::Ekr { n, k } => {
                    (params.n, params.k) = (Some(*n), Some(*k));
                    "ekr"
                }
            };
            check_output(CheckRegistry::builtin().get(name)?.run(&params)?)
        }
    }
}

fn emit(g: &Global, out: &Output) -> Result<()> {
    let mut doc = match g.format {
        Format::Json => serde_json::to_string(&out.json)?,
        Format::Text => out.text.trim_end().to_string(),
    };
    doc.push('\n');
    match &g.out {
        Some(path) => fs::write(path, doc)?,
        None => std::io::stdout().lock().write_all(doc.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.global.force {
        eprintln!("warning: --force lifts the size guards; the run may take very long or exhaust memory");
    }
    if let Some(t) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: cannot start {t} threads: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli).and_then(|out| emit(&cli.global, &out).map(|_| out.failed)) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_validation() { 2 } else { 1 })
        }
    }
}
