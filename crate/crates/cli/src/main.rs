use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use dlproof::el::{
    fold, normalize, saturate_with, Axiom, ContextPolicy, NormalizationTrace, SaturationConfig, Signed, TBox,
};
use dlproof::eli::{saturate_eli, EliCaps};
use dlproof::extraction::{minimal_proof, minimal_tree_proof, SearchConfig, SearchError};
use dlproof::fba::{fba_proof, ExternalForgetter, FbaError, FbaOptions, InternalForgetter};
use dlproof::generate::{gen_hitting_set_tbox, gen_sat_eli_tbox, CnfFormula, HittingSetInstance};
use dlproof::justify::{all_justifications, one_justification, ElEntailment, JustifyError};
use dlproof::textio::{
    parse_axiom, parse_eli_axiom, parse_eli_tbox, parse_tbox, proof_from_json, proof_to_dot, proof_to_json,
    write_eli_tbox, write_tbox, AnySentence,
};
use dlproof::{measure, DerivationStructure, Proof, ProofReport, Sentence, StructuralScorer};

const NOT_ENTAILED: u8 = 1;
const LIMIT: u8 = 2;
const INPUT: u8 = 3;

#[derive(Parser)]
#[command(name = "dlproof", version, about = "Proofs for EL(H) and ELI entailments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Deriver {
    El,
    Eli,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Min,
    Tree,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Contexts {
    All,
    Goal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Normalization {
    /// Saturate the goal as given.
    Off,
    /// Define fresh names for complex goal sides, then expand them in the emitted proof.
    Fold,
    /// Define fresh names and keep them in the emitted proof.
    Visible,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Scorer {
    Default,
}

#[derive(Subcommand)]
enum Command {
    /// Saturate and extract a minimal proof and/or a minimal tree proof.
    Prove {
        tbox: PathBuf,
        /// Goal sentence, inline or as a file.
        goal: String,
        #[arg(long, value_enum, default_value = "el")]
        deriver: Deriver,
        #[arg(long, value_enum, default_value = "both")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "all")]
        contexts: Contexts,
        /// EL only.
        #[arg(long, value_enum, default_value = "off")]
        normalize: Normalization,
        /// Node budget of the minimal-proof search.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Build a proof by iterated forgetting.
    Fba {
        tbox: PathBuf,
        goal: String,
        /// `auto`, or comma-separated symbols to forget first.
        #[arg(long, default_value = "auto")]
        order: String,
        /// Exchange directory of an external forgetting tool.
        #[arg(long)]
        external_forgetter: Option<PathBuf>,
        /// Seconds to wait for each external answer.
        #[arg(long, default_value_t = 30)]
        timeout: u64,
        #[arg(long)]
        no_earlier_tbox: bool,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Print one or all justifications.
    Justify {
        tbox: PathBuf,
        goal: String,
        #[arg(long)]
        all: bool,
        /// Node cap of the hitting-set tree.
        #[arg(long, default_value_t = 10_000)]
        cap: usize,
    },
    /// Measure a proof stored as JSON.
    Metrics {
        proof: PathBuf,
        #[arg(long, value_enum, default_value = "default")]
        scorer: Scorer,
    },
    /// Emit reduction instances.
    #[command(subcommand)]
    Gen(Gen),
    /// Compare deriver extraction with FBA.
    Compare { tbox: PathBuf, goal: String },
}

#[derive(Subcommand)]
enum Gen {
    /// Hitting-set instance; sets are comma-separated 1-based element ids.
    HittingSet {
        #[arg(long)]
        universe: usize,
        #[arg(long = "set", required = true)]
        sets: Vec<String>,
        #[arg(long)]
        bound: usize,
        /// Writes the TBox here, with `.goal` and `.expect` sidecars.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// SAT instance; clauses are comma-separated signed variable ids.
    Sat {
        #[arg(long)]
        vars: usize,
        #[arg(long = "clause", allow_hyphen_values = true)]
        clauses: Vec<String>,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INPUT)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn goal_text(arg: &str) -> Result<String> {
    let p = Path::new(arg);
    if !arg.trim_start().starts_with('(') && p.is_file() {
        read(p)
    } else {
        Ok(arg.to_string())
    }
}

fn load_el(tbox: &Path, goal: &str) -> Result<(TBox, Axiom)> {
    let t = parse_tbox(&read(tbox)?).with_context(|| format!("parsing {}", tbox.display()))?;
    let g = parse_axiom(&goal_text(goal)?).context("parsing goal")?;
    Ok((t, g))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn emit<L: Sentence>(proof: &Proof<L>, json: Option<&Path>, dot: Option<&Path>, tool: &str) -> Result<()> {
    if let Some(p) = json {
        let report = measure(proof, &StructuralScorer, tool).ok();
        write(p, &proof_to_json(proof, report.as_ref()))?;
    }
    if let Some(p) = dot {
        write(p, &proof_to_dot(proof))?;
    }
    Ok(())
}

fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Prove { tbox, goal, deriver, mode, contexts, normalize: norm, budget, json, dot } => {
            let opts = ExtractOpts { mode, budget, json: json.as_deref(), dot: dot.as_deref() };
            match deriver {
                Deriver::El => {
                    let (t, g) = load_el(&tbox, &goal)?;
                    let mut cfg = SaturationConfig::default();
                    if contexts == Contexts::Goal {
                        cfg.contexts = ContextPolicy::GoalDirected;
                    }
                    let (nt, ng, trace) = match norm {
                        Normalization::Off => (t.clone(), g.clone(), NormalizationTrace::default()),
                        _ => normalize(&t, &g),
                    };
                    let post = |p: &Proof<Axiom>| match norm {
                        Normalization::Fold => fold(p, &trace, &t),
                        _ => p.clone(),
                    };
                    match saturate_with(&nt, &ng, &cfg) {
                        Ok(ds) => extract(&ds, &ng, &opts, post),
                        Err(e) => {
                            println!("saturation stopped: {e}");
                            Ok(LIMIT)
                        }
                    }
                }
                Deriver::Eli => {
                    let t = parse_eli_tbox(&read(&tbox)?).with_context(|| format!("parsing {}", tbox.display()))?;
                    let g = parse_eli_axiom(&goal_text(&goal)?).context("parsing goal")?;
                    match saturate_eli(&t, &g, EliCaps::default()) {
                        Ok(ds) => extract(&ds, &g, &opts, Clone::clone),
                        Err(e) => {
                            println!("saturation stopped: {e}");
                            Ok(LIMIT)
                        }
                    }
                }
            }
        }
        Command::Fba { tbox, goal, order, external_forgetter, timeout, no_earlier_tbox, json, dot } => {
            let (t, g) = load_el(&tbox, &goal)?;
            let external = external_forgetter.map(|d| ExternalForgetter::new(d, Duration::from_secs(timeout)));
            let internal = InternalForgetter;
            let mut opts = FbaOptions { order: parse_order(&order, &t)?, ..FbaOptions::default() };
            opts.earlier_tbox = !no_earlier_tbox;
            opts.forgetter = match &external {
                Some(x) => x,
                None => &internal,
            };
            match fba_proof(&t, &g, &opts) {
                Ok((proof, trace)) => {
                    let steps: Vec<String> = (0..trace.steps.len()).map(|i| trace.step_tag(i)).collect();
                    println!("forgotten: {}", steps.join(" "));
                    print_report(&measure(&proof, &StructuralScorer, "fba")?);
                    emit(&proof, json.as_deref(), dot.as_deref(), "fba")?;
                    Ok(0)
                }
                Err(FbaError::NotEntailed) => {
                    println!("not entailed");
                    Ok(NOT_ENTAILED)
                }
                Err(FbaError::Capacity(e)) => {
                    println!("stopped: {e}");
                    Ok(LIMIT)
                }
            }
        }
        Command::Justify { tbox, goal, all, cap } => {
            let (t, g) = load_el(&tbox, &goal)?;
            let axioms = t.to_vec();
            let result = if all {
                all_justifications(&axioms, &g, &ElEntailment, cap)
            } else {
                one_justification(&axioms, &g, &ElEntailment).map(|j| vec![j])
            };
            match result {
                Ok(js) => {
                    print_justifications(&js);
                    Ok(0)
                }
                Err(JustifyError::NotEntailed) => {
                    println!("not entailed");
                    Ok(NOT_ENTAILED)
                }
                Err(JustifyError::Capacity(e)) => {
                    println!("stopped: {e}");
                    Ok(LIMIT)
                }
                Err(JustifyError::Incomplete { limit, partial }) => {
                    print_justifications(&partial);
                    println!("; incomplete after {limit} nodes");
                    Ok(LIMIT)
                }
            }
        }
        Command::Metrics { proof, scorer: Scorer::Default } => {
            let (p, _) = proof_from_json::<AnySentence>(&read(&proof)?).context("parsing proof")?;
            let report = measure(&p, &StructuralScorer, "input")?;
            print_report(&report);
            Ok(0)
        }
        Command::Gen(g) => generate(g),
        Command::Compare { tbox, goal } => compare(&tbox, &goal),
    }
}

fn parse_order(spec: &str, t: &TBox) -> Result<Vec<Signed>> {
    if spec == "auto" {
        return Ok(Vec::new());
    }
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|name| {
            let c = Signed::concept(name);
            let r = Signed::role(name);
            match (t.signature().contains(&c), t.signature().contains(&r)) {
                (true, _) => Ok(c),
                (false, true) => Ok(r),
                (false, false) => bail!("symbol {name} does not occur in the TBox"),
            }
        })
        .collect()
}

fn print_justifications(js: &[dlproof::justify::Justification<Axiom>]) {
    for (i, j) in js.iter().enumerate() {
        if i > 0 {
            println!();
        }
        println!("; justification {}", i + 1);
        for a in &j.axioms {
            println!("{a}");
        }
    }
}

fn print_report(r: &ProofReport) {
    println!("vertices: {}", r.hypergraph_size);
    println!("tree size: {}", r.tree_size);
    println!("label size: {}", r.label_size);
    println!("score sum: {}", r.score_sum);
    println!("score max: {}", r.score_max);
}

struct ExtractOpts<'a> {
    mode: Mode,
    budget: u64,
    json: Option<&'a Path>,
    dot: Option<&'a Path>,
}

fn extract<L: Sentence>(
    ds: &DerivationStructure<L>,
    eta: &L,
    opts: &ExtractOpts<'_>,
    post: impl Fn(&Proof<L>) -> Proof<L>,
) -> Result<u8> {
    println!("structure: {} vertices, {} edges", ds.graph.vertex_count(), ds.graph.edge_count());
    if ds.graph.vertex_of(eta).is_none() {
        println!("not entailed");
        return Ok(NOT_ENTAILED);
    }
    let mut code = 0;
    if opts.mode != Mode::Min {
        let Some(t) = minimal_tree_proof(ds, eta) else {
            println!("not entailed");
            return Ok(NOT_ENTAILED);
        };
        println!("minimal tree proof: {}", t.weight);
        if opts.mode == Mode::Tree {
            emit(&post(t.tree.proof()), opts.json, opts.dot, "deriver-tree")?;
        }
    }
    if opts.mode != Mode::Tree {
        let cfg = SearchConfig::with_budget(opts.budget);
        match minimal_proof(ds, eta, &cfg) {
            Ok(Some(p)) => {
                println!("minimal proof: {} vertices", p.vertex_count());
                emit(&post(&p), opts.json, opts.dot, "deriver-min")?;
            }
            Ok(None) => {
                println!("not entailed");
                return Ok(NOT_ENTAILED);
            }
            Err(e) => {
                code = LIMIT;
                match e.incumbent() {
                    Some(p) => {
                        println!("minimal proof: budget exhausted, best {} vertices", p.vertex_count());
                        emit(&post(p), opts.json, opts.dot, "deriver-min")?;
                    }
                    None => println!("minimal proof: budget exhausted"),
                }
                if let SearchError::Cancelled { .. } = e {
                    println!("cancelled");
                }
            }
        }
    }
    Ok(code)
}

fn sidecar(out: &Option<PathBuf>, body: &str, goal: &str, expect: &str) -> Result<()> {
    match out {
        Some(p) => {
            write(p, body)?;
            write(&append_ext(p, "goal"), &format!("{goal}\n"))?;
            write(&append_ext(p, "expect"), &format!("expect: {expect}\n"))?;
        }
        None => {
            print!("{body}");
            println!("; goal: {goal}");
            println!("; expect: {expect}");
        }
    }
    Ok(())
}

fn append_ext(p: &Path, ext: &str) -> PathBuf {
    let mut s = p.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>>
where
    T::Err: std::error::Error + Send + Sync + 'static,
{
    s.split(',').map(str::trim).filter(|x| !x.is_empty()).map(|x| Ok(x.parse::<T>()?)).collect()
}

fn generate(g: Gen) -> Result<u8> {
    match g {
        Gen::HittingSet { universe, sets, bound, out } => {
            let sets = sets
                .iter()
                .map(|s| {
                    parse_list::<usize>(s)?
                        .into_iter()
                        .map(|e| e.checked_sub(1).context("element ids start at 1"))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let inst = HittingSetInstance { universe_size: universe, sets, bound };
            let gen = gen_hitting_set_tbox(&inst)?;
            let rel = if inst.min_hitting_set() <= bound { "<=" } else { ">" };
            sidecar(&out, &write_tbox(&gen.tbox), &gen.goal.to_string(), &format!("{rel} {}", gen.bound))?;
            Ok(0)
        }
        Gen::Sat { vars, clauses, out } => {
            let clauses = clauses.iter().map(|c| parse_list::<i32>(c)).collect::<Result<Vec<_>>>()?;
            let phi = CnfFormula { variables: vars, clauses };
            let gen = gen_sat_eli_tbox(&phi)?;
            let rel = if gen.formula.is_satisfiable() { "<=" } else { ">" };
            sidecar(&out, &write_eli_tbox(&gen.tbox), &gen.goal.to_string(), &format!("{rel} {}", gen.bound))?;
            Ok(0)
        }
    }
}

fn compare(tbox: &Path, goal: &str) -> Result<u8> {
    let (t, g) = load_el(tbox, goal)?;
    let (deriver, fba) = std::thread::scope(|s| {
        let d = s.spawn(|| -> Result<Vec<ProofReport>> {
            let ds = saturate_with(&t, &g, &SaturationConfig::default())?;
            let mut out = Vec::new();
            if let Some(tree) = minimal_tree_proof(&ds, &g) {
                out.push(measure(tree.tree.proof(), &StructuralScorer, "deriver-tree")?);
            }
            let min = match minimal_proof(&ds, &g, &SearchConfig::default()) {
                Ok(p) => p,
                Err(e) => e.incumbent().cloned(),
            };
            if let Some(p) = min {
                out.push(measure(&p, &StructuralScorer, "deriver-min")?);
            }
            Ok(out)
        });
        let f = s.spawn(|| fba_proof(&t, &g, &FbaOptions::default()).map(|(p, _)| p));
        (d.join().expect("deriver thread"), f.join().expect("fba thread"))
    });
    let mut rows = deriver?;
    match fba {
        Ok(p) => rows.push(measure(&p, &StructuralScorer, "fba")?),
        Err(FbaError::NotEntailed) => {}
        Err(e) => println!("fba: {e}"),
    }
    if rows.is_empty() {
        println!("not entailed");
        return Ok(NOT_ENTAILED);
    }
    println!("{:<14}{:>10}{:>11}{:>12}{:>11}{:>11}", "tool", "vertices", "tree size", "label size", "score sum", "score max");
    for r in &rows {
        println!(
            "{:<14}{:>10}{:>11}{:>12}{:>11}{:>11}",
            r.tool, r.hypergraph_size, r.tree_size, r.label_size, r.score_sum, r.score_max
        );
    }
    Ok(0)
}
