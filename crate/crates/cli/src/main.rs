use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use vbraid::braid::random::{seeded_rng, DEFAULT_SEED};
use vbraid::braiding::{braid, braid_random_order};
use vbraid::diagram::{closure, render_closure, virtual_parity_between_components, MorsePresentation};
use vbraid::invariants::{
    bracket_state_sum, check_model, markov_axiom_report, normalized_bracket, normalized_invariant,
    trace_invariant, AxiomConfig, RMatrixModel,
};
use vbraid::moves::scripts::{canonical_script_name, replay_derivation, SCRIPTS};
use vbraid::moves::{
    ExchangeTo, LvKind, LvSite, MarkovMove, MovePath, Side, StabKind, Step, ThreadStyle,
};
use vbraid::search::{
    bfs_connect, canonicalize_path, default_conjugate_pair, MoveSet, SearchConfig, SearchOutcome,
    DEFAULT_CANON_BUDGET,
};
use vbraid::{parse_word, BraidWord, Error, Generator};

#[derive(Parser)]
#[command(name = "vbraid", version, about = "Virtual braids, Markov-type moves and bracket invariants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rewrite a word to its canonical form.
    Normalize {
        #[arg(long)]
        word: String,
        #[arg(long, default_value_t = DEFAULT_CANON_BUDGET)]
        budget: usize,
        /// Print the rewriting path as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Turn a Morse-slice diagram into a braid word.
    Braid {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Eliminate up-arcs in a random order drawn from this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Close a braid word into a Gauss code (or a Morse diagram).
    Close {
        #[arg(long)]
        word: String,
        #[arg(long)]
        morse: bool,
    },
    /// Evaluate the trace invariant of a word's closure.
    Invariant {
        #[arg(long)]
        word: String,
        /// bracket, swap, identity, or a model JSON file.
        #[arg(long, default_value = "bracket")]
        model: String,
        /// Also evaluate the bracket state sum of the closure.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Apply one Markov-type move.
    Move {
        #[arg(long, value_enum)]
        op: OpName,
        #[arg(long)]
        word: String,
        /// Generator for conjugation, e.g. `s1`, `S2`, `v1`.
        #[arg(long)]
        gen: Option<String>,
        #[arg(long, value_enum, default_value_t = KindArg::Virtual)]
        kind: KindArg,
        #[arg(long, default_value_t = 0)]
        gap: usize,
        #[arg(long, default_value_t = 1)]
        strand: usize,
        #[arg(long, value_enum, default_value_t = SideArg::Right)]
        side: SideArg,
        #[arg(long)]
        json: bool,
    },
    /// Replay a scripted derivation, or validate a saved path.
    Replay {
        #[arg(long, required_unless_present = "path")]
        script: Option<String>,
        #[arg(long, required_unless_present = "path")]
        word: Option<String>,
        #[arg(long, conflicts_with_all = ["script", "word"])]
        path: Option<PathBuf>,
    },
    /// Bounded search for a path of moves between two words.
    Search {
        /// Defaults to the minimal real-conjugate pair when both ends are omitted.
        #[arg(long, requires = "to")]
        from: Option<String>,
        #[arg(long, requires = "from")]
        to: Option<String>,
        #[arg(long, default_value = "theorem3")]
        moves: String,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
        #[arg(long, default_value_t = 4)]
        max_strands: usize,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
    },
    /// Check the identities of an R-matrix model.
    CheckModel {
        /// bracket, swap, identity, or a model JSON file.
        model: String,
    },
    /// Test the virtual Markov trace rules against a model.
    AxiomReport {
        #[arg(long, default_value = "bracket")]
        model: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_strands: usize,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        /// Sample this many random words per strand count instead of enumerating.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 200)]
        pairs: usize,
    },
    /// Virtual-crossing parity between the components of a flat closure.
    FlatParity {
        #[arg(long)]
        word: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OpName {
    Conjugate,
    Unconjugate,
    StabilizeRight,
    DestabilizeRight,
    ThreadRightUnder,
    ThreadRightOver,
    ThreadLeftUnder,
    ThreadRightFlat,
    ThreadLeftFlat,
    UnthreadRightUnder,
    UnthreadRightOver,
    UnthreadLeftUnder,
    UnthreadRightFlat,
    UnthreadLeftFlat,
    LvInsert,
    LvRemove,
    ExchangeToVirtual,
    ExchangeToReal,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Basic,
    Virtual,
    #[value(name = "real+")]
    RealPos,
    #[value(name = "real-")]
    RealNeg,
    Flat,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Run = Result<String, Failure>;

fn word(text: &str) -> Result<BraidWord, Failure> {
    Ok(parse_word(text)?)
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn load_model(name: &str) -> Result<RMatrixModel, Failure> {
    match RMatrixModel::builtin(name) {
        Some(m) => Ok(m),
        None => Ok(RMatrixModel::from_json(&read(&PathBuf::from(name))?)?),
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn stab_kind(k: KindArg) -> Result<StabKind, Failure> {
    match k {
        KindArg::Virtual | KindArg::Basic => Ok(StabKind::Virtual),
        KindArg::RealPos => Ok(StabKind::RealPos),
        KindArg::RealNeg => Ok(StabKind::RealNeg),
        KindArg::Flat => Ok(StabKind::Flat),
    }
}

fn lv_kind(k: KindArg) -> LvKind {
    match k {
        KindArg::Basic => LvKind::Basic,
        KindArg::Virtual => LvKind::Virtual,
        KindArg::RealPos => LvKind::RealPos,
        KindArg::RealNeg => LvKind::RealNeg,
        KindArg::Flat => LvKind::Flat,
    }
}

fn build_move(
    op: OpName,
    gen: Option<&str>,
    kind: KindArg,
    site: LvSite,
    side: SideArg,
) -> Result<MarkovMove, Failure> {
    let side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let gen = || -> Result<Generator, Failure> {
        let g = gen.ok_or_else(|| Failure::Usage("--gen is required for conjugation".into()))?;
        g.parse::<Generator>().map_err(|e| Failure::Usage(e.to_string()))
    };
    let thread = |side, style| MarkovMove::Thread { side, style };
    let unthread = |side, style| MarkovMove::Unthread { side, style };
    use OpName::*;
    Ok(match op {
        Conjugate => MarkovMove::Conjugate { gen: gen()? },
        Unconjugate => MarkovMove::Unconjugate { gen: gen()? },
        StabilizeRight => MarkovMove::StabilizeRight { kind: stab_kind(kind)? },
        DestabilizeRight => MarkovMove::DestabilizeRight { kind: stab_kind(kind)? },
        ThreadRightUnder => thread(Side::Right, ThreadStyle::Under),
        ThreadRightOver => thread(Side::Right, ThreadStyle::Over),
        ThreadLeftUnder => thread(Side::Left, ThreadStyle::Under),
        ThreadRightFlat => thread(Side::Right, ThreadStyle::Flat),
        ThreadLeftFlat => thread(Side::Left, ThreadStyle::Flat),
        UnthreadRightUnder => unthread(Side::Right, ThreadStyle::Under),
        UnthreadRightOver => unthread(Side::Right, ThreadStyle::Over),
        UnthreadLeftUnder => unthread(Side::Left, ThreadStyle::Under),
        UnthreadRightFlat => unthread(Side::Right, ThreadStyle::Flat),
        UnthreadLeftFlat => unthread(Side::Left, ThreadStyle::Flat),
        LvInsert => MarkovMove::LvInsert { site, kind: lv_kind(kind), side },
        LvRemove => MarkovMove::LvRemove { site, kind: lv_kind(kind), side },
        ExchangeToVirtual => MarkovMove::Exchange { side, to: ExchangeTo::Virtual },
        ExchangeToReal => MarkovMove::Exchange { side, to: ExchangeTo::Real },
    })
}

fn run(cmd: Command) -> Run {
    match cmd {
        Command::Normalize { word: w, budget, json } => {
            let p = canonicalize_path(&word(&w)?, budget);
            Ok(if json { p.to_json() } else { p.end.to_string() })
        }
        Command::Braid { input, out, seed } => {
            let m = MorsePresentation::from_json(&read(&input)?)?;
            let b = match seed {
                Some(s) => braid_random_order(&m, &mut seeded_rng(s))?,
                None => braid(&m)?,
            };
            let text = b.to_string();
            match out {
                Some(path) => {
                    fs::write(&path, format!("{text}\n"))
                        .map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
        Command::Close { word: w, morse } => {
            let w = word(&w)?;
            Ok(if morse {
                render_closure(&w).to_json_pretty()
            } else {
                closure(&w).to_json()
            })
        }
        Command::Invariant { word: w, model, oracle, json } => {
            let w = word(&w)?;
            let m = load_model(&model)?;
            let invar = normalized_invariant(&w, &m)?;
            let raw = trace_invariant(&w, &m)?;
            let oracle = if oracle {
                let g = closure(&w);
                Some((bracket_state_sum(&g)?, normalized_bracket(&g)?))
            } else {
                None
            };
            if json {
                let mut v = json!({ "invar": invar.to_string() });
                if let Some((b, nb)) = &oracle {
                    v["bracket"] = json!(b.to_string());
                    v["normalized_bracket"] = json!(nb.to_string());
                }
                Ok(serde_json::to_string(&v).expect("json"))
            } else {
                let mut s = format!("model: {}\ninvar: {invar}\ntrace invariant: {raw}", m.name);
                if let Some((b, nb)) = oracle {
                    s.push_str(&format!("\nbracket: {b}\nnormalized bracket: {nb}"));
                }
                Ok(s)
            }
        }
        Command::Move { op, word: w, gen, kind, gap, strand, side, json } => {
            let w = word(&w)?;
            let op = build_move(op, gen.as_deref(), kind, LvSite { gap, strand }, side)?;
            let mut p = MovePath::empty(w);
            p.push(Step::Move { op })?;
            Ok(if json { p.to_json() } else { p.end.to_string() })
        }
        Command::Replay { script, word: w, path } => {
            if let Some(path) = path {
                let p = MovePath::from_json(&read(&path)?)?;
                return Ok(format!("valid: {} steps\nstart: {}\nend: {}", p.len(), p.start, p.end));
            }
            let script = script.expect("clap enforces");
            if canonical_script_name(&script).is_none() {
                return Err(Failure::Usage(format!(
                    "unknown script {script}; known: {}",
                    SCRIPTS.join(", ")
                )));
            }
            let p = replay_derivation(&script, &word(&w.expect("clap enforces"))?)?;
            Ok(p.to_json())
        }
        Command::Search { from, to, moves, depth, budget, max_strands, max_len } => {
            let set = MoveSet::from_name(&moves)
                .ok_or_else(|| Failure::Usage(format!("unknown move set {moves}")))?;
            let (a, b, label) = match (from, to) {
                (Some(a), Some(b)) => (word(&a)?, word(&b)?, None),
                _ => {
                    let (a, b) = default_conjugate_pair();
                    (a, b, Some("default real-conjugate pair (v1, S1 v1 s1), a minimal construction"))
                }
            };
            let mut cfg = SearchConfig::new(set);
            cfg.max_depth = depth;
            cfg.budget = budget;
            cfg.max_strands = max_strands;
            cfg.max_len = max_len;
            let out = bfs_connect(&a, &b, &cfg)?;
            let mut v = serde_json::to_value(&out).expect("json");
            v["from"] = json!(a.to_string());
            v["to"] = json!(b.to_string());
            v["moves"] = json!(set.name());
            if let Some(l) = label {
                v["pair"] = json!(l);
            }
            if let SearchOutcome::NotFoundWithinBounds { .. } = out {
                v["note"] = json!("bounds exhausted; this is not a proof of inequivalence");
            }
            Ok(pretty(&v))
        }
        Command::CheckModel { model } => {
            let m = load_model(&model)?;
            let r = check_model(&m);
            let text = pretty(&r);
            if r.core_passed() {
                Ok(text)
            } else {
                emit(&text);
                Err(Failure::Domain(format!("model {} fails core identities", m.name)))
            }
        }
        Command::AxiomReport { model, seed, max_strands, max_len, random, pairs } => {
            let m = load_model(&model)?;
            let cfg = AxiomConfig {
                max_strands,
                max_len,
                exhaustive: random.is_none(),
                random_words: random.unwrap_or(0),
                cyclicity_pairs: pairs,
                seed,
            };
            Ok(pretty(&markov_axiom_report(&m, &cfg)?))
        }
        Command::FlatParity { word: w } => {
            let w = word(&w)?;
            let g = closure(&w);
            let map = virtual_parity_between_components(&g)?;
            let pairs: Vec<_> = map
                .iter()
                .map(|(&(a, b), &p)| json!({ "a": a, "b": b, "parity": p }))
                .collect();
            Ok(pretty(&json!({ "components": g.components(), "parity": pairs })))
        }
    }
}

/// Print to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if !out.is_empty() {
                emit(&out);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
