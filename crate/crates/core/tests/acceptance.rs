//! Acceptance suite: one pass/fail line per criterion, written straight to
//! stderr so it shows without `--nocapture`.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::Rng;
use vbraid::braid::random::{random_word, seeded_rng, DEFAULT_SEED};
use vbraid::braiding::{braid, braid_random_order};
use vbraid::diagram::{
    closure, gauss_from_morse, parity_equivalent, render_closure_closed,
    virtual_parity_between_components, MorsePresentation,
};
use vbraid::invariants::{
    bracket_state_sum, check_model, closure_bracket, markov_axiom_report, normalized_bracket,
    AxiomConfig, LaurentPoly, RMatrixModel, RuleStatus,
};
use vbraid::moves::scripts::replay_derivation;
use vbraid::moves::*;
use vbraid::search::{
    bfs_connect, default_conjugate_pair, distinct_words_flat, MoveSet, SearchConfig,
    SearchOutcome,
};
use vbraid::{parse_word, BraidCategory, BraidWord, Error, Generator};

const RELATION_WORDS: usize = 500;
const RELATION_LIMIT: Duration = Duration::from_secs(120);
const MOVE_WORDS: usize = 200;
const RANDOM_DIAGRAMS: usize = 100;
const DIAGRAM_LIMIT: Duration = Duration::from_secs(1);
const SCRIPT_INSTANCES: usize = 5;
const CYCLICITY_PAIRS: usize = 200;
const FLAT_WORDS: usize = 200;
const FLAT_K_MAX: usize = 8;
const FLAT_DEPTH: usize = 10;
const FLAT_SLACK: usize = 4;
const HARNESS_DEPTH: usize = 6;
const HARNESS_BUDGET: usize = 1_000_000;
const HARNESS_LIMIT: Duration = Duration::from_secs(300);

type Outcome = Result<String, String>;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture_diagrams() -> Vec<(String, MorsePresentation)> {
    let mut paths: Vec<_> = fs::read_dir(fixtures().join("diagrams"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let m = MorsePresentation::from_json(&fs::read_to_string(&p).unwrap()).unwrap();
            (p.file_stem().unwrap().to_string_lossy().into_owned(), m)
        })
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

fn relation_soundness() -> Outcome {
    let start = Instant::now();
    let mut rng = seeded_rng(DEFAULT_SEED);
    let mut checked = 0;
    for _ in 0..RELATION_WORDS {
        let n = rng.gen_range(2..=4);
        let len = rng.gen_range(0..=10);
        let w = random_word(&mut rng, n, len, BraidCategory::Virtual);
        let before = bracket_state_sum(&closure(&w)).map_err(err)?;
        for (pos, rel, dir) in w.relation_sites() {
            let after = w.apply_relation(&rel, pos, dir).map_err(err)?;
            let b = bracket_state_sum(&closure(&after)).map_err(err)?;
            ensure(b == before, || format!("{rel} at {pos} changes the bracket of {w}"))?;
            checked += 1;
        }
    }
    let t = start.elapsed();
    ensure(t < RELATION_LIMIT, || format!("took {t:?}"))?;
    Ok(format!("{RELATION_WORDS} words, {checked} rewrites, {t:.2?}"))
}

fn theorem3_moves() -> Outcome {
    let mut rng = seeded_rng(DEFAULT_SEED ^ 2);
    let mut applied = 0;
    for _ in 0..MOVE_WORDS {
        let n = rng.gen_range(2..=3);
        let len = rng.gen_range(0..=6);
        let w = random_word(&mut rng, n, len, BraidCategory::Virtual);
        let inv = closure_bracket(&w).map_err(err)?;
        let i = rng.gen_range(1..n);
        let mut ops = vec![
            MarkovMove::Conjugate { gen: Generator::s(i) },
            MarkovMove::Conjugate { gen: Generator::s_inv(i) },
            MarkovMove::Conjugate { gen: Generator::v(i) },
            MarkovMove::Thread { side: Side::Right, style: ThreadStyle::Under },
            MarkovMove::Thread { side: Side::Left, style: ThreadStyle::Under },
        ];
        for kind in [StabKind::Virtual, StabKind::RealPos, StabKind::RealNeg] {
            ops.push(MarkovMove::StabilizeRight { kind });
        }
        for op in ops {
            let after = op.apply(&w).map_err(err)?;
            ensure(closure_bracket(&after).map_err(err)? == inv, || format!("{op} on {w}"))?;
            let back = op.inverse().apply(&after).map_err(err)?;
            ensure(back.free_reduce() == w.free_reduce(), || format!("inverse of {op} on {w}"))?;
            ensure(closure_bracket(&back).map_err(err)? == inv, || format!("inverse {op} on {w}"))?;
            applied += 2;
        }
    }
    for cat in [BraidCategory::Welded, BraidCategory::Unrestricted] {
        let w = BraidWord::new(3, vec![Generator::s(1), Generator::v(2)], cat).map_err(err)?;
        for f in [thread_right_under, thread_left_under] {
            ensure(matches!(f(&w), Err(Error::CategoryViolation { .. })), || {
                format!("{cat} word accepted a threaded move")
            })?;
        }
    }
    Ok(format!("{applied} move applications on {MOVE_WORDS} words; welded/unrestricted guards hold"))
}

fn random_diagrams() -> Vec<MorsePresentation> {
    let mut rng = seeded_rng(DEFAULT_SEED ^ 3);
    (0..RANDOM_DIAGRAMS)
        .map(|_| {
            let n = rng.gen_range(2..=4);
            let len = rng.gen_range(0..=8);
            let w = random_word(&mut rng, n, len, BraidCategory::Virtual);
            let m = render_closure_closed(&w);
            let comps = closure(&w).components();
            let which: Vec<usize> = (0..comps).filter(|_| rng.gen_bool(0.5)).collect();
            m.reverse_components(&which).expect("components in range")
        })
        .collect()
}

fn braiding_soundness() -> Outcome {
    let mut all: Vec<(String, MorsePresentation)> = fixture_diagrams();
    let nfix = all.len();
    ensure(nfix >= 10, || format!("only {nfix} fixture diagrams"))?;
    all.extend(random_diagrams().into_iter().enumerate().map(|(k, m)| (format!("random-{k}"), m)));
    let mut slowest = Duration::ZERO;
    for (name, m) in &all {
        let t = Instant::now();
        let b = braid(m).map_err(|e| format!("{name}: {e}"))?;
        slowest = slowest.max(t.elapsed());
        let want = normalized_bracket(&gauss_from_morse(m).map_err(err)?).map_err(err)?;
        let got = closure_bracket(&b).map_err(err)?;
        ensure(got == want, || format!("{name}: {got} vs {want}"))?;
    }
    ensure(slowest < DIAGRAM_LIMIT, || format!("slowest diagram took {slowest:?}"))?;
    Ok(format!("{nfix} fixtures + {RANDOM_DIAGRAMS} random closures, slowest {slowest:.2?}"))
}

fn order_independence() -> Outcome {
    let ds = fixture_diagrams();
    for (k, (name, m)) in ds.iter().enumerate() {
        let a = braid_random_order(m, &mut seeded_rng(k as u64)).map_err(err)?;
        let b = braid_random_order(m, &mut seeded_rng(k as u64 + 1000)).map_err(err)?;
        let (x, y) = (closure_bracket(&a).map_err(err)?, closure_bracket(&b).map_err(err)?);
        ensure(x == y, || format!("{name}: {a} vs {b}"))?;
    }
    Ok(format!("{} fixtures, two orders each", ds.len()))
}

fn nontriviality() -> Outcome {
    let ds = fixture_diagrams();
    let (_, m) = ds
        .iter()
        .find(|(n, _)| n == "virtual-trefoil")
        .ok_or("virtual-trefoil fixture missing")?;
    let f = normalized_bracket(&gauss_from_morse(m).map_err(err)?).map_err(err)?;
    ensure(f != LaurentPoly::one(), || "virtual trefoil bracket is 1".into())?;
    Ok(format!("normalized bracket {f}"))
}

fn kamada_scripts() -> Outcome {
    let mut rng = seeded_rng(DEFAULT_SEED ^ 6);
    let mut counts = Vec::new();
    let exchange: Vec<(BraidWord, BraidWord)> = fs::read_to_string(fixtures().join("kamada/exchange.txt"))
        .map_err(|e| e.to_string())?
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let (a, b) = l.split_once('|').expect("pair");
            (parse_word(a.trim()).unwrap(), parse_word(b.trim()).unwrap())
        })
        .collect();
    ensure(exchange.len() >= SCRIPT_INSTANCES, || "too few exchange instances".into())?;
    for (real, virt) in &exchange {
        let p = replay_derivation("exchange-from-theorem3", real).map_err(err)?;
        p.validate().map_err(err)?;
        ensure(p.end.free_reduce() == virt.free_reduce(), || format!("exchange on {real}"))?;
    }
    counts.push(exchange.len());
    for name in ["threading-from-kamada", "fig37", "remark6-bottom-left"] {
        for _ in 0..SCRIPT_INSTANCES {
            let n = if name == "remark6-bottom-left" { 2 } else { rng.gen_range(2..=3) };
            let len = rng.gen_range(0..=5);
            let a = random_word(&mut rng, n, len, BraidCategory::Virtual);
            let p = replay_derivation(name, &a).map_err(|e| format!("{name} on {a}: {e}"))?;
            p.validate().map_err(err)?;
            let ok = match name {
                "threading-from-kamada" => {
                    p.end.free_reduce() == a.free_reduce()
                        && p.start == thread_right_under(&a).map_err(err)?
                }
                "fig37" => {
                    let last = p.end.strands() - 1;
                    p.end.letters().last() == Some(&Generator::s(last))
                        && p.end.letters().iter().filter(|g| g.index == last).count() == 1
                }
                _ => {
                    let mut want = a.shift_left().letters().to_vec();
                    want.extend([Generator::s(1), Generator::v(2), Generator::s_inv(1)]);
                    p.end.letters() == want.as_slice()
                }
            };
            ensure(ok, || format!("{name} on {a} ends at {}", p.end))?;
        }
        counts.push(SCRIPT_INSTANCES);
    }
    Ok(format!("instances per script {counts:?}, every step validated"))
}

fn model_validation() -> Outcome {
    let b = check_model(&RMatrixModel::bracket());
    for name in ["R*Rinv=I", "Rinv*R=I", "YBE(R)", "YBE(V)", "V*V=I", "mixed-detour"] {
        ensure(b.get(name) == Some(true), || format!("bracket fails {name}"))?;
    }
    let s = check_model(&RMatrixModel::swap(2));
    for name in ["YBE(R)", "YBE(V)", "mixed-detour", "F1", "F2"] {
        ensure(s.get(name) == Some(true), || format!("swap fails {name}"))?;
    }
    Ok("bracket: core identities; swap: core + F1 + F2".into())
}

fn trace_axioms() -> Outcome {
    let cfg = AxiomConfig {
        cyclicity_pairs: CYCLICITY_PAIRS,
        ..AxiomConfig::default()
    };
    for m in [RMatrixModel::bracket(), RMatrixModel::swap(2), RMatrixModel::identity(2)] {
        let r = markov_axiom_report(&m, &cfg).map_err(err)?;
        let one = r.rule(1);
        ensure(one.status == RuleStatus::Holds && one.samples >= CYCLICITY_PAIRS, || {
            format!("{}: cyclicity {:?}", m.name, one.status)
        })?;
    }
    let r = markov_axiom_report(&RMatrixModel::identity(2), &cfg).map_err(err)?;
    ensure(r.rules.len() == 6, || "report lacks rules".into())?;
    for rule in &r.rules {
        ensure(rule.status == RuleStatus::Holds, || format!("identity rule {}", rule.rule))?;
        if rule.rule >= 3 {
            ensure(rule.constant.as_deref() == Some("1"), || {
                format!("identity rule {} constant {:?}", rule.rule, rule.constant)
            })?;
        }
    }
    Ok(format!("cyclicity on {CYCLICITY_PAIRS} pairs x 3 models; identity: six rules, z=s=r=k=1"))
}

fn flat_parity() -> Outcome {
    let mut rng = seeded_rng(DEFAULT_SEED ^ 9);
    for _ in 0..FLAT_WORDS {
        let n = rng.gen_range(2..=3);
        let len = rng.gen_range(0..=8);
        let w = random_word(&mut rng, n, len, BraidCategory::Flat);
        let g = closure(&w);
        let i = rng.gen_range(1..n);
        let ops = [
            MarkovMove::Conjugate { gen: Generator::c(i) },
            MarkovMove::Conjugate { gen: Generator::v(i) },
            MarkovMove::StabilizeRight { kind: StabKind::Virtual },
            MarkovMove::StabilizeRight { kind: StabKind::Flat },
            MarkovMove::Thread { side: Side::Right, style: ThreadStyle::Flat },
            MarkovMove::Thread { side: Side::Left, style: ThreadStyle::Flat },
        ];
        for op in ops {
            let h = closure(&op.apply(&w).map_err(err)?);
            ensure(h.components() == g.components(), || format!("{op} on {w}: components"))?;
            ensure(parity_equivalent(&g, &h).map_err(err)?, || format!("{op} on {w}: parity"))?;
        }
    }
    let text = fs::read_to_string(fixtures().join("words/h-link.txt")).map_err(|e| e.to_string())?;
    let h = closure(&parse_word(text.trim()).map_err(err)?);
    let p = virtual_parity_between_components(&h).map_err(err)?;
    ensure(p.get(&(0, 1)) == Some(&1), || format!("H link parity {p:?}"))?;
    Ok(format!("{FLAT_WORDS} flat words x 6 moves; H link parity 1"))
}

fn flat_infiniteness() -> Outcome {
    let r = distinct_words_flat(FLAT_K_MAX, FLAT_DEPTH, FLAT_SLACK);
    let joined: Vec<_> = r.pairs.iter().filter(|p| p.connected).collect();
    ensure(joined.is_empty(), || format!("connected pairs {joined:?}"))?;
    Ok(format!(
        "{} pairs distinct to depth {FLAT_DEPTH} (slack {FLAT_SLACK}, largest ball {})",
        r.pairs.len(),
        r.ball_sizes.iter().max().unwrap_or(&0)
    ))
}

fn conjecture_harness() -> Outcome {
    let start = Instant::now();
    let (a, b) = default_conjugate_pair();
    let mut cfg = SearchConfig::new(MoveSet::LvOnly);
    cfg.max_depth = HARNESS_DEPTH;
    cfg.max_strands = 5;
    cfg.max_len = 12;
    cfg.budget = HARNESS_BUDGET;
    let lv = bfs_connect(&a, &b, &cfg).map_err(err)?;
    let nodes = match lv {
        SearchOutcome::NotFoundWithinBounds { nodes, .. } => nodes,
        SearchOutcome::Found { path, .. } => {
            return Err(format!("lv-only set connected the pair in {} steps", path.len()))
        }
    };
    let full = bfs_connect(&a, &b, &SearchConfig::new(MoveSet::Theorem3)).map_err(err)?;
    let moves = full
        .path()
        .map(|p| p.steps.iter().filter(|s| matches!(s, Step::Move { .. })).count());
    ensure(moves == Some(1), || format!("full set: {moves:?} moves"))?;
    let t = start.elapsed();
    ensure(t < HARNESS_LIMIT, || format!("took {t:?}"))?;
    Ok(format!(
        "({a}, {b}): lv-only not found within depth {HARNESS_DEPTH} ({nodes} nodes); full set 1 move; {t:.2?}"
    ))
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("relation soundness", relation_soundness),
        ("markov move invariance", theorem3_moves),
        ("braiding soundness", braiding_soundness),
        ("braiding order independence", order_independence),
        ("virtual trefoil nontrivial", nontriviality),
        ("kamada compatibility scripts", kamada_scripts),
        ("model validation", model_validation),
        ("trace axioms", trace_axioms),
        ("flat parity", flat_parity),
        ("FV2 infiniteness evidence", flat_infiniteness),
        ("real-conjugation search harness", conjecture_harness),
    ];
    let mut failed = Vec::new();
    let mut err_out = std::io::stderr();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let line = match f() {
            Ok(detail) => format!("PASS {:>2} {name}: {detail}", k + 1),
            Err(detail) => {
                failed.push(k + 1);
                format!("FAIL {:>2} {name}: {detail}", k + 1)
            }
        };
        writeln!(err_out, "{line}").unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
