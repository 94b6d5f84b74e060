//! Bounded exploration of the move graph: canonical forms, bidirectional
//! breadth-first path search and the flat free-product experiment.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidCategory, BraidWord, Direction, GenKind, Generator, Relation};
use crate::error::{Error, Result};
use crate::moves::{
    ExchangeTo, LvKind, LvSite, MarkovMove, MovePath, Side, StabKind, Step, ThreadStyle,
};

pub const DEFAULT_CANON_BUDGET: usize = 4096;

/// Which moves (besides braid isotopy) the search may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MoveSet {
    /// Real and virtual conjugation, right stabilizations, right and left under-threading.
    Theorem3,
    /// Real conjugation, right virtual and real L_v insertions, under-threading.
    LEquivalence,
    /// Stabilizations, threading and right L_v insertions; no conjugation at all.
    LvOnly,
    /// Conjugation, stabilization and right/left exchange moves.
    Kamada,
    /// Conjugation and stabilization, for welded or unrestricted words.
    Welded,
    /// Conjugation by `v`/`c`, virtual and flat stabilization, flat threading.
    Flat,
}

impl MoveSet {
    pub const ALL: [MoveSet; 6] = [
        MoveSet::Theorem3,
        MoveSet::LEquivalence,
        MoveSet::LvOnly,
        MoveSet::Kamada,
        MoveSet::Welded,
        MoveSet::Flat,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MoveSet::Theorem3 => "theorem3",
            MoveSet::LEquivalence => "l-equivalence",
            MoveSet::LvOnly => "lv-only",
            MoveSet::Kamada => "kamada",
            MoveSet::Welded => "welded",
            MoveSet::Flat => "flat",
        }
    }

    pub fn from_name(s: &str) -> Option<MoveSet> {
        MoveSet::ALL.into_iter().find(|m| m.name() == s)
    }

    /// Whether words of `category` can be searched with this set.
    pub fn admits(self, category: BraidCategory) -> bool {
        match self {
            MoveSet::Flat => category == BraidCategory::Flat,
            MoveSet::Welded => matches!(
                category,
                BraidCategory::Welded | BraidCategory::Unrestricted | BraidCategory::Virtual
            ),
            _ => category == BraidCategory::Virtual,
        }
    }
}

impl fmt::Display for MoveSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub moves: MoveSet,
    /// Maximum number of moves on a path (relations are free).
    pub max_depth: usize,
    pub max_strands: usize,
    pub max_len: usize,
    /// Maximum number of distinct canonical words visited.
    pub budget: usize,
    /// Orbit size limit for each canonicalization.
    pub canon_budget: usize,
}

impl SearchConfig {
    pub fn new(moves: MoveSet) -> Self {
        SearchConfig {
            moves,
            max_depth: 6,
            max_strands: 4,
            max_len: 12,
            budget: 1_000_000,
            canon_budget: 512,
        }
    }

    fn check(&self) -> Result<()> {
        if self.max_depth == 0 || self.max_strands == 0 || self.max_len == 0 || self.budget == 0 {
            return Err(Error::InvalidPath {
                step: 0,
                reason: "search bounds must be positive".into(),
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum SearchOutcome {
    Found {
        path: MovePath,
        nodes: usize,
    },
    /// Every word within the bounds was explored without meeting; this is
    /// not a proof that the words are inequivalent.
    NotFoundWithinBounds {
        nodes: usize,
        depth: usize,
    },
}

impl SearchOutcome {
    pub fn path(&self) -> Option<&MovePath> {
        match self {
            SearchOutcome::Found { path, .. } => Some(path),
            SearchOutcome::NotFoundWithinBounds { .. } => None,
        }
    }

    pub fn nodes(&self) -> usize {
        match self {
            SearchOutcome::Found { nodes, .. } | SearchOutcome::NotFoundWithinBounds { nodes, .. } => {
                *nodes
            }
        }
    }
}

fn shortlex(a: &[Generator], b: &[Generator]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// Words reachable by length-preserving relations, with the step leading to each.
struct Orbit {
    members: Vec<BraidWord>,
    parent: Vec<Option<(usize, Step)>>,
}

impl Orbit {
    fn explore(w: &BraidWord, budget: usize) -> (Orbit, Option<(usize, Step)>) {
        let mut orbit = Orbit {
            members: vec![w.clone()],
            parent: vec![None],
        };
        let mut seen: HashMap<BraidWord, usize> = HashMap::from([(w.clone(), 0)]);
        let mut k = 0;
        while k < orbit.members.len() {
            let cur = orbit.members[k].clone();
            for (pos, rel, dir) in cur.relation_sites() {
                let step = Step::Relation {
                    relation: rel.clone(),
                    pos,
                    direction: dir,
                };
                if rel.kind.is_cancellation() {
                    return (orbit, Some((k, step)));
                }
                if orbit.members.len() >= budget {
                    continue;
                }
                let next = cur.apply_relation(&rel, pos, dir).expect("site applies");
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), orbit.members.len());
                    orbit.members.push(next);
                    orbit.parent.push(Some((k, step)));
                }
            }
            k += 1;
        }
        (orbit, None)
    }

    fn steps_to(&self, mut k: usize) -> Vec<Step> {
        let mut out = Vec::new();
        while let Some((p, step)) = &self.parent[k] {
            out.push(step.clone());
            k = *p;
        }
        out.reverse();
        out
    }

    fn min_member(&self) -> usize {
        (0..self.members.len())
            .min_by(|&a, &b| shortlex(self.members[a].letters(), self.members[b].letters()))
            .expect("orbit is nonempty")
    }
}

/// Relation steps taking `w` to its canonical form: cancel whenever a
/// length-preserving rewrite exposes a cancelling pair, then pick the
/// shortlex-least word of the remaining orbit.
pub fn canonicalize_path(w: &BraidWord, budget: usize) -> MovePath {
    let mut path = MovePath::empty(w.clone());
    loop {
        let (orbit, cancel) = Orbit::explore(&path.end, budget.max(1));
        let (target, tail) = match cancel {
            Some((k, step)) => (k, Some(step)),
            None => (orbit.min_member(), None),
        };
        for step in orbit.steps_to(target) {
            path.push(step).expect("orbit steps replay");
        }
        match tail {
            Some(step) => {
                path.push(step).expect("cancellation applies");
            }
            None => return path,
        }
    }
}

pub fn canonicalize(w: &BraidWord, budget: usize) -> BraidWord {
    canonicalize_path(w, budget).end
}

fn conj_gens(n: usize, set: MoveSet, category: BraidCategory) -> Vec<Generator> {
    let mut out = Vec::new();
    for i in 1..n {
        match set {
            MoveSet::LvOnly => {}
            MoveSet::LEquivalence => out.extend([Generator::s(i), Generator::s_inv(i)]),
            MoveSet::Flat => out.extend([Generator::v(i), Generator::c(i)]),
            _ => {
                if category != BraidCategory::Flat {
                    out.extend([Generator::s(i), Generator::s_inv(i)]);
                }
                out.push(Generator::v(i));
            }
        }
    }
    out
}

fn stab_kinds(set: MoveSet) -> &'static [StabKind] {
    match set {
        MoveSet::LEquivalence => &[],
        MoveSet::Flat => &[StabKind::Virtual, StabKind::Flat],
        _ => &[StabKind::Virtual, StabKind::RealPos, StabKind::RealNeg],
    }
}

fn thread_kinds(set: MoveSet) -> &'static [(Side, ThreadStyle)] {
    match set {
        MoveSet::Theorem3 | MoveSet::LEquivalence | MoveSet::LvOnly => {
            &[(Side::Right, ThreadStyle::Under), (Side::Left, ThreadStyle::Under)]
        }
        MoveSet::Flat => &[(Side::Right, ThreadStyle::Flat), (Side::Left, ThreadStyle::Flat)],
        _ => &[],
    }
}

fn lv_kinds(set: MoveSet) -> &'static [LvKind] {
    match set {
        MoveSet::LEquivalence | MoveSet::LvOnly => {
            &[LvKind::Virtual, LvKind::RealPos, LvKind::RealNeg]
        }
        _ => &[],
    }
}

/// Moves that enlarge or rewrite a word without needing a pattern: applied
/// to the canonical representative only.
fn generative_moves(w: &BraidWord, set: MoveSet) -> Vec<MarkovMove> {
    let n = w.strands();
    let mut out: Vec<MarkovMove> = conj_gens(n, set, w.category())
        .into_iter()
        .map(|gen| MarkovMove::Conjugate { gen })
        .collect();
    out.extend(stab_kinds(set).iter().map(|&kind| MarkovMove::StabilizeRight { kind }));
    out.extend(
        thread_kinds(set)
            .iter()
            .map(|&(side, style)| MarkovMove::Thread { side, style }),
    );
    for &kind in lv_kinds(set) {
        for gap in 0..=w.len() {
            // the last strand at the bottom is a stabilization; skip duplicates
            for strand in 1..n {
                out.push(MarkovMove::LvInsert {
                    site: LvSite { gap, strand },
                    kind,
                    side: Side::Right,
                });
            }
        }
    }
    out
}

/// Inverse moves that need a pattern; tried on every orbit member.
fn pattern_moves(w: &BraidWord, set: MoveSet) -> Vec<MarkovMove> {
    let n = w.strands();
    let mut out: Vec<MarkovMove> = Vec::new();
    if let (Some(&first), Some(&last)) = (w.letters().first(), w.letters().last()) {
        if first == last.inverse() && conj_gens(n, set, w.category()).contains(&last) {
            out.push(MarkovMove::Unconjugate { gen: last });
        }
        if last.index + 1 == n && stab_kinds(set).contains(&StabKind::from_letter(last)) {
            out.push(MarkovMove::DestabilizeRight {
                kind: StabKind::from_letter(last),
            });
        }
    }
    out.extend(
        thread_kinds(set)
            .iter()
            .map(|&(side, style)| MarkovMove::Unthread { side, style }),
    );
    for &kind in lv_kinds(set) {
        for gap in 0..w.len() {
            if w.letters()[gap].index + 1 == n || w.letters()[gap].kind == GenKind::V {
                for strand in 1..n.saturating_sub(1) {
                    out.push(MarkovMove::LvRemove {
                        site: LvSite { gap, strand },
                        kind,
                        side: Side::Right,
                    });
                }
            }
        }
    }
    if set == MoveSet::Kamada {
        for side in [Side::Right, Side::Left] {
            for to in [ExchangeTo::Virtual, ExchangeTo::Real] {
                out.push(MarkovMove::Exchange { side, to });
            }
        }
    }
    out
}

struct Node {
    word: BraidWord,
    parent: Option<usize>,
    /// Orbit member of the parent the move was applied to, and the move.
    via: Option<(BraidWord, MarkovMove)>,
    depth: usize,
}

struct Tree {
    nodes: Vec<Node>,
    index: HashMap<BraidWord, usize>,
    frontier: Vec<usize>,
    start_path: MovePath,
}

impl Tree {
    fn new(w: &BraidWord, canon_budget: usize) -> Tree {
        let start_path = canonicalize_path(w, canon_budget);
        let c = start_path.end.clone();
        Tree {
            nodes: vec![Node {
                word: c.clone(),
                parent: None,
                via: None,
                depth: 0,
            }],
            index: HashMap::from([(c, 0)]),
            frontier: vec![0],
            start_path,
        }
    }

    /// The path from the original start word to node `k`.
    fn path_to(&self, k: usize, canon_budget: usize) -> Result<MovePath> {
        let mut chain = Vec::new();
        let mut cur = k;
        while let Some(p) = self.nodes[cur].parent {
            chain.push(cur);
            cur = p;
        }
        chain.reverse();
        let mut path = self.start_path.clone();
        for k in chain {
            let node = &self.nodes[k];
            let (member, op) = node.via.as_ref().expect("non-root node has an edge");
            let (orbit, _) = Orbit::explore(&path.end, canon_budget.max(1));
            let at = orbit
                .members
                .iter()
                .position(|m| m == member)
                .ok_or_else(|| Error::InvalidPath {
                    step: path.len(),
                    reason: "orbit member not reproduced".into(),
                })?;
            for step in orbit.steps_to(at) {
                path.push(step)?;
            }
            path.push(Step::Move { op: *op })?;
            let canon = canonicalize_path(&path.end, canon_budget);
            path = path.then(&canon)?;
            if path.end != node.word {
                return Err(Error::InvalidPath {
                    step: path.len(),
                    reason: "canonical form not reproduced".into(),
                });
            }
        }
        Ok(path)
    }
}

/// All neighbours of a canonical word, as (orbit member, move, canonical result).
fn expand(w: &BraidWord, cfg: &SearchConfig) -> Vec<(BraidWord, MarkovMove, BraidWord)> {
    let mut out = Vec::new();
    let push = |member: &BraidWord, op: MarkovMove, out: &mut Vec<_>| {
        if let Ok(r) = op.apply(member) {
            if r.strands() <= cfg.max_strands && r.len() <= cfg.max_len {
                out.push((member.clone(), op, canonicalize(&r, cfg.canon_budget)));
            }
        }
    };
    for op in generative_moves(w, cfg.moves) {
        push(w, op, &mut out);
    }
    let (orbit, _) = Orbit::explore(w, cfg.canon_budget.max(1));
    for m in &orbit.members {
        for op in pattern_moves(m, cfg.moves) {
            push(m, op, &mut out);
        }
    }
    out
}

/// Bidirectional breadth-first search for a path of moves between `a` and `b`.
pub fn bfs_connect(a: &BraidWord, b: &BraidWord, cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.check()?;
    if a.category() != b.category() {
        return Err(Error::CategoryMismatch(a.category(), b.category()));
    }
    if !cfg.moves.admits(a.category()) {
        return Err(Error::CategoryViolation {
            what: format!("move set {}", cfg.moves),
            category: a.category(),
        });
    }
    let mut trees = [Tree::new(a, cfg.canon_budget), Tree::new(b, cfg.canon_budget)];
    let mut explored = 2;
    let meet = |trees: &[Tree; 2], ka: usize, kb: usize| -> Result<SearchOutcome> {
        let pa = trees[0].path_to(ka, cfg.canon_budget)?;
        let pb = trees[1].path_to(kb, cfg.canon_budget)?;
        let path = pa.then(&pb.reversed()?)?;
        path.validate()?;
        Ok(SearchOutcome::Found {
            path,
            nodes: trees[0].nodes.len() + trees[1].nodes.len(),
        })
    };
    if let Some(&kb) = trees[1].index.get(&trees[0].nodes[0].word) {
        return meet(&trees, 0, kb);
    }
    let mut depth = [0usize; 2];
    while depth[0] + depth[1] < cfg.max_depth {
        let side = if trees[0].frontier.len() <= trees[1].frontier.len() {
            0
        } else {
            1
        };
        if trees[side].frontier.is_empty() {
            break;
        }
        let frontier = std::mem::take(&mut trees[side].frontier);
        let mut next = Vec::new();
        for k in frontier {
            let word = trees[side].nodes[k].word.clone();
            for (member, op, r) in expand(&word, cfg) {
                if trees[side].index.contains_key(&r) {
                    continue;
                }
                explored += 1;
                if explored > cfg.budget {
                    return Err(Error::BudgetExceeded {
                        budget: cfg.budget,
                        explored,
                    });
                }
                let id = trees[side].nodes.len();
                trees[side].nodes.push(Node {
                    word: r.clone(),
                    parent: Some(k),
                    via: Some((member, op)),
                    depth: trees[side].nodes[k].depth + 1,
                });
                trees[side].index.insert(r.clone(), id);
                next.push(id);
                if let Some(&other) = trees[1 - side].index.get(&r) {
                    return if side == 0 {
                        meet(&trees, id, other)
                    } else {
                        meet(&trees, other, id)
                    };
                }
            }
        }
        trees[side].frontier = next;
        depth[side] += 1;
    }
    Ok(SearchOutcome::NotFoundWithinBounds {
        nodes: trees[0].nodes.len() + trees[1].nodes.len(),
        depth: depth[0] + depth[1],
    })
}

/// The default real-conjugate pair `(v₁, σ₁⁻¹v₁σ₁)` in `VB₂`.
pub fn default_conjugate_pair() -> (BraidWord, BraidWord) {
    let a = BraidWord::new(2, vec![Generator::v(1)], BraidCategory::Virtual).expect("valid");
    let b = BraidWord::new(
        2,
        vec![Generator::s_inv(1), Generator::v(1), Generator::s(1)],
        BraidCategory::Virtual,
    )
    .expect("valid");
    (a, b)
}

/// Every word reachable from `w` in at most `depth` relation steps, including
/// insertions of cancelling pairs, without exceeding `max_len` letters.
pub fn rewrite_ball(w: &BraidWord, depth: usize, max_len: usize) -> HashSet<BraidWord> {
    let gens: Vec<Generator> = (1..w.strands())
        .flat_map(|i| {
            [Generator::s(i), Generator::s_inv(i), Generator::v(i), Generator::c(i)]
        })
        .filter(|g| g.licensed_in(w.category()))
        .collect();
    let mut seen = HashSet::from([w.clone()]);
    let mut queue = VecDeque::from([(w.clone(), 0usize)]);
    while let Some((cur, d)) = queue.pop_front() {
        if d == depth {
            continue;
        }
        let mut next: Vec<BraidWord> = cur
            .relation_sites()
            .into_iter()
            .map(|(pos, rel, dir)| cur.apply_relation(&rel, pos, dir).expect("site applies"))
            .collect();
        if cur.len() + 2 <= max_len {
            for pos in 0..=cur.len() {
                for &g in &gens {
                    let r = Relation::cancellation(g);
                    if let Ok(x) = cur.apply_relation(&r, pos, Direction::Backward) {
                        next.push(x);
                    }
                }
            }
        }
        for x in next {
            if seen.insert(x.clone()) {
                queue.push_back((x, d + 1));
            }
        }
    }
    seen
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatPairReport {
    pub j: usize,
    pub k: usize,
    pub connected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlatWordsReport {
    pub depth: usize,
    pub slack: usize,
    /// Size of each word's rewrite ball, indexed by `k`.
    pub ball_sizes: Vec<usize>,
    pub pairs: Vec<FlatPairReport>,
}

impl FlatWordsReport {
    pub fn all_distinct(&self) -> bool {
        self.pairs.iter().all(|p| !p.connected)
    }
}

/// `(c₁v₁)^k` in `FV₂`.
pub fn flat_power(k: usize) -> BraidWord {
    let letters = (0..k).flat_map(|_| [Generator::c(1), Generator::v(1)]).collect();
    BraidWord::new(2, letters, BraidCategory::Flat).expect("valid")
}

/// Check that `(c₁v₁)^k`, `k = 0..=k_max`, are pairwise not connected by
/// rewriting: two words count as connected when their balls of radius `depth`
/// (allowing `slack` extra letters) intersect.
pub fn distinct_words_flat(k_max: usize, depth: usize, slack: usize) -> FlatWordsReport {
    let balls: Vec<HashSet<BraidWord>> = (0..=k_max)
        .map(|k| {
            let w = flat_power(k);
            rewrite_ball(&w, depth, w.len() + slack)
        })
        .collect();
    let mut pairs = Vec::new();
    for j in 0..=k_max {
        for k in j + 1..=k_max {
            let (small, large) = if balls[j].len() <= balls[k].len() {
                (&balls[j], &balls[k])
            } else {
                (&balls[k], &balls[j])
            };
            pairs.push(FlatPairReport {
                j,
                k,
                connected: small.iter().any(|x| large.contains(x)),
            });
        }
    }
    FlatWordsReport {
        depth,
        slack,
        ball_sizes: balls.iter().map(HashSet::len).collect(),
        pairs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_word;

    fn w(t: &str) -> BraidWord {
        parse_word(t).unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(canonicalize(&w("n=2 v1 v1 s1"), 100), w("n=2 s1"));
        let p = canonicalize_path(&w("n=3 v1 s2 v1 v2 S1 v2"), 100);
        p.validate().unwrap();
        assert!(p.end.is_empty());
        for t in ["n=3 s2 s1 s2", "n=4 s3 v1 S2", "n=3 v2 s1 v2"] {
            let c = canonicalize(&w(t), 1000);
            assert_eq!(canonicalize(&c, 1000), c);
            assert!(c.len() <= w(t).len());
        }
        assert_eq!(canonicalize(&w("n=3 s2 s1 s2"), 100), w("n=3 s1 s2 s1"));
    }

    #[test]
    fn trivial_searches() {
        let cfg = SearchConfig::new(MoveSet::Theorem3);
        let out = bfs_connect(&w("n=2 s1"), &w("n=2 s1"), &cfg).unwrap();
        assert!(out.path().unwrap().is_empty());
        let out = bfs_connect(&w("n=2 s1"), &w("n=3 s1 s2"), &cfg).unwrap();
        assert_eq!(out.path().unwrap().len(), 1);
        let (a, b) = default_conjugate_pair();
        let out = bfs_connect(&a, &b, &cfg).unwrap();
        let p = out.path().unwrap();
        assert_eq!(p.steps.iter().filter(|s| matches!(s, Step::Move { .. })).count(), 1);
    }

    #[test]
    fn flat_powers_small() {
        let r = distinct_words_flat(3, 4, 4);
        assert!(r.all_distinct());
        assert_eq!(r.pairs.len(), 6);
        assert!(rewrite_ball(&flat_power(0), 2, 4).contains(&w("n=2 c1 c1 cat=flat")));
    }
}
