//! Scripted derivations: fixed sequences of moves and relations showing that
//! one family of moves follows from another, replayed on concrete words.

use super::{
    exchange_split, lv_fan, thread_suffix, ExchangeTo, LvKind, LvSite, MarkovMove, MovePath, Side,
    StabKind, Step, ThreadStyle,
};
use crate::braid::{BraidCategory, BraidWord, Direction, Generator, Relation, RelationKind};
use crate::error::{Error, Result};

pub const SCRIPTS: &[&str] = &[
    "exchange-from-theorem3",
    "threading-from-kamada",
    "fig37-real-Lv-to-stabilization",
    "remark6-bottom-left",
];

/// Resolve a script name, accepting the short aliases `fig37` and `remark6`.
pub fn canonical_script_name(name: &str) -> Option<&'static str> {
    match name {
        "fig37" => Some(SCRIPTS[2]),
        "remark6" => Some(SCRIPTS[3]),
        _ => SCRIPTS.iter().copied().find(|s| *s == name),
    }
}

pub fn replay_derivation(name: &str, input: &BraidWord) -> Result<MovePath> {
    match canonical_script_name(name) {
        Some("exchange-from-theorem3") => exchange_from_theorem3(input),
        Some("threading-from-kamada") => threading_from_kamada(input),
        Some("fig37-real-Lv-to-stabilization") => fig37(input, default_fig37_site(input)),
        Some("remark6-bottom-left") => remark6_bottom_left(input),
        _ => Err(Error::ScriptInapplicable {
            script: name.to_string(),
            step: 0,
            reason: format!("unknown script; known: {}", SCRIPTS.join(", ")),
        }),
    }
}

struct Script {
    name: &'static str,
    path: MovePath,
}

impl Script {
    fn new(name: &'static str, start: BraidWord) -> Self {
        Script {
            name,
            path: MovePath::empty(start),
        }
    }

    fn fail(&self, reason: impl Into<String>) -> Error {
        Error::ScriptInapplicable {
            script: self.name.to_string(),
            step: self.path.len(),
            reason: reason.into(),
        }
    }

    fn word(&self) -> &BraidWord {
        &self.path.end
    }

    fn letter(&self, pos: usize) -> Result<Generator> {
        self.word()
            .letters()
            .get(pos)
            .copied()
            .ok_or_else(|| self.fail(format!("no letter at {pos}")))
    }

    fn step(&mut self, step: Step) -> Result<()> {
        match self.path.push(step) {
            Ok(_) => Ok(()),
            Err(Error::InvalidPath { reason, .. }) => Err(self.fail(reason)),
            Err(e) => Err(self.fail(e.to_string())),
        }
    }

    fn mv(&mut self, op: MarkovMove) -> Result<()> {
        self.step(Step::Move { op })
    }

    fn rel(&mut self, relation: Relation, pos: usize, direction: Direction) -> Result<()> {
        self.step(Step::Relation {
            relation,
            pos,
            direction,
        })
    }

    fn cancel_at(&mut self, pos: usize) -> Result<()> {
        let g = self.letter(pos)?;
        self.rel(Relation::cancellation(g), pos, Direction::Forward)
    }

    /// Insert `g g⁻¹` before letter `pos`.
    fn insert_pair(&mut self, pos: usize, g: Generator) -> Result<()> {
        self.rel(Relation::cancellation(g), pos, Direction::Backward)
    }

    /// Swap the far-apart letters at `pos`, `pos + 1`.
    fn commute_at(&mut self, pos: usize) -> Result<()> {
        let (a, b) = (self.letter(pos)?, self.letter(pos + 1)?);
        let r = Relation::far(a, b).ok_or_else(|| self.fail(format!("{a} and {b} do not commute")))?;
        let dir = if r.lhs[0] == a {
            Direction::Forward
        } else {
            Direction::Backward
        };
        self.rel(r, pos, dir)
    }

    /// `v_a y_b v_a → v_b y_a v_b` at `pos`, with `|a − b| = 1`.
    fn detour_at(&mut self, pos: usize) -> Result<()> {
        let hit = Relation::matches_at(self.word().letters(), pos, self.word().category())
            .into_iter()
            .find(|(r, _)| {
                matches!(
                    r.kind,
                    RelationKind::SpecialDetour | RelationKind::MixedFlat | RelationKind::VBraid
                )
            });
        match hit {
            Some((r, d)) => self.rel(r, pos, d),
            None => Err(self.fail(format!("no detour at {pos}"))),
        }
    }

    /// Conjugate the first letter around to the end.
    fn rotate_to_back(&mut self) -> Result<()> {
        let g = self.letter(0)?;
        self.mv(MarkovMove::Conjugate { gen: g })?;
        self.cancel_at(0)
    }

    /// Conjugate the last letter around to the front.
    fn rotate_to_front(&mut self) -> Result<()> {
        let len = self.word().len();
        if len == 0 {
            return Err(self.fail("empty word"));
        }
        let g = self.letter(len - 1)?;
        self.mv(MarkovMove::Conjugate { gen: g.inverse() })?;
        let len = self.word().len();
        self.cancel_at(len - 2)
    }

    fn expect_end(&self, want: &BraidWord) -> Result<()> {
        if self.word().free_reduce() == want.free_reduce() {
            Ok(())
        } else {
            Err(self.fail(format!("ended at {}, expected {want}", self.word())))
        }
    }

    fn finish(self) -> Result<MovePath> {
        self.path.validate()?;
        Ok(self.path)
    }
}

/// Reduce `b₁ X b₂ Y` (the exchange side given by `x`) to a word on the
/// original strands using only conjugation, stabilization, threading and
/// relations. `b₂` may use the letter of index `n − 1` at most once.
fn exchange_side_to_core(
    name: &'static str,
    start: &BraidWord,
    virtual_side: bool,
) -> Result<(MovePath, BraidWord)> {
    let mut s = Script::new(name, start.clone());
    let n1 = start.strands();
    let n = n1 - 1;
    let (x, y) = if virtual_side {
        (Generator::v(n), Generator::v(n))
    } else {
        (Generator::s_inv(n), Generator::s(n))
    };
    let (b1, b2) = exchange_split(start, Side::Right, x, y)
        .ok_or_else(|| s.fail("word is not of the form b1 X b2 Y"))?;
    let hits: Vec<usize> = (0..b2.len())
        .filter(|&k| b2.letters()[k].index + 1 == n)
        .collect();
    if hits.len() > 1 {
        return Err(s.fail("b2 uses the letter of index n-1 more than once"));
    }
    let split = hits.first().copied().unwrap_or(b2.len());
    // b₁ p X [x] q Y with p, q far from X and Y
    let mut pos = b1.len();
    for _ in 0..split {
        s.commute_at(pos)?;
        pos += 1;
    }
    let q_len = b2.len() - split - hits.len();
    let mut ypos = s.word().len() - 1;
    for _ in 0..q_len {
        s.commute_at(ypos - 1)?;
        ypos -= 1;
    }
    // now b₁ p X [x] Y q
    if hits.is_empty() {
        s.cancel_at(pos)?;
        let core = s.word().clone();
        return Ok((s.path, core));
    }
    for _ in 0..q_len {
        s.rotate_to_front()?;
    }
    // q b₁ p X x Y
    let len = s.word().len();
    let mid = s.letter(len - 2)?;
    if virtual_side {
        s.detour_at(len - 3)?;
        // Q v X' v
        s.rotate_to_front()?;
        let kind = StabKind::from_letter(s.letter(s.word().len() - 1)?);
        s.mv(MarkovMove::DestabilizeRight { kind })?;
        s.mv(MarkovMove::Unconjugate {
            gen: Generator::v(n - 1),
        })?;
    } else if mid.is_virtual() {
        s.mv(MarkovMove::Unthread {
            side: Side::Right,
            style: ThreadStyle::Under,
        })?;
    } else {
        let a = Generator::sigma(n - 1, true);
        let base = len - 3;
        if mid == a {
            // b⁻¹ a b → b⁻¹ a b a a⁻¹ → b⁻¹ b a b a⁻¹ → a b a⁻¹
            s.insert_pair(base + 3, a)?;
            s.rel(Relation::braid(a.kind, n - 1), base + 1, Direction::Forward)?;
            s.cancel_at(base)?;
        } else {
            // b⁻¹ a⁻¹ b → a a⁻¹ b⁻¹ a⁻¹ b → a b⁻¹ a⁻¹ b⁻¹ b → a b⁻¹ a⁻¹
            s.insert_pair(base, a)?;
            s.rel(Relation::braid(mid.kind, n - 1), base + 1, Direction::Forward)?;
            s.cancel_at(base + 3)?;
        }
        // Q a X a⁻¹: conjugate by a, cancel, destabilize, unconjugate
        s.mv(MarkovMove::Conjugate { gen: a })?;
        let len = s.word().len();
        s.cancel_at(len - 2)?;
        let kind = StabKind::from_letter(s.letter(s.word().len() - 1)?);
        s.mv(MarkovMove::DestabilizeRight { kind })?;
        s.mv(MarkovMove::Unconjugate { gen: a })?;
    }
    let core = s.word().clone();
    Ok((s.path, core))
}

/// `b₁σₙ⁻¹b₂σₙ ~ b₁vₙb₂vₙ` from conjugation, stabilization and right
/// under-threading. Either side may be given; the path runs to the other.
pub fn exchange_from_theorem3(input: &BraidWord) -> Result<MovePath> {
    const NAME: &str = "exchange-from-theorem3";
    let fail = |step, reason: &str| Error::ScriptInapplicable {
        script: NAME.into(),
        step,
        reason: reason.into(),
    };
    if input.category() != BraidCategory::Virtual || input.strands() < 2 {
        return Err(fail(0, "needs a virtual braid word on at least 2 strands"));
    }
    let n = input.strands() - 1;
    let real = exchange_split(input, Side::Right, Generator::s_inv(n), Generator::s(n));
    let virt = exchange_split(input, Side::Right, Generator::v(n), Generator::v(n));
    let (from_real, (b1, b2)) = match (real, virt) {
        (Some(p), _) => (true, p),
        (None, Some(p)) => (false, p),
        _ => return Err(fail(0, "word is not one side of a right exchange move")),
    };
    let (real_w, virt_w) = super::exchange_right(&b1, &b2)?;
    let (p_real, core_r) = exchange_side_to_core(NAME, &real_w, false)?;
    let (p_virt, core_v) = exchange_side_to_core(NAME, &virt_w, true)?;
    if core_r != core_v {
        return Err(fail(
            p_real.len(),
            &format!("sides reduce to different words {core_r} and {core_v}"),
        ));
    }
    let path = p_real.then(&p_virt.reversed()?)?;
    let path = if from_real { path } else { path.reversed()? };
    path.validate()?;
    Ok(path)
}

/// Right under-threading derived from the exchange move, a detour and
/// virtual destabilization: `ασₙ⁻¹vₙ₋₁σₙ → α`.
pub fn threading_from_kamada(alpha: &BraidWord) -> Result<MovePath> {
    let mut s = Script::new("threading-from-kamada", alpha.clone());
    if alpha.category() != BraidCategory::Virtual || alpha.strands() < 2 {
        return Err(s.fail("needs a virtual braid word on at least 2 strands"));
    }
    let n = alpha.strands();
    let start = alpha
        .include_right()
        .append(&thread_suffix(n, Side::Right, ThreadStyle::Under))?;
    s = Script::new("threading-from-kamada", start);
    s.mv(MarkovMove::Exchange {
        side: Side::Right,
        to: ExchangeTo::Virtual,
    })?;
    let len = s.word().len();
    s.detour_at(len - 3)?;
    s.rotate_to_front()?;
    s.mv(MarkovMove::DestabilizeRight {
        kind: StabKind::Virtual,
    })?;
    s.mv(MarkovMove::Unconjugate {
        gen: Generator::v(n - 1),
    })?;
    s.expect_end(alpha)?;
    s.finish()
}

pub fn default_fig37_site(alpha: &BraidWord) -> LvSite {
    LvSite {
        gap: alpha.len() / 2,
        strand: 1,
    }
}

/// A right real L_v-move at an interior site, conjugated out to the bottom
/// right of the braid where it becomes a right real stabilization.
pub fn fig37(alpha: &BraidWord, site: LvSite) -> Result<MovePath> {
    let name = "fig37-real-Lv-to-stabilization";
    let start = super::lv_insert(alpha, site, LvKind::RealPos, Side::Right).map_err(|e| {
        Error::ScriptInapplicable {
            script: name.into(),
            step: 0,
            reason: e.to_string(),
        }
    })?;
    let mut s = Script::new(name, start);
    let n = alpha.strands();
    let tail = alpha.len() - site.gap;
    for _ in 0..tail {
        s.rotate_to_front()?;
    }
    let out = n - site.strand;
    for _ in 0..out {
        s.rotate_to_front()?;
    }
    let beta_letters = s.word().letters()[..s.word().len() - 1].to_vec();
    let beta = BraidWord::new(n, beta_letters, alpha.category())
        .map_err(|e| s.fail(e.to_string()))?;
    let want = super::stabilize_right(&beta, StabKind::RealPos)?;
    s.expect_end(&want)?;
    debug_assert_eq!(lv_fan(n, site.strand, LvKind::RealPos, Side::Right).len(), 2 * out + 1);
    s.finish()
}

/// `α ~ i(α)σ₁v₂σ₁⁻¹` for `α ∈ VB₂`, from the left under-threaded move,
/// detours and virtual conjugation.
pub fn remark6_bottom_left(alpha: &BraidWord) -> Result<MovePath> {
    let mut s = Script::new("remark6-bottom-left", alpha.clone());
    if alpha.category() != BraidCategory::Virtual || alpha.strands() != 2 {
        return Err(s.fail("needs a virtual braid word on 2 strands"));
    }
    s.mv(MarkovMove::Thread {
        side: Side::Left,
        style: ThreadStyle::Under,
    })?;
    // α v₂v₁ X v₁v₂: push v₂v₁ leftwards through α
    let m = alpha.len();
    for k in (0..m).rev() {
        // x v₂ v₁ at k → v₂ v₁ x'
        let x = s.letter(k)?;
        if x.index != 1 {
            return Err(s.fail(format!("unexpected letter {x}")));
        }
        s.insert_pair(k, Generator::v(2))?;
        s.detour_at(k + 1)?;
        s.cancel_at(k + 3)?;
    }
    s.rotate_to_back()?;
    s.rotate_to_back()?;
    let len = s.word().len();
    s.cancel_at(len - 3)?;
    let len = s.word().len();
    s.cancel_at(len - 2)?;
    let mut want = alpha.shift_left().letters().to_vec();
    want.extend([Generator::s(1), Generator::v(2), Generator::s_inv(1)]);
    let want = BraidWord::new(3, want, BraidCategory::Virtual)?;
    s.expect_end(&want)?;
    s.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_word;

    fn w(t: &str) -> BraidWord {
        parse_word(t).unwrap()
    }

    #[test]
    fn exchange_trivial() {
        let p = exchange_from_theorem3(&w("n=2 S1 s1")).unwrap();
        assert_eq!(p.end, w("n=2 v1 v1"));
        for t in [
            "n=3 s1 S2 v1 s2",
            "n=3 s1 v1 S2 S1 s2",
            "n=3 v1 S2 s1 s2",
            "n=4 s1 v2 S3 v1 s2 s1 s3",
            "n=4 s1 S3 s1 v2 s3",
            "n=4 v2 S3 s1 S2 v1 s3",
        ] {
            let p = exchange_from_theorem3(&w(t)).unwrap();
            p.validate().unwrap();
            let back = exchange_from_theorem3(&p.end).unwrap();
            assert_eq!(back.end, w(t));
        }
        assert!(matches!(
            exchange_from_theorem3(&w("n=3 S2 v1 s1 v1 s2")),
            Err(Error::ScriptInapplicable { .. })
        ));
    }

    #[test]
    fn threading() {
        let p = threading_from_kamada(&w("n=2")).unwrap();
        assert_eq!(p.start, w("n=3 S2 v1 s2"));
        assert!(p.end.is_empty());
        let p = threading_from_kamada(&w("n=3 s1 v2 S1 s2")).unwrap();
        assert_eq!(p.end, w("n=3 s1 v2 S1 s2"));
    }

    #[test]
    fn fig37_ends_in_stabilization() {
        let p = fig37(&w("n=2 s1"), LvSite { gap: 0, strand: 1 }).unwrap();
        assert_eq!(p.start, w("n=3 v1 s2 v1 s1"));
        assert_eq!(p.end.letters().last(), Some(&Generator::s(2)));
        assert_eq!(p.end.letters().iter().filter(|g| g.index == 2).count(), 1);
        let p = replay_derivation("fig37", &w("n=3 s1 v2 S1 s2")).unwrap();
        p.validate().unwrap();
    }

    #[test]
    fn remark6() {
        let p = remark6_bottom_left(&w("n=2 s1 v1 S1")).unwrap();
        assert_eq!(p.end, w("n=3 s2 v2 S2 s1 v2 S1"));
        let p = remark6_bottom_left(&w("n=2")).unwrap();
        assert_eq!(p.end, w("n=3 s1 v2 S1"));
        assert!(remark6_bottom_left(&w("n=3")).is_err());
    }
}
