//! Markov-type moves on braid words: conjugation, right stabilization,
//! threaded moves, L_v insertions and exchange moves, each with an inverse.

mod path;
pub mod scripts;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidCategory, BraidWord, GenKind, Generator};
use crate::error::{Error, Result};

pub use path::{MovePath, Step};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StabKind {
    Virtual,
    RealPos,
    RealNeg,
    Flat,
}

impl StabKind {
    pub fn letter(self, index: usize) -> Generator {
        match self {
            StabKind::Virtual => Generator::v(index),
            StabKind::RealPos => Generator::s(index),
            StabKind::RealNeg => Generator::s_inv(index),
            StabKind::Flat => Generator::c(index),
        }
    }

    pub fn from_letter(g: Generator) -> StabKind {
        match g.kind {
            GenKind::V => StabKind::Virtual,
            GenKind::SigmaPos => StabKind::RealPos,
            GenKind::SigmaNeg => StabKind::RealNeg,
            GenKind::C => StabKind::Flat,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// Which threaded move: the under-threaded one, its over-threaded mirror
/// (right side only), or the flat analogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ThreadStyle {
    Under,
    Over,
    Flat,
}

/// The crossing placed in the box of an L_v move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LvKind {
    Basic,
    Virtual,
    RealPos,
    RealNeg,
    Flat,
}

impl LvKind {
    fn letter(self, index: usize) -> Generator {
        match self {
            LvKind::Basic | LvKind::Virtual => Generator::v(index),
            LvKind::RealPos => Generator::s(index),
            LvKind::RealNeg => Generator::s_inv(index),
            LvKind::Flat => Generator::c(index),
        }
    }
}

/// Where an L_v move cuts the braid: the gap before letter `gap` (so `0` is
/// the top and `len` the bottom) and the 1-based position of the strand there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LvSite {
    pub gap: usize,
    pub strand: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExchangeTo {
    /// `b₁σₙ⁻¹b₂σₙ → b₁vₙb₂vₙ`
    Virtual,
    /// `b₁vₙb₂vₙ → b₁σₙ⁻¹b₂σₙ`
    Real,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "kebab-case")]
pub enum MarkovMove {
    /// `w ↦ g⁻¹ w g`
    Conjugate { gen: Generator },
    /// `g⁻¹ w g ↦ w`
    Unconjugate { gen: Generator },
    StabilizeRight { kind: StabKind },
    DestabilizeRight { kind: StabKind },
    Thread { side: Side, style: ThreadStyle },
    Unthread { side: Side, style: ThreadStyle },
    LvInsert { site: LvSite, kind: LvKind, side: Side },
    LvRemove { site: LvSite, kind: LvKind, side: Side },
    Exchange { side: Side, to: ExchangeTo },
}

impl MarkovMove {
    pub fn inverse(self) -> MarkovMove {
        use MarkovMove::*;
        match self {
            Conjugate { gen } => Unconjugate { gen },
            Unconjugate { gen } => Conjugate { gen },
            StabilizeRight { kind } => DestabilizeRight { kind },
            DestabilizeRight { kind } => StabilizeRight { kind },
            Thread { side, style } => Unthread { side, style },
            Unthread { side, style } => Thread { side, style },
            LvInsert { site, kind, side } => LvRemove { site, kind, side },
            LvRemove { site, kind, side } => LvInsert { site, kind, side },
            Exchange { side, to } => Exchange {
                side,
                to: match to {
                    ExchangeTo::Virtual => ExchangeTo::Real,
                    ExchangeTo::Real => ExchangeTo::Virtual,
                },
            },
        }
    }

    pub fn apply(&self, w: &BraidWord) -> Result<BraidWord> {
        use MarkovMove::*;
        match *self {
            Conjugate { gen } => conjugate(w, gen),
            Unconjugate { gen } => unconjugate(w, gen),
            StabilizeRight { kind } => stabilize_right(w, kind),
            DestabilizeRight { kind } => destabilize_right(w, kind),
            Thread { side, style } => thread(w, side, style),
            Unthread { side, style } => unthread(w, side, style),
            LvInsert { site, kind, side } => lv_insert(w, site, kind, side),
            LvRemove { site, kind, side } => lv_remove(w, site, kind, side),
            Exchange { side, to } => exchange(w, side, to),
        }
    }

    /// Short name used on the command line and in reports.
    pub fn name(&self) -> String {
        use MarkovMove::*;
        let side = |s: Side| match s {
            Side::Left => "left",
            Side::Right => "right",
        };
        let style = |s: ThreadStyle| match s {
            ThreadStyle::Under => "under",
            ThreadStyle::Over => "over",
            ThreadStyle::Flat => "flat",
        };
        match *self {
            Conjugate { gen } => format!("conjugate({gen})"),
            Unconjugate { gen } => format!("unconjugate({gen})"),
            StabilizeRight { kind } => format!("stabilize-right({})", stab_name(kind)),
            DestabilizeRight { kind } => format!("destabilize-right({})", stab_name(kind)),
            Thread { side: s, style: t } => format!("thread-{}-{}", side(s), style(t)),
            Unthread { side: s, style: t } => format!("unthread-{}-{}", side(s), style(t)),
            LvInsert { site, kind, side: s } => {
                format!("lv-insert({}, {}, gap {}, strand {})", lv_name(kind), side(s), site.gap, site.strand)
            }
            LvRemove { site, kind, side: s } => {
                format!("lv-remove({}, {}, gap {}, strand {})", lv_name(kind), side(s), site.gap, site.strand)
            }
            Exchange { side: s, to } => format!(
                "exchange-{}-to-{}",
                side(s),
                match to {
                    ExchangeTo::Virtual => "virtual",
                    ExchangeTo::Real => "real",
                }
            ),
        }
    }
}

fn stab_name(k: StabKind) -> &'static str {
    match k {
        StabKind::Virtual => "virtual",
        StabKind::RealPos => "real+",
        StabKind::RealNeg => "real-",
        StabKind::Flat => "flat",
    }
}

fn lv_name(k: LvKind) -> &'static str {
    match k {
        LvKind::Basic => "basic",
        LvKind::Virtual => "virtual",
        LvKind::RealPos => "real+",
        LvKind::RealNeg => "real-",
        LvKind::Flat => "flat",
    }
}

impl fmt::Display for MarkovMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

fn violation(what: impl Into<String>, category: BraidCategory) -> Error {
    Error::CategoryViolation {
        what: what.into(),
        category,
    }
}

fn require_letter(g: Generator, category: BraidCategory) -> Result<()> {
    if g.licensed_in(category) {
        Ok(())
    } else {
        Err(violation(format!("generator {g}"), category))
    }
}

fn inapplicable(what: &str) -> Error {
    Error::MoveInapplicable(what.to_string())
}

/// `g⁻¹ · w · g` (for `v` and `c` letters `g⁻¹ = g`).
pub fn conjugate(w: &BraidWord, g: Generator) -> Result<BraidWord> {
    if g.index == 0 || g.index >= w.strands() {
        return Err(Error::IndexOutOfRange {
            index: g.index,
            strands: w.strands(),
        });
    }
    require_letter(g, w.category())?;
    let mut letters = Vec::with_capacity(w.len() + 2);
    letters.push(g.inverse());
    letters.extend_from_slice(w.letters());
    letters.push(g);
    w.with_letters(letters)
}

/// Strip `g⁻¹ … g` from the ends.
pub fn unconjugate(w: &BraidWord, g: Generator) -> Result<BraidWord> {
    require_letter(g, w.category())?;
    let ls = w.letters();
    if ls.len() < 2 || ls[0] != g.inverse() || ls[ls.len() - 1] != g {
        return Err(inapplicable("unconjugate"));
    }
    w.with_letters(ls[1..ls.len() - 1].to_vec())
}

fn stab_licensed(kind: StabKind, category: BraidCategory) -> bool {
    kind.letter(1).licensed_in(category)
}

/// `w ↦ w·Xₙ` in `n + 1` strands, `X` one of `vₙ`, `σₙ^{±1}`, `cₙ`.
pub fn stabilize_right(w: &BraidWord, kind: StabKind) -> Result<BraidWord> {
    if !stab_licensed(kind, w.category()) {
        return Err(violation(format!("{} stabilization", stab_name(kind)), w.category()));
    }
    w.include_right().append(&[kind.letter(w.strands())])
}

/// Letters of `w` touching the last strand.
fn uses_last_strand(letters: &[Generator], strands: usize) -> bool {
    letters.iter().any(|g| g.index + 1 >= strands)
}

fn drop_last_strand(w: &BraidWord, letters: &[Generator]) -> Result<BraidWord> {
    BraidWord::new(w.strands() - 1, letters.to_vec(), w.category())
}

pub fn destabilize_right(w: &BraidWord, kind: StabKind) -> Result<BraidWord> {
    if !stab_licensed(kind, w.category()) {
        return Err(violation(format!("{} stabilization", stab_name(kind)), w.category()));
    }
    let n = w.strands();
    let ls = w.letters();
    if n < 2 || ls.last() != Some(&kind.letter(n - 1)) || uses_last_strand(&ls[..ls.len() - 1], n) {
        return Err(inapplicable("destabilize-right"));
    }
    drop_last_strand(w, &ls[..ls.len() - 1])
}

/// The letters a threaded move appends to a word on `n` strands.
pub fn thread_suffix(n: usize, side: Side, style: ThreadStyle) -> Vec<Generator> {
    use Generator as G;
    match (side, style) {
        (Side::Right, ThreadStyle::Under) => vec![G::s_inv(n), G::v(n - 1), G::s(n)],
        (Side::Right, ThreadStyle::Over) => vec![G::s(n), G::v(n - 1), G::s_inv(n)],
        (Side::Right, ThreadStyle::Flat) => vec![G::c(n), G::v(n - 1), G::c(n)],
        (Side::Left, ThreadStyle::Flat) => vec![
            G::v(n),
            G::v(n - 1),
            G::c(n - 1),
            G::v(n),
            G::c(n - 1),
            G::v(n - 1),
            G::v(n),
        ],
        (Side::Left, _) => vec![
            G::v(n),
            G::v(n - 1),
            G::s(n - 1),
            G::v(n),
            G::s_inv(n - 1),
            G::v(n - 1),
            G::v(n),
        ],
    }
}

fn thread_guard(w: &BraidWord, side: Side, style: ThreadStyle) -> Result<()> {
    let ok = match w.category() {
        BraidCategory::Virtual => style != ThreadStyle::Flat,
        BraidCategory::Flat => style == ThreadStyle::Flat,
        _ => false,
    };
    if !ok || (side == Side::Left && style == ThreadStyle::Over) {
        return Err(violation(
            format!("threaded move {:?}/{:?}", side, style),
            w.category(),
        ));
    }
    Ok(())
}

/// Right or left threaded L_v move: `α ↦ α · suffix` on `n + 1` strands.
pub fn thread(w: &BraidWord, side: Side, style: ThreadStyle) -> Result<BraidWord> {
    thread_guard(w, side, style)?;
    let n = w.strands();
    if n < 2 {
        return Err(Error::TooFewStrands { needed: 2, strands: n });
    }
    w.include_right().append(&thread_suffix(n, side, style))
}

pub fn thread_right_under(w: &BraidWord) -> Result<BraidWord> {
    let style = if w.category() == BraidCategory::Flat {
        ThreadStyle::Flat
    } else {
        ThreadStyle::Under
    };
    thread(w, Side::Right, style)
}

pub fn thread_left_under(w: &BraidWord) -> Result<BraidWord> {
    let style = if w.category() == BraidCategory::Flat {
        ThreadStyle::Flat
    } else {
        ThreadStyle::Under
    };
    thread(w, Side::Left, style)
}

pub fn unthread(w: &BraidWord, side: Side, style: ThreadStyle) -> Result<BraidWord> {
    thread_guard(w, side, style)?;
    let n1 = w.strands();
    if n1 < 3 {
        return Err(inapplicable("unthread"));
    }
    let suffix = thread_suffix(n1 - 1, side, style);
    let ls = w.letters();
    if ls.len() < suffix.len() || ls[ls.len() - suffix.len()..] != suffix[..] {
        return Err(inapplicable("unthread"));
    }
    let prefix = &ls[..ls.len() - suffix.len()];
    if uses_last_strand(prefix, n1) {
        return Err(inapplicable("unthread"));
    }
    drop_last_strand(w, prefix)
}

fn lv_guard(w: &BraidWord, kind: LvKind) -> Result<()> {
    let ok = match w.category() {
        BraidCategory::Virtual => kind != LvKind::Flat,
        BraidCategory::Flat => matches!(kind, LvKind::Basic | LvKind::Virtual | LvKind::Flat),
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(violation(format!("{} L_v move", lv_name(kind)), w.category()))
    }
}

/// The fan of letters an L_v insertion places at the cut, on `n + 1` strands.
/// On the right the cut strand is routed out to column `n + 1`; on the left
/// the word is shifted and it is routed out to the new column 1.
pub fn lv_fan(n: usize, strand: usize, kind: LvKind, side: Side) -> Vec<Generator> {
    match side {
        Side::Right => {
            let out: Vec<Generator> = (strand..n).map(Generator::v).collect();
            let mut f = out.clone();
            f.push(kind.letter(n));
            f.extend(out.into_iter().rev());
            f
        }
        Side::Left => {
            let out: Vec<Generator> = (2..=strand).rev().map(Generator::v).collect();
            let mut f = out.clone();
            f.push(kind.letter(1));
            f.extend(out.into_iter().rev());
            f
        }
    }
}

/// Cut the strand at `site` open and pull the new pair of ends out to a new
/// outermost column, with `kind` deciding the crossing in the box.
pub fn lv_insert(w: &BraidWord, site: LvSite, kind: LvKind, side: Side) -> Result<BraidWord> {
    lv_guard(w, kind)?;
    let n = w.strands();
    if site.gap > w.len() || site.strand == 0 || site.strand > n {
        return Err(Error::BadSite(format!(
            "gap {} strand {} in a word of length {} on {} strands",
            site.gap,
            site.strand,
            w.len(),
            n
        )));
    }
    let base = match side {
        Side::Right => w.include_right(),
        Side::Left => w.shift_left(),
    };
    let ls = base.letters();
    let mut letters = ls[..site.gap].to_vec();
    letters.extend(lv_fan(n, site.strand, kind, side));
    letters.extend_from_slice(&ls[site.gap..]);
    base.with_letters(letters)
}

pub fn lv_remove(w: &BraidWord, site: LvSite, kind: LvKind, side: Side) -> Result<BraidWord> {
    lv_guard(w, kind)?;
    let n1 = w.strands();
    if n1 < 2 || site.strand == 0 || site.strand >= n1 {
        return Err(inapplicable("lv-remove"));
    }
    let fan = lv_fan(n1 - 1, site.strand, kind, side);
    let ls = w.letters();
    if site.gap + fan.len() > ls.len() || ls[site.gap..site.gap + fan.len()] != fan[..] {
        return Err(inapplicable("lv-remove"));
    }
    let mut rest = ls[..site.gap].to_vec();
    rest.extend_from_slice(&ls[site.gap + fan.len()..]);
    let rest = match side {
        Side::Right => {
            if uses_last_strand(&rest, n1) {
                return Err(inapplicable("lv-remove"));
            }
            rest
        }
        Side::Left => {
            if rest.iter().any(|g| g.index == 1) {
                return Err(inapplicable("lv-remove"));
            }
            rest.iter().map(|g| g.with_index(g.index - 1)).collect()
        }
    };
    BraidWord::new(n1 - 1, rest, w.category())
}

fn exchange_guard(category: BraidCategory) -> Result<()> {
    if category == BraidCategory::Virtual {
        Ok(())
    } else {
        Err(violation("exchange move", category))
    }
}

/// The pair `(b₁σₙ⁻¹b₂σₙ, b₁vₙb₂vₙ)` on `n + 1` strands.
pub fn exchange_right(b1: &BraidWord, b2: &BraidWord) -> Result<(BraidWord, BraidWord)> {
    exchange_pair(b1, b2, Side::Right)
}

/// The pair `(i(b₁)σ₁⁻¹i(b₂)σ₁, i(b₁)v₁i(b₂)v₁)` on `n + 1` strands.
pub fn exchange_left(b1: &BraidWord, b2: &BraidWord) -> Result<(BraidWord, BraidWord)> {
    exchange_pair(b1, b2, Side::Left)
}

fn exchange_pair(b1: &BraidWord, b2: &BraidWord, side: Side) -> Result<(BraidWord, BraidWord)> {
    if b1.strands() != b2.strands() {
        return Err(Error::StrandMismatch(b1.strands(), b2.strands()));
    }
    if b1.category() != b2.category() {
        return Err(Error::CategoryMismatch(b1.category(), b2.category()));
    }
    exchange_guard(b1.category())?;
    let n = b1.strands();
    let (x1, x2, j) = match side {
        Side::Right => (b1.include_right(), b2.include_right(), n),
        Side::Left => (b1.shift_left(), b2.shift_left(), 1),
    };
    let build = |a: Generator, b: Generator| -> Result<BraidWord> {
        let mut ls = x1.letters().to_vec();
        ls.push(a);
        ls.extend_from_slice(x2.letters());
        ls.push(b);
        x1.with_letters(ls)
    };
    Ok((
        build(Generator::s_inv(j), Generator::s(j))?,
        build(Generator::v(j), Generator::v(j))?,
    ))
}

/// Split a word on `n + 1` strands as `b₁ x b₂ y` with `x`, `y` the only
/// letters on the outer pair of strands.
pub fn exchange_split(
    w: &BraidWord,
    side: Side,
    x: Generator,
    y: Generator,
) -> Option<(BraidWord, BraidWord)> {
    let n1 = w.strands();
    if n1 < 2 {
        return None;
    }
    let outer = |g: &Generator| match side {
        Side::Right => g.index == n1 - 1,
        Side::Left => g.index == 1,
    };
    let ls = w.letters();
    if ls.last() != Some(&y) {
        return None;
    }
    let hits: Vec<usize> = ls[..ls.len() - 1]
        .iter()
        .enumerate()
        .filter(|(_, g)| outer(g))
        .map(|(k, _)| k)
        .collect();
    let [k] = hits[..] else { return None };
    if ls[k] != x {
        return None;
    }
    let unshift = |s: &[Generator]| -> Vec<Generator> {
        match side {
            Side::Right => s.to_vec(),
            Side::Left => s.iter().map(|g| g.with_index(g.index - 1)).collect(),
        }
    };
    let b1 = BraidWord::new(n1 - 1, unshift(&ls[..k]), w.category()).ok()?;
    let b2 = BraidWord::new(n1 - 1, unshift(&ls[k + 1..ls.len() - 1]), w.category()).ok()?;
    Some((b1, b2))
}

/// Exchange move applied in place.
pub fn exchange(w: &BraidWord, side: Side, to: ExchangeTo) -> Result<BraidWord> {
    exchange_guard(w.category())?;
    let j = match side {
        Side::Right => w.strands().saturating_sub(1),
        Side::Left => 1,
    };
    if j == 0 {
        return Err(inapplicable("exchange"));
    }
    let (x, y) = match to {
        ExchangeTo::Virtual => (Generator::s_inv(j), Generator::s(j)),
        ExchangeTo::Real => (Generator::v(j), Generator::v(j)),
    };
    let (b1, b2) = exchange_split(w, side, x, y).ok_or_else(|| inapplicable("exchange"))?;
    let (real, virt) = exchange_pair(&b1, &b2, side)?;
    Ok(match to {
        ExchangeTo::Virtual => virt,
        ExchangeTo::Real => real,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse_word;

    fn w(t: &str) -> BraidWord {
        parse_word(t).unwrap()
    }

    #[test]
    fn conjugation() {
        assert_eq!(conjugate(&w("n=2 v1"), Generator::s(1)).unwrap(), w("n=2 S1 v1 s1"));
        let x = w("n=3 s1 v2");
        let y = conjugate(&conjugate(&x, Generator::v(2)).unwrap(), Generator::v(2)).unwrap();
        assert_eq!(y.free_reduce(), x);
        assert!(matches!(
            conjugate(&w("n=2 c1 cat=flat"), Generator::s(1)),
            Err(Error::CategoryViolation { .. })
        ));
        assert!(matches!(conjugate(&x, Generator::v(3)), Err(Error::IndexOutOfRange { .. })));
        assert_eq!(unconjugate(&w("n=2 S1 v1 s1"), Generator::s(1)).unwrap(), w("n=2 v1"));
    }

    #[test]
    fn stabilization() {
        assert_eq!(stabilize_right(&w("n=1"), StabKind::Virtual).unwrap(), w("n=2 v1"));
        assert_eq!(stabilize_right(&w("n=2 s1"), StabKind::RealPos).unwrap(), w("n=3 s1 s2"));
        assert_eq!(destabilize_right(&w("n=3 s1 v1 v2"), StabKind::Virtual).unwrap(), w("n=2 s1 v1"));
        assert!(destabilize_right(&w("n=3 v2 s1 v2"), StabKind::Virtual).is_err());
        assert!(stabilize_right(&w("n=2 c1 cat=flat"), StabKind::RealPos).is_err());
    }

    #[test]
    fn threading() {
        assert_eq!(thread_right_under(&w("n=2")).unwrap(), w("n=3 S2 v1 s2"));
        assert_eq!(thread_right_under(&w("n=2 v1")).unwrap(), w("n=3 v1 S2 v1 s2"));
        assert_eq!(
            thread_right_under(&w("n=2 cat=flat")).unwrap(),
            w("n=3 c2 v1 c2 cat=flat")
        );
        assert_eq!(thread_left_under(&w("n=2")).unwrap(), w("n=3 v2 v1 s1 v2 S1 v1 v2"));
        assert_eq!(thread_left_under(&w("n=2 s1")).unwrap().len(), 8);
        assert!(matches!(thread_right_under(&w("n=1")), Err(Error::TooFewStrands { .. })));
        assert!(matches!(
            thread_right_under(&w("n=2 cat=welded")),
            Err(Error::CategoryViolation { .. })
        ));
        let x = w("n=3 s1 v2 S1");
        for (side, style) in [(Side::Right, ThreadStyle::Under), (Side::Right, ThreadStyle::Over), (Side::Left, ThreadStyle::Under)] {
            let y = thread(&x, side, style).unwrap();
            assert_eq!(unthread(&y, side, style).unwrap(), x);
        }
    }

    #[test]
    fn lv_moves() {
        let site = LvSite { gap: 0, strand: 1 };
        assert_eq!(lv_insert(&w("n=1"), site, LvKind::Basic, Side::Right).unwrap(), w("n=2 v1"));
        let x = w("n=3 s1 v2 S1");
        let site = LvSite { gap: 1, strand: 2 };
        let y = lv_insert(&x, site, LvKind::RealPos, Side::Right).unwrap();
        assert_eq!(y, w("n=4 s1 v2 s3 v2 v2 S1"));
        assert_eq!(lv_remove(&y, site, LvKind::RealPos, Side::Right).unwrap(), x);
        let z = lv_insert(&x, site, LvKind::RealNeg, Side::Left).unwrap();
        assert_eq!(z, w("n=4 s2 v2 S1 v2 v3 S2"));
        assert_eq!(lv_remove(&z, site, LvKind::RealNeg, Side::Left).unwrap(), x);
        assert!(matches!(
            lv_insert(&x, LvSite { gap: 4, strand: 1 }, LvKind::Basic, Side::Right),
            Err(Error::BadSite(_))
        ));
    }

    #[test]
    fn exchange_pairs() {
        let (a, b) = exchange_right(&w("n=1"), &w("n=1")).unwrap();
        assert!(a.free_reduce().is_empty() && b.free_reduce().is_empty());
        let (a, b) = exchange_right(&w("n=2 s1"), &w("n=2 v1")).unwrap();
        assert_eq!(a, w("n=3 s1 S2 v1 s2"));
        assert_eq!(b, w("n=3 s1 v2 v1 v2"));
        assert_eq!(exchange(&a, Side::Right, ExchangeTo::Virtual).unwrap(), b);
        assert_eq!(exchange(&b, Side::Right, ExchangeTo::Real).unwrap(), a);
        let (a, b) = exchange_left(&w("n=2 s1"), &w("n=2 v1")).unwrap();
        assert_eq!(a, w("n=3 s2 S1 v2 s1"));
        assert_eq!(exchange(&a, Side::Left, ExchangeTo::Virtual).unwrap(), b);
        assert_eq!(a.permutation(), b.permutation());
    }
}
