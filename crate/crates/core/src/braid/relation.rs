use std::fmt;

use serde::{Deserialize, Serialize};

use super::{BraidCategory, BraidWord, GenKind, Generator};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn reverse(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RelationKind {
    /// `σᵢσᵢ⁻¹ = 1` and `σᵢ⁻¹σᵢ = 1`.
    Inverse,
    VInvolution,
    CInvolution,
    BraidFar,
    BraidRel,
    VFar,
    VBraid,
    MixedFar,
    SpecialDetour,
    CFar,
    CBraid,
    MixedFlat,
    F1,
    F2,
}

impl RelationKind {
    pub const ALL: [RelationKind; 14] = [
        RelationKind::Inverse,
        RelationKind::VInvolution,
        RelationKind::CInvolution,
        RelationKind::BraidFar,
        RelationKind::BraidRel,
        RelationKind::VFar,
        RelationKind::VBraid,
        RelationKind::MixedFar,
        RelationKind::SpecialDetour,
        RelationKind::CFar,
        RelationKind::CBraid,
        RelationKind::MixedFlat,
        RelationKind::F1,
        RelationKind::F2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationKind::Inverse => "inverse",
            RelationKind::VInvolution => "v-involution",
            RelationKind::CInvolution => "c-involution",
            RelationKind::BraidFar => "braid-far",
            RelationKind::BraidRel => "braid-rel",
            RelationKind::VFar => "v-far",
            RelationKind::VBraid => "v-braid",
            RelationKind::MixedFar => "mixed-far",
            RelationKind::SpecialDetour => "special-detour",
            RelationKind::CFar => "c-far",
            RelationKind::CBraid => "c-braid",
            RelationKind::MixedFlat => "mixed-flat",
            RelationKind::F1 => "F1",
            RelationKind::F2 => "F2",
        }
    }

    pub fn licensed_in(self, category: BraidCategory) -> bool {
        use BraidCategory::*;
        use RelationKind::*;
        match self {
            VInvolution | VFar | VBraid | MixedFar => true,
            Inverse | BraidFar | BraidRel | SpecialDetour => category != Flat,
            CInvolution | CFar | CBraid | MixedFlat => category == Flat,
            F1 => matches!(category, Welded | Unrestricted),
            F2 => category == Unrestricted,
        }
    }

    /// Relations that change word length (cancellation / insertion of a pair).
    pub fn is_cancellation(self) -> bool {
        matches!(
            self,
            RelationKind::Inverse | RelationKind::VInvolution | RelationKind::CInvolution
        )
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One concrete instance of a defining relation, `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Relation {
    pub kind: RelationKind,
    pub lhs: Vec<Generator>,
    pub rhs: Vec<Generator>,
}

fn far_kind(a: Generator, b: Generator) -> RelationKind {
    match (a.kind, b.kind) {
        (GenKind::V, GenKind::V) => RelationKind::VFar,
        (GenKind::C, GenKind::C) => RelationKind::CFar,
        (x, y) if x != GenKind::V && x != GenKind::C && y != GenKind::V && y != GenKind::C => {
            RelationKind::BraidFar
        }
        _ => RelationKind::MixedFar,
    }
}

impl Relation {
    fn new(kind: RelationKind, lhs: Vec<Generator>, rhs: Vec<Generator>) -> Self {
        Relation { kind, lhs, rhs }
    }

    /// `g g⁻¹ = 1`.
    pub fn cancellation(g: Generator) -> Self {
        let kind = match g.kind {
            GenKind::V => RelationKind::VInvolution,
            GenKind::C => RelationKind::CInvolution,
            _ => RelationKind::Inverse,
        };
        Relation::new(kind, vec![g, g.inverse()], vec![])
    }

    /// Far commutation `ab = ba`, stored with the lower index on the left.
    /// Returns `None` unless the indices differ by at least 2.
    pub fn far(a: Generator, b: Generator) -> Option<Self> {
        if a.index.abs_diff(b.index) < 2 {
            return None;
        }
        let (a, b) = if a.index < b.index { (a, b) } else { (b, a) };
        Some(Relation::new(far_kind(a, b), vec![a, b], vec![b, a]))
    }

    /// `xᵢxᵢ₊₁xᵢ = xᵢ₊₁xᵢxᵢ₊₁` for a letter kind `x`.
    pub fn braid(kind: GenKind, i: usize) -> Self {
        let rk = match kind {
            GenKind::V => RelationKind::VBraid,
            GenKind::C => RelationKind::CBraid,
            _ => RelationKind::BraidRel,
        };
        let a = Generator::new(kind, i);
        let b = Generator::new(kind, i + 1);
        Relation::new(rk, vec![a, b, a], vec![b, a, b])
    }

    /// `vᵢ xᵢ₊₁ vᵢ = vᵢ₊₁ xᵢ vᵢ₊₁` with `x` a real or flat crossing.
    pub fn detour(kind: GenKind, i: usize) -> Self {
        let rk = if kind == GenKind::C {
            RelationKind::MixedFlat
        } else {
            RelationKind::SpecialDetour
        };
        Relation::new(
            rk,
            vec![Generator::v(i), Generator::new(kind, i + 1), Generator::v(i)],
            vec![Generator::v(i + 1), Generator::new(kind, i), Generator::v(i + 1)],
        )
    }

    /// `vᵢσᵢ₊₁σᵢ = σᵢ₊₁σᵢvᵢ₊₁`.
    pub fn f1(i: usize) -> Self {
        Relation::new(
            RelationKind::F1,
            vec![Generator::v(i), Generator::s(i + 1), Generator::s(i)],
            vec![Generator::s(i + 1), Generator::s(i), Generator::v(i + 1)],
        )
    }

    /// `σᵢσᵢ₊₁vᵢ = vᵢ₊₁σᵢσᵢ₊₁`.
    pub fn f2(i: usize) -> Self {
        Relation::new(
            RelationKind::F2,
            vec![Generator::s(i), Generator::s(i + 1), Generator::v(i)],
            vec![Generator::v(i + 1), Generator::s(i), Generator::s(i + 1)],
        )
    }

    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    pub fn side(&self, dir: Direction) -> (&[Generator], &[Generator]) {
        match dir {
            Direction::Forward => (&self.lhs, &self.rhs),
            Direction::Backward => (&self.rhs, &self.lhs),
        }
    }

    pub fn licensed_in(&self, category: BraidCategory) -> bool {
        self.kind.licensed_in(category)
            && self
                .lhs
                .iter()
                .chain(&self.rhs)
                .all(|g| g.licensed_in(category))
    }

    /// True if this is one of the instances the constructors above produce.
    pub fn is_well_formed(&self) -> bool {
        let rebuilt = match (self.kind, self.lhs.as_slice()) {
            (k, [g, _]) if k.is_cancellation() => Some(Relation::cancellation(*g)),
            (RelationKind::BraidFar | RelationKind::VFar | RelationKind::CFar | RelationKind::MixedFar, [a, b]) => {
                Relation::far(*a, *b)
            }
            (RelationKind::BraidRel | RelationKind::VBraid | RelationKind::CBraid, [a, _, _]) => {
                Some(Relation::braid(a.kind, a.index))
            }
            (RelationKind::SpecialDetour | RelationKind::MixedFlat, [a, b, _]) if a.index >= 1 => {
                Some(Relation::detour(b.kind, a.index))
            }
            (RelationKind::F1, [a, ..]) => Some(Relation::f1(a.index)),
            (RelationKind::F2, [a, ..]) => Some(Relation::f2(a.index)),
            _ => None,
        };
        let ok_kinds = match self.kind {
            RelationKind::BraidRel => self.lhs.first().is_some_and(|g| g.is_real()),
            RelationKind::SpecialDetour => self.lhs.get(1).is_some_and(|g| g.is_real()),
            RelationKind::MixedFlat => self.lhs.get(1).is_some_and(|g| g.is_flat()),
            _ => true,
        };
        ok_kinds && rebuilt.as_ref() == Some(self)
    }

    /// Every relation instance whose lhs or rhs matches `letters` at `pos`,
    /// restricted to the category. Insertions of cancelling pairs are not listed.
    pub fn matches_at(
        letters: &[Generator],
        pos: usize,
        category: BraidCategory,
    ) -> Vec<(Relation, Direction)> {
        let mut out = Vec::new();
        let tail = &letters[pos.min(letters.len())..];
        if let [a, b, ..] = tail {
            let (a, b) = (*a, *b);
            if b == a.inverse() {
                out.push((Relation::cancellation(a), Direction::Forward));
            }
            if let Some(r) = Relation::far(a, b) {
                let dir = if r.lhs[0] == a {
                    Direction::Forward
                } else {
                    Direction::Backward
                };
                out.push((r, dir));
            }
        }
        if let [a, b, c, ..] = tail {
            let (a, b, c) = (*a, *b, *c);
            // braid relations of each letter kind (same sign throughout)
            if a == c && a.kind == b.kind {
                if b.index == a.index + 1 {
                    out.push((Relation::braid(a.kind, a.index), Direction::Forward));
                } else if a.index == b.index + 1 {
                    out.push((Relation::braid(a.kind, b.index), Direction::Backward));
                }
            }
            if a == c && a.is_virtual() && b.is_crossing() {
                if b.index == a.index + 1 {
                    out.push((Relation::detour(b.kind, a.index), Direction::Forward));
                } else if a.index == b.index + 1 {
                    out.push((Relation::detour(b.kind, b.index), Direction::Backward));
                }
            }
            if a.is_virtual() && b.kind == GenKind::SigmaPos && c.kind == GenKind::SigmaPos {
                let i = a.index;
                if b.index == i + 1 && c.index == i {
                    out.push((Relation::f1(i), Direction::Forward));
                }
                if b.index + 1 == i && c.index == i {
                    out.push((Relation::f2(i - 1), Direction::Backward));
                }
            }
            if a.kind == GenKind::SigmaPos && b.kind == GenKind::SigmaPos && c.is_virtual() {
                let i = c.index;
                if a.index == i && b.index == i + 1 {
                    out.push((Relation::f2(i), Direction::Forward));
                }
                if i >= 1 && a.index == i && b.index + 1 == i {
                    out.push((Relation::f1(i - 1), Direction::Backward));
                }
            }
        }
        out.retain(|(r, _)| r.licensed_in(category));
        out
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &[Generator]| {
            if s.is_empty() {
                "1".to_string()
            } else {
                s.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
            }
        };
        write!(f, "{}: {} = {}", self.kind, side(&self.lhs), side(&self.rhs))
    }
}

/// Replace the occurrence of one side of `rel` at `pos` by the other side.
pub fn apply_relation(
    w: &BraidWord,
    rel: &Relation,
    pos: usize,
    dir: Direction,
) -> Result<BraidWord> {
    if !rel.licensed_in(w.category()) {
        return Err(Error::CategoryViolation {
            what: format!("relation {}", rel.kind),
            category: w.category(),
        });
    }
    let (from, to) = rel.side(dir);
    let letters = w.letters();
    if pos > letters.len() || letters.len() - pos < from.len() || letters[pos..pos + from.len()] != *from {
        return Err(Error::NoMatch {
            relation: rel.kind.name().to_string(),
            pos,
        });
    }
    let mut out = Vec::with_capacity(letters.len() + to.len());
    out.extend_from_slice(&letters[..pos]);
    out.extend_from_slice(to);
    out.extend_from_slice(&letters[pos + from.len()..]);
    w.with_letters(out)
}

impl BraidWord {
    pub fn apply_relation(&self, rel: &Relation, pos: usize, dir: Direction) -> Result<BraidWord> {
        apply_relation(self, rel, pos, dir)
    }

    /// All relation applications available at any position of this word.
    pub fn relation_sites(&self) -> Vec<(usize, Relation, Direction)> {
        (0..self.len())
            .flat_map(|p| {
                Relation::matches_at(self.letters(), p, self.category())
                    .into_iter()
                    .map(move |(r, d)| (p, r, d))
            })
            .collect()
    }
}
