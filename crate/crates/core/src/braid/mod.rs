//! Braid words over the virtual, flat, welded and unrestricted braid groups.
//!
//! Indices are 1-based (`s1` acts on strands 1 and 2) and words are read
//! top to bottom, so `a.compose(&b)` places `a` above `b`.

mod perm;
pub mod random;
mod relation;
mod text;

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use perm::Permutation;
pub use relation::{apply_relation, Direction, Relation, RelationKind};
pub use text::parse_word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BraidCategory {
    Virtual,
    Flat,
    Welded,
    Unrestricted,
}

impl BraidCategory {
    pub fn name(self) -> &'static str {
        match self {
            BraidCategory::Virtual => "virtual",
            BraidCategory::Flat => "flat",
            BraidCategory::Welded => "welded",
            BraidCategory::Unrestricted => "unrestricted",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "virtual" => Some(BraidCategory::Virtual),
            "flat" => Some(BraidCategory::Flat),
            "welded" => Some(BraidCategory::Welded),
            "unrestricted" => Some(BraidCategory::Unrestricted),
            _ => None,
        }
    }

    pub fn is_flat(self) -> bool {
        self == BraidCategory::Flat
    }
}

impl fmt::Display for BraidCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    SigmaPos,
    SigmaNeg,
    V,
    C,
}

/// A single letter: `σᵢ`, `σᵢ⁻¹`, `vᵢ` or the flat crossing `cᵢ`.
/// Serialized in its text form (`s1`, `S1`, `v1`, `c1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    pub kind: GenKind,
    pub index: usize,
}

impl Generator {
    pub const fn new(kind: GenKind, index: usize) -> Self {
        Generator { kind, index }
    }

    pub const fn s(index: usize) -> Self {
        Self::new(GenKind::SigmaPos, index)
    }

    pub const fn s_inv(index: usize) -> Self {
        Self::new(GenKind::SigmaNeg, index)
    }

    pub const fn v(index: usize) -> Self {
        Self::new(GenKind::V, index)
    }

    pub const fn c(index: usize) -> Self {
        Self::new(GenKind::C, index)
    }

    /// `σᵢ^{±1}` by sign.
    pub fn sigma(index: usize, positive: bool) -> Self {
        if positive {
            Self::s(index)
        } else {
            Self::s_inv(index)
        }
    }

    pub fn inverse(self) -> Self {
        let kind = match self.kind {
            GenKind::SigmaPos => GenKind::SigmaNeg,
            GenKind::SigmaNeg => GenKind::SigmaPos,
            k => k,
        };
        Generator { kind, ..self }
    }

    pub fn is_real(self) -> bool {
        matches!(self.kind, GenKind::SigmaPos | GenKind::SigmaNeg)
    }

    pub fn is_virtual(self) -> bool {
        self.kind == GenKind::V
    }

    pub fn is_flat(self) -> bool {
        self.kind == GenKind::C
    }

    /// Classical or flat: the letters that show up in a Gauss code.
    pub fn is_crossing(self) -> bool {
        self.kind != GenKind::V
    }

    pub fn writhe(self) -> i64 {
        match self.kind {
            GenKind::SigmaPos => 1,
            GenKind::SigmaNeg => -1,
            _ => 0,
        }
    }

    pub fn with_index(self, index: usize) -> Self {
        Generator { index, ..self }
    }

    pub fn licensed_in(self, category: BraidCategory) -> bool {
        match self.kind {
            GenKind::V => true,
            GenKind::C => category.is_flat(),
            GenKind::SigmaPos | GenKind::SigmaNeg => !category.is_flat(),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            GenKind::SigmaPos => 's',
            GenKind::SigmaNeg => 'S',
            GenKind::V => 'v',
            GenKind::C => 'c',
        };
        write!(f, "{c}{}", self.index)
    }
}

/// Serialized in its text form, e.g. `"n=3 s1 v2 S1"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Generator>,
    category: BraidCategory,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Generator>, category: BraidCategory) -> Result<Self> {
        if strands == 0 {
            return Err(Error::IndexOutOfRange { index: 0, strands });
        }
        for &g in &letters {
            check_letter(g, strands, category)?;
        }
        Ok(BraidWord {
            strands,
            letters,
            category,
        })
    }

    pub fn identity(strands: usize, category: BraidCategory) -> Self {
        BraidWord {
            strands: strands.max(1),
            letters: Vec::new(),
            category,
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn category(&self) -> BraidCategory {
        self.category
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same strands and category, different letters. Letters are validated.
    pub fn with_letters(&self, letters: Vec<Generator>) -> Result<Self> {
        BraidWord::new(self.strands, letters, self.category)
    }

    pub(crate) fn from_parts_unchecked(
        strands: usize,
        letters: Vec<Generator>,
        category: BraidCategory,
    ) -> Self {
        debug_assert!(letters
            .iter()
            .all(|g| check_letter(*g, strands, category).is_ok()));
        BraidWord {
            strands,
            letters,
            category,
        }
    }

    pub fn with_category(&self, category: BraidCategory) -> Result<Self> {
        BraidWord::new(self.strands, self.letters.clone(), category)
    }

    /// Cancel adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<Generator> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if out.last() == Some(&g.inverse()) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        BraidWord {
            letters: out,
            ..self.clone()
        }
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|g| g.writhe()).sum()
    }

    /// Where each top position ends up at the bottom.
    pub fn permutation(&self) -> Permutation {
        let mut pos: Vec<usize> = (1..=self.strands).collect();
        for g in &self.letters {
            for p in pos.iter_mut() {
                if *p == g.index {
                    *p = g.index + 1;
                } else if *p == g.index + 1 {
                    *p = g.index;
                }
            }
        }
        Permutation::from_images(pos)
    }

    /// Add an identity strand on the right.
    pub fn include_right(&self) -> BraidWord {
        BraidWord {
            strands: self.strands + 1,
            ..self.clone()
        }
    }

    /// Add an identity strand on the left, shifting every index by one (`i(b)`).
    pub fn shift_left(&self) -> BraidWord {
        BraidWord {
            strands: self.strands + 1,
            letters: self.letters.iter().map(|g| g.with_index(g.index + 1)).collect(),
            category: self.category,
        }
    }

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        if self.category != other.category {
            return Err(Error::CategoryMismatch(self.category, other.category));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            letters,
            ..self.clone()
        })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
            ..self.clone()
        }
    }

    /// Append letters after validating them.
    pub fn append(&self, tail: &[Generator]) -> Result<BraidWord> {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(tail);
        self.with_letters(letters)
    }

    pub fn count_virtual(&self) -> usize {
        self.letters.iter().filter(|g| g.is_virtual()).count()
    }

    pub fn count_crossings(&self) -> usize {
        self.letters.iter().filter(|g| g.is_crossing()).count()
    }

    pub fn max_index(&self) -> usize {
        self.letters.iter().map(|g| g.index).max().unwrap_or(0)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::print_word(self))
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            offset: 0,
            message: format!("bad generator {s:?}"),
        };
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('s') => GenKind::SigmaPos,
            Some('S') => GenKind::SigmaNeg,
            Some('v') => GenKind::V,
            Some('c') => GenKind::C,
            _ => return Err(bad()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index: usize = digits.parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        Ok(Generator::new(kind, index))
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_word(&s).map_err(de::Error::custom)
    }
}

fn check_letter(g: Generator, strands: usize, category: BraidCategory) -> Result<()> {
    if g.index == 0 || g.index >= strands {
        return Err(Error::IndexOutOfRange {
            index: g.index,
            strands,
        });
    }
    if !g.licensed_in(category) {
        return Err(Error::CategoryViolation {
            what: format!("generator {g}"),
            category,
        });
    }
    Ok(())
}
