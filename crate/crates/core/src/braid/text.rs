use super::{BraidCategory, BraidWord, GenKind, Generator};
use crate::error::{Error, Result};

/// Parse `n=<k> [letters...] [cat=<category>]`.
///
/// Letters are `s<i>`, `S<i>`, `v<i>`, `c<i>`. The `n=` header is required;
/// the category defaults to virtual.
pub fn parse_word(text: &str) -> Result<BraidWord> {
    let mut strands: Option<(usize, usize)> = None;
    let mut category: Option<BraidCategory> = None;
    let mut letters: Vec<(usize, Generator)> = Vec::new();

    for (offset, tok) in tokens(text) {
        let err = |message: String| Error::Parse { offset, message };
        if let Some(rest) = tok.strip_prefix("n=") {
            if strands.is_some() {
                return Err(err("duplicate n= header".into()));
            }
            let n: usize = rest
                .parse()
                .map_err(|_| err(format!("bad strand count {rest:?}")))?;
            if n == 0 {
                return Err(err("strand count must be positive".into()));
            }
            strands = Some((n, offset));
        } else if let Some(rest) = tok.strip_prefix("cat=") {
            if category.is_some() {
                return Err(err("duplicate cat= flag".into()));
            }
            category = Some(
                BraidCategory::from_name(rest)
                    .ok_or_else(|| err(format!("unknown category {rest:?}")))?,
            );
        } else {
            let mut chars = tok.chars();
            let kind = match chars.next() {
                Some('s') => GenKind::SigmaPos,
                Some('S') => GenKind::SigmaNeg,
                Some('v') => GenKind::V,
                Some('c') => GenKind::C,
                _ => return Err(err(format!("unexpected token {tok:?}"))),
            };
            let digits = chars.as_str();
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(format!("bad generator {tok:?}")));
            }
            let index: usize = digits
                .parse()
                .map_err(|_| err(format!("generator index too large in {tok:?}")))?;
            letters.push((offset, Generator::new(kind, index)));
        }
    }

    let Some((n, _)) = strands else {
        return Err(Error::Parse {
            offset: text.len(),
            message: "missing n= header".into(),
        });
    };
    let category = category.unwrap_or(BraidCategory::Virtual);
    for &(_, g) in &letters {
        if g.index == 0 || g.index >= n {
            return Err(Error::IndexOutOfRange {
                index: g.index,
                strands: n,
            });
        }
    }
    BraidWord::new(n, letters.into_iter().map(|(_, g)| g).collect(), category)
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = text;
    let mut base = 0;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        base += rest.len() - trimmed.len();
        rest = trimmed;
        if rest.is_empty() {
            return None;
        }
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let tok = &rest[..end];
        let at = base;
        base += end;
        rest = &rest[end..];
        Some((at, tok))
    })
}

pub(super) fn print_word(w: &BraidWord) -> String {
    let mut s = format!("n={}", w.strands());
    for g in w.letters() {
        s.push(' ');
        s.push_str(&g.to_string());
    }
    if w.category() != BraidCategory::Virtual {
        s.push_str(" cat=");
        s.push_str(w.category().name());
    }
    s
}
