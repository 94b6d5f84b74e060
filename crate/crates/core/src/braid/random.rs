//! Seeded random words for tests and experiments.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{BraidCategory, BraidWord, GenKind, Generator};

pub const DEFAULT_SEED: u64 = 0x5eed_b4a1d;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Letter kinds a random word may use in the given category.
pub fn letter_kinds(category: BraidCategory) -> &'static [GenKind] {
    match category {
        BraidCategory::Flat => &[GenKind::C, GenKind::V],
        _ => &[GenKind::SigmaPos, GenKind::SigmaNeg, GenKind::V],
    }
}

pub fn random_letter<R: Rng + ?Sized>(rng: &mut R, strands: usize, category: BraidCategory) -> Generator {
    let kinds = letter_kinds(category);
    let kind = kinds[rng.gen_range(0..kinds.len())];
    Generator::new(kind, rng.gen_range(1..strands))
}

/// A uniformly random word of exactly `len` letters (empty if `strands == 1`).
pub fn random_word<R: Rng + ?Sized>(
    rng: &mut R,
    strands: usize,
    len: usize,
    category: BraidCategory,
) -> BraidWord {
    let letters = if strands < 2 {
        Vec::new()
    } else {
        (0..len)
            .map(|_| random_letter(rng, strands, category))
            .collect()
    };
    BraidWord::from_parts_unchecked(strands.max(1), letters, category)
}

/// Random strand count in `1..=max_strands` and length in `0..=max_len`.
pub fn random_small_word<R: Rng + ?Sized>(
    rng: &mut R,
    max_strands: usize,
    max_len: usize,
    category: BraidCategory,
) -> BraidWord {
    let n = rng.gen_range(1..=max_strands.max(1));
    let len = rng.gen_range(0..=max_len);
    random_word(rng, n, len, category)
}
