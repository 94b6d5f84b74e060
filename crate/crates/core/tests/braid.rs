use proptest::prelude::*;
use vbraid::diagram::closure;
use vbraid::invariants::{bracket_state_sum, closure_bracket};
use vbraid::{parse_word, BraidCategory, BraidWord, Direction, Error, GenKind, Generator};

fn arb_word(cat: BraidCategory) -> impl Strategy<Value = BraidWord> {
    let kinds: Vec<GenKind> = match cat {
        BraidCategory::Flat => vec![GenKind::C, GenKind::V],
        _ => vec![GenKind::SigmaPos, GenKind::SigmaNeg, GenKind::V],
    };
    (1usize..=4).prop_flat_map(move |n| {
        let kinds = kinds.clone();
        let letter = (0..kinds.len(), 1..n.max(2)).prop_map(move |(k, i)| Generator::new(kinds[k], i));
        let len = if n == 1 { 0..=0 } else { 0..=10 };
        proptest::collection::vec(letter, len)
            .prop_map(move |ls| BraidWord::new(n, ls, cat).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn text_round_trip(w in arb_word(BraidCategory::Virtual)) {
        let t = w.to_string();
        prop_assert_eq!(parse_word(&t).unwrap(), w.clone());
        let spaced = t.replace(' ', "   ");
        prop_assert_eq!(parse_word(&spaced).unwrap(), w);
    }

    #[test]
    fn relations_preserve_raw_bracket(w in arb_word(BraidCategory::Virtual)) {
        let before = bracket_state_sum(&closure(&w)).unwrap();
        for (pos, rel, dir) in w.relation_sites() {
            let after = w.apply_relation(&rel, pos, dir).unwrap();
            prop_assert_eq!(&bracket_state_sum(&closure(&after)).unwrap(), &before, "{}", rel);
            prop_assert_eq!(after.apply_relation(&rel, pos, dir.reverse()).unwrap(), w.clone());
        }
    }

    #[test]
    fn relations_preserve_permutation(w in arb_word(BraidCategory::Unrestricted)) {
        for (pos, rel, dir) in w.relation_sites() {
            let after = w.apply_relation(&rel, pos, dir).unwrap();
            prop_assert_eq!(after.permutation(), w.permutation());
        }
    }

    #[test]
    fn inverse_word_cancels(w in arb_word(BraidCategory::Virtual)) {
        let id = w.compose(&w.invert()).unwrap().free_reduce();
        prop_assert!(id.is_empty());
        prop_assert_eq!(closure_bracket(&w.invert()).unwrap().substitute_power(-1), closure_bracket(&w).unwrap());
    }
}

#[test]
fn parse_errors() {
    assert!(matches!(parse_word("n=2 s5"), Err(Error::IndexOutOfRange { index: 5, strands: 2 })));
    assert!(matches!(parse_word("s1"), Err(Error::Parse { .. })));
    assert!(matches!(parse_word("n=2 x1"), Err(Error::Parse { offset: 4, .. })));
    assert!(matches!(parse_word("n=2 c1"), Err(Error::CategoryViolation { .. })));
    let w = parse_word("n=2 c1 cat=flat").unwrap();
    assert_eq!(w.category(), BraidCategory::Flat);
    assert_eq!(w.to_string(), "n=2 c1 cat=flat");
}

#[test]
fn permutation_conventions() {
    let w = parse_word("n=3 s1 v2").unwrap();
    assert_eq!(w.permutation().images(), &[3, 1, 2]);
    let t = parse_word("n=3 S2 v1 s2").unwrap();
    assert_eq!(t.permutation().cycle_count(), 2);
}

#[test]
fn welded_relations_only_in_their_categories() {
    let w = parse_word("n=3 v1 s2 s1").unwrap();
    assert!(!w.relation_sites().iter().any(|(_, r, _)| r.name() == "F1"));
    let welded = w.with_category(BraidCategory::Welded).unwrap();
    let (pos, rel, dir) = welded
        .relation_sites()
        .into_iter()
        .find(|(_, r, _)| r.name() == "F1")
        .unwrap();
    assert_eq!(dir, Direction::Forward);
    assert_eq!(welded.apply_relation(&rel, pos, dir).unwrap().to_string(), "n=3 s2 s1 v2 cat=welded");
}
