use proptest::prelude::*;
use vbraid::braid::random::{random_word, seeded_rng};
use vbraid::invariants::*;
use vbraid::{parse_word, BraidCategory, BraidWord, Error, GenKind, Generator};

fn poly(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn arb_classical() -> impl Strategy<Value = BraidWord> {
    (2usize..=3).prop_flat_map(|n| {
        let letter = (any::<bool>(), 1..n).prop_map(|(p, i)| Generator::sigma(i, p));
        proptest::collection::vec(letter, 0..=6)
            .prop_map(move |ls| BraidWord::new(n, ls, BraidCategory::Virtual).unwrap())
    })
}

fn arb_virtual() -> impl Strategy<Value = BraidWord> {
    (2usize..=3).prop_flat_map(|n| {
        let kinds = [GenKind::SigmaPos, GenKind::SigmaNeg, GenKind::V];
        let letter = (0usize..3, 1..n).prop_map(move |(k, i)| Generator::new(kinds[k], i));
        proptest::collection::vec(letter, 0..=6)
            .prop_map(move |ls| BraidWord::new(n, ls, BraidCategory::Virtual).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_model_matches_state_sum_on_classical_words(w in arb_classical()) {
        let m = RMatrixModel::bracket();
        let inv = trace_invariant(&w, &m).unwrap();
        prop_assert_eq!(inv, &loop_value() * &closure_bracket(&w).unwrap());
        let q = normalized_invariant(&w, &m).unwrap();
        prop_assert!(q.is_polynomial());
        prop_assert_eq!(q.num, closure_bracket(&w).unwrap());
    }

    #[test]
    fn swap_model_counts_components(w in arb_virtual()) {
        let m = RMatrixModel::swap(2);
        let t = trace(&w, &m).unwrap();
        let comps = vbraid::diagram::closure(&w).components() as u32;
        prop_assert_eq!(t, LaurentPoly::constant(2i64.pow(comps)));
    }

    #[test]
    fn poly_display_parse_round_trip(terms in proptest::collection::vec((-8i32..8, -5i64..5), 0..6)) {
        let p = LaurentPoly::from_terms('A', terms);
        prop_assert_eq!(poly(&p.to_string()), p);
    }
}

#[test]
fn bracket_examples() {
    assert_eq!(closure_bracket(&parse_word("n=2 s1").unwrap()).unwrap(), LaurentPoly::one());
    assert_eq!(
        closure_bracket(&parse_word("n=2 s1 s1 s1").unwrap()).unwrap(),
        poly("A^-4 + A^-12 - A^-16")
    );
    assert!(matches!(
        closure_bracket(&parse_word("n=2 c1 cat=flat").unwrap()),
        Err(Error::FlatCrossingPresent)
    ));
}

#[test]
fn model_checks() {
    let b = check_model(&RMatrixModel::bracket());
    for name in ["R*Rinv=I", "YBE(R)", "YBE(V)", "V*V=I", "mixed-detour", "hecke-quadratic"] {
        assert_eq!(b.get(name), Some(true), "{name}");
    }
    assert_eq!(b.get("F1"), Some(false));
    let s = check_model(&RMatrixModel::swap(2));
    assert!(s.checks.iter().all(|c| c.passed));
    assert!(s.certifies(BraidCategory::Unrestricted));
    let w = parse_word("n=3 v1 s2 s1 cat=welded").unwrap();
    assert!(matches!(rho(&w, &RMatrixModel::bracket()), Err(Error::CategoryModelMismatch(_))));
    assert!(rho(&w, &RMatrixModel::swap(2)).is_ok());
}

#[test]
fn model_json_round_trip_and_corruption() {
    let m = RMatrixModel::bracket();
    let back = RMatrixModel::from_json(&m.to_json()).unwrap();
    assert_eq!(back, m);
    let mut v: serde_json::Value = serde_json::from_str(&m.to_json()).unwrap();
    v["R"][0][0] = serde_json::Value::String("1".into());
    let broken = v.to_string();
    let rep = RMatrixModel::from_json(&broken).map(|x| check_model(&x));
    assert!(rep.map(|r| !r.core_passed()).unwrap_or(true));
}

#[test]
fn dimension_budget() {
    let w = BraidWord::identity(7, BraidCategory::Virtual);
    assert!(matches!(
        rho_with_budget(&w, &RMatrixModel::bracket(), 64),
        Err(Error::DimensionBudgetExceeded { dim: 128, budget: 64 })
    ));
}

#[test]
fn cyclicity_on_random_pairs() {
    let mut rng = seeded_rng(17);
    let m = RMatrixModel::bracket();
    for _ in 0..50 {
        let a = random_word(&mut rng, 3, 4, BraidCategory::Virtual);
        let b = random_word(&mut rng, 3, 4, BraidCategory::Virtual);
        assert_eq!(
            trace(&a.compose(&b).unwrap(), &m).unwrap(),
            trace(&b.compose(&a).unwrap(), &m).unwrap()
        );
    }
}

#[test]
fn identity_model_report() {
    let r = markov_axiom_report(&RMatrixModel::identity(2), &AxiomConfig::default()).unwrap();
    assert_eq!(r.rules.len(), 6);
    for rule in &r.rules {
        assert_eq!(rule.status, RuleStatus::Holds, "rule {}", rule.rule);
        if rule.rule > 2 {
            assert_eq!(rule.constant.as_deref(), Some("1"));
        }
    }
}
