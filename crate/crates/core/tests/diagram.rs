use std::fs;
use std::path::PathBuf;

use vbraid::braiding::braid;
use vbraid::diagram::{
    closure, gauss_from_morse, parity_equivalent, render_closure, virtual_parity_between_components,
    GaussCode, MorsePresentation,
};
use vbraid::invariants::{closure_bracket, normalized_bracket, LaurentPoly};
use vbraid::{parse_word, Error};

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn diagrams() -> Vec<(String, MorsePresentation)> {
    let mut out: Vec<_> = fs::read_dir(fixtures().join("diagrams"))
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    out.sort();
    out.into_iter()
        .map(|p| {
            let m = MorsePresentation::from_json(&fs::read_to_string(&p).unwrap()).unwrap();
            (p.file_stem().unwrap().to_string_lossy().into_owned(), m)
        })
        .collect()
}

#[test]
fn fixture_diagrams_validate_and_round_trip() {
    let ds = diagrams();
    assert!(ds.len() >= 10);
    for (name, m) in ds {
        m.validate().unwrap();
        let g = gauss_from_morse(&m).unwrap();
        g.validate().unwrap();
        assert_eq!(GaussCode::from_json(&g.to_json()).unwrap(), g, "{name}");
        assert_eq!(MorsePresentation::from_json(&m.to_json()).unwrap(), m);
    }
}

#[test]
fn virtual_trefoil_is_knotted() {
    let ds = diagrams();
    let (_, m) = ds.iter().find(|(n, _)| n == "virtual-trefoil").unwrap();
    let g = gauss_from_morse(m).unwrap();
    assert_eq!(g.components(), 1);
    assert_eq!(g.crossing_count(), 2);
    let f = normalized_bracket(&g).unwrap();
    assert_ne!(f, LaurentPoly::one());
    let braid_form = closure_bracket(&parse_word("n=2 s1 s1 v1").unwrap()).unwrap();
    assert!(f == braid_form || f == braid_form.substitute_power(-1));
    assert_eq!(closure_bracket(&braid(m).unwrap()).unwrap(), f);
}

#[test]
fn closure_rendering_agrees_with_direct_closure() {
    for t in ["n=3 s1 v2 S1", "n=2 s1 s1", "n=4 v1 v2 v3 s1", "n=1"] {
        let w = parse_word(t).unwrap();
        assert_eq!(gauss_from_morse(&render_closure(&w)).unwrap(), closure(&w));
    }
}

#[test]
fn malformed_diagrams_are_rejected() {
    let bad = r#"{"format":"vbraid-1","strands":1,"slices":[{"event":"cross","pos":1,"sign":"+"}]}"#;
    assert!(matches!(
        MorsePresentation::from_json(bad).and_then(|m| m.validate()),
        Err(Error::MalformedDiagram { .. })
    ));
    assert!(MorsePresentation::from_json("{").is_err());
}

#[test]
fn flat_parity_of_h_link() {
    let text = fs::read_to_string(fixtures().join("words/h-link.txt")).unwrap();
    let w = parse_word(text.trim()).unwrap();
    let g = closure(&w);
    assert_eq!(g.components(), 2);
    let p = virtual_parity_between_components(&g).unwrap();
    assert_eq!(p.get(&(0, 1)), Some(&1));
    let unlink = closure(&parse_word("n=2 cat=flat").unwrap());
    assert!(!parity_equivalent(&g, &unlink).unwrap());
    let mut stripped = g.clone();
    stripped.virtual_record = None;
    assert!(matches!(virtual_parity_between_components(&stripped), Err(Error::MissingVirtualRecord)));
}
