use std::fs;
use std::path::PathBuf;

use vbraid::diagram::{GaussCode, MorsePresentation};
use vbraid::invariants::{LaurentPoly, RMatrixModel};
use vbraid::moves::MovePath;
use vbraid::parse_word;

fn seeds(target: &str) -> Vec<(PathBuf, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .map(|p| {
            let text = fs::read_to_string(&p).unwrap();
            (p, text)
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds in {target}");
    out
}

#[test]
fn fuzz_seeds_parse() {
    for (p, t) in seeds("word_text") {
        parse_word(&t).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
    }
    for (p, t) in seeds("morse_json") {
        let m = MorsePresentation::from_json(&t).unwrap();
        m.validate().unwrap_or_else(|e| panic!("{}: {e}", p.display()));
    }
    for (p, t) in seeds("gauss_json") {
        let g = GaussCode::from_json(&t).unwrap();
        g.validate().unwrap_or_else(|e| panic!("{}: {e}", p.display()));
    }
    for (p, t) in seeds("model_json") {
        RMatrixModel::from_json(&t).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
    }
    for (p, t) in seeds("laurent_poly") {
        LaurentPoly::parse(&t).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
    }
    for (p, t) in seeds("move_path_json") {
        MovePath::from_json(&t).unwrap_or_else(|e| panic!("{}: {e}", p.display()));
    }
}
