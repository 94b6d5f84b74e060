//! Regenerate the fixture corpus: `cargo run -p vbraid --example gen_fixtures [dir]`.

use std::fs;
use std::path::Path;

use vbraid::diagram::{render_closure_closed, CrossingSign, Event, MorsePresentation, Orient};
use vbraid::invariants::RMatrixModel;
use vbraid::moves::exchange_right;
use vbraid::moves::scripts::replay_derivation;
use vbraid::parse_word;

fn hand_drawn() -> Vec<(&'static str, MorsePresentation)> {
    use Event::*;
    use Orient::*;
    vec![
        (
            "unknot",
            MorsePresentation::new(0, vec![Cup { pos: 1, orient: DownUp }, Cap { pos: 1, orient: DownUp }]),
        ),
        (
            "virtual-curl",
            MorsePresentation::new(
                0,
                vec![Cup { pos: 1, orient: DownUp }, VCross { pos: 1 }, Cap { pos: 1, orient: UpDown }],
            ),
        ),
        (
            "virtual-trefoil",
            MorsePresentation::new(
                0,
                vec![
                    Cup { pos: 1, orient: DownUp },
                    Cup { pos: 3, orient: UpDown },
                    Cross { pos: 2, sign: CrossingSign::Pos },
                    Cross { pos: 2, sign: CrossingSign::Pos },
                    VCross { pos: 2 },
                    Cap { pos: 1, orient: DownUp },
                    Cap { pos: 1, orient: UpDown },
                ],
            ),
        ),
        (
            "virtual-hopf-up",
            MorsePresentation::new(
                0,
                vec![
                    Cup { pos: 1, orient: DownUp },
                    Cup { pos: 3, orient: DownUp },
                    Cross { pos: 2, sign: CrossingSign::Neg },
                    VCross { pos: 2 },
                    Cap { pos: 1, orient: DownUp },
                    Cap { pos: 1, orient: DownUp },
                ],
            ),
        ),
    ]
}

const RENDERED: &[(&str, &str, &[usize])] = &[
    ("trefoil", "n=2 s1 s1 s1", &[]),
    ("figure-eight", "n=3 s1 S2 s1 S2", &[]),
    ("hopf-reversed", "n=2 s1 s1", &[1]),
    ("virtual-trefoil-braid", "n=2 s1 s1 v1", &[]),
    ("kishino-like", "n=3 s1 v2 S1 S2 v1 s2", &[]),
    ("virtual-whitehead", "n=3 s1 v2 s1 v2 S1", &[0]),
    ("mixed-link", "n=3 s1 v2 v1 s2 S1", &[1]),
    ("three-unlink-virtual", "n=3 v1 v2 v1", &[0, 2]),
];

fn write(path: &Path, text: &str) {
    fs::create_dir_all(path.parent().unwrap()).unwrap();
    fs::write(path, text).unwrap();
}

fn main() {
    let root = std::env::args().nth(1).unwrap_or_else(|| "fixtures".into());
    let root = Path::new(&root);
    for (name, m) in hand_drawn() {
        m.validate().unwrap();
        write(&root.join(format!("diagrams/{name}.json")), &(m.to_json_pretty() + "\n"));
    }
    for (name, word, rev) in RENDERED {
        let m = render_closure_closed(&parse_word(word).unwrap())
            .reverse_components(rev)
            .unwrap();
        write(&root.join(format!("diagrams/{name}.json")), &(m.to_json_pretty() + "\n"));
    }
    write(&root.join("words/h-link.txt"), "n=2 c1 v1 cat=flat\n");
    let mut lines = String::new();
    for (b1, b2) in [
        ("n=1", "n=1"),
        ("n=2 s1", "n=2 v1"),
        ("n=2 v1 S1", "n=2 s1"),
        ("n=3 s1 v2", "n=3 v1 S2 s1"),
        ("n=3 s2 s2", "n=3 s1 v2"),
        ("n=3 v1 s2 S1", "n=3 S1"),
    ] {
        let (real, virt) = exchange_right(&parse_word(b1).unwrap(), &parse_word(b2).unwrap()).unwrap();
        lines.push_str(&format!("{real} | {virt}\n"));
    }
    write(&root.join("kamada/exchange.txt"), &lines);
    let p = replay_derivation("fig37", &parse_word("n=2 s1").unwrap()).unwrap();
    write(&root.join("scripts/fig37.json"), &(p.to_json() + "\n"));
    for name in ["bracket", "swap", "identity"] {
        let m = RMatrixModel::builtin(name).unwrap();
        write(&root.join(format!("models/{name}.json")), &(m.to_json() + "\n"));
    }
}
