use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn vbraid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vbraid"))
        .args(args)
        .current_dir(root())
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = vbraid(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

const GOLDEN: &[(&str, &[&str])] = &[
    ("invariant-s1", &["invariant", "--word", "n=2 s1", "--model", "bracket", "--json"]),
    ("invariant-oracle", &["invariant", "--word", "n=2 s1 s1 v1", "--model", "bracket", "--oracle"]),
    ("invariant-file-model", &["invariant", "--word", "n=3 s1 v2 S1", "--model", "fixtures/models/swap.json", "--json"]),
    ("close-s1s2", &["close", "--word", "n=3 s1 s2"]),
    ("close-morse", &["close", "--word", "n=2 s1 v1", "--morse"]),
    ("flat-parity-h-link", &["flat-parity", "--word", "n=2 c1 v1 cat=flat"]),
    ("flat-parity-example", &["flat-parity", "--word", "n=2 v1 c1 v1 c1 cat=flat"]),
    ("normalize", &["normalize", "--word", "n=3 v1 s2 v1 v2 S1 v2"]),
    ("braid-virtual-trefoil", &["braid", "--in", "fixtures/diagrams/virtual-trefoil.json"]),
    ("braid-hopf-reversed", &["braid", "--in", "fixtures/diagrams/hopf-reversed.json"]),
    ("move-thread", &["move", "--op", "thread-right-under", "--word", "n=2 v1"]),
    ("move-conjugate", &["move", "--op", "conjugate", "--gen", "s1", "--word", "n=2 v1", "--json"]),
    ("move-lv", &["move", "--op", "lv-insert", "--kind", "real+", "--gap", "1", "--strand", "1", "--word", "n=2 s1 s1"]),
    ("replay-fig37", &["replay", "--script", "fig37", "--word", "n=2 s1"]),
    ("replay-threading", &["replay", "--script", "threading-from-kamada", "--word", "n=2"]),
    ("search-lv-only", &["search", "--from", "n=2 v1", "--to", "n=2 S1 v1 s1", "--moves", "lv-only", "--depth", "4", "--budget", "2000000"]),
    ("search-theorem3", &["search", "--moves", "theorem3"]),
    ("check-model-bracket", &["check-model", "bracket"]),
    ("axiom-report-identity", &["axiom-report", "--model", "identity", "--max-strands", "2", "--max-len", "3"]),
];

#[test]
fn golden_outputs() {
    let bless = std::env::var_os("VBRAID_BLESS").is_some();
    for (name, args) in GOLDEN {
        let got = stdout(args);
        assert_eq!(stdout(args), got, "{name} is not deterministic");
        let path = root().join(format!("fixtures/golden/{name}.out"));
        if bless {
            fs::create_dir_all(path.parent().unwrap()).unwrap();
            fs::write(&path, &got).unwrap();
        } else {
            let want = fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {name}"));
            assert_eq!(got, want, "{name}");
        }
    }
}

#[test]
fn fig37_fixture_matches_replay() {
    let want = fs::read_to_string(root().join("fixtures/scripts/fig37.json")).unwrap();
    assert_eq!(stdout(&["replay", "--script", "fig37", "--word", "n=2 s1"]), want);
    let out = stdout(&["replay", "--path", "fixtures/scripts/fig37.json"]);
    assert!(out.starts_with("valid:"));
}

#[test]
fn braid_writes_output_file() {
    let dir = std::env::temp_dir().join(format!("vbraid-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let out = dir.join("w.txt");
    let o = out.to_str().unwrap();
    stdout(&["braid", "--in", "fixtures/diagrams/trefoil.json", "--out", o]);
    assert_eq!(fs::read_to_string(&out).unwrap().trim(), "n=2 s1 s1 s1");
    let a = stdout(&["braid", "--in", "fixtures/diagrams/mixed-link.json", "--seed", "1"]);
    assert!(a.starts_with("n="));
    fs::remove_dir_all(dir).ok();
}

#[test]
fn exit_codes() {
    assert_eq!(vbraid(&["invariant", "--word", "n=2 s5"]).status.code(), Some(1));
    assert_eq!(vbraid(&["move", "--op", "thread-right-under", "--word", "n=2 s1 cat=welded"]).status.code(), Some(1));
    assert_eq!(vbraid(&["invariant", "--word", "n=2 c1 cat=flat"]).status.code(), Some(1));
    assert_eq!(vbraid(&["bogus"]).status.code(), Some(2));
    assert_eq!(vbraid(&["move", "--op", "conjugate", "--word", "n=2 v1"]).status.code(), Some(2));
    assert_eq!(vbraid(&["replay", "--script", "nope", "--word", "n=2"]).status.code(), Some(2));
    assert_eq!(vbraid(&["search", "--moves", "nope"]).status.code(), Some(2));
    assert_eq!(vbraid(&["braid", "--in", "does-not-exist.json"]).status.code(), Some(1));
}

#[test]
fn invariant_json_shape() {
    let out = stdout(&["invariant", "--word", "n=2 s1", "--model", "bracket", "--json"]);
    assert_eq!(out.trim(), r#"{"invar":"1"}"#);
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["close", "--word", "n=3 s1 s2"])).unwrap();
    assert_eq!(v["components"].as_array().unwrap().len(), 1);
}
