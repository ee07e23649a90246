use std::process::Command;

use pretri::input::{load_presentation, PresentationFile};
use pretri_core::obstruct::Report;
use pretri_core::prescat::{builtin, BUILTIN_NAMES};

fn pretri(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pretri")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8"))
}

#[test]
fn verify_muro_passes_all_steps() {
    let (code, text) = pretri(&["verify-muro"]);
    assert_eq!(code, 0, "{text}");
    assert!(text.ends_with("15/15 checks passed\n"));
    for id in ["1.R ", "2.R ", "3.theta-tt", "4.exact", "5.p", "5.q", "6.verdict"] {
        assert!(text.contains(&format!("[PASS] {id}")), "{id}");
    }
}

#[test]
fn verify_muro_controls_fail() {
    let (code, text) = pretri(&["verify-muro", "--control", "full-kernel"]);
    assert_eq!(code, 1);
    assert!(text.contains("[INCONCLUSIVE] 6.verdict"));
    let (code, text) = pretri(&["verify-muro", "--control", "drop-r2-relation"]);
    assert_eq!(code, 1);
    assert!(text.contains("[FAIL] 2.R2"));
}

#[test]
fn golden_fragments() {
    let (code, text) = pretri(&["homtable", "builtin:R"]);
    assert_eq!(code, 0);
    assert!(text.contains("Hom(d,t) = Z/4"));
    assert!(text.contains("Hom(t,t) = Z/2 + Z/2 + Z/4"));
    let (_, text) = pretri(&["cone", "[[2]]"]);
    assert_eq!(text, "triangle ([[2]]; (Z/4)^1; u=[[2]]; v=[[2]])\n");
    let (_, text) = pretri(&["massey", "[[2]]", "[[2]]", "[[2]]"]);
    assert!(text.starts_with("{[[2]], [[2]], [[2]]} = {[[1]], [[3]]}\n"));
    let (_, text) = pretri(&["k0"]);
    assert!(text.starts_with("K0 = 0\n"));
    let (_, text) = pretri(&["group", "[[2,0],[0,3]]"]);
    assert!(text.starts_with("Z/6\n") || text.starts_with("Z/2 + Z/3\n"), "{text}");
    let (_, text) = pretri(&["upsilon", "c", "d"]);
    assert_eq!(text, "Upsilon = Z/4\n");
    let (code, _) = pretri(&["karoubi"]);
    assert_eq!(code, 0);
    let (code, text) = pretri(&["karoubi", "builtin:F4"]);
    assert_eq!(code, 0);
    assert!(text.starts_with("x: 2 idempotents"), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(pretri(&["snf", "[[1,2],[3]]"]).0, 2);
    assert_eq!(pretri(&["homtable", "builtin:nope"]).0, 2);
    assert_eq!(pretri(&["massey", "[[1]]", "[[1]]", "[[1]]"]).0, 2);
    assert_eq!(pretri(&["section-search", "builtin:R", "builtin:R2", "--budget", "1"]).0, 3);
    assert_eq!(pretri(&["section-search", "builtin:R", "builtin:R2"]).0, 0);
}

#[test]
fn presentation_files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for name in BUILTIN_NAMES {
        let p = builtin(name).unwrap();
        let file = PresentationFile::from_presentation(&p);
        let text = serde_json::to_string_pretty(&file).unwrap();
        let path = dir.path().join(format!("{name}.json"));
        std::fs::write(&path, &text).unwrap();
        let back = load_presentation(path.to_str().unwrap()).unwrap();
        assert_eq!(back, p, "{name}");
        assert_eq!(serde_json::to_string_pretty(&PresentationFile::from_presentation(&back)).unwrap(), text);
    }
    let path = dir.path().join("R.json");
    let (a, b) = (pretri(&["homtable", path.to_str().unwrap()]), pretri(&["homtable", "builtin:R"]));
    assert_eq!(a, b);
}

#[test]
fn machine_report_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, _) = pretri(&["verify-muro", "--format", "machine", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let report: Report = serde_json::from_str(&text).unwrap();
    assert!(report.all_pass());
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);
}

#[test]
fn verify_muro_is_deterministic() {
    let reference = pretri(&["verify-muro", "--format", "machine", "--threads", "1"]);
    for threads in ["1", "8", "1", "8", "8"] {
        assert_eq!(pretri(&["verify-muro", "--format", "machine", "--threads", threads]), reference);
    }
}
