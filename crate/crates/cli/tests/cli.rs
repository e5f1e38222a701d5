use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn k2res(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_k2res")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = k2res(&all);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid json")
}

fn section<'a>(report: &'a Value, title: &str) -> &'a Value {
    report["sections"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["title"] == title)
        .unwrap_or_else(|| panic!("no section '{title}'"))
}

fn betti(report: &Value, title: &str) -> Vec<(u64, u64, u64)> {
    section(report, title)["betti"]["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["i"].as_u64().unwrap(), e["j"].as_u64().unwrap(), e["dim"].as_u64().unwrap()))
        .collect()
}

#[test]
fn corpus_only_runs_the_selected_item() {
    let o = k2res(&["corpus", "--only", "8.1"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.contains("L8.1"));
    assert!(!out.contains("Ex7.1"));
    assert!(out.contains("1 passed, 0 known failures, 0 failed, 0 errors"));
}

#[test]
fn unmatched_corpus_filter_is_a_parse_error() {
    let o = k2res(&["corpus", "--only", "no-such-item"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn resolve_trivial_module_of_face_ring() {
    let alg = data("C.alg");
    let args = ["resolve", "--algebra", &alg, "--max-hom", "5", "--max-deg", "5"];
    let report = json(&args);
    let entries = betti(&report, "Betti table");
    for want in [(0, 0, 1), (1, 1, 5), (2, 3, 2), (3, 5, 1), (4, 5, 20), (5, 5, 1)] {
        assert!(entries.contains(&want), "missing {want:?} in {entries:?}");
    }
    let euler = section(&report, "Euler/Hilbert identity");
    assert_eq!(euler["implications"][0]["violated"], false);

    // the text rendering is built from the same numbers
    let text = stdout(&k2res(&args));
    let row4 = text.lines().find(|l| l.trim_start().starts_with("i=4")).unwrap();
    assert!(row4.split_whitespace().any(|c| c == "20"));
}

#[test]
fn resolve_ideal_and_zero_ideal() {
    let s6 = data("S6.alg");
    let j = format!("ideal:{}", data("J.ideal"));
    let report = json(&["resolve", "--algebra", &s6, "--module", &j]);
    assert_eq!(betti(&report, "Betti table"), vec![(0, 3, 2), (1, 5, 1)]);

    let zero = format!("ideal:{}", data("zero.ideal"));
    let report = json(&["resolve", "--algebra", &s6, "--module", &zero]);
    assert!(betti(&report, "Betti table").is_empty());
    assert_eq!(section(&report, "essential products")["verdict"]["outcome"], "holds");
}

#[test]
fn resolve_quotient_of_ideals() {
    let s6 = data("S6.alg");
    let q = format!("quotient:{},{}", data("I72.ideal"), data("J72.ideal"));
    let report = json(&["resolve", "--algebra", &s6, "--module", &q]);
    assert_eq!(betti(&report, "Betti table"), vec![(0, 3, 1), (1, 5, 1)]);
}

#[test]
fn hollow_triangle() {
    let report = json(&["analyze-complex", &data("hollow_triangle.complex")]);
    let dual = &section(&report, "Alexander dual properties")["flags"];
    assert_eq!(dual["cohen_macaulay"], true);
    assert_eq!(betti(&report, "Betti table of the ideal"), vec![(0, 3, 1)]);
    assert_eq!(section(&report, "ideal as a module")["verdict"]["outcome"], "holds");
    assert_eq!(section(&report, "face ring")["verdict"]["outcome"], "holds");
}

#[test]
fn sequentially_cm_dual() {
    let report = json(&["analyze-complex", &data("seq_cm.complex")]);
    let dual = &section(&report, "Alexander dual properties")["flags"];
    assert_eq!(dual["sequentially_cm"], true);
    assert_eq!(dual["cohen_macaulay"], false);
    assert_eq!(section(&report, "ideal as a module")["verdict"]["outcome"], "holds");
    assert_eq!(section(&report, "ideal components")["verdict"]["outcome"], "holds");
    let violated = section(&report, "implications")["implications"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|i| i["violated"] == true)
        .count();
    assert_eq!(violated, 0);
}

#[test]
fn rationals_and_other_primes_agree() {
    let s6 = data("S6.alg");
    let j = format!("ideal:{}", data("J.ideal"));
    let reference = betti(&json(&["resolve", "--algebra", &s6, "--module", &j]), "Betti table");
    for field in ["q", "gf:101"] {
        let report = json(&["resolve", "--algebra", &s6, "--module", &j, "--field", field]);
        assert_eq!(betti(&report, "Betti table"), reference, "{field}");
    }
}

#[test]
fn exit_codes() {
    let s6 = data("S6.alg");
    assert_eq!(k2res(&["analyze-complex", "/no/such/file"]).status.code(), Some(1));
    assert_eq!(k2res(&["resolve", "--algebra", &data("J.ideal")]).status.code(), Some(2));
    assert_eq!(k2res(&["resolve", "--algebra", &s6, "--field", "gf:12"]).status.code(), Some(2));
    assert_eq!(k2res(&["resolve", "--algebra", &s6, "--module", "bogus"]).status.code(), Some(2));

    // a generator above the degree bound
    let j = format!("ideal:{}", data("J.ideal"));
    let o = k2res(&["resolve", "--algebra", &s6, "--module", &j, "--max-deg", "2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--max-deg"));
}
