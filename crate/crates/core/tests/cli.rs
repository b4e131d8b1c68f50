use ptb_cr::cli::{certify_many, run};
use ptb_cr::flipword::{canonical_words, parse_word};
use ptb_cr::realise::{certify, MirrorPolicy};
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut argv = vec!["ptb-cr"];
    argv.extend_from_slice(args);
    let status = run(argv, &mut out);
    (status, String::from_utf8(out).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (s, out) = call(args);
    (s, serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}")))
}

fn error_code(v: &Value) -> &str {
    v["error"]["code"].as_str().unwrap()
}

#[test]
fn certify_figure_eight() {
    let (s, v) = json(&["certify", "--word", "RL"]);
    assert_eq!(s, 0);
    assert_eq!(v["schema"], 1);
    let edges = v["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 3);
    let rams: Vec<u64> = edges.iter().map(|e| e["ramification"].as_u64().unwrap()).collect();
    assert_eq!(rams, vec![1, 1, 2]);
    assert!(edges.iter().all(|e| e["trivial"] == true));
    assert_eq!(v["representation"]["M_tau"].as_array().unwrap().len(), 3);
}

#[test]
fn invalid_inputs_use_the_envelope() {
    let cases: &[(&[&str], &str)] = &[
        (&["certify", "--matrix", "1,1,0,1"], "NOT_HYPERBOLIC"),
        (&["certify", "--matrix", "2,1,1,2"], "NOT_UNIMODULAR"),
        (&["certify", "--matrix", "1,2,3"], "BAD_MATRIX"),
        (&["triangulate", "--word", "RRR"], "MISSING_L"),
        (&["triangulate", "--word", "RXL"], "BAD_CHARACTER"),
        (&["decompose", "--matrix", "-2,-1,-1,-1"], "NEGATIVE_EIGENVALUES"),
        (&["holonomy", "--word", "LR"], "MIRROR_FORM_UNSPECIFIED"),
        (&["certify", "--word", "RL", "--matrix", "2,1,1,1"], "USAGE"),
        (&["frobnicate"], "USAGE"),
    ];
    for (args, code) in cases {
        let (s, v) = json(args);
        assert_eq!(s, 2, "{args:?}");
        assert_eq!(error_code(&v), *code, "{args:?}");
        assert_eq!(v["schema"], 1);
    }
}

#[test]
fn flipword_reports_negation() {
    let (s, v) = json(&["flipword", "--matrix", "-2,-1,-1,-1"]);
    assert_eq!(s, 0);
    assert_eq!(v["negated"], true);
    assert_eq!(v["word"], "RL");
    let (_, v) = json(&["flipword", "--matrix", "0,-1,1,3"]);
    assert_eq!(v["word"], "RL");
    assert_eq!(v["negated"], false);
    let (_, v) = json(&["flipword", "--word", "LRR"]);
    assert_eq!(v["word"], "RRL");
}

#[test]
fn matrix_and_word_agree() {
    let (_, a) = json(&["certify", "--matrix", "2,1,1,1"]);
    let (_, b) = json(&["certify", "--word", "RL"]);
    assert_eq!(a, b);
}

#[test]
fn mirror_opt_in() {
    let (s, v) = json(&["holonomy", "--word", "LR", "--rotate-mirror"]);
    assert_eq!(s, 0);
    let (_, w) = json(&["holonomy", "--word", "RL"]);
    assert_eq!(v["M_tau"], w["M_tau"]);
    let (s, c) = json(&["certify", "--word", "LR"]);
    assert_eq!(s, 0);
    assert_eq!(c["representation"]["error"], "MIRROR_FORM_UNSPECIFIED");
}

#[test]
fn output_is_byte_identical() {
    for args in [
        &["certify", "--word", "RRLRL"][..],
        &["decompose", "--word", "RLLR"][..],
        &["triangulate", "--matrix", "5,2,2,1"][..],
        &["develop-svg", "--kind", "r14", "--n", "2"][..],
    ] {
        assert_eq!(call(args), call(args));
    }
}

#[test]
fn output_file_is_written() {
    let path = std::env::temp_dir().join(format!("ptb-cr-cli-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (s, out) = call(&["triangulate", "--word", "RRL", "-o", p]);
    assert_eq!(s, 0);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["m"], 3);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn sweep_is_ordered_and_thread_independent() {
    let (s, v) = json(&["certify", "--all-words", "--max-len", "5"]);
    assert_eq!(s, 0);
    let words: Vec<&str> = v["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["word"].as_str().unwrap())
        .collect();
    let mut sorted = words.clone();
    sorted.sort();
    assert_eq!(words, sorted);
    assert_eq!(v["count"], 1 + 2 + 4 + 6);

    let all = canonical_words(6);
    let one = certify_many(&all, MirrorPolicy::Reject, 1).unwrap();
    let many = certify_many(&all, MirrorPolicy::Reject, 4).unwrap();
    let ser = |c: &[ptb_cr::realise::Certificate]| serde_json::to_string(c).unwrap();
    assert_eq!(ser(&one), ser(&many));
}

#[test]
fn certificate_json_matches_library() {
    let w = parse_word("RRLLRL").unwrap();
    let lib = serde_json::to_value(certify(&w, MirrorPolicy::Reject).unwrap()).unwrap();
    let (_, cli) = json(&["certify", "--word", "RRLLRL"]);
    assert_eq!(lib, cli);
}

#[test]
fn svg_to_stdout() {
    let (s, out) = call(&["develop-svg", "--kind", "slab41", "--n", "3"]);
    assert_eq!(s, 0);
    assert!(out.starts_with("<?xml"));
    assert_eq!(ptb_cr::cli::labelled_points(&out).len(), 12);
}
