use std::process::{Command, Output};

use rankdec::io::{BasisJson, CodeJson, OutcomeJson, SyndromeJson, TraceJson};
use rankdec_cli::{OracleOut, SimReport};

fn rankdec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankdec"))
        .args(args)
        .env_remove("RANKDEC_LIMIT")
        .output()
        .unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = rankdec(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code_a() -> String {
    ok(&["gencode", "--m", "4", "--n", "4", "--k", "1"])
}

const ZERO: &str = "0,0,0,0";

fn word(items: &[&str]) -> String {
    serde_json::to_string(items).unwrap()
}

#[test]
fn gencode_roundtrips_and_rejects_bad_parameters() {
    let code = code_a();
    let dto: CodeJson = serde_json::from_str(&code).unwrap();
    assert_eq!(dto.field.modulus, vec![1, 1, 0, 0, 1]);
    assert_eq!(serde_json::to_string_pretty(&dto).unwrap(), code.trim_end());
    assert_eq!(
        rankdec(&["gencode", "--m", "4", "--n", "5", "--k", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        rankdec(&["gencode", "--m", "4", "--n", "4", "--k", "1", "--modulus", "1,0,0,0,1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn zero_message_and_codeword_syndromes() {
    let code = code_a();
    let cw: Vec<String> = serde_json::from_str(&ok(&["encode", "--code", &code, "--msg", &word(&[ZERO])])).unwrap();
    assert_eq!(cw, vec![ZERO; 4]);
    let cw = ok(&["encode", "--code", &code, "--msg", &word(&["1,1,0,1"])]);
    let s: SyndromeJson = serde_json::from_str(&ok(&["syndrome", "--code", &code, "--word", &cw])).unwrap();
    assert!(s.s.is_empty());
    assert_eq!(s.d, 4);
}

#[test]
fn malformed_input_exits_with_2() {
    let code = code_a();
    assert_eq!(
        rankdec(&["encode", "--code", "{", "--msg", "[]"]).status.code(),
        Some(2)
    );
    assert_eq!(
        rankdec(&["encode", "--code", &code, "--msg", "[\"1,1\"]"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rankdec(&["syndrome", "--code", &code, "--word", &word(&[ZERO])])
            .status
            .code(),
        Some(2)
    );
    let out = rankdec(&[
        "keyeq",
        "--code",
        &code,
        "--word",
        &word(&[ZERO; 4]),
        "--mode",
        "basis",
        "--tau",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn keyeq_modes() {
    let code = code_a();
    let rank1 = word(&["0,1,0,0", ZERO, ZERO, ZERO]);
    let unique: serde_json::Value = serde_json::from_str(&ok(&["keyeq", "--code", &code, "--word", &rank1])).unwrap();
    assert_eq!(unique["lambda"].as_array().unwrap().len(), 2);

    let rank2 = word(&["0,1,0,0", "1,0,0,0", ZERO, ZERO]);
    let basis = ok(&[
        "keyeq",
        "--code",
        &code,
        "--word",
        &rank2,
        "--mode",
        "basis",
        "--tau",
        "2",
        "--check-span",
        "--trace",
    ]);
    let value: serde_json::Value = serde_json::from_str(&basis).unwrap();
    assert_eq!(value["span_equal"], true);
    let b: BasisJson = serde_json::from_str(&basis).unwrap();
    assert_eq!((b.tau, b.tau0, b.pairs.len()), (2, 1, 2));
    let _: TraceJson = serde_json::from_value(value["trace"].clone()).unwrap();

    let oracle: OracleOut = serde_json::from_str(&ok(&[
        "keyeq", "--code", &code, "--word", &rank2, "--mode", "oracle", "--tau", "2",
    ]))
    .unwrap();
    assert_eq!(oracle.dimension, 2);
}

#[test]
fn decode_and_budget() {
    let code = code_a();
    let cw = ok(&["encode", "--code", &code, "--msg", &word(&["0,0,1,0"])]);
    let mut r: Vec<String> = serde_json::from_str(&cw).unwrap();
    r[0] = if r[0] == "1,0,0,0" {
        ZERO.into()
    } else {
        "1,0,0,0".into()
    };
    let r = serde_json::to_string(&r).unwrap();
    let out: OutcomeJson = serde_json::from_str(&ok(&["decode", "--code", &code, "--word", &r])).unwrap();
    let cw: Vec<String> = serde_json::from_str(&cw).unwrap();
    assert_eq!(out.codewords, vec![cw.clone()]);
    let list: OutcomeJson =
        serde_json::from_str(&ok(&["decode", "--code", &code, "--word", &r, "--tau", "2"])).unwrap();
    assert!(list.codewords.contains(&cw));

    let refused = rankdec(&["decode", "--code", &code, "--word", &r, "--tau", "2", "--limit", "1"]);
    assert_eq!(refused.status.code(), Some(3));
    let env = Command::new(env!("CARGO_BIN_EXE_rankdec"))
        .args(["decode", "--code", &code, "--word", &r, "--tau", "2"])
        .env("RANKDEC_LIMIT", "1")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(3));
}

#[test]
fn seea_trace_of_polynomials() {
    let code = code_a();
    let b = word(&[ZERO, ZERO, "1,0,0,0"]);
    let a = word(&["0,1,0,0"]);
    let t: TraceJson = serde_json::from_str(&ok(&["seea-trace", "--code", &code, "--b", &b, "--a", &a])).unwrap();
    assert_eq!(t.steps.len(), 1);
    assert_eq!(t.steps[0].degR, None);
    assert_eq!(t.rsgcd.unwrap(), vec!["1,0,0,0".to_string()]);
    assert_eq!(rankdec(&["seea-trace", "--code", &code]).status.code(), Some(2));
}

#[test]
fn simulate_report_is_consistent() {
    let code = ok(&["gencode", "--m", "6", "--n", "6", "--k", "1"]);
    let text = ok(&[
        "simulate", "--code", &code, "--rank", "0,1,2,3", "--tau", "3", "--trials", "30", "--seed", "5", "--jobs", "2",
    ]);
    let report: SimReport = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap(), text.trim_end());
    for (t, st) in &report.ranks {
        assert_eq!(st.success + st.failure + st.budget_exceeded, st.trials);
        assert_eq!(st.success, st.trials, "rank {t}");
    }
    assert_eq!(report.basis_sizes.values().sum::<usize>(), 90);
}
