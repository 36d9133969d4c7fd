//! End-to-end runs of the binary: golden outputs, exit codes, round-trips.

use std::process::Command;

use ellimod_core::{sl_class_from_mu, BundleDecomp, ELambdaPoint, Kind, RootSystem};
use serde_json::Value;

fn run_with_env(args: &[&str], envs: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ellimod"));
    cmd.args(args);
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    run_with_env(args, &[])
}

fn json(args: &[&str]) -> Value {
    let (code, stdout, stderr) = run(args);
    assert_eq!(code, 0, "args {args:?} failed: {stderr}\n{stdout}");
    serde_json::from_str(&stdout).expect("stdout is JSON")
}

#[test]
fn weights_of_e8() {
    let v = json(&["weights", "--group", "E8"]);
    assert_eq!(v["result"]["weights"], serde_json::json!([1, 2, 3, 4, 6, 5, 4, 3, 2]));
    assert_eq!(v["provenance"], "comark-expansion");
    assert_eq!(v["input"]["group"], "E8");
}

#[test]
fn descent_order_of_a5_with_degree_two() {
    let v = json(&["np", "--group", "A5", "--d", "2"]);
    assert_eq!(v["result"]["n_P"], 3);
}

#[test]
fn canonical_form_of_a_one_third_point() {
    let v = json(&["canon", "--group", "A1", "--mu", "2/3,0"]);
    assert_eq!(v["result"]["representative"], "1/3,0");
    assert_eq!(v["result"]["stabilizer_order"], 1);
}

#[test]
fn fingerprint_mode_is_marked_heuristic() {
    let v = json(&["canon", "--group", "E8", "--mu", "1/2,0;0,0;0,0;0,0;0,0;0,0;0,0;1/3,0", "--fingerprint-only"]);
    assert_eq!(v["result"]["method"], "heuristic");
    assert_eq!(v["provenance"], "fingerprint-heuristic");
    let fp = v["result"]["fingerprint"].as_str().unwrap();
    assert_eq!(fp.len(), 16);
    assert!(fp.chars().all(|c| c.is_ascii_hexdigit()));
}

#[test]
fn usage_errors_exit_one() {
    let (code, _, stderr) = run(&["weights", "--group", "Z9"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("letter"));

    let (code, _, _) = run(&["spectral"]);
    assert_eq!(code, 1);

    let (code, _, _) = run(&["no-such-command"]);
    assert_eq!(code, 1);
}

#[test]
fn help_exits_zero() {
    let (code, stdout, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("cover-index"));
}

#[test]
fn validation_errors_exit_two_with_library_codes() {
    let (code, stdout, _) = run(&["strata", "--group", "E8", "--d", "1"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["error"]["code"], "stratum-divisor");

    let (code, stdout, _) = run(&["weights", "--group", "D2"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["error"]["code"], "invalid-type");

    let decomp = r#"{"group":"SL","n":2,"summands":[{"d":2,"lambda":["1/3","0"]}]}"#;
    let (code, stdout, _) = run(&["classify-sl", "--decomp", decomp]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["error"]["code"], "determinant-not-trivial");

    let decomp = r#"{"group":"Sp","n":2,"summands":[{"d":1,"lambda":["1/5","0"]},{"d":1,"lambda":["1/5","0"]},{"d":1,"lambda":["4/5","0"]},{"d":1,"lambda":["4/5","0"]}]}"#;
    let (code, stdout, _) = run(&["classify-sp", "--decomp", decomp]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["error"]["code"], "repeated-twist");

    let (code, _, _) = run(&["from-mu", "--group", "B3", "--mu", "0,0;0,0;0,0"]);
    assert_eq!(code, 2);
}

#[test]
fn from_mu_output_reparses_to_the_library_value() {
    let sys = RootSystem::get(Kind::A, 2).unwrap();
    let mu = ELambdaPoint::parse(sys, "1/5,0;0,0").unwrap();
    let direct = sl_class_from_mu(&mu).unwrap();

    let v = json(&["from-mu", "--group", "A2", "--mu", "1/5,0;0,0"]);
    let reparsed: BundleDecomp = serde_json::from_value(v["result"].clone()).unwrap();
    assert_eq!(reparsed, direct);

    let text = serde_json::to_string(&v["result"]).unwrap();
    let w = json(&["classify-sl", "--decomp", &text]);
    assert_eq!(w["result"]["is_regular"], true);
    assert_eq!(w["result"]["aut_dim"], 2);
}

#[test]
fn symplectic_fiber_reports_its_fixed_points() {
    let v = json(&["spectral", "--group", "C2", "--mu", "1/2,0;1/5,0"]);
    assert_eq!(v["result"]["degree"], 4);
    let fixed = v["result"]["involution_fixed"].as_array().unwrap();
    assert_eq!(fixed.len(), 1);
    let mults: u64 = v["result"]["points"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["mult"].as_u64().unwrap())
        .sum();
    assert_eq!(mults, 4);

    let v = json(&["spectral", "--group", "A3", "--mu", "1/7,0;0,0;0,0"]);
    assert_eq!(v["result"]["degree"], 4);
    assert!(v["result"].get("involution_fixed").is_none());
}

#[test]
fn markdown_tables_render() {
    let (code, stdout, _) = run(&["family", "--group", "G2", "--markdown"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("| weight | exponent |"));
    assert!(stdout.contains("| 2 | 6 |"));

    let (code, stdout, _) = run(&["weights", "--group", "A3", "--markdown"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.matches("| 1 |").count(), 4);

    let (code, stdout, _) = run(&["parabolic", "--group", "D4", "--markdown"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("trivalent"));
    assert!(stdout.contains("A1 + A1 + A1"));
}

#[test]
fn orbit_bound_env_var_guards_cover_index() {
    let (code, stdout, _) = run_with_env(
        &["cover-index", "--group", "D4", "--weight", "1,0,0,0"],
        &[("ELLIMOD_ORBIT_BOUND", "5")],
    );
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["error"]["code"], "orbit-bound");

    let v = json(&["cover-index", "--group", "D4", "--weight", "1,0,0,0"]);
    assert_eq!(v["result"]["index"], 8);
}

#[test]
fn outputs_reparse_bit_exactly() {
    let v = json(&["canon", "--group", "G2", "--mu", "5/6,0;1/6,5/6"]);
    let rep = v["result"]["representative"].as_str().unwrap();
    let sys = RootSystem::get(Kind::G, 2).unwrap();
    let point = ELambdaPoint::parse(sys, rep).unwrap();
    assert_eq!(point.to_string(), rep);
}
