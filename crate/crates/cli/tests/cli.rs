use std::process::{Command, Output};

fn poplat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poplat"))
        .args(args)
        .env_remove("POPLAT_MAX_ELEMENTS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn pop_of_a_signed_permutation() {
    let o = poplat(&["pop", "--lattice", "weak-b", "--x", "5,1,7,6,3,2,8,4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1,5,2,3,6,7,4,8");
}

#[test]
fn tam_b_verification_passes() {
    let o = poplat(&["--json", "verify", "--theorem", "tam-b", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let cases = v["cases"].as_array().unwrap();
    assert_eq!(cases.len(), 5);
    assert!(cases.iter().all(|c| c["verdict"] == "match"));
    assert_eq!(v["totals"]["matched"], 5);
}

#[test]
fn printed_jay_b_formula_is_off_by_the_top_term() {
    let o = poplat(&["--json", "verify", "--theorem", "jay-b", "--max-n", "4", "--as-printed"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    for (i, c) in v["cases"].as_array().unwrap().iter().enumerate() {
        let n = i + 1;
        let sign = if n % 2 == 0 { "1" } else { "-1" };
        assert_eq!(c["verdict"], "mismatch");
        assert_eq!(c["delta"], serde_json::json!({ n.to_string(): sign }));
    }
    let fixed = poplat(&["verify", "--theorem", "jay-b", "--max-n", "4"]);
    assert_eq!(fixed.status.code(), Some(0));
}

#[test]
fn guards_exit_with_two_and_no_report() {
    let o = poplat(&["--json", "enumerate", "--lattice", "weak-b", "--n", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let o = poplat(&["--json", "verify", "--theorem", "weak", "--max-n", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let o = poplat(&["series", "--check", "G", "--order", "17"]);
    assert_eq!(o.status.code(), Some(2));
    let o = poplat(&["pop", "--lattice", "tam-a", "--x", "3,1,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(poplat(&["verify", "--theorem", "nope", "--max-n", "2"]).status.code(), Some(2));
    assert_eq!(poplat(&["enumerate", "--lattice", "j-a", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn element_limit_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_poplat"))
        .args(["enumerate", "--lattice", "weak-b", "--n", "4"])
        .env("POPLAT_MAX_ELEMENTS", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--json", "--timings", "verify", "--theorem", "jay-a", "--max-n", "5"];
    let a = poplat(&args);
    let b = poplat(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stderr.is_empty());
}

#[test]
fn images_and_predicates() {
    let o = poplat(&["--json", "image", "--lattice", "tam-b", "--n", "2", "--list", "--check-predicate"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["image"], serde_json::json!(["1,2,3,4", "1,3,2,4", "3,1,4,2"]));
    assert_eq!(v["predicate"]["holds"], true);
    for lattice in ["tam-a", "j-b"] {
        let o = poplat(&["image", "--lattice", lattice, "--n", "4", "--check-predicate"]);
        assert_eq!(o.status.code(), Some(0), "{lattice}");
    }
    let o = poplat(&["image", "--lattice", "j-a", "--semilength", "6", "--check-predicate"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn census_agrees_with_prediction() {
    let o = poplat(&["--json", "census", "--lattice", "weak-b", "--n", "4", "--by-first-entry"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["total"], 72);
}

#[test]
fn formulas_and_series() {
    let o = poplat(&["formula", "--name", "tam-b", "--n", "4"]);
    assert_eq!(stdout(&o).trim(), "q^4 + 12q^3 + 9q^2");
    let o = poplat(&["--json", "series", "--check", "g", "--check", "k", "--order", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o).as_array().unwrap().len(), 2);
}

#[test]
fn preimages_map_back() {
    for (lattice, x) in [("tam-a", "1,3,2,4"), ("tam-b", "1,3,2,4")] {
        let o = poplat(&["preimage", "--lattice", lattice, "--x", x]);
        assert_eq!(o.status.code(), Some(0));
        let y = stdout(&o);
        let back = poplat(&["pop", "--lattice", lattice, "--x", y.trim()]);
        assert_eq!(stdout(&back).trim(), x);
    }
}
