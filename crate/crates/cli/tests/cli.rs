use freestar_cli::{run, Outcome};
use serde_json::Value;

fn problem(name: &str) -> String {
    format!("{}/../../problems/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}.json", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap()
}

fn tool(args: &[&str]) -> Outcome {
    let mut full = vec!["freestar"];
    full.extend_from_slice(args);
    run(full)
}

fn json(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn golden_outputs() {
    let commutator = problem("commutator");
    let toeplitz = problem("toeplitz");
    let jordan = problem("jordan");
    let cases: Vec<(&str, Vec<&str>)> = vec![
        ("gb_commutator", vec!["gb", "--problem", &commutator, "--degree", "3"]),
        ("reduce_toeplitz", vec!["reduce", "--problem", &toeplitz, "--poly", "x1'*x1*x1 + x1*x1'"]),
        ("trace_form", vec!["trace-form", "--poly", "x1*x2 - x2*x1 + 1"]),
        ("commutant_jordan", vec!["commutant", "--problem", &jordan, "--tuple", "jordan"]),
        ("canon_qweyl", vec!["canon", "--algebra", "qweyl", "--q", "1/2", "--poly", "x2'*x2*x2"]),
        ("vanishing_jordan", vec!["vanishing-ideal", "--problem", &jordan, "--tuple", "jordan", "--degree", "2"]),
    ];
    for (name, args) in cases {
        let out = tool(&args);
        assert_eq!(out.code, 0, "{name}: {}", out.stderr);
        assert_eq!(out.stdout, golden(name), "{name}");
    }
}

#[test]
fn exit_codes() {
    let toeplitz = problem("toeplitz");
    let jordan = problem("jordan");
    let commutator = problem("commutator");

    let member = tool(&["member", "--problem", &toeplitz, "--poly", "x1'*x1 - 1"]);
    assert_eq!(member.code, 0);
    let non_member = tool(&["member", "--problem", &toeplitz, "--poly", "1 - x1*x1'"]);
    assert_eq!(non_member.code, 1);
    assert_eq!(json(&non_member)["results"][0]["verdict"], "non_member");

    assert_eq!(tool(&["member", "--problem", &commutator, "--poly", "x3"]).code, 2);
    assert_eq!(tool(&["reduce", "--problem", &commutator, "--poly", "i*x1"]).code, 2);
    assert_eq!(tool(&["reduce", "--problem", &commutator, "--poly", "x1 +"]).code, 2);
    assert_eq!(tool(&["no-such-command"]).code, 2);
    assert_eq!(tool(&["gb"]).code, 2);

    let regrep = tool(&["regrep", "--problem", &toeplitz]);
    assert_eq!(regrep.code, 3);
    assert!(json(&regrep)["error"].is_string());
    let soft = tool(&["soft-check", "--problem", &jordan, "--tuple", "diagonal", "--poly", "x1"]);
    assert_eq!(soft.code, 3);

    assert_eq!(tool(&["--help"]).code, 0);
}

#[test]
fn gaussian_field() {
    let out = tool(&["trace-form", "--field", "Qi", "--poly", "i*x1*x2 - i*x2*x1"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v = json(&out);
    assert_eq!(v["field"], "Qi");
    assert_eq!(v["results"][0]["trace_normal_form"], "0");
}

#[test]
fn every_command_is_deterministic() {
    let commutator = problem("commutator");
    let toeplitz = problem("toeplitz");
    let jordan = problem("jordan");
    let cases: Vec<Vec<&str>> = vec![
        vec!["gb", "--problem", &commutator],
        vec!["reduce", "--problem", &commutator, "--poly", "x2*x1*x1'"],
        vec!["member", "--problem", &commutator, "--poly", "x2*x1 - x1*x2"],
        vec!["standard-monomials", "--problem", &commutator, "--degree", "3"],
        vec!["codim", "--problem", &toeplitz],
        vec!["split-check", "--problem", &commutator],
        vec!["functional", "--problem", &toeplitz, "--degree", "2"],
        vec!["verify-functional", "--problem", &toeplitz, "--degree", "2"],
        vec!["witness", "--problem", &commutator, "--degree", "1"],
        vec!["verify-witness", "--problem", &commutator, "--degree", "1", "--poly", "x1"],
        vec!["bounded-family", "--problem", &commutator, "--degree", "1"],
        vec!["eval", "--problem", &jordan, "--tuple", "jordan", "--poly", "x1*x1'"],
        vec!["zero-class", "--problem", &jordan, "--tuple", "jordan", "--poly", "x1"],
        vec!["vanishing-ideal", "--problem", &jordan, "--tuple", "rotation", "--degree", "2"],
        vec!["left-vanishing-ideal", "--problem", &jordan, "--tuple", "jordan", "--vector", "e1", "--degree", "2"],
        vec!["commutant", "--problem", &jordan, "--tuple", "rotation"],
        vec!["soft-check", "--problem", &jordan, "--tuple", "jordan", "--tuple", "rotation", "--poly", "x1"],
        vec!["regrep", "--problem", &jordan, "--tuple", "jordan", "--degree", "4"],
        vec!["z-ideal", "--problem", &jordan, "--tuple", "jordan", "--vector", "e1", "--degree", "4"],
        vec!["hat-member", "--problem", &jordan, "--tuple", "diagonal", "--degree", "3", "--poly", "x1"],
        vec!["canon", "--algebra", "toeplitz", "--poly", "x1'*x1*x1'"],
        vec!["qweyl-identities", "--q", "3/4", "--degree", "2"],
        vec!["trace-form", "--poly", "x1*x2*x1' - x1'*x1*x2"],
    ];
    assert_eq!(cases.len(), 23);
    for args in cases {
        let first = tool(&args);
        let second = tool(&args);
        assert!(first.code <= 1, "{args:?}: {}{}", first.stderr, first.stdout);
        assert_eq!(first, second, "{args:?}");
        assert_eq!(json(&first)["command"], args[0]);
    }
}
