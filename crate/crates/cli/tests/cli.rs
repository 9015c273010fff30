use std::process::{Command, Output};

fn cyclepat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclepat")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cyclepat(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn count_examples() {
    assert_eq!(stdout(&["count", "--n", "8", "--cycles", "1,2,3", "--pattern", "231"]), "411\n");
    assert_eq!(stdout(&["count", "--n", "0", "--cycles", "1", "--pattern", "132"]), "1\n");
    assert_eq!(stdout(&["count", "--n", "12", "--cycles", "1,3", "--pattern", "321"]), "1075\n");
}

#[test]
fn count_json_is_parseable() {
    let text = stdout(&["count", "--n", "6", "--cycles", "1,2", "--pattern", "231", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["count"], "32");
    assert_eq!(v["pattern"], "231");
}

#[test]
fn gf_examples() {
    assert_eq!(
        stdout(&["gf", "--name", "A231", "--cycles", "2,3", "--order", "12"]),
        "1,0,1,1,2,5,7,17,27,57,98,193,351\n"
    );
    assert_eq!(stdout(&["gf", "--name", "catalan", "--order", "5"]), "1,1,2,5,14,42\n");
    assert_eq!(
        stdout(&["gf", "--name", "A13_132", "--order", "12"]),
        "1,1,1,3,5,7,17,31,49,107,201,339,699\n"
    );
}

#[test]
fn gf_json_keeps_exact_coefficients() {
    let text = stdout(&["gf", "--name", "motzkin", "--order", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let coeffs: Vec<String> =
        v["coefficients"].as_array().unwrap().iter().map(|c| c.to_string().trim_matches('"').to_string()).collect();
    assert_eq!(coeffs, ["1", "1", "2", "4", "9", "21", "51"]);
}

#[test]
fn census_sums_to_count() {
    let text = stdout(&["census", "--n", "7", "--cycles", "1,2,3", "--pattern", "231", "--format", "csv"]);
    let total: u64 = text.lines().skip(1).map(|l| l.rsplit(',').next().unwrap().parse::<u64>().unwrap()).sum();
    assert_eq!(total.to_string() + "\n", stdout(&["count", "--n", "7", "--cycles", "1,2,3", "--pattern", "231"]));
}

#[test]
fn verify_suites_pass() {
    let tables = stdout(&["verify", "--suite", "tables", "--n-max", "10"]);
    assert!(tables.ends_with("tables: all checks passed\n"), "{tables}");
    stdout(&["verify", "--suite", "bijections", "--m-max", "8"]);
    let formula = stdout(&["verify", "--suite", "formula", "--n-max", "12"]);
    assert!(formula.contains("C(r+l-1, r) matches the oracle"), "{formula}");
}

#[test]
fn verify_json_reports_passed() {
    let text = stdout(&["verify", "--suite", "conjecture", "--n-max", "7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["suite"], "conjecture");
}

#[test]
fn growth_band_sets_exit_code() {
    let inside = stdout(&["growth", "--n", "300", "--band", "1.86,1.92"]);
    assert!(inside.starts_with("(a_303/a_300)^(1/3) = 1.89"), "{inside}");
    let outside = cyclepat(&["growth", "--n", "300", "--band", "1.95,2.0"]);
    assert_eq!(outside.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&outside.stdout).contains("OUTSIDE"));
}

#[test]
fn bijection_trace_round_trips() {
    let text = stdout(&["bijection", "--word", "0001100110001111"]);
    assert!(text.contains("composition  (2,1,1,1,3)"), "{text}");
    assert!(text.contains("round trip   ok"), "{text}");
    let json = stdout(&["bijection", "--word", "00101101", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["hits"], serde_json::json!([0, 6, 8]));
    assert_eq!(v["round_trip"], true);
    let path = v["motzkin"].as_str().unwrap();
    let composition = v["composition"].as_str().unwrap();
    let back = stdout(&["bijection", "--path", path, "--composition", composition, "--format", "json"]);
    let w: serde_json::Value = serde_json::from_str(&back).unwrap();
    assert_eq!(w["word"], "00101101");
}

#[test]
fn render_counts_points_and_arcs() {
    let svg = stdout(&["render", "(1,5)(2)(3,9,8)(4,6)(7)", "--format", "svg"]);
    assert_eq!(svg.matches("<circle").count(), 9);
    assert_eq!(svg.matches("<path").count(), 4);
    let ascii = stdout(&["render", "(1,5)(2)(3,9,8)(4,6)(7)", "--format", "ascii"]);
    assert_eq!(ascii.lines().count(), 6);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["count", "--n", "3", "--cycles", "0", "--pattern", "12"][..],
        &["count", "--n", "3", "--cycles", "1", "--pattern", "112"],
        &["gf", "--name", "nonsense"],
        &["verify", "--suite", "everything"],
        &["bijection", "--word", "0110"],
        &["bijection", "--path", "ud", "--composition", "1"],
        &["render", "(1,2)", "--format", "csv"],
    ] {
        let out = cyclepat(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}
