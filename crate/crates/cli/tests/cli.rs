use std::process::{Command, Output};

fn dk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dk"))
        .args(args)
        .output()
        .expect("dk runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn type_6_p5_is_wild_with_certificate() {
    let o = dk(&["type", "--n", "6", "--p", "5", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "wild");
    assert_eq!(v["evidence"]["kind"], "separated_quiver");
    let comps = v["evidence"]["components"].as_array().unwrap();
    assert!(comps.iter().any(|c| c["kind"] == "none"));
}

#[test]
fn type_lookup_only_for_small_cases() {
    let o = dk(&["type", "--n", "4", "--p", "3"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("finite"));
    assert!(s.contains("theorem lookup only"));
}

#[test]
fn cartan_6_char0_csv() {
    let o = dk(&["cartan", "--n", "6", "--char0", "--format", "csv"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let rows: Vec<&str> = s.lines().collect();
    // header plus one row per partition of 6
    assert_eq!(rows.len(), 12);
    assert_eq!(rows[0].split(',').count(), 12);
    // unitriangular: the diagonal is all ones
    for (i, r) in rows[1..].iter().enumerate() {
        assert_eq!(r.split(',').nth(i + 1), Some("1"), "row {r}");
    }
}

#[test]
fn cartan_verify_apw_exit_code() {
    let o = dk(&["cartan", "--n", "5", "--p", "3", "--verify-apw"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("holds"));
}

#[test]
fn quiver_dot_output() {
    let o = dk(&["quiver", "--n", "5", "--p", "5", "--dot"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.starts_with("digraph Q_5_5 {"));
    assert!(s.contains("\"32\" -> \"5\";"));
    assert!(s.contains("\"41\" -> \"5\";"));
    assert!(s.trim_end().ends_with('}'));
}

#[test]
fn quiver_json_is_deterministic() {
    let a = stdout(&dk(&["quiver", "--n", "6", "--p", "2", "--json"]));
    let b = stdout(&dk(&["quiver", "--n", "6", "--p", "2", "--json"]));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
}

#[test]
fn fixtures_all_pass() {
    let o = dk(&["fixtures"]);
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert!(!s.contains("FAIL"));
    assert!(s.lines().filter(|l| l.starts_with("PASS")).count() >= 25);
}

#[test]
fn fixtures_filter_and_skip() {
    let s = stdout(&dk(&["fixtures", "--only", "cartan", "--n-max", "5"]));
    assert!(s.lines().all(|l| l.contains("cartan")));
    assert!(s.contains("SKIP cartan_6_char0"));
    assert!(s.contains("PASS cartan_5_p3"));
    let o = dk(&["fixtures", "--only", "nothing_matches"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn multiply_and_theta() {
    let o = dk(&["multiply", "--lhs", "21", "--rhs", "12 + -1*111"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "(-2)Ξ^111 + Ξ^21");
    let o = dk(&["theta", "--p", "2", "21 + 12"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "111\t0\n21\t0\n3\t0\n");
}

#[test]
fn verify_bgr_passes() {
    let o = dk(&["verify-bgr", "--n", "5", "--s", "2", "--p", "3", "--format", "text"]);
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert!(s.lines().all(|l| l.starts_with("Pass")));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["type", "--n", "13"][..],
        &["type", "--p", "3"],
        &["type", "--n", "4", "--p", "6"],
        &["type", "--n", "4", "--p", "3", "--char0"],
        &["quiver", "--n", "4", "--format", "yaml"],
        &["multiply", "--lhs", "21", "--rhs", "4"],
        &["verify-bgr", "--n", "4", "--s", "0"],
        &["conjecture", "--char0"],
        &["frobnicate"],
    ] {
        let o = dk(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn radical_json() {
    let o = dk(&["radical", "--n", "4", "--p", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["nilpotency_index"], 3);
    assert_eq!(v["p"]["char"], 2);
}
