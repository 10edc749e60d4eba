use std::process::Command;

fn sytpoly(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sytpoly"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn stdout_of(args: &[&str]) -> String {
    let (code, stdout, stderr) = sytpoly(args);
    assert_eq!(code, 0, "{args:?}: {stderr}");
    stdout
}

fn json_of(args: &[&str]) -> serde_json::Value {
    let mut args = args.to_vec();
    args.extend(["--format", "json"]);
    serde_json::from_str(&stdout_of(&args)).unwrap()
}

#[test]
fn dimension_examples() {
    assert_eq!(stdout_of(&["dimension", "--shape", "2,1"]), "2\n");
    assert_eq!(stdout_of(&["dimension", "--shape", "3,2,1"]), "16\n");
    assert_eq!(
        stdout_of(&["dimension", "--shape", "2,1", "--n", "5"]),
        "5\n"
    );
    assert_eq!(stdout_of(&["dimension", "--shape", "", "--n", "4"]), "1\n");
    let record = json_of(&["dimension", "--shape", "3,2,1", "--n", "9"]);
    assert_eq!(record["dimension"], 168);
}

#[test]
fn dimension_of_a_large_shape_is_exact() {
    // A hook with 20 cells has f = binom(19, 9).
    let shape = format!("11{}", ",1".repeat(9));
    assert_eq!(stdout_of(&["dimension", "--shape", &shape]), "92378\n");
    let staircase = "6,5,4,3,2,1";
    assert_eq!(
        stdout_of(&["dimension", "--shape", staircase]),
        "1100742656\n"
    );
}

#[test]
fn coeffs_examples() {
    assert_eq!(
        json_of(&["coeffs", "--shape", "1,1,1"])["a"],
        serde_json::json!([1, 1, 1, 1])
    );
    assert_eq!(
        json_of(&["coeffs", "--shape", "2,1"])["a"],
        serde_json::json!([2, 2, 1])
    );
    let record = json_of(&["coeffs", "--shape", "3,2,1"]);
    assert_eq!(record["a"], serde_json::json!([16, 16, 8, 2]));
    assert_eq!(record["b"], serde_json::json!([0, 0, 0, -2, 8, -16, 16]));
    assert_eq!(
        stdout_of(&["coeffs", "--shape", "2,1"]),
        "a=[2,2,1]\nb=[0,1,-2,2]\n"
    );
}

#[test]
fn count_examples() {
    for alpha in 0..=4 {
        let alpha = alpha.to_string();
        assert_eq!(
            stdout_of(&["count", "--shape", "3,2,1", "--h", "2", "--alpha", &alpha]),
            "8\n"
        );
    }
    assert_eq!(
        stdout_of(&["count", "--shape", "2,1", "--h", "3", "--alpha", "0"]),
        "0\n"
    );
    let listed = stdout_of(&[
        "count", "--shape", "2,1", "--h", "2", "--alpha", "0", "--list",
    ]);
    assert_eq!(listed, "1\n1 3 / 2\n");
    let record = json_of(&[
        "count", "--shape", "2,1", "--h", "1", "--alpha", "0", "--list",
    ]);
    assert_eq!(record["count"], 2);
    assert_eq!(
        record["tableaux"][0]["rows"],
        serde_json::json!([[1, 2], [3]])
    );
}

#[test]
fn count_rejects_windows_past_the_end() {
    let (code, _, stderr) = sytpoly(&["count", "--shape", "2,1", "--h", "3", "--alpha", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("out of range"));
}

#[test]
fn bijection_examples() {
    let record = json_of(&[
        "bijection",
        "--shape",
        "3,2,1",
        "--h",
        "2",
        "--alpha",
        "2",
        "--direction",
        "down",
        "--tableau",
        r#"{"shape":[3,2,1],"rows":[[1,2,3],[4,5],[6]]}"#,
    ]);
    assert_eq!(
        record["output"]["rows"],
        serde_json::json!([[1, 2, 4], [3, 5], [6]])
    );
    assert_eq!(record["pivot"], serde_json::json!({"q": 1}));

    let record = json_of(&[
        "bijection",
        "--shape",
        "3,2,1",
        "--h",
        "2",
        "--alpha",
        "2",
        "--direction",
        "up",
        "--tableau",
        "1 2 4 / 3 5 / 6",
    ]);
    assert_eq!(
        record["output"]["rows"],
        serde_json::json!([[1, 2, 3], [4, 5], [6]])
    );
    assert_eq!(record["pivot"], serde_json::json!({"p": 0}));

    // Already in the lower set: the map fixes it and reports no pivot.
    let record = json_of(&[
        "bijection",
        "--shape",
        "3,2,1",
        "--h",
        "2",
        "--alpha",
        "4",
        "--direction",
        "down",
        "--tableau",
        "1 2 4 / 3 5 / 6",
    ]);
    assert_eq!(record["output"], record["input"]);
    assert!(record.get("pivot").is_none());
}

#[test]
fn bijection_errors_explain_themselves() {
    let (code, _, stderr) = sytpoly(&[
        "bijection",
        "--shape",
        "3,2,1",
        "--h",
        "2",
        "--alpha",
        "2",
        "--direction",
        "up",
        "--tableau",
        "1 2 3 / 4 5 / 6",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not in the source set"), "{stderr}");
    assert!(stderr.contains("entry 3"), "{stderr}");

    let (code, _, stderr) = sytpoly(&[
        "bijection",
        "--shape",
        "3,2,1",
        "--h",
        "2",
        "--alpha",
        "2",
        "--direction",
        "down",
        "--tableau",
        "1 3 2 / 4 5 / 6",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not standard"), "{stderr}");

    let (code, _, stderr) = sytpoly(&[
        "bijection",
        "--shape",
        "2,2",
        "--h",
        "2",
        "--alpha",
        "2",
        "--direction",
        "down",
        "--tableau",
        "1 2 3 / 4 5 / 6",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--shape"), "{stderr}");
}

#[test]
fn table_examples() {
    let record = json_of(&["table", "--shape", "3,2,1", "--h", "2"]);
    let chains = record["chains"].as_array().unwrap();
    assert_eq!(chains.len(), 8);
    assert!(chains.iter().all(|c| c.as_array().unwrap().len() == 5));

    let record = json_of(&["table", "--shape", "1,1", "--h", "2"]);
    assert_eq!(record["chains"].as_array().unwrap().len(), 1);
    assert_eq!(record["chains"][0].as_array().unwrap().len(), 1);

    let record = json_of(&["table", "--shape", "2,1", "--h", "2"]);
    assert_eq!(record["chains"].as_array().unwrap().len(), 1);
    assert_eq!(
        stdout_of(&["table", "--shape", "2,1", "--h", "2"]),
        "alpha=0 | alpha=1\n1 3 / 2 | 1 2 / 3\n"
    );
}

#[test]
fn verify_examples() {
    let (code, stdout, _) = sytpoly(&["verify", "--max-k", "6", "--format", "json"]);
    assert_eq!(code, 0);
    let mut total = 0;
    for line in stdout.lines() {
        let report: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(report["status"], "passed", "{line}");
        assert_eq!(report["failures"], serde_json::json!([]));
        total += report["cases_run"].as_u64().unwrap();
    }
    assert!(total > 1000);

    let (code, stdout, _) = sytpoly(&["verify", "--check", "coeff_equals_count"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("PASS coeff_equals_count"), "{stdout}");

    let (code, _, stderr) = sytpoly(&["verify", "--max-k", "0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("max_k"));

    let (code, _, stderr) = sytpoly(&["verify", "--check", "no_such_check"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("no_such_check"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(sytpoly(&["dimension"]).0, 2);
    assert_eq!(sytpoly(&["dimension", "--shape", "1,2"]).0, 2);
    assert_eq!(sytpoly(&["dimension", "--shape", "2,x"]).0, 2);
    assert_eq!(sytpoly(&["dimension", "--shape", "2,1", "--n", "3"]).0, 2);
    assert_eq!(
        sytpoly(&[
            "bijection",
            "--shape",
            "2,1",
            "--h",
            "1",
            "--alpha",
            "1",
            "--direction",
            "sideways",
            "--tableau",
            "1 2 / 3"
        ])
        .0,
        2
    );
    assert_eq!(sytpoly(&["frobnicate"]).0, 2);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let commands: &[&[&str]] = &[
        &["table", "--shape", "3,2,1", "--h", "2", "--format", "json"],
        &[
            "count", "--shape", "3,3,2", "--h", "3", "--alpha", "1", "--list",
        ],
        &["coeffs", "--shape", "4,2,1,1", "--format", "json"],
        &["verify", "--max-k", "5", "--format", "json"],
    ];
    for args in commands {
        assert_eq!(stdout_of(args), stdout_of(args), "{args:?}");
    }
}
