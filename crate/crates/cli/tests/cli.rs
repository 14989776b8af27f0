use std::process::{Command, Output};

use serde_json::Value;

fn starring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_starring"))
        .args(args)
        .env_remove("STARRING_CAP")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let out = starring(&full);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const Z8: &str = r#"{"kind":"ZMod","n":8}"#;

#[test]
fn verify_t31_on_z8_is_clean() {
    let out = starring(&[
        "verify",
        "--ring",
        Z8,
        "--theorem",
        "T3.1",
        "--max-n",
        "2",
        "--oracle",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("0 counterexamples"), "{text}");
    assert!(text.contains("5 Moore-Penrose invertible"), "{text}");
}

#[test]
fn verify_json_report_shape() {
    let report = json(&[
        "verify",
        "--ring",
        Z8,
        "--theorem",
        "t3.4",
        "--max-n",
        "2",
        "--workers",
        "2",
    ]);
    assert_eq!(report["theorem_id"], "T3.4");
    assert_eq!(report["elements_scanned"], 8);
    assert_eq!(report["mp_invertible"], 5);
    assert_eq!(report["counterexamples"].as_array().unwrap().len(), 0);
    assert_eq!(report["params"]["n"], serde_json::json!([1, 2]));
}

#[test]
fn verify_output_is_independent_of_workers() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let ring = r#"{"kind":"MatZp","p":2,"k":2}"#;
    let one = strip(json(&[
        "verify",
        "--ring",
        ring,
        "--theorem",
        "T3.9",
        "--workers",
        "1",
    ]));
    let many = strip(json(&[
        "verify",
        "--ring",
        ring,
        "--theorem",
        "T3.9",
        "--workers",
        "4",
    ]));
    assert_eq!(one, many);
}

#[test]
fn out_writes_the_report() {
    let dir = std::env::temp_dir().join(format!("starring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = starring(&[
        "verify",
        "--ring",
        Z8,
        "--theorem",
        "C3.6",
        "--json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let printed: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(written, printed);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn ring_from_file() {
    let path = std::env::temp_dir().join(format!("starring-ring-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"kind":"ZMod","n":6}"#).unwrap();
    let arg = format!("@{}", path.display());
    let v = json(&["mp", "--ring", &arg, "--element", "2"]);
    assert_eq!(v["exists"], true);
    assert_eq!(v["value"], 2);
    std::fs::remove_file(path).ok();
}

#[test]
fn mp_on_gaussian_matrix() {
    let v = json(&[
        "mp",
        "--ring",
        r#"{"kind":"MatQi","k":2}"#,
        "--element",
        "[[1,2],[2,4]]",
    ]);
    assert_eq!(v["exists"], true);
    assert_eq!(
        v["value"],
        serde_json::json!([["1/25", "2/25"], ["2/25", "4/25"]])
    );
    assert_eq!(v["certificate"].as_array().unwrap().len(), 3);
}

#[test]
fn mp_absent_reports_reason() {
    for extra in [&[][..], &["--oracle"][..]] {
        let mut args = vec!["mp", "--ring", Z8, "--element", "2"];
        args.extend_from_slice(extra);
        let v = json(&args);
        assert_eq!(v["exists"], false);
        assert!(v["value"].is_null());
        assert!(v["reason"].as_str().unwrap().contains("no solution"));
    }
}

#[test]
fn ginv_one_sided_example() {
    let v = json(&[
        "ginv",
        "--ring",
        r#"{"kind":"MatZp","p":2,"k":2}"#,
        "--element",
        "[[1,1],[0,0]]",
    ]);
    let exists: Vec<bool> = v["inverses"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| i["exists"].as_bool().unwrap())
        .collect();
    // inner, {1,3}, {1,4}, group, Moore-Penrose
    assert_eq!(exists, [true, true, false, true, false]);
    assert_eq!(v["ep"], false);

    let only = json(&[
        "ginv",
        "--ring",
        r#"{"kind":"ZMod","n":6}"#,
        "--element",
        "4",
        "--kind",
        "group",
    ]);
    assert_eq!(only["inverses"].as_array().unwrap().len(), 1);
    assert_eq!(only["inverses"][0]["value"], 4);
}

#[test]
fn classify_flags() {
    let v = json(&[
        "classify",
        "--ring",
        r#"{"kind":"ZMod","n":6}"#,
        "--element",
        "3",
    ]);
    assert_eq!(v["flags"]["projection"], true);
    assert_eq!(v["flags"]["unit"], false);
}

#[test]
fn validate_ring_passes() {
    let out = starring(&["validate-ring", "--ring", r#"{"kind":"MatZp","p":2,"k":2}"#]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&[
        "validate-ring",
        "--ring",
        r#"{"kind":"MatQi","k":2}"#,
        "--budget",
        "50",
    ]);
    assert_eq!(v["passed"], true);
}

#[test]
fn decompose_lists_all_variants() {
    let v = json(&["decompose", "--ring", Z8, "--element", "2", "--max-n", "2"]);
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 16);
    assert_eq!(v["mp_exists"], false);
    assert!(checks
        .iter()
        .filter(|c| c["condition"].as_u64().unwrap() % 2 == 0)
        .all(|c| c["holds"] == false));
    let v = json(&["decompose", "--ring", Z8, "--element", "3"]);
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["holds"] == true));
}

#[test]
fn usage_and_library_errors_exit_2() {
    let cases: [&[&str]; 5] = [
        &["verify", "--ring", Z8, "--theorem", "T9.9"],
        &[
            "verify",
            "--ring",
            r#"{"kind":"ZMod"}"#,
            "--theorem",
            "T3.1",
        ],
        &["mp", "--ring", Z8],
        &["mp", "--ring", Z8, "--element", "[[1]]"],
        &[
            "verify",
            "--ring",
            r#"{"kind":"MatQi","k":1}"#,
            "--theorem",
            "T3.1",
        ],
    ];
    for args in cases {
        let out = starring(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_starring"))
        .args([
            "verify",
            "--ring",
            r#"{"kind":"ZMod","n":12}"#,
            "--theorem",
            "T3.2",
        ])
        .env("STARRING_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}
