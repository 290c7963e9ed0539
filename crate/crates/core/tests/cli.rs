use std::process::{Command, Output};

use serde_json::Value;

fn cm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cm-families"))
        .args(args)
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn reduce_prints_the_alcove_datum() {
    let out = cm(&["reduce", "--l", "3", "--H", "1/3,1/3"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], "cm-families/1");
    assert_eq!(v["epsilon"], serde_json::json!(["1/3", "1/3", "1/3"]));
    assert_eq!(v["d"], 3);
}

#[test]
fn exit_codes_follow_the_contract() {
    assert_eq!(
        cm(&["reduce", "--l", "1", "--H", ""]).status.code(),
        Some(3)
    );
    assert_eq!(
        cm(&["reduce", "--l", "2", "--H", "0.5"]).status.code(),
        Some(2)
    );
    assert_eq!(cm(&["cm", "--l", "2"]).status.code(), Some(2));
    let empty = std::env::temp_dir().join(format!("cm-families-empty-{}.grid", std::process::id()));
    std::fs::write(&empty, "# nothing here\n").unwrap();
    assert_eq!(
        cm(&["verify", "--grid", empty.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let _ = std::fs::remove_file(&empty);
}

#[test]
fn partitions_in_both_formats() {
    let out = cm(&["cm", "--l", "2", "--n", "2", "--H", "0"]);
    let sizes: Vec<usize> = json(&out)["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b.as_array().unwrap().len())
        .collect();
    assert_eq!(sizes, [2, 2, 1]);
    let csv = cm(&[
        "rouquier", "--l", "2", "--n", "1", "--H", "1", "--format", "csv",
    ]);
    assert_eq!(
        String::from_utf8(csv.stdout).unwrap(),
        "block,multipartition\n0,\"1|\"\n1,\"|1\"\n"
    );
}

#[test]
fn verify_reports_and_summarizes() {
    let out = cm(&["verify", "--l", "2", "--n", "2", "--H", "0"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let report: Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(report["verdict"], "Equal");
    assert_eq!(lines.next(), Some("OK 1/1"));
}

#[test]
fn selftest_passes() {
    let out = cm(&["selftest", "--seed", "9", "--samples", "50"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
}
