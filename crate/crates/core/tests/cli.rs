use std::process::{Command, Output};

use tfpl::enumerate::{enumerate_tfpls, CountTable};
use tfpl::Tfpl;

fn tfpl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tfpl")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn enumerate_prints_every_configuration() {
    let out = tfpl(&["enumerate", "3"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let parsed: Vec<Tfpl> = text.split("\n\n").map(|b| b.parse().unwrap()).collect();
    assert_eq!(parsed, enumerate_tfpls(3).collect::<Vec<_>>());
}

#[test]
fn enumerate_with_boundary() {
    let out = tfpl(&["enumerate", "4", "--boundary", "0011,0110,1100"]);
    assert_eq!(code(&out), 0);
    assert_eq!(String::from_utf8(out.stdout).unwrap().matches("N=4").count(), 3);
}

#[test]
fn count_writes_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.csv");
    let out = tfpl(&["count", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(CountTable::load(&path).unwrap().total(), 36);
}

#[test]
fn drift_trace_and_render_read_files() {
    let dir = tempfile::tempdir().unwrap();
    let f = enumerate_tfpls(4).find(|f| f.drifters().len() == 2).unwrap();
    let input = dir.path().join("f.txt");
    std::fs::write(&input, f.to_text()).unwrap();
    let input = input.to_str().unwrap();

    let orbit = dir.path().join("orbit.json");
    let out = tfpl(&["drift", "--in", input, "--dir", "right", "--out", orbit.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&orbit).unwrap()).unwrap();
    let steps = json["steps"].as_array().unwrap();
    assert_eq!(steps[0]["drifters"], 2);
    assert_eq!(steps.last().unwrap()["drifters"], 0);

    let out = tfpl(&["trace", "--in", input]);
    assert_eq!(code(&out), 0);
    let traces: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(traces.as_array().unwrap().len(), 2);

    let out = tfpl(&["render", "--in", input, "--format", "svg"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8(out.stdout).unwrap().contains("edge drifter"));
}

#[test]
fn verify_exit_codes() {
    let out = tfpl(&["verify", "4", "--identity", "thm1"]);
    assert_eq!(code(&out), 0);
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(reports.as_array().unwrap().iter().all(|r| r["failed"] == 0));
    assert_eq!(code(&tfpl(&["verify", "6"])), 2);
    assert_eq!(code(&tfpl(&["verify", "0"])), 2);
}

#[test]
fn bad_arguments_exit_two() {
    assert_eq!(code(&tfpl(&["frobnicate"])), 2);
    assert_eq!(code(&tfpl(&["enumerate", "3", "--boundary", "01,10,11"])), 2);
    assert_eq!(code(&tfpl(&["render", "--in", "/nonexistent/file"])), 2);
    let dir = tempfile::tempdir().unwrap();
    let junk = dir.path().join("junk.txt");
    std::fs::write(&junk, "not a tfpl").unwrap();
    assert_eq!(code(&tfpl(&["trace", "--in", junk.to_str().unwrap()])), 2);
}
