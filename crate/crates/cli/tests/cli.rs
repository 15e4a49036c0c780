use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclink"))
        .args(args)
        .current_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("../.."))
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(run(args).stdout).unwrap()
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["jones"]), 1);
    assert_eq!(code(&["--format", "yaml", "jones", "fixtures/trefoil.vd"]), 1);
    assert_eq!(code(&["gen", "--vertices", "0", "--edges", "1"]), 1);
    assert_eq!(code(&["gen", "--vertices", "1", "--edges", "1", "--sign-bias", "2"]), 1);
    assert_eq!(code(&["--jobs", "0", "jones", "fixtures/trefoil.vd"]), 1);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(code(&["jones", "fixtures/missing.vd"]), 2);
    assert_eq!(code(&["jones", "fixtures/triangle.scg"]), 2);
    assert_eq!(code(&["fpoly", "fixtures/trefoil.vd"]), 2);
    assert_eq!(code(&["virtualize", "fixtures/trefoil.vd", "3"]), 2);
    assert_eq!(code(&["pdual", "fixtures/triangle.scg", "9"]), 2);
    assert_eq!(code(&["jones", "--max-crossings", "2", "fixtures/trefoil.vd"]), 2);
    let err = String::from_utf8(run(&["fpoly", "fixtures/trefoil.vd"]).stderr).unwrap();
    assert!(err.contains("line 1, column 1"), "{err}");
}

#[test]
fn not_colorable_exit_4() {
    assert_eq!(code(&["tait", "fixtures/virtual_trefoil.vd"]), 4);
    assert_eq!(code(&["checkerboard", "fixtures/virtual_trefoil.vd"]), 0);
}

#[test]
fn outputs_compose() {
    let dir = std::env::temp_dir().join(format!("cyclink-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let medial = dir.join("triangle.vd");
    std::fs::write(&medial, stdout(&["medial", "fixtures/triangle.scg"])).unwrap();
    let m = medial.to_str().unwrap();
    assert_eq!(stdout(&["jones", m]), stdout(&["jones", "fixtures/trefoil_right.vd"]));
    let tait = dir.join("tait.scg");
    std::fs::write(&tait, stdout(&["tait", m])).unwrap();
    assert_eq!(
        stdout(&["fpoly", tait.to_str().unwrap()]),
        stdout(&["fpoly", "fixtures/triangle.scg"])
    );
    let switched = dir.join("switched.vd");
    std::fs::write(&switched, stdout(&["switch", "fixtures/trefoil.vd", "1"])).unwrap();
    assert_eq!(stdout(&["jones", switched.to_str().unwrap()]), "1\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn timed_json_reports_milliseconds_field() {
    let out = stdout(&["--format", "json", "jones", "--timed", "fixtures/trefoil.vd"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["ms"].is_u64());
    assert_eq!(v["states"], 8);
    assert_eq!(v["writhe"], -3);
}
