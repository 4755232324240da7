use std::process::{Command, Output};

fn preisach(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_preisach"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn export_json_single_spin() {
    let o = preisach(&["export-json", "--perm", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim_end(),
        r#"{"n":1,"perm":[1],"vertices":["-","+"],"edges":[{"from":"-","to":"+","kind":"U","label":1},{"from":"+","to":"-","kind":"D","label":1}]}"#
    );
}

#[test]
fn export_dot_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.dot");
    let o = preisach(&[
        "export-dot",
        "--perm",
        "2,3,1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph preisach {"));
    assert_eq!(dot.matches("color=red").count(), 4);
}

#[test]
fn phi_and_inverse() {
    let o = preisach(&["phi", "--perm", "2 4 3 5 1", "--vertex", "+++-+"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(2,4,5)");

    let o = preisach(&["phi-inverse", "--perm", "2,4,3,5,1", "--subseq", "2,4,5"]);
    assert_eq!(stdout(&o).trim(), "+++-+");

    let o = preisach(&["phi-inverse", "--perm", "2,4,3,5,1", "--subseq", ""]);
    assert_eq!(stdout(&o).trim(), "-----");
}

#[test]
fn nesting_and_lis() {
    let o = preisach(&["nesting", "--perm", "2,3,1"]);
    assert_eq!(stdout(&o).trim(), "2");
    let o = preisach(&["nesting", "--perm", "2,3,1", "--vertex", "+-+"]);
    assert_eq!(stdout(&o).trim(), "2");
    let o = preisach(&["lis", "--perm", "2,4,3,5,1"]);
    assert_eq!(stdout(&o).trim(), "3");
}

#[test]
fn build_lists_vertices_with_images() {
    let o = preisach(&["build", "--perm", "2,3,1"]);
    let text = stdout(&o);
    assert!(text.contains("vertices: 5"));
    assert!(text.contains("+-+ (2,3)"));
    assert!(text.contains("--- ()"));
}

#[test]
fn verify_exit_codes() {
    let o = preisach(&["verify", "--perm", "2,3,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result: PASS"));

    let o = preisach(&["verify-all", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("permutations: 6"));
    assert!(stdout(&o).contains("failures: 0"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        preisach(&["verify", "--perm", "2,2,1"]).status.code(),
        Some(2)
    );
    assert_eq!(preisach(&["lis", "--perm", "a,b"]).status.code(), Some(2));
    assert_eq!(
        preisach(&["phi", "--perm", "2,3,1", "--vertex", "+0-"])
            .status
            .code(),
        Some(2)
    );
    // (-1,1,-1) is not a vertex of G((2,3,1))
    assert_eq!(
        preisach(&["phi", "--perm", "2,3,1", "--vertex", "-+-"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        preisach(&["verify-all", "--n", "12"]).status.code(),
        Some(2)
    );
    assert_eq!(preisach(&["no-such-command"]).status.code(), Some(2));
    let o = preisach(&["verify", "--perm", "2,2,1"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("duplicate value 2"));
}

#[test]
fn budget_exceeded_exits_3() {
    let o = preisach(&["export-json", "--perm", "1,2,3,4,5", "--max-vertices", "10"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn stats_is_reproducible() {
    let args = ["stats", "--n", "20", "--samples", "50", "--seed", "7"];
    let a = preisach(&args);
    let b = preisach(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("nesting_checked: 50"));
}
