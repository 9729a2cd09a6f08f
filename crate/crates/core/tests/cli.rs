mod common;

use std::process::Command;

use common::fixture_path;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_multipres"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn validate_reports_ok() {
    let (code, out, _) = run(&["validate", &fixture_path("example4.json")]);
    assert_eq!(code, 0);
    assert_eq!(out, "ok: 10 simplices\n");
}

#[test]
fn present_prints_the_three_matrices() {
    let (code, out, _) = run(&["present", "-n", "1", &fixture_path("example4.json")]);
    assert_eq!(code, 0);
    assert!(out.contains("pi0 - pi1: KF_1 -> GF_1 (10x5):"));
    assert!(out.contains("dbar: GF_2 -> GF_1 (10x2):"));
    assert!(out.contains("alpha: GF_1 -> D_0 (4x10):"));
    let (_, sparse, _) = run(&[
        "present",
        "-n",
        "1",
        "--format",
        "sparse",
        &fixture_path("example4.json"),
    ]);
    let json: serde_json::Value = serde_json::from_str(&sparse).unwrap();
    // 10 pi entries, 6 dbar entries
    assert_eq!(json["f"]["entries"].as_array().unwrap().len(), 16);
}

#[test]
fn hilbert_prints_the_grid_with_x2_upward() {
    let (code, out, _) = run(&["hilbert", "-n", "1", "--box", "2,2", &fixture_path("example4.json")]);
    assert_eq!(code, 0);
    assert_eq!(out, "1 1 1\n0 1 1\n0 0 1\n");
    let (_, csv, _) = run(&[
        "hilbert",
        "-n",
        "1",
        "--box",
        "2,2",
        "--field",
        "q",
        "--format",
        "csv",
        &fixture_path("example4.json"),
    ]);
    assert_eq!(csv.lines().count(), 9);
    assert!(csv.starts_with("0,0,0\n0,1,0\n0,2,1\n"));
}

#[test]
fn check_passes_on_fixture() {
    for n in ["0", "1", "2"] {
        let (code, out, _) = run(&[
            "check",
            "-n",
            n,
            "--box",
            "2,2",
            "--jobs",
            "2",
            &fixture_path("example4.json"),
        ]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(out, "ok: 9 grades agree\n");
    }
}

#[test]
fn export_dialects() {
    let (code, script, _) = run(&["export", "-n", "1", "--format", "cas", &fixture_path("example4.json")]);
    assert_eq!(code, 0);
    assert!(script.contains("R = ZZ/2[x1, x2, Degrees => {{1,0}, {0,1}}];"));
    assert!(script.contains("A = R^{{-2,-2}, {-2,-2}, {-2,-1}, {-1,-2}, {-1,-2}, {-1,-2}, {-2,-1}};"));
    let (code, bundle, _) = run(&[
        "export",
        "-n",
        "1",
        "--format",
        "json",
        "--field",
        "q",
        &fixture_path("example4.json"),
    ]);
    assert_eq!(code, 0);
    let c = multipres::io::import_bundle(&bundle).unwrap();
    assert_eq!(
        c,
        multipres::build_complex(&multipres::fixtures::example4(), 1).unwrap()
    );
    let (code, _, err) = run(&["export", "--format", "singular", &fixture_path("example4.json")]);
    assert_eq!(code, 1);
    assert!(err.contains("unsupported export dialect"));
}

#[test]
fn exit_codes() {
    let dir = std::env::temp_dir().join(format!("multipres-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let broken = dir.join("broken.json");
    std::fs::write(&broken, "{\"r\": 2,").unwrap();
    assert_eq!(run(&["validate", broken.to_str().unwrap()]).0, 3);
    assert_eq!(run(&["present", &fixture_path("triangle_before_edges.json")]).0, 2);
    assert_eq!(run(&["hilbert", "--box", "2", &fixture_path("example4.json")]).0, 3);
    assert_eq!(
        run(&["hilbert", "--field", "gf:6", &fixture_path("example4.json")]).0,
        1
    );
    assert_eq!(run(&["frobnicate"]).0, 1);

    let open = dir.join("open.json");
    std::fs::write(
        &open,
        r#"{"r":2,"vertices":[0,1,2],"simplices":[{"v":[0,1,2],"births":[[1,2],[2,1]]}]}"#,
    )
    .unwrap();
    assert_eq!(run(&["validate", open.to_str().unwrap()]).0, 2);
    let (code, out, _) = run(&["validate", "--close-births", open.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, "ok: 7 simplices\n"));

    let target = dir.join("h.csv");
    let (code, out, _) = run(&[
        "hilbert",
        "-n",
        "1",
        "--format",
        "csv",
        "--out",
        target.to_str().unwrap(),
        &fixture_path("example4.json"),
    ]);
    assert_eq!((code, out.as_str()), (0, ""));
    assert!(std::fs::read_to_string(&target).unwrap().ends_with("2,2,1\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["present", "-n", "1", "--format", "json"],
        vec!["export", "-n", "1"],
        vec!["hilbert", "-n", "1", "--jobs", "3", "--format", "json"],
    ] {
        let mut full = args.clone();
        let path = fixture_path("example4.json");
        full.push(&path);
        let first = run(&full);
        let second = run(&full);
        assert_eq!(first, second);
    }
}
