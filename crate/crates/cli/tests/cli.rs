use std::path::PathBuf;
use std::process::{Command, Output};

fn ncx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncx"))
        .args(args)
        .env_remove("NCX_THREADS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn temp_file(name: &str, body: &str) -> PathBuf {
    let p = std::env::temp_dir().join(format!("ncx-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn decompose_with_marks() {
    let p = temp_file(
        "t.json",
        r#"{"k":3,"n":7,"rows":[[3,7,8,8],[2,4,6,8],[1,2,6,6]]}"#,
    );
    let o = ncx(&[
        "decompose",
        "--k",
        "3",
        "--n",
        "7",
        "--tableau",
        p.to_str().unwrap(),
        "--mode",
        "nc",
        "--marks",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["columns"].as_array().unwrap().len(), 8);
    assert_eq!(v["marks"].as_array().unwrap().len(), 10);
}

#[test]
fn decompose_zero_and_invalid() {
    let zero = temp_file("zero.json", "[[0,0,0],[0,0,0]]");
    let o = ncx(&[
        "decompose",
        "--k",
        "2",
        "--n",
        "5",
        "--tableau",
        zero.to_str().unwrap(),
        "--mode",
        "nn",
        "--marks",
    ]);
    assert_eq!(stdout(&o).trim(), r#"{"columns":[],"marks":[]}"#);
    let bad = temp_file("bad.json", "[[2,1,3],[0,0,0]]");
    let o = ncx(&[
        "decompose",
        "--k",
        "2",
        "--n",
        "5",
        "--tableau",
        bad.to_str().unwrap(),
        "--mode",
        "nn",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("row 1 decreases"));
    let o = ncx(&[
        "decompose",
        "--k",
        "2",
        "--n",
        "5",
        "--tableau",
        "/nonexistent/t.json",
        "--mode",
        "nn",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn facet_listing() {
    for (k, n, want) in [("2", "5", 5), ("3", "6", 42)] {
        let o = ncx(&["facets", "--k", k, "--n", n, "--complex", "nc"]);
        assert!(o.status.success());
        let v: Vec<Vec<Vec<u32>>> = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v.len(), want);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }
    let flip = ncx(&[
        "facets",
        "--k",
        "3",
        "--n",
        "6",
        "--complex",
        "nc",
        "--method",
        "flip",
    ]);
    assert_eq!(
        stdout(&flip),
        stdout(&ncx(&["facets", "--k", "3", "--n", "6"]))
    );
}

#[test]
fn facet_errors() {
    assert_eq!(
        ncx(&[
            "facets",
            "--k",
            "3",
            "--n",
            "6",
            "--complex",
            "sep",
            "--method",
            "flip"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        ncx(&["facets", "--k", "4", "--n", "9"]).status.code(),
        Some(3)
    );
    assert_eq!(
        ncx(&["facets", "--k", "0", "--n", "5"]).status.code(),
        Some(2)
    );
    assert_eq!(
        ncx(&["facets", "--k", "5", "--n", "5"]).status.code(),
        Some(2)
    );
}

#[test]
fn tamari_checks() {
    let o = ncx(&[
        "tamari",
        "--k",
        "2",
        "--n",
        "5",
        "--check",
        "acyclic,lattice",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "acyclic: PASS\nlattice: PASS\n");
    let o = ncx(&[
        "tamari",
        "--k",
        "3",
        "--n",
        "6",
        "--check",
        "lattice,geom-orientation,shelling,selfdual",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).matches("PASS").count(), 4);
}

#[test]
fn tamari_exports() {
    let o = ncx(&[
        "tamari", "--k", "2", "--n", "5", "--out", "dot", "--check", "acyclic",
    ]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 5);
    assert_eq!(stderr(&o).trim(), "acyclic: PASS");
    let o = ncx(&["tamari", "--k", "2", "--n", "5", "--out", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.is_object());
}

#[test]
fn verify_reports() {
    let o = ncx(&["verify", "--k", "2", "--n", "5"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    let o = ncx(&["verify", "--k", "3", "--n", "6", "--suite", "complex"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let checks = v["suites"][0]["checks"].as_array().unwrap();
    let edges = checks.iter().find(|c| c["name"] == "edge_counts").unwrap();
    assert_eq!(edges["status"], "pass");
    assert!(
        ncx(&["verify", "--k", "3", "--n", "6", "--suite", "geometry"])
            .status
            .success()
    );
}

#[test]
fn cube_diameters() {
    let d = |dim: &str, t: &str| {
        stdout(&ncx(&[
            "cube",
            "--dim",
            dim,
            "--triangulation",
            t,
            "--diameter",
        ]))
        .trim()
        .to_string()
    };
    assert_eq!(d("4", "standard"), "6");
    assert_eq!(d("2", "noncrossing"), "1");
    assert_eq!(d("5", "noncrossing"), "20");
    let o = ncx(&["cube", "--dim", "2", "--triangulation", "standard"]);
    let v: Vec<Vec<String>> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.len(), 2);
    assert_eq!(
        ncx(&["cube", "--dim", "7", "--triangulation", "standard"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn usage_errors() {
    assert_eq!(ncx(&["frobnicate"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_ncx"))
        .args(["facets", "--k", "2", "--n", "5"])
        .env("NCX_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
