use std::process::Command;

use copwin::cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("copwin").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

/// Matrix block of `analyze --matrix` output: everything after the summary.
fn matrix_part(text: &str) -> &str {
    let (_, rest) = text.split_once("\ntheta: ").unwrap();
    &rest[rest.find('\n').unwrap() + 1..]
}

#[test]
fn analyze_spider() {
    let out = ok(&["analyze", "--gen", "spider:1,2,3"]);
    assert_eq!(
        out,
        "vertices: 7\nedges: 6\ncopwin: true\nrho: 5\neta: 3\ntheta: {r, x3.1}\n"
    );
}

#[test]
fn analyze_non_copwin() {
    let out = ok(&["analyze", "--gen", "cycle:4", "--matrix"]);
    assert!(out.contains("copwin: false\nrho: 0\neta: -\ntheta: -\n"));
    assert!(out.contains("v1  0  -  -  -"));
}

#[test]
fn analyze_and_oracle_matrices_agree() {
    for spec in [
        "spider:1,2,3",
        "cycle:4",
        "polat:3",
        "s:4",
        "complete:4",
        "cycle:5",
    ] {
        let analyzed = ok(&["analyze", "--gen", spec, "--matrix"]);
        let oracle = ok(&["oracle", "--gen", spec]);
        assert_eq!(matrix_part(&analyzed), oracle, "{spec}");
    }
}

#[test]
fn json_is_stable() {
    let a = ok(&["analyze", "--gen", "path:3", "--json"]);
    let b = ok(&["analyze", "--gen", "path:3", "--json"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["rho"], 2);
    assert_eq!(v["eta"], 1);
    assert_eq!(v["theta"], serde_json::json!(["p2"]));
    assert_eq!(v["vertices"], serde_json::json!(["p1", "p2", "p3"]));
    assert_eq!(v["matrix"][0], serde_json::json!([0, 1, 2]));
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let c4 = ok(&["analyze", "--gen", "cycle:4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&c4).unwrap();
    assert!(v["theta"].is_null());
    assert!(v["matrix"][0][1].is_null());
}

#[test]
fn generate_then_analyze_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for spec in ["spider:1,2,3", "s:5", "polat:5:2", "cycle:6"] {
        let path = dir.path().join("g.txt");
        let path_str = path.to_str().unwrap();
        assert_eq!(ok(&["generate", spec, "-o", path_str]), "");
        for flags in [&[][..], &["--matrix"][..], &["--json"][..]] {
            let mut from_file = vec!["analyze", path_str];
            from_file.extend_from_slice(flags);
            let mut from_gen = vec!["analyze", "--gen", spec];
            from_gen.extend_from_slice(flags);
            assert_eq!(ok(&from_file), ok(&from_gen), "{spec} {flags:?}");
        }
        let stdout = ok(&["generate", spec]);
        assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
    }
}

#[test]
fn graph_file_errors_report_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "v a\ne a b\nq c\n").unwrap();
    let (code, _, err) = call(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 3, column 1"), "{err}");
    let (code, _, _) = call(&["analyze", dir.path().join("missing").to_str().unwrap()]);
    assert_eq!(code, 1);
    std::fs::write(&path, "v a\nv b\n").unwrap();
    let (code, _, err) = call(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("disconnected"));
}

#[test]
fn simulate_path() {
    let out = ok(&[
        "simulate", "--gen", "path:4", "--robber", "p1", "--cop", "p4",
    ]);
    assert!(out.ends_with("captured at round 3\n"), "{out}");
    assert!(out
        .starts_with("start: robber p1 cop p4\nround 1: robber p1 -> p1\nround 1: cop p4 -> p3\n"));
    let out = ok(&[
        "simulate",
        "--gen",
        "cycle:4",
        "--robber",
        "v1",
        "--cop",
        "v3",
        "--max-rounds",
        "100",
    ]);
    assert!(out.ends_with("survived 100 rounds\n"));
    let a = ok(&[
        "simulate",
        "--gen",
        "s:5",
        "--robber",
        "3/2/1/0/r",
        "--cop",
        "r",
        "--robber-policy",
        "random:5",
    ]);
    let b = ok(&[
        "simulate",
        "--gen",
        "s:5",
        "--robber",
        "3/2/1/0/r",
        "--cop",
        "r",
        "--robber-policy",
        "random:5",
    ]);
    assert_eq!(a, b);
    assert_eq!(
        call(&[
            "simulate",
            "--gen",
            "path:3",
            "--robber",
            "p1",
            "--cop",
            "p2",
            "--robber-policy",
            "lazy"
        ])
        .0,
        2
    );
}

#[test]
fn classify_and_family() {
    assert_eq!(
        ok(&["classify", "w*2"]),
        "ordinal: w*2\nlimit: true\nsuccessor: false\nsplit: w*2 + 0\nlambda_T: true\nupsilon: true\n"
    );
    assert!(ok(&["classify", "w + 1"]).contains("lambda_T: false\nupsilon: true\n"));
    assert_eq!(
        ok(&["family", "s", "--alpha", "w+1"]),
        "eta: w\nrho: w*2\ntheta: contains the root r\n"
    );
    assert!(ok(&["family", "tomega"]).starts_with("eta: w\nrho: w*2\n"));
    assert!(ok(&["family", "polat", "--i", "2", "--j", "3"]).contains("rho: w*3+5\n"));
    assert_eq!(call(&["family", "polat", "--i", "0", "--j", "3"]).0, 1);
    assert_eq!(call(&["family", "s", "--alpha", "0"]).0, 1);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_copwin");
    let out = Command::new(bin)
        .args(["analyze", "--gen", "spider:1,2,3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("rho: 5"));
    let out = Command::new(bin)
        .args(["analyze", "--gen", "nope:1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = Command::new(bin).args(["bogus"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
