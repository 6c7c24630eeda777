use std::path::Path;
use std::process::Command;

use scheme_forge_cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("scheme-forge").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn verify_fano_flags() {
    let (code, out, _) = call(&["verify", "scheme", "fano-flags"]);
    assert_eq!(code, 0);
    assert_eq!(out, "valid, s=6, non-commutative\n");
}

#[test]
fn hyper_hamming_2() {
    let (code, out, _) = call(&["hyper", "hamming-2"]);
    assert_eq!(code, 0);
    let expected = "\
hypergroup, m=3, e=0, inv=[0, 1, 2], commutative
0*0={0}
0*1={1}
0*2={2}
1*0={1}
1*1={0,2}
1*2={1}
2*0={2}
2*1={1}
2*2={0}
";
    assert_eq!(out, expected);
}

#[test]
fn search_sign_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("S.json");
    let (code, _, _) = call(&["export", "hypergroup", "S", "--out", path_str(&file)]);
    assert_eq!(code, 0);
    let (code, out, _) = call(&["search", path_str(&file), "--nmax", "6"]);
    assert_eq!(code, 1);
    assert!(out.ends_with("no realization on ≤ 6 points\n"), "{out}");
    assert!(out.starts_with("n=3 exhausted: "));
    let (code, out, _) = call(&["search", "K", "--nmax", "3"]);
    assert_eq!(code, 0);
    assert!(out.ends_with("realized on 3 points\n"));
}

#[test]
fn search_json_output() {
    let (code, out, _) = call(&["--json", "search", "K", "--nmax", "3"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["found"], true);
    assert_eq!(v["scheme"]["n"], 3);
}

#[test]
fn round_trip_is_bitwise_identical() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, name) in [
        ("scheme", "fano-flags"),
        ("hypergroup", "S3/Inn"),
        ("geometry", "F64/F4"),
    ] {
        let first = dir.path().join("first.json");
        let second = dir.path().join("second.json");
        assert_eq!(
            call(&["export", kind, name, "--out", path_str(&first)]).0,
            0
        );
        assert_eq!(
            call(&["export", kind, path_str(&first), "--out", path_str(&second)]).0,
            0
        );
        let a = std::fs::read(&first).unwrap();
        let b = std::fs::read(&second).unwrap();
        assert_eq!(a, b, "{kind} {name}");
        assert!(!a.contains(&b' ') && !a.contains(&b'\n'));
    }
}

#[test]
fn verification_failures_exit_one_with_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.json");
    std::fs::write(&file, r#"{"n":3,"rel":[[0,1,1],[2,0,1],[1,1,0]]}"#).unwrap();
    let (code, out, _) = call(&["verify", "scheme", path_str(&file), "--witnesses", "2"]);
    assert_eq!(code, 1);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[1], "AXIOM star WITNESS (0,2)");
    let (code, out, _) = call(&["--json", "verify", "scheme", path_str(&file)]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(v["valid"], false);
    assert_eq!(v["violations"][0]["axiom"], "star");
    let (code, out, _) = call(&["triangle", "Z8-2adic"]);
    assert_eq!(code, 1);
    assert!(out.contains("AXIOM triangle-empty"));
    assert_eq!(call(&["triangle", "Z9-3adic"]).0, 0);
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&[]).0, 2);
    let (code, _, err) = call(&["verify", "scheme", "/nonexistent/x.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("/nonexistent/x.json"));
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("broken.json");
    std::fs::write(&file, "{\"n\": 2, \"rel\": [[0,1],").unwrap();
    let (code, _, err) = call(&["build", path_str(&file)]);
    assert_eq!(code, 2);
    assert!(err.contains("malformed JSON"));
    let (code, _, err) = call(&["build", "hamming-11"]);
    assert_eq!(code, 2);
    assert!(err.contains("bound 10"));
    let (code, _, err) = call(&["search", "S", "--nmax", "9"]);
    assert_eq!(code, 2);
    assert!(err.contains("bound 8"));
    assert_eq!(call(&["build", "no-such-name"]).0, 2);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn other_verbs() {
    assert_eq!(
        call(&["mult", "hamming-2", "1", "1"]),
        (0, "{0,2}\n".to_string(), String::new())
    );
    let (code, out, _) = call(&["sub", "S3/Inn"]);
    assert_eq!(code, 0);
    // s*·{0}·s = s*s is larger than {0} for the transposition class
    assert_eq!(
        out,
        "{0} normal\n{0,1,2} strongly-normal\n{0,2} strongly-normal\n"
    );
    let (code, out, _) = call(&["quotient", "Z4", "0,2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("valid, n=2, s=2"));
    let (code, out, _) = call(&["quotient", "S3", "0,1"]);
    assert_eq!(code, 1, "{out}");
    let (code, out, _) = call(&["product", "Z2", "Z3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("valid, n=6, s=6, commutative"));
    let (code, out, _) = call(&["product", "K", "K"]);
    assert_eq!(code, 0);
    assert!(out.contains("3*3={0,1,2,3}"));
    let (code, out, _) = call(&["restrict", "S3/Inn", "0,2", "--x0", "1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("valid, n=3, s=2"));
    let (code, out, _) = call(&["geometry", "F16/F4"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "valid, points=5, lines=1, degenerate\n[0, 1, 2, 3, 4]\n"
    );
    assert_eq!(call(&["geometry", "S3/Inn"]).0, 1);
    let (code, out, _) = call(&["catalog"]);
    assert_eq!(code, 0);
    assert!(out.contains("fano-flags") && out.contains("F64/F4"));
    let (code, out, _) = call(&["verify", "hypergroup", "S"]);
    assert_eq!((code, out.as_str()), (0, "valid, m=3, commutative\n"));
    let (code, out, _) = call(&["verify", "geometry", "F64/F4"]);
    assert_eq!((code, out.as_str()), (0, "valid, points=21, lines=21\n"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_scheme-forge");
    let status = Command::new(bin)
        .args(["verify", "scheme", "fano-flags"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));
    let status = Command::new(bin)
        .args(["triangle", "Z8-2adic"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(1));
    let status = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(status.status.code(), Some(2));
    let out = Command::new(bin)
        .args(["search", "S", "--nmax", "6"])
        .env("SCHEME_FORGE_THREADS", "0")
        .output()
        .unwrap();
    let par = Command::new(bin)
        .args(["search", "S", "--nmax", "6"])
        .env("SCHEME_FORGE_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(out.stdout, par.stdout);
    assert_eq!(out.status.code(), Some(1));
}
