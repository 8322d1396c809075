use std::path::PathBuf;
use std::process::Command;

use kloop::parse_table;
use kloop_core::loops::make_loop;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn kloop(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_kloop")).args(args).output().expect("spawn kloop");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn validate_reports_kloop() {
    let (code, out, err) = kloop(&["validate", &fixture("z5.tbl"), "--as", "kloop"]);
    assert_eq!(code, 0, "{err}");
    assert!(
        out.contains("kind: kloop\n") && out.contains("is_u2d: true\n") && out.ends_with("valid: true\n")
    );
}

#[test]
fn validate_exit_codes() {
    let cases = [
        ("notlatin.tbl", "kloop", 2),
        ("noidentity.tbl", "kloop", 2),
        ("d8.tbl", "kloop", 1),
        ("nonbol5.tbl", "bol", 1),
        ("z5.sym", "symetron", 0),
        ("z5.tbl", "symetron", 1),
        ("z4.tbl", "kloop", 0),
    ];
    for (file, kind, expected) in cases {
        let (code, _, err) = kloop(&["validate", &fixture(file), "--as", kind]);
        assert_eq!(code, expected, "{file} as {kind}: {err}");
    }
}

#[test]
fn failures_carry_witnesses() {
    let (_, out, _) = kloop(&["validate", &fixture("d8.tbl"), "--as", "kloop"]);
    assert!(out.contains("is_aip: false\naip_witness: 1,2\n"));
    let (_, out, _) = kloop(&["validate", &fixture("z5.tbl"), "--as", "symetron"]);
    assert!(out.contains("reason: NotSymetron"));
    let (_, _, err) = kloop(&["validate", &fixture("notlatin.tbl")]);
    assert!(err.starts_with("error: NotLatin"));
}

#[test]
fn usage_and_io_errors_exit_2() {
    assert_eq!(kloop(&["bogus"]).0, 2);
    assert_eq!(kloop(&["validate"]).0, 2);
    let (code, _, err) = kloop(&["validate", "/nonexistent/table.tbl"]);
    assert_eq!(code, 2);
    assert!(err.contains("/nonexistent/table.tbl"));
    assert_eq!(kloop(&["--help"]).0, 0);
}

#[test]
fn wreath_invariants() {
    let (code, out, _) = kloop(&["invariants", &fixture("wreath81.tbl")]);
    assert_eq!(code, 0);
    for line in [
        "is_associative: false",
        "mlt_left_size: 243",
        "mlt_size: 6561",
        "precession_group_size: 3",
        "inner_group_size: 81",
        "subloop_count: 68",
        "convex_set_count: 995",
        "is_fixed_point_free: false",
        "is_automorphic: false",
    ] {
        assert!(out.lines().any(|l| l == line), "missing {line}");
    }
}

#[test]
fn cap_overflow_is_reported() {
    let (code, out, _) = kloop(&["--cap", "100", "invariants", &fixture("wreath81.tbl")]);
    assert_eq!(code, 0);
    assert!(out.contains("mlt_size: cap-exceeded\n"));
}

#[test]
fn quotient_emits_a_valid_table() {
    let (code, out, _) = kloop(&["quotient", &fixture("z9.tbl"), "--subloop", "0,3,6"]);
    assert_eq!(code, 0);
    let t = parse_table(&out).unwrap();
    assert_eq!(t.order(), 3);
    assert!(make_loop(&t).unwrap().is_kloop());
    let (code, _, _) = kloop(&["normal", &fixture("z9.tbl"), "--subloop", "0,3,6"]);
    assert_eq!(code, 0);
    let (code, _, _) = kloop(&["normal", &fixture("z9.tbl"), "--subloop", "0,3"]);
    assert_eq!(code, 2);
}

#[test]
fn subloops_and_isomorphisms() {
    let (_, out, _) = kloop(&["subloops", &fixture("z3xz3.tbl")]);
    assert!(out.starts_with("count: 6\n"));
    assert_eq!(out.lines().filter(|l| l.starts_with("subloop:")).count(), 6);
    let (code, out, _) = kloop(&["iso", &fixture("z3.tbl"), &fixture("z3-shifted.tbl")]);
    assert_eq!((code, out.as_str()), (0, "isomorphic: true\nmap: 2,1,0\n"));
    assert_eq!(kloop(&["iso", &fixture("z9.tbl"), &fixture("z3xz3.tbl")]).0, 1);
}

#[test]
fn convert_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let sym = dir.path().join("h.sym");
    let sym = sym.to_str().unwrap();
    let h = fixture("heisenberg27.tbl");
    let (code, out, _) = kloop(&["--out", sym, "convert", &h, "--to", "symetron"]);
    assert_eq!((code, out.as_str()), (0, ""));
    assert_eq!(kloop(&["validate", sym, "--as", "symetron"]).0, 0);
    let back = dir.path().join("h.tbl");
    let back = back.to_str().unwrap();
    assert_eq!(kloop(&["--out", back, "convert", sym, "--to", "kloop", "--basepoint", "0"]).0, 0);
    let (code, out, _) = kloop(&["iso", &h, back]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn cover_and_centralizer() {
    let (code, out, _) = kloop(&["cover", &fixture("z5.sym"), "--subset", "0"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("translates: 5\n"));
    let (code, out, _) = kloop(&["centralizer", &fixture("z9.tbl"), "--element", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("center_contains_generated: true\n"));
    assert_eq!(kloop(&["centralizer", &fixture("d8.tbl"), "--element", "1"]).0, 2);
}

#[test]
fn enumerate_split_writes_valid_tables() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, out, _) = kloop(&["enumerate", "--order", "8", "--split", d]);
    assert_eq!(code, 0);
    assert!(out.starts_with("classes: 6\n"));
    let mut files: Vec<_> = std::fs::read_dir(d).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert_eq!(files.len(), 6);
    for f in files {
        let t = parse_table(&std::fs::read_to_string(&f).unwrap()).unwrap();
        assert!(make_loop(&t).unwrap().is_kloop(), "{}", f.display());
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["invariants", &fixture("heisenberg27.tbl")];
    assert_eq!(kloop(&args), kloop(&args));
    let args = ["enumerate", "--order", "8"];
    assert_eq!(kloop(&args), kloop(&args));
}
