use std::path::PathBuf;
use std::process::{Command, Output};

use fano212_cli::{parse_instance, serialize_instance, DiagnosticCode};
use serde_json::Value;

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn fano212(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fano212")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn tree(args: &[&str]) -> (Value, i32) {
    let mut args = args.to_vec();
    args.extend(["--format", "tree"]);
    let out = fano212(&args);
    let value = serde_json::from_slice(&out.stdout).expect("tree output is JSON");
    (value, code(&out))
}

/// `(subcommand args, instance file, exit code)`.
const EXIT_CODES: &[(&[&str], &str, i32)] = &[
    (&["validate"], "n2_symmetric.txt", 0),
    (&["smooth"], "n2_symmetric.txt", 0),
    (&["gfano"], "n2_symmetric.txt", 0),
    (&["chars"], "n2_symmetric.txt", 0),
    (&["chars", "--oracle"], "n8_swap.txt", 0),
    (&["verify"], "n2_symmetric.txt", 0),
    (&["verify"], "n6_swap.txt", 0),
    (&["verify"], "n8_swap.txt", 0),
    (&["verify"], "n4_diagonal.txt", 0),
    (&["hilbert"], "n8_swap.txt", 0),
    (&["hilbert"], "n4_diagonal.txt", 0),
    (&["picard"], "n6_swap.txt", 0),
    (&["verdict"], "n8_swap.txt", 0),
    (&["verdict"], "n4_diagonal.txt", 0),
    (&["validate"], "wrong_exponents.txt", 1),
    (&["verify"], "wrong_exponents.txt", 1),
    (&["smooth"], "singular.txt", 1),
    (&["validate"], "bad_shape.txt", 2),
    (&["verify"], "bad_parity.txt", 2),
    (&["smooth"], "bad_literal.txt", 2),
    (&["validate"], "not_invariant.txt", 2),
    (&["verify"], "missing.txt", 2),
];

#[test]
fn golden_exit_codes() {
    for (args, file, expected) in EXIT_CODES {
        let path = golden(file);
        let mut full = args.to_vec();
        full.extend(["--input", path.to_str().unwrap()]);
        let out = fano212(&full);
        assert_eq!(code(&out), *expected, "{args:?} {file}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn golden_files_are_canonical() {
    for file in ["n2_symmetric.txt", "n6_swap.txt", "n8_swap.txt", "n4_diagonal.txt", "wrong_exponents.txt", "singular.txt"] {
        let text = std::fs::read_to_string(golden(file)).unwrap();
        let inst = parse_instance(&text).unwrap();
        assert_eq!(serialize_instance(&inst), text, "{file}");
    }
}

#[test]
fn diagnostics_for_bad_files() {
    let read = |f: &str| std::fs::read_to_string(golden(f)).unwrap();
    let err = parse_instance(&read("bad_shape.txt")).unwrap_err();
    assert_eq!(err.code, DiagnosticCode::Shape);
    assert!(err.message.contains("matrix.2"));
    let err = parse_instance(&read("bad_parity.txt")).unwrap_err();
    assert_eq!(err.code, DiagnosticCode::Parity);
    assert!(err.message.contains("true projective order is 4"));
    let err = parse_instance(&read("bad_literal.txt")).unwrap_err();
    assert_eq!((err.code, err.line), (DiagnosticCode::Literal, 8));
}

#[test]
fn verify_on_symmetric_instance() {
    let path = golden("n2_symmetric.txt");
    let (report, exit) = tree(&["verify", "--input", path.to_str().unwrap()]);
    assert_eq!(exit, 0);
    assert_eq!(report["formula"]["jac"]["text"], "{0,0,0} mod 2");
    assert_eq!(report["formula"]["ij"]["text"], "{1,1,1} mod 2");
    assert_eq!(report["oracle"]["jac"], report["formula"]["jac"]);
    assert_eq!(report["oracle"]["ij"], report["formula"]["ij"]);
    assert_eq!(report["agreement"], true);
    assert!(report["convention"].as_str().unwrap().contains("varpi = zeta_n"));
}

#[test]
fn diagonal_verify_has_no_sign() {
    let path = golden("n4_diagonal.txt");
    let (report, exit) = tree(&["verify", "--input", path.to_str().unwrap()]);
    assert_eq!(exit, 0);
    assert_eq!(report["oracle"]["ij"], report["oracle"]["jac"]);
    assert!(report["formula"].get("differ").is_none());
}

#[test]
fn verdicts() {
    for (file, expected) in [("n2_symmetric.txt", "NotLinearisable"), ("n8_swap.txt", "NotLinearisable"), ("n4_diagonal.txt", "Linearisable")] {
        let path = golden(file);
        let (report, exit) = tree(&["verdict", "--input", path.to_str().unwrap()]);
        assert_eq!(exit, 0);
        assert_eq!(report["verdict"], expected, "{file}");
    }
}

#[test]
fn cohomology_tables() {
    let (report, exit) = tree(&["cohomology", "--a", "0", "--b", "0"]);
    assert_eq!(exit, 0);
    assert_eq!(report["table"]["text"], "(1,0,0,0)");
    let (report, exit) = tree(&["cohomology", "--a", "-1", "--b", "-1"]);
    assert_eq!(exit, 0);
    assert_eq!(report["table"]["text"], "(0,0,0,1)");
    let (_, exit) = tree(&["cohomology", "--a", "-2", "--b", "3"]);
    assert_eq!(exit, 3);
    assert_eq!(code(&fano212(&["cohomology", "--a", "0"])), 2);
}

#[test]
fn picard_without_input() {
    let (report, exit) = tree(&["picard"]);
    assert_eq!(exit, 0);
    assert_eq!(report["involution"]["H"], "3H - 1E");
    assert_eq!(report["invariant_swap"][0], "4H - 1E");
}

#[test]
fn tree_output_is_deterministic() {
    let path = golden("n8_swap.txt");
    let p = path.to_str().unwrap();
    for args in [&["verify", "--input", p, "--format", "tree"][..], &["smooth", "--full", "--input", p, "--format", "tree"]] {
        let a = fano212(args);
        let b = fano212(args);
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn random_is_seeded_and_roundtrips() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("inst.txt");
    let args = ["random", "--order", "4", "--weights", "0,2,0,2", "--exponents", "0,1,2", "--seed", "11"];
    let stdout = fano212(&args);
    assert_eq!(code(&stdout), 0);
    let mut with_out = args.to_vec();
    with_out.extend(["--out", out.to_str().unwrap()]);
    assert_eq!(code(&fano212(&with_out)), 0);
    let written = std::fs::read(&out).unwrap();
    assert_eq!(written, stdout.stdout);
    let text = String::from_utf8(written).unwrap();
    assert_eq!(serialize_instance(&parse_instance(&text).unwrap()), text);
    assert_eq!(code(&fano212(&["verify", "--input", out.to_str().unwrap()])), 0);

    assert_eq!(code(&fano212(&["random", "--order", "2", "--weights", "0,1,0,0", "--exponents", "0,0,0"])), 2);
    assert_eq!(code(&fano212(&["random", "--order", "2", "--weights", "0,0,0", "--exponents", "0,0,0"])), 2);
}

#[test]
fn full_smoothness_reports_every_chart() {
    let path = golden("n2_symmetric.txt");
    let (report, exit) = tree(&["smooth", "--full", "--input", path.to_str().unwrap()]);
    assert_eq!(exit, 0);
    assert_eq!(report["threefold_smooth"], true);
    assert_eq!(report["charts"].as_array().unwrap().len(), 16);
    assert!(report.get("time").is_none());
}
