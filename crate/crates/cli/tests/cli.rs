use std::process::Command;

use riordan::reference;
use riordan_cli::output::{self, parse_triangle_json, Format, Style};

fn riordan(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_riordan"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8"),
        String::from_utf8(out.stderr).expect("utf-8"),
    )
}

fn in_process(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = riordan_cli::run(
        std::iter::once("riordan").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn rna_matrix_text() {
    let (code, out, _) = riordan(&[
        "matrix", "--f", "rna", "--g", "rna", "--rows", "7", "--format", "text",
    ]);
    assert_eq!(code, 0);
    let expected = output::triangle(
        &reference::triangle(reference::RNA_TRIANGLE),
        Style::new(Format::Text),
    );
    assert_eq!(out, expected);
    assert!(out.starts_with("1\n1   1\n1   2   1\n"));
}

#[test]
fn catalan_bcomp_csv() {
    let (code, out, _) = riordan(&["bcomp", "--b", "catalan", "--rows", "11", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().nth(10), Some("0,0,126,0,420,0,252,0,36,0,1"));
    let (_, with_header, _) = riordan(&[
        "bcomp", "--b", "catalan", "--rows", "3", "--format", "csv", "--header",
    ]);
    assert_eq!(with_header, "0,1,2\n1\n0,1\n0,0,1\n");
}

#[test]
fn theorem81_suite_exits_zero() {
    let (code, out, _) = riordan(&["check", "--suite", "theorem81", "--order", "12"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("suite theorem81"));
}

#[test]
fn json_output_parses_back() {
    for args in [
        [
            "matrix",
            "--f",
            "(1+x)/(1-x)^2",
            "--g",
            "1/(1-x)^2",
            "--rows",
            "6",
        ],
        ["comp-poly", "--g", "rna", "--rows", "9", "", ""],
        [
            "matrix",
            "--f",
            "sqrt(1-x)",
            "--g",
            "exp(x/3)",
            "--rows",
            "7",
        ],
    ] {
        let args: Vec<&str> = args.into_iter().filter(|a| !a.is_empty()).collect();
        let (code, text) = in_process(&[&args[..], &["--format", "json"]].concat());
        assert_eq!(code, 0);
        let t = parse_triangle_json(&text).unwrap();
        assert_eq!(output::triangle(&t, Style::new(Format::Json)), text);
        let (_, plain) = in_process(&args);
        assert_eq!(output::triangle(&t, Style::new(Format::Text)), plain);
    }
}

#[test]
fn polynomial_json() {
    let (code, out) = in_process(&["bexpand", "--b", "geom", "--n", "3", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "{\"poly\":{\"1\":\"4/3\",\"2\":\"1/2\",\"3\":\"1/6\"}}\n"
    );
    let (_, sym) = in_process(&["bexpand", "--symbolic", "--n", "6"]);
    assert_eq!(sym, "b0^6 + 10*b0^3*b1 + 4*b0*b2 + 2*b1^2\n");
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("narayana.csv");
    let p = path.to_str().unwrap();
    let (code, stdout) = in_process(&[
        "diag",
        "--of",
        "lmatrix",
        "--g",
        "rna",
        "--rows",
        "12",
        "--index",
        "8",
        "--ascending",
        "--format",
        "csv",
        "--out",
        p,
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "0,0\n1,1\n2,6\n3,6\n4,1\n"
    );
}

#[test]
fn other_commands() {
    assert_eq!(
        in_process(&["power", "--g", "rna", "--phi", "-1", "--rows", "6"]),
        (0, "1, -1, 1, -2, 4, -8\n".into())
    );
    assert_eq!(
        in_process(&["bseq", "--g", "rna", "--rows", "10"]),
        (0, "1, 1, 1, 1, 1\n".into())
    );
    assert_eq!(
        in_process(&["aseq", "--g", "catalan", "--rows", "5"]),
        (0, "1, 1, 1, 1, 1\n".into())
    );
    let (code, out) = in_process(&["sqrt-factor", "--g", "rna", "--rows", "8"]);
    assert_eq!(code, 0);
    assert!(out.contains("s: 0, 1/2, 0, 1/2, 0, 1/2, 0, 1/2\n"), "{out}");
    let (code, out) = in_process(&["bcomp", "--b", "geom", "--beta", "1", "--rows", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out, "0: 1\n1: phi\n2: phi^2\n3: phi^3 + phi\n");
    let (_, out) = in_process(&["bcomp", "--b", "geom", "--phi", "1", "--rows", "8"]);
    assert_eq!(out, "1, 1, 1, 2, 4, 8, 17, 37\n");
    let (_, out) = in_process(&["power", "--g", "rna", "--rows", "4"]);
    assert_eq!(out, "0: 1\n1: phi\n2: phi^2\n3: phi^3 + phi\n");
    let (_, out) = in_process(&[
        "diag", "--of", "bcomp", "--b", "catalan", "--rows", "10", "--index", "2",
    ]);
    assert_eq!(out, "0, 1, 3, 6, 10, 15, 21, 28\n");
}

#[test]
fn exit_codes() {
    let (code, _, err) = riordan(&["matrix", "--g", "1/(1-x"]);
    assert_eq!(code, 2);
    assert!(err.contains("byte 6"), "{err}");
    assert_eq!(riordan(&["no-such-command"]).0, 2);
    assert_eq!(riordan(&["check", "--suite", "no-such-suite"]).0, 2);
    assert_eq!(riordan(&["check"]).0, 2);
    assert_eq!(riordan(&["matrix", "--g", "1/x"]).0, 2);
    assert_eq!(riordan(&["bseq", "--g", "exp(x)"]).0, 2);
    assert_eq!(riordan(&["--help"]).0, 0);
}

#[test]
fn failed_comparison_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.txt");
    std::fs::write(&path, "0 1\n1 2\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(
        riordan(&["oeis-compare", "--bfile", p, "--values", "1,2,3"]).0,
        0
    );
    let (code, out, _) = riordan(&["oeis-compare", "--bfile", p, "--values", "1,3"]);
    assert_eq!(code, 1);
    assert!(out.contains("first mismatch at position 1"), "{out}");
    std::fs::write(&path, "0 1\nzero 2\n").unwrap();
    let (code, _, err) = riordan(&["oeis-compare", "--bfile", p, "--values", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
}
