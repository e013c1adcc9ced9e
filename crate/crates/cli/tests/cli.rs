use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use reslat_core::shell::deserialize;

fn reslat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reslat"))
        .args(args)
        .output()
        .expect("run reslat")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn audits_match_golden_files() {
    let mut seen = 0;
    for entry in fs::read_dir(fixtures()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("reslat") {
            continue;
        }
        let stem = path.file_stem().unwrap().to_str().unwrap().to_string();
        let golden = fixtures().join("golden").join(format!("{stem}.audit.txt"));
        let expected = fs::read_to_string(&golden).unwrap();
        let before = fs::read(&path).unwrap();
        let first = reslat(&["audit", path.to_str().unwrap()]);
        let second = reslat(&["audit", path.to_str().unwrap()]);
        assert_eq!(stdout(&first), expected, "{stem}");
        assert_eq!(first.stdout, second.stdout);
        assert_eq!(fs::read(&path).unwrap(), before, "audit changed {stem}");
        let code = if expected.contains("  FAIL ") { 1 } else { 0 };
        assert_eq!(first.status.code(), Some(code), "{stem}");
        seen += 1;
    }
    assert_eq!(seen, 7);
}

#[test]
fn check_exit_codes() {
    let out = reslat(&["check", "Id(Z8)"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("mv: true"));

    let out = reslat(&["check", "ord(Id(Z2), Id(Z2 x Z2))", "--props", "prel,div"]);
    assert_eq!(out.status.code(), Some(0));

    let out = reslat(&["check", "ord(Id(Z2), Id(Z2 x Z2))"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("chain: false"));
    let out = reslat(&["check", "ord(Id(Z2), Id(Z2 x Z2))", "--props", "chain"]);
    assert_eq!(out.status.code(), Some(1));

    let out = reslat(&["check", "ord(Id(Z2 x Z2), Id(Z2))", "--props", "prel"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("witness prel:"));

    let out = reslat(&["check", "Id(Z)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("expected integer"));

    let out = reslat(&["check", "Id(Z128 x Z64)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ideals_report_counts_and_flags() {
    let out = reslat(&["ideals", "Z12"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0));
    assert!(text.starts_with("ring Z12: 12 elements, 6 ideals\n"), "{text}");
    assert_eq!(text.matches("[maximal]").count(), 2);
    assert!(text.contains("local: false"));

    let out = reslat(&["ideals", "Z6[X]/(X^2)", "--claims"]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(1));
    assert!(text.contains("36 elements, 9 ideals"));
    assert!(text.contains("FAIL ideal count = 2^r + 1 (r = 2): expected 5, computed 9"));

    let out = reslat(&["ideals", "Z2 x Z4", "--claims"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn blring_verdicts() {
    assert_eq!(reslat(&["blring", "Z6[X]/(X^2)"]).status.code(), Some(0));
    let out = reslat(&["blring", "Z4[X]/(X^2)"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("routes_agree: true"));
}

#[test]
fn tables_csv_and_out_dir() {
    let dir = tempfile::tempdir().unwrap();
    let out = reslat(&[
        "tables",
        "ord(Id(Z2), Id(Z2))",
        "--format",
        "csv",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("leq,"), "{text}");
    assert_eq!(text.lines().count(), 12);
    let saved = fs::read_to_string(dir.path().join("algebra.reslat")).unwrap();
    assert_eq!(deserialize(&saved).unwrap().size(), 3);
}

#[test]
fn enumerate_writes_loadable_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = reslat(&["enumerate", "4", "--out", dir.path().to_str().unwrap()]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("ordinal: 5 algebras"));
    assert!(text.contains("oracle: 5 algebras"));
    assert!(text.contains("canonical key sets match"));
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 10);
    for f in files {
        let text = fs::read_to_string(f.unwrap().path()).unwrap();
        deserialize(&text).unwrap();
    }

    let out = reslat(&["enumerate", "4", "--filter", "mv"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("oracle: 2 algebras"));
}

#[test]
fn iso_reports_mapping() {
    let out = reslat(&["iso", "prod(L2, L2)", "Id(Z2 x Z2)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("isomorphic\n"));
    assert_eq!(text.matches(" -> ").count(), 4);

    let out = reslat(&["iso", "L4", "Id(Z2 x Z2)"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "not isomorphic\n");
}

#[test]
fn audit_of_missing_file_is_a_usage_error() {
    let out = reslat(&["audit", "no/such/file.reslat"]);
    assert_eq!(out.status.code(), Some(2));
}
