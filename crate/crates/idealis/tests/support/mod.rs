#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub const REFERENCE_RINGS: [(&str, &str); 5] = [
    ("integers", r#"{"kind":"integers"}"#),
    ("gaussian", r#"{"kind":"quadratic_order","d":-1}"#),
    ("sqrt_minus_five", r#"{"kind":"quadratic_order","d":-5}"#),
    ("rational_poly", r#"{"kind":"poly","base":"Q"}"#),
    ("conductor_two", r#"{"kind":"quadratic_order","d":-3,"conductor":2}"#),
];

pub fn idealis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idealis")).args(args).output().expect("run idealis")
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden").join(format!("{name}.json"))
}

fn report(descriptor: &str, threads: &str) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_idealis"))
        .args(["report", "--ring", descriptor])
        .env("IDEALIS_THREADS", threads)
        .output()
        .expect("run idealis");
    assert!(out.status.success(), "{descriptor}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf8 report")
}

/// Reports for the reference rings are stable across runs and equal the checked-in files.
/// `IDEALIS_BLESS=1` rewrites the files instead.
pub fn golden_regression() {
    let bless = std::env::var_os("IDEALIS_BLESS").is_some();
    for (name, descriptor) in REFERENCE_RINGS {
        let first = report(descriptor, "1");
        let second = report(descriptor, "4");
        assert_eq!(first, second, "{name}: report differs between runs");
        let path = golden_path(name);
        if bless {
            std::fs::write(&path, &first).unwrap();
            continue;
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert!(first == expected, "{name}: report differs from {}", path.display());
    }
}
