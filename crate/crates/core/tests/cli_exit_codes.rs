//! Exit statuses of the installed binary.

mod common;

use std::io::Write;
use std::process::{Command, Stdio};

use common::fixture;

fn bin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_lfsr-spectra"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn path(name: &str) -> String {
    fixture(name).display().to_string()
}

#[test]
fn success_reads_stdin() {
    let (code, out, _) = bin(&["attack", "-c", &path("example3.toml")], "1011110001111010111001011010111\n");
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["tau", "19"]), "{out}");
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(bin(&["nonsense"], "").0, 1);
    assert_eq!(bin(&["attack", "-c", &path("example3.toml"), "--bits", "1011"], "").0, 1);
    let dir = std::env::temp_dir().join("lfsr-spectra-bad-anf.toml");
    std::fs::write(&dir, "[generator]\nkind = \"combiner\"\n[lfsr.1]\npoly = \"x^2+x+1\"\n[function]\nanf = \"a1*q2\"\n").unwrap();
    let (code, _, err) = bin(&["gen", "-c", dir.to_str().unwrap(), "-n", "4"], "");
    assert_eq!(code, 1);
    assert!(err.contains("q2"), "{err}");
}

#[test]
fn inapplicable_exits_2() {
    let dir = std::env::temp_dir().join("lfsr-spectra-linear.toml");
    std::fs::write(
        &dir,
        "[generator]\nkind = \"combiner\"\n[lfsr.1]\npoly = \"x^3+x+1\"\n[lfsr.2]\npoly = \"x^5+x^2+1\"\n[function]\nanf = \"a1*a2\"\n",
    )
    .unwrap();
    let (code, _, err) = bin(&["attack", "-c", dir.to_str().unwrap(), "--bits", "0000000000000001"], "");
    assert_eq!(code, 2, "{err}");
}

#[test]
fn inconsistent_exits_3() {
    let (code, _, err) = bin(&["attack", "-c", &path("example3.toml"), "--bits", "1011110001111010111001011010110000"], "");
    assert_eq!(code, 3, "{err}");
}
