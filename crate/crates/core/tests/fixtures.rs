//! Replays every committed fixture through the command-line front end.

mod common;

use common::fixture;
use lfsr_spectra::cli::{run_captured, Report};

fn run(args: &[&str]) -> (i32, String) {
    let mut argv = vec!["lfsr-spectra".to_string()];
    argv.extend(args.iter().map(|a| a.to_string()));
    let (code, out, err) = run_captured(argv, &mut std::io::empty());
    assert!(err.is_empty() || code != 0, "{err}");
    (code, out)
}

fn expected(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

fn path(name: &str) -> String {
    fixture(name).display().to_string()
}

#[test]
fn msequence_spectrum() {
    let (code, out) = run(&["--format", "kv", "dft", "--bits", "0010111"]);
    assert_eq!(code, 0);
    assert_eq!(out, expected("dft_msequence.expected"));
}

#[test]
fn product_spectrum_with_prediction() {
    let (_, z) = run(&["gen", "-c", &path("example1.toml")]);
    let (code, out) = run(&["--format", "kv", "dft", "--bits", z.trim(), "-c", &path("example1.toml")]);
    assert_eq!(code, 0);
    assert_eq!(out, expected("example1_dft.expected"));
    let r = Report::parse_kv(&out).unwrap();
    assert_eq!(r.get("support"), Some("{5,10,13,17,19,20}"));
    assert_eq!(r.get("prediction_matches"), Some("true"));
}

#[test]
fn majority_analysis() {
    let (code, out) = run(&["--format", "kv", "analyze", "-c", &path("example2.toml")]);
    assert_eq!(code, 0);
    assert_eq!(out, expected("example2_analyze.expected"));
    let r = Report::parse_kv(&out).unwrap();
    assert_eq!(r.get("lc.measured"), Some("31"));
    assert_eq!(r.get("cost.exhaustive"), Some("512"));
}

#[test]
fn crt_solve() {
    let (code, out) = run(&["--format", "kv", "crt", "solve", "1:3", "3:7", "15:31"]);
    assert_eq!(code, 0);
    assert_eq!(out, expected("example2_crt.expected"));
}

#[test]
fn keystream_generation() {
    let (code, out) = run(&["gen", "-c", &path("example3.toml"), "--states", "10,101,01111", "-n", "31"]);
    assert_eq!(code, 0);
    assert_eq!(out, expected("example3_gen.expected"));
    assert_eq!(run(&["gen", "-c", &path("example3.toml"), "-n", "0"]), (0, "\n".to_string()));
}

#[test]
fn attack_report() {
    let (code, out) = run(&["--format", "kv", "attack", "-c", &path("example3.toml"), "-i", &path("example3.keystream")]);
    assert_eq!(code, 0);
    assert_eq!(out, expected("example3_attack.expected"));
    let r = Report::parse_kv(&out).unwrap();
    assert_eq!(r.get("tau"), Some("19"));
    assert_eq!(r.get("state.3"), Some("01111"));
}

#[test]
fn filter_and_a51_analysis() {
    let (_, out) = run(&["--format", "kv", "analyze", "-c", &path("filter.toml")]);
    assert_eq!(out, expected("filter_analyze.expected"));
    let (_, out) = run(&["--format", "kv", "analyze", "-c", &path("a51.toml")]);
    assert_eq!(out, expected("a51_analyze.expected"));
}

#[test]
fn text_and_kv_carry_the_same_entries() {
    let (_, kv) = run(&["--format", "kv", "factor", "x^31+x^29+x^28+x^27+x^24+x^23+x^22+x^20+x^18+x^17+x^16+x^15+x^13+x^11+x^10+x^9+x^8+x^7+x^5+x^4+x^2+x+1"]);
    let (_, text) = run(&["factor", "x^31+x^29+x^28+x^27+x^24+x^23+x^22+x^20+x^18+x^17+x^16+x^15+x^13+x^11+x^10+x^9+x^8+x^7+x^5+x^4+x^2+x+1"]);
    let r = Report::parse_kv(&kv).unwrap();
    assert_eq!(r.get("factors"), Some("3"));
    assert_eq!(text.lines().count(), r.entries.len());
    for ((k, v), line) in r.entries.iter().zip(text.lines()) {
        assert!(line.starts_with(k.as_str()) && line.ends_with(v.as_str()), "{line}");
    }
}
