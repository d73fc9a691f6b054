//! TOML generator descriptions.
//!
//! ```toml
//! [generator]
//! kind = "combiner"
//!
//! [lfsr.1]
//! poly = "x^2+x+1"
//! state = "10"
//!
//! [function]
//! anf = "a1*a2 + a2*a3 + a1*a3"
//! ```
//!
//! Filters add `[filter] taps = [..]`; A5/1 uses `[a51] key = "..", frame = ..`.
//! `[attack] k = ..` pins the decimation exponent used by the attack.

use std::collections::BTreeMap;

use serde::Deserialize;

use super::{GenError, GeneratorKind, GeneratorSpec, RegisterSpec};
use crate::boolfn::BooleanFunc;
use crate::gfpoly::BitPoly;
use crate::lfsr::parse_bits;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    generator: RawGenerator,
    #[serde(default)]
    lfsr: BTreeMap<String, RawLfsr>,
    function: Option<RawFunction>,
    filter: Option<RawFilter>,
    a51: Option<RawA51>,
    attack: Option<RawAttack>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGenerator {
    kind: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLfsr {
    poly: String,
    state: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFunction {
    anf: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFilter {
    taps: Vec<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawA51 {
    key: String,
    frame: u32,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAttack {
    k: u64,
}

fn parse_key(s: &str) -> Result<[u8; 8], GenError> {
    let digits: String = s.trim().trim_start_matches("0x").chars().filter(|c| !c.is_whitespace()).collect();
    if digits.len() != 16 {
        return Err(GenError::Config(format!("a51.key must be 8 bytes of hex, got {s:?}")));
    }
    let mut key = [0u8; 8];
    for (i, byte) in key.iter_mut().enumerate() {
        *byte = u8::from_str_radix(&digits[2 * i..2 * i + 2], 16)
            .map_err(|_| GenError::Config(format!("a51.key has a bad hex digit: {s:?}")))?;
    }
    Ok(key)
}

pub fn parse_config(text: &str) -> Result<GeneratorSpec, GenError> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| GenError::Config(e.to_string()))?;
    let kind = match raw.generator.kind.as_str() {
        "combiner" => GeneratorKind::Combiner,
        "filter" => GeneratorKind::Filter,
        "a51" => GeneratorKind::A51,
        other => return Err(GenError::Config(format!("generator.kind {other:?} is not combiner, filter or a51"))),
    };
    let mut indexed = Vec::new();
    for (name, l) in raw.lfsr {
        let idx: usize =
            name.parse().map_err(|_| GenError::Config(format!("lfsr section name {name:?} is not an index")))?;
        let poly: BitPoly = l.poly.parse().map_err(|e| GenError::Config(format!("lfsr.{name}.poly: {e}")))?;
        let state = match l.state {
            Some(s) => Some(parse_bits(&s).map_err(|_| GenError::Config(format!("lfsr.{name}.state: bad bit string {s:?}")))?),
            None => None,
        };
        indexed.push((idx, RegisterSpec { poly, state }));
    }
    indexed.sort_by_key(|(i, _)| *i);
    let registers = indexed.into_iter().map(|(_, r)| r).collect::<Vec<_>>();
    let func = match raw.function {
        Some(f) => Some(BooleanFunc::parse(&f.anf, None).map_err(|e| GenError::Config(format!("function.anf: {e}")))?),
        None => None,
    };
    let (key, frame) = match raw.a51 {
        Some(a) => (Some(parse_key(&a.key)?), Some(a.frame)),
        None => (None, None),
    };
    let spec = GeneratorSpec {
        kind,
        registers,
        func,
        taps: raw.filter.map(|f| f.taps).unwrap_or_default(),
        key,
        frame,
        attack_k: raw.attack.map(|a| a.k),
    };
    spec.validate()?;
    Ok(spec)
}

pub fn load_config(path: &std::path::Path) -> Result<GeneratorSpec, GenError> {
    let text = std::fs::read_to_string(path).map_err(|e| GenError::Config(format!("{}: {e}", path.display())))?;
    parse_config(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combiner_config() {
        let spec = parse_config(
            r#"
            [generator]
            kind = "combiner"
            [lfsr.2]
            poly = "x^3+x+1"
            [lfsr.1]
            poly = "x^2+x+1"
            state = "10"
            [function]
            anf = "a1*a2"
            [attack]
            k = 5
            "#,
        )
        .unwrap();
        assert_eq!(spec.registers[0].poly.to_string(), "x^2+x+1");
        assert_eq!(spec.registers[0].state, Some(vec![1, 0]));
        assert_eq!(spec.registers[1].state, None);
        assert_eq!(spec.attack_k, Some(5));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_config("[generator]\nkind = \"combiner\"\nextra = 1\n").is_err());
        let bad_anf = "[generator]\nkind = \"combiner\"\n[lfsr.1]\npoly = \"x^2+x+1\"\n[function]\nanf = \"a1*q2\"\n";
        let err = parse_config(bad_anf).unwrap_err().to_string();
        assert!(err.contains("q2"), "{err}");
        assert!(parse_config("[generator]\nkind = \"shrinking\"\n").is_err());
    }

    #[test]
    fn a51_config() {
        let spec = parse_config("[generator]\nkind = \"a51\"\n[a51]\nkey = \"12 23 45 67 89 AB CD EF\"\nframe = 0x134\n").unwrap();
        assert_eq!(spec.key, Some([0x12, 0x23, 0x45, 0x67, 0x89, 0xAB, 0xCD, 0xEF]));
        assert_eq!(spec.frame, Some(0x134));
    }
}
