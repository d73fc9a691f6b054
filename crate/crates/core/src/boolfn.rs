//! Boolean functions in algebraic normal form and their cryptographic metrics.
//!
//! Variables are `a1..al`; in truth tables `a1` is the least significant index bit.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::bitmatrix::BitMatrix;

pub const METRIC_LIMIT: usize = 20;
pub const AI_LIMIT: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoolFnError {
    #[error("cannot parse ANF: unexpected token {token:?}")]
    Parse { token: String },
    #[error("function takes {expected} inputs, got {got}")]
    Width { expected: usize, got: usize },
    #[error("{op} is limited to {limit} variables, function has {l}")]
    TooLarge { op: &'static str, limit: usize, l: usize },
    #[error("truth table length {0} is not a power of two")]
    TableLength(usize),
}

#[derive(Clone, PartialEq, Eq)]
pub struct BooleanFunc {
    l: usize,
    anf: BTreeSet<u32>,
    table: Vec<u8>,
}

/// In-place binary Möbius transform; maps a truth table to ANF coefficients and back.
fn mobius(v: &mut [u8]) {
    let n = v.len();
    let mut step = 1;
    while step < n {
        for i in 0..n {
            if i & step != 0 {
                v[i] ^= v[i ^ step];
            }
        }
        step <<= 1;
    }
}

impl BooleanFunc {
    /// Monomials as variable masks (bit `i` stands for `a{i+1}`; mask 0 is the constant 1).
    pub fn from_anf(l: usize, monomials: impl IntoIterator<Item = u32>) -> Result<Self, BoolFnError> {
        if l > METRIC_LIMIT {
            return Err(BoolFnError::TooLarge { op: "construction", limit: METRIC_LIMIT, l });
        }
        let mut anf = BTreeSet::new();
        for m in monomials {
            if m >> l != 0 {
                return Err(BoolFnError::Width { expected: l, got: 32 - m.leading_zeros() as usize });
            }
            if !anf.remove(&m) {
                anf.insert(m);
            }
        }
        let mut table = vec![0u8; 1 << l];
        for &m in &anf {
            table[m as usize] = 1;
        }
        mobius(&mut table);
        Ok(BooleanFunc { l, anf, table })
    }

    pub fn from_truth_table(table: &[u8]) -> Result<Self, BoolFnError> {
        let n = table.len();
        if !n.is_power_of_two() {
            return Err(BoolFnError::TableLength(n));
        }
        let l = n.trailing_zeros() as usize;
        let mut coeffs: Vec<u8> = table.iter().map(|b| b & 1).collect();
        mobius(&mut coeffs);
        let anf = coeffs.iter().enumerate().filter(|(_, &c)| c == 1).map(|(m, _)| m as u32);
        Self::from_anf(l, anf)
    }

    /// Parses `a1*a2 + a2*a3 + a1*a3 + 1`; `l` defaults to the highest variable index.
    pub fn parse(s: &str, l: Option<usize>) -> Result<Self, BoolFnError> {
        let mut monos = Vec::new();
        let mut max_var = 0;
        for term in s.split('+') {
            let term = term.trim();
            if term.is_empty() {
                return Err(BoolFnError::Parse { token: s.to_string() });
            }
            if term == "1" {
                monos.push(0);
                continue;
            }
            if term == "0" {
                continue;
            }
            let mut mask = 0u32;
            for factor in term.split('*') {
                let factor = factor.trim();
                let idx = factor
                    .strip_prefix('a')
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&i| (1..=METRIC_LIMIT).contains(&i))
                    .ok_or_else(|| BoolFnError::Parse { token: factor.to_string() })?;
                mask |= 1 << (idx - 1);
                max_var = max_var.max(idx);
            }
            monos.push(mask);
        }
        let l = l.unwrap_or(max_var);
        if max_var > l {
            return Err(BoolFnError::Width { expected: l, got: max_var });
        }
        Self::from_anf(l, monos)
    }

    pub fn majority3() -> Self {
        Self::from_anf(3, [0b011, 0b110, 0b101]).expect("three variables")
    }

    pub fn num_vars(&self) -> usize {
        self.l
    }

    pub fn monomials(&self) -> impl Iterator<Item = u32> + '_ {
        self.anf.iter().copied()
    }

    pub fn truth_table(&self) -> &[u8] {
        &self.table
    }

    pub fn evaluate(&self, inputs: &[u8]) -> Result<u8, BoolFnError> {
        if inputs.len() != self.l {
            return Err(BoolFnError::Width { expected: self.l, got: inputs.len() });
        }
        let idx = inputs.iter().enumerate().fold(0usize, |acc, (i, &b)| acc | usize::from(b & 1) << i);
        Ok(self.table[idx])
    }

    /// ANF evaluated over the integers, e.g. the linear complexity of a combiner from its inputs'.
    pub fn integer_eval(&self, values: &[u64]) -> Result<u64, BoolFnError> {
        if values.len() != self.l {
            return Err(BoolFnError::Width { expected: self.l, got: values.len() });
        }
        Ok(self
            .anf
            .iter()
            .map(|&m| (0..self.l).filter(|i| m >> i & 1 == 1).map(|i| values[i]).product::<u64>())
            .sum())
    }

    pub fn algebraic_degree(&self) -> u32 {
        self.anf.iter().map(|m| m.count_ones()).max().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.table.iter().filter(|&&b| b == 1).count()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.weight() == self.table.len()
    }

    /// `W(a) = Σ_x (-1)^{f(x) + a·x}`.
    pub fn walsh_spectrum(&self) -> Vec<i64> {
        let mut w: Vec<i64> = self.table.iter().map(|&b| if b == 1 { -1 } else { 1 }).collect();
        let n = w.len();
        let mut h = 1;
        while h < n {
            for i in (0..n).step_by(2 * h) {
                for j in i..i + h {
                    let (x, y) = (w[j], w[j + h]);
                    w[j] = x + y;
                    w[j + h] = x - y;
                }
            }
            h *= 2;
        }
        w
    }

    pub fn nonlinearity(&self) -> u64 {
        let max = self.walsh_spectrum().iter().map(|w| w.unsigned_abs()).max().unwrap_or(0);
        ((1u64 << self.l) - max) / 2
    }

    /// Largest `t` with `W(a) = 0` for every mask of weight `1..=t`.
    pub fn correlation_immunity(&self) -> usize {
        let w = self.walsh_spectrum();
        let mut t = 0;
        for order in 1..=self.l {
            let ok = (1..w.len()).filter(|a| a.count_ones() as usize == order).all(|a| w[a] == 0);
            if !ok {
                break;
            }
            t = order;
        }
        t
    }

    /// Number of inputs on which `f(x) = x_i`, per variable.
    pub fn agreements(&self) -> Vec<u64> {
        (0..self.l)
            .map(|i| self.table.iter().enumerate().filter(|(x, &b)| (x >> i & 1) as u8 == b).count() as u64)
            .collect()
    }

    /// `P(f(x) = x_i)` over uniform inputs.
    pub fn correlation_probabilities(&self) -> Vec<f64> {
        let total = self.table.len() as f64;
        self.agreements().iter().map(|&a| a as f64 / total).collect()
    }

    /// Least degree of a nonzero `g` with `f·g = 0` or `(f+1)·g = 0`.
    pub fn algebraic_immunity(&self) -> Result<u32, BoolFnError> {
        if self.l > AI_LIMIT {
            return Err(BoolFnError::TooLarge { op: "algebraic immunity", limit: AI_LIMIT, l: self.l });
        }
        let w = self.weight();
        if w == 0 || w == self.table.len() {
            log::warn!("algebraic immunity of a constant function reported as 0");
            return Ok(0);
        }
        for d in 0..=self.l as u32 {
            if has_annihilator(&self.table, self.l, d, 1) || has_annihilator(&self.table, self.l, d, 0) {
                return Ok(d);
            }
        }
        Ok(self.l as u32)
    }
}

/// Whether some nonzero `g` of degree ≤ `d` vanishes wherever `f(x) = value`.
fn has_annihilator(table: &[u8], l: usize, d: u32, value: u8) -> bool {
    let monos: Vec<usize> = (0..1usize << l).filter(|m| m.count_ones() <= d).collect();
    let points: Vec<usize> = (0..table.len()).filter(|&x| table[x] == value).collect();
    let m = BitMatrix::from_fn(points.len(), monos.len(), |r, c| points[r] & monos[c] == monos[c]);
    m.rank() < monos.len()
}

impl fmt::Display for BooleanFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.anf.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(u32, u32)> = self.anf.iter().map(|&m| (m.count_ones(), m)).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let text: Vec<String> = terms
            .iter()
            .map(|&(_, m)| {
                if m == 0 {
                    return "1".to_string();
                }
                (0..32).filter(|i| m >> i & 1 == 1).map(|i| format!("a{}", i + 1)).collect::<Vec<_>>().join("*")
            })
            .collect();
        write!(f, "{}", text.join(" + "))
    }
}

impl fmt::Debug for BooleanFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunc[{}]({self})", self.l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt_string(f: &BooleanFunc) -> String {
        f.truth_table().iter().map(|b| b.to_string()).collect()
    }

    #[test]
    fn majority() {
        let f = BooleanFunc::parse("a1*a2 + a2*a3 + a1*a3", None).unwrap();
        assert_eq!(f, BooleanFunc::majority3());
        assert_eq!(f.evaluate(&[1, 1, 0]).unwrap(), 1);
        assert_eq!(tt_string(&f), "00010111");
        assert_eq!(f.algebraic_degree(), 2);
        assert!(f.is_balanced());
        assert_eq!(f.nonlinearity(), 2);
        assert_eq!(f.correlation_immunity(), 0);
        assert_eq!(f.agreements(), vec![6, 6, 6]);
        assert_eq!(f.correlation_probabilities(), vec![0.75; 3]);
        assert_eq!(f.algebraic_immunity().unwrap(), 2);
        assert_eq!(f.integer_eval(&[2, 3, 5]).unwrap(), 31);
        assert_eq!(f.to_string(), "a1*a2 + a1*a3 + a2*a3");
    }

    #[test]
    fn constants_and_linear() {
        let zero = BooleanFunc::from_anf(3, []).unwrap();
        assert_eq!(zero.algebraic_degree(), 0);
        assert!(!zero.is_balanced());
        assert_eq!(zero.walsh_spectrum()[0], 8);
        assert_eq!(zero.nonlinearity(), 0);
        let one = BooleanFunc::parse("1", Some(2)).unwrap();
        assert_eq!(one.evaluate(&[0, 0]).unwrap(), 1);
        assert_eq!(one.algebraic_immunity().unwrap(), 0);
        let lin = BooleanFunc::parse("a1 + a2 + a3", None).unwrap();
        assert_eq!(lin.correlation_immunity(), 2);
        assert_eq!(lin.nonlinearity(), 0);
        let x2 = BooleanFunc::parse("a1 + a2", None).unwrap();
        assert_eq!(x2.algebraic_immunity().unwrap(), 1);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(BooleanFunc::parse("a1*b2", None), Err(BoolFnError::Parse { token: "b2".into() }));
        assert!(BooleanFunc::parse("a1 + + a2", None).is_err());
        assert!(BooleanFunc::parse("a4", Some(3)).is_err());
        assert!(BooleanFunc::majority3().evaluate(&[1, 0]).is_err());
    }

    #[test]
    fn table_roundtrip() {
        let f = BooleanFunc::parse("a1*a2*a4 + a3 + 1", None).unwrap();
        let g = BooleanFunc::from_truth_table(f.truth_table()).unwrap();
        assert_eq!(f, g);
        assert!(BooleanFunc::from_truth_table(&[0, 1, 1]).is_err());
    }
}
