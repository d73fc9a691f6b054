//! Polynomials over GF(2), stored as packed coefficient words.
//!
//! Bit `i` of the packed representation is the coefficient of `x^i`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::arith;
use crate::bitmatrix::BitMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{divisor} does not divide {dividend}")]
    InexactDivision { dividend: String, divisor: String },
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("empty input sequence")]
    EmptySequence,
    #[error("operation needs a polynomial of degree at least 1")]
    Degenerate,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitPoly {
    words: Vec<u64>,
}

impl BitPoly {
    pub fn zero() -> Self {
        BitPoly { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_word(1)
    }

    pub fn x() -> Self {
        Self::from_word(2)
    }

    pub fn monomial(k: usize) -> Self {
        let mut p = Self::zero();
        p.set_coeff(k, true);
        p
    }

    pub fn from_word(w: u64) -> Self {
        let mut p = BitPoly { words: vec![w] };
        p.trim();
        p
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        let mut p = BitPoly { words };
        p.trim();
        p
    }

    /// Builds `Σ x^e` over the given exponents (repeated exponents cancel).
    pub fn from_exponents(exps: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exps {
            p.flip_coeff(e);
        }
        p
    }

    /// Coefficients in ascending order: `bits[i]` is the coefficient of `x^i`.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut p = Self::zero();
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                p.set_coeff(i, true);
            }
        }
        p
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The coefficient word when the degree is below 64.
    pub fn to_word(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn set_coeff(&mut self, i: usize, v: bool) {
        if i / 64 >= self.words.len() {
            if !v {
                return;
            }
            self.words.resize(i / 64 + 1, 0);
        }
        if v {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
            self.trim();
        }
    }

    fn flip_coeff(&mut self, i: usize) {
        let v = !self.coeff(i);
        self.set_coeff(i, v);
    }

    /// Exponents with nonzero coefficient, descending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (wi, &w) in self.words.iter().enumerate().rev() {
            let mut w = w;
            while w != 0 {
                let b = 63 - w.leading_zeros() as usize;
                out.push(wi * 64 + b);
                w &= !(1 << b);
            }
        }
        out
    }

    /// Coefficients `c_0..c_deg` as 0/1 bytes.
    pub fn to_bits(&self) -> Vec<u8> {
        match self.degree() {
            None => vec![0],
            Some(d) => (0..=d).map(|i| u8::from(self.coeff(i))).collect(),
        }
    }

    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    fn xor_shifted(&mut self, other: &BitPoly, shift: usize) {
        if other.is_zero() {
            return;
        }
        let ws = shift / 64;
        let bs = shift % 64;
        let need = other.words.len() + ws + 1;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i + ws] ^= w << bs;
            if bs != 0 {
                self.words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        self.trim();
    }

    pub fn add(&self, other: &BitPoly) -> BitPoly {
        let mut out = self.clone();
        out.xor_shifted(other, 0);
        out
    }

    pub fn shl(&self, k: usize) -> BitPoly {
        let mut out = Self::zero();
        out.xor_shifted(self, k);
        out
    }

    pub fn mul(&self, other: &BitPoly) -> BitPoly {
        let mut out = Self::zero();
        for e in other.exponents() {
            out.xor_shifted(self, e);
        }
        out
    }

    pub fn square(&self) -> BitPoly {
        let mut out = Self::zero();
        for e in self.exponents() {
            out.set_coeff(2 * e, true);
        }
        out
    }

    pub fn div_rem(&self, b: &BitPoly) -> Result<(BitPoly, BitPoly), PolyError> {
        let db = b.degree().ok_or(PolyError::DivisionByZero)?;
        let mut q = Self::zero();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            q.set_coeff(dr - db, true);
            r.xor_shifted(b, dr - db);
        }
        Ok((q, r))
    }

    pub fn rem(&self, b: &BitPoly) -> Result<BitPoly, PolyError> {
        Ok(self.div_rem(b)?.1)
    }

    pub fn divexact(&self, b: &BitPoly) -> Result<BitPoly, PolyError> {
        let (q, r) = self.div_rem(b)?;
        if !r.is_zero() {
            return Err(PolyError::InexactDivision { dividend: self.to_string(), divisor: b.to_string() });
        }
        Ok(q)
    }

    pub fn gcd(&self, other: &BitPoly) -> BitPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a
    }

    pub fn mul_mod(&self, other: &BitPoly, m: &BitPoly) -> Result<BitPoly, PolyError> {
        self.mul(other).rem(m)
    }

    pub fn pow_mod(&self, mut e: u64, m: &BitPoly) -> Result<BitPoly, PolyError> {
        let mut base = self.rem(m)?;
        let mut acc = Self::one().rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m)?;
            }
            base = base.square().rem(m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> BitPoly {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> BitPoly {
        let mut out = Self::zero();
        for e in self.exponents() {
            if e % 2 == 1 {
                out.set_coeff(e - 1, true);
            }
        }
        out
    }

    /// `x^deg · p(1/x)`.
    pub fn reciprocal(&self) -> BitPoly {
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        Self::from_exponents(&self.exponents().iter().map(|e| d - e).collect::<Vec<_>>())
    }

    /// Evaluates at a GF(2) point.
    pub fn eval_bit(&self, b: u8) -> u8 {
        if b & 1 == 0 {
            u8::from(self.coeff(0))
        } else {
            (self.weight() % 2) as u8
        }
    }

    pub fn to_hex(&self) -> String {
        if self.is_zero() {
            return "0x0".into();
        }
        let mut s = format!("{:x}", self.words.last().unwrap());
        for w in self.words.iter().rev().skip(1) {
            s.push_str(&format!("{w:016x}"));
        }
        format!("0x{s}")
    }

    /// Bit string with the constant term first.
    pub fn to_bit_string(&self) -> String {
        self.to_bits().iter().map(|&b| if b == 1 { '1' } else { '0' }).collect()
    }

    fn sort_key(&self) -> (usize, Vec<u64>) {
        (self.deg(), self.words.iter().rev().copied().collect())
    }

    fn sqrt_of_square(&self) -> BitPoly {
        let mut out = Self::zero();
        for e in self.exponents() {
            out.set_coeff(e / 2, true);
        }
        out
    }
}

impl Ord for BitPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for BitPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BitPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

impl fmt::Debug for BitPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitPoly({self})")
    }
}

impl FromStr for BitPoly {
    type Err = PolyError;

    /// Accepts `x^6+x^4+x^2+x+1`, `0x57` or a constant-first bit string `11101`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let input = s.trim();
        let err = |reason: &str| PolyError::Parse { input: s.to_string(), reason: reason.to_string() };
        if input.is_empty() {
            return Err(err("empty string"));
        }
        if let Some(hex) = input.strip_prefix("0x").or_else(|| input.strip_prefix("0X")) {
            if hex.is_empty() {
                return Err(err("no hex digits"));
            }
            let mut p = BitPoly::zero();
            for (i, ch) in hex.chars().rev().enumerate() {
                let d = ch.to_digit(16).ok_or_else(|| err(&format!("bad hex digit {ch:?}")))?;
                for b in 0..4 {
                    if d >> b & 1 == 1 {
                        p.set_coeff(4 * i + b, true);
                    }
                }
            }
            return Ok(p);
        }
        if input.chars().all(|c| c == '0' || c == '1') {
            return Ok(BitPoly::from_bits(&input.bytes().map(|b| b - b'0').collect::<Vec<_>>()));
        }
        let mut p = BitPoly::zero();
        for term in input.split('+') {
            let term: String = term.chars().filter(|c| !c.is_whitespace()).collect();
            let e = match term.as_str() {
                "1" => 0,
                "x" => 1,
                "0" => continue,
                t => {
                    let rest = t.strip_prefix("x^").ok_or_else(|| err(&format!("bad term {t:?}")))?;
                    rest.parse::<usize>().map_err(|_| err(&format!("bad exponent in {t:?}")))?
                }
            };
            p.flip_coeff(e);
        }
        Ok(p)
    }
}

/// Shortest LFSR generating `s`, returned as the characteristic polynomial
/// `x^L + c_1 x^{L-1} + ... + c_L` together with the linear complexity `L`.
pub fn berlekamp_massey(s: &[u8]) -> Result<(BitPoly, usize), PolyError> {
    if s.is_empty() {
        return Err(PolyError::EmptySequence);
    }
    let n = s.len();
    let mut c = vec![0u8; n + 1];
    let mut b = vec![0u8; n + 1];
    c[0] = 1;
    b[0] = 1;
    let mut l = 0usize;
    let mut last = 0usize;
    let mut have_last = false;
    for i in 0..n {
        let mut d = s[i] & 1;
        for j in 1..=l {
            d ^= c[j] & s[i - j];
        }
        if d == 0 {
            continue;
        }
        let shift = if have_last { i - last } else { i + 1 };
        let t = c.clone();
        for j in 0..=(n - shift) {
            c[j + shift] ^= b[j];
        }
        if 2 * l <= i {
            l = i + 1 - l;
            last = i;
            have_last = true;
            b = t;
        }
    }
    let mut g = BitPoly::zero();
    for j in 0..=l {
        if c[j] == 1 {
            g.set_coeff(l - j, true);
        }
    }
    Ok((g, l))
}

/// Squarefree decomposition: pairs `(h_i, i)` with `f = Π h_i^i`.
fn squarefree(f: &BitPoly) -> Vec<(BitPoly, u32)> {
    let mut out = Vec::new();
    let c0 = f.gcd(&f.derivative());
    let mut w = f.divexact(&c0).expect("gcd divides");
    let mut c = c0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.divexact(&y).expect("gcd divides");
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.divexact(&w).expect("gcd divides");
        i += 1;
    }
    if !c.is_one() {
        for (h, j) in squarefree(&c.sqrt_of_square()) {
            out.push((h, 2 * j));
        }
    }
    out
}

/// Berlekamp splitting of a squarefree polynomial.
fn berlekamp_split(f: &BitPoly) -> Vec<BitPoly> {
    let d = f.deg();
    if d <= 1 {
        return vec![f.clone()];
    }
    let mut m = BitMatrix::zeros(d, d);
    let mut row = BitPoly::one();
    let x2 = BitPoly::from_word(4).rem(f).expect("nonzero modulus");
    for i in 0..d {
        for j in 0..d {
            if row.coeff(j) != (i == j) {
                m.set(j, i, true);
            }
        }
        row = row.mul_mod(&x2, f).expect("nonzero modulus");
    }
    let basis = m.null_space();
    let count = basis.len();
    let mut factors = vec![f.clone()];
    for v in basis {
        if factors.len() == count {
            break;
        }
        let h = BitPoly::from_bits(&v);
        if h.deg() == 0 {
            continue;
        }
        let mut next = Vec::new();
        for u in factors {
            if u.deg() <= 1 {
                next.push(u);
                continue;
            }
            let a = u.gcd(&h);
            if a.is_one() || a == u {
                next.push(u);
            } else {
                let b = u.divexact(&a).expect("gcd divides");
                next.push(a);
                next.push(b);
            }
        }
        factors = next;
    }
    factors
}

/// Irreducible factors with multiplicities, sorted by degree and then by coefficient word.
pub fn factorize(f: &BitPoly) -> Result<Vec<(BitPoly, u32)>, PolyError> {
    if f.deg() == 0 {
        return Err(PolyError::Degenerate);
    }
    let mut out: Vec<(BitPoly, u32)> = Vec::new();
    for (h, mult) in squarefree(f) {
        for p in berlekamp_split(&h) {
            match out.iter_mut().find(|(q, _)| *q == p) {
                Some((_, e)) => *e += mult,
                None => out.push((p, mult)),
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn is_irreducible(f: &BitPoly) -> bool {
    let Some(d) = f.degree() else {
        return false;
    };
    if d == 0 {
        return false;
    }
    let x = BitPoly::x();
    let mut xp = x.clone();
    for _ in 0..d / 2 {
        xp = xp.square().rem(f).expect("nonzero modulus");
        if !xp.add(&x).gcd(f).is_one() {
            return false;
        }
    }
    true
}

/// Multiplicative order of `x` modulo an irreducible `f` with `f(0) = 1`, for degree ≤ 64.
pub fn root_order(f: &BitPoly) -> Option<u64> {
    let d = f.degree()?;
    if d == 0 || d > 64 || !f.coeff(0) || !is_irreducible(f) {
        return None;
    }
    let full = if d == 64 { u64::MAX } else { (1u64 << d) - 1 };
    let x = BitPoly::x();
    let mut order = full;
    for (p, _) in arith::factor(full) {
        while order % p == 0 && x.pow_mod(order / p, f).ok()?.is_one() {
            order /= p;
        }
    }
    Some(order)
}

/// Least `e ≥ 1` with `f | x^e - 1`, for `f(0) = 1` whose irreducible factors have degree ≤ 64.
pub fn order(f: &BitPoly) -> Option<u64> {
    if f.is_one() {
        return Some(1);
    }
    if !f.coeff(0) {
        return None;
    }
    let mut acc = 1u64;
    let mut max_mult = 1u32;
    for (p, e) in factorize(f).ok()? {
        acc = arith::lcm(acc, root_order(&p)?);
        max_mult = max_mult.max(e);
    }
    let mut t = 1u64;
    while t < u64::from(max_mult) {
        t *= 2;
    }
    acc.checked_mul(t)
}

pub fn is_primitive(f: &BitPoly) -> bool {
    let d = f.deg();
    match root_order(f) {
        Some(o) => d == 64 && o == u64::MAX || d < 64 && o == (1u64 << d) - 1,
        None => false,
    }
}

pub use crate::gf2m::min_poly_of_element;

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BitPoly {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print_forms() {
        let g = p("x^6+x^4+x^2+x+1");
        assert_eq!(g.to_word(), Some(0b1010111));
        assert_eq!(g.to_hex(), "0x57");
        assert_eq!(g.to_bit_string(), "1110101");
        assert_eq!(p("0x57"), g);
        assert_eq!(p("1110101"), g);
        assert_eq!(g.to_string(), "x^6+x^4+x^2+x+1");
        assert_eq!(p("x + 1").to_string(), "x+1");
        assert!("x^a+1".parse::<BitPoly>().is_err());
        assert_eq!(BitPoly::zero().to_string(), "0");
    }

    #[test]
    fn long_multiplication() {
        assert_eq!(p("x^2+x+1").mul(&p("x^3+x+1")), p("x^5+x^4+1"));
        let f = p("x^3+x+1");
        assert_eq!(f.gcd(&f), f);
        assert!(p("x^3+1").divexact(&p("x^2")).is_err());
        assert_eq!(p("x").div_rem(&BitPoly::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn words_beyond_64_bits() {
        let a = BitPoly::monomial(100).add(&BitPoly::one());
        let b = BitPoly::monomial(70).add(&BitPoly::x());
        let prod = a.mul(&b);
        assert_eq!(prod.exponents(), vec![170, 101, 70, 1]);
        assert_eq!(prod.divexact(&b).unwrap(), a);
        assert_eq!(p(&prod.to_hex()), prod);
    }

    #[test]
    fn bm_small_cases() {
        let bits: Vec<u8> = "00101110010111".bytes().map(|b| b - b'0').collect();
        assert_eq!(berlekamp_massey(&bits).unwrap(), (p("x^3+x+1"), 3));
        assert_eq!(berlekamp_massey(&[0, 0, 0, 0]).unwrap(), (BitPoly::one(), 0));
        assert_eq!(berlekamp_massey(&[]), Err(PolyError::EmptySequence));
        assert_eq!(berlekamp_massey(&[0, 0, 0, 1]).unwrap().1, 4);
    }

    #[test]
    fn factor_small() {
        assert_eq!(factorize(&p("x^2")).unwrap(), vec![(p("x"), 2)]);
        let f = p("x^2+x+1").mul(&p("x^3+x+1")).mul(&p("x^3+x+1")).mul(&p("x+1"));
        assert_eq!(factorize(&f).unwrap(), vec![(p("x+1"), 1), (p("x^2+x+1"), 1), (p("x^3+x+1"), 2)]);
        assert!(factorize(&BitPoly::one()).is_err());
    }

    #[test]
    fn irreducibility_and_primitivity() {
        assert!(is_primitive(&p("x^5+x^2+1")));
        assert!(!is_irreducible(&p("x^2")));
        assert!(is_irreducible(&p("x^6+x^4+x^2+x+1")));
        assert!(!is_primitive(&p("x^6+x^4+x^2+x+1")));
        assert_eq!(root_order(&p("x^6+x^4+x^2+x+1")), Some(21));
        assert!(!is_irreducible(&p("x^4+x^2+1")));
        assert!(is_primitive(&p("x+1")));
    }

    #[test]
    fn orders_of_reducible_polynomials() {
        assert_eq!(order(&p("x^2+x+1").mul(&p("x^3+x+1"))), Some(21));
        assert_eq!(order(&p("x^3+x+1").pow(2)), Some(14));
        assert_eq!(order(&p("x+1").pow(3)), Some(4));
        assert_eq!(order(&p("x^2+x")), None);
    }
}
