//! Arithmetic in GF(2^m) for 1 ≤ m ≤ 32 in a polynomial basis.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::arith;
use crate::gfpoly::{self, BitPoly};

pub const MAX_DEGREE: u32 = 32;
const TABLE_LIMIT: u32 = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("field degree {0} outside 1..=32")]
    Degree(u32),
    #[error("modulus {0} is not irreducible")]
    Reducible(String),
    #[error("elements belong to different fields")]
    CtxMismatch,
    #[error("zero has no inverse or logarithm")]
    Zero,
    #[error("GF(2^{sub}) is not a subfield of GF(2^{sup})")]
    NotSubfield { sub: u32, sup: u32 },
    #[error("cannot parse field element {0:?}")]
    Parse(String),
    #[error("coordinate word {0:#x} does not fit the field")]
    Range(u64),
}

struct Inner {
    m: u32,
    modulus: BitPoly,
    mod_word: u64,
    order: u64,
    order_factors: Vec<(u64, u32)>,
    generator: u64,
    tables: Option<Tables>,
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// Shared, immutable description of a binary extension field.
#[derive(Clone)]
pub struct FieldCtx(Arc<Inner>);

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.mod_word == other.0.mod_word
    }
}

impl Eq for FieldCtx {}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}) mod {}", self.0.m, self.0.modulus)
    }
}

fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0;
    let mut b = b;
    let mut i = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << i;
        }
        b >>= 1;
        i += 1;
    }
    acc
}

fn reduce(mut p: u64, m: u32, mod_word: u64) -> u64 {
    if p >> m == 0 {
        return p;
    }
    for i in (m..64).rev() {
        if p >> i & 1 == 1 {
            p ^= mod_word << (i - m);
        }
    }
    p
}

/// Modulus used for `FieldCtx::default_for(m)`.
///
/// Degrees 2, 3, 5 and 6 use `x^2+x+1`, `x^3+x+1`, `x^5+x^2+1` and
/// `x^6+x^4+x^2+x+1`; degrees 10, 15 and 30 use the minimal polynomials of
/// the product sequences of the (2, 3, 5) majority combiner, so that `x` has
/// order 93, 217 and 651 there. Every other degree uses the first primitive
/// trinomial, or failing that the first primitive pentanomial.
pub fn default_modulus(m: u32) -> BitPoly {
    let fixed: &[usize] = match m {
        2 => &[2, 1, 0],
        3 => &[3, 1, 0],
        5 => &[5, 2, 0],
        6 => &[6, 4, 2, 1, 0],
        10 => &[10, 5, 4, 2, 0],
        15 => &[15, 12, 10, 7, 6, 2, 0],
        30 => &[30, 25, 24, 20, 19, 17, 16, 13, 10, 9, 8, 7, 4, 2, 0],
        _ => &[],
    };
    if !fixed.is_empty() {
        return BitPoly::from_exponents(fixed);
    }
    first_primitive(m as usize)
}

fn first_primitive(m: usize) -> BitPoly {
    if m == 1 {
        return BitPoly::from_exponents(&[1, 0]);
    }
    for a in 1..m {
        let f = BitPoly::from_exponents(&[m, a, 0]);
        if gfpoly::is_primitive(&f) {
            return f;
        }
    }
    for a in 3..m {
        for b in 2..a {
            for c in 1..b {
                let f = BitPoly::from_exponents(&[m, a, b, c, 0]);
                if gfpoly::is_primitive(&f) {
                    return f;
                }
            }
        }
    }
    unreachable!("every degree up to 32 has a primitive pentanomial")
}

impl FieldCtx {
    /// Field `GF(2)[x]/(modulus)` for an irreducible modulus of degree 1..=32.
    pub fn new(modulus: BitPoly) -> Result<Self, FieldError> {
        let m = modulus.deg() as u32;
        if m == 0 || m > MAX_DEGREE {
            return Err(FieldError::Degree(m));
        }
        if !gfpoly::is_irreducible(&modulus) {
            return Err(FieldError::Reducible(modulus.to_string()));
        }
        let mod_word = modulus.to_word().expect("degree at most 32");
        let order = (1u64 << m) - 1;
        let order_factors = arith::factor(order);
        let mut inner = Inner { m, modulus, mod_word, order, order_factors, generator: 0, tables: None };
        let is_gen = |inner: &Inner, g: u64| {
            g != 0 && inner.order_factors.iter().all(|&(p, _)| pow_raw(inner, g, order / p) != 1)
        };
        let first = if m == 1 { 1 } else { 2 };
        inner.generator = (first..=order).find(|&g| is_gen(&inner, g)).expect("multiplicative group is cyclic");
        if m <= TABLE_LIMIT {
            let size = 1usize << m;
            let mut exp = vec![0u32; size];
            let mut log = vec![0u32; size];
            let mut x = 1u64;
            for e in 0..order as usize {
                exp[e] = x as u32;
                log[x as usize] = e as u32;
                x = reduce(clmul(x, inner.generator), m, mod_word);
            }
            inner.tables = Some(Tables { exp, log });
        }
        Ok(FieldCtx(Arc::new(inner)))
    }

    pub fn default_for(m: u32) -> Result<Self, FieldError> {
        if m == 0 || m > MAX_DEGREE {
            return Err(FieldError::Degree(m));
        }
        Self::new(default_modulus(m))
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    pub fn modulus(&self) -> &BitPoly {
        &self.0.modulus
    }

    /// Size of the multiplicative group, `2^m - 1`.
    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// Whether the class of `x` generates the multiplicative group.
    pub fn is_primitive_basis(&self) -> bool {
        self.0.generator == 2 || self.0.m == 1
    }

    pub fn generator(&self) -> FieldElement {
        self.elem(self.0.generator)
    }

    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElement {
        self.elem(1)
    }

    /// The class of `x`.
    pub fn x(&self) -> FieldElement {
        self.elem(reduce(2, self.0.m, self.0.mod_word))
    }

    pub fn elem(&self, bits: u64) -> FieldElement {
        assert!(bits >> self.0.m == 0, "coordinate word {bits:#x} too wide for GF(2^{})", self.0.m);
        FieldElement { bits, ctx: self.clone() }
    }

    pub fn try_elem(&self, bits: u64) -> Result<FieldElement, FieldError> {
        if bits >> self.0.m != 0 {
            return Err(FieldError::Range(bits));
        }
        Ok(self.elem(bits))
    }

    /// `α^e` for the group generator `α`.
    pub fn alpha_pow(&self, e: i64) -> FieldElement {
        let e = arith::modulo(i128::from(e), self.0.order);
        self.elem(pow_raw(&self.0, self.0.generator, e))
    }

    /// An element of multiplicative order exactly `d`, where `d | 2^m - 1`.
    ///
    /// This is `x` itself when `x` has order `d`, and `α^{(2^m-1)/d}` otherwise.
    pub fn element_of_order(&self, d: u64) -> Option<FieldElement> {
        if d == 0 || !self.0.order.is_multiple_of(d) {
            return None;
        }
        let x = self.x();
        if x.multiplicative_order().ok() == Some(d) {
            return Some(x);
        }
        Some(self.alpha_pow((self.0.order / d) as i64))
    }

    pub fn mul_raw(&self, a: u64, b: u64) -> u64 {
        mul_raw(&self.0, a, b)
    }

    pub fn pow_raw(&self, a: u64, e: u64) -> u64 {
        pow_raw(&self.0, a, e)
    }

    pub fn trace_raw(&self, a: u64) -> u8 {
        let mut t = a;
        let mut x = a;
        for _ in 1..self.0.m {
            x = mul_raw(&self.0, x, x);
            t ^= x;
        }
        debug_assert!(t <= 1);
        (t & 1) as u8
    }

    /// Partition of `0..n` into classes `{k·2^j mod n}`, each listed from its leader.
    pub fn cyclotomic_cosets(n: u64) -> Result<Vec<Vec<u64>>, FieldError> {
        cyclotomic_cosets(n)
    }
}

fn mul_raw(f: &Inner, a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    if let Some(t) = &f.tables {
        let s = u64::from(t.log[a as usize]) + u64::from(t.log[b as usize]);
        return u64::from(t.exp[(s % f.order) as usize]);
    }
    reduce(clmul(a, b), f.m, f.mod_word)
}

fn pow_raw(f: &Inner, a: u64, e: u64) -> u64 {
    if a == 0 {
        return u64::from(e == 0);
    }
    if let Some(t) = &f.tables {
        let l = u128::from(t.log[a as usize]) * u128::from(e % f.order);
        return u64::from(t.exp[(l % u128::from(f.order)) as usize]);
    }
    let mut base = a;
    let mut acc = 1;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_raw(f, acc, base);
        }
        base = mul_raw(f, base, base);
        e >>= 1;
    }
    acc
}

/// Pohlig-Hellman over the factorization of `2^m - 1` with baby-step/giant-step per prime.
fn dlog_raw(f: &Inner, a: u64) -> u64 {
    if let Some(t) = &f.tables {
        return u64::from(t.log[a as usize]);
    }
    let n = f.order;
    let mut residues = Vec::new();
    for &(p, e) in &f.order_factors {
        let pe = p.pow(e);
        let gamma = pow_raw(f, f.generator, n / p);
        let mut x = 0u64;
        let mut pk = 1u64;
        for _ in 0..e {
            let shifted = mul_raw(f, a, inv_raw(f, pow_raw(f, f.generator, x)));
            let h = pow_raw(f, shifted, n / (pk * p));
            let d = bsgs(f, gamma, h, p);
            x += d * pk;
            pk *= p;
        }
        residues.push((x % pe, pe));
    }
    let mut acc = 0u64;
    let mut modulus = 1u64;
    for (r, m) in residues {
        acc = crt_pair(acc, modulus, r, m);
        modulus *= m;
    }
    acc
}

fn crt_pair(a: u64, n: u64, b: u64, m: u64) -> u64 {
    let inv = arith::mod_inv(n % m, m).expect("coprime prime powers");
    let diff = arith::modulo(i128::from(b) - i128::from(a), m);
    let t = arith::mul_mod(diff, inv, m);
    a + n * t
}

/// `d` in `[0, p)` with `gamma^d = h`, where `gamma` has order `p`.
fn bsgs(f: &Inner, gamma: u64, h: u64, p: u64) -> u64 {
    let s = (p as f64).sqrt().ceil() as u64 + 1;
    let mut baby = HashMap::with_capacity(s as usize);
    let mut x = 1u64;
    for j in 0..s {
        baby.entry(x).or_insert(j);
        x = mul_raw(f, x, gamma);
    }
    let giant = inv_raw(f, pow_raw(f, gamma, s));
    let mut y = h;
    for i in 0..=s {
        if let Some(&j) = baby.get(&y) {
            return (i * s + j) % p;
        }
        y = mul_raw(f, y, giant);
    }
    unreachable!("element lies in the subgroup of order p")
}

fn inv_raw(f: &Inner, a: u64) -> u64 {
    pow_raw(f, a, f.order - 1)
}

pub fn cyclotomic_cosets(n: u64) -> Result<Vec<Vec<u64>>, FieldError> {
    if n.is_multiple_of(2) {
        return Err(FieldError::Parse(format!("cyclotomic cosets need an odd modulus, got {n}")));
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for k in 0..n {
        if seen[k as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut j = k;
        while !seen[j as usize] {
            seen[j as usize] = true;
            coset.push(j);
            j = j * 2 % n;
        }
        out.push(coset);
    }
    Ok(out)
}

/// Element of GF(2^m): polynomial-basis coordinates plus a handle to its field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    bits: u64,
    ctx: FieldCtx,
}

impl FieldElement {
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_one(&self) -> bool {
        self.bits == 1
    }

    fn same(&self, other: &FieldElement) -> Result<(), FieldError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(FieldError::CtxMismatch)
        }
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same(other)?;
        Ok(self.ctx.elem(mul_raw(&self.ctx.0, self.bits, other.bits)))
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement, FieldError> {
        self.same(other)?;
        Ok(self.ctx.elem(self.bits ^ other.bits))
    }

    /// `a^e`; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64) -> Result<FieldElement, FieldError> {
        if self.bits == 0 {
            return match e.cmp(&0) {
                std::cmp::Ordering::Less => Err(FieldError::Zero),
                std::cmp::Ordering::Equal => Ok(self.ctx.one()),
                std::cmp::Ordering::Greater => Ok(self.clone()),
            };
        }
        let e = arith::modulo(i128::from(e), self.ctx.order());
        Ok(self.ctx.elem(pow_raw(&self.ctx.0, self.bits, e)))
    }

    pub fn pow_u(&self, e: u64) -> FieldElement {
        self.ctx.elem(pow_raw(&self.ctx.0, self.bits, e))
    }

    pub fn square(&self) -> FieldElement {
        self.pow_u(2)
    }

    pub fn inverse(&self) -> Result<FieldElement, FieldError> {
        self.pow(-1)
    }

    /// `e` in `[0, 2^m - 1)` with `α^e = self`.
    pub fn dlog(&self) -> Result<u64, FieldError> {
        if self.bits == 0 {
            return Err(FieldError::Zero);
        }
        Ok(dlog_raw(&self.ctx.0, self.bits))
    }

    /// Discrete log to an arbitrary base; `None` when `self` is outside `<base>`.
    pub fn log_base(&self, base: &FieldElement) -> Result<Option<u64>, FieldError> {
        self.same(base)?;
        let la = self.dlog()?;
        let lb = base.dlog()?;
        let n = self.ctx.order();
        let ord = self.ctx.0.order / arith::gcd(lb, n);
        let g = arith::gcd(lb, n);
        if la % g != 0 {
            return Ok(None);
        }
        let inv = arith::mod_inv((lb / g) % ord, ord).expect("reduced base exponent is a unit");
        Ok(Some(arith::mul_mod((la / g) % ord, inv, ord)))
    }

    pub fn multiplicative_order(&self) -> Result<u64, FieldError> {
        if self.bits == 0 {
            return Err(FieldError::Zero);
        }
        let mut ord = self.ctx.order();
        for &(p, _) in &self.ctx.0.order_factors {
            while ord.is_multiple_of(p) && pow_raw(&self.ctx.0, self.bits, ord / p) == 1 {
                ord /= p;
            }
        }
        Ok(ord)
    }

    /// Absolute trace `Σ_{k<m} a^{2^k}`.
    pub fn trace(&self) -> u8 {
        self.ctx.trace_raw(self.bits)
    }

    /// Conjugates `a, a^2, a^4, ...` up to the first repetition.
    pub fn conjugates(&self) -> Vec<FieldElement> {
        let mut out = vec![self.clone()];
        let mut x = self.square();
        while x != *self {
            out.push(x.clone());
            x = x.square();
        }
        out
    }

    /// Minimal polynomial over GF(2).
    pub fn min_poly(&self) -> Result<BitPoly, FieldError> {
        min_poly_of_element(self)
    }
}

/// Monic irreducible polynomial over GF(2) with `a` as a root.
pub fn min_poly_of_element(a: &FieldElement) -> Result<BitPoly, FieldError> {
    if a.is_zero() {
        return Err(FieldError::Zero);
    }
    let ctx = a.ctx();
    let mut coeffs: Vec<u64> = vec![1];
    for c in a.conjugates() {
        let mut next = vec![0u64; coeffs.len() + 1];
        for (i, &k) in coeffs.iter().enumerate() {
            next[i + 1] ^= k;
            next[i] ^= ctx.mul_raw(k, c.bits);
        }
        coeffs = next;
    }
    let mut p = BitPoly::zero();
    for (i, &k) in coeffs.iter().enumerate() {
        debug_assert!(k <= 1, "minimal polynomial coefficients lie in GF(2)");
        if k == 1 {
            p.set_coeff(i, true);
        }
    }
    Ok(p)
}

impl BitPoly {
    /// Horner evaluation at a field element.
    pub fn eval(&self, a: &FieldElement) -> FieldElement {
        let ctx = a.ctx();
        let mut acc = 0u64;
        for i in (0..=self.deg()).rev() {
            acc = ctx.mul_raw(acc, a.bits) ^ u64::from(self.coeff(i));
        }
        ctx.elem(acc)
    }
}

/// Image of `a ∈ GF(2^p)` in `GF(2^m)` for `p | m`.
///
/// `x` of the small field maps to `γ^j`, where `γ = α^{(2^m-1)/(2^p-1)}` and
/// `j` is the least exponent making `γ^j` a root of the small modulus.
pub fn subfield_embed(a: &FieldElement, sub: &FieldCtx, sup: &FieldCtx) -> Result<FieldElement, FieldError> {
    if a.ctx() != sub {
        return Err(FieldError::CtxMismatch);
    }
    let (p, m) = (sub.m(), sup.m());
    if m % p != 0 {
        return Err(FieldError::NotSubfield { sub: p, sup: m });
    }
    let gamma = sup.alpha_pow((sup.order() / sub.order()) as i64);
    let root = (1..=sub.order())
        .map(|j| gamma.pow_u(j))
        .find(|r| sub.modulus().eval(r).is_zero())
        .expect("an irreducible polynomial of degree p splits in GF(2^p)");
    let coords = BitPoly::from_word(a.bits);
    Ok(coords.eval(&root))
}

fn check_same(a: &FieldElement, b: &FieldElement) {
    assert!(a.ctx == b.ctx, "arithmetic between elements of different fields");
}

impl Add for &FieldElement {
    type Output = FieldElement;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: &FieldElement) -> FieldElement {
        check_same(self, rhs);
        self.ctx.elem(self.bits ^ rhs.bits)
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + rhs
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        check_same(self, rhs);
        self.ctx.elem(mul_raw(&self.ctx.0, self.bits, rhs.bits))
    }
}

impl Div for &FieldElement {
    type Output = FieldElement;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &FieldElement) -> FieldElement {
        self * &rhs.inverse().expect("division by zero")
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $f(self, rhs: FieldElement) -> FieldElement {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl fmt::Display for FieldElement {
    /// `0`, `1` or `a^k` in powers of the group generator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.bits {
            0 => write!(f, "0"),
            1 => write!(f, "1"),
            _ => write!(f, "a^{}", self.dlog().expect("nonzero")),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} ({:#x})", self.bits)
    }
}

impl FieldElement {
    pub fn to_hex(&self) -> String {
        format!("{:#x}", self.bits)
    }

    /// Parses `0`, `1`, `a^k` or a hex coordinate word `0x..` in `ctx`.
    pub fn parse(s: &str, ctx: &FieldCtx) -> Result<FieldElement, FieldError> {
        let t = s.trim();
        let bad = || FieldError::Parse(s.to_string());
        if let Some(hex) = t.strip_prefix("0x") {
            let w = u64::from_str_radix(hex, 16).map_err(|_| bad())?;
            return ctx.try_elem(w);
        }
        match t {
            "0" => Ok(ctx.zero()),
            "1" => Ok(ctx.one()),
            "a" => Ok(ctx.generator()),
            _ => {
                let e = t.strip_prefix("a^").ok_or_else(bad)?;
                let e = i64::from_str(e).map_err(|_| bad())?;
                Ok(ctx.alpha_pow(e))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf8() -> FieldCtx {
        FieldCtx::default_for(3).unwrap()
    }

    #[test]
    fn small_field_products() {
        let f = gf8();
        let a = f.generator();
        assert_eq!((&a * &a.pow_u(2)).bits(), 0b011);
        assert_eq!(&f.alpha_pow(6) * &f.alpha_pow(3), f.alpha_pow(2));
        assert!(a.pow_u(7).is_one());
        assert_eq!(a.pow(-1).unwrap(), f.alpha_pow(6));
        assert_eq!(f.zero().pow(-1), Err(FieldError::Zero));
        let other = FieldCtx::default_for(5).unwrap();
        assert_eq!(a.checked_mul(&other.one()), Err(FieldError::CtxMismatch));
    }

    #[test]
    fn traces_in_gf8() {
        let f = gf8();
        assert_eq!(f.zero().trace(), 0);
        assert_eq!(f.one().trace(), 1);
        assert_eq!(f.generator().trace(), 0);
    }

    #[test]
    fn logs_roundtrip_gf32() {
        let f = FieldCtx::default_for(5).unwrap();
        for e in 0..31 {
            assert_eq!(f.alpha_pow(e).dlog().unwrap(), e as u64);
        }
        assert_eq!(f.one().dlog().unwrap(), 0);
        assert!(f.zero().dlog().is_err());
    }

    #[test]
    fn logs_without_tables() {
        for m in [21u32, 30, 31, 32] {
            let f = FieldCtx::default_for(m).unwrap();
            for e in [0i64, 1, 12345, (f.order() - 1) as i64, 987_654_321 % f.order() as i64] {
                assert_eq!(f.alpha_pow(e).dlog().unwrap(), e as u64, "m = {m}");
            }
        }
    }

    #[test]
    fn default_moduli_are_irreducible() {
        for m in 1..=32 {
            let f = default_modulus(m);
            assert_eq!(f.deg(), m as usize);
            assert!(gfpoly::is_irreducible(&f), "m = {m}");
            if ![6, 10, 15, 30].contains(&m) {
                assert!(gfpoly::is_primitive(&f), "m = {m}");
            }
        }
        assert_eq!(default_modulus(4).to_string(), "x^4+x+1");
        assert_eq!(default_modulus(7).to_string(), "x^7+x+1");
    }

    #[test]
    fn non_primitive_modulus() {
        let f = FieldCtx::default_for(6).unwrap();
        assert!(!f.is_primitive_basis());
        assert_eq!(f.x().multiplicative_order().unwrap(), 21);
        assert_eq!(f.generator().multiplicative_order().unwrap(), 63);
        let x = f.x();
        assert_eq!(x.pow_u(9).log_base(&x).unwrap(), Some(9));
        assert_eq!(f.generator().log_base(&x).unwrap(), None);
        let big = FieldCtx::default_for(30).unwrap();
        assert_eq!(big.x().multiplicative_order().unwrap(), 651);
    }

    #[test]
    fn cosets() {
        assert_eq!(cyclotomic_cosets(7).unwrap(), vec![vec![0], vec![1, 2, 4], vec![3, 6, 5]]);
        assert_eq!(cyclotomic_cosets(3).unwrap(), vec![vec![0], vec![1, 2]]);
        let c21 = cyclotomic_cosets(21).unwrap();
        let five = c21.iter().find(|c| c.contains(&5)).unwrap();
        let mut five = five.clone();
        five.sort();
        assert_eq!(five, vec![5, 10, 13, 17, 19, 20]);
        assert!(cyclotomic_cosets(8).is_err());
    }

    #[test]
    fn min_polys() {
        let f = gf8();
        assert_eq!(f.generator().min_poly().unwrap().to_string(), "x^3+x+1");
        assert_eq!(f.one().min_poly().unwrap().to_string(), "x+1");
        let gf64 = FieldCtx::default_for(6).unwrap();
        let rho = gf64.element_of_order(21).unwrap();
        assert_eq!(rho.pow_u(58).min_poly().unwrap().to_string(), "x^6+x^4+x^2+x+1");
        let big = FieldCtx::default_for(30).unwrap();
        let w = big.element_of_order(651).unwrap();
        assert_eq!(w.pow_u(58).min_poly().unwrap().deg(), 30);
    }

    #[test]
    fn embedding() {
        let sub = FieldCtx::default_for(2).unwrap();
        let sup = FieldCtx::default_for(6).unwrap();
        assert!(subfield_embed(&sub.one(), &sub, &sup).unwrap().is_one());
        let g = subfield_embed(&sub.generator(), &sub, &sup).unwrap();
        assert_eq!(g, sup.alpha_pow(21));
        let elems: Vec<_> = (1..4).map(|b| sub.elem(b)).collect();
        for a in &elems {
            for b in &elems {
                let lhs = subfield_embed(&(a * b), &sub, &sup).unwrap();
                let rhs = &subfield_embed(a, &sub, &sup).unwrap() * &subfield_embed(b, &sub, &sup).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        let gf8 = gf8();
        assert!(subfield_embed(&gf8.one(), &gf8, &FieldCtx::default_for(5).unwrap()).is_err());
    }

    #[test]
    fn parse_and_print() {
        let f = gf8();
        let a4 = f.alpha_pow(4);
        assert_eq!(a4.to_string(), "a^4");
        assert_eq!(FieldElement::parse("a^4", &f).unwrap(), a4);
        assert_eq!(FieldElement::parse(&a4.to_hex(), &f).unwrap(), a4);
        assert!(FieldElement::parse("0x10", &f).is_err());
    }
}
