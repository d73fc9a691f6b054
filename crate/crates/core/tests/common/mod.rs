//! Small independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn bits(s: &str) -> Vec<u8> {
    s.bytes().filter(|b| !b.is_ascii_whitespace()).map(|b| b - b'0').collect()
}

/// Shift-and-add product in GF(2)[x]/(modulus), `modulus` given with its top bit.
pub fn gf_mul(mut a: u64, mut b: u64, modulus: u64) -> u64 {
    let m = 63 - modulus.leading_zeros();
    let mut acc = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a >> m & 1 == 1 {
            a ^= modulus;
        }
    }
    acc
}

pub fn gf_pow(a: u64, mut e: u64, modulus: u64) -> u64 {
    let (mut base, mut acc) = (a, 1);
    while e > 0 {
        if e & 1 == 1 {
            acc = gf_mul(acc, base, modulus);
        }
        base = gf_mul(base, base, modulus);
        e >>= 1;
    }
    acc
}

/// `S_k = Σ_t s_t ω^{tk}` with `ω` the class of `x`.
pub fn naive_dft(s: &[u8], modulus: u64) -> Vec<u64> {
    let n = s.len() as u64;
    (0..n)
        .map(|k| {
            s.iter()
                .enumerate()
                .filter(|(_, &b)| b == 1)
                .fold(0, |acc, (t, _)| acc ^ gf_pow(2, t as u64 * k % n, modulus))
        })
        .collect()
}

/// Nonzero entries of a spectrum as `(k, e)` with `S_k = x^e`, by exhaustive search over the powers of `x`.
pub fn exponents_to_x(spec: &[u64], modulus: u64) -> Vec<(usize, u64)> {
    let m = 63 - modulus.leading_zeros();
    let limit = (1u64 << m) - 1;
    spec.iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(k, &v)| (k, (0..limit).find(|&e| gf_pow(2, e, modulus) == v).expect("power of x")))
        .collect()
}

/// Smallest `r` with `u_t = s_{t+r}` for all `t`, by trying every rotation.
pub fn rotation(s: &[u8], u: &[u8]) -> Option<usize> {
    let n = s.len();
    (0..n).find(|&r| (0..n).all(|t| u[t] == s[(t + r) % n]))
}

/// Whether `g` (exponent list) annihilates the periodic sequence `s`.
pub fn annihilates(g: &[usize], s: &[u8]) -> bool {
    let n = s.len();
    (0..n).all(|t| g.iter().fold(0u8, |acc, &i| acc ^ s[(t + i) % n]) == 0)
}

/// Fibonacci LFSR with feedback `x^m + Σ c_k x^k`, emitting `s_0` first.
pub fn lfsr_run(taps: &[usize], state: &[u8], count: usize) -> Vec<u8> {
    let mut s = state.to_vec();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push(s[0]);
        let fb = taps.iter().fold(0u8, |acc, &k| acc ^ s[k]);
        s.remove(0);
        s.push(fb);
    }
    out
}

pub fn and(a: &[u8], b: &[u8]) -> Vec<u8> {
    let n = a.len() * b.len() / gcd(a.len(), b.len());
    (0..n).map(|t| a[t % a.len()] & b[t % b.len()]).collect()
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}
