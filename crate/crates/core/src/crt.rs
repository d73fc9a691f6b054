//! Chinese remaindering for shifts and spectral supports of product sequences.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::arith::{self, gcd, lcm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CrtError {
    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("congruences are inconsistent")]
    Inconsistent,
    #[error("{0} residues for {1} moduli")]
    LengthMismatch(usize, usize),
    #[error("combined modulus overflows u64")]
    Overflow,
}

/// `(residue, modulus)` pairs; residues are reduced on entry.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Congruences(pub Vec<(i64, u64)>);

impl Congruences {
    pub fn new(pairs: &[(i64, u64)]) -> Self {
        Congruences(pairs.to_vec())
    }
}

fn check_coprime(moduli: &[u64]) -> Result<(), CrtError> {
    for (i, &a) in moduli.iter().enumerate() {
        if a == 0 {
            return Err(CrtError::ZeroModulus);
        }
        for &b in &moduli[i + 1..] {
            if gcd(a, b) != 1 {
                return Err(CrtError::NotCoprime(a, b));
            }
        }
    }
    Ok(())
}

/// Unique `x mod N` for pairwise coprime moduli, returned as `(x, N)`.
pub fn crt_solve(c: &Congruences) -> Result<(u64, u64), CrtError> {
    let moduli: Vec<u64> = c.0.iter().map(|&(_, n)| n).collect();
    check_coprime(&moduli)?;
    crt_general(c)?.ok_or(CrtError::Inconsistent)
}

/// CRT for arbitrary moduli; `None` when the congruences contradict each other.
pub fn crt_general(c: &Congruences) -> Result<Option<(u64, u64)>, CrtError> {
    let mut x: u64 = 0;
    let mut n: u64 = 1;
    for &(r, m) in &c.0 {
        if m == 0 {
            return Err(CrtError::ZeroModulus);
        }
        let r = arith::modulo(i128::from(r), m);
        let g = gcd(n, m);
        let diff = arith::modulo(i128::from(r) - i128::from(x), m);
        if !diff.is_multiple_of(g) {
            return Ok(None);
        }
        let m_g = m / g;
        let inv = arith::mod_inv((n / g) % m_g, m_g).expect("reduced moduli are coprime");
        let t = arith::mul_mod(diff / g, inv, m_g);
        let new_n = n.checked_mul(m_g).ok_or(CrtError::Overflow)?;
        x = ((u128::from(x) + u128::from(n) * u128::from(t)) % u128::from(new_n)) as u64;
        n = new_n;
    }
    Ok(Some((x, n)))
}

/// `τ mod n_i` for each modulus.
pub fn crt_split(tau: i64, moduli: &[u64]) -> Result<Vec<u64>, CrtError> {
    moduli
        .iter()
        .map(|&m| if m == 0 { Err(CrtError::ZeroModulus) } else { Ok(arith::modulo(i128::from(tau), m)) })
        .collect()
}

/// Shift of the product sequence when component `i` is shifted by `k_i`.
pub fn product_shift(shifts: &[i64], moduli: &[u64]) -> Result<u64, CrtError> {
    if shifts.len() != moduli.len() {
        return Err(CrtError::LengthMismatch(shifts.len(), moduli.len()));
    }
    let pairs: Vec<(i64, u64)> = shifts.iter().copied().zip(moduli.iter().copied()).collect();
    Ok(crt_solve(&Congruences(pairs))?.0)
}

/// `{ crt(k_1, ..., k_l) : k_i ∈ support_i }` modulo `Π n_i`.
pub fn product_support(supports: &[BTreeSet<usize>], moduli: &[u64]) -> Result<BTreeSet<usize>, CrtError> {
    if supports.len() != moduli.len() {
        return Err(CrtError::LengthMismatch(supports.len(), moduli.len()));
    }
    check_coprime(moduli)?;
    let mut acc: Vec<(u64, u64)> = vec![(0, 1)];
    for (sup, &m) in supports.iter().zip(moduli) {
        let mut next = Vec::with_capacity(acc.len() * sup.len());
        for &(x, n) in &acc {
            for &k in sup {
                let c = Congruences(vec![(x as i64, n), (k as i64, m)]);
                next.push(crt_general(&c)?.expect("coprime moduli"));
            }
        }
        acc = next;
    }
    Ok(acc.into_iter().map(|(x, _)| x as usize).collect())
}

/// Indices present in an odd number of the given supports.
pub fn xor_support(supports: &[BTreeSet<usize>]) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for sup in supports {
        for &k in sup {
            if !out.remove(&k) {
                out.insert(k);
            }
        }
    }
    out
}

/// Re-indexes a support from period `n` to period `big_n`.
///
/// Index `j` becomes the `K < big_n` with `K ≡ j (mod n)` and
/// `K ≡ 0 (mod big_n / n)`. This matches transforms whose order-`n` root is
/// `ω^e` with `e ≡ 1 (mod n)` and `e ≡ 0 (mod big_n / n)`.
pub fn lift_support(support: &BTreeSet<usize>, n: u64, big_n: u64) -> Result<BTreeSet<usize>, CrtError> {
    if n == 0 || big_n == 0 {
        return Err(CrtError::ZeroModulus);
    }
    if !big_n.is_multiple_of(n) {
        return Err(CrtError::Inconsistent);
    }
    let cof = big_n / n;
    if gcd(n, cof) != 1 {
        return Err(CrtError::NotCoprime(n, cof));
    }
    support
        .iter()
        .map(|&j| Ok(crt_solve(&Congruences(vec![(j as i64, n), (0, cof)]))?.0 as usize))
        .collect()
}

/// Exponent `e` with `e ≡ 1 (mod n)` and `e ≡ 0 (mod big_n / n)`.
pub fn component_exponent(n: u64, big_n: u64) -> Result<u64, CrtError> {
    let one: BTreeSet<usize> = [1].into_iter().collect();
    Ok(*lift_support(&one, n, big_n)?.iter().next().expect("one index") as u64)
}

pub fn lcm_all(moduli: &[u64]) -> u64 {
    moduli.iter().fold(1, |acc, &m| lcm(acc, m))
}
