//! Fibonacci LFSRs and periodic binary sequences.
//!
//! A register with characteristic polynomial `x^m + Σ c_k x^k` and state
//! `s_0..s_{m-1}` emits `s_0` and appends `s_m = Σ c_k s_k`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::arith;
use crate::bitmatrix::BitMatrix;
use crate::gf2m::{FieldCtx, FieldElement};
use crate::gfpoly::{self, BitPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LfsrError {
    #[error("feedback polynomial {0} must have degree at least 2 and constant term 1")]
    Feedback(String),
    #[error("state has {got} bits but the register has {expected}")]
    StateWidth { expected: usize, got: usize },
    #[error("the all-zero state has no period")]
    ZeroState,
    #[error("sequences have periods {0} and {1}")]
    PeriodMismatch(usize, usize),
    #[error("decimation by {k} is not invertible modulo {n}")]
    NotCoprime { k: u64, n: u64 },
    #[error("empty sequence")]
    Empty,
    #[error("bad bit string {0:?}")]
    Parse(String),
    #[error("feedback polynomial {0} is not irreducible")]
    Reducible(String),
}

pub fn parse_bits(s: &str) -> Result<Vec<u8>, LfsrError> {
    s.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            _ => Err(LfsrError::Parse(s.to_string())),
        })
        .collect()
}

pub fn bits_to_string(bits: &[u8]) -> String {
    bits.iter().map(|&b| if b & 1 == 1 { '1' } else { '0' }).collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct Lfsr {
    feedback: BitPoly,
    taps: Vec<u8>,
    state: Vec<u8>,
}

impl Lfsr {
    pub fn new(feedback: BitPoly, state: &[u8]) -> Result<Self, LfsrError> {
        let m = feedback.deg();
        if m < 2 || !feedback.coeff(0) {
            return Err(LfsrError::Feedback(feedback.to_string()));
        }
        if state.len() != m {
            return Err(LfsrError::StateWidth { expected: m, got: state.len() });
        }
        let taps = (0..m).map(|k| u8::from(feedback.coeff(k))).collect();
        Ok(Lfsr { feedback, taps, state: state.iter().map(|b| b & 1).collect() })
    }

    /// Register loaded with `0…01`.
    pub fn reference(feedback: BitPoly) -> Result<Self, LfsrError> {
        let mut state = vec![0u8; feedback.deg()];
        if let Some(last) = state.last_mut() {
            *last = 1;
        }
        Self::new(feedback, &state)
    }

    pub fn feedback(&self) -> &BitPoly {
        &self.feedback
    }

    pub fn degree(&self) -> usize {
        self.state.len()
    }

    pub fn state(&self) -> &[u8] {
        &self.state
    }

    pub fn step(&mut self) -> u8 {
        let out = self.state[0];
        let next = self.taps.iter().zip(&self.state).fold(0, |acc, (c, s)| acc ^ (c & s));
        self.state.rotate_left(1);
        *self.state.last_mut().expect("degree ≥ 2") = next;
        out
    }

    pub fn run(&mut self, count: usize) -> Vec<u8> {
        (0..count).map(|_| self.step()).collect()
    }

    /// Least `p` after which the state repeats.
    pub fn period(&self) -> Result<u64, LfsrError> {
        if self.state.iter().all(|&b| b == 0) {
            return Err(LfsrError::ZeroState);
        }
        let m = self.degree();
        let bits = self.clone().run(2 * m);
        let (h, _) = gfpoly::berlekamp_massey(&bits).expect("nonempty");
        Ok(gfpoly::order(&h).expect("minimal polynomial divides the feedback"))
    }

    /// Companion matrix `T` with `next = state · T`.
    pub fn state_matrix(&self) -> BitMatrix {
        let m = self.degree();
        BitMatrix::from_fn(m, m, |r, c| if c + 1 < m { r == c + 1 } else { self.taps[r] == 1 })
    }

    /// The `β` with `s_t = Tr(β x^t)` in `GF(2)[x]/(feedback)`.
    pub fn trace_coefficient(&self, ctx: &FieldCtx) -> Result<FieldElement, LfsrError> {
        if ctx.modulus() != &self.feedback {
            return Err(LfsrError::Reducible(self.feedback.to_string()));
        }
        let m = self.degree();
        let x = ctx.x();
        let powers: Vec<FieldElement> = (0..2 * m).map(|i| x.pow_u(i as u64)).collect();
        let a = BitMatrix::from_fn(m, m, |t, i| powers[t + i].trace() == 1);
        let coords = a.solve(&self.state).expect("trace form is nondegenerate");
        Ok(ctx.elem(coords.iter().enumerate().fold(0u64, |acc, (i, &b)| acc | u64::from(b) << i)))
    }
}

impl fmt::Debug for Lfsr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lfsr({}, {})", self.feedback, bits_to_string(&self.state))
    }
}

pub fn matrix_step(t: &BitMatrix, state: &[u8]) -> Vec<u8> {
    t.vec_mul(state)
}

/// `Tr(β x^t)` for `t < count`, with `x` the class of `x` in `ctx`.
pub fn trace_sequence(ctx: &FieldCtx, beta: &FieldElement, count: usize) -> Vec<u8> {
    let x = ctx.x();
    let mut cur = beta.clone();
    (0..count)
        .map(|_| {
            let b = cur.trace();
            cur = &cur * &x;
            b
        })
        .collect()
}

/// One period of a binary sequence, indexed cyclically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PeriodicSeq {
    bits: Vec<u8>,
}

impl PeriodicSeq {
    pub fn new(bits: Vec<u8>) -> Result<Self, LfsrError> {
        if bits.is_empty() {
            return Err(LfsrError::Empty);
        }
        Ok(PeriodicSeq { bits: bits.into_iter().map(|b| b & 1).collect() })
    }

    pub fn period(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn at(&self, t: i64) -> u8 {
        self.bits[arith::modulo(i128::from(t), self.bits.len() as u64) as usize]
    }

    /// The first `len` terms.
    pub fn take(&self, len: usize) -> Vec<u8> {
        (0..len).map(|t| self.bits[t % self.bits.len()]).collect()
    }

    /// `u_t = s_{t+tau}`.
    pub fn rotate(&self, tau: i64) -> PeriodicSeq {
        let n = self.period();
        let k = arith::modulo(i128::from(tau), n as u64) as usize;
        let mut bits = self.bits.clone();
        bits.rotate_left(k);
        PeriodicSeq { bits }
    }

    /// Termwise combination over one common period `lcm(n_a, n_b)`.
    pub fn zip_with(&self, other: &PeriodicSeq, f: impl Fn(u8, u8) -> u8) -> PeriodicSeq {
        let n = arith::lcm(self.period() as u64, other.period() as u64) as usize;
        PeriodicSeq { bits: (0..n).map(|t| f(self.bits[t % self.period()], other.bits[t % other.period()])).collect() }
    }

    pub fn and(&self, other: &PeriodicSeq) -> PeriodicSeq {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn xor(&self, other: &PeriodicSeq) -> PeriodicSeq {
        self.zip_with(other, |a, b| a ^ b)
    }

    /// Reduces to the least period.
    pub fn minimal(&self) -> PeriodicSeq {
        let n = self.period();
        for d in 1..=n {
            if n.is_multiple_of(d) && (d..n).all(|t| self.bits[t] == self.bits[t - d]) {
                return PeriodicSeq { bits: self.bits[..d].to_vec() };
            }
        }
        self.clone()
    }

    /// Minimal polynomial and linear complexity from two periods.
    pub fn min_poly(&self) -> (BitPoly, usize) {
        gfpoly::berlekamp_massey(&self.take(2 * self.period())).expect("nonempty")
    }

    pub fn linear_complexity(&self) -> usize {
        self.min_poly().1
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }
}

impl fmt::Display for PeriodicSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", bits_to_string(&self.bits))
    }
}

impl fmt::Debug for PeriodicSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PeriodicSeq[{}]({self})", self.period())
    }
}

impl FromStr for PeriodicSeq {
    type Err = LfsrError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PeriodicSeq::new(parse_bits(s)?)
    }
}

/// Least `k ≥ 0` with `u_i = s_{i+k}` for all `i`.
pub fn find_shift(s: &PeriodicSeq, u: &PeriodicSeq) -> Result<Option<usize>, LfsrError> {
    if s.period() != u.period() {
        return Err(LfsrError::PeriodMismatch(s.period(), u.period()));
    }
    let hay = s.to_string().repeat(2);
    let needle = u.to_string();
    Ok(hay[..2 * s.period() - 1].find(&needle))
}

/// `c_t = s_{k t mod n}`.
pub fn decimate(s: &PeriodicSeq, k: u64) -> Result<PeriodicSeq, LfsrError> {
    let n = s.period() as u64;
    if arith::gcd(k % n, n) != 1 {
        return Err(LfsrError::NotCoprime { k, n });
    }
    let bits = (0..n).map(|t| s.bits[arith::mul_mod(k, t, n) as usize]).collect();
    Ok(PeriodicSeq { bits })
}

/// One full period of the register's output.
pub fn period_sequence(l: &Lfsr) -> Result<PeriodicSeq, LfsrError> {
    let p = l.period()? as usize;
    PeriodicSeq::new(l.clone().run(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> BitPoly {
        s.parse().unwrap()
    }

    fn seq(s: &str) -> PeriodicSeq {
        s.parse().unwrap()
    }

    #[test]
    fn small_registers() {
        let mut b = Lfsr::new(poly("x^3+x+1"), &[0, 0, 1]).unwrap();
        assert_eq!(bits_to_string(&b.run(7)), "0010111");
        let mut a = Lfsr::reference(poly("x^2+x+1")).unwrap();
        assert_eq!(bits_to_string(&a.run(3)), "011");
        let mut z = Lfsr::new(poly("x^3+x+1"), &[0, 0, 0]).unwrap();
        assert_eq!(z.run(5), vec![0; 5]);
        assert!(z.period().is_err());
        assert!(Lfsr::new(poly("x^3+x"), &[0, 0, 1]).is_err());
        assert!(Lfsr::new(poly("x^3+x+1"), &[0, 1]).is_err());
    }

    #[test]
    fn periods() {
        assert_eq!(Lfsr::reference(poly("x^5+x^2+1")).unwrap().period().unwrap(), 31);
        assert_eq!(Lfsr::reference(poly("x^3+x+1")).unwrap().period().unwrap(), 7);
        assert_eq!(Lfsr::reference(poly("x^2+x+1")).unwrap().period().unwrap(), 3);
        assert_eq!(Lfsr::new(poly("x^4+x^2+1"), &[1, 0, 0, 0]).unwrap().period().unwrap(), 6);
    }

    #[test]
    fn matrix_form() {
        let l = Lfsr::new(poly("x^3+x+1"), &[0, 0, 1]).unwrap();
        let t = l.state_matrix();
        assert_eq!(matrix_step(&t, &[0, 0, 1]), vec![0, 1, 0]);
        assert_eq!(t.pow(7), BitMatrix::identity(3));
        assert_eq!(t.determinant(), 1);
    }

    #[test]
    fn shifts() {
        let s = seq("0010111");
        assert_eq!(find_shift(&s, &s).unwrap(), Some(0));
        assert_eq!(find_shift(&s, &seq("0101110")).unwrap(), Some(1));
        assert_eq!(find_shift(&s, &seq("1111111")).unwrap(), None);
        assert!(find_shift(&s, &seq("01")).is_err());
        assert_eq!(s.rotate(-1).to_string(), "1001011");
    }

    #[test]
    fn decimation() {
        let s = seq("0010111");
        assert_eq!(decimate(&s, 1).unwrap(), s);
        let rev = decimate(&s, 6).unwrap();
        let backwards = PeriodicSeq::new((0..7).map(|t| s.at(-t)).collect()).unwrap();
        assert_eq!(rev, backwards);
        assert!(decimate(&seq("011011"), 3).is_err());
    }

    #[test]
    fn trace_phase() {
        let ctx = FieldCtx::default_for(3).unwrap();
        let target = parse_bits("0010111").unwrap();
        let hits: Vec<u64> = (1..8).filter(|&b| trace_sequence(&ctx, &ctx.elem(b), 7) == target).collect();
        assert_eq!(hits.len(), 1);
        let beta = ctx.elem(hits[0]);
        for tau in 0..7u64 {
            let shifted = trace_sequence(&ctx, &(&beta * &ctx.x().pow_u(tau)), 7);
            assert_eq!(shifted, seq("0010111").rotate(tau as i64).take(7));
        }
        let l = Lfsr::new(poly("x^3+x+1"), &[0, 0, 1]).unwrap();
        assert_eq!(l.trace_coefficient(&ctx).unwrap(), beta);
        assert_eq!(trace_sequence(&ctx, &ctx.zero(), 5), vec![0; 5]);
    }
}
