//! Finite-field DFT of periodic binary sequences.
//!
//! For a sequence of odd period `n` and a root `ω` of order `n`,
//! `S_k = Σ_t s_t ω^{tk} = s(ω^k)` and `s_t = Σ_k S_k ω^{-tk}`.
//! With this orientation `u_t = s_{t+τ}` has `U_k = ω^{-kτ} S_k`, and the
//! filter `z_t = Σ q_i s_{t+i}` has `Z_k = q(ω^{-k}) S_k`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::arith;
use crate::gf2m::{cyclotomic_cosets, FieldCtx, FieldElement, FieldError};
use crate::gfpoly::{self, BitPoly};
use crate::lfsr::PeriodicSeq;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectraError {
    #[error("period {0} is even; no element of that order exists in characteristic 2")]
    EvenPeriod(usize),
    #[error("period {n} does not divide 2^{m} - 1")]
    PeriodMismatch { n: usize, m: u32 },
    #[error("period {n} needs GF(2^{m}), beyond the supported range")]
    FieldTooLarge { n: usize, m: u32 },
    #[error("inverse transform is not binary at t = {0}")]
    NonBinary(usize),
    #[error("spectrum lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Smallest field GF(2^m) holding an element of order `n`, with its default modulus.
pub fn transform_field(n: usize) -> Result<FieldCtx, SpectraError> {
    if n.is_multiple_of(2) {
        return Err(SpectraError::EvenPeriod(n));
    }
    let m = arith::order_of_two(n as u64).ok_or(SpectraError::EvenPeriod(n))?;
    if m > crate::gf2m::MAX_DEGREE {
        return Err(SpectraError::FieldTooLarge { n, m });
    }
    Ok(FieldCtx::default_for(m)?)
}

/// The transform root of order `n` in `ctx`: `x` when it has order `n`, else `α^{(2^m-1)/n}`.
pub fn transform_root(ctx: &FieldCtx, n: usize) -> Result<FieldElement, SpectraError> {
    if n.is_multiple_of(2) {
        return Err(SpectraError::EvenPeriod(n));
    }
    ctx.element_of_order(n as u64).ok_or(SpectraError::PeriodMismatch { n, m: ctx.m() })
}

#[derive(Clone, PartialEq, Eq)]
pub struct Spectrum {
    values: Vec<FieldElement>,
    ctx: FieldCtx,
    root: FieldElement,
}

/// Which element the exponents of a dump refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpBase {
    Root,
    Generator,
}

impl Spectrum {
    pub fn new(values: Vec<FieldElement>, root: FieldElement) -> Result<Self, SpectraError> {
        let n = values.len();
        if root.multiplicative_order()? != n as u64 {
            return Err(SpectraError::PeriodMismatch { n, m: root.ctx().m() });
        }
        let ctx = root.ctx().clone();
        if values.iter().any(|v| v.ctx() != &ctx) {
            return Err(FieldError::CtxMismatch.into());
        }
        Ok(Spectrum { values, ctx, root })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }

    pub fn get(&self, k: usize) -> &FieldElement {
        &self.values[k % self.values.len()]
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn root(&self) -> &FieldElement {
        &self.root
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.values.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(k, _)| k).collect()
    }

    pub fn weight(&self) -> usize {
        self.values.iter().filter(|v| !v.is_zero()).count()
    }

    /// `S_{2k} = S_k^2` for every `k`.
    pub fn is_conjugate_symmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|k| self.values[2 * k % n] == self.values[k].square())
    }

    /// Nonzero entries as `(k, e)` with `S_k = base^e`.
    ///
    /// Exponents are taken to the root whenever every nonzero value lies in
    /// the subgroup it generates, and to the field generator otherwise.
    pub fn exponents(&self) -> (ExpBase, Vec<(usize, u64)>) {
        let nz: Vec<(usize, &FieldElement)> =
            self.values.iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
        let by_root: Option<Vec<(usize, u64)>> = nz
            .iter()
            .map(|(k, v)| v.log_base(&self.root).ok().flatten().map(|e| (*k, e)))
            .collect();
        match by_root {
            Some(v) => (ExpBase::Root, v),
            None => (ExpBase::Generator, nz.iter().map(|(k, v)| (*k, v.dlog().expect("nonzero"))).collect()),
        }
    }

    /// `(3: a^4) (5: a^2) (6: a^1)`; exponents follow [`Spectrum::exponents`].
    pub fn sparse(&self) -> String {
        let (_, exps) = self.exponents();
        exps.iter().map(|(k, e)| format!("({k}: a^{e})")).collect::<Vec<_>>().join(" ")
    }

    /// All `n` entries, `0` or `a^e`.
    pub fn dense(&self) -> String {
        let (_, exps) = self.exponents();
        let mut out = vec!["0".to_string(); self.len()];
        for (k, e) in exps {
            out[k] = format!("a^{e}");
        }
        out.join(" ")
    }

    /// Machine-readable `k:e` pairs, `-` for zero, prefixed by the exponent base.
    pub fn dump(&self) -> String {
        let (base, exps) = self.exponents();
        let mut out = vec!["-".to_string(); self.len()];
        for (k, e) in exps {
            out[k] = e.to_string();
        }
        let base = match base {
            ExpBase::Root => "root",
            ExpBase::Generator => "generator",
        };
        let body: Vec<String> = out.iter().enumerate().map(|(k, e)| format!("{k}:{e}")).collect();
        format!("base={base} {}", body.join(","))
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sparse())
    }
}

impl fmt::Debug for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spectrum[{}]({})", self.len(), self.dense())
    }
}

fn seq_poly(s: &PeriodicSeq) -> BitPoly {
    BitPoly::from_bits(s.bits())
}

/// Direct evaluation of every `S_k = s(ω^k)`.
pub fn dft_naive(s: &PeriodicSeq, ctx: &FieldCtx) -> Result<Spectrum, SpectraError> {
    let n = s.period();
    let root = transform_root(ctx, n)?;
    let p = seq_poly(s);
    let values = (0..n as u64).map(|k| p.eval(&root.pow_u(k))).collect();
    Spectrum::new(values, root)
}

/// One evaluation per cyclotomic coset leader, the rest by squaring.
pub fn dft(s: &PeriodicSeq, ctx: &FieldCtx) -> Result<Spectrum, SpectraError> {
    dft_with_root(s, &transform_root(ctx, s.period())?)
}

/// DFT with respect to a given root whose order equals the period.
pub fn dft_with_root(s: &PeriodicSeq, root: &FieldElement) -> Result<Spectrum, SpectraError> {
    let n = s.period();
    if root.multiplicative_order()? != n as u64 {
        return Err(SpectraError::PeriodMismatch { n, m: root.ctx().m() });
    }
    let p = seq_poly(s);
    let mut values = vec![root.ctx().zero(); n];
    for coset in cyclotomic_cosets(n as u64)? {
        let mut v = p.eval(&root.pow_u(coset[0]));
        for &k in &coset {
            values[k as usize] = v.clone();
            v = v.square();
        }
    }
    Spectrum::new(values, root.clone())
}

/// DFT in the smallest field containing an element of order `n`.
pub fn dft_auto(s: &PeriodicSeq) -> Result<Spectrum, SpectraError> {
    let ctx = transform_field(s.period())?;
    dft(s, &ctx)
}

/// `s_t = Σ_k S_k ω^{-tk}` as field elements.
pub fn idft_values(spec: &Spectrum) -> Vec<FieldElement> {
    let n = spec.len();
    let inv = spec.root.inverse().expect("root is nonzero");
    (0..n as u64)
        .map(|t| {
            let w = inv.pow_u(t);
            let mut acc = spec.ctx.zero();
            for v in spec.values.iter().rev() {
                acc = &(&acc * &w) + v;
            }
            acc
        })
        .collect()
}

pub fn idft(spec: &Spectrum) -> Result<PeriodicSeq, SpectraError> {
    let vals = idft_values(spec);
    let mut bits = Vec::with_capacity(vals.len());
    for (t, v) in vals.iter().enumerate() {
        match v.bits() {
            0 | 1 => bits.push(v.bits() as u8),
            _ => return Err(SpectraError::NonBinary(t)),
        }
    }
    Ok(PeriodicSeq::new(bits).expect("nonempty spectrum"))
}

/// `s_t = Σ_j Tr_{C_j}(S_j ω^{-jt})` over coset leaders `j`.
pub fn trace_reconstruct(spec: &Spectrum) -> Result<PeriodicSeq, SpectraError> {
    let n = spec.len();
    let inv = spec.root.inverse().expect("root is nonzero");
    let cosets = cyclotomic_cosets(n as u64)?;
    let mut bits = Vec::with_capacity(n);
    for t in 0..n as u64 {
        let mut acc = spec.ctx.zero();
        for coset in &cosets {
            let j = coset[0];
            if spec.values[j as usize].is_zero() {
                continue;
            }
            let mut term = &spec.values[j as usize] * &inv.pow_u(arith::mul_mod(j, t, n as u64));
            for _ in 0..coset.len() {
                acc = &acc + &term;
                term = term.square();
            }
        }
        match acc.bits() {
            0 | 1 => bits.push(acc.bits() as u8),
            _ => return Err(SpectraError::NonBinary(t as usize)),
        }
    }
    Ok(PeriodicSeq::new(bits).expect("nonempty spectrum"))
}

pub fn spectral_weight(spec: &Spectrum) -> usize {
    spec.weight()
}

/// Whether the spectral weight equals the linear complexity found by Berlekamp-Massey.
pub fn linear_complexity_check(s: &PeriodicSeq) -> Result<bool, SpectraError> {
    let spec = dft_auto(s)?;
    Ok(spec.weight() == s.linear_complexity())
}

/// Indices `k < n` with `g(ω^k) = 0` for the transform root of order `n`.
pub fn zero_indices_from_roots(g: &BitPoly, n: usize) -> Result<BTreeSet<usize>, SpectraError> {
    let ctx = transform_field(n)?;
    let root = transform_root(&ctx, n)?;
    Ok((0..n).filter(|&k| g.eval(&root.pow_u(k as u64)).is_zero()).collect())
}

/// Spectrum of `u_t = s_{t+τ}`: `U_k = ω^{-kτ} S_k`.
pub fn shift_spectrum(spec: &Spectrum, tau: i64) -> Spectrum {
    let n = spec.len() as u64;
    let values = spec
        .values
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let e = arith::modulo(-i128::from(k as u64) * i128::from(tau), n);
            v * &spec.root.pow_u(e)
        })
        .collect();
    Spectrum { values, ctx: spec.ctx.clone(), root: spec.root.clone() }
}

/// `z_t = Σ_i q_i s_{t+i}`.
pub fn lti_filter(s: &PeriodicSeq, q: &BitPoly) -> PeriodicSeq {
    let taps = q.exponents();
    let n = s.period() as i64;
    let bits = (0..n).map(|t| taps.iter().fold(0u8, |acc, &i| acc ^ s.at(t + i as i64))).collect();
    PeriodicSeq::new(bits).expect("nonempty")
}

/// Frequency response `q(ω^{-k})` of [`lti_filter`] at index `k`.
pub fn filter_response(q: &BitPoly, root: &FieldElement, k: u64) -> FieldElement {
    let n = root.multiplicative_order().expect("root is nonzero");
    q.eval(&root.pow_u((n - k % n) % n))
}

/// `D[j][k] = ω^{jk}`, so that `S = D·s`.
pub fn dft_matrix(ctx: &FieldCtx, n: usize) -> Result<Vec<Vec<FieldElement>>, SpectraError> {
    let root = transform_root(ctx, n)?;
    Ok((0..n as u64)
        .map(|j| (0..n as u64).map(|k| root.pow_u(arith::mul_mod(j, k, n as u64))).collect())
        .collect())
}

pub fn apply_matrix(d: &[Vec<FieldElement>], s: &PeriodicSeq, root: &FieldElement) -> Result<Spectrum, SpectraError> {
    if d.len() != s.period() {
        return Err(SpectraError::LengthMismatch(d.len(), s.period()));
    }
    let ctx = root.ctx();
    let values = d
        .iter()
        .map(|row| {
            row.iter().zip(s.bits()).filter(|(_, &b)| b == 1).fold(ctx.zero(), |acc, (w, _)| &acc + w)
        })
        .collect();
    Spectrum::new(values, root.clone())
}

/// Minimal polynomial of a sequence read off its spectrum: `Π` of min polys of `ω^{-k}` over the support cosets.
pub fn min_poly_from_spectrum(spec: &Spectrum) -> Result<BitPoly, SpectraError> {
    let n = spec.len() as u64;
    let mut g = BitPoly::one();
    for coset in cyclotomic_cosets(n)? {
        if !spec.values[coset[0] as usize].is_zero() {
            let e = (n - coset[0]) % n;
            g = g.mul(&gfpoly::min_poly_of_element(&spec.root.pow_u(e))?);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfsr::Lfsr;

    fn seq(s: &str) -> PeriodicSeq {
        s.parse().unwrap()
    }

    fn example1_product() -> PeriodicSeq {
        seq("011").and(&seq("0010111"))
    }

    #[test]
    fn m_sequence_spectrum() {
        let ctx = FieldCtx::default_for(3).unwrap();
        let s = dft(&seq("0010111"), &ctx).unwrap();
        assert_eq!(s.dense(), "0 0 0 a^4 0 a^2 a^1");
        assert_eq!(s.sparse(), "(3: a^4) (5: a^2) (6: a^1)");
        assert_eq!(dft_naive(&seq("0010111"), &ctx).unwrap(), s);
        assert_eq!(s.weight(), 3);
        assert!(s.is_conjugate_symmetric());
        assert_eq!(idft(&s).unwrap(), seq("0010111"));
        assert_eq!(trace_reconstruct(&s).unwrap(), seq("0010111"));
    }

    #[test]
    fn product_spectrum() {
        let p = example1_product();
        assert_eq!(p.period(), 21);
        let s = dft_auto(&p).unwrap();
        assert_eq!(s.ctx().m(), 6);
        assert_eq!(s.sparse(), "(5: a^9) (10: a^18) (13: a^15) (17: a^18) (19: a^9) (20: a^15)");
        assert_eq!(idft(&s).unwrap(), p);
        assert_eq!(trace_reconstruct(&s).unwrap(), p);
        assert_eq!(min_poly_from_spectrum(&s).unwrap().to_string(), "x^6+x^4+x^2+x+1");
    }

    #[test]
    fn zero_spectrum() {
        let z = seq("0000000");
        let s = dft_auto(&z).unwrap();
        assert!(s.support().is_empty());
        assert_eq!(idft(&s).unwrap(), z);
        assert_eq!(spectral_weight(&s), 0);
    }

    #[test]
    fn non_binary_spectrum_rejected() {
        let ctx = FieldCtx::default_for(3).unwrap();
        let root = transform_root(&ctx, 7).unwrap();
        let mut vals = vec![ctx.zero(); 7];
        vals[1] = ctx.one();
        let s = Spectrum::new(vals, root).unwrap();
        assert!(matches!(idft(&s), Err(SpectraError::NonBinary(_))));
    }

    #[test]
    fn roots_and_zeros() {
        let zeros = zero_indices_from_roots(&"x^3+x+1".parse().unwrap(), 7).unwrap();
        assert_eq!(zeros, [1, 2, 4].into_iter().collect());
        assert_eq!(zero_indices_from_roots(&"x+1".parse().unwrap(), 21).unwrap(), [0].into_iter().collect());
        let g1 = zero_indices_from_roots(&"x^6+x^4+x^2+x+1".parse().unwrap(), 21).unwrap();
        assert_eq!(g1, [1, 2, 4, 8, 11, 16].into_iter().collect());
    }

    #[test]
    fn shifted_spectrum() {
        let ctx = FieldCtx::default_for(3).unwrap();
        let b = dft(&seq("0010111"), &ctx).unwrap();
        assert_eq!(shift_spectrum(&b, 0), b);
        let u = shift_spectrum(&b, 1);
        assert_eq!(u.dense(), "0 0 0 a^1 0 a^4 a^2");
        assert_eq!(u, dft(&seq("0010111").rotate(1), &ctx).unwrap());
    }

    #[test]
    fn filtering() {
        let s = seq("0010111");
        assert_eq!(lti_filter(&s, &BitPoly::one()), s);
        assert!(lti_filter(&s, &"x^3+x+1".parse().unwrap()).is_zero());
        let ctx = FieldCtx::default_for(3).unwrap();
        let q: BitPoly = "x^2+1".parse().unwrap();
        let spec = dft(&s, &ctx).unwrap();
        let out = dft(&lti_filter(&s, &q), &ctx).unwrap();
        for k in 0..7 {
            assert_eq!(out.get(k), &(&filter_response(&q, spec.root(), k as u64) * spec.get(k)));
        }
    }

    #[test]
    fn matrix_transform() {
        let ctx = FieldCtx::default_for(3).unwrap();
        let d = dft_matrix(&ctx, 7).unwrap();
        assert!(d[0].iter().all(|v| v.is_one()));
        assert!(d.iter().all(|row| row[0].is_one()));
        for j in 0..7 {
            for k in 0..7 {
                assert_eq!(d[j][k], d[k][j]);
            }
        }
        let s = seq("0010111");
        let root = transform_root(&ctx, 7).unwrap();
        assert_eq!(apply_matrix(&d, &s, &root).unwrap(), dft(&s, &ctx).unwrap());
    }

    #[test]
    fn blahut_on_registers() {
        for (f, st) in [("x^5+x^2+1", "00001"), ("x^3+x+1", "001")] {
            let mut l = Lfsr::new(f.parse().unwrap(), &crate::lfsr::parse_bits(st).unwrap()).unwrap();
            let n = l.period().unwrap() as usize;
            let s = PeriodicSeq::new(l.run(n)).unwrap();
            assert!(linear_complexity_check(&s).unwrap());
        }
        assert!(transform_field(8).is_err());
    }
}
