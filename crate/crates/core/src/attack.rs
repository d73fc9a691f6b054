//! Selective-DFT attack on nonlinear combiners, an exhaustive-search oracle
//! and operation-count estimates.
//!
//! The keystream `z` of a combiner whose registers sit at unknown phases is a
//! shift of the reference keystream: `ref_t = z_{t+τ}`. Filtering with
//! `q_j = g / g_j` keeps one irreducible component of `g`, whose trace
//! coefficient moves by `ρ^{-τ}` under that shift. A `d × d` solve recovers
//! the coefficient from `deg g` observed bits, a discrete log gives
//! `τ mod n_j`, and the residues of enough components pin `τ` by CRT.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::arith;
use crate::bitmatrix::BitMatrix;
use crate::crt::{self, Congruences};
use crate::gf2m::{self, FieldCtx, FieldElement, FieldError};
use crate::gfpoly::{self, BitPoly, PolyError};
use crate::generators::{GenError, GeneratorKind, GeneratorSpec};
use crate::lfsr::{self, Lfsr, PeriodicSeq};
use crate::spectra;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AttackError {
    #[error(transparent)]
    Generator(#[from] GenError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("attack inapplicable: {0}")]
    Inapplicable(String),
    #[error("keystream minimal polynomial {0} is irreducible: no component can be isolated")]
    SpectralImmunity(BitPoly),
    #[error("k = {k} is not admissible: needs gcd(k, {n}) = 1 and a factor vanishing at x^k")]
    InadmissibleK { k: u64, n: u64 },
    #[error("decimation gives {decimated} but factorization gives {factored}")]
    PathMismatch { decimated: BitPoly, factored: BitPoly },
    #[error("need {needed} keystream bits, got {got}")]
    InsufficientBits { needed: usize, got: usize },
    #[error("keystream inconsistent with the generator: {0}")]
    Inconsistent(String),
    #[error("exhaustive search over 2^{0} states is too large")]
    TooLarge(usize),
    #[error("no initial state reproduces the keystream")]
    NoMatch,
    #[error("{0} initial states reproduce the keystream window")]
    Ambiguous(usize),
}

type Result<T> = std::result::Result<T, AttackError>;

/// One irreducible factor of `g` together with what is needed to read its phase.
#[derive(Debug, Clone)]
pub struct Component {
    /// `g_j`, irreducible.
    pub g: BitPoly,
    /// `g / g_j`.
    pub q: BitPoly,
    /// Order of the roots of `g_j`.
    pub n: u64,
    pub k: u64,
    pub field: FieldCtx,
    /// `x` in `GF(2)[x]/(g_j)`.
    pub rho: FieldElement,
    /// `ρ^k`, itself a root of `g_j`.
    pub gamma: FieldElement,
    /// Trace coefficient of the filtered reference in the basis of powers of `γ`.
    pub a_k: FieldElement,
    /// Inverse of the Hankel matrix `Tr(γ^{t+i})`.
    m_inv: BitMatrix,
}

impl Component {
    fn new(g: BitPoly, total: &BitPoly, k: u64, ref_seq: &PeriodicSeq) -> Result<Self> {
        let q = total.divexact(&g)?;
        let field = FieldCtx::new(g.clone())?;
        let rho = field.x();
        let n = rho.multiplicative_order()?;
        let gamma = rho.pow_u(k % n);
        let d = g.deg();
        let powers: Vec<FieldElement> = (0..2 * d).map(|i| gamma.pow_u(i as u64)).collect();
        let m = BitMatrix::from_fn(d, d, |t, i| powers[t + i].trace() == 1);
        let m_inv = m.inverse().ok_or_else(|| AttackError::Inapplicable(format!("{g}: singular trace matrix")))?;
        let mut c = Component { g, q, n, k, field: field.clone(), rho, gamma, a_k: field.zero(), m_inv };
        let vref = spectra::lti_filter(ref_seq, &c.q);
        c.a_k = c.coefficient(&vref.take(d))?;
        Ok(c)
    }

    pub fn degree(&self) -> usize {
        self.g.deg()
    }

    /// The `d × d` coefficient matrix `M[t][i] = Tr(γ^{t+i})`.
    pub fn matrix(&self) -> BitMatrix {
        self.m_inv.inverse().expect("inverse of an inverse")
    }

    /// `B` with `v_t = Tr(B γ^t)` for the first `d` entries of `v`.
    fn coefficient(&self, v: &[u8]) -> Result<FieldElement> {
        let y = self.m_inv.mul_vec(&v[..self.degree()]);
        let mut b = self.field.zero();
        let mut p = self.field.one();
        for &yi in &y {
            if yi == 1 {
                b = &b + &p;
            }
            p = &p * &self.gamma;
        }
        Ok(b)
    }

    /// `τ mod n` from the filtered window `v`.
    pub fn phase(&self, v: &[u8]) -> Result<u64> {
        let b = self.coefficient(v)?;
        let mut cur = b.clone();
        for (t, &bit) in v.iter().enumerate() {
            if cur.trace() != bit {
                return Err(AttackError::Inconsistent(format!("component {} disagrees at filtered bit {t}", self.g)));
            }
            cur = &cur * &self.gamma;
        }
        if b.is_zero() {
            return Err(AttackError::Inconsistent(format!("component {} vanishes", self.g)));
        }
        let k_inv = arith::mod_inv(self.k % self.n, self.n)
            .ok_or(AttackError::InadmissibleK { k: self.k, n: self.n })?;
        let beta = (&self.a_k / &b).pow_u(k_inv);
        beta.log_base(&self.rho)?
            .ok_or_else(|| AttackError::Inconsistent(format!("no discrete log for component {}", self.g)))
    }
}

/// Everything the attack needs that depends only on the public generator structure.
#[derive(Debug, Clone)]
pub struct AttackContext {
    pub spec: GeneratorSpec,
    /// Minimal polynomial of the keystream.
    pub g: BitPoly,
    pub factors: Vec<BitPoly>,
    pub k: u64,
    pub g_k: BitPoly,
    pub q: BitPoly,
    /// Reference keystream, every register started from `0…01`.
    pub ref_seq: PeriodicSeq,
    pub a_k: FieldElement,
    /// Components used for phase recovery, the `g_k` one first.
    pub components: Vec<Component>,
    /// Keystream period.
    pub period: u64,
    /// `g_k` recovered from the decimated, filtered reference.
    pub decimated_g_k: BitPoly,
}

impl AttackContext {
    /// Observed bits needed: `deg q + deg g_k`.
    pub fn bits_needed(&self) -> usize {
        self.g.deg()
    }

    pub fn d(&self) -> usize {
        self.g_k.deg()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauRecovery {
    pub tau: u64,
    /// `(τ mod n_j, n_j)` per component used.
    pub residues: Vec<(u64, u64)>,
    pub bits_used: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttackResult {
    pub tau: u64,
    pub tau_i: Vec<u64>,
    pub states: Vec<Vec<u8>>,
    pub bits_used: usize,
    pub timings: Vec<(&'static str, Duration)>,
}

fn admissible(g_j: &BitPoly, k: u64, n: u64) -> Result<bool> {
    if arith::gcd(k, n) != 1 {
        return Ok(false);
    }
    let field = FieldCtx::new(g_j.clone())?;
    let root = field.x().pow_u(k);
    Ok(g_j.eval(&root).is_zero())
}

/// Smallest-degree factor first, then smallest coset leader of the keystream period.
pub fn select_k(factors: &[BitPoly], period: u64) -> Result<Option<(u64, BitPoly)>> {
    let leaders: Vec<u64> = gf2m::cyclotomic_cosets(period)?.iter().map(|c| c[0]).filter(|&k| k > 0).collect();
    let mut by_degree = factors.to_vec();
    by_degree.sort();
    for g_j in by_degree {
        for &k in &leaders {
            if admissible(&g_j, k, period)? {
                return Ok(Some((k, g_j)));
            }
        }
    }
    Ok(None)
}

/// Builds the reference keystream, its minimal polynomial and the per-component solvers.
pub fn precompute(spec: &GeneratorSpec) -> Result<AttackContext> {
    if spec.kind != GeneratorKind::Combiner {
        return Err(AttackError::Inapplicable("only combiners are supported".into()));
    }
    let reference = spec.with_reference_states();
    let ref_seq = reference.period_keystream()?;
    let period = ref_seq.period() as u64;
    let (g, _) = ref_seq.min_poly();
    if g.deg() == 0 {
        return Err(AttackError::Inapplicable("keystream is constant zero".into()));
    }
    let factored = gfpoly::factorize(&g)?;
    if let Some((p, _)) = factored.iter().find(|(p, e)| *e > 1 || !p.coeff(0)) {
        return Err(AttackError::Inapplicable(format!("minimal polynomial has a repeated or degenerate factor {p}")));
    }
    let factors: Vec<BitPoly> = factored.into_iter().map(|(p, _)| p).collect();
    if factors.len() == 1 {
        return Err(AttackError::SpectralImmunity(g));
    }
    if factors.iter().any(|p| p.deg() > 63) {
        return Err(AttackError::Inapplicable("factor degree above 63".into()));
    }

    let (k, g_k) = match spec.attack_k {
        Some(k) => {
            let mut candidates = factors.clone();
            candidates.sort();
            let mut found = None;
            for p in candidates {
                if admissible(&p, k, period)? {
                    found = Some(p);
                    break;
                }
            }
            (k, found.ok_or(AttackError::InadmissibleK { k, n: period })?)
        }
        None => select_k(&factors, period)?
            .ok_or_else(|| AttackError::Inapplicable("no coset leader k is admissible".into()))?,
    };
    log::debug!("k = {k}, g_k = {g_k}");

    let primary = Component::new(g_k.clone(), &g, k, &ref_seq)?;
    let filtered = spectra::lti_filter(&ref_seq, &primary.q);
    let decimated_g_k = lfsr::decimate(&filtered, k).map_err(GenError::from)?.min_poly().0;
    if decimated_g_k != g_k {
        return Err(AttackError::PathMismatch { decimated: decimated_g_k, factored: g_k });
    }

    let mut rest: Vec<BitPoly> = factors.iter().filter(|p| **p != g_k).cloned().collect();
    rest.sort();
    let target = crt::lcm_all(&factors.iter().map(|p| gfpoly::root_order(p).unwrap_or(1)).collect::<Vec<_>>());
    let mut covered = primary.n;
    let mut components = vec![primary];
    for p in rest {
        if covered == target {
            break;
        }
        let n = gfpoly::root_order(&p).unwrap_or(1);
        if arith::lcm(covered, n) == covered {
            continue;
        }
        let k_j = if admissible(&p, k, period)? {
            k
        } else {
            let leaders = gf2m::cyclotomic_cosets(period)?;
            let mut pick = None;
            for c in leaders.iter().filter(|c| c[0] > 0) {
                if admissible(&p, c[0], period)? {
                    pick = Some(c[0]);
                    break;
                }
            }
            pick.ok_or_else(|| AttackError::Inapplicable(format!("no admissible k for {p}")))?
        };
        components.push(Component::new(p, &g, k_j, &ref_seq)?);
        covered = arith::lcm(covered, n);
    }

    let q = components[0].q.clone();
    let a_k = components[0].a_k.clone();
    Ok(AttackContext {
        spec: spec.clone(),
        g,
        factors,
        k,
        g_k,
        q,
        ref_seq,
        a_k,
        components,
        period: covered,
        decimated_g_k,
    })
}

/// `τ` with `ref_t = z_{t+τ}`, from at least `deg g` observed bits.
pub fn recover_tau(ctx: &AttackContext, z: &[u8]) -> Result<TauRecovery> {
    let needed = ctx.bits_needed();
    if z.len() < needed {
        return Err(AttackError::InsufficientBits { needed, got: z.len() });
    }
    let mut residues = Vec::with_capacity(ctx.components.len());
    for c in &ctx.components {
        let taps = c.q.exponents();
        let v: Vec<u8> = (0..=z.len() - 1 - c.q.deg())
            .map(|t| taps.iter().fold(0u8, |acc, &i| acc ^ z[t + i]))
            .collect();
        residues.push((c.phase(&v)?, c.n));
    }
    let congruences = Congruences(residues.iter().map(|&(r, n)| (r as i64, n)).collect());
    let (tau, _) = crt::crt_general(&congruences)
        .map_err(|e| AttackError::Inconsistent(e.to_string()))?
        .ok_or_else(|| AttackError::Inconsistent("component phases disagree".into()))?;
    Ok(TauRecovery { tau, residues, bits_used: needed })
}

/// Initial states at shift `τ`: register `i` starts at `β_i = β0_i x^{-τ_i}` with `τ_i = τ mod r_i`.
pub fn recover_states(spec: &GeneratorSpec, tau: u64) -> Result<(Vec<u64>, Vec<Vec<u8>>)> {
    let periods = spec.periods()?;
    let mut tau_i = Vec::new();
    let mut states = Vec::new();
    for (r, &p) in spec.registers.iter().zip(&periods) {
        let t = tau % p;
        let state = match FieldCtx::new(r.poly.clone()) {
            Ok(field) => {
                let beta0 = Lfsr::reference(r.poly.clone())
                    .and_then(|l| l.trace_coefficient(&field))
                    .map_err(GenError::from)?;
                let beta = &beta0 * &field.x().pow_u(p - t);
                lfsr::trace_sequence(&field, &beta, r.poly.deg())
            }
            Err(_) => {
                let mut reg = Lfsr::reference(r.poly.clone()).map_err(GenError::from)?;
                let seq = PeriodicSeq::new(reg.run(p as usize)).map_err(GenError::from)?;
                (0..r.poly.deg() as i64).map(|i| seq.at(i - t as i64)).collect()
            }
        };
        tau_i.push(t);
        states.push(state);
    }
    Ok((tau_i, states))
}

/// Full pipeline: phase recovery, state recovery and a resynthesis check over every observed bit.
pub fn attack(ctx: &AttackContext, z: &[u8]) -> Result<AttackResult> {
    let start = Instant::now();
    let rec = recover_tau(ctx, z)?;
    let t_tau = start.elapsed();
    let (tau_i, states) = recover_states(&ctx.spec, rec.tau)?;
    let t_states = start.elapsed() - t_tau;
    let regenerated = ctx.spec.with_states(&states)?.keystream(z.len())?;
    if let Some(t) = regenerated.iter().zip(z).position(|(a, b)| a != b) {
        return Err(AttackError::Inconsistent(format!("recovered states disagree with bit {t}")));
    }
    Ok(AttackResult {
        tau: rec.tau,
        tau_i,
        states,
        bits_used: rec.bits_used,
        timings: vec![("tau", t_tau), ("states", t_states), ("verify", start.elapsed() - t_tau - t_states)],
    })
}

fn state_bits(s: u64, m: usize) -> Vec<u8> {
    (0..m).map(|i| (s >> (m - 1 - i) & 1) as u8).collect()
}

/// Tries every tuple of nonzero register states against the window `z`; the match must be unique.
pub fn exhaustive_oracle(spec: &GeneratorSpec, z: &[u8]) -> Result<Vec<Vec<u8>>> {
    if spec.kind != GeneratorKind::Combiner {
        return Err(AttackError::Inapplicable("only combiners are supported".into()));
    }
    let degrees = spec.degrees();
    let total_bits: usize = degrees.iter().sum();
    if total_bits > 24 {
        return Err(AttackError::TooLarge(total_bits));
    }
    let func = spec.func.as_ref().ok_or_else(|| AttackError::Inapplicable("no combining function".into()))?;
    let table = func.truth_table();
    let width = func.num_vars();
    let outputs: Vec<Vec<(u64, Vec<u8>)>> = spec
        .registers
        .iter()
        .map(|r| {
            let m = r.poly.deg();
            (1..1u64 << m)
                .map(|s| {
                    let mut reg = Lfsr::new(r.poly.clone(), &state_bits(s, m)).expect("nonzero state");
                    (s, reg.run(z.len()))
                })
                .collect()
        })
        .collect();
    let sizes: Vec<u64> = outputs.iter().map(|o| o.len() as u64).collect();
    let count: u64 = sizes.iter().product();
    let matches: Vec<u64> = (0..count)
        .into_par_iter()
        .filter(|&idx| {
            let mut rest = idx;
            let picks: Vec<&[u8]> = sizes
                .iter()
                .zip(&outputs)
                .map(|(&n, o)| {
                    let p = &o[(rest % n) as usize].1;
                    rest /= n;
                    p.as_slice()
                })
                .collect();
            z.iter().enumerate().all(|(t, &bit)| {
                let i = picks[..width].iter().enumerate().fold(0usize, |acc, (j, p)| acc | usize::from(p[t]) << j);
                table[i] == bit
            })
        })
        .collect();
    match matches.as_slice() {
        [] => Err(AttackError::NoMatch),
        [idx] => {
            let mut rest = *idx;
            Ok(sizes
                .iter()
                .zip(&outputs)
                .zip(&degrees)
                .map(|((&n, o), &m)| {
                    let s = o[(rest % n) as usize].0;
                    rest /= n;
                    state_bits(s, m)
                })
                .collect())
        }
        many => Err(AttackError::Ambiguous(many.len())),
    }
}

/// Operation-count estimates, in GF(2) operations.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexityReport {
    pub exhaustive: u64,
    pub correlation: u64,
    /// `L log2 L`.
    pub minimal_polynomial: f64,
    /// `m (log2 m)^2` for one `k`.
    pub component_polynomial: f64,
    /// `N η(m) + m log2 N`.
    pub evaluation: f64,
    /// `L`.
    pub filtering: f64,
    /// `d^{log2 7}`.
    pub solve: f64,
    /// One operation per register.
    pub state_recovery: f64,
}

impl ComplexityReport {
    pub fn preprocessing(&self) -> f64 {
        self.minimal_polynomial + self.component_polynomial + self.evaluation
    }

    pub fn attack(&self) -> f64 {
        self.filtering + self.solve + self.state_recovery
    }

    pub fn total(&self) -> f64 {
        self.preprocessing() + self.attack()
    }

    /// `degrees`: register lengths; `l`: keystream linear complexity; `d`: degree of `g_k`.
    pub fn from_parts(degrees: &[usize], l: u64, d: u64) -> Self {
        let lg = |x: f64| x.log2();
        let eta = |m: f64| if m > 2.0 { m * lg(m) * lg(lg(m)) } else { 0.0 };
        let (lf, mf) = (l as f64, d as f64);
        let total_m: usize = degrees.iter().sum();
        ComplexityReport {
            exhaustive: 1u64 << total_m.saturating_sub(1),
            correlation: degrees.iter().map(|&m| 1u64 << (m - 1)).sum(),
            minimal_polynomial: if l > 1 { lf * lg(lf) } else { 0.0 },
            component_polynomial: if d > 1 { mf * lg(mf).powi(2) } else { 0.0 },
            evaluation: lf * eta(mf) + if l > 1 { mf * lg(lf) } else { 0.0 },
            filtering: lf,
            solve: mf.powf(lg(7.0)),
            state_recovery: degrees.len() as f64,
        }
    }
}

/// Estimates from structure alone: `L = f(m_1, …, m_l)` and `d` the smallest nonlinear monomial's `Π m_i`.
pub fn complexity_report(spec: &GeneratorSpec) -> Result<ComplexityReport> {
    let degrees = spec.degrees();
    let func = spec.func.as_ref().ok_or_else(|| AttackError::Inapplicable("no combining function".into()))?;
    let values: Vec<u64> = degrees.iter().take(func.num_vars()).map(|&m| m as u64).collect();
    let l = func.integer_eval(&values).map_err(GenError::from)?;
    let monomial = |mask: u32| (0..values.len()).filter(|i| mask >> i & 1 == 1).map(|i| values[i]).product::<u64>();
    let d = func
        .monomials()
        .filter(|m| m.count_ones() >= 2)
        .map(monomial)
        .min()
        .or_else(|| func.monomials().filter(|&m| m != 0).map(monomial).min())
        .unwrap_or(0);
    Ok(ComplexityReport::from_parts(&degrees, l, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::majority_combiner;
    use crate::lfsr::{bits_to_string, find_shift, parse_bits};
    use rand::{Rng, SeedableRng};

    const Z: &str = "1011110001111010111001011010111";

    fn example_ctx() -> AttackContext {
        let mut spec = majority_combiner(None);
        spec.attack_k = Some(58);
        precompute(&spec).unwrap()
    }

    #[test]
    fn precompute_example() {
        let ctx = example_ctx();
        let mut degs: Vec<usize> = ctx.factors.iter().map(|p| p.deg()).collect();
        degs.sort();
        assert_eq!(degs, vec![6, 10, 15]);
        assert_eq!(ctx.g_k.to_string(), "x^6+x^4+x^2+x+1");
        assert_eq!(ctx.decimated_g_k, ctx.g_k);
        assert_eq!(ctx.q.to_string(), "x^25+x^22+x^19+x^17+x^10+x^9+x^8+x^5+1");
        assert_eq!(ctx.q.mul(&ctx.g_k), ctx.g);
        assert_eq!(spectra::lti_filter(&ctx.ref_seq, &ctx.q).min_poly().0, ctx.g_k);
        assert_eq!(ctx.period, 651);
    }

    #[test]
    fn example_tau_and_states() {
        let ctx = example_ctx();
        let z = parse_bits(Z).unwrap();
        let r = attack(&ctx, &z).unwrap();
        assert_eq!(r.tau, 19);
        assert_eq!(r.tau_i, vec![1, 5, 19]);
        let s: Vec<String> = r.states.iter().map(|s| bits_to_string(s)).collect();
        assert_eq!(s, ["10", "101", "01111"]);
        assert_eq!(recover_tau(&ctx, &z[..30]), Err(AttackError::InsufficientBits { needed: 31, got: 30 }));
    }

    #[test]
    fn reference_window_is_zero_shift() {
        let ctx = example_ctx();
        assert_eq!(recover_tau(&ctx, &ctx.ref_seq.take(40)).unwrap().tau, 0);
        let (_, states) = recover_states(&ctx.spec, 0).unwrap();
        assert_eq!(states, ctx.spec.reference_states());
    }

    #[test]
    fn agrees_with_rotation_search() {
        let ctx = example_ctx();
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let states: Vec<Vec<u8>> = ctx
                .spec
                .degrees()
                .iter()
                .map(|&m| state_bits(rng.random_range(1..1u64 << m), m))
                .collect();
            let g = ctx.spec.with_states(&states).unwrap();
            let z = g.period_keystream().unwrap();
            let tau = recover_tau(&ctx, &z.take(31)).unwrap().tau;
            assert_eq!(find_shift(&z, &ctx.ref_seq).unwrap(), Some(tau as usize));
        }
    }

    #[test]
    fn every_admissible_k_gives_the_same_tau() {
        let z = parse_bits(Z).unwrap();
        let mut tried = 0;
        for c in gf2m::cyclotomic_cosets(651).unwrap() {
            let mut spec = majority_combiner(None);
            spec.attack_k = Some(c[0]);
            match precompute(&spec) {
                Ok(ctx) => {
                    tried += 1;
                    assert_eq!(recover_tau(&ctx, &z).unwrap().tau, 19, "k = {}", c[0]);
                }
                Err(AttackError::InadmissibleK { .. }) => {}
                Err(e) => panic!("k = {}: {e}", c[0]),
            }
        }
        assert!(tried > 1);
    }

    #[test]
    fn inconsistent_keystream() {
        let ctx = example_ctx();
        let mut z = parse_bits(Z).unwrap();
        z.extend(parse_bits("1011110001").unwrap());
        z[35] ^= 1;
        assert!(matches!(attack(&ctx, &z), Err(AttackError::Inconsistent(_))));
    }

    #[test]
    fn irreducible_keystream_resists() {
        let polys: Vec<BitPoly> = ["x^3+x+1", "x^5+x^2+1"].iter().map(|s| s.parse().unwrap()).collect();
        let f = crate::boolfn::BooleanFunc::parse("a1", Some(2)).unwrap();
        let spec = GeneratorSpec::combiner(&polys, f, None).unwrap();
        assert!(matches!(precompute(&spec), Err(AttackError::SpectralImmunity(_))));
    }

    #[test]
    fn oracle_matches_example() {
        let spec = majority_combiner(None);
        let states = exhaustive_oracle(&spec, &parse_bits(Z).unwrap()).unwrap();
        assert_eq!(states, vec![vec![1, 0], vec![1, 0, 1], vec![0, 1, 1, 1, 1]]);
    }

    #[test]
    fn complexity_example() {
        let c = complexity_report(&majority_combiner(None)).unwrap();
        assert_eq!(c.exhaustive, 512);
        assert_eq!(c.correlation, 2 + 4 + 16);
        assert!((c.solve - 6f64.powf(7f64.log2())).abs() < 1e-9);
    }
}
