//! Keystream generators: nonlinear combiners, nonlinear filters and A5/1.

pub mod a51;
pub mod config;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::arith::{self, binomial};
use crate::boolfn::{BoolFnError, BooleanFunc};
use crate::crt::{self, CrtError};
use crate::gfpoly::{self, BitPoly};
use crate::lfsr::{Lfsr, LfsrError, PeriodicSeq};
use crate::spectra::{self, SpectraError};

pub use config::{load_config, parse_config};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("config: {0}")]
    Config(String),
    #[error("register {0} has no initial state")]
    MissingState(usize),
    #[error("register {0} starts in the all-zero state")]
    ZeroState(usize),
    #[error("invalid generator: {0}")]
    Invalid(String),
    #[error("register periods {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error(transparent)]
    Lfsr(#[from] LfsrError),
    #[error(transparent)]
    BoolFn(#[from] BoolFnError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Crt(#[from] CrtError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorKind {
    Combiner,
    Filter,
    A51,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegisterSpec {
    pub poly: BitPoly,
    pub state: Option<Vec<u8>>,
}

/// Public structure of a generator, with initial states when known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub kind: GeneratorKind,
    pub registers: Vec<RegisterSpec>,
    pub func: Option<BooleanFunc>,
    pub taps: Vec<usize>,
    pub key: Option<[u8; 8]>,
    pub frame: Option<u32>,
    pub attack_k: Option<u64>,
}

/// `0…01` of width `m`.
pub fn reference_state(m: usize) -> Vec<u8> {
    let mut s = vec![0u8; m];
    if let Some(last) = s.last_mut() {
        *last = 1;
    }
    s
}

impl GeneratorSpec {
    pub fn combiner(polys: &[BitPoly], func: BooleanFunc, states: Option<&[Vec<u8>]>) -> Result<Self, GenError> {
        let registers = polys
            .iter()
            .enumerate()
            .map(|(i, p)| RegisterSpec { poly: p.clone(), state: states.map(|s| s[i].clone()) })
            .collect();
        let spec = GeneratorSpec {
            kind: GeneratorKind::Combiner,
            registers,
            func: Some(func),
            taps: Vec::new(),
            key: None,
            frame: None,
            attack_k: None,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn filter(poly: BitPoly, state: Option<Vec<u8>>, func: BooleanFunc, taps: Vec<usize>) -> Result<Self, GenError> {
        let spec = GeneratorSpec {
            kind: GeneratorKind::Filter,
            registers: vec![RegisterSpec { poly, state }],
            func: Some(func),
            taps,
            key: None,
            frame: None,
            attack_k: None,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn a51(key: [u8; 8], frame: u32) -> Self {
        GeneratorSpec {
            kind: GeneratorKind::A51,
            registers: Vec::new(),
            func: None,
            taps: Vec::new(),
            key: Some(key),
            frame: Some(frame),
            attack_k: None,
        }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        for (i, r) in self.registers.iter().enumerate() {
            Lfsr::reference(r.poly.clone())?;
            if let Some(s) = &r.state {
                if s.len() != r.poly.deg() {
                    return Err(LfsrError::StateWidth { expected: r.poly.deg(), got: s.len() }.into());
                }
                if s.iter().all(|&b| b == 0) {
                    return Err(GenError::ZeroState(i + 1));
                }
            }
        }
        match self.kind {
            GeneratorKind::Combiner => {
                let f = self.func.as_ref().ok_or_else(|| GenError::Invalid("combiner needs [function]".into()))?;
                if self.registers.is_empty() {
                    return Err(GenError::Invalid("combiner needs at least one register".into()));
                }
                if f.num_vars() > self.registers.len() {
                    return Err(GenError::Invalid(format!(
                        "function uses {} inputs but there are {} registers",
                        f.num_vars(),
                        self.registers.len()
                    )));
                }
                let periods = self.periods()?;
                for (i, &a) in periods.iter().enumerate() {
                    for &b in &periods[i + 1..] {
                        if arith::gcd(a, b) != 1 {
                            return Err(GenError::NotCoprime(a, b));
                        }
                    }
                }
            }
            GeneratorKind::Filter => {
                let f = self.func.as_ref().ok_or_else(|| GenError::Invalid("filter needs [function]".into()))?;
                if self.registers.len() != 1 {
                    return Err(GenError::Invalid("filter takes exactly one register".into()));
                }
                let m = self.registers[0].poly.deg();
                if self.taps.len() != f.num_vars() {
                    return Err(GenError::Invalid(format!("{} taps for a {}-input function", self.taps.len(), f.num_vars())));
                }
                let distinct: BTreeSet<_> = self.taps.iter().collect();
                if distinct.len() != self.taps.len() || self.taps.iter().any(|&t| t >= m) {
                    return Err(GenError::Invalid(format!("taps {:?} must be distinct and below {m}", self.taps)));
                }
            }
            GeneratorKind::A51 => {
                if self.key.is_none() || self.frame.is_none() {
                    return Err(GenError::Invalid("a51 needs key and frame".into()));
                }
            }
        }
        Ok(())
    }

    fn func(&self) -> &BooleanFunc {
        self.func.as_ref().expect("validated generator has a function")
    }

    /// Combiner input width padded to the register count.
    fn inputs(&self) -> usize {
        self.registers.len()
    }

    pub fn with_states(&self, states: &[Vec<u8>]) -> Result<Self, GenError> {
        if states.len() != self.registers.len() {
            return Err(GenError::Invalid(format!("{} states for {} registers", states.len(), self.registers.len())));
        }
        let mut out = self.clone();
        for (r, s) in out.registers.iter_mut().zip(states) {
            r.state = Some(s.clone());
        }
        out.validate()?;
        Ok(out)
    }

    pub fn reference_states(&self) -> Vec<Vec<u8>> {
        self.registers.iter().map(|r| reference_state(r.poly.deg())).collect()
    }

    pub fn with_reference_states(&self) -> Self {
        self.with_states(&self.reference_states()).expect("reference states are valid")
    }

    pub fn states(&self) -> Option<Vec<Vec<u8>>> {
        self.registers.iter().map(|r| r.state.clone()).collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.registers.iter().map(|r| r.poly.deg()).collect()
    }

    /// Register periods, measured from the reference state.
    pub fn periods(&self) -> Result<Vec<u64>, GenError> {
        self.registers.iter().map(|r| Ok(Lfsr::reference(r.poly.clone())?.period()?)).collect()
    }

    pub fn predicted_period(&self) -> Result<u64, GenError> {
        Ok(crt::lcm_all(&self.periods()?))
    }

    pub fn build_registers(&self) -> Result<Vec<Lfsr>, GenError> {
        self.registers
            .iter()
            .enumerate()
            .map(|(i, r)| {
                let s = r.state.as_ref().ok_or(GenError::MissingState(i + 1))?;
                Ok(Lfsr::new(r.poly.clone(), s)?)
            })
            .collect()
    }

    /// The first `count` keystream bits.
    pub fn keystream(&self, count: usize) -> Result<Vec<u8>, GenError> {
        match self.kind {
            GeneratorKind::Combiner => {
                let mut regs = self.build_registers()?;
                let f = self.func();
                let mut inputs = vec![0u8; self.inputs()];
                let width = f.num_vars();
                Ok((0..count)
                    .map(|_| {
                        for (x, r) in inputs.iter_mut().zip(regs.iter_mut()) {
                            *x = r.step();
                        }
                        f.evaluate(&inputs[..width]).expect("width checked")
                    })
                    .collect())
            }
            GeneratorKind::Filter => {
                let mut reg = self.build_registers()?.remove(0);
                let f = self.func();
                Ok((0..count)
                    .map(|_| {
                        let tapped: Vec<u8> = self.taps.iter().map(|&t| reg.state()[t]).collect();
                        reg.step();
                        f.evaluate(&tapped).expect("width checked")
                    })
                    .collect())
            }
            GeneratorKind::A51 => {
                let key = self.key.ok_or_else(|| GenError::Invalid("a51 needs a key".into()))?;
                let frame = self.frame.ok_or_else(|| GenError::Invalid("a51 needs a frame".into()))?;
                let (mut a, _) = a51::A51::setup(&key, frame);
                Ok(a.keystream(count))
            }
        }
    }

    /// One full period of the keystream (`lcm` of register periods).
    pub fn period_keystream(&self) -> Result<PeriodicSeq, GenError> {
        if self.kind == GeneratorKind::A51 {
            return Err(GenError::Invalid("A5/1 keystreams are not analysed as periodic sequences".into()));
        }
        let n = self.predicted_period()? as usize;
        Ok(PeriodicSeq::new(self.keystream(n)?)?)
    }

    /// One period of each register's output.
    pub fn register_sequences(&self) -> Result<Vec<PeriodicSeq>, GenError> {
        let periods = self.periods()?;
        self.build_registers()?
            .into_iter()
            .zip(periods)
            .map(|(mut r, p)| Ok(PeriodicSeq::new(r.run(p as usize))?))
            .collect()
    }

    /// For each ANF monomial, its mask and the termwise product of the registers it names.
    pub fn monomial_streams(&self) -> Result<Vec<(u32, PeriodicSeq)>, GenError> {
        if self.kind != GeneratorKind::Combiner {
            return Err(GenError::Invalid("monomial decomposition applies to combiners".into()));
        }
        let seqs = self.register_sequences()?;
        Ok(self
            .func()
            .monomials()
            .map(|m| {
                let mut acc = PeriodicSeq::new(vec![1]).expect("nonempty");
                for (i, s) in seqs.iter().enumerate() {
                    if m >> i & 1 == 1 {
                        acc = acc.and(s);
                    }
                }
                (m, acc)
            })
            .collect())
    }

    /// Keystream support predicted from register spectra by CRT, next to the measured one.
    pub fn predict_support(&self) -> Result<SupportPrediction, GenError> {
        let periods = self.periods()?;
        let big_n = crt::lcm_all(&periods);
        let ctx = spectra::transform_field(big_n as usize)?;
        let omega = spectra::transform_root(&ctx, big_n as usize)?;
        let seqs = self.register_sequences()?;
        let mut supports = Vec::with_capacity(seqs.len());
        for (s, &n) in seqs.iter().zip(&periods) {
            let root = omega.pow_u(crt::component_exponent(n, big_n)?);
            supports.push(spectra::dft_with_root(s, &root)?.support());
        }
        let mut per_monomial = Vec::new();
        for m in self.func().monomials() {
            let vars: Vec<usize> = (0..self.inputs()).filter(|i| m >> i & 1 == 1).collect();
            let sup = if vars.is_empty() {
                [0usize].into_iter().collect()
            } else {
                let sups: Vec<BTreeSet<usize>> = vars.iter().map(|&i| supports[i].clone()).collect();
                let mods: Vec<u64> = vars.iter().map(|&i| periods[i]).collect();
                let p = mods.iter().product::<u64>();
                crt::lift_support(&crt::product_support(&sups, &mods)?, p, big_n)?
            };
            per_monomial.push(sup);
        }
        let predicted = crt::xor_support(&per_monomial);
        let z = PeriodicSeq::new(self.keystream(big_n as usize)?)?;
        let measured = spectra::dft_with_root(&z, &omega)?.support();
        Ok(SupportPrediction { period: big_n, register_supports: supports, predicted, measured })
    }

    /// Measured linear complexity against the bounds for this generator kind.
    pub fn lc_bounds_check(&self) -> Result<LcReport, GenError> {
        match self.kind {
            GeneratorKind::Combiner => {
                let seqs = self.register_sequences()?;
                let component: Vec<usize> = seqs.iter().map(|s| s.linear_complexity()).collect();
                let f = self.func();
                let values: Vec<u64> = component.iter().take(f.num_vars()).map(|&c| c as u64).collect();
                let predicted = f.integer_eval(&values)?;
                let z = self.period_keystream()?;
                let (min_poly, measured) = z.min_poly();
                Ok(LcReport { component, predicted: Some(predicted), upper: predicted, lower: None, measured, min_poly })
            }
            GeneratorKind::Filter => {
                let m = self.registers[0].poly.deg() as u64;
                let f = self.func();
                let d = u64::from(f.algebraic_degree());
                let constant = u64::from(f.monomials().any(|x| x == 0));
                let upper = (1..=d).map(|i| binomial(m, i)).sum::<u64>() + constant;
                let lower = if equally_spaced(&self.taps) && d > 0 { Some(binomial(m, d)) } else { None };
                let z = self.period_keystream()?;
                let (min_poly, measured) = z.min_poly();
                Ok(LcReport { component: vec![m as usize], predicted: None, upper, lower, measured, min_poly })
            }
            GeneratorKind::A51 => Err(GenError::Invalid("no linear complexity bounds for A5/1".into())),
        }
    }
}

fn equally_spaced(taps: &[usize]) -> bool {
    let mut t = taps.to_vec();
    t.sort_unstable();
    t.len() >= 2 && t.windows(2).all(|w| w[1] - w[0] == t[1] - t[0])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportPrediction {
    pub period: u64,
    pub register_supports: Vec<BTreeSet<usize>>,
    pub predicted: BTreeSet<usize>,
    pub measured: BTreeSet<usize>,
}

impl SupportPrediction {
    pub fn matches(&self) -> bool {
        self.predicted == self.measured
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcReport {
    pub component: Vec<usize>,
    /// `f` evaluated over the integers at the component complexities (combiners only).
    pub predicted: Option<u64>,
    pub upper: u64,
    /// Lower bound for equally spaced filter taps.
    pub lower: Option<u64>,
    pub measured: usize,
    pub min_poly: BitPoly,
}

impl LcReport {
    pub fn within_bounds(&self) -> bool {
        let m = self.measured as u64;
        m <= self.upper && self.lower.is_none_or(|l| m >= l)
    }
}

/// The majority combiner on `x^2+x+1`, `x^3+x+1`, `x^5+x^2+1`.
pub fn majority_combiner(states: Option<&[Vec<u8>]>) -> GeneratorSpec {
    let polys: Vec<BitPoly> =
        ["x^2+x+1", "x^3+x+1", "x^5+x^2+1"].iter().map(|s| s.parse().expect("literal")).collect();
    GeneratorSpec::combiner(&polys, BooleanFunc::majority3(), states).expect("valid combiner")
}

/// Minimal polynomial and period of a periodic sequence.
pub fn min_poly_and_period(s: &PeriodicSeq) -> (BitPoly, u64) {
    let m = s.minimal();
    let (g, _) = m.min_poly();
    let period = gfpoly::order(&g).unwrap_or(m.period() as u64);
    (g, period)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfsr::{bits_to_string, parse_bits};

    fn states(s: &[&str]) -> Vec<Vec<u8>> {
        s.iter().map(|x| parse_bits(x).unwrap()).collect()
    }

    #[test]
    fn majority_keystream() {
        let g = majority_combiner(Some(&states(&["10", "101", "01111"])));
        assert_eq!(bits_to_string(&g.keystream(31).unwrap()), "1011110001111010111001011010111");
        let r = majority_combiner(None).with_reference_states();
        assert_eq!(r.period_keystream().unwrap().minimal().period(), 651);
    }

    #[test]
    fn projection_is_the_register() {
        let polys: Vec<BitPoly> = ["x^3+x+1", "x^2+x+1"].iter().map(|s| s.parse().unwrap()).collect();
        let f = BooleanFunc::parse("a1", Some(2)).unwrap();
        let g = GeneratorSpec::combiner(&polys, f, Some(&states(&["001", "01"]))).unwrap();
        assert_eq!(bits_to_string(&g.keystream(7).unwrap()), "0010111");
    }

    #[test]
    fn validation() {
        let polys: Vec<BitPoly> = ["x^3+x+1", "x^3+x^2+1"].iter().map(|s| s.parse().unwrap()).collect();
        let f = BooleanFunc::parse("a1*a2", None).unwrap();
        assert_eq!(GeneratorSpec::combiner(&polys, f.clone(), None), Err(GenError::NotCoprime(7, 7)));
        let p: BitPoly = "x^5+x^2+1".parse().unwrap();
        assert!(GeneratorSpec::filter(p.clone(), None, f.clone(), vec![0, 5]).is_err());
        assert!(GeneratorSpec::filter(p.clone(), None, f.clone(), vec![1, 1]).is_err());
        assert!(GeneratorSpec::filter(p, Some(vec![0; 5]), f, vec![0, 1]).is_err());
        assert_eq!(majority_combiner(None).keystream(3), Err(GenError::MissingState(1)));
    }

    #[test]
    fn single_tap_filter() {
        let p: BitPoly = "x^3+x+1".parse().unwrap();
        let f = BooleanFunc::parse("a1", None).unwrap();
        let g = GeneratorSpec::filter(p, Some(vec![0, 0, 1]), f, vec![0]).unwrap();
        assert_eq!(bits_to_string(&g.keystream(7).unwrap()), "0010111");
    }

    #[test]
    fn support_prediction_small() {
        let polys: Vec<BitPoly> = ["x^2+x+1", "x^3+x+1"].iter().map(|s| s.parse().unwrap()).collect();
        let f = BooleanFunc::parse("a1*a2", None).unwrap();
        let g = GeneratorSpec::combiner(&polys, f, None).unwrap().with_reference_states();
        let pred = g.predict_support().unwrap();
        assert_eq!(pred.predicted, [5, 10, 13, 17, 19, 20].into_iter().collect());
        assert!(pred.matches());
    }
}
