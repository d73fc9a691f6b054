//! LFSR keystream generators, their spectra over GF(2^m), and a
//! selective-DFT attack that recovers combiner initial states from a short
//! keystream window.
//!
//! ```
//! use lfsr_spectra::lfsr::PeriodicSeq;
//! use lfsr_spectra::spectra::dft_auto;
//!
//! let s: PeriodicSeq = "0010111".parse().unwrap();
//! assert_eq!(dft_auto(&s).unwrap().sparse(), "(3: a^4) (5: a^2) (6: a^1)");
//! ```

pub mod arith;
pub mod attack;
pub mod bitmatrix;
pub mod boolfn;
pub mod cli;
pub mod crt;
pub mod generators;
pub mod gf2m;
pub mod gfpoly;
pub mod lfsr;
pub mod spectra;

pub use attack::{AttackContext, AttackError, AttackResult};
pub use boolfn::BooleanFunc;
pub use generators::{GeneratorKind, GeneratorSpec};
pub use gf2m::{FieldCtx, FieldElement};
pub use gfpoly::BitPoly;
pub use lfsr::{Lfsr, PeriodicSeq};
pub use spectra::Spectrum;
