//! Finite-field DFT of periodic sequences, and how shifts and filters act on spectra.

use lfsr_spectra::gfpoly::BitPoly;
use lfsr_spectra::lfsr::PeriodicSeq;
use lfsr_spectra::spectra::{dft_auto, idft, lti_filter, shift_spectrum};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s: PeriodicSeq = "0010111".parse()?;
    let spec = dft_auto(&s)?;
    println!("S = {}  (weight {}, linear complexity {})", spec.dense(), spec.weight(), s.linear_complexity());
    println!("back: {}", idft(&spec)?);

    let shifted = dft_auto(&s.rotate(2))?;
    println!("shift by 2: {}", shifted.sparse());
    println!("predicted:  {}", shift_spectrum(&spec, 2).sparse());

    let product: PeriodicSeq = "011".parse::<PeriodicSeq>()?.and(&s);
    let p = dft_auto(&product)?;
    println!("product {product}: {}", p.sparse());

    let q: BitPoly = "x^2+x+1".parse()?;
    println!("filtered by {q}: {}", dft_auto(&lti_filter(&product, &q))?.sparse());
    Ok(())
}
