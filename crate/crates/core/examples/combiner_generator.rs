//! Majority combiner: keystream, CRT support prediction and linear complexity.

use lfsr_spectra::generators::majority_combiner;
use lfsr_spectra::lfsr::{bits_to_string, parse_bits};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let states: Vec<Vec<u8>> = ["10", "101", "01111"].iter().map(|s| parse_bits(s)).collect::<Result<_, _>>()?;
    let g = majority_combiner(Some(&states));
    println!("keystream: {}", bits_to_string(&g.keystream(31)?));
    println!("periods {:?}, keystream period {}", g.periods()?, g.predicted_period()?);

    for (mask, s) in g.monomial_streams()? {
        let (p, l) = s.minimal().min_poly();
        println!("monomial {mask:03b}: period {}, L = {l}, {p}", s.minimal().period());
    }

    let pred = g.predict_support()?;
    println!("predicted support ({} indices) matches measured: {}", pred.predicted.len(), pred.matches());
    let lc = g.lc_bounds_check()?;
    println!("L(z) = {} with f(2, 3, 5) = {:?}", lc.measured, lc.predicted);
    println!("minimal polynomial {}", lc.min_poly);
    Ok(())
}
