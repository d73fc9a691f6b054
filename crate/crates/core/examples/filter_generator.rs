//! Nonlinear filter generator and its linear complexity bounds.

use lfsr_spectra::boolfn::BooleanFunc;
use lfsr_spectra::generators::GeneratorSpec;
use lfsr_spectra::lfsr::bits_to_string;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = BooleanFunc::parse("a1*a2*a3 + a1*a2 + a3", None)?;
    for taps in [vec![0, 2, 4], vec![0, 1, 6]] {
        let g = GeneratorSpec::filter("x^7+x+1".parse()?, Some(vec![0, 0, 0, 0, 0, 0, 1]), f.clone(), taps.clone())?;
        let lc = g.lc_bounds_check()?;
        println!("taps {taps:?}: {}", bits_to_string(&g.keystream(40)?));
        println!("  L = {}  upper {}  lower {:?}  within {}", lc.measured, lc.upper, lc.lower, lc.within_bounds());
    }
    Ok(())
}
