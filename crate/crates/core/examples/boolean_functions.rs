//! Cryptographic criteria of combining functions.

use lfsr_spectra::boolfn::BooleanFunc;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for anf in ["a1*a2 + a2*a3 + a1*a3", "a1 + a2 + a3", "a1*a2 + a3", "a1*a2*a3 + a1*a4 + a2 + a3"] {
        let f = BooleanFunc::parse(anf, None)?;
        println!("{f}");
        println!(
            "  degree {}  balanced {}  nonlinearity {}  correlation immunity {}  algebraic immunity {}",
            f.algebraic_degree(),
            f.is_balanced(),
            f.nonlinearity(),
            f.correlation_immunity(),
            f.algebraic_immunity()?,
        );
        println!("  Walsh {:?}", f.walsh_spectrum());
        println!("  P(z = a_i) {:?}", f.correlation_probabilities());
    }
    Ok(())
}
