//! Binary polynomials: parsing, factoring, orders and Berlekamp-Massey.

use lfsr_spectra::gfpoly::{berlekamp_massey, factorize, is_primitive, order, BitPoly};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g: BitPoly = "x^31+x^29+x^28+x^27+x^24+x^23+x^22+x^20+x^18+x^17+x^16+x^15+x^13+x^11+x^10+x^9+x^8+x^7+x^5+x^4+x^2+x+1".parse()?;
    println!("g = {g} (hex {})", g.to_hex());
    println!("order of g: {:?}", order(&g));
    for (p, e) in factorize(&g)? {
        println!("  factor {p} ^{e}, order {:?}, primitive {}", order(&p), is_primitive(&p));
    }

    let bits = [0, 0, 1, 0, 1, 1, 1, 0, 0, 1, 0, 1, 1, 1];
    let (c, l) = berlekamp_massey(&bits)?;
    println!("shortest LFSR for 0010111 0010111: {c}, L = {l}");
    Ok(())
}
