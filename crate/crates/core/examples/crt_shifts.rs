//! Chinese remaindering of shifts and spectral supports of product sequences.

use std::collections::BTreeSet;

use lfsr_spectra::crt::{crt_general, crt_solve, crt_split, product_shift, product_support, Congruences};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (x, n) = crt_solve(&Congruences::new(&[(1, 3), (3, 7), (15, 31)]))?;
    println!("x = 1 mod 3, 3 mod 7, 15 mod 31  ->  x = {x} mod {n}");
    println!("19 splits into {:?} modulo (3, 7, 31)", crt_split(19, &[3, 7, 31])?);
    println!("shifting by 1 and 3 shifts the product by {}", product_shift(&[1, 3], &[3, 7])?);
    println!("moduli 21 and 93: {:?}", crt_general(&Congruences::new(&[(19, 21), (19, 93)]))?);

    let a: BTreeSet<usize> = [1, 2].into();
    let b: BTreeSet<usize> = [3, 5, 6].into();
    println!("support of the product: {:?}", product_support(&[a, b], &[3, 7])?);
    Ok(())
}
