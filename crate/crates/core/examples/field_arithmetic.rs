//! Arithmetic in GF(2^m): products, inverses, logarithms, traces and minimal polynomials.

use lfsr_spectra::gf2m::{cyclotomic_cosets, FieldCtx};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = FieldCtx::default_for(6)?;
    println!("GF(2^{}) modulo {}", f.m(), f.modulus());
    println!("x has order {} (field order {})", f.x().multiplicative_order()?, f.order());

    let a = f.elem(0b100101);
    let b = f.alpha_pow(17);
    println!("a = {a}, b = {b}");
    println!("a*b = {}, a/b = {}, a+b = {}", &a * &b, &a / &b, &a + &b);
    println!("log a = {}, Tr(a) = {}", a.dlog()?, a.trace());
    println!("conjugates of a: {:?}", a.conjugates().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    println!("minimal polynomial of x^58: {}", f.x().pow_u(58).min_poly()?);

    for coset in cyclotomic_cosets(21)? {
        println!("coset of {:>2}: {coset:?}", coset[0]);
    }
    Ok(())
}
