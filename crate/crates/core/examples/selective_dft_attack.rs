//! Recovering the initial states of a majority combiner from 31 keystream bits.

use lfsr_spectra::attack::{attack, complexity_report, exhaustive_oracle, precompute};
use lfsr_spectra::generators::majority_combiner;
use lfsr_spectra::lfsr::{bits_to_string, parse_bits};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut spec = majority_combiner(None);
    spec.attack_k = Some(58);
    let ctx = precompute(&spec)?;
    println!("g   = {}", ctx.g);
    println!("g_k = {} (k = {}), q = {}", ctx.g_k, ctx.k, ctx.q);
    for c in &ctx.components {
        println!("component {} of order {} read with k = {}", c.g, c.n, c.k);
    }

    let z = parse_bits("1011110001111010111001011010111")?;
    let r = attack(&ctx, &z)?;
    println!("tau = {}, tau_i = {:?}", r.tau, r.tau_i);
    println!("states {:?}", r.states.iter().map(|s| bits_to_string(s)).collect::<Vec<_>>());
    println!("exhaustive search agrees: {}", exhaustive_oracle(&spec, &z)? == r.states);

    let c = complexity_report(&spec)?;
    println!("exhaustive {}  correlation {}  preprocessing {:.1}  attack {:.1}", c.exhaustive, c.correlation, c.preprocessing(), c.attack());
    Ok(())
}
