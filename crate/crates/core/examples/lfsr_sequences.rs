//! Fibonacci LFSRs, periods, trace representation, shifts and decimation.

use lfsr_spectra::gf2m::FieldCtx;
use lfsr_spectra::lfsr::{bits_to_string, decimate, find_shift, trace_sequence, Lfsr, PeriodicSeq};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let poly = "x^5+x^2+1".parse()?;
    let mut reg = Lfsr::new(poly, &[0, 1, 1, 1, 1])?;
    println!("{reg:?} has period {}", reg.period()?);

    let ctx = FieldCtx::new(reg.feedback().clone())?;
    let beta = reg.trace_coefficient(&ctx)?;
    println!("state 01111 is Tr({beta} x^t)");
    println!("trace form: {}", bits_to_string(&trace_sequence(&ctx, &beta, 31)));

    let s = PeriodicSeq::new(reg.run(31))?;
    println!("register:   {s}");
    let reference = PeriodicSeq::new(Lfsr::reference("x^5+x^2+1".parse()?)?.run(31))?;
    println!("reference:  {reference}");
    println!("reference_t = s_(t + {:?})", find_shift(&s, &reference)?);
    println!("decimated by 3: {}", decimate(&s, 3)?);
    Ok(())
}
