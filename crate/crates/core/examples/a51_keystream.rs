//! A5/1 frame keystream and register clocking statistics.

use lfsr_spectra::generators::a51::{a51_run, A51};

fn main() {
    let key = [0x12, 0x23, 0x45, 0x67, 0x89, 0xAB, 0xCD, 0xEF];
    let out = a51_run(&key, 0x134);
    let hex = |v: Vec<u8>| v.iter().map(|b| format!("{b:02X}")).collect::<String>();
    println!("phases {:?}", out.phases);
    println!("A->B {}", hex(out.a_to_b()));
    println!("B->A {}", hex(out.b_to_a()));

    let (mut a, _) = A51::setup(&key, 0x134);
    let start = a.advances();
    let cycles = 100_000;
    for _ in 0..cycles {
        a.clock_majority();
    }
    for (i, (end, begin)) in a.advances().iter().zip(start).enumerate() {
        println!("R{} moved in {:.4} of cycles", i + 1, (end - begin) as f64 / cycles as f64);
    }
}
