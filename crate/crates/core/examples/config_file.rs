//! Generators described in TOML.

use lfsr_spectra::generators::parse_config;
use lfsr_spectra::lfsr::bits_to_string;

const CONFIG: &str = r#"
[generator]
kind = "combiner"

[lfsr.1]
poly = "x^2+x+1"
state = "10"

[lfsr.2]
poly = "x^3+x+1"
state = "101"

[lfsr.3]
poly = "x^5+x^2+1"
state = "01111"

[function]
anf = "a1*a2 + a2*a3 + a1*a3"
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = parse_config(CONFIG)?;
    println!("{} registers, degrees {:?}", spec.registers.len(), spec.degrees());
    println!("{}", bits_to_string(&spec.keystream(31)?));
    match parse_config(&CONFIG.replace("a2*a3", "a2*b3")) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
