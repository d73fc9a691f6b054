fn main() {
    std::process::exit(lfsr_spectra::cli::run(std::env::args_os()));
}
