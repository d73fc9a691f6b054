//! Command-line front end.
//!
//! Reports are ordered `key value` pairs printed either aligned for reading
//! or as `key=value` lines that [`Report::parse_kv`] reads back.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::attack::{self, AttackError, ComplexityReport};
use crate::crt::{self, Congruences};
use crate::generators::{self, GenError, GeneratorKind, GeneratorSpec};
use crate::gfpoly::{self, BitPoly};
use crate::lfsr::{bits_to_string, parse_bits, PeriodicSeq};
use crate::spectra;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INAPPLICABLE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "lfsr-spectra", version, about = "LFSR keystream generators, finite-field spectra and the selective-DFT attack")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Repeat for more log output.
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    pub verbose: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Kv,
}

#[derive(Debug, Args)]
pub struct BitsInput {
    /// Bit string such as 0010111; read from --input or stdin when absent.
    #[arg(long)]
    pub bits: Option<String>,
    #[arg(long, short)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Keystream bits from a generator config.
    Gen {
        #[arg(long, short)]
        config: PathBuf,
        #[arg(long, short = 'n')]
        count: Option<usize>,
        /// Comma-separated initial states overriding the config.
        #[arg(long)]
        states: Option<String>,
        /// Start every register from 0…01.
        #[arg(long, conflicts_with = "states")]
        reference: bool,
    },
    /// Spectrum of one period of a sequence.
    Dft {
        #[command(flatten)]
        input: BitsInput,
        /// List every entry instead of the support only.
        #[arg(long)]
        dense: bool,
        /// Compare against the support predicted from this generator's registers.
        #[arg(long, short)]
        config: Option<PathBuf>,
    },
    /// Shortest LFSR for a bit string.
    Bm {
        #[command(flatten)]
        input: BitsInput,
    },
    /// Irreducible factors, their multiplicities and orders.
    Factor { poly: String },
    #[command(subcommand)]
    Crt(CrtCommand),
    /// Boolean function criteria, linear complexity bounds and cost estimates.
    Analyze {
        #[arg(long, short)]
        config: PathBuf,
    },
    /// Recover initial states from an observed keystream.
    Attack {
        #[arg(long, short)]
        config: PathBuf,
        #[command(flatten)]
        input: BitsInput,
        /// Cross-check with exhaustive search.
        #[arg(long)]
        oracle: bool,
    },
    /// Operation-count estimates for a combiner.
    Complexity {
        #[arg(long, short)]
        config: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum CrtCommand {
    /// Solve congruences given as residue:modulus.
    Solve {
        #[arg(required = true)]
        pairs: Vec<String>,
    },
    /// Residues of a shift modulo each period.
    Split {
        #[arg(allow_negative_numbers = true)]
        tau: i64,
        #[arg(required = true)]
        moduli: Vec<u64>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Generator(#[from] GenError),
    #[error(transparent)]
    Attack(#[from] AttackError),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Generator(_) | CliError::Other(_) => EXIT_USAGE,
            CliError::Attack(e) => match e {
                AttackError::Inapplicable(_)
                | AttackError::SpectralImmunity(_)
                | AttackError::InadmissibleK { .. }
                | AttackError::PathMismatch { .. }
                | AttackError::TooLarge(_) => EXIT_INAPPLICABLE,
                AttackError::Inconsistent(_) | AttackError::NoMatch | AttackError::Ambiguous(_) => EXIT_INCONSISTENT,
                AttackError::Generator(_)
                | AttackError::Field(_)
                | AttackError::Poly(_)
                | AttackError::InsufficientBits { .. } => EXIT_USAGE,
            },
        }
    }
}

fn other(e: impl std::fmt::Display) -> CliError {
    CliError::Other(e.to_string())
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub entries: Vec<(String, String)>,
}

impl Report {
    pub fn push(&mut self, key: impl Into<String>, value: impl ToString) {
        self.entries.push((key.into(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn render(&self, format: Format) -> String {
        let width = self.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in &self.entries {
            match format {
                Format::Text => out.push_str(&format!("{k:<width$}  {v}\n")),
                Format::Kv => out.push_str(&format!("{k}={v}\n")),
            }
        }
        out
    }

    pub fn parse_kv(text: &str) -> Result<Report, CliError> {
        let mut r = Report::default();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (k, v) = line.split_once('=').ok_or_else(|| CliError::Usage(format!("not a key=value line: {line:?}")))?;
            r.push(k, v);
        }
        Ok(r)
    }
}

fn read_bits(input: &BitsInput, stdin: &mut dyn Read) -> Result<Vec<u8>, CliError> {
    let text = match (&input.bits, &input.input) {
        (Some(b), _) => b.clone(),
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?,
        (None, None) => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(other)?;
            s
        }
    };
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    parse_bits(&cleaned).map_err(|e| CliError::Usage(e.to_string()))
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn set_string<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    format!("{{{}}}", join(items, ","))
}

pub fn cmd_gen(spec: &GeneratorSpec, count: Option<usize>, states: Option<&str>, reference: bool) -> Result<String, CliError> {
    if count == Some(0) {
        return Ok(String::new());
    }
    let spec = if reference {
        spec.with_reference_states()
    } else if let Some(s) = states {
        let parsed = s.split(',').map(|x| parse_bits(x.trim())).collect::<Result<Vec<_>, _>>().map_err(|e| CliError::Usage(e.to_string()))?;
        spec.with_states(&parsed)?
    } else {
        spec.clone()
    };
    let count = match (count, spec.kind) {
        (Some(n), _) => n,
        (None, GeneratorKind::A51) => generators::a51::OUTPUT_BITS,
        (None, _) => spec.predicted_period()? as usize,
    };
    Ok(bits_to_string(&spec.keystream(count)?))
}

pub fn cmd_dft(bits: Vec<u8>, dense: bool, spec: Option<&GeneratorSpec>) -> Result<Report, CliError> {
    let mut r = Report::default();
    let mut s = PeriodicSeq::new(bits).map_err(|e| CliError::Usage(e.to_string()))?;
    if s.period() % 2 == 0 {
        s = s.minimal();
    }
    let spectrum = spectra::dft_auto(&s).map_err(other)?;
    r.push("n", s.period());
    r.push("field", format!("GF(2^{}) mod {}", spectrum.ctx().m(), spectrum.ctx().modulus()));
    r.push("spectrum", if dense { spectrum.dense() } else { spectrum.sparse() });
    r.push("support", set_string(spectrum.support()));
    r.push("weight", spectrum.weight());
    r.push("linear_complexity", s.linear_complexity());
    if let Some(spec) = spec {
        let pred = spec.with_reference_states().predict_support()?;
        let measured = spec.with_reference_states().period_keystream()?;
        r.push("generator_period", pred.period);
        r.push("predicted_support", set_string(&pred.predicted));
        r.push("measured_support", set_string(&pred.measured));
        r.push("prediction_matches", pred.matches());
        r.push("input_is_reference", measured == s);
    }
    Ok(r)
}

pub fn cmd_bm(bits: &[u8]) -> Result<Report, CliError> {
    let (g, l) = gfpoly::berlekamp_massey(bits).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut r = Report::default();
    r.push("bits", bits.len());
    r.push("linear_complexity", l);
    r.push("min_poly", &g);
    r.push("min_poly_hex", g.to_hex());
    r.push("reliable", bits.len() >= 2 * l);
    Ok(r)
}

pub fn cmd_factor(poly: &str) -> Result<Report, CliError> {
    let f: BitPoly = poly.parse().map_err(|e: gfpoly::PolyError| CliError::Usage(e.to_string()))?;
    let factors = gfpoly::factorize(&f).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut r = Report::default();
    r.push("poly", &f);
    r.push("irreducible", gfpoly::is_irreducible(&f));
    r.push("primitive", gfpoly::is_primitive(&f));
    if let Some(o) = gfpoly::order(&f) {
        r.push("order", o);
    }
    r.push("factors", factors.len());
    for (i, (p, e)) in factors.iter().enumerate() {
        let order = gfpoly::root_order(p).map_or_else(|| "-".into(), |o| o.to_string());
        r.push(format!("factor.{}", i + 1), format!("{p} ^{e} degree {} order {order}", p.deg()));
    }
    Ok(r)
}

pub fn cmd_crt(cmd: &CrtCommand) -> Result<Report, CliError> {
    let mut r = Report::default();
    match cmd {
        CrtCommand::Solve { pairs } => {
            let parsed = pairs
                .iter()
                .map(|p| {
                    let (a, n) = p.split_once(':').ok_or_else(|| CliError::Usage(format!("expected residue:modulus, got {p:?}")))?;
                    let a: i64 = a.trim().parse().map_err(|_| CliError::Usage(format!("bad residue in {p:?}")))?;
                    let n: u64 = n.trim().parse().map_err(|_| CliError::Usage(format!("bad modulus in {p:?}")))?;
                    Ok((a, n))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let (x, n) = crt::crt_general(&Congruences(parsed))
                .map_err(|e| CliError::Usage(e.to_string()))?
                .ok_or_else(|| CliError::Other("congruences are inconsistent".into()))?;
            r.push("x", x);
            r.push("modulus", n);
        }
        CrtCommand::Split { tau, moduli } => {
            let residues = crt::crt_split(*tau, moduli).map_err(|e| CliError::Usage(e.to_string()))?;
            r.push("tau", tau);
            r.push("residues", join(residues, " "));
        }
    }
    Ok(r)
}

fn push_complexity(r: &mut Report, c: &ComplexityReport) {
    r.push("cost.exhaustive", c.exhaustive);
    r.push("cost.correlation", c.correlation);
    r.push("cost.minimal_polynomial", format!("{:.1}", c.minimal_polynomial));
    r.push("cost.component_polynomial", format!("{:.1}", c.component_polynomial));
    r.push("cost.evaluation", format!("{:.1}", c.evaluation));
    r.push("cost.preprocessing", format!("{:.1}", c.preprocessing()));
    r.push("cost.filtering", format!("{:.1}", c.filtering));
    r.push("cost.solve", format!("{:.1}", c.solve));
    r.push("cost.state_recovery", format!("{:.1}", c.state_recovery));
    r.push("cost.attack", format!("{:.1}", c.attack()));
    r.push("cost.total", format!("{:.1}", c.total()));
}

pub fn cmd_complexity(spec: &GeneratorSpec) -> Result<Report, CliError> {
    let mut r = Report::default();
    push_complexity(&mut r, &attack::complexity_report(spec)?);
    Ok(r)
}

pub fn cmd_analyze(spec: &GeneratorSpec) -> Result<Report, CliError> {
    let mut r = Report::default();
    if spec.kind == GeneratorKind::A51 {
        let out = generators::a51::a51_run(&spec.key.unwrap_or_default(), spec.frame.unwrap_or_default());
        r.push("kind", "a51");
        r.push("cycles.loading", out.phases.loading);
        r.push("cycles.mixing", out.phases.mixing);
        r.push("cycles.output", out.phases.output);
        r.push("a_to_b", join(out.a_to_b().iter().map(|b| format!("{b:02X}")), ""));
        r.push("b_to_a", join(out.b_to_a().iter().map(|b| format!("{b:02X}")), ""));
        return Ok(r);
    }
    let f = spec.func.as_ref().ok_or_else(|| CliError::Usage("config has no [function]".into()))?;
    r.push("kind", if spec.kind == GeneratorKind::Combiner { "combiner" } else { "filter" });
    r.push("function", f);
    r.push("function.degree", f.algebraic_degree());
    r.push("function.weight", f.weight());
    r.push("function.balanced", f.is_balanced());
    r.push("function.nonlinearity", f.nonlinearity());
    r.push("function.correlation_immunity", f.correlation_immunity());
    match f.algebraic_immunity() {
        Ok(ai) => r.push("function.algebraic_immunity", ai),
        Err(e) => r.push("function.algebraic_immunity", format!("n/a ({e})")),
    }
    r.push("function.walsh", join(f.walsh_spectrum(), " "));
    r.push("function.correlation", join(f.correlation_probabilities().iter().map(|p| format!("{p:.4}")), " "));
    r.push("periods", join(spec.periods()?, " "));
    r.push("period", spec.predicted_period()?);
    let lc = spec.lc_bounds_check()?;
    r.push("lc.components", join(&lc.component, " "));
    if let Some(p) = lc.predicted {
        r.push("lc.predicted", p);
    }
    r.push("lc.upper", lc.upper);
    if let Some(l) = lc.lower {
        r.push("lc.lower", l);
    }
    r.push("lc.measured", lc.measured);
    r.push("lc.within_bounds", lc.within_bounds());
    r.push("min_poly", &lc.min_poly);
    if spec.kind == GeneratorKind::Combiner {
        push_complexity(&mut r, &attack::complexity_report(spec)?);
    }
    Ok(r)
}

pub fn cmd_attack(spec: &GeneratorSpec, z: &[u8], oracle: bool) -> Result<Report, CliError> {
    let ctx = attack::precompute(spec)?;
    let result = attack::attack(&ctx, z)?;
    let mut r = Report::default();
    r.push("k", ctx.k);
    r.push("g", &ctx.g);
    r.push("g_k", &ctx.g_k);
    r.push("q", &ctx.q);
    r.push("d", ctx.d());
    r.push("components", join(ctx.components.iter().map(|c| format!("{}@{}", c.n, c.k)), " "));
    r.push("tau", result.tau);
    r.push("tau_i", join(&result.tau_i, " "));
    for (i, s) in result.states.iter().enumerate() {
        r.push(format!("state.{}", i + 1), bits_to_string(s));
    }
    r.push("bits_used", result.bits_used);
    r.push("bits_observed", z.len());
    if oracle {
        let found = attack::exhaustive_oracle(spec, z)?;
        r.push("oracle_agrees", found == result.states);
    }
    push_complexity(&mut r, &attack::complexity_report(spec)?);
    Ok(r)
}

fn load(path: &std::path::Path) -> Result<GeneratorSpec, CliError> {
    Ok(generators::load_config(path)?)
}

/// Runs a parsed command, returning what should go to stdout.
pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String, CliError> {
    let report = match &cli.command {
        Command::Gen { config, count, states, reference } => {
            let mut out = cmd_gen(&load(config)?, *count, states.as_deref(), *reference)?;
            out.push('\n');
            return Ok(out);
        }
        Command::Dft { input, dense, config } => {
            let spec = config.as_deref().map(load).transpose()?;
            cmd_dft(read_bits(input, stdin)?, *dense, spec.as_ref())?
        }
        Command::Bm { input } => cmd_bm(&read_bits(input, stdin)?)?,
        Command::Factor { poly } => cmd_factor(poly)?,
        Command::Crt(c) => cmd_crt(c)?,
        Command::Analyze { config } => cmd_analyze(&load(config)?)?,
        Command::Attack { config, input, oracle } => cmd_attack(&load(config)?, &read_bits(input, stdin)?, *oracle)?,
        Command::Complexity { config } => cmd_complexity(&load(config)?)?,
    };
    Ok(report.render(cli.format))
}

/// Parses `args`, runs the command and returns the exit code with stdout and stderr text.
pub fn run_captured<I, T>(args: I, stdin: &mut dyn Read) -> (i32, String, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, if code == EXIT_OK { e.to_string() } else { String::new() }, if code == EXIT_OK { String::new() } else { e.to_string() });
        }
    };
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        2 => "debug",
        _ => "trace",
    };
    let _ = env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).try_init();
    match execute(&cli, stdin) {
        Ok(out) => (EXIT_OK, out, String::new()),
        Err(e) => (e.exit_code(), String::new(), format!("error: {e}\n")),
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (code, out, err) = run_captured(args, &mut std::io::stdin().lock());
    print!("{out}");
    eprint!("{err}");
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str], input: &str) -> (i32, String, String) {
        let mut argv = vec!["lfsr-spectra"];
        argv.extend_from_slice(args);
        run_captured(argv, &mut input.as_bytes())
    }

    #[test]
    fn dft_and_bm() {
        let (code, out, _) = run_str(&["--format", "kv", "dft", "--bits", "0010111"], "");
        assert_eq!(code, 0);
        let r = Report::parse_kv(&out).unwrap();
        assert_eq!(r.get("spectrum"), Some("(3: a^4) (5: a^2) (6: a^1)"));
        assert_eq!(r.get("weight"), Some("3"));
        let (_, out, _) = run_str(&["--format", "kv", "bm"], "0010111 0010111\n");
        assert_eq!(Report::parse_kv(&out).unwrap().get("min_poly"), Some("x^3+x+1"));
    }

    #[test]
    fn crt_commands() {
        let (code, out, _) = run_str(&["--format", "kv", "crt", "solve", "1:3", "3:7", "15:31"], "");
        assert_eq!(code, 0);
        assert_eq!(Report::parse_kv(&out).unwrap().get("x"), Some("325"));
        let (_, out, _) = run_str(&["--format", "kv", "crt", "split", "19", "3", "7", "31"], "");
        assert_eq!(Report::parse_kv(&out).unwrap().get("residues"), Some("1 5 19"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["bogus"], "").0, EXIT_USAGE);
        assert_eq!(run_str(&["bm", "--bits", "01x"], "").0, EXIT_USAGE);
        assert_eq!(run_str(&["crt", "solve", "1:2", "0:2"], "").0, EXIT_USAGE);
    }

    #[test]
    fn kv_round_trip() {
        let r = cmd_factor("x^6+x^4+x^2+x+1").unwrap();
        assert_eq!(Report::parse_kv(&r.render(Format::Kv)).unwrap(), r);
    }
}
