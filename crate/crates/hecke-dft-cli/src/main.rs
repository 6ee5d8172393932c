//! Command-line surface: spectra, kernels, transforms and the verification
//! suites, with JSON and CSV output.
//!
//! Exit codes: 0 success, 1 verification failure, 2 configuration error,
//! 3 signal shape error, 4 input parse error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use hecke_dft::transform::{KernelMatrix, Signal};
use hecke_dft::verify::{run_suite, SuiteKind, SuiteReport, VerifyOptions};
use hecke_dft::{LatticeConfig, SpectrumTable};
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_VERIFY: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_SHAPE: u8 = 3;
const EXIT_PARSE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "hecke-dft",
    version,
    about = "Deformed discrete Fourier transform: spectra, kernels, transforms and verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

#[derive(Args)]
struct ConfigArgs {
    /// Lattice period M (the alcove is {0, ..., M}); must be at least 2
    #[arg(long = "M")]
    m: i64,
    /// Deformation parameter, strictly between 0 and 1
    #[arg(long)]
    tau: f64,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Decimal digits for CSV/text output (JSON uses shortest exact form)
    #[arg(long, default_value_t = 15)]
    precision: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print the M+1 spectral nodes with parities, eigenvalues and dual weights
    Spectrum {
        #[command(flatten)]
        config: ConfigArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print the transform kernel matrix and both weight vectors
    Kernel {
        #[command(flatten)]
        config: ConfigArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Apply the forward or inverse transform to a signal file
    Transform {
        #[command(flatten)]
        config: ConfigArgs,
        /// Signal file: JSON array of [re, im] pairs, or CSV with re,im columns
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        direction: Direction,
        /// Decimal digits for CSV output
        #[arg(long, default_value_t = 15)]
        precision: usize,
    },
    /// Run verification suites and report each check
    Verify {
        #[arg(long = "M", default_value_t = 4)]
        m: i64,
        #[arg(long, default_value_t = 0.5)]
        tau: f64,
        /// One of: daha, reps, intertwiner, unitarity, spectrum,
        /// orthogonality, limit, quadrature, all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Half-width of the lattice test window (defaults to 6M)
        #[arg(long)]
        window: Option<i64>,
        /// Seed for the randomized checks
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Tolerance override, name=value; the name may be a suite or a
        /// single check (repeatable)
        #[arg(long = "tolerance", value_name = "NAME=VALUE")]
        tolerances: Vec<String>,
        /// Test hook: perturb one kernel entry to demonstrate detection
        #[arg(long, hide = true)]
        tamper_kernel: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Spectrum { config, output } => cmd_spectrum(&config, &output),
        Command::Kernel { config, output } => cmd_kernel(&config, &output),
        Command::Transform { config, input, direction, precision } => {
            cmd_transform(&config, &input, direction, precision)
        }
        Command::Verify { m, tau, suite, window, seed, tolerances, tamper_kernel } => {
            cmd_verify(m, tau, &suite, window, seed, &tolerances, tamper_kernel)
        }
    };
    ExitCode::from(code)
}

fn parse_config(args: &ConfigArgs) -> Result<LatticeConfig, u8> {
    LatticeConfig::new(args.m, args.tau).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_CONFIG
    })
}

/// Locale-independent scientific format with a fixed digit count.
fn fmt_f64(x: f64, precision: usize) -> String {
    format!("{x:.precision$e}")
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct SpectrumRow {
    m: usize,
    xi: f64,
    epsilon: i8,
    eigenvalue: f64,
    delta_hat: f64,
}

#[derive(Serialize)]
struct SpectrumDump {
    #[serde(rename = "M")]
    m: i64,
    tau: f64,
    points: Vec<SpectrumRow>,
}

fn cmd_spectrum(config: &ConfigArgs, output: &OutputArgs) -> u8 {
    let cfg = match parse_config(config) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let table = match SpectrumTable::compute(&cfg) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CONFIG;
        }
    };
    match output.format {
        Format::Json => {
            let dump = SpectrumDump {
                m: cfg.period(),
                tau: cfg.tau(),
                points: table
                    .points()
                    .iter()
                    .map(|p| SpectrumRow {
                        m: p.m,
                        xi: p.xi,
                        epsilon: p.parity,
                        eigenvalue: p.eigenvalue,
                        delta_hat: p.dual_weight,
                    })
                    .collect(),
            };
            println!("{}", serde_json::to_string_pretty(&dump).expect("serializable"));
        }
        Format::Csv => {
            let p = output.precision;
            println!("m,xi,epsilon,eigenvalue,delta_hat");
            for pt in table.points() {
                println!(
                    "{},{},{},{},{}",
                    pt.m,
                    fmt_f64(pt.xi, p),
                    pt.parity,
                    fmt_f64(pt.eigenvalue, p),
                    fmt_f64(pt.dual_weight, p)
                );
            }
        }
    }
    EXIT_OK
}

// ---------------------------------------------------------------------------
// kernel
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct KernelDump {
    #[serde(rename = "M")]
    m: i64,
    tau: f64,
    phi: Vec<Vec<f64>>,
    delta: Vec<f64>,
    delta_hat: Vec<f64>,
}

fn cmd_kernel(config: &ConfigArgs, output: &OutputArgs) -> u8 {
    let cfg = match parse_config(config) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let table = match SpectrumTable::compute(&cfg) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CONFIG;
        }
    };
    let kernel = KernelMatrix::from_spectrum(&table);
    let size = kernel.size();
    match output.format {
        Format::Json => {
            let dump = KernelDump {
                m: cfg.period(),
                tau: cfg.tau(),
                phi: (0..size).map(|m| kernel.row(m).to_vec()).collect(),
                delta: kernel.delta().to_vec(),
                delta_hat: kernel.delta_hat().to_vec(),
            };
            println!("{}", serde_json::to_string(&dump).expect("serializable"));
        }
        Format::Csv => {
            let p = output.precision;
            let header: Vec<String> =
                (0..size).map(|n| format!("phi{n}")).collect();
            println!("m,delta_hat,{}", header.join(","));
            for m in 0..size {
                let row: Vec<String> =
                    kernel.row(m).iter().map(|&x| fmt_f64(x, p)).collect();
                println!("{},{},{}", m, fmt_f64(kernel.delta_hat()[m], p), row.join(","));
            }
        }
    }
    EXIT_OK
}

// ---------------------------------------------------------------------------
// transform
// ---------------------------------------------------------------------------

enum SignalFormat {
    Json,
    Csv,
}

fn parse_signal(text: &str) -> Result<(Signal, SignalFormat), String> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        let value: serde_json::Value =
            serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
        let arr = value.as_array().ok_or("expected a JSON array of [re, im] pairs")?;
        let mut values = Vec::with_capacity(arr.len());
        for (i, entry) in arr.iter().enumerate() {
            let pair = entry
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or(format!("element at index {i} is not an [re, im] pair"))?;
            let re = pair[0].as_f64().ok_or(format!("element at index {i}: re is not a number"))?;
            let im = pair[1].as_f64().ok_or(format!("element at index {i}: im is not a number"))?;
            values.push(C64::new(re, im));
        }
        Ok((Signal::new(values), SignalFormat::Json))
    } else {
        let mut values = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if lineno == 0 && line.to_ascii_lowercase().replace(' ', "") == "re,im" {
                continue;
            }
            let mut parts = line.split(',');
            let re = parts
                .next()
                .and_then(|s| s.trim().parse::<f64>().ok())
                .ok_or(format!("line {}: cannot parse re column", lineno + 1))?;
            let im = parts
                .next()
                .and_then(|s| s.trim().parse::<f64>().ok())
                .ok_or(format!("line {}: cannot parse im column", lineno + 1))?;
            if parts.next().is_some() {
                return Err(format!("line {}: expected exactly two columns", lineno + 1));
            }
            values.push(C64::new(re, im));
        }
        Ok((Signal::new(values), SignalFormat::Csv))
    }
}

fn print_signal(signal: &Signal, format: &SignalFormat, precision: usize) {
    match format {
        SignalFormat::Json => {
            let arr: Vec<[f64; 2]> = signal.values().iter().map(|v| [v.re, v.im]).collect();
            println!("{}", serde_json::to_string(&arr).expect("serializable"));
        }
        SignalFormat::Csv => {
            println!("re,im");
            for v in signal.values() {
                println!("{},{}", fmt_f64(v.re, precision), fmt_f64(v.im, precision));
            }
        }
    }
}

fn cmd_transform(
    config: &ConfigArgs,
    input: &PathBuf,
    direction: Direction,
    precision: usize,
) -> u8 {
    let cfg = match parse_config(config) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let text = match std::fs::read_to_string(input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", input.display());
            return EXIT_PARSE;
        }
    };
    let (signal, format) = match parse_signal(&text) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_PARSE;
        }
    };
    if signal.len() != cfg.alcove_size() {
        eprintln!(
            "error: signal has {} values but M+1 = {} are required",
            signal.len(),
            cfg.alcove_size()
        );
        return EXIT_SHAPE;
    }
    let table = match SpectrumTable::compute(&cfg) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CONFIG;
        }
    };
    let kernel = KernelMatrix::from_spectrum(&table);
    let result = match direction {
        Direction::Forward => kernel.forward(&signal),
        Direction::Inverse => kernel.inverse(&signal),
    };
    match result {
        Ok(out) => {
            print_signal(&out, &format, precision);
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_SHAPE
        }
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

fn parse_tolerances(entries: &[String]) -> Result<BTreeMap<String, f64>, String> {
    let mut map = BTreeMap::new();
    for entry in entries {
        let (name, value) =
            entry.split_once('=').ok_or(format!("expected NAME=VALUE, got '{entry}'"))?;
        let value: f64 =
            value.parse().map_err(|_| format!("cannot parse tolerance value in '{entry}'"))?;
        map.insert(name.to_string(), value);
    }
    Ok(map)
}

fn print_report(report: &SuiteReport) {
    for c in &report.checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        if c.exact {
            println!("[{}] {}: {status} (exact)", report.suite, c.name);
        } else {
            println!(
                "[{}] {}: {status} max_dev={:.3e} tol={:.1e}",
                report.suite, c.name, c.max_dev, c.tol
            );
        }
        if let Some(note) = &c.note {
            println!("    note: {note}");
        }
    }
}

fn cmd_verify(
    m: i64,
    tau: f64,
    suite: &str,
    window: Option<i64>,
    seed: u64,
    tolerances: &[String],
    tamper_kernel: bool,
) -> u8 {
    let cfg = match LatticeConfig::new(m, tau) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CONFIG;
        }
    };
    let tol_overrides = match parse_tolerances(tolerances) {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_CONFIG;
        }
    };
    let kinds: Vec<SuiteKind> = if suite == "all" {
        SuiteKind::ALL.to_vec()
    } else {
        match SuiteKind::from_name(suite) {
            Some(k) => vec![k],
            None => {
                eprintln!(
                    "error: unknown suite '{suite}'; expected one of daha, reps, intertwiner, \
                     unitarity, spectrum, orthogonality, limit, quadrature, all"
                );
                return EXIT_CONFIG;
            }
        }
    };
    let opts = VerifyOptions { window, seed, tol_overrides, tamper_kernel };

    println!("config: M={m} tau={tau} window={} seed={seed}", window.unwrap_or(6 * m));
    let mut total = 0usize;
    let mut failed = 0usize;
    for kind in kinds {
        let report = run_suite(kind, &cfg, &opts);
        print_report(&report);
        total += report.checks.len();
        failed += report.checks.iter().filter(|c| !c.pass).count();
    }
    if failed == 0 {
        println!("RESULT: PASS ({total} checks)");
        EXIT_OK
    } else {
        println!("RESULT: FAIL ({failed} of {total} checks failed)");
        EXIT_VERIFY
    }
}
