// Copyright 2026 The qecw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! `qecw` command-line front end.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qecw::dense::{encode, kl_check, ContinuousCorrector, ErrorOperator};
use qecw::experiments::{pseudothreshold, sweep, write_csv};
use qecw::stabilizer::{is_degenerate, parse_generator_file, perfect_code_bound, CATALOG_NAMES, DEFAULT_DISTANCE_CAP};
use qecw::{
    build_table, catalog, css_from_parity_checks, validate_generators, BinaryMatrix, ChannelKind, PauliOperator,
    StabilizerCode, StateVectorF64,
};

/// Environment variable supplying the default seed for randomized commands.
const SEED_ENV: &str = "QECW_SEED";

#[derive(Parser)]
#[command(name = "qecw", version, about = "Stabilizer quantum error correction workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Catalog listings.
    Codes {
        #[command(subcommand)]
        action: CodesAction,
    },
    /// Code inspection.
    Code {
        #[command(subcommand)]
        action: CodeAction,
    },
    /// Syndrome of an error and the table correction for it.
    Syndrome {
        #[arg(long)]
        code: String,
        #[arg(long)]
        error: String,
        #[arg(long, default_value = "depolarizing")]
        channel: ChannelKind,
    },
    /// Syndrome lookup tables.
    Table {
        #[command(subcommand)]
        action: TableAction,
    },
    /// CSS construction from parity-check matrix files.
    Css {
        #[command(subcommand)]
        action: CssAction,
    },
    /// Knill-Laflamme test for a list of Pauli errors.
    KlCheck {
        #[arg(long)]
        code: String,
        /// File with one Pauli string per line.
        #[arg(long)]
        errors: PathBuf,
    },
    /// Corrects a random continuous single-qubit error on a random codeword.
    VerifyContinuous {
        #[arg(long)]
        code: String,
        /// 1-based qubit index.
        #[arg(long)]
        qubit: usize,
        #[arg(long, env = SEED_ENV, default_value_t = 1)]
        seed: u64,
    },
    /// Monte Carlo logical error rates as CSV.
    Mc {
        #[arg(long)]
        code: String,
        #[arg(long)]
        channel: ChannelKind,
        /// Comma-separated physical error probabilities.
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<f64>,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, env = SEED_ENV, default_value_t = 1)]
        seed: u64,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pseudothreshold of the closed-form success probability.
    Threshold {
        #[arg(long)]
        code: String,
    },
}

#[derive(Subcommand)]
enum CodesAction {
    List,
}

#[derive(Subcommand)]
enum CodeAction {
    /// Generators, logical operators, distance and degeneracy.
    Info { code: String },
}

#[derive(Subcommand)]
enum TableAction {
    Dump {
        #[arg(long)]
        code: String,
        #[arg(long)]
        channel: ChannelKind,
    },
}

#[derive(Subcommand)]
enum CssAction {
    Build {
        #[arg(long)]
        hx: PathBuf,
        /// Defaults to the X checks.
        #[arg(long)]
        hz: Option<PathBuf>,
    },
}

/// Exit statuses. Clap reports usage errors with 2.
#[derive(Debug, Clone, Copy)]
enum Status {
    Failure = 1,
    InvalidPauli = 3,
    MissingFile = 4,
    UnknownCode = 5,
}

struct CliError {
    status: Status,
    message: String,
}

impl From<qecw::Error> for CliError {
    fn from(e: qecw::Error) -> Self {
        let status = match e {
            qecw::Error::Parse(_) | qecw::Error::InvalidCharacter { .. } => Status::InvalidPauli,
            qecw::Error::UnknownCode { .. } => Status::UnknownCode,
            _ => Status::Failure,
        };
        CliError { status, message: e.to_string() }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError { status: Status::Failure, message: e.to_string() }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError {
        status: if e.kind() == io::ErrorKind::NotFound { Status::MissingFile } else { Status::Failure },
        message: format!("{}: {e}", path.display()),
    })
}

/// A catalog name, or else a generator file.
fn load_code(code_arg: &str) -> CliResult<StabilizerCode> {
    if CATALOG_NAMES.contains(&code_arg) {
        return Ok(catalog(code_arg)?);
    }
    let path = Path::new(code_arg);
    if !path.exists() && !code_arg.contains(['/', '.']) {
        return Err(catalog(code_arg).unwrap_err().into());
    }
    let gens = parse_generator_file(&read_file(path)?)?;
    let name = path.file_stem().and_then(|s| s.to_str()).unwrap_or(code_arg).to_string();
    Ok(validate_generators(gens)?.with_name(name).analyzed(DEFAULT_DISTANCE_CAP))
}

fn parse_pauli(s: &str) -> CliResult<PauliOperator> {
    s.parse::<PauliOperator>()
        .map_err(|e| CliError { status: Status::InvalidPauli, message: format!("invalid Pauli string '{s}': {e}") })
}

fn code_summary(code: &StabilizerCode) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "name: {}", code.name().unwrap_or("custom"));
    let _ = writeln!(s, "parameters: {}", code.parameters_string());
    let _ = writeln!(s, "css: {}", code.is_css());
    let _ = writeln!(s, "generators:");
    for (i, g) in code.generators().iter().enumerate() {
        let _ = writeln!(s, "  g{} = {g}", i + 1);
    }
    if !code.redundant_generators().is_empty() {
        let dropped: Vec<String> = code.redundant_generators().iter().map(|i| (i + 1).to_string()).collect();
        let _ = writeln!(s, "dropped redundant input generators: {}", dropped.join(", "));
    }
    let _ = writeln!(s, "logical operators:");
    for (i, (x, z)) in code.logical_pairs().iter().enumerate() {
        let _ = writeln!(s, "  X{} = {x}  Z{} = {z}", i + 1, i + 1);
    }
    s
}

fn codes_list() -> CliResult<String> {
    let mut s = String::new();
    for name in CATALOG_NAMES {
        let _ = writeln!(s, "{name} {}", catalog(name)?.parameters_string());
    }
    Ok(s)
}

fn code_info(code_arg: &str) -> CliResult<String> {
    let code = load_code(code_arg)?;
    let mut s = code_summary(&code);
    let limit = code.correctable_weight().unwrap_or(1);
    let deg = is_degenerate(&code, limit);
    match &deg.witness {
        Some((a, b)) => {
            let _ = writeln!(s, "degenerate (weight <= {limit}): yes, {a} and {b} differ by a stabilizer");
        }
        None => {
            let _ = writeln!(s, "degenerate (weight <= {limit}): no");
        }
    }
    if let Ok(bound) = perfect_code_bound(code.n(), code.k()) {
        let avail = bound.available.map_or("overflow".to_string(), |a| a.to_string());
        let verdict = if bound.perfect {
            "saturated"
        } else if bound.holds {
            "holds"
        } else {
            "violated"
        };
        let _ = writeln!(s, "3n+1 <= 2^(n-k): {} <= {avail}, {verdict}", bound.required);
    }
    Ok(s)
}

fn syndrome_cmd(code_arg: &str, error: &str, channel: ChannelKind) -> CliResult<String> {
    let code = load_code(code_arg)?;
    let e = parse_pauli(error)?;
    let syndrome = code.syndrome_of(&e)?;
    let decoded = build_table(&code, channel)?.decode(&syndrome)?;
    let action = if decoded.uncorrectable {
        "no table entry, uncorrectable".to_string()
    } else if decoded.correction.is_identity() {
        "no correction".to_string()
    } else {
        format!("correct with {}", decoded.correction)
    };
    Ok(format!("{} → {action}\nsyndrome bits: {syndrome}\n", syndrome.outcome_string()))
}

fn css_build(hx: &Path, hz: Option<&Path>) -> CliResult<String> {
    let hx_m: BinaryMatrix = read_file(hx)?.parse()?;
    let hz_m: BinaryMatrix = match hz {
        Some(p) => read_file(p)?.parse()?,
        None => hx_m.clone(),
    };
    let code = css_from_parity_checks(&hx_m, &hz_m)?.with_name("css").analyzed(DEFAULT_DISTANCE_CAP);
    Ok(code_summary(&code))
}

fn kl_cmd(code_arg: &str, errors: &Path) -> CliResult<String> {
    let code = load_code(code_arg)?;
    let ops: Vec<ErrorOperator<f64>> =
        parse_generator_file(&read_file(errors)?)?.into_iter().map(ErrorOperator::Pauli).collect();
    let report = kl_check(&code, &ops)?;
    let mut s = String::from("alpha:\n");
    for i in 0..ops.len() {
        let row: Vec<String> = (0..ops.len())
            .map(|j| {
                let a = report.alpha[(i, j)];
                format!("{:+.6}{:+.6}i", a.re, a.im)
            })
            .collect();
        let _ = writeln!(s, "  {}", row.join(" "));
    }
    let _ = writeln!(s, "hermitian deviation: {:.3e}", report.hermitian_deviation);
    let _ = writeln!(s, "projection residual: {:.3e}", report.projection_residual);
    let _ = writeln!(s, "{}", if report.correctable { "correctable" } else { "not correctable" });
    Ok(s)
}

fn random_complex(rng: &mut ChaCha8Rng) -> Complex<f64> {
    Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

fn verify_continuous(code_arg: &str, qubit: usize, seed: u64) -> CliResult<String> {
    let corrector = ContinuousCorrector::new(code_arg)?;
    let n = corrector.code().n();
    if qubit == 0 || qubit > n {
        return Err(CliError { status: Status::Failure, message: format!("qubit must be in 1..={n}") });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (a, b) = (random_complex(&mut rng), random_complex(&mut rng));
    let norm = (a.norm_sqr() + b.norm_sqr()).sqrt();
    let psi = encode(code_arg, a / norm, b / norm)?;
    let coeffs: Vec<Complex<f64>> = (0..4).map(|_| random_complex(&mut rng)).collect();
    let scale = coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    let mut hit = StateVectorF64::from_amplitudes(n, vec![Complex::new(0.0, 0.0); 1 << n])?;
    for (c, letter) in coeffs.iter().zip(['I', 'X', 'Y', 'Z']) {
        let mut label = vec!['I'; n];
        label[qubit - 1] = letter;
        let p: PauliOperator = label.into_iter().collect::<String>().parse()?;
        hit = hit.add(&psi.apply_pauli(&p)?.scaled(c / scale))?;
    }
    let (syndrome, fixed) = corrector.correct_with_syndrome(&hit, &mut rng)?;
    let fidelity = fixed.overlap(&psi)?.powi(2);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "error on qubit {qubit}: ({:.4}) I + ({:.4}) X + ({:.4}) Y + ({:.4}) Z",
        coeffs[0] / scale,
        coeffs[1] / scale,
        coeffs[2] / scale,
        coeffs[3] / scale
    );
    let _ = writeln!(s, "measured syndrome: {} (bits {syndrome})", syndrome.outcome_string());
    let _ = writeln!(s, "fidelity: {fidelity:.12}");
    Ok(s)
}

fn mc_cmd(
    code_arg: &str,
    channel: ChannelKind,
    ps: &[f64],
    trials: u64,
    seed: u64,
    out: Option<&Path>,
) -> CliResult<String> {
    let code = load_code(code_arg)?;
    let rows = sweep(&code, channel, ps, trials, seed)?;
    let mut buf = Vec::new();
    write_csv(&mut buf, &rows)?;
    match out {
        Some(path) => {
            fs::write(path, &buf)
                .map_err(|e| CliError { status: Status::Failure, message: format!("{}: {e}", path.display()) })?;
            Ok(String::new())
        }
        None => Ok(String::from_utf8(buf).expect("CSV is ASCII")),
    }
}

fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Codes { action: CodesAction::List } => codes_list(),
        Command::Code { action: CodeAction::Info { code } } => code_info(&code),
        Command::Syndrome { code, error, channel } => syndrome_cmd(&code, &error, channel),
        Command::Table { action: TableAction::Dump { code, channel } } => {
            Ok(build_table(&load_code(&code)?, channel)?.dump())
        }
        Command::Css { action: CssAction::Build { hx, hz } } => css_build(&hx, hz.as_deref()),
        Command::KlCheck { code, errors } => kl_cmd(&code, &errors),
        Command::VerifyContinuous { code, qubit, seed } => verify_continuous(&code, qubit, seed),
        Command::Mc { code, channel, p, trials, seed, out } => mc_cmd(&code, channel, &p, trials, seed, out.as_deref()),
        Command::Threshold { code } => Ok(format!("{:.6}\n", pseudothreshold::<f64>(&code)?)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(Status::Failure as u8);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.status as u8)
        }
    }
}
