//! Subcommands of the `rankdec` binary.
//!
//! Every command returns the JSON text it prints; errors carry the process
//! exit code.

use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rankdec::decoder::{self, DecodeOutcome, OutcomeKind, DEFAULT_LIMIT};
use rankdec::io::{BasisJson, CodeJson, OutcomeJson, SyndromeJson, TraceJson, UniqueJson};
use rankdec::keyeq::{oracle_solutions, solution_basis, solve_unique, spans_equal};
use rankdec::seea::{seea, seea_until_degree};
use rankdec::{count_muls, Error, Field, FieldCtx, GabidulinCode, LinPoly, Word};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub const LIMIT_ENV: &str = "RANKDEC_LIMIT";

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DecodingFailure(_) => 1,
            Error::BudgetExceeded { .. } => 3,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        Self::invalid(format!("malformed JSON: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "rankdec",
    version,
    about = "Gabidulin codes: key equations, decoding and simulation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a code and print its JSON description.
    Gencode(GencodeArgs),
    /// Encode a message.
    Encode(EncodeArgs),
    /// Syndrome polynomial of a received word.
    Syndrome(WordArgs),
    /// Solve the key equation of a received word.
    Keyeq(KeyeqArgs),
    /// Decode a received word, uniquely or as a list.
    Decode(DecodeArgs),
    /// Seeded Monte-Carlo simulation of the decoding pipeline.
    Simulate(SimulateArgs),
    /// Dump the SEEA transcript for a received word or a pair of polynomials.
    SeeaTrace(TraceArgs),
}

#[derive(Debug, Args)]
pub struct GencodeArgs {
    #[arg(long, default_value_t = 2)]
    pub q: u32,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Modulus coefficients from the constant term up, e.g. `1,1,0,0,1`.
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
    /// h-vector as a JSON array of element strings (default `1, z, z^2, ...`).
    #[arg(long)]
    pub h: Option<String>,
}

#[derive(Debug, Args)]
pub struct CodeArg {
    /// Code JSON: a file path, `-` for stdin, or inline JSON.
    #[arg(long)]
    pub code: String,
}

#[derive(Debug, Args)]
pub struct EncodeArgs {
    #[command(flatten)]
    pub code: CodeArg,
    /// Message as a JSON array of k element strings (or `@file`).
    #[arg(long)]
    pub msg: String,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    #[command(flatten)]
    pub code: CodeArg,
    /// Received word as a JSON array of n element strings (or `@file`).
    #[arg(long)]
    pub word: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KeyeqMode {
    Unique,
    Basis,
    Oracle,
}

#[derive(Debug, Args)]
pub struct KeyeqArgs {
    #[command(flatten)]
    pub input: WordArgs,
    #[arg(long, value_enum, default_value_t = KeyeqMode::Unique)]
    pub mode: KeyeqMode,
    /// Decoding radius; required by the basis and oracle modes.
    #[arg(long)]
    pub tau: Option<usize>,
    /// Include the SEEA transcript.
    #[arg(long)]
    pub trace: bool,
    /// In basis mode, compare the basis span with the oracle kernel.
    #[arg(long)]
    pub check_span: bool,
}

#[derive(Debug, Args)]
pub struct DecodeArgs {
    #[command(flatten)]
    pub input: WordArgs,
    /// List-decoding radius; unique decoding when absent.
    #[arg(long)]
    pub tau: Option<usize>,
    /// Enumeration budget (overrides the RANKDEC_LIMIT environment variable).
    #[arg(long)]
    pub limit: Option<u128>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub code: CodeArg,
    /// Error ranks to simulate, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub rank: Vec<usize>,
    /// List-decoding radius; unique decoding when absent.
    #[arg(long)]
    pub tau: Option<usize>,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub limit: Option<u128>,
}

#[derive(Debug, Args)]
pub struct TraceArgs {
    #[command(flatten)]
    pub code: CodeArg,
    /// Run on `(x^[d-1], S)` for this received word.
    #[arg(long, conflicts_with_all = ["b", "a"])]
    pub word: Option<String>,
    /// First input as a JSON array of element strings.
    #[arg(long, requires = "a")]
    pub b: Option<String>,
    #[arg(long, requires = "b")]
    pub a: Option<String>,
    /// Stop at the first step whose remainder has q-degree below this bound.
    #[arg(long)]
    pub until: Option<usize>,
}

pub fn run(cli: Cli) -> CliResult<String> {
    match cli.command {
        Command::Gencode(a) => cmd_gencode(&a),
        Command::Encode(a) => cmd_encode(&a),
        Command::Syndrome(a) => cmd_syndrome(&a),
        Command::Keyeq(a) => cmd_keyeq(&a),
        Command::Decode(a) => cmd_decode(&a),
        Command::Simulate(a) => cmd_simulate(&a),
        Command::SeeaTrace(a) => cmd_seea_trace(&a),
    }
}

fn to_json<T: Serialize>(value: &T) -> CliResult<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

/// Reads `-` (stdin), `@path`, a path to an existing file, or inline text.
fn read_source(src: &str) -> CliResult<String> {
    if src == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::invalid(format!("stdin: {e}")))?;
        return Ok(s);
    }
    let path = src.strip_prefix('@').unwrap_or(src);
    if src.starts_with('@') || std::path::Path::new(path).is_file() {
        return fs::read_to_string(path).map_err(|e| CliError::invalid(format!("{path}: {e}")));
    }
    Ok(src.to_string())
}

pub fn load_code(src: &str) -> CliResult<GabidulinCode> {
    let dto: CodeJson = serde_json::from_str(&read_source(src)?)?;
    Ok(dto.build()?)
}

fn load_word(code: &GabidulinCode, src: &str, len: usize) -> CliResult<Word> {
    let items: Vec<String> = serde_json::from_str(&read_source(src)?)?;
    if items.len() != len {
        return Err(CliError::invalid(format!(
            "expected {len} elements, got {}",
            items.len()
        )));
    }
    Ok(rankdec::io::parse_word(code.ctx(), &items)?)
}

fn load_poly(ctx: &Arc<FieldCtx>, src: &str) -> CliResult<LinPoly> {
    let items: Vec<String> = serde_json::from_str(&read_source(src)?)?;
    Ok(LinPoly::from_strings(ctx, &items)?)
}

fn limit_from(flag: Option<u128>) -> CliResult<u128> {
    if let Some(l) = flag {
        return Ok(l);
    }
    match std::env::var(LIMIT_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::invalid(format!("{LIMIT_ENV} is not an integer: {v}"))),
        Err(_) => Ok(DEFAULT_LIMIT),
    }
}

pub fn cmd_gencode(a: &GencodeArgs) -> CliResult<String> {
    let ctx = match &a.modulus {
        Some(modulus) => FieldCtx::new(a.q, a.m, modulus.clone())?,
        None => FieldCtx::with_default_modulus(a.q, a.m)?,
    };
    let code = match &a.h {
        Some(h) => {
            let items: Vec<String> = serde_json::from_str(&read_source(h)?)?;
            GabidulinCode::new(&ctx, a.n, a.k, rankdec::io::parse_word(&ctx, &items)?)?
        }
        None => GabidulinCode::with_default_h(&ctx, a.n, a.k)?,
    };
    to_json(&CodeJson::from_code(&code))
}

pub fn cmd_encode(a: &EncodeArgs) -> CliResult<String> {
    let code = load_code(&a.code.code)?;
    let msg = load_word(&code, &a.msg, code.k())?;
    let cw = code.encode(&msg)?;
    to_json(&rankdec::io::word_to_strings(code.ctx(), &cw))
}

pub fn cmd_syndrome(a: &WordArgs) -> CliResult<String> {
    let code = load_code(&a.code.code)?;
    let r = load_word(&code, &a.word, code.n())?;
    to_json(&SyndromeJson::from_syndrome(&code.syndrome(&r)?))
}

fn check_tau(code: &GabidulinCode, tau: Option<usize>) -> CliResult<usize> {
    let tau = tau.ok_or_else(|| CliError::invalid("--tau is required in this mode"))?;
    if tau <= code.half_distance() || tau + 1 >= code.d() {
        return Err(CliError::invalid(format!(
            "tau must satisfy {} < tau < {}, got {tau}",
            code.half_distance(),
            code.d() - 1
        )));
    }
    Ok(tau)
}

#[derive(Serialize)]
struct UniqueOut {
    #[serde(flatten)]
    solution: UniqueJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<TraceJson>,
}

#[derive(Serialize, Deserialize)]
pub struct BasisOut {
    #[serde(flatten)]
    pub basis: BasisJson,
    pub tail_filled: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub span_equal: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceJson>,
}

#[derive(Serialize, Deserialize)]
pub struct OracleOut {
    pub tau: usize,
    pub dimension: usize,
    pub kernel: Vec<Vec<String>>,
}

pub fn cmd_keyeq(a: &KeyeqArgs) -> CliResult<String> {
    let code = load_code(&a.input.code.code)?;
    let r = load_word(&code, &a.input.word, code.n())?;
    let s = code.syndrome(&r)?;
    let ctx = code.ctx();
    let x_top = LinPoly::x_pow(ctx, code.d() - 1);
    match a.mode {
        KeyeqMode::Unique => {
            let solution = solve_unique(&s)?;
            let trace = if a.trace && !s.is_zero() {
                Some(TraceJson::from_trace(
                    &seea_until_degree(&x_top, s.poly(), code.half_distance())?.1,
                ))
            } else {
                None
            };
            to_json(&UniqueOut {
                solution: UniqueJson::from_solution(&solution),
                trace,
            })
        }
        KeyeqMode::Basis => {
            let tau = check_tau(&code, a.tau)?;
            let basis = solution_basis(&s, tau)?;
            let span_equal = a.check_span.then(|| {
                let deltas: Vec<LinPoly> = basis.deltas().cloned().collect();
                oracle_solutions(&s, tau).map(|oracle| spans_equal(&deltas, &oracle, tau + 1))
            });
            let trace = if a.trace {
                Some(TraceJson::from_trace(&seea(&x_top, s.poly())?))
            } else {
                None
            };
            to_json(&BasisOut {
                basis: BasisJson::from_basis(&basis),
                tail_filled: basis.tail_filled(),
                span_equal: span_equal.transpose()?,
                trace,
            })
        }
        KeyeqMode::Oracle => {
            let tau = check_tau(&code, a.tau)?;
            let kernel = oracle_solutions(&s, tau)?;
            to_json(&OracleOut {
                tau,
                dimension: kernel.len(),
                kernel: kernel.iter().map(LinPoly::to_strings).collect(),
            })
        }
    }
}

fn decode_word(
    code: &GabidulinCode,
    r: &[rankdec::FieldElement],
    tau: Option<usize>,
    limit: u128,
) -> CliResult<DecodeOutcome> {
    match tau {
        Some(t) if t > code.half_distance() => {
            let t = check_tau(code, Some(t))?;
            Ok(decoder::decode_beyond(code, r, t, limit)?)
        }
        _ => Ok(decoder::decode_bmd(code, r)?),
    }
}

pub fn cmd_decode(a: &DecodeArgs) -> CliResult<String> {
    let code = load_code(&a.input.code.code)?;
    let r = load_word(&code, &a.input.word, code.n())?;
    let out = decode_word(&code, &r, a.tau, limit_from(a.limit)?)?;
    to_json(&OutcomeJson::from_outcome(code.ctx(), &out))
}

pub fn cmd_seea_trace(a: &TraceArgs) -> CliResult<String> {
    let code = load_code(&a.code.code)?;
    let ctx = code.ctx();
    let (b, p) = match (&a.word, &a.b, &a.a) {
        (Some(w), _, _) => {
            let r = load_word(&code, w, code.n())?;
            (LinPoly::x_pow(ctx, code.d() - 1), code.syndrome(&r)?.poly().clone())
        }
        (None, Some(b), Some(p)) => (load_poly(ctx, b)?, load_poly(ctx, p)?),
        _ => return Err(CliError::invalid("give either --word or both --b and --a")),
    };
    let trace = match a.until {
        Some(bound) => seea_until_degree(&b, &p, bound)?.1,
        None => seea(&b, &p)?,
    };
    to_json(&TraceJson::from_trace(&trace))
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct RankStats {
    pub trials: usize,
    pub success: usize,
    pub failure: usize,
    pub budget_exceeded: usize,
    pub success_rate: f64,
    /// List size -> number of trials (list mode only).
    pub list_sizes: BTreeMap<usize, usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MulStats {
    pub samples: usize,
    pub total: u64,
    pub max: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimReport {
    pub code: CodeJson,
    pub mode: String,
    pub tau: Option<usize>,
    pub seed: u64,
    pub trials: usize,
    pub ranks: BTreeMap<usize, RankStats>,
    /// Basis size -> number of trials (list mode only).
    pub basis_sizes: BTreeMap<usize, usize>,
    /// Radius -> multiplications spent solving the key equation.
    pub multiplications: BTreeMap<usize, MulStats>,
}

enum TrialResult {
    Success { list_size: Option<usize> },
    Failure { list_size: Option<usize> },
    Budget,
}

struct Trial {
    result: TrialResult,
    basis_size: Option<usize>,
    muls: u64,
}

/// Per-trial generator: seeded once, one stream per `(rank, trial)`.
pub fn trial_rng(seed: u64, rank: usize, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((rank as u64) << 32) | trial as u64);
    rng
}

fn run_trial(
    code: &GabidulinCode,
    rank: usize,
    trial: usize,
    seed: u64,
    list_tau: Option<usize>,
    limit: u128,
) -> CliResult<Trial> {
    let mut rng = trial_rng(seed, rank, trial);
    let f = code.ctx();
    let cw = code.encode(&code.random_message(&mut rng))?;
    let e = code.random_error(rank, &mut rng)?;
    let r: Word = cw.iter().zip(&e).map(|(&a, &b)| f.add(a, b)).collect();
    let s = code.syndrome(&r)?;
    let (muls, basis_size) = if s.is_zero() {
        (0, None)
    } else if let Some(tau) = list_tau {
        let (basis, muls) = count_muls(|| solution_basis(&s, tau));
        (muls, Some(basis?.len()))
    } else {
        (count_muls(|| solve_unique(&s)).1, None)
    };
    let result = match list_tau {
        Some(tau) => match decoder::decode_beyond(code, &r, tau, limit) {
            Ok(out) => {
                let size = Some(out.codewords.len());
                if out.contains(&cw) {
                    TrialResult::Success { list_size: size }
                } else {
                    TrialResult::Failure { list_size: size }
                }
            }
            Err(Error::BudgetExceeded { .. }) => TrialResult::Budget,
            Err(e) => return Err(e.into()),
        },
        None => {
            let out = decoder::decode_bmd(code, &r)?;
            if out.kind == OutcomeKind::Codeword && out.codewords == [cw] {
                TrialResult::Success { list_size: None }
            } else {
                TrialResult::Failure { list_size: None }
            }
        }
    };
    Ok(Trial {
        result,
        basis_size,
        muls,
    })
}

/// Runs the simulation. Results depend only on the seed, never on `jobs`.
pub fn simulate(code: &GabidulinCode, a: &SimulateArgs) -> CliResult<SimReport> {
    let list_tau = match a.tau {
        Some(t) if t > code.half_distance() => Some(check_tau(code, Some(t))?),
        _ => None,
    };
    for &t in &a.rank {
        if t > code.n().min(code.ctx().m()) {
            return Err(CliError::invalid(format!("error rank {t} exceeds min(n, m)")));
        }
    }
    let limit = limit_from(a.limit)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.jobs)
        .build()
        .map_err(|e| CliError {
            code: 1,
            message: e.to_string(),
        })?;
    let tasks: Vec<(usize, usize)> = a
        .rank
        .iter()
        .flat_map(|&t| (0..a.trials).map(move |i| (t, i)))
        .collect();
    let results: Vec<CliResult<Trial>> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(t, i)| run_trial(code, t, i, a.seed, list_tau, limit))
            .collect()
    });

    let radius = list_tau.unwrap_or(code.half_distance());
    let mut report = SimReport {
        code: CodeJson::from_code(code),
        mode: if list_tau.is_some() { "list" } else { "unique" }.into(),
        tau: list_tau,
        seed: a.seed,
        trials: a.trials,
        ranks: BTreeMap::new(),
        basis_sizes: BTreeMap::new(),
        multiplications: BTreeMap::new(),
    };
    for (&(t, _), res) in tasks.iter().zip(results) {
        let trial = res?;
        let stats = report.ranks.entry(t).or_default();
        stats.trials += 1;
        let list_size = match trial.result {
            TrialResult::Success { list_size } => {
                stats.success += 1;
                list_size
            }
            TrialResult::Failure { list_size } => {
                stats.failure += 1;
                list_size
            }
            TrialResult::Budget => {
                stats.budget_exceeded += 1;
                None
            }
        };
        if let Some(size) = list_size {
            *stats.list_sizes.entry(size).or_default() += 1;
        }
        if let Some(b) = trial.basis_size {
            *report.basis_sizes.entry(b).or_default() += 1;
        }
        if trial.muls > 0 {
            let m = report.multiplications.entry(radius).or_default();
            m.samples += 1;
            m.total += trial.muls;
            m.max = m.max.max(trial.muls);
        }
    }
    for stats in report.ranks.values_mut() {
        stats.success_rate = stats.success as f64 / stats.trials.max(1) as f64;
    }
    Ok(report)
}

pub fn cmd_simulate(a: &SimulateArgs) -> CliResult<String> {
    let code = load_code(&a.code.code)?;
    to_json(&simulate(&code, a)?)
}
