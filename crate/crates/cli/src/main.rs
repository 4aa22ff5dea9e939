//! `primedfa` command-line front end.
//!
//! Structured results go to stdout as JSON, diagnostics to stderr. Exit
//! codes: 0 success, 1 usage error, 2 malformed input or unmet
//! precondition, 3 inconclusive or budget exceeded, 4 failed verification.

use clap::{Parser, Subcommand, ValueEnum};
use primedfa_core::{
    brute_force_composite, build_cnf_dfa, classify, decide_primality_mls_with, decompose_mls_with,
    generate_minimal_adfa_plus, generate_mls, minimize, normalize, parse_dimacs, pump,
    solve_sat_via_primality_with, ClassifyError, CnfFormula, DecomposeError, Dfa, DfaError,
    DfaFile, GenConfig, Normalized, OracleConfig, OracleError, OracleMode, PrimalityError,
    PrimalityOptions, Provenance, ReductionError, Word, DEFAULT_STATE_BUDGET,
};
use serde::Serialize;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use thiserror::Error;

const STATE_BUDGET_VAR: &str = "PRIMEDFA_STATE_BUDGET";

#[derive(Debug, Parser)]
#[command(
    name = "primedfa",
    version,
    about = "Primality and decomposition of DFA languages"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report class membership (minimal, safety, ADFA+, linear) and lin.
    Classify { dfa: PathBuf },
    /// Write the canonical minimal automaton.
    Minimize {
        dfa: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide primality.
    Prime {
        dfa: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Mls)]
        method: MethodArg,
        /// Stop with an inconclusive result after this many max-visiting words.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_words: Option<u64>,
        /// Largest candidate size for the brute-force methods.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        size_bound: Option<u64>,
        /// Maximum number of candidate automata for the brute-force methods.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        candidate_budget: Option<u64>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
    },
    /// Decompose a composite automaton into strictly smaller ones.
    Decompose {
        dfa: PathBuf,
        /// Directory for part_NNN.json files and manifest.json.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Exit with code 4 unless the parts intersect to the input language.
        #[arg(long)]
        verify: bool,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_words: Option<u64>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
    },
    /// Build the CNF automaton of a DIMACS formula.
    Reduce {
        formula: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve a DIMACS formula through the primality of its CNF automaton.
    Sat {
        formula: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        jobs: u64,
    },
    /// Generate a random automaton from a seed.
    Gen {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        lin: u64,
        /// Alphabet size; symbols are a, b, c, ...
        #[arg(long, default_value_t = 2)]
        alphabet: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = KindArg::Mls)]
        kind: KindArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Pump a word: repeat the factor at positions i..j-1 l times.
    Pump {
        dfa: PathBuf,
        #[arg(long)]
        word: String,
        #[arg(short)]
        i: usize,
        #[arg(short)]
        j: usize,
        #[arg(short)]
        l: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Mls,
    BruteGeneral,
    BruteSafety,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    /// Minimal linear safety ADFA+.
    Mls,
    /// Minimal linear ADFA+, not necessarily safety.
    Linear,
    /// Minimal non-linear ADFA+.
    NonLinear,
}

impl Command {
    fn input(&self) -> Option<&Path> {
        match self {
            Command::Classify { dfa }
            | Command::Minimize { dfa, .. }
            | Command::Prime { dfa, .. }
            | Command::Decompose { dfa, .. }
            | Command::Pump { dfa, .. } => Some(dfa),
            Command::Reduce { formula, .. } | Command::Sat { formula, .. } => Some(formula),
            Command::Gen { .. } => None,
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed automaton: {0}")]
    MalformedDfa(DfaError),
    #[error("malformed formula: {0}")]
    MalformedCnf(ReductionError),
    #[error(transparent)]
    Dfa(#[from] DfaError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Primality(#[from] PrimalityError),
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("decomposition does not verify: {0}")]
    Verification(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::MalformedDfa(_) | CliError::MalformedCnf(_) => "malformed_input",
            CliError::Verification(_) => "verification_failed",
            _ if self.exit_code() == 3 => "inconclusive",
            CliError::Reduction(ReductionError::InternalInconsistency(_)) => "internal",
            _ => "precondition",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Verification(_) => 4,
            CliError::Dfa(DfaError::StateBudgetExceeded { .. })
            | CliError::Primality(PrimalityError::Inconclusive { .. })
            | CliError::Decompose(DecomposeError::Inconclusive { .. })
            | CliError::Reduction(ReductionError::Primality(PrimalityError::Inconclusive {
                ..
            }))
            | CliError::Oracle(OracleError::BudgetExceeded(_))
            | CliError::Oracle(OracleError::Dfa(DfaError::StateBudgetExceeded { .. })) => 3,
            CliError::Decompose(DecomposeError::Dfa(DfaError::StateBudgetExceeded { .. })) => 3,
            _ => 2,
        }
    }
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: String,
    kind: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    context: Option<String>,
}

fn state_budget() -> Result<usize, CliError> {
    match std::env::var(STATE_BUDGET_VAR) {
        Err(_) => Ok(DEFAULT_STATE_BUDGET),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::Usage(format!(
                "{STATE_BUDGET_VAR} must be a positive integer, got {v:?}"
            ))),
        },
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_dfa(path: &Path) -> Result<Dfa, CliError> {
    Dfa::from_json(&read(path)?).map_err(CliError::MalformedDfa)
}

fn load_cnf(path: &Path) -> Result<CnfFormula, CliError> {
    parse_dimacs(&read(path)?).map_err(CliError::MalformedCnf)
}

/// Stdout writes ignore errors so a closed pipe is not a panic.
fn out(text: &str) {
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn print_json<T: Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("serializable output");
    out(&format!("{text}\n"));
}

/// Writes a DFA file to `output`, or to stdout without one.
fn emit_dfa(dfa: &Dfa, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => write(path, &dfa.to_json()),
        None => {
            out(&dfa.to_json());
            Ok(())
        }
    }
}

fn to_usize(n: u64) -> usize {
    usize::try_from(n).unwrap_or(usize::MAX)
}

fn primality_options(max_words: Option<u64>, jobs: u64) -> PrimalityOptions {
    PrimalityOptions {
        max_words: max_words.map(to_usize),
        jobs: to_usize(jobs),
    }
}

#[derive(Serialize)]
struct ManifestEntry {
    file: String,
    provenance: Provenance,
}

#[derive(Serialize)]
struct Manifest {
    source_index: usize,
    verified: bool,
    parts: Vec<ManifestEntry>,
}

#[derive(Serialize)]
struct InlinePart {
    provenance: Provenance,
    dfa: DfaFile,
}

#[derive(Serialize)]
struct InlineDecomposition {
    source_index: usize,
    verified: bool,
    parts: Vec<InlinePart>,
}

#[derive(Serialize)]
struct PumpReport {
    word: Word,
    accepted: bool,
}

fn run(command: &Command) -> Result<(), CliError> {
    match command {
        Command::Classify { dfa } => {
            print_json(&classify(&load_dfa(dfa)?));
        }
        Command::Minimize { dfa, output } => {
            emit_dfa(&minimize(&load_dfa(dfa)?), output.as_deref())?;
        }
        Command::Prime {
            dfa,
            method,
            max_words,
            size_bound,
            candidate_budget,
            jobs,
        } => {
            let dfa = load_dfa(dfa)?;
            let verdict = match method {
                MethodArg::Mls => {
                    decide_primality_mls_with(&dfa, primality_options(*max_words, *jobs))?
                }
                MethodArg::BruteGeneral | MethodArg::BruteSafety => {
                    let mode = match method {
                        MethodArg::BruteGeneral => OracleMode::General,
                        _ => OracleMode::SafetyRestricted,
                    };
                    let mut cfg = OracleConfig::new(mode);
                    cfg.size_bound = size_bound.map(to_usize);
                    if let Some(b) = candidate_budget {
                        cfg.candidate_budget = *b;
                    }
                    cfg.state_budget = state_budget()?;
                    cfg.jobs = to_usize(*jobs);
                    brute_force_composite(&dfa, &cfg)?
                }
            };
            print_json(&verdict);
        }
        Command::Decompose {
            dfa,
            output,
            verify,
            max_words,
            jobs,
        } => {
            let source = minimize(&load_dfa(dfa)?);
            let dec = decompose_mls_with(
                &source,
                primality_options(*max_words, *jobs),
                state_budget()?,
            )?;
            let source_index = source.num_states();
            if let Some(dir) = output {
                fs::create_dir_all(dir).map_err(|source| CliError::Io {
                    path: dir.display().to_string(),
                    source,
                })?;
                let mut parts = Vec::new();
                for (k, (part, provenance)) in dec.parts.iter().zip(&dec.provenance).enumerate() {
                    let file = format!("part_{k:03}.json");
                    write(&dir.join(&file), &part.to_json())?;
                    parts.push(ManifestEntry {
                        file,
                        provenance: provenance.clone(),
                    });
                }
                let manifest = Manifest {
                    source_index,
                    verified: dec.verified,
                    parts,
                };
                let text =
                    serde_json::to_string_pretty(&manifest).expect("serializable manifest") + "\n";
                write(&dir.join("manifest.json"), &text)?;
                print_json(&manifest);
            } else {
                print_json(&InlineDecomposition {
                    source_index,
                    verified: dec.verified,
                    parts: dec
                        .parts
                        .iter()
                        .zip(&dec.provenance)
                        .map(|(part, provenance)| InlinePart {
                            provenance: provenance.clone(),
                            dfa: DfaFile::from(part),
                        })
                        .collect(),
                });
            }
            if *verify && !dec.verified {
                return Err(CliError::Verification(format!(
                    "{} parts do not intersect to the input language",
                    dec.parts.len()
                )));
            }
        }
        Command::Reduce { formula, output } => {
            let f = load_cnf(formula)?;
            match normalize(&f)? {
                Normalized::Cnf(n) => emit_dfa(&build_cnf_dfa(&n), output.as_deref())?,
                Normalized::TriviallySat => {
                    return Err(CliError::Precondition(
                        "every clause is a tautology; there is no automaton to build".into(),
                    ))
                }
            }
        }
        Command::Sat { formula, jobs } => {
            let f = load_cnf(formula)?;
            match solve_sat_via_primality_with(&f, primality_options(None, *jobs))? {
                Some(a) => {
                    let lits: Vec<String> = a.literals().iter().map(i64::to_string).collect();
                    out(&format!("SAT\nv {} 0\n", lits.join(" ")));
                }
                None => out("UNSAT\n"),
            }
        }
        Command::Gen {
            lin,
            alphabet,
            seed,
            kind,
            output,
        } => {
            let cfg = GenConfig::new(to_usize(*lin), to_usize(*alphabet), *seed);
            let dfa = match kind {
                KindArg::Mls => generate_mls(cfg)?,
                KindArg::Linear => generate_minimal_adfa_plus(cfg, true)?,
                KindArg::NonLinear => generate_minimal_adfa_plus(cfg, false)?,
            };
            emit_dfa(&dfa, output.as_deref())?;
        }
        Command::Pump { dfa, word, i, j, l } => {
            let dfa = load_dfa(dfa)?;
            let word = Word::new(word.chars().collect());
            dfa.encode(&word)?;
            let pumped = pump(&word, *i, *j, *l)?;
            let accepted = dfa.accepts(&pumped)?;
            print_json(&PumpReport {
                word: pumped,
                accepted,
            });
        }
    }
    Ok(())
}

fn fail(err: &CliError, context: Option<String>) -> ExitCode {
    eprintln!("primedfa: {err}");
    let report = ErrorReport {
        error: err.to_string(),
        kind: err.kind(),
        context,
    };
    out(&format!(
        "{}\n",
        serde_json::to_string(&report).expect("serializable error")
    ));
    let _ = std::io::stdout().flush();
    ExitCode::from(err.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            let message = e.kind().to_string();
            return fail(&CliError::Usage(message), None);
        }
    };
    match run(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => fail(&err, cli.command.input().map(|p| p.display().to_string())),
    }
}
