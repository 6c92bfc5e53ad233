//! Benchmark CLI: solve single instances, sweep directories, verify expected
//! cut weights.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 bad flags,
//! 3 parse/input errors, 4 exact-oracle size limit.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use maxcut::baselines::{dec_solve, ec_solve, sg3_solve, sg_solve};
use maxcut::report::{render, ReportFormat, RunReport, WeightValue};
use maxcut::{
    mcut, oracle, stabilizer, tsplib, DecDirection, DynWeightMatrix, Engine, SgOrder, SolveError,
    SolvePolicy, SurvivorRule, TieBreak, Weight, WeightMatrix,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_PARSE: u8 = 3;
const EXIT_ORACLE_LIMIT: u8 = 4;

#[derive(Parser)]
#[command(name = "maxcut", version, about = "Max-Cut heuristics and benchmarks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance and print a report row.
    Solve(SolveArgs),
    /// Run algorithms over every instance file in a directory.
    Bench(BenchArgs),
    /// Solve and compare against an expected cut weight.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FileFormat {
    Tsplib,
    Mcut,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Stabilizer,
    Ec,
    Dec,
    Sg,
    Sg3,
    Exact,
}

impl Algorithm {
    fn name(self) -> &'static str {
        match self {
            Algorithm::Stabilizer => "stabilizer",
            Algorithm::Ec => "ec",
            Algorithm::Dec => "dec",
            Algorithm::Sg => "sg",
            Algorithm::Sg3 => "sg3",
            Algorithm::Exact => "exact",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum TieBreakArg {
    #[default]
    Lex,
    Revlex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum SurvivorArg {
    #[default]
    Small,
    Large,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum DecDirectionArg {
    #[default]
    MaxTotal,
    KeepSmaller,
    KeepLarger,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum EngineArg {
    Naive,
    #[default]
    Sorted,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum OutputArg {
    #[default]
    Csv,
    Md,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum BenchOutputArg {
    #[default]
    Csv,
    Md,
}

/// Algorithm and policy flags shared by the subcommands.
#[derive(Args, Clone)]
struct PolicyArgs {
    /// Order among equal maximum-|w| edges.
    #[arg(long, value_enum, default_value_t)]
    tie_break: TieBreakArg,
    /// Which endpoint of a picked edge survives a contraction.
    #[arg(long, value_enum, default_value_t)]
    survivor: SurvivorArg,
    /// Direction rule for DEC's differencing contraction.
    #[arg(long, value_enum, default_value_t)]
    dec_direction: DecDirectionArg,
    /// Zero-threshold override (real-mode instances only).
    #[arg(long)]
    epsilon: Option<f64>,
    /// Stabilizer engine variant.
    #[arg(long, value_enum, default_value_t)]
    engine: EngineArg,
    /// Time each solve this many times and report the minimum.
    #[arg(long, default_value_t = 1)]
    repeat: usize,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    format: FileFormat,
    #[arg(long, value_enum)]
    algorithm: Algorithm,
    #[command(flatten)]
    policy: PolicyArgs,
    /// Also print the contraction trace (contraction algorithms only).
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value_t)]
    output: OutputArg,
}

#[derive(Args)]
struct BenchArgs {
    /// Directory holding `.tsp` and/or `.mcut` instance files.
    #[arg(long)]
    dir: PathBuf,
    /// Comma-separated algorithm list.
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    algorithms: Vec<Algorithm>,
    #[command(flatten)]
    policy: PolicyArgs,
    #[arg(long, value_enum, default_value_t)]
    output: BenchOutputArg,
    /// Write the table here instead of standard output.
    #[arg(long)]
    out_file: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    format: FileFormat,
    #[arg(long, value_enum)]
    algorithm: Algorithm,
    /// Expected cut weight.
    #[arg(long)]
    expect: f64,
    #[command(flatten)]
    policy: PolicyArgs,
}

struct Solved {
    cut_weight: WeightValue,
    total_weight: WeightValue,
    optimal_weight: Option<WeightValue>,
    policy: String,
    trace: Option<String>,
    time_ms: f64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Solve(args) => run_solve(args),
        Command::Bench(args) => run_bench(args),
        Command::Verify(args) => run_verify(args),
    }
}

fn load_instance(path: &Path, format: FileFormat) -> Result<(String, DynWeightMatrix), String> {
    match format {
        FileFormat::Tsplib => {
            let inst = tsplib::parse_tsplib_file(path).map_err(|e| e.to_string())?;
            let matrix = inst.to_weight_matrix().map_err(|e| e.to_string())?;
            Ok((inst.name, DynWeightMatrix::Int(matrix)))
        }
        FileFormat::Mcut => {
            let matrix = mcut::parse_mcut_file(path).map_err(|e| e.to_string())?;
            let name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.display().to_string());
            Ok((name, matrix))
        }
    }
}

fn solve_dyn(
    matrix: &DynWeightMatrix,
    algorithm: Algorithm,
    policy: &PolicyArgs,
) -> Result<Solved, SolveError> {
    match matrix {
        DynWeightMatrix::Int(m) => solve_typed(m, algorithm, policy),
        DynWeightMatrix::Real(m) => solve_typed(m, algorithm, policy),
    }
}

fn solve_typed<W: Weight>(
    matrix: &WeightMatrix<W>,
    algorithm: Algorithm,
    policy: &PolicyArgs,
) -> Result<Solved, SolveError>
where
    WeightValue: From<W>,
{
    let repeats = policy.repeat.max(1);
    let stab_policy = SolvePolicy {
        tie_break: match policy.tie_break {
            TieBreakArg::Lex => TieBreak::Lex,
            TieBreakArg::Revlex => TieBreak::RevLex,
        },
        survivor: match policy.survivor {
            SurvivorArg::Small => SurvivorRule::SmallIndex,
            SurvivorArg::Large => SurvivorRule::LargeIndex,
        },
        engine: match policy.engine {
            EngineArg::Naive => Engine::Naive,
            EngineArg::Sorted => Engine::Sorted,
        },
        epsilon: policy.epsilon,
    };
    let dec_direction = match policy.dec_direction {
        DecDirectionArg::MaxTotal => DecDirection::MaxTotal,
        DecDirectionArg::KeepSmaller => DecDirection::KeepSmaller,
        DecDirectionArg::KeepLarger => DecDirection::KeepLarger,
    };

    let policy_label = |detail: String| -> String {
        match policy.epsilon {
            Some(eps) if !W::EXACT => format!("{detail} eps={eps}"),
            _ => detail,
        }
    };

    let mut result: Option<Solved> = None;
    let mut best_ms = f64::INFINITY;
    for _ in 0..repeats {
        let started = Instant::now();
        let outcome = match algorithm {
            Algorithm::Stabilizer => {
                let out = stabilizer::solve(matrix, &stab_policy)?;
                let elapsed = started.elapsed();
                Solved {
                    cut_weight: WeightValue::from(out.cut.cut_weight()),
                    total_weight: WeightValue::from(matrix.total_weight()),
                    optimal_weight: None,
                    policy: policy_label(format!(
                        "tie={} survivor={} engine={}",
                        match stab_policy.tie_break {
                            TieBreak::Lex => "lex",
                            TieBreak::RevLex => "revlex",
                        },
                        match stab_policy.survivor {
                            SurvivorRule::SmallIndex => "small",
                            SurvivorRule::LargeIndex => "large",
                        },
                        match stab_policy.engine {
                            Engine::Naive => "naive",
                            Engine::Sorted => "sorted",
                        },
                    )),
                    trace: Some(out.trace.render()),
                    time_ms: elapsed.as_secs_f64() * 1e3,
                }
            }
            Algorithm::Ec => {
                let out = ec_solve(matrix)?;
                let elapsed = started.elapsed();
                Solved {
                    cut_weight: WeightValue::from(out.cut.cut_weight()),
                    total_weight: WeightValue::from(matrix.total_weight()),
                    optimal_weight: None,
                    policy: policy_label("tie=lex survivor=small".to_string()),
                    trace: Some(out.trace.render()),
                    time_ms: elapsed.as_secs_f64() * 1e3,
                }
            }
            Algorithm::Dec => {
                let out = dec_solve(matrix, dec_direction);
                let elapsed = started.elapsed();
                Solved {
                    cut_weight: WeightValue::from(out.cut.cut_weight()),
                    total_weight: WeightValue::from(matrix.total_weight()),
                    optimal_weight: None,
                    policy: policy_label(format!(
                        "direction={} tie=lex",
                        match dec_direction {
                            DecDirection::MaxTotal => "max-total",
                            DecDirection::KeepSmaller => "keep-smaller",
                            DecDirection::KeepLarger => "keep-larger",
                        }
                    )),
                    trace: Some(out.trace.render()),
                    time_ms: elapsed.as_secs_f64() * 1e3,
                }
            }
            Algorithm::Sg => {
                let cut = sg_solve(matrix, &SgOrder::Natural)?;
                let elapsed = started.elapsed();
                Solved {
                    cut_weight: WeightValue::from(cut.cut_weight()),
                    total_weight: WeightValue::from(matrix.total_weight()),
                    optimal_weight: None,
                    policy: "order=natural".to_string(),
                    trace: None,
                    time_ms: elapsed.as_secs_f64() * 1e3,
                }
            }
            Algorithm::Sg3 => {
                let cut = sg3_solve(matrix);
                let elapsed = started.elapsed();
                Solved {
                    cut_weight: WeightValue::from(cut.cut_weight()),
                    total_weight: WeightValue::from(matrix.total_weight()),
                    optimal_weight: None,
                    policy: "order=adaptive".to_string(),
                    trace: None,
                    time_ms: elapsed.as_secs_f64() * 1e3,
                }
            }
            Algorithm::Exact => {
                let res = oracle::brute_force(matrix, oracle::DEFAULT_MAX_N)?;
                let elapsed = started.elapsed();
                let weight = WeightValue::from(res.witness.cut_weight());
                Solved {
                    cut_weight: weight,
                    total_weight: WeightValue::from(matrix.total_weight()),
                    optimal_weight: Some(weight),
                    policy: format!("max_n={}", oracle::DEFAULT_MAX_N),
                    trace: None,
                    time_ms: elapsed.as_secs_f64() * 1e3,
                }
            }
        };
        best_ms = best_ms.min(outcome.time_ms);
        result = Some(outcome);
    }
    let mut solved = result.expect("at least one repeat runs");
    solved.time_ms = best_ms;
    Ok(solved)
}

fn report_from(name: &str, matrix: &DynWeightMatrix, algorithm: Algorithm, s: &Solved) -> RunReport {
    RunReport {
        instance: name.to_string(),
        n: matrix.n(),
        algorithm: algorithm.name().to_string(),
        cut_weight: s.cut_weight,
        total_weight: s.total_weight,
        ratio: RunReport::ratio_of(s.cut_weight, s.total_weight),
        optimal_weight: s.optimal_weight,
        time_ms: s.time_ms,
        policy: s.policy.clone(),
    }
}

fn solve_error_exit(err: &SolveError) -> ExitCode {
    eprintln!("error: {err}");
    match err {
        SolveError::TooLarge { .. } => ExitCode::from(EXIT_ORACLE_LIMIT),
        _ => ExitCode::from(EXIT_PARSE),
    }
}

fn run_solve(args: SolveArgs) -> ExitCode {
    let (name, matrix) = match load_instance(&args.input, args.format) {
        Ok(loaded) => loaded,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let solved = match solve_dyn(&matrix, args.algorithm, &args.policy) {
        Ok(s) => s,
        Err(e) => return solve_error_exit(&e),
    };
    let report = report_from(&name, &matrix, args.algorithm, &solved);
    let format = match args.output {
        OutputArg::Csv => ReportFormat::Csv,
        OutputArg::Md => ReportFormat::Markdown,
        OutputArg::Json => ReportFormat::Json,
    };
    print!("{}", render(std::slice::from_ref(&report), format));
    if args.trace {
        if let Some(trace) = &solved.trace {
            print!("{trace}");
        }
    }
    ExitCode::SUCCESS
}

fn run_bench(args: BenchArgs) -> ExitCode {
    let entries = match std::fs::read_dir(&args.dir) {
        Ok(rd) => rd,
        Err(e) => {
            eprintln!("error: {}: {e}", args.dir.display());
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let mut files: Vec<(PathBuf, FileFormat)> = Vec::new();
    for entry in entries.flatten() {
        let path = entry.path();
        let ext = path.extension().and_then(|e| e.to_str()).map(|e| e.to_ascii_lowercase());
        match ext.as_deref() {
            Some("tsp") => files.push((path, FileFormat::Tsplib)),
            Some("mcut") => files.push((path, FileFormat::Mcut)),
            _ => {}
        }
    }
    if files.is_empty() {
        eprintln!("error: no instances found in {}", args.dir.display());
        return ExitCode::from(EXIT_PARSE);
    }

    let mut instances = Vec::new();
    let mut failed = false;
    for (path, format) in files {
        match load_instance(&path, format) {
            Ok((name, matrix)) => instances.push((name, matrix)),
            Err(message) => {
                eprintln!("error: {}: {message}", path.display());
                failed = true;
            }
        }
    }
    if failed {
        return ExitCode::from(EXIT_PARSE);
    }
    instances.sort_by(|a, b| a.0.cmp(&b.0));

    let mut reports = Vec::new();
    for (name, matrix) in &instances {
        for &algorithm in &args.algorithms {
            let solved = match solve_dyn(matrix, algorithm, &args.policy) {
                Ok(s) => s,
                Err(e) => return solve_error_exit(&e),
            };
            reports.push(report_from(name, matrix, algorithm, &solved));
        }
    }

    let format = match args.output {
        BenchOutputArg::Csv => ReportFormat::Csv,
        BenchOutputArg::Md => ReportFormat::Markdown,
    };
    let rendered = render(&reports, format);
    match &args.out_file {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(EXIT_PARSE);
            }
        }
        None => print!("{rendered}"),
    }
    ExitCode::SUCCESS
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    let (_, matrix) = match load_instance(&args.input, args.format) {
        Ok(loaded) => loaded,
        Err(message) => {
            eprintln!("error: {message}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let solved = match solve_dyn(&matrix, args.algorithm, &args.policy) {
        Ok(s) => s,
        Err(e) => return solve_error_exit(&e),
    };
    let matches = match (&matrix, solved.cut_weight) {
        (DynWeightMatrix::Int(_), WeightValue::Int(got)) => {
            args.expect.fract() == 0.0 && got == args.expect as i64
        }
        (DynWeightMatrix::Real(m), value) => {
            let eps = args.policy.epsilon.unwrap_or_else(|| m.epsilon());
            (value.as_f64() - args.expect).abs() <= eps
        }
        (DynWeightMatrix::Int(_), WeightValue::Real(got)) => got == args.expect,
    };
    println!("computed {} expected {}", solved.cut_weight, args.expect);
    if matches {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_MISMATCH)
    }
}
