//! Command-line front end shared by the `mcda` binary and the tests.
//!
//! Exit codes: 0 success, 2 input or parse error, 3 inconsistent judgments.
//! Errors go to stderr as a single `code: message` line.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::net::{IpAddr, SocketAddr};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::ahp::{weigh, ConsistencyReport};
use crate::aras::evaluate;
use crate::error::Error;
use crate::io::{
    format_number, parse_pairwise_csv, parse_weights_csv, read_decision_csv, render_json, serialize_result_json,
    AhpJson, SensitivityJson,
};
use crate::model::{DecisionMatrix, EvaluationResult, PipelineMode, WeightVector};
use crate::sensitivity::{weight_sweep_with_resolution, SensitivityReport, DEFAULT_RESOLUTION};

/// Environment variable that replaces the built-in default mode.
pub const MODE_ENV: &str = "MCDA_DEFAULT_MODE";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "mcda", version, about = "AHP weighting and ARAS ranking of alternatives")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank the alternatives of a decision CSV.
    Rank {
        #[command(flatten)]
        input: MatrixArgs,
        /// Write the result JSON here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Print a table instead of JSON.
        #[arg(long)]
        pretty: bool,
    },
    /// Derive criterion weights from pairwise judgments (repeat to aggregate experts).
    Ahp {
        #[arg(long, required = true)]
        pairwise: Vec<PathBuf>,
        #[arg(long)]
        allow_inconsistent: bool,
        #[arg(long)]
        pretty: bool,
    },
    /// Sweep one criterion's weight and report K trajectories.
    Sweep {
        #[command(flatten)]
        input: MatrixArgs,
        #[arg(long)]
        criterion: String,
        /// Comma-separated weights in (0, 1).
        #[arg(long, value_delimiter = ',', num_args = 1.., allow_negative_numbers = true)]
        grid: Vec<f64>,
        /// Scan resolution of the stability interval.
        #[arg(long, default_value_t = DEFAULT_RESOLUTION)]
        resolution: f64,
        #[arg(long)]
        pretty: bool,
    },
    /// Serve the HTTP API.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        bind: IpAddr,
        /// Allow browser requests from this origin.
        #[arg(long)]
        cors: Option<String>,
    },
}

#[derive(Debug, Args)]
struct MatrixArgs {
    #[arg(long)]
    input: PathBuf,
    /// Weights as JSON (`[..]` or `{"weights": [..]}`) or a CSV line.
    #[arg(long)]
    weights: Option<PathBuf>,
    /// paper-2011 or standard.
    #[arg(long)]
    mode: Option<String>,
    /// Rescale the weights to sum to 1 instead of rejecting them.
    #[arg(long)]
    renormalize: bool,
}

struct Failure {
    code: &'static str,
    message: String,
    exit: i32,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self {
            code: e.code(),
            message: e.to_string(),
            exit: EXIT_INPUT,
        }
    }
}

fn failure(code: &'static str, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
        exit: EXIT_INPUT,
    }
}

/// Runs the CLI with the default mode taken from [`MODE_ENV`].
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env_mode = std::env::var(MODE_ENV).ok();
    run_with_env(args, env_mode.as_deref(), stdout, stderr)
}

/// Runs the CLI; `env_mode` stands in for the [`MODE_ENV`] variable.
pub fn run_with_env<I, T>(args: I, env_mode: Option<&str>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let text = e.to_string();
            let line = text.lines().next().unwrap_or_default().trim_start_matches("error: ");
            let _ = writeln!(stderr, "UsageError: {line}");
            return EXIT_INPUT;
        }
    };
    match execute(cli.command, env_mode, stdout) {
        Ok(code) => code,
        Err(f) => {
            let message = f.message.replace('\n', " ");
            let _ = writeln!(stderr, "{}: {}", f.code, message);
            f.exit
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| failure("ParseError", format!("cannot read {}: {e}", path.display())))
}

fn resolve_mode(flag: Option<&str>, env_mode: Option<&str>) -> Result<PipelineMode, Failure> {
    match flag.or(env_mode) {
        Some(text) => text.parse().map_err(|e: String| failure("ModeError", e)),
        None => Ok(PipelineMode::default()),
    }
}

fn load_weights(path: &Path) -> Result<Vec<f64>, Failure> {
    let text = read_text(path)?;
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') || trimmed.starts_with('{') {
        #[derive(serde::Deserialize)]
        #[serde(untagged)]
        enum WeightsDoc {
            Bare(Vec<f64>),
            Wrapped { weights: Vec<f64> },
        }
        let doc: WeightsDoc =
            serde_json::from_str(&text).map_err(|e| failure("ParseError", format!("{}: {e}", path.display())))?;
        Ok(match doc {
            WeightsDoc::Bare(w) | WeightsDoc::Wrapped { weights: w } => w,
        })
    } else {
        Ok(parse_weights_csv(&text)?)
    }
}

fn load_inputs(
    args: &MatrixArgs,
    env_mode: Option<&str>,
) -> Result<(DecisionMatrix, WeightVector, PipelineMode), Failure> {
    let mode = resolve_mode(args.mode.as_deref(), env_mode)?;
    let (matrix, embedded) = read_decision_csv(&read_text(&args.input)?)?;
    let raw = match &args.weights {
        Some(path) => load_weights(path)?,
        None => embedded.ok_or_else(|| {
            failure(
                "MissingWeights",
                "no weight row in the input and no --weights file given",
            )
        })?,
    };
    let weights = if args.renormalize {
        WeightVector::renormalized(raw)?
    } else {
        WeightVector::new(raw)?
    };
    let (matrix, weights) = crate::model::validate_matrix(matrix, weights)?;
    Ok((matrix, weights, mode))
}

fn execute(command: Command, env_mode: Option<&str>, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let mut emit = |text: String| {
        stdout
            .write_all(text.as_bytes())
            .map_err(|e| failure("IoError", e.to_string()))
    };
    match command {
        Command::Rank { input, output, pretty } => {
            let (matrix, weights, mode) = load_inputs(&input, env_mode)?;
            let result = evaluate(&matrix, &weights, mode)?;
            let text = if pretty {
                rank_table(&result)
            } else {
                serialize_result_json(&result)
            };
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| failure("IoError", format!("cannot write {}: {e}", path.display())))?,
                None => emit(text)?,
            }
            Ok(EXIT_OK)
        }
        Command::Ahp {
            pairwise,
            allow_inconsistent,
            pretty,
        } => {
            let matrices = pairwise
                .iter()
                .map(|path| Ok(parse_pairwise_csv(&read_text(path)?)?))
                .collect::<Result<Vec<_>, Failure>>()?;
            let (weights, report) = weigh(&matrices)?;
            emit(if pretty {
                ahp_table(&weights, &report)
            } else {
                render_json(&AhpJson::new(&weights, &report))
            })?;
            if !report.acceptable && !allow_inconsistent {
                return Err(Failure {
                    code: "InconsistentJudgments",
                    message: format!(
                        "consistency ratio {} is not below 0.10 (pass --allow-inconsistent to accept)",
                        format_number(report.consistency_ratio)
                    ),
                    exit: EXIT_INCONSISTENT,
                });
            }
            Ok(EXIT_OK)
        }
        Command::Sweep {
            input,
            criterion,
            grid,
            resolution,
            pretty,
        } => {
            let (matrix, weights, mode) = load_inputs(&input, env_mode)?;
            let report = weight_sweep_with_resolution(&matrix, &weights, mode, &criterion, &grid, resolution)?;
            emit(if pretty {
                sweep_table(&report)
            } else {
                render_json(&SensitivityJson::from(&report))
            })?;
            Ok(EXIT_OK)
        }
        Command::Serve { port, bind, cors } => {
            let addr = SocketAddr::new(bind, port);
            let runtime = tokio::runtime::Runtime::new().map_err(|e| failure("IoError", e.to_string()))?;
            eprintln!("listening on http://{addr}");
            runtime
                .block_on(crate::api::serve(
                    addr,
                    crate::api::ServiceOptions { cors_origin: cors },
                ))
                .map_err(|e| failure("IoError", e.to_string()))?;
            Ok(EXIT_OK)
        }
    }
}

fn rank_table(r: &EvaluationResult) -> String {
    let width = r.alternatives.iter().map(String::len).max().unwrap_or(0).max(11);
    let mut out = String::new();
    let _ = writeln!(out, "mode: {}", r.mode);
    let _ = writeln!(out, "{:>4}  {:<width$}  {:>10}  {:>8}", "rank", "alternative", "S", "K");
    let _ = writeln!(
        out,
        "{:>4}  {:<width$}  {:>10.6}  {:>8.4}",
        "-", "A0 (optimal)", r.s_scores[0], r.k_degrees[0]
    );
    for (pos, name) in r.ranking.iter().enumerate() {
        let i = r.alternatives.iter().position(|a| a == name).unwrap() + 1;
        let _ = writeln!(
            out,
            "{:>4}  {:<width$}  {:>10.6}  {:>8.4}",
            pos + 1,
            name,
            r.s_scores[i],
            r.k_degrees[i]
        );
    }
    out
}

fn ahp_table(w: &WeightVector, report: &ConsistencyReport) -> String {
    let mut out = String::new();
    for (j, x) in w.as_slice().iter().enumerate() {
        let _ = writeln!(out, "w{:<3} {:.6}", j + 1, x);
    }
    let _ = writeln!(out, "lambda_max {:.6}", report.lambda_max);
    let _ = writeln!(out, "CI         {:.6}", report.consistency_index);
    let _ = writeln!(out, "RI         {:.2}", report.random_index);
    let _ = writeln!(
        out,
        "CR         {:.6} ({})",
        report.consistency_ratio,
        if report.acceptable {
            "acceptable"
        } else {
            "inconsistent"
        }
    );
    out
}

fn sweep_table(r: &SensitivityReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "criterion {} (baseline {})",
        r.criterion,
        format_number(r.baseline_weight)
    );
    for (g, ranking) in r.grid.iter().zip(&r.rankings) {
        let _ = writeln!(out, "{:>8.4}  {}", g, ranking.join(" > "));
    }
    match r.stability_interval {
        Some(s) => {
            let _ = writeln!(
                out,
                "top unchanged within ({}, {})",
                format_number(s.low),
                format_number(s.high)
            );
        }
        None => {
            let _ = writeln!(out, "top alternative tied at baseline");
        }
    }
    out
}
