//! Batch command-line front end with stable JSON input and output.
//!
//! Every subcommand reads one JSON input file, writes a deterministic JSON
//! report to standard output (no timestamps, fixed field order), optionally
//! writes a machine-readable artifact with `--output`, and exits with
//! 0 = success/verified, 1 = property refuted, 2 = input or usage error.
//! Rationals cross the file boundary as lowest-terms `"p/q"` strings.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Error;
use crate::hankel::{hankel_transform, sm_check, SmRefutation, SmVerdict};
use crate::lanczos::{lanczos_path_weights_with_cap, DEFAULT_LANCZOS_DEPTH_CAP};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::sequence::MomentPrefix;
use crate::tuples::{lgv_sum_with_caps, DEFAULT_TUPLE_HALF_LENGTH_CAP, DEFAULT_TUPLE_WIDTH_CAP};
use crate::verify::verify_theorem_with;
use crate::walk::{closed_walk_moments_with_cap, ExplicitGraph, WalkGraph, DEFAULT_WALK_CAP};
use crate::weights::{
    moments_from_weights_with_cap, weights_from_moments, LevelWeights, WeightExtraction,
};
use crate::DEFAULT_ENUMERATION_CAP;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Sequence file: `{"a0":"1/1","terms":["1/1","1/1","2/1",...]}`.
/// `a0` must equal `terms[0]`.
#[derive(Debug, Serialize, Deserialize)]
pub struct SequenceFile {
    pub a0: String,
    pub terms: Vec<String>,
}

/// Weights file: `{"lambda":["1/1",...],"terminated":false}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct WeightsFile {
    pub lambda: Vec<String>,
    pub terminated: bool,
}

/// Graph file: `{"vertices":["0","1"],"edges":[[0,1,"1/1"]],"root":0}`.
#[derive(Debug, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<(usize, usize, String)>,
    pub root: usize,
}

#[derive(Debug, Parser)]
#[command(
    name = "momentwalk",
    version,
    about = "Exact-arithmetic batch tools for moment sequences, Hankel transforms, and walk enumeration"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Input JSON file.
    #[arg(long)]
    input: PathBuf,
    /// Optional machine-readable artifact file.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Override the relevant enumeration/depth cap.
    #[arg(long)]
    cap: Option<usize>,
    /// Report format; only "json" exists.
    #[arg(long, default_value = "json")]
    format: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Apply the k×k Hankel determinant transform to a sequence.
    Transform {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Check the Stieltjes-moment necessary conditions on a sequence.
    CheckSm {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Recover level weights from a sequence.
    ExtractWeights {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Enumerate moments of a weight system (a0 = 1).
    EnumerateMoments {
        /// Largest moment index to produce.
        #[arg(long = "depth", alias = "n")]
        depth: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compare the tuple enumeration against the Hankel determinants.
    LgvCheck {
        #[arg(long)]
        k: usize,
        /// Largest index to compare.
        #[arg(long = "depth", alias = "n")]
        depth: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Closed-walk moments of a graph (explicit graph file, or weights file
    /// plus --k for the product graph).
    WalkSum {
        #[arg(long)]
        k: Option<usize>,
        /// Largest half-length to sum.
        #[arg(long = "depth", alias = "n")]
        depth: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Reduce a bipartite graph to path-graph level weights.
    Lanczos {
        #[arg(long = "depth", alias = "n")]
        depth: usize,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run the full transform/walk verification pipeline on a sequence.
    Verify {
        #[arg(long)]
        k: usize,
        /// Largest index to compare (defaults to every computable index).
        #[arg(long = "depth", alias = "n")]
        depth: Option<usize>,
        #[command(flatten)]
        common: CommonArgs,
    },
}

/// Deterministic report envelope. Optional sections appear only for the
/// subcommands that produce them.
#[derive(Debug, Serialize)]
struct Report {
    command: String,
    input_sha256: String,
    verdict: String,
    exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    a0: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    terms: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    depth_unshifted: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    depth_shifted: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    depth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    refutation: Option<RefutationSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    terminated: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    inconsistent_index: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    beta_sq: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    walk_moments: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    comparisons: Option<Vec<ComparisonSection>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_lambda: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_terminated: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_nonnegative: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Debug, Serialize)]
struct RefutationSection {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    shift: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    index: Option<usize>,
}

#[derive(Debug, Serialize)]
struct ComparisonSection {
    n: usize,
    determinant: String,
    walk: String,
    equal: bool,
}

impl Report {
    fn new(command: String, input_sha256: String, verdict: &str, exit_code: i32) -> Self {
        Report {
            command,
            input_sha256,
            verdict: verdict.to_string(),
            exit_code,
            a0: None,
            terms: None,
            depth_unshifted: None,
            depth_shifted: None,
            depth: None,
            refutation: None,
            lambda: None,
            terminated: None,
            inconsistent_index: None,
            beta_sq: None,
            walk_moments: None,
            comparisons: None,
            witness_lambda: None,
            witness_terminated: None,
            witness_nonnegative: None,
            error: None,
        }
    }
}

fn format_all(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn read_input(path: &Path) -> Result<(Vec<u8>, String), Error> {
    let bytes = fs::read(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let digest = sha256_hex(&bytes);
    Ok((bytes, digest))
}

fn parse_sequence(bytes: &[u8]) -> Result<MomentPrefix, Error> {
    let file: SequenceFile = serde_json::from_slice(bytes)
        .map_err(|e| Error::InvalidInput(format!("sequence file does not parse: {e}")))?;
    let terms = file
        .terms
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>, _>>()?;
    let a0 = parse_rational(&file.a0)?;
    let prefix = MomentPrefix::new(terms)?;
    if prefix.term(0) != &a0 {
        return Err(Error::InvalidInput(
            "sequence file a0 disagrees with terms[0]".into(),
        ));
    }
    Ok(prefix)
}

fn parse_weights(bytes: &[u8]) -> Result<LevelWeights, Error> {
    let file: WeightsFile = serde_json::from_slice(bytes)
        .map_err(|e| Error::InvalidInput(format!("weights file does not parse: {e}")))?;
    let lambda = file
        .lambda
        .iter()
        .map(|s| parse_rational(s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LevelWeights::new(lambda, file.terminated))
}

fn parse_graph(bytes: &[u8]) -> Result<ExplicitGraph, Error> {
    let file: GraphFile = serde_json::from_slice(bytes)
        .map_err(|e| Error::InvalidInput(format!("graph file does not parse: {e}")))?;
    let edges = file
        .edges
        .iter()
        .map(|(i, j, w)| Ok((*i, *j, parse_rational(w)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    ExplicitGraph::new(file.vertices, edges, file.root)
}

fn write_artifact<T: Serialize>(path: &Path, value: &T) -> Result<(), Error> {
    let body = to_pretty_json(value);
    fs::write(path, body)
        .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut body = serde_json::to_string_pretty(value).expect("report serialization is infallible");
    body.push('\n');
    body
}

fn sequence_artifact(terms: &[Rational]) -> SequenceFile {
    SequenceFile {
        a0: format_rational(&terms[0]),
        terms: format_all(terms),
    }
}

fn weights_artifact(lw: &LevelWeights) -> WeightsFile {
    WeightsFile {
        lambda: format_all(lw.lambda()),
        terminated: lw.is_terminated(),
    }
}

/// Run the CLI against `argv` (including the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ERROR,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let _ = write!(out, "{}", to_pretty_json(&report));
            report.exit_code
        }
        Err((echo, digest, e)) => {
            let _ = writeln!(err, "error: {e}");
            let mut report = Report::new(echo, digest, "error", EXIT_ERROR);
            report.error = Some(e.to_string());
            let _ = write!(out, "{}", to_pretty_json(&report));
            EXIT_ERROR
        }
    }
}

type Failure = (String, String, Error);

fn validate_flags(command: &Command) -> Result<(), Error> {
    let k = match command {
        Command::Transform { k, .. } | Command::LgvCheck { k, .. } | Command::Verify { k, .. } => {
            Some(*k)
        }
        Command::WalkSum { k, .. } => *k,
        _ => None,
    };
    if k == Some(0) {
        return Err(Error::InvalidInput("--k must be at least 1".into()));
    }
    if let Command::Lanczos { depth: 0, .. } = command {
        return Err(Error::InvalidInput("--depth must be at least 1".into()));
    }
    Ok(())
}

fn execute(command: &Command) -> Result<Report, Failure> {
    let common = match command {
        Command::Transform { common, .. }
        | Command::CheckSm { common }
        | Command::ExtractWeights { common }
        | Command::EnumerateMoments { common, .. }
        | Command::LgvCheck { common, .. }
        | Command::WalkSum { common, .. }
        | Command::Lanczos { common, .. }
        | Command::Verify { common, .. } => common,
    };
    let echo = command_echo(command);
    if let Err(e) = validate_flags(command) {
        return Err((echo, String::new(), e));
    }
    if common.format != "json" {
        return Err((
            echo,
            String::new(),
            Error::InvalidInput(format!("unknown format {:?}", common.format)),
        ));
    }
    let (bytes, digest) = match read_input(&common.input) {
        Ok(v) => v,
        Err(e) => return Err((echo, String::new(), e)),
    };
    let fail = |e: Error| (echo.clone(), digest.clone(), e);

    let report = match command {
        Command::Transform { k, common } => {
            let sequence = parse_sequence(&bytes).map_err(fail)?;
            let transformed = hankel_transform(&sequence, *k).map_err(fail)?;
            if let Some(path) = &common.output {
                write_artifact(path, &sequence_artifact(transformed.terms())).map_err(fail)?;
            }
            let mut report = Report::new(echo.clone(), digest.clone(), "verified", EXIT_OK);
            report.a0 = Some(format_rational(transformed.term(0)));
            report.terms = Some(format_all(transformed.terms()));
            report
        }
        Command::CheckSm { common: _ } => {
            let sequence = parse_sequence(&bytes).map_err(fail)?;
            let verdict = sm_check(&sequence);
            let mut report = match verdict {
                SmVerdict::ConsistentAtDepth { unshifted, shifted } => {
                    let mut report =
                        Report::new(echo.clone(), digest.clone(), "consistent-at-depth", EXIT_OK);
                    report.depth_unshifted = Some(unshifted);
                    report.depth_shifted = Some(shifted);
                    report.depth = Some(unshifted.min(shifted));
                    report
                }
                SmVerdict::Refuted(refutation) => {
                    let mut report =
                        Report::new(echo.clone(), digest.clone(), "refuted", EXIT_REFUTED);
                    report.refutation = Some(match refutation {
                        SmRefutation::NotPsd {
                            shift,
                            matrix,
                            witness,
                            value,
                        } => RefutationSection {
                            kind: "hankel-not-psd".into(),
                            shift: Some(shift),
                            matrix: Some(matrix.rows().iter().map(|row| format_all(row)).collect()),
                            witness: Some(format_all(&witness)),
                            value: Some(format_rational(&value)),
                            index: None,
                        },
                        SmRefutation::NonzeroWithZeroLeading { index } => RefutationSection {
                            kind: "nonzero-after-zero-leading-term".into(),
                            shift: None,
                            matrix: None,
                            witness: None,
                            value: None,
                            index: Some(index),
                        },
                    });
                    report
                }
            };
            report.a0 = Some(format_rational(sequence.term(0)));
            report
        }
        Command::ExtractWeights { common } => {
            let sequence = parse_sequence(&bytes).map_err(fail)?;
            match weights_from_moments(&sequence).map_err(fail)? {
                WeightExtraction::Weights(w) => {
                    if let Some(path) = &common.output {
                        write_artifact(path, &weights_artifact(&w)).map_err(fail)?;
                    }
                    let mut report = Report::new(echo.clone(), digest.clone(), "verified", EXIT_OK);
                    report.lambda = Some(format_all(w.lambda()));
                    report.terminated = Some(w.is_terminated());
                    report
                }
                WeightExtraction::Inconsistent { index } => {
                    let mut report =
                        Report::new(echo.clone(), digest.clone(), "refuted", EXIT_REFUTED);
                    report.inconsistent_index = Some(index);
                    report
                }
            }
        }
        Command::EnumerateMoments { depth, common } => {
            let weights = parse_weights(&bytes).map_err(fail)?;
            let cap = common.cap.unwrap_or(DEFAULT_ENUMERATION_CAP);
            let moments =
                moments_from_weights_with_cap(&weights, &crate::rational::int(1), *depth, cap)
                    .map_err(fail)?;
            if let Some(path) = &common.output {
                write_artifact(path, &sequence_artifact(moments.terms())).map_err(fail)?;
            }
            let mut report = Report::new(echo.clone(), digest.clone(), "verified", EXIT_OK);
            report.a0 = Some(format_rational(moments.term(0)));
            report.terms = Some(format_all(moments.terms()));
            report
        }
        Command::LgvCheck { k, depth, common } => {
            let weights = parse_weights(&bytes).map_err(fail)?;
            let n_cap = common.cap.unwrap_or(DEFAULT_TUPLE_HALF_LENGTH_CAP);
            let k_cap = common.cap.unwrap_or(DEFAULT_TUPLE_WIDTH_CAP);
            let moment_cap = common.cap.unwrap_or(DEFAULT_ENUMERATION_CAP);
            let one = crate::rational::int(1);
            let moments =
                moments_from_weights_with_cap(&weights, &one, depth + 2 * k - 2, moment_cap)
                    .map_err(fail)?;
            let transformed = hankel_transform(&moments, *k).map_err(fail)?;
            let mut rows = Vec::with_capacity(depth + 1);
            let mut all_equal = true;
            for n in 0..=*depth {
                let tuple_side =
                    lgv_sum_with_caps(&one, &weights, *k, n, n_cap, k_cap).map_err(fail)?;
                let det_side = transformed.term(n).clone();
                all_equal &= tuple_side == det_side;
                rows.push(ComparisonSection {
                    n,
                    determinant: format_rational(&det_side),
                    walk: format_rational(&tuple_side),
                    equal: tuple_side == det_side,
                });
            }
            let (verdict, code) = if all_equal {
                ("verified", EXIT_OK)
            } else {
                ("refuted", EXIT_REFUTED)
            };
            let mut report = Report::new(echo.clone(), digest.clone(), verdict, code);
            report.comparisons = Some(rows);
            report
        }
        Command::WalkSum { k, depth, common } => {
            let cap = common.cap.unwrap_or(DEFAULT_WALK_CAP);
            let graph = match k {
                Some(k) => {
                    let weights = parse_weights(&bytes).map_err(fail)?;
                    WalkGraph::product(*k, weights)
                }
                None => WalkGraph::Explicit(parse_graph(&bytes).map_err(fail)?),
            };
            let moments = closed_walk_moments_with_cap(&graph, *depth, cap).map_err(fail)?;
            let mut report = Report::new(echo.clone(), digest.clone(), "verified", EXIT_OK);
            report.walk_moments = Some(format_all(&moments));
            report
        }
        Command::Lanczos { depth, common } => {
            let graph = parse_graph(&bytes).map_err(fail)?;
            let cap = common.cap.unwrap_or(DEFAULT_LANCZOS_DEPTH_CAP);
            let reduced = lanczos_path_weights_with_cap(&graph, *depth, cap).map_err(fail)?;
            if let Some(path) = &common.output {
                write_artifact(path, &weights_artifact(&reduced.as_level_weights()))
                    .map_err(fail)?;
            }
            let mut report = Report::new(echo.clone(), digest.clone(), "verified", EXIT_OK);
            report.beta_sq = Some(format_all(reduced.beta_sq()));
            report.terminated = Some(reduced.is_terminated());
            report
        }
        Command::Verify { k, depth, common } => {
            let sequence = parse_sequence(&bytes).map_err(fail)?;
            let cap = common.cap.unwrap_or(DEFAULT_WALK_CAP);
            match verify_theorem_with(&sequence, *k, *depth, cap) {
                Ok(result) => {
                    if let Some(path) = &common.output {
                        write_artifact(path, &weights_artifact(&result.witness)).map_err(fail)?;
                    }
                    let (verdict, code) = if result.witness_nonnegative {
                        ("verified", EXIT_OK)
                    } else {
                        ("refuted", EXIT_REFUTED)
                    };
                    let mut report = Report::new(echo.clone(), digest.clone(), verdict, code);
                    report.lambda = Some(format_all(result.lambda.lambda()));
                    report.terminated = Some(result.lambda.is_terminated());
                    report.terms = Some(format_all(result.a_prime.terms()));
                    report.walk_moments = Some(format_all(&result.walk_moments));
                    report.comparisons = Some(
                        result
                            .comparisons
                            .iter()
                            .map(|row| ComparisonSection {
                                n: row.n,
                                determinant: format_rational(&row.determinant),
                                walk: format_rational(&row.walk),
                                equal: true,
                            })
                            .collect(),
                    );
                    report.witness_lambda = Some(format_all(result.witness.lambda()));
                    report.witness_terminated = Some(result.witness.is_terminated());
                    report.witness_nonnegative = Some(result.witness_nonnegative);
                    report
                }
                Err(Error::NotPathEnumerable { index }) => {
                    let mut report =
                        Report::new(echo.clone(), digest.clone(), "refuted", EXIT_REFUTED);
                    report.inconsistent_index = Some(index);
                    report
                }
                Err(e) => return Err(fail(e)),
            }
        }
    };
    Ok(report)
}

/// Canonical command echo: subcommand name followed by its flags in a fixed
/// order.
fn command_echo(command: &Command) -> String {
    let (name, k, depth, common): (&str, Option<usize>, Option<usize>, &CommonArgs) = match command
    {
        Command::Transform { k, common } => ("transform", Some(*k), None, common),
        Command::CheckSm { common } => ("check-sm", None, None, common),
        Command::ExtractWeights { common } => ("extract-weights", None, None, common),
        Command::EnumerateMoments { depth, common } => {
            ("enumerate-moments", None, Some(*depth), common)
        }
        Command::LgvCheck { k, depth, common } => ("lgv-check", Some(*k), Some(*depth), common),
        Command::WalkSum { k, depth, common } => ("walk-sum", *k, Some(*depth), common),
        Command::Lanczos { depth, common } => ("lanczos", None, Some(*depth), common),
        Command::Verify { k, depth, common } => ("verify", Some(*k), *depth, common),
    };
    let mut echo = name.to_string();
    if let Some(k) = k {
        echo.push_str(&format!(" --k {k}"));
    }
    if let Some(depth) = depth {
        echo.push_str(&format!(" --depth {depth}"));
    }
    if let Some(cap) = common.cap {
        echo.push_str(&format!(" --cap {cap}"));
    }
    echo.push_str(&format!(" --input {}", common.input.display()));
    if let Some(output) = &common.output {
        echo.push_str(&format!(" --output {}", output.display()));
    }
    echo
}
