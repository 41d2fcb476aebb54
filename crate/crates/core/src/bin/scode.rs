//! Command-line front end: deterministic text output for scripted
//! experiments over Grassmannians, Pluecker coordinates, decoding balls,
//! decoders, the operator channel, and transversal problems.
//!
//! Exit codes: 0 success, 1 usage error (bad flags, malformed files),
//! 2 infeasible instance or enumeration budget exceeded. The environment
//! variable `SCHUBERT_ENUM_BUDGET` overrides the enumeration budget.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use schubert_codes::format::{matrix_block, parse_matrices, parse_single_matrix, write_matrices};
use schubert_codes::grassmann::all_index_tuples;
use schubert_codes::{
    ball_linear_system, ball_members_by_distance, enumerate_grassmannian, intersection_number,
    list_decode, min_distance_decode, pluecker_embed, transmit, transversal_solve, BallScope,
    ChannelConfig, ChannelError, CodeError, DecodeMethod, DecodeResult, Field, GrassmannError,
    Metric, SchubertError, Subspace, SubspaceCode, DEFAULT_ENUM_BUDGET,
};

#[derive(Parser)]
#[command(
    name = "scode",
    version,
    about = "Subspace codes and Schubert-variety decoding balls over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Grassmannian listings
    Grass {
        #[command(subcommand)]
        cmd: GrassCmd,
    },
    /// Pluecker coordinates
    Pluecker {
        #[command(subcommand)]
        cmd: PlueckerCmd,
    },
    /// Decoding balls around a center subspace
    Ball {
        #[command(subcommand)]
        cmd: BallCmd,
    },
    /// Distance between two subspaces
    Distance {
        /// Matrix file of the first subspace
        #[arg(long)]
        a: PathBuf,
        /// Matrix file of the second subspace
        #[arg(long)]
        b: PathBuf,
        #[arg(long, value_enum)]
        metric: MetricArg,
    },
    /// Minimum-distance and list decoding
    Decode {
        #[command(subcommand)]
        cmd: DecodeCmd,
    },
    /// Operator-channel transmission
    Channel {
        /// Matrix file of the sent subspace
        #[arg(long)]
        sent: PathBuf,
        /// Dimension decrease
        #[arg(long)]
        erasures: usize,
        /// Dimension increase
        #[arg(long)]
        insertions: usize,
        /// Sampler seed
        #[arg(long)]
        seed: u64,
    },
    /// Schubert-calculus counts
    Schubert {
        #[command(subcommand)]
        cmd: SchubertCmd,
    },
    /// All m-dimensional subspaces meeting every input nontrivially
    Transversal {
        /// Matrix file listing the input subspaces
        #[arg(long)]
        inputs: PathBuf,
        /// Dimension of the sought transversal subspaces
        #[arg(long)]
        m: usize,
    },
}

#[derive(Subcommand)]
enum GrassCmd {
    /// List the canonical generator matrices of Grass_q(k,n)
    Enumerate {
        /// Field spec: `p` or `p^m:c0,c1,...,cm`
        #[arg(long)]
        field: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum PlueckerCmd {
    /// Normalized Pluecker coordinates of a subspace
    Embed {
        /// Matrix file of the subspace
        #[arg(long)]
        matrix: PathBuf,
    },
}

#[derive(Subcommand)]
enum BallCmd {
    /// Linear equations cutting the ball out of the Grassmannian
    Equations {
        #[arg(long)]
        center: PathBuf,
        #[arg(long)]
        radius: usize,
    },
    /// List the members of the ball
    Members {
        #[arg(long)]
        center: PathBuf,
        #[arg(long)]
        radius: usize,
        #[arg(long, value_enum)]
        metric: MetricArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Oracle)]
        method: MethodArg,
    },
}

#[derive(Subcommand)]
enum DecodeCmd {
    /// All closest codewords to the received word
    Min {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        received: PathBuf,
        #[arg(long, value_enum, default_value_t = MetricArg::Injection)]
        metric: MetricArg,
    },
    /// All codewords within the given radius of the received word
    List {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        received: PathBuf,
        #[arg(long)]
        radius: usize,
        #[arg(long, value_enum, default_value_t = MetricArg::Injection)]
        metric: MetricArg,
        #[arg(long, value_enum, default_value_t = MethodArg::Oracle)]
        method: MethodArg,
    },
}

#[derive(Subcommand)]
enum SchubertCmd {
    /// Number of m-spaces meeting k*m generic k-spaces in k+m space
    Number {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MetricArg {
    Injection,
    Subspace,
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Metric {
        match m {
            MetricArg::Injection => Metric::Injection,
            MetricArg::Subspace => Metric::Subspace,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Oracle,
    Pluecker,
}

enum CliError {
    Usage(String),
    Infeasible(String),
}

impl CliError {
    fn usage(e: impl std::fmt::Display) -> CliError {
        CliError::Usage(e.to_string())
    }
}

impl From<GrassmannError> for CliError {
    fn from(e: GrassmannError) -> Self {
        match e {
            GrassmannError::BudgetExceeded { .. } => CliError::Infeasible(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<SchubertError> for CliError {
    fn from(e: SchubertError) -> Self {
        match e {
            SchubertError::Grassmann(GrassmannError::BudgetExceeded { .. }) => {
                CliError::Infeasible(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<ChannelError> for CliError {
    fn from(e: ChannelError) -> Self {
        CliError::Infeasible(e.to_string())
    }
}

impl From<CodeError> for CliError {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::Grassmann(GrassmannError::BudgetExceeded { .. })
            | CodeError::CannotReachSize { .. } => CliError::Infeasible(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(1);
        }
    };
    match run(cli) {
        Ok(output) => print!("{output}"),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
        Err(CliError::Infeasible(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}

fn enum_budget() -> Result<u64, CliError> {
    match std::env::var("SCHUBERT_ENUM_BUDGET") {
        Ok(v) => v.trim().parse::<u64>().map_err(|_| {
            CliError::Usage(format!("SCHUBERT_ENUM_BUDGET must be an integer, got `{v}`"))
        }),
        Err(_) => Ok(DEFAULT_ENUM_BUDGET),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_subspace(path: &Path) -> Result<Subspace, CliError> {
    let (_, m) = parse_single_matrix(&read_file(path)?).map_err(CliError::usage)?;
    Subspace::canonicalize(&m).map_err(CliError::from)
}

fn load_subspace_list(path: &Path) -> Result<(Field, Vec<Subspace>), CliError> {
    let (field, matrices) = parse_matrices(&read_file(path)?).map_err(CliError::usage)?;
    let subspaces = matrices
        .iter()
        .map(Subspace::canonicalize)
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::from)?;
    Ok((field, subspaces))
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.cmd {
        Cmd::Grass { cmd: GrassCmd::Enumerate { field, k, n } } => {
            let field = Field::parse_spec(&field).map_err(CliError::usage)?;
            if k < 1 || k > n {
                return Err(CliError::Usage(format!("need 1 <= k <= n, got k={k}, n={n}")));
            }
            let subspaces: Vec<Subspace> =
                enumerate_grassmannian(&field, k, n, enum_budget()?)?.collect();
            Ok(write_matrices(&field, subspaces.iter().map(|s| s.generator())))
        }
        Cmd::Pluecker { cmd: PlueckerCmd::Embed { matrix } } => {
            let subspace = load_subspace(&matrix)?;
            let v = pluecker_embed(&subspace)?;
            let coords: Vec<String> = v.coords().iter().map(|c| c.to_string()).collect();
            Ok(format!("{}\n", coords.join(":")))
        }
        Cmd::Ball { cmd: BallCmd::Equations { center, radius } } => {
            let center = load_subspace(&center)?;
            let forms = ball_linear_system(&center, radius)?;
            let tuples = all_index_tuples(center.ambient(), center.dim());
            let mut out = String::new();
            for form in &forms {
                let pairs: Vec<String> = form
                    .coeffs()
                    .iter()
                    .zip(&tuples)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, t)| format!("{t}:{c}"))
                    .collect();
                out.push_str(&pairs.join(" "));
                out.push('\n');
            }
            Ok(out)
        }
        Cmd::Ball { cmd: BallCmd::Members { center, radius, metric, method } } => {
            let center = load_subspace(&center)?;
            let field = center.field().clone();
            let members: Vec<Subspace> = match method {
                MethodArg::Oracle => ball_members_by_distance(
                    &center,
                    radius,
                    metric.into(),
                    BallScope::ConstantDimension,
                    enum_budget()?,
                )?,
                MethodArg::Pluecker => {
                    if metric != MetricArg::Injection {
                        return Err(CliError::Usage(
                            "the pluecker method works in the injection metric".into(),
                        ));
                    }
                    let system = ball_linear_system(&center, radius)?;
                    let mut hits = Vec::new();
                    for candidate in enumerate_grassmannian(
                        &field,
                        center.dim(),
                        center.ambient(),
                        enum_budget()?,
                    )? {
                        let coords = pluecker_embed(&candidate)?;
                        if system
                            .iter()
                            .all(|form| form.evaluate(&field, coords.coords()).is_zero())
                        {
                            hits.push(candidate);
                        }
                    }
                    hits
                }
            };
            Ok(write_matrices(&field, members.iter().map(|s| s.generator())))
        }
        Cmd::Distance { a, b, metric } => {
            let a = load_subspace(&a)?;
            let b = load_subspace(&b)?;
            let metric: Metric = metric.into();
            let d = metric.distance(&a, &b)?;
            Ok(format!("{d}\n"))
        }
        Cmd::Decode { cmd } => {
            let (code_path, received_path) = match &cmd {
                DecodeCmd::Min { code, received, .. } => (code, received),
                DecodeCmd::List { code, received, .. } => (code, received),
            };
            let (field, words) = load_subspace_list(code_path)?;
            let code = SubspaceCode::new(words)?;
            let received = load_subspace(received_path)?;
            let result = match cmd {
                DecodeCmd::Min { metric, .. } => {
                    min_distance_decode(&code, &received, metric.into())?
                }
                DecodeCmd::List { radius, metric, method, .. } => {
                    let method = match method {
                        MethodArg::Oracle => DecodeMethod::Oracle,
                        MethodArg::Pluecker => DecodeMethod::Pluecker,
                    };
                    list_decode(&code, &received, radius, metric.into(), method)?
                }
            };
            Ok(render_decode_result(&field, &result))
        }
        Cmd::Channel { sent, erasures, insertions, seed } => {
            let sent = load_subspace(&sent)?;
            let cfg = ChannelConfig { erasures, insertions, seed };
            let received = transmit(&sent, &cfg)?;
            Ok(write_matrices(sent.field(), [received.generator()]))
        }
        Cmd::Schubert { cmd: SchubertCmd::Number { k, m } } => {
            if k < 1 || m < 1 {
                return Err(CliError::Usage(format!("need k, m >= 1, got k={k}, m={m}")));
            }
            Ok(format!("{}\n", intersection_number(k, m)))
        }
        Cmd::Transversal { inputs, m } => {
            let (field, subspaces) = load_subspace_list(&inputs)?;
            let solutions = transversal_solve(&subspaces, m, enum_budget()?)?;
            let mut out = format!("{} solutions\n", solutions.len());
            if !solutions.is_empty() {
                out.push('\n');
                out.push_str(&write_matrices(&field, solutions.iter().map(|s| s.generator())));
            }
            Ok(out)
        }
    }
}

fn render_decode_result(field: &Field, result: &DecodeResult) -> String {
    let mut out = format!("field {}\n", field.spec_string());
    out.push_str(&format!("# unique {}\n", result.is_unique()));
    out.push_str(&format!("# count {}\n", result.len()));
    for (i, (word, distance)) in result.entries().iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&format!("# distance {distance}\n"));
        out.push_str(&matrix_block(word.generator()));
        out.push('\n');
    }
    out
}
