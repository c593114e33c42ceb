//! `garr`: classify graphs, compute projective dimensions and Betti
//! tables of graphic arrangement derivation modules, run the verification
//! suites, and search for high-pd graphs.

use clap::{Parser, Subcommand};
use cli::{commands, verify, InputFormat, OutputFormat};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "garr",
    about = "Graphic arrangements: chordality classification, derivation-module \
             resolutions, and mechanical verification suites",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a graph: chordal / weakly chordal flags, a witness
    /// chordless cycle, and the predicted pd bracket.
    Classify {
        /// Path, "-" for stdin, or a builtin like cycle:5, antihole:6,
        /// complete:4, path:3, edgeless:2.
        input: String,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: InputFormat,
        #[arg(long, value_enum, default_value = "text")]
        out: OutputFormat,
    },
    /// Compute the projective dimension (and optionally the Betti table)
    /// of the derivation module, with the predicted bracket and verdict.
    Pd {
        input: String,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: InputFormat,
        #[arg(long, value_enum, default_value = "text")]
        out: OutputFormat,
        /// Also print the graded Betti table.
        #[arg(long)]
        betti: bool,
    },
    /// Run a verification suite; exits 0 on full success, 1 with a JSON
    /// failure list otherwise.
    Verify {
        /// One of: main-theorem, antihole, saito, identities, b-sequence.
        suite: String,
        /// Vertex bound for graph sweeps.
        #[arg(long)]
        n: Option<usize>,
        /// Dimension bound for symbolic families.
        #[arg(long)]
        ell: Option<usize>,
        /// Worker threads for sweeps (0 = rayon default).
        #[arg(long, default_value = "0")]
        threads: usize,
        /// Seed for sampled checks.
        #[arg(long, default_value = "20240601")]
        seed: u64,
        /// Number of sampled instances where applicable.
        #[arg(long)]
        samples: Option<usize>,
        /// Maximum degree for Hilbert-oracle cross-checks.
        #[arg(long, default_value = "6")]
        max_degree: i64,
        #[arg(long, value_enum, default_value = "text")]
        out: OutputFormat,
    },
    /// Exhaustively search n-vertex graphs (up to isomorphism) whose graph
    /// and complement have no chordless cycle of length >= 6, reporting
    /// those of projective dimension >= 3.
    SearchCounterexamples {
        #[arg(long, default_value = "7")]
        n: usize,
        /// Append-only JSON-lines checkpoint file; existing entries are
        /// skipped on restart.
        #[arg(long)]
        resume: Option<String>,
        #[arg(long, default_value = "0")]
        threads: usize,
        #[arg(long, value_enum, default_value = "text")]
        out: OutputFormat,
    },
    /// Print an edge-completion sequence for a weakly chordal graph.
    Sequence {
        input: String,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: InputFormat,
        #[arg(long, value_enum, default_value = "text")]
        out: OutputFormat,
        /// Also run the deletion-sequence surjectivity check per step.
        #[arg(long)]
        check_b: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Classify { input, format, out } => commands::classify(&input, format, out),
        Command::Pd {
            input,
            format,
            out,
            betti,
        } => commands::pd(&input, format, out, betti),
        Command::Verify {
            suite,
            n,
            ell,
            threads,
            seed,
            samples,
            max_degree,
            out,
        } => verify::run(verify::VerifyConfig {
            suite,
            n,
            ell,
            threads,
            seed,
            samples,
            max_degree,
            json: out == OutputFormat::Json,
        }),
        Command::SearchCounterexamples {
            n,
            resume,
            threads,
            out,
        } => commands::search_counterexamples(n, resume.as_deref(), threads, out),
        Command::Sequence {
            input,
            format,
            out,
            check_b,
        } => commands::sequence(&input, format, out, check_b),
    };
    ExitCode::from(code)
}
