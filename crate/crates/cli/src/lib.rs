//! Library surface of the `garr` binary: input resolution, the
//! subcommand implementations and the verification suites, shared with
//! the acceptance test-suite.

pub mod commands;
pub mod input;
pub mod verify;

use clap::ValueEnum;

/// Exit codes: 0 success, 1 verification failure, 2 parse error,
/// 3 resource limit, 4 precondition violation.
pub const EXIT_VERIFICATION: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;
pub const EXIT_PRECONDITION: u8 = 4;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
    Dot,
}
