//! Command-line front end: an expression language for generating functions,
//! text/JSON/CSV output, OEIS b-file comparison and the `riordan` binary's
//! command dispatch.

pub mod bfile;
pub mod commands;
pub mod expr;
pub mod output;

pub use commands::{execute, run, Cli, Command};
pub use expr::{parse_expr, EvalError, Expr, ParseError};
pub use output::{Format, Style};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Math(#[from] riordan::Error),
    #[error(transparent)]
    BFile(#[from] bfile::BFileError),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Every error is a usage or input problem.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
