//! Command-line front end for `pretri-core`.

pub mod commands;
pub mod input;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("budget of {0} exceeded")]
    Budget(u64),
}
