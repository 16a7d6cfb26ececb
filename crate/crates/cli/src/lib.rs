//! Command-line front end: grids of line images, boundary skeletons,
//! classification, verification reports and the pillar dimensions.

mod commands;
pub mod config;
pub mod output;

pub use commands::run;
pub use config::{Args, Command, Format, LinesFile, SpecFile};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Numerical(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for configuration problems, 3 for numerical failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}
