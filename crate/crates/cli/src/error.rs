use std::io;
use std::path::PathBuf;

use sombor_core::{GraphError, ParseError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error("{context}: {source}")]
    Parse {
        context: String,
        #[source]
        source: ParseError,
    },

    #[error("{}: {source}", path.display())]
    Read {
        path: PathBuf,
        #[source]
        source: io::Error,
    },

    #[error("writing output: {0}")]
    Write(#[source] io::Error),
}

impl CliError {
    pub fn parse(context: impl Into<String>, source: ParseError) -> Self {
        Self::Parse {
            context: context.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) | Self::Graph(_) | Self::Parse { .. } => 2,
            Self::Read { .. } | Self::Write(_) => 3,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        Self::Write(e)
    }
}
