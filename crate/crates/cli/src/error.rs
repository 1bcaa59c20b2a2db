use std::fmt;

/// Exit codes: 0 success / all predicates true, 1 some predicate false,
/// 2 usage or parse problems, 3 a resource bound was exceeded.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Bound(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Bound(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Bound(msg) => f.write_str(msg),
            CliError::Io(err) => write!(f, "{err}"),
        }
    }
}

impl From<lmr_core::Error> for CliError {
    fn from(err: lmr_core::Error) -> CliError {
        CliError::Usage(err.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> CliError {
        CliError::Io(err)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
