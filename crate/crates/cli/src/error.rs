use std::fmt;
use std::path::PathBuf;

use serde::Serialize;

#[derive(Debug)]
pub enum CliError {
    Core(mw_core::Error),
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    /// Options that do not fit the command.
    Usage(String),
    /// Input that is well formed for the command but not a valid object.
    Invalid(String),
    /// The brute-force check disagreed with the fast path.
    Mismatch(String),
}

impl From<mw_core::Error> for CliError {
    fn from(e: mw_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Usage(m) | CliError::Invalid(m) | CliError::Mismatch(m) => f.write_str(m),
        }
    }
}

pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_GUARD: u8 = 3;
pub const EXIT_USAGE: u8 = 4;
pub const EXIT_MISMATCH: u8 = 1;

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_guard() => EXIT_GUARD,
            CliError::Core(_) | CliError::Io { .. } | CliError::Invalid(_) => EXIT_VALIDATION,
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Mismatch(_) => EXIT_MISMATCH,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Core(mw_core::Error::Parse { .. }) => "parse",
            CliError::Core(e) if e.is_guard() => "guard",
            CliError::Core(_) | CliError::Invalid(_) => "validation",
            CliError::Io { .. } => "io",
            CliError::Usage(_) => "usage",
            CliError::Mismatch(_) => "mismatch",
        }
    }

    pub fn report(&self) -> ErrorReport {
        let (line, column) = match self {
            CliError::Core(mw_core::Error::Parse { line, column, .. }) => (Some(*line), Some(*column)),
            _ => (None, None),
        };
        ErrorReport {
            error: ErrorBody {
                kind: self.kind(),
                message: self.to_string(),
                exit_code: self.exit_code(),
                line,
                column,
            },
        }
    }
}

#[derive(Serialize)]
pub struct ErrorReport {
    pub error: ErrorBody,
}

#[derive(Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
    pub exit_code: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub column: Option<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_are_distinct_per_class() {
        let parse = CliError::Core(mw_core::Error::Parse { line: 2, column: 7, message: "x".into() });
        assert_eq!(parse.exit_code(), EXIT_VALIDATION);
        let body = serde_json::to_value(parse.report()).unwrap();
        assert_eq!(body["error"]["line"], 2);
        assert_eq!(body["error"]["column"], 7);
        let guard = CliError::Core(mw_core::Error::GroundSetTooLarge { n: 30, guard: 24 });
        assert_eq!(guard.exit_code(), EXIT_GUARD);
        assert_eq!(CliError::Usage("u".into()).exit_code(), EXIT_USAGE);
        assert_eq!(CliError::Invalid("v".into()).exit_code(), EXIT_VALIDATION);
        assert_eq!(CliError::Mismatch("m".into()).exit_code(), EXIT_MISMATCH);
        let usage = serde_json::to_value(CliError::Usage("u".into()).report()).unwrap();
        assert!(usage["error"].get("line").is_none());
    }
}
