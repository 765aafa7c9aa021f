use serde::Serialize;

/// Process outcome; the discriminant is the exit code.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Verified,
    Failed,
    InvalidInput,
    ResourceCap,
    Io,
}

impl Outcome {
    pub fn code(self) -> u8 {
        match self {
            Outcome::Verified => 0,
            Outcome::Failed => 1,
            Outcome::InvalidInput => 2,
            Outcome::ResourceCap => 3,
            Outcome::Io => 4,
        }
    }
}

/// Envelope of every `--format json` report. Field order is fixed so equal
/// runs produce equal bytes apart from `elapsed_ms`.
#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub version: &'static str,
    pub status: Outcome,
    pub exit_code: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub result: serde_json::Value,
    pub elapsed_ms: f64,
}

#[derive(Debug)]
pub struct CmdError {
    pub outcome: Outcome,
    pub message: String,
}

impl CmdError {
    pub fn invalid(message: impl Into<String>) -> Self {
        CmdError {
            outcome: Outcome::InvalidInput,
            message: message.into(),
        }
    }

    pub fn io(message: impl Into<String>) -> Self {
        CmdError {
            outcome: Outcome::Io,
            message: message.into(),
        }
    }
}

impl From<ekr_core::Error> for CmdError {
    fn from(e: ekr_core::Error) -> Self {
        use ekr_core::Error;
        let outcome = match &e {
            Error::Domain(_) | Error::Parse(_) => Outcome::InvalidInput,
            Error::Resource { .. } => Outcome::ResourceCap,
            Error::Invariant(_) => Outcome::Failed,
        };
        CmdError {
            outcome,
            message: e.to_string(),
        }
    }
}

/// What a subcommand hands back for printing.
pub struct Rendered {
    pub outcome: Outcome,
    pub json: serde_json::Value,
    pub text: String,
}
