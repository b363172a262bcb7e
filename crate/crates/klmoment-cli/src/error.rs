//! Command errors and their exit codes.

use klmoment::evans::EvansError;
use klmoment::exactalg::AlgError;
use klmoment::invdims::InvError;
use klmoment::klsum::KlError;
use klmoment::monodromy::MonodromyError;
use klmoment::weylchar::WeylError;
use std::process::ExitCode;

/// Exit status of a failed command.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad arguments or a request outside the supported range (exit 2).
    #[error("{0}")]
    Usage(String),
    /// A computation beyond the desk-scale guard without `--force` (exit 3).
    #[error("{0}")]
    ScaleGuard(String),
    /// A verification or consistency check failed (exit 1).
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            Self::Failed(_) => 1,
            Self::Usage(_) => 2,
            Self::ScaleGuard(_) => 3,
        })
    }
}

fn from_alg(e: &AlgError) -> CliError {
    match e {
        AlgError::NonPrime(_) | AlgError::ZeroDegree | AlgError::FieldTooLarge(_) => {
            CliError::Usage(e.to_string())
        }
        _ => CliError::Failed(e.to_string()),
    }
}

fn from_kl(e: &KlError) -> CliError {
    match e {
        KlError::BadParameters { .. } | KlError::TooLarge { .. } | KlError::ZeroPoint => {
            CliError::Usage(e.to_string())
        }
        KlError::Alg(a) => from_alg(a),
        _ => CliError::Failed(e.to_string()),
    }
}

impl From<WeylError> for CliError {
    fn from(e: WeylError) -> Self {
        match &e {
            WeylError::DeskScaleExceeded { .. } => Self::ScaleGuard(e.to_string()),
            WeylError::TooManyRows { .. }
            | WeylError::WeightTooLarge { .. }
            | WeylError::BadWeight(_) => Self::Usage(e.to_string()),
            WeylError::Kl(k) => from_kl(k),
            WeylError::Alg(a) => from_alg(a),
            _ => Self::Failed(e.to_string()),
        }
    }
}

impl From<InvError> for CliError {
    fn from(e: InvError) -> Self {
        match e {
            InvError::Weyl(w) => w.into(),
            InvError::Monodromy(m) => (*m).into(),
            InvError::OutOfScope(_)
            | InvError::BadParameters(_)
            | InvError::CharDividesOrder { .. }
            | InvError::NonIntegerSwan(_) => Self::Usage(e.to_string()),
            InvError::Alg(ref a) => from_alg(a),
            _ => Self::Failed(e.to_string()),
        }
    }
}

impl From<MonodromyError> for CliError {
    fn from(e: MonodromyError) -> Self {
        match e {
            MonodromyError::Inv(i) => i.into(),
            _ => Self::Failed(e.to_string()),
        }
    }
}

impl From<EvansError> for CliError {
    fn from(e: EvansError) -> Self {
        match e {
            EvansError::Weyl(w) => w.into(),
            EvansError::Inv(i) => i.into(),
            EvansError::BadPrime { .. }
            | EvansError::NotPrime(_)
            | EvansError::UnknownIdentity(_) => Self::Usage(e.to_string()),
            _ => Self::Failed(e.to_string()),
        }
    }
}

impl From<KlError> for CliError {
    fn from(e: KlError) -> Self {
        from_kl(&e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::Failed(e.to_string())
    }
}
