use std::process::ExitCode;

use kuptv_core::fusion::FusionError;
use kuptv_core::group::GroupError;
use kuptv_core::heegaard::HeegaardError;
use kuptv_core::hopf::HopfError;
use kuptv_core::kuperberg::KuperbergError;
use kuptv_core::scalars::ScalarError;

/// Failure classes, one per exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    CheckFailed(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    H1Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::CheckFailed(_) => 1,
            CliError::Input(_) => 2,
            CliError::Unsupported(_) => 3,
            CliError::Cap(_) => 4,
            CliError::H1Mismatch(_) => 5,
        })
    }
}

impl From<HopfError> for CliError {
    fn from(e: HopfError) -> Self {
        let msg = e.to_string();
        match e {
            HopfError::CapExceeded { .. } | HopfError::TensorCap { .. } => CliError::Cap(msg),
            HopfError::NotOneDimensional { .. }
            | HopfError::DegeneratePairing
            | HopfError::ConventionMismatch { .. } => CliError::Unsupported(msg),
            _ => CliError::Input(msg),
        }
    }
}

impl From<HeegaardError> for CliError {
    fn from(e: HeegaardError) -> Self {
        match e {
            HeegaardError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<FusionError> for CliError {
    fn from(e: FusionError) -> Self {
        let msg = e.to_string();
        match e {
            FusionError::MissingSixj(_) | FusionError::ZeroDimension | FusionError::ZeroTheta(_) => {
                CliError::Unsupported(msg)
            }
            FusionError::CapExceeded { .. } => CliError::Cap(msg),
            _ => CliError::Input(msg),
        }
    }
}

impl From<KuperbergError> for CliError {
    fn from(e: KuperbergError) -> Self {
        match e {
            KuperbergError::Unsupported { .. } => CliError::Unsupported(e.to_string()),
            KuperbergError::CostCap { .. } => CliError::Cap(e.to_string()),
            KuperbergError::Hopf(h) => h.into(),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<ScalarError> for CliError {
    fn from(e: ScalarError) -> Self {
        CliError::Input(e.to_string())
    }
}
