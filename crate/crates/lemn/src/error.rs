use lemn_core::chebyshev::ChebError;
use lemn_core::cmfield::CmError;
use lemn_core::construct::ConstructError;
use lemn_core::gaussint::ParseGaussError;
use lemn_core::lemnatomic::LemnError;
use lemn_core::numlem::NumError;
use lemn_core::GaussError;

/// Every failure the front end can report, each with a fixed exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl CliError {
    /// 1 for a failed verification, 2 for bad input, 3 for a broken invariant.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<ParseGaussError> for CliError {
    fn from(e: ParseGaussError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<GaussError> for CliError {
    fn from(e: GaussError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<CmError> for CliError {
    fn from(e: CmError) -> Self {
        match e {
            CmError::InternalInconsistency(s) => CliError::Internal(s),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<LemnError> for CliError {
    fn from(e: LemnError) -> Self {
        match e {
            LemnError::InternalInconsistency(s) => CliError::Internal(s),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<ChebError> for CliError {
    fn from(e: ChebError) -> Self {
        match e {
            ChebError::NotOdd(_) => CliError::Usage(e.to_string()),
            ChebError::NotDivisible(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<NumError> for CliError {
    fn from(e: NumError) -> Self {
        match e {
            NumError::PrecisionFailure(_) => CliError::Internal(e.to_string()),
            NumError::PoleError => CliError::Usage(e.to_string()),
        }
    }
}
