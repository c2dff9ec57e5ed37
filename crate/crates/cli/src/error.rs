//! CLI error type and the exit-code contract: 1 for validation failures,
//! 2 for resource-guard refusals, 3 for IO/parse problems.

use thiserror::Error;

use qss_core::access::AccessError;
use qss_core::codes::CodeError;
use qss_core::css::CssError;
use qss_core::gf::GfError;
use qss_core::qsim::SimError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid --{flag} value: {message}")]
    Flag { flag: &'static str, message: String },
    #[error("{0}")]
    Validation(String),
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Css(#[from] CssError),
    #[error(transparent)]
    Sim(#[from] SimError),
    #[error(transparent)]
    Access(#[from] AccessError),
}

fn sim_guard(e: &SimError) -> bool {
    matches!(
        e,
        SimError::DimensionTooLarge { .. } | SimError::Code(CodeError::EnumerationTooLarge { .. })
    )
}

fn css_guard(e: &CssError) -> bool {
    matches!(e, CssError::Code(CodeError::EnumerationTooLarge { .. }))
}

impl CliError {
    /// True for cap refusals of any nesting depth.
    pub fn is_resource_guard(&self) -> bool {
        match self {
            CliError::Code(e) => matches!(e, CodeError::EnumerationTooLarge { .. }),
            CliError::Sim(e) => sim_guard(e),
            CliError::Css(e) => css_guard(e),
            CliError::Access(e) => match e {
                AccessError::OperatorScanTooLarge { .. } => true,
                AccessError::Sim(s) => sim_guard(s),
                AccessError::Css(c) => css_guard(c),
                _ => false,
            },
            _ => false,
        }
    }

    pub fn exit_code(&self) -> u8 {
        if self.is_resource_guard() {
            return 2;
        }
        match self {
            CliError::Parse { .. } | CliError::Io { .. } | CliError::Flag { .. } => 3,
            _ => 1,
        }
    }
}
