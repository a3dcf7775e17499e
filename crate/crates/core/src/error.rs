use thiserror::Error;

/// Errors raised by the library.
///
/// The variants are grouped the way the command line reports them: resource
/// caps, domain violations, malformed input, and internal invariant failures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what} = {value} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("polynomial is not divisible by (x - 1): remainder {remainder}")]
    NotDivisible { remainder: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_cap(what: &'static str, value: u64, cap: u64) -> Result<()> {
    if value > cap {
        Err(Error::CapExceeded { what, value, cap })
    } else {
        Ok(())
    }
}
