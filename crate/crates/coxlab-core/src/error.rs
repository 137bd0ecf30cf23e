use alloc::string::String;
use core::fmt;

/// Errors reported by the exact computation routines.
///
/// Display output starts with the error's name so that diagnostics printed by
/// the CLI read e.g. `InvalidAlgebraError: quiver has an oriented cycle`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A precondition on an argument was violated.
    Argument(String),
    /// Exact division had a nonzero remainder.
    Division(String),
    /// Matrix inversion over the integers requires determinant ±1.
    NotUnimodular(String),
    /// An algebra presentation violates its invariants.
    InvalidAlgebra(String),
    /// The polynomial is not self-reciprocal, so no representing polynomial exists.
    NotRepresentable(String),
    /// The polynomial pair is not a one-point extension pair.
    InconsistentExtension(String),
    /// An iterative numeric routine failed to converge.
    Numeric(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Argument(m) => write!(f, "ArgumentError: {m}"),
            Error::Division(m) => write!(f, "DivisionError: {m}"),
            Error::NotUnimodular(m) => write!(f, "NotUnimodularError: {m}"),
            Error::InvalidAlgebra(m) => write!(f, "InvalidAlgebraError: {m}"),
            Error::NotRepresentable(m) => write!(f, "NotRepresentableError: {m}"),
            Error::InconsistentExtension(m) => write!(f, "InconsistentExtensionError: {m}"),
            Error::Numeric(m) => write!(f, "NumericError: {m}"),
        }
    }
}

impl core::error::Error for Error {}
