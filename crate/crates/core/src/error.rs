use thiserror::Error;

/// Reasons a byte sequence is not accepted as a number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParseError {
    /// The significand has no digits (empty input, a bare `.`, a lone sign).
    #[error("no digits in significand")]
    NoDigits,
    /// Scientific notation was required but the exponent has no digits.
    #[error("missing exponent digits")]
    MissingExponentDigits,
    /// The input violates the active syntax options at the given byte index.
    #[error("invalid syntax at byte {0}")]
    InvalidSyntax(usize),
}
