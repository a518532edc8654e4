//! A small language for stating identities between the interpolating
//! series, with an exact checker and a sampling checker.
//!
//! ```text
//! Lambda(0,t) == Phi(1,t-1) + Phi(1,t+1)
//! (Phi(0,t+1)*Phi(0,t-1) - Phi(0,t)^2)*S^2 == 0 - x^2
//! ```
//!
//! Names: `t`, `x`, `S` (= √(x² + 4)), `Phi(j, a*t+b)`, `Lambda(j, a*t+b)`
//! with `j` a literal 0 or 1, and `F(n)`, `L(n)` for the classical
//! polynomials. Multiplication needs an explicit `*`. A leading `-` binds
//! tighter than `^`, so `-x^2` is `(-x)^2`.
//!
//! [`check_exact`] decides an identity modulo `x^N` over `ℚ[t]`;
//! [`check_numeric`] samples `(t, x)` and compares floating-point values.

mod ast;
mod eval;
mod lexer;
mod numeric;
mod parser;

use thiserror::Error;

use crate::interpolants::InterpError;

pub use ast::{Affine, Expr, Identity};
pub use eval::{check_exact, eval_series, ExactReport};
pub use lexer::{tokenize, Token, TokenKind};
pub use numeric::{check_numeric, eval_numeric, NumericReport, Sampler};
pub use parser::{parse, parse_expr};

/// Every identity the library proves, one per line.
pub const BUILTIN_IDENTITIES: &str = include_str!("../../identities/builtin.txt");

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DslError {
    #[error("unexpected character {ch:?} at offset {offset}")]
    Lex { offset: usize, ch: char },
    #[error("expected {expected} at offset {offset}, found {found}")]
    Syntax {
        offset: usize,
        expected: String,
        found: String,
    },
    #[error("parity index must be 0 or 1, got {value} at offset {offset}")]
    ParityOutOfRange { offset: usize, value: String },
    #[error("argument at offset {offset} is not of the form a*t+b with integer a, b")]
    NonAffine { offset: usize },
    #[error("unknown name `{name}` at offset {offset}")]
    UnknownName { offset: usize, name: String },
    #[error("integer at offset {offset} is too large")]
    IntegerTooLarge { offset: usize },
    #[error("polynomial of degree {degree} does not fit in order {order}")]
    OrderTooSmall { degree: usize, order: usize },
    #[error(transparent)]
    Numeric(#[from] InterpError),
}

impl DslError {
    /// Byte offset of the problem in the source text, for input errors.
    pub fn offset(&self) -> Option<usize> {
        match self {
            DslError::Lex { offset, .. }
            | DslError::Syntax { offset, .. }
            | DslError::ParityOutOfRange { offset, .. }
            | DslError::NonAffine { offset }
            | DslError::UnknownName { offset, .. }
            | DslError::IntegerTooLarge { offset } => Some(*offset),
            DslError::OrderTooSmall { .. } | DslError::Numeric(_) => None,
        }
    }

    /// The same error with its offset moved right by `by` bytes, for
    /// reporting positions within a longer line.
    pub fn shifted(mut self, by: usize) -> Self {
        match &mut self {
            DslError::Lex { offset, .. }
            | DslError::Syntax { offset, .. }
            | DslError::ParityOutOfRange { offset, .. }
            | DslError::NonAffine { offset }
            | DslError::UnknownName { offset, .. }
            | DslError::IntegerTooLarge { offset } => *offset += by,
            DslError::OrderTooSmall { .. } | DslError::Numeric(_) => {}
        }
        self
    }

    /// Whether the error comes from the identity text rather than from
    /// evaluation.
    pub fn is_input_error(&self) -> bool {
        self.offset().is_some() || matches!(self, DslError::OrderTooSmall { .. })
    }
}

/// Non-comment lines of an identity file with their 1-based line numbers.
/// `#` starts a comment; blank lines are skipped.
pub fn identity_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}
