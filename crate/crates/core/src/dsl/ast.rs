use std::fmt;

use num_bigint::BigInt;

use crate::interpolants::ParityIndex;

/// The argument `a·t + b` of a `Phi`/`Lambda` call.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Affine {
    pub a: i64,
    pub b: i64,
}

impl Affine {
    pub const IDENTITY: Affine = Affine { a: 1, b: 0 };

    pub fn eval(self, t: f64) -> f64 {
        self.a as f64 * t + self.b as f64
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.a {
            0 => return write!(f, "{}", self.b),
            1 => f.write_str("t")?,
            -1 => f.write_str("-t")?,
            a => write!(f, "{a}*t")?,
        }
        match self.b {
            0 => Ok(()),
            b if b > 0 => write!(f, "+{b}"),
            b => write!(f, "-{}", b.unsigned_abs()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Nonnegative integer literal.
    Num(BigInt),
    VarT,
    VarX,
    /// `S = √(x² + 4)`
    SqrtDisc,
    Phi(ParityIndex, Affine),
    Lambda(ParityIndex, Affine),
    Fib(usize),
    Lucas(usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub left: Expr,
    pub right: Expr,
}

impl Expr {
    fn is_base(&self) -> bool {
        matches!(
            self,
            Expr::Num(_)
                | Expr::VarT
                | Expr::VarX
                | Expr::SqrtDisc
                | Expr::Phi(..)
                | Expr::Lambda(..)
                | Expr::Fib(_)
                | Expr::Lucas(_)
        )
    }

    fn is_factor(&self) -> bool {
        self.is_base() || matches!(self, Expr::Neg(_) | Expr::Pow(..))
    }

    fn is_term(&self) -> bool {
        self.is_factor() || matches!(self, Expr::Mul(..))
    }
}

fn write_wrapped(f: &mut fmt::Formatter<'_>, e: &Expr, bare: bool) -> fmt::Result {
    if bare {
        write!(f, "{e}")
    } else {
        write!(f, "({e})")
    }
}

/// Prints with the minimum parentheses needed for the text to parse back
/// to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(n) => write!(f, "{n}"),
            Expr::VarT => f.write_str("t"),
            Expr::VarX => f.write_str("x"),
            Expr::SqrtDisc => f.write_str("S"),
            Expr::Phi(j, arg) => write!(f, "Phi({j},{arg})"),
            Expr::Lambda(j, arg) => write!(f, "Lambda({j},{arg})"),
            Expr::Fib(n) => write!(f, "F({n})"),
            Expr::Lucas(n) => write!(f, "L({n})"),
            Expr::Add(l, r) | Expr::Sub(l, r) => {
                let op = if matches!(self, Expr::Add(..)) {
                    "+"
                } else {
                    "-"
                };
                write!(f, "{l} {op} ")?;
                write_wrapped(f, r, r.is_term())
            }
            Expr::Mul(l, r) => {
                write_wrapped(f, l, l.is_term())?;
                f.write_str("*")?;
                write_wrapped(f, r, r.is_factor())
            }
            Expr::Neg(e) => {
                f.write_str("-")?;
                write_wrapped(f, e, e.is_base())
            }
            Expr::Pow(e, k) => {
                let bare = e.is_base() || matches!(&**e, Expr::Neg(inner) if inner.is_base());
                write_wrapped(f, e, bare)?;
                write!(f, "^{k}")
            }
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} == {}", self.left, self.right)
    }
}
