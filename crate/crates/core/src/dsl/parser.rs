//! Recursive-descent parser for identities.
//!
//! ```text
//! identity := expr "==" expr
//! expr     := term { ("+" | "-") term }
//! term     := factor { "*" factor }
//! factor   := [ "-" ] base [ "^" integer ]
//! base     := integer | "t" | "x" | "S" | call | "(" expr ")"
//! call     := ("Phi" | "Lambda") "(" ("0" | "1") "," affine ")"
//!           | ("F" | "L") "(" integer ")"
//! ```
//!
//! The `affine` argument is parsed as an expression and must reduce to
//! `a·t + b` with integer `a`, `b`.

use num_traits::ToPrimitive;

use super::ast::{Affine, Expr, Identity};
use super::lexer::{tokenize, Token, TokenKind};
use super::DslError;
use crate::interpolants::ParityIndex;

pub fn parse(text: &str) -> Result<Identity, DslError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        len: text.len(),
    };
    let left = p.expr()?;
    p.expect(TokenKind::EqEq, "`==`")?;
    let right = p.expr()?;
    if let Some(tok) = p.peek() {
        return Err(p.syntax(tok.offset, "end of input"));
    }
    Ok(Identity { left, right })
}

/// Parses one side of an identity (no `==`).
pub fn parse_expr(text: &str) -> Result<Expr, DslError> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        len: text.len(),
    };
    let e = p.expr()?;
    if let Some(tok) = p.peek() {
        return Err(p.syntax(tok.offset, "end of input"));
    }
    Ok(e)
}

struct Parser<'a> {
    tokens: Vec<Token<'a>>,
    pos: usize,
    len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<Token<'a>> {
        self.tokens.get(self.pos).copied()
    }

    fn at(&self, kind: TokenKind) -> bool {
        self.peek().is_some_and(|t| t.kind == kind)
    }

    /// Offset of the current token, or of the last byte at end of input.
    fn here(&self) -> usize {
        self.peek().map_or(self.len.saturating_sub(1), |t| t.offset)
    }

    fn syntax(&self, offset: usize, expected: &str) -> DslError {
        let found = match self.tokens.iter().find(|t| t.offset == offset) {
            Some(t) if self.peek().is_some() => format!("`{}`", t.text),
            _ => "end of input".to_string(),
        };
        DslError::Syntax {
            offset,
            expected: expected.to_string(),
            found,
        }
    }

    fn expect(&mut self, kind: TokenKind, what: &str) -> Result<Token<'a>, DslError> {
        match self.peek() {
            Some(t) if t.kind == kind => {
                self.pos += 1;
                Ok(t)
            }
            _ => Err(self.syntax(self.here(), what)),
        }
    }

    fn expr(&mut self) -> Result<Expr, DslError> {
        let mut acc = self.term()?;
        loop {
            if self.at(TokenKind::Plus) {
                self.pos += 1;
                acc = Expr::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.at(TokenKind::Minus) {
                self.pos += 1;
                acc = Expr::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, DslError> {
        let mut acc = self.factor()?;
        while self.at(TokenKind::Star) {
            self.pos += 1;
            acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, DslError> {
        let negate = self.at(TokenKind::Minus);
        if negate {
            self.pos += 1;
        }
        let mut e = self.base()?;
        if negate {
            e = Expr::Neg(Box::new(e));
        }
        if self.at(TokenKind::Caret) {
            self.pos += 1;
            let tok = self.expect(TokenKind::Number, "integer exponent")?;
            let k: u32 = tok
                .text
                .parse()
                .map_err(|_| DslError::IntegerTooLarge { offset: tok.offset })?;
            e = Expr::Pow(Box::new(e), k);
        }
        Ok(e)
    }

    fn base(&mut self) -> Result<Expr, DslError> {
        let Some(tok) = self.peek() else {
            return Err(self.syntax(self.here(), "operand"));
        };
        match tok.kind {
            TokenKind::Number => {
                self.pos += 1;
                Ok(Expr::Num(tok.text.parse().expect("digits")))
            }
            TokenKind::LParen => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(TokenKind::RParen, "`)`")?;
                Ok(e)
            }
            TokenKind::Name => {
                self.pos += 1;
                match tok.text {
                    "t" => Ok(Expr::VarT),
                    "x" => Ok(Expr::VarX),
                    "S" => Ok(Expr::SqrtDisc),
                    "Phi" | "Lambda" => self.interp_call(tok.text == "Phi"),
                    "F" | "L" => self.classical_call(tok.text == "F"),
                    name => Err(DslError::UnknownName {
                        offset: tok.offset,
                        name: name.to_string(),
                    }),
                }
            }
            _ => Err(self.syntax(tok.offset, "operand")),
        }
    }

    fn interp_call(&mut self, phi: bool) -> Result<Expr, DslError> {
        self.expect(TokenKind::LParen, "`(`")?;
        let tok = self.expect(TokenKind::Number, "parity 0 or 1")?;
        let j = match tok.text {
            "0" => ParityIndex::ZERO,
            "1" => ParityIndex::ONE,
            other => {
                return Err(DslError::ParityOutOfRange {
                    offset: tok.offset,
                    value: other.to_string(),
                })
            }
        };
        self.expect(TokenKind::Comma, "`,`")?;
        let arg_offset = self.here();
        let arg = self.expr()?;
        let affine = to_affine(&arg).ok_or(DslError::NonAffine { offset: arg_offset })?;
        self.expect(TokenKind::RParen, "`)`")?;
        Ok(if phi {
            Expr::Phi(j, affine)
        } else {
            Expr::Lambda(j, affine)
        })
    }

    fn classical_call(&mut self, fib: bool) -> Result<Expr, DslError> {
        self.expect(TokenKind::LParen, "`(`")?;
        let tok = self.expect(TokenKind::Number, "nonnegative integer index")?;
        let n: usize = tok
            .text
            .parse()
            .map_err(|_| DslError::IntegerTooLarge { offset: tok.offset })?;
        self.expect(TokenKind::RParen, "`)`")?;
        Ok(if fib { Expr::Fib(n) } else { Expr::Lucas(n) })
    }
}

/// Reduces an expression to `a·t + b` with integer coefficients.
fn to_affine(e: &Expr) -> Option<Affine> {
    let combine = |l: &Expr, r: &Expr, f: fn(i64, i64) -> Option<i64>| {
        let (l, r) = (to_affine(l)?, to_affine(r)?);
        Some(Affine {
            a: f(l.a, r.a)?,
            b: f(l.b, r.b)?,
        })
    };
    match e {
        Expr::Num(n) => Some(Affine {
            a: 0,
            b: n.to_i64()?,
        }),
        Expr::VarT => Some(Affine::IDENTITY),
        Expr::Add(l, r) => combine(l, r, i64::checked_add),
        Expr::Sub(l, r) => combine(l, r, i64::checked_sub),
        Expr::Neg(inner) => {
            let v = to_affine(inner)?;
            Some(Affine {
                a: v.a.checked_neg()?,
                b: v.b.checked_neg()?,
            })
        }
        Expr::Mul(l, r) => {
            let (l, r) = (to_affine(l)?, to_affine(r)?);
            let (c, v) = match (l.a, r.a) {
                (0, _) => (l.b, r),
                (_, 0) => (r.b, l),
                _ => return None,
            };
            Some(Affine {
                a: v.a.checked_mul(c)?,
                b: v.b.checked_mul(c)?,
            })
        }
        Expr::Pow(inner, k) => {
            let v = to_affine(inner)?;
            match (*k, v.a) {
                (0, _) => Some(Affine { a: 0, b: 1 }),
                (1, _) => Some(v),
                (k, 0) => Some(Affine {
                    a: 0,
                    b: v.b.checked_pow(k)?,
                }),
                _ => None,
            }
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi(j: u8, a: i64, b: i64) -> Expr {
        Expr::Phi(ParityIndex::new(j as i64), Affine { a, b })
    }

    fn lambda(j: u8, a: i64, b: i64) -> Expr {
        Expr::Lambda(ParityIndex::new(j as i64), Affine { a, b })
    }

    fn bx(e: Expr) -> Box<Expr> {
        Box::new(e)
    }

    #[test]
    fn lucas_from_phi_shape() {
        let id = parse("Lambda(0,t) == Phi(1,t-1) + Phi(1,t+1)").unwrap();
        assert_eq!(id.left, lambda(0, 1, 0));
        assert_eq!(id.right, Expr::Add(bx(phi(1, 1, -1)), bx(phi(1, 1, 1))));
    }

    #[test]
    fn recurrence_shape() {
        let id = parse("Phi(0,t+2) == x*Phi(1,t+1) + Phi(0,t)").unwrap();
        assert_eq!(id.left, phi(0, 1, 2));
        assert_eq!(
            id.right,
            Expr::Add(
                bx(Expr::Mul(bx(Expr::VarX), bx(phi(1, 1, 1)))),
                bx(phi(0, 1, 0))
            )
        );
    }

    #[test]
    fn precedence() {
        // unary minus binds tighter than ^
        let e = parse_expr("-x^2").unwrap();
        assert_eq!(e, Expr::Pow(bx(Expr::Neg(bx(Expr::VarX))), 2));
        let e = parse_expr("1 + 2*t^3 - x").unwrap();
        let expected = Expr::Sub(
            bx(Expr::Add(
                bx(Expr::Num(1.into())),
                bx(Expr::Mul(
                    bx(Expr::Num(2.into())),
                    bx(Expr::Pow(bx(Expr::VarT), 3)),
                )),
            )),
            bx(Expr::VarX),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn affine_arguments() {
        assert_eq!(parse_expr("Phi(0,2*t)").unwrap(), phi(0, 2, 0));
        assert_eq!(parse_expr("Phi(0,-t)").unwrap(), phi(0, -1, 0));
        assert_eq!(parse_expr("Lambda(1,4)").unwrap(), lambda(1, 0, 4));
        assert_eq!(parse_expr("Lambda(1,2*t-3)").unwrap(), lambda(1, 2, -3));
        assert_eq!(parse_expr("Phi(1,t*3+1)").unwrap(), phi(1, 3, 1));
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse("Phi(2,t) == t"),
            Err(DslError::ParityOutOfRange {
                offset: 4,
                value: "2".into()
            })
        );
        assert_eq!(
            parse("Phi(0,t*t) == t"),
            Err(DslError::NonAffine { offset: 6 })
        );
        assert_eq!(
            parse("Phi(0,x) == t"),
            Err(DslError::NonAffine { offset: 6 })
        );
        assert!(matches!(
            parse("t x == t"),
            Err(DslError::Syntax { offset: 2, .. })
        ));
        assert!(matches!(
            parse("t == t == t"),
            Err(DslError::Syntax { offset: 7, .. })
        ));
        assert!(matches!(
            parse("t + "),
            Err(DslError::Syntax { offset: 3, .. })
        ));
        assert!(matches!(
            parse("t"),
            Err(DslError::Syntax { offset: 0, .. })
        ));
        assert!(matches!(
            parse("Psi(0,t) == 1"),
            Err(DslError::UnknownName { offset: 0, .. })
        ));
        assert!(matches!(
            parse("--t == t"),
            Err(DslError::Syntax { offset: 1, .. })
        ));
        assert!(matches!(
            parse("x^99999999999 == 1"),
            Err(DslError::IntegerTooLarge { offset: 2 })
        ));
    }

    #[test]
    fn error_offsets_are_inside_the_input() {
        for text in [
            "",
            "(",
            "t +",
            "Phi(",
            "Phi(0",
            "Phi(0,",
            "F(",
            "x ==",
            "x^",
            "Phi(7,t)==t",
            ")",
        ] {
            let err = parse(text).unwrap_err();
            assert!(err.offset().unwrap() < text.len().max(1), "{text:?}: {err}");
        }
    }

    #[test]
    fn pretty_print_round_trip() {
        for text in [
            "Lambda(0,t) == Phi(1,t-1) + Phi(1,t+1)",
            "(Phi(0,t+1)*Phi(0,t-1) - Phi(0,t)^2)*S^2 == 0 - x^2",
            "-x^2 == -(x^2)",
            "(-(t + 1))^2 == 2*-t - (x - (t - x))",
            "Phi(0,-2*t+3) == Lambda(1,-4)*(F(3) + L(2))^3",
            "((x^2)^3)^2 == x^12",
        ] {
            let id = parse(text).unwrap();
            let printed = id.to_string();
            assert_eq!(parse(&printed).unwrap(), id, "{text} -> {printed}");
        }
    }
}
