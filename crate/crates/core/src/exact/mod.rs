//! Exact scalar and polynomial arithmetic.
//!
//! Everything here is built over [`Rational`], an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. On top of it
//! sit dense univariate polynomials ([`Poly`]), sparse Laurent polynomials
//! ([`LaurentPoly`]) and the quadratic field ℚ(√5) ([`QuadExt`]).

mod laurent;
mod poly;
mod quad;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use laurent::{laurent_substitute, LaurentPoly};
pub use poly::{affine_sub, gbinom, Poly, PolyT, PolyX, Variable, T, X};
pub use quad::QuadExt;

/// Arbitrary-precision rational number, always gcd-reduced.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
}

/// Shorthand for the rational `p/q`. Panics when `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand for the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders a rational as `"p"` or `"p/q"`.
pub fn rational_to_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"` or `"p/q"` (optionally signed) into a rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let p: BigInt = p.parse().ok()?;
    let q: BigInt = q.parse().ok()?;
    if q == BigInt::from(0) {
        return None;
    }
    Some(Rational::new(p, q))
}

/// Nearest `f64` to a rational, robust to numerators and denominators
/// beyond the `f64` range.
pub fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // Fall back to shifting both parts into range.
    let nb = r.numer().bits() as i64;
    let db = r.denom().bits() as i64;
    let shift_n = (nb - 900).max(0);
    let shift_d = (db - 900).max(0);
    let n = (r.numer() >> shift_n as usize).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() >> shift_d as usize).to_f64().unwrap_or(f64::NAN);
    n / d * 2f64.powi((shift_n - shift_d) as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip_through_text() {
        for r in [rat(0, 1), rat(-3, 4), rat(22, 7), int(5)] {
            assert_eq!(parse_rational(&rational_to_string(&r)), Some(r));
        }
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
    }

    #[test]
    fn rationals_are_canonical() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(rat(0, 7), int(0));
    }

    #[test]
    fn huge_rational_to_f64() {
        let big = BigInt::from(10).pow(400u32);
        let r = Rational::new(big.clone() * 3, big);
        assert!((rational_to_f64(&r) - 3.0).abs() < 1e-12);
    }
}
