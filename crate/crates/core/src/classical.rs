//! Classical Fibonacci and Lucas polynomials.
//!
//! `F_n = x·F_{n−1} + F_{n−2}` with `F_0 = 0, F_1 = 1`, and the Lucas
//! polynomials from the same recurrence with `L_0 = 2, L_1 = x`. Besides the
//! recurrences this module carries the explicit binomial-sum formulas, their
//! even/odd-index forms, the substitutions `x ↦ x − 1/x`, and Cassini's
//! identity. All checks are exact.

use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;

use crate::exact::{int, laurent_substitute, LaurentPoly, PolyX, Rational};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Fib,
    Lucas,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum IndexParity {
    Even,
    Odd,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Fib => "fib",
            Kind::Lucas => "lucas",
        })
    }
}

/// The four identities obtained by substituting `x − 1/x` into even- and
/// odd-index Fibonacci and Lucas polynomials.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum LaurentIdentity {
    /// `(x + 1/x)·F_{2n}(x − 1/x) = x^{2n} − x^{−2n}`
    FibEven,
    /// `(x + 1/x)·F_{2n+1}(x − 1/x) = x^{2n+1} + x^{−2n−1}`
    FibOdd,
    /// `L_{2n}(x − 1/x) = x^{2n} + x^{−2n}`
    LucasEven,
    /// `L_{2n+1}(x − 1/x) = x^{2n+1} − x^{−2n−1}`
    LucasOdd,
}

impl LaurentIdentity {
    pub const ALL: [LaurentIdentity; 4] = [
        LaurentIdentity::FibEven,
        LaurentIdentity::FibOdd,
        LaurentIdentity::LucasEven,
        LaurentIdentity::LucasOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LaurentIdentity::FibEven => "fib-even",
            LaurentIdentity::FibOdd => "fib-odd",
            LaurentIdentity::LucasEven => "lucas-even",
            LaurentIdentity::LucasOdd => "lucas-odd",
        }
    }
}

fn recurrence(n: usize, p0: PolyX, p1: PolyX) -> PolyX {
    if n == 0 {
        return p0;
    }
    let x = PolyX::var();
    let (mut prev, mut cur) = (p0, p1);
    for _ in 1..n {
        let next = &(&x * &cur) + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `F_n(x)` by the recurrence.
pub fn fib_poly(n: usize) -> PolyX {
    recurrence(n, PolyX::zero(), PolyX::one())
}

/// `L_n(x)` by the recurrence.
pub fn lucas_poly(n: usize) -> PolyX {
    recurrence(n, PolyX::from_ints(&[2]), PolyX::var())
}

pub fn poly(kind: Kind, n: usize) -> PolyX {
    match kind {
        Kind::Fib => fib_poly(n),
        Kind::Lucas => lucas_poly(n),
    }
}

fn binom(n: usize, k: usize) -> Rational {
    BigRational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

fn from_terms(terms: impl IntoIterator<Item = (usize, Rational)>) -> PolyX {
    let mut coeffs: Vec<Rational> = Vec::new();
    for (e, c) in terms {
        if coeffs.len() <= e {
            coeffs.resize(e + 1, int(0));
        }
        coeffs[e] += c;
    }
    PolyX::from_coeffs(&coeffs)
}

/// `F_n = Σ C(n−1−k, k)·x^{n−1−2k}` and
/// `L_n = Σ C(n−k, k)·n/(n−k)·x^{n−2k}`.
///
/// `L_0` is returned as the constant 2; its `k = 0` term reads `0/0`.
pub fn explicit_poly(kind: Kind, n: usize) -> PolyX {
    match kind {
        Kind::Fib if n == 0 => PolyX::zero(),
        Kind::Fib => from_terms((0..=(n - 1) / 2).map(|k| (n - 1 - 2 * k, binom(n - 1 - k, k)))),
        Kind::Lucas if n == 0 => PolyX::from_ints(&[2]),
        Kind::Lucas => from_terms((0..=n / 2).map(|k| {
            let c = binom(n - k, k) * int(n as i64) / int((n - k) as i64);
            (n - 2 * k, c)
        })),
    }
}

/// The index-`2n` or index-`2n+1` polynomial from its binomial sum in
/// powers of `x` of a single parity.
pub fn parity_form(kind: Kind, parity: IndexParity, n: usize) -> PolyX {
    match (kind, parity) {
        // Σ_{k=1..n} C(n+k−1, 2k−1) x^{2k−1}
        (Kind::Fib, IndexParity::Even) => {
            from_terms((1..=n).map(|k| (2 * k - 1, binom(n + k - 1, 2 * k - 1))))
        }
        // Σ_{k=0..n} C(n+k, 2k) x^{2k}
        (Kind::Fib, IndexParity::Odd) => from_terms((0..=n).map(|k| (2 * k, binom(n + k, 2 * k)))),
        // Σ_{k=0..n} C(n+k, 2k)·2n/(n+k) x^{2k}
        (Kind::Lucas, IndexParity::Even) => {
            if n == 0 {
                return PolyX::from_ints(&[2]);
            }
            from_terms((0..=n).map(|k| {
                let c = binom(n + k, 2 * k) * int(2 * n as i64) / int((n + k) as i64);
                (2 * k, c)
            }))
        }
        // Σ_{k=0..n} C(n+k+1, 2k+1)·(2n+1)/(n+k+1) x^{2k+1}
        (Kind::Lucas, IndexParity::Odd) => from_terms((0..=n).map(|k| {
            let c = binom(n + k + 1, 2 * k + 1) * int(2 * n as i64 + 1) / int((n + k + 1) as i64);
            (2 * k + 1, c)
        })),
    }
}

/// Both sides of a substitution identity at index parameter `n`.
pub fn laurent_sides(identity: LaurentIdentity, n: usize) -> (LaurentPoly, LaurentPoly) {
    let arg = LaurentPoly::x_minus_inverse();
    let (p, prefactor, sign, e) = match identity {
        LaurentIdentity::FibEven => (fib_poly(2 * n), true, -1, 2 * n),
        LaurentIdentity::FibOdd => (fib_poly(2 * n + 1), true, 1, 2 * n + 1),
        LaurentIdentity::LucasEven => (lucas_poly(2 * n), false, 1, 2 * n),
        LaurentIdentity::LucasOdd => (lucas_poly(2 * n + 1), false, -1, 2 * n + 1),
    };
    let mut lhs = laurent_substitute(&p, &arg);
    if prefactor {
        lhs = &LaurentPoly::x_plus_inverse() * &lhs;
    }
    let e = e as i64;
    let rhs = &LaurentPoly::monomial(int(1), e) + &LaurentPoly::monomial(int(sign), -e);
    (lhs, rhs)
}

pub fn laurent_check(identity: LaurentIdentity, n: usize) -> bool {
    let (lhs, rhs) = laurent_sides(identity, n);
    lhs == rhs
}

/// `F_{n+1}F_{n−1} − F_n² = (−1)^n` or
/// `L_{n+1}L_{n−1} − L_n² = (−1)^{n−1}(x² + 4)`. Requires `n ≥ 1`.
pub fn cassini_check(kind: Kind, n: usize) -> bool {
    assert!(n >= 1, "Cassini's identity needs n >= 1");
    let p = |m| poly(kind, m);
    let lhs = &(&p(n + 1) * &p(n - 1)) - &p(n).pow(2);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let rhs = match kind {
        Kind::Fib => PolyX::from_ints(&[sign]),
        Kind::Lucas => PolyX::from_ints(&[-4 * sign, 0, -sign]),
    };
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(c: &[i64]) -> PolyX {
        PolyX::from_ints(c)
    }

    #[test]
    fn first_fibonacci_polynomials() {
        assert!(fib_poly(0).is_zero());
        assert_eq!(fib_poly(5), x(&[1, 0, 3, 0, 1]));
        assert_eq!(fib_poly(7), x(&[1, 0, 6, 0, 5, 0, 1]));
    }

    #[test]
    fn first_lucas_polynomials() {
        assert_eq!(lucas_poly(0), x(&[2]));
        assert_eq!(lucas_poly(1), x(&[0, 1]));
        assert_eq!(lucas_poly(6), x(&[2, 0, 9, 0, 6, 0, 1]));
    }

    #[test]
    fn explicit_formula_examples() {
        assert_eq!(explicit_poly(Kind::Fib, 4), x(&[0, 2, 0, 1]));
        assert_eq!(explicit_poly(Kind::Lucas, 4), x(&[2, 0, 4, 0, 1]));
        assert_eq!(explicit_poly(Kind::Lucas, 0), x(&[2]));
    }

    #[test]
    fn explicit_formulas_match_recurrence() {
        for n in 0..=30 {
            assert_eq!(explicit_poly(Kind::Fib, n), fib_poly(n), "F_{n}");
            assert_eq!(explicit_poly(Kind::Lucas, n), lucas_poly(n), "L_{n}");
        }
    }

    #[test]
    fn parity_forms_match_recurrence() {
        assert_eq!(
            parity_form(Kind::Fib, IndexParity::Even, 2),
            x(&[0, 2, 0, 1])
        );
        assert_eq!(
            parity_form(Kind::Fib, IndexParity::Odd, 2),
            x(&[1, 0, 3, 0, 1])
        );
        assert_eq!(
            parity_form(Kind::Lucas, IndexParity::Odd, 2),
            x(&[0, 5, 0, 5, 0, 1])
        );
        assert!(parity_form(Kind::Fib, IndexParity::Even, 0).is_zero());
        for n in 0..=15 {
            for kind in [Kind::Fib, Kind::Lucas] {
                assert_eq!(parity_form(kind, IndexParity::Even, n), poly(kind, 2 * n));
                assert_eq!(
                    parity_form(kind, IndexParity::Odd, n),
                    poly(kind, 2 * n + 1)
                );
            }
        }
    }

    #[test]
    fn degrees_and_leading_coefficients() {
        for n in 1..=30 {
            let f = fib_poly(n);
            assert_eq!(f.degree(), Some(n - 1));
            assert_eq!(f.leading_coeff(), int(1));
            let l = lucas_poly(n);
            assert_eq!(l.degree(), Some(n));
            assert_eq!(l.leading_coeff(), int(1));
        }
    }

    #[test]
    fn lucas_is_sum_of_neighbouring_fibonacci() {
        for n in 1..=30 {
            assert_eq!(lucas_poly(n), &fib_poly(n + 1) + &fib_poly(n - 1));
        }
    }

    #[test]
    fn substitution_identities() {
        let (lhs, rhs) = laurent_sides(LaurentIdentity::FibEven, 1);
        assert_eq!(lhs, rhs);
        assert_eq!(rhs.to_string(), "x^2 - x^-2");
        for identity in LaurentIdentity::ALL {
            for n in 0..=10 {
                assert!(laurent_check(identity, n), "{identity:?} n={n}");
            }
        }
    }

    #[test]
    fn cassini() {
        assert!(cassini_check(Kind::Fib, 1));
        assert!(cassini_check(Kind::Fib, 4));
        assert!(cassini_check(Kind::Lucas, 2));
        for n in 1..=20 {
            assert!(cassini_check(Kind::Fib, n));
            assert!(cassini_check(Kind::Lucas, n));
        }
    }
}
