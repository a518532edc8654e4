use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{PolyX, Rational};

/// Finite sum of integer powers of `x`, negative exponents allowed.
///
/// Sparse: substituting `x − 1/x` into a degree-`n` polynomial spans
/// exponents `−n..=n`, mostly with zero coefficients of one parity.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// `x − 1/x`.
    pub fn x_minus_inverse() -> Self {
        &Self::monomial(Rational::one(), 1) - &Self::monomial(Rational::one(), -1)
    }

    /// `x + 1/x`.
    pub fn x_plus_inverse() -> Self {
        &Self::monomial(Rational::one(), 1) + &Self::monomial(Rational::one(), -1)
    }

    pub fn from_poly(p: &PolyX) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in p.coeffs().into_iter().enumerate() {
            if !c.is_zero() {
                terms.insert(k as i64, c);
            }
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    fn accumulate(&mut self, exp: i64, c: Rational) {
        let entry = self.terms.entry(exp).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.accumulate(e, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.accumulate(e, -c.clone());
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.accumulate(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            let coeff = super::rational_to_string(&a);
            match e {
                0 => f.write_str(&coeff)?,
                _ => {
                    if !a.is_one() {
                        f.write_str(&coeff)?;
                    }
                    if e == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Expands `p(arg)` exactly.
pub fn laurent_substitute(p: &PolyX, arg: &LaurentPoly) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for c in p.coeffs().into_iter().rev() {
        acc = &(&acc * arg) + &LaurentPoly::monomial(c, 0);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn substitution_examples() {
        let arg = LaurentPoly::x_minus_inverse();
        assert_eq!(laurent_substitute(&PolyX::var(), &arg), arg);

        // 1 + (x - 1/x)^2 = x^2 - 1 + x^-2
        let got = laurent_substitute(&PolyX::from_ints(&[1, 0, 1]), &arg);
        let expected = &(&LaurentPoly::monomial(int(1), 2) - &LaurentPoly::one())
            + &LaurentPoly::monomial(int(1), -2);
        assert_eq!(got, expected);
        assert_eq!(got.to_string(), "x^2 - 1 + x^-2");

        assert!(laurent_substitute(&PolyX::zero(), &arg).is_zero());
    }

    #[test]
    fn no_zero_terms_are_stored() {
        let a = LaurentPoly::x_plus_inverse();
        let d = &a - &a;
        assert!(d.is_zero());
        assert_eq!(d.terms().count(), 0);
    }

    fn arb_poly() -> impl Strategy<Value = PolyX> {
        prop::collection::vec((-9i64..9, 1i64..4).prop_map(|(p, q)| rat(p, q)), 0..7)
            .prop_map(|c| PolyX::from_coeffs(&c))
    }

    proptest! {
        #[test]
        fn substitution_is_a_ring_homomorphism(p in arb_poly(), q in arb_poly()) {
            let arg = LaurentPoly::x_minus_inverse();
            let lhs = laurent_substitute(&(&p * &q), &arg);
            let rhs = &laurent_substitute(&p, &arg) * &laurent_substitute(&q, &arg);
            prop_assert_eq!(lhs, rhs);
            let lhs = laurent_substitute(&(&p + &q), &arg);
            let rhs = &laurent_substitute(&p, &arg) + &laurent_substitute(&q, &arg);
            prop_assert_eq!(lhs, rhs);
        }
    }
}
