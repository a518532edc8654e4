use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{int, rat, rational_to_f64, rational_to_string, ExactError, Rational};

/// Exact element `a + b√5` of ℚ(√5).
///
/// Since √5 is irrational the pair `(a, b)` is unique, so derived equality
/// is field equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QuadExt {
    a: Rational,
    b: Rational,
}

impl QuadExt {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadExt { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        QuadExt {
            a,
            b: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn sqrt5() -> Self {
        QuadExt::new(Rational::zero(), Rational::one())
    }

    /// `(1 + √5)/2`, the positive root of `z² − z − 1`.
    pub fn golden() -> Self {
        QuadExt::new(rat(1, 2), rat(1, 2))
    }

    /// Rational part.
    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// Coefficient of √5.
    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Field norm `a² − 5b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - int(5) * &self.b * &self.b
    }

    pub fn conjugate(&self) -> Self {
        QuadExt::new(self.a.clone(), -&self.b)
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(QuadExt::new(&self.a / &n, -&self.b / &n))
    }

    pub fn checked_div(&self, rhs: &QuadExt) -> Result<Self, ExactError> {
        Ok(self * &rhs.inv()?)
    }

    /// Exact division by √5: `(a + b√5)/√5 = b + (a/5)√5`.
    pub fn div_sqrt5(&self) -> Self {
        QuadExt::new(self.b.clone(), &self.a / int(5))
    }

    /// Integer power; negative exponents go through [`QuadExt::inv`].
    pub fn pow(&self, e: i64) -> Result<Self, ExactError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut base = base;
        let mut acc = QuadExt::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn to_f64(&self) -> f64 {
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * 5f64.sqrt()
    }

    /// Renders a value that is purely rational or a pure multiple of √5
    /// as `m`, `m/√5` or `m√5`. Returns `None` for mixed values.
    pub fn table_form(&self) -> Option<String> {
        if !self.a.is_zero() && !self.b.is_zero() {
            return None;
        }
        if self.b.is_zero() {
            return Some(rational_to_string(&self.a));
        }
        let sign = if self.b.is_negative() { "-" } else { "" };
        let b = self.b.abs();
        if b.is_integer() {
            let m = if b.is_one() {
                String::new()
            } else {
                b.numer().to_string()
            };
            return Some(format!("{sign}{m}√5"));
        }
        // b = m/5 with m integral renders as m/√5.
        let m = &b * int(5);
        if m.is_integer() {
            return Some(format!("{sign}{}/√5", m.numer()));
        }
        Some(format!("{sign}{}√5", rational_to_string(&b)))
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = self.table_form() {
            return f.write_str(&s);
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        write!(
            f,
            "{} {sign} {}√5",
            rational_to_string(&self.a),
            rational_to_string(&self.b.abs())
        )
    }
}

impl Add<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        QuadExt::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        QuadExt::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul<&QuadExt> for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        QuadExt::new(
            &self.a * &rhs.a + int(5) * &self.b * &rhs.b,
            &self.a * &rhs.b + &rhs.a * &self.b,
        )
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::new(-&self.a, -&self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn golden_ratio_squares() {
        let g = QuadExt::golden();
        assert_eq!(&g * &g, QuadExt::new(rat(3, 2), rat(1, 2)));
        assert_eq!(&g * &g, &g + &QuadExt::one());
        assert_eq!(
            &QuadExt::sqrt5() * &QuadExt::sqrt5(),
            QuadExt::from_rational(int(5))
        );
        assert_eq!(&g * &QuadExt::new(rat(-1, 2), rat(1, 2)), QuadExt::one());
    }

    #[test]
    fn inverses() {
        let g = QuadExt::golden();
        let gi = g.inv().unwrap();
        assert_eq!(gi, QuadExt::new(rat(-1, 2), rat(1, 2)));
        assert_eq!(gi, &g - &QuadExt::one());
        assert_eq!(&g * &gi, QuadExt::one());
        assert_eq!(
            QuadExt::from_rational(int(2)).inv().unwrap(),
            QuadExt::from_rational(rat(1, 2))
        );
        assert_eq!(QuadExt::zero().inv(), Err(ExactError::DivisionByZero));
        assert_eq!(QuadExt::zero().pow(-1), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn table_rendering() {
        assert_eq!(
            QuadExt::new(rat(0, 1), rat(4, 5)).table_form().unwrap(),
            "4/√5"
        );
        assert_eq!(
            QuadExt::new(rat(0, 1), rat(5, 1)).table_form().unwrap(),
            "5√5"
        );
        assert_eq!(QuadExt::sqrt5().table_form().unwrap(), "√5");
        assert_eq!(QuadExt::from_rational(int(21)).table_form().unwrap(), "21");
        assert_eq!(QuadExt::zero().table_form().unwrap(), "0");
        assert_eq!(QuadExt::golden().table_form(), None);
        assert_eq!(QuadExt::golden().to_string(), "1/2 + 1/2√5");
    }

    #[test]
    fn division_by_sqrt5() {
        let x = QuadExt::new(rat(4, 1), rat(0, 1)).div_sqrt5();
        assert_eq!(&x * &QuadExt::sqrt5(), QuadExt::from_rational(int(4)));
    }

    fn arb_quad() -> impl Strategy<Value = QuadExt> {
        ((-30i64..30, 1i64..7), (-30i64..30, 1i64..7))
            .prop_map(|((a, p), (b, q))| QuadExt::new(rat(a, p), rat(b, q)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]
        #[test]
        fn field_laws(u in arb_quad(), v in arb_quad(), w in arb_quad()) {
            prop_assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
            prop_assert_eq!(&u * &v, &v * &u);
            if !u.is_zero() {
                prop_assert_eq!(&u * &u.inv().unwrap(), QuadExt::one());
                prop_assert_eq!(u.pow(-3).unwrap(), u.pow(3).unwrap().inv().unwrap());
            }
        }
    }
}
