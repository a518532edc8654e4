use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rational_to_f64, Rational};

/// Marker naming the indeterminate of a [`Poly`].
pub trait Variable: Copy + Eq + Hash + fmt::Debug + Default + Send + Sync + 'static {
    const NAME: &'static str;
}

/// The interpolation parameter `t`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct T;

/// The series variable `x`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct X;

impl Variable for T {
    const NAME: &'static str = "t";
}

impl Variable for X {
    const NAME: &'static str = "x";
}

/// Dense univariate polynomial with rational coefficients.
///
/// Stored as an integer numerator vector over a common positive
/// denominator, reduced so that the content of the numerators is coprime
/// to the denominator. The zero polynomial has no stored coefficients.
/// This makes structural equality coincide with polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<V: Variable> {
    num: Vec<BigInt>,
    den: BigInt,
    _var: PhantomData<V>,
}

pub type PolyT = Poly<T>;
pub type PolyX = Poly<X>;

impl<V: Variable> Poly<V> {
    fn from_parts(mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        while num.last().is_some_and(Zero::is_zero) {
            num.pop();
        }
        if num.is_empty() {
            return Self::zero();
        }
        if den.is_negative() {
            den = -den;
            for c in &mut num {
                *c = -std::mem::take(c);
            }
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in &mut num {
                *c /= &g;
            }
            den /= &g;
        }
        Poly {
            num,
            den,
            _var: PhantomData,
        }
    }

    pub fn zero() -> Self {
        Poly {
            num: Vec::new(),
            den: BigInt::one(),
            _var: PhantomData,
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// The polynomial `c · v^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut num = vec![BigInt::zero(); k + 1];
        let (n, d) = c.into_raw();
        num[k] = n;
        Self::from_parts(num, d)
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// Builds a polynomial from coefficients, constant term first.
    pub fn from_coeffs(coeffs: &[Rational]) -> Self {
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::from_parts(num, den)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_parts(
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            BigInt::one(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.num.len().checked_sub(1)
    }

    /// Number of stored coefficients (`degree + 1`, or 0 for zero).
    pub fn len(&self) -> usize {
        self.num.len()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        match self.num.get(k) {
            Some(n) => Rational::new(n.clone(), self.den.clone()),
            None => Rational::zero(),
        }
    }

    /// All coefficients, constant term first; empty for zero.
    pub fn coeffs(&self) -> Vec<Rational> {
        (0..self.num.len()).map(|k| self.coeff(k)).collect()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.degree().map_or_else(Rational::zero, |d| self.coeff(d))
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for n in self.num.iter().rev() {
            acc = acc * at + Rational::from_integer(n.clone());
        }
        acc / Rational::from_integer(self.den.clone())
    }

    pub fn eval_f64(&self, at: f64) -> f64 {
        let mut acc = 0.0;
        for k in (0..self.num.len()).rev() {
            acc = acc * at + rational_to_f64(&self.coeff(k));
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let num = self.num.iter().map(|n| n * c.numer()).collect();
        Self::from_parts(num, &self.den * c.denom())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self(a·v + b)`, expanded.
    pub fn substitute_affine(&self, a: &Rational, b: &Rational) -> Self {
        let linear = Self::from_coeffs(&[b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for k in (0..self.num.len()).rev() {
            acc = &(&acc * &linear) + &Self::constant(self.coeff(k));
        }
        acc
    }

    /// Reinterprets the coefficients as a polynomial in another variable.
    pub fn rename<W: Variable>(&self) -> Poly<W> {
        Poly {
            num: self.num.clone(),
            den: self.den.clone(),
            _var: PhantomData,
        }
    }

    /// Renders the polynomial with terms in ascending or descending degree,
    /// e.g. `3x + 4x^3 + x^5` or `t^3/48 - t/12`.
    pub fn render(&self, descending: bool) -> String {
        let mut terms: Vec<(usize, Rational)> = (0..self.num.len())
            .filter(|&k| !self.num[k].is_zero())
            .map(|k| (k, self.coeff(k)))
            .collect();
        if terms.is_empty() {
            return "0".to_string();
        }
        if descending {
            terms.reverse();
        }
        let mut out = String::new();
        for (i, (k, c)) in terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&render_term(&c.abs(), *k, V::NAME));
        }
        out
    }
}

fn render_term(c: &Rational, k: usize, var: &str) -> String {
    let mono = match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    };
    let (n, d) = (c.numer(), c.denom());
    let mut s = String::new();
    if mono.is_empty() || !n.is_one() {
        s.push_str(&n.to_string());
    }
    s.push_str(&mono);
    if !d.is_one() {
        s.push('/');
        s.push_str(&d.to_string());
    }
    s
}

impl<V: Variable> Zero for Poly<V> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
}

impl<V: Variable> One for Poly<V> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<V: Variable> Default for Poly<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V: Variable> fmt::Debug for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.render(false))
    }
}

impl<V: Variable> fmt::Display for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

fn add_scaled<V: Variable>(a: &Poly<V>, b: &Poly<V>, negate_b: bool) -> Poly<V> {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let g = a.den.gcd(&b.den);
    let fa = &b.den / &g;
    let fb = &a.den / &g;
    let den = &a.den * &fa;
    let len = a.num.len().max(b.num.len());
    let mut num = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = match a.num.get(k) {
            Some(n) => n * &fa,
            None => BigInt::zero(),
        };
        if let Some(n) = b.num.get(k) {
            if negate_b {
                acc -= n * &fb;
            } else {
                acc += n * &fb;
            }
        }
        num.push(acc);
    }
    Poly::from_parts(num, den)
}

impl<V: Variable> Add<&Poly<V>> for &Poly<V> {
    type Output = Poly<V>;
    fn add(self, rhs: &Poly<V>) -> Poly<V> {
        add_scaled(self, rhs, false)
    }
}

impl<V: Variable> Sub<&Poly<V>> for &Poly<V> {
    type Output = Poly<V>;
    fn sub(self, rhs: &Poly<V>) -> Poly<V> {
        add_scaled(self, rhs, true)
    }
}

impl<V: Variable> Mul<&Poly<V>> for &Poly<V> {
    type Output = Poly<V>;
    fn mul(self, rhs: &Poly<V>) -> Poly<V> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut num = vec![BigInt::zero(); self.num.len() + rhs.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.num.iter().enumerate() {
                if !b.is_zero() {
                    num[i + j] += a * b;
                }
            }
        }
        Poly::from_parts(num, &self.den * &rhs.den)
    }
}

impl<V: Variable> Neg for &Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        Poly {
            num: self.num.iter().map(|n| -n).collect(),
            den: self.den.clone(),
            _var: PhantomData,
        }
    }
}

impl<V: Variable> Neg for Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<V: Variable> $tr<Poly<V>> for Poly<V> {
            type Output = Poly<V>;
            fn $m(self, rhs: Poly<V>) -> Poly<V> {
                (&self).$m(&rhs)
            }
        }
        impl<V: Variable> $tr<&Poly<V>> for Poly<V> {
            type Output = Poly<V>;
            fn $m(self, rhs: &Poly<V>) -> Poly<V> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Generalized binomial coefficient `C(p, k) = p(p−1)···(p−k+1)/k!` with a
/// polynomial upper argument. `gbinom(p, 0) = 1`.
pub fn gbinom<V: Variable>(p: &Poly<V>, k: usize) -> Poly<V> {
    let mut acc = Poly::one();
    let mut factorial = BigInt::one();
    for i in 0..k {
        let factor = p - &Poly::constant(Rational::from_integer(BigInt::from(i)));
        acc = &acc * &factor;
        factorial *= BigInt::from(i + 1);
    }
    acc.scale(&Rational::new(BigInt::one(), factorial))
}

/// `p(a·t + b)`, expanded and normalized.
pub fn affine_sub<V: Variable>(p: &Poly<V>, a: &Rational, b: &Rational) -> Poly<V> {
    p.substitute_affine(a, b)
}
