//! Truncated formal power series in `x`.
//!
//! A [`TruncSeries`] stores exactly `N` coefficients and means "known modulo
//! `x^N`". Trailing zeros are kept. Binary operations refuse operands of
//! different order instead of silently re-truncating.
//!
//! Coefficients are either [`Rational`] or polynomials in `t` ([`PolyT`]);
//! mixing the two is a type error. Rational series lift into the
//! polynomial ring with [`lift`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact::{affine_sub, gbinom, PolyT, Rational};

/// Order used when the caller does not choose one.
pub const DEFAULT_ORDER: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("inner series must have zero constant term")]
    NonzeroConstantTerm,
    #[error("truncation order must be at least 1")]
    ZeroOrder,
}

/// Coefficient ring of a truncated series.
pub trait Coeff: Clone + PartialEq + fmt::Debug + Send + Sync + Zero + One {
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;
    fn from_rational(c: Rational) -> Self;
}

impl Coeff for Rational {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Rational) -> Self {
        self * c
    }
    fn from_rational(c: Rational) -> Self {
        c
    }
}

impl Coeff for PolyT {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.scale(c)
    }
    fn from_rational(c: Rational) -> Self {
        PolyT::constant(c)
    }
}

/// Power series in `x` modulo `x^N`, with `N = order()`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries<C> {
    coeffs: Vec<C>,
}

pub type RatSeries = TruncSeries<Rational>;
pub type TSeries = TruncSeries<PolyT>;

impl<C: Coeff> TruncSeries<C> {
    /// Takes the coefficients as given; the order is their count.
    pub fn new(coeffs: Vec<C>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::ZeroOrder);
        }
        Ok(TruncSeries { coeffs })
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        assert!(order >= 1, "truncation order must be at least 1");
        TruncSeries {
            coeffs: (0..order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| C::zero())
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    /// The series `x` (which is zero when `order == 1`).
    pub fn var(order: usize) -> Self {
        Self::monomial(C::one(), 1, order)
    }

    /// `c · x^k`, truncated.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Embeds a finite coefficient list, dropping terms at `x^order` and up.
    pub fn from_prefix(prefix: &[C], order: usize) -> Self {
        Self::from_fn(order, |k| prefix.get(k).cloned().unwrap_or_else(C::zero))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(self.zip_with(other, C::plus))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(self.zip_with(other, C::minus))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![C::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn neg(&self) -> Self {
        self.map(C::negated)
    }

    /// Multiplies every coefficient by a ring element.
    pub fn scale(&self, c: &C) -> Self {
        self.map(|a| a.times(c))
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        self.map(|a| a.scaled(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// `outer ∘ inner`, by Horner's scheme over truncated powers of `inner`.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut acc = Self::constant(self.coeffs[n - 1].clone(), n);
        for c in self.coeffs[..n - 1].iter().rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] = acc.coeffs[0].plus(c);
        }
        Ok(acc)
    }

    /// Formal antiderivative with zero constant term, same order.
    pub fn integrate(&self) -> Self {
        let n = self.order();
        Self::from_fn(n, |k| {
            if k == 0 {
                C::zero()
            } else {
                self.coeffs[k - 1].scaled(&Rational::new(BigInt::one(), BigInt::from(k)))
            }
        })
    }

    pub fn map<D: Coeff>(&self, f: impl FnMut(&C) -> D) -> TruncSeries<D> {
        TruncSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// `f(c·x)`: coefficient `k` is multiplied by `c^k`.
    pub fn scale_var(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(self.order());
        for a in &self.coeffs {
            out.push(a.scaled(&power));
            power *= c;
        }
        TruncSeries { coeffs: out }
    }

    /// Smallest power of `x` where the two series differ.
    pub fn first_mismatch(&self, other: &Self) -> Result<Option<usize>, SeriesError> {
        self.check_order(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b))
    }
}

impl<C: Coeff> fmt::Debug for TruncSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncSeries")
            .field("order", &self.order())
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

/// Embeds a rational series into the ring of series over `ℚ[t]`.
pub fn lift(s: &RatSeries) -> TSeries {
    s.map(|c| PolyT::constant(c.clone()))
}

/// `(1 + z)^γ` through the generalized binomial coefficients.
pub fn binom_series(gamma: &Rational, order: usize) -> RatSeries {
    let upper = PolyT::constant(gamma.clone());
    TruncSeries::from_fn(order, |k| gbinom(&upper, k).coeff(0))
}

/// `z ↦ z²` substituted into a rational series.
fn at_square(s: &RatSeries) -> RatSeries {
    let n = s.order();
    TruncSeries::from_fn(n, |k| {
        if k % 2 == 0 {
            s.coeff(k / 2).clone()
        } else {
            Rational::zero()
        }
    })
}

/// The compositional inverse of `sinh`, as the antiderivative of
/// `(1 + z²)^(−1/2)`.
pub fn asinh_series(order: usize) -> RatSeries {
    let minus_half = Rational::new(BigInt::from(-1), BigInt::from(2));
    at_square(&binom_series(&minus_half, order)).integrate()
}

/// `Σ z^(2k+1)/(2k+1)!`.
pub fn sinh_series(order: usize) -> RatSeries {
    let mut fact = BigInt::one();
    TruncSeries::from_fn(order, |k| {
        if k > 0 {
            fact *= BigInt::from(k);
        }
        if k % 2 == 1 {
            Rational::new(BigInt::one(), fact.clone())
        } else {
            Rational::zero()
        }
    })
}

/// `exp(t·u) = Σ tᵏ uᵏ / k!` for `u` with zero constant term. Each
/// coefficient of the result is a polynomial in `t` of degree at most its
/// power of `x`.
pub fn exp_t_compose(u: &RatSeries) -> Result<TSeries, SeriesError> {
    if !u.coeff(0).is_zero() {
        return Err(SeriesError::NonzeroConstantTerm);
    }
    let n = u.order();
    // t_coeffs[m][k] = [x^m] u^k / k!
    let mut t_coeffs = vec![vec![Rational::zero(); n]; n];
    let mut power = RatSeries::one(n);
    let mut fact = BigInt::one();
    for k in 0..n {
        if k > 0 {
            power = power.mul(u)?;
            fact *= BigInt::from(k);
        }
        let inv_fact = Rational::new(BigInt::one(), fact.clone());
        // u^k starts at x^k
        for m in k..n {
            let c = power.coeff(m);
            if !c.is_zero() {
                t_coeffs[m][k] = c * &inv_fact;
            }
        }
    }
    Ok(TruncSeries {
        coeffs: t_coeffs.iter().map(|c| PolyT::from_coeffs(c)).collect(),
    })
}

/// Applies `t ↦ a·t + b` to every coefficient.
pub fn ts_t_substitute(s: &TSeries, a: &Rational, b: &Rational) -> TSeries {
    if a.is_one() && b.is_zero() {
        return s.clone();
    }
    s.map(|p| affine_sub(p, a, b))
}

/// Evaluates every coefficient at `t = t0`.
pub fn ts_t_eval(s: &TSeries, t0: &Rational) -> RatSeries {
    s.map(|p| p.eval(t0))
}
