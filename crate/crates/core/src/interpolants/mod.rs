//! The interpolating series `Φ_j(t, x)`, `Λ_j(t, x)` and `α(x)^t`.
//!
//! With `α(x) = (x + √(x² + 4))/2` and the parity index `j` read modulo 2,
//!
//! ```text
//! Φ_j(t, x) = (α^t − (−1)^j α^{−t}) / √(x² + 4)
//! Λ_j(t, x) =  α^t + (−1)^j α^{−t}
//! ```
//!
//! Each is a power series in `x` whose coefficients are polynomials in `t`.
//! [`def_series`] builds them from binomial coefficient formulas and
//! [`closed_series`] from `exp(t·asinh(x/2))`; the two must agree exactly.
//! At integer `t` of the right parity they collapse to `F_t(x)` and `L_t(x)`.

mod golden;
mod numeric;
mod relations;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::exact::{gbinom, int, rat, PolyT, PolyX, Rational};
use crate::series::{
    asinh_series, binom_series, exp_t_compose, lift, ts_t_eval, ts_t_substitute, RatSeries, TSeries,
};

pub use golden::{exact_at_one, golden_pow, radical_form_check, radical_form_sides, RadicalForm};
pub use numeric::{alpha_num, alpha_pair, lambda_num, lambda_routes, phi_num, phi_routes, Routes};
pub use relations::{
    relation_check, relation_outcome, relation_sides, Mismatch, Relation, SidePair,
};

/// Relative tolerance for agreement of the two numeric routes.
pub const ROUTE_TOLERANCE: f64 = 1e-11;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InterpError {
    #[error("{family} at t = {k} is not a polynomial (index parity mismatch)")]
    ParityMismatch { family: Family, k: usize },
    #[error("alpha^t is not a polynomial in x")]
    NotPolynomial,
    #[error("order {order} too small; need more than {k}")]
    OrderTooSmall { order: usize, k: usize },
    #[error("nonzero coefficient at x^{power} beyond the expected degree")]
    TruncationResidue { power: usize },
    #[error("numeric routes disagree: binet {binet}, hyperbolic {hyperbolic}")]
    RouteDisagreement { binet: f64, hyperbolic: f64 },
}

/// Parity index `j`, reduced modulo 2.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParityIndex(u8);

impl ParityIndex {
    pub const ZERO: ParityIndex = ParityIndex(0);
    pub const ONE: ParityIndex = ParityIndex(1);

    pub fn new(j: i64) -> Self {
        ParityIndex(j.rem_euclid(2) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// `j + 1`.
    pub fn flip(self) -> Self {
        ParityIndex(1 - self.0)
    }

    /// `(−1)^j`.
    pub fn sign(self) -> i64 {
        if self.0 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for ParityIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Phi0,
    Phi1,
    Lam0,
    Lam1,
    /// `α(x)^t`
    AlphaT,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Phi0,
        Family::Phi1,
        Family::Lam0,
        Family::Lam1,
        Family::AlphaT,
    ];

    pub fn phi(j: ParityIndex) -> Self {
        if j.value() == 0 {
            Family::Phi0
        } else {
            Family::Phi1
        }
    }

    pub fn lambda(j: ParityIndex) -> Self {
        if j.value() == 0 {
            Family::Lam0
        } else {
            Family::Lam1
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Phi0 => "Phi0",
            Family::Phi1 => "Phi1",
            Family::Lam0 => "Lam0",
            Family::Lam1 => "Lam1",
            Family::AlphaT => "AlphaT",
        }
    }

    /// `t` parity at which the family is polynomial, `None` for `AlphaT`.
    pub fn integer_parity(self) -> Option<usize> {
        match self {
            Family::Phi0 | Family::Lam0 => Some(0),
            Family::Phi1 | Family::Lam1 => Some(1),
            Family::AlphaT => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                format!("unknown family `{s}` (expected Phi0, Phi1, Lam0, Lam1 or AlphaT)")
            })
    }
}

fn half_t_plus(c: Rational) -> PolyT {
    &PolyT::var().scale(&rat(1, 2)) + &PolyT::constant(c)
}

/// Coefficient of `x^m` in the binomial-sum definition of a family.
fn def_coefficient(f: Family, m: usize) -> PolyT {
    let t = PolyT::var();
    let mi = m as i64;
    match f {
        // x^{2k−1} ↦ C(t/2 + k − 1, 2k − 1)
        Family::Phi0 if m % 2 == 1 => {
            let k = (mi + 1) / 2;
            gbinom(&half_t_plus(int(k - 1)), m)
        }
        // x^{2k} ↦ C((t − 1)/2 + k, 2k)
        Family::Phi1 if m % 2 == 0 => {
            let k = mi / 2;
            gbinom(&half_t_plus(rat(2 * k - 1, 2)), m)
        }
        Family::Lam0 if m == 0 => PolyT::from_ints(&[2]),
        // x^{2k} ↦ (t/(2k))·C(t/2 + k − 1, 2k − 1)
        Family::Lam0 if m % 2 == 0 => {
            let k = mi / 2;
            &gbinom(&half_t_plus(int(k - 1)), m - 1) * &t.scale(&rat(1, 2 * k))
        }
        // x^{2k+1} ↦ (t/(2k+1))·C((t − 1)/2 + k, 2k)
        Family::Lam1 if m % 2 == 1 => {
            let k = (mi - 1) / 2;
            &gbinom(&half_t_plus(rat(2 * k - 1, 2)), m - 1) * &t.scale(&rat(1, mi))
        }
        Family::AlphaT if m == 0 => PolyT::one(),
        // x^n ↦ (t/(2n))·C((t + n)/2 − 1, n − 1)
        Family::AlphaT => &gbinom(&half_t_plus(rat(mi - 2, 2)), m - 1) * &t.scale(&rat(1, 2 * mi)),
        _ => PolyT::zero(),
    }
}

/// The family built coefficientwise from binomial sums.
pub fn def_series(f: Family, order: usize) -> TSeries {
    TSeries::from_fn(order, |m| def_coefficient(f, m))
}

/// `√(x² + 4) = 2(1 + x²/4)^{1/2}`, or its reciprocal.
pub fn disc_sqrt_series(order: usize, inverse: bool) -> RatSeries {
    let (gamma, scale) = if inverse {
        (rat(-1, 2), rat(1, 2))
    } else {
        (rat(1, 2), int(2))
    };
    let inner = RatSeries::monomial(rat(1, 4), 2, order);
    binom_series(&gamma, order)
        .compose(&inner)
        .expect("x^2/4 has zero constant term")
        .scale_rational(&scale)
}

/// `exp(±t·asinh(x/2))`, i.e. `α(x)^{±t}`.
fn alpha_powers(order: usize) -> (TSeries, TSeries) {
    let half_x = RatSeries::monomial(rat(1, 2), 1, order);
    let u = asinh_series(order)
        .compose(&half_x)
        .expect("x/2 has zero constant term");
    let plus = exp_t_compose(&u).expect("asinh has zero constant term");
    let minus = ts_t_substitute(&plus, &int(-1), &int(0));
    (plus, minus)
}

/// The family built from its closed form in `α(x)^{±t}` and `√(x² + 4)`.
pub fn closed_series(f: Family, order: usize) -> TSeries {
    let (plus, minus) = alpha_powers(order);
    let inv_sqrt = lift(&disc_sqrt_series(order, true));
    let diff = || plus.sub(&minus).expect("same order");
    let sum = || plus.add(&minus).expect("same order");
    match f {
        Family::Phi0 => diff().mul(&inv_sqrt).expect("same order"),
        Family::Phi1 => sum().mul(&inv_sqrt).expect("same order"),
        Family::Lam0 => sum(),
        Family::Lam1 => diff(),
        Family::AlphaT => plus,
    }
}

/// Evaluates a family at integer `t = k`, which must match its index
/// parity, and returns the resulting Fibonacci or Lucas polynomial.
pub fn specialize(f: Family, k: usize, order: usize) -> Result<PolyX, InterpError> {
    let parity = f.integer_parity().ok_or(InterpError::NotPolynomial)?;
    if k % 2 != parity {
        return Err(InterpError::ParityMismatch { family: f, k });
    }
    if order <= k {
        return Err(InterpError::OrderTooSmall { order, k });
    }
    let values = ts_t_eval(&def_series(f, order), &int(k as i64));
    // F_k has degree k − 1, L_k degree k.
    let bound = match f {
        Family::Phi0 | Family::Phi1 => k,
        _ => k + 1,
    };
    if let Some(power) = (bound..order).find(|&m| !num_traits::Zero::is_zero(values.coeff(m))) {
        return Err(InterpError::TruncationResidue { power });
    }
    Ok(PolyX::from_coeffs(&values.coeffs()[..bound.min(order)]))
}

/// The five definitional series plus `√(x² + 4)` and its reciprocal at one
/// order. Immutable once built; shared through [`basis`].
#[derive(Debug)]
pub struct Basis {
    order: usize,
    series: [TSeries; 5],
    sqrt: TSeries,
    inv_sqrt: TSeries,
}

impl Basis {
    pub fn new(order: usize) -> Self {
        Basis {
            order,
            series: Family::ALL.map(|f| def_series(f, order)),
            sqrt: lift(&disc_sqrt_series(order, false)),
            inv_sqrt: lift(&disc_sqrt_series(order, true)),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, f: Family) -> &TSeries {
        let i = Family::ALL.iter().position(|&g| g == f).expect("listed");
        &self.series[i]
    }

    pub fn phi(&self, j: ParityIndex) -> &TSeries {
        self.get(Family::phi(j))
    }

    pub fn lambda(&self, j: ParityIndex) -> &TSeries {
        self.get(Family::lambda(j))
    }

    /// `√(x² + 4)` over `ℚ[t]`.
    pub fn sqrt(&self) -> &TSeries {
        &self.sqrt
    }

    pub fn inv_sqrt(&self) -> &TSeries {
        &self.inv_sqrt
    }
}

/// Process-wide cache of [`Basis`] values by order.
pub fn basis(order: usize) -> Arc<Basis> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Basis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.lock().expect("basis cache poisoned").get(&order) {
        return Arc::clone(b);
    }
    // Built outside the lock; a racing duplicate is harmless.
    let built = Arc::new(Basis::new(order));
    let mut guard = cache.lock().expect("basis cache poisoned");
    Arc::clone(guard.entry(order).or_insert(built))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classical::{fib_poly, lucas_poly};
    use crate::series::TruncSeries;

    fn t_poly(c: &[Rational]) -> PolyT {
        PolyT::from_coeffs(c)
    }

    #[test]
    fn parity_index_wraps() {
        assert_eq!(ParityIndex::new(2), ParityIndex::ZERO);
        assert_eq!(ParityIndex::new(-1), ParityIndex::ONE);
        assert_eq!(ParityIndex::ONE.flip(), ParityIndex::ZERO);
        assert_eq!(ParityIndex::ONE.sign(), -1);
    }

    #[test]
    fn definitional_coefficients() {
        let phi0 = def_series(Family::Phi0, 8);
        assert_eq!(phi0.coeff(1), &t_poly(&[int(0), rat(1, 2)]));
        // t(t² − 4)/48
        let x3 = t_poly(&[int(0), rat(-1, 12), int(0), rat(1, 48)]);
        assert_eq!(phi0.coeff(3), &x3);
        assert_eq!(x3.eval(&int(4)), int(1));
        assert_eq!(x3.eval(&int(6)), int(4));

        let lam0_at_4 = ts_t_eval(&def_series(Family::Lam0, 8), &int(4));
        assert_eq!(
            lam0_at_4,
            RatSeries::from_prefix(&lucas_poly(4).coeffs(), 8)
        );

        let alpha_at_1 = ts_t_eval(&def_series(Family::AlphaT, 8), &int(1));
        assert_eq!(alpha_at_1.coeff(1), &rat(1, 2));
    }

    /// Brute force against the classical polynomials for the argument
    /// forms 2t and 2t + 1 of the binomial sums.
    #[test]
    fn definitions_interpolate_classical_polynomials() {
        let n = 24;
        for k in 0..n {
            let t = int(k as i64);
            let (phi, lam) = if k % 2 == 0 {
                (Family::Phi0, Family::Lam0)
            } else {
                (Family::Phi1, Family::Lam1)
            };
            assert_eq!(
                ts_t_eval(&def_series(phi, n), &t),
                RatSeries::from_prefix(&fib_poly(k).coeffs(), n),
                "F_{k}"
            );
            assert_eq!(
                ts_t_eval(&def_series(lam, n), &t),
                RatSeries::from_prefix(&lucas_poly(k).coeffs(), n),
                "L_{k}"
            );
        }
    }

    #[test]
    fn alpha_t_is_average_of_lucas_series() {
        let n = 20;
        let avg = def_series(Family::Lam0, n)
            .add(&def_series(Family::Lam1, n))
            .unwrap()
            .scale_rational(&rat(1, 2));
        assert_eq!(def_series(Family::AlphaT, n), avg);
    }

    #[test]
    fn closed_forms_match_definitions() {
        for f in Family::ALL {
            assert_eq!(closed_series(f, 16), def_series(f, 16), "{f}");
        }
        assert_eq!(closed_series(Family::Phi1, 4).coeff(0), &PolyT::one());
        assert_eq!(
            closed_series(Family::Lam0, 4).coeff(0),
            &PolyT::from_ints(&[2])
        );
    }

    #[test]
    fn discriminant_root() {
        let n = 12;
        let s = disc_sqrt_series(n, false);
        assert_eq!(
            &s.coeffs()[..5],
            &[int(2), int(0), rat(1, 4), int(0), rat(-1, 64)]
        );
        assert_eq!(
            s.mul(&disc_sqrt_series(n, true)).unwrap(),
            RatSeries::one(n)
        );
        assert_eq!(
            s.mul(&s).unwrap(),
            RatSeries::from_prefix(&[int(4), int(0), int(1)], n)
        );
    }

    #[test]
    fn specialization() {
        assert_eq!(
            specialize(Family::Phi0, 6, 32).unwrap(),
            PolyX::from_ints(&[0, 3, 0, 4, 0, 1])
        );
        assert_eq!(
            specialize(Family::Lam1, 5, 32).unwrap(),
            PolyX::from_ints(&[0, 5, 0, 5, 0, 1])
        );
        assert_eq!(specialize(Family::Phi0, 0, 8).unwrap(), PolyX::zero());
        assert_eq!(
            specialize(Family::Phi0, 5, 32),
            Err(InterpError::ParityMismatch {
                family: Family::Phi0,
                k: 5
            })
        );
        assert_eq!(
            specialize(Family::AlphaT, 2, 32),
            Err(InterpError::NotPolynomial)
        );
        assert_eq!(
            specialize(Family::Lam0, 8, 8),
            Err(InterpError::OrderTooSmall { order: 8, k: 8 })
        );
    }

    #[test]
    fn parity_in_x_and_t() {
        let n = 16;
        for f in [Family::Phi0, Family::Lam1] {
            let s = def_series(f, n);
            assert!((0..n).step_by(2).all(|m| s.coeff(m).is_zero()), "{f}");
            assert_eq!(ts_t_substitute(&s, &int(-1), &int(0)), s.neg());
        }
        for f in [Family::Phi1, Family::Lam0] {
            let s = def_series(f, n);
            assert!((1..n).step_by(2).all(|m| s.coeff(m).is_zero()), "{f}");
            assert_eq!(ts_t_substitute(&s, &int(-1), &int(0)), s);
        }
    }

    #[test]
    fn coefficient_degree_in_t_is_the_power_of_x() {
        let n = 20;
        for f in Family::ALL {
            let s = def_series(f, n);
            for m in 1..n {
                let c = s.coeff(m);
                if !c.is_zero() {
                    assert_eq!(c.degree(), Some(m), "{f} x^{m}");
                }
            }
        }
    }

    #[test]
    fn basis_cache_returns_shared_values() {
        let a = basis(10);
        let b = basis(10);
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(a.get(Family::Lam1), &def_series(Family::Lam1, 10));
        let s2 = a.sqrt().mul(a.sqrt()).unwrap();
        assert_eq!(
            s2,
            TruncSeries::from_prefix(&[PolyT::from_ints(&[4]), PolyT::zero(), PolyT::one()], 10)
        );
    }
}
