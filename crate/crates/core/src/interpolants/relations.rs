//! Identities among the interpolating series, checked exactly modulo
//! `x^N` over `ℚ[t]`.

use std::fmt;

use crate::classical::{fib_poly, lucas_poly};
use crate::exact::{int, PolyT, Rational};
use crate::series::{lift, ts_t_eval, ts_t_substitute, TSeries};

use super::{basis, Basis, Family, ParityIndex};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `Λ_j + √(x²+4)·Φ_j = 2α^t`
    AlphaPower,
    /// `Λ_j(t) = Φ_{j+1}(t−1) + Φ_{j+1}(t+1)`
    LucasFromPhi,
    /// `Φ_j(t+2) = xΦ_{j+1}(t+1) + Φ_j(t)`, and the same for `Λ`
    Recurrence,
    /// `Φ_j(t+1)Φ_j(t−1) − Φ_{j+1}(t)² = (−1)^{j+1}` and
    /// `Λ_j(t+1)Λ_j(t−1) − Λ_{j+1}(t)² = (−1)^j(x²+4)`
    CassiniMixed,
    /// `(Φ_j(t+1)Φ_j(t−1) − Φ_j(t)²)(x²+4) = (−1)^{j+1}x²` and
    /// `Λ_j(t+1)Λ_j(t−1) − Λ_j(t)² = (−1)^j x²`
    CassiniSame,
    /// `Φ_0(2t) = Φ_j(t)Λ_j(t)` and `Λ_0(2t) = Λ_j(t)² − 2(−1)^j`
    Doubling,
    /// At `t = 2n+j`: `Λ_{j+1} = √(x²+4)·F_{2n+j}` and
    /// `Φ_{j+1}·√(x²+4) = L_{2n+j}`, for `n = 1..=5`
    IntegerValues,
}

impl Relation {
    pub const ALL: [Relation; 7] = [
        Relation::AlphaPower,
        Relation::LucasFromPhi,
        Relation::Recurrence,
        Relation::CassiniMixed,
        Relation::CassiniSame,
        Relation::Doubling,
        Relation::IntegerValues,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::AlphaPower => "alpha-power",
            Relation::LucasFromPhi => "lucas-from-phi",
            Relation::Recurrence => "recurrence",
            Relation::CassiniMixed => "cassini-mixed",
            Relation::CassiniSame => "cassini-same",
            Relation::Doubling => "doubling",
            Relation::IntegerValues => "integer-values",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One compared pair of series.
#[derive(Clone, Debug)]
pub struct SidePair {
    pub label: String,
    pub lhs: TSeries,
    pub rhs: TSeries,
}

/// First differing coefficient of a failed comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub label: String,
    pub power: usize,
    pub lhs: PolyT,
    pub rhs: PolyT,
}

fn shift(s: &TSeries, b: i64) -> TSeries {
    ts_t_substitute(s, &int(1), &int(b))
}

fn mul(a: &TSeries, b: &TSeries) -> TSeries {
    a.mul(b).expect("basis series share one order")
}

fn add(a: &TSeries, b: &TSeries) -> TSeries {
    a.add(b).expect("basis series share one order")
}

fn sub(a: &TSeries, b: &TSeries) -> TSeries {
    a.sub(b).expect("basis series share one order")
}

fn constant(c: Rational, order: usize) -> TSeries {
    TSeries::constant(PolyT::constant(c), order)
}

/// `c₀ + c₂x²` as a series.
fn even_quadratic(c0: i64, c2: i64, order: usize) -> TSeries {
    TSeries::from_prefix(
        &[
            PolyT::from_ints(&[c0]),
            PolyT::zero(),
            PolyT::from_ints(&[c2]),
        ],
        order,
    )
}

fn pair(label: impl Into<String>, lhs: TSeries, rhs: TSeries) -> SidePair {
    SidePair {
        label: label.into(),
        lhs,
        rhs,
    }
}

/// Builds both sides of every comparison making up a relation.
pub fn relation_sides(rel: Relation, j: ParityIndex, b: &Basis) -> Vec<SidePair> {
    let n = b.order();
    let k = j.flip();
    let sign = j.sign();
    let phi = b.phi(j);
    let lam = b.lambda(j);
    match rel {
        Relation::AlphaPower => {
            let lhs = add(lam, &mul(b.sqrt(), phi));
            let rhs = b.get(Family::AlphaT).scale_rational(&int(2));
            vec![pair("lambda + S*phi = 2 alpha^t", lhs, rhs)]
        }
        Relation::LucasFromPhi => {
            let other = b.phi(k);
            let rhs = add(&shift(other, -1), &shift(other, 1));
            vec![pair(
                "lambda_j(t) = phi_j+1(t-1) + phi_j+1(t+1)",
                lam.clone(),
                rhs,
            )]
        }
        Relation::Recurrence => {
            let x = TSeries::var(n);
            let rec = |same: &TSeries, other: &TSeries| {
                (shift(same, 2), add(&mul(&x, &shift(other, 1)), same))
            };
            let (pl, pr) = rec(phi, b.phi(k));
            let (ll, lr) = rec(lam, b.lambda(k));
            vec![pair("phi", pl, pr), pair("lambda", ll, lr)]
        }
        Relation::CassiniMixed => {
            let lhs_of = |same: &TSeries, other: &TSeries| {
                sub(&mul(&shift(same, 1), &shift(same, -1)), &mul(other, other))
            };
            vec![
                pair("phi", lhs_of(phi, b.phi(k)), constant(int(-sign), n)),
                pair(
                    "lambda",
                    lhs_of(lam, b.lambda(k)),
                    even_quadratic(4 * sign, sign, n),
                ),
            ]
        }
        Relation::CassiniSame => {
            let lhs_of = |s: &TSeries| sub(&mul(&shift(s, 1), &shift(s, -1)), &mul(s, s));
            let disc = mul(b.sqrt(), b.sqrt());
            vec![
                pair(
                    "phi (times x^2+4)",
                    mul(&lhs_of(phi), &disc),
                    even_quadratic(0, -sign, n),
                ),
                pair("lambda", lhs_of(lam), even_quadratic(0, sign, n)),
            ]
        }
        Relation::Doubling => {
            let double = |s: &TSeries| ts_t_substitute(s, &int(2), &int(0));
            let lam0 = b.get(Family::Lam0);
            vec![
                pair(
                    "phi0(2t) = phi_j lambda_j",
                    double(b.get(Family::Phi0)),
                    mul(phi, lam),
                ),
                pair(
                    "lambda0(2t) = lambda_j^2 - 2(-1)^j",
                    double(lam0),
                    sub(&mul(lam, lam), &constant(int(2 * sign), n)),
                ),
            ]
        }
        Relation::IntegerValues => {
            let mut out = Vec::new();
            for m in (1..=5).map(|n| 2 * n + j.value() as usize) {
                let at = |s: &TSeries| lift(&ts_t_eval(s, &int(m as i64)));
                let as_series = |p: crate::exact::PolyX| {
                    TSeries::from_prefix(
                        &p.coeffs()
                            .into_iter()
                            .map(PolyT::constant)
                            .collect::<Vec<_>>(),
                        n,
                    )
                };
                out.push(pair(
                    format!("lambda_j+1({m}) = S*F({m})"),
                    at(b.lambda(k)),
                    mul(b.sqrt(), &as_series(fib_poly(m))),
                ));
                out.push(pair(
                    format!("phi_j+1({m})*S = L({m})"),
                    mul(&at(b.phi(k)), b.sqrt()),
                    as_series(lucas_poly(m)),
                ));
            }
            out
        }
    }
}

/// The first failing comparison, or `None` when every pair matches.
pub fn relation_outcome(rel: Relation, j: ParityIndex, order: usize) -> Option<Mismatch> {
    let b = basis(order);
    relation_sides(rel, j, &b).into_iter().find_map(|p| {
        let power = p.lhs.first_mismatch(&p.rhs).expect("same order")?;
        Some(Mismatch {
            power,
            lhs: p.lhs.coeff(power).clone(),
            rhs: p.rhs.coeff(power).clone(),
            label: p.label,
        })
    })
}

pub fn relation_check(rel: Relation, j: ParityIndex, order: usize) -> bool {
    relation_outcome(rel, j, order).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold_at_small_order() {
        for rel in Relation::ALL {
            for j in [ParityIndex::ZERO, ParityIndex::ONE] {
                assert_eq!(relation_outcome(rel, j, 12), None, "{rel} j={j}");
            }
        }
    }

    #[test]
    fn swapped_parity_is_detected() {
        let b = basis(12);
        let lam = b.lambda(ParityIndex::ZERO);
        let wrong = b.phi(ParityIndex::ZERO);
        let rhs = add(&shift(wrong, -1), &shift(wrong, 1));
        let at = lam.first_mismatch(&rhs).unwrap();
        assert!(matches!(at, Some(p) if p <= 4));
    }

    #[test]
    fn recurrence_specializes_to_classical_recurrence() {
        // Φ_j(k+2) = xΦ_{j+1}(k+1) + Φ_j(k) at integer k is F_{k+2} = xF_{k+1} + F_k.
        let b = basis(24);
        for k in 0..=19i64 {
            let j = ParityIndex::new(k);
            let pairs = relation_sides(Relation::Recurrence, j, &b);
            for p in pairs {
                let l = ts_t_eval(&p.lhs, &int(k));
                let r = ts_t_eval(&p.rhs, &int(k));
                assert_eq!(l, r);
            }
        }
    }
}
