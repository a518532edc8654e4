use std::fmt;

use crate::classical::{fib_poly, lucas_poly};
use crate::exact::{int, PolyT, PolyX, Rational};
use crate::interpolants::{basis, Basis};
use crate::series::{ts_t_substitute, TSeries};

use super::ast::{Affine, Expr, Identity};
use super::DslError;

/// Outcome of an exact check modulo `x^order`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactReport {
    pub order: usize,
    /// Smallest differing power of `x` with both coefficient polynomials.
    pub mismatch: Option<(usize, PolyT, PolyT)>,
}

impl ExactReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

impl fmt::Display for ExactReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mismatch {
            None => write!(f, "verified modulo x^{}", self.order),
            Some((power, l, r)) => write!(
                f,
                "differs at x^{power}: {} vs {}",
                l.render(true),
                r.render(true)
            ),
        }
    }
}

fn embed(p: &PolyX, order: usize) -> Result<TSeries, DslError> {
    if let Some(degree) = p.degree() {
        if degree >= order {
            return Err(DslError::OrderTooSmall { degree, order });
        }
    }
    let coeffs: Vec<PolyT> = p.coeffs().into_iter().map(PolyT::constant).collect();
    Ok(TSeries::from_prefix(&coeffs, order))
}

fn check_fits(degree: usize, order: usize) -> Result<(), DslError> {
    if degree >= order {
        return Err(DslError::OrderTooSmall { degree, order });
    }
    Ok(())
}

fn substitute(s: &TSeries, arg: Affine) -> TSeries {
    ts_t_substitute(s, &int(arg.a), &int(arg.b))
}

fn eval_in(e: &Expr, b: &Basis) -> Result<TSeries, DslError> {
    let n = b.order();
    let same = |r: Result<TSeries, crate::series::SeriesError>| r.expect("one order throughout");
    Ok(match e {
        Expr::Num(v) => TSeries::constant(PolyT::constant(Rational::from_integer(v.clone())), n),
        Expr::VarT => TSeries::constant(PolyT::var(), n),
        Expr::VarX => TSeries::var(n),
        Expr::SqrtDisc => b.sqrt().clone(),
        Expr::Phi(j, arg) => substitute(b.phi(*j), *arg),
        Expr::Lambda(j, arg) => substitute(b.lambda(*j), *arg),
        Expr::Fib(k) => {
            check_fits(k.saturating_sub(1), n)?;
            embed(&fib_poly(*k), n)?
        }
        Expr::Lucas(k) => {
            check_fits(*k, n)?;
            embed(&lucas_poly(*k), n)?
        }
        Expr::Add(l, r) => same(eval_in(l, b)?.add(&eval_in(r, b)?)),
        Expr::Sub(l, r) => same(eval_in(l, b)?.sub(&eval_in(r, b)?)),
        Expr::Mul(l, r) => same(eval_in(l, b)?.mul(&eval_in(r, b)?)),
        Expr::Neg(inner) => eval_in(inner, b)?.neg(),
        Expr::Pow(base, k) => {
            let mut base = eval_in(base, b)?;
            let mut k = *k;
            let mut acc = TSeries::one(n);
            while k > 0 {
                if k & 1 == 1 {
                    acc = same(acc.mul(&base));
                }
                k >>= 1;
                if k > 0 {
                    base = same(base.mul(&base));
                }
            }
            acc
        }
    })
}

/// Evaluates one side of an identity as a series over `ℚ[t]`.
pub fn eval_series(e: &Expr, order: usize) -> Result<TSeries, DslError> {
    eval_in(e, &basis(order))
}

/// Decides `left == right` modulo `x^order`.
pub fn check_exact(id: &Identity, order: usize) -> Result<ExactReport, DslError> {
    let b = basis(order);
    let left = eval_in(&id.left, &b)?;
    let right = eval_in(&id.right, &b)?;
    let mismatch = left
        .first_mismatch(&right)
        .expect("one order throughout")
        .map(|p| (p, left.coeff(p).clone(), right.coeff(p).clone()));
    Ok(ExactReport { order, mismatch })
}
