use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::interpolants::{lambda_num, phi_num};

use super::ast::{Expr, Identity};
use super::DslError;

/// Reproducible `(t, x)` sampler: splitmix64 with doubles built from the
/// top 53 bits, `t` uniform in `[−3, 3]` and `x` uniform in `[1/4, 2]`.
pub struct Sampler {
    rng: SplitMix64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: SplitMix64::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Next `(t, x)` pair, `t` drawn first.
    pub fn next_point(&mut self) -> (f64, f64) {
        let t = -3.0 + 6.0 * self.next_f64();
        let x = 0.25 + 1.75 * self.next_f64();
        (t, x)
    }
}

/// `(F_n(x), L_n(x))` by the recurrence in floating point.
fn classical_num(n: usize, x: f64) -> (f64, f64) {
    let (mut f0, mut f1) = (0.0, 1.0);
    let (mut l0, mut l1) = (2.0, x);
    if n == 0 {
        return (f0, l0);
    }
    for _ in 1..n {
        (f0, f1) = (f1, x * f1 + f0);
        (l0, l1) = (l1, x * l1 + l0);
        if !f1.is_finite() || !l1.is_finite() {
            return (f64::INFINITY, f64::INFINITY);
        }
    }
    (f1, l1)
}

/// Floating-point value of one side at `(t, x)`.
pub fn eval_numeric(e: &Expr, t: f64, x: f64) -> Result<f64, DslError> {
    Ok(match e {
        Expr::Num(v) => v.to_string().parse().unwrap_or(f64::INFINITY),
        Expr::VarT => t,
        Expr::VarX => x,
        Expr::SqrtDisc => x.hypot(2.0),
        Expr::Phi(j, arg) => phi_num(*j, arg.eval(t), x)?,
        Expr::Lambda(j, arg) => lambda_num(*j, arg.eval(t), x)?,
        Expr::Fib(n) => classical_num(*n, x).0,
        Expr::Lucas(n) => classical_num(*n, x).1,
        Expr::Add(l, r) => eval_numeric(l, t, x)? + eval_numeric(r, t, x)?,
        Expr::Sub(l, r) => eval_numeric(l, t, x)? - eval_numeric(r, t, x)?,
        Expr::Mul(l, r) => eval_numeric(l, t, x)? * eval_numeric(r, t, x)?,
        Expr::Neg(inner) => -eval_numeric(inner, t, x)?,
        Expr::Pow(base, k) => eval_numeric(base, t, x)?.powf(*k as f64),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericReport {
    pub samples: usize,
    /// Samples skipped because a value was not finite.
    pub skipped: usize,
    /// Largest `|l − r| / max(1, |l|, |r|)` over the evaluated samples.
    pub max_residual: f64,
    pub tolerance: f64,
}

impl NumericReport {
    pub fn passed(&self) -> bool {
        self.skipped < self.samples && self.max_residual <= self.tolerance
    }
}

/// Compares both sides at `samples` seeded random points.
pub fn check_numeric(
    id: &Identity,
    samples: usize,
    seed: u64,
    tolerance: f64,
) -> Result<NumericReport, DslError> {
    let mut sampler = Sampler::new(seed);
    let mut skipped = 0;
    let mut max_residual: f64 = 0.0;
    for _ in 0..samples {
        let (t, x) = sampler.next_point();
        let l = eval_numeric(&id.left, t, x)?;
        let r = eval_numeric(&id.right, t, x)?;
        if !l.is_finite() || !r.is_finite() {
            skipped += 1;
            continue;
        }
        let residual = (l - r).abs() / 1f64.max(l.abs()).max(r.abs());
        max_residual = max_residual.max(residual);
    }
    Ok(NumericReport {
        samples,
        skipped,
        max_residual,
        tolerance,
    })
}
