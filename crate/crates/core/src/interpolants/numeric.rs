//! Floating-point evaluation of `Φ_j` and `Λ_j` at real `(t, x)`.
//!
//! Two independent routes are computed: powers of `α(x)` and hyperbolic
//! functions of `t·asinh(x/2)`. A disagreement beyond
//! [`ROUTE_TOLERANCE`](super::ROUTE_TOLERANCE) is an implementation fault.

use super::{InterpError, ParityIndex, ROUTE_TOLERANCE};

/// Values from the α-power route and the hyperbolic route.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Routes {
    pub binet: f64,
    pub hyperbolic: f64,
}

impl Routes {
    pub fn agree(&self) -> bool {
        let scale = self.binet.abs().max(self.hyperbolic.abs()).max(1.0);
        (self.binet - self.hyperbolic).abs() <= ROUTE_TOLERANCE * scale
    }

    fn checked(self) -> Result<f64, InterpError> {
        if self.agree() {
            Ok(self.binet)
        } else {
            Err(InterpError::RouteDisagreement {
                binet: self.binet,
                hyperbolic: self.hyperbolic,
            })
        }
    }
}

/// `α(x) = (x + √(x² + 4))/2`, the positive root of `z² − xz − 1`.
pub fn alpha_num(x: f64) -> f64 {
    let root = x.hypot(2.0);
    if x >= 0.0 {
        (x + root) / 2.0
    } else {
        // same value without cancellation
        2.0 / (root - x)
    }
}

/// `(α(x), ᾱ(x))` with `ᾱ = −1/α`.
pub fn alpha_pair(x: f64) -> (f64, f64) {
    let a = alpha_num(x);
    (a, -1.0 / a)
}

fn binet_parts(t: f64, x: f64) -> (f64, f64, f64) {
    let a = alpha_num(x);
    (a.powf(t), a.powf(-t), x.hypot(2.0))
}

pub fn phi_routes(j: ParityIndex, t: f64, x: f64) -> Routes {
    let (up, down, root) = binet_parts(t, x);
    let y = t * (x / 2.0).asinh();
    let sign = j.sign() as f64;
    let hyperbolic = match j.value() {
        0 => 2.0 * y.sinh(),
        _ => 2.0 * y.cosh(),
    };
    Routes {
        binet: (up - sign * down) / root,
        hyperbolic: hyperbolic / root,
    }
}

pub fn lambda_routes(j: ParityIndex, t: f64, x: f64) -> Routes {
    let (up, down, _) = binet_parts(t, x);
    let y = t * (x / 2.0).asinh();
    let sign = j.sign() as f64;
    let hyperbolic = match j.value() {
        0 => 2.0 * y.cosh(),
        _ => 2.0 * y.sinh(),
    };
    Routes {
        binet: up + sign * down,
        hyperbolic,
    }
}

/// `Φ_j(t, x)` from the α-power route, cross-checked against the
/// hyperbolic route.
pub fn phi_num(j: ParityIndex, t: f64, x: f64) -> Result<f64, InterpError> {
    phi_routes(j, t, x).checked()
}

/// `Λ_j(t, x)`, cross-checked like [`phi_num`].
pub fn lambda_num(j: ParityIndex, t: f64, x: f64) -> Result<f64, InterpError> {
    lambda_routes(j, t, x).checked()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alpha_values() {
        assert!((alpha_num(1.0) - 1.618_033_988_749_895).abs() < 1e-12);
        assert_eq!(alpha_num(0.0), 1.0);
        let (a, b) = alpha_pair(2.5);
        assert!((a * -b - 1.0).abs() < 1e-14);
        // both roots of z² − xz − 1
        for x in [-3.0, -0.5, 0.0, 0.7, 2.5] {
            let (a, b) = alpha_pair(x);
            assert!((a * a - x * a - 1.0).abs() < 1e-12);
            assert!((b * b - x * b - 1.0).abs() < 1e-12);
            assert!(a > 0.0);
        }
    }

    #[test]
    fn known_values() {
        let zero = ParityIndex::ZERO;
        let one = ParityIndex::ONE;
        assert!((phi_num(zero, 6.0, 1.0).unwrap() - 8.0).abs() < 1e-10);
        assert_eq!(lambda_num(zero, 0.0, 3.7).unwrap(), 2.0);
        assert!((phi_num(one, 4.0, 1.0).unwrap() - 3.130_495_168_499_705_5).abs() < 1e-12);
        assert!((lambda_num(zero, 2.0, 1.0).unwrap() - 3.0).abs() < 1e-10);
    }

    #[test]
    fn lucas_zero_grows_with_t() {
        let mut prev = f64::NEG_INFINITY;
        for i in 0..=20 {
            let v = lambda_num(ParityIndex::ZERO, i as f64 * 0.5, 1.0).unwrap();
            assert!(v > prev || i == 0);
            prev = v;
        }
    }

    #[test]
    fn routes_disagreement_is_reported() {
        let r = Routes {
            binet: 1.0,
            hyperbolic: 1.0 + 1e-6,
        };
        assert!(matches!(
            r.checked(),
            Err(InterpError::RouteDisagreement { .. })
        ));
    }
}
