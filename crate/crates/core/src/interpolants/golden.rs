//! Exact values at `x = 1` in ℚ(√5).

use crate::classical::{fib_poly, lucas_poly};
use crate::exact::{int, QuadExt, Rational};

use super::Family;

/// `α(1)^k = ((1 + √5)/2)^k` for any integer `k`.
pub fn golden_pow(k: i64) -> QuadExt {
    QuadExt::golden()
        .pow(k)
        .expect("the golden ratio is nonzero")
}

/// `Φ_j(k, 1)` or `Λ_j(k, 1)` exactly. `AlphaT` gives `α(1)^k`.
pub fn exact_at_one(f: Family, k: i64) -> QuadExt {
    let up = golden_pow(k);
    let down = golden_pow(-k);
    match f {
        Family::Phi0 => (&up - &down).div_sqrt5(),
        Family::Phi1 => (&up + &down).div_sqrt5(),
        Family::Lam0 => &up + &down,
        Family::Lam1 => &up - &down,
        Family::AlphaT => up,
    }
}

/// The four radical expressions for the mixed-parity table entries.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum RadicalForm {
    /// `Φ_0(2k+1) = √(1 + 5F_{2k}F_{2k+2})/√5`
    Phi0Odd,
    /// `Φ_1(2k) = √(5F_{2k+1}F_{2k−1} − 1)/√5`
    Phi1Even,
    /// `Λ_0(2k+1) = √(L_{2k}L_{2k+2} − 1)`
    Lam0Odd,
    /// `Λ_1(2k) = √(L_{2k−1}L_{2k+1} + 1)`
    Lam1Even,
}

impl RadicalForm {
    pub const ALL: [RadicalForm; 4] = [
        RadicalForm::Phi0Odd,
        RadicalForm::Phi1Even,
        RadicalForm::Lam0Odd,
        RadicalForm::Lam1Even,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RadicalForm::Phi0Odd => "phi0-odd",
            RadicalForm::Phi1Even => "phi1-even",
            RadicalForm::Lam0Odd => "lam0-odd",
            RadicalForm::Lam1Even => "lam1-even",
        }
    }

    /// The family and `t` of the table entry for parameter `k`.
    pub fn entry(self, k: usize) -> (Family, i64) {
        let k = k as i64;
        match self {
            RadicalForm::Phi0Odd => (Family::Phi0, 2 * k + 1),
            RadicalForm::Phi1Even => (Family::Phi1, 2 * k),
            RadicalForm::Lam0Odd => (Family::Lam0, 2 * k + 1),
            RadicalForm::Lam1Even => (Family::Lam1, 2 * k),
        }
    }
}

fn fib_at_one(n: usize) -> Rational {
    fib_poly(n).eval(&int(1))
}

fn lucas_at_one(n: usize) -> Rational {
    lucas_poly(n).eval(&int(1))
}

/// Squared form of a radical identity: `(scaled square of the table
/// entry, radicand)`. For the Φ forms the square is multiplied by 5.
pub fn radical_form_sides(which: RadicalForm, k: usize) -> (QuadExt, QuadExt) {
    assert!(k >= 1, "radical forms need k >= 1");
    let (family, t) = which.entry(k);
    let value = exact_at_one(family, t);
    let square = &value * &value;
    let (lhs, rhs) = match which {
        RadicalForm::Phi0Odd => (
            &square * &QuadExt::from_rational(int(5)),
            int(1) + int(5) * fib_at_one(2 * k) * fib_at_one(2 * k + 2),
        ),
        RadicalForm::Phi1Even => (
            &square * &QuadExt::from_rational(int(5)),
            int(5) * fib_at_one(2 * k + 1) * fib_at_one(2 * k - 1) - int(1),
        ),
        RadicalForm::Lam0Odd => (
            square,
            lucas_at_one(2 * k) * lucas_at_one(2 * k + 2) - int(1),
        ),
        RadicalForm::Lam1Even => (
            square,
            lucas_at_one(2 * k - 1) * lucas_at_one(2 * k + 1) + int(1),
        ),
    };
    (lhs, QuadExt::from_rational(rhs))
}

/// Checks a radical form in squared form, and that the entry itself is
/// nonnegative so the principal root is the right branch.
pub fn radical_form_check(which: RadicalForm, k: usize) -> bool {
    let (lhs, rhs) = radical_form_sides(which, k);
    let (family, t) = which.entry(k);
    lhs == rhs && exact_at_one(family, t).to_f64() >= 0.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn golden_powers() {
        assert_eq!(golden_pow(0), QuadExt::one());
        assert_eq!(golden_pow(3), QuadExt::new(int(2), int(1)));
        assert_eq!(golden_pow(-1), QuadExt::new(rat(-1, 2), rat(1, 2)));
        for k in 0..=20usize {
            let expected = QuadExt::new(lucas_at_one(k) / int(2), fib_at_one(k) / int(2));
            assert_eq!(golden_pow(k as i64), expected);
        }
    }

    #[test]
    fn values_at_one() {
        assert_eq!(
            exact_at_one(Family::Phi0, 3),
            QuadExt::new(int(0), rat(4, 5))
        );
        assert_eq!(exact_at_one(Family::Lam0, 5), QuadExt::new(int(0), int(5)));
        assert_eq!(exact_at_one(Family::Lam1, 0), QuadExt::zero());
    }

    #[test]
    fn lucas_plus_root5_phi_is_twice_alpha_power() {
        for k in 0..=12 {
            for (lam, phi) in [(Family::Lam0, Family::Phi0), (Family::Lam1, Family::Phi1)] {
                let lhs = &exact_at_one(lam, k) + &(&QuadExt::sqrt5() * &exact_at_one(phi, k));
                assert_eq!(lhs, &golden_pow(k) + &golden_pow(k));
            }
        }
    }

    #[test]
    fn radical_examples() {
        let (lhs, rhs) = radical_form_sides(RadicalForm::Phi0Odd, 2);
        assert_eq!(lhs, QuadExt::from_rational(int(121)));
        assert_eq!(rhs, QuadExt::from_rational(int(121)));
        let (lhs, _) = radical_form_sides(RadicalForm::Phi1Even, 2);
        assert_eq!(lhs, QuadExt::from_rational(int(49)));
        let (lhs, _) = radical_form_sides(RadicalForm::Lam1Even, 2);
        assert_eq!(lhs, QuadExt::from_rational(int(45)));
        for which in RadicalForm::ALL {
            for k in 1..=8 {
                assert!(radical_form_check(which, k), "{which:?} k={k}");
            }
        }
    }
}
