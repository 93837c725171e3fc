//! Exact rational scalars.
//!
//! All invariants in this crate are rational numbers; this module fixes the
//! scalar type and the canonical textual rendering `p/q` (bare `p` for
//! integers). Arithmetic is arbitrary precision and every operation keeps
//! the fraction reduced with a positive denominator.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always reduced, denominator > 0.
pub type Rational = num_rational::BigRational;

/// Builds the rational `n / d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer rational `n`.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical rendering: `p/q` in lowest terms, or just `p` when q = 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Reduces `r` modulo ℤ into the half-open interval [0, 1).
pub fn mod_one(r: &Rational) -> Rational {
    let reduced = r - r.floor();
    debug_assert!(!reduced.is_negative() && reduced < Rational::one());
    reduced
}

/// The sign of `n` as a rational: −1, 0, or 1.
pub fn sign_of(n: i64) -> Rational {
    rat_int(n.signum())
}
