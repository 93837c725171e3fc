//! Genus one: SL(2, ℤ) fixtures and word realizations.
//!
//! At genus one the hyperelliptic mapping class group is all of the mapping
//! class group and the homology action identifies it with SL(2, ℤ); the two
//! distinct chain generators act by
//!
//! ```text
//! ζ₁ ↦ [[1, 0], [1, 1]]      ζ₂ ↦ [[1, −1], [0, 1]]
//! ```
//!
//! (ζ₃ repeats ζ₁). Those two matrices generate SL(2, ℤ), so every
//! determinant-one integer 2×2 matrix can be realized as a word; the
//! realization here is the classical Euclidean reduction of the first
//! column. Fixture words for the standard elliptic, parabolic and
//! hyperbolic test matrices are frozen so downstream results stay
//! reproducible; their evaluations are asserted in this module's tests.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::matrix::IntMatrix;
use crate::words::{Genus, Letter, Word};

/// The genus-one surface.
pub fn genus_one() -> Genus {
    Genus::new(1).expect("1 is a valid genus")
}

/// The standard elliptic element of the given order (3, 4 or 6):
/// [[−1,−1],[1,0]], [[0,−1],[1,0]] and [[0,−1],[1,1]] respectively.
pub fn elliptic(order: u32) -> Result<IntMatrix, Error> {
    match order {
        3 => Ok(IntMatrix::from_rows(&[vec![-1, -1], vec![1, 0]])),
        4 => Ok(IntMatrix::from_rows(&[vec![0, -1], vec![1, 0]])),
        6 => Ok(IntMatrix::from_rows(&[vec![0, -1], vec![1, 1]])),
        _ => Err(Error::Range(format!(
            "no standard elliptic element of order {order}; expected 3, 4 or 6"
        ))),
    }
}

/// Frozen word realizing [`elliptic`]`(order)`:
/// ζ₂ζ₁ for order 6, ζ₂ζ₁ζ₂ for order 4, (ζ₂ζ₁)² for order 3.
pub fn elliptic_word(order: u32) -> Result<Word, Error> {
    let indices: &[u32] = match order {
        3 => &[2, 1, 2, 1],
        4 => &[2, 1, 2],
        6 => &[2, 1],
        _ => {
            return Err(Error::Range(format!(
                "no standard elliptic element of order {order}; expected 3, 4 or 6"
            )))
        }
    };
    Word::new(
        genus_one(),
        indices.iter().map(|&i| Letter::new(i, false)).collect(),
    )
}

/// The parabolic matrix [[1, b], [0, 1]].
pub fn parabolic(b: i64) -> IntMatrix {
    IntMatrix::from_rows(&[vec![1, b], vec![0, 1]])
}

/// Word realizing [`parabolic`]`(b)`: ζ₂^(−b).
pub fn parabolic_word(b: i64) -> Word {
    let letters = (0..b.unsigned_abs())
        .map(|_| Letter::new(2, b > 0))
        .collect();
    Word::new(genus_one(), letters).expect("letter 2 is valid at genus 1")
}

/// A small hyperbolic test matrix, [[2, 1], [1, 1]] (trace 3).
pub fn hyperbolic_example() -> IntMatrix {
    IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]])
}

/// Frozen word realizing [`hyperbolic_example`]: ζ₂⁻¹ ζ₁.
pub fn hyperbolic_example_word() -> Word {
    Word::new(
        genus_one(),
        vec![Letter::new(2, true), Letter::new(1, false)],
    )
    .expect("letters are valid at genus 1")
}

/// Elementary factors used by the Euclidean reduction, each applied by
/// left multiplication: T^k = [[1, k], [0, 1]], L^k = [[1, 0], [k, 1]],
/// and the central −I.
#[derive(Clone)]
enum Factor {
    T(BigInt),
    L(BigInt),
    NegIdentity,
}

impl Factor {
    fn letter_count(&self) -> u128 {
        match self {
            Factor::T(k) | Factor::L(k) => {
                u128::try_from(k.magnitude().clone()).unwrap_or(u128::MAX)
            }
            Factor::NegIdentity => 6,
        }
    }
}

fn push_factor_word(letters: &mut Vec<Letter>, f: &Factor) {
    match f {
        // T = ζ₂⁻¹ on homology, so T^k contributes |k| copies of ζ₂^∓1.
        Factor::T(k) => {
            for _ in 0..u64::try_from(k.magnitude().clone()).expect("length capped") {
                letters.push(Letter::new(2, k.is_positive()));
            }
        }
        Factor::L(k) => {
            for _ in 0..u64::try_from(k.magnitude().clone()).expect("length capped") {
                letters.push(Letter::new(1, k.is_negative()));
            }
        }
        // −I = (ζ₂ζ₁ζ₂)², its own inverse on homology.
        Factor::NegIdentity => {
            for &i in &[2, 1, 2, 2, 1, 2] {
                letters.push(Letter::new(i, false));
            }
        }
    }
}

/// Realized words grow linearly with the Euclidean quotients; beyond this
/// many letters a realization is useless downstream, so give up cleanly.
const MAX_REALIZED_LETTERS: u128 = 1 << 20;

/// Realizes an arbitrary determinant-one integer 2×2 matrix as a genus-one
/// word, by Euclidean reduction of the first column.
///
/// Rejects inputs that are not 2×2 or do not have determinant one. The
/// returned word is generally not the shortest one, but it is a pure
/// function of the input.
pub fn word_for_matrix(m: &IntMatrix) -> Result<Word, Error> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::DimensionMismatch(format!(
            "expected a 2x2 matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let det = m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0);
    if !det.is_one() {
        return Err(Error::NotSymplectic);
    }

    // Reduce cur = E_j ⋯ E_1 · m to the identity; then
    // m = E_1⁻¹ ⋯ E_j⁻¹, read off left to right.
    let mut cur = m.clone();
    let mut applied: Vec<Factor> = Vec::new();
    let mut apply = |cur: &mut IntMatrix, f: Factor| {
        let one = BigInt::one();
        let e = match &f {
            Factor::T(k) => IntMatrix::from_bigint_rows(vec![
                vec![one.clone(), k.clone()],
                vec![BigInt::zero(), one],
            ]),
            Factor::L(k) => IntMatrix::from_bigint_rows(vec![
                vec![one.clone(), BigInt::zero()],
                vec![k.clone(), one],
            ]),
            Factor::NegIdentity => IntMatrix::identity(2).neg(),
        };
        *cur = e.mul(cur);
        applied.push(f);
    };

    loop {
        let a = cur.get(0, 0).clone();
        let c = cur.get(1, 0).clone();
        if !c.is_zero() {
            if a.magnitude() > c.magnitude() {
                apply(&mut cur, Factor::T(-(&a / &c)));
            } else if a.is_zero() {
                apply(&mut cur, Factor::T(BigInt::one()));
            } else {
                apply(&mut cur, Factor::L(-(&c / &a)));
            }
            continue;
        }
        if cur.get(0, 0).is_negative() {
            apply(&mut cur, Factor::NegIdentity);
        }
        let b = cur.get(0, 1).clone();
        if !b.is_zero() {
            apply(&mut cur, Factor::T(-b));
        }
        break;
    }
    debug_assert!(cur.is_identity());

    let total = applied
        .iter()
        .map(Factor::letter_count)
        .fold(0u128, u128::saturating_add);
    if total > MAX_REALIZED_LETTERS {
        return Err(Error::Range(
            "matrix entries are too large to realize as a word".into(),
        ));
    }
    let mut letters = Vec::new();
    for f in &applied {
        let inverse = match f {
            Factor::T(k) => Factor::T(-k),
            Factor::L(k) => Factor::L(-k),
            Factor::NegIdentity => Factor::NegIdentity,
        };
        push_factor_word(&mut letters, &inverse);
    }
    Word::new(genus_one(), letters)
}
