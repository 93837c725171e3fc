//! Exact computation of Meyer's signature cocycle and the invariants
//! derived from it.
//!
//! Everything in this crate is computed over arbitrary-precision rational
//! numbers; no floating point enters any invariant. The main objects are:
//!
//! * [`cocycle::tau`] — Meyer's signature cocycle τ(A, B) on the integral
//!   symplectic group Sp(2g, ℤ), computed as the signature of an explicit
//!   bilinear pairing on a rational vector space attached to (A, B).
//! * [`meyer::Phi`] — Meyer's function φ on the hyperelliptic mapping class
//!   group, evaluated on words in the standard chain of Dehn-twist
//!   generators via the coboundary relation δφ = τ.
//! * [`spectral`] — the η-invariant of mapping tori of periodic
//!   hyperelliptic classes, the von Neumann ρ-invariant of infinite cyclic
//!   covers (closed forms and an exact sequence estimator), and the mod-ℤ
//!   Rochlin/e₁ bookkeeping for spin 4-manifold bounds.
//! * [`casson::d0`] — Morita's homomorphism d₀ on products of
//!   bounding-pair/separating-curve twist powers, equal to 3φ there.
//!
//! # Conventions
//!
//! Homology of the closed genus-g surface carries the ordered symplectic
//! basis (a₁, …, a_g, b₁, …, b_g) with intersection form
//! Ω = [[0, I_g], [−I_g, 0]], i.e. Ω(a_i, b_i) = +1. The 2g+1 chain curves
//! map to homology classes as in [`words::chain_classes`], each generator
//! acts by the transvection x ↦ x + Ω(x, c)·c, and a word evaluates by
//! multiplying generator matrices left to right (leftmost letter first).
//! The complex structure J entering the pairing is fixed by a genus-one
//! normalization of the Meyer function; see [`calibration`].

pub mod calibration;
pub mod casson;
pub mod cocycle;
pub mod error;
pub mod linalg;
pub mod matrix;
pub mod meyer;
pub mod rational;
pub mod sl2;
pub mod spectral;
pub mod words;

pub use error::Error;
pub use matrix::{IntMatrix, RatMatrix};
pub use rational::Rational;
pub use words::{Genus, Letter, Word};
