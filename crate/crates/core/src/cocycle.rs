//! Meyer's signature cocycle τ on Sp(2g, ℤ).
//!
//! For symplectic A, B the rational vector space
//!
//! ```text
//! V_{A,B} = { (x, y) ∈ ℚ^{2g} × ℚ^{2g} : (A⁻¹ − I)x + (B − I)y = 0 }
//! ```
//!
//! carries the pairing ⟨(x₁, y₁), (x₂, y₂)⟩ = (x₁ + y₁) · J(I − B)y₂,
//! where J is a fixed compatible complex structure on the underlying
//! symplectic space. Restricted to V_{A,B} the pairing is symmetric, and
//! τ(A, B) is defined as its signature. It satisfies the cocycle identity
//!
//! ```text
//! τ(A, B) + τ(AB, C) = τ(A, BC) + τ(B, C)
//! ```
//!
//! and is bounded by |τ| ≤ 2g. Everything here is exact: the kernel basis
//! is canonical, the Gram matrix is checked for symmetry, and the
//! signature comes from congruence diagonalization over ℚ.
//!
//! The overall sign of τ depends on the sign chosen for J. The sign used
//! by [`ComplexStructure::standard`] is pinned by the genus-one
//! normalization of the Meyer function (the order-4 elliptic class has
//! φ = −1); see [`crate::calibration`].

use num_traits::Zero;

use crate::error::Error;
use crate::linalg::{is_symplectic, kernel_basis, signature, symplectic_inverse};
use crate::matrix::{omega, IntMatrix, RatMatrix};
use crate::rational::Rational;

/// A complex structure J (J² = −I) compatible with the standard basis,
/// entering the cocycle pairing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexStructure {
    genus: u32,
    j: IntMatrix,
}

impl ComplexStructure {
    /// The calibrated complex structure [[0, I_g], [−I_g, 0]]. In the
    /// (a…, b…) basis ordering its matrix coincides with the matrix of the
    /// intersection form; the sign is the one that passes the genus-one
    /// normalization checks in [`crate::calibration`].
    pub fn standard(genus: u32) -> Self {
        ComplexStructure {
            genus,
            j: omega(genus),
        }
    }

    /// The opposite-sign structure [[0, −I_g], [I_g, 0]]. Using it negates
    /// τ everywhere; it exists so the calibration gate can demonstrate
    /// that exactly one sign convention is consistent.
    pub fn flipped(genus: u32) -> Self {
        ComplexStructure {
            genus,
            j: omega(genus).neg(),
        }
    }

    /// Wraps an explicit matrix, checking J² = −I.
    pub fn new(j: IntMatrix) -> Result<Self, Error> {
        if !j.is_square() || j.rows() % 2 != 0 || j.rows() == 0 {
            return Err(Error::DimensionMismatch(format!(
                "complex structure must be square of even size, got {}x{}",
                j.rows(),
                j.cols()
            )));
        }
        if j.mul(&j) != IntMatrix::identity(j.rows()).neg() {
            return Err(Error::Range(
                "complex structure must square to minus the identity".into(),
            ));
        }
        Ok(ComplexStructure {
            genus: (j.rows() / 2) as u32,
            j,
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.j
    }
}

/// The space V_{A,B} with the Gram matrix of the cocycle pairing on its
/// canonical basis.
pub struct BilinearSpace {
    pub basis: Vec<Vec<Rational>>,
    pub gram: RatMatrix,
}

fn check_pair(a: &IntMatrix, b: &IntMatrix) -> Result<u32, Error> {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() || a.rows() % 2 != 0 {
        return Err(Error::GenusMismatch(format!(
            "cocycle arguments must be equal even-sized squares, got {}x{} and {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let g = (a.rows() / 2) as u32;
    let form = omega(g);
    if !is_symplectic(a, &form)? {
        return Err(Error::NotSymplectic);
    }
    if !is_symplectic(b, &form)? {
        return Err(Error::NotSymplectic);
    }
    Ok(g)
}

/// Canonical basis of V_{A,B} ⊆ ℚ^{4g}: the kernel of the 2g × 4g block
/// matrix [A⁻¹ − I | B − I], with the first 2g coordinates the x-part and
/// the last 2g the y-part.
pub fn v_space(a: &IntMatrix, b: &IntMatrix) -> Result<Vec<Vec<Rational>>, Error> {
    let g = check_pair(a, b)?;
    let n = 2 * g as usize;
    let form = omega(g);
    let a_inv = symplectic_inverse(a, &form)?;
    let mut block = RatMatrix::zero(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            let left = a_inv.get(i, j) - if i == j { 1 } else { 0 };
            let right = b.get(i, j) - if i == j { 1 } else { 0 };
            block.set(i, j, Rational::from_integer(left));
            block.set(i, n + j, Rational::from_integer(right));
        }
    }
    Ok(kernel_basis(&block))
}

/// Gram matrix of ⟨(x₁,y₁), (x₂,y₂)⟩ = (x₁ + y₁) · J(I − B)y₂ on the given
/// basis of V_{A,B}. Fails with `AsymmetryDetected` if the result is not
/// exactly symmetric, which would indicate an internal inconsistency.
pub fn pairing_gram(
    a: &IntMatrix,
    b: &IntMatrix,
    basis: &[Vec<Rational>],
    j: &ComplexStructure,
) -> Result<RatMatrix, Error> {
    let g = check_pair(a, b)?;
    if j.genus() != g {
        return Err(Error::GenusMismatch(format!(
            "complex structure has genus {}, arguments have genus {g}",
            j.genus()
        )));
    }
    let n = 2 * g as usize;
    for v in basis {
        if v.len() != 2 * n {
            return Err(Error::DimensionMismatch(format!(
                "basis vector has length {}, expected {}",
                v.len(),
                2 * n
            )));
        }
    }
    // K = J(I − B), applied to the y-part of each basis vector.
    let mut i_minus_b = IntMatrix::identity(n);
    for r in 0..n {
        for c in 0..n {
            let v = i_minus_b.get(r, c) - b.get(r, c);
            i_minus_b.set(r, c, v);
        }
    }
    let k = j.matrix().mul(&i_minus_b).to_rational();

    let sums: Vec<Vec<Rational>> = basis
        .iter()
        .map(|v| (0..n).map(|i| &v[i] + &v[n + i]).collect())
        .collect();
    let images: Vec<Vec<Rational>> = basis.iter().map(|v| k.mul_vec(&v[n..])).collect();

    let dim = basis.len();
    let mut gram = RatMatrix::zero(dim, dim);
    for p in 0..dim {
        for q in 0..dim {
            let val: Rational = sums[p]
                .iter()
                .zip(&images[q])
                .map(|(s, t)| s * t)
                .fold(Rational::zero(), |acc, x| acc + x);
            gram.set(p, q, val);
        }
    }
    if !gram.is_symmetric() {
        return Err(Error::AsymmetryDetected);
    }
    Ok(gram)
}

/// V_{A,B} together with its pairing Gram matrix.
pub fn bilinear_space(
    a: &IntMatrix,
    b: &IntMatrix,
    j: &ComplexStructure,
) -> Result<BilinearSpace, Error> {
    let basis = v_space(a, b)?;
    let gram = pairing_gram(a, b, &basis, j)?;
    Ok(BilinearSpace { basis, gram })
}

/// Meyer's signature cocycle τ(A, B): the signature of the pairing on
/// V_{A,B}.
pub fn tau(a: &IntMatrix, b: &IntMatrix, j: &ComplexStructure) -> Result<i64, Error> {
    let space = bilinear_space(a, b, j)?;
    let sig = signature(&space.gram)?;
    Ok(sig.signature())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::symplectic_direct_sum;
    use crate::sl2::{elliptic, hyperbolic_example};
    use crate::words::{eval_word, random_word, Generators, Genus};

    fn j1() -> ComplexStructure {
        ComplexStructure::standard(1)
    }

    fn neg_identity(g: u32) -> IntMatrix {
        IntMatrix::identity(2 * g as usize).neg()
    }

    #[test]
    fn standard_structure_squares_to_minus_one() {
        for g in 1..=4 {
            let j = ComplexStructure::standard(g);
            assert_eq!(
                j.matrix().mul(j.matrix()),
                IntMatrix::identity(2 * g as usize).neg()
            );
            assert!(ComplexStructure::new(j.matrix().clone()).is_ok());
        }
        assert!(ComplexStructure::new(IntMatrix::identity(2)).is_err());
    }

    #[test]
    fn identity_argument_kills_tau() {
        let id = IntMatrix::identity(2);
        for m in [elliptic(4).unwrap(), hyperbolic_example(), neg_identity(1)] {
            assert_eq!(tau(&id, &m, &j1()).unwrap(), 0);
            assert_eq!(tau(&m, &id, &j1()).unwrap(), 0);
        }
    }

    #[test]
    fn v_space_dimensions() {
        // A = I frees x entirely: dim = 2g + dim ker(B − I).
        let id = IntMatrix::identity(2);
        let s = elliptic(4).unwrap();
        assert_eq!(v_space(&id, &s).unwrap().len(), 2);
        let shear = crate::sl2::parabolic(3);
        assert_eq!(v_space(&id, &shear).unwrap().len(), 3);
        // A = B = −I: V = {(x, −x)}, dimension 2g.
        for (x, y) in [(1, 1u32)] {
            let _ = (x, y);
        }
        let m = neg_identity(1);
        let basis = v_space(&m, &m).unwrap();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert_eq!(v[0], -v[2].clone());
            assert_eq!(v[1], -v[3].clone());
        }
        // Both blocks invertible (generic hyperbolic pair): dimension 2g.
        let h = hyperbolic_example();
        assert_eq!(v_space(&h, &h).unwrap().len(), 2);
    }

    #[test]
    fn frozen_genus_one_values() {
        // Hand-checked values for the standard complex structure.
        let s = elliptic(4).unwrap();
        let r = elliptic(6).unwrap();
        let gens = Generators::new(Genus::new(1).unwrap());
        let z1 = gens.generator(1).clone();
        let z2 = gens.generator(2).clone();

        assert_eq!(tau(&s, &s, &j1()).unwrap(), -2);
        assert_eq!(tau(&r, &r, &j1()).unwrap(), -2);
        assert_eq!(tau(&z2, &z1, &j1()).unwrap(), 0);
        assert_eq!(tau(&r, &z2, &j1()).unwrap(), -1);
        assert_eq!(tau(&neg_identity(1), &s, &j1()).unwrap(), -2);
        assert_eq!(tau(&neg_identity(1), &neg_identity(1), &j1()).unwrap(), 0);
    }

    #[test]
    fn order_four_pair_has_negative_definite_gram() {
        let s = elliptic(4).unwrap();
        let space = bilinear_space(&s, &s, &j1()).unwrap();
        let sig = crate::linalg::signature(&space.gram).unwrap();
        assert_eq!((sig.positive, sig.negative, sig.null), (0, 2, 0));
    }

    #[test]
    fn flipping_j_negates_tau() {
        let s = elliptic(4).unwrap();
        assert_eq!(tau(&s, &s, &ComplexStructure::flipped(1)).unwrap(), 2);
        let r = elliptic(6).unwrap();
        for (a, b) in [(&s, &r), (&r, &s), (&s, &s)] {
            let plus = tau(a, b, &j1()).unwrap();
            let minus = tau(a, b, &ComplexStructure::flipped(1)).unwrap();
            assert_eq!(plus, -minus);
        }
    }

    #[test]
    fn cocycle_identity_spot_checks() {
        let g = Genus::new(2).unwrap();
        let gens = Generators::new(g);
        let j = ComplexStructure::standard(2);
        for (sa, sb, sc) in [(1u64, 2u64, 3u64), (4, 5, 6), (7, 8, 9)] {
            let a = gens.eval(&random_word(g, 5, sa));
            let b = gens.eval(&random_word(g, 5, sb));
            let c = gens.eval(&random_word(g, 5, sc));
            let lhs = tau(&a, &b, &j).unwrap() + tau(&a.mul(&b), &c, &j).unwrap();
            let rhs = tau(&a, &b.mul(&c), &j).unwrap() + tau(&b, &c, &j).unwrap();
            assert_eq!(lhs, rhs, "seeds {sa},{sb},{sc}");
        }
    }

    #[test]
    fn tau_is_bounded_by_twice_genus() {
        for gv in 1..=2u32 {
            let g = Genus::new(gv).unwrap();
            let j = ComplexStructure::standard(gv);
            for seed in 0..10 {
                let a = eval_word(&random_word(g, 6, seed));
                let b = eval_word(&random_word(g, 6, seed + 100));
                let t = tau(&a, &b, &j).unwrap();
                assert!(t.unsigned_abs() <= 2 * gv as u64);
            }
        }
    }

    #[test]
    fn tau_adds_over_direct_sums() {
        let g1 = Genus::new(1).unwrap();
        for seed in 0..6 {
            let a1 = eval_word(&random_word(g1, 5, seed));
            let b1 = eval_word(&random_word(g1, 5, seed + 50));
            let a2 = eval_word(&random_word(g1, 5, seed + 100));
            let b2 = eval_word(&random_word(g1, 5, seed + 150));
            let a = symplectic_direct_sum(&a1, 1, &a2, 1);
            let b = symplectic_direct_sum(&b1, 1, &b2, 1);
            let total = tau(&a, &b, &ComplexStructure::standard(2)).unwrap();
            let parts = tau(&a1, &b1, &j1()).unwrap() + tau(&a2, &b2, &j1()).unwrap();
            assert_eq!(total, parts, "seed {seed}");
        }
    }

    #[test]
    fn mismatched_or_invalid_inputs_are_rejected() {
        let j = j1();
        let a = IntMatrix::identity(2);
        let b = IntMatrix::identity(4);
        assert!(matches!(tau(&a, &b, &j), Err(Error::GenusMismatch(_))));
        let not_sp = IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(tau(&a, &not_sp, &j), Err(Error::NotSymplectic));
        let j2 = ComplexStructure::standard(2);
        assert!(matches!(tau(&a, &a, &j2), Err(Error::GenusMismatch(_))));
    }
}
