//! Exact linear algebra over the rationals: reduced row echelon form,
//! kernel bases, congruence diagonalization of symmetric matrices, and
//! signatures, plus the two symplectic-specific operations (form check and
//! form-transpose inverse).
//!
//! Everything is deterministic: pivot choices are always the first
//! admissible position, so identical inputs produce identical outputs.

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::matrix::{IntMatrix, RatMatrix};
use crate::rational::Rational;

/// Inertia of a symmetric matrix: counts of positive, negative and zero
/// eigenvalue directions. `positive + negative + null` equals the dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignatureTriple {
    pub positive: usize,
    pub negative: usize,
    pub null: usize,
}

impl SignatureTriple {
    /// The signature `positive − negative`.
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }
}

/// Reduced row echelon form of `m`, with the list of pivot columns in
/// increasing order. Zero-row and zero-column matrices are fine.
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut r = m.clone();
    let (rows, cols) = (r.rows(), r.cols());
    let mut pivot_cols = Vec::new();
    let mut pivot_row = 0;
    for col in 0..cols {
        if pivot_row == rows {
            break;
        }
        // First nonzero entry in this column at or below pivot_row.
        let Some(src) = (pivot_row..rows).find(|&i| !r.get(i, col).is_zero()) else {
            continue;
        };
        if src != pivot_row {
            for j in 0..cols {
                let a = r.get(src, j).clone();
                let b = r.get(pivot_row, j).clone();
                r.set(src, j, b);
                r.set(pivot_row, j, a);
            }
        }
        let inv = r.get(pivot_row, col).recip();
        for j in 0..cols {
            let v = r.get(pivot_row, j) * &inv;
            r.set(pivot_row, j, v);
        }
        for i in 0..rows {
            if i == pivot_row || r.get(i, col).is_zero() {
                continue;
            }
            let factor = r.get(i, col).clone();
            for j in 0..cols {
                let v = r.get(i, j) - &factor * r.get(pivot_row, j);
                r.set(i, j, v);
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }
    (r, pivot_cols)
}

/// The rank of `m`.
pub fn rank(m: &RatMatrix) -> usize {
    rref(m).1.len()
}

/// A canonical basis of the right kernel of `m`.
///
/// The basis comes from the reduced row echelon form: one vector per free
/// column `f` (in increasing order), with entry 1 at `f`, `−R[r][f]` at the
/// r-th pivot column, and 0 elsewhere. This makes the output a pure
/// function of the input, which downstream signature computations rely on
/// for reproducibility.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let (r, pivot_cols) = rref(m);
    let cols = m.cols();
    let mut basis = Vec::new();
    let mut next_pivot = 0;
    for f in 0..cols {
        if next_pivot < pivot_cols.len() && pivot_cols[next_pivot] == f {
            next_pivot += 1;
            continue;
        }
        let mut v = vec![Rational::zero(); cols];
        v[f] = Rational::one();
        for (row, &p) in pivot_cols.iter().enumerate() {
            v[p] = -r.get(row, f).clone();
        }
        basis.push(v);
    }
    basis
}

/// Diagonalizes a symmetric matrix by congruence: returns `(D, P)` with
/// `P` invertible and `Pᵀ · G · P = D` diagonal, all exact.
///
/// A zero diagonal pivot with some nonzero off-diagonal entry `G[i][j]` is
/// repaired by adding row and column `j` into `i`, which creates the
/// diagonal entry `2·G[i][j]`; fully zero rows are skipped and contribute
/// null directions.
pub fn congruence_diagonalize(g: &RatMatrix) -> Result<(RatMatrix, RatMatrix), Error> {
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = g.rows();
    let mut w = g.clone();
    let mut p = RatMatrix::identity(n);

    // Column operation col_dst += λ·col_src applied congruently (the same
    // operation on rows keeps w symmetric) and recorded in p.
    let add = |w: &mut RatMatrix, p: &mut RatMatrix, dst: usize, src: usize, lambda: &Rational| {
        for k in 0..n {
            let v = w.get(k, dst) + lambda * w.get(k, src);
            w.set(k, dst, v);
        }
        for k in 0..n {
            let v = w.get(dst, k) + lambda * w.get(src, k);
            w.set(dst, k, v);
        }
        for k in 0..n {
            let v = p.get(k, dst) + lambda * p.get(k, src);
            p.set(k, dst, v);
        }
    };
    let swap = |w: &mut RatMatrix, p: &mut RatMatrix, a: usize, b: usize| {
        for k in 0..n {
            let (x, y) = (w.get(k, a).clone(), w.get(k, b).clone());
            w.set(k, a, y);
            w.set(k, b, x);
        }
        for k in 0..n {
            let (x, y) = (w.get(a, k).clone(), w.get(b, k).clone());
            w.set(a, k, y);
            w.set(b, k, x);
        }
        for k in 0..n {
            let (x, y) = (p.get(k, a).clone(), p.get(k, b).clone());
            p.set(k, a, y);
            p.set(k, b, x);
        }
    };

    for i in 0..n {
        if w.get(i, i).is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !w.get(j, j).is_zero()) {
                swap(&mut w, &mut p, i, j);
            } else if let Some(j) = (i + 1..n).find(|&j| !w.get(i, j).is_zero()) {
                let one = Rational::one();
                add(&mut w, &mut p, i, j, &one);
            } else {
                // Row i is zero on the remaining block: a null direction.
                continue;
            }
        }
        let pivot = w.get(i, i).clone();
        for j in i + 1..n {
            if w.get(i, j).is_zero() {
                continue;
            }
            let lambda = -(w.get(i, j) / &pivot);
            add(&mut w, &mut p, j, i, &lambda);
        }
    }

    let mut d = RatMatrix::zero(n, n);
    for i in 0..n {
        d.set(i, i, w.get(i, i).clone());
    }
    Ok((d, p))
}

/// The inertia (positive, negative, null) of a symmetric rational matrix.
pub fn signature(g: &RatMatrix) -> Result<SignatureTriple, Error> {
    let (d, _) = congruence_diagonalize(g)?;
    let mut triple = SignatureTriple {
        positive: 0,
        negative: 0,
        null: 0,
    };
    for i in 0..d.rows() {
        let v = d.get(i, i);
        if v.is_zero() {
            triple.null += 1;
        } else if v.is_positive() {
            triple.positive += 1;
        } else {
            triple.negative += 1;
        }
    }
    Ok(triple)
}

/// Whether `m` preserves the symplectic form: `mᵀ · Ω · m = Ω`.
pub fn is_symplectic(m: &IntMatrix, omega: &IntMatrix) -> Result<bool, Error> {
    if !m.is_square() || !omega.is_square() || m.rows() != omega.rows() || m.rows() % 2 != 0 {
        return Err(Error::DimensionMismatch(format!(
            "symplectic check needs equal even sizes, got {}x{} against form {}x{}",
            m.rows(),
            m.cols(),
            omega.rows(),
            omega.cols()
        )));
    }
    Ok(m.transpose().mul(omega).mul(m) == *omega)
}

/// Exact inverse of a symplectic matrix via the form transpose:
/// `m⁻¹ = Ω⁻¹ · mᵀ · Ω`. Requires the standard form (Ω² = −I).
pub fn symplectic_inverse(m: &IntMatrix, omega: &IntMatrix) -> Result<IntMatrix, Error> {
    if !is_symplectic(m, omega)? {
        return Err(Error::NotSymplectic);
    }
    assert!(
        omega.mul(omega) == IntMatrix::identity(omega.rows()).neg(),
        "symplectic inverse requires the standard form"
    );
    let inv = omega.neg().mul(&m.transpose()).mul(omega);
    debug_assert!(m.mul(&inv).is_identity());
    Ok(inv)
}
