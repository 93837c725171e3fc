//! Dense integer and rational matrices.
//!
//! Sizes here are tiny (at most a few dozen rows), so the representation is
//! a plain row-major `Vec` with exact `BigInt` / rational entries. What
//! matters is exactness, not asymptotics.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rational;

/// Shared one-line matrix rendering, e.g. `[[1, 0], [1, 1]]`.
macro_rules! fmt_matrix_body {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "[")?;
            for i in 0..self.rows {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "[")?;
                for j in 0..self.cols {
                    if j > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", self.get(i, j))?;
                }
                write!(f, "]")?;
            }
            write!(f, "]")
        }
    };
}

/// Dense matrix with arbitrary-precision integer entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    /// The `rows × cols` zero matrix.
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    /// The `n × n` identity.
    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// Builds a matrix from explicit rows. Panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        }
    }

    /// Builds a matrix from explicit big-integer rows.
    pub fn from_bigint_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.get(i, j).is_one()
                    } else {
                        self.get(i, j).is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    /// Matrix product. Panics on shape mismatch (an internal invariant;
    /// genus checks happen at the API boundary).
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// `self^k` by repeated multiplication (exponents here are small).
    pub fn pow(&self, k: u32) -> IntMatrix {
        assert!(self.is_square(), "only square matrices have powers");
        let mut out = IntMatrix::identity(self.rows);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    /// The same matrix with rational entries.
    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect(),
        }
    }
}

impl fmt::Debug for IntMatrix {
    fmt_matrix_body!();
}

impl fmt::Display for IntMatrix {
    fmt_matrix_body!();
}

/// Dense matrix with exact rational entries.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds a matrix from explicit rational rows. Panics if ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }
}

impl fmt::Debug for RatMatrix {
    fmt_matrix_body!();
}

impl fmt::Display for RatMatrix {
    fmt_matrix_body!();
}

/// The standard symplectic form Ω = [[0, I_g], [−I_g, 0]] on the basis
/// (a₁, …, a_g, b₁, …, b_g); Ω(a_i, b_i) = +1.
pub fn omega(g: u32) -> IntMatrix {
    let g = g as usize;
    let mut m = IntMatrix::zero(2 * g, 2 * g);
    for i in 0..g {
        m.set(i, g + i, BigInt::one());
        m.set(g + i, i, -BigInt::one());
    }
    m
}

/// Embeds a pair of symplectic matrices of genera g₁ and g₂ as one
/// symplectic matrix of genus g₁ + g₂ acting block-diagonally, respecting
/// the (a…, b…) basis ordering.
pub fn symplectic_direct_sum(m1: &IntMatrix, g1: u32, m2: &IntMatrix, g2: u32) -> IntMatrix {
    let (g1, g2) = (g1 as usize, g2 as usize);
    assert_eq!(m1.rows(), 2 * g1, "first block has wrong size");
    assert!(m1.is_square(), "first block must be square");
    assert_eq!(m2.rows(), 2 * g2, "second block has wrong size");
    assert!(m2.is_square(), "second block must be square");
    let g = g1 + g2;
    // Coordinate of basis vector `i` of block `k` inside the combined basis.
    let embed = |k: usize, i: usize| -> usize {
        let offset = if k == 0 { 0 } else { g1 };
        if i < [g1, g2][k] {
            offset + i // a-coordinates
        } else {
            g + offset + (i - [g1, g2][k]) // b-coordinates
        }
    };
    let mut out = IntMatrix::zero(2 * g, 2 * g);
    for (k, m) in [m1, m2].into_iter().enumerate() {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(embed(k, i), embed(k, j), m.get(i, j).clone());
            }
        }
    }
    out
}

/// Block-diagonal embedding of 2×2 integer matrices: block `i` acts on the
/// (a_{i+1}, b_{i+1}) coordinate plane of genus `blocks.len()`.
pub fn sl2_block_diag(blocks: &[IntMatrix]) -> IntMatrix {
    assert!(!blocks.is_empty(), "need at least one block");
    let mut out = blocks[0].clone();
    let mut g = 1;
    for b in &blocks[1..] {
        out = symplectic_direct_sum(&out, g, b, 1);
        g += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    #[test]
    fn omega_squares_to_minus_identity() {
        for g in 1..=4 {
            let w = omega(g);
            assert_eq!(w.mul(&w), IntMatrix::identity(2 * g as usize).neg());
        }
    }

    #[test]
    fn product_and_power() {
        let t = IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(t.pow(5), IntMatrix::from_rows(&[vec![1, 5], vec![0, 1]]));
        assert!(t.pow(0).is_identity());
        let s = IntMatrix::from_rows(&[vec![0, -1], vec![1, 0]]);
        assert_eq!(s.pow(4), IntMatrix::identity(2));
        assert_eq!(s.pow(2), IntMatrix::identity(2).neg());
    }

    #[test]
    fn direct_sum_interleaves_ab_blocks() {
        // diag(p, q) with p = [[1,2],[0,1]] on (a1,b1), q = [[1,0],[3,1]]
        // on (a2,b2): in the (a1,a2,b1,b2) ordering the entries land at
        // rows/cols {0,2} and {1,3} respectively.
        let p = IntMatrix::from_rows(&[vec![1, 2], vec![0, 1]]);
        let q = IntMatrix::from_rows(&[vec![1, 0], vec![3, 1]]);
        let s = symplectic_direct_sum(&p, 1, &q, 1);
        let expected = IntMatrix::from_rows(&[
            vec![1, 0, 2, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 3, 0, 1],
        ]);
        assert_eq!(s, expected);
        assert_eq!(sl2_block_diag(&[p, q]), expected);
    }

    #[test]
    fn rational_view_matches() {
        let m = IntMatrix::from_rows(&[vec![2, -3], vec![0, 7]]);
        let r = m.to_rational();
        assert_eq!(r.get(0, 1), &rat_int(-3));
        assert!(r.mul(&RatMatrix::identity(2)) == r);
    }
}
