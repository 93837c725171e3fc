//! Words in the standard twist generators of the hyperelliptic mapping
//! class group and their action on surface homology.
//!
//! A closed genus-g surface carries a chain of 2g+1 simple closed curves,
//! consecutive ones meeting once; the right-handed Dehn twists ζ₁, …,
//! ζ_{2g+1} about them generate the hyperelliptic mapping class group. On
//! H₁ (basis a₁, …, a_g, b₁, …, b_g; Ω(a_i, b_i) = +1) the chain curves
//! represent
//!
//! * even positions: `[γ_{2i}] = a_i`,
//! * odd positions: `[γ_{2i−1}] = b_i − b_{i−1}` (with b₀ = b_{g+1} = 0),
//!
//! so consecutive classes pair to Ω(c_i, c_{i+1}) = −1 and distant ones to
//! zero. Each generator acts by the symplectic transvection
//! `T_c(x) = x + Ω(x, c)·c`, and a word evaluates to the product of its
//! letters' matrices taken left to right: the leftmost letter acts first.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::matrix::{omega, IntMatrix};

/// Genus of the underlying closed surface; at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Genus(u32);

impl Genus {
    pub fn new(g: u32) -> Result<Self, Error> {
        if g == 0 {
            return Err(Error::Range("genus must be at least 1".into()));
        }
        Ok(Genus(g))
    }

    pub fn value(&self) -> u32 {
        self.0
    }

    /// Number of chain-twist generators, 2g+1.
    pub fn generator_count(&self) -> u32 {
        2 * self.0 + 1
    }

    /// Dimension of H₁, 2g.
    pub fn dim(&self) -> usize {
        2 * self.0 as usize
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One occurrence of a generator: ζ_index or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Letter {
    pub index: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn new(index: u32, inverse: bool) -> Self {
        Letter { index, inverse }
    }

    pub fn inverted(&self) -> Letter {
        Letter {
            index: self.index,
            inverse: !self.inverse,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "z{}^-1", self.index)
        } else {
            write!(f, "z{}", self.index)
        }
    }
}

/// A word in the chain-twist generators of a fixed genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    genus: Genus,
    letters: Vec<Letter>,
}

impl Word {
    /// Builds a word, validating every letter index against the genus.
    pub fn new(genus: Genus, letters: Vec<Letter>) -> Result<Self, Error> {
        let max = genus.generator_count();
        for l in &letters {
            if l.index == 0 || l.index > max {
                return Err(Error::IndexOutOfRange {
                    index: l.index,
                    max,
                });
            }
        }
        Ok(Word { genus, letters })
    }

    pub fn empty(genus: Genus) -> Self {
        Word {
            genus,
            letters: Vec::new(),
        }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The formal inverse: letters reversed, each inverted.
    pub fn inverse(&self) -> Word {
        Word {
            genus: self.genus,
            letters: self.letters.iter().rev().map(Letter::inverted).collect(),
        }
    }

    /// Concatenation. Panics if the genera differ (caller invariant).
    pub fn concat(&self, other: &Word) -> Word {
        assert_eq!(self.genus, other.genus, "cannot concatenate across genera");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word {
            genus: self.genus,
            letters,
        }
    }

    /// The k-fold repetition of the word.
    pub fn repeat(&self, k: u32) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() * k as usize);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        Word {
            genus: self.genus,
            letters,
        }
    }

    /// `self^k` for a signed exponent: negative exponents invert.
    pub fn power(&self, k: i64) -> Word {
        if k < 0 {
            self.inverse().repeat(k.unsigned_abs() as u32)
        } else {
            self.repeat(k as u32)
        }
    }

    /// The conjugate `u · self · u⁻¹`.
    pub fn conjugate_by(&self, u: &Word) -> Word {
        u.concat(self).concat(&u.inverse())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// Homology classes of the 2g+1 chain curves, together with the
/// intersection form they pair under.
pub struct ChainClasses {
    pub classes: Vec<Vec<BigInt>>,
    pub omega: IntMatrix,
}

impl ChainClasses {
    /// Class of the i-th chain curve, 1-based.
    pub fn class(&self, i: u32) -> &[BigInt] {
        &self.classes[(i - 1) as usize]
    }
}

/// The chain classes for genus `g`; see the module docs for the layout.
pub fn chain_classes(g: Genus) -> ChainClasses {
    let gv = g.value() as usize;
    let dim = g.dim();
    let mut classes = Vec::with_capacity(g.generator_count() as usize);
    for idx in 1..=g.generator_count() as usize {
        let mut v = vec![BigInt::zero(); dim];
        if idx % 2 == 0 {
            // a_{idx/2}
            v[idx / 2 - 1] = BigInt::from(1);
        } else {
            // b_i − b_{i−1} for i = (idx+1)/2, with b₀ = b_{g+1} = 0.
            let i = (idx + 1) / 2;
            if i <= gv {
                v[gv + i - 1] = BigInt::from(1);
            }
            if i >= 2 {
                v[gv + i - 2] = BigInt::from(-1);
            }
        }
        classes.push(v);
    }
    ChainClasses {
        classes,
        omega: omega(g.value()),
    }
}

/// The symplectic transvection `x ↦ x + Ω(x, c)·c` as a matrix,
/// `I + c·(Ωc)ᵀ`.
pub fn transvection(c: &[BigInt], form: &IntMatrix) -> Result<IntMatrix, Error> {
    transvection_signed(c, form, false)
}

/// Inverse transvection `x ↦ x − Ω(x, c)·c`; exact because the outer
/// product `c·(Ωc)ᵀ` squares to zero.
pub fn transvection_inverse(c: &[BigInt], form: &IntMatrix) -> Result<IntMatrix, Error> {
    transvection_signed(c, form, true)
}

fn transvection_signed(c: &[BigInt], form: &IntMatrix, invert: bool) -> Result<IntMatrix, Error> {
    if c.len() != form.rows() {
        return Err(Error::DimensionMismatch(format!(
            "class has length {}, form is {}x{}",
            c.len(),
            form.rows(),
            form.cols()
        )));
    }
    if c.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let omega_c = form.mul_vec(c);
    let n = c.len();
    let mut t = IntMatrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            let add = &c[i] * &omega_c[j];
            let v = if invert {
                t.get(i, j) - add
            } else {
                t.get(i, j) + add
            };
            t.set(i, j, v);
        }
    }
    Ok(t)
}

/// The transvection matrices of all chain generators and their inverses,
/// precomputed once per genus.
pub struct Generators {
    genus: Genus,
    mats: Vec<IntMatrix>,
    invs: Vec<IntMatrix>,
}

impl Generators {
    pub fn new(genus: Genus) -> Self {
        let chain = chain_classes(genus);
        let mats: Vec<IntMatrix> = chain
            .classes
            .iter()
            .map(|c| transvection(c, &chain.omega).expect("chain classes are nonzero"))
            .collect();
        let invs: Vec<IntMatrix> = chain
            .classes
            .iter()
            .map(|c| transvection_inverse(c, &chain.omega).expect("chain classes are nonzero"))
            .collect();
        Generators { genus, mats, invs }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    /// Matrix of one letter (generator or inverse).
    pub fn letter_matrix(&self, l: &Letter) -> &IntMatrix {
        let i = (l.index - 1) as usize;
        if l.inverse {
            &self.invs[i]
        } else {
            &self.mats[i]
        }
    }

    /// Matrix of the plain generator ζ_i, 1-based.
    pub fn generator(&self, i: u32) -> &IntMatrix {
        &self.mats[(i - 1) as usize]
    }

    /// Evaluates a word left to right.
    pub fn eval(&self, w: &Word) -> IntMatrix {
        assert_eq!(w.genus(), self.genus, "word genus mismatch");
        let mut out = IntMatrix::identity(self.genus.dim());
        for l in w.letters() {
            out = out.mul(self.letter_matrix(l));
        }
        out
    }
}

/// Evaluates a word on homology (one-shot convenience around
/// [`Generators::eval`]).
pub fn eval_word(w: &Word) -> IntMatrix {
    Generators::new(w.genus()).eval(w)
}

fn word_from_indices<I: IntoIterator<Item = u32>>(g: Genus, it: I) -> Word {
    Word::new(g, it.into_iter().map(|i| Letter::new(i, false)).collect())
        .expect("constructed indices are in range")
}

/// The full positive chain word ζ₁ ζ₂ ⋯ ζ_{2g+1}; as a mapping class it is
/// periodic of order 2g+2.
pub fn xi_word(g: Genus) -> Word {
    word_from_indices(g, 1..=g.generator_count())
}

/// A word for the hyperelliptic involution:
/// ζ₁ ⋯ ζ_{2g+1} ζ_{2g+1} ⋯ ζ₁, of length 2(2g+1). Evaluates to −I.
pub fn iota_word(g: Genus) -> Word {
    let n = g.generator_count();
    word_from_indices(g, (1..=n).chain((1..=n).rev()))
}

/// The chain relation word (ζ₁ ⋯ ζ_{2g+1})^{2g+2}, trivial as a mapping
/// class.
pub fn chain_relation_word(g: Genus) -> Word {
    xi_word(g).repeat(2 * g.value() + 2)
}

/// The separating-curve twist word (ζ₁ ⋯ ζ_{2h})^{4h+2} for 1 ≤ h ≤ g−1:
/// by the chain relation this is the twist about the separating curve that
/// cuts off a genus-h subsurface, so it acts trivially on homology.
pub fn bscc_word(g: Genus, h: u32) -> Result<Word, Error> {
    if h == 0 || h >= g.value() {
        return Err(Error::Range(format!(
            "separating parameter h must satisfy 1 <= h <= g-1, got h={h} at genus {g}"
        )));
    }
    Ok(word_from_indices(g, 1..=2 * h).repeat(4 * h + 2))
}

/// The braid relator ζ_i ζ_{i+1} ζ_i ζ_{i+1}⁻¹ ζ_i⁻¹ ζ_{i+1}⁻¹ for
/// 1 ≤ i ≤ 2g; trivial as a mapping class.
pub fn braid_relator(g: Genus, i: u32) -> Result<Word, Error> {
    if i == 0 || i + 1 > g.generator_count() {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: g.generator_count() - 1,
        });
    }
    Word::new(
        g,
        vec![
            Letter::new(i, false),
            Letter::new(i + 1, false),
            Letter::new(i, false),
            Letter::new(i + 1, true),
            Letter::new(i, true),
            Letter::new(i + 1, true),
        ],
    )
}

/// The commutation relator [ζ_i, ζ_j] for |i − j| ≥ 2; trivial as a
/// mapping class.
pub fn commutation_relator(g: Genus, i: u32, j: u32) -> Result<Word, Error> {
    if i.abs_diff(j) < 2 {
        return Err(Error::Range(format!(
            "generators z{i} and z{j} are adjacent; they do not commute"
        )));
    }
    Word::new(
        g,
        vec![
            Letter::new(i, false),
            Letter::new(j, false),
            Letter::new(i, true),
            Letter::new(j, true),
        ],
    )
}

/// A reproducible random word of the given length: letters uniform over
/// generators and their inverses, driven by a seeded ChaCha stream.
pub fn random_word(g: Genus, len: usize, seed: u64) -> Word {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_word_with_rng(g, len, &mut rng)
}

/// As [`random_word`], but drawing from a caller-managed generator (used
/// by the seeded verification suites).
pub fn random_word_with_rng<R: Rng>(g: Genus, len: usize, rng: &mut R) -> Word {
    let letters = (0..len)
        .map(|_| Letter::new(rng.gen_range(1..=g.generator_count()), rng.gen_bool(0.5)))
        .collect();
    Word::new(g, letters).expect("generated indices are in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::is_symplectic;

    fn g(v: u32) -> Genus {
        Genus::new(v).unwrap()
    }

    fn pairing(form: &IntMatrix, u: &[BigInt], v: &[BigInt]) -> BigInt {
        let fv = form.mul_vec(v);
        u.iter().zip(&fv).map(|(a, b)| a * b).sum()
    }

    #[test]
    fn genus_zero_rejected() {
        assert!(Genus::new(0).is_err());
    }

    #[test]
    fn chain_classes_pair_like_a_chain() {
        for gv in 1..=4 {
            let chain = chain_classes(g(gv));
            let n = chain.classes.len();
            assert_eq!(n as u32, 2 * gv + 1);
            for i in 0..n {
                for j in 0..n {
                    let p = pairing(&chain.omega, &chain.classes[i], &chain.classes[j]);
                    let expected = if j == i + 1 {
                        BigInt::from(-1)
                    } else if i == j + 1 {
                        BigInt::from(1)
                    } else {
                        BigInt::zero()
                    };
                    assert_eq!(p, expected, "genus {gv}, classes {i},{j}");
                }
            }
        }
    }

    #[test]
    fn genus_one_generator_matrices() {
        let gens = Generators::new(g(1));
        assert_eq!(gens.generator(1), &IntMatrix::from_rows(&[vec![1, 0], vec![1, 1]]));
        assert_eq!(gens.generator(2), &IntMatrix::from_rows(&[vec![1, -1], vec![0, 1]]));
        // The chain closes up: ζ₃ twists about −b₁, same transvection as ζ₁.
        assert_eq!(gens.generator(3), gens.generator(1));
    }

    #[test]
    fn transvection_basics() {
        let form = omega(2);
        let c: Vec<BigInt> = [1i64, 0, 2, -1].iter().map(|&x| BigInt::from(x)).collect();
        let t = transvection(&c, &form).unwrap();
        // The twisting class itself is fixed.
        assert_eq!(t.mul_vec(&c), c);
        assert!(is_symplectic(&t, &form).unwrap());
        // Inverse really inverts.
        let ti = transvection_inverse(&c, &form).unwrap();
        assert!(t.mul(&ti).is_identity());
        // Quadratic in the class: doubling the class is not squaring.
        let c2: Vec<BigInt> = c.iter().map(|x| x * 2).collect();
        assert_ne!(transvection(&c2, &form).unwrap(), t.mul(&t));
        // But the sign of the class is invisible.
        let cneg: Vec<BigInt> = c.iter().map(|x| -x).collect();
        assert_eq!(transvection(&cneg, &form).unwrap(), t);
        // Zero class is rejected.
        let z = vec![BigInt::zero(); 4];
        assert_eq!(transvection(&z, &form), Err(Error::ZeroVector));
    }

    #[test]
    fn braid_and_commutation_relations_hold_on_homology() {
        for gv in 1..=3 {
            let genus = g(gv);
            let gens = Generators::new(genus);
            for i in 1..=2 * gv {
                let lhs = word_from_indices(genus, [i, i + 1, i]);
                let rhs = word_from_indices(genus, [i + 1, i, i + 1]);
                assert_eq!(gens.eval(&lhs), gens.eval(&rhs), "braid at i={i}, genus {gv}");
                assert!(gens.eval(&braid_relator(genus, i).unwrap()).is_identity());
            }
            for i in 1..=genus.generator_count() {
                for j in 1..=genus.generator_count() {
                    if i.abs_diff(j) >= 2 {
                        let w = commutation_relator(genus, i, j).unwrap();
                        assert!(gens.eval(&w).is_identity(), "commutation {i},{j} genus {gv}");
                    }
                }
            }
        }
    }

    #[test]
    fn iota_is_minus_identity_and_central() {
        for gv in 1..=3 {
            let genus = g(gv);
            let gens = Generators::new(genus);
            let iota = gens.eval(&iota_word(genus));
            assert_eq!(iota, IntMatrix::identity(genus.dim()).neg());
            assert_eq!(iota_word(genus).len() as u32, 2 * (2 * gv + 1));
            for i in 1..=genus.generator_count() {
                let zi = gens.generator(i);
                assert_eq!(iota.mul(zi), zi.mul(&iota));
            }
        }
    }

    #[test]
    fn chain_relation_is_trivial_on_homology() {
        for gv in 1..=3 {
            let genus = g(gv);
            assert!(eval_word(&chain_relation_word(genus)).is_identity());
        }
    }

    #[test]
    fn xi_has_homology_order_two_g_plus_two() {
        for gv in 1..=3 {
            let genus = g(gv);
            let x = eval_word(&xi_word(genus));
            let order = 2 * gv + 2;
            assert!(x.pow(order).is_identity());
            for k in 1..order {
                assert!(!x.pow(k).is_identity(), "xi^{k} trivial at genus {gv}");
            }
        }
    }

    #[test]
    fn bscc_words_act_trivially() {
        for (gv, h) in [(2, 1), (3, 1), (3, 2), (4, 2)] {
            let genus = g(gv);
            let w = bscc_word(genus, h).unwrap();
            assert_eq!(w.len() as u32, 2 * h * (4 * h + 2));
            assert!(eval_word(&w).is_identity(), "genus {gv}, h={h}");
        }
        assert!(bscc_word(g(2), 0).is_err());
        assert!(bscc_word(g(2), 2).is_err());
        assert!(bscc_word(g(1), 1).is_err());
    }

    #[test]
    fn words_invert_and_validate() {
        let genus = g(2);
        let w = random_word(genus, 9, 7);
        let gens = Generators::new(genus);
        assert!(gens.eval(&w.concat(&w.inverse())).is_identity());
        assert!(is_symplectic(&gens.eval(&w), &omega(2)).unwrap());
        // Display/inverse round-trip shape.
        assert_eq!(w.inverse().inverse(), w);
        // Out-of-range letters are rejected.
        assert!(Word::new(genus, vec![Letter::new(6, false)]).is_err());
        assert!(Word::new(genus, vec![Letter::new(0, false)]).is_err());
    }

    #[test]
    fn random_words_are_reproducible() {
        let genus = g(3);
        let a = random_word(genus, 12, 42);
        let b = random_word(genus, 12, 42);
        let c = random_word(genus, 12, 43);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(a.len(), 12);
    }
}
