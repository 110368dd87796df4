use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::ratmat::{int, Rational};

/// Dense coordinate vector with respect to `e_1, …, e_n`.
///
/// Component accessors take 1-based indices; [`Vector::coeffs`] exposes the
/// underlying 0-based slice.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Vector {
    coeffs: Vec<Rational>,
}

impl Vector {
    /// The zero vector of `R^dim`.
    pub fn zero(dim: usize) -> Self {
        Vector { coeffs: (0..dim).map(|_| Rational::zero()).collect() }
    }

    /// Basis vector `e_i`.  Panics unless `1 <= i <= dim`.
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!((1..=dim).contains(&i), "basis index {i} out of range 1..={dim}");
        let mut v = Self::zero(dim);
        v.coeffs[i - 1] = Rational::one();
        v
    }

    /// From 0-based coordinates.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        Vector { coeffs }
    }

    /// From small integer coordinates.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Vector { coeffs: coeffs.iter().map(|&c| int(c)).collect() }
    }

    /// From `(index, coefficient)` terms (1-based, repeated indices add up).
    pub fn from_terms(dim: usize, terms: &[(usize, Rational)]) -> Self {
        let mut v = Self::zero(dim);
        for (k, c) in terms {
            v.coeffs[k - 1] += c;
        }
        v
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// 0-based coordinates.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Consume into 0-based coordinates.
    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `e_k` (1-based).
    pub fn component(&self, k: usize) -> &Rational {
        &self.coeffs[k - 1]
    }

    /// Set the coefficient of `e_k` (1-based).
    pub fn set(&mut self, k: usize, c: Rational) {
        self.coeffs[k - 1] = c;
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &Vector) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }

    /// `c * self`.
    pub fn scale(&self, c: &Rational) -> Vector {
        Vector { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// All coordinates are zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero coordinates as `(1-based index, coefficient)`.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i + 1, c))
    }

    /// Same vector in a larger (or smaller) ambient space; dropped
    /// coordinates must be zero for this to be lossless.
    pub fn resized(&self, dim: usize) -> Vector {
        let mut v = Self::zero(dim);
        for (k, c) in self.support() {
            if k <= dim {
                v.coeffs[k - 1] = c.clone();
            }
        }
        v
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.dim(), rhs.dim(), "vector dimension mismatch");
        Vector { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Renders as a combination of basis vectors, e.g. `2e2 - e4` or `0`.
impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.support() {
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let abs = c.abs();
            if abs.is_one() {
                write!(f, "e{k}")?;
            } else if abs.is_integer() {
                write!(f, "{abs}e{k}")?;
            } else {
                write!(f, "({abs})e{k}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmat::rat;
    use alloc::string::ToString;

    #[test]
    fn display() {
        assert_eq!(Vector::from_i64(&[0, 2, 0, -1]).to_string(), "2e2 - e4");
        assert_eq!(Vector::zero(3).to_string(), "0");
        let v = Vector::from_terms(3, &[(1, rat(-1, 2)), (3, int(1))]);
        assert_eq!(v.to_string(), "-(1/2)e1 + e3");
    }
}
