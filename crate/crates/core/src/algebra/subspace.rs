use alloc::vec::Vec;

use num_traits::Zero;

use super::Vector;
use crate::ratmat::{Matrix, Rational};
use crate::Error;

/// Subspace of `Q^n`, stored as the reduced row echelon form of a spanning
/// set, so two equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// `{0}` in `Q^ambient`.
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    /// All of `Q^ambient`.
    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// `span(e_i : i in indices)` with 1-based indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let vs: Vec<Vector> = indices.into_iter().map(|i| Vector::basis(ambient, i)).collect();
        Self::span(ambient, &vs).expect("basis vectors have the ambient dimension")
    }

    /// Span of the given vectors.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Result<Self, Error> {
        if vectors.iter().any(|v| v.dim() != ambient) {
            return Err(Error::DimensionMismatch("spanning vector dimension".into()));
        }
        let m = Matrix::from_fn(vectors.len(), ambient, |r, c| vectors[r].coeffs()[c].clone());
        Ok(Self::from_rows_matrix(&m))
    }

    fn from_rows_matrix(m: &Matrix) -> Self {
        let rref = m.rref();
        let rank = rref.rank();
        let basis = Matrix::from_fn(rank, m.cols(), |r, c| rref.reduced[(r, c)].clone());
        Subspace { ambient: m.cols(), basis, pivots: rref.pivots }
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Dimension of the ambient space.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Canonical (reduced echelon) basis.
    pub fn basis_vectors(&self) -> Vec<Vector> {
        (0..self.dim()).map(|r| Vector::from_coeffs(self.basis.row(r).to_vec())).collect()
    }

    /// Canonical basis as the rows of a matrix.
    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    /// `v` minus its component along the echelon basis; zero iff `v` lies in
    /// the subspace.  The result vanishes on every pivot coordinate.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut out = v.clone();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = out.coeffs()[p].clone();
            if !c.is_zero() {
                let row = Vector::from_coeffs(self.basis.row(r).to_vec());
                out.add_scaled(&-c, &row);
            }
        }
        out
    }

    /// Membership test.
    pub fn contains(&self, v: &Vector) -> bool {
        v.dim() == self.ambient && self.reduce(v).is_zero()
    }

    /// `other ⊆ self`.
    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// `self + other`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch("subspace sum".into()));
        }
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::span(self.ambient, &vs)
    }

    /// 1-based coordinates that are not pivots; the corresponding basis
    /// vectors span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).map(|c| c + 1).collect()
    }

    /// Coordinates of `v` modulo the subspace with respect to
    /// [`Subspace::complement_indices`].
    pub fn quotient_coords(&self, v: &Vector) -> Vec<Rational> {
        let red = self.reduce(v);
        self.complement_indices().into_iter().map(|k| red.component(k).clone()).collect()
    }
}
