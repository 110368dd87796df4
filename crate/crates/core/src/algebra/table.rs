use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{Subspace, Vector};
use crate::ratmat::{Matrix, Rational};
use crate::Error;

/// Multiplication table `[e_i, e_j] = Σ_k C_{ij}^k e_k` of an algebra over ℚ.
///
/// Only nonzero brackets are stored; indices are 1-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraTable {
    dim: usize,
    brackets: BTreeMap<(usize, usize), Vector>,
}

impl AlgebraTable {
    /// The algebra of dimension `dim` with zero bracket.
    pub fn new(dim: usize) -> Self {
        AlgebraTable { dim, brackets: BTreeMap::new() }
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    fn check_index(&self, i: usize) -> Result<(), Error> {
        if (1..=self.dim).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, dim: self.dim })
        }
    }

    /// Set `[e_i, e_j] = v`, replacing any previous value.
    pub fn set_bracket(&mut self, i: usize, j: usize, v: Vector) -> Result<(), Error> {
        self.check_index(i)?;
        self.check_index(j)?;
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "bracket value of dimension {} in a {}-dimensional algebra",
                v.dim(),
                self.dim
            )));
        }
        if v.is_zero() {
            self.brackets.remove(&(i, j));
        } else {
            self.brackets.insert((i, j), v);
        }
        Ok(())
    }

    /// `[e_i, e_j] += c e_k`.
    pub fn add_term(&mut self, i: usize, j: usize, k: usize, c: &Rational) -> Result<(), Error> {
        self.check_index(i)?;
        self.check_index(j)?;
        self.check_index(k)?;
        if c.is_zero() {
            return Ok(());
        }
        let dim = self.dim;
        let v = self.brackets.entry((i, j)).or_insert_with(|| Vector::zero(dim));
        let cur = v.component(k) + c;
        v.set(k, cur);
        if v.is_zero() {
            self.brackets.remove(&(i, j));
        }
        Ok(())
    }

    /// `[e_i, e_j]` if nonzero.
    pub fn get(&self, i: usize, j: usize) -> Option<&Vector> {
        self.brackets.get(&(i, j))
    }

    /// `[e_i, e_j]` (zero vector when absent).
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        self.get(i, j).cloned().unwrap_or_else(|| Vector::zero(self.dim))
    }

    /// Structure constant `C_{ij}^k`.
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.get(i, j).map_or_else(Rational::zero, |v| v.component(k).clone())
    }

    /// Nonzero brackets in `(i, j)` order.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = ((usize, usize), &Vector)> {
        self.brackets.iter().map(|(&k, v)| (k, v))
    }

    /// Number of pairs `(i, j)` with `[e_i, e_j] != 0`.
    pub fn nonzero_pair_count(&self) -> usize {
        self.brackets.len()
    }

    /// Bilinear extension `[x, y]`.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector, Error> {
        if x.dim() != self.dim || y.dim() != self.dim {
            return Err(Error::DimensionMismatch("bracket operand dimension".into()));
        }
        let mut out = Vector::zero(self.dim);
        for (&(i, j), v) in &self.brackets {
            let (a, b) = (x.component(i), y.component(j));
            if !a.is_zero() && !b.is_zero() {
                out.add_scaled(&(a * b), v);
            }
        }
        Ok(out)
    }

    /// Matrix of `y ↦ [y, x]`; column `j` is `[e_j, x]`.
    pub fn right_mult_operator(&self, x: &Vector) -> Result<Matrix, Error> {
        let cols: Vec<Vec<Rational>> = (1..=self.dim)
            .map(|j| self.bracket(&Vector::basis(self.dim, j), x).map(Vector::into_coeffs))
            .collect::<Result<_, _>>()?;
        Matrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `y ↦ [x, y]`; column `j` is `[x, e_j]`.
    pub fn left_mult_operator(&self, x: &Vector) -> Result<Matrix, Error> {
        let cols: Vec<Vec<Rational>> = (1..=self.dim)
            .map(|j| self.bracket(x, &Vector::basis(self.dim, j)).map(Vector::into_coeffs))
            .collect::<Result<_, _>>()?;
        Matrix::from_columns(self.dim, &cols)
    }

    /// `R_{e_i}` for a basis vector.
    pub fn right_basis_operator(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |r, c| self.structure_constant(c + 1, i, r + 1))
    }

    /// `L_{e_i}` for a basis vector.
    pub fn left_basis_operator(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |r, c| self.structure_constant(i, c + 1, r + 1))
    }

    /// `span{[u, v] : u ∈ U, v ∈ V}`.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Result<Subspace, Error> {
        if u.ambient_dim() != self.dim || v.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch("subspace product".into()));
        }
        let us = u.basis_vectors();
        let vs = v.basis_vectors();
        let mut prods = Vec::with_capacity(us.len() * vs.len());
        for a in &us {
            for b in &vs {
                let p = self.bracket(a, b)?;
                if !p.is_zero() {
                    prods.push(p);
                }
            }
        }
        Subspace::span(self.dim, &prods)
    }

    /// The subalgebra on `e_1, …, e_n`; fails unless all brackets among these
    /// stay inside their span.
    pub fn restrict(&self, n: usize) -> Result<AlgebraTable, Error> {
        if n > self.dim {
            return Err(Error::IndexOutOfRange { index: n, dim: self.dim });
        }
        for (&(i, j), v) in &self.brackets {
            if i <= n && j <= n && v.support().any(|(k, _)| k > n) {
                return Err(Error::NotClosed(format!("[e{i}, e{j}] leaves span(e1..e{n})")));
            }
        }
        Ok(self.project(n))
    }

    /// Brackets among `e_1, …, e_n` with every component outside their span
    /// dropped.
    pub fn project(&self, n: usize) -> AlgebraTable {
        let mut out = AlgebraTable::new(n);
        for (&(i, j), v) in &self.brackets {
            if i <= n && j <= n {
                out.set_bracket(i, j, v.resized(n)).expect("indices are in range");
            }
        }
        out
    }

    /// Same brackets viewed inside a larger algebra of dimension `dim`.
    pub fn embed(&self, dim: usize) -> Result<AlgebraTable, Error> {
        if dim < self.dim {
            return Err(Error::DimensionMismatch("embedding into a smaller algebra".into()));
        }
        let mut out = AlgebraTable::new(dim);
        for (&(i, j), v) in &self.brackets {
            out.set_bracket(i, j, v.resized(dim))?;
        }
        Ok(out)
    }

    /// The opposite algebra `[x, y]' = [y, x]`.  It swaps the roles of the
    /// right and left Leibniz identities.
    pub fn opposite(&self) -> AlgebraTable {
        AlgebraTable {
            dim: self.dim,
            brackets: self.brackets.iter().map(|(&(i, j), v)| ((j, i), v.clone())).collect(),
        }
    }

    /// Dense lookup table indexed by `(i - 1) * dim + (j - 1)`.
    pub(crate) fn dense(&self) -> Vec<Option<&Vector>> {
        let mut out = alloc::vec![None; self.dim * self.dim];
        for (&(i, j), v) in &self.brackets {
            out[(i - 1) * self.dim + (j - 1)] = Some(v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmat::int;

    fn heisenberg() -> AlgebraTable {
        let mut t = AlgebraTable::new(3);
        t.set_bracket(1, 2, Vector::basis(3, 3)).unwrap();
        t.set_bracket(2, 1, -&Vector::basis(3, 3)).unwrap();
        t
    }

    #[test]
    fn operators_follow_column_convention() {
        let t = heisenberg();
        let r2 = t.right_mult_operator(&Vector::basis(3, 2)).unwrap();
        assert_eq!(r2, t.right_basis_operator(2));
        assert_eq!(r2[(2, 0)], int(1));
        let l1 = t.left_basis_operator(1);
        assert_eq!(l1, t.left_mult_operator(&Vector::basis(3, 1)).unwrap());
        assert_eq!(l1[(2, 1)], int(1));
    }

    #[test]
    fn zeros_are_not_stored() {
        let mut t = heisenberg();
        t.add_term(1, 2, 3, &int(-1)).unwrap();
        assert_eq!(t.nonzero_pair_count(), 1);
        assert!(t.set_bracket(4, 1, Vector::zero(3)).is_err());
        assert!(t.add_term(1, 1, 0, &int(1)).is_err());
    }

    #[test]
    fn derived_subspace() {
        let t = heisenberg();
        let full = Subspace::full(3);
        assert_eq!(t.subspace_product(&full, &full).unwrap(), Subspace::coordinate(3, [3]));
        assert!(t.restrict(2).is_err());
        assert_eq!(t.opposite().bracket_basis(2, 1), Vector::basis(3, 3));
    }
}
