//! Leibniz, Lie and associativity identities, centers, derivations and the
//! ideal generated by squares.

use alloc::vec::Vec;

use crate::algebra::{AlgebraTable, Subspace, Vector};
use crate::ratmat::{Matrix, Rational};
use crate::{Error, Side};

/// A basis triple where an identity fails, with `lhs - rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    /// `(i, j, k)`, 1-based.
    pub triple: (usize, usize, usize),
    /// Left-hand side minus right-hand side.
    pub defect: Vector,
}

/// Outcome of checking an identity on every basis triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    /// `true` iff `failures` is empty.
    pub holds: bool,
    /// Every failing triple in lexicographic order.
    pub failures: Vec<Failure>,
}

impl IdentityReport {
    fn from_failures(failures: Vec<Failure>) -> Self {
        IdentityReport { holds: failures.is_empty(), failures }
    }
}

/// Dense view used by the triple loops.
struct Dense<'a> {
    n: usize,
    cells: Vec<Option<&'a Vector>>,
}

impl<'a> Dense<'a> {
    fn new(t: &'a AlgebraTable) -> Self {
        Dense { n: t.dim(), cells: t.dense() }
    }

    fn get(&self, i: usize, j: usize) -> Option<&'a Vector> {
        self.cells[(i - 1) * self.n + (j - 1)]
    }

    fn basis(&self, i: usize, j: usize) -> Vector {
        self.get(i, j).cloned().unwrap_or_else(|| Vector::zero(self.n))
    }

    /// `[v, e_k]`.
    fn vec_basis(&self, v: &Vector, k: usize) -> Vector {
        let mut out = Vector::zero(self.n);
        for (m, c) in v.support() {
            if let Some(b) = self.get(m, k) {
                out.add_scaled(c, b);
            }
        }
        out
    }

    /// `[e_i, v]`.
    fn basis_vec(&self, i: usize, v: &Vector) -> Vector {
        let mut out = Vector::zero(self.n);
        for (m, c) in v.support() {
            if let Some(b) = self.get(i, m) {
                out.add_scaled(c, b);
            }
        }
        out
    }
}

fn check_triples(t: &AlgebraTable, f: impl Fn(&Dense, usize, usize, usize) -> Vector) -> IdentityReport {
    let d = Dense::new(t);
    let n = t.dim();
    let mut failures = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let defect = f(&d, i, j, k);
                if !defect.is_zero() {
                    failures.push(Failure { triple: (i, j, k), defect });
                }
            }
        }
    }
    IdentityReport::from_failures(failures)
}

/// `[[x,y],z] - [[x,z],y] - [x,[y,z]]` on every basis triple.
pub fn check_right_leibniz(t: &AlgebraTable) -> IdentityReport {
    check_triples(t, |d, i, j, k| {
        let lhs = d.vec_basis(&d.basis(i, j), k);
        let a = d.vec_basis(&d.basis(i, k), j);
        let b = d.basis_vec(i, &d.basis(j, k));
        &(&lhs - &a) - &b
    })
}

/// `[[x,y],z] - [x,[y,z]] + [y,[x,z]]` on every basis triple.
pub fn check_left_leibniz(t: &AlgebraTable) -> IdentityReport {
    check_triples(t, |d, i, j, k| {
        let lhs = d.vec_basis(&d.basis(i, j), k);
        let a = d.basis_vec(i, &d.basis(j, k));
        let b = d.basis_vec(j, &d.basis(i, k));
        &(&lhs - &a) + &b
    })
}

/// The identity for the given side.
pub fn check_leibniz(t: &AlgebraTable, side: Side) -> IdentityReport {
    match side {
        Side::Right => check_right_leibniz(t),
        Side::Left => check_left_leibniz(t),
    }
}

/// `[[x,y],z] - [x,[y,z]]` on every basis triple.
pub fn check_associative(t: &AlgebraTable) -> IdentityReport {
    check_triples(t, |d, i, j, k| {
        let lhs = d.vec_basis(&d.basis(i, j), k);
        &lhs - &d.basis_vec(i, &d.basis(j, k))
    })
}

/// Anticommutativity plus the Jacobi identity.
pub fn is_lie(t: &AlgebraTable) -> bool {
    let d = Dense::new(t);
    let n = t.dim();
    for i in 1..=n {
        if d.get(i, i).is_some() {
            return false;
        }
        for j in i + 1..=n {
            if !(&d.basis(i, j) + &d.basis(j, i)).is_zero() {
                return false;
            }
        }
    }
    check_triples(t, |d, i, j, k| {
        let a = d.vec_basis(&d.basis(i, j), k);
        let b = d.vec_basis(&d.basis(j, k), i);
        let c = d.vec_basis(&d.basis(k, i), j);
        &(&a + &b) + &c
    })
    .holds
}

/// `[[x,y],z] = [x,[y,z]]` for all basis triples.
pub fn is_associative(t: &AlgebraTable) -> bool {
    check_associative(t).holds
}

/// `{x : [x, L] = [L, x] = 0}`.
pub fn center(t: &AlgebraTable) -> Subspace {
    let n = t.dim();
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(2 * n * n);
    for j in 1..=n {
        rows.extend(t.right_basis_operator(j).to_rows());
        rows.extend(t.left_basis_operator(j).to_rows());
    }
    if n == 0 {
        return Subspace::zero(0);
    }
    let ns = Matrix::from_rows(rows).expect("operator rows have length dim").nullspace();
    let vs: Vec<Vector> = (0..ns.cols()).map(|c| Vector::from_coeffs(ns.column(c))).collect();
    Subspace::span(n, &vs).expect("nullspace vectors have the algebra dimension")
}

/// `d([x,y]) = [d x, y] + [x, d y]` for all basis pairs.
pub fn is_derivation(t: &AlgebraTable, d: &Matrix) -> Result<bool, Error> {
    let n = t.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch("derivation must be dim x dim".into()));
    }
    let dense = Dense::new(t);
    let images: Vec<Vector> = (0..n).map(|c| Vector::from_coeffs(d.column(c))).collect();
    for i in 1..=n {
        for j in 1..=n {
            let lhs = match dense.get(i, j) {
                Some(v) => Vector::from_coeffs(d.mul_vec(v.coeffs())?),
                None => Vector::zero(n),
            };
            let a = dense.vec_basis(&images[i - 1], j);
            let b = dense.basis_vec(i, &images[j - 1]);
            if lhs != &a + &b {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Basis pairs where a multiplication-operator relation fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorRelationReport {
    /// Which relation was tested.
    pub side: Side,
    /// `true` iff `failures` is empty.
    pub holds: bool,
    /// Failing `(i, j)` pairs.
    pub failures: Vec<(usize, usize)>,
}

/// Right: `[R_x, R_y] = R_{[y,x]}`.  Left: `[L_x, L_y] = L_{[x,y]}`.
/// Checked on basis pairs.
pub fn check_mult_homomorphisms(t: &AlgebraTable, side: Side) -> OperatorRelationReport {
    let n = t.dim();
    let ops: Vec<Matrix> = (1..=n)
        .map(|i| match side {
            Side::Right => t.right_basis_operator(i),
            Side::Left => t.left_basis_operator(i),
        })
        .collect();
    let mut failures = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let comm = Matrix::commutator(&ops[i - 1], &ops[j - 1]).expect("square operators");
            let prod = match side {
                Side::Right => t.bracket_basis(j, i),
                Side::Left => t.bracket_basis(i, j),
            };
            let mut expected = Matrix::zeros(n, n);
            for (m, c) in prod.support() {
                expected = &expected + &ops[m - 1].scale(c);
            }
            if comm != expected {
                failures.push((i, j));
            }
        }
    }
    OperatorRelationReport { side, holds: failures.is_empty(), failures }
}

/// Smallest two-sided ideal containing every square `[x, x]`.
///
/// Generated by `[e_i, e_i]` and the polarised squares of `e_i + e_j`, then
/// closed under bracketing with the algebra on both sides.
pub fn squares_ideal(t: &AlgebraTable) -> Subspace {
    let n = t.dim();
    let mut gens = Vec::new();
    for i in 1..=n {
        gens.push(t.bracket_basis(i, i));
        for j in i + 1..=n {
            let s = &Vector::basis(n, i) + &Vector::basis(n, j);
            gens.push(t.bracket(&s, &s).expect("dimensions agree"));
        }
    }
    let mut ideal = Subspace::span(n, &gens).expect("dimensions agree");
    let full = Subspace::full(n);
    loop {
        let right = t.subspace_product(&ideal, &full).expect("dimensions agree");
        let left = t.subspace_product(&full, &ideal).expect("dimensions agree");
        let next = ideal.sum(&right).and_then(|s| s.sum(&left)).expect("dimensions agree");
        if next.dim() == ideal.dim() {
            return ideal;
        }
        ideal = next;
    }
}

/// Multiplication table of `L / I` on the complement basis of `I`
/// (see [`Subspace::complement_indices`]).  `I` must be a two-sided ideal.
pub fn quotient_table(t: &AlgebraTable, ideal: &Subspace) -> Result<AlgebraTable, Error> {
    if ideal.ambient_dim() != t.dim() {
        return Err(Error::DimensionMismatch("ideal ambient dimension".into()));
    }
    let comp = ideal.complement_indices();
    let m = comp.len();
    let mut q = AlgebraTable::new(m);
    for (a, &ca) in comp.iter().enumerate() {
        for (b, &cb) in comp.iter().enumerate() {
            if let Some(v) = t.get(ca, cb) {
                q.set_bracket(a + 1, b + 1, Vector::from_coeffs(ideal.quotient_coords(v)))?;
            }
        }
    }
    Ok(q)
}

/// Whether the quotient by the squares ideal is a Lie algebra.
pub fn quotient_is_lie(t: &AlgebraTable) -> bool {
    let i = squares_ideal(t);
    quotient_table(t, &i).map(|q| is_lie(&q)).unwrap_or(false)
}
