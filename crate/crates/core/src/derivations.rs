//! Derivation algebras, inner derivations and nil-independence of outer
//! derivations.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::{AlgebraTable, Subspace, Vector};
use crate::ratmat::{Matrix, Rational, UniPoly};
use crate::{Error, Side};

/// A basis of a space of `n x n` matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationBasis {
    /// Size `n` of the matrices.
    pub n: usize,
    /// Linearly independent basis matrices.
    pub basis: Vec<Matrix>,
}

impl DerivationBasis {
    /// Dimension of the space.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The space as a subspace of `Q^{n^2}` (row-major flattening).
    pub fn as_subspace(&self) -> Subspace {
        let vs: Vec<Vector> =
            self.basis.iter().map(|m| Vector::from_coeffs(m.as_flat().to_vec())).collect();
        Subspace::span(self.n * self.n, &vs).expect("basis matrices are n x n")
    }

    /// Membership test.
    pub fn contains(&self, d: &Matrix) -> bool {
        d.rows() == self.n
            && d.cols() == self.n
            && self.as_subspace().contains(&Vector::from_coeffs(d.as_flat().to_vec()))
    }

    /// Whether `[D, D'] ∈ span` for all basis pairs.
    pub fn is_closed_under_commutator(&self) -> bool {
        let space = self.as_subspace();
        for (i, a) in self.basis.iter().enumerate() {
            for b in &self.basis[i + 1..] {
                let c = Matrix::commutator(a, b).expect("same shape");
                if !space.contains(&Vector::from_coeffs(c.as_flat().to_vec())) {
                    return false;
                }
            }
        }
        true
    }
}

/// The derivation algebra `Der(L)`, as the nullspace of the linear system
/// `D[e_i,e_j] = [De_i,e_j] + [e_i,De_j]` in the `n^2` entries of `D`.
pub fn derivation_space(t: &AlgebraTable) -> DerivationBasis {
    let n = t.dim();
    let u = |r: usize, c: usize| (r - 1) * n + (c - 1);
    let mut rows: Vec<BTreeMap<usize, Rational>> = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for m in 1..=n {
                let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
                let mut add = |idx: usize, c: Rational| {
                    let e = row.entry(idx).or_insert_with(Rational::zero);
                    *e += c;
                };
                if let Some(v) = t.get(i, j) {
                    for (k, c) in v.support() {
                        add(u(m, k), c.clone());
                    }
                }
                for r in 1..=n {
                    let a = t.structure_constant(r, j, m);
                    if !a.is_zero() {
                        add(u(r, i), -a);
                    }
                    let b = t.structure_constant(i, r, m);
                    if !b.is_zero() {
                        add(u(r, j), -b);
                    }
                }
                row.retain(|_, c| !c.is_zero());
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_fn(rows.len(), n * n, |r, c| {
        rows[r].get(&c).cloned().unwrap_or_else(Rational::zero)
    });
    let ns = system.nullspace();
    let basis = (0..ns.cols())
        .map(|c| Matrix::from_flat(n, n, ns.column(c)).expect("n^2 entries"))
        .collect();
    DerivationBasis { n, basis }
}

/// Span of the multiplication operators of the given side on basis vectors.
pub fn inner_derivations(t: &AlgebraTable, side: Side) -> DerivationBasis {
    let n = t.dim();
    let ops: Vec<Vector> = (1..=n)
        .map(|i| {
            let m = match side {
                Side::Right => t.right_basis_operator(i),
                Side::Left => t.left_basis_operator(i),
            };
            Vector::from_coeffs(m.as_flat().to_vec())
        })
        .collect();
    let s = Subspace::span(n * n, &ops).expect("operators are n x n");
    let basis = s
        .basis_vectors()
        .into_iter()
        .map(|v| Matrix::from_flat(n, n, v.into_coeffs()).expect("n^2 entries"))
        .collect();
    DerivationBasis { n, basis }
}

fn same_square(d1: &Matrix, d2: &Matrix) -> Result<usize, Error> {
    if !d1.is_square() {
        return Err(Error::NotSquare { rows: d1.rows(), cols: d1.cols() });
    }
    if d1.rows() != d2.rows() || d1.cols() != d2.cols() {
        return Err(Error::DimensionMismatch("operators of different size".into()));
    }
    Ok(d1.rows())
}

/// `p_k(λ) = tr((λ d1 + d2)^k)` for `k = 1, …, n`.
pub fn trace_power_polys(d1: &Matrix, d2: &Matrix) -> Result<Vec<UniPoly>, Error> {
    let n = same_square(d1, d2)?;
    let base: Vec<UniPoly> = (0..n * n)
        .map(|idx| {
            let (r, c) = (idx / n, idx % n);
            UniPoly::new(alloc::vec![d2[(r, c)].clone(), d1[(r, c)].clone()])
        })
        .collect();
    let mut power = base.clone();
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        if k > 1 {
            let mut next = alloc::vec![UniPoly::zero(); n * n];
            for r in 0..n {
                for m in 0..n {
                    let a = &power[r * n + m];
                    if a.is_zero() {
                        continue;
                    }
                    for c in 0..n {
                        let b = &base[m * n + c];
                        if !b.is_zero() {
                            next[r * n + c] = &next[r * n + c] + &(a * b);
                        }
                    }
                }
            }
            power = next;
        }
        let mut tr = UniPoly::zero();
        for i in 0..n {
            tr = &tr + &power[i * n + i];
        }
        out.push(tr);
    }
    Ok(out)
}

/// Outcome of a nil-independence test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NilDependence {
    /// Every linear combination is nilpotent.
    AllCombinationsNilpotent,
    /// Some combination with not all coefficients zero is nilpotent.
    SomeCombinationNilpotent {
        /// Rational coefficients `(α, β)` of a verified nilpotent
        /// `α d1 + β d2`, when one exists over ℚ.
        witness: Option<Vec<Rational>>,
        /// Monic common factor of the trace polynomials whose roots `λ` make
        /// `λ d1 + d2` nilpotent (absent for the `d1` branch).
        common_factor: Option<UniPoly>,
    },
    /// Only the zero combination is nilpotent.
    NoNontrivialNilpotentCombination,
}

impl NilDependence {
    /// Short label.
    pub fn kind(&self) -> &'static str {
        match self {
            NilDependence::AllCombinationsNilpotent => "AllCombinationsNilpotent",
            NilDependence::SomeCombinationNilpotent { .. } => "SomeCombinationNilpotent",
            NilDependence::NoNontrivialNilpotentCombination => "NoNontrivialNilpotentCombination",
        }
    }
}

/// Decide whether `α d1 + β d2` is nilpotent for some `(α, β) != (0, 0)`
/// over the algebraic closure.
///
/// Combinations with `β != 0` are scaled to `λ d1 + d2`, which is nilpotent
/// iff `λ` is a common root of all trace polynomials `p_k`.  The remaining
/// direction `β = 0` is `d1` itself.
pub fn pair_nil_independent(d1: &Matrix, d2: &Matrix) -> Result<NilDependence, Error> {
    same_square(d1, d2)?;
    let polys = trace_power_polys(d1, d2)?;
    let nonzero: Vec<&UniPoly> = polys.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok(NilDependence::AllCombinationsNilpotent);
    }
    let g = nonzero.iter().fold(UniPoly::zero(), |acc, p| UniPoly::gcd(&acc, p));
    if g.degree().unwrap_or(0) >= 1 {
        let witness = g.rational_roots().and_then(|roots| {
            roots.into_iter().find_map(|lam| {
                let comb = &d1.scale(&lam) + d2;
                comb.is_nilpotent().ok()?.then(|| alloc::vec![lam, Rational::one()])
            })
        });
        return Ok(NilDependence::SomeCombinationNilpotent { witness, common_factor: Some(g) });
    }
    if d1.is_nilpotent()? {
        return Ok(NilDependence::SomeCombinationNilpotent {
            witness: Some(alloc::vec![Rational::one(), Rational::zero()]),
            common_factor: None,
        });
    }
    Ok(NilDependence::NoNontrivialNilpotentCombination)
}

/// Whether every linear combination of `ds` (at most three matrices) is
/// nilpotent.
///
/// `tr((Σ λ_i d_i)^k)` vanishes identically iff, for each multidegree of
/// total degree `k`, the sum of all words in the `d_i` with that
/// multidegree has zero trace.  Those sums are accumulated by appending one
/// letter at a time.
pub fn all_combinations_nilpotent(ds: &[Matrix]) -> Result<bool, Error> {
    if ds.len() > 3 {
        return Err(Error::Unsupported(format!(
            "nilpotency of all combinations of {} matrices (at most 3)",
            ds.len()
        )));
    }
    let Some(first) = ds.first() else {
        return Ok(true);
    };
    let n = first.rows();
    for d in ds {
        same_square(first, d)?;
    }
    let m = ds.len();
    let mut layer: BTreeMap<Vec<usize>, Matrix> = BTreeMap::new();
    layer.insert(alloc::vec![0; m], Matrix::identity(n));
    for _ in 1..=n {
        let mut next: BTreeMap<Vec<usize>, Matrix> = BTreeMap::new();
        for (alpha, p) in &layer {
            for (i, d) in ds.iter().enumerate() {
                let mut beta = alpha.clone();
                beta[i] += 1;
                let w = p * d;
                match next.get_mut(&beta) {
                    Some(acc) => *acc = &*acc + &w,
                    None => {
                        next.insert(beta, w);
                    }
                }
            }
        }
        if next.values().any(|p| !p.trace().expect("square").is_zero()) {
            return Ok(false);
        }
        layer = next;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build_l4;
    use crate::identity::is_derivation;
    use crate::ratmat::int;

    #[test]
    fn derivation_space_dimensions() {
        assert_eq!(derivation_space(&AlgebraTable::new(3)).dim(), 9);
        let mut line = AlgebraTable::new(1);
        line.set_bracket(1, 1, Vector::basis(1, 1)).unwrap();
        assert_eq!(derivation_space(&line).dim(), 0);
        let t = build_l4(5).unwrap();
        let der = derivation_space(&t);
        for d in &der.basis {
            assert!(is_derivation(&t, d).unwrap());
        }
        assert!(der.is_closed_under_commutator());
    }

    #[test]
    fn inner_derivation_dimensions() {
        assert_eq!(inner_derivations(&build_l4(4).unwrap(), Side::Right).dim(), 2);
        assert_eq!(inner_derivations(&build_l4(6).unwrap(), Side::Right).dim(), 4);
    }

    #[test]
    fn trace_polys() {
        let i2 = Matrix::identity(2);
        let d = Matrix::diagonal(&[int(1), int(2)]);
        assert_eq!(trace_power_polys(&i2, &d).unwrap()[0], UniPoly::from_i64(&[3, 2]));
        let e12 = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let e21 = Matrix::from_i64(&[&[0, 0], &[1, 0]]);
        assert_eq!(trace_power_polys(&e12, &e21).unwrap()[1], UniPoly::from_i64(&[0, 2]));
    }

    #[test]
    fn pair_verdicts() {
        let e12 = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let i2 = Matrix::identity(2);
        assert_eq!(
            pair_nil_independent(&i2, &e12).unwrap(),
            NilDependence::SomeCombinationNilpotent {
                witness: Some(alloc::vec![int(0), int(1)]),
                common_factor: Some(UniPoly::from_i64(&[0, 1])),
            }
        );
        let d = Matrix::diagonal(&[int(1), int(2)]);
        assert_eq!(pair_nil_independent(&i2, &d).unwrap(), NilDependence::NoNontrivialNilpotentCombination);
        assert_eq!(pair_nil_independent(&e12, &e12.scale(&int(3))).unwrap(), NilDependence::AllCombinationsNilpotent);
        assert_eq!(
            pair_nil_independent(&e12, &i2).unwrap().kind(),
            "SomeCombinationNilpotent"
        );
        // λ d1 + d2 is nilpotent only for λ = ±√-2.
        let d1 = Matrix::diagonal(&[int(1), int(-1)]);
        let d2 = Matrix::from_i64(&[&[0, 1], &[2, 0]]);
        match pair_nil_independent(&d1, &d2).unwrap() {
            NilDependence::SomeCombinationNilpotent { witness, common_factor } => {
                assert_eq!(witness, None);
                assert_eq!(common_factor, Some(UniPoly::from_i64(&[2, 0, 1])));
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn all_combinations() {
        let e12 = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let e13 = Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]);
        assert!(all_combinations_nilpotent(&[e12.clone(), e13.clone()]).unwrap());
        assert!(!all_combinations_nilpotent(&[Matrix::identity(2)]).unwrap());
        let e21 = e12.transpose();
        assert!(!all_combinations_nilpotent(&[e12.clone(), e21]).unwrap());
        let four = [e12.clone(), e13.clone(), e12.clone(), e13];
        assert!(matches!(all_combinations_nilpotent(&four), Err(Error::Unsupported(_))));
    }
}
