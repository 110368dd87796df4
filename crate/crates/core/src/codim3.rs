//! Evidence that `L^4(4)` admits no three nil-independent outer derivations
//! of the general diagonal-block form.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::catalog::build_l4;
use crate::derivations::{all_combinations_nilpotent, inner_derivations};
use crate::identity::is_derivation;
use crate::ratmat::{int, Matrix, Rational};
use crate::Side;

/// Parameters of one outer operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterParams {
    /// Weight on `e1` (nonzero).
    pub a: Rational,
    /// Weight on `e3`.
    pub b: Rational,
    /// Mixing of `e1` and `e3`.
    pub c: Rational,
    /// Free `e2` coefficient on `e3`.
    pub a23: Rational,
    /// Free `e2` coefficient of the left action on `e3`.
    pub b23: Rational,
}

/// The `4 x 4` matrix of `R_{e_i}` restricted to `L^4(4)`.  Panics if `a = 0`.
pub fn outer_operator(p: &OuterParams) -> Matrix {
    let OuterParams { a, b, c, a23, b23 } = p;
    let two = int(2);
    let a21 = ((int(3) * a - &two * b - int(3) * c) * a23 + (a - &two * b - int(3) * c) * b23)
        / (&two * a);
    Matrix::from_rows(alloc::vec![
        alloc::vec![a.clone(), int(0), c.clone(), int(0)],
        alloc::vec![a21, &two * (b + c), a23.clone(), &two * c + b - a],
        alloc::vec![b + c - a, int(0), b.clone(), int(0)],
        alloc::vec![int(0), int(0), int(0), a + b],
    ])
    .expect("rectangular")
}

/// Three operators sharing the parameter `t` with `a_i - b_i = t c_i`, which
/// makes `(a_i - b_i) c_j = (a_j - b_j) c_i` for every pair.
pub fn constrained_triple(
    a: [Rational; 3],
    c: [Rational; 3],
    t: &Rational,
    a23: [Rational; 3],
    b23: [Rational; 3],
) -> [OuterParams; 3] {
    core::array::from_fn(|i| OuterParams {
        a: a[i].clone(),
        b: &a[i] - t * &c[i],
        c: c[i].clone(),
        a23: a23[i].clone(),
        b23: b23[i].clone(),
    })
}

/// What was established for one triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codim3Evidence {
    /// The pairwise constraints hold.
    pub constraints_hold: bool,
    /// `det[a; b; c] = 0`.
    pub determinant_zero: bool,
    /// Each operator is a derivation of `L^4(4)`.
    pub all_derivations: bool,
    /// Coefficients `λ` with `Σ λ_i (a_i, b_i, c_i) = 0`, not all zero.
    pub witness: Vec<Rational>,
    /// `Σ λ_i R_i` is nilpotent.
    pub witness_nilpotent: bool,
    /// All combinations of the three operators are nilpotent (expected
    /// false: the dependence is a specific combination).
    pub all_combinations_nilpotent: bool,
}

impl Codim3Evidence {
    /// The triple is nil-dependent, certified by an explicit witness.
    pub fn nil_dependent(&self) -> bool {
        self.determinant_zero && self.witness_nilpotent && !self.witness.iter().all(Zero::is_zero)
    }
}

/// Evaluate the evidence for three operator parameter sets.
pub fn evidence(params: &[OuterParams; 3]) -> Codim3Evidence {
    let l4 = build_l4(4).expect("n = 4");
    let ops: Vec<Matrix> = params.iter().map(outer_operator).collect();
    let mut constraints_hold = true;
    for i in 0..3 {
        for j in i + 1..3 {
            let (p, q) = (&params[i], &params[j]);
            constraints_hold &= (&p.a - &p.b) * &q.c == (&q.a - &q.b) * &p.c;
        }
    }
    let coeff = Matrix::from_fn(3, 3, |r, col| match r {
        0 => params[col].a.clone(),
        1 => params[col].b.clone(),
        _ => params[col].c.clone(),
    });
    let determinant_zero = coeff.determinant().expect("square").is_zero();
    let ns = coeff.nullspace();
    let witness = if ns.cols() > 0 { ns.column(0) } else { alloc::vec![int(0); 3] };
    let mut comb = Matrix::zeros(4, 4);
    for (l, op) in witness.iter().zip(&ops) {
        comb = &comb + &op.scale(l);
    }
    let witness_nilpotent = ns.cols() > 0 && comb.is_nilpotent().expect("square");
    Codim3Evidence {
        constraints_hold,
        determinant_zero,
        all_derivations: ops.iter().all(|d| is_derivation(&l4, d).expect("4 x 4")),
        witness,
        witness_nilpotent,
        all_combinations_nilpotent: all_combinations_nilpotent(&ops).expect("three operators"),
    }
}

/// Whether `[R_i, R_j]` is an inner derivation of `L^4(4)` for every pair.
pub fn commutators_inner(params: &[OuterParams]) -> bool {
    let l4 = build_l4(4).expect("n = 4");
    let inner = inner_derivations(&l4, Side::Right);
    let ops: Vec<Matrix> = params.iter().map(outer_operator).collect();
    for i in 0..ops.len() {
        for j in i + 1..ops.len() {
            let c = Matrix::commutator(&ops[i], &ops[j]).expect("same shape");
            if !inner.contains(&c) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmat::rat;

    #[test]
    fn one_triple() {
        let ps = constrained_triple(
            [int(1), int(2), int(-3)],
            [int(1), int(0), rat(1, 2)],
            &int(2),
            [int(1), int(0), int(2)],
            [int(0), int(1), int(-1)],
        );
        let e = evidence(&ps);
        assert!(e.constraints_hold);
        assert!(e.determinant_zero);
        assert!(e.all_derivations);
        assert!(e.nil_dependent());
        assert!(!e.all_combinations_nilpotent);
    }

    #[test]
    fn constraint_makes_commutators_inner() {
        let zero = || [int(0), int(0), int(0)];
        let mut ps = constrained_triple([int(1), int(2), int(-3)], [int(1), int(0), rat(1, 2)], &int(2), zero(), zero());
        assert!(commutators_inner(&ps));
        ps[1].b = int(5);
        assert!(!commutators_inner(&ps));
        assert!(!evidence(&ps).constraints_hold);
    }
}
