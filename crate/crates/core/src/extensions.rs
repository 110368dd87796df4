//! Solvable extensions `L = N ⊕ Q` of a nilpotent `N = span(e_1..e_n)`:
//! decomposition into structure tensors, the index-form identity conditions,
//! nilradical verification and basis changes.
//!
//! Notation (all outputs lie in `N`):
//! `[e_i, e_j] = C_{ij}^k e_k`, `[e_a, e_i] = A_{ai}^k e_k`,
//! `[e_i, e_a] = A_{ia}^k e_k`, `[e_a, e_b] = B_{ab}^k e_k`
//! with `i, j, k ≤ n < a, b`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{AlgebraTable, Vector};
use crate::derivations::{pair_nil_independent, NilDependence};
use crate::identity::{check_leibniz, is_derivation};
use crate::ratmat::{Matrix, Rational};
use crate::series::is_nilpotent;
use crate::{Error, Side};

/// Structure tensors of an extension of `N` by `q` generators
/// `e_{n+1}, …, e_{n+q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionData {
    /// The table of `N`.
    pub nilradical: AlgebraTable,
    /// For each generator `e_a`: the `n x n` matrix with column `i` equal to
    /// `[e_i, e_a]` (the restriction of `R_{e_a}`).
    pub right_ops: Vec<Matrix>,
    /// For each generator `e_a`: column `i` is `[e_a, e_i]` (the restriction
    /// of `L_{e_a}`).
    pub left_ops: Vec<Matrix>,
    /// `top[a][b] = [e_{n+1+a}, e_{n+1+b}]`, vectors of length `n`.
    pub top: Vec<Vec<Vector>>,
}

impl ExtensionData {
    /// Validate shapes and bundle.
    pub fn new(
        nilradical: AlgebraTable,
        right_ops: Vec<Matrix>,
        left_ops: Vec<Matrix>,
        top: Vec<Vec<Vector>>,
    ) -> Result<Self, Error> {
        let n = nilradical.dim();
        let q = right_ops.len();
        let square = |m: &Matrix| m.rows() == n && m.cols() == n;
        if q == 0
            || left_ops.len() != q
            || top.len() != q
            || top.iter().any(|row| row.len() != q || row.iter().any(|v| v.dim() != n))
            || !right_ops.iter().chain(&left_ops).all(square)
        {
            return Err(Error::DimensionMismatch(format!(
                "extension data must describe n={n} with a common number of generators"
            )));
        }
        Ok(ExtensionData { nilradical, right_ops, left_ops, top })
    }

    /// Split a table with `N = span(e_1..e_n)`.  Every bracket must land in
    /// `N` and `N` must be closed.
    pub fn from_table(t: &AlgebraTable, n: usize) -> Result<Self, Error> {
        let p = t.dim();
        if n == 0 || n >= p {
            return Err(Error::DimensionMismatch(format!("need 0 < n < dim, got n={n}, dim={p}")));
        }
        for ((i, j), v) in t.nonzero_brackets() {
            if v.support().any(|(k, _)| k > n) {
                return Err(Error::NotClosed(format!("[e{i}, e{j}] leaves span(e1..e{n})")));
            }
        }
        let nil = t.restrict(n)?;
        let q = p - n;
        let block = |m: Matrix| Matrix::from_fn(n, n, |r, c| m[(r, c)].clone());
        let right_ops = (n + 1..=p).map(|a| block(t.right_basis_operator(a))).collect();
        let left_ops = (n + 1..=p).map(|a| block(t.left_basis_operator(a))).collect();
        let top = (0..q)
            .map(|a| (0..q).map(|b| t.bracket_basis(n + 1 + a, n + 1 + b).resized(n)).collect())
            .collect();
        Ok(ExtensionData { nilradical: nil, right_ops, left_ops, top })
    }

    /// `n`.
    pub fn n(&self) -> usize {
        self.nilradical.dim()
    }

    /// Number of generators `q`.
    pub fn codim(&self) -> usize {
        self.right_ops.len()
    }

    /// `n + q`.
    pub fn dim(&self) -> usize {
        self.n() + self.codim()
    }

    /// Restricted multiplication operators of the given side.
    pub fn outer_ops(&self, side: Side) -> &[Matrix] {
        match side {
            Side::Right => &self.right_ops,
            Side::Left => &self.left_ops,
        }
    }

    fn c(&self, i: usize, j: usize, k: usize) -> Rational {
        self.nilradical.structure_constant(i, j, k)
    }

    /// `A_{ai}^k`, `a` a 0-based generator index.
    fn a_l(&self, a: usize, i: usize, k: usize) -> &Rational {
        &self.left_ops[a][(k - 1, i - 1)]
    }

    /// `A_{ia}^k`.
    fn a_r(&self, i: usize, a: usize, k: usize) -> &Rational {
        &self.right_ops[a][(k - 1, i - 1)]
    }

    fn b(&self, a: usize, b: usize, k: usize) -> &Rational {
        self.top[a][b].component(k)
    }
}

/// Assemble the full `(n+q)`-dimensional table.
pub fn assemble(ext: &ExtensionData) -> AlgebraTable {
    let n = ext.n();
    let p = ext.dim();
    let mut t = ext.nilradical.embed(p).expect("p >= n");
    for a in 0..ext.codim() {
        let g = n + 1 + a;
        for i in 1..=n {
            let right = Vector::from_coeffs(ext.right_ops[a].column(i - 1)).resized(p);
            let left = Vector::from_coeffs(ext.left_ops[a].column(i - 1)).resized(p);
            t.set_bracket(i, g, right).expect("indices in range");
            t.set_bracket(g, i, left).expect("indices in range");
        }
        for b in 0..ext.codim() {
            t.set_bracket(g, n + 1 + b, ext.top[a][b].resized(p)).expect("indices in range");
        }
    }
    t
}

/// A violated index equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionFailure {
    /// Index pattern of the triple, e.g. `"(a,i,j)"`.
    pub pattern: &'static str,
    /// The triple `(x, y, z)` as 1-based indices of `L`.
    pub indices: (usize, usize, usize),
    /// Left minus right side, one entry per output index `m ≤ n`.
    pub defect: Vector,
}

/// Outcome of evaluating a condition system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    /// Which identity.
    pub side: Side,
    /// `true` iff `failures` is empty.
    pub holds: bool,
    /// All violated equations.
    pub failures: Vec<ConditionFailure>,
}

/// `Σ_k f(k) g(k)` over `k = 1..=n`.
fn sum(n: usize, mut f: impl FnMut(usize) -> Rational) -> Rational {
    let mut acc = Rational::zero();
    for k in 1..=n {
        acc += f(k);
    }
    acc
}

struct Collector<'a> {
    ext: &'a ExtensionData,
    failures: Vec<ConditionFailure>,
}

impl Collector<'_> {
    fn eq(
        &mut self,
        pattern: &'static str,
        indices: (usize, usize, usize),
        mut lhs_minus_rhs: impl FnMut(usize) -> Rational,
    ) {
        let n = self.ext.n();
        let defect = Vector::from_coeffs((1..=n).map(&mut lhs_minus_rhs).collect());
        if !defect.is_zero() {
            self.failures.push(ConditionFailure { pattern, indices, defect });
        }
    }
}

fn report(side: Side, failures: Vec<ConditionFailure>) -> ConditionReport {
    ConditionReport { side, holds: failures.is_empty(), failures }
}

/// The right identity on `L` written as index equations in `C, A, B`.
///
/// One equation family per triple pattern: three with a single generator,
/// three with two generators, plus the generator-only pattern `(a,b,c)` and
/// the identity of `N` itself.
pub fn check_right_conditions(ext: &ExtensionData) -> ConditionReport {
    let n = ext.n();
    let q = ext.codim();
    let g = |a: usize| n + 1 + a;
    let e = ext;
    let mut col = Collector { ext, failures: Vec::new() };
    for i in 1..=n {
        for j in 1..=n {
            for k0 in 1..=n {
                col.eq("(i,j,k)", (i, j, k0), |m| {
                    sum(n, |k| e.c(i, j, k) * e.c(k, k0, m))
                        - sum(n, |k| e.c(i, k0, k) * e.c(k, j, m))
                        - sum(n, |k| e.c(j, k0, k) * e.c(i, k, m))
                });
            }
        }
    }
    for a in 0..q {
        for i in 1..=n {
            for j in 1..=n {
                col.eq("(a,i,j)", (g(a), i, j), |m| {
                    sum(n, |k| e.a_l(a, i, k) * e.c(k, j, m))
                        - sum(n, |k| e.a_l(a, j, k) * e.c(k, i, m))
                        - sum(n, |k| e.c(i, j, k) * e.a_l(a, k, m))
                });
                col.eq("(i,a,j)", (i, g(a), j), |m| {
                    sum(n, |k| e.a_r(i, a, k) * e.c(k, j, m))
                        - sum(n, |k| e.c(i, j, k) * e.a_r(k, a, m))
                        - sum(n, |k| e.a_l(a, j, k) * e.c(i, k, m))
                });
                col.eq("(i,j,a)", (i, j, g(a)), |m| {
                    sum(n, |k| e.c(i, j, k) * e.a_r(k, a, m))
                        - sum(n, |k| e.a_r(i, a, k) * e.c(k, j, m))
                        - sum(n, |k| e.a_r(j, a, k) * e.c(i, k, m))
                });
            }
        }
    }
    for a in 0..q {
        for b in 0..q {
            for i in 1..=n {
                col.eq("(a,b,i)", (g(a), g(b), i), |m| {
                    sum(n, |k| e.b(a, b, k) * e.c(k, i, m))
                        - sum(n, |k| e.a_l(a, i, k) * e.a_r(k, b, m))
                        - sum(n, |k| e.a_l(b, i, k) * e.a_l(a, k, m))
                });
                col.eq("(a,i,b)", (g(a), i, g(b)), |m| {
                    sum(n, |k| e.a_l(a, i, k) * e.a_r(k, b, m))
                        - sum(n, |k| e.b(a, b, k) * e.c(k, i, m))
                        - sum(n, |k| e.a_r(i, b, k) * e.a_l(a, k, m))
                });
                col.eq("(i,a,b)", (i, g(a), g(b)), |m| {
                    sum(n, |k| e.b(a, b, k) * e.c(i, k, m))
                        - sum(n, |k| e.a_r(k, b, m) * e.a_r(i, a, k))
                        + sum(n, |k| e.a_r(k, a, m) * e.a_r(i, b, k))
                });
            }
            for c in 0..q {
                col.eq("(a,b,c)", (g(a), g(b), g(c)), |m| {
                    sum(n, |k| e.b(a, b, k) * e.a_r(k, c, m))
                        - sum(n, |k| e.b(a, c, k) * e.a_r(k, b, m))
                        - sum(n, |k| e.b(b, c, k) * e.a_l(a, k, m))
                });
            }
        }
    }
    report(Side::Right, col.failures)
}

/// The left identity on `L` written as index equations in `C, A, B`, with
/// the same pattern coverage as [`check_right_conditions`].
pub fn check_left_conditions(ext: &ExtensionData) -> ConditionReport {
    let n = ext.n();
    let q = ext.codim();
    let g = |a: usize| n + 1 + a;
    let e = ext;
    let mut col = Collector { ext, failures: Vec::new() };
    for i in 1..=n {
        for j in 1..=n {
            for k0 in 1..=n {
                col.eq("(i,j,k)", (i, j, k0), |m| {
                    sum(n, |k| e.c(i, j, k) * e.c(k, k0, m))
                        - sum(n, |k| e.c(j, k0, k) * e.c(i, k, m))
                        + sum(n, |k| e.c(i, k0, k) * e.c(j, k, m))
                });
            }
        }
    }
    for a in 0..q {
        for i in 1..=n {
            for j in 1..=n {
                // [e_j,[e_a,e_i]] = [[e_j,e_a],e_i] + [e_a,[e_j,e_i]]
                col.eq("(i,a,j)", (j, g(a), i), |m| {
                    sum(n, |k| e.a_l(a, i, k) * e.c(j, k, m))
                        - sum(n, |k| e.a_r(j, a, k) * e.c(k, i, m))
                        - sum(n, |k| e.c(j, i, k) * e.a_l(a, k, m))
                });
                // [e_j,[e_i,e_a]] = [[e_j,e_i],e_a] + [e_i,[e_j,e_a]]
                col.eq("(i,j,a)", (j, i, g(a)), |m| {
                    sum(n, |k| e.a_r(i, a, k) * e.c(j, k, m))
                        - sum(n, |k| e.c(j, i, k) * e.a_r(k, a, m))
                        - sum(n, |k| e.a_r(j, a, k) * e.c(i, k, m))
                });
                // [e_a,[e_i,e_j]] = [[e_a,e_i],e_j] + [e_i,[e_a,e_j]]
                col.eq("(a,i,j)", (g(a), i, j), |m| {
                    sum(n, |k| e.c(i, j, k) * e.a_l(a, k, m))
                        - sum(n, |k| e.a_l(a, i, k) * e.c(k, j, m))
                        - sum(n, |k| e.a_l(a, j, k) * e.c(i, k, m))
                });
            }
        }
    }
    for a in 0..q {
        for b in 0..q {
            for i in 1..=n {
                // [e_i,[e_a,e_b]] = [[e_i,e_a],e_b] + [e_a,[e_i,e_b]]
                col.eq("(i,a,b)", (i, g(a), g(b)), |m| {
                    sum(n, |k| e.b(a, b, k) * e.c(i, k, m))
                        - sum(n, |k| e.a_r(i, a, k) * e.a_r(k, b, m))
                        - sum(n, |k| e.a_r(i, b, k) * e.a_l(a, k, m))
                });
                // [e_a,[e_i,e_b]] = [[e_a,e_i],e_b] + [e_i,[e_a,e_b]]
                col.eq("(a,i,b)", (g(a), i, g(b)), |m| {
                    sum(n, |k| e.a_r(i, b, k) * e.a_l(a, k, m))
                        - sum(n, |k| e.b(a, b, k) * e.c(i, k, m))
                        - sum(n, |k| e.a_l(a, i, k) * e.a_r(k, b, m))
                });
                // [[e_a,e_b],e_i] = [e_a,[e_b,e_i]] - [e_b,[e_a,e_i]]
                col.eq("(a,b,i)", (g(a), g(b), i), |m| {
                    sum(n, |k| e.b(a, b, k) * e.c(k, i, m))
                        - sum(n, |k| e.a_l(a, k, m) * e.a_l(b, i, k))
                        + sum(n, |k| e.a_l(b, k, m) * e.a_l(a, i, k))
                });
            }
            for c in 0..q {
                // [e_a,[e_b,e_c]] = [[e_a,e_b],e_c] + [e_b,[e_a,e_c]]
                col.eq("(a,b,c)", (g(a), g(b), g(c)), |m| {
                    sum(n, |k| e.b(b, c, k) * e.a_l(a, k, m))
                        - sum(n, |k| e.b(a, b, k) * e.a_r(k, c, m))
                        - sum(n, |k| e.b(a, c, k) * e.a_l(b, k, m))
                });
            }
        }
    }
    report(Side::Left, col.failures)
}

/// Condition system for the given side.
pub fn check_conditions(ext: &ExtensionData, side: Side) -> ConditionReport {
    match side {
        Side::Right => check_right_conditions(ext),
        Side::Left => check_left_conditions(ext),
    }
}

/// Status of one nilradical criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ItemStatus {
    /// Criterion holds.
    Pass,
    /// Criterion fails.
    Fail,
    /// Criterion does not apply (e.g. pairwise test with one generator).
    NotApplicable,
}

/// One line of a [`NilradicalReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilradicalItem {
    /// What is checked.
    pub label: &'static str,
    /// Outcome.
    pub status: ItemStatus,
    /// Supporting detail.
    pub detail: String,
}

/// Checks that `span(e_1..e_n)` is the nilradical of `t` with the adjoined
/// generators acting as nil-independent outer derivations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilradicalReport {
    /// The operator side used in items 5 and 6.
    pub side: Side,
    /// Six items in fixed order.
    pub items: Vec<NilradicalItem>,
}

impl NilradicalReport {
    /// No item failed.
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.status != ItemStatus::Fail)
    }
}

fn status(ok: bool) -> ItemStatus {
    if ok {
        ItemStatus::Pass
    } else {
        ItemStatus::Fail
    }
}

/// The side whose identity `t` satisfies (right preferred), if any.
pub fn detect_side(t: &AlgebraTable) -> Option<Side> {
    [Side::Right, Side::Left].into_iter().find(|&s| check_leibniz(t, s).holds)
}

/// Evaluate the six nilradical criteria for `N = span(e_1..e_n)`.
pub fn verify_nilradical(t: &AlgebraTable, n: usize, side: Side) -> Result<NilradicalReport, Error> {
    let p = t.dim();
    if n == 0 || n >= p {
        return Err(Error::DimensionMismatch(format!("need 0 < n < dim, got n={n}, dim={p}")));
    }
    let outside = |v: &Vector| v.support().any(|(k, _)| k > n);
    let mut items = Vec::new();

    let mut ideal_bad = None;
    for x in 1..=p {
        for i in 1..=n {
            for (l, r) in [(i, x), (x, i)] {
                if ideal_bad.is_none() && t.get(l, r).is_some_and(outside) {
                    ideal_bad = Some((l, r));
                }
            }
        }
    }
    items.push(NilradicalItem {
        label: "span(e1..en) is a two-sided ideal",
        status: status(ideal_bad.is_none()),
        detail: match ideal_bad {
            Some((l, r)) => format!("[e{l}, e{r}] leaves the span"),
            None => String::from("closed under brackets with L on both sides"),
        },
    });

    let nil = t.project(n);
    let (nilp, idx) = is_nilpotent(&nil);
    items.push(NilradicalItem {
        label: "restriction to span(e1..en) is nilpotent",
        status: status(nilp),
        detail: match idx {
            Some(m) => format!("nilpotency index {m}"),
            None => String::from("lower central series stabilises above 0"),
        },
    });

    let derived_bad = t.nonzero_brackets().find(|(_, v)| outside(v)).map(|(ij, _)| ij);
    items.push(NilradicalItem {
        label: "[L, L] is contained in span(e1..en)",
        status: status(derived_bad.is_none()),
        detail: match derived_bad {
            Some((i, j)) => format!("[e{i}, e{j}] leaves the span"),
            None => String::from("every bracket lies in the span"),
        },
    });

    items.push(NilradicalItem {
        label: "n >= dim/2",
        status: status(2 * n >= p),
        detail: format!("n={n}, dim={p}"),
    });

    let ops: Vec<Matrix> = (n + 1..=p)
        .map(|a| {
            let full = match side {
                Side::Right => t.right_basis_operator(a),
                Side::Left => t.left_basis_operator(a),
            };
            Matrix::from_fn(n, n, |r, c| full[(r, c)].clone())
        })
        .collect();
    let mut bad = Vec::new();
    for (off, d) in ops.iter().enumerate() {
        let der = is_derivation(&nil, d)?;
        let nilpotent = d.is_nilpotent()?;
        if !der {
            bad.push(format!("e{} not a derivation", n + 1 + off));
        } else if nilpotent {
            bad.push(format!("e{} acts nilpotently", n + 1 + off));
        }
    }
    items.push(NilradicalItem {
        label: "outer operators are non-nilpotent derivations of span(e1..en)",
        status: status(bad.is_empty()),
        detail: if bad.is_empty() { String::from("all generators") } else { bad.join("; ") },
    });

    let item6 = match ops.as_slice() {
        [_] => NilradicalItem {
            label: "outer operators are nil-independent",
            status: ItemStatus::NotApplicable,
            detail: String::from("single generator"),
        },
        [d1, d2] => {
            let v = pair_nil_independent(d1, d2)?;
            NilradicalItem {
                label: "outer operators are nil-independent",
                status: status(v == NilDependence::NoNontrivialNilpotentCombination),
                detail: String::from(v.kind()),
            }
        }
        _ => {
            let ok = !crate::derivations::all_combinations_nilpotent(&ops).unwrap_or(true);
            NilradicalItem {
                label: "outer operators are nil-independent",
                status: if ok { ItemStatus::NotApplicable } else { ItemStatus::Fail },
                detail: format!("{} generators: only the pairwise procedure is exact", ops.len()),
            }
        }
    };
    items.push(item6);
    Ok(NilradicalReport { side, items })
}

/// Rewrite `t` in the basis `e'_i = Σ_j P_{ij} e_j` (rows of `P` are the new
/// basis vectors in old coordinates).
///
/// With `M = (P^T)^{-1}` this satisfies `new(Mx, My) = M old(x, y)`, and
/// applying `P` then `Q` equals applying `QP`.
pub fn apply_basis_change(t: &AlgebraTable, p: &Matrix) -> Result<AlgebraTable, Error> {
    let n = t.dim();
    if p.rows() != n || p.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "basis change {}x{} for a {n}-dimensional algebra",
            p.rows(),
            p.cols()
        )));
    }
    let back = p.transpose().inverse()?;
    let mut out = AlgebraTable::new(n);
    for i in 1..=n {
        for j in 1..=n {
            let mut w = Vector::zero(n);
            for ((r, s), v) in t.nonzero_brackets() {
                let c = &p[(i - 1, r - 1)] * &p[(j - 1, s - 1)];
                w.add_scaled(&c, v);
            }
            if !w.is_zero() {
                out.set_bracket(i, j, Vector::from_coeffs(back.mul_vec(w.coeffs())?))?;
            }
        }
    }
    Ok(out)
}

/// First bracket pair where two tables of equal dimension differ.
pub fn first_difference(a: &AlgebraTable, b: &AlgebraTable) -> Option<(usize, usize, Vector, Vector)> {
    let n = a.dim();
    for i in 1..=n {
        for j in 1..=n {
            let (x, y) = (a.bracket_basis(i, j), b.bracket_basis(i, j));
            if x != y {
                return Some((i, j, x, y));
            }
        }
    }
    None
}

/// Outcome of replaying a basis change.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformReport {
    /// The transformed table equals the target.
    pub matches: bool,
    /// The transformed table.
    pub result: AlgebraTable,
    /// First differing pair `(i, j, got, expected)`.
    pub first_difference: Option<(usize, usize, Vector, Vector)>,
}

/// Apply `p` to `source` and compare with `target`.
pub fn verify_transformation(
    source: &AlgebraTable,
    p: &Matrix,
    target: &AlgebraTable,
) -> Result<TransformReport, Error> {
    if source.dim() != target.dim() {
        return Err(Error::DimensionMismatch("source and target dimensions differ".into()));
    }
    let result = apply_basis_change(source, p)?;
    let diff = first_difference(&result, target);
    Ok(TransformReport { matches: diff.is_none(), result, first_difference: diff })
}
