//! Basis changes used to bring extensions into canonical form, packaged as
//! `(source, P, target)` triples that can be replayed exactly.

use alloc::vec::Vec;

use crate::algebra::AlgebraTable;
use crate::catalog::{self, Params};
use crate::ratmat::{int, rat, Matrix, Rational};
use crate::Side;

/// A basis change together with the tables before and after it.
#[derive(Clone, Debug)]
pub struct ReplayFixture {
    /// Short identifier.
    pub name: &'static str,
    /// What the change does.
    pub description: &'static str,
    /// Identity the source satisfies.
    pub side: Side,
    /// Table before the change.
    pub source: AlgebraTable,
    /// Rows are the new basis vectors in old coordinates.
    pub matrix: Matrix,
    /// Expected table after the change.
    pub target: AlgebraTable,
}

fn r(x: i64) -> Rational {
    int(x)
}

/// Right extension of `L^4(4)` by `e5` acting with `a, c` on the `e1, e3`
/// block and free coefficients `a23, a41, a43, b21, b23, a25`.
#[allow(clippy::too_many_arguments)]
pub fn right_block_family(
    a: &Rational,
    c: &Rational,
    a23: &Rational,
    a41: &Rational,
    a43: &Rational,
    b21: &Rational,
    b23: &Rational,
    a25: &Rational,
) -> AlgebraTable {
    let mut b = catalog_l4_in(4, 5);
    b.br(1, 5, &[(1, a.clone()), (2, a23 - b21 + b23), (3, -a), (4, a41.clone())]);
    b.br(3, 5, &[(1, c.clone()), (2, a23.clone()), (3, -c), (4, a43.clone())]);
    b.br(4, 5, &[(2, c - a), (4, a - c)]);
    b.br(5, 5, &[(2, a25.clone())]);
    b.br(5, 1, &[(1, -a), (2, b21.clone()), (3, a.clone()), (4, -a41)]);
    b.br(5, 3, &[(1, -c), (2, b23.clone()), (3, c.clone()), (4, -a43)]);
    b.br(5, 4, &[(2, a - c), (4, c - a)]);
    b.t
}

/// Left counterpart of [`right_block_family`] with free coefficients
/// `a21, a23, a41, a43, b23, a25`.
#[allow(clippy::too_many_arguments)]
pub fn left_block_family(
    a: &Rational,
    c: &Rational,
    a21: &Rational,
    a23: &Rational,
    a41: &Rational,
    a43: &Rational,
    b23: &Rational,
    a25: &Rational,
) -> AlgebraTable {
    let mut b = catalog_l4_in(4, 5);
    b.br(1, 5, &[(1, a.clone()), (2, a21.clone()), (3, -a), (4, a41.clone())]);
    b.br(3, 5, &[(1, c.clone()), (2, a23.clone()), (3, -c), (4, a43.clone())]);
    b.br(4, 5, &[(2, c - a), (4, a - c)]);
    b.br(5, 5, &[(2, a25.clone())]);
    b.br(5, 1, &[(1, -a), (2, a23 - a21 + b23), (3, a.clone()), (4, -a41)]);
    b.br(5, 3, &[(1, -c), (2, b23.clone()), (3, c.clone()), (4, -a43)]);
    b.br(5, 4, &[(2, a - c), (4, c - a)]);
    b.t
}

/// Right extension of `L^4(n)` by one generator with weights `a` on `e1`
/// and `b` on `e3`, before normalising `a` to 1.
pub fn right_weighted_family(n: usize, a: &Rational, bb: &Rational) -> AlgebraTable {
    let x = n + 1;
    let mut b = catalog_l4_in(n, x);
    b.br(1, x, &[(1, a.clone()), (3, bb - a)]);
    b.br(2, x, &[(2, r(2) * bb)]);
    b.br(3, x, &[(3, bb.clone())]);
    b.br(4, x, &[(2, bb - a), (4, a + bb)]);
    for i in 5..=n {
        b.br(i, x, &[(i, r(i as i64 - 3) * a + bb)]);
    }
    b.br(x, 1, &[(1, -a), (3, a - bb)]);
    b.br(x, 3, &[(3, -bb)]);
    b.br(x, 4, &[(2, a + bb), (4, -a - bb)]);
    for i in 5..=n {
        b.br(x, i, &[(i, r(3 - i as i64) * a - bb)]);
    }
    b.t
}

/// Right extension of `L^4(5)` by `e6, e7` with the gradings `(1,4,2,3,4)`
/// and `(1,2,1,2,3)` and free coefficients `b21, a23, a53, c, cn, d`.
pub fn right_pair_family(
    b21: &Rational,
    a23: &Rational,
    a53: &Rational,
    c: &Rational,
    cn: &Rational,
    d: &Rational,
) -> AlgebraTable {
    let half = rat(1, 2);
    let a23h = a23 * &half;
    let mut b = catalog_l4_in(5, 7);
    b.br(1, 6, &[(1, r(1)), (2, r(3) * b21 - r(2) * a23), (3, r(1))]);
    b.br(2, 6, &[(2, r(4))]);
    b.br(3, 6, &[(2, a23.clone()), (3, r(2)), (5, a53.clone())]);
    b.br(4, 6, &[(2, r(1)), (4, r(3))]);
    b.br(5, 6, &[(5, r(4))]);
    b.br(6, 1, &[(1, r(-1)), (2, b21.clone()), (3, r(-1))]);
    b.br(6, 3, &[(2, a23.clone()), (3, r(-2)), (5, -a53)]);
    b.br(6, 4, &[(2, r(3)), (4, r(-3))]);
    b.br(6, 5, &[(5, r(-4))]);
    b.br(1, 7, &[(1, r(1)), (2, b21 - &a23h)]);
    b.br(2, 7, &[(2, r(2))]);
    b.br(3, 7, &[(2, a23h.clone()), (3, r(1)), (5, a53.clone())]);
    b.br(4, 7, &[(4, r(2))]);
    b.br(5, 7, &[(5, r(3))]);
    b.br(7, 1, &[(1, r(-1)), (2, b21 - &a23h)]);
    b.br(7, 3, &[(2, a23h), (3, r(-1)), (5, -a53)]);
    b.br(7, 4, &[(2, r(2)), (4, r(-2))]);
    b.br(7, 5, &[(5, r(-3))]);
    b.br(6, 6, &[(2, r(2) * c - r(2) * a53)]);
    b.br(6, 7, &[(2, c.clone()), (4, -a53), (5, cn.clone())]);
    b.br(7, 6, &[(2, d.clone()), (4, a53.clone()), (5, -cn)]);
    b.br(7, 7, &[(2, (d + a53) * &half)]);
    b.t
}

fn catalog_l4_in(n: usize, p: usize) -> catalog::TableBuilder {
    catalog::TableBuilder::l4(n, p)
}

/// Identity with row `row` (1-based) replaced by `entries`.
fn elementary(p: usize, row: usize, entries: &[(usize, Rational)]) -> Matrix {
    let mut m = Matrix::identity(p);
    for (c, v) in entries {
        m[(row - 1, c - 1)] = v.clone();
    }
    m
}

/// The standard replay set.
pub fn fixtures() -> Vec<ReplayFixture> {
    let mut out = Vec::new();

    // e5' = e5 - a43 e1 + a41 e3 removes the e4 components.
    {
        let (a, c, a23, a41, a43, b21, b23, a25) = (r(2), r(1), r(1), r(1), r(1), r(0), r(0), r(0));
        let source = right_block_family(&a, &c, &a23, &a41, &a43, &b21, &b23, &a25);
        let target = right_block_family(
            &a,
            &c,
            &(&a23 + &a41),
            &r(0),
            &r(0),
            &(&b21 - &a43),
            &(&b23 + &a41 - r(2) * &a43),
            &(&a25 + (&a41 - &a43) * (&a23 + &b23 + &a41 - &a43)),
        );
        let matrix = elementary(5, 5, &[(1, -&a43), (3, a41.clone())]);
        out.push(ReplayFixture {
            name: "right-absorb-e4",
            description: "e5' = e5 - a43 e1 + a41 e3 clears the e4 components of [e1,e5], [e3,e5]",
            side: Side::Right,
            source,
            matrix,
            target,
        });
    }

    // e5' = e5 / a normalises the e1 weight.
    {
        let (a, bb) = (r(2), r(3));
        let source = right_weighted_family(4, &a, &bb);
        let target = catalog::build("g_n1_1", 4, &Params::new().with("a", &bb / &a))
            .expect("g_n1_1 has no side condition");
        let matrix = Matrix::diagonal(&[r(1), r(1), r(1), r(1), a.recip()]);
        out.push(ReplayFixture {
            name: "right-scale-weight",
            description: "e5' = e5/a turns weights (a, b) into (1, b/a)",
            side: Side::Right,
            source,
            matrix,
            target,
        });
    }

    // e6' = e6 - (c/2) e2, e7' = e7 - ((d + a53)/4) e2.
    {
        let (b21, a23, a53, c, cn, d) = (r(1), r(2), r(3), r(5), r(1), r(-1));
        let source = right_pair_family(&b21, &a23, &a53, &c, &cn, &d);
        let target = right_pair_family(&b21, &a23, &a53, &r(0), &cn, &-&a53);
        let mut matrix = elementary(7, 6, &[(2, -(&c / r(2)))]);
        matrix[(6, 1)] = -((&d + &a53) / r(4));
        out.push(ReplayFixture {
            name: "right-pair-absorb-e2",
            description: "shifting e6, e7 by multiples of e2 clears [e6,e7] and [e7,e7] in e2",
            side: Side::Right,
            source,
            matrix,
            target,
        });
    }

    // Left counterpart of the first fixture.
    {
        let (a, c, a21, a23, a41, a43, b23, a25) = (r(3), r(1), r(1), r(2), r(1), r(-1), r(1), r(2));
        let source = left_block_family(&a, &c, &a21, &a23, &a41, &a43, &b23, &a25);
        let s = &a41 - &a43;
        let target = left_block_family(
            &a,
            &c,
            &(&a21 + r(2) * &a41 - &a43),
            &(&a23 + &a41),
            &r(0),
            &r(0),
            &(&b23 + &a41 - r(2) * &a43),
            &(&a25 + &s * (&a23 + &b23) + &s * &s),
        );
        let matrix = elementary(5, 5, &[(1, -&a43), (3, a41.clone())]);
        out.push(ReplayFixture {
            name: "left-absorb-e4",
            description: "e5' = e5 - a43 e1 + a41 e3 on the left-side family",
            side: Side::Left,
            source,
            matrix,
            target,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::verify_transformation;
    use crate::identity::check_leibniz;

    #[test]
    fn fixtures_replay() {
        for f in fixtures() {
            assert!(check_leibniz(&f.source, f.side).holds, "{} source", f.name);
            assert!(check_leibniz(&f.target, f.side).holds, "{} target", f.name);
            let rep = verify_transformation(&f.source, &f.matrix, &f.target).unwrap();
            assert!(rep.matches, "{}: {:?}", f.name, rep.first_difference);
        }
    }
}
