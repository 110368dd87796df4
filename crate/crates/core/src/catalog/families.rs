//! Multiplication tables of the nilradical and its solvable extensions.

use alloc::vec::Vec;

use super::Params;
use crate::algebra::AlgebraTable;
use crate::ratmat::{int, Rational};

pub(crate) struct Builder {
    pub t: AlgebraTable,
}

impl Builder {
    /// `L^4(n)` inside an algebra of dimension `p >= n`.
    pub fn l4(n: usize, p: usize) -> Self {
        let mut b = Builder { t: AlgebraTable::new(p) };
        b.br(1, 1, &[(2, int(1))]);
        for i in 3..n {
            b.br(i, 1, &[(i + 1, int(1))]);
        }
        b.br(1, 3, &[(2, int(2)), (4, int(-1))]);
        b.br(3, 3, &[(2, int(1))]);
        for j in 4..n {
            b.br(1, j, &[(j + 1, int(-1))]);
        }
        b
    }

    /// `[e_i, e_j] += Σ c e_k`; terms with `k` beyond the dimension vanish.
    pub fn br(&mut self, i: usize, j: usize, terms: &[(usize, Rational)]) {
        for (k, c) in terms {
            if *k <= self.t.dim() {
                self.t.add_term(i, j, *k, c).expect("family indices are in range");
            }
        }
    }
}

fn r(x: i64) -> Rational {
    int(x)
}

fn iz(i: usize) -> i64 {
    i as i64
}

pub(super) fn g_n1_1(n: usize, p: &Params) -> AlgebraTable {
    let a = p.get("a");
    let x = n + 1;
    let mut b = Builder::l4(n, x);
    b.br(1, x, &[(1, r(1)), (3, &a - r(1))]);
    b.br(2, x, &[(2, r(2) * &a)]);
    b.br(3, x, &[(3, a.clone())]);
    b.br(4, x, &[(2, &a - r(1)), (4, &a + r(1))]);
    for i in 5..=n {
        b.br(i, x, &[(i, &a + r(iz(i) - 3))]);
    }
    b.br(x, 1, &[(1, r(-1)), (3, r(1) - &a)]);
    b.br(x, 3, &[(3, -&a)]);
    b.br(x, 4, &[(2, &a + r(1)), (4, -&a - r(1))]);
    for i in 5..=n {
        b.br(x, i, &[(i, r(3 - iz(i)) - &a)]);
    }
    b.t
}

pub(super) fn g_n1_2(n: usize, _: &Params) -> AlgebraTable {
    let x = n + 1;
    let m = iz(n);
    let mut b = Builder::l4(n, x);
    b.br(1, x, &[(1, r(1)), (3, r(2 - m))]);
    b.br(2, x, &[(2, r(2 * (3 - m)))]);
    b.br(3, x, &[(3, r(3 - m))]);
    b.br(4, x, &[(2, r(2 - m)), (4, r(4 - m))]);
    for i in 5..=n {
        b.br(i, x, &[(i, r(iz(i) - m))]);
    }
    b.br(x, x, &[(n, r(1))]);
    b.br(x, 1, &[(1, r(-1)), (3, r(m - 2))]);
    b.br(x, 3, &[(3, r(m - 3))]);
    b.br(x, 4, &[(2, r(4 - m)), (4, r(m - 4))]);
    for i in 5..=n {
        b.br(x, i, &[(i, r(m - iz(i)))]);
    }
    b.t
}

/// `e_i + ε e_{i+2} + Σ_{k=i+3}^{n} b_{k-i-2} e_k`, scaled by `sign`; the
/// `ε` term is absent once `i + 2 > n`.
fn shifted_tail(n: usize, i: usize, p: &Params, sign: i64) -> Vec<(usize, Rational)> {
    let mut terms = alloc::vec![(i, r(sign))];
    if i + 2 <= n {
        terms.push((i + 2, p.get("eps") * r(sign)));
    }
    for k in i + 3..=n {
        terms.push((k, p.tail(k - i - 2) * r(sign)));
    }
    terms
}

pub(super) fn g_n1_3(n: usize, p: &Params) -> AlgebraTable {
    let x = n + 1;
    let mut b = Builder::l4(n, x);
    b.br(1, x, &[(3, r(1))]);
    b.br(2, x, &[(2, r(2))]);
    b.br(4, x, &[(2, r(1))]);
    for i in 3..=n {
        b.br(i, x, &shifted_tail(n, i, p, 1));
    }
    b.br(x, 1, &[(3, r(-1))]);
    b.br(x, 4, &[(2, r(1))]);
    for i in 3..=n {
        b.br(x, i, &shifted_tail(n, i, p, -1));
    }
    b.t
}

pub(super) fn g_n1_4(n: usize, p: &Params) -> AlgebraTable {
    let (d, f, eps) = (p.get("d"), p.get("f"), p.get("eps"));
    let x = n + 1;
    let mut b = Builder::l4(n, x);
    b.br(1, x, &[(1, r(1)), (3, r(-1))]);
    b.br(3, x, &[(2, d.clone())]);
    b.br(4, x, &[(4, r(1)), (2, r(-1))]);
    for i in 5..=n {
        b.br(i, x, &[(i, r(iz(i) - 3))]);
    }
    b.br(x, x, &[(2, eps)]);
    b.br(x, 1, &[(1, r(-1)), (2, &d + &f), (3, r(1))]);
    b.br(x, 3, &[(2, f)]);
    b.br(x, 4, &[(2, r(1)), (4, r(-1))]);
    for i in 5..=n {
        b.br(x, i, &[(i, r(3 - iz(i)))]);
    }
    b.t
}

pub(super) fn g_5_5(_: usize, p: &Params) -> AlgebraTable {
    let (a, bb) = (p.get("a"), p.get("b"));
    let mut b = Builder::l4(4, 5);
    b.br(1, 5, &[(1, a.clone()), (3, &bb - &a + r(1))]);
    b.br(2, 5, &[(2, r(2) * (&bb + r(1)))]);
    b.br(3, 5, &[(1, r(1)), (3, bb.clone())]);
    b.br(4, 5, &[(2, &bb - &a + r(2)), (4, &a + &bb)]);
    b.br(5, 1, &[(1, -&a), (3, &a - &bb - r(1))]);
    b.br(5, 3, &[(1, r(-1)), (3, -&bb)]);
    b.br(5, 4, &[(2, &a + &bb), (4, -&a - &bb)]);
    b.t
}

pub(super) fn g_5_6(_: usize, p: &Params) -> AlgebraTable {
    let a = p.get("a");
    let mut b = Builder::l4(4, 5);
    b.br(1, 5, &[(1, a.clone()), (3, r(1) - r(2) * &a)]);
    b.br(2, 5, &[(2, r(2) * (r(1) - &a))]);
    b.br(3, 5, &[(1, r(1)), (3, -&a)]);
    b.br(4, 5, &[(2, r(2) * (r(1) - &a))]);
    b.br(5, 5, &[(4, r(1))]);
    b.br(5, 1, &[(1, -&a), (3, r(2) * &a - r(1))]);
    b.br(5, 3, &[(3, a.clone()), (1, r(-1))]);
    b.t
}

pub(super) fn g_5_7(_: usize, p: &Params) -> AlgebraTable {
    let (a, d, f, eps) = (p.get("a"), p.get("d"), p.get("f"), p.get("eps"));
    let mut b = Builder::l4(4, 5);
    b.br(1, 5, &[(1, a.clone()), (3, -&a)]);
    b.br(3, 5, &[(1, r(1)), (2, f.clone()), (3, r(-1))]);
    b.br(4, 5, &[(2, r(1) - &a), (4, &a - r(1))]);
    b.br(5, 5, &[(2, eps)]);
    b.br(5, 1, &[(1, -&a), (2, &d + &f), (3, a.clone())]);
    b.br(5, 3, &[(1, r(-1)), (2, d), (3, r(1))]);
    b.br(5, 4, &[(2, &a - r(1)), (4, r(1) - &a)]);
    b.t
}

pub(super) fn g_5_8(_: usize, p: &Params) -> AlgebraTable {
    let (c, d, eps) = (p.get("c"), p.get("d"), p.get("eps"));
    let mut b = Builder::l4(4, 5);
    b.br(1, 5, &[(2, c.clone())]);
    b.br(3, 5, &[(1, r(1)), (3, r(-1))]);
    b.br(4, 5, &[(2, r(1)), (4, r(-1))]);
    b.br(5, 5, &[(2, eps)]);
    b.br(5, 1, &[(2, &c + &d)]);
    b.br(5, 3, &[(1, r(-1)), (2, &d + r(2) * &c), (3, r(1))]);
    b.br(5, 4, &[(4, r(1)), (2, r(-1))]);
    b.t
}

pub(super) fn l_n1_1(n: usize, p: &Params) -> AlgebraTable {
    let a = p.get("a");
    let x = n + 1;
    let mut b = Builder::l4(n, x);
    b.br(1, x, &[(1, r(1)), (3, &a - r(1))]);
    b.br(3, x, &[(3, a.clone())]);
    b.br(4, x, &[(4, &a + r(1)), (2, -&a - r(1))]);
    for i in 5..=n {
        b.br(i, x, &[(i, &a + r(iz(i) - 3))]);
    }
    b.br(x, 1, &[(1, r(-1)), (3, r(1) - &a)]);
    b.br(x, 2, &[(2, r(-2) * &a)]);
    b.br(x, 3, &[(3, -&a)]);
    b.br(x, 4, &[(2, r(1) - &a), (4, -&a - r(1))]);
    for i in 5..=n {
        b.br(x, i, &[(i, r(3 - iz(i)) - &a)]);
    }
    b.t
}

pub(super) fn l_n1_2(n: usize, _: &Params) -> AlgebraTable {
    let x = n + 1;
    let m = iz(n);
    let mut b = Builder::l4(n, x);
    b.br(1, x, &[(1, r(1)), (3, r(2 - m))]);
    b.br(3, x, &[(3, r(3 - m))]);
    b.br(4, x, &[(2, r(m - 4)), (4, r(4 - m))]);
    for i in 5..=n {
        b.br(i, x, &[(i, r(iz(i) - m))]);
    }
    b.br(x, x, &[(n, r(1))]);
    b.br(x, 1, &[(1, r(-1)), (3, r(m - 2))]);
    b.br(x, 2, &[(2, r(2 * m - 6))]);
    b.br(x, 3, &[(3, r(m - 3))]);
    b.br(x, 4, &[(2, r(m - 2)), (4, r(m - 4))]);
    for i in 5..=n {
        b.br(x, i, &[(i, r(m - iz(i)))]);
    }
    b.t
}

pub(super) fn l_n1_3(n: usize, p: &Params) -> AlgebraTable {
    let x = n + 1;
    let mut b = Builder::l4(n, x);
    b.br(1, x, &[(3, r(1))]);
    b.br(4, x, &[(2, r(-1))]);
    for i in 3..=n {
        b.br(i, x, &shifted_tail(n, i, p, 1));
    }
    b.br(x, 1, &[(3, r(-1))]);
    b.br(x, 2, &[(2, r(-2))]);
    b.br(x, 4, &[(2, r(-1))]);
    for i in 3..=n {
        b.br(x, i, &shifted_tail(n, i, p, -1));
    }
    b.t
}

pub(super) fn l_5_5(_: usize, p: &Params) -> AlgebraTable {
    let (a, bb) = (p.get("a"), p.get("b"));
    let mut b = Builder::l4(4, 5);
    b.br(1, 5, &[(1, a.clone()), (3, &bb - &a + r(1))]);
    b.br(3, 5, &[(1, r(1)), (3, bb.clone())]);
    b.br(4, 5, &[(4, &a + &bb), (2, -&a - &bb)]);
    b.br(5, 1, &[(1, -&a), (3, &a - &bb - r(1))]);
    b.br(5, 2, &[(2, r(-2) * (&bb + r(1)))]);
    b.br(5, 3, &[(1, r(-1)), (3, -&bb)]);
    b.br(5, 4, &[(2, &a - &bb - r(2)), (4, -&a - &bb)]);
    b.t
}

pub(super) fn l_5_6(_: usize, p: &Params) -> AlgebraTable {
    let a = p.get("a");
    let mut b = Builder::l4(4, 5);
    b.br(1, 5, &[(1, a.clone()), (3, r(1) - r(2) * &a)]);
    b.br(3, 5, &[(1, r(1)), (3, -&a)]);
    b.br(5, 5, &[(4, r(1))]);
    b.br(5, 1, &[(1, -&a), (3, r(2) * &a - r(1))]);
    b.br(5, 2, &[(2, r(2) * (&a - r(1)))]);
    b.br(5, 3, &[(3, a.clone()), (1, r(-1))]);
    b.br(5, 4, &[(2, r(2) * (&a - r(1)))]);
    b.t
}

pub(super) fn g_n2_1(n: usize, _: &Params) -> AlgebraTable {
    let (x, y) = (n + 1, n + 2);
    let mut b = Builder::l4(n, y);
    b.br(1, x, &[(1, r(1)), (3, r(1))]);
    b.br(2, x, &[(2, r(4))]);
    b.br(3, x, &[(3, r(2))]);
    b.br(4, x, &[(2, r(1)), (4, r(3))]);
    for i in 5..=n {
        b.br(i, x, &[(i, r(iz(i) - 1))]);
    }
    b.br(x, 1, &[(1, r(-1)), (3, r(-1))]);
    b.br(x, 3, &[(3, r(-2))]);
    b.br(x, 4, &[(2, r(3)), (4, r(-3))]);
    for i in 5..=n {
        b.br(x, i, &[(i, r(1 - iz(i)))]);
    }
    b.br(1, y, &[(1, r(1))]);
    b.br(2, y, &[(2, r(2))]);
    for j in 3..=n {
        b.br(j, y, &[(j, r(iz(j) - 2))]);
    }
    b.br(y, 1, &[(1, r(-1))]);
    b.br(y, 3, &[(3, r(-1))]);
    b.br(y, 4, &[(2, r(2)), (4, r(-2))]);
    for i in 5..=n {
        b.br(y, i, &[(i, r(2 - iz(i)))]);
    }
    b.t
}

/// The generator `e_g` acting as the grading `(1, 2, 1, 2)` on the right
/// codimension-two list.
fn right_unit_grading(b: &mut Builder, g: usize) {
    b.br(1, g, &[(1, r(1))]);
    b.br(2, g, &[(2, r(2))]);
    b.br(3, g, &[(3, r(1))]);
    b.br(4, g, &[(4, r(2))]);
    b.br(g, 1, &[(1, r(-1))]);
    b.br(g, 3, &[(3, r(-1))]);
    b.br(g, 4, &[(2, r(2)), (4, r(-2))]);
}

fn left_unit_grading(b: &mut Builder, g: usize) {
    b.br(1, g, &[(1, r(1))]);
    b.br(3, g, &[(3, r(1))]);
    b.br(4, g, &[(4, r(2)), (2, r(-2))]);
    b.br(g, 1, &[(1, r(-1))]);
    b.br(g, 2, &[(2, r(-2))]);
    b.br(g, 3, &[(3, r(-1))]);
    b.br(g, 4, &[(4, r(-2))]);
}

pub(super) fn g_6_2(_: usize, p: &Params) -> AlgebraTable {
    let bb = p.get("b");
    let b1 = &bb + r(1);
    let mut b = Builder::l4(4, 6);
    right_unit_grading(&mut b, 5);
    b.br(1, 6, &[(1, r(1)), (3, bb.clone())]);
    b.br(2, 6, &[(2, r(2) * &b1)]);
    b.br(3, 6, &[(1, r(1)), (3, bb.clone())]);
    b.br(4, 6, &[(2, b1.clone()), (4, b1.clone())]);
    b.br(6, 1, &[(1, r(-1)), (3, -&bb)]);
    b.br(6, 3, &[(1, r(-1)), (3, -&bb)]);
    b.br(6, 4, &[(2, b1.clone()), (4, -&b1)]);
    b.t
}

pub(super) fn g_6_3(_: usize, p: &Params) -> AlgebraTable {
    let c = p.get("c");
    let mut b = Builder::l4(4, 6);
    b.br(1, 5, &[(1, r(1)), (3, &c + r(1))]);
    b.br(2, 5, &[(2, r(2) * (&c + r(2)))]);
    b.br(3, 5, &[(1, c.clone()), (3, r(2))]);
    b.br(4, 5, &[(2, r(2) * &c + r(1)), (4, r(3))]);
    b.br(5, 1, &[(1, r(-1)), (3, -&c - r(1))]);
    b.br(5, 3, &[(1, -&c), (3, r(-2))]);
    b.br(5, 4, &[(2, r(3)), (4, r(-3))]);
    right_unit_grading(&mut b, 6);
    b.t
}

pub(super) fn g_6_4(_: usize, p: &Params) -> AlgebraTable {
    let bb = p.get("b");
    let mut b = Builder::l4(4, 6);
    right_unit_grading(&mut b, 5);
    b.br(1, 6, &[(1, bb.clone()), (3, r(1) - &bb)]);
    b.br(2, 6, &[(2, r(2))]);
    b.br(3, 6, &[(1, r(1))]);
    b.br(4, 6, &[(2, r(2) - &bb), (4, bb.clone())]);
    b.br(6, 1, &[(1, -&bb), (3, &bb - r(1))]);
    b.br(6, 3, &[(1, r(-1))]);
    b.br(6, 4, &[(2, bb.clone()), (4, -&bb)]);
    b.t
}

pub(super) fn l_n2_1(n: usize, _: &Params) -> AlgebraTable {
    let (x, y) = (n + 1, n + 2);
    let mut b = Builder::l4(n, y);
    b.br(1, x, &[(1, r(1)), (3, r(1))]);
    b.br(3, x, &[(3, r(2))]);
    b.br(4, x, &[(4, r(3)), (2, r(-3))]);
    for i in 5..=n {
        b.br(i, x, &[(i, r(iz(i) - 1))]);
    }
    b.br(x, 1, &[(1, r(-1)), (3, r(-1))]);
    b.br(x, 2, &[(2, r(-4))]);
    b.br(x, 3, &[(3, r(-2))]);
    b.br(x, 4, &[(2, r(-1)), (4, r(-3))]);
    for i in 5..=n {
        b.br(x, i, &[(i, r(1 - iz(i)))]);
    }
    b.br(1, y, &[(1, r(1))]);
    b.br(3, y, &[(3, r(1))]);
    b.br(4, y, &[(4, r(2)), (2, r(-2))]);
    for i in 5..=n {
        b.br(i, y, &[(i, r(iz(i) - 2))]);
    }
    b.br(y, 1, &[(1, r(-1))]);
    b.br(y, 2, &[(2, r(-2))]);
    for j in 3..=n {
        b.br(y, j, &[(j, r(2 - iz(j)))]);
    }
    b.t
}

pub(super) fn l_6_2(_: usize, p: &Params) -> AlgebraTable {
    let bb = p.get("b");
    let b1 = &bb + r(1);
    let mut b = Builder::l4(4, 6);
    left_unit_grading(&mut b, 5);
    b.br(1, 6, &[(1, r(1)), (3, bb.clone())]);
    b.br(3, 6, &[(1, r(1)), (3, bb.clone())]);
    b.br(4, 6, &[(4, b1.clone()), (2, -&b1)]);
    b.br(6, 1, &[(1, r(-1)), (3, -&bb)]);
    b.br(6, 2, &[(2, r(-2) * &b1)]);
    b.br(6, 3, &[(1, r(-1)), (3, -&bb)]);
    b.br(6, 4, &[(2, -&b1), (4, -&b1)]);
    b.t
}

pub(super) fn l_6_3(_: usize, p: &Params) -> AlgebraTable {
    let c = p.get("c");
    let mut b = Builder::l4(4, 6);
    b.br(1, 5, &[(1, r(1)), (3, &c + r(1))]);
    b.br(3, 5, &[(1, c.clone()), (3, r(2))]);
    b.br(4, 5, &[(4, r(3)), (2, r(-3))]);
    b.br(5, 1, &[(1, r(-1)), (3, -&c - r(1))]);
    b.br(5, 2, &[(2, r(-2) * (&c + r(2)))]);
    b.br(5, 3, &[(1, -&c), (3, r(-2))]);
    b.br(5, 4, &[(2, r(-2) * &c - r(1)), (4, r(-3))]);
    left_unit_grading(&mut b, 6);
    b.t
}

pub(super) fn l_6_4(_: usize, p: &Params) -> AlgebraTable {
    let bb = p.get("b");
    let mut b = Builder::l4(4, 6);
    left_unit_grading(&mut b, 5);
    b.br(1, 6, &[(1, bb.clone()), (3, r(1) - &bb)]);
    b.br(3, 6, &[(1, r(1))]);
    b.br(4, 6, &[(4, bb.clone()), (2, -&bb)]);
    b.br(6, 1, &[(1, -&bb), (3, &bb - r(1))]);
    b.br(6, 2, &[(2, r(-2))]);
    b.br(6, 3, &[(1, r(-1))]);
    b.br(6, 4, &[(2, &bb - r(2)), (4, -&bb)]);
    b.t
}
