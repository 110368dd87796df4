//! Lower central and derived series, nilpotency, solvability and the
//! quasi-filiform test.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{AlgebraTable, Subspace};
use crate::Error;

/// Terms of a descending series.
///
/// `terms[0]` is the whole algebra.  The computation stops at the first zero
/// term (which is included) or when a term equals its predecessor (which is
/// not repeated; `stabilized` is then set).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesResult {
    /// The subspaces `L^0, L^1, …`.
    pub terms: Vec<Subspace>,
    /// Their dimensions.
    pub dims: Vec<usize>,
    /// The series became constant at a nonzero term.
    pub stabilized: bool,
    /// Smallest `m` with a zero `m`-th term, if the series reaches zero.
    pub index: Option<usize>,
}

impl SeriesResult {
    fn run(t: &AlgebraTable, mut step: impl FnMut(&Subspace) -> Subspace) -> Self {
        let mut terms = alloc::vec![Subspace::full(t.dim())];
        let mut stabilized = false;
        let mut index = None;
        loop {
            let last = terms.last().expect("nonempty");
            if last.dim() == 0 {
                index = Some(terms.len() - 1);
                break;
            }
            let next = step(last);
            if next.dim() == last.dim() {
                stabilized = true;
                break;
            }
            terms.push(next);
        }
        let dims = terms.iter().map(Subspace::dim).collect();
        SeriesResult { terms, dims, stabilized, index }
    }

    /// Dimension of the `k`-th term, following the series past its last
    /// recorded term.
    pub fn dim_at(&self, k: usize) -> usize {
        match self.dims.get(k) {
            Some(&d) => d,
            None => *self.dims.last().expect("nonempty"),
        }
    }

    /// `[d0,d1,…]`, with a trailing `…` when the series stabilised above 0.
    pub fn dims_string(&self) -> String {
        let mut s = String::from("[");
        for (i, d) in self.dims.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            s.push_str(&format!("{d}"));
        }
        if self.stabilized {
            s.push_str(",…");
        }
        s.push(']');
        s
    }
}

/// `L^0 = L`, `L^{k+1} = [L^k, L]`.
pub fn lower_central_series(t: &AlgebraTable) -> SeriesResult {
    let full = Subspace::full(t.dim());
    SeriesResult::run(t, |s| t.subspace_product(s, &full).expect("dimensions agree"))
}

/// `L^{[0]} = L`, `L^{[k+1]} = [L^{[k]}, L^{[k]}]`.
pub fn derived_series(t: &AlgebraTable) -> SeriesResult {
    SeriesResult::run(t, |s| t.subspace_product(s, s).expect("dimensions agree"))
}

/// `(nilpotent, index)`; the index is the least `m` with `L^m = 0`.
pub fn is_nilpotent(t: &AlgebraTable) -> (bool, Option<usize>) {
    let s = lower_central_series(t);
    (s.index.is_some(), s.index)
}

/// `(solvable, index)` from the derived series.
pub fn is_solvable(t: &AlgebraTable) -> (bool, Option<usize>) {
    let s = derived_series(t);
    (s.index.is_some(), s.index)
}

/// `L^{n-3} != 0` and `L^{n-2} = 0` for `n = dim L >= 4`.
pub fn is_quasi_filiform(t: &AlgebraTable) -> Result<bool, Error> {
    let n = t.dim();
    if n < 4 {
        return Err(Error::DimensionTooSmall(format!("quasi-filiform needs dim >= 4, got {n}")));
    }
    let s = lower_central_series(t);
    Ok(s.dim_at(n - 3) != 0 && s.dim_at(n - 2) == 0)
}

/// `DS=[…]` and `LS=[…]` lines.
pub fn series_strings(t: &AlgebraTable) -> (String, String) {
    (
        format!("DS={}", derived_series(t).dims_string()),
        format!("LS={}", lower_central_series(t).dims_string()),
    )
}
