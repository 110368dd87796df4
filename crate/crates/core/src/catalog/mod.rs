//! The nilradical `L^4(n)` and the classified solvable extensions of it,
//! with parameter schemas, admissibility rules and invariant fingerprints.

mod families;

pub(crate) use families::Builder as TableBuilder;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::algebra::AlgebraTable;
use crate::ratmat::{int, rat, Rational};
use crate::{derivations, identity, series, Error, Side};

/// Named rational parameters of a family.  Absent tail coefficients read as 0.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<String, Rational>);

impl Params {
    /// No parameters.
    pub fn new() -> Self {
        Params(BTreeMap::new())
    }

    /// Builder-style insertion.
    pub fn with(mut self, name: &str, value: Rational) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    /// Insert or replace.
    pub fn insert(&mut self, name: &str, value: Rational) {
        self.0.insert(name.to_string(), value);
    }

    /// Value of `name`, zero when absent.
    pub fn get(&self, name: &str) -> Rational {
        self.0.get(name).cloned().unwrap_or_else(Rational::zero)
    }

    /// Tail coefficient `b_k` (stored as `"b{k}"`).
    pub fn tail(&self, k: usize) -> Rational {
        self.get(&format!("b{k}"))
    }

    /// Whether `name` was given.
    pub fn contains(&self, name: &str) -> bool {
        self.0.contains_key(name)
    }

    /// All `(name, value)` pairs in name order.
    pub fn iter(&self) -> impl Iterator<Item = (&str, &Rational)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }
}

impl core::fmt::Display for Params {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let mut first = true;
        for (k, v) in self.iter() {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// Kind of a family parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamKind {
    /// Any rational, subject to the family condition.
    Rational,
    /// `0` or `1`.
    Flag,
    /// Optional coefficients `b1, …, b{n-5}` (default 0).
    Tail,
}

/// One entry of a parameter schema.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamSpec {
    /// Parameter name as used on the command line.
    pub name: &'static str,
    /// Kind.
    pub kind: ParamKind,
}

const fn rp(name: &'static str) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Rational }
}

const EPS: ParamSpec = ParamSpec { name: "eps", kind: ParamKind::Flag };
const TAIL: ParamSpec = ParamSpec { name: "b", kind: ParamKind::Tail };

/// Nilradical dimensions a family exists for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DimRule {
    /// Every `n >= min_n`.
    Indexed {
        /// Smallest admissible nilradical dimension.
        min_n: usize,
    },
    /// Only this nilradical dimension.
    Fixed(usize),
}

impl DimRule {
    /// Whether the family exists over `L^4(n)`.
    pub fn admits(self, n: usize) -> bool {
        match self {
            DimRule::Indexed { min_n } => n >= min_n,
            DimRule::Fixed(m) => n == m,
        }
    }
}

/// When a family also satisfies the identity of the other side.
#[derive(Clone, Copy, Debug)]
pub enum CrossSide {
    /// Never.
    Never,
    /// For every admissible parameter value.
    Always,
    /// Exactly when the predicate holds; the string states it.
    When(&'static str, fn(&Params) -> bool),
}

impl CrossSide {
    /// Expected truth value for a parameter point.
    pub fn expected(&self, p: &Params) -> bool {
        match self {
            CrossSide::Never => false,
            CrossSide::Always => true,
            CrossSide::When(_, f) => f(p),
        }
    }
}

/// A classified family of solvable Leibniz algebras with nilradical `L^4(n)`.
#[derive(Clone, Copy)]
pub struct CatalogEntry {
    /// ASCII identifier, e.g. `g_n1_1`.
    pub id: &'static str,
    /// Conventional name, e.g. `g_{n+1,1}`.
    pub name: &'static str,
    /// Lists the family belongs to (first entry is its defining side).
    pub sides: &'static [Side],
    /// Number of adjoined generators.
    pub codim: usize,
    /// Nilradical dimensions.
    pub dims: DimRule,
    /// Parameter schema.
    pub params: &'static [ParamSpec],
    /// Side condition, verbatim.
    pub condition: &'static str,
    /// Behaviour under the identity of the other side.
    pub cross_side: CrossSide,
    admissible: fn(&Params) -> bool,
    builder: fn(usize, &Params) -> AlgebraTable,
}

impl core::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("CatalogEntry").field("id", &self.id).finish_non_exhaustive()
    }
}

impl CatalogEntry {
    /// The side whose identity the family satisfies by construction.
    pub fn side(&self) -> Side {
        self.sides[0]
    }

    /// Whether the family is listed for `side`.
    pub fn listed_for(&self, side: Side) -> bool {
        self.sides.contains(&side)
    }

    /// Schema check plus the family's side condition.
    pub fn check_params(&self, n: usize, p: &Params) -> Result<(), Error> {
        if !self.dims.admits(n) {
            return Err(Error::Inadmissible(format!("{} does not exist for n={n}", self.id)));
        }
        for (name, value) in p.iter() {
            let known = self.params.iter().any(|s| match s.kind {
                ParamKind::Tail => tail_index(name).is_some_and(|k| k >= 1 && k + 5 <= n),
                _ => s.name == name,
            });
            if !known {
                return Err(Error::Unknown(format!("parameter {name:?} for {}", self.id)));
            }
            if self.params.iter().any(|s| s.kind == ParamKind::Flag && s.name == name)
                && !(value.is_zero() || value.is_one())
            {
                return Err(Error::Inadmissible(format!("{name} must be 0 or 1")));
            }
        }
        for s in self.params {
            if s.kind != ParamKind::Tail && !p.contains(s.name) {
                return Err(Error::Inadmissible(format!("missing parameter {}", s.name)));
            }
        }
        if self.params.contains(&TAIL) && n == 4 && !p.get("eps").is_zero() {
            return Err(Error::Inadmissible("eps must be 0 when n=4".into()));
        }
        if !(self.admissible)(p) {
            return Err(Error::Inadmissible(format!("{}: {}", self.id, self.condition)));
        }
        Ok(())
    }

    /// Table for any parameter values, skipping every schema and side
    /// condition check.  Panics if `n` is too small for the family's indices.
    pub fn build_unchecked(&self, n: usize, p: &Params) -> AlgebraTable {
        (self.builder)(n, p)
    }

    /// Multiplication table on `e_1, …, e_{n+codim}`.
    pub fn build(&self, n: usize, p: &Params) -> Result<AlgebraTable, Error> {
        self.check_params(n, p)?;
        Ok((self.builder)(n, p))
    }

    /// Up to `count` admissible parameter points drawn from `values`.
    ///
    /// Point `s` gives the `k`-th rational parameter (tail coefficients
    /// included) `values[(s + k) % len]` and flags `s % 2`; inadmissible
    /// points are skipped.  If the rotation
    /// does not yield enough points the full grid is scanned in order.
    pub fn sample_points(&self, n: usize, values: &[Rational], count: usize) -> Vec<Params> {
        let tail_names: Vec<String> = if self.params.contains(&TAIL) {
            (1..=n.saturating_sub(5)).map(|k| format!("b{k}")).collect()
        } else {
            Vec::new()
        };
        let rationals: Vec<&str> = self
            .params
            .iter()
            .filter(|s| s.kind == ParamKind::Rational)
            .map(|s| s.name)
            .chain(tail_names.iter().map(String::as_str))
            .collect();
        let flags: Vec<&str> =
            self.params.iter().filter(|s| s.kind == ParamKind::Flag).map(|s| s.name).collect();
        let mut out: Vec<Params> = Vec::new();
        let push = |p: Params, out: &mut Vec<Params>| {
            if out.len() < count && !out.contains(&p) && self.check_params(n, &p).is_ok() {
                out.push(p);
            }
        };
        let len = values.len().max(1);
        for s in 0..len {
            let mut p = Params::new();
            for (k, name) in rationals.iter().enumerate() {
                p.insert(name, values.get((s + k) % len).cloned().unwrap_or_else(Rational::zero));
            }
            for name in &flags {
                p.insert(name, int((s % 2) as i64));
            }
            push(p, &mut out);
            if rationals.is_empty() && flags.is_empty() {
                break;
            }
        }
        let slots = rationals.len() + flags.len();
        let mut idx = alloc::vec![0usize; slots];
        'grid: while out.len() < count && slots > 0 {
            let mut p = Params::new();
            for (k, name) in rationals.iter().enumerate() {
                p.insert(name, values[idx[k] % len].clone());
            }
            for (k, name) in flags.iter().enumerate() {
                p.insert(name, int((idx[rationals.len() + k] % 2) as i64));
            }
            push(p, &mut out);
            for k in (0..slots).rev() {
                let radix = if k < rationals.len() { len } else { 2 };
                idx[k] += 1;
                if idx[k] < radix {
                    continue 'grid;
                }
                idx[k] = 0;
            }
            break;
        }
        out
    }
}

fn tail_index(name: &str) -> Option<usize> {
    name.strip_prefix('b')?.parse().ok()
}

fn eps_pair_ok(p: &Params, a: &str, b: &str) -> bool {
    !p.get("eps").is_zero() || !(p.get(a).is_zero() && p.get(b).is_zero())
}

const R: &[Side] = &[Side::Right];
const L: &[Side] = &[Side::Left];
const RL: &[Side] = &[Side::Right, Side::Left];

static ENTRIES: [CatalogEntry; 22] = [
    CatalogEntry {
        id: "g_n1_1",
        name: "g_{n+1,1}",
        sides: R,
        codim: 1,
        dims: DimRule::Indexed { min_n: 4 },
        params: &[rp("a")],
        condition: "none",
        cross_side: CrossSide::When("a = 0", |p| p.get("a").is_zero()),
        admissible: |_| true,
        builder: families::g_n1_1,
    },
    CatalogEntry {
        id: "g_n1_2",
        name: "g_{n+1,2}",
        sides: R,
        codim: 1,
        dims: DimRule::Indexed { min_n: 4 },
        params: &[],
        condition: "none",
        cross_side: CrossSide::Never,
        admissible: |_| true,
        builder: families::g_n1_2,
    },
    CatalogEntry {
        id: "g_n1_3",
        name: "g_{n+1,3}",
        sides: R,
        codim: 1,
        dims: DimRule::Indexed { min_n: 4 },
        params: &[EPS, TAIL],
        condition: "eps in {0,1}; eps = 0 when n = 4",
        cross_side: CrossSide::Never,
        admissible: |_| true,
        builder: families::g_n1_3,
    },
    CatalogEntry {
        id: "g_n1_4",
        name: "g_{n+1,4}",
        sides: RL,
        codim: 1,
        dims: DimRule::Indexed { min_n: 4 },
        params: &[rp("d"), rp("f"), EPS],
        condition: "eps in {0,1}; if eps = 0 then d^2 + f^2 != 0",
        cross_side: CrossSide::Always,
        admissible: |p| eps_pair_ok(p, "d", "f"),
        builder: families::g_n1_4,
    },
    CatalogEntry {
        id: "g_5_5",
        name: "g_{5,5}",
        sides: R,
        codim: 1,
        dims: DimRule::Fixed(4),
        params: &[rp("a"), rp("b")],
        condition: "if b = -1 then a != 1",
        cross_side: CrossSide::When("b = -1", |p| p.get("b") == int(-1)),
        admissible: |p| p.get("b") != int(-1) || p.get("a") != int(1),
        builder: families::g_5_5,
    },
    CatalogEntry {
        id: "g_5_6",
        name: "g_{5,6}",
        sides: R,
        codim: 1,
        dims: DimRule::Fixed(4),
        params: &[rp("a")],
        condition: "a != 1",
        cross_side: CrossSide::Never,
        admissible: |p| p.get("a") != int(1),
        builder: families::g_5_6,
    },
    CatalogEntry {
        id: "g_5_7",
        name: "g_{5,7}",
        sides: RL,
        codim: 1,
        dims: DimRule::Fixed(4),
        params: &[rp("a"), rp("d"), rp("f"), EPS],
        condition: "eps in {0,1}; if eps = 0 then d^2 + f^2 != 0; a != 1",
        cross_side: CrossSide::Always,
        admissible: |p| eps_pair_ok(p, "d", "f") && p.get("a") != int(1),
        builder: families::g_5_7,
    },
    CatalogEntry {
        id: "g_5_8",
        name: "g_{5,8}",
        sides: RL,
        codim: 1,
        dims: DimRule::Fixed(4),
        params: &[rp("c"), rp("d"), EPS],
        condition: "eps in {0,1}; c != 0",
        cross_side: CrossSide::Always,
        admissible: |p| !p.get("c").is_zero(),
        builder: families::g_5_8,
    },
    CatalogEntry {
        id: "l_n1_1",
        name: "l_{n+1,1}",
        sides: L,
        codim: 1,
        dims: DimRule::Indexed { min_n: 4 },
        params: &[rp("a")],
        condition: "none",
        cross_side: CrossSide::When("a = 0", |p| p.get("a").is_zero()),
        admissible: |_| true,
        builder: families::l_n1_1,
    },
    CatalogEntry {
        id: "l_n1_2",
        name: "l_{n+1,2}",
        sides: L,
        codim: 1,
        dims: DimRule::Indexed { min_n: 4 },
        params: &[],
        condition: "none",
        cross_side: CrossSide::Never,
        admissible: |_| true,
        builder: families::l_n1_2,
    },
    CatalogEntry {
        id: "l_n1_3",
        name: "l_{n+1,3}",
        sides: L,
        codim: 1,
        dims: DimRule::Indexed { min_n: 4 },
        params: &[EPS, TAIL],
        condition: "eps in {0,1}; eps = 0 when n = 4",
        cross_side: CrossSide::Never,
        admissible: |_| true,
        builder: families::l_n1_3,
    },
    CatalogEntry {
        id: "l_5_5",
        name: "l_{5,5}",
        sides: L,
        codim: 1,
        dims: DimRule::Fixed(4),
        params: &[rp("a"), rp("b")],
        condition: "if b = -1 then a != 1",
        cross_side: CrossSide::When("b = -1", |p| p.get("b") == int(-1)),
        admissible: |p| p.get("b") != int(-1) || p.get("a") != int(1),
        builder: families::l_5_5,
    },
    CatalogEntry {
        id: "l_5_6",
        name: "l_{5,6}",
        sides: L,
        codim: 1,
        dims: DimRule::Fixed(4),
        params: &[rp("a")],
        condition: "a != 1",
        cross_side: CrossSide::Never,
        admissible: |p| p.get("a") != int(1),
        builder: families::l_5_6,
    },
    CatalogEntry {
        id: "g_n2_1",
        name: "g_{n+2,1}",
        sides: R,
        codim: 2,
        dims: DimRule::Indexed { min_n: 5 },
        params: &[],
        condition: "n >= 5",
        cross_side: CrossSide::Never,
        admissible: |_| true,
        builder: families::g_n2_1,
    },
    CatalogEntry {
        id: "g_6_2",
        name: "g_{6,2}",
        sides: R,
        codim: 2,
        dims: DimRule::Fixed(4),
        params: &[rp("b")],
        condition: "b != -1",
        cross_side: CrossSide::Never,
        admissible: |p| p.get("b") != int(-1),
        builder: families::g_6_2,
    },
    CatalogEntry {
        id: "g_6_3",
        name: "g_{6,3}",
        sides: R,
        codim: 2,
        dims: DimRule::Fixed(4),
        params: &[rp("c")],
        condition: "c != -2; c != -1/2",
        cross_side: CrossSide::Never,
        admissible: |p| p.get("c") != int(-2) && p.get("c") != rat(-1, 2),
        builder: families::g_6_3,
    },
    CatalogEntry {
        id: "g_6_4",
        name: "g_{6,4}",
        sides: R,
        codim: 2,
        dims: DimRule::Fixed(4),
        params: &[rp("b")],
        condition: "b != 0; b != 2",
        cross_side: CrossSide::Never,
        admissible: |p| !p.get("b").is_zero() && p.get("b") != int(2),
        builder: families::g_6_4,
    },
    CatalogEntry {
        id: "l_n2_1",
        name: "l_{n+2,1}",
        sides: L,
        codim: 2,
        dims: DimRule::Indexed { min_n: 5 },
        params: &[],
        condition: "n >= 5",
        cross_side: CrossSide::Never,
        admissible: |_| true,
        builder: families::l_n2_1,
    },
    CatalogEntry {
        id: "l_6_2",
        name: "l_{6,2}",
        sides: L,
        codim: 2,
        dims: DimRule::Fixed(4),
        params: &[rp("b")],
        condition: "b != -1",
        cross_side: CrossSide::Never,
        admissible: |p| p.get("b") != int(-1),
        builder: families::l_6_2,
    },
    CatalogEntry {
        id: "l_6_3",
        name: "l_{6,3}",
        sides: L,
        codim: 2,
        dims: DimRule::Fixed(4),
        params: &[rp("c")],
        condition: "c != -2; c != -1/2",
        cross_side: CrossSide::Never,
        admissible: |p| p.get("c") != int(-2) && p.get("c") != rat(-1, 2),
        builder: families::l_6_3,
    },
    CatalogEntry {
        id: "l_6_4",
        name: "l_{6,4}",
        sides: L,
        codim: 2,
        dims: DimRule::Fixed(4),
        params: &[rp("b")],
        condition: "b != 0; b != 2",
        cross_side: CrossSide::Never,
        admissible: |p| !p.get("b").is_zero() && p.get("b") != int(2),
        builder: families::l_6_4,
    },
    CatalogEntry {
        id: "l4",
        name: "L^4(n)",
        sides: RL,
        codim: 0,
        dims: DimRule::Indexed { min_n: 4 },
        params: &[],
        condition: "n >= 4",
        cross_side: CrossSide::Always,
        admissible: |_| true,
        builder: |n, _| families::Builder::l4(n, n).t,
    },
];

/// Order of the left codimension-one list (shared families sit at the
/// positions they hold in that list).
const LEFT_CODIM1: [&str; 8] =
    ["l_n1_1", "l_n1_2", "l_n1_3", "g_n1_4", "l_5_5", "l_5_6", "g_5_7", "g_5_8"];

/// Why codimension three has no entries.
pub const CODIM3_NOTE: &str = "no solvable extension of L^4(n) with three adjoined generators: \
     any three outer derivations admit a nontrivial nilpotent linear combination";

/// Every catalog entry, the nilradical itself last.
pub fn entries() -> &'static [CatalogEntry] {
    &ENTRIES
}

/// Look up an entry by ASCII id.
pub fn entry(id: &str) -> Result<&'static CatalogEntry, Error> {
    ENTRIES.iter().find(|e| e.id == id).ok_or_else(|| Error::Unknown(format!("family {id:?}")))
}

/// `L^4(n)`, the quasi-filiform nilradical.  Requires `n >= 4`.
pub fn build_l4(n: usize) -> Result<AlgebraTable, Error> {
    if n < 4 {
        return Err(Error::DimensionTooSmall(format!("L^4(n) needs n >= 4, got {n}")));
    }
    Ok(families::Builder::l4(n, n).t)
}

/// Build family `id` over `L^4(n)` with the given parameters.
pub fn build(id: &str, n: usize, params: &Params) -> Result<AlgebraTable, Error> {
    entry(id)?.build(n, params)
}

/// Result of [`enumerate`].
#[derive(Clone, Debug)]
pub struct Enumeration {
    /// Matching entries in list order.
    pub entries: Vec<&'static CatalogEntry>,
    /// Explanation when the cell is empty by theorem.
    pub note: Option<&'static str>,
}

/// Families of one side and codimension.  With `n` given, only families
/// existing over `L^4(n)` are returned.
pub fn enumerate(side: Side, codim: usize, n: Option<usize>) -> Result<Enumeration, Error> {
    if codim == 3 {
        return Ok(Enumeration { entries: Vec::new(), note: Some(CODIM3_NOTE) });
    }
    if !(1..=2).contains(&codim) {
        return Err(Error::Unsupported(format!("codimension {codim}")));
    }
    let mut list: Vec<&'static CatalogEntry> = if side == Side::Left && codim == 1 {
        LEFT_CODIM1.iter().map(|id| entry(id).expect("listed id exists")).collect()
    } else {
        ENTRIES.iter().filter(|e| e.codim == codim && e.listed_for(side)).collect()
    };
    if let Some(n) = n {
        list.retain(|e| e.dims.admits(n));
    }
    Ok(Enumeration { entries: list, note: None })
}

/// The default parameter sample values `{-2, -1/2, 1/3, 2, 5}`.
pub fn default_sample_values() -> Vec<Rational> {
    alloc::vec![int(-2), rat(-1, 2), rat(1, 3), int(2), int(5)]
}

/// Invariants used to tell tables apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantFingerprint {
    /// Dimensions of the derived series.
    pub ds: Vec<usize>,
    /// Dimensions of the lower central series.
    pub ls: Vec<usize>,
    /// Dimension of the center.
    pub center_dim: usize,
    /// Dimension of the derivation algebra.
    pub derivation_dim: usize,
    /// Dimension of the ideal generated by squares.
    pub squares_ideal_dim: usize,
    /// Satisfies the right identity.
    pub right: bool,
    /// Satisfies the left identity.
    pub left: bool,
}

/// Compute the fingerprint of a table.
pub fn fingerprint(t: &AlgebraTable) -> InvariantFingerprint {
    InvariantFingerprint {
        ds: series::derived_series(t).dims,
        ls: series::lower_central_series(t).dims,
        center_dim: identity::center(t).dim(),
        derivation_dim: derivations::derivation_space(t).dim(),
        squares_ideal_dim: identity::squares_ideal(t).dim(),
        right: identity::check_right_leibniz(t).holds,
        left: identity::check_left_leibniz(t).holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn l4_small_cases() {
        assert!(build_l4(3).is_err());
        assert_eq!(build_l4(4).unwrap().nonzero_pair_count(), 4);
        assert_eq!(build_l4(6).unwrap().nonzero_pair_count(), 8);
    }

    #[test]
    fn enumeration_cells() {
        assert_eq!(enumerate(Side::Right, 1, None).unwrap().entries.len(), 8);
        assert_eq!(enumerate(Side::Left, 1, None).unwrap().entries.len(), 8);
        assert_eq!(enumerate(Side::Right, 1, Some(5)).unwrap().entries.len(), 4);
        assert_eq!(enumerate(Side::Left, 2, Some(4)).unwrap().entries.len(), 3);
        assert_eq!(enumerate(Side::Right, 2, Some(6)).unwrap().entries.len(), 1);
        let c3 = enumerate(Side::Right, 3, Some(4)).unwrap();
        assert!(c3.entries.is_empty() && c3.note.is_some());
        assert!(enumerate(Side::Right, 4, None).is_err());
    }

    #[test]
    fn admissibility() {
        let g55 = Params::new().with("a", int(1)).with("b", int(-1));
        assert!(matches!(build("g_5_5", 4, &g55), Err(Error::Inadmissible(_))));
        assert!(build("g_5_5", 4, &Params::new().with("a", int(2)).with("b", int(1))).is_ok());
        let g14 = Params::new().with("d", int(0)).with("f", int(0)).with("eps", int(0));
        assert!(build("g_n1_4", 5, &g14).is_err());
        assert!(build("g_n1_4", 5, &g14.clone().with("eps", int(1))).is_ok());
        assert!(build("g_n1_3", 4, &Params::new().with("eps", int(1))).is_err());
        assert!(build("g_n1_3", 7, &Params::new().with("eps", int(1)).with("b2", int(3))).is_ok());
        assert!(build("g_n1_3", 7, &Params::new().with("eps", int(1)).with("b3", int(3))).is_err());
        assert!(build("g_n1_3", 7, &Params::new().with("eps", int(2))).is_err());
        assert!(build("g_n2_1", 4, &Params::new()).is_err());
        assert!(build("g_6_3", 4, &Params::new().with("c", rat(-1, 2))).is_err());
        assert!(build("l_6_4", 4, &Params::new().with("b", int(2))).is_err());
        assert!(matches!(build("nope", 4, &Params::new()), Err(Error::Unknown(_))));
        assert!(build("g_n1_1", 5, &Params::new()).is_err());
    }

    #[test]
    fn sample_points_are_admissible_and_distinct() {
        let vals = default_sample_values();
        for e in entries() {
            let n = match e.dims {
                DimRule::Indexed { min_n } => min_n + 2,
                DimRule::Fixed(m) => m,
            };
            let pts = e.sample_points(n, &vals, 3);
            let expected = if e.params.is_empty() { 1 } else { 3 };
            assert_eq!(pts.len(), expected, "{}", e.id);
            for p in &pts {
                e.check_params(n, p).unwrap();
            }
        }
        let g3 = entry("g_n1_3").unwrap();
        assert_eq!(g3.sample_points(4, &vals, 3).len(), 1);
        assert_eq!(g3.sample_points(5, &vals, 3).len(), 2);
    }
}
