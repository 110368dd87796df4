//! JSON documents for algebras, basis-change matrices and extensions.
//!
//! Rationals are canonical strings (`"3"`, `"-1/2"`); indices are 1-based.
//! Serialisation is hand-written so that output is canonical: brackets
//! sorted by `(left, right)`, output keys in numeric order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use leibniz_core::extensions::ExtensionData;
use leibniz_core::ratmat::{format_rational, parse_rational};
use leibniz_core::{AlgebraTable, Matrix, Rational, Vector};
use num_traits::Zero;
use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

/// Why a document was rejected.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    /// Not JSON, or JSON of the wrong shape.
    #[error("malformed document: {0}")]
    Malformed(String),
    /// `field` is not `"Q"`.
    #[error("unsupported field {0:?} (only \"Q\")")]
    Field(String),
    /// An index outside `1..=dim`.
    #[error("index {index} out of range 1..={dim} in {context}")]
    Index {
        /// Offending index.
        index: usize,
        /// Dimension in force.
        dim: usize,
        /// Where it occurred.
        context: String,
    },
    /// A rational that is not in canonical form.
    #[error("non-canonical rational {0:?}")]
    Rational(String),
    /// The same pair listed twice.
    #[error("duplicate bracket [e{0}, e{1}]")]
    Duplicate(usize, usize),
    /// An explicit zero coefficient.
    #[error("explicit zero coefficient for e{k} in [e{i}, e{j}]")]
    ExplicitZero {
        /// Left index.
        i: usize,
        /// Right index.
        j: usize,
        /// Output index.
        k: usize,
    },
    /// Shapes that do not fit together.
    #[error("inconsistent dimensions: {0}")]
    Shape(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketDoc {
    left: usize,
    right: usize,
    out: BTreeMap<String, String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    dim: usize,
    field: String,
    brackets: Vec<BracketDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDoc {
    dim: usize,
    matrix: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExtensionDoc {
    n: usize,
    generators: usize,
    nilradical: Value,
    right_ops: Vec<Vec<Vec<String>>>,
    left_ops: Vec<Vec<Vec<String>>>,
    top: Vec<BracketDoc>,
}

fn malformed(e: serde_json::Error) -> FormatError {
    FormatError::Malformed(e.to_string())
}

fn rational(s: &str) -> Result<Rational, FormatError> {
    parse_rational(s).map_err(|_| FormatError::Rational(s.to_string()))
}

fn index(s: &str, dim: usize, context: &str) -> Result<usize, FormatError> {
    // plain decimal, no sign or leading zeros
    let k = s.parse::<usize>().ok().filter(|k| k.to_string() == s);
    let k = k.ok_or_else(|| FormatError::Malformed(format!("output key {s:?} is not an index")))?;
    check_index(k, dim, context)
}

fn check_index(k: usize, dim: usize, context: &str) -> Result<usize, FormatError> {
    if k == 0 || k > dim {
        return Err(FormatError::Index { index: k, dim, context: context.to_string() });
    }
    Ok(k)
}

/// Read brackets into `t`, with output indices limited to `out_dim` and
/// input indices limited to `in_lo..=in_hi`.
fn read_brackets(
    docs: &[BracketDoc],
    t: &mut AlgebraTable,
    in_lo: usize,
    in_hi: usize,
    out_dim: usize,
) -> Result<(), FormatError> {
    let mut seen = BTreeSet::new();
    for b in docs {
        for (which, idx) in [("left", b.left), ("right", b.right)] {
            if idx < in_lo || idx > in_hi {
                return Err(FormatError::Index { index: idx, dim: in_hi, context: format!("\"{which}\"") });
            }
        }
        if !seen.insert((b.left, b.right)) {
            return Err(FormatError::Duplicate(b.left, b.right));
        }
        let ctx = format!("output of [e{}, e{}]", b.left, b.right);
        for (key, value) in &b.out {
            let k = index(key, out_dim, &ctx)?;
            let c = rational(value)?;
            if c.is_zero() {
                return Err(FormatError::ExplicitZero { i: b.left, j: b.right, k });
            }
            t.add_term(b.left, b.right, k, &c).map_err(|e| FormatError::Shape(e.to_string()))?;
        }
    }
    Ok(())
}

fn table_from_doc(doc: AlgebraDoc) -> Result<AlgebraTable, FormatError> {
    if doc.field != "Q" {
        return Err(FormatError::Field(doc.field));
    }
    let mut t = AlgebraTable::new(doc.dim);
    read_brackets(&doc.brackets, &mut t, 1, doc.dim, doc.dim)?;
    Ok(t)
}

/// Parse an algebra document.
pub fn parse_table(text: &str) -> Result<AlgebraTable, FormatError> {
    table_from_doc(serde_json::from_str(text).map_err(malformed)?)
}

fn write_out(s: &mut String, v: &Vector) {
    s.push('{');
    for (n, (k, c)) in v.support().enumerate() {
        if n > 0 {
            s.push_str(", ");
        }
        let _ = write!(s, "\"{k}\": \"{}\"", format_rational(c));
    }
    s.push('}');
}

fn write_brackets<'a>(s: &mut String, items: impl Iterator<Item = (usize, usize, &'a Vector)>, indent: &str) {
    let items: Vec<_> = items.collect();
    if items.is_empty() {
        s.push_str("[]");
        return;
    }
    s.push_str("[\n");
    for (n, (i, j, v)) in items.iter().enumerate() {
        let _ = write!(s, "{indent}  {{\"left\": {i}, \"right\": {j}, \"out\": ");
        write_out(s, v);
        s.push('}');
        if n + 1 < items.len() {
            s.push(',');
        }
        s.push('\n');
    }
    s.push_str(indent);
    s.push(']');
}

fn table_body(t: &AlgebraTable, indent: &str) -> String {
    let mut s = String::new();
    let _ = write!(s, "{{\n{indent}  \"dim\": {},\n{indent}  \"field\": \"Q\",\n{indent}  \"brackets\": ", t.dim());
    let inner = format!("{indent}  ");
    write_brackets(&mut s, t.nonzero_brackets().map(|((i, j), v)| (i, j, v)), &inner);
    let _ = write!(s, "\n{indent}}}");
    s
}

/// Canonical algebra document, newline-terminated.
pub fn serialize_table(t: &AlgebraTable) -> String {
    let mut s = table_body(t, "");
    s.push('\n');
    s
}

fn matrix_rows(rows: &[Vec<String>], r: usize, c: usize, what: &str) -> Result<Matrix, FormatError> {
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(FormatError::Shape(format!("{what} must be {r} x {c}")));
    }
    let entries = rows.iter().flatten().map(|s| rational(s)).collect::<Result<Vec<_>, _>>()?;
    Matrix::from_flat(r, c, entries).map_err(|e| FormatError::Shape(e.to_string()))
}

fn write_matrix_rows(s: &mut String, m: &Matrix, indent: &str) {
    s.push_str("[\n");
    for r in 0..m.rows() {
        let cells: Vec<String> = m.row(r).iter().map(|x| format!("\"{}\"", format_rational(x))).collect();
        let _ = write!(s, "{indent}  [{}]", cells.join(", "));
        if r + 1 < m.rows() {
            s.push(',');
        }
        s.push('\n');
    }
    s.push_str(indent);
    s.push(']');
}

/// Parse a square matrix document `{"dim": p, "matrix": [[...], ...]}`.
pub fn parse_matrix(text: &str) -> Result<Matrix, FormatError> {
    let doc: MatrixDoc = serde_json::from_str(text).map_err(malformed)?;
    matrix_rows(&doc.matrix, doc.dim, doc.dim, "\"matrix\"")
}

/// Canonical matrix document.
pub fn serialize_matrix(m: &Matrix) -> String {
    let mut s = format!("{{\n  \"dim\": {},\n  \"matrix\": ", m.rows());
    write_matrix_rows(&mut s, m, "  ");
    s.push_str("\n}\n");
    s
}

/// Parse an extension document.  `top` brackets use the absolute indices
/// `n+1..=n+q` of the generators.
pub fn parse_extension(text: &str) -> Result<ExtensionData, FormatError> {
    let doc: ExtensionDoc = serde_json::from_str(text).map_err(malformed)?;
    let nil = table_from_doc(serde_json::from_value(doc.nilradical).map_err(malformed)?)?;
    let (n, q) = (doc.n, doc.generators);
    if nil.dim() != n {
        return Err(FormatError::Shape(format!("nilradical has dim {}, expected n={n}", nil.dim())));
    }
    if q == 0 || doc.right_ops.len() != q || doc.left_ops.len() != q {
        return Err(FormatError::Shape(format!("expected {q} right and left operators, q >= 1")));
    }
    let ops = |list: &[Vec<Vec<String>>], what: &str| {
        list.iter().map(|m| matrix_rows(m, n, n, what)).collect::<Result<Vec<_>, _>>()
    };
    let right_ops = ops(&doc.right_ops, "\"right_ops\" entries")?;
    let left_ops = ops(&doc.left_ops, "\"left_ops\" entries")?;
    let mut scratch = AlgebraTable::new(n + q);
    read_brackets(&doc.top, &mut scratch, n + 1, n + q, n)?;
    let top = (n + 1..=n + q)
        .map(|a| (n + 1..=n + q).map(|b| scratch.bracket_basis(a, b).resized(n)).collect())
        .collect();
    ExtensionData::new(nil, right_ops, left_ops, top).map_err(|e| FormatError::Shape(e.to_string()))
}

/// Canonical extension document.
pub fn serialize_extension(ext: &ExtensionData) -> String {
    let (n, q) = (ext.n(), ext.codim());
    let mut s = format!("{{\n  \"n\": {n},\n  \"generators\": {q},\n  \"nilradical\": ");
    s.push_str(&table_body(&ext.nilradical, "  "));
    for (key, list) in [("right_ops", &ext.right_ops), ("left_ops", &ext.left_ops)] {
        let _ = write!(s, ",\n  \"{key}\": [\n");
        for (a, m) in list.iter().enumerate() {
            s.push_str("    ");
            write_matrix_rows(&mut s, m, "    ");
            if a + 1 < list.len() {
                s.push(',');
            }
            s.push('\n');
        }
        s.push_str("  ]");
    }
    s.push_str(",\n  \"top\": ");
    let mut items = Vec::new();
    for a in 0..q {
        for b in 0..q {
            if !ext.top[a][b].is_zero() {
                items.push((n + 1 + a, n + 1 + b, &ext.top[a][b]));
            }
        }
    }
    write_brackets(&mut s, items.into_iter(), "  ");
    s.push_str("\n}\n");
    s
}

/// A document that is either an algebra or an extension.
#[derive(Clone, Debug)]
pub enum Document {
    /// Plain algebra.
    Algebra(AlgebraTable),
    /// Extension data; the algebra is its assembly.
    Extension(ExtensionData),
}

impl Document {
    /// The algebra described.
    pub fn table(&self) -> AlgebraTable {
        match self {
            Document::Algebra(t) => t.clone(),
            Document::Extension(e) => leibniz_core::extensions::assemble(e),
        }
    }

    /// Nilradical dimension when the document records it.
    pub fn n(&self) -> Option<usize> {
        match self {
            Document::Algebra(_) => None,
            Document::Extension(e) => Some(e.n()),
        }
    }
}

/// Parse either document kind, deciding by the presence of `"nilradical"`.
pub fn parse_document(text: &str) -> Result<Document, FormatError> {
    let v: Value = serde_json::from_str(text).map_err(malformed)?;
    if v.get("nilradical").is_some() {
        parse_extension(text).map(Document::Extension)
    } else {
        parse_table(text).map(Document::Algebra)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use leibniz_core::catalog::{self, Params};
    use leibniz_core::int;

    #[test]
    fn l4_round_trip() {
        let t = catalog::build_l4(4).unwrap();
        let s = serialize_table(&t);
        let back = parse_table(&s).unwrap();
        assert_eq!(back, t);
        assert_eq!(back.nonzero_pair_count(), 4);
        assert_eq!(serialize_table(&back), s);
    }

    #[test]
    fn keys_sort_numerically() {
        let t = catalog::build_l4(11).unwrap();
        let s = serialize_table(&t);
        let pos = |needle: &str| s.find(needle).unwrap();
        assert!(pos("\"left\": 9, \"right\": 1") < pos("\"left\": 10, \"right\": 1"));
        assert_eq!(parse_table(&s).unwrap(), t);
    }

    #[test]
    fn abelian_from_empty_list() {
        let t = parse_table(r#"{"dim": 3, "field": "Q", "brackets": []}"#).unwrap();
        assert_eq!(t, AlgebraTable::new(3));
    }

    #[test]
    fn rejections() {
        let doc = |b: &str| format!(r#"{{"dim": 3, "field": "Q", "brackets": [{b}]}}"#);
        let e = |b: &str| parse_table(&doc(b)).unwrap_err();
        assert!(matches!(e(r#"{"left": 1, "right": 1, "out": {"4": "1"}}"#), FormatError::Index { index: 4, .. }));
        assert!(matches!(e(r#"{"left": 0, "right": 1, "out": {}}"#), FormatError::Index { index: 0, .. }));
        assert!(matches!(e(r#"{"left": 1, "right": 1, "out": {"2": "2/4"}}"#), FormatError::Rational(_)));
        assert!(matches!(e(r#"{"left": 1, "right": 1, "out": {"2": "+1"}}"#), FormatError::Rational(_)));
        assert!(matches!(e(r#"{"left": 1, "right": 1, "out": {"2": "0"}}"#), FormatError::ExplicitZero { .. }));
        assert!(matches!(e(r#"{"left": 1, "right": 1, "out": {"02": "1"}}"#), FormatError::Malformed(_)));
        assert_eq!(
            e(r#"{"left": 1, "right": 2, "out": {"3": "1"}}, {"left": 1, "right": 2, "out": {"1": "1"}}"#),
            FormatError::Duplicate(1, 2)
        );
        assert!(matches!(e(r#"{"left": 1, "right": 1, "out": {"2": 1}}"#), FormatError::Malformed(_)));
        assert!(matches!(parse_table("{"), Err(FormatError::Malformed(_))));
        assert!(matches!(
            parse_table(r#"{"dim": 1, "field": "R", "brackets": []}"#),
            Err(FormatError::Field(_))
        ));
        assert!(matches!(
            parse_table(r#"{"dim": 1, "field": "Q", "brackets": [], "extra": 1}"#),
            Err(FormatError::Malformed(_))
        ));
    }

    #[test]
    fn matrix_round_trip() {
        let m = Matrix::from_fn(3, 3, |r, c| leibniz_core::rat(r as i64 - c as i64, 1 + c as i64));
        let s = serialize_matrix(&m);
        assert_eq!(parse_matrix(&s).unwrap(), m);
        assert!(parse_matrix(r#"{"dim": 2, "matrix": [["1", "0"]]}"#).is_err());
    }

    #[test]
    fn extension_round_trip() {
        for (id, n, p) in [
            ("g_6_2", 4, Params::new().with("b", int(1))),
            ("l_5_5", 4, Params::new().with("a", int(2)).with("b", int(1))),
        ] {
            let t = catalog::build(id, n, &p).unwrap();
            let ext = ExtensionData::from_table(&t, n).unwrap();
            let s = serialize_extension(&ext);
            let back = parse_extension(&s).unwrap();
            assert_eq!(back, ext);
            assert_eq!(serialize_extension(&back), s);
            match parse_document(&s).unwrap() {
                Document::Extension(e) => assert_eq!(leibniz_core::extensions::assemble(&e), t),
                Document::Algebra(_) => panic!("expected an extension"),
            }
        }
    }
}
