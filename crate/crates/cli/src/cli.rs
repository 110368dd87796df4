//! Argument parsing and command dispatch.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use leibniz_core::catalog::{self, CatalogEntry, DimRule, ParamKind, Params};
use leibniz_core::derivations::{derivation_space, inner_derivations};
use leibniz_core::extensions::{
    apply_basis_change, check_conditions, detect_side, first_difference, verify_nilradical, ExtensionData, ItemStatus,
};
use leibniz_core::identity::{center, check_associative, check_leibniz, is_lie};
use leibniz_core::ratmat::parse_rational;
use leibniz_core::series::{is_nilpotent, is_solvable, series_strings};
use leibniz_core::{AlgebraTable, Error, Side};

use crate::format::{self, Document};
use crate::report::{Check, Report};
use crate::suites::{self, SuiteConfig};

/// Exit code for malformed input, unreadable files and unknown names.
pub const EXIT_INPUT: i32 = 2;

/// Exact computations with Leibniz algebras over the rationals.
#[derive(Parser, Debug)]
#[command(name = "leibniz", version, about)]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check identities of an algebra file.
    Check {
        /// Algebra or extension document.
        file: PathBuf,
        /// Which identity to check.
        #[arg(value_enum, default_value_t = CheckKind::Both)]
        kind: CheckKind,
    },
    /// List or build the classified families.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Series, center, derivations, fingerprint, nilradical evidence or
    /// condition systems of an algebra file.
    Analyze {
        /// Algebra or extension document.
        file: PathBuf,
        /// What to compute.
        #[arg(value_enum)]
        what: Analysis,
        /// Dimension of the candidate nilradical span(e1..en).
        #[arg(long)]
        n: Option<usize>,
        /// Operator side for the nilradical evidence (default: detected).
        #[arg(long, value_enum)]
        side: Option<SideArg>,
        /// Print the derivation basis.
        #[arg(long)]
        basis: bool,
    },
    /// Apply a change of basis (rows of the matrix are the new basis vectors).
    Transform {
        /// Algebra document.
        file: PathBuf,
        /// Matrix document.
        #[arg(long)]
        matrix: PathBuf,
        /// Compare with this algebra document.
        #[arg(long)]
        expect: Option<PathBuf>,
        /// Write the transformed algebra here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce the claims of the classification.
    VerifyPaper {
        /// l4, right-codim1, left-codim1, right-codim2, left-codim2,
        /// conditions, transforms, codim3, structural, oracles or all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// List families.
    List {
        /// Only families of this list.
        #[arg(long, value_enum)]
        side: Option<SideArg>,
        /// Only this number of adjoined generators (1, 2 or 3).
        #[arg(long)]
        codim: Option<usize>,
        /// Only families existing over L^4(n).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Write the table of one family.
    Build {
        /// Family id, e.g. g_5_5 or l_n2_1 (see `catalog list`).
        id: String,
        /// Nilradical dimension (defaults to the fixed one).
        #[arg(long)]
        n: Option<usize>,
        /// Parameters as name=value, e.g. a=2 b=-1/2 eps=1.
        #[arg(long = "param", num_args = 1..)]
        params: Vec<String>,
        /// Output file (stdout if absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write an extension document instead of a plain algebra.
        #[arg(long)]
        extension: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Right,
    Left,
    Both,
    Lie,
    Assoc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Analysis {
    Series,
    Center,
    Derive,
    Fingerprint,
    Nilradical,
    Conditions,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Right,
    Left,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Right => Side::Right,
            SideArg::Left => Side::Left,
        }
    }
}

/// What a command hands back to `main`.
#[derive(Debug)]
pub enum Outcome {
    /// A report to render.
    Report(Report),
    /// Raw document text for stdout (e.g. `catalog build` without `--out`).
    Document(String),
}

/// Malformed input or an unknown name; exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<Document, InputError> {
    format::parse_document(&read(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), InputError> {
    std::fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// Run a parsed command line.
pub fn execute(cli: &Cli, command_line: String) -> Result<Outcome, InputError> {
    let start = Instant::now();
    let mut report = Report::new(command_line);
    match &cli.command {
        Command::Check { file, kind } => check(&load(file)?.table(), *kind, &mut report),
        Command::Catalog(CatalogCommand::List { side, codim, n }) => {
            list(side.map(Side::from), *codim, *n, &mut report)?
        }
        Command::Catalog(CatalogCommand::Build { id, n, params, out, extension }) => {
            if let Some(doc) = build(id, *n, params, out.as_deref(), *extension, &mut report)? {
                return Ok(Outcome::Document(doc));
            }
        }
        Command::Analyze { file, what, n, side, basis } => {
            let doc = load(file)?;
            analyze(&doc, *what, n.or(doc.n()), side.map(Side::from), *basis, &mut report)?
        }
        Command::Transform { file, matrix, expect, out } => {
            transform(file, matrix, expect.as_deref(), out.as_deref(), &mut report)?
        }
        Command::VerifyPaper { suite } => {
            let cfg = SuiteConfig::from_env().map_err(InputError)?;
            if cfg != SuiteConfig::default() {
                let v: Vec<String> = cfg.values.iter().map(ToString::to_string).collect();
                report.info(format!("sample values {{{}}}, seed {}", v.join(", "), cfg.seed));
            }
            for c in suites::run(suite, &cfg).map_err(InputError)? {
                report.push(c);
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis();
    Ok(Outcome::Report(report))
}

fn identity_check(t: &AlgebraTable, side: Side) -> Check {
    let r = check_leibniz(t, side);
    let mut c = Check::new(format!("{} Leibniz identity", side.name()), r.holds);
    for f in r.failures.iter().take(20) {
        c = c.note(format!("({},{},{}): defect {}", f.triple.0, f.triple.1, f.triple.2, f.defect));
    }
    if r.failures.len() > 20 {
        c = c.note(format!("{} failing triples in total", r.failures.len()));
    }
    c
}

fn check(t: &AlgebraTable, kind: CheckKind, report: &mut Report) {
    report.info(format!("dim {}, {} nonzero brackets", t.dim(), t.nonzero_pair_count()));
    match kind {
        CheckKind::Right => report.push(identity_check(t, Side::Right)),
        CheckKind::Left => report.push(identity_check(t, Side::Left)),
        CheckKind::Both => {
            report.push(identity_check(t, Side::Right));
            report.push(identity_check(t, Side::Left));
        }
        CheckKind::Lie => report.push(Check::new("Lie algebra (alternating, Jacobi)", is_lie(t))),
        CheckKind::Assoc => {
            let r = check_associative(t);
            let mut c = Check::new("associative", r.holds);
            for f in r.failures.iter().take(20) {
                c = c.note(format!("({},{},{}): defect {}", f.triple.0, f.triple.1, f.triple.2, f.defect));
            }
            report.push(c);
        }
    }
}

fn dims_text(e: &CatalogEntry) -> String {
    match e.dims {
        DimRule::Fixed(n) => format!("n={n}"),
        DimRule::Indexed { min_n } => format!("n>={min_n}"),
    }
}

fn params_text(e: &CatalogEntry) -> String {
    let v: Vec<String> = e
        .params
        .iter()
        .map(|p| match p.kind {
            ParamKind::Rational => p.name.to_string(),
            ParamKind::Flag => format!("{} in {{0,1}}", p.name),
            ParamKind::Tail => "b1..b(n-5) (default 0)".to_string(),
        })
        .collect();
    if v.is_empty() {
        "-".into()
    } else {
        v.join(", ")
    }
}

fn list(side: Option<Side>, codim: Option<usize>, n: Option<usize>, report: &mut Report) -> Result<(), InputError> {
    let sides = match side {
        Some(s) => vec![s],
        None => vec![Side::Right, Side::Left],
    };
    let codims = match codim {
        Some(c) => vec![c],
        None => vec![1, 2],
    };
    let mut rows = 0;
    for &s in &sides {
        for &c in &codims {
            let en = catalog::enumerate(s, c, n)?;
            if side.is_none() || codim.is_none() {
                report.info(format!("# {} codimension {c}", s.name()));
            }
            if let Some(note) = en.note {
                report.info(format!("note: {note}"));
            }
            for e in en.entries {
                rows += 1;
                report.info(format!(
                    "{:<7} {:<10} {:<6} {:<6} params: {}; condition: {}",
                    e.id,
                    e.name,
                    e.side().name(),
                    dims_text(e),
                    params_text(e),
                    e.condition
                ));
            }
        }
    }
    report.info(format!("{rows} families"));
    Ok(())
}

/// Parse `name=value` pairs.
pub fn parse_params(items: &[String]) -> Result<Params, InputError> {
    let mut p = Params::new();
    for item in items {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| InputError(format!("parameter {item:?} is not name=value")))?;
        let k = if k == "ε" { "eps" } else { k.trim() };
        if p.contains(k) {
            return Err(InputError(format!("parameter {k} given twice")));
        }
        let value = parse_rational(v.trim()).map_err(|e| InputError(format!("parameter {k}: {e}")))?;
        p.insert(k, value);
    }
    Ok(p)
}

fn build(
    id: &str,
    n: Option<usize>,
    params: &[String],
    out: Option<&Path>,
    extension: bool,
    report: &mut Report,
) -> Result<Option<String>, InputError> {
    let e = catalog::entry(id)?;
    let n = match (n, e.dims) {
        (Some(n), _) => n,
        (None, DimRule::Fixed(n)) => n,
        (None, DimRule::Indexed { min_n }) => {
            return Err(InputError(format!("{id} needs --n (n >= {min_n})")));
        }
    };
    let p = parse_params(params)?;
    // a missing or unknown name is a usage error; a value outside the
    // family's condition is a failed check
    if let Some(s) = e.params.iter().find(|s| s.kind != ParamKind::Tail && !p.contains(s.name)) {
        return Err(InputError(format!("{id} needs --param {}=<value>", s.name)));
    }
    let t = match e.build(n, &p) {
        Ok(t) => t,
        Err(Error::Unknown(what)) => return Err(InputError(format!("unknown {what}"))),
        Err(err @ Error::Inadmissible(_)) => {
            report.push(
                Check::new(format!("{} parameters admissible", e.name), false)
                    .note(err.to_string())
                    .note(format!("condition: {}", e.condition)),
            );
            return Ok(None);
        }
        Err(err) => return Err(err.into()),
    };
    let text = if extension {
        if e.codim == 0 {
            return Err(InputError("L^4(n) has no adjoined generators".into()));
        }
        format::serialize_extension(&ExtensionData::from_table(&t, n)?)
    } else {
        format::serialize_table(&t)
    };
    match out {
        None => Ok(Some(text)),
        Some(path) => {
            write(path, &text)?;
            report.info(format!("wrote {} (dim {}) to {}", e.name, t.dim(), path.display()));
            let side = e.side();
            report.push(Check::new(format!("{} identity of the built table", side.name()), check_leibniz(&t, side).holds));
            Ok(None)
        }
    }
}

fn analyze(
    doc: &Document,
    what: Analysis,
    n: Option<usize>,
    side: Option<Side>,
    basis: bool,
    report: &mut Report,
) -> Result<(), InputError> {
    let t = doc.table();
    match what {
        Analysis::Series => {
            let (ds, ls) = series_strings(&t);
            report.info(format!("{ds} {ls}"));
            let (solv, si) = is_solvable(&t);
            let (nil, ni) = is_nilpotent(&t);
            let idx = |i: Option<usize>| i.map(|i| format!(", index {i}")).unwrap_or_default();
            report.info(format!("solvable: {solv}{}", idx(si)));
            report.info(format!("nilpotent: {nil}{}", idx(ni)));
            if t.dim() >= 4 {
                let qf = leibniz_core::series::is_quasi_filiform(&t)?;
                report.info(format!("quasi-filiform: {qf}"));
            }
        }
        Analysis::Center => {
            let c = center(&t);
            report.info(format!("center dim {}", c.dim()));
            report.info(format!("basis: {}", suites::basis_string(&c)));
        }
        Analysis::Derive => {
            let ds = derivation_space(&t);
            report.info(format!("derivation algebra dim {}", ds.dim()));
            for s in [Side::Right, Side::Left] {
                if check_leibniz(&t, s).holds {
                    let inner = inner_derivations(&t, s);
                    report.info(format!("inner derivations ({}) dim {}", s.name(), inner.dim()));
                }
            }
            if basis {
                for (k, d) in ds.basis.iter().enumerate() {
                    report.info(format!("D{}:", k + 1));
                    for r in 0..d.rows() {
                        let row: Vec<String> = d.row(r).iter().map(ToString::to_string).collect();
                        report.info(format!("  [{}]", row.join(", ")));
                    }
                }
            }
            report.push(Check::new("derivation space closed under commutators", ds.is_closed_under_commutator()));
        }
        Analysis::Fingerprint => {
            let f = catalog::fingerprint(&t);
            report.info(format!("DS={} LS={}", suites::dims_list(&f.ds), suites::dims_list(&f.ls)));
            report.info(format!("center dim {}", f.center_dim));
            report.info(format!("derivation dim {}", f.derivation_dim));
            report.info(format!("squares ideal dim {}", f.squares_ideal_dim));
            report.info(format!("right Leibniz {}, left Leibniz {}", f.right, f.left));
        }
        Analysis::Nilradical => {
            let n = n.ok_or_else(|| InputError("nilradical analysis needs --n".into()))?;
            let side = match side.or_else(|| detect_side(&t)) {
                Some(s) => s,
                None => {
                    report.push(Check::new("table satisfies a Leibniz identity", false));
                    return Ok(());
                }
            };
            let r = verify_nilradical(&t, n, side)?;
            report.info(format!("N = span(e1..e{n}), operators: {}", side.name()));
            for (k, item) in r.items.iter().enumerate() {
                let mut c = Check::new(format!("({}) {}", k + 1, item.label), item.status != ItemStatus::Fail);
                if item.status == ItemStatus::NotApplicable {
                    c = c.note("not applicable");
                }
                if !item.detail.is_empty() {
                    c = c.note(item.detail.clone());
                }
                report.push(c);
            }
        }
        Analysis::Conditions => {
            let ext = match (doc, n) {
                (Document::Extension(e), _) => e.clone(),
                (Document::Algebra(t), Some(n)) => ExtensionData::from_table(t, n)?,
                (Document::Algebra(_), None) => {
                    return Err(InputError("conditions analysis needs --n or an extension document".into()));
                }
            };
            for s in [Side::Right, Side::Left] {
                let cond = check_conditions(&ext, s);
                let full = check_leibniz(&t, s).holds;
                report.info(format!("{} conditions hold: {}; {} identity holds: {full}", s.name(), cond.holds, s.name()));
                let mut c = Check::new(format!("{} conditions agree with the full identity check", s.name()), cond.holds == full);
                for f in cond.failures.iter().take(10) {
                    c = c.note(format!("{} at {:?}: {}", f.pattern, f.indices, f.defect));
                }
                report.push(c);
            }
        }
    }
    Ok(())
}

fn transform(
    file: &Path,
    matrix: &Path,
    expect: Option<&Path>,
    out: Option<&Path>,
    report: &mut Report,
) -> Result<(), InputError> {
    let t = load(file)?.table();
    let p = format::parse_matrix(&read(matrix)?).map_err(|e| InputError(format!("{}: {e}", matrix.display())))?;
    if p.rows() != t.dim() {
        return Err(InputError(format!("matrix is {0}x{0}, algebra has dim {1}", p.rows(), t.dim())));
    }
    let new = match apply_basis_change(&t, &p) {
        Ok(new) => new,
        Err(Error::Singular) => {
            report.push(Check::new("basis change is invertible", false).note("matrix is singular"));
            return Ok(());
        }
        Err(e) => return Err(e.into()),
    };
    report.push(Check::new("basis change is invertible", true));
    if let Some(path) = out {
        write(path, &format::serialize_table(&new))?;
        report.info(format!("wrote {}", path.display()));
    }
    if let Some(path) = expect {
        let target = load(path)?.table();
        let c = if target.dim() != new.dim() {
            Check::new("transformed table equals the expected table", false).note("dimensions differ")
        } else {
            match first_difference(&new, &target) {
                None => Check::new("transformed table equals the expected table", true),
                Some((i, j, got, want)) => Check::new("transformed table equals the expected table", false)
                    .note(format!("first difference at [e{i}, e{j}]: got {got}, expected {want}")),
            }
        };
        report.push(c);
    } else if out.is_none() {
        report.info(format::serialize_table(&new).trim_end().to_string());
    }
    Ok(())
}

/// Entry point used by the binary: parse, run, print, return the exit code.
pub fn main_with_args(args: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { 0 };
        }
    };
    let command_line = args.join(" ");
    match execute(&cli, command_line) {
        Ok(Outcome::Document(text)) => {
            print!("{text}");
            0
        }
        Ok(Outcome::Report(r)) => {
            if cli.json {
                print!("{}", r.render_json());
            } else {
                print!("{}", r.render_text());
            }
            r.exit_code()
        }
        Err(InputError(msg)) => {
            if cli.json {
                println!("{}", serde_json::json!({ "error": msg, "exit_code": EXIT_INPUT }));
            }
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn params_parse() {
        let p = parse_params(&["a=2".into(), "b=-1/2".into(), "ε=1".into()]).unwrap();
        assert_eq!(p.to_string(), "a=2, b=-1/2, eps=1");
        assert!(parse_params(&["a".into()]).is_err());
        assert!(parse_params(&["a=2/4".into()]).is_err());
        assert!(parse_params(&["a=1".into(), "a=2".into()]).is_err());
    }
}
