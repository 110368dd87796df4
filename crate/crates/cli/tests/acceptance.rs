//! Acceptance criteria 1-9.  Prints one line per criterion with its verdict,
//! wall-clock time and limit; exits non-zero if any criterion fails.
//!
//! Expected values are written out here (or recomputed by independent code)
//! rather than taken from the `verify-paper` suites.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use leibniz::suites::perturb;
use leibniz_core::catalog::{self, CatalogEntry, DimRule, Params};
use leibniz_core::codim3;
use leibniz_core::derivations::{derivation_space, pair_nil_independent, NilDependence};
use leibniz_core::extensions::{assemble, check_conditions, verify_nilradical, verify_transformation, ExtensionData};
use leibniz_core::identity::{
    center, check_left_leibniz, check_leibniz, check_mult_homomorphisms, check_right_leibniz, is_associative,
    is_derivation, quotient_is_lie,
};
use leibniz_core::replay;
use leibniz_core::series::{derived_series, is_nilpotent, is_quasi_filiform, is_solvable, lower_central_series};
use leibniz_core::{int, rat, AlgebraTable, Matrix, Rational, Side, Subspace, Vector};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fixed_or(e: &CatalogEntry, dims: &[usize]) -> Vec<usize> {
    match e.dims {
        DimRule::Fixed(n) => vec![n],
        DimRule::Indexed { .. } => dims.iter().copied().filter(|&n| e.dims.admits(n)).collect(),
    }
}

fn restricted(t: &AlgebraTable, a: usize, n: usize, side: Side) -> Matrix {
    let m = match side {
        Side::Right => t.right_basis_operator(a),
        Side::Left => t.left_basis_operator(a),
    };
    Matrix::from_fn(n, n, |r, c| m[(r, c)].clone())
}

/// Distinct admissible sample points: the default rotation plus the
/// points where the cross-side predicates are true.
fn samples(e: &CatalogEntry, n: usize) -> Vec<Params> {
    let mut pts = e.sample_points(n, &catalog::default_sample_values(), 3);
    let extra: Vec<Params> = match e.id {
        "g_n1_1" | "l_n1_1" => vec![Params::new().with("a", int(0))],
        "g_5_5" | "l_5_5" => vec![
            Params::new().with("a", int(2)).with("b", int(-1)),
            Params::new().with("a", int(5)).with("b", int(-1)),
        ],
        _ => vec![],
    };
    for p in extra {
        if e.check_params(n, &p).is_ok() && !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts
}

/// How many distinct admissible points a family has (capped at 3), found
/// by brute force over a wider grid than the default set.
fn available_points(e: &CatalogEntry, n: usize) -> usize {
    let grid: Vec<Rational> = (-4..=4).map(int).chain([rat(1, 2), rat(-1, 3)]).collect();
    e.sample_points(n, &grid, 3).len()
}

// --- criterion 1 -----------------------------------------------------------

fn criterion_1() -> Outcome {
    let expected_ls = |n: usize| -> Vec<usize> {
        // [n, n-2, n-4, n-5, ..., 0]
        let mut v = vec![n, n - 2];
        let mut k = n as i64 - 4;
        while k >= 0 {
            v.push(k as usize);
            k -= 1;
        }
        v
    };
    for n in 4..=8 {
        let t = catalog::build_l4(n).map_err(|e| e.to_string())?;
        ensure(check_right_leibniz(&t).holds && check_left_leibniz(&t).holds, || format!("n={n}: identity fails"))?;
        let ds = derived_series(&t).dims;
        ensure(ds == vec![n, n - 2, 0], || format!("n={n}: DS={ds:?}"))?;
        let ls = lower_central_series(&t).dims;
        ensure(ls == expected_ls(n), || format!("n={n}: LS={ls:?}"))?;
        let c = center(&t);
        let span = Subspace::span(n, &[Vector::basis(n, 2), Vector::basis(n, n)]).unwrap();
        ensure(c == span, || format!("n={n}: center dim {}", c.dim()))?;
        ensure(is_quasi_filiform(&t) == Ok(true), || format!("n={n}: not quasi-filiform"))?;
        ensure(is_associative(&t) == (n == 4), || format!("n={n}: associativity"))?;
    }
    Ok("n=4..8: both identities, DS, LS, center <e2,en>, quasi-filiform, associative only at n=4".into())
}

// --- criteria 2 and 3 -------------------------------------------------------

fn codim1(side: Side) -> Outcome {
    let list = catalog::enumerate(side, 1, None).map_err(|e| e.to_string())?;
    ensure(list.entries.len() == 8, || format!("{} families listed", list.entries.len()))?;
    let other = side.opposite();
    let mut tables = 0;
    let mut cross_true = 0;
    for e in &list.entries {
        for n in fixed_or(e, &[4, 5, 7]) {
            let pts = samples(e, n);
            let need = available_points(e, n).min(3);
            ensure(pts.len() >= need, || format!("{} n={n}: {} samples, {need} available", e.id, pts.len()))?;
            for p in &pts {
                let t = e.build(n, p).map_err(|err| format!("{} {p}: {err}", e.id))?;
                let tag = || format!("{} n={n} ({p})", e.id);
                ensure(check_leibniz(&t, side).holds, || format!("{}: {} identity fails", tag(), side.name()))?;
                ensure(is_solvable(&t).0 && !is_nilpotent(&t).0, || format!("{}: not solvable non-nilpotent", tag()))?;
                let l4 = catalog::build_l4(n).unwrap();
                ensure(t.restrict(n).ok() == Some(l4.clone()), || format!("{}: restriction is not L^4(n)", tag()))?;
                let op = restricted(&t, n + 1, n, side);
                ensure(is_derivation(&l4, &op) == Ok(true), || format!("{}: operator not a derivation", tag()))?;
                ensure(op.is_nilpotent() == Ok(false), || format!("{}: operator nilpotent", tag()))?;
                // cross-side facts, written out independently of the catalog
                let expected = match e.id {
                    "g_n1_1" | "l_n1_1" => p.get("a").is_zero(),
                    "g_5_5" | "l_5_5" => p.get("b") == int(-1),
                    "g_n1_4" | "g_5_7" | "g_5_8" => true,
                    _ => false,
                };
                let holds = check_leibniz(&t, other).holds;
                ensure(holds == expected, || format!("{}: {} identity {holds}, expected {expected}", tag(), other.name()))?;
                cross_true += usize::from(holds);
                tables += 1;
            }
        }
    }
    Ok(format!("8 families, {tables} tables, {cross_true} also {}", other.name()))
}

// --- criterion 4 ------------------------------------------------------------

fn codim2() -> Outcome {
    let mut tables = 0;
    for side in [Side::Right, Side::Left] {
        let list = catalog::enumerate(side, 2, None).map_err(|e| e.to_string())?;
        ensure(list.entries.len() == 4, || format!("{} {} codim-2 families", list.entries.len(), side.name()))?;
        for e in &list.entries {
            for n in fixed_or(e, &[5, 7]) {
                for p in e.sample_points(n, &catalog::default_sample_values(), 3) {
                    let t = e.build(n, &p).map_err(|err| err.to_string())?;
                    let tag = || format!("{} n={n} ({p})", e.id);
                    ensure(check_leibniz(&t, side).holds, || format!("{}: own identity fails", tag()))?;
                    ensure(!check_leibniz(&t, side.opposite()).holds, || format!("{}: other identity holds", tag()))?;
                    let l4 = catalog::build_l4(n).unwrap();
                    let d1 = restricted(&t, n + 1, n, side);
                    let d2 = restricted(&t, n + 2, n, side);
                    ensure(is_derivation(&l4, &d1) == Ok(true) && is_derivation(&l4, &d2) == Ok(true), || {
                        format!("{}: operators are not derivations", tag())
                    })?;
                    let v = pair_nil_independent(&d1, &d2).map_err(|e| e.to_string())?;
                    ensure(v == NilDependence::NoNontrivialNilpotentCombination, || format!("{}: {v:?}", tag()))?;
                    let r = verify_nilradical(&t, n, side).map_err(|e| e.to_string())?;
                    ensure(r.passed(), || format!("{}: nilradical evidence {:?}", tag(), r.items))?;
                    tables += 1;
                }
            }
        }
        // boundary points removed from the side conditions: a nontrivial
        // combination of the two outer operators is nilpotent there
        let pre = if side == Side::Right { "g" } else { "l" };
        for (id, name, v) in [("_6_3", "c", rat(-1, 2)), ("_6_4", "b", int(2))] {
            let e = catalog::entry(&format!("{pre}{id}")).map_err(|e| e.to_string())?;
            let p = Params::new().with(name, v.clone());
            ensure(e.build(4, &p).is_err(), || format!("{} accepts {name}={v}", e.id))?;
            let t = e.build_unchecked(4, &p);
            let d1 = restricted(&t, 5, 4, side);
            let d2 = restricted(&t, 6, 4, side);
            match pair_nil_independent(&d1, &d2) {
                Ok(NilDependence::SomeCombinationNilpotent { witness: Some(w), .. }) => {
                    let comb = &d1.scale(&w[0]) + &d2.scale(&w[1]);
                    ensure(comb.pow(4).unwrap().is_zero(), || format!("{}: witness not nilpotent", e.id))?;
                }
                other => return Err(format!("{} at {name}={v}: {other:?}", e.id)),
            }
        }
    }
    Ok(format!("8 families, {tables} tables; excluded points c=-1/2, b=2 are nil-dependent"))
}

// --- criterion 5 ------------------------------------------------------------

fn verdicts(ext: &ExtensionData) -> Result<(bool, bool), String> {
    let t = assemble(ext);
    let r = (check_conditions(ext, Side::Right).holds, check_right_leibniz(&t).holds);
    let l = (check_conditions(ext, Side::Left).holds, check_left_leibniz(&t).holds);
    ensure(r.0 == r.1 && l.0 == l.1, || format!("conditions {:?} vs full {:?}", (r.0, l.0), (r.1, l.1)))?;
    Ok((r.1, l.1))
}

fn condition_equivalence() -> Outcome {
    let mut exts = Vec::new();
    for e in catalog::entries().iter().filter(|e| e.codim > 0) {
        for n in fixed_or(e, &[4, 5]) {
            for p in e.sample_points(n, &catalog::default_sample_values(), 3) {
                let t = e.build(n, &p).map_err(|err| err.to_string())?;
                let ext = ExtensionData::from_table(&t, n).map_err(|err| err.to_string())?;
                ensure(assemble(&ext) == t, || format!("{}: split/assemble mismatch", e.id))?;
                verdicts(&ext).map_err(|m| format!("{} n={n} ({p}): {m}", e.id))?;
                exts.push(ext);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut broken = 0;
    for k in 0..200 {
        let ext = &exts[rng.gen_range(0..exts.len())];
        let delta = loop {
            let d = rat(rng.gen_range(-3..=3), rng.gen_range(1..=2));
            if !d.is_zero() {
                break d;
            }
        };
        let (bent, what) = perturb(ext, &mut rng, &delta);
        let (r, l) = verdicts(&bent).map_err(|m| format!("perturbation {k} ({what}): {m}"))?;
        broken += usize::from(!(r || l));
    }
    Ok(format!("{} catalog extensions + 200 perturbations agree ({broken} perturbed tables satisfy neither identity)", exts.len()))
}

// --- criterion 6 ------------------------------------------------------------

fn transformation_replay() -> Outcome {
    let fixtures = replay::fixtures();
    ensure(fixtures.len() >= 4, || format!("only {} fixtures", fixtures.len()))?;
    let mut names = Vec::new();
    for f in &fixtures {
        let r = verify_transformation(&f.source, &f.matrix, &f.target).map_err(|e| e.to_string())?;
        ensure(r.matches, || format!("{} does not replay: {:?}", f.name, r.first_difference))?;
        names.push(f.name);
    }
    ensure(fixtures.iter().any(|f| f.side == Side::Left), || "no left-side replay".into())?;
    // the scale step written out by hand: e5' = e5/2 on the weighted family at a = 2
    let scale = fixtures.iter().find(|f| f.name == "right-scale-weight").ok_or("missing scale fixture")?;
    let p = Matrix::diagonal(&[int(1), int(1), int(1), int(1), rat(1, 2)]);
    ensure(scale.matrix == p, || "scale step is not diag(1,1,1,1,1/2)".into())?;
    // the codimension-two step acts at n = 5
    let pair = fixtures.iter().find(|f| f.name == "right-pair-absorb-e2").ok_or("missing codim-2 fixture")?;
    ensure(pair.source.dim() == 7, || "codimension-two replay is not over L^4(5)".into())?;
    Ok(format!("{} replays: {}", names.len(), names.join(", ")))
}

// --- criterion 7 ------------------------------------------------------------

fn det3(m: &[[Rational; 3]; 3]) -> Rational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

fn codim3_evidence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut r = |num: i64| rat(rng.gen_range(-num..=num), rng.gen_range(1..=3));
    let l4 = catalog::build_l4(4).unwrap();
    for s in 0..10 {
        let a: [Rational; 3] = std::array::from_fn(|_| loop {
            let v = r(5);
            if !v.is_zero() {
                break v;
            }
        });
        let c: [Rational; 3] = std::array::from_fn(|_| r(5));
        let t = r(4);
        let a23: [Rational; 3] = std::array::from_fn(|_| r(3));
        let b23: [Rational; 3] = std::array::from_fn(|_| r(3));
        let triple = codim3::constrained_triple(a, c, &t, a23, b23);
        // constraint (a_i - b_i) c_j = (a_j - b_j) c_i, checked directly
        for i in 0..3 {
            for j in 0..3 {
                let (p, q) = (&triple[i], &triple[j]);
                ensure((&p.a - &p.b) * &q.c == (&q.a - &q.b) * &p.c, || format!("sample {s}: constraint"))?;
            }
        }
        let m: [[Rational; 3]; 3] = [
            std::array::from_fn(|k| triple[k].a.clone()),
            std::array::from_fn(|k| triple[k].b.clone()),
            std::array::from_fn(|k| triple[k].c.clone()),
        ];
        ensure(det3(&m).is_zero(), || format!("sample {s}: determinant {}", det3(&m)))?;
        let ops: Vec<Matrix> = triple.iter().map(codim3::outer_operator).collect();
        for op in &ops {
            ensure(is_derivation(&l4, op) == Ok(true), || format!("sample {s}: not a derivation"))?;
        }
        let e = codim3::evidence(&triple);
        ensure(e.nil_dependent(), || format!("sample {s}: no nilpotent combination found"))?;
        // recheck the witness with m^4 = 0
        let mut comb = Matrix::zeros(4, 4);
        for (l, op) in e.witness.iter().zip(&ops) {
            comb = &comb + &op.scale(l);
        }
        ensure(comb.pow(4).unwrap().is_zero(), || format!("sample {s}: witness combination not nilpotent"))?;
        ensure(!e.witness.iter().all(Zero::is_zero), || format!("sample {s}: zero witness"))?;
    }
    let en = catalog::enumerate(Side::Right, 3, None).map_err(|e| e.to_string())?;
    ensure(en.entries.is_empty() && en.note.is_some(), || "codimension-three cell not empty".into())?;
    Ok("10 triples: det=0, witness combination nilpotent (m^4=0)".into())
}

// --- criterion 8 ------------------------------------------------------------

fn structural() -> Outcome {
    let mut tables: Vec<(String, AlgebraTable)> =
        (4..=8).map(|n| (format!("L4({n})"), catalog::build_l4(n).unwrap())).collect();
    for e in catalog::entries().iter().filter(|e| e.codim > 0) {
        for n in fixed_or(e, &[4, 5]) {
            for p in e.sample_points(n, &catalog::default_sample_values(), 3) {
                tables.push((format!("{} n={n} ({p})", e.id), e.build(n, &p).unwrap()));
            }
        }
    }
    for (name, t) in &tables {
        let ds = derivation_space(t);
        ensure(ds.is_closed_under_commutator(), || format!("{name}: Der not closed"))?;
        for b in &ds.basis {
            ensure(is_derivation(t, b) == Ok(true), || format!("{name}: basis member not a derivation"))?;
        }
        let mut any = false;
        for side in [Side::Right, Side::Left] {
            if check_leibniz(t, side).holds {
                any = true;
                ensure(check_mult_homomorphisms(t, side).holds, || format!("{name}: {} relation", side.name()))?;
                // [R_x, R_y] = R_[y,x] recomputed here for the right side
                if side == Side::Right {
                    for i in 1..=t.dim() {
                        for j in 1..=t.dim() {
                            let (ri, rj) = (t.right_basis_operator(i), t.right_basis_operator(j));
                            let lhs = &(&ri * &rj) - &(&rj * &ri);
                            let rhs = t.right_mult_operator(&t.bracket_basis(j, i)).unwrap();
                            ensure(lhs == rhs, || format!("{name}: [R{i},R{j}] != R[e{j},e{i}]"))?;
                        }
                    }
                }
            }
        }
        ensure(any, || format!("{name}: neither identity"))?;
        ensure(quotient_is_lie(t), || format!("{name}: quotient not Lie"))?;
        let (d, l) = (derived_series(t), lower_central_series(t));
        for k in 0..d.terms.len().max(l.terms.len()) {
            let dk = &d.terms[k.min(d.terms.len() - 1)];
            let lk = &l.terms[k.min(l.terms.len() - 1)];
            ensure(lk.contains_subspace(dk), || format!("{name}: L^({k}) not in L^{k}"))?;
        }
        // the center is annihilated by every basis element, checked by brackets
        for v in center(t).basis_vectors() {
            for j in 1..=t.dim() {
                let e = Vector::basis(t.dim(), j);
                ensure(t.bracket(&v, &e).unwrap().is_zero() && t.bracket(&e, &v).unwrap().is_zero(), || {
                    format!("{name}: center vector {v} not central")
                })?;
            }
        }
    }
    Ok(format!("{} tables", tables.len()))
}

// --- criterion 9 ------------------------------------------------------------

fn cofactor(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let mut acc = Rational::zero();
    for c in 0..n {
        let minor: Vec<Vec<Rational>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, x)| x.clone()).collect()).collect();
        let term = &m[0][c] * cofactor(&minor);
        acc = if c % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

fn oracles() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for s in 0..50 {
        let n = rng.gen_range(1..=5);
        let rows: Vec<Vec<Rational>> =
            (0..n).map(|_| (0..n).map(|_| rat(rng.gen_range(-4..=4), rng.gen_range(1..=3))).collect()).collect();
        let m = Matrix::from_rows(rows.clone()).unwrap();
        let det = cofactor(&rows);
        let p = m.charpoly().unwrap();
        let sign = if n % 2 == 0 { int(1) } else { int(-1) };
        ensure(p.coeff(0) == sign * &det, || format!("charpoly sample {s}"))?;
        ensure(m.determinant().unwrap() == det, || format!("determinant sample {s}"))?;
    }
    for s in 0..100 {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let m = Matrix::from_fn(r, c, |_, _| if rng.gen_bool(0.35) { int(rng.gen_range(-3..=3)) } else { int(0) });
        let ns = m.nullspace();
        ensure(m.rank() + ns.cols() == c, || format!("rank-nullity sample {s}"))?;
        ensure((&m * &ns).is_zero() && ns.rank() == ns.cols(), || format!("kernel sample {s}"))?;
    }
    let mut nil = 0;
    for s in 0..100 {
        let n = rng.gen_range(1..=6);
        let upper = rng.gen_bool(0.5);
        let m = Matrix::from_fn(n, n, |r, c| {
            if upper && r >= c {
                int(0)
            } else if rng.gen_bool(0.4) {
                int(rng.gen_range(-2..=2))
            } else {
                int(0)
            }
        });
        let u = Matrix::from_fn(n, n, |r, c| if r == c { int(1) } else if r > c { int(rng.gen_range(-1..=1)) } else { int(0) });
        let m = &(&u * &m) * &u.inverse().unwrap();
        let brute = m.pow(n as u32).unwrap().is_zero();
        nil += usize::from(brute);
        ensure(m.is_nilpotent().unwrap() == brute, || format!("nilpotency sample {s}"))?;
    }
    Ok(format!("50 charpoly/cofactor, 100 rank-nullity, 100 nilpotency ({nil} nilpotent)"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "L^4(n) suite, n = 4..8", 1, criterion_1),
        (2, "right codimension-one families", 10, || codim1(Side::Right)),
        (3, "left codimension-one families", 10, || codim1(Side::Left)),
        (4, "codimension-two families", 10, codim2),
        (5, "condition systems vs full identity check", 30, condition_equivalence),
        (6, "transformation replay", 5, transformation_replay),
        (7, "codimension-three impossibility evidence", 5, codim3_evidence),
        (8, "structural properties of every catalog table", 30, structural),
        (9, "linear-algebra oracles", 5, oracles),
    ];
    let mut failed = 0;
    for (k, name, limit, f) in criteria {
        let start = Instant::now();
        let result = f();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(limit);
        let ok = result.is_ok() && in_time;
        failed += usize::from(!ok);
        let detail = match &result {
            Ok(d) => d.clone(),
            Err(e) => e.clone(),
        };
        let timing = if in_time { String::new() } else { " TIME LIMIT EXCEEDED".to_string() };
        println!(
            "criterion {k} {}  {name}: {detail} [exact; {:.3} s / limit {limit} s{timing}]",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64()
        );
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
