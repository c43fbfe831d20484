//! Acceptance criteria 1-6. Prints one PASS/FAIL line per criterion and
//! exits non-zero when any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ringinv::job::{self, exit};
use ringinv::{codec, Command, JobSpec};
use ringinv_core::field::{Field, PrimeField, Rationals};
use ringinv_core::geninv::{
    core_inverse, count_inverse_set, dual_core_inverse, enumerate_inverse_set, group_inverse, holds, moore_penrose,
    moore_penrose_report, EquationSet, Outcome,
};
use ringinv_core::ideal::{IdealLattice, Side};
use ringinv_core::linalg::{self, Mat};
use ringinv_core::oracle::{self, Budget, Status};
use ringinv_core::prescribed::{one_inverse_family, prescribed_inverse, prescribed_set, IdealConstraints, Mode};
use ringinv_core::ring::{Involution, MatrixRing, Ring};
use serde_json::{json, Value};

const LIMIT_1: Duration = Duration::from_secs(1);
const LIMIT_2: Duration = Duration::from_secs(10);
const LIMIT_3: Duration = Duration::from_secs(300);
const LIMIT_4: Duration = Duration::from_secs(1);
/// Exact arithmetic throughout: every comparison is equality, tolerance zero.
const TOLERANCE: u32 = 0;

struct Outcome_ {
    ok: bool,
    detail: String,
    report: Value,
}

fn fail(detail: impl Into<String>) -> Outcome_ {
    Outcome_ { ok: false, detail: detail.into(), report: Value::Null }
}

type Q = <Rationals as Field>::Scalar;
type Residual<'a> = Box<dyn Fn(&Mat<Q>) -> Vec<Q> + 'a>;

/// The affine solution set of `residual(X) = 0` for all residuals, as the
/// reduced echelon form of the augmented system (zero rows dropped). `None`
/// when inconsistent. Panics if a residual is not affine in the entries of X.
fn affine_solution(f: &Rationals, conds: &[Residual]) -> Option<Mat<Q>> {
    let n = 4;
    let point = |v: &[Q]| Mat::from_entries(2, 2, v.to_vec());
    let zero = vec![f.zero(); n];
    let mut rows = Vec::new();
    for c in conds {
        let c0 = c(&point(&zero));
        let cols: Vec<Vec<Q>> = (0..n)
            .map(|k| {
                let mut e = zero.clone();
                e[k] = f.one();
                c(&point(&e)).iter().zip(&c0).map(|(v, z)| f.sub(v, z)).collect()
            })
            .collect();
        let probe: Vec<Q> = [3, -2, 5, 7].iter().map(|&v| f.from_i64(v)).collect();
        let predicted: Vec<Q> = (0..c0.len())
            .map(|i| (0..n).fold(c0[i].clone(), |acc, k| f.add(&acc, &f.mul(&probe[k], &cols[k][i]))))
            .collect();
        assert_eq!(c(&point(&probe)), predicted, "condition is not affine");
        for i in 0..c0.len() {
            let mut row: Vec<Q> = (0..n).map(|k| cols[k][i].clone()).collect();
            row.push(f.neg(&c0[i]));
            rows.push(row);
        }
    }
    let (rref, pivots) = linalg::rref(f, &Mat::from_rows(rows).expect("rectangular system"));
    if pivots.contains(&n) {
        return None;
    }
    let keep = pivots.len();
    Some(Mat::from_fn(keep, n + 1, |i, j| rref.get(i, j).clone()))
}

/// A particular solution and a nullspace basis of a reduced system.
fn affine_points(f: &Rationals, sys: &Mat<Q>) -> Vec<Mat<Q>> {
    let n = 4;
    let coeff = Mat::from_fn(sys.rows(), n, |i, j| sys.get(i, j).clone());
    let (_, pivots) = linalg::rref(f, &coeff);
    let mut base = vec![f.zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        base[p] = sys.get(row, n).clone();
    }
    let mut out = vec![Mat::from_entries(2, 2, base.clone())];
    for v in linalg::nullspace(f, &coeff) {
        let shifted: Vec<Q> = base.iter().zip(&v).map(|(b, d)| f.add(b, d)).collect();
        out.push(Mat::from_entries(2, 2, shifted));
    }
    out
}

fn criterion_1() -> Outcome_ {
    let f = Rationals;
    let r = MatrixRing::new(Rationals, 2, Involution::Transpose).expect("M2(Q)");
    let m = |rows: &[&[&str]]| r.from_strs(rows).expect("valid matrix");
    let a = m(&[&["2", "-2"], &["0", "0"]]);
    let sharp = m(&[&["1/2", "-1/2"], &["0", "0"]]);
    let dagger = m(&[&["1/4", "0"], &["-1/4", "0"]]);
    let core = m(&[&["1/2", "0"], &["0", "0"]]);
    let dual = m(&[&["1/4", "-1/4"], &["-1/4", "1/4"]]);

    let got_sharp = group_inverse(&r, &a).ok().and_then(|rep| rep.result().cloned());
    let got_dagger = moore_penrose(&r, &a).ok().flatten();
    let got_core = core_inverse(&r, &a).ok().flatten();
    let got_dual = dual_core_inverse(&r, &a).ok().flatten();
    let values = [
        ("group", got_sharp.as_ref() == Some(&sharp)),
        ("moore-penrose", got_dagger.as_ref() == Some(&dagger)),
        ("core", got_core.as_ref() == Some(&core)),
        ("dual-core", got_dual.as_ref() == Some(&dual)),
    ];
    if let Some((name, _)) = values.iter().find(|(_, ok)| !ok) {
        return fail(format!("{name} value differs"));
    }

    let (f, r, a) = (&f, &r, &a);
    let diff = move |x: &Mat<Q>, y: &Mat<Q>| r.sub(x, y).entries().to_vec();
    let ax_eq = move |k: &Mat<Q>| -> Residual {
        let t = r.mul(a, k);
        Box::new(move |x| diff(&r.mul(a, x), &t))
    };
    let xa_eq = move |k: &Mat<Q>| -> Residual {
        let t = r.mul(k, a);
        Box::new(move |x| diff(&r.mul(x, a), &t))
    };
    let eq = move |e: u8| -> Residual {
        Box::new(move |x: &Mat<Q>| {
            let (ax, xa) = (r.mul(a, x), r.mul(x, a));
            let res = match e {
                1 => r.sub(&r.mul(&ax, a), a),
                3 => r.sub(&r.star(&ax).expect("transpose"), &ax),
                4 => r.sub(&r.star(&xa).expect("transpose"), &xa),
                5 => r.sub(&ax, &xa),
                6 => r.sub(&r.mul(&xa, a), a),
                8 => r.sub(&r.mul(a, &ax), a),
                _ => unreachable!("only linear equations appear in the grids"),
            };
            res.entries().to_vec()
        })
    };
    // c · (x11, x12, x21, x22) = k
    let coord = move |c: [i64; 4], k: &str| -> Residual {
        let k = f.parse(k).expect("rational");
        Box::new(move |x: &Mat<Q>| {
            let lin = x.entries().iter().zip(c).fold(f.zero(), |acc, (t, ci)| f.add(&acc, &f.mul(&f.from_i64(ci), t)));
            vec![f.sub(&lin, &k)]
        })
    };
    let aa_sharp = r.mul(a, &sharp);
    let sharp_a = r.mul(&sharp, a);
    let a_sharp_const = r.sub(&aa_sharp, &sharp_a).entries().to_vec();
    let grids: Vec<(&str, Vec<Residual>, Vec<Residual>, &[u8])> = vec![
        (
            "AX=XA=AA#=A#A",
            vec![ax_eq(&sharp), Box::new(move |x| diff(&r.mul(x, a), &aa_sharp)), Box::new(move |_| a_sharp_const.clone())],
            vec![coord([1, 0, 0, 0], "1/2"), coord([0, 0, 1, 0], "0"), coord([0, -1, 0, 1], "1/2")],
            &[1, 5],
        ),
        (
            "AX=AA+, XA=A+A",
            vec![ax_eq(&dagger), xa_eq(&dagger)],
            vec![coord([1, 0, 0, 0], "1/4"), coord([0, 0, 1, 0], "-1/4"), coord([0, 1, 0, -1], "0")],
            &[1, 3, 4],
        ),
        (
            "AX=A A^core, XA=A^core A",
            vec![ax_eq(&core), xa_eq(&core)],
            vec![coord([1, 0, 0, 0], "1/2"), coord([0, 0, 1, 0], "0"), coord([0, 1, 0, -1], "0")],
            &[3, 6],
        ),
        (
            "AX=A A_core, XA=A_core A",
            vec![ax_eq(&dual), xa_eq(&dual)],
            vec![coord([1, 0, 0, 0], "1/4"), coord([0, 0, 1, 0], "-1/4"), coord([0, -1, 0, 1], "1/2")],
            &[4, 8],
        ),
    ];
    let mut report = Vec::new();
    for (name, products, coords, class) in grids {
        let class_conds: Vec<Residual> = class.iter().map(|&e| eq(e)).collect();
        let (p, c, k) = (affine_solution(f, &products), affine_solution(f, &coords), affine_solution(f, &class_conds));
        let Some(sys) = p.clone() else {
            return fail(format!("grid {name}: product conditions inconsistent"));
        };
        if p != c || c != k {
            return fail(format!("grid {name}: solution sets differ"));
        }
        let eqs = EquationSet::of(class);
        for x in affine_points(f, &sys) {
            if !holds(r, a, &x, &eqs).unwrap_or(false) {
                return fail(format!("grid {name}: point {} is not in the class", r.render(&x)));
            }
        }
        report.push(json!({"grid": name, "class": eqs.to_string(), "dimension": 4 - sys.rows()}));
    }
    Outcome_ { ok: true, detail: "four values exact, four grids equal as affine sets".into(), report: Value::Array(report) }
}

fn criterion_2() -> Outcome_ {
    let r = MatrixRing::new(PrimeField::new(5).expect("prime"), 2, Involution::Transpose).expect("M2(F5)");
    let a = r.unit(1, 2);
    let e21 = r.unit(2, 1);
    let all = r.elements().expect("finite");
    let x = |m: &Mat<u64>, i: usize, j: usize| *m.get(i - 1, j - 1);
    let fld = r.field().clone();
    let set = |pred: &dyn Fn(&Mat<u64>) -> bool| -> BTreeSet<Mat<u64>> { all.iter().filter(|m| pred(m)).cloned().collect() };
    let sorted = |xs: Vec<Mat<u64>>| -> BTreeSet<Mat<u64>> { xs.into_iter().collect() };
    let mut checks: Vec<(String, bool)> = Vec::new();
    let mut report = serde_json::Map::new();

    let a1 = enumerate_inverse_set(&r, &a, &EquationSet::of(&[1])).expect("a{1}");
    let a12 = enumerate_inverse_set(&r, &a, &EquationSet::of(&[1, 2])).expect("a{1,2}");
    checks.push(("|A{1}| = 125".into(), a1.len() == 125));
    checks.push(("A{1} is x21 = 1".into(), sorted(a1.clone()) == set(&|m| x(m, 2, 1) == 1)));
    checks.push(("|A{1,2}| = 25".into(), a12.len() == 25));
    checks.push((
        "A{1,2} is x21 = 1, x12 = x11 x22".into(),
        sorted(a12.clone()) == set(&|m| x(m, 2, 1) == 1 && x(m, 1, 2) == fld.mul(&x(m, 1, 1), &x(m, 2, 2))),
    ));
    report.insert("a1_count".into(), a1.len().into());
    report.insert("a12_count".into(), a12.len().into());

    let s_elems: Vec<_> = set(&|m| x(m, 1, 1) == 0 && x(m, 1, 2) == 0).into_iter().collect();
    let sl_elems: Vec<_> = set(&|m| x(m, 1, 2) == 0 && x(m, 2, 2) == 0).into_iter().collect();
    let s = r.generated(Side::Right, &s_elems);
    let sl = r.generated(Side::Left, &sl_elems);
    let (t, tl) = (s.clone(), sl.clone());
    checks.push(("S is exactly the displayed set".into(), sorted(r.ideal_elements(&s).expect("finite")) == sorted(s_elems)));
    checks.push(("S' is exactly the displayed set".into(), sorted(r.ideal_elements(&sl).expect("finite")) == sorted(sl_elems)));
    let (ar, ra) = (r.principal(&a, Side::Right), r.principal(&a, Side::Left));
    let (rann, lann) = (r.annihilator(&a, Side::Right), r.annihilator(&a, Side::Left));
    let (e11, e22) = (r.unit(1, 1), r.unit(2, 2));
    checks.push(("unit components E11, E22".into(), {
        r.unit_component(&ar, &t) == Some(e11.clone())
            && r.unit_component(&sl, &lann) == Some(e11.clone())
            && r.unit_component(&s, &rann) == Some(e22.clone())
            && r.unit_component(&ra, &tl) == Some(e22.clone())
    }));

    let pairs = [
        ("S,T", IdealConstraints::right(s.clone(), t.clone())),
        ("S',T'", IdealConstraints::left(sl.clone(), tl.clone())),
        ("S,S'", IdealConstraints::principals(s.clone(), sl.clone())),
        ("T,T'", IdealConstraints::annihilators(t.clone(), tl.clone())),
    ];
    for (name, c) in &pairs {
        for (mode, reflexive) in [(Mode::Outer, false), (Mode::Reflexive, true)] {
            let constructed = prescribed_inverse(&r, &a, c, reflexive).ok().and_then(|x| x.ok());
            let brute = prescribed_set(&r, &a, c, mode).unwrap_or_default();
            checks.push((format!("{mode:?} {name} is E21"), constructed.as_ref() == Some(&e21) && brute == [e21.clone()]));
        }
    }

    let ints = |rows: [[u64; 2]; 2]| -> Mat<u64> { Mat::from_rows(rows.iter().map(|r| r.to_vec()).collect()).expect("2x2") };
    let scalars: Vec<u64> = (0..5).collect();
    let pair_set: BTreeSet<_> = scalars.iter().map(|&p| ints([[0, p], [1, 0]])).collect();
    let s_set: BTreeSet<_> = scalars.iter().flat_map(|&p| scalars.iter().map(move |&q| ints([[0, q], [1, p]]))).collect();
    let t_set: BTreeSet<_> = scalars.iter().flat_map(|&p| scalars.iter().map(move |&q| ints([[q, p], [1, 0]]))).collect();
    let s_set12: BTreeSet<_> = scalars.iter().map(|&p| ints([[0, 0], [1, p]])).collect();
    let t_set12: BTreeSet<_> = scalars.iter().map(|&p| ints([[p, 0], [1, 0]])).collect();
    for (name, c) in &pairs {
        let brute = sorted(prescribed_set(&r, &a, c, Mode::Inner).unwrap_or_default());
        let family = one_inverse_family(&r, &a, c).ok().and_then(|f| f.ok()).and_then(|f| f.members).map(sorted);
        checks.push((format!("{{1}} {name} is aE12 + E21"), brute == pair_set && family.as_ref() == Some(&pair_set)));
    }
    let singles = [
        ("S", IdealConstraints::only_s(s.clone()), &s_set, &s_set12),
        ("T'", IdealConstraints::only_t_left(tl.clone()), &s_set, &s_set12),
        ("T", IdealConstraints::only_t(t.clone()), &t_set, &t_set12),
        ("S'", IdealConstraints::only_s_left(sl.clone()), &t_set, &t_set12),
    ];
    for (name, c, want1, want12) in &singles {
        let inner = sorted(prescribed_set(&r, &a, c, Mode::Inner).unwrap_or_default());
        let refl = sorted(prescribed_set(&r, &a, c, Mode::Reflexive).unwrap_or_default());
        checks.push((format!("{{1}} {name} family"), inner == **want1));
        checks.push((format!("{{1,2}} {name} family"), refl == **want12));
    }
    report.insert("families".into(), json!({
        "pairs": codec::elems(&r, &pair_set.iter().cloned().collect::<Vec<_>>()),
        "s_or_t_left": s_set.len(),
        "t_or_s_left": t_set.len(),
        "reflexive_s_or_t_left": codec::elems(&r, &s_set12.iter().cloned().collect::<Vec<_>>()),
        "reflexive_t_or_s_left": codec::elems(&r, &t_set12.iter().cloned().collect::<Vec<_>>()),
    }));
    report.insert("prescribed".into(), codec::elem(&r, &e21));
    summarize(checks, report)
}

fn summarize(checks: Vec<(String, bool)>, mut report: serde_json::Map<String, Value>) -> Outcome_ {
    let failed: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
    report.insert("checks".into(), json!(checks.iter().map(|(n, ok)| json!([n, ok])).collect::<Vec<_>>()));
    Outcome_ {
        ok: failed.is_empty(),
        detail: if failed.is_empty() { format!("{} checks", checks.len()) } else { format!("failed: {}", failed.join("; ")) },
        report: Value::Object(report),
    }
}

fn verify_job(ring: &str, theorems: &str) -> job::JobOutput {
    let mut options = BTreeMap::new();
    options.insert("theorems".to_string(), Value::String(theorems.into()));
    ringinv::run(&JobSpec { command: Command::Verify, ring: Some(Value::String(ring.into())), element: None, options })
}

fn criterion_3() -> Outcome_ {
    let mut report = serde_json::Map::new();
    let mut checks = Vec::new();
    for ring in ["zn:6", "zn:8", "m2f2"] {
        let out = verify_job(ring, "all");
        let summary = &out.json["summary"];
        checks.push((
            format!("{ring}: exit {} fail {} incomplete {}", out.exit, summary["fail"], summary["incomplete"]),
            out.exit == exit::OK && summary["fail"] == 0 && summary["incomplete"] == 0,
        ));
        report.insert(ring.into(), out.json);
    }
    summarize(checks, report)
}

fn criterion_4() -> Outcome_ {
    let r = MatrixRing::new(PrimeField::new(2).expect("prime"), 2, Involution::Transpose).expect("M2(F2)");
    let a = r.from_ints(&[&[1, 1], &[0, 0]]).expect("element");
    let mp = moore_penrose(&r, &a).expect("involution present");
    let rep = moore_penrose_report(&r, &a).expect("involution present");
    let count = count_inverse_set(&r, &a, &EquationSet::of(&[1, 2, 3, 4])).expect("finite");
    let brute = r.elements().expect("finite").iter().filter(|x| holds(&r, &a, x, &EquationSet::of(&[1, 2, 3, 4])).unwrap_or(false)).count();
    let reason = match &rep.outcome {
        Outcome::None { reason } => Some(reason.clone()),
        _ => None,
    };
    let checks = vec![
        ("MP is none".to_string(), mp.is_none() && reason.is_some()),
        ("a{1,2,3,4} is empty".to_string(), count == 0 && brute == 0),
    ];
    let mut report = serde_json::Map::new();
    report.insert("reason".into(), json!(reason));
    report.insert("a1234_count".into(), count.into());
    summarize(checks, report)
}

fn criterion_5() -> Outcome_ {
    let f2 = MatrixRing::new(PrimeField::new(2).expect("prime"), 2, Involution::Transpose).expect("M2(F2)");
    let z6 = ringinv_core::ring::Zn::new(6).expect("Z6");
    let ids: Vec<&str> = oracle::CATALOG.iter().map(|c| c.id).filter(|id| id.starts_with("A-")).collect();
    let mut checks = Vec::new();
    let mut report = serde_json::Map::new();
    for id in &ids {
        let on_f2 = oracle::verify(&f2, id, Budget::UNLIMITED);
        let on_z6 = oracle::verify(&z6, id, Budget::UNLIMITED);
        let needs_star = oracle::lookup(id).is_some_and(|c| c.needs_involution);
        let ok_f2 = matches!(&on_f2, Ok(rep) if rep.status == Status::Pass);
        let ok_z6 = match &on_z6 {
            Ok(rep) => rep.status == Status::Pass || (needs_star && rep.status == Status::NotApplicable),
            Err(_) => false,
        };
        checks.push((format!("{id} on M2(F2)"), ok_f2));
        checks.push((format!("{id} on Z6"), ok_z6));
        let cell = |rep: &ringinv_core::Result<oracle::VerificationReport>| match rep {
            Ok(rep) => codec::verification_report(rep),
            Err(e) => json!({"error": e.to_string()}),
        };
        report.insert((*id).into(), json!({"M2(F2)": cell(&on_f2), "Z6": cell(&on_z6)}));
    }
    summarize(checks, report)
}

struct Criterion {
    number: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome_,
}

const CRITERIA: [Criterion; 5] = [
    Criterion { number: 1, name: "example values and iff-grids over Q", limit: Some(LIMIT_1), run: criterion_1 },
    Criterion { number: 2, name: "worked example over F5", limit: Some(LIMIT_2), run: criterion_2 },
    Criterion { number: 3, name: "full catalog on Z6, Z8, M2(F2)", limit: Some(LIMIT_3), run: criterion_3 },
    Criterion { number: 4, name: "Moore-Penrose non-existence over F2", limit: Some(LIMIT_4), run: criterion_4 },
    Criterion { number: 5, name: "oracle agreement on M2(F2) and Z6", limit: None, run: criterion_5 },
];

fn main() -> ExitCode {
    println!("acceptance (tolerance {TOLERANCE}: exact equality)");
    let mut all_ok = true;
    let mut first_run = Vec::new();
    for c in &CRITERIA {
        let start = Instant::now();
        let out = (c.run)();
        let elapsed = start.elapsed();
        let in_time = c.limit.map_or(true, |l| elapsed < l);
        let ok = out.ok && in_time;
        all_ok &= ok;
        let limit = c.limit.map_or("none".to_string(), |l| format!("{l:?}"));
        let late = if in_time { String::new() } else { " over time limit;".to_string() };
        println!(
            "criterion {}: {} {} ({elapsed:.2?}, limit {limit};{late} {})",
            c.number,
            if ok { "PASS" } else { "FAIL" },
            c.name,
            out.detail
        );
        first_run.push(job::render(&out.report));
    }

    let start = Instant::now();
    let second_run: Vec<String> = CRITERIA[1..].iter().map(|c| job::render(&(c.run)().report)).collect();
    let differing: Vec<u32> = CRITERIA[1..]
        .iter()
        .zip(first_run[1..].iter().zip(&second_run))
        .filter(|(_, (a, b))| a != b)
        .map(|(c, _)| c.number)
        .collect();
    let ok = differing.is_empty();
    all_ok &= ok;
    let bytes: usize = second_run.iter().map(String::len).sum();
    println!(
        "criterion 6: {} byte-identical JSON across two runs of criteria 2-5 ({:.2?}; {})",
        if ok { "PASS" } else { "FAIL" },
        start.elapsed(),
        if ok { format!("{bytes} bytes compared") } else { format!("differing: {differing:?}") }
    );
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
