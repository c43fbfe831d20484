//! Exhaustive verification of the theorem catalog on finite rings.
//!
//! Every entry quantifies over all elements and over the ideal family of
//! the ring, in canonical order, and stops at the first counterexample.
//! Ground truth is always brute force: equations are evaluated directly and
//! ideals are compared as sets.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geninv::{
    core_inverse, drazin, dual_core_inverse, enumerate_inverse_set, group_inverse, holds, inner_inverse,
    moore_penrose, moore_penrose_via_ideals, EquationSet,
};
use crate::ideal::{IdealLattice, Shorthand, Side};
use crate::prescribed::{
    has_prescribed, mitsch_extremes, mitsch_leq, mitsch_leq_brute, one_inverse_family, prescribed_inverse,
    prescribed_set, psi_equals, reflexive_characterize, shape_factors, IdealConstraints, Mode, Shape,
};
use crate::special::{
    bc_closed_form_rows, bc_constraints, bc_equality_clauses, bc_invertibility_hypotheses, bc_inverse,
    djordjevic_wei_clauses, e_core, f_dual_core, is_bott_duffin_pq, is_djordjevic_wei, is_left_v_dual_core,
    is_right_w_core, is_v_dual_core, is_w_core, is_weighted_mp, left_v_dual_core, left_v_dual_core_grid,
    pq_inverse, right_w_core, right_w_core_grid, star_class_ideal_forms, star_class_member, star_class_set,
    v_dual_core, v_dual_core_grid, w_core, w_core_grid, weighted_core_grid, weighted_mp, weighted_mp_grid,
    BcFlavor, GridReading, GridReport, PqFlavor, StarClass, WeightedCore,
};

/// One verifiable statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TheoremCase {
    pub id: &'static str,
    /// Short statement of what is checked.
    pub statement: &'static str,
    /// What the quantifiers range over.
    pub scope: &'static str,
    pub needs_involution: bool,
}

macro_rules! case {
    ($id:literal, $inv:literal, $scope:literal, $st:literal) => {
        TheoremCase { id: $id, statement: $st, scope: $scope, needs_involution: $inv }
    };
}

pub static CATALOG: &[TheoremCase] = &[
    case!("L-involution-axioms", true, "a, b", "(ab)* = b*a*, (a+b)* = a*+b*, a** = a"),
    case!("T-invertible-lemma", false, "a", "a invertible iff aR = R and rann(a) = 0 iff Ra = R and lann(a) = 0"),
    case!("L-idempotent-ideals", false, "idempotents p, q",
        "pR = rann(1-p), Rp = lann(1-p); inclusions of principal ideals reverse on annihilators; q = p iff qR in pR and rann(q) in rann(p)"),
    case!("L-principal-annihilator-inclusions", false, "a, b",
        "aR in bR gives lann(b) in lann(a), with the converse when b is regular; mirrored on the left"),
    case!("L-regularity-transfer", false, "a, b with b regular",
        "rann(b) in rann(a) and Rb in Ra make a regular; mirrored on the left"),
    case!("L-regularity-criterion", false, "a, b with b regular",
        "rann(a) = rann(b) gives Rb in Ra iff a regular; mirrored on the left"),
    case!("L-inverse-ideal-identities", false, "a, x",
        "for x in a{1}: axR = aR, rann(xa) = rann(a), lann(ax) = lann(a), Rxa = Ra; for x in a{2}: rann(ax) = rann(x), xaR = xR, Rax = Rx, lann(xa) = lann(x); for the Drazin inverse: a^D a R = a^l R and rann(a^D a) = rann(a^l) for l at least the index"),
    case!("L-orthogonality", true, "a",
        "aR orthogonal to rann(a*); symmetric a gives aR orthogonal to rann(a); an idempotent with that orthogonality is symmetric; mirrored on the left"),
    case!("L-projector-basics", false, "ideal pairs S, T of each side",
        "R = S + T directly iff the brute-force decomposition is unique; then the projector is multiplication by its unit, fixes S, kills T, and the two units sum to 1"),
    case!("L-projector-ideal-compat", false, "right direct sums, r1, r2",
        "rho(r1 r2) = rho(r1) r2 for right ideals, and the mirror for left ideals"),
    case!("L-projector-unit-action", false, "direct sums, a",
        "with e the unit: ea = a iff aR in S, ae = a iff T in rann(a); mirrored for left ideals"),
    case!("C-idempotent-projector", false, "idempotents a", "phi_a = rho_{aR, rann a} and the left mirror"),
    case!("T-1I-projectors", false, "a, x", "x in a{1} iff each of four projector identities holds"),
    case!("T-2I-projectors", false, "a, x", "x in a{2} iff each of four projector identities holds"),
    case!("L-ab-ab1", false, "a, b, every (ab)^(1)",
        "ab(ab)^(1)a = a iff abR = aR iff lann(ab) = lann(a); b(ab)^(1)ab = b iff rann(ab) = rann(b) iff Rab = Rb"),
    case!("T-12I-projectors", false, "a, x", "x in a{1,2} iff each of four projector identities holds"),
    case!("R-12I-remark", false, "a, x",
        "an inner inverse with xR = xaR or Rx = Rax is reflexive; an outer inverse with aR = axR or Ra = Rxa is reflexive"),
    case!("T-15-projectors", false, "a, x", "x in a{1,5} iff phi_ax = phi_xa = rho_{aR, rann a} iff the left mirror"),
    case!("T-drazin-projectors", false, "a, x, l up to the index bound",
        "x is the Drazin inverse with index at most l iff the projector form holds with any of four range conditions"),
    case!("T-1I-rightpair", false, "a, S, T, x", "inner inverses with xaR = S, rann(ax) = T: ideals, projectors, parametrization agree"),
    case!("T-1I-leftpair", false, "a, S', T', x", "inner inverses with Rax = S', lann(xa) = T': ideals, projectors, parametrization agree"),
    case!("T-1I-principals", false, "a, S, S', x", "inner inverses with xaR = S, Rax = S': ideals, projectors, parametrization agree"),
    case!("T-1I-annihilators", false, "a, T, T', x", "inner inverses with rann(ax) = T, lann(xa) = T': ideals, projectors, parametrization agree"),
    case!("T-1I-S", false, "a, S, x", "inner inverses with xaR = S: ideals, projector, parametrization agree"),
    case!("T-1I-T", false, "a, T, x", "inner inverses with rann(ax) = T: ideals, projector, parametrization agree"),
    case!("T-1I-Sprime", false, "a, S', x", "inner inverses with Rax = S': ideals, projector, parametrization agree"),
    case!("T-1I-Tprime", false, "a, T', x", "inner inverses with lann(xa) = T': ideals, projector, parametrization agree"),
    case!("C-1I-idempotent-ideals", false, "regular a, ideals",
        "a complement of rann(a) is pR, a complement of aR is rann(q), and the left mirrors, for idempotents p, q"),
    case!("P-1I-sets", false, "a, a1 in a{1}",
        "the coset a1 + (1-a1 a)R(1-a a1) equals the inner inverses sharing two of xaR, rann(ax), Rax, lann(xa) with a1 (in the four pair shapes), and lies inside those sharing one"),
    case!("T-2I-pair-unique", false, "a, pair of ideals",
        "an outer inverse with xR = S, rann(x) = T is unique with phi_ax = rho_{aS,T}, phi_xa = rho_{S, a^-1 T}; mirrored on the left"),
    case!("T-2I-rightpair-existence", false, "a, S, T",
        "outer inverse with xR = S, rann(x) = T exists iff R = aS + T directly and rann(a) meets S trivially, and two element forms"),
    case!("T-2I-leftpair-existence", false, "a, S', T'",
        "outer inverse with Rx = S', lann(x) = T' exists iff R = S'a + T' directly and lann(a) meets S' trivially, and two element forms"),
    case!("T-2I-principals-existence", false, "a, S, S'",
        "outer inverse with xR = S, Rx = S' exists iff R = aS + rann(S') and R = S'a + lann(S) directly, and two element forms; it is unique"),
    case!("T-2I-annihilators-existence", false, "a, T, T', x",
        "outer inverse with rann(x) = T, lann(x) = T' iff six equivalent statements; it is unique"),
    case!("L-mitsch-exact", false, "y, z", "the linear-solve decision of the minus-type order equals brute force"),
    case!("L-mitsch-YZ", false, "a, pair of ideals", "every element of Y is below every element of Z"),
    case!("T-mitsch-extremes", false, "a, pair of ideals, x",
        "x is the prescribed outer inverse iff x in Y and Z iff x = max Y = min Z"),
    case!("T-12I-characterization", false, "a, pair of ideals, x", "all listed descriptions of the reflexive inverse with a pair of ideals agree"),
    case!("T-12I-single", false, "a, one ideal, x", "reflexive inverses with one prescribed ideal: all listed descriptions agree"),
    case!("T-12I-group-isomorphism", false, "a, direct sums, b",
        "b in S with ab = rho_{aR,T}(1) iff psi = phi_b iff b is the reflexive inverse; mirrored on the left"),
    case!("T-12I-rightpair-existence", false, "a, S, T", "reflexive inverse with xR = S, rann(x) = T exists iff four equivalent conditions"),
    case!("T-12I-leftpair-existence", false, "a, S', T'", "reflexive inverse with Rx = S', lann(x) = T' exists iff four equivalent conditions"),
    case!("T-12I-principals-existence", false, "a, S, S'", "reflexive inverse with xR = S, Rx = S' exists iff three equivalent conditions"),
    case!("C-idempotent-generated", false, "a, pair of ideals",
        "when a prescribed outer inverse exists, the prescribed ideals are generated by idempotents"),
    case!("T-star-classes", true, "class, a, x", "membership in each *-class by equations agrees with its projector descriptions"),
    case!("P-star-class-sets", true, "class, a", "each ideal description of a *-class equals the class (contained in it for {1,3,6}, {1,4,8})"),
    case!("T-weighted-mp-grid", true, "weights e, f, a, x", "every combination of the weighted Moore-Penrose grid agrees with the definition"),
    case!("T-e-core-grid", true, "weight e, a, x", "every combination of the e-core grid agrees with the definition"),
    case!("T-f-dual-core-grid", true, "weight f, a, x", "every combination of the f-dual core grid agrees with the definition"),
    case!("P-w-core", true, "a, w, x", "x is the w-core inverse iff x = (aw)^core with aR in awR, or with lann(aw) in lann(a)"),
    case!("T-w-core-grid", true, "a, w, x", "every combination of the w-core grid agrees with the definition"),
    case!("P-v-dual-core", true, "a, v, x", "x is the v-dual core inverse iff x = (va)_core with Ra in Rva, or with rann(va) in rann(a)"),
    case!("T-v-dual-core-grid", true, "a, v, x", "every combination of the v-dual core grid agrees with the definition"),
    case!("P-right-w-core", true, "a, w, x", "right w-core inverses are (aw){1,3,7} when aR in awR; the solver finds them"),
    case!("T-right-w-core-grid", true, "a, w, x", "every combination of the right w-core grid agrees with the definition"),
    case!("P-left-v-dual-core", true, "a, v, x", "left v-dual core inverses are (va){1,4,9} when Ra in Rva; the solver finds them"),
    case!("T-left-v-dual-core-grid", true, "a, v, x", "every combination of the left v-dual core grid agrees with the definition"),
    case!("T-bc-closed-form", false, "a, b, c, every (cab)^(1)", "each item about b(cab)^(1)c holds as stated"),
    case!("T-bc-invertible", false, "a, b, c",
        "under either invertibility criterion, cab is invertible and b(cab)^-1 c is the hybrid inverse"),
    case!("T-bc-equality", false, "a, b, c, x", "all descriptions of x = b(cab)^(1)c agree"),
    case!("T-pq-djordjevic-wei", false, "a, idempotents p, q, x",
        "the (p,q) inverse descriptions agree, and when it exists rann(p) = a^-1(qR)"),
    case!("T-pq-image-kernel", false, "a, idempotents p, q, x",
        "the image-kernel (pR, qR) inverse is the Bott-Duffin (p, 1-q) inverse; the Bott-Duffin (p,p) inverse is p(1-p+ap)^-1"),
    case!("P-pq-examples", false, "a",
        "Drazin, Moore-Penrose, core and dual core inverses are (p,q) inverses for the stated idempotents"),
    case!("P-reflexive-idempotents", false, "a",
        "a{1,2} is nonempty iff rann(a) = rann(p), aR = qR for idempotents, iff the left forms"),
    case!("A-inner", false, "a", "the inner-inverse solver agrees with brute force"),
    case!("A-group", false, "a", "the group-inverse solver agrees with brute force"),
    case!("A-drazin", false, "a", "the Drazin solver agrees with brute force, index included"),
    case!("A-moore-penrose", true, "a", "both Moore-Penrose solvers agree with brute force"),
    case!("A-core", true, "a", "the core and dual core solvers agree with brute force"),
    case!("A-prescribed", false, "a, pair of ideals",
        "prescribed outer and reflexive solvers agree with brute force, and their existence conditions are exact"),
    case!("A-one-inverse-family", false, "a, constraints", "the parametrized inner family equals the brute-force constrained set"),
    case!("A-weighted", true, "weights, a", "weighted Moore-Penrose and weighted core solvers agree with brute force"),
    case!("A-bc", false, "a, b, c", "every (b,c) flavor solver agrees with brute force"),
    case!("A-pq", false, "a, idempotents p, q", "every (p,q) flavor solver agrees with brute force"),
];

pub fn lookup(id: &str) -> Option<&'static TheoremCase> {
    CATALOG.iter().find(|c| c.id == id)
}

/// Cap on the number of checked cases.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_cases: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_cases: None };
    pub fn cases(n: u64) -> Self {
        Budget { max_cases: Some(n) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    /// The budget ran out before the quantifiers were exhausted.
    Incomplete,
    /// The ring lacks the structure the statement needs.
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Incomplete => "incomplete",
            Status::NotApplicable => "not_applicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// Variable bindings, rendered.
    pub assignment: Vec<(String, String)>,
    pub failed: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub ring: String,
    pub theorem: String,
    pub status: Status,
    pub cases_checked: u64,
    pub counterexample: Option<Counterexample>,
    pub notes: Vec<String>,
}

/// Brute-force `{x : pred(x)}` in canonical order.
pub fn brute_force_set<R: IdealLattice>(
    ring: &R,
    mut pred: impl FnMut(&R::Elem) -> Result<bool>,
) -> Result<Vec<R::Elem>> {
    let mut out = Vec::new();
    for x in ring.iter_elements()? {
        if pred(&x)? {
            out.push(x);
        }
    }
    Ok(out)
}

/// Runs one catalog entry exhaustively on a finite ring.
pub fn verify<R: IdealLattice>(ring: &R, id: &str, budget: Budget) -> Result<VerificationReport> {
    let case = lookup(id).ok_or_else(|| Error::Precondition(format!("unknown theorem id {id}")))?;
    let label = ring.spec().label();
    if case.needs_involution && !ring.has_involution() {
        return Ok(VerificationReport {
            ring: label,
            theorem: String::from(case.id),
            status: Status::NotApplicable,
            cases_checked: 0,
            counterexample: None,
            notes: alloc::vec![String::from("the ring has no involution")],
        });
    }
    if ring.size().is_none() {
        return Err(Error::NotEnumerable);
    }
    let sc = Scope::new(ring)?;
    let mut cx = Ctx { r: ring, max: budget.max_cases, cases: 0, failure: None, exhausted: false, notes: Vec::new(), noted: BTreeSet::new() };
    match run(case.id, &mut cx, &sc) {
        Ok(()) | Err(Halt::Stop) => {}
        Err(Halt::Err(e)) => return Err(e),
    }
    let status = if cx.failure.is_some() {
        Status::Fail
    } else if cx.exhausted {
        Status::Incomplete
    } else {
        Status::Pass
    };
    Ok(VerificationReport {
        ring: label,
        theorem: String::from(case.id),
        status,
        cases_checked: cx.cases,
        counterexample: cx.failure,
        notes: cx.notes,
    })
}

/// Runs every catalog entry.
pub fn verify_all<R: IdealLattice>(ring: &R, budget: Budget) -> Result<Vec<VerificationReport>> {
    CATALOG.iter().map(|c| verify(ring, c.id, budget)).collect()
}

enum Halt {
    Stop,
    Err(Error),
}

impl From<Error> for Halt {
    fn from(e: Error) -> Self {
        Halt::Err(e)
    }
}

type Step = core::result::Result<(), Halt>;
type Assign = Vec<(String, String)>;

struct Ctx<'r, R: IdealLattice> {
    r: &'r R,
    max: Option<u64>,
    cases: u64,
    failure: Option<Counterexample>,
    exhausted: bool,
    notes: Vec<String>,
    noted: BTreeSet<String>,
}

impl<R: IdealLattice> Ctx<'_, R> {
    fn check(&mut self, ok: bool, vars: impl FnOnce() -> Assign, failed: impl FnOnce() -> String) -> Step {
        if self.max.is_some_and(|m| self.cases >= m) {
            self.exhausted = true;
            return Err(Halt::Stop);
        }
        self.cases += 1;
        if !ok {
            self.failure = Some(Counterexample { assignment: vars(), failed: failed() });
            return Err(Halt::Stop);
        }
        Ok(())
    }

    fn agree<S: AsRef<str>>(&mut self, clauses: &[(S, bool)], vars: impl FnOnce() -> Assign) -> Step {
        let d = disagreement(clauses);
        let ok = d.is_none();
        self.check(ok, vars, || d.unwrap_or_default())
    }

    fn grid(&mut self, g: &GridReport, vars: impl FnOnce() -> Assign) -> Step {
        let ok = g.consistent();
        self.check(ok, vars, || match g.first_violation() {
            Some(combo) => format!("combination [{}] disagrees with the definition ({})", combo.join("; "), g.target),
            None => String::from("grid inconsistent"),
        })
    }

    /// Records the first failure of a literal (uncorrected) reading.
    fn literal(&mut self, label: &str, ok: bool, vars: impl FnOnce() -> Assign) {
        if ok || self.noted.contains(label) {
            return;
        }
        self.noted.insert(String::from(label));
        let at: Vec<String> = vars().into_iter().map(|(k, v)| format!("{k}={v}")).collect();
        self.notes.push(format!("literal reading {label} fails at {}", at.join(", ")));
    }

    fn note(&mut self, text: String) {
        if self.noted.insert(text.clone()) {
            self.notes.push(text);
        }
    }
}

fn disagreement<S: AsRef<str>>(clauses: &[(S, bool)]) -> Option<String> {
    let (first, v0) = clauses.first()?;
    clauses.iter().find(|(_, v)| v != v0).map(|(n, v)| {
        format!("'{}' is {} but '{}' is {}", first.as_ref(), v0, n.as_ref(), v)
    })
}

macro_rules! vars {
    ($($k:literal => $v:expr),* $(,)?) => {
        || -> Assign { alloc::vec![$((String::from($k), $v)),*] }
    };
}

/// Precomputed quantifier domains.
struct Scope<R: IdealLattice> {
    els: Vec<R::Elem>,
    idem: Vec<R::Elem>,
    inner: Vec<Vec<R::Elem>>,
    right: Vec<R::Ideal>,
    left: Vec<R::Ideal>,
    members: BTreeMap<R::Ideal, Vec<R::Elem>>,
    /// Symmetric invertible elements, empty without an involution.
    weights: Vec<R::Elem>,
}

impl<R: IdealLattice> Scope<R> {
    fn new(r: &R) -> Result<Self> {
        let els = r.elements()?;
        let idem = els.iter().filter(|p| r.mul(p, p) == **p).cloned().collect();
        let one_eq = EquationSet::of(&[1]);
        let inner = els.iter().map(|a| enumerate_inverse_set(r, a, &one_eq)).collect::<Result<Vec<_>>>()?;
        let right = r.ideal_family(Side::Right)?;
        let left = r.ideal_family(Side::Left)?;
        let mut members = BTreeMap::new();
        for i in right.iter().chain(&left) {
            members.insert(i.clone(), r.ideal_elements(i)?);
        }
        let mut weights = Vec::new();
        if r.has_involution() {
            for w in &els {
                if r.star(w)? == *w && two_sided_inverse(r, &els, w).is_some() {
                    weights.push(w.clone());
                }
            }
        }
        Ok(Scope { els, idem, inner, right, left, members, weights })
    }

    fn elems_of(&self, r: &R, i: &R::Ideal) -> Result<Vec<R::Elem>> {
        match self.members.get(i) {
            Some(v) => Ok(v.clone()),
            None => r.ideal_elements(i),
        }
    }

    fn regular(&self, k: usize) -> bool {
        !self.inner[k].is_empty()
    }

    fn bundles(&self, shape: Shape) -> Vec<IdealConstraints<R::Ideal>> {
        let mut out = Vec::new();
        let pairs = |u: &[R::Ideal], v: &[R::Ideal], out: &mut Vec<(R::Ideal, R::Ideal)>| {
            for s in u {
                for t in v {
                    out.push((s.clone(), t.clone()));
                }
            }
        };
        let mut ps = Vec::new();
        match shape {
            Shape::RightPair => pairs(&self.right, &self.right, &mut ps),
            Shape::LeftPair => pairs(&self.left, &self.left, &mut ps),
            Shape::Principals | Shape::Annihilators => pairs(&self.right, &self.left, &mut ps),
            Shape::S | Shape::T => ps.extend(self.right.iter().map(|s| (s.clone(), s.clone()))),
            Shape::SPrime | Shape::TPrime => ps.extend(self.left.iter().map(|s| (s.clone(), s.clone()))),
        }
        for (s, t) in ps {
            out.push(match shape {
                Shape::RightPair => IdealConstraints::right(s, t),
                Shape::LeftPair => IdealConstraints::left(s, t),
                Shape::Principals => IdealConstraints::principals(s, t),
                Shape::Annihilators => IdealConstraints::annihilators(s, t),
                Shape::S => IdealConstraints::only_s(s),
                Shape::T => IdealConstraints::only_t(s),
                Shape::SPrime => IdealConstraints::only_s_left(s),
                Shape::TPrime => IdealConstraints::only_t_left(s),
            });
        }
        out
    }
}

const PAIRS: [Shape; 4] = [Shape::RightPair, Shape::LeftPair, Shape::Principals, Shape::Annihilators];

fn two_sided_inverse<R: IdealLattice>(r: &R, els: &[R::Elem], a: &R::Elem) -> Option<R::Elem> {
    let one = r.one();
    els.iter().find(|y| r.mul(a, y) == one && r.mul(y, a) == one).cloned()
}

fn render_bundle<R: IdealLattice>(r: &R, c: &IdealConstraints<R::Ideal>) -> String {
    let mut parts = Vec::new();
    for (name, v) in [("S", &c.right_prin), ("T", &c.right_ann), ("S'", &c.left_prin), ("T'", &c.left_ann)] {
        if let Some(i) = v {
            parts.push(format!("{name}={}", r.render_ideal(i)));
        }
    }
    parts.join(", ")
}

fn eq<R: IdealLattice>(r: &R, a: &R::Elem, x: &R::Elem, e: &[u8]) -> Result<bool> {
    holds(r, a, x, &EquationSet::of(e))
}

fn opt_render<R: IdealLattice>(r: &R, x: Option<&R::Elem>) -> String {
    x.map_or_else(|| String::from("none"), |x| r.render(x))
}

fn render_set<R: IdealLattice>(r: &R, xs: &[R::Elem]) -> String {
    let v: Vec<String> = xs.iter().map(|x| r.render(x)).collect();
    format!("{{{}}}", v.join(", "))
}

fn unique<E: Clone>(xs: &[E]) -> Option<E> {
    if xs.len() == 1 {
        Some(xs[0].clone())
    } else {
        None
    }
}

/// `{r : ar in i}` (right) or `{r : ra in i}` (left), by enumeration.
fn preimage_brute<R: IdealLattice>(r: &R, sc: &Scope<R>, a: &R::Elem, i: &R::Ideal) -> R::Ideal {
    let side = r.side_of(i);
    let hits: Vec<R::Elem> = sc
        .els
        .iter()
        .filter(|x| {
            let p = match side {
                Side::Right => r.mul(a, x),
                Side::Left => r.mul(x, a),
            };
            r.ideal_contains(i, &p)
        })
        .cloned()
        .collect();
    r.generated(side, &hits)
}

fn run<R: IdealLattice>(id: &str, cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    match id {
        "L-involution-axioms" => involution_axioms(cx, sc),
        "T-invertible-lemma" => invertible_lemma(cx, sc),
        "L-idempotent-ideals" => idempotent_ideals(cx, sc),
        "L-principal-annihilator-inclusions" => principal_annihilator_inclusions(cx, sc),
        "L-regularity-transfer" => regularity_transfer(cx, sc),
        "L-regularity-criterion" => regularity_criterion(cx, sc),
        "L-inverse-ideal-identities" => inverse_ideal_identities(cx, sc),
        "L-orthogonality" => orthogonality(cx, sc),
        "L-projector-basics" => projector_basics(cx, sc),
        "L-projector-ideal-compat" => projector_ideal_compat(cx, sc),
        "L-projector-unit-action" => projector_unit_action(cx, sc),
        "C-idempotent-projector" => idempotent_projector(cx, sc),
        "T-1I-projectors" => projectors_1(cx, sc),
        "T-2I-projectors" => projectors_2(cx, sc),
        "L-ab-ab1" => ab_ab1(cx, sc),
        "T-12I-projectors" => projectors_12(cx, sc),
        "R-12I-remark" => remark_12(cx, sc),
        "T-15-projectors" => projectors_15(cx, sc),
        "T-drazin-projectors" => drazin_projectors(cx, sc),
        "T-1I-rightpair" => inner_shape(cx, sc, Shape::RightPair),
        "T-1I-leftpair" => inner_shape(cx, sc, Shape::LeftPair),
        "T-1I-principals" => inner_shape(cx, sc, Shape::Principals),
        "T-1I-annihilators" => inner_shape(cx, sc, Shape::Annihilators),
        "T-1I-S" => inner_shape(cx, sc, Shape::S),
        "T-1I-T" => inner_shape(cx, sc, Shape::T),
        "T-1I-Sprime" => inner_shape(cx, sc, Shape::SPrime),
        "T-1I-Tprime" => inner_shape(cx, sc, Shape::TPrime),
        "C-1I-idempotent-ideals" => inner_idempotent_ideals(cx, sc),
        "P-1I-sets" => inner_sets(cx, sc),
        "T-2I-pair-unique" => outer_pair_unique(cx, sc),
        "T-2I-rightpair-existence" => outer_rightpair_existence(cx, sc),
        "T-2I-leftpair-existence" => outer_leftpair_existence(cx, sc),
        "T-2I-principals-existence" => outer_principals_existence(cx, sc),
        "T-2I-annihilators-existence" => outer_annihilators_existence(cx, sc),
        "L-mitsch-exact" => mitsch_exact(cx, sc),
        "L-mitsch-YZ" => mitsch_yz(cx, sc),
        "T-mitsch-extremes" => mitsch_theorem(cx, sc),
        "T-12I-characterization" => reflexive_pairs(cx, sc),
        "T-12I-single" => reflexive_single(cx, sc),
        "T-12I-group-isomorphism" => group_isomorphism(cx, sc),
        "T-12I-rightpair-existence" => reflexive_existence(cx, sc, Shape::RightPair),
        "T-12I-leftpair-existence" => reflexive_existence(cx, sc, Shape::LeftPair),
        "T-12I-principals-existence" => reflexive_existence(cx, sc, Shape::Principals),
        "C-idempotent-generated" => idempotent_generated(cx, sc),
        "T-star-classes" => star_classes(cx, sc),
        "P-star-class-sets" => star_class_sets(cx, sc),
        "T-weighted-mp-grid" => weighted_mp_check(cx, sc),
        "T-e-core-grid" => weighted_core_check(cx, sc, WeightedCore::ECore),
        "T-f-dual-core-grid" => weighted_core_check(cx, sc, WeightedCore::FDualCore),
        "P-w-core" => w_core_prop(cx, sc, false),
        "P-v-dual-core" => w_core_prop(cx, sc, true),
        "T-w-core-grid" => w_core_grid_check(cx, sc, false),
        "T-v-dual-core-grid" => w_core_grid_check(cx, sc, true),
        "P-right-w-core" => one_sided_core_prop(cx, sc, false),
        "P-left-v-dual-core" => one_sided_core_prop(cx, sc, true),
        "T-right-w-core-grid" => one_sided_core_grid(cx, sc, false),
        "T-left-v-dual-core-grid" => one_sided_core_grid(cx, sc, true),
        "T-bc-closed-form" => bc_closed_form(cx, sc),
        "T-bc-invertible" => bc_invertible(cx, sc),
        "T-bc-equality" => bc_equality(cx, sc),
        "T-pq-djordjevic-wei" => pq_djordjevic_wei(cx, sc),
        "T-pq-image-kernel" => pq_image_kernel(cx, sc),
        "P-pq-examples" => pq_examples(cx, sc),
        "P-reflexive-idempotents" => reflexive_idempotents(cx, sc),
        "A-inner" => agree_inner(cx, sc),
        "A-group" => agree_group(cx, sc),
        "A-drazin" => agree_drazin(cx, sc),
        "A-moore-penrose" => agree_mp(cx, sc),
        "A-core" => agree_core(cx, sc),
        "A-prescribed" => agree_prescribed(cx, sc),
        "A-one-inverse-family" => agree_family(cx, sc),
        "A-weighted" => agree_weighted(cx, sc),
        "A-bc" => agree_bc(cx, sc),
        "A-pq" => agree_pq(cx, sc),
        _ => Err(Halt::Err(Error::Internal(format!("catalog entry {id} has no checker")))),
    }
}

// Preliminaries.

fn involution_axioms<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for b in &sc.els {
            let (sa, sb) = (r.star(a)?, r.star(b)?);
            let ok = r.star(&r.mul(a, b))? == r.mul(&sb, &sa)
                && r.star(&r.add(a, b))? == r.add(&sa, &sb)
                && r.star(&sa)? == *a;
            cx.check(ok, vars!["a" => r.render(a), "b" => r.render(b)], || {
                String::from("(ab)* = b*a*, (a+b)* = a*+b*, a** = a")
            })?;
        }
    }
    Ok(())
}

fn invertible_lemma<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    let (wr, wl) = (r.whole_ideal(Side::Right), r.whole_ideal(Side::Left));
    for a in &sc.els {
        let cl = [
            ("a is invertible", two_sided_inverse(r, &sc.els, a).is_some()),
            ("aR = R and rann(a) = 0", r.rp(a) == wr && r.is_zero_ideal(&r.rann(a))),
            ("Ra = R and lann(a) = 0", r.lp(a) == wl && r.is_zero_ideal(&r.lann(a))),
        ];
        cx.agree(&cl, vars!["a" => r.render(a)])?;
    }
    Ok(())
}

fn idempotent_ideals<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    let one = r.one();
    for p in &sc.idem {
        for q in &sc.idem {
            let pb = r.sub(&one, p);
            let items = [
                ("pR = rann(1-p)", r.rp(p) == r.rann(&pb)),
                ("Rp = lann(1-p)", r.lp(p) == r.lann(&pb)),
                ("pR in qR iff lann(q) in lann(p)", r.le(&r.rp(p), &r.rp(q)) == r.le(&r.lann(q), &r.lann(p))),
                ("Rp in Rq iff rann(q) in rann(p)", r.le(&r.lp(p), &r.lp(q)) == r.le(&r.rann(q), &r.rann(p))),
                (
                    "q = p iff qR in pR and rann(q) in rann(p)",
                    (q == p) == (r.le(&r.rp(q), &r.rp(p)) && r.le(&r.rann(q), &r.rann(p))),
                ),
            ];
            let bad = items.iter().find(|(_, v)| !v).map(|(n, _)| *n);
            cx.check(bad.is_none(), vars!["p" => r.render(p), "q" => r.render(q)], || String::from(bad.unwrap_or("")))?;
        }
    }
    Ok(())
}

fn principal_annihilator_inclusions<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for (kb, b) in sc.els.iter().enumerate() {
            let reg = sc.regular(kb);
            let items = [
                ("aR in bR gives lann(b) in lann(a)", !r.le(&r.rp(a), &r.rp(b)) || r.le(&r.lann(b), &r.lann(a))),
                ("lann(b) in lann(a), b regular give aR in bR", !(r.le(&r.lann(b), &r.lann(a)) && reg) || r.le(&r.rp(a), &r.rp(b))),
                ("Ra in Rb gives rann(b) in rann(a)", !r.le(&r.lp(a), &r.lp(b)) || r.le(&r.rann(b), &r.rann(a))),
                ("rann(b) in rann(a), b regular give Ra in Rb", !(r.le(&r.rann(b), &r.rann(a)) && reg) || r.le(&r.lp(a), &r.lp(b))),
            ];
            let bad = items.iter().find(|(_, v)| !v).map(|(n, _)| *n);
            cx.check(bad.is_none(), vars!["a" => r.render(a), "b" => r.render(b)], || String::from(bad.unwrap_or("")))?;
        }
    }
    Ok(())
}

fn regularity_transfer<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for (ka, a) in sc.els.iter().enumerate() {
        for (kb, b) in sc.els.iter().enumerate() {
            if !sc.regular(kb) {
                continue;
            }
            let reg_a = sc.regular(ka);
            let items = [
                ("rann(b) in rann(a), Rb in Ra give a regular", !(r.le(&r.rann(b), &r.rann(a)) && r.le(&r.lp(b), &r.lp(a))) || reg_a),
                ("lann(b) in lann(a), bR in aR give a regular", !(r.le(&r.lann(b), &r.lann(a)) && r.le(&r.rp(b), &r.rp(a))) || reg_a),
            ];
            let bad = items.iter().find(|(_, v)| !v).map(|(n, _)| *n);
            cx.check(bad.is_none(), vars!["a" => r.render(a), "b" => r.render(b)], || String::from(bad.unwrap_or("")))?;
        }
    }
    Ok(())
}

fn regularity_criterion<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for (ka, a) in sc.els.iter().enumerate() {
        for (kb, b) in sc.els.iter().enumerate() {
            if !sc.regular(kb) {
                continue;
            }
            let reg_a = sc.regular(ka);
            let items = [
                ("rann(a) = rann(b) gives Rb in Ra iff a regular", r.rann(a) != r.rann(b) || r.le(&r.lp(b), &r.lp(a)) == reg_a),
                ("lann(a) = lann(b) gives bR in aR iff a regular", r.lann(a) != r.lann(b) || r.le(&r.rp(b), &r.rp(a)) == reg_a),
            ];
            let bad = items.iter().find(|(_, v)| !v).map(|(n, _)| *n);
            cx.check(bad.is_none(), vars!["a" => r.render(a), "b" => r.render(b)], || String::from(bad.unwrap_or("")))?;
        }
    }
    Ok(())
}

fn inverse_ideal_identities<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        let dz = drazin(r, a)?;
        for x in &sc.els {
            let (ax, xa) = (r.mul(a, x), r.mul(x, a));
            let mut items = alloc::vec![];
            if eq(r, a, x, &[1])? {
                items.push(("axR = aR", r.rp(&ax) == r.rp(a)));
                items.push(("rann(xa) = rann(a)", r.rann(&xa) == r.rann(a)));
                items.push(("lann(ax) = lann(a)", r.lann(&ax) == r.lann(a)));
                items.push(("Rxa = Ra", r.lp(&xa) == r.lp(a)));
            }
            if eq(r, a, x, &[2])? {
                items.push(("rann(ax) = rann(x)", r.rann(&ax) == r.rann(x)));
                items.push(("xaR = xR", r.rp(&xa) == r.rp(x)));
                items.push(("Rax = Rx", r.lp(&ax) == r.lp(x)));
                items.push(("lann(xa) = lann(x)", r.lann(&xa) == r.lann(x)));
            }
            if let Some((d, k)) = &dz {
                if d == x {
                    for l in *k..=r.drazin_bound() as u32 {
                        let al = r.pow(a, l);
                        items.push(("a^D a R = a^l R", r.rp(&xa) == r.rp(&al)));
                        items.push(("rann(a^D a) = rann(a^l)", r.rann(&xa) == r.rann(&al)));
                        items.push(("R a a^D = R a^l", r.lp(&ax) == r.lp(&al)));
                        items.push(("lann(a a^D) = lann(a^l)", r.lann(&ax) == r.lann(&al)));
                    }
                }
            }
            let bad = items.iter().find(|(_, v)| !v).map(|(n, _)| *n);
            cx.check(bad.is_none(), vars!["a" => r.render(a), "x" => r.render(x)], || String::from(bad.unwrap_or("")))?;
        }
    }
    Ok(())
}

/// Orthogonality by enumeration of both ideals.
fn orth_brute<R: IdealLattice>(r: &R, sc: &Scope<R>, i: &R::Ideal, j: &R::Ideal, side: Side) -> Result<bool> {
    let (ei, ej) = (sc.elems_of(r, i)?, sc.elems_of(r, j)?);
    for s in &ei {
        for t in &ej {
            let p = match side {
                Side::Right => r.mul(&r.star(s)?, t),
                Side::Left => r.mul(s, &r.star(t)?),
            };
            if !r.is_zero(&p) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn orthogonality<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        let s = r.star(a)?;
        let sym = s == *a;
        let idem = r.mul(a, a) == *a;
        let right_a = orth_brute(r, sc, &r.rp(a), &r.rann(a), Side::Right)?;
        let left_a = orth_brute(r, sc, &r.lp(a), &r.lann(a), Side::Left)?;
        let items = [
            ("aR orthogonal to rann(a*)", orth_brute(r, sc, &r.rp(a), &r.rann(&s), Side::Right)?),
            ("a symmetric gives aR orthogonal to rann(a)", !sym || right_a),
            ("a idempotent with aR orthogonal to rann(a) is symmetric", !(idem && right_a) || sym),
            ("Ra orthogonal to lann(a*)", orth_brute(r, sc, &r.lp(a), &r.lann(&s), Side::Left)?),
            ("a symmetric gives Ra orthogonal to lann(a)", !sym || left_a),
            ("a idempotent with Ra orthogonal to lann(a) is symmetric", !(idem && left_a) || sym),
        ];
        let bad = items.iter().find(|(_, v)| !v).map(|(n, _)| *n);
        cx.check(bad.is_none(), vars!["a" => r.render(a)], || String::from(bad.unwrap_or("")))?;
    }
    Ok(())
}

/// The projector of `R = S + T` by enumeration: for each `r` the unique
/// `s in S` with `r - s in T`, or `None` when the sum is not direct.
fn rho_table<R: IdealLattice>(r: &R, sc: &Scope<R>, s: &R::Ideal, t: &R::Ideal) -> Result<Option<Vec<R::Elem>>> {
    let es = sc.elems_of(r, s)?;
    let mut out = Vec::with_capacity(sc.els.len());
    for x in &sc.els {
        let mut hits = es.iter().filter(|p| r.ideal_contains(t, &r.sub(x, p)));
        match (hits.next(), hits.next()) {
            (Some(p), None) => out.push(p.clone()),
            _ => return Ok(None),
        }
    }
    Ok(Some(out))
}

fn side_pairs<R: IdealLattice>(sc: &Scope<R>) -> Vec<(Side, R::Ideal, R::Ideal)> {
    let mut v = Vec::new();
    for (side, fam) in [(Side::Right, &sc.right), (Side::Left, &sc.left)] {
        for s in fam {
            for t in fam {
                v.push((side, s.clone(), t.clone()));
            }
        }
    }
    v
}

fn projector_basics<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    let one = r.one();
    for (side, s, t) in side_pairs(sc) {
        let table = rho_table(r, sc, &s, &t)?;
        let unit = r.unit(&s, &t);
        let vs = vars!["S" => r.render_ideal(&s), "T" => r.render_ideal(&t)];
        let (Some(table), Some(e)) = (&table, &unit) else {
            cx.check(table.is_none() && unit.is_none(), vs, || {
                String::from("the direct-sum decision disagrees with enumeration")
            })?;
            continue;
        };
        let apply = |x: &R::Elem| match side {
            Side::Right => r.mul(e, x),
            Side::Left => r.mul(x, e),
        };
        let other = r.unit(&t, &s);
        let mut bad = None;
        if other.map(|f| r.add(e, &f)) != Some(one.clone()) {
            bad = Some("rho_{S,T} + rho_{T,S} = id");
        } else if r.mul(e, e) != *e {
            bad = Some("the unit is idempotent");
        } else if sc.els.iter().zip(table).any(|(x, p)| apply(x) != *p) {
            bad = Some("rho is multiplication by its unit");
        } else if sc.els.iter().any(|x| r.ideal_contains(&s, x) != (apply(x) == *x)) {
            bad = Some("r in S iff rho(r) = r");
        } else if sc.elems_of(r, &t)?.iter().any(|x| !r.is_zero(&apply(x))) {
            bad = Some("rho vanishes on T");
        }
        cx.check(bad.is_none(), vs, || String::from(bad.unwrap_or("")))?;
    }
    Ok(())
}

fn projector_ideal_compat<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    let index: BTreeMap<&R::Elem, usize> = sc.els.iter().enumerate().map(|(k, e)| (e, k)).collect();
    for (side, s, t) in side_pairs(sc) {
        let Some(table) = rho_table(r, sc, &s, &t)? else { continue };
        for (k1, r1) in sc.els.iter().enumerate() {
            for (k2, r2) in sc.els.iter().enumerate() {
                let ok = match side {
                    Side::Right => table[index[&r.mul(r1, r2)]] == r.mul(&table[k1], r2),
                    Side::Left => table[index[&r.mul(r1, r2)]] == r.mul(r1, &table[k2]),
                };
                cx.check(
                    ok,
                    vars!["S" => r.render_ideal(&s), "T" => r.render_ideal(&t), "r1" => r.render(r1), "r2" => r.render(r2)],
                    || String::from(if side == Side::Right { "rho(r1 r2) = rho(r1) r2" } else { "rho(r1 r2) = r1 rho(r2)" }),
                )?;
            }
        }
    }
    Ok(())
}

fn projector_unit_action<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for (side, s, t) in side_pairs(sc) {
        let Some(e) = r.unit(&s, &t) else { continue };
        for a in &sc.els {
            let (ea, ae) = (r.mul(&e, a), r.mul(a, &e));
            let items = match side {
                Side::Right => [
                    ("ea = a iff aR in S", (ea == *a) == r.le(&r.rp(a), &s)),
                    ("ae = a iff T in rann(a)", (ae == *a) == r.le(&t, &r.rann(a))),
                ],
                Side::Left => [
                    ("ae = a iff Ra in S", (ae == *a) == r.le(&r.lp(a), &s)),
                    ("ea = a iff T in lann(a)", (ea == *a) == r.le(&t, &r.lann(a))),
                ],
            };
            let bad = items.iter().find(|(_, v)| !v).map(|(n, _)| *n);
            cx.check(
                bad.is_none(),
                vars!["S" => r.render_ideal(&s), "T" => r.render_ideal(&t), "a" => r.render(a)],
                || String::from(bad.unwrap_or("")),
            )?;
        }
    }
    Ok(())
}

fn idempotent_projector<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.idem {
        let ok = r.rho(a, &r.rp(a), &r.rann(a)) && r.rho(a, &r.lp(a), &r.lann(a));
        cx.check(ok, vars!["a" => r.render(a)], || String::from("phi_a = rho_{aR, rann a} and _aphi = rho_{Ra, lann a}"))?;
    }
    Ok(())
}

// Projector characterizations of inner, outer and reflexive inverses.

fn projectors_1<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for x in &sc.els {
            let (ax, xa) = (r.mul(a, x), r.mul(x, a));
            let cl = [
                ("x in a{1}", eq(r, a, x, &[1])?),
                ("phi_ax = rho_{aR, rann(ax)}", r.rho(&ax, &r.rp(a), &r.rann(&ax))),
                ("phi_xa = rho_{xaR, rann a}", r.rho(&xa, &r.rp(&xa), &r.rann(a))),
                ("_axphi = rho_{Rax, lann a}", r.rho(&ax, &r.lp(&ax), &r.lann(a))),
                ("_xaphi = rho_{Ra, lann(xa)}", r.rho(&xa, &r.lp(a), &r.lann(&xa))),
            ];
            cx.agree(&cl, vars!["a" => r.render(a), "x" => r.render(x)])?;
        }
    }
    Ok(())
}

fn projectors_2<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for x in &sc.els {
            let (ax, xa) = (r.mul(a, x), r.mul(x, a));
            let cl = [
                ("x in a{2}", eq(r, a, x, &[2])?),
                ("phi_ax = rho_{axR, rann x}", r.rho(&ax, &r.rp(&ax), &r.rann(x))),
                ("phi_xa = rho_{xR, rann(xa)}", r.rho(&xa, &r.rp(x), &r.rann(&xa))),
                ("_axphi = rho_{Rx, lann(ax)}", r.rho(&ax, &r.lp(x), &r.lann(&ax))),
                ("_xaphi = rho_{Rxa, lann x}", r.rho(&xa, &r.lp(&xa), &r.lann(x))),
            ];
            cx.agree(&cl, vars!["a" => r.render(a), "x" => r.render(x)])?;
        }
    }
    Ok(())
}

fn ab_ab1<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    let one_eq = EquationSet::of(&[1]);
    for a in &sc.els {
        for b in &sc.els {
            let ab = r.mul(a, b);
            for g in enumerate_inverse_set(r, &ab, &one_eq)? {
                let left = [
                    ("ab(ab)^(1)a = a", r.mul3(&ab, &g, a) == *a),
                    ("abR = aR", r.rp(&ab) == r.rp(a)),
                    ("lann(ab) = lann(a)", r.lann(&ab) == r.lann(a)),
                ];
                let right = [
                    ("b(ab)^(1)ab = b", r.mul3(b, &g, &ab) == *b),
                    ("rann(ab) = rann(b)", r.rann(&ab) == r.rann(b)),
                    ("Rab = Rb", r.lp(&ab) == r.lp(b)),
                ];
                let d = disagreement(&left).or_else(|| disagreement(&right));
                let ok = d.is_none();
                cx.check(ok, vars!["a" => r.render(a), "b" => r.render(b), "(ab)^(1)" => r.render(&g)], || d.unwrap_or_default())?;
            }
        }
    }
    Ok(())
}

fn projectors_12<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for x in &sc.els {
            let (ax, xa) = (r.mul(a, x), r.mul(x, a));
            let cl = [
                ("x in a{1,2}", eq(r, a, x, &[1, 2])?),
                ("phi_ax = rho_{aR, rann x}", r.rho(&ax, &r.rp(a), &r.rann(x))),
                ("phi_xa = rho_{xR, rann a}", r.rho(&xa, &r.rp(x), &r.rann(a))),
                ("_axphi = rho_{Rx, lann a}", r.rho(&ax, &r.lp(x), &r.lann(a))),
                ("_xaphi = rho_{Ra, lann x}", r.rho(&xa, &r.lp(a), &r.lann(x))),
            ];
            cx.agree(&cl, vars!["a" => r.render(a), "x" => r.render(x)])?;
        }
    }
    Ok(())
}

fn remark_12<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for x in &sc.els {
            let (ax, xa) = (r.mul(a, x), r.mul(x, a));
            let refl = eq(r, a, x, &[1, 2])?;
            let from_inner = eq(r, a, x, &[1])? && (r.rp(x) == r.rp(&xa) || r.lp(x) == r.lp(&ax));
            let from_outer = eq(r, a, x, &[2])? && (r.rp(a) == r.rp(&ax) || r.lp(a) == r.lp(&xa));
            let items = [
                ("inner with xR = xaR or Rx = Rax is reflexive", !from_inner || refl),
                ("outer with aR = axR or Ra = Rxa is reflexive", !from_outer || refl),
            ];
            let bad = items.iter().find(|(_, v)| !v).map(|(n, _)| *n);
            cx.check(bad.is_none(), vars!["a" => r.render(a), "x" => r.render(x)], || String::from(bad.unwrap_or("")))?;
        }
    }
    Ok(())
}

fn projectors_15<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        let (rp, rn, lp, ln) = (r.rp(a), r.rann(a), r.lp(a), r.lann(a));
        for x in &sc.els {
            let (ax, xa) = (r.mul(a, x), r.mul(x, a));
            let cl = [
                ("x in a{1,5}", eq(r, a, x, &[1, 5])?),
                ("phi_ax = phi_xa = rho_{aR, rann a}", r.rho(&ax, &rp, &rn) && r.rho(&xa, &rp, &rn)),
                ("_axphi = _xaphi = rho_{Ra, lann a}", r.rho(&ax, &lp, &ln) && r.rho(&xa, &lp, &ln)),
            ];
            cx.agree(&cl, vars!["a" => r.render(a), "x" => r.render(x)])?;
        }
    }
    Ok(())
}

fn drazin_projectors<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    let bound = r.drazin_bound() as u32;
    for a in &sc.els {
        for l in 1..=bound {
            let al = r.pow(a, l);
            let (rp, rn, lp, ln) = (r.rp(&al), r.rann(&al), r.lp(&al), r.lann(&al));
            let target = EquationSet::of(&[2, 5]).with_pow_left(l);
            for x in &sc.els {
                let (ax, xa) = (r.mul(a, x), r.mul(x, a));
                let right = r.rho(&xa, &rp, &rn) && r.rho(&ax, &rp, &rn);
                let left = r.rho(&ax, &lp, &ln) && r.rho(&xa, &lp, &ln);
                let cl = [
                    ("index at most l and x = a^D", holds(r, a, x, &target)?),
                    ("right projectors, xR in a^l R", right && r.le(&r.rp(x), &rp)),
                    ("right projectors, rann(a^l) in rann(x)", right && r.le(&rn, &r.rann(x))),
                    ("left projectors, Rx in Ra^l", left && r.le(&r.lp(x), &lp)),
                    ("left projectors, lann(a^l) in lann(x)", left && r.le(&ln, &r.lann(x))),
                ];
                let vs = vars!["a" => r.render(a), "l" => format!("{l}"), "x" => r.render(x)];
                cx.literal(
                    "of the left Drazin items (only _xaphi constrained)",
                    (r.rho(&xa, &lp, &ln) && r.le(&r.lp(x), &lp)) == cl[0].1,
                    vs,
                );
                cx.agree(&cl, vs)?;
            }
        }
    }
    Ok(())
}

// Inner inverses with prescribed ideals.

fn shape_projectors<R: IdealLattice>(r: &R, a: &R::Elem, x: &R::Elem, c: &IdealConstraints<R::Ideal>, shape: Shape) -> bool {
    let (ax, xa) = (r.mul(a, x), r.mul(x, a));
    let ps = || r.rho(&xa, c.right_prin.as_ref().unwrap(), &r.rann(a));
    let pt = || r.rho(&ax, &r.rp(a), c.right_ann.as_ref().unwrap());
    let psl = || r.rho(&ax, c.left_prin.as_ref().unwrap(), &r.lann(a));
    let ptl = || r.rho(&xa, &r.lp(a), c.left_ann.as_ref().unwrap());
    match shape {
        Shape::RightPair => pt() && ps(),
        Shape::LeftPair => psl() && ptl(),
        Shape::Principals => ps() && psl(),
        Shape::Annihilators => pt() && ptl(),
        Shape::S => ps(),
        Shape::T => pt(),
        Shape::SPrime => psl(),
        Shape::TPrime => ptl(),
    }
}

fn inner_shape<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>, shape: Shape) -> Step {
    let r = cx.r;
    let one = r.one();
    let bundles = sc.bundles(shape);
    for (ka, a) in sc.els.iter().enumerate() {
        for c in &bundles {
            let mut family = BTreeSet::new();
            if let Ok((l, m)) = shape_factors(r, a, c)? {
                for g in &sc.inner[ka] {
                    let left = r.sub(&one, &r.mul(g, a));
                    let right = r.sub(&one, &r.mul(a, g));
                    let base = r.mul3(&l, g, &m);
                    for y in &sc.els {
                        family.insert(r.add(&base, &r.mul3(&left, y, &right)));
                    }
                }
            }
            for x in &sc.els {
                let cl = [
                    ("x in a{1} with the prescribed ideals", has_prescribed(r, a, x, c, Mode::Inner)?),
                    ("x in a{1} with the projector identities", eq(r, a, x, &[1])? && shape_projectors(r, a, x, c, shape)),
                    ("x = L a1 M + (1 - a1 a) y (1 - a a1)", family.contains(x)),
                ];
                cx.agree(&cl, vars!["a" => r.render(a), "ideals" => render_bundle(r, c), "x" => r.render(x)])?;
            }
        }
    }
    Ok(())
}

fn inner_idempotent_ideals<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    let prp: BTreeSet<_> = sc.idem.iter().map(|p| r.rp(p)).collect();
    let prn: BTreeSet<_> = sc.idem.iter().map(|p| r.rann(p)).collect();
    let plp: BTreeSet<_> = sc.idem.iter().map(|p| r.lp(p)).collect();
    let pln: BTreeSet<_> = sc.idem.iter().map(|p| r.lann(p)).collect();
    for (ka, a) in sc.els.iter().enumerate() {
        if !sc.regular(ka) {
            continue;
        }
        for (side, i) in sc.right.iter().map(|i| (Side::Right, i)).chain(sc.left.iter().map(|i| (Side::Left, i))) {
            let (prin, ann) = match side {
                Side::Right => (r.rp(a), r.rann(a)),
                Side::Left => (r.lp(a), r.lann(a)),
            };
            let items = match side {
                Side::Right => [
                    ("R = S + rann(a) gives S = pR", !r.is_sum(i, &ann) || prp.contains(i)),
                    ("R = aR + T gives T = rann(q)", !r.is_sum(&prin, i) || prn.contains(i)),
                ],
                Side::Left => [
                    ("R = S' + lann(a) gives S' = Rp", !r.is_sum(i, &ann) || plp.contains(i)),
                    ("R = Ra + T' gives T' = lann(q)", !r.is_sum(&prin, i) || pln.contains(i)),
                ],
            };
            let bad = items.iter().find(|(_, v)| !v).map(|(n, _)| *n);
            cx.check(bad.is_none(), vars!["a" => r.render(a), "ideal" => r.render_ideal(i)], || String::from(bad.unwrap_or("")))?;
        }
    }
    Ok(())
}

fn inner_sets<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    let one = r.one();
    for (ka, a) in sc.els.iter().enumerate() {
        for g in &sc.inner[ka] {
            let (ga, ag) = (r.mul(g, a), r.mul(a, g));
            let (left, right) = (r.sub(&one, &ga), r.sub(&one, &ag));
            let coset: BTreeSet<_> = sc.els.iter().map(|y| r.add(g, &r.mul3(&left, y, &right))).collect();
            let (s, t, sl, tl) = (r.rp(&ga), r.rann(&ag), r.lp(&ag), r.lann(&ga));
            let bundles = [
                (IdealConstraints::right(s.clone(), t.clone()), true),
                (IdealConstraints::left(sl.clone(), tl.clone()), true),
                (IdealConstraints::principals(s.clone(), sl.clone()), true),
                (IdealConstraints::annihilators(t.clone(), tl.clone()), true),
                (IdealConstraints::only_s(s), false),
                (IdealConstraints::only_t(t), false),
                (IdealConstraints::only_s_left(sl), false),
                (IdealConstraints::only_t_left(tl), false),
            ];
            for (c, equal) in &bundles {
                let set: BTreeSet<_> = prescribed_set(r, a, c, Mode::Inner)?.into_iter().collect();
                let vs = vars!["a" => r.render(a), "a1" => r.render(g), "ideals" => render_bundle(r, c)];
                if !*equal {
                    cx.literal("of the one-ideal solution-set items as equalities", coset == set, vs);
                }
                let ok = if *equal { coset == set } else { coset.is_subset(&set) };
                cx.check(ok, vs, || {
                    String::from(if *equal { "the coset equals the constrained set" } else { "the coset lies in the constrained set" })
                })?;
            }
        }
    }
    Ok(())
}

// Outer inverses with prescribed ideals.

fn outer_pair_unique<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for shape in [Shape::RightPair, Shape::LeftPair] {
            for c in sc.bundles(shape) {
                let xs = prescribed_set(r, a, &c, Mode::Outer)?;
                let mut bad = if xs.len() > 1 { Some("uniqueness") } else { None };
                if let Some(x) = xs.first() {
                    let (ax, xa) = (r.mul(a, x), r.mul(x, a));
                    let ok = match shape {
                        Shape::RightPair => {
                            let (s, t) = (c.right_prin.as_ref().unwrap(), c.right_ann.as_ref().unwrap());
                            r.rho(&ax, &r.mul_ideal(a, s), t) && r.rho(&xa, s, &preimage_brute(r, sc, a, t))
                        }
                        _ => {
                            let (s, t) = (c.left_prin.as_ref().unwrap(), c.left_ann.as_ref().unwrap());
                            r.rho(&xa, &r.mul_ideal(a, s), t) && r.rho(&ax, s, &preimage_brute(r, sc, a, t))
                        }
                    };
                    if !ok {
                        bad = Some("projector identities of the prescribed outer inverse");
                    }
                }
                cx.check(bad.is_none(), vars!["a" => r.render(a), "ideals" => render_bundle(r, &c)], || {
                    String::from(bad.unwrap_or(""))
                })?;
            }
        }
    }
    Ok(())
}

fn outer_rightpair_existence<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    let one = r.one();
    for a in &sc.els {
        let rn = r.rann(a);
        for c in sc.bundles(Shape::RightPair) {
            let (s, t) = (c.right_prin.as_ref().unwrap(), c.right_ann.as_ref().unwrap());
            let es = sc.elems_of(r, s)?;
            let et = sc.elems_of(r, t)?;
            let a_s = r.mul_ideal(a, s);
            let triv = r.meets_trivially(&rn, s);
            let c2 = triv && es.iter().any(|x| r.rho(&r.mul(a, x), &a_s, t));
            let c4 = es.iter().any(|x| {
                es.iter().all(|v| r.mul3(x, a, v) == *v)
                    && r.ideal_contains(t, &r.sub(&one, &r.mul(a, x)))
                    && et.iter().all(|v| r.is_zero(&r.mul(x, v)))
            });
            let cl = [
                ("an outer inverse with xR = S, rann(x) = T exists", !prescribed_set(r, a, &c, Mode::Outer)?.is_empty()),
                ("x in S with phi_ax = rho_{aS,T}, rann(a) meets S trivially", c2),
                ("R = aS + T directly, rann(a) meets S trivially", r.is_sum(&a_s, t) && triv),
                ("x in S with xas = s on S, 1 - ax in T, xT = 0", c4),
            ];
            cx.agree(&cl, vars!["a" => r.render(a), "ideals" => render_bundle(r, &c)])?;
        }
    }
    Ok(())
}

fn outer_leftpair_existence<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    let one = r.one();
    for a in &sc.els {
        let ln = r.lann(a);
        for c in sc.bundles(Shape::LeftPair) {
            let (s, t) = (c.left_prin.as_ref().unwrap(), c.left_ann.as_ref().unwrap());
            let es = sc.elems_of(r, s)?;
            let et = sc.elems_of(r, t)?;
            let s_a = r.mul_ideal(a, s);
            let triv = r.meets_trivially(&ln, s);
            let c2 = triv && es.iter().any(|x| r.rho(&r.mul(x, a), &s_a, t));
            let c4 = es.iter().any(|x| {
                es.iter().all(|v| r.mul3(v, a, x) == *v)
                    && r.ideal_contains(t, &r.sub(&one, &r.mul(x, a)))
                    && et.iter().all(|v| r.is_zero(&r.mul(v, x)))
            });
            let cl = [
                ("an outer inverse with Rx = S', lann(x) = T' exists", !prescribed_set(r, a, &c, Mode::Outer)?.is_empty()),
                ("x in S' with _xaphi = rho_{S'a,T'}, lann(a) meets S' trivially", c2),
                ("R = S'a + T' directly, lann(a) meets S' trivially", r.is_sum(&s_a, t) && triv),
                ("x in S' with sax = s on S', 1 - xa in T', T'x = 0", c4),
            ];
            cx.agree(&cl, vars!["a" => r.render(a), "ideals" => render_bundle(r, &c)])?;
        }
    }
    Ok(())
}

fn outer_principals_existence<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for c in sc.bundles(Shape::Principals) {
            let (s, sl) = (c.right_prin.as_ref().unwrap(), c.left_prin.as_ref().unwrap());
            let (rann_sl, lann_s) = (r.ideal_annihilator(sl), r.ideal_annihilator(s));
            let (a_s, sl_a) = (r.mul_ideal(a, s), r.mul_ideal(a, sl));
            let es = sc.elems_of(r, s)?;
            let esl = sc.elems_of(r, sl)?;
            let both: Vec<_> = es.iter().filter(|x| r.ideal_contains(sl, x)).cloned().collect();
            let c3 = both.iter().any(|x| {
                es.iter().all(|v| r.mul3(x, a, v) == *v) && esl.iter().all(|v| r.mul3(v, a, x) == *v)
            });
            let c4 = both.iter().any(|x| {
                r.rho(&r.mul(a, x), &a_s, &rann_sl) && r.rho(&r.mul(x, a), &sl_a, &lann_s)
            });
            let xs = prescribed_set(r, a, &c, Mode::Outer)?;
            let via_right = prescribed_set(r, a, &IdealConstraints::right(s.clone(), rann_sl.clone()), Mode::Outer)?;
            let via_left = prescribed_set(r, a, &IdealConstraints::left(sl.clone(), lann_s.clone()), Mode::Outer)?;
            let vs = vars!["a" => r.render(a), "ideals" => render_bundle(r, &c)];
            let same = xs.len() <= 1 && (xs.is_empty() || (xs == via_right && xs == via_left));
            cx.check(same, vs, || {
                format!(
                    "unique and equal to the pair inverses: {} vs {} vs {}",
                    render_set(r, &xs),
                    render_set(r, &via_right),
                    render_set(r, &via_left)
                )
            })?;
            let cl = [
                ("an outer inverse with xR = S, Rx = S' exists", !xs.is_empty()),
                ("R = aS + rann(S'), R = S'a + lann(S) directly", r.is_sum(&a_s, &rann_sl) && r.is_sum(&sl_a, &lann_s)),
                ("x in S and S' with xas = s on S, sax = s on S'", c3),
                ("x in S and S' with the two projector identities", c4),
            ];
            cx.agree(&cl, vs)?;
        }
    }
    Ok(())
}

fn outer_annihilators_existence<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    let one = r.one();
    for a in &sc.els {
        let (rn, ln) = (r.rann(a), r.lann(a));
        for c in sc.bundles(Shape::Annihilators) {
            let (t, tl) = (c.right_ann.as_ref().unwrap(), c.left_ann.as_ref().unwrap());
            let et = sc.elems_of(r, t)?;
            let etl = sc.elems_of(r, tl)?;
            let mut found = 0usize;
            for x in &sc.els {
                let (ax, xa) = (r.mul(a, x), r.mul(x, a));
                let def = has_prescribed(r, a, x, &c, Mode::Outer)?;
                found += usize::from(def);
                let base = r.rho(&ax, &r.rp(&ax), t) && r.rho(&xa, &r.lp(&xa), tl);
                let c6 = r.ideal_contains(t, &r.sub(&one, &ax))
                    && et.iter().all(|v| r.is_zero(&r.mul(x, v)))
                    && r.ideal_contains(tl, &r.sub(&one, &xa))
                    && etl.iter().all(|v| r.is_zero(&r.mul(v, x)));
                let cl = [
                    ("x in a{2}, rann(x) = T, lann(x) = T'", def),
                    ("projectors, rann(a) meets xR trivially", base && r.meets_trivially(&rn, &r.rp(x))),
                    ("projectors, lann(a) meets Rx trivially", base && r.meets_trivially(&ln, &r.lp(x))),
                    ("projectors, T in rann(x)", base && r.le(t, &r.rann(x))),
                    ("projectors, T' in lann(x)", base && r.le(tl, &r.lann(x))),
                    ("1 - ax in T, xT = 0, 1 - xa in T', T'x = 0", c6),
                ];
                cx.agree(&cl, vars!["a" => r.render(a), "ideals" => render_bundle(r, &c), "x" => r.render(x)])?;
            }
            cx.check(found <= 1, vars!["a" => r.render(a), "ideals" => render_bundle(r, &c)], || String::from("uniqueness"))?;
        }
    }
    Ok(())
}

fn mitsch_exact<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for y in &sc.els {
        for z in &sc.els {
            let ok = mitsch_leq(r, y, z)? == mitsch_leq_brute(r, y, z)?;
            cx.check(ok, vars!["y" => r.render(y), "z" => r.render(z)], || String::from("solver and brute force disagree"))?;
        }
    }
    Ok(())
}

/// The sets `Y` and `Z` of a pair shape, by definition.
fn mitsch_sets<R: IdealLattice>(
    r: &R,
    sc: &Scope<R>,
    a: &R::Elem,
    c: &IdealConstraints<R::Ideal>,
    shape: Shape,
) -> Result<(Vec<R::Elem>, Vec<R::Elem>)> {
    let outer: Vec<R::Elem> = enumerate_inverse_set(r, a, &EquationSet::of(&[2]))?;
    let (s, t, sl, tl) = (&c.right_prin, &c.right_ann, &c.left_prin, &c.left_ann);
    let in_y = |y: &R::Elem| match shape {
        Shape::Principals => r.ideal_contains(s.as_ref().unwrap(), y) && r.ideal_contains(sl.as_ref().unwrap(), y),
        Shape::RightPair => r.ideal_contains(s.as_ref().unwrap(), y) && r.le(t.as_ref().unwrap(), &r.rann(y)),
        Shape::LeftPair => r.ideal_contains(sl.as_ref().unwrap(), y) && r.le(tl.as_ref().unwrap(), &r.lann(y)),
        _ => r.le(t.as_ref().unwrap(), &r.rann(y)) && r.le(tl.as_ref().unwrap(), &r.lann(y)),
    };
    let in_z = |z: &R::Elem| match shape {
        Shape::Principals => r.le(s.as_ref().unwrap(), &r.rp(z)) && r.le(sl.as_ref().unwrap(), &r.lp(z)),
        Shape::RightPair => r.le(s.as_ref().unwrap(), &r.rp(z)) && r.le(&r.rann(z), t.as_ref().unwrap()),
        Shape::LeftPair => r.le(sl.as_ref().unwrap(), &r.lp(z)) && r.le(&r.lann(z), tl.as_ref().unwrap()),
        _ => r.le(&r.rann(z), t.as_ref().unwrap()) && r.le(&r.lann(z), tl.as_ref().unwrap()),
    };
    let _ = sc;
    Ok((outer.iter().filter(|y| in_y(y)).cloned().collect(), outer.iter().filter(|z| in_z(z)).cloned().collect()))
}

fn mitsch_yz<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for shape in PAIRS {
            for c in sc.bundles(shape) {
                let (ys, zs) = mitsch_sets(r, sc, a, &c, shape)?;
                for y in &ys {
                    for z in &zs {
                        let ok = mitsch_leq(r, y, z)?;
                        cx.check(
                            ok,
                            vars!["a" => r.render(a), "ideals" => render_bundle(r, &c), "y" => r.render(y), "z" => r.render(z)],
                            || String::from("y is not below z"),
                        )?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn mitsch_theorem<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for shape in PAIRS {
            for c in sc.bundles(shape) {
                let (ys, zs) = mitsch_sets(r, sc, a, &c, shape)?;
                let pres = prescribed_set(r, a, &c, Mode::Outer)?;
                let rep = mitsch_extremes(r, a, &c)?;
                let vs = vars!["a" => r.render(a), "ideals" => render_bundle(r, &c)];
                let lib_ok = rep.y_set == ys && rep.z_set == zs && rep.prescribed == unique(&pres);
                cx.check(lib_ok, vs, || String::from("mitsch_extremes disagrees with the definitions"))?;
                for x in &sc.els {
                    let mut extreme = ys.contains(x) && zs.contains(x);
                    if extreme {
                        for y in &ys {
                            extreme &= mitsch_leq(r, y, x)?;
                        }
                        for z in &zs {
                            extreme &= mitsch_leq(r, x, z)?;
                        }
                    }
                    let cl = [
                        ("x is the prescribed outer inverse", pres.contains(x)),
                        ("x in Y and Z", ys.contains(x) && zs.contains(x)),
                        ("x = max Y = min Z", extreme),
                    ];
                    cx.agree(&cl, vars!["a" => r.render(a), "ideals" => render_bundle(r, &c), "x" => r.render(x)])?;
                }
            }
        }
    }
    Ok(())
}

// Reflexive inverses with prescribed ideals.

fn reflexive_pairs<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for shape in PAIRS {
        let bundles = sc.bundles(shape);
        for a in &sc.els {
            for c in &bundles {
                for x in &sc.els {
                    let rep = reflexive_characterize(r, a, x, c)?;
                    let vs = vars!["a" => r.render(a), "ideals" => render_bundle(r, c), "x" => r.render(x)];
                    let def = rep.clauses[0].1;
                    let (ax, xa) = (r.mul(a, x), r.mul(x, a));
                    let inner = eq(r, a, x, &[1])?;
                    match shape {
                        Shape::LeftPair => {
                            let (s, t) = (c.left_prin.as_ref().unwrap(), c.left_ann.as_ref().unwrap());
                            let m = inner && r.lp(&ax) == *s && r.lann(&ax) == *t;
                            cx.literal("lann(ax) = T' of the left-pair items", (m && r.ideal_contains(s, x)) == def, vs);
                        }
                        Shape::Annihilators => {
                            let (t, tl) = (c.right_ann.as_ref().unwrap(), c.left_ann.as_ref().unwrap());
                            let m = inner && r.rann(&ax) == *t && r.lann(&ax) == *tl;
                            cx.literal("lann(ax) = T' of the annihilator items", (m && r.le(t, &r.rann(x))) == def, vs);
                        }
                        _ => {}
                    }
                    let _ = xa;
                    cx.agree(&rep.clauses, vs)?;
                }
            }
        }
    }
    Ok(())
}

fn reflexive_single<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for (ka, a) in sc.els.iter().enumerate() {
        let inner_set = &sc.inner[ka];
        let (rp, rn, lp, ln) = (r.rp(a), r.rann(a), r.lp(a), r.lann(a));
        for (side, i) in sc.right.iter().map(|i| (Side::Right, i)).chain(sc.left.iter().map(|i| (Side::Left, i))) {
            // Principal and annihilator reading of the one ideal.
            let ann_i = r.ideal_annihilator(i);
            let unit_prin = match side {
                Side::Right => r.unit(i, &rn),
                Side::Left => r.unit(i, &ln),
            };
            let unit_ann = match side {
                Side::Right => r.unit(&rp, i),
                Side::Left => r.unit(&lp, i),
            };
            for x in &sc.els {
                let (ax, xa) = (r.mul(a, x), r.mul(x, a));
                let refl = eq(r, a, x, &[1, 2])?;
                let inner = eq(r, a, x, &[1])?;
                let vs = vars!["a" => r.render(a), "ideal" => r.render_ideal(i), "x" => r.render(x)];
                let reach = |f: &dyn Fn(&R::Elem) -> R::Elem| inner_set.iter().any(|g| f(g) == *x);
                let (prin, ann) = match side {
                    Side::Right => {
                        let p = r.rho(&xa, i, &rn);
                        let prin = [
                            ("x in a{1,2} with xR = S", refl && r.rp(x) == *i),
                            ("phi_xa = rho_{S, rann a}, x in S", p && r.ideal_contains(i, x)),
                            ("phi_xa = rho_{S, rann a}, lann(S) in lann(x)", p && r.le(&ann_i, &r.lann(x))),
                            ("a{1}, xaR = S, x in S", inner && r.rp(&xa) == *i && r.ideal_contains(i, x)),
                            ("a{1}, xaR = S, lann(S) in lann(x)", inner && r.rp(&xa) == *i && r.le(&ann_i, &r.lann(x))),
                            ("x = rho_{S, rann a}(1) a1", unit_prin.as_ref().is_some_and(|u| reach(&|g| r.mul(u, g)))),
                        ];
                        let q = r.rho(&ax, &rp, i);
                        let ann = [
                            ("x in a{1,2} with rann(x) = T", refl && r.rann(x) == *i),
                            ("phi_ax = rho_{aR, T}, T in rann(x)", q && r.le(i, &r.rann(x))),
                            ("a{1}, rann(ax) = T, T in rann(x)", inner && r.rann(&ax) == *i && r.le(i, &r.rann(x))),
                            ("x = a1 rho_{aR, T}(1)", unit_ann.as_ref().is_some_and(|u| reach(&|g| r.mul(g, u)))),
                        ];
                        (disagreement(&prin), disagreement(&ann))
                    }
                    Side::Left => {
                        let p = r.rho(&ax, i, &ln);
                        let prin = [
                            ("x in a{1,2} with Rx = S'", refl && r.lp(x) == *i),
                            ("_axphi = rho_{S', lann a}, x in S'", p && r.ideal_contains(i, x)),
                            ("_axphi = rho_{S', lann a}, rann(S') in rann(x)", p && r.le(&ann_i, &r.rann(x))),
                            ("a{1}, Rax = S', x in S'", inner && r.lp(&ax) == *i && r.ideal_contains(i, x)),
                            ("a{1}, Rax = S', rann(S') in rann(x)", inner && r.lp(&ax) == *i && r.le(&ann_i, &r.rann(x))),
                            ("x = a1 rho_{S', lann a}(1)", unit_prin.as_ref().is_some_and(|u| reach(&|g| r.mul(g, u)))),
                        ];
                        let q = r.rho(&xa, &lp, i);
                        let ann = [
                            ("x in a{1,2} with lann(x) = T'", refl && r.lann(x) == *i),
                            ("_xaphi = rho_{Ra, T'}, T' in lann(x)", q && r.le(i, &r.lann(x))),
                            ("a{1}, lann(xa) = T', T' in lann(x)", inner && r.lann(&xa) == *i && r.le(i, &r.lann(x))),
                            ("x = rho_{Ra, T'}(1) a1", unit_ann.as_ref().is_some_and(|u| reach(&|g| r.mul(u, g)))),
                        ];
                        cx.literal(
                            "lann(ax) = T' of the single left-annihilator item",
                            (inner && r.lann(&ax) == *i && r.le(i, &r.lann(x))) == ann[0].1,
                            vs,
                        );
                        (disagreement(&prin), disagreement(&ann))
                    }
                };
                let d = prin.or(ann);
                let ok = d.is_none();
                cx.check(ok, vs, || d.unwrap_or_default())?;
            }
        }
    }
    Ok(())
}

fn group_isomorphism<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for shape in [Shape::RightPair, Shape::LeftPair] {
            for c in sc.bundles(shape) {
                let (s, t, q) = match shape {
                    Shape::RightPair => {
                        let (s, t) = (c.right_prin.clone().unwrap(), c.right_ann.clone().unwrap());
                        if !r.is_sum(&s, &r.rann(a)) {
                            continue;
                        }
                        let Some(q) = r.unit(&r.rp(a), &t) else { continue };
                        (s, t, q)
                    }
                    _ => {
                        let (s, t) = (c.left_prin.clone().unwrap(), c.left_ann.clone().unwrap());
                        if !r.is_sum(&s, &r.lann(a)) {
                            continue;
                        }
                        let Some(q) = r.unit(&r.lp(a), &t) else { continue };
                        (s, t, q)
                    }
                };
                let mut hits = 0usize;
                for b in &sc.els {
                    let c1 = r.ideal_contains(&s, b)
                        && match shape {
                            Shape::RightPair => r.mul(a, b) == q,
                            _ => r.mul(b, a) == q,
                        };
                    hits += usize::from(c1);
                    let cl = [
                        ("b in S with ab = rho(1)", c1),
                        ("psi = phi_b", psi_equals(r, a, b, &s, &t)? == Some(true)),
                        ("b is the reflexive inverse", has_prescribed(r, a, b, &c, Mode::Reflexive)?),
                    ];
                    cx.agree(&cl, vars!["a" => r.render(a), "ideals" => render_bundle(r, &c), "b" => r.render(b)])?;
                }
                cx.check(hits == 1, vars!["a" => r.render(a), "ideals" => render_bundle(r, &c)], || {
                    format!("{hits} elements b in S with ab = rho(1)")
                })?;
            }
        }
    }
    Ok(())
}

fn reflexive_existence<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>, shape: Shape) -> Step {
    let r = cx.r;
    for a in &sc.els {
        let (rp, rn, lp, ln) = (r.rp(a), r.rann(a), r.lp(a), r.lann(a));
        for c in sc.bundles(shape) {
            let exists = !prescribed_set(r, a, &c, Mode::Reflexive)?.is_empty();
            let cl: Vec<(&str, bool)> = match shape {
                Shape::RightPair => {
                    let (s, t) = (c.right_prin.as_ref().unwrap(), c.right_ann.as_ref().unwrap());
                    let a_s = r.mul_ideal(a, s);
                    let side = r.meets_trivially(&rn, s) && r.meets_trivially(&rp, t);
                    let c4 = side && sc.elems_of(r, s)?.iter().any(|x| r.rho(&r.mul(a, x), &a_s, t));
                    alloc::vec![
                        ("a reflexive inverse with xR = S, rann(x) = T exists", exists),
                        ("R = aR + T and R = S + rann(a) directly", r.is_sum(&rp, t) && r.is_sum(s, &rn)),
                        ("R = aS + T directly, rann(a) meets S and aR meets T trivially", r.is_sum(&a_s, t) && side),
                        ("x in S with phi_ax = rho_{aS,T}, same trivial meets", c4),
                    ]
                }
                Shape::LeftPair => {
                    let (s, t) = (c.left_prin.as_ref().unwrap(), c.left_ann.as_ref().unwrap());
                    let s_a = r.mul_ideal(a, s);
                    let side = r.meets_trivially(&ln, s) && r.meets_trivially(&lp, t);
                    let c4 = side && sc.elems_of(r, s)?.iter().any(|x| r.rho(&r.mul(x, a), &s_a, t));
                    alloc::vec![
                        ("a reflexive inverse with Rx = S', lann(x) = T' exists", exists),
                        ("R = Ra + T' and R = S' + lann(a) directly", r.is_sum(&lp, t) && r.is_sum(s, &ln)),
                        ("R = S'a + T' directly, lann(a) meets S' and Ra meets T' trivially", r.is_sum(&s_a, t) && side),
                        ("x in S' with _xaphi = rho_{S'a,T'}, same trivial meets", c4),
                    ]
                }
                _ => {
                    let (s, sl) = (c.right_prin.as_ref().unwrap(), c.left_prin.as_ref().unwrap());
                    let (rann_sl, lann_s) = (r.ideal_annihilator(sl), r.ideal_annihilator(s));
                    let (a_s, sl_a) = (r.mul_ideal(a, s), r.mul_ideal(a, sl));
                    let meets = r.meets_trivially(&rp, &rann_sl) && r.meets_trivially(&lp, &lann_s);
                    let both: Vec<_> = sc.elems_of(r, s)?.into_iter().filter(|x| r.ideal_contains(sl, x)).collect();
                    let c4 = meets
                        && both.iter().any(|x| r.rho(&r.mul(a, x), &a_s, &rann_sl) && r.rho(&r.mul(x, a), &sl_a, &lann_s));
                    alloc::vec![
                        ("a reflexive inverse with xR = S, Rx = S' exists", exists),
                        (
                            "four direct sums with aR, S, Ra, S'",
                            r.is_sum(&rp, &rann_sl) && r.is_sum(s, &rn) && r.is_sum(&lp, &lann_s) && r.is_sum(sl, &ln),
                        ),
                        ("R = aS + rann(S'), R = S'a + lann(S) directly, with trivial meets", r.is_sum(&a_s, &rann_sl) && r.is_sum(&sl_a, &lann_s) && meets),
                        ("x in S and S' with both projector identities and trivial meets", c4),
                    ]
                }
            };
            cx.agree(&cl, vars!["a" => r.render(a), "ideals" => render_bundle(r, &c)])?;
        }
    }
    Ok(())
}

fn idempotent_generated<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    let prp: BTreeSet<_> = sc.idem.iter().map(|p| r.rp(p)).collect();
    let prn: BTreeSet<_> = sc.idem.iter().map(|p| r.rann(p)).collect();
    let plp: BTreeSet<_> = sc.idem.iter().map(|p| r.lp(p)).collect();
    let pln: BTreeSet<_> = sc.idem.iter().map(|p| r.lann(p)).collect();
    for a in &sc.els {
        for shape in PAIRS {
            for c in sc.bundles(shape) {
                if prescribed_set(r, a, &c, Mode::Outer)?.is_empty() {
                    continue;
                }
                let gen = |v: &Option<R::Ideal>, set: &BTreeSet<R::Ideal>| v.as_ref().map_or(true, |i| set.contains(i));
                let ok = gen(&c.right_prin, &prp) && gen(&c.right_ann, &prn) && gen(&c.left_prin, &plp) && gen(&c.left_ann, &pln);
                cx.check(ok, vars!["a" => r.render(a), "ideals" => render_bundle(r, &c)], || {
                    String::from("a prescribed ideal is not generated by an idempotent")
                })?;
            }
        }
    }
    Ok(())
}

// Special inverses.

fn star_classes<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for cls in StarClass::ALL {
        for a in &sc.els {
            for x in &sc.els {
                let m = star_class_member(r, a, x, cls)?;
                let ok = m.by_equations == eq(r, a, x, &cls.equations().numbered())? && m.consistent();
                cx.check(ok, vars!["class" => String::from(cls.tag()), "a" => r.render(a), "x" => r.render(x)], || {
                    let bad: Vec<String> = m.by_projectors.iter().filter(|(_, v)| *v != m.by_equations).map(|(n, _)| n.clone()).collect();
                    format!("equations give {} but [{}] differ", m.by_equations, bad.join("; "))
                })?;
            }
        }
    }
    Ok(())
}

fn star_class_sets<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for cls in StarClass::ALL {
        let mut all_equal = true;
        for a in &sc.els {
            let set = star_class_set(r, a, cls)?;
            let brute = enumerate_inverse_set(r, a, &cls.equations())?;
            for (name, form) in star_class_ideal_forms(r, a, cls)? {
                let equal = form == set;
                all_equal &= equal;
                let ok = set == brute && if cls.sufficient_only() { form.iter().all(|x| set.contains(x)) } else { equal };
                cx.check(ok, vars!["class" => String::from(cls.tag()), "a" => r.render(a)], || {
                    format!("form '{name}' gives {} but the class is {}", render_set(r, &form), render_set(r, &brute))
                })?;
            }
        }
        if cls.sufficient_only() {
            cx.note(format!(
                "{}: ideal forms {} the class on every element",
                cls.tag(),
                if all_equal { "equal" } else { "are strictly smaller than" }
            ));
        }
    }
    Ok(())
}

fn weighted_mp_check<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for e in &sc.weights {
        for f in &sc.weights {
            for a in &sc.els {
                for x in &sc.els {
                    let g = weighted_mp_grid(r, a, x, e, f)?;
                    let ok_target = g.target == is_weighted_mp(r, a, x, e, f)?;
                    let vs = vars!["e" => r.render(e), "f" => r.render(f), "a" => r.render(a), "x" => r.render(x)];
                    cx.check(ok_target, vs, || String::from("grid target differs from the definition"))?;
                    cx.grid(&g, vs)?;
                }
            }
        }
    }
    Ok(())
}

fn weighted_core_check<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>, kind: WeightedCore) -> Step {
    let r = cx.r;
    for w in &sc.weights {
        let wi = two_sided_inverse(r, &sc.els, w).unwrap();
        for a in &sc.els {
            let s = r.star(a)?;
            for x in &sc.els {
                let def = eq(r, a, x, &[1])?
                    && match kind {
                        WeightedCore::ECore => r.rp(x) == r.rp(a) && r.lp(x) == r.lp(&r.mul(&s, w)),
                        WeightedCore::FDualCore => r.rp(x) == r.rp(&r.mul(&wi, &s)) && r.lp(x) == r.lp(a),
                    };
                let g = weighted_core_grid(r, a, x, w, kind)?;
                let vs = vars!["weight" => r.render(w), "a" => r.render(a), "x" => r.render(x)];
                cx.check(g.target == def, vs, || String::from("grid target differs from the definition"))?;
                cx.grid(&g, vs)?;
            }
        }
    }
    Ok(())
}

/// `(b){1,2,3,6,7}` or `(b){1,2,4,8,9}` by enumeration.
fn core_brute<R: IdealLattice>(r: &R, b: &R::Elem, dual: bool) -> Result<Option<R::Elem>> {
    let eqs: &[u8] = if dual { &[1, 2, 4, 8, 9] } else { &[1, 2, 3, 6, 7] };
    Ok(unique(&enumerate_inverse_set(r, b, &EquationSet::of(eqs))?))
}

fn w_core_prop<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>, dual: bool) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for w in &sc.els {
            let aw = if dual { r.mul(w, a) } else { r.mul(a, w) };
            let cw = core_brute(r, &aw, dual)?;
            let (incl_a, incl_b) = if dual {
                (r.le(&r.lp(a), &r.lp(&aw)), r.le(&r.rann(&aw), &r.rann(a)))
            } else {
                (r.le(&r.rp(a), &r.rp(&aw)), r.le(&r.lann(&aw), &r.lann(a)))
            };
            let solved = if dual { v_dual_core(r, a, w)? } else { w_core(r, a, w)? };
            let mut brute = Vec::new();
            for x in &sc.els {
                let def = if dual { is_v_dual_core(r, a, x, w)? } else { is_w_core(r, a, x, w)? };
                if def {
                    brute.push(x.clone());
                }
                let is_c = cw.as_ref() == Some(x);
                let cl = [
                    ("x is the inverse by definition", def),
                    ("x is the core of the product, range inclusion", is_c && incl_a),
                    ("x is the core of the product, annihilator inclusion", is_c && incl_b),
                ];
                cx.agree(&cl, vars!["a" => r.render(a), "weight" => r.render(w), "x" => r.render(x)])?;
            }
            let ok = solved.as_ref().ok().cloned() == unique(&brute) && brute.len() <= 1;
            cx.check(ok, vars!["a" => r.render(a), "weight" => r.render(w)], || {
                format!("solver gives {} but brute force {}", opt_render(r, solved.as_ref().ok()), render_set(r, &brute))
            })?;
        }
    }
    Ok(())
}

fn w_core_grid_check<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>, dual: bool) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for w in &sc.els {
            for x in &sc.els {
                let vs = vars!["a" => r.render(a), "weight" => r.render(w), "x" => r.render(x)];
                let (g, def) = if dual {
                    (v_dual_core_grid(r, a, x, w)?, is_v_dual_core(r, a, x, w)?)
                } else {
                    let lit = w_core_grid(r, a, x, w, GridReading::Literal)?;
                    cx.literal("xa in place of xb in the w-core grid", lit.consistent(), vs);
                    (w_core_grid(r, a, x, w, GridReading::Corrected)?, is_w_core(r, a, x, w)?)
                };
                cx.check(g.target == def, vs, || String::from("grid target differs from the definition"))?;
                cx.grid(&g, vs)?;
            }
        }
    }
    Ok(())
}

fn one_sided_core_prop<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>, dual: bool) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for w in &sc.els {
            let (b, incl, eqs): (_, _, &[u8]) = if dual {
                let b = r.mul(w, a);
                let incl = r.le(&r.lp(a), &r.lp(&b));
                (b, incl, &[1, 4, 9])
            } else {
                let b = r.mul(a, w);
                let incl = r.le(&r.rp(a), &r.rp(&b));
                (b, incl, &[1, 3, 7])
            };
            let expected = if incl { enumerate_inverse_set(r, &b, &EquationSet::of(eqs))? } else { Vec::new() };
            let brute = brute_force_set(r, |x| if dual { is_left_v_dual_core(r, a, x, w) } else { is_right_w_core(r, a, x, w) })?;
            let found = if dual { left_v_dual_core(r, a, w)? } else { right_w_core(r, a, w)? };
            let ok = brute == expected
                && found.members.as_ref() == Some(&brute)
                && found.witness.is_some() == !brute.is_empty()
                && found.witness.as_ref().map_or(true, |x| brute.contains(x));
            cx.check(ok, vars!["a" => r.render(a), "weight" => r.render(w)], || {
                format!(
                    "definition {} vs product class {} vs solver witness {}",
                    render_set(r, &brute),
                    render_set(r, &expected),
                    opt_render(r, found.witness.as_ref())
                )
            })?;
        }
    }
    Ok(())
}

fn one_sided_core_grid<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>, dual: bool) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for w in &sc.els {
            for x in &sc.els {
                let vs = vars!["a" => r.render(a), "weight" => r.render(w), "x" => r.render(x)];
                let (g, lit, def) = if dual {
                    (
                        left_v_dual_core_grid(r, a, x, w, GridReading::Corrected)?,
                        left_v_dual_core_grid(r, a, x, w, GridReading::Literal)?,
                        is_left_v_dual_core(r, a, x, w)?,
                    )
                } else {
                    (
                        right_w_core_grid(r, a, x, w, GridReading::Corrected)?,
                        right_w_core_grid(r, a, x, w, GridReading::Literal)?,
                        is_right_w_core(r, a, x, w)?,
                    )
                };
                cx.literal(if dual { "of the left v-dual core grid" } else { "of the right w-core grid" }, lit.consistent(), vs);
                cx.check(g.target == def, vs, || String::from("grid target differs from the definition"))?;
                cx.grid(&g, vs)?;
            }
        }
    }
    Ok(())
}

fn triples<R: IdealLattice>(sc: &Scope<R>) -> impl Iterator<Item = (&R::Elem, &R::Elem, &R::Elem)> {
    sc.els.iter().flat_map(move |a| sc.els.iter().flat_map(move |b| sc.els.iter().map(move |c| (a, b, c))))
}

fn bc_closed_form<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    let one_eq = EquationSet::of(&[1]);
    for (a, b, c) in triples(sc) {
        let cab = r.mul3(c, a, b);
        for g in enumerate_inverse_set(r, &cab, &one_eq)? {
            for row in bc_closed_form_rows(r, a, b, c, &g)? {
                cx.agree(&row, vars!["a" => r.render(a), "b" => r.render(b), "c" => r.render(c), "(cab)^(1)" => r.render(&g)])?;
            }
        }
    }
    Ok(())
}

fn bc_invertible<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for (a, b, c) in triples(sc) {
        for flavor in [BcFlavor::RightHybrid, BcFlavor::LeftHybrid] {
            if !bc_invertibility_hypotheses(r, a, b, c, flavor) {
                continue;
            }
            let cab = r.mul3(c, a, b);
            let brute = prescribed_set(r, a, &bc_constraints(r, b, c, flavor), Mode::Outer)?;
            let inv = two_sided_inverse(r, &sc.els, &cab);
            let ok = inv.as_ref().is_some_and(|i| brute == [r.mul3(b, i, c)]);
            cx.check(
                ok,
                vars!["flavor" => String::from(flavor.as_str()), "a" => r.render(a), "b" => r.render(b), "c" => r.render(c)],
                || format!("cab invertible: {}, hybrid inverse {}", inv.is_some(), render_set(r, &brute)),
            )?;
        }
    }
    Ok(())
}

fn bc_equality<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for (a, b, c) in triples(sc) {
        for x in &sc.els {
            let cl = bc_equality_clauses(r, a, b, c, x)?;
            cx.agree(&cl, vars!["a" => r.render(a), "b" => r.render(b), "c" => r.render(c), "x" => r.render(x)])?;
        }
    }
    Ok(())
}

fn pq_djordjevic_wei<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for p in &sc.idem {
            for q in &sc.idem {
                let dw_rann = r.rann(p) == preimage_brute(r, sc, a, &r.rp(q));
                let dw_lann = r.lp(q) == preimage_brute(r, sc, a, &r.lann(p));
                for x in &sc.els {
                    let cl = djordjevic_wei_clauses(r, a, x, p, q)?;
                    let dw = is_djordjevic_wei(r, a, x, p, q)?;
                    let vs = vars!["a" => r.render(a), "p" => r.render(p), "q" => r.render(q), "x" => r.render(x)];
                    let ok = cl.first().map(|c| c.1) == Some(dw) && (!dw || (dw_rann && dw_lann));
                    cx.check(ok, vs, || String::from("definition or annihilator identity"))?;
                    cx.agree(&cl, vs)?;
                }
            }
        }
    }
    Ok(())
}

fn pq_image_kernel<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    let one = r.one();
    for a in &sc.els {
        for p in &sc.idem {
            let m = r.add(&r.sub(&one, p), &r.mul(a, p));
            let bd = two_sided_inverse(r, &sc.els, &m).map(|i| r.mul(p, &i));
            for q in &sc.idem {
                let c = IdealConstraints::right(r.rp(p), r.rp(q));
                let qb = r.sub(&one, q);
                for x in &sc.els {
                    let cl = [
                        ("x in a{2}, xR = pR, rann(x) = qR", has_prescribed(r, a, x, &c, Mode::Outer)?),
                        ("x is the Bott-Duffin (p, 1-q) inverse", is_bott_duffin_pq(r, a, x, p, &qb)),
                    ];
                    cx.agree(&cl, vars!["a" => r.render(a), "p" => r.render(p), "q" => r.render(q), "x" => r.render(x)])?;
                }
            }
            for x in &sc.els {
                let cl = [
                    ("x is the Bott-Duffin (p,p) inverse", is_bott_duffin_pq(r, a, x, p, p)),
                    ("x = p(1 - p + ap)^-1", bd.as_ref() == Some(x)),
                ];
                cx.agree(&cl, vars!["a" => r.render(a), "p" => r.render(p), "x" => r.render(x)])?;
            }
        }
    }
    Ok(())
}

fn pq_examples<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    let one = r.one();
    for a in &sc.els {
        let mut items: Vec<(&str, bool)> = Vec::new();
        if let Some((d, _)) = drazin(r, a)? {
            let p = r.mul(a, &d);
            let q = r.sub(&one, &p);
            items.push(("a^D is the (aa^D, 1 - aa^D) inverse", is_djordjevic_wei(r, a, &d, &p, &q)?));
        }
        if r.has_involution() {
            if let Some(m) = unique(&enumerate_inverse_set(r, a, &EquationSet::of(&[1, 2, 3, 4]))?) {
                let (p, q) = (r.mul(&m, a), r.sub(&one, &r.mul(a, &m)));
                items.push(("a+ is the (a+a, 1 - aa+) inverse", is_djordjevic_wei(r, a, &m, &p, &q)?));
                items.push(("a+ is reflexive", eq(r, a, &m, &[1, 2])?));
            }
            for dual in [false, true] {
                if let Some(c) = core_brute(r, a, dual)? {
                    let (p, q) = (r.mul(&c, a), r.sub(&one, &r.mul(a, &c)));
                    items.push((
                        if dual { "the dual core inverse is its (xa, 1 - ax) inverse" } else { "the core inverse is its (xa, 1 - ax) inverse" },
                        is_djordjevic_wei(r, a, &c, &p, &q)?,
                    ));
                }
            }
        }
        let bad = items.iter().find(|(_, v)| !v).map(|(n, _)| *n);
        cx.check(bad.is_none(), vars!["a" => r.render(a)], || String::from(bad.unwrap_or("")))?;
    }
    Ok(())
}

fn reflexive_idempotents<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        let refl = !enumerate_inverse_set(r, a, &EquationSet::of(&[1, 2]))?.is_empty();
        let has = |f: &dyn Fn(&R::Elem) -> bool, g: &dyn Fn(&R::Elem) -> bool| sc.idem.iter().any(|p| f(p)) && sc.idem.iter().any(|q| g(q));
        let cl = [
            ("a{1,2} is nonempty", refl),
            ("rann(a) = rann(p), aR = qR", has(&|p| r.rann(a) == r.rann(p), &|q| r.rp(a) == r.rp(q))),
            ("Ra = Rp, lann(a) = lann(q)", has(&|p| r.lp(a) == r.lp(p), &|q| r.lann(a) == r.lann(q))),
            ("Ra = Rp, aR = qR", has(&|p| r.lp(a) == r.lp(p), &|q| r.rp(a) == r.rp(q))),
        ];
        cx.agree(&cl, vars!["a" => r.render(a)])?;
    }
    Ok(())
}

// Solver agreement with brute force.

fn agree_inner<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for (ka, a) in sc.els.iter().enumerate() {
        let rep = inner_inverse(r, a)?;
        let found = rep.result().cloned().or_else(|| r.inner_inverse(a));
        let ok = match &found {
            Some(x) => sc.inner[ka].contains(x),
            None => sc.inner[ka].is_empty(),
        };
        cx.check(ok, vars!["a" => r.render(a)], || format!("solver gives {}", opt_render(r, found.as_ref())))?;
    }
    Ok(())
}

fn agree_group<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        let brute = enumerate_inverse_set(r, a, &EquationSet::of(&[1, 2, 5]))?;
        let got = group_inverse(r, a)?.result().cloned();
        let ok = brute.len() <= 1 && got == unique(&brute);
        cx.check(ok, vars!["a" => r.render(a)], || {
            format!("solver {} vs brute force {}", opt_render(r, got.as_ref()), render_set(r, &brute))
        })?;
    }
    Ok(())
}

fn agree_drazin<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        let mut brute = None;
        for k in 1..=r.drazin_bound() as u32 {
            let xs = enumerate_inverse_set(r, a, &EquationSet::of(&[2, 5]).with_pow_left(k))?;
            if let Some(x) = xs.first() {
                brute = Some((x.clone(), k, xs.len()));
                break;
            }
        }
        let got = drazin(r, a)?;
        let ok = match (&brute, &got) {
            (Some((x, k, n)), Some((y, l))) => *n == 1 && x == y && k == l,
            (None, None) => true,
            _ => false,
        };
        cx.check(ok, vars!["a" => r.render(a)], || {
            format!(
                "solver {} vs brute force {}",
                got.as_ref().map_or(String::from("none"), |(y, l)| format!("{} (index {l})", r.render(y))),
                brute.as_ref().map_or(String::from("none"), |(x, k, _)| format!("{} (index {k})", r.render(x)))
            )
        })?;
    }
    Ok(())
}

fn agree_mp<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        let brute = enumerate_inverse_set(r, a, &EquationSet::of(&[1, 2, 3, 4]))?;
        let (m1, m2) = (moore_penrose(r, a)?, moore_penrose_via_ideals(r, a)?);
        let ok = brute.len() <= 1 && m1 == unique(&brute) && m2 == m1;
        cx.check(ok, vars!["a" => r.render(a)], || {
            format!(
                "direct {} vs ideals {} vs brute force {}",
                opt_render(r, m1.as_ref()),
                opt_render(r, m2.as_ref()),
                render_set(r, &brute)
            )
        })?;
    }
    Ok(())
}

fn agree_core<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        let (c, d) = (core_inverse(r, a)?, dual_core_inverse(r, a)?);
        let (bc, bd) = (core_brute(r, a, false)?, core_brute(r, a, true)?);
        cx.check(c == bc && d == bd, vars!["a" => r.render(a)], || {
            format!("core {} vs {}, dual core {} vs {}", opt_render(r, c.as_ref()), opt_render(r, bc.as_ref()), opt_render(r, d.as_ref()), opt_render(r, bd.as_ref()))
        })?;
    }
    Ok(())
}

fn agree_prescribed<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for shape in PAIRS {
            for c in sc.bundles(shape) {
                for (mode, reflexive) in [(Mode::Outer, false), (Mode::Reflexive, true)] {
                    let brute = prescribed_set(r, a, &c, mode)?;
                    let got = prescribed_inverse(r, a, &c, reflexive)?;
                    let conds = crate::prescribed::existence_conditions(r, a, &c, reflexive)?;
                    let conds_ok = shape == Shape::Annihilators || conds.iter().all(|(_, v)| *v) == !brute.is_empty();
                    let ok = brute.len() <= 1 && got.as_ref().ok().cloned() == unique(&brute) && conds_ok;
                    cx.check(
                        ok,
                        vars!["a" => r.render(a), "ideals" => render_bundle(r, &c), "mode" => String::from(if reflexive { "reflexive" } else { "outer" })],
                        || format!("solver {} vs brute force {}, conditions exact: {conds_ok}", opt_render(r, got.as_ref().ok()), render_set(r, &brute)),
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn agree_family<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for shape in Shape::ALL {
            for c in sc.bundles(shape) {
                let brute = prescribed_set(r, a, &c, Mode::Inner)?;
                let fam = one_inverse_family(r, a, &c)?;
                let members = match &fam {
                    Ok(f) => f.members.clone().unwrap_or_default(),
                    Err(_) => Vec::new(),
                };
                cx.check(members == brute, vars!["a" => r.render(a), "ideals" => render_bundle(r, &c)], || {
                    format!("family {} vs brute force {}", render_set(r, &members), render_set(r, &brute))
                })?;
            }
        }
    }
    Ok(())
}

fn agree_weighted<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for e in &sc.weights {
        let ei = two_sided_inverse(r, &sc.els, e).unwrap();
        for a in &sc.els {
            let s = r.star(a)?;
            let ec = brute_force_set(r, |x| Ok(eq(r, a, x, &[1])? && r.rp(x) == r.rp(a) && r.lp(x) == r.lp(&r.mul(&s, e))))?;
            let fc = brute_force_set(r, |x| Ok(eq(r, a, x, &[1])? && r.rp(x) == r.rp(&r.mul(&ei, &s)) && r.lp(x) == r.lp(a)))?;
            let (gec, gfc) = (e_core(r, a, e)?, f_dual_core(r, a, e)?);
            let vs = vars!["weight" => r.render(e), "a" => r.render(a)];
            cx.check(gec == unique(&ec) && gfc == unique(&fc) && ec.len() <= 1 && fc.len() <= 1, vs, || {
                format!("e-core {} vs {}, f-dual core {} vs {}", opt_render(r, gec.as_ref()), render_set(r, &ec), opt_render(r, gfc.as_ref()), render_set(r, &fc))
            })?;
            for f in &sc.weights {
                let brute = brute_force_set(r, |x| is_weighted_mp(r, a, x, e, f))?;
                let got = weighted_mp(r, a, e, f)?;
                cx.check(got == unique(&brute) && brute.len() <= 1, vars!["e" => r.render(e), "f" => r.render(f), "a" => r.render(a)], || {
                    format!("solver {} vs brute force {}", opt_render(r, got.as_ref()), render_set(r, &brute))
                })?;
            }
        }
    }
    Ok(())
}

fn agree_bc<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for (a, b, c) in triples(sc) {
        for flavor in BcFlavor::ALL {
            let brute = prescribed_set(r, a, &bc_constraints(r, b, c, flavor), Mode::Outer)?;
            let rep = bc_inverse(r, a, b, c, flavor)?;
            let ok = brute.len() <= 1 && rep.result == unique(&brute);
            cx.check(
                ok,
                vars!["flavor" => String::from(flavor.as_str()), "a" => r.render(a), "b" => r.render(b), "c" => r.render(c)],
                || format!("solver {} vs brute force {}", opt_render(r, rep.result.as_ref()), render_set(r, &brute)),
            )?;
        }
    }
    Ok(())
}

fn agree_pq<R: IdealLattice>(cx: &mut Ctx<'_, R>, sc: &Scope<R>) -> Step {
    let r = cx.r;
    for a in &sc.els {
        for p in &sc.idem {
            for q in &sc.idem {
                for flavor in [PqFlavor::DjordjevicWei, PqFlavor::ImageKernel, PqFlavor::BottDuffin] {
                    let brute = match flavor {
                        PqFlavor::DjordjevicWei => brute_force_set(r, |x| is_djordjevic_wei(r, a, x, p, q))?,
                        PqFlavor::ImageKernel => prescribed_set(r, a, &IdealConstraints::right(r.rp(p), r.rp(q)), Mode::Outer)?,
                        PqFlavor::BottDuffin => brute_force_set(r, |x| Ok(is_bott_duffin_pq(r, a, x, p, p)))?,
                    };
                    let rep = pq_inverse(r, a, p, q, flavor)?;
                    let ok = brute.len() <= 1 && rep.result == unique(&brute);
                    cx.check(
                        ok,
                        vars!["flavor" => format!("{flavor:?}"), "a" => r.render(a), "p" => r.render(p), "q" => r.render(q)],
                        || format!("solver {} vs brute force {}", opt_render(r, rep.result.as_ref()), render_set(r, &brute)),
                    )?;
                }
            }
        }
    }
    Ok(())
}
