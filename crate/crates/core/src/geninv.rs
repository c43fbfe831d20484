//! Equation classes `a{i,j,…}`, brute-force inverse sets, and the named
//! inverses: inner, group, Drazin, Moore-Penrose, core and dual core.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::ideal::{IdealLattice, Shorthand, Side};
use crate::prescribed::{self, IdealConstraints};
use crate::projector::{projector_from_idempotent, Projector};
use crate::ring::{is_idempotent, Ring};

/// A subset of the equations (1)–(9), (1^k) and (^k1).
///
/// (1) axa=a (2) xax=x (3) (ax)*=ax (4) (xa)*=xa (5) ax=xa (6) xa²=a
/// (7) ax²=x (8) a²x=a (9) x²a=x; (1^k) xa^{k+1}=a^k; (^k1) a^{k+1}x=a^k.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EquationSet {
    mask: u16,
    pub pow_left: Option<u32>,
    pub pow_right: Option<u32>,
}

impl EquationSet {
    pub fn of(eqs: &[u8]) -> Self {
        let mut s = EquationSet::default();
        for &e in eqs {
            assert!((1..=9).contains(&e), "equation {e} out of range");
            s.mask |= 1 << e;
        }
        s
    }
    pub fn with_pow_left(mut self, k: u32) -> Self {
        self.pow_left = Some(k);
        self
    }
    pub fn with_pow_right(mut self, k: u32) -> Self {
        self.pow_right = Some(k);
        self
    }
    pub fn insert(&mut self, e: u8) {
        self.mask |= 1 << e;
    }
    pub fn contains(&self, e: u8) -> bool {
        self.mask & (1 << e) != 0
    }
    pub fn numbered(&self) -> Vec<u8> {
        (1..=9).filter(|&e| self.contains(e)).collect()
    }
    pub fn needs_involution(&self) -> bool {
        self.contains(3) || self.contains(4)
    }
    pub fn is_empty(&self) -> bool {
        self.mask == 0 && self.pow_left.is_none() && self.pow_right.is_none()
    }

    /// Parses a comma list such as `"1,2,5"`, `"2,5,1^3"` or `"^21"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut s = EquationSet::default();
        for tok in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let bad = || Error::Parse(format!("unknown equation {tok:?}"));
            if let Some(k) = tok.strip_prefix("1^") {
                let k: u32 = k.parse().map_err(|_| bad())?;
                if k == 0 {
                    return Err(bad());
                }
                s.pow_left = Some(k);
            } else if let Some(rest) = tok.strip_prefix('^') {
                let k: u32 = rest.strip_suffix('1').ok_or_else(bad)?.parse().map_err(|_| bad())?;
                if k == 0 {
                    return Err(bad());
                }
                s.pow_right = Some(k);
            } else {
                let e: u8 = tok.parse().map_err(|_| bad())?;
                if !(1..=9).contains(&e) {
                    return Err(bad());
                }
                s.insert(e);
            }
        }
        if s.is_empty() {
            return Err(Error::Parse("empty equation list".into()));
        }
        Ok(s)
    }
}

impl fmt::Display for EquationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.numbered().iter().map(|e| e.to_string()).collect();
        if let Some(k) = self.pow_left {
            parts.push(format!("1^{k}"));
        }
        if let Some(k) = self.pow_right {
            parts.push(format!("^{k}1"));
        }
        write!(f, "{}", parts.join(","))
    }
}

fn equation_holds<R: Ring>(ring: &R, a: &R::Elem, x: &R::Elem, e: u8) -> Result<bool> {
    let ax = ring.mul(a, x);
    let xa = ring.mul(x, a);
    Ok(match e {
        1 => ring.mul(&ax, a) == *a,
        2 => ring.mul(&xa, x) == *x,
        3 => ring.star(&ax)? == ax,
        4 => ring.star(&xa)? == xa,
        5 => ax == xa,
        6 => ring.mul(&xa, a) == *a,
        7 => ring.mul(&ax, x) == *x,
        8 => ring.mul(a, &ax) == *a,
        9 => ring.mul(x, &xa) == *x,
        _ => unreachable!("equation index"),
    })
}

/// Unchecked variant of [`satisfies`] for validated inputs.
pub fn holds<R: Ring>(ring: &R, a: &R::Elem, x: &R::Elem, eqs: &EquationSet) -> Result<bool> {
    if eqs.needs_involution() && !ring.has_involution() {
        return Err(Error::UnsupportedInvolution);
    }
    for e in eqs.numbered() {
        if !equation_holds(ring, a, x, e)? {
            return Ok(false);
        }
    }
    if let Some(k) = eqs.pow_left {
        if ring.mul(x, &ring.pow(a, k + 1)) != ring.pow(a, k) {
            return Ok(false);
        }
    }
    if let Some(k) = eqs.pow_right {
        if ring.mul(&ring.pow(a, k + 1), x) != ring.pow(a, k) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn satisfies<R: Ring>(ring: &R, a: &R::Elem, x: &R::Elem, eqs: &EquationSet) -> Result<bool> {
    ring.check(a)?;
    ring.check(x)?;
    holds(ring, a, x, eqs)
}

/// Which of (1)–(9) hold; (3), (4) only with an involution.
pub fn equations_holding<R: Ring>(ring: &R, a: &R::Elem, x: &R::Elem) -> EquationSet {
    let mut s = EquationSet::default();
    for e in 1..=9 {
        if matches!(equation_holds(ring, a, x, e), Ok(true)) {
            s.insert(e);
        }
    }
    s
}

/// `a{eqs}` in canonical order.
pub fn enumerate_inverse_set<R: Ring>(ring: &R, a: &R::Elem, eqs: &EquationSet) -> Result<Vec<R::Elem>> {
    ring.check(a)?;
    if eqs.needs_involution() && !ring.has_involution() {
        return Err(Error::UnsupportedInvolution);
    }
    let mut out = Vec::new();
    for x in ring.iter_elements()? {
        if holds(ring, a, &x, eqs)? {
            out.push(x);
        }
    }
    Ok(out)
}

/// `|a{eqs}|` without materializing the set.
pub fn count_inverse_set<R: Ring>(ring: &R, a: &R::Elem, eqs: &EquationSet) -> Result<usize> {
    ring.check(a)?;
    if eqs.needs_involution() && !ring.has_involution() {
        return Err(Error::UnsupportedInvolution);
    }
    let mut n = 0;
    for x in ring.iter_elements()? {
        if holds(ring, a, &x, eqs)? {
            n += 1;
        }
    }
    Ok(n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<E> {
    Unique(E),
    Family {
        description: String,
        members: Option<Vec<E>>,
    },
    None {
        reason: String,
    },
}

impl<E> Outcome<E> {
    pub fn unique(&self) -> Option<&E> {
        match self {
            Outcome::Unique(x) => Some(x),
            _ => None,
        }
    }
    pub fn is_found(&self) -> bool {
        !matches!(self, Outcome::None { .. })
    }
}

/// Result of an inverse computation with its supporting data.
#[derive(Clone, Debug)]
pub struct InverseReport<R: IdealLattice> {
    pub subject: R::Elem,
    pub outcome: Outcome<R::Elem>,
    /// For a unique result: every equation among (1)–(9) that holds, plus the
    /// power equations of the index. For a family: its defining equations.
    pub satisfied: EquationSet,
    pub index: Option<u32>,
    /// Labelled projectors `φ_ax`, `φ_xa`, `_axφ`, `_xaφ` that are defined.
    pub projectors: Vec<(String, Projector<R>)>,
    pub notes: Vec<String>,
}

impl<R: IdealLattice> InverseReport<R> {
    pub fn none(a: &R::Elem, reason: impl Into<String>) -> Self {
        InverseReport {
            subject: a.clone(),
            outcome: Outcome::None { reason: reason.into() },
            satisfied: EquationSet::default(),
            index: None,
            projectors: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn unique(ring: &R, a: &R::Elem, x: R::Elem) -> Self {
        let mut projectors = Vec::new();
        let ax = ring.mul(a, &x);
        let xa = ring.mul(&x, a);
        for (label, e, side) in [
            ("phi_ax", &ax, Side::Right),
            ("phi_xa", &xa, Side::Right),
            ("ax_phi", &ax, Side::Left),
            ("xa_phi", &xa, Side::Left),
        ] {
            if let Ok(p) = projector_from_idempotent(ring, e, side) {
                projectors.push((String::from(label), p));
            }
        }
        InverseReport {
            subject: a.clone(),
            satisfied: equations_holding(ring, a, &x),
            outcome: Outcome::Unique(x),
            index: None,
            projectors,
            notes: Vec::new(),
        }
    }

    pub fn family(a: &R::Elem, description: String, members: Option<Vec<R::Elem>>, eqs: EquationSet) -> Self {
        InverseReport {
            subject: a.clone(),
            outcome: Outcome::Family { description, members },
            satisfied: eqs,
            index: None,
            projectors: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn result(&self) -> Option<&R::Elem> {
        self.outcome.unique()
    }
}

fn validated<R: IdealLattice>(ring: &R, a: &R::Elem, x: R::Elem, eqs: &EquationSet, what: &str) -> Result<R::Elem> {
    if holds(ring, a, &x, eqs)? {
        Ok(x)
    } else {
        Err(Error::Internal(format!(
            "{what} candidate {} fails {{{eqs}}} for a = {}",
            ring.render(&x),
            ring.render(a)
        )))
    }
}

pub fn inner_inverse<R: IdealLattice>(ring: &R, a: &R::Elem) -> Result<InverseReport<R>> {
    ring.check(a)?;
    Ok(match ring.inner_inverse(a) {
        Some(x) => {
            let x = validated(ring, a, x, &EquationSet::of(&[1]), "inner")?;
            InverseReport::unique(ring, a, x).with_note("one element of a{1}; not unique in general")
        }
        None => InverseReport::none(a, "a is not regular: a{1} is empty"),
    })
}

/// `(a^D, index)` with the least index `k ≤ bound`, computed as
/// `a^k (a^{2k+1})^(1) a^k`.
pub fn drazin<R: Ring>(ring: &R, a: &R::Elem) -> Result<Option<(R::Elem, u32)>> {
    for k in 1..=ring.drazin_bound() as u32 {
        let ak = ring.pow(a, k);
        let t = ring.pow(a, 2 * k + 1);
        let Some(t1) = ring.inner_inverse(&t) else {
            continue;
        };
        let x = ring.mul3(&ak, &t1, &ak);
        if holds(ring, a, &x, &EquationSet::of(&[2, 5]).with_pow_left(k))? {
            return Ok(Some((x, k)));
        }
    }
    Ok(None)
}

pub fn drazin_inverse<R: IdealLattice>(ring: &R, a: &R::Elem) -> Result<InverseReport<R>> {
    ring.check(a)?;
    Ok(match drazin(ring, a)? {
        Some((x, k)) => {
            let mut r = InverseReport::unique(ring, a, x);
            r.index = Some(k);
            r.satisfied.pow_left = Some(k);
            r.satisfied.pow_right = Some(k);
            r
        }
        None => InverseReport::none(a, format!("no Drazin inverse with index <= {}", ring.drazin_bound())),
    })
}

pub fn group_inverse<R: IdealLattice>(ring: &R, a: &R::Elem) -> Result<InverseReport<R>> {
    ring.check(a)?;
    Ok(match drazin(ring, a)? {
        Some((x, 1)) => {
            let mut r = InverseReport::unique(ring, a, x);
            r.index = Some(1);
            r
        }
        Some((_, k)) => InverseReport::none(a, format!("index {k} > 1")),
        None => InverseReport::none(a, format!("no Drazin inverse with index <= {}", ring.drazin_bound())),
    })
}

fn require_involution<R: Ring>(ring: &R) -> Result<()> {
    if ring.has_involution() {
        Ok(())
    } else {
        Err(Error::UnsupportedInvolution)
    }
}

/// `a†` through prescribed ideals: the outer inverse with `xR = a*R`,
/// `rann(x) = rann(a*)`, kept only if it lies in `a{1,3,4}`.
pub fn moore_penrose_via_ideals<R: IdealLattice>(ring: &R, a: &R::Elem) -> Result<Option<R::Elem>> {
    require_involution(ring)?;
    let s = ring.star(a)?;
    let c = IdealConstraints::right(ring.rp(&s), ring.rann(&s));
    let x = prescribed::prescribed_inverse(ring, a, &c, false)?.ok();
    Ok(x.filter(|x| matches!(holds(ring, a, x, &EquationSet::of(&[1, 2, 3, 4])), Ok(true))))
}

pub fn moore_penrose<R: IdealLattice>(ring: &R, a: &R::Elem) -> Result<Option<R::Elem>> {
    ring.check(a)?;
    require_involution(ring)?;
    let x = match ring.moore_penrose_direct(a) {
        Some(direct) => direct,
        None => moore_penrose_via_ideals(ring, a)?,
    };
    x.map(|x| validated(ring, a, x, &EquationSet::of(&[1, 2, 3, 4]), "Moore-Penrose"))
        .transpose()
}

pub fn moore_penrose_report<R: IdealLattice>(ring: &R, a: &R::Elem) -> Result<InverseReport<R>> {
    Ok(match moore_penrose(ring, a)? {
        Some(x) => InverseReport::unique(ring, a, x),
        None => InverseReport::none(a, "a{1,2,3,4} is empty"),
    })
}

/// Core inverse `a^core ∈ a{1,2,3,6,7}`, dual core `a_core ∈ a{1,2,4,8,9}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoreKind {
    Core,
    DualCore,
}

/// Computes the core (dual core) as the reflexive inverse with `xR = aR`,
/// `Rx = Ra*` (`xR = a*R`, `Rx = Ra`), and checks it against the formula
/// `a# a a†` (`a† a a#`) whenever both factors exist.
pub fn core_family<R: IdealLattice>(ring: &R, a: &R::Elem, kind: CoreKind) -> Result<Option<R::Elem>> {
    ring.check(a)?;
    require_involution(ring)?;
    let s = ring.star(a)?;
    let (c, eqs) = match kind {
        CoreKind::Core => (
            IdealConstraints::principals(ring.rp(a), ring.lp(&s)),
            EquationSet::of(&[1, 2, 3, 6, 7]),
        ),
        CoreKind::DualCore => (
            IdealConstraints::principals(ring.rp(&s), ring.lp(a)),
            EquationSet::of(&[1, 2, 4, 8, 9]),
        ),
    };
    let via_ideals = prescribed::prescribed_inverse(ring, a, &c, true)?
        .ok()
        .filter(|x| matches!(holds(ring, a, x, &eqs), Ok(true)));
    let group = match drazin(ring, a)? {
        Some((g, 1)) => Some(g),
        _ => None,
    };
    let formula = match (group, moore_penrose(ring, a)?) {
        (Some(g), Some(m)) => Some(match kind {
            CoreKind::Core => ring.mul3(&g, a, &m),
            CoreKind::DualCore => ring.mul3(&m, a, &g),
        }),
        _ => None,
    };
    if let (Some(f), Some(v)) = (&formula, &via_ideals) {
        if f != v {
            return Err(Error::Internal(format!(
                "core formula {} disagrees with prescribed route {}",
                ring.render(f),
                ring.render(v)
            )));
        }
    }
    via_ideals
        .or(formula)
        .map(|x| validated(ring, a, x, &eqs, "core"))
        .transpose()
}

pub fn core_inverse<R: IdealLattice>(ring: &R, a: &R::Elem) -> Result<Option<R::Elem>> {
    core_family(ring, a, CoreKind::Core)
}

pub fn dual_core_inverse<R: IdealLattice>(ring: &R, a: &R::Elem) -> Result<Option<R::Elem>> {
    core_family(ring, a, CoreKind::DualCore)
}

pub fn core_report<R: IdealLattice>(ring: &R, a: &R::Elem, kind: CoreKind) -> Result<InverseReport<R>> {
    Ok(match core_family(ring, a, kind)? {
        Some(x) => InverseReport::unique(ring, a, x),
        None => InverseReport::none(
            a,
            match kind {
                CoreKind::Core => "a{1,2,3,6,7} is empty",
                CoreKind::DualCore => "a{1,2,4,8,9} is empty",
            },
        ),
    })
}

/// Onto/along ideals of a multiplication map when it is a projector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapInfo<I> {
    pub label: &'static str,
    pub projector: Option<(I, I)>,
}

/// The projector characterizations of `{1}`, `{2}`, `{1,2}`, `{1,5}` and
/// Drazin inverses, evaluated for a pair `(a, x)`.
#[derive(Clone, Debug)]
pub struct ProjectorRelations<I> {
    pub maps: Vec<MapInfo<I>>,
    /// Membership by the raw equations, then each characterization's verdicts.
    pub checks: Vec<RelationCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub class: String,
    pub member: bool,
    pub characterizations: Vec<(String, bool)>,
}

impl RelationCheck {
    pub fn consistent(&self) -> bool {
        self.characterizations.iter().all(|(_, v)| *v == self.member)
    }
}

impl<I> ProjectorRelations<I> {
    pub fn consistent(&self) -> bool {
        self.checks.iter().all(RelationCheck::consistent)
    }
    /// Names of characterizations that hold.
    pub fn flagged(&self) -> Vec<String> {
        self.checks
            .iter()
            .flat_map(|c| c.characterizations.iter().filter(|(_, v)| *v).map(|(n, _)| n.clone()))
            .collect()
    }
}

pub fn classify_projector_relations<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    x: &R::Elem,
) -> Result<ProjectorRelations<R::Ideal>> {
    ring.check(a)?;
    ring.check(x)?;
    let ax = ring.mul(a, x);
    let xa = ring.mul(x, a);
    let maps = [
        ("phi_ax", &ax, Side::Right),
        ("phi_xa", &xa, Side::Right),
        ("ax_phi", &ax, Side::Left),
        ("xa_phi", &xa, Side::Left),
    ]
    .into_iter()
    .map(|(label, e, side)| MapInfo {
        label,
        projector: is_idempotent(ring, e).then(|| (ring.principal(e, side), ring.annihilator(e, side))),
    })
    .collect();

    let r = ring;
    let mut checks = Vec::new();
    let c = |class: &str, eqs: &[u8], ch: Vec<(&str, bool)>| -> Result<RelationCheck> {
        Ok(RelationCheck {
            class: class.into(),
            member: holds(r, a, x, &EquationSet::of(eqs))?,
            characterizations: ch.into_iter().map(|(n, v)| (String::from(n), v)).collect(),
        })
    };
    checks.push(c("{1}", &[1], alloc::vec![
        ("phi_ax = rho(aR, rann(ax))", r.rho(&ax, &r.rp(a), &r.rann(&ax))),
        ("phi_xa = rho(xaR, rann(a))", r.rho(&xa, &r.rp(&xa), &r.rann(a))),
        ("ax_phi = rho(Rax, lann(a))", r.rho(&ax, &r.lp(&ax), &r.lann(a))),
        ("xa_phi = rho(Ra, lann(xa))", r.rho(&xa, &r.lp(a), &r.lann(&xa))),
    ])?);
    checks.push(c("{2}", &[2], alloc::vec![
        ("phi_ax = rho(axR, rann(x))", r.rho(&ax, &r.rp(&ax), &r.rann(x))),
        ("phi_xa = rho(xR, rann(xa))", r.rho(&xa, &r.rp(x), &r.rann(&xa))),
        ("ax_phi = rho(Rx, lann(ax))", r.rho(&ax, &r.lp(x), &r.lann(&ax))),
        ("xa_phi = rho(Rxa, lann(x))", r.rho(&xa, &r.lp(&xa), &r.lann(x))),
    ])?);
    checks.push(c("{1,2}", &[1, 2], alloc::vec![
        ("phi_ax = rho(aR, rann(x))", r.rho(&ax, &r.rp(a), &r.rann(x))),
        ("phi_xa = rho(xR, rann(a))", r.rho(&xa, &r.rp(x), &r.rann(a))),
        ("ax_phi = rho(Rx, lann(a))", r.rho(&ax, &r.lp(x), &r.lann(a))),
        ("xa_phi = rho(Ra, lann(x))", r.rho(&xa, &r.lp(a), &r.lann(x))),
    ])?);
    let (ra, rn, la, ln) = (r.rp(a), r.rann(a), r.lp(a), r.lann(a));
    checks.push(c("{1,5}", &[1, 5], alloc::vec![
        ("phi_ax = phi_xa = rho(aR, rann(a))", ax == xa && r.rho(&ax, &ra, &rn)),
        ("ax_phi = xa_phi = rho(Ra, lann(a))", ax == xa && r.rho(&ax, &la, &ln)),
    ])?);
    if let Some((_, k)) = drazin(ring, a)? {
        let member = drazin(ring, a)?.map(|(d, _)| d) == Some(x.clone());
        for l in k..=ring.drazin_bound() as u32 {
            let al = ring.pow(a, l);
            let (alr, alrann, all, allann) = (r.rp(&al), r.rann(&al), r.lp(&al), r.lann(&al));
            let right = ax == xa && r.rho(&ax, &alr, &alrann);
            let left = ax == xa && r.rho(&ax, &all, &allann);
            checks.push(RelationCheck {
                class: format!("Drazin (l = {l})"),
                member,
                characterizations: alloc::vec![
                    ("right projector, xR in a^l R".into(), right && r.le(&r.rp(x), &alr)),
                    ("right projector, rann(a^l) in rann(x)".into(), right && r.le(&alrann, &r.rann(x))),
                    ("left projector, Rx in R a^l".into(), left && r.le(&r.lp(x), &all)),
                    ("left projector, lann(a^l) in lann(x)".into(), left && r.le(&allann, &r.lann(x))),
                ],
            });
        }
    }
    Ok(ProjectorRelations { maps, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::ring::{Involution, MatrixRing, Zn};

    #[test]
    fn equation_parse_roundtrip() {
        let e = EquationSet::parse("1, 2,5,1^3,^21").unwrap();
        assert_eq!(e.to_string(), "1,2,5,1^3,^21");
        assert!(EquationSet::parse("10").is_err());
        assert!(EquationSet::parse("").is_err());
    }

    #[test]
    fn z6_sets() {
        let z = Zn::new(6).unwrap();
        assert_eq!(enumerate_inverse_set(&z, &2, &EquationSet::of(&[1])).unwrap(), [2, 5]);
        assert!(satisfies(&z, &2, &5, &EquationSet::of(&[1])).unwrap());
        assert!(!satisfies(&z, &2, &5, &EquationSet::of(&[1, 2])).unwrap());
        assert_eq!(
            enumerate_inverse_set(&z, &2, &EquationSet::of(&[3])),
            Err(Error::UnsupportedInvolution)
        );
        assert_eq!(group_inverse(&z, &3).unwrap().result(), Some(&3));
    }

    #[test]
    fn real_example_values() {
        let r = MatrixRing::new(Rationals, 2, Involution::Transpose).unwrap();
        let a = r.from_ints(&[&[2, -2], &[0, 0]]).unwrap();
        let g = group_inverse(&r, &a).unwrap();
        assert_eq!(g.result(), Some(&r.from_strs(&[&["1/2", "-1/2"], &["0", "0"]]).unwrap()));
        assert_eq!(
            moore_penrose(&r, &a).unwrap(),
            Some(r.from_strs(&[&["1/4", "0"], &["-1/4", "0"]]).unwrap())
        );
        assert_eq!(
            core_inverse(&r, &a).unwrap(),
            Some(r.from_strs(&[&["1/2", "0"], &["0", "0"]]).unwrap())
        );
        assert_eq!(
            dual_core_inverse(&r, &a).unwrap(),
            Some(r.from_strs(&[&["1/4", "-1/4"], &["-1/4", "1/4"]]).unwrap())
        );
        let e12 = r.unit(1, 2);
        let d = drazin_inverse(&r, &e12).unwrap();
        assert_eq!((d.result(), d.index), (Some(&r.zero()), Some(2)));
        match group_inverse(&r, &e12).unwrap().outcome {
            Outcome::None { reason } => assert_eq!(reason, "index 2 > 1"),
            o => panic!("{o:?}"),
        }
    }

    #[test]
    fn mp_absent_over_f2() {
        let r = MatrixRing::new(PrimeField::new(2).unwrap(), 2, Involution::Transpose).unwrap();
        let a = r.from_ints(&[&[1, 1], &[0, 0]]).unwrap();
        assert_eq!(moore_penrose(&r, &a).unwrap(), None);
        assert_eq!(moore_penrose_via_ideals(&r, &a).unwrap(), None);
        assert!(enumerate_inverse_set(&r, &a, &EquationSet::of(&[1, 2, 3, 4])).unwrap().is_empty());
    }

    #[test]
    fn projector_relations_group_case() {
        let r = MatrixRing::new(Rationals, 2, Involution::Transpose).unwrap();
        let a = r.from_ints(&[&[2, -2], &[0, 0]]).unwrap();
        let g = r.from_strs(&[&["1/2", "-1/2"], &["0", "0"]]).unwrap();
        let rel = classify_projector_relations(&r, &a, &g).unwrap();
        assert!(rel.consistent());
        assert!(rel.flagged().iter().any(|n| n == "phi_ax = phi_xa = rho(aR, rann(a))"));
        let bad = r.from_ints(&[&[5, 0], &[0, 5]]).unwrap();
        let rel = classify_projector_relations(&r, &a, &bad).unwrap();
        assert!(rel.consistent() && rel.flagged().is_empty());
    }
}
