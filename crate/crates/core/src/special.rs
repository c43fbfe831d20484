//! Special families: `*`-equation classes, weighted Moore-Penrose, weighted
//! core and dual core inverses, `(b,c)` inverses and `(p,q)` inverses.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geninv::{core_inverse, dual_core_inverse, enumerate_inverse_set, holds, EquationSet};
use crate::ideal::{IdealLattice, Shorthand};
use crate::prescribed::{has_prescribed, prescribed_inverse, IdealConstraints, Mode};
use crate::ring::{is_idempotent, Ring};

type Clauses = Vec<(String, bool)>;

fn clauses(items: Vec<(&str, bool)>) -> Clauses {
    items.into_iter().map(|(n, v)| (String::from(n), v)).collect()
}

fn require_involution<R: Ring>(ring: &R) -> Result<()> {
    if ring.has_involution() {
        Ok(())
    } else {
        Err(Error::UnsupportedInvolution)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StarClass {
    C13,
    C14,
    C134,
    C136,
    C148,
    C137,
    C149,
}

impl StarClass {
    pub const ALL: [StarClass; 7] = [
        StarClass::C13,
        StarClass::C14,
        StarClass::C134,
        StarClass::C136,
        StarClass::C148,
        StarClass::C137,
        StarClass::C149,
    ];
    pub fn tag(self) -> &'static str {
        match self {
            StarClass::C13 => "13",
            StarClass::C14 => "14",
            StarClass::C134 => "134",
            StarClass::C136 => "136",
            StarClass::C148 => "148",
            StarClass::C137 => "137",
            StarClass::C149 => "149",
        }
    }
    pub fn parse(tag: &str) -> Result<Self> {
        StarClass::ALL
            .into_iter()
            .find(|c| c.tag() == tag)
            .ok_or_else(|| Error::Parse(format!("unknown star class {tag:?}")))
    }
    pub fn equations(self) -> EquationSet {
        let digits: Vec<u8> = self.tag().bytes().map(|b| b - b'0').collect();
        EquationSet::of(&digits)
    }
    /// Classes whose projector conditions are only proved sufficient.
    pub fn sufficient_only(self) -> bool {
        matches!(self, StarClass::C136 | StarClass::C148)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarMembership {
    pub by_equations: bool,
    pub by_projectors: Clauses,
    pub sufficient_only: bool,
}

impl StarMembership {
    /// Equivalence for the exact classes; implication for `{1,3,6}`, `{1,4,8}`.
    pub fn consistent(&self) -> bool {
        if self.sufficient_only {
            self.by_projectors.iter().all(|(_, v)| !*v || self.by_equations)
        } else {
            self.by_projectors.iter().all(|(_, v)| *v == self.by_equations)
        }
    }
}

/// Membership of `x` in a `*`-class, by equations and by projectors.
pub fn star_class_member<R: IdealLattice>(ring: &R, a: &R::Elem, x: &R::Elem, cls: StarClass) -> Result<StarMembership> {
    require_involution(ring)?;
    ring.check(a)?;
    ring.check(x)?;
    let r = ring;
    let s = r.star(a)?;
    let (ax, xa) = (r.mul(a, x), r.mul(x, a));
    // The four orthogonal-projector statements used across the classes.
    let p_ax_r = r.rho(&ax, &r.rp(a), &r.rann(&s));
    let p_ax_l = r.rho(&ax, &r.lp(&s), &r.lann(a));
    let p_xa_r = r.rho(&xa, &r.rp(&s), &r.rann(a));
    let p_xa_l = r.rho(&xa, &r.lp(a), &r.lann(&s));
    let by_projectors = match cls {
        StarClass::C13 => clauses(vec_of(&[("phi_ax = rho(aR, rann(a*))", p_ax_r), ("ax_phi = rho(Ra*, lann(a))", p_ax_l)])),
        StarClass::C14 => clauses(vec_of(&[("phi_xa = rho(a*R, rann(a))", p_xa_r), ("xa_phi = rho(Ra, lann(a*))", p_xa_l)])),
        StarClass::C134 => clauses(vec_of(&[
            ("phi_ax, phi_xa", p_ax_r && p_xa_r),
            ("phi_ax, xa_phi", p_ax_r && p_xa_l),
            ("ax_phi, phi_xa", p_ax_l && p_xa_r),
            ("ax_phi, xa_phi", p_ax_l && p_xa_l),
        ])),
        StarClass::C136 => {
            let q_r = r.rho(&xa, &r.rp(a), &r.rann(a));
            let q_l = r.rho(&xa, &r.lp(a), &r.lann(a));
            clauses(vec_of(&[
                ("phi_ax = rho(aR, rann(a*)), phi_xa = rho(aR, rann(a))", p_ax_r && q_r),
                ("phi_ax = rho(aR, rann(a*)), xa_phi = rho(Ra, lann(a))", p_ax_r && q_l),
                ("ax_phi = rho(Ra*, lann(a)), phi_xa = rho(aR, rann(a))", p_ax_l && q_r),
                ("ax_phi = rho(Ra*, lann(a)), xa_phi = rho(Ra, lann(a))", p_ax_l && q_l),
            ]))
        }
        StarClass::C148 => {
            let q_r = r.rho(&ax, &r.rp(a), &r.rann(a));
            let q_l = r.rho(&ax, &r.lp(a), &r.lann(a));
            clauses(vec_of(&[
                ("phi_ax = rho(aR, rann(a)), phi_xa = rho(a*R, rann(a))", q_r && p_xa_r),
                ("phi_ax = rho(aR, rann(a)), xa_phi = rho(Ra, lann(a*))", q_r && p_xa_l),
                ("ax_phi = rho(Ra, lann(a)), phi_xa = rho(a*R, rann(a))", q_l && p_xa_r),
                ("ax_phi = rho(Ra, lann(a)), xa_phi = rho(Ra, lann(a*))", q_l && p_xa_l),
            ]))
        }
        StarClass::C137 => clauses(vec_of(&[
            ("phi_ax = rho(aR, rann(a*)), x in aR", p_ax_r && r.ideal_contains(&r.rp(a), x)),
            ("ax_phi = rho(Ra*, lann(a)), lann(a) in lann(x)", p_ax_l && r.le(&r.lann(a), &r.lann(x))),
        ])),
        StarClass::C149 => clauses(vec_of(&[
            ("phi_xa = rho(a*R, rann(a)), rann(a) in rann(x)", p_xa_r && r.le(&r.rann(a), &r.rann(x))),
            ("xa_phi = rho(Ra, lann(a*)), x in Ra", p_xa_l && r.ideal_contains(&r.lp(a), x)),
        ])),
    };
    Ok(StarMembership {
        by_equations: holds(ring, a, x, &cls.equations())?,
        by_projectors,
        sufficient_only: cls.sufficient_only(),
    })
}

fn vec_of<'a>(items: &[(&'a str, bool)]) -> Vec<(&'a str, bool)> {
    items.to_vec()
}

pub fn star_class_set<R: IdealLattice>(ring: &R, a: &R::Elem, cls: StarClass) -> Result<Vec<R::Elem>> {
    require_involution(ring)?;
    enumerate_inverse_set(ring, a, &cls.equations())
}

/// The ideal descriptions of each class as subsets of `a{1}`, every form
/// materialized. For `{1,3,6}` and `{1,4,8}` these are only contained in the
/// class.
pub fn star_class_ideal_forms<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    cls: StarClass,
) -> Result<Vec<(String, Vec<R::Elem>)>> {
    require_involution(ring)?;
    let r = ring;
    let s = r.star(a)?;
    let inner = enumerate_inverse_set(r, a, &EquationSet::of(&[1]))?;
    type Pred<'p, E> = &'p dyn Fn(&E, &E, &E) -> bool;
    let (ra, la, rs, ls) = (r.rp(a), r.lp(a), r.rp(&s), r.lp(&s));
    let (rna, lna, rns, lns) = (r.rann(a), r.lann(a), r.rann(&s), r.lann(&s));
    let f_xar_a = |_: &_, xa: &_, _: &_| r.rp(xa) == ra;
    let f_xar_s = |_: &_, xa: &_, _: &_| r.rp(xa) == rs;
    let f_rann_ax_s = |ax: &_, _: &_, _: &_| r.rann(ax) == rns;
    let f_rann_ax_a = |ax: &_, _: &_, _: &_| r.rann(ax) == rna;
    let f_rax_s = |ax: &_, _: &_, _: &_| r.lp(ax) == ls;
    let f_rax_a = |ax: &_, _: &_, _: &_| r.lp(ax) == la;
    let f_lann_xa_s = |_: &_, xa: &_, _: &_| r.lann(xa) == lns;
    let f_lann_xa_a = |_: &_, xa: &_, _: &_| r.lann(xa) == lna;
    let f_x_in_ar = |_: &_, _: &_, x: &_| r.ideal_contains(&ra, x);
    let f_x_in_ra = |_: &_, _: &_, x: &_| r.ideal_contains(&la, x);
    let f_lann_a_x = |_: &_, _: &_, x: &_| r.le(&lna, &r.lann(x));
    let f_rann_a_x = |_: &_, _: &_, x: &_| r.le(&rna, &r.rann(x));
    let forms: Vec<(&str, Vec<Pred<R::Elem>>)> = match cls {
        StarClass::C13 => alloc::vec![
            ("rann(ax) = rann(a*)", alloc::vec![&f_rann_ax_s as Pred<_>]),
            ("Rax = Ra*", alloc::vec![&f_rax_s as Pred<_>]),
        ],
        StarClass::C14 => alloc::vec![
            ("xaR = a*R", alloc::vec![&f_xar_s as Pred<_>]),
            ("lann(xa) = lann(a*)", alloc::vec![&f_lann_xa_s as Pred<_>]),
        ],
        StarClass::C134 => alloc::vec![
            ("xaR = a*R, rann(ax) = rann(a*)", alloc::vec![&f_xar_s as Pred<_>, &f_rann_ax_s]),
            ("lann(xa) = lann(a*), rann(ax) = rann(a*)", alloc::vec![&f_lann_xa_s as Pred<_>, &f_rann_ax_s]),
            ("xaR = a*R, Rax = Ra*", alloc::vec![&f_xar_s as Pred<_>, &f_rax_s]),
            ("Rax = Ra*, lann(xa) = lann(a*)", alloc::vec![&f_rax_s as Pred<_>, &f_lann_xa_s]),
        ],
        StarClass::C136 => alloc::vec![
            ("xaR = aR, rann(ax) = rann(a*)", alloc::vec![&f_xar_a as Pred<_>, &f_rann_ax_s]),
            ("lann(xa) = lann(a), rann(ax) = rann(a*)", alloc::vec![&f_lann_xa_a as Pred<_>, &f_rann_ax_s]),
            ("xaR = aR, Rax = Ra*", alloc::vec![&f_xar_a as Pred<_>, &f_rax_s]),
            ("Rax = Ra*, lann(xa) = lann(a)", alloc::vec![&f_rax_s as Pred<_>, &f_lann_xa_a]),
        ],
        StarClass::C148 => alloc::vec![
            ("xaR = a*R, rann(ax) = rann(a)", alloc::vec![&f_xar_s as Pred<_>, &f_rann_ax_a]),
            ("lann(xa) = lann(a*), rann(ax) = rann(a)", alloc::vec![&f_lann_xa_s as Pred<_>, &f_rann_ax_a]),
            ("xaR = a*R, Rax = Ra", alloc::vec![&f_xar_s as Pred<_>, &f_rax_a]),
            ("Rax = Ra, lann(xa) = lann(a*)", alloc::vec![&f_rax_a as Pred<_>, &f_lann_xa_s]),
        ],
        StarClass::C137 => alloc::vec![
            ("rann(ax) = rann(a*), x in aR", alloc::vec![&f_rann_ax_s as Pred<_>, &f_x_in_ar]),
            ("Rax = Ra*, lann(a) in lann(x)", alloc::vec![&f_rax_s as Pred<_>, &f_lann_a_x]),
        ],
        StarClass::C149 => alloc::vec![
            ("xaR = a*R, rann(a) in rann(x)", alloc::vec![&f_xar_s as Pred<_>, &f_rann_a_x]),
            ("lann(xa) = lann(a*), x in Ra", alloc::vec![&f_lann_xa_s as Pred<_>, &f_x_in_ra]),
        ],
    };
    Ok(forms
        .into_iter()
        .map(|(name, preds)| {
            let set = inner
                .iter()
                .filter(|x| {
                    let (ax, xa) = (r.mul(a, x), r.mul(x, a));
                    preds.iter().all(|p| p(&ax, &xa, x))
                })
                .cloned()
                .collect();
            (String::from(name), set)
        })
        .collect())
}

/// Rejects weights that are not invertible or not symmetric.
pub fn check_weight<R: Ring>(ring: &R, w: &R::Elem, name: &str) -> Result<R::Elem> {
    require_involution(ring)?;
    ring.check(w)?;
    let inv = ring
        .inverse(w)
        .ok_or_else(|| Error::Precondition(format!("weight {name} = {} is not invertible", ring.render(w))))?;
    if ring.star(w)? != *w {
        return Err(Error::Precondition(format!("weight {name} = {} is not symmetric", ring.render(w))));
    }
    Ok(inv)
}

/// "Any one condition from each group, jointly, holds exactly when the
/// target holds."
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridReport {
    pub target: bool,
    pub groups: Vec<Clauses>,
}

impl GridReport {
    /// True when every combination agrees with the target.
    pub fn consistent(&self) -> bool {
        if self.target {
            self.groups.iter().all(|g| g.iter().all(|(_, v)| *v))
        } else {
            self.groups.iter().any(|g| g.iter().all(|(_, v)| !*v))
        }
    }
    /// First combination (by index) that disagrees with the target.
    pub fn first_violation(&self) -> Option<Vec<String>> {
        let mut idx = alloc::vec![0usize; self.groups.len()];
        if self.groups.iter().any(|g| g.is_empty()) {
            return None;
        }
        loop {
            let all = self.groups.iter().zip(&idx).all(|(g, &i)| g[i].1);
            if all != self.target {
                return Some(self.groups.iter().zip(&idx).map(|(g, &i)| g[i].0.clone()).collect());
            }
            let mut k = self.groups.len();
            loop {
                if k == 0 {
                    return None;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < self.groups[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
}

/// Whether `x` is the `(e,f)`-weighted Moore-Penrose inverse, by equations.
pub fn is_weighted_mp<R: IdealLattice>(ring: &R, a: &R::Elem, x: &R::Elem, e: &R::Elem, f: &R::Elem) -> Result<bool> {
    if !holds(ring, a, x, &EquationSet::of(&[1, 2]))? {
        return Ok(false);
    }
    let eax = ring.mul3(e, a, x);
    let fxa = ring.mul3(f, x, a);
    Ok(ring.star(&eax)? == eax && ring.star(&fxa)? == fxa)
}

/// `a†_{e,f}` through the reflexive inverse with `xR = f⁻¹a*R`,
/// `rann(x) = rann(a*e)`, checked against the defining equations.
pub fn weighted_mp<R: IdealLattice>(ring: &R, a: &R::Elem, e: &R::Elem, f: &R::Elem) -> Result<Option<R::Elem>> {
    ring.check(a)?;
    check_weight(ring, e, "e")?;
    let f_inv = check_weight(ring, f, "f")?;
    let s = ring.star(a)?;
    let c = IdealConstraints::right(ring.rp(&ring.mul(&f_inv, &s)), ring.rann(&ring.mul(&s, e)));
    let Ok(x) = prescribed_inverse(ring, a, &c, true)? else {
        return Ok(None);
    };
    if !is_weighted_mp(ring, a, &x, e, f)? {
        return Err(Error::Internal(format!(
            "prescribed candidate {} is not the weighted Moore-Penrose inverse",
            ring.render(&x)
        )));
    }
    Ok(Some(x))
}

/// The four prescribed-ideal bundles naming one reflexive inverse, given
/// `xR = s_r`, `rann(x) = t_r`, `Rx = s_l`, `lann(x) = t_l`.
fn four_bundles<I: Clone>(s_r: I, t_r: I, s_l: I, t_l: I) -> [(&'static str, IdealConstraints<I>); 4] {
    [
        ("rprin, rann", IdealConstraints::right(s_r.clone(), t_r.clone())),
        ("lprin, lann", IdealConstraints::left(s_l.clone(), t_l.clone())),
        ("rprin, lprin", IdealConstraints::principals(s_r, s_l)),
        ("rann, lann", IdealConstraints::annihilators(t_r, t_l)),
    ]
}

/// Condition grid for a reflexive inverse `x` with `xR = S`, `rann(x) = T`,
/// `Rx = S'`, `lann(x) = T'`, where `R = aR ⊕ T = S ⊕ rann(a)` etc.
fn reflexive_grid<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    x: &R::Elem,
    ideals: (&R::Ideal, &R::Ideal, &R::Ideal, &R::Ideal),
) -> [Clauses; 2] {
    let r = ring;
    let (s, t, sl, tl) = ideals;
    let (ax, xa) = (r.mul(a, x), r.mul(x, a));
    let p1 = r.rho(&ax, &r.rp(a), t);
    let p2 = r.rho(&xa, s, &r.rann(a));
    let l1 = r.rho(&ax, sl, &r.lann(a));
    let l2 = r.rho(&xa, &r.lp(a), tl);
    [
        clauses(alloc::vec![
            ("phi_ax, phi_xa", p1 && p2),
            ("ax_phi, xa_phi", l1 && l2),
            ("phi_ax, xa_phi", p1 && l2),
            ("ax_phi, phi_xa", l1 && p2),
        ]),
        clauses(alloc::vec![
            ("xR in S", r.le(&r.rp(x), s)),
            ("lann(S) in lann(x)", r.le(&r.ideal_annihilator(s), &r.lann(x))),
            ("Rx in S'", r.le(&r.lp(x), sl)),
            ("T in rann(x)", r.le(t, &r.rann(x))),
        ]),
    ]
}

pub fn weighted_mp_grid<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    x: &R::Elem,
    e: &R::Elem,
    f: &R::Elem,
) -> Result<GridReport> {
    check_weight(ring, e, "e")?;
    let f_inv = check_weight(ring, f, "f")?;
    let s = ring.star(a)?;
    let fs = ring.mul(&f_inv, &s);
    let se = ring.mul(&s, e);
    let (sr, t, sl, tl) = (ring.rp(&fs), ring.rann(&se), ring.lp(&se), ring.lann(&fs));
    Ok(GridReport {
        target: is_weighted_mp(ring, a, x, e, f)?,
        groups: reflexive_grid(ring, a, x, (&sr, &t, &sl, &tl)).to_vec(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightedCore {
    /// `x ∈ a{1}`, `xR = aR`, `Rx = Ra*e`.
    ECore,
    /// `x ∈ a{1}`, `xR = f⁻¹a*R`, `Rx = Ra`.
    FDualCore,
}

fn weighted_core_ideals<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    w: &R::Elem,
    kind: WeightedCore,
) -> Result<(R::Ideal, R::Ideal, R::Ideal, R::Ideal)> {
    let r = ring;
    let w_inv = check_weight(r, w, if kind == WeightedCore::ECore { "e" } else { "f" })?;
    let s = r.star(a)?;
    Ok(match kind {
        WeightedCore::ECore => {
            let se = r.mul(&s, w);
            (r.rp(a), r.rann(&se), r.lp(&se), r.lann(a))
        }
        WeightedCore::FDualCore => {
            let fs = r.mul(&w_inv, &s);
            (r.rp(&fs), r.rann(a), r.lp(a), r.lann(&fs))
        }
    })
}

/// `a^{core,e}` or `a_{core,f}`: computed through each of the four
/// equivalent prescribed-ideal bundles, which must agree when the inverse
/// exists, then checked against the definition.
pub fn weighted_core<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    w: &R::Elem,
    kind: WeightedCore,
) -> Result<Option<R::Elem>> {
    ring.check(a)?;
    let (sr, t, sl, tl) = weighted_core_ideals(ring, a, w, kind)?;
    let def = IdealConstraints::principals(sr.clone(), sl.clone());
    let Ok(x) = prescribed_inverse(ring, a, &def, true)? else {
        return Ok(None);
    };
    for (name, c) in four_bundles(sr, t, sl, tl) {
        match prescribed_inverse(ring, a, &c, true)? {
            Ok(y) if y == x => {}
            other => {
                return Err(Error::Internal(format!(
                    "weighted core via {name} gives {:?}, expected {}",
                    other.map(|y| ring.render(&y)),
                    ring.render(&x)
                )))
            }
        }
    }
    Ok(Some(x))
}

pub fn e_core<R: IdealLattice>(ring: &R, a: &R::Elem, e: &R::Elem) -> Result<Option<R::Elem>> {
    weighted_core(ring, a, e, WeightedCore::ECore)
}

pub fn f_dual_core<R: IdealLattice>(ring: &R, a: &R::Elem, f: &R::Elem) -> Result<Option<R::Elem>> {
    weighted_core(ring, a, f, WeightedCore::FDualCore)
}

pub fn weighted_core_grid<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    x: &R::Elem,
    w: &R::Elem,
    kind: WeightedCore,
) -> Result<GridReport> {
    let (sr, t, sl, tl) = weighted_core_ideals(ring, a, w, kind)?;
    let target = has_prescribed(ring, a, x, &IdealConstraints::principals(sr.clone(), sl.clone()), Mode::Reflexive)?;
    Ok(GridReport { target, groups: reflexive_grid(ring, a, x, (&sr, &t, &sl, &tl)).to_vec() })
}

/// `x` is the `w`-core inverse: `(awx)* = awx`, `xawa = a`, `awx² = x`.
pub fn is_w_core<R: IdealLattice>(ring: &R, a: &R::Elem, x: &R::Elem, w: &R::Elem) -> Result<bool> {
    let awx = ring.mul3(a, w, x);
    Ok(ring.star(&awx)? == awx
        && ring.mul(&ring.mul3(x, a, w), a) == *a
        && ring.mul(&awx, x) == *x)
}

/// `x` is the `v`-dual core inverse: `(xva)* = xva`, `avax = a`, `x²va = x`.
pub fn is_v_dual_core<R: IdealLattice>(ring: &R, a: &R::Elem, x: &R::Elem, v: &R::Elem) -> Result<bool> {
    let xva = ring.mul3(x, v, a);
    Ok(ring.star(&xva)? == xva
        && ring.mul(&ring.mul3(a, v, a), x) == *a
        && ring.mul(x, &xva) == *x)
}

/// `a^{core,w} = (aw)^core` when `aR ⊆ awR`; `Err` names the failed part.
pub fn w_core<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    w: &R::Elem,
) -> Result<core::result::Result<R::Elem, String>> {
    require_involution(ring)?;
    ring.check(w)?;
    let aw = ring.mul(a, w);
    let Some(x) = core_inverse(ring, &aw)? else {
        return Ok(Err("aw has no core inverse".into()));
    };
    if !ring.le(&ring.rp(a), &ring.rp(&aw)) {
        return Ok(Err("aR is not contained in awR".into()));
    }
    if !is_w_core(ring, a, &x, w)? {
        return Err(Error::Internal("(aw)^core fails the w-core equations".into()));
    }
    Ok(Ok(x))
}

/// `a_{core,v} = (va)_core` when `Ra ⊆ Rva`.
pub fn v_dual_core<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    v: &R::Elem,
) -> Result<core::result::Result<R::Elem, String>> {
    require_involution(ring)?;
    ring.check(v)?;
    let va = ring.mul(v, a);
    let Some(x) = dual_core_inverse(ring, &va)? else {
        return Ok(Err("va has no dual core inverse".into()));
    };
    if !ring.le(&ring.lp(a), &ring.lp(&va)) {
        return Ok(Err("Ra is not contained in Rva".into()));
    }
    if !is_v_dual_core(ring, a, &x, v)? {
        return Err(Error::Internal("(va)_core fails the v-dual core equations".into()));
    }
    Ok(Ok(x))
}

/// Which reading of a condition grid to evaluate. `Literal` reproduces the
/// clauses exactly as printed in the source, including the suspect ones.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridReading {
    Corrected,
    Literal,
}

/// The `w`-core grid with `b = aw`: projector pair, membership, range.
pub fn w_core_grid<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    x: &R::Elem,
    w: &R::Elem,
    reading: GridReading,
) -> Result<GridReport> {
    require_involution(ring)?;
    let r = ring;
    let b = r.mul(a, w);
    let bs = r.star(&b)?;
    let bx = r.mul(&b, x);
    // The printed grid projects with xa; the inverse of b = aw projects with xb.
    let xm = match reading {
        GridReading::Corrected => r.mul(x, &b),
        GridReading::Literal => r.mul(x, a),
    };
    let p1 = r.rho(&bx, &r.rp(&b), &r.rann(&bs));
    let l1 = r.rho(&bx, &r.lp(&bs), &r.lann(&b));
    let p2 = r.rho(&xm, &r.rp(&b), &r.rann(&b));
    let l2 = r.rho(&xm, &r.lp(&b), &r.lann(&b));
    Ok(GridReport {
        target: is_w_core(r, a, x, w)?,
        groups: alloc::vec![
            clauses(alloc::vec![
                ("phi_bx, phi_xb", p1 && p2),
                ("bx_phi, xb_phi", l1 && l2),
                ("phi_bx, xb_phi", p1 && l2),
                ("bx_phi, phi_xb", l1 && p2),
            ]),
            clauses(alloc::vec![
                ("xR in bR", r.le(&r.rp(x), &r.rp(&b))),
                ("lann(b) in lann(x)", r.le(&r.lann(&b), &r.lann(x))),
                ("Rx in Rb*", r.le(&r.lp(x), &r.lp(&bs))),
                ("rann(b*) in rann(x)", r.le(&r.rann(&bs), &r.rann(x))),
            ]),
            clauses(alloc::vec![
                ("aR in bR", r.le(&r.rp(a), &r.rp(&b))),
                ("lann(b) in lann(a)", r.le(&r.lann(&b), &r.lann(a))),
            ]),
        ],
    })
}

/// The `v`-dual core grid with `c = va`.
pub fn v_dual_core_grid<R: IdealLattice>(ring: &R, a: &R::Elem, x: &R::Elem, v: &R::Elem) -> Result<GridReport> {
    require_involution(ring)?;
    let r = ring;
    let c = r.mul(v, a);
    let cs = r.star(&c)?;
    let (cx, xc) = (r.mul(&c, x), r.mul(x, &c));
    let p1 = r.rho(&cx, &r.rp(&c), &r.rann(&c));
    let l1 = r.rho(&cx, &r.lp(&c), &r.lann(&c));
    let p2 = r.rho(&xc, &r.rp(&cs), &r.rann(&c));
    let l2 = r.rho(&xc, &r.lp(&c), &r.lann(&cs));
    Ok(GridReport {
        target: is_v_dual_core(r, a, x, v)?,
        groups: alloc::vec![
            clauses(alloc::vec![
                ("phi_cx, phi_xc", p1 && p2),
                ("cx_phi, xc_phi", l1 && l2),
                ("phi_cx, xc_phi", p1 && l2),
                ("cx_phi, phi_xc", l1 && p2),
            ]),
            clauses(alloc::vec![
                ("xR in c*R", r.le(&r.rp(x), &r.rp(&cs))),
                ("lann(c*) in lann(x)", r.le(&r.lann(&cs), &r.lann(x))),
                ("Rx in Rc", r.le(&r.lp(x), &r.lp(&c))),
                ("rann(c) in rann(x)", r.le(&r.rann(&c), &r.rann(x))),
            ]),
            clauses(alloc::vec![
                ("Ra in Rc", r.le(&r.lp(a), &r.lp(&c))),
                ("rann(c) in rann(a)", r.le(&r.rann(&c), &r.rann(a))),
            ]),
        ],
    })
}

/// `x` is a right `w`-core inverse: `awxa = a`, `(awx)* = awx`, `awx² = x`.
pub fn is_right_w_core<R: IdealLattice>(ring: &R, a: &R::Elem, x: &R::Elem, w: &R::Elem) -> Result<bool> {
    let awx = ring.mul3(a, w, x);
    Ok(ring.mul(&awx, a) == *a && ring.star(&awx)? == awx && ring.mul(&awx, x) == *x)
}

/// `x` is a left `v`-dual core inverse: `axva = a`, `(xva)* = xva`, `x²va = x`.
pub fn is_left_v_dual_core<R: IdealLattice>(ring: &R, a: &R::Elem, x: &R::Elem, v: &R::Elem) -> Result<bool> {
    let xva = ring.mul3(x, v, a);
    Ok(ring.mul3(a, x, &ring.mul(v, a)) == *a && ring.star(&xva)? == xva && ring.mul(x, &xva) == *x)
}

/// A non-unique family: all members on finite rings, one witness always.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnessed<E> {
    pub witness: Option<E>,
    pub members: Option<Vec<E>>,
}

/// Right `w`-core inverses: `(aw){1,3,7}` when `aR ⊆ awR`, else none.
pub fn right_w_core<R: IdealLattice>(ring: &R, a: &R::Elem, w: &R::Elem) -> Result<Witnessed<R::Elem>> {
    require_involution(ring)?;
    let r = ring;
    let b = r.mul(a, w);
    if !r.le(&r.rp(a), &r.rp(&b)) {
        return Ok(Witnessed { witness: None, members: r.size().map(|_| Vec::new()) });
    }
    let bs = r.star(&b)?;
    let br = r.rp(&b);
    // x ∈ bR with bx = ρ_{bR, rann(b*)}(1).
    let witness = r.unit(&br, &r.rann(&bs)).and_then(|e| r.solve_in(&b, &br, &e));
    if let Some(x) = &witness {
        if !is_right_w_core(r, a, x, w)? {
            return Err(Error::Internal("right w-core witness fails its equations".into()));
        }
    }
    let members = match r.size() {
        Some(_) => Some(
            enumerate_inverse_set(r, &b, &EquationSet::of(&[1, 3, 7]))?
                .into_iter()
                .collect(),
        ),
        None => None,
    };
    Ok(Witnessed { witness, members })
}

/// Left `v`-dual core inverses: `(va){1,4,9}` when `Ra ⊆ Rva`, else none.
pub fn left_v_dual_core<R: IdealLattice>(ring: &R, a: &R::Elem, v: &R::Elem) -> Result<Witnessed<R::Elem>> {
    require_involution(ring)?;
    let r = ring;
    let c = r.mul(v, a);
    if !r.le(&r.lp(a), &r.lp(&c)) {
        return Ok(Witnessed { witness: None, members: r.size().map(|_| Vec::new()) });
    }
    let cs = r.star(&c)?;
    let rc = r.lp(&c);
    // x ∈ Rc with xc = ρ_{Rc, lann(c*)}(1).
    let witness = r.unit(&rc, &r.lann(&cs)).and_then(|e| r.solve_in(&c, &rc, &e));
    if let Some(x) = &witness {
        if !is_left_v_dual_core(r, a, x, v)? {
            return Err(Error::Internal("left v-dual core witness fails its equations".into()));
        }
    }
    let members = match r.size() {
        Some(_) => Some(enumerate_inverse_set(r, &c, &EquationSet::of(&[1, 4, 9]))?),
        None => None,
    };
    Ok(Witnessed { witness, members })
}

/// Right `w`-core grid: one projector clause plus one range clause.
pub fn right_w_core_grid<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    x: &R::Elem,
    w: &R::Elem,
    reading: GridReading,
) -> Result<GridReport> {
    require_involution(ring)?;
    let r = ring;
    let b = r.mul(a, w);
    let bs = r.star(&b)?;
    let bx = r.mul(&b, x);
    let second = match reading {
        GridReading::Corrected => r.rho(&bx, &r.lp(&bs), &r.lann(&b)),
        GridReading::Literal => {
            let ax = r.mul(a, x);
            r.rho(&ax, &r.lp(&r.star(a)?), &r.lann(a))
        }
    };
    Ok(GridReport {
        target: is_right_w_core(r, a, x, w)?,
        groups: alloc::vec![
            clauses(alloc::vec![
                ("phi_bx = rho(bR, rann(b*)), x in bR", r.rho(&bx, &r.rp(&b), &r.rann(&bs)) && r.ideal_contains(&r.rp(&b), x)),
                ("bx_phi = rho(Rb*, lann(b)), lann(b) in lann(x)", second && r.le(&r.lann(&b), &r.lann(x))),
            ]),
            clauses(alloc::vec![
                ("aR in bR", r.le(&r.rp(a), &r.rp(&b))),
                ("lann(b) in lann(a)", r.le(&r.lann(&b), &r.lann(a))),
            ]),
        ],
    })
}

/// Left `v`-dual core grid with `c = va`.
pub fn left_v_dual_core_grid<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    x: &R::Elem,
    v: &R::Elem,
    reading: GridReading,
) -> Result<GridReport> {
    require_involution(ring)?;
    let r = ring;
    let c = r.mul(v, a);
    let cs = r.star(&c)?;
    let xc = r.mul(x, &c);
    let (first, second) = match reading {
        GridReading::Corrected => (
            r.rho(&xc, &r.lp(&c), &r.lann(&cs)) && r.ideal_contains(&r.lp(&c), x),
            r.rho(&xc, &r.rp(&cs), &r.rann(&c)) && r.le(&r.rann(&c), &r.rann(x)),
        ),
        GridReading::Literal => {
            let xa = r.mul(x, a);
            (
                r.rho(&xc, &r.rp(&cs), &r.rann(&c)) && r.ideal_contains(&r.lp(&c), x),
                r.rho(&xa, &r.lp(a), &r.lann(&r.star(a)?)) && r.le(&r.rann(&c), &r.rann(x)),
            )
        }
    };
    Ok(GridReport {
        target: is_left_v_dual_core(r, a, x, v)?,
        groups: alloc::vec![
            clauses(alloc::vec![("first projector clause", first), ("second projector clause", second)]),
            clauses(alloc::vec![
                ("Ra in Rc", r.le(&r.lp(a), &r.lp(&c))),
                ("rann(c) in rann(a)", r.le(&r.rann(&c), &r.rann(a))),
            ]),
        ],
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BcFlavor {
    /// `xR = bR`, `Rx = Rc`.
    Full,
    /// `xR = bR`, `rann(x) = rann(c)`.
    RightHybrid,
    /// `Rx = Rc`, `lann(x) = lann(b)`.
    LeftHybrid,
    /// `lann(x) = lann(b)`, `rann(x) = rann(c)`.
    Annihilator,
}

impl BcFlavor {
    pub const ALL: [BcFlavor; 4] = [BcFlavor::Full, BcFlavor::RightHybrid, BcFlavor::LeftHybrid, BcFlavor::Annihilator];
    pub fn as_str(self) -> &'static str {
        match self {
            BcFlavor::Full => "full",
            BcFlavor::RightHybrid => "right_hybrid",
            BcFlavor::LeftHybrid => "left_hybrid",
            BcFlavor::Annihilator => "annihilator",
        }
    }
    pub fn parse(s: &str) -> Result<Self> {
        BcFlavor::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown (b,c) flavor {s:?}")))
    }
}

pub fn bc_constraints<R: IdealLattice>(
    ring: &R,
    b: &R::Elem,
    c: &R::Elem,
    flavor: BcFlavor,
) -> IdealConstraints<R::Ideal> {
    let r = ring;
    match flavor {
        BcFlavor::Full => IdealConstraints::principals(r.rp(b), r.lp(c)),
        BcFlavor::RightHybrid => IdealConstraints::right(r.rp(b), r.rann(c)),
        BcFlavor::LeftHybrid => IdealConstraints::left(r.lp(c), r.lann(b)),
        BcFlavor::Annihilator => IdealConstraints::annihilators(r.rann(c), r.lann(b)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BcReport<E> {
    pub flavor: BcFlavor,
    pub result: Option<E>,
    pub reason: Option<String>,
    /// `b (cab)⁽¹⁾ c` when `(cab){1}` is nonempty.
    pub closed_form: Option<E>,
    /// Each row: the statements of one item of the closed-form theorem,
    /// which must agree with each other.
    pub closed_form_rows: Vec<Clauses>,
    /// `Some(true)` when an invertibility criterion applies and `cab` is
    /// invertible with `b(cab)⁻¹c` equal to the hybrid inverse.
    pub invertible_case: Option<bool>,
}

/// The closed-form rows for `x = b (cab)⁽¹⁾ c`.
pub fn bc_closed_form_rows<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
    cab1: &R::Elem,
) -> Result<Vec<Clauses>> {
    let r = ring;
    let x = r.mul3(b, cab1, c);
    let cab = r.mul3(c, a, b);
    let ab = r.mul(a, b);
    let outer = holds(r, a, &x, &EquationSet::of(&[2]))?;
    let inner = holds(r, a, &x, &EquationSet::of(&[1]))?;
    let ab_r = r.rp(&ab) == r.rp(a);
    let row = |items: Vec<(&str, bool)>| clauses(items);
    Ok(alloc::vec![
        row(alloc::vec![
            ("x in a{1}", inner),
            ("abR = aR, rann(cab) = rann(ab)", ab_r && r.rann(&cab) == r.rann(&ab)),
            ("abR = aR, Rcab = Rab", ab_r && r.lp(&cab) == r.lp(&ab)),
        ]),
        row(alloc::vec![
            ("x in a{2}, xR = bR", outer && r.rp(&x) == r.rp(b)),
            ("rann(cab) = rann(b)", r.rann(&cab) == r.rann(b)),
            ("Rcab = Rb", r.lp(&cab) == r.lp(b)),
        ]),
        row(alloc::vec![
            ("x in a{2}, rann(x) = rann(c)", outer && r.rann(&x) == r.rann(c)),
            ("cabR = cR", r.rp(&cab) == r.rp(c)),
            ("lann(cab) = lann(c)", r.lann(&cab) == r.lann(c)),
        ]),
        row(alloc::vec![
            ("x in a{2}, Rx = Rc", outer && r.lp(&x) == r.lp(c)),
            ("lann(cab) = lann(c)", r.lann(&cab) == r.lann(c)),
            ("cabR = cR", r.rp(&cab) == r.rp(c)),
        ]),
        row(alloc::vec![
            ("x in a{2}, lann(x) = lann(b)", outer && r.lann(&x) == r.lann(b)),
            ("Rcab = Rb", r.lp(&cab) == r.lp(b)),
            ("rann(cab) = rann(b)", r.rann(&cab) == r.rann(b)),
        ]),
    ])
}

/// Whether one of the invertibility criteria for the right (left) hybrid
/// inverse holds.
pub fn bc_invertibility_hypotheses<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
    flavor: BcFlavor,
) -> bool {
    let r = ring;
    let whole_r = r.whole_ideal(crate::ideal::Side::Right);
    let whole_l = r.whole_ideal(crate::ideal::Side::Left);
    match flavor {
        BcFlavor::RightHybrid => {
            let ab = r.mul(a, b);
            let ca = r.mul(c, a);
            (r.is_zero_ideal(&r.rann(&ab)) && r.rp(c) == whole_r && r.is_sum(&r.rp(&ab), &r.rann(c)))
                || (r.is_zero_ideal(&r.rann(b))
                    && r.rp(&ca) == whole_r
                    && r.is_sum(&r.rp(b), &r.preimage(a, &r.rann(c))))
        }
        BcFlavor::LeftHybrid => {
            let ca = r.mul(c, a);
            let ab = r.mul(a, b);
            (r.is_zero_ideal(&r.lann(&ca)) && r.lp(b) == whole_l && r.is_sum(&r.lp(&ca), &r.lann(b)))
                || (r.is_zero_ideal(&r.lann(c))
                    && r.lp(&ab) == whole_l
                    && r.is_sum(&r.lp(c), &r.preimage(a, &r.lann(b))))
        }
        _ => false,
    }
}

pub fn bc_inverse<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
    flavor: BcFlavor,
) -> Result<BcReport<R::Elem>> {
    for e in [a, b, c] {
        ring.check(e)?;
    }
    let r = ring;
    let cons = bc_constraints(r, b, c, flavor);
    let (result, reason) = match prescribed_inverse(r, a, &cons, false)? {
        Ok(x) => (Some(x), None),
        Err(why) => (None, Some(why)),
    };
    let cab = r.mul3(c, a, b);
    let (closed_form, closed_form_rows) = match r.inner_inverse(&cab) {
        Some(cab1) => {
            let rows = bc_closed_form_rows(r, a, b, c, &cab1)?;
            if rows.iter().any(|row| row.windows(2).any(|w| w[0].1 != w[1].1)) {
                return Err(Error::Internal("closed-form clause rows disagree".into()));
            }
            (Some(r.mul3(b, &cab1, c)), rows)
        }
        None => (None, Vec::new()),
    };
    let invertible_case = if bc_invertibility_hypotheses(r, a, b, c, flavor) {
        let ok = match (r.inverse(&cab), &result) {
            (Some(inv), Some(x)) => r.mul3(b, &inv, c) == *x,
            _ => false,
        };
        if !ok {
            return Err(Error::Internal("invertibility criterion holds but b(cab)^-1 c is not the hybrid inverse".into()));
        }
        Some(true)
    } else {
        None
    };
    Ok(BcReport { flavor, result, reason, closed_form, closed_form_rows, invertible_case })
}

/// The equivalent statements relating the four `(b,c)` flavors, evaluated
/// for `x`. Parenthetical alternatives are listed as separate statements.
pub fn bc_equality_clauses<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
    x: &R::Elem,
) -> Result<Clauses> {
    let r = ring;
    let is = |f: BcFlavor| has_prescribed(r, a, x, &bc_constraints(r, b, c, f), Mode::Outer);
    let (rh, lh, full, ann) = (
        is(BcFlavor::RightHybrid)?,
        is(BcFlavor::LeftHybrid)?,
        is(BcFlavor::Full)?,
        is(BcFlavor::Annihilator)?,
    );
    let cab = r.mul3(c, a, b);
    let cab_regular = r.inner_inverse(&cab).is_some();
    let b_regular = r.inner_inverse(b).is_some();
    let c_regular = r.inner_inverse(c).is_some();
    let in_br = r.ideal_contains(&r.rp(b), x);
    let in_rc = r.ideal_contains(&r.lp(c), x);
    let any_inner_gives_x = if cab_regular {
        let all: Vec<R::Elem> = if r.size().is_some() {
            enumerate_inverse_set(r, &cab, &EquationSet::of(&[1]))?
        } else {
            r.inner_inverse(&cab).into_iter().collect()
        };
        all.iter().all(|g| r.mul3(b, g, c) == *x)
    } else {
        false
    };
    let lp_ok = r.lp(&cab) == r.lp(b);
    let rn_ok = r.rann(&cab) == r.rann(b);
    let rp_ok = r.rp(&cab) == r.rp(c);
    let ln_ok = r.lann(&cab) == r.lann(c);
    Ok(clauses(alloc::vec![
        ("right hybrid, x in Rc", rh && in_rc),
        ("right hybrid, c{1} nonempty", rh && c_regular),
        ("right hybrid, (cab){1} nonempty", rh && cab_regular),
        ("left hybrid, x in bR", lh && in_br),
        ("left hybrid, b{1} nonempty", lh && b_regular),
        ("left hybrid, (cab){1} nonempty", lh && cab_regular),
        ("(b,c) inverse", full),
        ("annihilator, x in bR, x in Rc", ann && in_br && in_rc),
        ("annihilator, b{1} and c{1} nonempty", ann && b_regular && c_regular),
        ("annihilator, x in bR, c{1} nonempty", ann && in_br && c_regular),
        ("annihilator, b{1} nonempty, x in Rc", ann && b_regular && in_rc),
        ("annihilator, (cab){1} nonempty", ann && cab_regular),
        ("closed form, Rcab = Rb, cabR = cR", cab_regular && lp_ok && rp_ok && any_inner_gives_x),
        ("closed form, rann(cab) = rann(b), lann(cab) = lann(c)", cab_regular && rn_ok && ln_ok && any_inner_gives_x),
    ]))
}

fn check_idempotent<R: Ring>(ring: &R, p: &R::Elem, name: &str) -> Result<()> {
    ring.check(p)?;
    if is_idempotent(ring, p) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{name} = {} is not idempotent", ring.render(p))))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PqFlavor {
    /// `x ∈ a{2}`, `xa = p`, `ax = 1 - q`.
    DjordjevicWei,
    /// `xR = pR`, `rann(x) = qR`.
    ImageKernel,
    /// `p(1 - p + ap)⁻¹`; uses only `p`.
    BottDuffin,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PqReport<E> {
    pub flavor: PqFlavor,
    pub result: Option<E>,
    pub reason: Option<String>,
    pub notes: Vec<String>,
}

/// `x = px = xq`, `xap = p`, `qax = q`.
pub fn is_bott_duffin_pq<R: Ring>(ring: &R, a: &R::Elem, x: &R::Elem, p: &R::Elem, q: &R::Elem) -> bool {
    let r = ring;
    r.mul(p, x) == *x && r.mul(x, q) == *x && r.mul3(x, a, p) == *p && r.mul3(q, a, x) == *q
}

pub fn is_djordjevic_wei<R: Ring>(ring: &R, a: &R::Elem, x: &R::Elem, p: &R::Elem, q: &R::Elem) -> Result<bool> {
    let one_minus_q = ring.sub(&ring.one(), q);
    Ok(holds(ring, a, x, &EquationSet::of(&[2]))? && ring.mul(x, a) == *p && ring.mul(a, x) == one_minus_q)
}

pub fn bott_duffin<R: Ring>(ring: &R, a: &R::Elem, p: &R::Elem) -> Result<Option<R::Elem>> {
    check_idempotent(ring, p, "p")?;
    let r = ring;
    let m = r.add(&r.sub(&r.one(), p), &r.mul(a, p));
    Ok(r.inverse(&m).map(|inv| r.mul(p, &inv)))
}

pub fn pq_inverse<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    p: &R::Elem,
    q: &R::Elem,
    flavor: PqFlavor,
) -> Result<PqReport<R::Elem>> {
    ring.check(a)?;
    check_idempotent(ring, p, "p")?;
    check_idempotent(ring, q, "q")?;
    let r = ring;
    let one = r.one();
    let mut notes = Vec::new();
    let image_kernel = prescribed_inverse(r, a, &IdealConstraints::right(r.rp(p), r.rp(q)), false)?;
    if let Ok(x) = &image_kernel {
        let q_bar = r.sub(&one, q);
        if !is_bott_duffin_pq(r, a, x, p, &q_bar) {
            return Err(Error::Internal("image-kernel inverse is not the Bott-Duffin (p,1-q) inverse".into()));
        }
        notes.push(String::from("agrees with the Bott-Duffin (p,1-q) inverse"));
    }
    let (result, reason) = match flavor {
        PqFlavor::ImageKernel => match image_kernel {
            Ok(x) => (Some(x), None),
            Err(why) => (None, Some(why)),
        },
        PqFlavor::DjordjevicWei => match image_kernel {
            Ok(x) if is_djordjevic_wei(r, a, &x, p, q)? => {
                let ok = r.rann(p) == r.preimage(a, &r.rp(q)) && r.lp(q) == r.preimage(a, &r.lann(p));
                if !ok {
                    return Err(Error::Internal("Djordjevic-Wei inverse without rann(p) = a^-1(qR)".into()));
                }
                notes.push(String::from("rann(p) = a^-1(qR) and Rq = a^-1(lann(p))"));
                (Some(x), None)
            }
            Ok(_) => (None, Some(String::from("xa != p or ax != 1 - q for the image-kernel inverse"))),
            Err(why) => (None, Some(why)),
        },
        PqFlavor::BottDuffin => match bott_duffin(r, a, p)? {
            Some(x) => {
                if !is_bott_duffin_pq(r, a, &x, p, p) {
                    return Err(Error::Internal("Bott-Duffin p inverse fails the (p,p) equations".into()));
                }
                (Some(x), None)
            }
            None => (None, Some(String::from("1 - p + ap is not invertible"))),
        },
    };
    Ok(PqReport { flavor, result, reason, notes })
}

/// The four equivalent descriptions of the Djordjevic-Wei inverse, for `x`.
pub fn djordjevic_wei_clauses<R: IdealLattice>(
    ring: &R,
    a: &R::Elem,
    x: &R::Elem,
    p: &R::Elem,
    q: &R::Elem,
) -> Result<Clauses> {
    check_idempotent(ring, p, "p")?;
    check_idempotent(ring, q, "q")?;
    let r = ring;
    let one = r.one();
    let (ax, xa) = (r.mul(a, x), r.mul(x, a));
    let (p_bar, q_bar) = (r.sub(&one, p), r.sub(&one, q));
    let outer = holds(r, a, x, &EquationSet::of(&[2]))?;
    let item2 = r.le(&r.rp(&r.mul(a, &p_bar)), &r.rp(q))
        && r.mul3(x, a, p) == *p
        && q_bar == ax
        && r.is_zero(&r.mul(x, q));
    let item3 = r.le(&r.lp(&r.mul(q, a)), &r.lp(&p_bar))
        && *p == xa
        && r.mul(p, x) == *x
        && r.mul(&q_bar, &ax) == q_bar;
    let (xar, pr, rxa, rp_) = (r.rp(&xa), r.rp(p), r.rann(&xa), r.rann(p));
    let (axr, rq, rax, qr) = (r.rp(&ax), r.rann(q), r.rann(&ax), r.rp(q));
    let first_a = r.le(&xar, &pr) && r.le(&rxa, &rp_);
    let first_b = r.le(&pr, &xar) && r.le(&rp_, &rxa);
    let second_a = r.le(&axr, &rq) && r.le(&rax, &qr);
    let second_b = r.le(&rq, &axr) && r.le(&qr, &rax);
    Ok(clauses(alloc::vec![
        ("Djordjevic-Wei (p,q) inverse", is_djordjevic_wei(r, a, x, p, q)?),
        ("a(1-p)R in qR, xap = p, 1-q = ax, xq = 0", item2),
        ("Rqa in R(1-p), p = xa, px = x, (1-q)ax = 1-q", item3),
        ("a{2}, xaR in pR, rann(xa) in rann(p), axR in rann(q), rann(ax) in qR", outer && first_a && second_a),
        ("a{2}, xaR in pR, rann(xa) in rann(p), rann(q) in axR, qR in rann(ax)", outer && first_a && second_b),
        ("a{2}, pR in xaR, rann(p) in rann(xa), axR in rann(q), rann(ax) in qR", outer && first_b && second_a),
        ("a{2}, pR in xaR, rann(p) in rann(xa), rann(q) in axR, qR in rann(ax)", outer && first_b && second_b),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::geninv::moore_penrose;
    use crate::ring::{Involution, MatrixRing};

    fn q2() -> MatrixRing<Rationals> {
        MatrixRing::new(Rationals, 2, Involution::Transpose).unwrap()
    }

    #[test]
    fn weighted_mp_and_cores_reduce_at_unit_weight() {
        let r = q2();
        let a = r.from_ints(&[&[2, -2], &[0, 0]]).unwrap();
        let one = r.one();
        assert_eq!(weighted_mp(&r, &a, &one, &one).unwrap(), moore_penrose(&r, &a).unwrap());
        assert_eq!(
            e_core(&r, &a, &one).unwrap(),
            Some(r.from_strs(&[&["1/2", "0"], &["0", "0"]]).unwrap())
        );
        assert_eq!(
            f_dual_core(&r, &a, &one).unwrap(),
            Some(r.from_strs(&[&["1/4", "-1/4"], &["-1/4", "1/4"]]).unwrap())
        );
        assert_eq!(w_core(&r, &a, &one).unwrap(), Ok(r.from_strs(&[&["1/2", "0"], &["0", "0"]]).unwrap()));
        let e = r.from_ints(&[&[2, 0], &[0, 1]]).unwrap();
        let x = weighted_mp(&r, &a, &e, &e).unwrap().unwrap();
        assert!(is_weighted_mp(&r, &a, &x, &e, &e).unwrap());
        assert!(weighted_mp_grid(&r, &a, &x, &e, &e).unwrap().consistent());
    }

    #[test]
    fn bad_weights_are_named() {
        let r = q2();
        let a = r.unit(1, 2);
        let e = r.from_ints(&[&[1, 1], &[0, 1]]).unwrap();
        match weighted_mp(&r, &a, &e, &r.one()) {
            Err(Error::Precondition(m)) => assert!(m.contains("not symmetric")),
            other => panic!("{other:?}"),
        }
        match weighted_mp(&r, &a, &r.one(), &r.zero()) {
            Err(Error::Precondition(m)) => assert!(m.contains("not invertible")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bc_examples() {
        let r = q2();
        let a = r.from_ints(&[&[2, -2], &[0, 0]]).unwrap();
        let rep = bc_inverse(&r, &a, &a, &a, BcFlavor::Full).unwrap();
        assert_eq!(rep.result, Some(r.from_strs(&[&["1/2", "-1/2"], &["0", "0"]]).unwrap()));
        assert_eq!(rep.closed_form, rep.result);
        let f5 = MatrixRing::new(PrimeField::new(5).unwrap(), 2, Involution::Transpose).unwrap();
        let (a, b) = (f5.unit(1, 2), f5.unit(2, 1));
        let rep = bc_inverse(&f5, &a, &b, &b, BcFlavor::Full).unwrap();
        assert_eq!(rep.result, Some(b.clone()));
        let clauses = bc_equality_clauses(&f5, &a, &b, &b, &b).unwrap();
        assert!(clauses.iter().all(|c| c.1), "{clauses:?}");
    }

    #[test]
    fn pq_examples() {
        let r = q2();
        let a = r.from_ints(&[&[2, -2], &[0, 0]]).unwrap();
        let mp = moore_penrose(&r, &a).unwrap().unwrap();
        let p = r.mul(&mp, &a);
        let q = r.sub(&r.one(), &r.mul(&a, &mp));
        let rep = pq_inverse(&r, &a, &p, &q, PqFlavor::DjordjevicWei).unwrap();
        assert_eq!(rep.result, Some(mp.clone()));
        assert!(holds(&r, &a, &mp, &EquationSet::of(&[1, 2])).unwrap());
        let cl = djordjevic_wei_clauses(&r, &a, &mp, &p, &q).unwrap();
        assert!(cl.iter().all(|c| c.1), "{cl:?}");
        let inv = r.from_ints(&[&[1, 1], &[0, 1]]).unwrap();
        let bd = pq_inverse(&r, &inv, &r.one(), &r.zero(), PqFlavor::BottDuffin).unwrap();
        assert_eq!(bd.result, r.inverse(&inv));
    }

    #[test]
    fn grid_violation_search() {
        let g = GridReport {
            target: false,
            groups: alloc::vec![
                clauses(alloc::vec![("p", true), ("q", false)]),
                clauses(alloc::vec![("u", true)]),
            ],
        };
        assert!(!g.consistent());
        assert_eq!(g.first_violation(), Some(alloc::vec![String::from("p"), String::from("u")]));
    }
}
