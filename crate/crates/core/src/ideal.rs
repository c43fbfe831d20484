//! One-sided ideals, annihilators, direct sums and complements.
//!
//! Each backend picks its own ideal representation through
//! [`IdealLattice::Ideal`]: `Z_n` uses [`ModIdeal`] (the set `dZ_n`, stored
//! by its canonical generator `d | n`), matrix rings use [`SubspaceIdeal`].
//! [`brute`] recomputes everything extensionally on finite rings.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;
use core::hash::Hash;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{self, Mat};
use crate::ring::{ElemData, MatrixRing, Ring, Zn};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        }
    }
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }
}

/// Backend-neutral rendering of an ideal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdealData {
    Elements(Vec<ElemData>),
    /// Reduced echelon basis of the column space (right) or row space (left).
    Basis(Vec<Vec<String>>),
}

/// Ideal operations of a ring backend.
///
/// Binary operations assume both ideals have the same side; the checked
/// free functions in this module enforce it.
pub trait IdealLattice: Ring {
    type Ideal: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    fn side_of(&self, i: &Self::Ideal) -> Side;
    /// `aR` (right) or `Ra` (left).
    fn principal(&self, a: &Self::Elem, side: Side) -> Self::Ideal;
    /// `rann(a)` (right) or `lann(a)` (left).
    fn annihilator(&self, a: &Self::Elem, side: Side) -> Self::Ideal;
    fn ideal_contains(&self, i: &Self::Ideal, r: &Self::Elem) -> bool;
    fn ideal_le(&self, i: &Self::Ideal, j: &Self::Ideal) -> bool;
    fn ideal_meet(&self, i: &Self::Ideal, j: &Self::Ideal) -> Self::Ideal;
    fn ideal_join(&self, i: &Self::Ideal, j: &Self::Ideal) -> Self::Ideal;
    /// `ρ_{S,T}(1)` when `R = S ⊕ T`.
    fn unit_component(&self, s: &Self::Ideal, t: &Self::Ideal) -> Option<Self::Elem>;
    /// `aS` for a right ideal, `Sa` for a left ideal.
    fn mul_ideal(&self, a: &Self::Elem, i: &Self::Ideal) -> Self::Ideal;
    /// `{r : ar ∈ T}` for a right ideal, `{r : ra ∈ T}` for a left ideal.
    fn preimage(&self, a: &Self::Elem, i: &Self::Ideal) -> Self::Ideal;
    /// `lann(S)` for a right ideal `S`, `rann(S)` for a left ideal `S`.
    fn ideal_annihilator(&self, i: &Self::Ideal) -> Self::Ideal;
    /// First complement in the backend's canonical order.
    fn complement(&self, i: &Self::Ideal) -> Option<Self::Ideal>;
    /// Additive generators of the ideal.
    fn spanning_set(&self, i: &Self::Ideal) -> Vec<Self::Elem>;
    /// Some `x ∈ I` with `ax = target` (right) or `xa = target` (left).
    fn solve_in(&self, a: &Self::Elem, i: &Self::Ideal, target: &Self::Elem) -> Option<Self::Elem>;
    /// The smallest ideal of the given side containing `elems`.
    fn generated(&self, side: Side, elems: &[Self::Elem]) -> Self::Ideal;
    fn ideal_to_data(&self, i: &Self::Ideal) -> IdealData;
    fn ideal_from_data(&self, side: Side, d: &IdealData) -> Result<Self::Ideal>;

    /// Ideals the oracle quantifies over, in canonical order.
    fn ideal_family(&self, side: Side) -> Result<Vec<Self::Ideal>> {
        let mut set = BTreeSet::new();
        for a in self.iter_elements()? {
            set.insert(self.principal(&a, side));
            set.insert(self.annihilator(&a, side));
        }
        let base: Vec<_> = set.iter().cloned().collect();
        for i in base {
            if let Some(c) = self.complement(&i) {
                set.insert(c);
            }
        }
        Ok(set.into_iter().collect())
    }

    fn ideal_elements(&self, i: &Self::Ideal) -> Result<Vec<Self::Elem>> {
        Ok(self.iter_elements()?.filter(|r| self.ideal_contains(i, r)).collect())
    }

    fn zero_ideal(&self, side: Side) -> Self::Ideal {
        self.principal(&self.zero(), side)
    }
    fn whole_ideal(&self, side: Side) -> Self::Ideal {
        self.principal(&self.one(), side)
    }
    fn ideal_eq(&self, i: &Self::Ideal, j: &Self::Ideal) -> bool {
        i == j
    }
    fn is_zero_ideal(&self, i: &Self::Ideal) -> bool {
        *i == self.zero_ideal(self.side_of(i))
    }
    fn meets_trivially(&self, i: &Self::Ideal, j: &Self::Ideal) -> bool {
        self.is_zero_ideal(&self.ideal_meet(i, j))
    }
    fn render_ideal(&self, i: &Self::Ideal) -> String {
        let body = match self.ideal_to_data(i) {
            IdealData::Elements(es) => {
                let parts: Vec<String> = es.iter().map(crate::ring::render_data).collect();
                format!("{{{}}}", parts.join(","))
            }
            IdealData::Basis(b) => {
                let parts: Vec<String> = b.iter().map(|v| format!("({})", v.join(","))).collect();
                format!("span[{}]", parts.join(","))
            }
        };
        format!("{}:{}", self.side_of(i).as_str(), body)
    }
}

/// Short names for the ideals and projector tests used throughout.
pub trait Shorthand: IdealLattice {
    /// `aR`
    fn rp(&self, a: &Self::Elem) -> Self::Ideal {
        self.principal(a, Side::Right)
    }
    /// `Ra`
    fn lp(&self, a: &Self::Elem) -> Self::Ideal {
        self.principal(a, Side::Left)
    }
    fn rann(&self, a: &Self::Elem) -> Self::Ideal {
        self.annihilator(a, Side::Right)
    }
    fn lann(&self, a: &Self::Elem) -> Self::Ideal {
        self.annihilator(a, Side::Left)
    }
    fn le(&self, i: &Self::Ideal, j: &Self::Ideal) -> bool {
        self.ideal_le(i, j)
    }
    /// `φ_b = ρ_{S,T}` for right ideals, `_bφ = ρ_{S,T}` for left ideals.
    fn rho(&self, b: &Self::Elem, s: &Self::Ideal, t: &Self::Ideal) -> bool {
        self.side_of(s) == self.side_of(t) && self.unit_component(s, t).as_ref() == Some(b)
    }
    /// `ρ_{S,T}(1)` if defined.
    fn unit(&self, s: &Self::Ideal, t: &Self::Ideal) -> Option<Self::Elem> {
        if self.side_of(s) != self.side_of(t) {
            return None;
        }
        self.unit_component(s, t)
    }
    fn is_sum(&self, s: &Self::Ideal, t: &Self::Ideal) -> bool {
        self.unit(s, t).is_some()
    }
}

impl<R: IdealLattice> Shorthand for R {}

fn same_side<R: IdealLattice>(ring: &R, i: &R::Ideal, j: &R::Ideal) -> Result<()> {
    if ring.side_of(i) == ring.side_of(j) {
        Ok(())
    } else {
        Err(Error::SideMismatch)
    }
}

pub fn principal_ideal<R: IdealLattice>(ring: &R, a: &R::Elem, side: Side) -> Result<R::Ideal> {
    ring.check(a)?;
    Ok(ring.principal(a, side))
}

pub fn annihilator<R: IdealLattice>(ring: &R, a: &R::Elem, side: Side) -> Result<R::Ideal> {
    ring.check(a)?;
    Ok(ring.annihilator(a, side))
}

pub fn ideal_subset<R: IdealLattice>(ring: &R, i: &R::Ideal, j: &R::Ideal) -> Result<bool> {
    same_side(ring, i, j)?;
    Ok(ring.ideal_le(i, j))
}

/// Witness that `R = S ⊕ T`; the S-component of `r` is `unit·r` (right
/// ideals) or `r·unit` (left ideals).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectSumWitness<R: IdealLattice> {
    pub left_part: R::Ideal,
    pub right_part: R::Ideal,
    pub side: Side,
    pub unit: R::Elem,
}

impl<R: IdealLattice> DirectSumWitness<R> {
    pub fn decompose(&self, ring: &R, r: &R::Elem) -> (R::Elem, R::Elem) {
        let s = match self.side {
            Side::Right => ring.mul(&self.unit, r),
            Side::Left => ring.mul(r, &self.unit),
        };
        let t = ring.sub(r, &s);
        (s, t)
    }
}

pub fn direct_sum<R: IdealLattice>(
    ring: &R,
    s: &R::Ideal,
    t: &R::Ideal,
) -> Result<Option<DirectSumWitness<R>>> {
    same_side(ring, s, t)?;
    Ok(ring.unit_component(s, t).map(|unit| DirectSumWitness {
        left_part: s.clone(),
        right_part: t.clone(),
        side: ring.side_of(s),
        unit,
    }))
}

pub fn complement<R: IdealLattice>(ring: &R, s: &R::Ideal) -> Option<R::Ideal> {
    ring.complement(s)
}

/// `i* j = 0` for all pairs (flavor right) or `i j* = 0` (flavor left).
pub fn orthogonal<R: IdealLattice>(
    ring: &R,
    i: &R::Ideal,
    j: &R::Ideal,
    flavor: Side,
) -> Result<bool> {
    if !ring.has_involution() {
        return Err(Error::UnsupportedInvolution);
    }
    let gi = ring.spanning_set(i);
    let gj = ring.spanning_set(j);
    for s in &gi {
        for t in &gj {
            let p = match flavor {
                Side::Right => ring.mul(&ring.star(s)?, t),
                Side::Left => ring.mul(s, &ring.star(t)?),
            };
            if !ring.is_zero(&p) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Ideal of `Z_n` given by the canonical generator `d | n` (`d = n` is `{0}`).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModIdeal {
    pub side: Side,
    pub divisor: u64,
}

impl Zn {
    fn ideal(&self, side: Side, d: u64) -> ModIdeal {
        ModIdeal {
            side,
            divisor: d.gcd(&self.modulus()),
        }
    }
}

impl IdealLattice for Zn {
    type Ideal = ModIdeal;

    fn side_of(&self, i: &ModIdeal) -> Side {
        i.side
    }
    fn principal(&self, a: &u64, side: Side) -> ModIdeal {
        self.ideal(side, *a)
    }
    fn annihilator(&self, a: &u64, side: Side) -> ModIdeal {
        let n = self.modulus();
        self.ideal(side, n / a.gcd(&n))
    }
    fn ideal_contains(&self, i: &ModIdeal, r: &u64) -> bool {
        r % i.divisor == 0
    }
    fn ideal_le(&self, i: &ModIdeal, j: &ModIdeal) -> bool {
        i.divisor % j.divisor == 0
    }
    fn ideal_meet(&self, i: &ModIdeal, j: &ModIdeal) -> ModIdeal {
        self.ideal(i.side, i.divisor.lcm(&j.divisor))
    }
    fn ideal_join(&self, i: &ModIdeal, j: &ModIdeal) -> ModIdeal {
        self.ideal(i.side, i.divisor.gcd(&j.divisor))
    }
    fn unit_component(&self, s: &ModIdeal, t: &ModIdeal) -> Option<u64> {
        let n = self.modulus();
        if s.divisor.gcd(&t.divisor) != 1 || s.divisor.lcm(&t.divisor) != n {
            return None;
        }
        (0..n / s.divisor)
            .map(|k| (k * s.divisor) % n)
            .find(|x| self.ideal_contains(t, &self.sub(&1, x)))
    }
    fn mul_ideal(&self, a: &u64, i: &ModIdeal) -> ModIdeal {
        self.ideal(i.side, self.mul(a, &(i.divisor % self.modulus())))
    }
    fn preimage(&self, a: &u64, i: &ModIdeal) -> ModIdeal {
        self.ideal(i.side, i.divisor / a.gcd(&i.divisor))
    }
    fn ideal_annihilator(&self, i: &ModIdeal) -> ModIdeal {
        self.ideal(i.side.flip(), self.modulus() / i.divisor)
    }
    fn complement(&self, i: &ModIdeal) -> Option<ModIdeal> {
        (0..self.modulus())
            .map(|r| self.principal(&r, i.side))
            .find(|c| self.unit_component(i, c).is_some())
    }
    fn spanning_set(&self, i: &ModIdeal) -> Vec<u64> {
        vec![i.divisor % self.modulus()]
    }
    fn solve_in(&self, a: &u64, i: &ModIdeal, target: &u64) -> Option<u64> {
        let n = self.modulus();
        (0..n / i.divisor)
            .map(|k| (k * i.divisor) % n)
            .find(|x| self.mul(a, x) == *target)
    }
    fn generated(&self, side: Side, elems: &[u64]) -> ModIdeal {
        let g = elems.iter().fold(self.modulus(), |g, e| g.gcd(e));
        self.ideal(side, g)
    }
    fn ideal_to_data(&self, i: &ModIdeal) -> IdealData {
        IdealData::Elements(
            self.ideal_elements(i)
                .expect("Z_n is finite")
                .into_iter()
                .map(ElemData::Residue)
                .collect(),
        )
    }
    fn ideal_from_data(&self, side: Side, d: &IdealData) -> Result<ModIdeal> {
        let IdealData::Elements(es) = d else {
            return Err(Error::MalformedConstraint(
                "Z_n ideals are given as element sets".into(),
            ));
        };
        let elems = es.iter().map(|e| self.from_data(e)).collect::<Result<Vec<_>>>()?;
        exact_ideal(self, side, &elems)
    }
    fn ideal_family(&self, side: Side) -> Result<Vec<ModIdeal>> {
        let n = self.modulus();
        Ok((1..=n).filter(|d| n % d == 0).map(|d| self.ideal(side, d)).collect())
    }
    fn ideal_elements(&self, i: &ModIdeal) -> Result<Vec<u64>> {
        Ok((0..self.modulus()).step_by(i.divisor as usize).collect())
    }
}

/// The ideal generated by `elems`, provided it has no other elements.
pub fn exact_ideal<R: IdealLattice>(ring: &R, side: Side, elems: &[R::Elem]) -> Result<R::Ideal> {
    let i = ring.generated(side, elems);
    let given: BTreeSet<_> = elems.iter().cloned().collect();
    match ring.ideal_elements(&i) {
        Ok(all) if all.len() == given.len() && all.iter().all(|e| given.contains(e)) => Ok(i),
        Ok(_) => Err(Error::MalformedConstraint(format!(
            "element set is not a {} ideal",
            side.as_str()
        ))),
        Err(Error::NotEnumerable) if given.iter().all(|e| ring.is_zero(e)) => Ok(i),
        Err(Error::NotEnumerable) => Err(Error::MalformedConstraint(
            "a finite nonzero set is never an ideal of an infinite ring".into(),
        )),
        Err(e) => Err(e),
    }
}

/// Ideal of `M_n(F)`: `{X : col(X) ⊆ V}` (right) or `{X : row(X) ⊆ V}` (left),
/// with `V` stored as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubspaceIdeal<S> {
    pub side: Side,
    pub basis: Vec<Vec<S>>,
}

impl<F: Field> MatrixRing<F> {
    fn sub_ideal(&self, side: Side, vectors: &[Vec<F::Scalar>]) -> SubspaceIdeal<F::Scalar> {
        SubspaceIdeal {
            side,
            basis: linalg::span(self.field(), self.size_n(), vectors),
        }
    }

    /// Vectors of `X` constrained by an ideal of the given side.
    fn vectors_of(&self, side: Side, x: &Mat<F::Scalar>) -> Vec<Vec<F::Scalar>> {
        match side {
            Side::Right => (0..x.cols()).map(|j| x.col(j)).collect(),
            Side::Left => x.to_rows(),
        }
    }

    pub fn ideal_from_basis(&self, side: Side, vectors: &[Vec<F::Scalar>]) -> Result<SubspaceIdeal<F::Scalar>> {
        if vectors.iter().any(|v| v.len() != self.size_n()) {
            return Err(Error::MalformedConstraint(format!(
                "basis vectors must have length {}",
                self.size_n()
            )));
        }
        Ok(self.sub_ideal(side, vectors))
    }
}

impl<F: Field> IdealLattice for MatrixRing<F> {
    type Ideal = SubspaceIdeal<F::Scalar>;

    fn side_of(&self, i: &Self::Ideal) -> Side {
        i.side
    }
    fn principal(&self, a: &Self::Elem, side: Side) -> Self::Ideal {
        self.sub_ideal(side, &self.vectors_of(side, a))
    }
    fn annihilator(&self, a: &Self::Elem, side: Side) -> Self::Ideal {
        let f = self.field();
        let ns = match side {
            Side::Right => linalg::nullspace(f, a),
            Side::Left => linalg::nullspace(f, &a.transpose()),
        };
        self.sub_ideal(side, &ns)
    }
    fn ideal_contains(&self, i: &Self::Ideal, r: &Self::Elem) -> bool {
        self.vectors_of(i.side, r)
            .iter()
            .all(|v| linalg::in_span(self.field(), &i.basis, v))
    }
    fn ideal_le(&self, i: &Self::Ideal, j: &Self::Ideal) -> bool {
        i.basis.iter().all(|v| linalg::in_span(self.field(), &j.basis, v))
    }
    fn ideal_meet(&self, i: &Self::Ideal, j: &Self::Ideal) -> Self::Ideal {
        SubspaceIdeal {
            side: i.side,
            basis: linalg::intersect(self.field(), self.size_n(), &i.basis, &j.basis),
        }
    }
    fn ideal_join(&self, i: &Self::Ideal, j: &Self::Ideal) -> Self::Ideal {
        let mut all = i.basis.clone();
        all.extend(j.basis.iter().cloned());
        self.sub_ideal(i.side, &all)
    }
    fn unit_component(&self, s: &Self::Ideal, t: &Self::Ideal) -> Option<Self::Elem> {
        let (f, n) = (self.field(), self.size_n());
        let k = s.basis.len();
        if k + t.basis.len() != n {
            return None;
        }
        let mut all = s.basis.clone();
        all.extend(t.basis.iter().cloned());
        let keep = Mat::from_fn(n, n, |i, j| if i == j && i < k { f.one() } else { f.zero() });
        match s.side {
            Side::Right => {
                let m = Mat::from_cols(n, &all);
                let inv = linalg::inverse(f, &m)?;
                Some(linalg::mul(f, &linalg::mul(f, &m, &keep), &inv))
            }
            Side::Left => {
                let m = Mat::from_rows(all).ok()?;
                let inv = linalg::inverse(f, &m)?;
                Some(linalg::mul(f, &linalg::mul(f, &inv, &keep), &m))
            }
        }
    }
    fn mul_ideal(&self, a: &Self::Elem, i: &Self::Ideal) -> Self::Ideal {
        let f = self.field();
        let img: Vec<_> = match i.side {
            Side::Right => i.basis.iter().map(|v| linalg::mat_vec(f, a, v)).collect(),
            Side::Left => i.basis.iter().map(|v| linalg::vec_mat(f, v, a)).collect(),
        };
        self.sub_ideal(i.side, &img)
    }
    fn preimage(&self, a: &Self::Elem, i: &Self::Ideal) -> Self::Ideal {
        let (f, n) = (self.field(), self.size_n());
        let ann = linalg::annihilator(f, n, &i.basis);
        if ann.is_empty() {
            return self.whole_ideal(i.side);
        }
        let nmat = Mat::from_rows(ann).expect("rectangular");
        let m = match i.side {
            Side::Right => linalg::mul(f, &nmat, a),
            Side::Left => linalg::mul(f, &nmat, &a.transpose()),
        };
        self.sub_ideal(i.side, &linalg::nullspace(f, &m))
    }
    fn ideal_annihilator(&self, i: &Self::Ideal) -> Self::Ideal {
        SubspaceIdeal {
            side: i.side.flip(),
            basis: linalg::annihilator(self.field(), self.size_n(), &i.basis),
        }
    }
    fn complement(&self, i: &Self::Ideal) -> Option<Self::Ideal> {
        let (f, n) = (self.field(), self.size_n());
        let mut cur = i.basis.clone();
        let mut added = Vec::new();
        for e in 0..n {
            let v: Vec<_> = (0..n).map(|j| if j == e { f.one() } else { f.zero() }).collect();
            if !linalg::in_span(f, &cur, &v) {
                cur.push(v.clone());
                added.push(v);
            }
        }
        Some(self.sub_ideal(i.side, &added))
    }
    fn spanning_set(&self, i: &Self::Ideal) -> Vec<Self::Elem> {
        let (f, n) = (self.field(), self.size_n());
        let mut out = Vec::new();
        for v in &i.basis {
            for j in 0..n {
                out.push(match i.side {
                    Side::Right => Mat::from_fn(n, n, |r, c| if c == j { v[r].clone() } else { f.zero() }),
                    Side::Left => Mat::from_fn(n, n, |r, c| if r == j { v[c].clone() } else { f.zero() }),
                });
            }
        }
        out
    }
    fn solve_in(&self, a: &Self::Elem, i: &Self::Ideal, target: &Self::Elem) -> Option<Self::Elem> {
        let (f, n) = (self.field(), self.size_n());
        if i.basis.is_empty() {
            return self.is_zero(target).then(|| self.zero());
        }
        match i.side {
            Side::Right => {
                let b = Mat::from_cols(n, &i.basis);
                let y = linalg::solve(f, &linalg::mul(f, a, &b), target)?;
                Some(linalg::mul(f, &b, &y))
            }
            Side::Left => {
                let b = Mat::from_rows(i.basis.clone()).ok()?;
                let ba = linalg::mul(f, &b, a);
                let yt = linalg::solve(f, &ba.transpose(), &target.transpose())?;
                Some(linalg::mul(f, &yt.transpose(), &b))
            }
        }
    }
    fn generated(&self, side: Side, elems: &[Self::Elem]) -> Self::Ideal {
        let vs: Vec<_> = elems.iter().flat_map(|e| self.vectors_of(side, e)).collect();
        self.sub_ideal(side, &vs)
    }
    fn ideal_to_data(&self, i: &Self::Ideal) -> IdealData {
        let f = self.field();
        IdealData::Basis(
            i.basis
                .iter()
                .map(|v| v.iter().map(|x| f.render(x)).collect())
                .collect(),
        )
    }
    fn ideal_from_data(&self, side: Side, d: &IdealData) -> Result<Self::Ideal> {
        match d {
            IdealData::Basis(b) => {
                let vs = b
                    .iter()
                    .map(|v| v.iter().map(|s| self.field().parse(s)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                self.ideal_from_basis(side, &vs)
            }
            IdealData::Elements(es) => {
                let elems = es.iter().map(|e| self.from_data(e)).collect::<Result<Vec<_>>>()?;
                exact_ideal(self, side, &elems)
            }
        }
    }
    fn is_zero_ideal(&self, i: &Self::Ideal) -> bool {
        i.basis.is_empty()
    }
}

/// Extensional recomputation of ideal data on finite rings, used as ground truth.
pub mod brute {
    use super::*;

    /// An ideal as an explicit, canonically ordered element set.
    #[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
    pub struct ExtIdeal<E: Ord> {
        pub side: Side,
        pub elements: BTreeSet<E>,
    }

    pub fn of<R: IdealLattice>(ring: &R, i: &R::Ideal) -> Result<ExtIdeal<R::Elem>> {
        Ok(ExtIdeal {
            side: ring.side_of(i),
            elements: ring.ideal_elements(i)?.into_iter().collect(),
        })
    }

    pub fn principal<R: Ring>(ring: &R, a: &R::Elem, side: Side) -> Result<ExtIdeal<R::Elem>> {
        let elements = ring
            .iter_elements()?
            .map(|r| match side {
                Side::Right => ring.mul(a, &r),
                Side::Left => ring.mul(&r, a),
            })
            .collect();
        Ok(ExtIdeal { side, elements })
    }

    pub fn annihilator<R: Ring>(ring: &R, a: &R::Elem, side: Side) -> Result<ExtIdeal<R::Elem>> {
        let elements = ring
            .iter_elements()?
            .filter(|r| {
                let p = match side {
                    Side::Right => ring.mul(a, r),
                    Side::Left => ring.mul(r, a),
                };
                ring.is_zero(&p)
            })
            .collect();
        Ok(ExtIdeal { side, elements })
    }

    /// Closure scan: contains 0, closed under +, − and one-sided multiplication.
    pub fn is_ideal<R: Ring>(ring: &R, i: &ExtIdeal<R::Elem>) -> Result<bool> {
        if !i.elements.contains(&ring.zero()) {
            return Ok(false);
        }
        let all = ring.elements()?;
        for s in &i.elements {
            if !i.elements.contains(&ring.neg(s)) {
                return Ok(false);
            }
            for t in &i.elements {
                if !i.elements.contains(&ring.add(s, t)) {
                    return Ok(false);
                }
            }
            for r in &all {
                let p = match i.side {
                    Side::Right => ring.mul(s, r),
                    Side::Left => ring.mul(r, s),
                };
                if !i.elements.contains(&p) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `R = S ⊕ T` decided by counting decompositions of every element.
    pub fn is_direct_sum<R: Ring>(ring: &R, s: &ExtIdeal<R::Elem>, t: &ExtIdeal<R::Elem>) -> Result<bool> {
        let trivial = s.elements.intersection(&t.elements).count() == 1;
        let mut sums = BTreeSet::new();
        for a in &s.elements {
            for b in &t.elements {
                sums.insert(ring.add(a, b));
            }
        }
        Ok(trivial && Some(sums.len()) == ring.size())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::ring::Involution;

    #[test]
    fn zn_examples() {
        let z = Zn::new(6).unwrap();
        let s = z.principal(&2, Side::Right);
        assert_eq!(z.ideal_elements(&s).unwrap(), vec![0, 2, 4]);
        let t = z.annihilator(&2, Side::Right);
        assert_eq!(z.ideal_elements(&t).unwrap(), vec![0, 3]);
        let w = direct_sum(&z, &s, &t).unwrap().unwrap();
        assert_eq!(w.decompose(&z, &1), (4, 3));
        assert_eq!(z.complement(&s), Some(t.clone()));
        assert_eq!(z.complement(&z.zero_ideal(Side::Right)), Some(z.whole_ideal(Side::Right)));
        assert!(!ideal_subset(&z, &s, &t).unwrap());
        assert_eq!(
            ideal_subset(&z, &s, &z.principal(&2, Side::Left)),
            Err(Error::SideMismatch)
        );
    }

    #[test]
    fn matrix_examples() {
        let r = MatrixRing::new(PrimeField::new(2).unwrap(), 2, Involution::Transpose).unwrap();
        let e12 = r.unit(1, 2);
        let p = r.principal(&e12, Side::Right);
        assert_eq!(p, r.annihilator(&e12, Side::Right));
        let els = r.ideal_elements(&p).unwrap();
        assert_eq!(els.len(), 4);
        assert!(els.iter().all(|x| x.get(1, 0) == &0 && x.get(1, 1) == &0));
        assert!(direct_sum(&r, &p, &p).unwrap().is_none());
        let e11 = r.unit(1, 1);
        let (a, b) = (r.principal(&e11, Side::Right), r.annihilator(&e11, Side::Right));
        assert!(orthogonal(&r, &a, &b, Side::Right).unwrap());
    }

    #[test]
    fn complement_over_q() {
        let r = MatrixRing::new(Rationals, 2, Involution::Transpose).unwrap();
        let a = r.from_ints(&[&[2, -2], &[0, 0]]).unwrap();
        let s = r.principal(&a, Side::Right);
        let t = r.complement(&s).unwrap();
        let f = Rationals;
        assert_eq!(t.basis, vec![vec![f.zero(), f.one()]]);
        assert_eq!(r.unit_component(&s, &t), Some(r.unit(1, 1)));
        let astar = r.star(&a).unwrap();
        assert!(orthogonal(&r, &s, &r.annihilator(&astar, Side::Right), Side::Right).unwrap());
    }

    #[test]
    fn subspace_matches_extensional_on_m2f2() {
        let r = MatrixRing::new(PrimeField::new(2).unwrap(), 2, Involution::Transpose).unwrap();
        for a in r.elements().unwrap() {
            for side in [Side::Right, Side::Left] {
                let p = brute::of(&r, &r.principal(&a, side)).unwrap();
                assert_eq!(p, brute::principal(&r, &a, side).unwrap());
                let n = brute::of(&r, &r.annihilator(&a, side)).unwrap();
                assert_eq!(n, brute::annihilator(&r, &a, side).unwrap());
                assert!(brute::is_ideal(&r, &p).unwrap());
            }
        }
    }
}
