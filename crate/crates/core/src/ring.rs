//! Concrete unital rings: `Z_n` and `M_n(F)` over Q or F_p.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;
use core::hash::Hash;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals, ScalarSpec};
use crate::linalg::{self, Mat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Involution {
    Transpose,
    None,
}

/// Serializable description of a ring backend.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RingSpec {
    Modular(u64),
    Matrix {
        size: usize,
        scalars: ScalarSpec,
        involution: Involution,
    },
}

/// Largest modulus accepted for `Z_n`.
pub const MAX_MODULUS: u64 = 1 << 32;

impl RingSpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            RingSpec::Modular(n) if n < 2 => Err(Error::InvalidSpec(format!("Z_{n} needs n >= 2"))),
            RingSpec::Modular(n) if n > MAX_MODULUS => {
                Err(Error::InvalidSpec(format!("modulus {n} exceeds {MAX_MODULUS}")))
            }
            RingSpec::Modular(_) => Ok(()),
            RingSpec::Matrix { size: 0, .. } => Err(Error::InvalidSpec("matrix size 0".into())),
            RingSpec::Matrix {
                scalars: ScalarSpec::PrimeField(p),
                ..
            } => PrimeField::new(p).map(|_| ()),
            RingSpec::Matrix { .. } => Ok(()),
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(
            self,
            RingSpec::Matrix {
                scalars: ScalarSpec::Rationals,
                ..
            }
        )
    }

    pub fn has_involution(&self) -> bool {
        matches!(
            self,
            RingSpec::Matrix {
                involution: Involution::Transpose,
                ..
            }
        )
    }

    /// Short human label such as `Z6` or `M2(F5)`.
    pub fn label(&self) -> String {
        match self {
            RingSpec::Modular(n) => format!("Z{n}"),
            RingSpec::Matrix { size, scalars, involution } => {
                let f = match scalars {
                    ScalarSpec::Rationals => String::from("Q"),
                    ScalarSpec::PrimeField(p) => format!("F{p}"),
                };
                let star = match involution {
                    Involution::Transpose => "",
                    Involution::None => ", no involution",
                };
                format!("M{size}({f}{star})")
            }
        }
    }
}

/// Backend-neutral rendering of an element. Scalars are canonical strings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ElemData {
    Residue(u64),
    Matrix(Vec<Vec<String>>),
}

/// A unital associative ring with exact, canonical elements.
///
/// Arithmetic methods assume their arguments belong to the ring; use
/// [`ring_arith`] or [`Ring::check`] at trust boundaries.
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    fn spec(&self) -> RingSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn contains(&self, a: &Self::Elem) -> bool;
    fn has_involution(&self) -> bool;
    fn star(&self, a: &Self::Elem) -> Result<Self::Elem>;
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Number of elements, `None` when infinite.
    fn size(&self) -> Option<usize>;
    /// Elements in canonical order.
    fn iter_elements(&self) -> Result<Box<dyn Iterator<Item = Self::Elem> + '_>>;
    /// Some `x` with `axa = a`, or `None` when `a` is not regular.
    fn inner_inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// Upper bound on the Drazin index of any element.
    fn drazin_bound(&self) -> usize;
    fn to_data(&self, a: &Self::Elem) -> ElemData;
    fn from_data(&self, d: &ElemData) -> Result<Self::Elem>;

    /// Closed-form Moore-Penrose inverse when the backend has one.
    /// `None` means "no direct algorithm"; `Some(None)` means "does not exist".
    fn moore_penrose_direct(&self, _a: &Self::Elem) -> Option<Option<Self::Elem>> {
        None
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn mul3(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(a, b), c)
    }
    fn pow(&self, a: &Self::Elem, k: u32) -> Self::Elem {
        let mut r = self.one();
        for _ in 0..k {
            r = self.mul(&r, a);
        }
        r
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
    fn elements(&self) -> Result<Vec<Self::Elem>> {
        Ok(self.iter_elements()?.collect())
    }
    fn check(&self, a: &Self::Elem) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "{a:?} is not an element of {}",
                self.spec().label()
            )))
        }
    }
    fn render(&self, a: &Self::Elem) -> String {
        render_data(&self.to_data(a))
    }
}

pub fn render_data(d: &ElemData) -> String {
    match d {
        ElemData::Residue(v) => format!("{v}"),
        ElemData::Matrix(rows) => {
            let body: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(","))).collect();
            format!("[{}]", body.join(","))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// Checked arithmetic; `Neg` ignores `b`.
pub fn ring_arith<R: Ring>(ring: &R, a: &R::Elem, b: &R::Elem, op: ArithOp) -> Result<R::Elem> {
    ring.check(a)?;
    ring.check(b)?;
    Ok(match op {
        ArithOp::Add => ring.add(a, b),
        ArithOp::Sub => ring.sub(a, b),
        ArithOp::Mul => ring.mul(a, b),
        ArithOp::Neg => ring.neg(a),
    })
}

pub fn involute<R: Ring>(ring: &R, a: &R::Elem) -> Result<R::Elem> {
    ring.check(a)?;
    ring.star(a)
}

/// Elementwise flags; `symmetric`/`projection` are `None` without an involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementFlags<E> {
    pub idempotent: bool,
    pub symmetric: Option<bool>,
    pub projection: Option<bool>,
    pub inverse: Option<E>,
}

impl<E> ElementFlags<E> {
    pub fn invertible(&self) -> bool {
        self.inverse.is_some()
    }
}

pub fn classify_element<R: Ring>(ring: &R, a: &R::Elem) -> ElementFlags<R::Elem> {
    let idempotent = ring.mul(a, a) == *a;
    let symmetric = ring.star(a).ok().map(|s| s == *a);
    ElementFlags {
        idempotent,
        symmetric,
        projection: symmetric.map(|s| s && idempotent),
        inverse: ring.inverse(a),
    }
}

pub fn is_idempotent<R: Ring>(ring: &R, a: &R::Elem) -> bool {
    ring.mul(a, a) == *a
}

pub fn enumerate_elements<R: Ring>(ring: &R) -> Result<Vec<R::Elem>> {
    ring.elements()
}

/// The ring of residues modulo `n`. Carries no involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zn {
    n: u64,
}

impl Zn {
    pub fn new(n: u64) -> Result<Self> {
        RingSpec::Modular(n).validate()?;
        Ok(Zn { n })
    }
    pub fn modulus(&self) -> u64 {
        self.n
    }
    pub fn elem(&self, v: u64) -> Result<u64> {
        self.check(&v)?;
        Ok(v)
    }
}

impl Ring for Zn {
    type Elem = u64;

    fn spec(&self) -> RingSpec {
        RingSpec::Modular(self.n)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.n as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.n - a) % self.n
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.n as u128) as u64
    }
    fn contains(&self, a: &u64) -> bool {
        *a < self.n
    }
    fn has_involution(&self) -> bool {
        false
    }
    fn star(&self, _a: &u64) -> Result<u64> {
        Err(Error::UnsupportedInvolution)
    }
    fn inverse(&self, a: &u64) -> Option<u64> {
        let e = (*a as i128).extended_gcd(&(self.n as i128));
        if e.gcd != 1 {
            return None;
        }
        Some(e.x.rem_euclid(self.n as i128) as u64)
    }
    fn size(&self) -> Option<usize> {
        Some(self.n as usize)
    }
    fn iter_elements(&self) -> Result<Box<dyn Iterator<Item = u64> + '_>> {
        Ok(Box::new(0..self.n))
    }
    fn inner_inverse(&self, a: &u64) -> Option<u64> {
        (0..self.n).find(|x| self.mul3(a, x, a) == *a)
    }
    fn drazin_bound(&self) -> usize {
        self.n as usize
    }
    fn to_data(&self, a: &u64) -> ElemData {
        ElemData::Residue(*a)
    }
    fn from_data(&self, d: &ElemData) -> Result<u64> {
        match d {
            ElemData::Residue(v) => self.elem(*v),
            ElemData::Matrix(_) => Err(Error::RingMismatch(format!(
                "matrix given for {}",
                self.spec().label()
            ))),
        }
    }
}

/// The ring `M_n(F)` of square matrices, optionally with transpose as involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRing<F: Field> {
    field: F,
    n: usize,
    involution: Involution,
}

pub type MatQ = MatrixRing<Rationals>;
pub type MatFp = MatrixRing<PrimeField>;

impl<F: Field> MatrixRing<F> {
    pub fn new(field: F, n: usize, involution: Involution) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("matrix size 0".into()));
        }
        Ok(MatrixRing { field, n, involution })
    }
    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn size_n(&self) -> usize {
        self.n
    }
    /// Builds an element from small integer entries (reduced into the field).
    pub fn from_ints(&self, rows: &[&[i64]]) -> Result<Mat<F::Scalar>> {
        let m = Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| self.field.from_i64(v)).collect())
                .collect(),
        )?;
        self.check(&m)?;
        Ok(m)
    }
    /// Builds an element from canonical scalar strings such as `"1/4"`.
    pub fn from_strs(&self, rows: &[&[&str]]) -> Result<Mat<F::Scalar>> {
        let data = ElemData::Matrix(
            rows.iter()
                .map(|r| r.iter().map(|s| String::from(*s)).collect())
                .collect(),
        );
        self.from_data(&data)
    }
    /// Matrix unit `E_{ij}` (1-based indices).
    pub fn unit(&self, i: usize, j: usize) -> Mat<F::Scalar> {
        let f = &self.field;
        Mat::from_fn(self.n, self.n, |r, c| {
            if r + 1 == i && c + 1 == j {
                f.one()
            } else {
                f.zero()
            }
        })
    }
}

struct Odometer<S> {
    digits: Vec<usize>,
    scalars: Vec<S>,
    n: usize,
    done: bool,
}

impl<S: Clone> Iterator for Odometer<S> {
    type Item = Mat<S>;
    fn next(&mut self) -> Option<Mat<S>> {
        if self.done {
            return None;
        }
        let out = Mat::from_entries(
            self.n,
            self.n,
            self.digits.iter().map(|&d| self.scalars[d].clone()).collect(),
        );
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < self.scalars.len() {
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}

impl<F: Field> Ring for MatrixRing<F> {
    type Elem = Mat<F::Scalar>;

    fn spec(&self) -> RingSpec {
        RingSpec::Matrix {
            size: self.n,
            scalars: self.field.spec(),
            involution: self.involution,
        }
    }
    fn zero(&self) -> Self::Elem {
        linalg::zeros(&self.field, self.n, self.n)
    }
    fn one(&self) -> Self::Elem {
        linalg::identity(&self.field, self.n)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        linalg::add(&self.field, a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        linalg::neg(&self.field, a)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        linalg::sub(&self.field, a, b)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        linalg::mul(&self.field, a, b)
    }
    fn contains(&self, a: &Self::Elem) -> bool {
        if a.rows() != self.n || a.cols() != self.n {
            return false;
        }
        match self.field.spec() {
            ScalarSpec::PrimeField(_) => {
                // canonical residues: parse(render(x)) must give x back
                a.entries()
                    .iter()
                    .all(|x| self.field.parse(&self.field.render(x)).as_ref() == Ok(x))
            }
            ScalarSpec::Rationals => true,
        }
    }
    fn has_involution(&self) -> bool {
        self.involution == Involution::Transpose
    }
    fn star(&self, a: &Self::Elem) -> Result<Self::Elem> {
        match self.involution {
            Involution::Transpose => Ok(a.transpose()),
            Involution::None => Err(Error::UnsupportedInvolution),
        }
    }
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        linalg::inverse(&self.field, a)
    }
    fn size(&self) -> Option<usize> {
        let q = self.field.elements()?.len();
        q.checked_pow((self.n * self.n) as u32)
    }
    fn iter_elements(&self) -> Result<Box<dyn Iterator<Item = Self::Elem> + '_>> {
        let scalars = self.field.elements().ok_or(Error::NotEnumerable)?;
        Ok(Box::new(Odometer {
            digits: vec![0; self.n * self.n],
            scalars,
            n: self.n,
            done: false,
        }))
    }
    fn inner_inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let f = &self.field;
        let (fc, _, pivots) = linalg::rank_factorization(f, a);
        let k = pivots.len();
        if k == 0 {
            return Some(self.zero());
        }
        // left inverse of fc from an invertible k x k block of its rows
        let (_, rows) = linalg::rref(f, &fc.transpose());
        let block = Mat::from_fn(k, k, |i, j| fc.get(rows[i], j).clone());
        let block_inv = linalg::inverse(f, &block).expect("independent rows");
        let mut left = linalg::zeros(f, k, self.n);
        for i in 0..k {
            for j in 0..k {
                left.set(i, rows[j], block_inv.get(i, j).clone());
            }
        }
        // g is in reduced echelon form, so its pivot columns are the identity
        let mut right = linalg::zeros(f, self.n, k);
        for (i, &p) in pivots.iter().enumerate() {
            right.set(p, i, f.one());
        }
        Some(linalg::mul(f, &right, &left))
    }
    fn drazin_bound(&self) -> usize {
        self.n
    }
    fn to_data(&self, a: &Self::Elem) -> ElemData {
        ElemData::Matrix(
            a.to_rows()
                .iter()
                .map(|r| r.iter().map(|x| self.field.render(x)).collect())
                .collect(),
        )
    }
    fn from_data(&self, d: &ElemData) -> Result<Self::Elem> {
        let ElemData::Matrix(rows) = d else {
            return Err(Error::RingMismatch(format!(
                "residue given for {}",
                self.spec().label()
            )));
        };
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| self.field.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let m = Mat::from_rows(parsed)?;
        self.check(&m)?;
        Ok(m)
    }
    fn moore_penrose_direct(&self, a: &Self::Elem) -> Option<Option<Self::Elem>> {
        if self.involution != Involution::Transpose {
            return None;
        }
        let f = &self.field;
        let (fc, g, pivots) = linalg::rank_factorization(f, a);
        if pivots.is_empty() {
            return Some(Some(self.zero()));
        }
        let ftf = linalg::mul(f, &fc.transpose(), &fc);
        let ggt = linalg::mul(f, &g, &g.transpose());
        let (Some(ftf_inv), Some(ggt_inv)) = (linalg::inverse(f, &ftf), linalg::inverse(f, &ggt))
        else {
            return Some(None);
        };
        let left = linalg::mul(f, &g.transpose(), &ggt_inv);
        let right = linalg::mul(f, &ftf_inv, &fc.transpose());
        Some(Some(linalg::mul(f, &left, &right)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zn_arith() {
        let z = Zn::new(6).unwrap();
        assert_eq!(z.mul(&2, &5), 4);
        assert_eq!(z.inverse(&5), Some(5));
        assert_eq!(z.inverse(&4), None);
        assert!(ring_arith(&z, &7, &1, ArithOp::Add).is_err());
        assert_eq!(z.star(&1), Err(Error::UnsupportedInvolution));
        assert!(Zn::new(1).is_err());
    }

    #[test]
    fn matrix_product_over_q() {
        let r = MatrixRing::new(Rationals, 2, Involution::Transpose).unwrap();
        let a = r.from_ints(&[&[2, -2], &[0, 0]]).unwrap();
        let x = r.from_strs(&[&["1/4", "0"], &["-1/4", "0"]]).unwrap();
        assert_eq!(r.mul(&a, &x), r.from_ints(&[&[1, 0], &[0, 0]]).unwrap());
        assert_eq!(r.star(&a).unwrap(), r.from_ints(&[&[2, 0], &[-2, 0]]).unwrap());
    }

    #[test]
    fn enumeration_order_and_size() {
        let r = MatrixRing::new(PrimeField::new(2).unwrap(), 2, Involution::Transpose).unwrap();
        let all = r.elements().unwrap();
        assert_eq!(all.len(), 16);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all[1], r.unit(2, 2));
        let q = MatrixRing::new(Rationals, 2, Involution::None).unwrap();
        assert_eq!(q.elements().err(), Some(Error::NotEnumerable));
    }

    #[test]
    fn inner_inverse_contract() {
        let r = MatrixRing::new(PrimeField::new(3).unwrap(), 2, Involution::Transpose).unwrap();
        for a in r.elements().unwrap() {
            let x = r.inner_inverse(&a).unwrap();
            assert_eq!(r.mul3(&a, &x, &a), a);
        }
    }

    #[test]
    fn classify_examples() {
        let z = Zn::new(6).unwrap();
        let c = classify_element(&z, &4);
        assert!(c.idempotent && !c.invertible() && c.symmetric.is_none());
        let q = MatrixRing::new(Rationals, 2, Involution::Transpose).unwrap();
        let e = q.unit(1, 1);
        let c = classify_element(&q, &e);
        assert_eq!((c.idempotent, c.symmetric, c.projection), (true, Some(true), Some(true)));
    }
}
