//! Projectors `ρ_{S,T}` for direct sums of one-sided ideals.

use alloc::format;

use crate::error::{Error, Result};
use crate::ideal::{direct_sum, orthogonal, DirectSumWitness, IdealLattice, Side};
use crate::ring::is_idempotent;

/// `ρ_{S,T}` stored through its unit image `ρ(1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projector<R: IdealLattice> {
    pub witness: DirectSumWitness<R>,
}

impl<R: IdealLattice> Projector<R> {
    pub fn onto(&self) -> &R::Ideal {
        &self.witness.left_part
    }
    pub fn along(&self) -> &R::Ideal {
        &self.witness.right_part
    }
    pub fn side(&self) -> Side {
        self.witness.side
    }
    pub fn unit_image(&self) -> &R::Elem {
        &self.witness.unit
    }
    pub fn apply(&self, ring: &R, r: &R::Elem) -> R::Elem {
        self.witness.decompose(ring, r).0
    }
}

pub fn projector_from_sum<R: IdealLattice>(
    ring: &R,
    s: &R::Ideal,
    t: &R::Ideal,
) -> Result<Option<Projector<R>>> {
    Ok(direct_sum(ring, s, t)?.map(|witness| Projector { witness }))
}

/// `φ_p = ρ_{pR, rann(p)}` (right) or `_pφ = ρ_{Rp, lann(p)}` (left).
pub fn projector_from_idempotent<R: IdealLattice>(
    ring: &R,
    p: &R::Elem,
    side: Side,
) -> Result<Projector<R>> {
    ring.check(p)?;
    if !is_idempotent(ring, p) {
        return Err(Error::Precondition(format!("{} is not idempotent", ring.render(p))));
    }
    Ok(Projector {
        witness: DirectSumWitness {
            left_part: ring.principal(p, side),
            right_part: ring.annihilator(p, side),
            side,
            unit: p.clone(),
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Orthogonality {
    pub right_orthogonal: bool,
    pub left_orthogonal: bool,
}

pub fn projector_orthogonality<R: IdealLattice>(ring: &R, p: &Projector<R>) -> Result<Orthogonality> {
    Ok(Orthogonality {
        right_orthogonal: orthogonal(ring, p.onto(), p.along(), Side::Right)?,
        left_orthogonal: orthogonal(ring, p.onto(), p.along(), Side::Left)?,
    })
}

/// Whether the multiplication map by `b` equals `ρ_{S,T}`: `φ_b` (`r ↦ br`)
/// for right ideals, `_bφ` (`r ↦ rb`) for left ideals. False when `R ≠ S ⊕ T`.
pub fn equals_rho<R: IdealLattice>(ring: &R, b: &R::Elem, s: &R::Ideal, t: &R::Ideal) -> bool {
    ring.side_of(s) == ring.side_of(t) && ring.unit_component(s, t).as_ref() == Some(b)
}

/// The ideals `(onto, along)` when the multiplication map by `b` is a projector.
pub fn map_as_projector<R: IdealLattice>(ring: &R, b: &R::Elem, side: Side) -> Option<(R::Ideal, R::Ideal)> {
    is_idempotent(ring, b).then(|| (ring.principal(b, side), ring.annihilator(b, side)))
}
