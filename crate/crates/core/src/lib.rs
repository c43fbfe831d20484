//! Exact generalized inverses in concrete unital rings.
//!
//! Backends are `Z_n` and square matrices over Q or F_p. Everything above
//! the backends is generic over [`ring::Ring`] and [`ideal::IdealLattice`].

#![no_std]

extern crate alloc;

pub mod error;
pub mod geninv;
pub mod prescribed;
pub mod field;
pub mod ideal;
pub mod linalg;
pub mod oracle;
pub mod projector;
pub mod ring;
pub mod special;

pub use error::{Error, Result};
pub use ideal::{IdealLattice, Side};
pub use ring::{Involution, Ring, RingSpec};
