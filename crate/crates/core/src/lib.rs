//! Exact computations for finite-dimensional Leibniz algebras over ℚ.
//!
//! Algebras are given by structure constants on a basis `e_1, …, e_n`
//! (indices are 1-based everywhere in the public API).  All arithmetic is
//! exact; there are no floating-point paths.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![warn(missing_docs)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod catalog;
pub mod codim3;
pub mod derivations;
mod error;
pub mod extensions;
pub mod identity;
pub mod ratmat;
pub mod replay;
pub mod series;

pub use algebra::{AlgebraTable, Subspace, Vector};
pub use error::Error;
pub use ratmat::{int, rat, Matrix, Rational, UniPoly};

/// Which of the two Leibniz identities an object refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `[[x,y],z] = [[x,z],y] + [x,[y,z]]`; right multiplications are derivations.
    Right,
    /// `[[x,y],z] = [x,[y,z]] - [y,[x,z]]`; left multiplications are derivations.
    Left,
}

impl Side {
    /// The other side.
    pub fn opposite(self) -> Side {
        match self {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        }
    }

    /// Lower-case name, `"right"` or `"left"`.
    pub fn name(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }
}

impl core::fmt::Display for Side {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}
