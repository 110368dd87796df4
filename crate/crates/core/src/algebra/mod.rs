//! Vectors, subspaces and structure-constant tables.

mod subspace;
mod table;
mod vector;

pub use subspace::Subspace;
pub use table::AlgebraTable;
pub use vector::Vector;
