//! Pop-stack sorting on finite lattices: the weak orders of types A and B,
//! the corresponding Tamari lattices, and the lattices of order ideals of
//! the type A and type B root posets.
//!
//! Everything is exact. Lattices are built explicitly and queried through
//! [`lattice::FiniteLattice`]; closed-form polynomials live in
//! [`formulas`] and the generating-function computations in [`series`].

pub mod binomial;
pub mod dyck;
pub mod error;
pub mod formulas;
pub mod lattice;
pub mod pattern;
pub mod perm;
pub mod series;
pub mod signed;
pub mod tamari;
pub mod weak;

pub use dyck::{DyckPath, SymmetricDyckPath};
pub use error::{Error, Result};
pub use formulas::Formula;
pub use lattice::{BuildOptions, Congruence, FiniteLattice, PopDirection, QPolynomial};
pub use pattern::{PatternSpec, StarBound, StarConstraint};
pub use perm::{Permutation, Word};
pub use series::BiSeries;
pub use signed::SignedPermutation;
