//! Twisted conjugacy classes and Reidemeister numbers.
//!
//! For an endomorphism `φ` of a group `G`, elements `x` and `y` are
//! `φ`-conjugate when `y = z⁻¹ x φ(z)` for some `z`. The crate computes these
//! classes for finite groups given by Cayley tables, decides whether the class
//! of the identity is a subgroup, and models two infinite families exactly:
//! free nilpotent groups of class 2 and 3 on two generators, and the wreath
//! product `ℤ ≀ ℤ` as matrices over integer Laurent polynomials.
//!
//! Maps act on the right throughout: `compose(φ, ψ)` applies `φ` first.

pub mod catalog;
pub mod claims;
pub mod error;
pub mod group;
pub mod laurent;
pub mod morphisms;
pub mod nilpotent;
pub mod perm;
pub mod twisted;
pub mod wreath;

pub use error::{Error, Result};
pub use group::{Elem, FiniteGroup, SubgroupTest, Subset, Word};
