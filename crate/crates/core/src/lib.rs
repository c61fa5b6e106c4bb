//! Finite gyrogroups as Cayley tables.
//!
//! A [`GyroTable`] is validated against the gyrogroup axioms on
//! construction; everything else is computed from the table: gyrations by
//! the gyrator identity, subgyrogroups and cosets, normality by quotient
//! construction, commutators and `NC(G′)`, nuclei, the left multiplication
//! group with `L(G)^#`, `L(G)′` and the radical, prime-index criteria, and a
//! small-order search that produces nonassociative instances.

pub mod analysis;
pub mod caps;
pub mod commutator;
pub mod error;
pub mod format;
pub mod library;
pub mod normality;
pub mod nuclei;
pub mod perm;
pub mod prime_index;
pub mod search;
pub mod substructure;
pub mod table;
pub mod theorems;

pub use caps::Caps;
pub use error::{GyroError, Result};
pub use perm::Perm;
pub use substructure::SubSet;
pub use table::{direct_product, verify_axioms, AxiomReport, Elem, GyroTable};
