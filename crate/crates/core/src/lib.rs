//! Exact-arithmetic computational commutative algebra kernel.
//!
//! The crate provides the machinery for graded desk-scale experiments in
//! commutative algebra: multivariate polynomials over exact fields, Groebner
//! bases and ideal arithmetic, graded modules and syzygies, chain complexes
//! and Koszul homology, free resolutions, determinantal rank/exactness
//! criteria, Artin-Rees numbers, and Koszul annihilating sequences.
//!
//! All arithmetic is exact (rationals or a prime field); nothing here ever
//! rounds. Rings, ideals, modules and complexes are immutable once built and
//! can be shared freely across threads.

pub mod artin_rees;
pub mod complex;
pub mod error;
pub mod field;
pub mod gb;
pub mod ideal;
pub mod kas;
pub mod module;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod resolution;
pub mod ring;
pub mod rng;

pub use error::Error;
pub use field::{Field, PrimeField, Rationals};
pub use ideal::Ideal;
pub use module::{FreeModule, ModuleMap, Subquotient};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Poly;
pub use ring::{PolyRing, QuotientRing, RingRef};

/// Workspace-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
