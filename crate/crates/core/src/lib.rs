//! Finite modules and algebras over the Boolean semifield B1 = {0, 1},
//! where 1 + 1 = 1.
//!
//! * [`lattice`]: finite B1-modules as finite lattices, Birkhoff's map,
//!   distributivity and modularity checks.
//! * [`free`]: free modules as powersets and their automorphisms.
//! * [`algebra`]: finite B1-algebras, congruences and quotients.
//! * [`polynomial`]: the free algebra B1[A] of finite monomial sets.
//! * [`monogenic`]: enumeration of algebras generated by one element.
//! * [`monoid`]: commutative monoids and the powerset functor into algebras.
//! * [`format`]: the plain-text structure file format.

pub mod algebra;
pub mod canon;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod free;
pub mod lattice;
pub mod monogenic;
pub mod monoid;
pub mod polynomial;
pub mod scalar;

pub use algebra::{AlgebraMorphism, Congruence, FinAlgebra};
pub use error::{Error, Result};
pub use free::{FreeModule, Permutation};
pub use lattice::{FinModule, FinPoset, ModuleMorphism};
pub use monogenic::{MonogenicAlgebra, Presentation};
pub use monoid::{FinMonoid, MonoidMorphism};
pub use polynomial::{Monomial, Poly, Variables};
pub use scalar::B1;

/// Seed used by randomized batteries unless overridden (the CLI reads
/// `B1_SEED`).
pub const DEFAULT_SEED: u64 = 0x00B1_2009;
