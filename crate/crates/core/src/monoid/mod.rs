//! Register monoids in normal form: free groups, polycyclic monoids, free
//! abelian groups, the trivial monoid and finite direct products.

pub mod abelian;
pub mod alphabet;
pub mod element;
pub mod free_group;
pub mod polycyclic;

pub use abelian::IntVector;
pub use alphabet::{Alphabet, Letter, SignedWord, Symbol, Word, INVERSE_SUFFIX};
pub use element::{Multiplier, MonoidSpec, ProductElement, RegisterElement};
pub use free_group::{free_reduce, FreeGroupElement};
pub use polycyclic::{PolyValue, PolycyclicElement};
