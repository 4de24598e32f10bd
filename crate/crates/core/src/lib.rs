//! Valence automata: finite automata whose edges multiply a register held
//! in a monoid, accepting when a final state is reached with the register
//! back at the identity.
//!
//! The crate provides the register monoids ([`monoid`]), the automaton model
//! and its bounded acceptance search ([`automaton`]), Dyck-language
//! predicates and permissible paddings ([`dyck`]), finite transducers
//! ([`transducer`]), automaton transformations ([`constructions`]), an exact
//! grammar-based membership oracle ([`grammar`]) and the JSON interchange
//! format ([`format`]).

pub mod automaton;
pub mod constructions;
pub mod dyck;
pub mod error;
pub mod format;
pub mod grammar;
pub mod monoid;
pub mod par;
pub mod transducer;

pub use automaton::{Acceptance, Edge, SearchBudget, ValenceAutomaton};
pub use error::{Error, Result};
pub use monoid::{
    Alphabet, FreeGroupElement, IntVector, Letter, Multiplier, MonoidSpec, PolycyclicElement,
    RegisterElement, SignedWord, Symbol, Word,
};
