//! The valence automaton model, its bounded acceptance search and language
//! enumeration.

mod enumerate;
mod model;
mod search;

pub use enumerate::Enumeration;
pub use model::{AutomatonBuilder, Edge, ValenceAutomaton};
pub use search::{Acceptance, SearchBudget, SearchOutcome};
