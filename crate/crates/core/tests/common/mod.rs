//! Shared helpers for the integration tests.
#![allow(dead_code)]

use std::path::PathBuf;

use valence::format::load_automaton;
use valence::monoid::Word;
use valence::ValenceAutomaton;

pub fn bundled_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("automata")
        .join(format!("{name}.json"))
}

pub fn bundled(name: &str) -> ValenceAutomaton {
    load_automaton(&bundled_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// The bundled automata over a polycyclic monoid or a free group.
pub const STACK_LIKE: [&str; 5] = [
    "fig1_left",
    "fig1_right_fg",
    "fig1_right_poly",
    "palindrome",
    "equal_counts_fg",
];

/// Independent stack simulator: `a` pushes, `b` pops, accept on empty.
pub fn dyck_ab(w: &Word) -> bool {
    let mut stack = Vec::new();
    for s in w.symbols() {
        match s.as_str() {
            "a" => stack.push(()),
            _ => {
                if stack.pop().is_none() {
                    return false;
                }
            }
        }
    }
    stack.is_empty()
}
