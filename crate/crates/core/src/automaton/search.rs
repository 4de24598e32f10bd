//! Bounded breadth-first acceptance search.
//!
//! Configurations are `(state, position, register)` with the register in
//! normal form. Three kinds of configuration are discarded without loss:
//!
//! * registers that can never return to the identity (polycyclic zero, or a
//!   polycyclic value that has popped below its starting stack);
//! * configurations from which no final state can be reached on the rest of
//!   the input;
//! * registers whose inverse needs more copies of some signed generator than
//!   any remaining path can supply. Free reduction only deletes letters, so
//!   a continuation `m` with `r·m = 1` contains every letter of `r⁻¹`.
//!
//! Only the register-size cap and the configuration cap lose information;
//! hitting either turns a would-be rejection into
//! [`Acceptance::BudgetExhausted`].

use std::collections::{HashSet, VecDeque};
use std::fmt;

use super::model::ValenceAutomaton;
use crate::error::Result;
use crate::monoid::{PolyValue, RegisterElement, Word};

/// Limits for [`ValenceAutomaton::accepts`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest register size explored; `None` uses
    /// `|w| · (longest multiplier) · |states| + 8`.
    pub register_cap: Option<u64>,
    /// Largest number of distinct configurations visited per query.
    pub max_configurations: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            register_cap: None,
            max_configurations: 2_000_000,
        }
    }
}

impl SearchBudget {
    pub fn with_register_cap(cap: u64) -> Self {
        SearchBudget {
            register_cap: Some(cap),
            ..SearchBudget::default()
        }
    }
}

/// Three-valued membership answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Acceptance {
    Accepted,
    /// No accepting run exists; the search was exhaustive.
    Rejected,
    /// No accepting run was found but the budget cut the search short.
    BudgetExhausted,
}

impl fmt::Display for Acceptance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Acceptance::Accepted => "ACCEPTED",
            Acceptance::Rejected => "REJECTED",
            Acceptance::BudgetExhausted => "UNKNOWN",
        })
    }
}

/// Result of a search, with a shortest accepting run when one exists.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub acceptance: Acceptance,
    /// Edge indices of the accepting run.
    pub witness: Option<Vec<usize>>,
    pub configurations: usize,
}

const DEAD: i64 = -1;
const UNBOUNDED: i64 = i64::MAX;

/// For every node `(state, position)` on the input: whether a final state
/// at the end of the input is reachable, and for each signed generator the
/// largest number of copies any such path can still multiply in.
struct FutureTable {
    states: usize,
    width: usize,
    live: Vec<bool>,
    supply: Vec<i64>,
}

impl FutureTable {
    fn build(a: &ValenceAutomaton, w: &[crate::monoid::Symbol], skip: &[bool]) -> Self {
        let nq = a.states().len();
        let width = a.layout.width;
        let n = w.len();
        let mut t = FutureTable {
            states: nq,
            width,
            live: vec![false; (n + 1) * nq],
            supply: vec![DEAD; (n + 1) * nq * width],
        };
        let mut best = vec![DEAD; width];
        for i in (0..=n).rev() {
            for (ci, scc) in a.eps.sccs.iter().enumerate() {
                let mut live = false;
                best.iter_mut().for_each(|b| *b = DEAD);
                for &q in scc {
                    if i == n && a.is_final(q) {
                        live = true;
                        best.iter_mut().for_each(|b| *b = (*b).max(0));
                    }
                    for &ei in a.outgoing(q) {
                        if skip[ei] {
                            continue;
                        }
                        let e = &a.edges()[ei];
                        let target = match &e.read {
                            None if a.eps.scc_of[e.to] == ci => continue,
                            None => (e.to, i),
                            Some(s) if i < n && &w[i] == s => (e.to, i + 1),
                            Some(_) => continue,
                        };
                        let node = target.1 * nq + target.0;
                        if !t.live[node] {
                            continue;
                        }
                        live = true;
                        let counts = &a.layout.edge_counts[ei];
                        let row = &t.supply[node * width..(node + 1) * width];
                        for id in 0..width {
                            let v = if row[id] == UNBOUNDED {
                                UNBOUNDED
                            } else {
                                row[id] + i64::from(counts[id])
                            };
                            best[id] = best[id].max(v);
                        }
                    }
                }
                if !live {
                    continue;
                }
                for &id in &a.eps.pumps[ci] {
                    best[id] = UNBOUNDED;
                }
                for &q in scc {
                    let node = i * nq + q;
                    t.live[node] = true;
                    t.supply[node * width..(node + 1) * width].copy_from_slice(&best);
                }
            }
        }
        t
    }

    #[inline]
    fn is_live(&self, state: usize, pos: usize) -> bool {
        self.live[pos * self.states + state]
    }

    fn row(&self, state: usize, pos: usize) -> &[i64] {
        let node = pos * self.states + state;
        &self.supply[node * self.width..(node + 1) * self.width]
    }
}

/// Whether the remaining supply of signed generators can cancel `reg`.
fn affordable(
    a: &ValenceAutomaton,
    reg: &RegisterElement,
    supply: &[i64],
    scratch: &mut [i64],
) -> bool {
    scratch.iter_mut().for_each(|s| *s = 0);
    demand(a, reg, 0, scratch);
    scratch.iter().zip(supply).all(|(need, have)| need <= have)
}

/// Adds to `need` the signed generators that `reg⁻¹` consists of.
fn demand(a: &ValenceAutomaton, reg: &RegisterElement, factor: usize, need: &mut [i64]) {
    let layout = &a.layout;
    match reg {
        RegisterElement::Free(g) => {
            for l in g.reduced().letters() {
                if let Some(id) = layout.counter(factor, &l.symbol, !l.inverse) {
                    need[id] += 1;
                }
            }
        }
        RegisterElement::Poly(p) => {
            if let PolyValue::Pair { push, .. } = p.value() {
                for s in push {
                    if let Some(id) = layout.counter(factor, s, true) {
                        need[id] += 1;
                    }
                }
            }
        }
        RegisterElement::Vector(v) => {
            let alphabet = &layout.alphabets[factor];
            for (g, &c) in v.components().iter().enumerate() {
                if c != 0 {
                    let sym = &alphabet.symbols()[g];
                    if let Some(id) = layout.counter(factor, sym, c > 0) {
                        need[id] += c.unsigned_abs() as i64;
                    }
                }
            }
        }
        RegisterElement::Trivial => {}
        RegisterElement::Product(p) => {
            for (f, part) in p.parts().iter().enumerate() {
                demand(a, part, f, need);
            }
        }
    }
}

fn voids(v: &RegisterElement) -> bool {
    match v {
        RegisterElement::Poly(p) => p.is_zero(),
        RegisterElement::Product(p) => p.parts().iter().any(voids),
        _ => false,
    }
}

struct Config {
    state: usize,
    pos: usize,
    register: RegisterElement,
    parent: Option<(usize, usize)>,
}

impl ValenceAutomaton {
    /// The default register cap for a word of length `len`.
    pub fn default_register_cap(&self, len: usize) -> u64 {
        (len * self.max_multiplier_len() * self.states().len()) as u64 + 8
    }

    /// Decides whether `w` is accepted, within `budget`.
    pub fn accepts(&self, w: &Word, budget: &SearchBudget) -> Result<Acceptance> {
        Ok(self.search(w, budget)?.acceptance)
    }

    /// Breadth-first search over configurations; see the module docs.
    pub fn search(&self, w: &Word, budget: &SearchBudget) -> Result<SearchOutcome> {
        w.check(self.input_alphabet())?;
        let word = w.symbols();
        let n = word.len();
        let cap = budget
            .register_cap
            .unwrap_or_else(|| self.default_register_cap(n));
        let skip: Vec<bool> = self.values.iter().map(voids).collect();
        let future = FutureTable::build(self, word, &skip);
        let mut scratch = vec![0i64; self.layout.width];

        let mut outcome = SearchOutcome {
            acceptance: Acceptance::Rejected,
            witness: None,
            configurations: 0,
        };
        if !future.is_live(self.initial(), 0) {
            return Ok(outcome);
        }

        let mut configs = vec![Config {
            state: self.initial(),
            pos: 0,
            register: self.monoid().identity(),
            parent: None,
        }];
        let mut visited: HashSet<(usize, usize, RegisterElement)> = HashSet::new();
        visited.insert((self.initial(), 0, self.monoid().identity()));
        let mut queue = VecDeque::from([0usize]);
        let mut truncated = false;

        'search: while let Some(ci) = queue.pop_front() {
            let (state, pos) = (configs[ci].state, configs[ci].pos);
            if pos == n && self.is_final(state) && configs[ci].register.is_identity() {
                outcome.acceptance = Acceptance::Accepted;
                outcome.witness = Some(trace(&configs, ci));
                outcome.configurations = visited.len();
                return Ok(outcome);
            }
            for &ei in self.outgoing(state) {
                if skip[ei] {
                    continue;
                }
                let e = &self.edges()[ei];
                let next = match &e.read {
                    None => pos,
                    Some(s) if pos < n && &word[pos] == s => pos + 1,
                    Some(_) => continue,
                };
                if !future.is_live(e.to, next) {
                    continue;
                }
                let register = configs[ci].register.multiply(&self.values[ei])?;
                if register.is_dead()
                    || !affordable(self, &register, future.row(e.to, next), &mut scratch)
                {
                    continue;
                }
                if register.size() > cap {
                    truncated = true;
                    continue;
                }
                let key = (e.to, next, register);
                if visited.contains(&key) {
                    continue;
                }
                if visited.len() >= budget.max_configurations {
                    truncated = true;
                    break 'search;
                }
                let register = key.2.clone();
                visited.insert(key);
                configs.push(Config {
                    state: e.to,
                    pos: next,
                    register,
                    parent: Some((ci, ei)),
                });
                queue.push_back(configs.len() - 1);
            }
        }
        outcome.configurations = visited.len();
        if truncated {
            outcome.acceptance = Acceptance::BudgetExhausted;
        }
        Ok(outcome)
    }
}

fn trace(configs: &[Config], mut at: usize) -> Vec<usize> {
    let mut edges = Vec::new();
    while let Some((parent, edge)) = configs[at].parent {
        edges.push(edge);
        at = parent;
    }
    edges.reverse();
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{Alphabet, MonoidSpec};

    fn fig1_left() -> ValenceAutomaton {
        ValenceAutomaton::builder(
            MonoidSpec::polycyclic(Alphabet::new(["x"]).unwrap()),
            Alphabet::new(["a", "b"]).unwrap(),
        )
        .initial("q")
        .final_state("q")
        .edge("q", "x", "a", "q")
        .edge("q", "x^-1", "b", "q")
        .build()
        .unwrap()
    }

    fn fig1_right_fg() -> ValenceAutomaton {
        ValenceAutomaton::builder(
            MonoidSpec::free_group(Alphabet::new(["x", "#"]).unwrap()),
            Alphabet::new(["a", "b"]).unwrap(),
        )
        .initial("q+")
        .final_state("q-")
        .edge("q+", "x #", "a", "q+")
        .edge("q-", "x^-1 #", "b", "q+")
        .edge("q+", "", "", "q-")
        .edge("q-", "#^-1", "", "q-")
        .build()
        .unwrap()
    }

    fn word(a: &ValenceAutomaton, s: &str) -> Word {
        Word::parse(s, a.input_alphabet()).unwrap()
    }

    #[test]
    fn figure_one_left() {
        let a = fig1_left();
        let b = SearchBudget::default();
        assert_eq!(a.accepts(&word(&a, "ab"), &b).unwrap(), Acceptance::Accepted);
        assert_eq!(a.accepts(&word(&a, "ba"), &b).unwrap(), Acceptance::Rejected);
        assert_eq!(a.accepts(&word(&a, ""), &b).unwrap(), Acceptance::Accepted);
        assert_eq!(a.accepts(&word(&a, "aabb"), &b).unwrap(), Acceptance::Accepted);
        assert_eq!(a.accepts(&word(&a, "abba"), &b).unwrap(), Acceptance::Rejected);
    }

    #[test]
    fn witness_is_a_shortest_run() {
        let a = fig1_left();
        let out = a.search(&word(&a, "aabb"), &SearchBudget::default()).unwrap();
        assert_eq!(out.witness.unwrap(), vec![0, 0, 1, 1]);
    }

    #[test]
    fn free_group_padding_automaton_decides_with_default_budget() {
        let a = fig1_right_fg();
        let b = SearchBudget::default();
        for (w, expect) in [
            ("", Acceptance::Accepted),
            ("ab", Acceptance::Accepted),
            ("ba", Acceptance::Rejected),
            ("abab", Acceptance::Accepted),
            ("aabb", Acceptance::Accepted),
            ("abba", Acceptance::Rejected),
            ("bbaa", Acceptance::Rejected),
        ] {
            assert_eq!(a.accepts(&word(&a, w), &b).unwrap(), expect, "{w}");
        }
    }

    #[test]
    fn tiny_cap_reports_unknown_not_rejected() {
        let a = fig1_left();
        let b = SearchBudget::with_register_cap(1);
        assert_eq!(
            a.accepts(&word(&a, "aabb"), &b).unwrap(),
            Acceptance::BudgetExhausted
        );
        // "ba" dies before the cap matters
        assert_eq!(a.accepts(&word(&a, "ba"), &b).unwrap(), Acceptance::Rejected);
    }

    #[test]
    fn configuration_cap_reports_unknown() {
        let a = fig1_right_fg();
        let b = SearchBudget {
            register_cap: None,
            max_configurations: 2,
        };
        assert_eq!(
            a.accepts(&word(&a, "abba"), &b).unwrap(),
            Acceptance::BudgetExhausted
        );
    }

    #[test]
    fn letters_outside_sigma_are_errors() {
        let a = fig1_left();
        let w = Word::parse_unchecked("ac");
        assert!(a.accepts(&w, &SearchBudget::default()).is_err());
    }

    #[test]
    fn epsilon_loops_terminate() {
        // unbounded pushes on an ε-loop, never popped
        let a = ValenceAutomaton::builder(
            MonoidSpec::polycyclic(Alphabet::new(["x"]).unwrap()),
            Alphabet::new(["a"]).unwrap(),
        )
        .initial("p")
        .final_state("p")
        .edge("p", "x", "", "p")
        .edge("p", "", "a", "p")
        .build()
        .unwrap();
        let b = SearchBudget::default();
        assert_eq!(a.accepts(&word(&a, "aa"), &b).unwrap(), Acceptance::Accepted);
        // free group: x-loop and x^-1-loop on ε can cancel anything
        let g = ValenceAutomaton::builder(
            MonoidSpec::free_group(Alphabet::new(["x"]).unwrap()),
            Alphabet::new(["a"]).unwrap(),
        )
        .initial("p")
        .final_state("q")
        .edge("p", "x", "", "p")
        .edge("p", "x x", "a", "q")
        .edge("q", "x^-1", "", "q")
        .build()
        .unwrap();
        assert_eq!(g.accepts(&word(&g, "a"), &b).unwrap(), Acceptance::Accepted);
        assert_eq!(g.accepts(&word(&g, "aa"), &b).unwrap(), Acceptance::Rejected);
    }

    #[test]
    fn counter_pumped_by_epsilon_loop() {
        let g = ValenceAutomaton::builder(
            MonoidSpec::free_abelian_rank(1),
            Alphabet::new(["a"]).unwrap(),
        )
        .initial("p")
        .final_state("p")
        .edge("p", "c1", "", "p")
        .edge("p", "c1^-1 c1^-1 c1^-1", "a", "p")
        .build()
        .unwrap();
        let b = SearchBudget::default();
        assert_eq!(g.accepts(&word(&g, "a"), &b).unwrap(), Acceptance::Accepted);
        assert_eq!(g.accepts(&word(&g, ""), &b).unwrap(), Acceptance::Accepted);
    }
}
