use std::collections::BTreeSet;

use super::model::ValenceAutomaton;
use super::search::{Acceptance, SearchBudget};
use crate::error::Result;
use crate::monoid::Word;
use crate::par::{self, Execution};

/// The accepted words up to some length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub words: BTreeSet<Word>,
    /// False if some membership query came back
    /// [`Acceptance::BudgetExhausted`].
    pub complete: bool,
    /// Words whose membership was left undecided.
    pub unknown: BTreeSet<Word>,
}

impl ValenceAutomaton {
    /// Every accepted word of length at most `max_len`, using the default
    /// execution strategy.
    pub fn enumerate_language(&self, max_len: usize, budget: &SearchBudget) -> Result<Enumeration> {
        self.enumerate_language_with(max_len, budget, Execution::default())
    }

    pub fn enumerate_language_with(
        &self,
        max_len: usize,
        budget: &SearchBudget,
        exec: Execution,
    ) -> Result<Enumeration> {
        let candidates = Word::all_up_to(self.input_alphabet(), max_len);
        let answers = par::map(&candidates, exec, |w| self.accepts(w, budget));
        let mut out = Enumeration {
            words: BTreeSet::new(),
            complete: true,
            unknown: BTreeSet::new(),
        };
        for (w, answer) in candidates.into_iter().zip(answers) {
            match answer? {
                Acceptance::Accepted => {
                    out.words.insert(w);
                }
                Acceptance::Rejected => {}
                Acceptance::BudgetExhausted => {
                    out.complete = false;
                    out.unknown.insert(w);
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{Alphabet, MonoidSpec};

    fn shown(e: &Enumeration) -> Vec<String> {
        e.words.iter().map(|w| w.to_string()).collect()
    }

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    #[test]
    fn figure_one_left_up_to_two() {
        let a = ValenceAutomaton::builder(MonoidSpec::polycyclic(Alphabet::new(["x"]).unwrap()), ab())
            .initial("q")
            .final_state("q")
            .edge("q", "x", "a", "q")
            .edge("q", "x^-1", "b", "q")
            .build()
            .unwrap();
        let e = a.enumerate_language(2, &SearchBudget::default()).unwrap();
        assert!(e.complete);
        assert_eq!(shown(&e), ["ε", "ab"]);
    }

    #[test]
    fn trivial_monoid_is_a_plain_nfa() {
        let a = ValenceAutomaton::builder(MonoidSpec::Trivial, ab())
            .initial("p")
            .final_state("p")
            .edge("p", "", "a", "q")
            .edge("q", "", "b", "p")
            .build()
            .unwrap();
        let e = a.enumerate_language(4, &SearchBudget::default()).unwrap();
        assert_eq!(shown(&e), ["ε", "ab", "abab"]);
    }

    #[test]
    fn one_counter_equal_counts() {
        let a = ValenceAutomaton::builder(MonoidSpec::free_abelian_rank(1), ab())
            .initial("q")
            .final_state("q")
            .edge("q", "c1", "a", "q")
            .edge("q", "c1^-1", "b", "q")
            .build()
            .unwrap();
        let e = a.enumerate_language(4, &SearchBudget::default()).unwrap();
        // oracle: count letters
        let expect: BTreeSet<Word> = Word::all_up_to(&ab(), 4)
            .into_iter()
            .filter(|w| {
                let na = w.symbols().iter().filter(|s| s.as_str() == "a").count();
                2 * na == w.len()
            })
            .collect();
        assert_eq!(e.words, expect);
        assert_eq!(
            shown(&e),
            ["ε", "ab", "ba", "aabb", "abab", "abba", "baab", "baba", "bbaa"]
        );
        let seq = a
            .enumerate_language_with(4, &SearchBudget::default(), Execution::Sequential)
            .unwrap();
        assert_eq!(seq, e);
    }
}
