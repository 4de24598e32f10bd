//! Exact membership for pushdown-like automata: polycyclic and free-group
//! automata are converted to context-free grammars, which are put in
//! Chomsky normal form and parsed with CYK.

mod cnf;
mod convert;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::monoid::{Alphabet, Symbol, Word};

pub use cnf::{cnf_transform, cyk_member, CnfGrammar};
pub use convert::{exact_grammar, exact_member, fg_automaton_to_pda, pda_to_cfg, ExactOracle};

/// A grammar symbol: a terminal letter or a nonterminal index.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum GSym {
    T(Symbol),
    N(usize),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Production {
    pub head: usize,
    pub body: Vec<GSym>,
}

/// A context-free grammar over `terminals`, nonterminals addressed by
/// index into `nonterminals`.
#[derive(Clone, Debug)]
pub struct ContextFreeGrammar {
    nonterminals: Vec<String>,
    terminals: Alphabet,
    start: usize,
    productions: Vec<Production>,
}

impl ContextFreeGrammar {
    pub fn new(
        nonterminals: Vec<String>,
        terminals: Alphabet,
        start: usize,
        productions: Vec<Production>,
    ) -> Result<Self> {
        let n = nonterminals.len();
        if start >= n {
            return Err(Error::InvalidAutomaton("start symbol out of range".into()));
        }
        for p in &productions {
            if p.head >= n {
                return Err(Error::InvalidAutomaton("production head out of range".into()));
            }
            for s in &p.body {
                match s {
                    GSym::N(i) if *i >= n => {
                        return Err(Error::InvalidAutomaton(
                            "production body names an undeclared nonterminal".into(),
                        ))
                    }
                    GSym::T(a) if !terminals.contains(a) => {
                        return Err(Error::UnknownSymbol {
                            symbol: a.to_string(),
                            alphabet: terminals.to_string(),
                        })
                    }
                    _ => {}
                }
            }
        }
        Ok(ContextFreeGrammar {
            nonterminals,
            terminals,
            start,
            productions,
        })
    }

    pub fn nonterminals(&self) -> &[String] {
        &self.nonterminals
    }

    pub fn terminals(&self) -> &Alphabet {
        &self.terminals
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn productions(&self) -> &[Production] {
        &self.productions
    }

    /// Nonterminals deriving some terminal word.
    pub fn productive(&self) -> Vec<bool> {
        let mut productive = vec![false; self.nonterminals.len()];
        let mut changed = true;
        while changed {
            changed = false;
            for p in &self.productions {
                if !productive[p.head]
                    && p.body.iter().all(|s| match s {
                        GSym::T(_) => true,
                        GSym::N(b) => productive[*b],
                    })
                {
                    productive[p.head] = true;
                    changed = true;
                }
            }
        }
        productive
    }

    /// The equivalent grammar keeping only nonterminals that are both
    /// productive and reachable from the start symbol. The start symbol is
    /// always kept.
    pub fn trimmed(&self) -> ContextFreeGrammar {
        let productive = self.productive();
        let useful: Vec<&Production> = self
            .productions
            .iter()
            .filter(|p| {
                productive[p.head]
                    && p.body.iter().all(|s| match s {
                        GSym::T(_) => true,
                        GSym::N(b) => productive[*b],
                    })
            })
            .collect();
        let mut reachable = vec![false; self.nonterminals.len()];
        reachable[self.start] = true;
        let mut stack = vec![self.start];
        while let Some(a) = stack.pop() {
            for p in useful.iter().filter(|p| p.head == a) {
                for s in &p.body {
                    if let GSym::N(b) = s {
                        if !reachable[*b] {
                            reachable[*b] = true;
                            stack.push(*b);
                        }
                    }
                }
            }
        }
        let mut renumber = vec![usize::MAX; self.nonterminals.len()];
        let mut names = Vec::new();
        for (i, name) in self.nonterminals.iter().enumerate() {
            if reachable[i] {
                renumber[i] = names.len();
                names.push(name.clone());
            }
        }
        let productions = useful
            .into_iter()
            .filter(|p| reachable[p.head])
            .map(|p| Production {
                head: renumber[p.head],
                body: p
                    .body
                    .iter()
                    .map(|s| match s {
                        GSym::N(b) => GSym::N(renumber[*b]),
                        t => t.clone(),
                    })
                    .collect(),
            })
            .collect();
        ContextFreeGrammar {
            nonterminals: names,
            terminals: self.terminals.clone(),
            start: renumber[self.start],
            productions,
        }
    }

    /// Every generated word of length at most `max_len`, by fixpoint
    /// iteration over length-bounded languages of the nonterminals.
    pub fn language_up_to(&self, max_len: usize) -> BTreeSet<Word> {
        let mut langs: Vec<BTreeSet<Word>> = vec![BTreeSet::new(); self.nonterminals.len()];
        let mut changed = true;
        while changed {
            changed = false;
            for p in &self.productions {
                let mut partial: BTreeSet<Word> = [Word::empty()].into();
                for s in &p.body {
                    let parts: Vec<Word> = match s {
                        GSym::T(a) => vec![Word(vec![a.clone()])],
                        GSym::N(b) => langs[*b].iter().cloned().collect(),
                    };
                    partial = partial
                        .iter()
                        .flat_map(|u| parts.iter().map(move |v| u.concat(v)))
                        .filter(|w| w.len() <= max_len)
                        .collect();
                }
                for w in partial {
                    changed |= langs[p.head].insert(w);
                }
            }
        }
        std::mem::take(&mut langs[self.start])
    }
}

impl fmt::Display for ContextFreeGrammar {
    /// One production per line, `A -> B c`, with `ε` for an empty body; the
    /// start symbol's productions first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut order: Vec<&Production> = self.productions.iter().collect();
        order.sort_by_key(|p| (p.head != self.start, p.head));
        for p in order {
            write!(f, "{} ->", self.nonterminals[p.head])?;
            if p.body.is_empty() {
                write!(f, " ε")?;
            }
            for s in &p.body {
                match s {
                    GSym::T(a) => write!(f, " {a}")?,
                    GSym::N(b) => write!(f, " {}", self.nonterminals[*b])?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
