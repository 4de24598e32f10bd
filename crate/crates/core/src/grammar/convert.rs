use std::collections::HashMap;

use super::cnf::{cnf_transform, cyk_member, CnfGrammar};
use super::{ContextFreeGrammar, GSym, Production};
use crate::automaton::{Edge, ValenceAutomaton};
use crate::constructions::normalize_multipliers;
use crate::error::{Error, Result};
use crate::monoid::{Alphabet, Letter, Multiplier, MonoidSpec, SignedWord, Symbol, Word};

fn require_unit_multipliers(a: &ValenceAutomaton) -> Result<()> {
    match a.edges().iter().find(|e| e.mult.len() > 1) {
        Some(e) => Err(Error::Precondition(format!(
            "multiplier {} is longer than one letter; normalize first",
            e.mult
        ))),
        None => Ok(()),
    }
}

/// The triple construction for a polycyclic automaton with unit
/// multipliers, accepting with empty stack at a final state.
///
/// `[p,ε,q]` derives the words read along paths from `p` to `q` whose
/// register word is balanced; `[p,x,q]` those of a balanced path that
/// starts by pushing `x` and ends by popping it.
///
/// * `S → [q₀,ε,f]` for each final `f`;
/// * `[p,ε,p] → ε`;
/// * `[p,ε,q] → a [r,ε,q]` for an edge `p --(1, a)--> r`;
/// * `[p,ε,q] → [p,x,r] [r,ε,q]`;
/// * `[p,x,r] → a [p′,ε,s] b` for edges `p --(x, a)--> p′` and
///   `s --(x⁻¹, b)--> r`.
pub fn pda_to_cfg(a: &ValenceAutomaton) -> Result<ContextFreeGrammar> {
    let gens = match a.monoid() {
        MonoidSpec::Polycyclic(x) => x.clone(),
        other => {
            return Err(Error::Precondition(format!(
                "grammar conversion needs a polycyclic automaton, got {other}"
            )))
        }
    };
    require_unit_multipliers(a)?;
    let n = a.states().len();
    let k = gens.len();
    let st = a.states();
    let mut names = vec!["S".to_string()];
    let balanced = |p: usize, q: usize| 1 + p * n + q;
    for p in st {
        for q in st {
            names.push(format!("[{p},ε,{q}]"));
        }
    }
    let matched = |p: usize, x: usize, q: usize| 1 + n * n + (p * k + x) * n + q;
    for p in st {
        for x in gens.symbols() {
            for q in st {
                names.push(format!("[{p},{x},{q}]"));
            }
        }
    }
    let term = |e: &Edge| e.read.iter().map(|s| GSym::T(s.clone())).collect::<Vec<_>>();
    let mut productions = Vec::new();
    for f in a.finals() {
        productions.push(Production {
            head: 0,
            body: vec![GSym::N(balanced(a.initial(), f))],
        });
    }
    for p in 0..n {
        productions.push(Production {
            head: balanced(p, p),
            body: Vec::new(),
        });
    }
    let mut pushes: Vec<Vec<&Edge>> = vec![Vec::new(); k];
    let mut pops: Vec<Vec<&Edge>> = vec![Vec::new(); k];
    for e in a.edges() {
        match e.mult.0[0].letters().first() {
            None => {
                for q in 0..n {
                    let mut body = term(e);
                    body.push(GSym::N(balanced(e.to, q)));
                    productions.push(Production {
                        head: balanced(e.from, q),
                        body,
                    });
                }
            }
            Some(l) => {
                let x = gens.index_of(&l.symbol).expect("multiplier checked at build");
                if l.inverse {
                    pops[x].push(e);
                } else {
                    pushes[x].push(e);
                }
            }
        }
    }
    for p in 0..n {
        for x in 0..k {
            for r in 0..n {
                for q in 0..n {
                    productions.push(Production {
                        head: balanced(p, q),
                        body: vec![GSym::N(matched(p, x, r)), GSym::N(balanced(r, q))],
                    });
                }
            }
        }
    }
    for x in 0..k {
        for push in &pushes[x] {
            for pop in &pops[x] {
                let mut body = term(push);
                body.push(GSym::N(balanced(push.to, pop.from)));
                body.extend(term(pop));
                productions.push(Production {
                    head: matched(push.from, x, pop.to),
                    body,
                });
            }
        }
    }
    ContextFreeGrammar::new(names, a.input_alphabet().clone(), 0, productions)
}

/// Simulates a free-group automaton with unit multipliers by a pushdown
/// automaton over `P(X ⊎ X′)`, where the marker `x′` on the stack stands
/// for `x⁻¹` in the reduced register word. Multiplying by `x` either pushes
/// `x` or pops a marker `x′`; multiplying by `x⁻¹` either pushes `x′` or
/// pops `x`. Wrong guesses reach the polycyclic zero and die.
pub fn fg_automaton_to_pda(a: &ValenceAutomaton) -> Result<ValenceAutomaton> {
    let gens = match a.monoid() {
        MonoidSpec::FreeGroup(x) => x.clone(),
        other => {
            return Err(Error::Precondition(format!(
                "free-group simulation needs a free-group automaton, got {other}"
            )))
        }
    };
    require_unit_multipliers(a)?;
    let mut names: Vec<String> = gens.symbols().iter().map(|s| s.to_string()).collect();
    let mut marker: HashMap<Symbol, Symbol> = HashMap::new();
    for s in gens.symbols() {
        let mut m = format!("{s}'");
        while names.contains(&m) {
            m.push('\'');
        }
        names.push(m.clone());
        marker.insert(s.clone(), Symbol::new(&m));
    }
    let stack = Alphabet::new(&names)?;
    let single = |l: Letter| Multiplier::single(SignedWord(vec![l]));
    let mut edges = Vec::new();
    for e in a.edges() {
        match e.mult.0[0].letters().first() {
            None => edges.push(e.clone()),
            Some(l) => {
                let m = marker[&l.symbol].clone();
                let (push, pop) = if l.inverse {
                    (Letter::pos(m), Letter::neg(l.symbol.clone()))
                } else {
                    (Letter::pos(l.symbol.clone()), Letter::neg(m))
                };
                for mult in [single(push), single(pop)] {
                    edges.push(Edge {
                        mult,
                        ..e.clone()
                    });
                }
            }
        }
    }
    ValenceAutomaton::new(
        MonoidSpec::polycyclic(stack),
        a.input_alphabet().clone(),
        a.states().to_vec(),
        a.initial(),
        a.finals(),
        edges,
    )
}

/// The grammar of any polycyclic, free-group or trivial-monoid automaton,
/// normalizing multipliers first.
pub fn exact_grammar(a: &ValenceAutomaton) -> Result<ContextFreeGrammar> {
    match a.monoid() {
        MonoidSpec::Polycyclic(_) => pda_to_cfg(&normalize_multipliers(a)?),
        MonoidSpec::FreeGroup(_) => pda_to_cfg(&fg_automaton_to_pda(&normalize_multipliers(a)?)?),
        MonoidSpec::Trivial => {
            pda_to_cfg(&a.reinterpret(MonoidSpec::polycyclic(Alphabet::empty()))?)
        }
        other => Err(Error::Unsupported(format!(
            "no exact oracle for automata over {other}"
        ))),
    }
}

/// An exact membership tester, built once per automaton.
#[derive(Clone, Debug)]
pub struct ExactOracle {
    cnf: CnfGrammar,
    alphabet: Alphabet,
}

impl ExactOracle {
    pub fn new(a: &ValenceAutomaton) -> Result<Self> {
        Ok(ExactOracle {
            cnf: cnf_transform(&exact_grammar(a)?),
            alphabet: a.input_alphabet().clone(),
        })
    }

    pub fn grammar(&self) -> &CnfGrammar {
        &self.cnf
    }

    pub fn accepts(&self, w: &Word) -> Result<bool> {
        w.check(&self.alphabet)?;
        Ok(cyk_member(&self.cnf, w))
    }
}

/// One-off exact membership; prefer [`ExactOracle`] for many words.
pub fn exact_member(a: &ValenceAutomaton, w: &Word) -> Result<bool> {
    ExactOracle::new(a)?.accepts(w)
}
