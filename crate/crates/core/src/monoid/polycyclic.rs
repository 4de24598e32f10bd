use std::fmt;
use std::sync::Arc;

use super::alphabet::{Alphabet, SignedWord, Symbol};
use super::free_group::same_alphabet;
use crate::error::Result;

/// Normal form of a polycyclic monoid element.
///
/// `Pair { pop, push }` is the partial function on stacks `s·pop ↦ s·push`
/// (stack top on the right): it pops `pop` read right to left, then pushes
/// `push`. `Zero` is the empty partial function.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum PolyValue {
    Zero,
    Pair { pop: Vec<Symbol>, push: Vec<Symbol> },
}

impl PolyValue {
    pub fn identity() -> Self {
        PolyValue::Pair {
            pop: Vec::new(),
            push: Vec::new(),
        }
    }

    /// Composition: apply `self`, then `other`.
    pub fn then(&self, other: &PolyValue) -> PolyValue {
        let (PolyValue::Pair { pop: u1, push: v1 }, PolyValue::Pair { pop: u2, push: v2 }) =
            (self, other)
        else {
            return PolyValue::Zero;
        };
        if v1.ends_with(u2) {
            // v1 = s·u2
            let s = &v1[..v1.len() - u2.len()];
            let mut push = s.to_vec();
            push.extend_from_slice(v2);
            PolyValue::Pair {
                pop: u1.clone(),
                push,
            }
        } else if u2.ends_with(v1) {
            // u2 = t·v1 with v1 a proper suffix
            let t = &u2[..u2.len() - v1.len()];
            let mut pop = t.to_vec();
            pop.extend_from_slice(u1);
            PolyValue::Pair {
                pop,
                push: v2.clone(),
            }
        } else {
            PolyValue::Zero
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, PolyValue::Pair { pop, push } if pop.is_empty() && push.is_empty())
    }

    /// Left-to-right product of generator actions: `x ↦ (ε, x)`,
    /// `x^-1 ↦ (x, ε)`. No alphabet check.
    pub fn of_word(w: &SignedWord) -> PolyValue {
        let mut value = PolyValue::identity();
        for l in w.letters() {
            let g = if l.inverse {
                PolyValue::Pair {
                    pop: vec![l.symbol.clone()],
                    push: Vec::new(),
                }
            } else {
                PolyValue::Pair {
                    pop: Vec::new(),
                    push: vec![l.symbol.clone()],
                }
            };
            value = value.then(&g);
            if value == PolyValue::Zero {
                break;
            }
        }
        value
    }
}

/// An element of the polycyclic monoid `P(X)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolycyclicElement {
    alphabet: Arc<Alphabet>,
    value: PolyValue,
}

impl PolycyclicElement {
    pub fn identity(alphabet: Arc<Alphabet>) -> Self {
        PolycyclicElement {
            alphabet,
            value: PolyValue::identity(),
        }
    }

    pub fn zero(alphabet: Arc<Alphabet>) -> Self {
        PolycyclicElement {
            alphabet,
            value: PolyValue::Zero,
        }
    }

    /// Builds `(pop, push)` directly; both words must use alphabet symbols.
    pub fn pair(alphabet: Arc<Alphabet>, pop: Vec<Symbol>, push: Vec<Symbol>) -> Result<Self> {
        let check = SignedWord(
            pop.iter()
                .chain(push.iter())
                .cloned()
                .map(super::alphabet::Letter::pos)
                .collect(),
        );
        check.check(&alphabet)?;
        Ok(PolycyclicElement {
            alphabet,
            value: PolyValue::Pair { pop, push },
        })
    }

    /// The element represented by `w`; see [`PolyValue::of_word`].
    pub fn eval(alphabet: Arc<Alphabet>, w: &SignedWord) -> Result<Self> {
        w.check(&alphabet)?;
        Ok(PolycyclicElement {
            alphabet,
            value: PolyValue::of_word(w),
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn value(&self) -> &PolyValue {
        &self.value
    }

    pub fn multiply(&self, other: &PolycyclicElement) -> Result<PolycyclicElement> {
        same_alphabet(&self.alphabet, &other.alphabet)?;
        Ok(PolycyclicElement {
            alphabet: self.alphabet.clone(),
            value: self.value.then(&other.value),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.value.is_identity()
    }

    pub fn is_zero(&self) -> bool {
        self.value == PolyValue::Zero
    }

    /// `|pop| + |push|`; zero counts as 0.
    pub fn len(&self) -> usize {
        match &self.value {
            PolyValue::Zero => 0,
            PolyValue::Pair { pop, push } => pop.len() + push.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Applies the partial function to a stack (top on the right).
    pub fn apply(&self, stack: &[Symbol]) -> Option<Vec<Symbol>> {
        match &self.value {
            PolyValue::Zero => None,
            PolyValue::Pair { pop, push } => {
                let rest = stack.strip_suffix(pop.as_slice())?;
                let mut out = rest.to_vec();
                out.extend_from_slice(push);
                Some(out)
            }
        }
    }
}

impl fmt::Display for PolycyclicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |w: &[Symbol]| {
            if w.is_empty() {
                "ε".to_string()
            } else {
                w.iter().map(Symbol::as_str).collect::<Vec<_>>().join(" ")
            }
        };
        match &self.value {
            PolyValue::Zero => f.write_str("0"),
            PolyValue::Pair { pop, push } => write!(f, "({}, {})", show(pop), show(push)),
        }
    }
}

impl fmt::Debug for PolycyclicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{self}")
    }
}
