use std::fmt;
use std::sync::Arc;

use super::alphabet::{Alphabet, SignedWord};
use super::free_group::same_alphabet;
use crate::error::{Error, Result};

/// An element of the free abelian group `Zⁿ`; `n` is the size of the
/// generator alphabet, one generator per counter.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntVector {
    alphabet: Arc<Alphabet>,
    components: Vec<i64>,
}

impl IntVector {
    pub fn zero(alphabet: Arc<Alphabet>) -> Self {
        let n = alphabet.len();
        IntVector {
            alphabet,
            components: vec![0; n],
        }
    }

    pub fn new(alphabet: Arc<Alphabet>, components: Vec<i64>) -> Result<Self> {
        if components.len() != alphabet.len() {
            return Err(Error::ArityMismatch {
                left: alphabet.len(),
                right: components.len(),
            });
        }
        Ok(IntVector {
            alphabet,
            components,
        })
    }

    /// Sum of the unit vectors named by `w` (inverses count −1).
    pub fn eval(alphabet: Arc<Alphabet>, w: &SignedWord) -> Result<Self> {
        let mut components = vec![0i64; alphabet.len()];
        for l in w.letters() {
            let i = alphabet.index_of(&l.symbol).ok_or_else(|| Error::UnknownSymbol {
                symbol: l.symbol.to_string(),
                alphabet: alphabet.to_string(),
            })?;
            let d = if l.inverse { -1 } else { 1 };
            components[i] = components[i].checked_add(d).ok_or(Error::Overflow)?;
        }
        Ok(IntVector {
            alphabet,
            components,
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn components(&self) -> &[i64] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn add(&self, other: &IntVector) -> Result<IntVector> {
        if self.rank() != other.rank() {
            return Err(Error::ArityMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        same_alphabet(&self.alphabet, &other.alphabet)?;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntVector {
            alphabet: self.alphabet.clone(),
            components,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.components.iter().all(|c| *c == 0)
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> u64 {
        self.components
            .iter()
            .map(|c| c.unsigned_abs())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{self}")
    }
}
