use std::fmt;
use std::sync::Arc;

use super::alphabet::{Alphabet, Letter, SignedWord};
use crate::error::{Error, Result};

/// Free reduction: delete factors `x x^-1` and `x^-1 x` until none remain.
///
/// Single left-to-right pass with a stack; the result is the unique reduced
/// word because free reduction is confluent.
pub fn free_reduce(w: &SignedWord) -> SignedWord {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for l in w.letters() {
        push_reduced(&mut out, l);
    }
    SignedWord(out)
}

fn push_reduced(stack: &mut Vec<Letter>, l: &Letter) {
    if stack.last().is_some_and(|top| top.cancels(l)) {
        stack.pop();
    } else {
        stack.push(l.clone());
    }
}

/// An element of the free group `F(X)`, stored as a freely reduced word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeGroupElement {
    alphabet: Arc<Alphabet>,
    reduced: SignedWord,
}

impl FreeGroupElement {
    pub fn identity(alphabet: Arc<Alphabet>) -> Self {
        FreeGroupElement {
            alphabet,
            reduced: SignedWord::empty(),
        }
    }

    /// The element represented by `w`.
    pub fn from_word(alphabet: Arc<Alphabet>, w: &SignedWord) -> Result<Self> {
        w.check(&alphabet)?;
        Ok(FreeGroupElement {
            alphabet,
            reduced: free_reduce(w),
        })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn reduced(&self) -> &SignedWord {
        &self.reduced
    }

    pub fn is_identity(&self) -> bool {
        self.reduced.is_empty()
    }

    /// Nonempty and made of positive generators only.
    pub fn is_positive(&self) -> bool {
        !self.reduced.is_empty() && self.reduced.is_positive()
    }

    pub fn len(&self) -> usize {
        self.reduced.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reduced.is_empty()
    }

    pub fn multiply(&self, other: &FreeGroupElement) -> Result<FreeGroupElement> {
        same_alphabet(&self.alphabet, &other.alphabet)?;
        let mut out = self.reduced.0.clone();
        for l in other.reduced.letters() {
            push_reduced(&mut out, l);
        }
        Ok(FreeGroupElement {
            alphabet: self.alphabet.clone(),
            reduced: SignedWord(out),
        })
    }

    pub fn invert(&self) -> FreeGroupElement {
        FreeGroupElement {
            alphabet: self.alphabet.clone(),
            reduced: self.reduced.inverse(),
        }
    }
}

pub(crate) fn same_alphabet(a: &Arc<Alphabet>, b: &Arc<Alphabet>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::AlphabetMismatch {
            left: a.to_string(),
            right: b.to_string(),
        })
    }
}

impl fmt::Display for FreeGroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.reduced)
    }
}

impl fmt::Debug for FreeGroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F[{}]", self.reduced)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> SignedWord {
        SignedWord::parse(s).unwrap()
    }

    fn xy() -> Arc<Alphabet> {
        Arc::new(Alphabet::new(["x", "y"]).unwrap())
    }

    fn el(s: &str) -> FreeGroupElement {
        FreeGroupElement::from_word(xy(), &w(s)).unwrap()
    }

    /// Nondeterministic rewriting: every normal form reachable by deleting
    /// any cancelling factor in any order.
    fn all_normal_forms(word: &SignedWord) -> Vec<SignedWord> {
        let mut found = Vec::new();
        let mut todo = vec![word.clone()];
        let mut seen = std::collections::HashSet::new();
        while let Some(cur) = todo.pop() {
            if !seen.insert(cur.clone()) {
                continue;
            }
            let mut reducible = false;
            for i in 0..cur.len().saturating_sub(1) {
                if cur.0[i].cancels(&cur.0[i + 1]) {
                    reducible = true;
                    let mut next = cur.0.clone();
                    next.drain(i..i + 2);
                    todo.push(SignedWord(next));
                }
            }
            if !reducible && !found.contains(&cur) {
                found.push(cur);
            }
        }
        found
    }

    fn words_up_to(alpha: &[&str], max_len: usize) -> Vec<SignedWord> {
        let letters: Vec<Letter> = alpha
            .iter()
            .flat_map(|s| [Letter::pos((*s).into()), Letter::neg((*s).into())])
            .collect();
        let mut out = vec![SignedWord::empty()];
        let mut layer = vec![SignedWord::empty()];
        for _ in 0..max_len {
            layer = layer
                .iter()
                .flat_map(|u| {
                    letters.iter().map(move |l| {
                        let mut v = u.0.clone();
                        v.push(l.clone());
                        SignedWord(v)
                    })
                })
                .collect();
            out.extend(layer.iter().cloned());
        }
        out
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(free_reduce(&w("x x^-1")), SignedWord::empty());
        assert_eq!(free_reduce(&w("x^-1 x y")), w("y"));
        assert_eq!(free_reduce(&w("x y y^-1 x^-1 x")), w("x"));
    }

    #[test]
    fn reduction_matches_exhaustive_rewriting() {
        for word in words_up_to(&["x", "y"], 6) {
            let forms = all_normal_forms(&word);
            assert_eq!(forms.len(), 1, "not confluent on {word}");
            assert_eq!(forms[0], free_reduce(&word), "on {word}");
        }
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(el("x y").multiply(&el("y^-1")).unwrap(), el("x"));
        assert_eq!(el("").multiply(&el("x y^-1")).unwrap(), el("x y^-1"));
        assert_eq!(el("x^-1").multiply(&el("x y")).unwrap(), el("y"));
        let a = el("x y^-1 x");
        assert!(a.multiply(&a.invert()).unwrap().is_identity());
    }

    #[test]
    fn multiply_rejects_foreign_alphabet() {
        let other = Arc::new(Alphabet::new(["x"]).unwrap());
        let b = FreeGroupElement::from_word(other, &w("x")).unwrap();
        assert!(matches!(
            el("x").multiply(&b),
            Err(Error::AlphabetMismatch { .. })
        ));
    }

    #[test]
    fn reduce_is_idempotent() {
        for word in words_up_to(&["x", "y", "z"], 5) {
            let r = free_reduce(&word);
            assert_eq!(free_reduce(&r), r);
        }
    }

    #[test]
    fn reduction_is_a_morphism() {
        for word in words_up_to(&["x", "y"], 8) {
            let whole = el(&word.to_string());
            for cut in 0..=word.len() {
                let u = SignedWord(word.0[..cut].to_vec());
                let v = SignedWord(word.0[cut..].to_vec());
                let prod = el(&u.to_string()).multiply(&el(&v.to_string())).unwrap();
                assert_eq!(whole, prod, "split {u} | {v}");
            }
        }
    }

    #[test]
    fn multiply_is_associative() {
        let rank1 = Arc::new(Alphabet::new(["x"]).unwrap());
        let check = |alpha: &Arc<Alphabet>, names: &[&str], len: usize| {
            let els: Vec<FreeGroupElement> = words_up_to(names, len)
                .iter()
                .map(|u| FreeGroupElement::from_word(alpha.clone(), u).unwrap())
                .collect();
            for a in &els {
                for b in &els {
                    let ab = a.multiply(b).unwrap();
                    for c in &els {
                        assert_eq!(
                            ab.multiply(c).unwrap(),
                            a.multiply(&b.multiply(c).unwrap()).unwrap()
                        );
                    }
                }
            }
        };
        check(&rank1, &["x"], 4);
        check(&xy(), &["x", "y"], 2);
    }
}
