//! Dyck-language predicates, minima of words, and permissible paddings.
//!
//! A permissible padding of `w = w₁…wₙ` over `X̄` inserts the padding symbol
//! `#` after every letter, any number of `#^-1` immediately before each
//! negative letter, and any number of `#^-1` at the end. Paddings connect
//! the two Dyck languages: `w` reduces to ε in `P(X)` exactly when some
//! padding of it reduces to ε in `F(X ∪ {#})`.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::monoid::{free_reduce, Letter, PolyValue, SignedWord, Symbol};

/// Name of the padding generator.
pub const PAD: &str = "#";

fn pad_symbol() -> Symbol {
    Symbol::new(PAD)
}

/// `w` freely reduces to ε (identity in the free group).
pub fn is_two_sided_dyck(w: &SignedWord) -> bool {
    free_reduce(w).is_empty()
}

/// `w` reduces to ε by deleting `x x^-1` factors only (identity in the
/// polycyclic monoid).
pub fn is_one_sided_dyck(w: &SignedWord) -> bool {
    PolyValue::of_word(w).is_identity()
}

/// Every prefix of `w` reduces to ε or to a word of positive generators.
pub fn all_prefixes_positive_or_identity(w: &SignedWord) -> bool {
    let mut reduced: Vec<Letter> = Vec::new();
    for l in w.letters() {
        if reduced.last().is_some_and(|t| t.cancels(l)) {
            reduced.pop();
        } else {
            reduced.push(l.clone());
        }
        if reduced.iter().any(|x| x.inverse) {
            return false;
        }
    }
    true
}

/// The minima of `w`: group elements represented by some prefix of `w` such
/// that no prefix representing them is immediately followed by a negative
/// generator. Elements are returned as freely reduced words.
pub fn minima(w: &SignedWord) -> BTreeSet<SignedWord> {
    // element -> is it still a candidate?
    let mut status: HashMap<SignedWord, bool> = HashMap::new();
    let mut reduced: Vec<Letter> = Vec::new();
    for i in 0..=w.len() {
        if i > 0 {
            let l = &w.0[i - 1];
            if reduced.last().is_some_and(|t| t.cancels(l)) {
                reduced.pop();
            } else {
                reduced.push(l.clone());
            }
        }
        let followed_by_negative = w.0.get(i).is_some_and(|l| l.inverse);
        let entry = status.entry(SignedWord(reduced.clone())).or_insert(true);
        if followed_by_negative {
            *entry = false;
        }
    }
    status
        .into_iter()
        .filter_map(|(e, ok)| ok.then_some(e))
        .collect()
}

/// Which identity language [`dyck_words`] generates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DyckKind {
    OneSided,
    TwoSided,
}

/// All Dyck words over `alphabet` of length at most `max_len`, in
/// length-lexicographic order. Prefixes that cannot be closed within the
/// remaining length are pruned, so this is much cheaper than filtering
/// every word.
pub fn dyck_words(alphabet: &crate::monoid::Alphabet, max_len: usize, kind: DyckKind) -> Vec<SignedWord> {
    let letters: Vec<Letter> = alphabet
        .symbols()
        .iter()
        .flat_map(|s| [Letter::pos(s.clone()), Letter::neg(s.clone())])
        .collect();
    let mut out = Vec::new();
    for len in (0..=max_len).step_by(2) {
        let mut word = Vec::with_capacity(len);
        let mut reduced = Vec::with_capacity(len);
        extend_dyck(&letters, len, kind, &mut word, &mut reduced, &mut out);
    }
    out
}

fn extend_dyck(
    letters: &[Letter],
    len: usize,
    kind: DyckKind,
    word: &mut Vec<Letter>,
    reduced: &mut Vec<Letter>,
    out: &mut Vec<SignedWord>,
) {
    if word.len() == len {
        if reduced.is_empty() {
            out.push(SignedWord(word.clone()));
        }
        return;
    }
    for l in letters {
        let cancels = reduced.last().is_some_and(|t| t.cancels(l));
        if !cancels && kind == DyckKind::OneSided && l.inverse {
            continue;
        }
        let new_len = if cancels { reduced.len() - 1 } else { reduced.len() + 1 };
        if new_len > len - word.len() - 1 {
            continue;
        }
        word.push(l.clone());
        let popped = if cancels { reduced.pop() } else { reduced.push(l.clone()); None };
        extend_dyck(letters, len, kind, word, reduced, out);
        match popped {
            Some(t) => reduced.push(t),
            None => {
                reduced.pop();
            }
        }
        word.pop();
    }
}

/// A padded word together with the word it pads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaddedWord {
    pub word: SignedWord,
    pub origin: SignedWord,
}

/// The canonical permissible padding of a 1-sided Dyck word that is the
/// identity in `P(X ∪ {#})`.
///
/// Simulates the stack with `#` markers interleaved: each letter is followed
/// by a pushed `#`, and every `#` is popped (emitting `#^-1`) as soon as a
/// negative letter or the end of the word needs to reach below it.
pub fn insert_padding(w: &SignedWord) -> Result<PaddedWord> {
    let pad = pad_symbol();
    if w.letters().iter().any(|l| l.symbol == pad) {
        return Err(Error::Precondition(format!(
            "word already uses the padding symbol {PAD}"
        )));
    }
    if !is_one_sided_dyck(w) {
        return Err(Error::Precondition(format!("{w} is not a 1-sided Dyck word")));
    }
    let mut stack: Vec<&Symbol> = Vec::new();
    let mut out: Vec<Letter> = Vec::with_capacity(3 * w.len());
    for l in w.letters() {
        if l.inverse {
            while stack.last() == Some(&&pad) {
                stack.pop();
                out.push(Letter::neg(pad.clone()));
            }
            let top = stack.pop();
            debug_assert_eq!(top, Some(&l.symbol));
        } else {
            stack.push(&l.symbol);
        }
        out.push(l.clone());
        stack.push(&pad);
        out.push(Letter::pos(pad.clone()));
    }
    while stack.pop().is_some() {
        out.push(Letter::neg(pad.clone()));
    }
    Ok(PaddedWord {
        word: SignedWord(out),
        origin: w.clone(),
    })
}

/// Whether `p` is a permissible padding of `w`.
pub fn is_permissible_padding(p: &SignedWord, w: &SignedWord) -> bool {
    let pad = pad_symbol();
    let is_pad_inv = |l: &Letter| l.symbol == pad && l.inverse;
    let letters = p.letters();
    let mut i = 0;
    for origin in w.letters() {
        if origin.symbol == pad {
            return false;
        }
        if origin.inverse {
            while i < letters.len() && is_pad_inv(&letters[i]) {
                i += 1;
            }
        }
        if letters.get(i) != Some(origin) {
            return false;
        }
        i += 1;
        if letters.get(i) != Some(&Letter::pos(pad.clone())) {
            return false;
        }
        i += 1;
    }
    letters[i..].iter().all(is_pad_inv)
}

/// Deletes every `#` and `#^-1`.
pub fn strip_padding(p: &SignedWord) -> SignedWord {
    let pad = pad_symbol();
    p.letters()
        .iter()
        .filter(|l| l.symbol != pad)
        .cloned()
        .collect()
}

/// Every permissible padding of `w` with at most `max_block` letters in
/// each `#^-1` block.
pub fn paddings(w: &SignedWord, max_block: usize) -> Vec<SignedWord> {
    let pad = pad_symbol();
    let mut partial: Vec<Vec<Letter>> = vec![Vec::new()];
    let with_block = |partial: Vec<Vec<Letter>>| -> Vec<Vec<Letter>> {
        partial
            .into_iter()
            .flat_map(|p| {
                (0..=max_block).map(move |k| {
                    let mut q = p.clone();
                    q.extend(std::iter::repeat_n(Letter::neg(pad_symbol()), k));
                    q
                })
            })
            .collect()
    };
    for l in w.letters() {
        if l.inverse {
            partial = with_block(partial);
        }
        for p in partial.iter_mut() {
            p.push(l.clone());
            p.push(Letter::pos(pad.clone()));
        }
    }
    with_block(partial).into_iter().map(SignedWord).collect()
}
