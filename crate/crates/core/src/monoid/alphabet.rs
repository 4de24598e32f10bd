//! Symbols, alphabets and the two kinds of words used throughout the crate:
//! [`SignedWord`]s over generators and their formal inverses, and plain
//! input [`Word`]s over a letter alphabet.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Suffix marking a formal inverse in token strings, e.g. `x^-1`.
pub const INVERSE_SUFFIX: &str = "^-1";

/// An atom of an alphabet. Cheap to clone.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(Arc<str>);

impl Symbol {
    pub fn new(name: &str) -> Self {
        Symbol(Arc::from(name))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Symbol {
    fn from(s: &str) -> Self {
        Symbol::new(s)
    }
}

/// An ordered finite set of distinct symbols.
///
/// Alphabets are value objects: two alphabets are equal when they list the
/// same symbols in the same order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
}

impl Alphabet {
    /// Builds an alphabet, rejecting duplicates and names that would not
    /// survive the token syntax (whitespace, `|`, or the inverse suffix).
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut out: Vec<Symbol> = Vec::new();
        for s in symbols {
            let s = s.as_ref();
            if s.is_empty()
                || s.chars().any(char::is_whitespace)
                || s.contains('|')
                || s.ends_with(INVERSE_SUFFIX)
            {
                return Err(Error::InvalidSymbol(s.to_string()));
            }
            let sym = Symbol::new(s);
            if out.contains(&sym) {
                return Err(Error::DuplicateSymbol(s.to_string()));
            }
            out.push(sym);
        }
        Ok(Alphabet { symbols: out })
    }

    /// The empty alphabet of the trivial monoid.
    pub fn empty() -> Self {
        Alphabet::default()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn contains(&self, s: &Symbol) -> bool {
        self.symbols.contains(s)
    }

    pub fn index_of(&self, s: &Symbol) -> Option<usize> {
        self.symbols.iter().position(|t| t == s)
    }

    /// `self` followed by `extra`; fails if `extra` is already present.
    pub fn with_symbol(&self, extra: &str) -> Result<Self> {
        Alphabet::new(
            self.symbols
                .iter()
                .map(Symbol::as_str)
                .chain(std::iter::once(extra)),
        )
    }

    /// The alphabet of signed tokens `x`, `x^-1` for every `x`, used as the
    /// input alphabet of transducers reading generator words.
    pub fn signed_tokens(&self) -> Alphabet {
        let symbols = self
            .symbols
            .iter()
            .flat_map(|s| {
                [
                    s.clone(),
                    Symbol::new(&format!("{}{}", s.as_str(), INVERSE_SUFFIX)),
                ]
            })
            .collect();
        Alphabet { symbols }
    }

    /// Like [`Alphabet::new`] but allows tokens ending in `^-1`; used for
    /// transducer alphabets whose letters are themselves signed generators.
    pub fn of_tokens<I, S>(tokens: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut out: Vec<Symbol> = Vec::new();
        for s in tokens {
            let s = s.as_ref();
            if s.is_empty() || s.chars().any(char::is_whitespace) || s.contains('|') {
                return Err(Error::InvalidSymbol(s.to_string()));
            }
            let sym = Symbol::new(s);
            if out.contains(&sym) {
                return Err(Error::DuplicateSymbol(s.to_string()));
            }
            out.push(sym);
        }
        Ok(Alphabet { symbols: out })
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

/// A generator or its formal inverse.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub symbol: Symbol,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(symbol: Symbol) -> Self {
        Letter {
            symbol,
            inverse: false,
        }
    }

    pub fn neg(symbol: Symbol) -> Self {
        Letter {
            symbol,
            inverse: true,
        }
    }

    pub fn inverted(&self) -> Self {
        Letter {
            symbol: self.symbol.clone(),
            inverse: !self.inverse,
        }
    }

    /// True when `self` and `other` are `x, x^-1` or `x^-1, x`.
    pub fn cancels(&self, other: &Letter) -> bool {
        self.symbol == other.symbol && self.inverse != other.inverse
    }

    /// Parses a single token such as `x` or `x^-1`.
    pub fn parse_token(token: &str) -> Result<Self> {
        match token.strip_suffix(INVERSE_SUFFIX) {
            Some("") => Err(Error::InvalidSymbol(token.to_string())),
            Some(base) => Ok(Letter::neg(Symbol::new(base))),
            None if token.is_empty() => Err(Error::InvalidSymbol(token.to_string())),
            None => Ok(Letter::pos(Symbol::new(token))),
        }
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}{}", self.symbol, INVERSE_SUFFIX)
        } else {
            write!(f, "{}", self.symbol)
        }
    }
}

/// A word over generators and their inverses. The empty word is ε.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SignedWord(pub Vec<Letter>);

impl SignedWord {
    pub fn empty() -> Self {
        SignedWord(Vec::new())
    }

    /// Parses a whitespace-separated token string, e.g. `"x y^-1 #^-1"`.
    /// `"ε"` and the empty string both denote the empty word. Symbols are
    /// not checked against any alphabet; see [`SignedWord::parse_over`].
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Ok(SignedWord::empty());
        }
        text.split_whitespace()
            .map(Letter::parse_token)
            .collect::<Result<Vec<_>>>()
            .map(SignedWord)
    }

    /// Parses and checks every symbol against `alphabet`.
    pub fn parse_over(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let w = SignedWord::parse(text)?;
        w.check(alphabet)?;
        Ok(w)
    }

    pub fn check(&self, alphabet: &Alphabet) -> Result<()> {
        for l in &self.0 {
            if !alphabet.contains(&l.symbol) {
                return Err(Error::UnknownSymbol {
                    symbol: l.symbol.to_string(),
                    alphabet: alphabet.to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True iff the word uses positive generators only.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| !l.inverse)
    }

    pub fn concat(&self, other: &SignedWord) -> SignedWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        SignedWord(v)
    }

    /// Every word over `X̄` of length at most `max_len`, shortest first.
    pub fn all_up_to(alphabet: &Alphabet, max_len: usize) -> Vec<SignedWord> {
        let letters: Vec<Letter> = alphabet
            .symbols()
            .iter()
            .flat_map(|s| [Letter::pos(s.clone()), Letter::neg(s.clone())])
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

    /// Formal inverse: reverse the word and flip every sign.
    pub fn inverse(&self) -> SignedWord {
        SignedWord(self.0.iter().rev().map(Letter::inverted).collect())
    }

    /// Each letter rendered as a single token (`x` or `x^-1`).
    pub fn to_tokens(&self) -> Word {
        Word(
            self.0
                .iter()
                .map(|l| Symbol::new(&l.to_string()))
                .collect(),
        )
    }

    /// Inverse of [`SignedWord::to_tokens`].
    pub fn from_tokens(tokens: &Word) -> Result<Self> {
        tokens
            .0
            .iter()
            .map(|s| Letter::parse_token(s.as_str()))
            .collect::<Result<Vec<_>>>()
            .map(SignedWord)
    }
}

impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromIterator<Letter> for SignedWord {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        SignedWord(iter.into_iter().collect())
    }
}

/// A plain word over a letter alphabet (automaton input, transducer tapes).
///
/// Ordered length-lexicographically so that sorted collections of words come
/// out shortest first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    /// Parses a word against `alphabet`. Whitespace-separated input is read
    /// as tokens; a single letter of `alphabet` is itself; otherwise every
    /// character is one letter. `""` and `"ε"` are the empty word.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let whole = Symbol::new(text.trim());
        if alphabet.contains(&whole) {
            return Ok(Word(vec![whole]));
        }
        let w = Word::parse_unchecked(text);
        w.check(alphabet)?;
        Ok(w)
    }

    /// Like [`Word::parse`] with no alphabet check.
    pub fn parse_unchecked(text: &str) -> Self {
        let text = text.trim();
        if text.is_empty() || text == "ε" {
            return Word::empty();
        }
        if text.chars().any(char::is_whitespace) {
            Word(text.split_whitespace().map(Symbol::new).collect())
        } else {
            Word(
                text.chars()
                    .map(|c| Symbol::new(c.encode_utf8(&mut [0u8; 4])))
                    .collect(),
            )
        }
    }

    pub fn check(&self, alphabet: &Alphabet) -> Result<()> {
        for s in &self.0 {
            if !alphabet.contains(s) {
                return Err(Error::UnknownSymbol {
                    symbol: s.to_string(),
                    alphabet: alphabet.to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Renders as a token string (space separated, `""` for ε), the form
    /// used inside documents.
    pub fn to_token_string(&self) -> String {
        self.0
            .iter()
            .map(Symbol::as_str)
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// All words over `alphabet` of length exactly `len`, in lexicographic
    /// order of the alphabet.
    pub fn all_of_length(alphabet: &Alphabet, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    alphabet.symbols().iter().map(move |s| {
                        let mut v = w.0.clone();
                        v.push(s.clone());
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }

    /// All words of length at most `max_len`, shortest first.
    pub fn all_up_to(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
        (0..=max_len)
            .flat_map(|n| Word::all_of_length(alphabet, n))
            .collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        let single = self.0.iter().all(|s| s.as_str().chars().count() == 1);
        let sep = if single { "" } else { " " };
        for (i, s) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}
