//! Finite transducers between free monoids: images of words and finite
//! languages, relational composition, and alphabetic morphisms.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monoid::{Alphabet, Symbol, Word};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TransducerEdge {
    pub from: usize,
    pub to: usize,
    pub input: Word,
    pub output: Word,
}

/// A finite automaton over `X* × Σ*`, recognising a rational relation.
#[derive(Clone, Debug)]
pub struct FiniteTransducer {
    input_alphabet: Arc<Alphabet>,
    output_alphabet: Arc<Alphabet>,
    states: Vec<String>,
    initial: usize,
    finals: Vec<bool>,
    edges: Vec<TransducerEdge>,
    out: Vec<Vec<usize>>,
}

/// Outputs of an image computation and whether the length cap cut any off.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Image {
    pub words: BTreeSet<Word>,
    pub truncated: bool,
}

impl FiniteTransducer {
    pub fn new(
        input_alphabet: Alphabet,
        output_alphabet: Alphabet,
        states: Vec<String>,
        initial: usize,
        finals: impl IntoIterator<Item = usize>,
        edges: Vec<TransducerEdge>,
    ) -> Result<Self> {
        let n = states.len();
        if initial >= n {
            return Err(Error::InvalidAutomaton("initial state out of range".into()));
        }
        let mut flags = vec![false; n];
        for f in finals {
            if f >= n {
                return Err(Error::InvalidAutomaton("final state out of range".into()));
            }
            flags[f] = true;
        }
        let mut out = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            if e.from >= n || e.to >= n {
                return Err(Error::InvalidAutomaton(format!(
                    "edge {i} has an endpoint out of range"
                )));
            }
            e.input.check(&input_alphabet)?;
            e.output.check(&output_alphabet)?;
            out[e.from].push(i);
        }
        Ok(FiniteTransducer {
            input_alphabet: Arc::new(input_alphabet),
            output_alphabet: Arc::new(output_alphabet),
            states,
            initial,
            finals: flags,
            edges,
            out,
        })
    }

    /// One state, initial and final, with a loop `(a, a)` per letter.
    pub fn identity(alphabet: &Alphabet) -> Self {
        let edges = alphabet
            .symbols()
            .iter()
            .map(|a| TransducerEdge {
                from: 0,
                to: 0,
                input: Word(vec![a.clone()]),
                output: Word(vec![a.clone()]),
            })
            .collect();
        FiniteTransducer::new(
            alphabet.clone(),
            alphabet.clone(),
            vec!["q".into()],
            0,
            [0],
            edges,
        )
        .expect("identity transducer is well formed")
    }

    /// The submonoid of `X* × Σ*` generated by the given pairs: one state,
    /// initial and final, with a loop per pair. With pairs `(w_a, a)` this
    /// rewrites words over one generating set into another.
    pub fn from_generating_pairs(
        input_alphabet: Alphabet,
        output_alphabet: Alphabet,
        pairs: &[(Word, Word)],
    ) -> Result<Self> {
        let edges = pairs
            .iter()
            .map(|(u, v)| TransducerEdge {
                from: 0,
                to: 0,
                input: u.clone(),
                output: v.clone(),
            })
            .collect();
        FiniteTransducer::new(
            input_alphabet,
            output_alphabet,
            vec!["q".into()],
            0,
            [0],
            edges,
        )
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input_alphabet
    }

    pub fn output_alphabet(&self) -> &Alphabet {
        &self.output_alphabet
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        self.finals
            .iter()
            .enumerate()
            .filter_map(|(i, f)| f.then_some(i))
    }

    pub fn edges(&self) -> &[TransducerEdge] {
        &self.edges
    }

    /// All `v` with `|v| ≤ cap` such that `(u, v)` is recognised.
    pub fn image_of_word(&self, u: &Word, cap: usize) -> Result<Image> {
        u.check(&self.input_alphabet)?;
        let input = u.symbols();
        let mut image = Image::default();
        let start = (self.initial, 0usize, Vec::<Symbol>::new());
        let mut seen: HashSet<(usize, usize, Vec<Symbol>)> = HashSet::new();
        seen.insert(start.clone());
        let mut queue = VecDeque::from([start]);
        while let Some((q, pos, produced)) = queue.pop_front() {
            if pos == input.len() && self.finals[q] {
                image.words.insert(Word(produced.clone()));
            }
            for &ei in &self.out[q] {
                let e = &self.edges[ei];
                let consumed = e.input.symbols();
                if !input[pos..].starts_with(consumed) {
                    continue;
                }
                if produced.len() + e.output.len() > cap {
                    image.truncated = true;
                    continue;
                }
                let mut next = produced.clone();
                next.extend_from_slice(e.output.symbols());
                let key = (e.to, pos + consumed.len(), next);
                if seen.insert(key.clone()) {
                    queue.push_back(key);
                }
            }
        }
        Ok(image)
    }

    /// Union of [`Self::image_of_word`] over a finite language.
    pub fn image_of_language<'a>(
        &self,
        language: impl IntoIterator<Item = &'a Word>,
        cap: usize,
    ) -> Result<Image> {
        let mut image = Image::default();
        for u in language {
            let part = self.image_of_word(u, cap)?;
            image.words.extend(part.words);
            image.truncated |= part.truncated;
        }
        Ok(image)
    }

    /// An equivalent transducer whose edges read and write at most one
    /// letter each. Long edges are subdivided through fresh states named
    /// `"{from}·{edge}.{k}"`.
    pub fn normalized(&self) -> FiniteTransducer {
        let mut states = self.states.clone();
        let mut edges = Vec::new();
        for (ei, e) in self.edges.iter().enumerate() {
            let steps = e.input.len().max(e.output.len()).max(1);
            if steps == 1 {
                edges.push(e.clone());
                continue;
            }
            let mut prev = e.from;
            for k in 0..steps {
                let next = if k + 1 == steps {
                    e.to
                } else {
                    states.push(format!("{}·{}.{}", self.states[e.from], ei, k + 1));
                    states.len() - 1
                };
                let pick = |w: &Word| Word(w.symbols().get(k).cloned().into_iter().collect());
                edges.push(TransducerEdge {
                    from: prev,
                    to: next,
                    input: pick(&e.input),
                    output: pick(&e.output),
                });
                prev = next;
            }
        }
        FiniteTransducer::new(
            (*self.input_alphabet).clone(),
            (*self.output_alphabet).clone(),
            states,
            self.initial,
            self.finals(),
            edges,
        )
        .expect("subdivision preserves well-formedness")
    }

    /// Relational composition `{(u, w) : (u, v) ∈ self, (v, w) ∈ other}`.
    ///
    /// Both machines are normalized, then run in lockstep: a letter written
    /// by `self` must be read by `other` in the same step, while ε-output
    /// edges of `self` and ε-input edges of `other` move one side alone.
    /// Only states reachable from the initial pair are kept.
    pub fn compose(&self, other: &FiniteTransducer) -> Result<FiniteTransducer> {
        if self.output_alphabet != other.input_alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.output_alphabet.to_string(),
                right: other.input_alphabet.to_string(),
            });
        }
        let r = self.normalized();
        let s = other.normalized();
        let mut index: HashMap<(usize, usize), usize> = HashMap::new();
        let mut states = Vec::new();
        let mut finals = Vec::new();
        let mut edges = Vec::new();
        let mut queue = VecDeque::new();
        let mut intern = |p: usize,
                          q: usize,
                          states: &mut Vec<String>,
                          finals: &mut Vec<usize>,
                          queue: &mut VecDeque<(usize, usize)>| {
            *index.entry((p, q)).or_insert_with(|| {
                states.push(format!("({},{})", r.states[p], s.states[q]));
                let id = states.len() - 1;
                if r.finals[p] && s.finals[q] {
                    finals.push(id);
                }
                queue.push_back((p, q));
                id
            })
        };
        let start = intern(r.initial, s.initial, &mut states, &mut finals, &mut queue);
        while let Some((p, q)) = queue.pop_front() {
            let from = intern(p, q, &mut states, &mut finals, &mut queue);
            for &ri in &r.out[p] {
                let re = &r.edges[ri];
                if re.output.is_empty() {
                    let to = intern(re.to, q, &mut states, &mut finals, &mut queue);
                    edges.push(TransducerEdge {
                        from,
                        to,
                        input: re.input.clone(),
                        output: Word::empty(),
                    });
                    continue;
                }
                for &si in &s.out[q] {
                    let se = &s.edges[si];
                    if se.input == re.output {
                        let to = intern(re.to, se.to, &mut states, &mut finals, &mut queue);
                        edges.push(TransducerEdge {
                            from,
                            to,
                            input: re.input.clone(),
                            output: se.output.clone(),
                        });
                    }
                }
            }
            for &si in &s.out[q] {
                let se = &s.edges[si];
                if se.input.is_empty() {
                    let to = intern(p, se.to, &mut states, &mut finals, &mut queue);
                    edges.push(TransducerEdge {
                        from,
                        to,
                        input: Word::empty(),
                        output: se.output.clone(),
                    });
                }
            }
        }
        FiniteTransducer::new(
            (*r.input_alphabet).clone(),
            (*s.output_alphabet).clone(),
            states,
            start,
            finals,
            edges,
        )
    }

    /// All recognised pairs with `|u| ≤ max_in` and `|v| ≤ max_out`.
    pub fn pairs_up_to(&self, max_in: usize, max_out: usize) -> Result<BTreeSet<(Word, Word)>> {
        let mut out = BTreeSet::new();
        for u in Word::all_up_to(&self.input_alphabet, max_in) {
            for v in self.image_of_word(&u, max_out)?.words {
                out.insert((u.clone(), v));
            }
        }
        Ok(out)
    }
}

/// A free-monoid morphism sending each letter to a letter or ε.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphabeticMorphism {
    source: Alphabet,
    target: Alphabet,
    map: BTreeMap<Symbol, Option<Symbol>>,
}

impl AlphabeticMorphism {
    /// `images` must cover every source letter exactly once.
    pub fn new(
        source: Alphabet,
        target: Alphabet,
        images: impl IntoIterator<Item = (Symbol, Option<Symbol>)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (a, b) in images {
            if !source.contains(&a) {
                return Err(Error::UnknownSymbol {
                    symbol: a.to_string(),
                    alphabet: source.to_string(),
                });
            }
            if let Some(b) = &b {
                if !target.contains(b) {
                    return Err(Error::UnknownSymbol {
                        symbol: b.to_string(),
                        alphabet: target.to_string(),
                    });
                }
            }
            map.insert(a, b);
        }
        if let Some(missing) = source.symbols().iter().find(|a| !map.contains_key(*a)) {
            return Err(Error::Precondition(format!(
                "morphism has no image for {missing}"
            )));
        }
        Ok(AlphabeticMorphism {
            source,
            target,
            map,
        })
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        AlphabeticMorphism {
            source: alphabet.clone(),
            target: alphabet.clone(),
            map: alphabet
                .symbols()
                .iter()
                .map(|a| (a.clone(), Some(a.clone())))
                .collect(),
        }
    }

    pub fn apply(&self, w: &Word) -> Word {
        Word(
            w.symbols()
                .iter()
                .filter_map(|a| self.map.get(a).cloned().flatten())
                .collect(),
        )
    }

    pub fn image(&self, language: &BTreeSet<Word>) -> BTreeSet<Word> {
        language.iter().map(|w| self.apply(w)).collect()
    }

    /// Words over the source alphabet of length at most `max_len` whose
    /// image lies in `language`.
    pub fn preimage_up_to(&self, language: &BTreeSet<Word>, max_len: usize) -> BTreeSet<Word> {
        Word::all_up_to(&self.source, max_len)
            .into_iter()
            .filter(|w| language.contains(&self.apply(w)))
            .collect()
    }

    /// The graph of the morphism: one state with loops `(a, m(a))`.
    pub fn to_transducer(&self) -> FiniteTransducer {
        let edges = self
            .map
            .iter()
            .map(|(a, b)| TransducerEdge {
                from: 0,
                to: 0,
                input: Word(vec![a.clone()]),
                output: Word(b.iter().cloned().collect()),
            })
            .collect();
        FiniteTransducer::new(
            self.source.clone(),
            self.target.clone(),
            vec!["q".into()],
            0,
            [0],
            edges,
        )
        .expect("morphism graph is well formed")
    }
}
