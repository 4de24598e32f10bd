//! Automaton-to-automaton transformations: direct products (intersection),
//! the automaton/transducer correspondence, multiplier normalization and
//! the padding construction turning a polycyclic automaton into one whose
//! register may equally be read in a free group.

use crate::automaton::{Edge, ValenceAutomaton};
use crate::dyck::PAD;
use crate::error::{Error, Result};
use crate::monoid::{Alphabet, Letter, Multiplier, MonoidSpec, SignedWord, Symbol, Word};
use crate::transducer::{FiniteTransducer, TransducerEdge};

/// Which monoid the doubled automaton's register is tagged with. The
/// construction is the same; only the interpretation differs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PaddedRegister {
    FreeGroup,
    Polycyclic,
}

/// The direct-product automaton over `M1 × M2`, accepting
/// `L(a1) ∩ L(a2)`.
///
/// States are pairs `(p,q)`. Edges reading the same letter run in lockstep;
/// ε-input edges of either side move that side alone, leaving the other
/// register untouched.
pub fn product_automaton(a1: &ValenceAutomaton, a2: &ValenceAutomaton) -> Result<ValenceAutomaton> {
    if a1.input_alphabet() != a2.input_alphabet() {
        return Err(Error::AlphabetMismatch {
            left: a1.input_alphabet().to_string(),
            right: a2.input_alphabet().to_string(),
        });
    }
    let monoid = MonoidSpec::product(vec![a1.monoid().clone(), a2.monoid().clone()]);
    let n2 = a2.states().len();
    let id = |p: usize, q: usize| p * n2 + q;
    let states: Vec<String> = a1
        .states()
        .iter()
        .flat_map(|p| a2.states().iter().map(move |q| format!("({p},{q})")))
        .collect();
    let unit1 = a1.monoid().unit_multiplier();
    let unit2 = a2.monoid().unit_multiplier();
    let mut edges = Vec::new();
    for e in a1.edges() {
        for f in a2.edges() {
            if e.read.is_some() && e.read == f.read {
                edges.push(Edge {
                    from: id(e.from, f.from),
                    to: id(e.to, f.to),
                    mult: e.mult.juxtapose(&f.mult),
                    read: e.read.clone(),
                });
            }
        }
    }
    for e in a1.edges().iter().filter(|e| e.read.is_none()) {
        for q in 0..n2 {
            edges.push(Edge {
                from: id(e.from, q),
                to: id(e.to, q),
                mult: e.mult.juxtapose(&unit2),
                read: None,
            });
        }
    }
    for f in a2.edges().iter().filter(|f| f.read.is_none()) {
        for p in 0..a1.states().len() {
            edges.push(Edge {
                from: id(p, f.from),
                to: id(p, f.to),
                mult: unit1.juxtapose(&f.mult),
                read: None,
            });
        }
    }
    let finals: Vec<usize> = a1
        .finals()
        .flat_map(|p| a2.finals().map(move |q| id(p, q)))
        .collect();
    ValenceAutomaton::new(
        monoid,
        a1.input_alphabet().clone(),
        states,
        id(a1.initial(), a2.initial()),
        finals,
        edges,
    )
}

/// Views `a` as a finite transducer from words over the signed generators
/// of its register monoid to words over its input alphabet.
///
/// The transducer's input letters are the tokens `x` and `x^-1`. Its image
/// of the identity language of the monoid is `L(a)`.
pub fn automaton_to_transducer(a: &ValenceAutomaton) -> Result<FiniteTransducer> {
    let gens = match a.monoid() {
        MonoidSpec::Product(_) => {
            return Err(Error::Unsupported(
                "transducer view of a product-monoid automaton".into(),
            ))
        }
        m => m.alphabet().expect("non-product monoid has an alphabet"),
    };
    let letters: Vec<Letter> = gens
        .symbols()
        .iter()
        .flat_map(|s| [Letter::pos(s.clone()), Letter::neg(s.clone())])
        .collect();
    automaton_to_transducer_over(a, &letters)
}

/// As [`automaton_to_transducer`], with an explicit generating set. Every
/// multiplier letter must be one of `gens`.
pub fn automaton_to_transducer_over(
    a: &ValenceAutomaton,
    gens: &[Letter],
) -> Result<FiniteTransducer> {
    if matches!(a.monoid(), MonoidSpec::Product(_)) {
        return Err(Error::Unsupported(
            "transducer view of a product-monoid automaton".into(),
        ));
    }
    let input = Alphabet::of_tokens(gens.iter().map(|l| l.to_string()))?;
    let edges = a
        .edges()
        .iter()
        .map(|e| {
            let word = &e.mult.0[0];
            if let Some(bad) = word.letters().iter().find(|l| !gens.contains(l)) {
                return Err(Error::Inexpressible(format!(
                    "multiplier letter {bad} is not among the generators"
                )));
            }
            Ok(TransducerEdge {
                from: e.from,
                to: e.to,
                input: word.to_tokens(),
                output: Word(e.read.iter().cloned().collect()),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    FiniteTransducer::new(
        input,
        a.input_alphabet().clone(),
        a.states().to_vec(),
        a.initial(),
        a.finals(),
        edges,
    )
}

/// Reads a transducer from signed-generator tokens to `Σ` as an automaton
/// over `monoid`: each input word becomes the multiplier it spells.
/// Edges writing more than one letter are first split so that each reads
/// at most one letter of `Σ`.
pub fn transducer_to_automaton(t: &FiniteTransducer, monoid: MonoidSpec) -> Result<ValenceAutomaton> {
    if matches!(monoid, MonoidSpec::Product(_)) {
        return Err(Error::Unsupported(
            "transducer view of a product-monoid automaton".into(),
        ));
    }
    let mut states = t.states().to_vec();
    let mut edges = Vec::new();
    for (ei, e) in t.edges().iter().enumerate() {
        let mult = Multiplier::single(SignedWord::from_tokens(&e.input)?);
        let out = e.output.symbols();
        if out.len() <= 1 {
            edges.push(Edge {
                from: e.from,
                to: e.to,
                mult,
                read: out.first().cloned(),
            });
            continue;
        }
        let mut prev = e.from;
        for (k, a) in out.iter().enumerate() {
            let next = if k + 1 == out.len() {
                e.to
            } else {
                states.push(format!("{}·{}.{}", t.states()[e.from], ei, k + 1));
                states.len() - 1
            };
            edges.push(Edge {
                from: prev,
                to: next,
                mult: if k == 0 { mult.clone() } else { monoid.unit_multiplier() },
                read: Some(a.clone()),
            });
            prev = next;
        }
    }
    ValenceAutomaton::new(
        monoid,
        t.output_alphabet().clone(),
        states,
        t.initial(),
        t.finals(),
        edges,
    )
}

/// Subdivides edges so that every multiplier has at most one generator
/// letter. An edge `(x y, a)` becomes `(x, a)` into a fresh state
/// `"{from}·{edge}.1"`, then `(y, ε)`. Product multipliers are spread one
/// letter at a time, factor by factor.
pub fn normalize_multipliers(a: &ValenceAutomaton) -> Result<ValenceAutomaton> {
    let unit = a.monoid().unit_multiplier();
    let mut states = a.states().to_vec();
    let mut edges = Vec::new();
    for (ei, e) in a.edges().iter().enumerate() {
        if e.mult.len() <= 1 {
            edges.push(e.clone());
            continue;
        }
        let pieces: Vec<Multiplier> = e
            .mult
            .0
            .iter()
            .enumerate()
            .flat_map(|(f, w)| {
                let unit = unit.clone();
                w.letters().iter().map(move |l| {
                    let mut m = unit.clone();
                    m.0[f] = SignedWord(vec![l.clone()]);
                    m
                })
            })
            .collect();
        let mut prev = e.from;
        for (k, mult) in pieces.iter().enumerate() {
            let next = if k + 1 == pieces.len() {
                e.to
            } else {
                states.push(fresh_name(&states, &a.states()[e.from], ei, k + 1));
                states.len() - 1
            };
            edges.push(Edge {
                from: prev,
                to: next,
                mult: mult.clone(),
                read: if k == 0 { e.read.clone() } else { None },
            });
            prev = next;
        }
    }
    ValenceAutomaton::new(
        a.monoid().clone(),
        a.input_alphabet().clone(),
        states,
        a.initial(),
        a.finals(),
        edges,
    )
}

fn fresh_name(taken: &[String], base: &str, edge: usize, step: usize) -> String {
    let mut name = format!("{base}·{edge}.{step}");
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}

/// The padding construction: from a polycyclic automaton `A` with unit
/// multipliers, the automaton `A′` over `X ∪ {#}` with
///
/// * states `q+` and `q−` for each state `q` of `A`, start `q₀+`, finals
///   `f−` for the finals `f` of `A`;
/// * for an edge `p --(x, a)--> q`, an edge `p+ --(x #, a)--> q+`;
/// * for an edge `p --(x⁻¹, a)--> q`, an edge `p− --(x⁻¹ #, a)--> q+`;
/// * for an edge `p --(1, a)--> q`, an edge `p+ --(1, a)--> q+`;
/// * a bridge `q+ --(1, ε)--> q−` and a loop `q− --(#⁻¹, ε)--> q−` for
///   each state `q`.
///
/// `A′` accepts `L(A)` whether its register is read in `F(X ∪ {#})` or in
/// `P(X ∪ {#})`.
pub fn padding_construction(a: &ValenceAutomaton, register: PaddedRegister) -> Result<ValenceAutomaton> {
    let gens = match a.monoid() {
        MonoidSpec::Polycyclic(x) => x.clone(),
        other => {
            return Err(Error::Precondition(format!(
                "padding construction needs a polycyclic automaton, got {other}"
            )))
        }
    };
    if let Some(e) = a.edges().iter().find(|e| e.mult.len() > 1) {
        return Err(Error::Precondition(format!(
            "multiplier {} is longer than one letter; normalize first",
            e.mult
        )));
    }
    let padded = gens.with_symbol(PAD)?;
    let pad = Symbol::new(PAD);
    let monoid = match register {
        PaddedRegister::FreeGroup => MonoidSpec::free_group(padded),
        PaddedRegister::Polycyclic => MonoidSpec::polycyclic(padded),
    };
    let n = a.states().len();
    let plus = |q: usize| q;
    let minus = |q: usize| n + q;
    let mut states: Vec<String> = a.states().iter().map(|q| format!("{q}+")).collect();
    states.extend(a.states().iter().map(|q| format!("{q}−")));

    let mut edges = Vec::with_capacity(a.edges().len() + 2 * n);
    for e in a.edges() {
        let letters = e.mult.0[0].letters();
        let (from, mult) = match letters.first() {
            None => (plus(e.from), SignedWord::empty()),
            Some(l) => {
                let w = SignedWord(vec![l.clone(), Letter::pos(pad.clone())]);
                (if l.inverse { minus(e.from) } else { plus(e.from) }, w)
            }
        };
        edges.push(Edge {
            from,
            to: plus(e.to),
            mult: Multiplier::single(mult),
            read: e.read.clone(),
        });
    }
    for q in 0..n {
        edges.push(Edge {
            from: plus(q),
            to: minus(q),
            mult: Multiplier::single(SignedWord::empty()),
            read: None,
        });
    }
    for q in 0..n {
        edges.push(Edge {
            from: minus(q),
            to: minus(q),
            mult: Multiplier::single(SignedWord(vec![Letter::neg(pad.clone())])),
            read: None,
        });
    }
    ValenceAutomaton::new(
        monoid,
        a.input_alphabet().clone(),
        states,
        plus(a.initial()),
        a.finals().map(minus).collect::<Vec<_>>(),
        edges,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::SearchBudget;
    use crate::dyck::{dyck_words, is_one_sided_dyck, is_permissible_padding, DyckKind};
    use crate::monoid::free_reduce;
    use std::collections::BTreeSet;

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    fn abc() -> Alphabet {
        Alphabet::new(["a", "b", "c"]).unwrap()
    }

    fn fig1_left() -> ValenceAutomaton {
        ValenceAutomaton::builder(MonoidSpec::polycyclic(Alphabet::new(["x"]).unwrap()), ab())
            .initial("q")
            .final_state("q")
            .edge("q", "x", "a", "q")
            .edge("q", "x^-1", "b", "q")
            .build()
            .unwrap()
    }

    /// `w c reverse(w)` over {a, b}.
    fn palindrome() -> ValenceAutomaton {
        ValenceAutomaton::builder(MonoidSpec::polycyclic(Alphabet::new(["x", "y"]).unwrap()), abc())
            .initial("p")
            .final_state("q")
            .edge("p", "x", "a", "p")
            .edge("p", "y", "b", "p")
            .edge("p", "", "c", "q")
            .edge("q", "x^-1", "a", "q")
            .edge("q", "y^-1", "b", "q")
            .build()
            .unwrap()
    }

    fn z_ab() -> ValenceAutomaton {
        ValenceAutomaton::builder(MonoidSpec::free_abelian_rank(1), abc())
            .initial("s1")
            .final_state("s3")
            .edge("s1", "c1", "a", "s1")
            .edge("s1", "", "", "s2")
            .edge("s2", "c1^-1", "b", "s2")
            .edge("s2", "", "", "s3")
            .edge("s3", "", "c", "s3")
            .build()
            .unwrap()
    }

    fn z_bc() -> ValenceAutomaton {
        ValenceAutomaton::builder(MonoidSpec::free_abelian_rank(1), abc())
            .initial("t1")
            .final_state("t3")
            .edge("t1", "", "a", "t1")
            .edge("t1", "", "", "t2")
            .edge("t2", "c1", "b", "t2")
            .edge("t2", "", "", "t3")
            .edge("t3", "c1^-1", "c", "t3")
            .build()
            .unwrap()
    }

    fn lang(a: &ValenceAutomaton, n: usize) -> BTreeSet<Word> {
        let e = a.enumerate_language(n, &SearchBudget::default()).unwrap();
        assert!(e.complete, "unknown: {:?}", e.unknown);
        e.words
    }

    #[test]
    fn figure_one_right_is_reproduced() {
        let right = padding_construction(&fig1_left(), PaddedRegister::FreeGroup).unwrap();
        assert_eq!(right.states(), ["q+", "q−"]);
        assert_eq!(right.monoid().describe(), "F{x, #}");
        let shown: Vec<String> = right
            .edges()
            .iter()
            .map(|e| {
                format!(
                    "{} -({}, {})-> {}",
                    right.states()[e.from],
                    e.mult,
                    e.read.as_ref().map_or("ε".into(), |s| s.to_string()),
                    right.states()[e.to]
                )
            })
            .collect();
        assert_eq!(
            shown,
            [
                "q+ -(x #, a)-> q+",
                "q− -(x^-1 #, b)-> q+",
                "q+ -(ε, ε)-> q−",
                "q− -(#^-1, ε)-> q−",
            ]
        );
        assert_eq!(right.initial(), 0);
        assert_eq!(right.finals().collect::<Vec<_>>(), [1]);
    }

    #[test]
    fn padding_counts() {
        for a in [fig1_left(), palindrome()] {
            let p = padding_construction(&a, PaddedRegister::Polycyclic).unwrap();
            assert_eq!(p.states().len(), 2 * a.states().len());
            assert_eq!(p.edges().len(), a.edges().len() + 2 * a.states().len());
        }
    }

    #[test]
    fn padding_without_stack_activity() {
        let a = ValenceAutomaton::builder(MonoidSpec::polycyclic(Alphabet::new(["x"]).unwrap()), ab())
            .initial("q")
            .final_state("q")
            .edge("q", "", "a", "q")
            .build()
            .unwrap();
        let p = padding_construction(&a, PaddedRegister::FreeGroup).unwrap();
        assert_eq!(p.states().len(), 2);
        let expect: BTreeSet<Word> = (0..=5).map(|k| Word::parse(&"a".repeat(k), &ab()).unwrap()).collect();
        assert_eq!(lang(&p, 5), expect);
    }

    #[test]
    fn padding_requires_unit_polycyclic_multipliers() {
        let long = ValenceAutomaton::builder(MonoidSpec::polycyclic(Alphabet::new(["x"]).unwrap()), ab())
            .initial("q")
            .edge("q", "x x", "a", "q")
            .build()
            .unwrap();
        assert!(matches!(
            padding_construction(&long, PaddedRegister::FreeGroup),
            Err(Error::Precondition(_))
        ));
        let fg = fig1_left().reinterpret(MonoidSpec::free_group(Alphabet::new(["x"]).unwrap())).unwrap();
        assert!(padding_construction(&fg, PaddedRegister::FreeGroup).is_err());
        let taken = ValenceAutomaton::builder(MonoidSpec::polycyclic(Alphabet::new(["#"]).unwrap()), ab())
            .initial("q")
            .build()
            .unwrap();
        assert!(padding_construction(&taken, PaddedRegister::FreeGroup).is_err());
    }

    #[test]
    fn padded_automata_agree_three_ways() {
        for (a, n) in [(fig1_left(), 8), (palindrome(), 7)] {
            let base = lang(&a, n);
            for r in [PaddedRegister::FreeGroup, PaddedRegister::Polycyclic] {
                let p = padding_construction(&a, r).unwrap();
                assert_eq!(lang(&p, n), base, "{r:?}");
            }
        }
    }

    #[test]
    fn padded_register_words_are_paddings_of_original_ones() {
        let a = palindrome();
        let p = padding_construction(&a, PaddedRegister::FreeGroup).unwrap();
        let identity_fg = |m: &Multiplier| free_reduce(&m.0[0]).is_empty();
        for w in Word::all_up_to(a.input_alphabet(), 4) {
            // Accepting register words of A are 1-sided Dyck; of A′, free-group trivial.
            let originals: Vec<SignedWord> = a
                .path_labels(&w, 3 * w.len() + 2)
                .unwrap()
                .into_iter()
                .map(|m| m.0[0].clone())
                .filter(is_one_sided_dyck)
                .collect();
            let padded: Vec<SignedWord> = p
                .path_labels(&w, 6 * w.len() + 4)
                .unwrap()
                .into_iter()
                .filter(identity_fg)
                .map(|m| m.0[0].clone())
                .collect();
            assert_eq!(originals.is_empty(), padded.is_empty(), "{w}");
            for x in &padded {
                assert!(
                    originals.iter().any(|y| is_permissible_padding(x, y)),
                    "{x} pads nothing for {w}"
                );
            }
        }
    }

    #[test]
    fn product_of_counters_is_anbncn() {
        let p = product_automaton(&z_ab(), &z_bc()).unwrap();
        assert_eq!(p.monoid().describe(), "Z^1 × Z^1");
        let got = lang(&p, 9);
        let expect: BTreeSet<Word> = (0..=3)
            .map(|k| Word::parse(&format!("{}{}{}", "a".repeat(k), "b".repeat(k), "c".repeat(k)), &abc()).unwrap())
            .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn product_is_intersection() {
        let sigma_star = ValenceAutomaton::builder(MonoidSpec::Trivial, abc())
            .initial("q")
            .final_state("q")
            .edge("q", "", "a", "q")
            .edge("q", "", "b", "q")
            .edge("q", "", "c", "q")
            .build()
            .unwrap();
        for a in [palindrome(), z_ab(), z_bc()] {
            let l = lang(&a, 6);
            assert_eq!(lang(&product_automaton(&a, &sigma_star).unwrap(), 6), l);
            assert_eq!(lang(&product_automaton(&a, &a).unwrap(), 6), l);
        }
        let both = product_automaton(&z_ab(), &palindrome()).unwrap();
        let expect: BTreeSet<Word> = lang(&z_ab(), 6).intersection(&lang(&palindrome(), 6)).cloned().collect();
        assert_eq!(lang(&both, 6), expect);
    }

    #[test]
    fn product_needs_same_input_alphabet() {
        assert!(product_automaton(&fig1_left(), &palindrome()).is_err());
    }

    #[test]
    fn figure_one_as_transducer() {
        let t = automaton_to_transducer(&fig1_left()).unwrap();
        let shown: Vec<(String, String)> = t
            .edges()
            .iter()
            .map(|e| (e.input.to_token_string(), e.output.to_token_string()))
            .collect();
        assert_eq!(shown, [("x".into(), "a".into()), ("x^-1".into(), "b".into())]);
        let empty = ValenceAutomaton::builder(MonoidSpec::polycyclic(Alphabet::new(["x"]).unwrap()), ab())
            .initial("q")
            .build()
            .unwrap();
        assert!(automaton_to_transducer(&empty).unwrap().edges().is_empty());
    }

    #[test]
    fn transducer_roundtrip_preserves_language() {
        for a in [fig1_left(), palindrome(), z_ab()] {
            let t = automaton_to_transducer(&a).unwrap();
            let back = transducer_to_automaton(&t, a.monoid().clone()).unwrap();
            assert_eq!(lang(&back, 6), lang(&a, 6));
        }
    }

    #[test]
    fn inexpressible_multiplier() {
        let x = Letter::pos(Symbol::new("x"));
        assert!(matches!(
            automaton_to_transducer_over(&fig1_left(), &[x]),
            Err(Error::Inexpressible(_))
        ));
        let p = product_automaton(&z_ab(), &z_bc()).unwrap();
        assert!(matches!(automaton_to_transducer(&p), Err(Error::Unsupported(_))));
    }

    #[test]
    fn long_outputs_are_split() {
        let tokens = Alphabet::of_tokens(["x", "x^-1"]).unwrap();
        let t = FiniteTransducer::from_generating_pairs(
            tokens.clone(),
            ab(),
            &[
                (Word::parse("x", &tokens).unwrap(), Word::parse("ab", &ab()).unwrap()),
                (Word::parse("x^-1", &tokens).unwrap(), Word::parse("b", &ab()).unwrap()),
            ],
        )
        .unwrap();
        let x = Alphabet::new(["x"]).unwrap();
        let a = transducer_to_automaton(&t, MonoidSpec::polycyclic(x.clone())).unwrap();
        assert!(a.edges().iter().all(|e| e.read.is_some()));
        // oracle: x ↦ ab, x⁻¹ ↦ b applied to 1-sided Dyck words
        let expect: BTreeSet<Word> = SignedWord::all_up_to(&x, 4)
            .into_iter()
            .filter(is_one_sided_dyck)
            .map(|w| {
                let text: String = w
                    .letters()
                    .iter()
                    .map(|l| if l.inverse { "b" } else { "ab" })
                    .collect();
                Word::parse(&text, &ab()).unwrap()
            })
            .collect();
        assert_eq!(lang(&a, 6), expect);
    }

    /// Identity-language inputs of length ≤ 2k, outputs ≤ k.
    #[test]
    fn image_of_identity_language_is_the_language() {
        let k = 6;
        for a in [fig1_left(), palindrome()] {
            let t = automaton_to_transducer(&a).unwrap();
            let gens = a.monoid().alphabet().unwrap();
            let identity: Vec<Word> = dyck_words(&gens, 2 * k, DyckKind::OneSided)
                .iter()
                .map(SignedWord::to_tokens)
                .collect();
            let image = t.image_of_language(&identity, k).unwrap();
            assert_eq!(image.words, lang(&a, k));
        }
    }

    #[test]
    fn generator_change_composes_with_automaton_transducer() {
        // Generators {u = x x, v = x^-1}: the pairs (w_a, a) rewrite the
        // alphabet {u, v} into words over x, x^-1.
        let a = fig1_left();
        let t = automaton_to_transducer(&a).unwrap();
        let uv = Alphabet::new(["u", "v"]).unwrap();
        let tokens = Alphabet::of_tokens(["x", "x^-1"]).unwrap();
        let change = FiniteTransducer::from_generating_pairs(
            uv.clone(),
            tokens.clone(),
            &[
                (Word::parse("u", &uv).unwrap(), Word::parse("x x", &tokens).unwrap()),
                (Word::parse("v", &uv).unwrap(), Word::parse("x^-1", &tokens).unwrap()),
            ],
        )
        .unwrap();
        let composed = change.compose(&t).unwrap();
        // over {u, v}: words mapping to 1-sided Dyck words give aabb-style outputs
        let inputs: Vec<Word> = Word::all_up_to(&uv, 6)
            .into_iter()
            .filter(|w| {
                let x = change.image_of_word(w, 12).unwrap().words.into_iter().next().unwrap();
                is_one_sided_dyck(&SignedWord::from_tokens(&x).unwrap())
            })
            .collect();
        let image = composed.image_of_language(&inputs, 8).unwrap().words;
        let expect: BTreeSet<Word> = lang(&a, 8)
            .into_iter()
            .filter(|w| {
                // every a-block must have even length when produced by u = x x
                let s = w.to_string();
                s == "ε" || s.split('b').all(|block| block.len() % 2 == 0)
            })
            .collect();
        assert_eq!(image, expect);
    }

    #[test]
    fn normalization_subdivides() {
        let a = ValenceAutomaton::builder(MonoidSpec::polycyclic(Alphabet::new(["x", "y"]).unwrap()), ab())
            .initial("p")
            .final_state("p")
            .edge("p", "x y", "a", "p")
            .edge("p", "y^-1 x^-1", "b", "p")
            .build()
            .unwrap();
        let n = normalize_multipliers(&a).unwrap();
        assert_eq!(n.states(), ["p", "p·0.1", "p·1.1"]);
        let shown: Vec<String> = n
            .edges()
            .iter()
            .map(|e| format!("{}:{}", e.mult, e.read.as_ref().map_or("ε".into(), |s| s.to_string())))
            .collect();
        assert_eq!(shown, ["x:a", "y:ε", "y^-1:b", "x^-1:ε"]);
        assert_eq!(lang(&n, 8), lang(&a, 8));
        let again = normalize_multipliers(&fig1_left()).unwrap();
        assert_eq!(again.states(), fig1_left().states());
        assert_eq!(again.edges(), fig1_left().edges());
    }

    #[test]
    fn normalization_spreads_product_multipliers() {
        let p = product_automaton(&z_ab(), &z_bc()).unwrap();
        let n = normalize_multipliers(&p).unwrap();
        assert!(n.edges().iter().all(|e| e.mult.len() <= 1));
        assert_eq!(lang(&n, 6), lang(&p, 6));
    }
}
