//! The JSON interchange format for automata and transducers.
//!
//! Output is canonical: keys in a fixed order, two-space indentation, LF
//! line endings, a trailing newline and edges sorted, so that saving a
//! loaded document reproduces it byte for byte.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automaton::{Edge, ValenceAutomaton};
use crate::monoid::element::default_counter_names;
use crate::monoid::{Alphabet, MonoidSpec, Symbol, Word};
use crate::transducer::{FiniteTransducer, TransducerEdge};

/// Why a document could not be read.
#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{key}: {message}")]
    Invalid { key: String, message: String },
}

impl DocumentError {
    fn at(key: impl Into<String>, message: impl ToString) -> Self {
        DocumentError::Invalid {
            key: key.into(),
            message: message.to_string(),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Document {
    Valence(AutomatonDocument),
    Transducer(TransducerDocument),
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct AutomatonDocument {
    pub monoid: MonoidDocument,
    pub input_alphabet: Vec<String>,
    pub states: Vec<String>,
    pub initial: String,
    pub finals: Vec<String>,
    pub edges: Vec<EdgeDocument>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeDocument {
    pub from: String,
    pub to: String,
    /// Multiplier token string, e.g. `"x^-1 #"`; `""` is the identity.
    pub mult: String,
    /// Input letter, or `""` for ε.
    pub read: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum MonoidDocument {
    FreeGroup {
        alphabet: Vec<String>,
    },
    Polycyclic {
        alphabet: Vec<String>,
    },
    FreeAbelian {
        rank: usize,
        /// Counter names; `c1 … cn` when absent.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alphabet: Option<Vec<String>>,
    },
    Product {
        factors: Vec<MonoidDocument>,
    },
    Trivial,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TransducerDocument {
    pub input_alphabet: Vec<String>,
    pub output_alphabet: Vec<String>,
    pub states: Vec<String>,
    pub initial: String,
    pub finals: Vec<String>,
    pub edges: Vec<TransducerEdgeDocument>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TransducerEdgeDocument {
    pub from: String,
    pub to: String,
    /// Space-separated input tokens.
    #[serde(rename = "in")]
    pub input: String,
    /// Space-separated output tokens.
    pub out: String,
}

impl MonoidDocument {
    pub fn of_spec(m: &MonoidSpec) -> Self {
        let names = |a: &Alphabet| a.symbols().iter().map(|s| s.to_string()).collect();
        match m {
            MonoidSpec::FreeGroup(a) => MonoidDocument::FreeGroup { alphabet: names(a) },
            MonoidSpec::Polycyclic(a) => MonoidDocument::Polycyclic { alphabet: names(a) },
            MonoidSpec::FreeAbelian(a) => {
                let alphabet: Vec<String> = names(a);
                MonoidDocument::FreeAbelian {
                    rank: a.len(),
                    alphabet: (alphabet != default_counter_names(a.len())).then_some(alphabet),
                }
            }
            MonoidSpec::Trivial => MonoidDocument::Trivial,
            MonoidSpec::Product(fs) => MonoidDocument::Product {
                factors: fs.iter().map(MonoidDocument::of_spec).collect(),
            },
        }
    }

    pub fn to_spec(&self, key: &str) -> Result<MonoidSpec, DocumentError> {
        let alphabet = |names: &[String]| {
            Alphabet::new(names).map_err(|e| DocumentError::at(format!("{key}.alphabet"), e))
        };
        Ok(match self {
            MonoidDocument::FreeGroup { alphabet: a } => MonoidSpec::free_group(alphabet(a)?),
            MonoidDocument::Polycyclic { alphabet: a } => MonoidSpec::polycyclic(alphabet(a)?),
            MonoidDocument::FreeAbelian { rank, alphabet: None } => {
                MonoidSpec::free_abelian_rank(*rank)
            }
            MonoidDocument::FreeAbelian {
                rank,
                alphabet: Some(a),
            } => {
                if a.len() != *rank {
                    return Err(DocumentError::at(
                        format!("{key}.alphabet"),
                        format!("{} names for rank {rank}", a.len()),
                    ));
                }
                MonoidSpec::free_abelian(alphabet(a)?)
            }
            MonoidDocument::Trivial => MonoidSpec::Trivial,
            MonoidDocument::Product { factors } => {
                if factors.is_empty() {
                    return Err(DocumentError::at(format!("{key}.factors"), "empty product"));
                }
                MonoidSpec::product(
                    factors
                        .iter()
                        .enumerate()
                        .map(|(i, f)| f.to_spec(&format!("{key}.factors[{i}]")))
                        .collect::<Result<_, _>>()?,
                )
            }
        })
    }
}

fn alphabet_at(key: &str, names: &[String]) -> Result<Alphabet, DocumentError> {
    Alphabet::new(names).map_err(|e| DocumentError::at(key, e))
}

fn token_alphabet_at(key: &str, names: &[String]) -> Result<Alphabet, DocumentError> {
    Alphabet::of_tokens(names).map_err(|e| DocumentError::at(key, e))
}

fn state_index(states: &[String], key: &str, name: &str) -> Result<usize, DocumentError> {
    states
        .iter()
        .position(|s| s == name)
        .ok_or_else(|| DocumentError::at(key, format!("unknown state {name:?}")))
}

fn check_states(states: &[String]) -> Result<(), DocumentError> {
    let mut seen = BTreeSet::new();
    for (i, s) in states.iter().enumerate() {
        if !seen.insert(s) {
            return Err(DocumentError::at(format!("states[{i}]"), format!("duplicate state {s:?}")));
        }
    }
    Ok(())
}

impl AutomatonDocument {
    pub fn of_automaton(a: &ValenceAutomaton) -> Self {
        let name = |q: usize| a.states()[q].clone();
        let mut edges: Vec<EdgeDocument> = a
            .edges()
            .iter()
            .map(|e| EdgeDocument {
                from: name(e.from),
                to: name(e.to),
                mult: e.mult.to_token_string(),
                read: e.read.as_ref().map(|s| s.to_string()).unwrap_or_default(),
            })
            .collect();
        edges.sort();
        AutomatonDocument {
            monoid: MonoidDocument::of_spec(a.monoid()),
            input_alphabet: a.input_alphabet().symbols().iter().map(|s| s.to_string()).collect(),
            states: a.states().to_vec(),
            initial: name(a.initial()),
            finals: a.finals().map(name).collect(),
            edges,
        }
    }

    pub fn to_automaton(&self) -> Result<ValenceAutomaton, DocumentError> {
        let monoid = self.monoid.to_spec("monoid")?;
        let sigma = alphabet_at("input_alphabet", &self.input_alphabet)?;
        check_states(&self.states)?;
        let initial = state_index(&self.states, "initial", &self.initial)?;
        let finals = self
            .finals
            .iter()
            .enumerate()
            .map(|(i, f)| state_index(&self.states, &format!("finals[{i}]"), f))
            .collect::<Result<Vec<_>, _>>()?;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let key = |k: &str| format!("edges[{i}].{k}");
                let read = if e.read.is_empty() {
                    None
                } else {
                    let s = Symbol::new(&e.read);
                    if !sigma.contains(&s) {
                        return Err(DocumentError::at(
                            key("read"),
                            format!("{:?} is not in the input alphabet", e.read),
                        ));
                    }
                    Some(s)
                };
                let mult = monoid.parse_multiplier(&e.mult).map_err(|err| DocumentError::at(key("mult"), err))?;
                Ok(Edge {
                    from: state_index(&self.states, &key("from"), &e.from)?,
                    to: state_index(&self.states, &key("to"), &e.to)?,
                    mult,
                    read,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        ValenceAutomaton::new(monoid, sigma, self.states.clone(), initial, finals, edges)
            .map_err(|e| DocumentError::at("edges", e))
    }
}

impl TransducerDocument {
    pub fn of_transducer(t: &FiniteTransducer) -> Self {
        let name = |q: usize| t.states()[q].clone();
        let names = |a: &Alphabet| a.symbols().iter().map(|s| s.to_string()).collect();
        let mut edges: Vec<TransducerEdgeDocument> = t
            .edges()
            .iter()
            .map(|e| TransducerEdgeDocument {
                from: name(e.from),
                to: name(e.to),
                input: e.input.to_token_string(),
                out: e.output.to_token_string(),
            })
            .collect();
        edges.sort();
        TransducerDocument {
            input_alphabet: names(t.input_alphabet()),
            output_alphabet: names(t.output_alphabet()),
            states: t.states().to_vec(),
            initial: name(t.initial()),
            finals: t.finals().map(name).collect(),
            edges,
        }
    }

    pub fn to_transducer(&self) -> Result<FiniteTransducer, DocumentError> {
        let input = token_alphabet_at("input_alphabet", &self.input_alphabet)?;
        let output = token_alphabet_at("output_alphabet", &self.output_alphabet)?;
        check_states(&self.states)?;
        let initial = state_index(&self.states, "initial", &self.initial)?;
        let finals = self
            .finals
            .iter()
            .enumerate()
            .map(|(i, f)| state_index(&self.states, &format!("finals[{i}]"), f))
            .collect::<Result<Vec<_>, _>>()?;
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let key = |k: &str| format!("edges[{i}].{k}");
                let tokens = |text: &str, alphabet: &Alphabet, k: &str| {
                    let w = Word(text.split_whitespace().map(Symbol::new).collect());
                    w.check(alphabet).map_err(|err| DocumentError::at(key(k), err))?;
                    Ok::<_, DocumentError>(w)
                };
                Ok(TransducerEdge {
                    from: state_index(&self.states, &key("from"), &e.from)?,
                    to: state_index(&self.states, &key("to"), &e.to)?,
                    input: tokens(&e.input, &input, "in")?,
                    output: tokens(&e.out, &output, "out")?,
                })
            })
            .collect::<Result<Vec<_>, DocumentError>>()?;
        FiniteTransducer::new(input, output, self.states.clone(), initial, finals, edges)
            .map_err(|e| DocumentError::at("edges", e))
    }
}

impl Document {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, DocumentError> {
        let text = std::fs::read_to_string(path).map_err(|e| DocumentError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Document::parse(&text)
    }

    /// Canonical text: two-space indentation, LF, trailing newline.
    pub fn to_canonical_string(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("documents serialize");
        text.push('\n');
        text
    }

    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, self.to_canonical_string())
    }

    pub fn automaton(&self) -> Result<ValenceAutomaton, DocumentError> {
        match self {
            Document::Valence(d) => d.to_automaton(),
            Document::Transducer(_) => Err(DocumentError::at(
                "kind",
                "expected \"valence\", found \"transducer\"",
            )),
        }
    }

    pub fn transducer(&self) -> Result<FiniteTransducer, DocumentError> {
        match self {
            Document::Transducer(d) => d.to_transducer(),
            Document::Valence(_) => Err(DocumentError::at(
                "kind",
                "expected \"transducer\", found \"valence\"",
            )),
        }
    }
}

impl From<&ValenceAutomaton> for Document {
    fn from(a: &ValenceAutomaton) -> Self {
        Document::Valence(AutomatonDocument::of_automaton(a))
    }
}

impl From<&FiniteTransducer> for Document {
    fn from(t: &FiniteTransducer) -> Self {
        Document::Transducer(TransducerDocument::of_transducer(t))
    }
}

/// Loads an automaton document from disk.
pub fn load_automaton(path: &Path) -> Result<ValenceAutomaton, DocumentError> {
    Document::load(path)?.automaton()
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG1_LEFT: &str = r#"{
  "kind": "valence",
  "monoid": {
    "type": "polycyclic",
    "alphabet": [
      "x"
    ]
  },
  "input_alphabet": [
    "a",
    "b"
  ],
  "states": [
    "q"
  ],
  "initial": "q",
  "finals": [
    "q"
  ],
  "edges": [
    {
      "from": "q",
      "to": "q",
      "mult": "x",
      "read": "a"
    },
    {
      "from": "q",
      "to": "q",
      "mult": "x^-1",
      "read": "b"
    }
  ]
}
"#;

    #[test]
    fn canonical_roundtrip_is_byte_exact() {
        let doc = Document::parse(FIG1_LEFT).unwrap();
        let a = doc.automaton().unwrap();
        assert_eq!(Document::from(&a).to_canonical_string(), FIG1_LEFT);
    }

    #[test]
    fn product_and_abelian_monoids_roundtrip() {
        let text = r#"{"kind":"valence",
            "monoid":{"type":"product","factors":[{"type":"free_abelian","rank":2},
                      {"type":"free_abelian","rank":1,"alphabet":["n"]},{"type":"trivial"}]},
            "input_alphabet":["a"],"states":["p","q"],"initial":"p","finals":["q"],
            "edges":[{"from":"p","to":"q","mult":"c1 c2^-1 | ε | ε","read":"a"},
                     {"from":"q","to":"q","mult":"","read":""}]}"#;
        let a = Document::parse(text).unwrap().automaton().unwrap();
        assert_eq!(a.monoid().describe(), "Z^2 × Z^1 × 1");
        let saved = Document::from(&a).to_canonical_string();
        let again = Document::parse(&saved).unwrap();
        assert_eq!(again.to_canonical_string(), saved);
        assert!(saved.contains("\"alphabet\": [\n          \"n\""));
        assert!(!saved.contains("\"c1\""));
    }

    #[test]
    fn transducer_roundtrip() {
        let text = r#"{"kind":"transducer","input_alphabet":["x","x^-1"],"output_alphabet":["a","b"],
            "states":["q"],"initial":"q","finals":["q"],
            "edges":[{"from":"q","to":"q","in":"x^-1","out":"b"},{"from":"q","to":"q","in":"x x","out":""}]}"#;
        let doc = Document::parse(text).unwrap();
        let t = doc.transducer().unwrap();
        assert_eq!(t.edges().len(), 2);
        let saved = Document::from(&t).to_canonical_string();
        assert!(saved.find("\"in\": \"x x\"").unwrap() < saved.find("\"in\": \"x^-1\"").unwrap());
        assert_eq!(Document::parse(&saved).unwrap(), Document::from(&t));
    }

    fn error_key(text: &str) -> String {
        match Document::parse(text).and_then(|d| d.automaton()) {
            Err(DocumentError::Invalid { key, .. }) => key,
            Err(e) => e.to_string(),
            Ok(_) => panic!("accepted malformed document"),
        }
    }

    #[test]
    fn diagnostics_name_the_key() {
        let base = |edges: &str, initial: &str| {
            format!(
                r#"{{"kind":"valence","monoid":{{"type":"polycyclic","alphabet":["x"]}},
                "input_alphabet":["a"],"states":["q"],"initial":"{initial}","finals":["q"],"edges":{edges}}}"#
            )
        };
        assert_eq!(error_key(&base("[]", "r")), "initial");
        assert_eq!(
            error_key(&base(r#"[{"from":"q","to":"z","mult":"","read":""}]"#, "q")),
            "edges[0].to"
        );
        assert_eq!(
            error_key(&base(r#"[{"from":"q","to":"q","mult":"y","read":""}]"#, "q")),
            "edges[0].mult"
        );
        assert_eq!(
            error_key(&base(r#"[{"from":"q","to":"q","mult":"x","read":"b"}]"#, "q")),
            "edges[0].read"
        );
        let missing = error_key(r#"{"kind":"valence","monoid":{"type":"trivial"}}"#);
        assert!(missing.contains("input_alphabet"), "{missing}");
        let bad_kind = Document::parse(FIG1_LEFT).unwrap().transducer().unwrap_err();
        assert!(bad_kind.to_string().starts_with("kind:"));
    }
}
