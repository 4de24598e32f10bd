use std::fmt;
use std::sync::Arc;

use super::abelian::IntVector;
use super::alphabet::{Alphabet, SignedWord};
use super::free_group::FreeGroupElement;
use super::polycyclic::{PolyValue, PolycyclicElement};
use crate::error::{Error, Result};

/// Which register monoid an automaton carries.
///
/// Products are kept flat: [`MonoidSpec::product`] splices nested products
/// into a single factor list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum MonoidSpec {
    FreeGroup(Arc<Alphabet>),
    Polycyclic(Arc<Alphabet>),
    /// `Zⁿ` with one named generator per counter.
    FreeAbelian(Arc<Alphabet>),
    Trivial,
    Product(Vec<MonoidSpec>),
}

impl MonoidSpec {
    pub fn free_group(alphabet: Alphabet) -> Self {
        MonoidSpec::FreeGroup(Arc::new(alphabet))
    }

    pub fn polycyclic(alphabet: Alphabet) -> Self {
        MonoidSpec::Polycyclic(Arc::new(alphabet))
    }

    pub fn free_abelian(alphabet: Alphabet) -> Self {
        MonoidSpec::FreeAbelian(Arc::new(alphabet))
    }

    /// `Zⁿ` with generators `c1 … cn`.
    pub fn free_abelian_rank(n: usize) -> Self {
        let names: Vec<String> = default_counter_names(n);
        MonoidSpec::FreeAbelian(Arc::new(
            Alphabet::new(&names).expect("generated names are distinct"),
        ))
    }

    pub fn product(factors: Vec<MonoidSpec>) -> Self {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                MonoidSpec::Product(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        MonoidSpec::Product(flat)
    }

    /// The factor list; a non-product monoid is its own single factor.
    pub fn factors(&self) -> &[MonoidSpec] {
        match self {
            MonoidSpec::Product(fs) => fs,
            other => std::slice::from_ref(other),
        }
    }

    /// Generator alphabet of a non-product monoid (empty for trivial).
    pub fn alphabet(&self) -> Option<Arc<Alphabet>> {
        match self {
            MonoidSpec::FreeGroup(a) | MonoidSpec::Polycyclic(a) | MonoidSpec::FreeAbelian(a) => {
                Some(a.clone())
            }
            MonoidSpec::Trivial => Some(Arc::new(Alphabet::empty())),
            MonoidSpec::Product(_) => None,
        }
    }

    pub fn identity(&self) -> RegisterElement {
        match self {
            MonoidSpec::FreeGroup(a) => RegisterElement::Free(FreeGroupElement::identity(a.clone())),
            MonoidSpec::Polycyclic(a) => {
                RegisterElement::Poly(PolycyclicElement::identity(a.clone()))
            }
            MonoidSpec::FreeAbelian(a) => RegisterElement::Vector(IntVector::zero(a.clone())),
            MonoidSpec::Trivial => RegisterElement::Trivial,
            MonoidSpec::Product(fs) => RegisterElement::Product(ProductElement {
                parts: fs.iter().map(MonoidSpec::identity).collect(),
            }),
        }
    }

    /// The identity multiplier (ε in every factor).
    pub fn unit_multiplier(&self) -> Multiplier {
        Multiplier(vec![SignedWord::empty(); self.factors().len()])
    }

    /// Evaluates a multiplier word to its normal form.
    pub fn eval(&self, m: &Multiplier) -> Result<RegisterElement> {
        let factors = self.factors();
        if m.0.len() != factors.len() {
            return Err(Error::ArityMismatch {
                left: factors.len(),
                right: m.0.len(),
            });
        }
        let parts = factors
            .iter()
            .zip(&m.0)
            .map(|(f, w)| f.eval_word(w))
            .collect::<Result<Vec<_>>>()?;
        if matches!(self, MonoidSpec::Product(_)) {
            Ok(RegisterElement::Product(ProductElement { parts }))
        } else {
            Ok(parts.into_iter().next().expect("one factor"))
        }
    }

    fn eval_word(&self, w: &SignedWord) -> Result<RegisterElement> {
        match self {
            MonoidSpec::FreeGroup(a) => {
                FreeGroupElement::from_word(a.clone(), w).map(RegisterElement::Free)
            }
            MonoidSpec::Polycyclic(a) => {
                PolycyclicElement::eval(a.clone(), w).map(RegisterElement::Poly)
            }
            MonoidSpec::FreeAbelian(a) => IntVector::eval(a.clone(), w).map(RegisterElement::Vector),
            MonoidSpec::Trivial => {
                w.check(&Alphabet::empty())?;
                Ok(RegisterElement::Trivial)
            }
            MonoidSpec::Product(_) => Err(Error::Unsupported("nested product factor".into())),
        }
    }

    /// Parses a multiplier token string. Product multipliers separate
    /// factors with `|`; the empty string is the identity of any monoid.
    pub fn parse_multiplier(&self, text: &str) -> Result<Multiplier> {
        let factors = self.factors();
        let text = text.trim();
        if text.is_empty() {
            return Ok(self.unit_multiplier());
        }
        let parts: Vec<&str> = text.split('|').collect();
        if parts.len() != factors.len() {
            return Err(Error::ArityMismatch {
                left: factors.len(),
                right: parts.len(),
            });
        }
        let words = factors
            .iter()
            .zip(parts)
            .map(|(f, p)| {
                let alphabet = f.alphabet().unwrap_or_default();
                SignedWord::parse_over(p, &alphabet)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Multiplier(words))
    }

    /// Short human-readable name, e.g. `F{x, #}` or `P{x} × Z^1`.
    pub fn describe(&self) -> String {
        match self {
            MonoidSpec::FreeGroup(a) => format!("F{a}"),
            MonoidSpec::Polycyclic(a) => format!("P{a}"),
            MonoidSpec::FreeAbelian(a) => format!("Z^{}", a.len()),
            MonoidSpec::Trivial => "1".to_string(),
            MonoidSpec::Product(fs) => fs
                .iter()
                .map(MonoidSpec::describe)
                .collect::<Vec<_>>()
                .join(" × "),
        }
    }
}

pub(crate) fn default_counter_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("c{i}")).collect()
}

impl fmt::Display for MonoidSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// An edge label's register component: one generator word per factor.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Multiplier(pub Vec<SignedWord>);

impl Multiplier {
    pub fn single(w: SignedWord) -> Self {
        Multiplier(vec![w])
    }

    /// Total number of generator letters over all factors.
    pub fn len(&self) -> usize {
        self.0.iter().map(SignedWord::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn factors(&self) -> &[SignedWord] {
        &self.0
    }

    /// Concatenation of the factor lists (used by product constructions).
    pub fn juxtapose(&self, other: &Multiplier) -> Multiplier {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Multiplier(v)
    }

    /// Token-string form used in documents: `""` for the identity, factors
    /// joined by ` | ` otherwise, with `ε` standing for an empty factor.
    pub fn to_token_string(&self) -> String {
        if self.is_empty() {
            return String::new();
        }
        if self.0.len() == 1 {
            return self.0[0].to_string();
        }
        self.0
            .iter()
            .map(SignedWord::to_string)
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

impl fmt::Display for Multiplier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("ε")
        } else {
            f.write_str(&self.to_token_string())
        }
    }
}

/// A normal-form register value of any supported monoid.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum RegisterElement {
    Free(FreeGroupElement),
    Poly(PolycyclicElement),
    Vector(IntVector),
    Trivial,
    Product(ProductElement),
}

/// A tuple of register values, one per factor.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ProductElement {
    parts: Vec<RegisterElement>,
}

impl ProductElement {
    pub fn new(parts: Vec<RegisterElement>) -> Self {
        ProductElement { parts }
    }

    pub fn parts(&self) -> &[RegisterElement] {
        &self.parts
    }

    pub fn multiply(&self, other: &ProductElement) -> Result<ProductElement> {
        if self.parts.len() != other.parts.len() {
            return Err(Error::ArityMismatch {
                left: self.parts.len(),
                right: other.parts.len(),
            });
        }
        let parts = self
            .parts
            .iter()
            .zip(&other.parts)
            .map(|(a, b)| a.multiply(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ProductElement { parts })
    }

    pub fn is_identity(&self) -> bool {
        self.parts.iter().all(RegisterElement::is_identity)
    }
}

impl RegisterElement {
    pub fn multiply(&self, other: &RegisterElement) -> Result<RegisterElement> {
        use RegisterElement::*;
        match (self, other) {
            (Free(a), Free(b)) => a.multiply(b).map(Free),
            (Poly(a), Poly(b)) => a.multiply(b).map(Poly),
            (Vector(a), Vector(b)) => a.add(b).map(Vector),
            (Trivial, Trivial) => Ok(Trivial),
            (Product(a), Product(b)) => a.multiply(b).map(Product),
            (a, b) => Err(Error::MonoidMismatch {
                left: a.kind_name().into(),
                right: b.kind_name().into(),
            }),
        }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            RegisterElement::Free(a) => a.is_identity(),
            RegisterElement::Poly(a) => a.is_identity(),
            RegisterElement::Vector(a) => a.is_identity(),
            RegisterElement::Trivial => true,
            RegisterElement::Product(p) => p.is_identity(),
        }
    }

    /// True only for the zero of a polycyclic monoid. Groups have no zero,
    /// and a product is never absorbing as a whole.
    pub fn is_zero(&self) -> bool {
        matches!(self, RegisterElement::Poly(p) if p.is_zero())
    }

    /// True when no continuation can bring the register back to the
    /// identity: some polycyclic component is zero or has already popped
    /// below its starting stack (pop words never shrink).
    pub fn is_dead(&self) -> bool {
        match self {
            RegisterElement::Poly(p) => match p.value() {
                PolyValue::Zero => true,
                PolyValue::Pair { pop, .. } => !pop.is_empty(),
            },
            RegisterElement::Product(p) => p.parts.iter().any(RegisterElement::is_dead),
            _ => false,
        }
    }

    /// Size used against the search budget: normal-form length, largest
    /// absolute counter for `Zⁿ`, maximum over product parts.
    pub fn size(&self) -> u64 {
        match self {
            RegisterElement::Free(a) => a.len() as u64,
            RegisterElement::Poly(a) => a.len() as u64,
            RegisterElement::Vector(v) => v.max_abs(),
            RegisterElement::Trivial => 0,
            RegisterElement::Product(p) => {
                p.parts.iter().map(RegisterElement::size).max().unwrap_or(0)
            }
        }
    }

    fn kind_name(&self) -> &'static str {
        match self {
            RegisterElement::Free(_) => "free group element",
            RegisterElement::Poly(_) => "polycyclic element",
            RegisterElement::Vector(_) => "integer vector",
            RegisterElement::Trivial => "trivial element",
            RegisterElement::Product(_) => "product element",
        }
    }
}

impl fmt::Display for RegisterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegisterElement::Free(a) => write!(f, "{a}"),
            RegisterElement::Poly(a) => write!(f, "{a}"),
            RegisterElement::Vector(a) => write!(f, "{a}"),
            RegisterElement::Trivial => f.write_str("1"),
            RegisterElement::Product(p) => {
                write!(f, "⟨")?;
                for (i, part) in p.parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{part}")?;
                }
                write!(f, "⟩")
            }
        }
    }
}
