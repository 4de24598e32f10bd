use std::collections::BTreeSet;
use std::sync::Arc;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::error::{Error, Result};
use crate::monoid::{Alphabet, Multiplier, MonoidSpec, RegisterElement, Symbol, Word};

/// One edge `from --(mult, read)--> to`; `read == None` is an ε-input edge.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub mult: Multiplier,
    pub read: Option<Symbol>,
}

/// A finite automaton over `M × Σ*` with a register in the monoid `M`.
///
/// Immutable once built. Edge multipliers are evaluated to normal form at
/// construction time.
#[derive(Clone, Debug)]
pub struct ValenceAutomaton {
    monoid: MonoidSpec,
    input_alphabet: Arc<Alphabet>,
    states: Vec<String>,
    initial: usize,
    finals: Vec<bool>,
    edges: Vec<Edge>,
    pub(crate) values: Vec<RegisterElement>,
    pub(crate) out: Vec<Vec<usize>>,
    pub(crate) layout: CounterLayout,
    pub(crate) eps: EpsilonStructure,
}

impl ValenceAutomaton {
    pub fn new(
        monoid: MonoidSpec,
        input_alphabet: Alphabet,
        states: Vec<String>,
        initial: usize,
        finals: impl IntoIterator<Item = usize>,
        edges: Vec<Edge>,
    ) -> Result<Self> {
        let n = states.len();
        let mut seen = BTreeSet::new();
        for s in &states {
            if !seen.insert(s.as_str()) {
                return Err(Error::InvalidAutomaton(format!("duplicate state {s:?}")));
            }
        }
        if initial >= n {
            return Err(Error::InvalidAutomaton("initial state out of range".into()));
        }
        let mut final_flags = vec![false; n];
        for f in finals {
            if f >= n {
                return Err(Error::InvalidAutomaton("final state out of range".into()));
            }
            final_flags[f] = true;
        }
        let mut values = Vec::with_capacity(edges.len());
        let mut out = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            if e.from >= n || e.to >= n {
                return Err(Error::InvalidAutomaton(format!(
                    "edge {i} has an endpoint out of range"
                )));
            }
            if let Some(a) = &e.read {
                if !input_alphabet.contains(a) {
                    return Err(Error::UnknownSymbol {
                        symbol: a.to_string(),
                        alphabet: input_alphabet.to_string(),
                    });
                }
            }
            values.push(monoid.eval(&e.mult)?);
            out[e.from].push(i);
        }
        let layout = CounterLayout::new(&monoid, &edges);
        let eps = EpsilonStructure::new(n, &edges, &layout);
        Ok(ValenceAutomaton {
            monoid,
            input_alphabet: Arc::new(input_alphabet),
            states,
            initial,
            finals: final_flags,
            edges,
            values,
            out,
            layout,
            eps,
        })
    }

    /// Starts a name-based builder.
    pub fn builder(monoid: MonoidSpec, input_alphabet: Alphabet) -> AutomatonBuilder {
        AutomatonBuilder {
            monoid,
            input_alphabet,
            states: Vec::new(),
            initial: None,
            finals: Vec::new(),
            edges: Vec::new(),
        }
    }

    pub fn monoid(&self) -> &MonoidSpec {
        &self.monoid
    }

    pub fn input_alphabet(&self) -> &Alphabet {
        &self.input_alphabet
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
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

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Normal form of each edge multiplier, indexed like [`Self::edges`].
    pub fn edge_values(&self) -> &[RegisterElement] {
        &self.values
    }

    /// Edges leaving `q`, as indices into [`Self::edges`].
    pub fn outgoing(&self, q: usize) -> &[usize] {
        &self.out[q]
    }

    /// Longest edge multiplier, in generator letters.
    pub fn max_multiplier_len(&self) -> usize {
        self.edges.iter().map(|e| e.mult.len()).max().unwrap_or(0)
    }

    /// The same automaton with its register reinterpreted in `monoid`
    /// (e.g. a polycyclic automaton read as a free-group automaton over the
    /// same generators). Fails if a multiplier does not parse there.
    pub fn reinterpret(&self, monoid: MonoidSpec) -> Result<ValenceAutomaton> {
        ValenceAutomaton::new(
            monoid,
            (*self.input_alphabet).clone(),
            self.states.clone(),
            self.initial,
            self.finals(),
            self.edges.clone(),
        )
    }

    /// The finitely many multipliers labelling edges. The automaton is
    /// equally an automaton over the submonoid they generate.
    pub fn used_submonoid_generators(&self) -> BTreeSet<Multiplier> {
        self.edges.iter().map(|e| e.mult.clone()).collect()
    }

    /// Concatenated multiplier words of every path reading `w` from the
    /// initial state to a final state using at most `max_edges` edges,
    /// ignoring the register. This is the automaton viewed as an ordinary
    /// finite automaton over `X̄* × Σ*`.
    pub fn path_labels(&self, w: &Word, max_edges: usize) -> Result<BTreeSet<Multiplier>> {
        w.check(&self.input_alphabet)?;
        let mut found = BTreeSet::new();
        let mut stack = vec![(self.initial, 0usize, self.monoid.unit_multiplier(), 0usize)];
        while let Some((q, pos, label, used)) = stack.pop() {
            if pos == w.len() && self.finals[q] {
                found.insert(label.clone());
            }
            if used == max_edges {
                continue;
            }
            for &ei in &self.out[q] {
                let e = &self.edges[ei];
                let next = match &e.read {
                    None => pos,
                    Some(a) if pos < w.len() && &w.0[pos] == a => pos + 1,
                    Some(_) => continue,
                };
                let joined = Multiplier(
                    label
                        .0
                        .iter()
                        .zip(&e.mult.0)
                        .map(|(u, v)| u.concat(v))
                        .collect(),
                );
                stack.push((e.to, next, joined, used + 1));
            }
        }
        Ok(found)
    }
}

/// Name-based construction helper; state names are created on first use.
pub struct AutomatonBuilder {
    monoid: MonoidSpec,
    input_alphabet: Alphabet,
    states: Vec<String>,
    initial: Option<String>,
    finals: Vec<String>,
    edges: Vec<(String, String, String, String)>,
}

impl AutomatonBuilder {
    pub fn state(mut self, name: &str) -> Self {
        self.touch(name);
        self
    }

    pub fn initial(mut self, name: &str) -> Self {
        self.touch(name);
        self.initial = Some(name.to_string());
        self
    }

    pub fn final_state(mut self, name: &str) -> Self {
        self.touch(name);
        self.finals.push(name.to_string());
        self
    }

    /// Adds `from --(mult, read)--> to`; `mult` is a token string and an
    /// empty `read` means ε.
    pub fn edge(mut self, from: &str, mult: &str, read: &str, to: &str) -> Self {
        self.touch(from);
        self.touch(to);
        self.edges
            .push((from.into(), mult.into(), read.into(), to.into()));
        self
    }

    fn touch(&mut self, name: &str) {
        if !self.states.iter().any(|s| s == name) {
            self.states.push(name.to_string());
        }
    }

    pub fn build(self) -> Result<ValenceAutomaton> {
        let index = |name: &str| self.states.iter().position(|s| s == name).unwrap();
        let initial = match &self.initial {
            Some(s) => index(s),
            None => return Err(Error::InvalidAutomaton("no initial state".into())),
        };
        let finals: Vec<usize> = self.finals.iter().map(|s| index(s)).collect();
        let edges = self
            .edges
            .iter()
            .map(|(f, m, r, t)| {
                Ok(Edge {
                    from: index(f),
                    to: index(t),
                    mult: self.monoid.parse_multiplier(m)?,
                    read: if r.is_empty() { None } else { Some(Symbol::new(r)) },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        ValenceAutomaton::new(
            self.monoid.clone(),
            self.input_alphabet.clone(),
            self.states.clone(),
            initial,
            finals,
            edges,
        )
    }
}

/// Numbering of signed generators across all factors: the generator `g` of
/// factor `f` gets counters `2·(offset_f + g)` (positive) and `+1`
/// (inverse). Each edge records how often each signed generator occurs in
/// its multiplier.
#[derive(Clone, Debug)]
pub(crate) struct CounterLayout {
    pub offsets: Vec<usize>,
    pub alphabets: Vec<Arc<Alphabet>>,
    pub width: usize,
    pub edge_counts: Vec<Vec<u32>>,
}

impl CounterLayout {
    fn new(monoid: &MonoidSpec, edges: &[Edge]) -> Self {
        let mut offsets = Vec::new();
        let mut alphabets = Vec::new();
        let mut total = 0;
        for f in monoid.factors() {
            let a = f.alphabet().unwrap_or_default();
            offsets.push(total);
            total += a.len();
            alphabets.push(a);
        }
        let width = 2 * total;
        let mut layout = CounterLayout {
            offsets,
            alphabets,
            width,
            edge_counts: Vec::with_capacity(edges.len()),
        };
        for e in edges {
            let mut counts = vec![0u32; width];
            for (f, word) in e.mult.0.iter().enumerate() {
                for l in word.letters() {
                    if let Some(id) = layout.counter(f, &l.symbol, l.inverse) {
                        counts[id] += 1;
                    }
                }
            }
            layout.edge_counts.push(counts);
        }
        layout
    }

    #[inline]
    pub fn counter(&self, factor: usize, symbol: &Symbol, inverse: bool) -> Option<usize> {
        let g = self.alphabets.get(factor)?.index_of(symbol)?;
        Some(2 * (self.offsets[factor] + g) + usize::from(inverse))
    }
}

/// Strongly connected components of the ε-input subgraph, sinks first,
/// with the counters that can be pumped without bound inside each.
#[derive(Clone, Debug)]
pub(crate) struct EpsilonStructure {
    pub sccs: Vec<Vec<usize>>,
    pub scc_of: Vec<usize>,
    pub pumps: Vec<Vec<usize>>,
}

impl EpsilonStructure {
    fn new(n: usize, edges: &[Edge], layout: &CounterLayout) -> Self {
        let mut g: DiGraph<(), ()> = DiGraph::with_capacity(n, edges.len());
        let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
        for e in edges.iter().filter(|e| e.read.is_none()) {
            g.add_edge(nodes[e.from], nodes[e.to], ());
        }
        // tarjan_scc yields components in reverse topological order
        let sccs: Vec<Vec<usize>> = tarjan_scc(&g)
            .into_iter()
            .map(|c| c.into_iter().map(|v| v.index()).collect())
            .collect();
        let mut scc_of = vec![0; n];
        for (i, c) in sccs.iter().enumerate() {
            for &q in c {
                scc_of[q] = i;
            }
        }
        let mut pumps = vec![Vec::new(); sccs.len()];
        for (ei, e) in edges.iter().enumerate() {
            if e.read.is_none() && scc_of[e.from] == scc_of[e.to] {
                let c = &mut pumps[scc_of[e.from]];
                for (id, &k) in layout.edge_counts[ei].iter().enumerate() {
                    if k > 0 && !c.contains(&id) {
                        c.push(id);
                    }
                }
            }
        }
        EpsilonStructure {
            sccs,
            scc_of,
            pumps,
        }
    }
}
