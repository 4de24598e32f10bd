use super::{ContextFreeGrammar, GSym, Production};
use crate::monoid::{Symbol, Word};

/// A grammar in Chomsky normal form: every rule is `A → B C` or `A → a`.
/// Whether the empty word is generated is kept as a separate flag.
#[derive(Clone, Debug)]
pub struct CnfGrammar {
    pub nonterminals: Vec<String>,
    pub terminals: crate::monoid::Alphabet,
    pub start: usize,
    pub accepts_empty: bool,
    pub unary: Vec<(usize, Symbol)>,
    pub binary: Vec<(usize, usize, usize)>,
}

impl CnfGrammar {
    /// Back to a general grammar; `S → ε` is added when the flag is set.
    pub fn to_grammar(&self) -> ContextFreeGrammar {
        let mut productions: Vec<Production> = self
            .unary
            .iter()
            .map(|(a, t)| Production {
                head: *a,
                body: vec![GSym::T(t.clone())],
            })
            .chain(self.binary.iter().map(|&(a, b, c)| Production {
                head: a,
                body: vec![GSym::N(b), GSym::N(c)],
            }))
            .collect();
        let mut names = self.nonterminals.clone();
        let mut start = self.start;
        if self.accepts_empty {
            // a fresh start keeps ε away from right-hand sides
            names.push(fresh(&names, "S₀"));
            let s0 = names.len() - 1;
            productions.extend(
                productions
                    .iter()
                    .filter(|p| p.head == self.start)
                    .map(|p| Production {
                        head: s0,
                        body: p.body.clone(),
                    })
                    .collect::<Vec<_>>(),
            );
            productions.push(Production {
                head: s0,
                body: Vec::new(),
            });
            start = s0;
        }
        ContextFreeGrammar::new(names, self.terminals.clone(), start, productions)
            .expect("CNF rules reference declared symbols")
    }
}

fn fresh(taken: &[String], base: &str) -> String {
    let mut name = base.to_string();
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}

/// Chomsky normal form by the textbook steps: nullable set, terminal
/// lifting, binarisation, ε-rule removal, unit-rule removal. Useless
/// nonterminals are trimmed first and again at the end.
pub fn cnf_transform(g: &ContextFreeGrammar) -> CnfGrammar {
    let g = g.trimmed();
    let mut names = g.nonterminals().to_vec();
    let start = g.start();

    // nullable set on the original grammar
    let mut nullable = vec![false; names.len()];
    let mut changed = true;
    while changed {
        changed = false;
        for p in g.productions() {
            if !nullable[p.head]
                && p.body.iter().all(|s| matches!(s, GSym::N(b) if nullable[*b]))
            {
                nullable[p.head] = true;
                changed = true;
            }
        }
    }

    // lift terminals out of long bodies
    let mut lifted: std::collections::BTreeMap<Symbol, usize> = Default::default();
    let mut unary: Vec<(usize, Symbol)> = Vec::new();
    let mut bodies: Vec<(usize, Vec<usize>)> = Vec::new(); // nonterminal-only bodies
    for p in g.productions() {
        if let [GSym::T(a)] = p.body.as_slice() {
            unary.push((p.head, a.clone()));
            continue;
        }
        let body = p
            .body
            .iter()
            .map(|s| match s {
                GSym::N(b) => *b,
                GSym::T(a) => *lifted.entry(a.clone()).or_insert_with(|| {
                    names.push(fresh(&names, &format!("T[{a}]")));
                    nullable.push(false);
                    unary.push((names.len() - 1, a.clone()));
                    names.len() - 1
                }),
            })
            .collect();
        bodies.push((p.head, body));
    }

    // binarise: A → B C D becomes A → B A.1, A.1 → C D
    let mut short: Vec<(usize, Vec<usize>)> = Vec::new();
    for (k, (head, body)) in bodies.into_iter().enumerate() {
        if body.len() <= 2 {
            short.push((head, body));
            continue;
        }
        let mut left = head;
        for i in 0..body.len() - 2 {
            names.push(fresh(&names, &format!("{}.{}.{}", names[head], k, i + 1)));
            let rest = names.len() - 1;
            nullable.push(body[i + 1..].iter().all(|b| nullable[*b]));
            short.push((left, vec![body[i], rest]));
            left = rest;
        }
        short.push((left, body[body.len() - 2..].to_vec()));
    }

    // drop ε: every nullable position may be omitted
    let mut units: Vec<(usize, usize)> = Vec::new();
    let mut binary: Vec<(usize, usize, usize)> = Vec::new();
    for (head, body) in short {
        match body.as_slice() {
            [] => {}
            [b] => units.push((head, *b)),
            [b, c] => {
                binary.push((head, *b, *c));
                if nullable[*b] {
                    units.push((head, *c));
                }
                if nullable[*c] {
                    units.push((head, *b));
                }
            }
            _ => unreachable!("bodies are binarised"),
        }
    }

    // unit closure: A ⇒* B through unit rules
    let n = names.len();
    let mut reach = vec![vec![false; n]; n];
    for (a, row) in reach.iter_mut().enumerate() {
        row[a] = true;
    }
    let mut changed = true;
    while changed {
        changed = false;
        for &(a, b) in &units {
            for row in reach.iter_mut() {
                if row[a] && !row[b] {
                    row[b] = true;
                    changed = true;
                }
            }
        }
    }
    let mut unary_of: Vec<Vec<&Symbol>> = vec![Vec::new(); n];
    for (h, t) in &unary {
        unary_of[*h].push(t);
    }
    let mut binary_of: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for &(h, l, r) in &binary {
        binary_of[h].push((l, r));
    }
    let mut new_unary = Vec::new();
    let mut new_binary = Vec::new();
    for (x, row) in reach.iter().enumerate() {
        for b in (0..n).filter(|&b| row[b]) {
            new_unary.extend(unary_of[b].iter().map(|t| (x, (*t).clone())));
            new_binary.extend(binary_of[b].iter().map(|&(l, r)| (x, l, r)));
        }
    }
    new_unary.sort();
    new_unary.dedup();
    new_binary.sort();
    new_binary.dedup();

    let accepts_empty = nullable[start];
    let cnf = CnfGrammar {
        nonterminals: names,
        terminals: g.terminals().clone(),
        start,
        accepts_empty: false,
        unary: new_unary,
        binary: new_binary,
    };
    let mut out = rebuild(&cnf.to_grammar().trimmed());
    out.accepts_empty = accepts_empty;
    out
}

fn rebuild(g: &ContextFreeGrammar) -> CnfGrammar {
    let mut unary = Vec::new();
    let mut binary = Vec::new();
    for p in g.productions() {
        match p.body.as_slice() {
            [GSym::T(a)] => unary.push((p.head, a.clone())),
            [GSym::N(b), GSym::N(c)] => binary.push((p.head, *b, *c)),
            _ => unreachable!("CNF rules only"),
        }
    }
    CnfGrammar {
        nonterminals: g.nonterminals().to_vec(),
        terminals: g.terminals().clone(),
        start: g.start(),
        accepts_empty: false,
        unary,
        binary,
    }
}

/// CYK membership, `O(|w|³ · |rules|)`.
pub fn cyk_member(g: &CnfGrammar, w: &Word) -> bool {
    let n = w.len();
    if n == 0 {
        return g.accepts_empty;
    }
    let k = g.nonterminals.len();
    let mut by_left: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for &(a, b, c) in &g.binary {
        by_left[b].push((a, c));
    }
    // table[i][l - 1]: nonterminals deriving w[i .. i + l]
    let mut table = vec![vec![vec![false; k]; n]; n];
    for (i, s) in w.symbols().iter().enumerate() {
        for (a, t) in &g.unary {
            if t == s {
                table[i][0][*a] = true;
            }
        }
    }
    for len in 2..=n {
        for i in 0..=n - len {
            let mut cell = vec![false; k];
            for split in 1..len {
                let left = &table[i][split - 1];
                let right = &table[i + split][len - split - 1];
                for (b, _) in left.iter().enumerate().filter(|(_, &x)| x) {
                    for &(a, c) in &by_left[b] {
                        if right[c] {
                            cell[a] = true;
                        }
                    }
                }
            }
            table[i][len - 1] = cell;
        }
    }
    table[0][n - 1][g.start]
}
