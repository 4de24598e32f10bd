//! `valence`: command-line front end for the valence automaton library.
//!
//! Exit codes: 0 success (ACCEPTED, empty difference), 1 REJECTED or a
//! non-empty difference, 2 UNKNOWN, 64 usage errors, 65 malformed documents
//! or inputs, 66 unreadable files.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use valence::automaton::{Acceptance, SearchBudget, ValenceAutomaton};
use valence::constructions::{
    automaton_to_transducer, normalize_multipliers, padding_construction, product_automaton,
    transducer_to_automaton, PaddedRegister,
};
use valence::dyck::{insert_padding, is_one_sided_dyck, is_two_sided_dyck, minima};
use valence::format::{Document, DocumentError};
use valence::grammar::{exact_grammar, ExactOracle};
use valence::monoid::{Alphabet, MonoidSpec, SignedWord, Word, INVERSE_SUFFIX};

const EX_USAGE: u8 = 64;
const EX_DATAERR: u8 = 65;
const EX_NOINPUT: u8 = 66;

#[derive(Parser)]
#[command(name = "valence", version, about = "Valence automata over free groups, polycyclic monoids and Zⁿ")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership of a word; exits 0/1/2 for ACCEPTED/REJECTED/UNKNOWN.
    Member {
        file: PathBuf,
        word: String,
        /// Register-size cap for the search (default scales with the word).
        #[arg(long)]
        budget: Option<u64>,
        /// Use the grammar oracle (polycyclic, free-group and trivial registers).
        #[arg(long)]
        exact: bool,
    },
    /// List accepted words up to a length, length-lexicographically.
    Enum {
        file: PathBuf,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        sequential: bool,
    },
    /// Direct product of two automata (intersection of languages).
    Product {
        f1: PathBuf,
        f2: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Padding construction of a polycyclic automaton.
    PadConstruct {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Register::Fg)]
        register: Register,
        #[command(flatten)]
        out: Output,
    },
    /// Context-free grammar of a polycyclic or free-group automaton.
    ToGrammar {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// The automaton viewed as a transducer from generator words to inputs.
    ToTransducer {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// A transducer read as an automaton over the given register monoid.
    FromTransducer {
        file: PathBuf,
        #[arg(long, value_enum)]
        monoid: MonoidKind,
        #[command(flatten)]
        out: Output,
    },
    /// Subdivide edges so every multiplier has at most one letter.
    Normalize {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Dyck-language membership of a signed word; prints YES or NO.
    Dyck {
        #[command(flatten)]
        kind: DyckFlag,
        word: String,
    },
    /// The minima of a signed word, one per line.
    Minima { word: String },
    /// The canonical permissible padding of a 1-sided Dyck word.
    Pad { word: String },
    /// Symmetric difference of two languages up to a length; exits 0 when empty.
    Compare {
        f1: PathBuf,
        f2: PathBuf,
        #[arg(long)]
        max_len: usize,
        /// Reinterpret the second automaton's register in this monoid.
        #[arg(long, value_enum)]
        register: Option<Register>,
    },
}

#[derive(Args)]
struct Output {
    /// Output file (stdout when omitted).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct DyckFlag {
    #[arg(long)]
    one_sided: bool,
    #[arg(long)]
    two_sided: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Register {
    Fg,
    Poly,
}

#[derive(Clone, Copy, ValueEnum)]
enum MonoidKind {
    Polycyclic,
    FreeGroup,
    FreeAbelian,
    Trivial,
}

/// A failure carrying its exit code and one-line diagnostic.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl ToString) -> Self {
        Failure {
            code: EX_USAGE,
            message: message.to_string(),
        }
    }

    fn data(message: impl ToString) -> Self {
        Failure {
            code: EX_DATAERR,
            message: message.to_string(),
        }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        let code = match e {
            DocumentError::Io { .. } => EX_NOINPUT,
            _ => EX_DATAERR,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<valence::Error> for Failure {
    fn from(e: valence::Error) -> Self {
        Failure::data(e)
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EX_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("valence: {}", f.message.lines().next().unwrap_or_default());
            ExitCode::from(f.code)
        }
    }
}

fn load(path: &Path) -> Result<Document, Failure> {
    Ok(Document::load(path)?)
}

fn load_automaton(path: &Path) -> Result<ValenceAutomaton, Failure> {
    Ok(load(path)?.automaton()?)
}

fn emit(out: &Output, text: &str) -> Result<(), Failure> {
    match &out.output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure {
            code: EX_NOINPUT,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_automaton(out: &Output, a: &ValenceAutomaton) -> Outcome {
    emit(out, &Document::from(a).to_canonical_string())?;
    Ok(0)
}

fn show(w: &Word) -> String {
    w.to_string()
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Member {
            file,
            word,
            budget,
            exact,
        } => {
            let a = load_automaton(&file)?;
            let w = Word::parse(&word, a.input_alphabet()).map_err(Failure::data)?;
            let answer = if exact {
                let oracle = ExactOracle::new(&a).map_err(Failure::usage)?;
                if oracle.accepts(&w)? {
                    Acceptance::Accepted
                } else {
                    Acceptance::Rejected
                }
            } else {
                let budget = SearchBudget {
                    register_cap: budget,
                    ..SearchBudget::default()
                };
                a.accepts(&w, &budget)?
            };
            println!("{answer}");
            Ok(match answer {
                Acceptance::Accepted => 0,
                Acceptance::Rejected => 1,
                Acceptance::BudgetExhausted => 2,
            })
        }
        Command::Enum {
            file,
            max_len,
            sequential,
        } => {
            let a = load_automaton(&file)?;
            let exec = if sequential {
                valence::par::Execution::Sequential
            } else {
                valence::par::Execution::default()
            };
            let e = a.enumerate_language_with(max_len, &SearchBudget::default(), exec)?;
            let mut stdout = std::io::stdout().lock();
            for w in &e.words {
                let _ = writeln!(stdout, "{}", show(w));
            }
            for w in &e.unknown {
                eprintln!("UNKNOWN {}", show(w));
            }
            Ok(if e.complete { 0 } else { 2 })
        }
        Command::Product { f1, f2, out } => {
            let p = product_automaton(&load_automaton(&f1)?, &load_automaton(&f2)?)?;
            emit_automaton(&out, &p)
        }
        Command::PadConstruct {
            file,
            register,
            out,
        } => {
            let a = normalize_multipliers(&load_automaton(&file)?)?;
            let register = match register {
                Register::Fg => PaddedRegister::FreeGroup,
                Register::Poly => PaddedRegister::Polycyclic,
            };
            emit_automaton(&out, &padding_construction(&a, register)?)
        }
        Command::ToGrammar { file, out } => {
            let g = exact_grammar(&load_automaton(&file)?).map_err(Failure::usage)?;
            emit(&out, &g.trimmed().to_string())?;
            Ok(0)
        }
        Command::ToTransducer { file, out } => {
            let t = automaton_to_transducer(&load_automaton(&file)?)?;
            emit(&out, &Document::from(&t).to_canonical_string())?;
            Ok(0)
        }
        Command::FromTransducer { file, monoid, out } => {
            let t = load(&file)?.transducer()?;
            let gens: Vec<String> = t
                .input_alphabet()
                .symbols()
                .iter()
                .map(|s| s.as_str().trim_end_matches(INVERSE_SUFFIX).to_string())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let gens = Alphabet::new(&gens)?;
            let spec = match monoid {
                MonoidKind::Polycyclic => MonoidSpec::polycyclic(gens),
                MonoidKind::FreeGroup => MonoidSpec::free_group(gens),
                MonoidKind::FreeAbelian => MonoidSpec::free_abelian(gens),
                MonoidKind::Trivial => MonoidSpec::Trivial,
            };
            emit_automaton(&out, &transducer_to_automaton(&t, spec)?)
        }
        Command::Normalize { file, out } => {
            emit_automaton(&out, &normalize_multipliers(&load_automaton(&file)?)?)
        }
        Command::Dyck { kind, word } => {
            let w = SignedWord::parse(&word).map_err(Failure::data)?;
            let yes = if kind.one_sided {
                is_one_sided_dyck(&w)
            } else {
                is_two_sided_dyck(&w)
            };
            println!("{}", if yes { "YES" } else { "NO" });
            Ok(0)
        }
        Command::Minima { word } => {
            let w = SignedWord::parse(&word).map_err(Failure::data)?;
            for m in minima(&w) {
                println!("{m}");
            }
            Ok(0)
        }
        Command::Pad { word } => {
            let w = SignedWord::parse(&word).map_err(Failure::data)?;
            println!("{}", insert_padding(&w)?.word);
            Ok(0)
        }
        Command::Compare {
            f1,
            f2,
            max_len,
            register,
        } => {
            let a = load_automaton(&f1)?;
            let mut b = load_automaton(&f2)?;
            if let Some(r) = register {
                let gens = b.monoid().alphabet().filter(|_| {
                    matches!(b.monoid(), MonoidSpec::FreeGroup(_) | MonoidSpec::Polycyclic(_))
                });
                let gens = gens.ok_or_else(|| {
                    Failure::usage("--register needs a free-group or polycyclic automaton")
                })?;
                let spec = match r {
                    Register::Fg => MonoidSpec::FreeGroup(gens),
                    Register::Poly => MonoidSpec::Polycyclic(gens),
                };
                b = b.reinterpret(spec)?;
            }
            let budget = SearchBudget::default();
            let la = a.enumerate_language(max_len, &budget)?;
            let lb = b.enumerate_language(max_len, &budget)?;
            let mut differs = false;
            let mut lines: Vec<(Word, char)> = Vec::new();
            lines.extend(la.words.difference(&lb.words).map(|w| (w.clone(), '<')));
            lines.extend(lb.words.difference(&la.words).map(|w| (w.clone(), '>')));
            lines.sort();
            for (w, side) in &lines {
                differs = true;
                println!("{side} {}", show(w));
            }
            let unknown: BTreeSet<&Word> = la.unknown.iter().chain(&lb.unknown).collect();
            for w in &unknown {
                println!("? {}", show(w));
            }
            Ok(if differs {
                1
            } else if !unknown.is_empty() {
                2
            } else {
                0
            })
        }
    }
}
