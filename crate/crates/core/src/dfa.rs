//! Complete deterministic finite automata over a small alphabet of
//! single-character symbols.
//!
//! A [`Dfa`] is always total: every `(state, symbol)` pair has a target.
//! Constructors validate this, so every other module may index the
//! transition table without further checks.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Index of a state inside a transition table.
pub type StateId = usize;

/// Errors produced while building, reading or combining automata.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DfaError {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,

    #[error("alphabet contains duplicate symbol '{0}'")]
    DuplicateSymbol(char),

    #[error("alphabet entry {0:?} is not a single character")]
    InvalidSymbol(String),

    #[error("automaton must have at least one state")]
    NoStates,

    #[error("state {state} is out of range (automaton has {num_states} states)")]
    StateOutOfRange { state: StateId, num_states: usize },

    #[error("transition table has {found} rows but num_states is {expected}")]
    RowCountMismatch { expected: usize, found: usize },

    #[error("row {state} has {found} entries, expected one per symbol ({expected})")]
    RowLengthMismatch {
        state: StateId,
        expected: usize,
        found: usize,
    },

    #[error("state_names has {found} entries, expected {expected}")]
    StateNamesMismatch { expected: usize, found: usize },

    #[error("symbol '{symbol}' at position {position} is not in the alphabet")]
    UnknownSymbol { position: usize, symbol: char },

    #[error("automata are defined over different alphabets")]
    AlphabetMismatch,

    #[error("operation needs at least one automaton")]
    EmptyInput,

    #[error("product construction exceeded the state budget of {budget}")]
    StateBudgetExceeded { budget: usize },

    #[error("malformed DFA file: {0}")]
    Json(String),
}

/// A finite word, stored as its symbols.
///
/// Symbols are single characters, so a word prints and parses as a plain
/// string with no separators.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<char>);

impl Word {
    pub fn new(symbols: Vec<char>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn symbols(&self) -> &[char] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_symbols(self) -> Vec<char> {
        self.0
    }

    /// Appends `other` to this word.
    pub fn concat(&self, other: &Word) -> Word {
        let mut symbols = self.0.clone();
        symbols.extend_from_slice(&other.0);
        Word(symbols)
    }
}

impl From<&str> for Word {
    fn from(s: &str) -> Self {
        Word(s.chars().collect())
    }
}

impl From<Vec<char>> for Word {
    fn from(symbols: Vec<char>) -> Self {
        Word(symbols)
    }
}

impl FromStr for Word {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Word::from(s))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Ok(Word::from(s.as_str()))
    }
}

/// A complete deterministic finite automaton.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Vec<char>,
    initial: StateId,
    accepting: Vec<bool>,
    transitions: Vec<Vec<StateId>>,
    state_names: Option<Vec<String>>,
}

impl fmt::Debug for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Dfa")
            .field("alphabet", &self.alphabet)
            .field("initial", &self.initial)
            .field("accepting", &self.accepting_states())
            .field("transitions", &self.transitions)
            .finish()
    }
}

impl Dfa {
    /// Builds an automaton from a full transition table.
    ///
    /// `transitions[s][k]` is the target of state `s` on `alphabet[k]`.
    pub fn new(
        alphabet: Vec<char>,
        transitions: Vec<Vec<StateId>>,
        initial: StateId,
        accepting: impl IntoIterator<Item = StateId>,
    ) -> Result<Self, DfaError> {
        validate_alphabet(&alphabet)?;
        let num_states = transitions.len();
        if num_states == 0 {
            return Err(DfaError::NoStates);
        }
        check_state(initial, num_states)?;
        for (state, row) in transitions.iter().enumerate() {
            if row.len() != alphabet.len() {
                return Err(DfaError::RowLengthMismatch {
                    state,
                    expected: alphabet.len(),
                    found: row.len(),
                });
            }
            for &target in row {
                check_state(target, num_states)?;
            }
        }
        let mut accepting_mask = vec![false; num_states];
        for state in accepting {
            check_state(state, num_states)?;
            accepting_mask[state] = true;
        }
        Ok(Dfa {
            alphabet,
            initial,
            accepting: accepting_mask,
            transitions,
            state_names: None,
        })
    }

    /// Internal constructor for tables produced by this crate's own
    /// algorithms, which are total by construction.
    pub(crate) fn from_parts(
        alphabet: Vec<char>,
        transitions: Vec<Vec<StateId>>,
        initial: StateId,
        accepting: Vec<bool>,
    ) -> Self {
        debug_assert_eq!(transitions.len(), accepting.len());
        debug_assert!(transitions.iter().flatten().all(|&t| t < accepting.len()));
        Dfa {
            alphabet,
            initial,
            accepting,
            transitions,
            state_names: None,
        }
    }

    /// Attaches display names, one per state.
    pub fn with_state_names(mut self, names: Vec<String>) -> Result<Self, DfaError> {
        if names.len() != self.num_states() {
            return Err(DfaError::StateNamesMismatch {
                expected: self.num_states(),
                found: names.len(),
            });
        }
        self.state_names = Some(names);
        Ok(self)
    }

    pub fn without_state_names(mut self) -> Self {
        self.state_names = None;
        self
    }

    pub fn num_states(&self) -> usize {
        self.transitions.len()
    }

    pub fn alphabet(&self) -> &[char] {
        &self.alphabet
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn is_accepting(&self, state: StateId) -> bool {
        self.accepting[state]
    }

    pub fn accepting_mask(&self) -> &[bool] {
        &self.accepting
    }

    /// Accepting states in ascending order.
    pub fn accepting_states(&self) -> Vec<StateId> {
        (0..self.num_states())
            .filter(|&s| self.accepting[s])
            .collect()
    }

    pub fn transitions(&self) -> &[Vec<StateId>] {
        &self.transitions
    }

    pub fn state_names(&self) -> Option<&[String]> {
        self.state_names.as_deref()
    }

    /// Display name of a state, falling back to `q<id>`.
    pub fn state_name(&self, state: StateId) -> String {
        match &self.state_names {
            Some(names) => names[state].clone(),
            None => format!("q{state}"),
        }
    }

    /// Target of `state` on the symbol with alphabet index `symbol`.
    #[inline]
    pub fn next(&self, state: StateId, symbol: usize) -> StateId {
        self.transitions[state][symbol]
    }

    pub fn symbol_index(&self, symbol: char) -> Option<usize> {
        self.alphabet.iter().position(|&c| c == symbol)
    }

    /// A state is a sink when every symbol loops back to it.
    pub fn is_sink(&self, state: StateId) -> bool {
        self.transitions[state].iter().all(|&t| t == state)
    }

    /// Translates a word into alphabet indices.
    pub fn encode(&self, word: &Word) -> Result<Vec<usize>, DfaError> {
        word.symbols()
            .iter()
            .enumerate()
            .map(|(position, &symbol)| {
                self.symbol_index(symbol)
                    .ok_or(DfaError::UnknownSymbol { position, symbol })
            })
            .collect()
    }

    pub fn decode(&self, symbols: &[usize]) -> Word {
        Word(symbols.iter().map(|&k| self.alphabet[k]).collect())
    }

    /// Last state of the run from `from` on an encoded word.
    #[inline]
    pub fn run_from(&self, from: StateId, symbols: &[usize]) -> StateId {
        symbols
            .iter()
            .fold(from, |state, &k| self.transitions[state][k])
    }

    #[inline]
    pub fn run_indices(&self, symbols: &[usize]) -> StateId {
        self.run_from(self.initial, symbols)
    }

    #[inline]
    pub fn accepts_indices(&self, symbols: &[usize]) -> bool {
        self.accepting[self.run_indices(symbols)]
    }

    /// Last state of the initial run on `word`.
    pub fn run(&self, word: &Word) -> Result<StateId, DfaError> {
        Ok(self.run_indices(&self.encode(word)?))
    }

    pub fn accepts(&self, word: &Word) -> Result<bool, DfaError> {
        Ok(self.accepting[self.run(word)?])
    }

    /// States reachable from the initial state, in breadth-first order with
    /// symbols tried in alphabet order.
    pub fn reachable_states(&self) -> Vec<StateId> {
        let mut seen = vec![false; self.num_states()];
        let mut order = vec![self.initial];
        seen[self.initial] = true;
        let mut head = 0;
        while head < order.len() {
            let state = order[head];
            head += 1;
            for &target in &self.transitions[state] {
                if !seen[target] {
                    seen[target] = true;
                    order.push(target);
                }
            }
        }
        order
    }

    /// Drops unreachable states and renumbers the rest in breadth-first
    /// discovery order. State names are carried along.
    pub fn canonical(&self) -> Dfa {
        let order = self.reachable_states();
        let mut new_id = vec![usize::MAX; self.num_states()];
        for (id, &state) in order.iter().enumerate() {
            new_id[state] = id;
        }
        let transitions = order
            .iter()
            .map(|&s| self.transitions[s].iter().map(|&t| new_id[t]).collect())
            .collect();
        let accepting = order.iter().map(|&s| self.accepting[s]).collect();
        let mut out = Dfa::from_parts(self.alphabet.clone(), transitions, 0, accepting);
        if let Some(names) = &self.state_names {
            out.state_names = Some(order.iter().map(|&s| names[s].clone()).collect());
        }
        out
    }

    /// The same automaton with accepting and rejecting states swapped.
    pub fn complement(&self) -> Dfa {
        let mut out = self.clone();
        for flag in &mut out.accepting {
            *flag = !*flag;
        }
        out
    }

    /// One-state automaton for the universal (`accepting = true`) or the
    /// empty language.
    pub fn trivial(alphabet: Vec<char>, accepting: bool) -> Result<Dfa, DfaError> {
        validate_alphabet(&alphabet)?;
        let row = vec![0; alphabet.len()];
        Ok(Dfa::from_parts(alphabet, vec![row], 0, vec![accepting]))
    }

    pub fn from_json(text: &str) -> Result<Dfa, DfaError> {
        let file: DfaFile =
            serde_json::from_str(text).map_err(|e| DfaError::Json(e.to_string()))?;
        Dfa::try_from(file)
    }

    /// Canonical file form: fixed key order, two-space indentation and a
    /// trailing newline.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&DfaFile::from(self))
            .expect("DFA file serialization cannot fail");
        text.push('\n');
        text
    }
}

fn check_state(state: StateId, num_states: usize) -> Result<(), DfaError> {
    if state < num_states {
        Ok(())
    } else {
        Err(DfaError::StateOutOfRange { state, num_states })
    }
}

fn validate_alphabet(alphabet: &[char]) -> Result<(), DfaError> {
    if alphabet.is_empty() {
        return Err(DfaError::EmptyAlphabet);
    }
    for (k, &c) in alphabet.iter().enumerate() {
        if alphabet[..k].contains(&c) {
            return Err(DfaError::DuplicateSymbol(c));
        }
    }
    Ok(())
}

/// On-disk form of a [`Dfa`]. Field order is the serialization order.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DfaFile {
    pub alphabet: Vec<String>,
    pub num_states: usize,
    pub initial: StateId,
    pub accepting: Vec<StateId>,
    pub transitions: Vec<Vec<StateId>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub state_names: Option<Vec<String>>,
}

impl From<&Dfa> for DfaFile {
    fn from(dfa: &Dfa) -> Self {
        DfaFile {
            alphabet: dfa.alphabet.iter().map(|c| c.to_string()).collect(),
            num_states: dfa.num_states(),
            initial: dfa.initial,
            accepting: dfa.accepting_states(),
            transitions: dfa.transitions.clone(),
            state_names: dfa.state_names.clone(),
        }
    }
}

impl TryFrom<DfaFile> for Dfa {
    type Error = DfaError;

    fn try_from(file: DfaFile) -> Result<Self, Self::Error> {
        let alphabet = file
            .alphabet
            .iter()
            .map(|s| {
                let mut chars = s.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => Ok(c),
                    _ => Err(DfaError::InvalidSymbol(s.clone())),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        if file.transitions.len() != file.num_states {
            return Err(DfaError::RowCountMismatch {
                expected: file.num_states,
                found: file.transitions.len(),
            });
        }
        let dfa = Dfa::new(alphabet, file.transitions, file.initial, file.accepting)?;
        match file.state_names {
            Some(names) => dfa.with_state_names(names),
            None => Ok(dfa),
        }
    }
}
