//! Explicit decompositions of composite minimal linear safety ADFA+s, their
//! verification, and the safety closure of an arbitrary automaton.

use serde::Serialize;

use crate::algebra::{index, intersect_minimized, minimize, separating_word, DEFAULT_STATE_BUDGET};
use crate::classify::{linear_profile, ClassifyError};
use crate::dfa::{Dfa, DfaError, StateId, Word};
use crate::primality::{decide_primality_mls_with, MlsDfa, PrimalityError, PrimalityOptions};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecomposeError {
    #[error("automaton is not a minimal linear safety ADFA+")]
    NotMlsAdfaPlus,

    #[error("index {index} out of range (valid: {min}..={max})")]
    IndexOutOfRange {
        index: usize,
        min: usize,
        max: usize,
    },

    #[error("pump indices i={i}, j={j} out of range for a word of length {len}")]
    PumpRangeInvalid { i: usize, j: usize, len: usize },

    #[error("pumped symbols coincide: σ_{i} = σ_{j} = '{symbol}'")]
    EqualPumpSymbols { i: usize, j: usize, symbol: char },

    #[error("word {0:?} is a power of a single symbol")]
    UnaryPowerWord(String),

    #[error("word {0:?} breaks the pumping condition at every pair")]
    NoPumpablePair(String),

    #[error("automaton is prime; no decomposition exists")]
    IsPrime,

    #[error("max-visiting word budget of {budget} exhausted before a verdict")]
    Inconclusive { budget: usize },

    #[error(transparent)]
    Primality(PrimalityError),

    #[error(transparent)]
    Dfa(#[from] DfaError),
}

impl From<PrimalityError> for DecomposeError {
    fn from(e: PrimalityError) -> Self {
        match e {
            PrimalityError::NotMlsAdfaPlus => DecomposeError::NotMlsAdfaPlus,
            PrimalityError::Inconclusive { budget } => DecomposeError::Inconclusive { budget },
            PrimalityError::Dfa(d) => DecomposeError::Dfa(d),
            other => DecomposeError::Primality(other),
        }
    }
}

impl From<ClassifyError> for DecomposeError {
    fn from(_: ClassifyError) -> Self {
        DecomposeError::NotMlsAdfaPlus
    }
}

/// Which gadget a decomposition part is.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    /// `A_i^+`: chain state `q_i` removed.
    SkipState { i: usize },
    /// `A_{w,i,j}`: rejects the extensions of every pumping of `w` at `(i, j)`.
    PumpGadget { word: Word, i: usize, j: usize },
}

#[derive(Debug, Clone)]
pub struct Decomposition {
    pub parts: Vec<Dfa>,
    pub provenance: Vec<Provenance>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PumpIndices {
    pub i: usize,
    pub j: usize,
    pub word: Word,
}

/// A part whose index is not strictly below the source's.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartViolation {
    pub part: usize,
    pub index: usize,
    pub source_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub verified: bool,
    pub source_index: usize,
    pub violations: Vec<PartViolation>,
    pub languages_equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separating_word: Option<Word>,
}

/// `A_i^+`: drops chain state `q_i` (1 ≤ i ≤ lin) and sends every transition
/// that entered it to the accepting sink. Remaining states keep their
/// relative order.
pub fn build_a_i_plus(dfa: &Dfa, i: usize) -> Result<Dfa, DecomposeError> {
    let profile = linear_profile(dfa)?;
    let lin = profile.lin();
    if !(1..=lin).contains(&i) {
        return Err(DecomposeError::IndexOutOfRange {
            index: i,
            min: 1,
            max: lin,
        });
    }
    let removed = profile.order[i];
    let n = dfa.num_states();
    let new_id = |s: StateId| if s < removed { s } else { s - 1 };
    let plus = new_id(profile.accepting_sink);
    let transitions = (0..n)
        .filter(|&s| s != removed)
        .map(|s| {
            dfa.transitions()[s]
                .iter()
                .map(|&t| if t == removed { plus } else { new_id(t) })
                .collect()
        })
        .collect();
    let accepting = (0..n)
        .filter(|&s| s != removed && dfa.is_accepting(s))
        .map(new_id);
    let initial = new_id(dfa.initial());
    let mut out = Dfa::new(dfa.alphabet().to_vec(), transitions, initial, accepting)?;
    if let Some(names) = dfa.state_names() {
        let kept = (0..n)
            .filter(|&s| s != removed)
            .map(|s| names[s].clone())
            .collect();
        out = out.with_state_names(kept)?;
    }
    Ok(out)
}

/// Pump pair for a max-visiting word on the composite side: the largest `i`
/// with some rejecting pair `(i, j)`, then the smallest such `j`.
pub fn choose_pump_indices(dfa: &Dfa, word: &Word) -> Result<PumpIndices, DecomposeError> {
    let mls = MlsDfa::new(dfa)?;
    choose_with(&mls, word)
}

fn choose_with(mls: &MlsDfa, word: &Word) -> Result<PumpIndices, DecomposeError> {
    let top = mls.lin() + 1;
    for i in (1..top).rev() {
        for j in (i + 1)..=top {
            if mls.pp_condition_holds(word, i, j)? {
                let s = word.symbols();
                assert_ne!(
                    s[i - 1],
                    s[j - 1],
                    "pumped symbols must differ at ({i}, {j})"
                );
                return Ok(PumpIndices {
                    i,
                    j,
                    word: word.clone(),
                });
            }
        }
    }
    // validates the word even when lin = 0
    mls.breaks_pp(word)?;
    Err(DecomposeError::NoPumpablePair(word.to_string()))
}

/// `A_{w,i,j}`: accepts every word except the extensions of
/// `σ_1…σ_{i−1} (σ_i…σ_{j−1})^l σ_j…σ_n` for `l ≥ 0`.
///
/// States are `q_0 … q_m` without `q_{j−1}` (`m = |w| − 1`), then `q+` and
/// `q-`. When `j = m + 1`, `q_j` stands for `q-`.
pub fn build_a_w_i_j(
    word: &Word,
    i: usize,
    j: usize,
    alphabet: &[char],
) -> Result<Dfa, DecomposeError> {
    let s = word.symbols();
    if let Some(&first) = s.first() {
        if s.iter().all(|&c| c == first) {
            return Err(DecomposeError::UnaryPowerWord(word.to_string()));
        }
    }
    let len = s.len();
    if !(1 <= i && i < j && j <= len) {
        return Err(DecomposeError::PumpRangeInvalid { i, j, len });
    }
    if s[i - 1] == s[j - 1] {
        return Err(DecomposeError::EqualPumpSymbols {
            i,
            j,
            symbol: s[i - 1],
        });
    }
    let encoded: Vec<usize> = s
        .iter()
        .enumerate()
        .map(|(position, &symbol)| {
            alphabet
                .iter()
                .position(|&c| c == symbol)
                .ok_or(DfaError::UnknownSymbol { position, symbol })
        })
        .collect::<Result<_, _>>()?;
    // 1-based position in the word
    let sym = |p: usize| encoded[p - 1];
    let m = len - 1;
    let skipped = j - 1;
    let chain: Vec<usize> = (0..=m).filter(|&k| k != skipped).collect();
    let plus = chain.len();
    let minus = plus + 1;
    let id = |k: usize| -> StateId {
        if k == m + 1 {
            minus
        } else {
            chain.iter().position(|&c| c == k).expect("state kept")
        }
    };
    let mut transitions = Vec::with_capacity(chain.len() + 2);
    for &k in &chain {
        let mut row = vec![plus; alphabet.len()];
        if k + 2 == j {
            row[sym(j - 1)] = id(i - 1);
            if k + 1 == i {
                row[sym(j)] = id(j);
            }
        } else if k + 1 == i {
            row[sym(i)] = id(i);
            row[sym(j)] = id(j);
        } else if k == m {
            row[sym(m + 1)] = minus;
        } else {
            row[sym(k + 1)] = id(k + 1);
        }
        transitions.push(row);
    }
    transitions.push(vec![plus; alphabet.len()]);
    transitions.push(vec![minus; alphabet.len()]);
    let mut names: Vec<String> = chain.iter().map(|k| format!("q{k}")).collect();
    names.push("q+".into());
    names.push("q-".into());
    let dfa = Dfa::new(alphabet.to_vec(), transitions, 0, 0..minus)?;
    Ok(dfa.with_state_names(names)?)
}

pub fn decompose_mls(dfa: &Dfa) -> Result<Decomposition, DecomposeError> {
    decompose_mls_with(dfa, PrimalityOptions::default(), DEFAULT_STATE_BUDGET)
}

/// Minimizes `dfa`, confirms it is composite and returns
/// `[A_1^+ … A_lin^+]` followed by one pump gadget per max-visiting word.
pub fn decompose_mls_with(
    dfa: &Dfa,
    options: PrimalityOptions,
    state_budget: usize,
) -> Result<Decomposition, DecomposeError> {
    let mls = MlsDfa::minimized(dfa)?;
    let source = mls.dfa();
    if decide_primality_mls_with(source, options)?.is_prime() {
        return Err(DecomposeError::IsPrime);
    }
    let mut parts = Vec::new();
    let mut provenance = Vec::new();
    for i in 1..=mls.lin() {
        parts.push(build_a_i_plus(source, i)?);
        provenance.push(Provenance::SkipState { i });
    }
    for word in mls.max_visiting_words() {
        let pick = choose_with(&mls, &word)?;
        parts.push(build_a_w_i_j(&word, pick.i, pick.j, source.alphabet())?);
        provenance.push(Provenance::PumpGadget {
            word,
            i: pick.i,
            j: pick.j,
        });
    }
    let verified = verify_decomposition_bounded(source, &parts, state_budget)?.verified;
    Ok(Decomposition {
        parts,
        provenance,
        verified,
    })
}

pub fn verify_decomposition(source: &Dfa, parts: &[Dfa]) -> Result<VerifyReport, DfaError> {
    verify_decomposition_bounded(source, parts, DEFAULT_STATE_BUDGET)
}

/// Checks that every part is strictly smaller (by index) than the source and
/// that the parts intersect to the source language.
pub fn verify_decomposition_bounded(
    source: &Dfa,
    parts: &[Dfa],
    state_budget: usize,
) -> Result<VerifyReport, DfaError> {
    if parts.iter().any(|p| p.alphabet() != source.alphabet()) {
        return Err(DfaError::AlphabetMismatch);
    }
    let source_index = index(source);
    let violations: Vec<PartViolation> = parts
        .iter()
        .enumerate()
        .filter_map(|(part, p)| {
            let index = index(p);
            (index >= source_index).then_some(PartViolation {
                part,
                index,
                source_index,
            })
        })
        .collect();
    let intersection = if parts.is_empty() {
        Dfa::trivial(source.alphabet().to_vec(), true)?
    } else {
        intersect_minimized(parts, state_budget)?
    };
    let separating = separating_word(&intersection, source)?;
    let languages_equal = separating.is_none();
    Ok(VerifyReport {
        verified: violations.is_empty() && languages_equal,
        source_index,
        violations,
        languages_equal,
        separating_word: separating,
    })
}

/// Minimal safety automaton for the words all of whose prefixes (including
/// the word itself) are accepted by `dfa`.
pub fn safetyfy(dfa: &Dfa) -> Dfa {
    let min = minimize(dfa);
    if !min.is_accepting(min.initial()) {
        return Dfa::trivial(min.alphabet().to_vec(), false).expect("alphabet already valid");
    }
    let kept = min.accepting_states();
    let sink = kept.len();
    let mut new_id = vec![sink; min.num_states()];
    for (id, &s) in kept.iter().enumerate() {
        new_id[s] = id;
    }
    let mut transitions: Vec<Vec<StateId>> = kept
        .iter()
        .map(|&s| min.transitions()[s].iter().map(|&t| new_id[t]).collect())
        .collect();
    transitions.push(vec![sink; min.alphabet().len()]);
    let accepting = (0..=sink).map(|s| s != sink).collect();
    let closed = Dfa::from_parts(
        min.alphabet().to_vec(),
        transitions,
        new_id[min.initial()],
        accepting,
    );
    minimize(&closed)
}
