//! Primality of minimal linear safety ADFA+s through pumpings of their
//! max-visiting words.
//!
//! A max-visiting word walks the whole non-sink chain and then falls into the
//! rejecting sink. The automaton is composite exactly when every such word
//! has a factor whose repetitions (including zero) all stay rejected; a word
//! without such a factor is a primality witness.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::algebra::minimize;
use crate::classify::{classify, nonsink_heights};
use crate::dfa::{Dfa, DfaError, StateId, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PrimalityError {
    #[error("automaton is not a minimal linear safety ADFA+")]
    NotMlsAdfaPlus,

    #[error("pump indices i={i}, j={j} out of range for a word of length {len}")]
    IndexOutOfRange { i: usize, j: usize, len: usize },

    #[error("word {0:?} is not a max-visiting word of the automaton")]
    WordNotMaxVisiting(String),

    #[error("max-visiting word budget of {budget} exhausted before a verdict")]
    Inconclusive { budget: usize },

    #[error(transparent)]
    Dfa(#[from] DfaError),
}

/// A pump descriptor `P[w; i,j; l]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pumping {
    pub word: Word,
    pub i: usize,
    pub j: usize,
    pub l: usize,
}

impl Pumping {
    pub fn new(word: Word, i: usize, j: usize, l: usize) -> Result<Self, PrimalityError> {
        check_pump_range(word.len(), i, j)?;
        Ok(Pumping { word, i, j, l })
    }

    pub fn expand(&self) -> Word {
        pump(&self.word, self.i, self.j, self.l).expect("range checked at construction")
    }
}

fn check_pump_range(len: usize, i: usize, j: usize) -> Result<(), PrimalityError> {
    if 1 <= i && i < j && j <= len + 1 {
        Ok(())
    } else {
        Err(PrimalityError::IndexOutOfRange { i, j, len })
    }
}

/// `σ_1…σ_{i−1} (σ_i…σ_{j−1})^l σ_j…σ_n`, with 1-based indices.
pub fn pump(word: &Word, i: usize, j: usize, l: usize) -> Result<Word, PrimalityError> {
    check_pump_range(word.len(), i, j)?;
    let s = word.symbols();
    let (x, rest) = s.split_at(i - 1);
    let (y, z) = rest.split_at(j - i);
    let mut out = Vec::with_capacity(x.len() + y.len() * l + z.len());
    out.extend_from_slice(x);
    for _ in 0..l {
        out.extend_from_slice(y);
    }
    out.extend_from_slice(z);
    Ok(Word::new(out))
}

/// Smallest `l` with `(i−1) + l(j−i) ≥ lin+1`. From that repetition count on,
/// a run on the pumped prefix is necessarily inside a sink.
pub fn l_prime(i: usize, j: usize, lin: usize) -> Result<usize, PrimalityError> {
    if !(1 <= i && i < j && j <= lin + 1) {
        return Err(PrimalityError::IndexOutOfRange { i, j, len: lin + 1 });
    }
    let need = lin + 1 - (i - 1);
    Ok(need.div_ceil(j - i))
}

/// A minimal linear safety ADFA+ together with the data the primality
/// machinery needs.
#[derive(Debug, Clone)]
pub struct MlsDfa {
    dfa: Dfa,
    lin: usize,
    accepting_sink: StateId,
    rejecting_sink: StateId,
    /// Longest non-sink path from each state.
    heights: Vec<usize>,
}

impl MlsDfa {
    /// Checks the class of `dfa` as given (it must already be minimal).
    pub fn new(dfa: &Dfa) -> Result<Self, PrimalityError> {
        let report = classify(dfa);
        if !report.is_mls_adfa_plus {
            return Err(PrimalityError::NotMlsAdfaPlus);
        }
        let heights = nonsink_heights(dfa).ok_or(PrimalityError::NotMlsAdfaPlus)?;
        Ok(MlsDfa {
            dfa: dfa.clone(),
            lin: report.lin.ok_or(PrimalityError::NotMlsAdfaPlus)?,
            accepting_sink: report
                .accepting_sink
                .ok_or(PrimalityError::NotMlsAdfaPlus)?,
            rejecting_sink: report
                .rejecting_sink
                .ok_or(PrimalityError::NotMlsAdfaPlus)?,
            heights,
        })
    }

    /// Minimizes first, then checks the class.
    pub fn minimized(dfa: &Dfa) -> Result<Self, PrimalityError> {
        MlsDfa::new(&minimize(dfa))
    }

    pub fn dfa(&self) -> &Dfa {
        &self.dfa
    }

    pub fn lin(&self) -> usize {
        self.lin
    }

    pub fn accepting_sink(&self) -> StateId {
        self.accepting_sink
    }

    pub fn rejecting_sink(&self) -> StateId {
        self.rejecting_sink
    }

    /// Max-visiting words in lexicographic order (alphabet order).
    pub fn max_visiting_words(&self) -> MaxVisitingWords<'_> {
        MaxVisitingWords {
            mls: self,
            stack: vec![(self.dfa.initial(), 0)],
            path: Vec::new(),
        }
    }

    /// Whether an encoded word is a max-visiting word.
    pub fn is_max_visiting(&self, symbols: &[usize]) -> bool {
        if symbols.len() != self.lin + 1 {
            return false;
        }
        let prefix_end = self.dfa.run_indices(&symbols[..self.lin]);
        !self.dfa.is_sink(prefix_end)
            && self.dfa.next(prefix_end, symbols[self.lin]) == self.rejecting_sink
    }

    fn encode_max_visiting(&self, word: &Word) -> Result<Vec<usize>, PrimalityError> {
        let symbols = self.dfa.encode(word)?;
        if self.is_max_visiting(&symbols) {
            Ok(symbols)
        } else {
            Err(PrimalityError::WordNotMaxVisiting(word.to_string()))
        }
    }

    /// Smallest `l ≤ l'` whose pumping is accepted, if any.
    fn smallest_accepting_l(&self, symbols: &[usize], i: usize, j: usize) -> Option<usize> {
        let bound = l_prime(i, j, self.lin).expect("pair within range");
        let (x, rest) = symbols.split_at(i - 1);
        let (y, z) = rest.split_at(j - i);
        let mut state = self.dfa.run_indices(x);
        for l in 0..=bound {
            if state == self.rejecting_sink {
                return None;
            }
            if state == self.accepting_sink || self.dfa.is_accepting(self.dfa.run_from(state, z)) {
                return Some(l);
            }
            state = self.dfa.run_from(state, y);
        }
        None
    }

    fn pp_holds_encoded(&self, symbols: &[usize], i: usize, j: usize) -> bool {
        self.smallest_accepting_l(symbols, i, j).is_none()
    }

    fn breaks_pp_encoded(&self, symbols: &[usize]) -> Option<Evidence> {
        let top = self.lin + 1;
        let mut evidence = BTreeMap::new();
        for i in 1..top {
            for j in (i + 1)..=top {
                evidence.insert((i, j), self.smallest_accepting_l(symbols, i, j)?);
            }
        }
        Some(Evidence(evidence))
    }

    pub fn pp_condition_holds(
        &self,
        word: &Word,
        i: usize,
        j: usize,
    ) -> Result<bool, PrimalityError> {
        let symbols = self.encode_max_visiting(word)?;
        l_prime(i, j, self.lin)?;
        Ok(self.pp_holds_encoded(&symbols, i, j))
    }

    pub fn breaks_pp(&self, word: &Word) -> Result<Option<Evidence>, PrimalityError> {
        let symbols = self.encode_max_visiting(word)?;
        Ok(self.breaks_pp_encoded(&symbols))
    }
}

/// Depth-first enumeration of the max-visiting words. Branches that cannot
/// stay outside the sinks for `lin` steps are pruned, so the cost is
/// proportional to the output.
pub struct MaxVisitingWords<'a> {
    mls: &'a MlsDfa,
    /// `(state, next symbol to try)` per depth.
    stack: Vec<(StateId, usize)>,
    path: Vec<usize>,
}

impl MaxVisitingWords<'_> {
    fn next_encoded(&mut self) -> Option<Vec<usize>> {
        let dfa = &self.mls.dfa;
        let k = dfa.alphabet().len();
        let lin = self.mls.lin;
        loop {
            let depth = self.path.len();
            let (state, sym) = *self.stack.last()?;
            if sym == k {
                self.stack.pop();
                if self.stack.is_empty() {
                    return None;
                }
                self.path.pop();
                continue;
            }
            self.stack.last_mut().expect("non-empty").1 += 1;
            let target = dfa.next(state, sym);
            if depth == lin {
                if target == self.mls.rejecting_sink {
                    let mut word = self.path.clone();
                    word.push(sym);
                    return Some(word);
                }
            } else if !dfa.is_sink(target) && depth + 1 + self.mls.heights[target] >= lin {
                self.stack.push((target, 0));
                self.path.push(sym);
            }
        }
    }
}

impl Iterator for MaxVisitingWords<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        self.next_encoded().map(|s| self.mls.dfa.decode(&s))
    }
}

/// Max-visiting words of `dfa`, which must be a minimal linear safety ADFA+.
pub fn max_visiting_words(dfa: &Dfa) -> Result<Vec<Word>, PrimalityError> {
    Ok(MlsDfa::new(dfa)?.max_visiting_words().collect())
}

pub fn pp_condition_holds(
    dfa: &Dfa,
    word: &Word,
    i: usize,
    j: usize,
) -> Result<bool, PrimalityError> {
    MlsDfa::new(dfa)?.pp_condition_holds(word, i, j)
}

pub fn breaks_pp(dfa: &Dfa, word: &Word) -> Result<Option<Evidence>, PrimalityError> {
    MlsDfa::new(dfa)?.breaks_pp(word)
}

/// Smallest accepted repetition count for each pump pair `(i, j)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Evidence(pub BTreeMap<(usize, usize), usize>);

impl Evidence {
    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        self.0.get(&(i, j)).copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }
}

impl FromIterator<((usize, usize), usize)> for Evidence {
    fn from_iter<T: IntoIterator<Item = ((usize, usize), usize)>>(iter: T) -> Self {
        Evidence(iter.into_iter().collect())
    }
}

#[derive(Serialize)]
struct EvidenceEntry {
    i: usize,
    j: usize,
    l: usize,
}

impl Serialize for Evidence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter().map(|((i, j), l)| EvidenceEntry { i, j, l }))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Prime,
    Composite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Mls,
    BruteGeneral,
    BruteSafety,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimalityVerdict {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Word>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub evidence: Option<Evidence>,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl PrimalityVerdict {
    pub fn is_prime(&self) -> bool {
        self.verdict == Verdict::Prime
    }

    pub fn composite(method: Method) -> Self {
        PrimalityVerdict {
            verdict: Verdict::Composite,
            witness: None,
            evidence: None,
            method,
            note: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimalityOptions {
    /// Give up with `Inconclusive` after this many max-visiting words.
    pub max_words: Option<usize>,
    /// Worker threads for the per-word checks; 1 runs sequentially.
    pub jobs: usize,
}

impl Default for PrimalityOptions {
    fn default() -> Self {
        PrimalityOptions {
            max_words: None,
            jobs: 1,
        }
    }
}

const BATCH: usize = 256;

pub fn decide_primality_mls(dfa: &Dfa) -> Result<PrimalityVerdict, PrimalityError> {
    decide_primality_mls_with(dfa, PrimalityOptions::default())
}

/// Minimizes `dfa` and decides its primality. The witness, if any, is the
/// lexicographically least max-visiting word without a rejecting pump pair.
pub fn decide_primality_mls_with(
    dfa: &Dfa,
    options: PrimalityOptions,
) -> Result<PrimalityVerdict, PrimalityError> {
    let mls = MlsDfa::minimized(dfa)?;
    let found = if options.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| first_breaking(&mls, options.max_words, true))
    } else {
        first_breaking(&mls, options.max_words, false)
    }?;
    Ok(match found {
        Some((symbols, evidence)) => PrimalityVerdict {
            verdict: Verdict::Prime,
            witness: Some(mls.dfa.decode(&symbols)),
            evidence: Some(evidence),
            method: Method::Mls,
            note: None,
        },
        None => PrimalityVerdict::composite(Method::Mls),
    })
}

type Found = Option<(Vec<usize>, Evidence)>;

fn first_breaking(
    mls: &MlsDfa,
    max_words: Option<usize>,
    parallel: bool,
) -> Result<Found, PrimalityError> {
    let mut words = mls.max_visiting_words();
    let mut seen = 0usize;
    loop {
        let mut batch = Vec::with_capacity(BATCH);
        while batch.len() < BATCH {
            match words.next_encoded() {
                Some(w) => batch.push(w),
                None => break,
            }
        }
        if batch.is_empty() {
            return Ok(None);
        }
        let mut over_budget = false;
        if let Some(budget) = max_words {
            let room = budget.saturating_sub(seen);
            if batch.len() > room {
                batch.truncate(room);
                over_budget = true;
            }
        }
        seen += batch.len();
        let hit = if parallel {
            batch
                .par_iter()
                .find_map_first(|w| mls.breaks_pp_encoded(w).map(|e| (w.clone(), e)))
        } else {
            batch
                .iter()
                .find_map(|w| mls.breaks_pp_encoded(w).map(|e| (w.clone(), e)))
        };
        if hit.is_some() {
            return Ok(hit);
        }
        if over_budget {
            return Err(PrimalityError::Inconclusive {
                budget: max_words.unwrap_or(0),
            });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn evidence(pairs: &[((usize, usize), usize)]) -> Evidence {
        pairs.iter().copied().collect()
    }

    #[test]
    fn pump_examples() {
        let w = Word::from("abb");
        assert_eq!(pump(&w, 1, 2, 0).unwrap(), Word::from("bb"));
        assert_eq!(pump(&w, 2, 3, 1).unwrap(), w);
        assert_eq!(pump(&w, 2, 3, 3).unwrap(), Word::from("abbbb"));
        assert_eq!(pump(&w, 1, 4, 2).unwrap(), Word::from("abbabb"));
        assert!(matches!(
            pump(&w, 2, 2, 0),
            Err(PrimalityError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            pump(&w, 0, 2, 0),
            Err(PrimalityError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            pump(&w, 1, 5, 0),
            Err(PrimalityError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn pumping_descriptor_expands() {
        let p = Pumping::new("abb".into(), 1, 2, 0).unwrap();
        assert_eq!(p.expand(), Word::from("bb"));
        assert!(Pumping::new("ab".into(), 2, 4, 1).is_err());
    }

    #[test]
    fn l_prime_examples() {
        assert_eq!(l_prime(1, 2, 2).unwrap(), 3);
        assert_eq!(l_prime(2, 3, 2).unwrap(), 2);
        assert_eq!(l_prime(1, 4, 3).unwrap(), 2);
        assert!(l_prime(1, 4, 2).is_err());
        assert!(l_prime(2, 2, 2).is_err());
    }

    #[test]
    fn l_prime_is_the_minimum() {
        for lin in 1..8 {
            for i in 1..=lin {
                for j in (i + 1)..=(lin + 1) {
                    let l = l_prime(i, j, lin).unwrap();
                    assert!((i - 1) + l * (j - i) > lin);
                    assert!(l == 0 || (i - 1) + (l - 1) * (j - i) <= lin);
                }
            }
        }
    }

    #[test]
    fn abb_max_visiting_words() {
        assert_eq!(
            max_visiting_words(&fixtures::abb_composite()).unwrap(),
            vec![Word::from("abb")]
        );
        assert_eq!(
            max_visiting_words(&fixtures::abb_prime()).unwrap(),
            vec![Word::from("abb")]
        );
        assert_eq!(
            max_visiting_words(&fixtures::universal_ab()).unwrap_err(),
            PrimalityError::NotMlsAdfaPlus
        );
    }

    #[test]
    fn pp_condition_examples() {
        let w = Word::from("abb");
        assert!(pp_condition_holds(&fixtures::abb_composite(), &w, 1, 2).unwrap());
        assert!(!pp_condition_holds(&fixtures::abb_composite(), &w, 2, 3).unwrap());
        assert!(!pp_condition_holds(&fixtures::abb_prime(), &w, 1, 2).unwrap());
        assert_eq!(
            pp_condition_holds(&fixtures::abb_composite(), &"ab".into(), 1, 2).unwrap_err(),
            PrimalityError::WordNotMaxVisiting("ab".into())
        );
        assert!(matches!(
            pp_condition_holds(&fixtures::abb_composite(), &w, 1, 4).unwrap_err(),
            PrimalityError::IndexOutOfRange { .. }
        ));
    }

    #[test]
    fn breaks_pp_examples() {
        let w = Word::from("abb");
        assert_eq!(
            breaks_pp(&fixtures::abb_prime(), &w).unwrap(),
            Some(evidence(&[((1, 2), 0), ((1, 3), 0), ((2, 3), 0)]))
        );
        assert_eq!(breaks_pp(&fixtures::abb_composite(), &w).unwrap(), None);
    }

    #[test]
    fn abb_verdicts() {
        let a = decide_primality_mls(&fixtures::abb_composite()).unwrap();
        assert_eq!(a, PrimalityVerdict::composite(Method::Mls));
        let b = decide_primality_mls(&fixtures::abb_prime()).unwrap();
        assert_eq!(b.verdict, Verdict::Prime);
        assert_eq!(b.witness, Some(Word::from("abb")));
        assert_eq!(
            b.evidence,
            Some(evidence(&[((1, 2), 0), ((1, 3), 0), ((2, 3), 0)]))
        );
    }

    #[test]
    fn parallel_and_budget_options() {
        let opts = PrimalityOptions {
            max_words: None,
            jobs: 3,
        };
        let b = decide_primality_mls_with(&fixtures::abb_prime(), opts).unwrap();
        assert_eq!(b.witness, Some(Word::from("abb")));
        let none = PrimalityOptions {
            max_words: Some(0),
            jobs: 1,
        };
        assert_eq!(
            decide_primality_mls_with(&fixtures::abb_composite(), none).unwrap_err(),
            PrimalityError::Inconclusive { budget: 0 }
        );
        let enough = PrimalityOptions {
            max_words: Some(1),
            jobs: 1,
        };
        assert!(
            !decide_primality_mls_with(&fixtures::abb_composite(), enough)
                .unwrap()
                .is_prime()
        );
    }

    #[test]
    fn trivial_chain_is_prime() {
        // q0 --a--> q-, q0 --b--> q+ ; lin = 0
        let dfa = Dfa::new(
            vec!['a', 'b'],
            vec![vec![2, 1], vec![1, 1], vec![2, 2]],
            0,
            [0, 1],
        )
        .unwrap();
        let v = decide_primality_mls(&dfa).unwrap();
        assert_eq!(v.verdict, Verdict::Prime);
        assert_eq!(v.witness, Some(Word::from("a")));
        assert_eq!(v.evidence, Some(Evidence::default()));
    }

    #[test]
    fn verdict_json_shape() {
        let b = decide_primality_mls(&fixtures::abb_prime()).unwrap();
        assert_eq!(
            serde_json::to_string(&b).unwrap(),
            r#"{"verdict":"Prime","witness":"abb","evidence":[{"i":1,"j":2,"l":0},{"i":1,"j":3,"l":0},{"i":2,"j":3,"l":0}],"method":"mls"}"#
        );
    }
}
