//! Brute-force compositionality checks for tiny automata and seeded
//! generators of test instances.
//!
//! The brute-force check enumerates every candidate automaton below the
//! source's index, keeps those whose language contains the source language,
//! and intersects them. It shares no code with the pumping-based decision
//! apart from the basic language algebra.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{
    minimize, product_intersection_bounded, separating_word, DEFAULT_STATE_BUDGET,
};
use crate::classify::{classify, nonsink_heights};
use crate::dfa::{Dfa, DfaError, StateId, Word};
use crate::primality::{Method, PrimalityVerdict, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("restricted search is unsound here: {0}")]
    ModeUnsound(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("no valid instance after {attempts} attempts")]
    RetriesExhausted { attempts: usize },

    #[error(transparent)]
    Dfa(#[from] DfaError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    /// Every complete DFA up to the size bound.
    General,
    /// Safety DFAs with one accepting and one rejecting sink only.
    SafetyRestricted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub mode: OracleMode,
    /// Largest candidate size; clamped to `index − 1`. `None` means `index − 1`.
    pub size_bound: Option<usize>,
    /// Largest number of candidates to enumerate.
    pub candidate_budget: u64,
    /// Longest word the restricted search tries. `None` means `lin + 1`.
    pub word_length_bound: Option<usize>,
    pub state_budget: usize,
    pub jobs: usize,
}

impl OracleConfig {
    pub fn new(mode: OracleMode) -> Self {
        OracleConfig {
            mode,
            size_bound: None,
            candidate_budget: 20_000_000,
            word_length_bound: None,
            state_budget: DEFAULT_STATE_BUDGET,
            jobs: 1,
        }
    }

    pub fn with_size_bound(mut self, size_bound: usize) -> Self {
        self.size_bound = Some(size_bound);
        self
    }
}

/// Flat transition table of a candidate; `trans[s * k + a]`.
struct Raw {
    k: usize,
    initial: StateId,
    trans: Vec<StateId>,
    accepting: Vec<bool>,
}

impl Raw {
    fn into_dfa(self, alphabet: &[char]) -> Dfa {
        let transitions = self.trans.chunks(self.k).map(|c| c.to_vec()).collect();
        Dfa::from_parts(alphabet.to_vec(), transitions, self.initial, self.accepting)
    }

    /// Whether `L(a) ⊆ L(self)`.
    fn contains_language_of(&self, a: &Dfa) -> bool {
        let nb = self.accepting.len();
        let mut seen = vec![false; a.num_states() * nb];
        let mut stack = vec![(a.initial(), self.initial)];
        seen[a.initial() * nb + self.initial] = true;
        while let Some((p, q)) = stack.pop() {
            if a.is_accepting(p) && !self.accepting[q] {
                return false;
            }
            for sym in 0..self.k {
                let (p2, q2) = (a.next(p, sym), self.trans[q * self.k + sym]);
                let id = p2 * nb + q2;
                if !seen[id] {
                    seen[id] = true;
                    stack.push((p2, q2));
                }
            }
        }
        true
    }
}

fn count_general(k: usize, size_bound: usize) -> u128 {
    (1..=size_bound)
        .map(|n| (n as u128).pow((n * k) as u32) << n)
        .sum()
}

/// Decodes candidate `code` with `n` states: mixed radix, transitions first
/// (base `n`), then one accepting bit per state.
fn decode_general(n: usize, k: usize, mut code: u128) -> Raw {
    let mut trans = Vec::with_capacity(n * k);
    for _ in 0..n * k {
        trans.push((code % n as u128) as usize);
        code /= n as u128;
    }
    let accepting = (0..n).map(|s| code >> s & 1 == 1).collect();
    Raw {
        k,
        initial: 0,
        trans,
        accepting,
    }
}

/// Safety-shaped candidate with `k_states` states: non-sinks `0..k_states−2`
/// (all accepting), accepting sink, rejecting sink.
fn decode_safety(k_states: usize, k: usize, mut code: u128) -> Raw {
    let nonsinks = k_states - 2;
    let (plus, minus) = (nonsinks, nonsinks + 1);
    let mut trans = Vec::with_capacity(k_states * k);
    for _ in 0..nonsinks * k {
        trans.push((code % k_states as u128) as usize);
        code /= k_states as u128;
    }
    trans.extend(std::iter::repeat_n(plus, k));
    trans.extend(std::iter::repeat_n(minus, k));
    let accepting = (0..k_states).map(|s| s != minus).collect();
    Raw {
        k,
        initial: 0,
        trans,
        accepting,
    }
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs > 1 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool")
            .install(f)
    } else {
        f()
    }
}

fn filter_candidates<F>(total: u128, jobs: usize, decode: F, source: &Dfa) -> Vec<Dfa>
where
    F: Fn(u128) -> Raw + Sync,
{
    let alphabet = source.alphabet();
    let keep = |code: u64| {
        let raw = decode(code as u128);
        raw.contains_language_of(source)
            .then(|| raw.into_dfa(alphabet))
    };
    let total = total as u64;
    if jobs > 1 {
        with_pool(jobs, || {
            (0..total).into_par_iter().filter_map(keep).collect()
        })
    } else {
        (0..total).filter_map(keep).collect()
    }
}

fn check_budget(total: u128, budget: u64) -> Result<(), OracleError> {
    if total > budget as u128 {
        Err(OracleError::BudgetExceeded(format!(
            "{total} candidates exceed the candidate budget of {budget}"
        )))
    } else {
        Ok(())
    }
}

/// Minimal forms of all DFAs with at most `size_bound` states whose language
/// contains `L(min)`, deduplicated, in enumeration order.
fn general_candidates(
    min: &Dfa,
    size_bound: usize,
    cfg: &OracleConfig,
) -> Result<Vec<Dfa>, OracleError> {
    let k = min.alphabet().len();
    check_budget(count_general(k, size_bound), cfg.candidate_budget)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for n in 1..=size_bound {
        let total = (n as u128).pow((n * k) as u32) << n;
        for cand in filter_candidates(total, cfg.jobs, |c| decode_general(n, k, c), min) {
            let canon = minimize(&cand);
            if seen.insert(canon.clone()) {
                out.push(canon);
            }
        }
    }
    Ok(out)
}

fn safety_candidates(
    min: &Dfa,
    size_bound: usize,
    cfg: &OracleConfig,
) -> Result<Vec<Dfa>, OracleError> {
    let k = min.alphabet().len();
    if size_bound <= 2 {
        // the only such candidate with a reachable non-rejecting start is Σ*
        return Ok(vec![Dfa::trivial(min.alphabet().to_vec(), true)?]);
    }
    let total = (size_bound as u128).pow(((size_bound - 2) * k) as u32);
    check_budget(total, cfg.candidate_budget)?;
    Ok(filter_candidates(
        total,
        cfg.jobs,
        |c| decode_safety(size_bound, k, c),
        min,
    ))
}

/// Candidates that contain the language of `dfa` and are smaller than its
/// index, for the configured mode. Exposed for replay checks.
pub fn qualifying_candidates(dfa: &Dfa, cfg: &OracleConfig) -> Result<Vec<Dfa>, OracleError> {
    let min = minimize(dfa);
    let size_bound = effective_size_bound(&min, cfg);
    match cfg.mode {
        OracleMode::General => {
            general_guard(&min)?;
            general_candidates(&min, size_bound, cfg)
        }
        OracleMode::SafetyRestricted => {
            safety_guard(&min)?;
            safety_candidates(&min, size_bound, cfg)
        }
    }
}

fn effective_size_bound(min: &Dfa, cfg: &OracleConfig) -> usize {
    let below = min.num_states().saturating_sub(1);
    cfg.size_bound.map_or(below, |b| b.min(below))
}

fn general_guard(min: &Dfa) -> Result<(), OracleError> {
    if min.num_states() > 5 || min.alphabet().len() > 2 {
        return Err(OracleError::BudgetExceeded(format!(
            "general search needs index ≤ 5 and at most 2 symbols (index {}, {} symbols)",
            min.num_states(),
            min.alphabet().len()
        )));
    }
    Ok(())
}

fn safety_guard(min: &Dfa) -> Result<(), OracleError> {
    let report = classify(min);
    if !report.is_safety {
        return Err(OracleError::ModeUnsound(
            "language is not a safety language".into(),
        ));
    }
    if report.accepting_sink.is_none() {
        return Err(OracleError::ModeUnsound(
            "minimal automaton has no accepting sink".into(),
        ));
    }
    Ok(())
}

/// Intersects the candidates one by one, minimizing after each step, and
/// stops as soon as the source language is reached.
fn fold(min: &Dfa, candidates: &[Dfa], state_budget: usize) -> Result<Dfa, OracleError> {
    let mut acc = Dfa::trivial(min.alphabet().to_vec(), true)?;
    for cand in candidates {
        if acc == *min {
            break;
        }
        acc = minimize(&product_intersection_bounded(
            &[acc, cand.clone()],
            state_budget,
        )?);
    }
    Ok(acc)
}

fn verdict_from_fold(
    min: &Dfa,
    acc: &Dfa,
    method: Method,
) -> Result<PrimalityVerdict, OracleError> {
    match separating_word(acc, min)? {
        None => Ok(PrimalityVerdict::composite(method)),
        Some(w) => Ok(prime(w, method)),
    }
}

fn prime(witness: Word, method: Method) -> PrimalityVerdict {
    PrimalityVerdict {
        verdict: Verdict::Prime,
        witness: Some(witness),
        evidence: None,
        method,
        note: None,
    }
}

/// Length-lexicographically first word rejected by `min` (and with every
/// proper prefix accepted) that every candidate accepts.
fn restricted_witness(min: &Dfa, candidates: &[Dfa], max_len: usize) -> Option<Word> {
    let k = min.alphabet().len();
    let accept_sink = (0..min.num_states()).find(|&s| min.is_sink(s) && min.is_accepting(s));
    if !min.is_accepting(min.initial()) {
        return candidates
            .iter()
            .all(|c| c.is_accepting(c.initial()))
            .then(Word::empty);
    }
    let mut frontier: Vec<(StateId, Vec<usize>)> = vec![(min.initial(), Vec::new())];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (state, word) in &frontier {
            for sym in 0..k {
                let t = min.next(*state, sym);
                let mut w = word.clone();
                w.push(sym);
                if !min.is_accepting(t) {
                    if candidates.iter().all(|c| c.accepts_indices(&w)) {
                        return Some(min.decode(&w));
                    }
                } else if Some(t) != accept_sink {
                    next.push((t, w));
                }
            }
        }
        frontier = next;
    }
    None
}

/// Reference primality decision by exhaustive candidate search.
///
/// Automata of index 1 are reported prime by convention (nothing smaller
/// exists); the note field says so.
pub fn brute_force_composite(
    dfa: &Dfa,
    cfg: &OracleConfig,
) -> Result<PrimalityVerdict, OracleError> {
    let min = minimize(dfa);
    let method = match cfg.mode {
        OracleMode::General => Method::BruteGeneral,
        OracleMode::SafetyRestricted => Method::BruteSafety,
    };
    if min.num_states() == 1 {
        let empty = !min.is_accepting(0);
        return Ok(PrimalityVerdict {
            verdict: Verdict::Prime,
            witness: empty.then(Word::empty),
            evidence: None,
            method,
            note: Some("index 1: no smaller automaton exists, reported prime by convention".into()),
        });
    }
    let size_bound = effective_size_bound(&min, cfg);
    match cfg.mode {
        OracleMode::General => {
            general_guard(&min)?;
            let candidates = general_candidates(&min, size_bound, cfg)?;
            let acc = fold(&min, &candidates, cfg.state_budget)?;
            verdict_from_fold(&min, &acc, method)
        }
        OracleMode::SafetyRestricted => {
            safety_guard(&min)?;
            let candidates = safety_candidates(&min, size_bound, cfg)?;
            match nonsink_heights(&min) {
                Some(heights) => {
                    let bound = cfg.word_length_bound.unwrap_or(heights[min.initial()] + 1);
                    Ok(match restricted_witness(&min, &candidates, bound) {
                        Some(w) => prime(w, method),
                        None => PrimalityVerdict::composite(method),
                    })
                }
                // non-sink cycles: no length bound, intersect instead
                None => {
                    let acc = fold(&min, &candidates, cfg.state_budget)?;
                    verdict_from_fold(&min, &acc, method)
                }
            }
        }
    }
}

/// Parameters of the seeded instance generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenConfig {
    pub lin: usize,
    pub alphabet_size: usize,
    pub seed: u64,
    pub max_retries: usize,
}

impl GenConfig {
    pub fn new(lin: usize, alphabet_size: usize, seed: u64) -> Self {
        GenConfig {
            lin,
            alphabet_size,
            seed,
            max_retries: 1000,
        }
    }

    fn alphabet(&self) -> Result<Vec<char>, OracleError> {
        if !(2..=26).contains(&self.alphabet_size) {
            return Err(OracleError::InvalidConfig(format!(
                "alphabet size must be between 2 and 26, got {}",
                self.alphabet_size
            )));
        }
        Ok(('a'..='z').take(self.alphabet_size).collect())
    }

    fn validate(&self) -> Result<Vec<char>, OracleError> {
        if self.lin < 1 {
            return Err(OracleError::InvalidConfig("lin must be at least 1".into()));
        }
        self.alphabet()
    }
}

fn chain_names(lin: usize) -> Vec<String> {
    let mut names: Vec<String> = (0..=lin).map(|i| format!("q{i}")).collect();
    names.push("q+".into());
    names.push("q-".into());
    names
}

/// Chain `q_0 … q_lin` plus sinks; every symbol goes strictly forward along
/// the chain or into a sink, with one symbol forced to the next chain state
/// and one symbol of `q_lin` forced into the rejecting sink.
fn random_chain(rng: &mut ChaCha8Rng, lin: usize, k: usize) -> Vec<Vec<StateId>> {
    let (plus, minus) = (lin + 1, lin + 2);
    let mut trans = Vec::with_capacity(lin + 3);
    for i in 0..=lin {
        let targets: Vec<StateId> = ((i + 1)..=lin).chain([plus, minus]).collect();
        trans.push(
            (0..k)
                .map(|_| targets[rng.gen_range(0..targets.len())])
                .collect::<Vec<_>>(),
        );
    }
    for i in 1..=lin {
        let forced = rng.gen_range(0..k);
        trans[i - 1][forced] = i;
    }
    let forced = rng.gen_range(0..k);
    trans[lin][forced] = minus;
    trans.push(vec![plus; k]);
    trans.push(vec![minus; k]);
    trans
}

/// Random minimal linear safety ADFA+ with the requested `lin`.
pub fn generate_mls(cfg: GenConfig) -> Result<Dfa, OracleError> {
    let alphabet = cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let attempts = cfg.max_retries.max(1);
    for _ in 0..attempts {
        let trans = random_chain(&mut rng, cfg.lin, alphabet.len());
        let dfa = Dfa::new(alphabet.clone(), trans, 0, 0..=cfg.lin + 1)?;
        if minimize(&dfa).num_states() == cfg.lin + 3 {
            return Ok(dfa.with_state_names(chain_names(cfg.lin))?);
        }
    }
    Err(OracleError::RetriesExhausted { attempts })
}

/// Random minimal ADFA+ (not necessarily safety).
///
/// With `linear`, the non-sinks form a chain of `cfg.lin + 1` states before
/// minimization. Otherwise `cfg.lin + 2` non-sinks get random forward edges
/// and the result is required to be non-linear. Acceptance of non-sinks is
/// random in both cases; the returned automaton is minimized.
pub fn generate_minimal_adfa_plus(cfg: GenConfig, linear: bool) -> Result<Dfa, OracleError> {
    let alphabet = cfg.validate()?;
    let k = alphabet.len();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let attempts = cfg.max_retries.max(1);
    let n = if linear { cfg.lin + 1 } else { cfg.lin + 2 };
    let (plus, minus) = (n, n + 1);
    for _ in 0..attempts {
        let trans = if linear {
            random_chain(&mut rng, cfg.lin, k)
        } else {
            let mut trans: Vec<Vec<StateId>> = (0..n)
                .map(|i| {
                    let targets: Vec<StateId> = ((i + 1)..n).chain([plus, minus]).collect();
                    (0..k)
                        .map(|_| targets[rng.gen_range(0..targets.len())])
                        .collect()
                })
                .collect();
            trans.push(vec![plus; k]);
            trans.push(vec![minus; k]);
            trans
        };
        let accepting: Vec<StateId> = (0..n).filter(|_| rng.gen_bool(0.7)).chain([plus]).collect();
        let dfa = minimize(&Dfa::new(alphabet.clone(), trans, 0, accepting)?);
        let report = classify(&dfa);
        if report.is_adfa_plus && report.is_linear == linear {
            return Ok(dfa);
        }
    }
    Err(OracleError::RetriesExhausted { attempts })
}

/// Uniformly random complete DFA with initial state 0.
pub fn random_dfa(num_states: usize, alphabet_size: usize, seed: u64) -> Result<Dfa, OracleError> {
    if num_states == 0 {
        return Err(OracleError::InvalidConfig("need at least one state".into()));
    }
    let alphabet = GenConfig::new(1, alphabet_size, seed).alphabet()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trans = (0..num_states)
        .map(|_| {
            (0..alphabet_size)
                .map(|_| rng.gen_range(0..num_states))
                .collect()
        })
        .collect();
    let accepting: Vec<StateId> = (0..num_states).filter(|_| rng.gen_bool(0.5)).collect();
    Ok(Dfa::new(alphabet, trans, 0, accepting)?)
}
