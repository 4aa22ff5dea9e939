//! CNF satisfiability reduced to primality: DIMACS input, normalization to
//! an element grid, and the CNF automaton over `{0, 1, c, d}`.
//!
//! The automaton reads an assignment string `u ∈ {0,1}^r`, then either `d`
//! followed by a run of `c`s, or further copies of `u` that walk one clause
//! row each. Its max-visiting words are exactly `u d c^κ`, and `u` breaks the
//! pumping condition iff the assignment it encodes satisfies the formula.

use std::fmt;

use serde::Serialize;

use crate::dfa::{Dfa, DfaError, StateId, Word};
use crate::primality::{decide_primality_mls_with, PrimalityError, PrimalityOptions};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error("line {line}: malformed header: {text:?}")]
    MalformedHeader { line: usize, text: String },

    #[error("missing `p cnf <vars> <clauses>` header")]
    MissingHeader,

    #[error("line {line}: token {token:?} is not an integer literal")]
    InvalidToken { line: usize, token: String },

    #[error("literal {literal} out of range for {num_vars} variables")]
    LiteralOutOfRange { literal: i64, num_vars: usize },

    #[error("header declares {expected} clauses but {found} were given")]
    ClauseCountMismatch { expected: usize, found: usize },

    #[error("formula has clauses but no variables")]
    NoVariables,

    #[error("index {index} out of range (valid: 1..={max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("assignment has {found} bits, expected {expected}")]
    AssignmentLength { expected: usize, found: usize },

    #[error("variable {var} has no value in an assignment of {len} bits")]
    VariableOutOfRange { var: usize, len: usize },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error(transparent)]
    Primality(#[from] PrimalityError),

    #[error(transparent)]
    Dfa(#[from] DfaError),
}

/// A CNF formula over variables `1..=num_vars`; literals are signed indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i64>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i64>>) -> Result<Self, ReductionError> {
        for &literal in clauses.iter().flatten() {
            if literal == 0 || literal.unsigned_abs() as usize > num_vars {
                return Err(ReductionError::LiteralOutOfRange { literal, num_vars });
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i64>] {
        &self.clauses
    }

    /// DIMACS text for this formula.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&format!("{lit} "));
            }
            out.push_str("0\n");
        }
        out
    }
}

pub fn parse_dimacs(text: &str) -> Result<CnfFormula, ReductionError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('%') {
            break;
        }
        if trimmed.starts_with('p') {
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                ["p", "cnf", v, c] => v.parse().ok().zip(c.parse().ok()),
                _ => None,
            };
            match (parsed, header) {
                (Some(h), None) => header = Some(h),
                _ => {
                    return Err(ReductionError::MalformedHeader {
                        line,
                        text: trimmed.to_string(),
                    })
                }
            }
            continue;
        }
        let (num_vars, _) = header.ok_or(ReductionError::MissingHeader)?;
        for token in trimmed.split_whitespace() {
            let literal: i64 = token.parse().map_err(|_| ReductionError::InvalidToken {
                line,
                token: token.to_string(),
            })?;
            if literal == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if literal.unsigned_abs() as usize > num_vars {
                return Err(ReductionError::LiteralOutOfRange { literal, num_vars });
            } else {
                current.push(literal);
            }
        }
    }
    let (num_vars, expected) = header.ok_or(ReductionError::MissingHeader)?;
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != expected {
        return Err(ReductionError::ClauseCountMismatch {
            expected,
            found: clauses.len(),
        });
    }
    CnfFormula::new(num_vars, clauses)
}

/// One cell `e_i^k` of the element grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Element {
    Pos(usize),
    Neg(usize),
    Bot,
}

impl Element {
    /// The bit that makes this literal true, if it is a literal.
    pub fn satisfying_bit(self) -> Option<bool> {
        match self {
            Element::Pos(_) => Some(true),
            Element::Neg(_) => Some(false),
            Element::Bot => None,
        }
    }
}

/// Formula as an `s × r` grid: row `k` holds, in column `i`, the literal of
/// variable `i+1` occurring in clause `k`, or `Bot`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalizedCnf {
    pub r: usize,
    pub s: usize,
    pub grid: Vec<Vec<Element>>,
    pub kappa: usize,
}

impl NormalizedCnf {
    /// `e_i^k` with 1-based `i` and `k`.
    pub fn element(&self, i: usize, k: usize) -> Element {
        self.grid[k - 1][i - 1]
    }

    pub fn states(&self) -> CnfStates {
        CnfStates {
            r: self.r,
            s: self.s,
        }
    }

    /// Whether assignment bits satisfy clause `k` (1-based).
    pub fn clause_satisfied(&self, bits: &[bool], k: usize) -> bool {
        self.grid[k - 1]
            .iter()
            .zip(bits)
            .any(|(e, &b)| e.satisfying_bit() == Some(b))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normalized {
    Cnf(NormalizedCnf),
    TriviallySat,
}

/// Removes duplicate literals and tautological clauses and lays the rest
/// out on the element grid. An empty clause becomes an all-`Bot` row.
pub fn normalize(f: &CnfFormula) -> Result<Normalized, ReductionError> {
    let r = f.num_vars;
    let mut grid = Vec::new();
    for clause in &f.clauses {
        let mut row = vec![Element::Bot; r];
        let mut tautology = false;
        for &lit in clause {
            let var = lit.unsigned_abs() as usize;
            let e = if lit > 0 {
                Element::Pos(var)
            } else {
                Element::Neg(var)
            };
            match row[var - 1] {
                Element::Bot => row[var - 1] = e,
                prev if prev == e => {}
                _ => tautology = true,
            }
        }
        if !tautology {
            grid.push(row);
        }
    }
    if grid.is_empty() {
        return Ok(Normalized::TriviallySat);
    }
    if r == 0 {
        return Err(ReductionError::NoVariables);
    }
    let s = grid.len();
    Ok(Normalized::Cnf(NormalizedCnf {
        r,
        s,
        grid,
        kappa: s * (2 * r + 1) + 1,
    }))
}

/// State numbering of the CNF automaton: `p_0 … p_r`, `p_c^0`, then per
/// clause row `p_1^k, p̂_1^k, …, p_r^k, p̂_r^k, p_c^k`, then `p_+`, `p_-`.
/// This is the order in which a max-visiting run meets the states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CnfStates {
    r: usize,
    s: usize,
}

impl CnfStates {
    pub fn p(&self, i: usize) -> StateId {
        i
    }

    /// `p_c^k` for `0 ≤ k ≤ s`.
    pub fn pc(&self, k: usize) -> StateId {
        if k == 0 {
            self.r + 1
        } else {
            self.row_base(k) + 2 * self.r
        }
    }

    fn row_base(&self, k: usize) -> StateId {
        self.r + 2 + (k - 1) * (2 * self.r + 1)
    }

    /// `p_i^k` for `1 ≤ i ≤ r`, `1 ≤ k ≤ s`.
    pub fn row(&self, i: usize, k: usize) -> StateId {
        self.row_base(k) + 2 * (i - 1)
    }

    /// `p̂_i^k`; `p̂_r^0` is `p_r`.
    pub fn hat(&self, i: usize, k: usize) -> StateId {
        if k == 0 {
            debug_assert_eq!(i, self.r);
            self.p(self.r)
        } else {
            self.row(i, k) + 1
        }
    }

    pub fn plus(&self) -> StateId {
        self.r + 2 + self.s * (2 * self.r + 1)
    }

    pub fn minus(&self) -> StateId {
        self.plus() + 1
    }

    pub fn count(&self) -> usize {
        self.minus() + 1
    }
}

const ZERO: usize = 0;
const ONE: usize = 1;
const C: usize = 2;
const D: usize = 3;

/// Builds the CNF automaton over the alphabet `0, 1, c, d`.
pub fn build_cnf_dfa(n: &NormalizedCnf) -> Dfa {
    let (r, s) = (n.r, n.s);
    let st = n.states();
    let mut delta = vec![[0usize; 4]; st.count()];
    let mut names = vec![String::new(); st.count()];

    // first state of row k on bit b: hatted iff b makes e_1^k true
    let entry = |k: usize, bit: bool| {
        if n.element(1, k).satisfying_bit() == Some(bit) {
            st.hat(1, k)
        } else {
            st.row(1, k)
        }
    };

    for i in 0..=r {
        let q = st.p(i);
        names[q] = format!("p_{i}");
        for (sym, bit) in [(ZERO, false), (ONE, true)] {
            delta[q][sym] = if i < r { st.p(i + 1) } else { entry(1, bit) };
        }
        delta[q][C] = st.plus();
        delta[q][D] = if i == 0 {
            st.minus()
        } else if i < r {
            st.plus()
        } else {
            st.pc(0)
        };
    }

    for k in 1..=s {
        for i in 1..=r {
            let q = st.row(i, k);
            names[q] = format!("p_{i}^{k}");
            for (sym, bit) in [(ZERO, false), (ONE, true)] {
                delta[q][sym] = if i == r {
                    st.minus()
                } else if n.element(i + 1, k).satisfying_bit() == Some(bit) {
                    st.hat(i + 1, k)
                } else {
                    st.row(i + 1, k)
                };
            }
            delta[q][C] = st.hat(i, k);
            delta[q][D] = st.minus();

            let h = st.hat(i, k);
            names[h] = format!("p^_{i}^{k}");
            for (sym, bit) in [(ZERO, false), (ONE, true)] {
                delta[h][sym] = if i < r {
                    st.hat(i + 1, k)
                } else if k < s {
                    entry(k + 1, bit)
                } else {
                    st.plus()
                };
            }
            delta[h][C] = if i < r { st.row(i + 1, k) } else { st.pc(k) };
            delta[h][D] = st.minus();
        }
    }

    for k in 0..=s {
        let q = st.pc(k);
        names[q] = format!("p_c^{k}");
        let other = if k < s { st.minus() } else { st.plus() };
        delta[q] = [other, other, other, other];
        delta[q][C] = if k < s { st.row(1, k + 1) } else { st.minus() };
    }

    delta[st.plus()] = [st.plus(); 4];
    delta[st.minus()] = [st.minus(); 4];
    names[st.plus()] = "p_+".into();
    names[st.minus()] = "p_-".into();

    let transitions = delta.iter().map(|row| row.to_vec()).collect();
    let accepting = (0..st.count()).filter(|&q| q != st.minus());
    let dfa = Dfa::new(vec!['0', '1', 'c', 'd'], transitions, 0, accepting)
        .expect("construction is total")
        .with_state_names(names)
        .expect("one name per state");

    // κ is the c-suffix of a max-visiting word u d c^κ of length lin + 1
    let lin = crate::classify::nonsink_heights(&dfa).expect("acyclic")[0];
    assert_eq!(lin, dfa.num_states() - 3, "chain covers every non-sink");
    assert_eq!(n.kappa, lin - r, "kappa matches the chain length");
    dfa
}

/// A truth assignment; bit `i` is the value of variable `i+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    pub bits: Vec<bool>,
}

impl Assignment {
    pub fn new(bits: Vec<bool>) -> Self {
        Assignment { bits }
    }

    pub fn zeros(r: usize) -> Self {
        Assignment {
            bits: vec![false; r],
        }
    }

    /// Every assignment of `r` variables, in binary counting order.
    pub fn all(r: usize) -> impl Iterator<Item = Assignment> {
        (0u64..1 << r).map(move |x| Assignment {
            bits: (0..r).map(|i| x >> (r - 1 - i) & 1 == 1).collect(),
        })
    }

    /// The assignment string `u` over `{0, 1}`.
    pub fn to_word(&self) -> Word {
        Word::new(
            self.bits
                .iter()
                .map(|&b| if b { '1' } else { '0' })
                .collect(),
        )
    }

    /// Reads the first `r` symbols of a word over `{0, 1}`.
    pub fn from_prefix(word: &Word, r: usize) -> Option<Assignment> {
        let prefix = word.symbols().get(..r)?;
        prefix
            .iter()
            .map(|&c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Assignment::new)
    }

    /// Signed literals, DIMACS solution style.
    pub fn literals(&self) -> Vec<i64> {
        self.bits
            .iter()
            .enumerate()
            .map(|(i, &b)| if b { i as i64 + 1 } else { -(i as i64 + 1) })
            .collect()
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_word())
    }
}

pub fn eval_formula(f: &CnfFormula, a: &Assignment) -> Result<bool, ReductionError> {
    let mut all = true;
    for clause in &f.clauses {
        let mut sat = false;
        for &lit in clause {
            let var = lit.unsigned_abs() as usize;
            let value = *a
                .bits
                .get(var - 1)
                .ok_or(ReductionError::VariableOutOfRange {
                    var,
                    len: a.bits.len(),
                })?;
            sat |= value == (lit > 0);
        }
        all &= sat;
    }
    Ok(all)
}

/// Runs the `k`-th clause row on `u` from `p̂_r^{k−1}`. Returns whether the
/// run ends in `p̂_r^k` and whether `u` satisfies clause `k`.
pub fn clause_row_check(
    dfa: &Dfa,
    n: &NormalizedCnf,
    u: &Assignment,
    k: usize,
) -> Result<(bool, bool), ReductionError> {
    if !(1..=n.s).contains(&k) {
        return Err(ReductionError::IndexOutOfRange { index: k, max: n.s });
    }
    if u.bits.len() != n.r {
        return Err(ReductionError::AssignmentLength {
            expected: n.r,
            found: u.bits.len(),
        });
    }
    let st = n.states();
    let symbols: Vec<usize> = u.bits.iter().map(|&b| usize::from(b)).collect();
    let end = dfa.run_from(st.hat(n.r, k - 1), &symbols);
    Ok((end == st.hat(n.r, k), n.clause_satisfied(&u.bits, k)))
}

pub fn solve_sat_via_primality(f: &CnfFormula) -> Result<Option<Assignment>, ReductionError> {
    solve_sat_via_primality_with(f, PrimalityOptions::default())
}

/// Satisfiability through the primality of the CNF automaton. A prime
/// verdict's witness starts with a satisfying assignment string.
pub fn solve_sat_via_primality_with(
    f: &CnfFormula,
    options: PrimalityOptions,
) -> Result<Option<Assignment>, ReductionError> {
    let n = match normalize(f)? {
        Normalized::TriviallySat => return Ok(Some(Assignment::zeros(f.num_vars))),
        Normalized::Cnf(n) => n,
    };
    let dfa = build_cnf_dfa(&n);
    let verdict = decide_primality_mls_with(&dfa, options)?;
    if !verdict.is_prime() {
        return Ok(None);
    }
    let witness = verdict.witness.ok_or_else(|| {
        ReductionError::InternalInconsistency("prime verdict without a witness".into())
    })?;
    let assignment = Assignment::from_prefix(&witness, n.r).ok_or_else(|| {
        ReductionError::InternalInconsistency(format!("witness {witness} has no assignment prefix"))
    })?;
    if !eval_formula(f, &assignment)? {
        return Err(ReductionError::InternalInconsistency(format!(
            "witness {witness} encodes a falsifying assignment"
        )));
    }
    Ok(Some(assignment))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, linear_profile, Target};
    use crate::fixtures;
    use crate::primality::{breaks_pp, max_visiting_words, pp_condition_holds, Evidence};

    fn normalized(f: &CnfFormula) -> NormalizedCnf {
        match normalize(f).unwrap() {
            Normalized::Cnf(n) => n,
            Normalized::TriviallySat => panic!("expected a grid"),
        }
    }

    fn word(s: &str) -> Word {
        Word::from(s)
    }

    #[test]
    fn parse_examples() {
        assert_eq!(
            parse_dimacs("p cnf 2 2\n1 -2 0\n2 0\n").unwrap(),
            fixtures::phi0()
        );
        assert_eq!(
            parse_dimacs("p cnf 1 2\n1 0\n-1 0\n").unwrap(),
            fixtures::contradiction()
        );
        let dup = parse_dimacs("p cnf 2 1\n1 1 0\n").unwrap();
        assert_eq!(dup.clauses(), &[vec![1, 1]]);
        let commented = parse_dimacs("c hi\np cnf 2 2\n1 -2\n 0 2 0\n%\n0\n").unwrap();
        assert_eq!(commented, fixtures::phi0());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_dimacs("p dnf 2 2\n").unwrap_err(),
            ReductionError::MalformedHeader { line: 1, .. }
        ));
        assert_eq!(
            parse_dimacs("1 0\n").unwrap_err(),
            ReductionError::MissingHeader
        );
        assert_eq!(
            parse_dimacs("p cnf 1 1\n2 0\n").unwrap_err(),
            ReductionError::LiteralOutOfRange {
                literal: 2,
                num_vars: 1
            }
        );
        assert_eq!(
            parse_dimacs("p cnf 1 2\n1 0\n").unwrap_err(),
            ReductionError::ClauseCountMismatch {
                expected: 2,
                found: 1
            }
        );
        assert!(matches!(
            parse_dimacs("p cnf 1 1\nx 0\n").unwrap_err(),
            ReductionError::InvalidToken { line: 2, .. }
        ));
    }

    #[test]
    fn dimacs_round_trip() {
        let f = fixtures::phi0();
        assert_eq!(parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn normalize_examples() {
        let n = normalized(&fixtures::phi0());
        assert_eq!((n.r, n.s, n.kappa), (2, 2, 11));
        assert_eq!(
            n.grid,
            vec![
                vec![Element::Pos(1), Element::Neg(2)],
                vec![Element::Bot, Element::Pos(2)]
            ]
        );
        assert_eq!(
            normalize(&fixtures::tautology()).unwrap(),
            Normalized::TriviallySat
        );
        let n = normalized(&fixtures::contradiction());
        assert_eq!((n.r, n.s, n.kappa), (1, 2, 7));
        assert_eq!(n.grid, vec![vec![Element::Pos(1)], vec![Element::Neg(1)]]);
        let dup = normalized(&CnfFormula::new(2, vec![vec![1, 1]]).unwrap());
        assert_eq!(dup.grid, vec![vec![Element::Pos(1), Element::Bot]]);
    }

    #[test]
    fn normalize_edge_cases() {
        let none = CnfFormula::new(0, vec![]).unwrap();
        assert_eq!(normalize(&none).unwrap(), Normalized::TriviallySat);
        let empty_clause = CnfFormula::new(0, vec![vec![]]).unwrap();
        assert_eq!(
            normalize(&empty_clause).unwrap_err(),
            ReductionError::NoVariables
        );
        let n = normalized(&CnfFormula::new(2, vec![vec![]]).unwrap());
        assert_eq!(n.grid, vec![vec![Element::Bot, Element::Bot]]);
    }

    #[test]
    fn phi0_automaton_shape() {
        let n = normalized(&fixtures::phi0());
        let dfa = build_cnf_dfa(&n);
        assert_eq!(dfa.num_states(), 16);
        assert_eq!(dfa.alphabet(), &['0', '1', 'c', 'd']);
        let report = classify(&dfa);
        assert!(report.is_mls_adfa_plus);
        assert_eq!(report.lin, Some(13));
        let st = n.states();
        assert_eq!(dfa.run(&word("11")).unwrap(), st.p(2));
        assert_eq!(dfa.run(&word("11")).unwrap(), st.hat(2, 0));
        assert_eq!(dfa.run(&word("11d")).unwrap(), st.pc(0));
        assert_eq!(dfa.state_name(st.pc(0)), "p_c^0");
        let profile = linear_profile(&dfa).unwrap();
        assert_eq!(profile.sigma_set(13, Target::Reject), vec!['c']);
        assert_eq!(profile.order[13], st.pc(2));
    }

    #[test]
    fn contradiction_automaton_size() {
        let dfa = build_cnf_dfa(&normalized(&fixtures::contradiction()));
        assert_eq!(dfa.num_states(), 11);
        assert_eq!(classify(&dfa).lin, Some(8));
    }

    #[test]
    fn phi0_max_visiting_words() {
        let dfa = build_cnf_dfa(&normalized(&fixtures::phi0()));
        let c11 = "c".repeat(11);
        let expected: Vec<Word> = ["00", "01", "10", "11"]
            .iter()
            .map(|u| word(&format!("{u}d{c11}")))
            .collect();
        assert_eq!(max_visiting_words(&dfa).unwrap(), expected);
    }

    #[test]
    fn phi0_pumping_evidence() {
        let dfa = build_cnf_dfa(&normalized(&fixtures::phi0()));
        let w = word(&format!("11d{}", "c".repeat(11)));
        assert!(!pp_condition_holds(&dfa, &w, 1, 3).unwrap());
        let ev: Evidence = breaks_pp(&dfa, &w).unwrap().unwrap();
        assert_eq!(ev.get(1, 3), Some(4));
        assert_eq!(ev.len(), 13 * 14 / 2);
        assert!(ev.iter().all(|((i, j), l)| (i, j) == (1, 3) || l == 0));
    }

    #[test]
    fn clause_rows_of_phi0() {
        let n = normalized(&fixtures::phi0());
        let dfa = build_cnf_dfa(&n);
        let u = |s: &str| Assignment::from_prefix(&word(s), 2).unwrap();
        assert_eq!(
            clause_row_check(&dfa, &n, &u("11"), 1).unwrap(),
            (true, true)
        );
        assert_eq!(
            clause_row_check(&dfa, &n, &u("10"), 2).unwrap(),
            (false, false)
        );
        let st = n.states();
        assert_eq!(
            dfa.run_from(st.hat(2, 1), &[1, 0]),
            st.row(2, 2),
            "falsified row ends in p_r^k"
        );
        assert_eq!(
            clause_row_check(&dfa, &n, &u("01"), 1).unwrap(),
            (false, false)
        );
        assert!(matches!(
            clause_row_check(&dfa, &n, &u("01"), 3).unwrap_err(),
            ReductionError::IndexOutOfRange { .. }
        ));
    }

    #[test]
    fn eval_examples() {
        let phi0 = fixtures::phi0();
        assert!(eval_formula(&phi0, &Assignment::new(vec![true, true])).unwrap());
        assert!(!eval_formula(&phi0, &Assignment::new(vec![false, true])).unwrap());
        for a in Assignment::all(1) {
            assert!(!eval_formula(&fixtures::contradiction(), &a).unwrap());
        }
        assert!(matches!(
            eval_formula(&phi0, &Assignment::new(vec![true])).unwrap_err(),
            ReductionError::VariableOutOfRange { var: 2, .. }
        ));
    }

    #[test]
    fn solve_examples() {
        assert_eq!(
            solve_sat_via_primality(&fixtures::phi0()).unwrap(),
            Some(Assignment::new(vec![true, true]))
        );
        assert_eq!(
            solve_sat_via_primality(&fixtures::contradiction()).unwrap(),
            None
        );
        let t = solve_sat_via_primality(&fixtures::tautology())
            .unwrap()
            .unwrap();
        assert!(eval_formula(&fixtures::tautology(), &t).unwrap());
    }

    #[test]
    fn assignment_helpers() {
        let a = Assignment::new(vec![true, false]);
        assert_eq!(a.literals(), vec![1, -2]);
        assert_eq!(a.to_string(), "10");
        let all: Vec<String> = Assignment::all(2).map(|a| a.to_string()).collect();
        assert_eq!(all, vec!["00", "01", "10", "11"]);
    }
}
