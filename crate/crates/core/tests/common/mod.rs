//! Independent reference implementations used only by the integration
//! tests. None of these call into the algorithms they check.

#![allow(dead_code)]

use primedfa_core::{CnfFormula, Dfa, Element, NormalizedCnf, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// All words over `alphabet` of length at most `max_len`, shortest first,
/// then in alphabet order.
pub fn words_up_to(alphabet: &[char], max_len: usize) -> Vec<Word> {
    let mut all = vec![Vec::new()];
    let mut layer: Vec<Vec<char>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for &c in alphabet {
                let mut v = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.into_iter().map(Word::new).collect()
}

/// Number of Myhill-Nerode classes among reachable states, by the
/// table-filling algorithm.
pub fn table_filling_index(dfa: &Dfa) -> usize {
    let reach = dfa.reachable_states();
    let n = dfa.num_states();
    let k = dfa.alphabet().len();
    let mut distinct = vec![vec![false; n]; n];
    for &p in &reach {
        for &q in &reach {
            distinct[p][q] = dfa.is_accepting(p) != dfa.is_accepting(q);
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        for &p in &reach {
            for &q in &reach {
                if p < q && !distinct[p][q] {
                    let split = (0..k).any(|a| {
                        let (x, y) = (dfa.next(p, a), dfa.next(q, a));
                        distinct[x][y]
                    });
                    if split {
                        distinct[p][q] = true;
                        distinct[q][p] = true;
                        changed = true;
                    }
                }
            }
        }
    }
    // count class representatives: states not equivalent to an earlier one
    reach
        .iter()
        .enumerate()
        .filter(|(idx, &p)| reach[..*idx].iter().all(|&q| distinct[p][q]))
        .count()
}

/// Longest word on which the automaton stays outside its sinks, found by
/// layering the set of states reachable in exactly `d` steps.
pub fn lin_by_layers(dfa: &Dfa) -> Option<usize> {
    let n = dfa.num_states();
    let mut layer = vec![false; n];
    if dfa.is_sink(dfa.initial()) {
        return None;
    }
    layer[dfa.initial()] = true;
    for d in 0..=n {
        let mut next = vec![false; n];
        for s in (0..n).filter(|&s| layer[s]) {
            for &t in &dfa.transitions()[s] {
                if !dfa.is_sink(t) {
                    next[t] = true;
                }
            }
        }
        if !next.iter().any(|&b| b) {
            return Some(d);
        }
        layer = next;
    }
    None
}

/// Whether `word` extends some pumping `P[w; i,j; l]`.
pub fn extends_pumping(word: &[char], w: &[char], i: usize, j: usize) -> bool {
    let x = &w[..i - 1];
    let y = &w[i - 1..j - 1];
    let z = &w[j - 1..];
    if !word.starts_with(x) {
        return false;
    }
    let mut rest = &word[x.len()..];
    loop {
        if rest.starts_with(z) {
            return true;
        }
        if rest.starts_with(y) {
            rest = &rest[y.len()..];
        } else {
            return false;
        }
    }
}

/// Truth-table satisfiability.
pub fn truth_table_sat(f: &CnfFormula) -> bool {
    let r = f.num_vars();
    (0u32..1 << r).any(|x| {
        f.clauses().iter().all(|clause| {
            clause.iter().any(|&lit| {
                let var = lit.unsigned_abs() as usize;
                let bit = x >> (var - 1) & 1 == 1;
                bit == (lit > 0)
            })
        })
    })
}

/// Deterministic corpus of small formulas, including duplicate literals,
/// tautologies and empty clauses.
pub fn formula_corpus(count: usize, seed: u64) -> Vec<CnfFormula> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = rng.gen_range(1..=3usize);
            let s = rng.gen_range(1..=3usize);
            let clauses = (0..s)
                .map(|_| {
                    let len = rng.gen_range(0..=r + 1);
                    (0..len)
                        .map(|_| {
                            let var = rng.gen_range(1..=r) as i64;
                            if rng.gen_bool(0.5) {
                                var
                            } else {
                                -var
                            }
                        })
                        .collect()
                })
                .collect();
            CnfFormula::new(r, clauses).expect("literals in range")
        })
        .collect()
}

/// Symbolic states of the CNF automaton.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sym {
    P(usize),
    Pc(usize),
    Row(usize, usize),
    Hat(usize, usize),
    Plus,
    Minus,
}

impl Sym {
    pub fn name(self, r: usize) -> String {
        match self {
            Sym::P(i) => format!("p_{i}"),
            Sym::Pc(k) => format!("p_c^{k}"),
            Sym::Row(i, k) => format!("p_{i}^{k}"),
            Sym::Hat(i, 0) if i == r => format!("p_{r}"),
            Sym::Hat(i, k) => format!("p^_{i}^{k}"),
            Sym::Plus => "p_+".into(),
            Sym::Minus => "p_-".into(),
        }
    }
}

fn lit_bit(e: Element) -> Option<char> {
    match e {
        Element::Pos(_) => Some('1'),
        Element::Neg(_) => Some('0'),
        Element::Bot => None,
    }
}

/// Transition function of the CNF automaton written case by case.
pub fn symbolic_delta(n: &NormalizedCnf, q: Sym, a: char) -> Sym {
    let (r, s) = (n.r, n.s);
    let e = |i: usize, k: usize| n.grid[k - 1][i - 1];
    let bit = a == '0' || a == '1';
    // entering clause row k on a bit
    let enter = |k: usize| {
        if lit_bit(e(1, k)) == Some(a) {
            Sym::Hat(1, k)
        } else {
            Sym::Row(1, k)
        }
    };
    match q {
        Sym::Plus | Sym::Minus => q,
        Sym::P(i) => match a {
            _ if bit && i < r => Sym::P(i + 1),
            _ if bit => enter(1),
            'c' => Sym::Plus,
            _ if i == 0 => Sym::Minus,
            _ if i < r => Sym::Plus,
            _ => Sym::Pc(0),
        },
        Sym::Row(i, k) => match a {
            _ if bit && i == r => Sym::Minus,
            _ if bit && lit_bit(e(i + 1, k)) == Some(a) => Sym::Hat(i + 1, k),
            _ if bit => Sym::Row(i + 1, k),
            'c' => Sym::Hat(i, k),
            _ => Sym::Minus,
        },
        Sym::Hat(i, 0) => symbolic_delta(n, Sym::P(i), a),
        Sym::Hat(i, k) => match a {
            _ if bit && i < r => Sym::Hat(i + 1, k),
            _ if bit && k < s => enter(k + 1),
            _ if bit => Sym::Plus,
            'c' if i < r => Sym::Row(i + 1, k),
            'c' => Sym::Pc(k),
            _ => Sym::Minus,
        },
        Sym::Pc(k) => match a {
            'c' if k < s => Sym::Row(1, k + 1),
            'c' => Sym::Minus,
            _ if k < s => Sym::Minus,
            _ => Sym::Plus,
        },
    }
}

/// Every symbolic state of the automaton for `n`.
pub fn symbolic_states(n: &NormalizedCnf) -> Vec<Sym> {
    let mut out: Vec<Sym> = (0..=n.r).map(Sym::P).collect();
    out.push(Sym::Pc(0));
    for k in 1..=n.s {
        for i in 1..=n.r {
            out.push(Sym::Row(i, k));
            out.push(Sym::Hat(i, k));
        }
        out.push(Sym::Pc(k));
    }
    out.push(Sym::Plus);
    out.push(Sym::Minus);
    out
}

/// Whether every prefix of `word` (including itself and ε) is accepted.
pub fn all_prefixes_accepted(dfa: &Dfa, word: &Word) -> bool {
    let mut state = dfa.initial();
    if !dfa.is_accepting(state) {
        return false;
    }
    for &c in word.symbols() {
        state = dfa.next(state, dfa.symbol_index(c).expect("symbol in alphabet"));
        if !dfa.is_accepting(state) {
            return false;
        }
    }
    true
}

pub fn repeat_word(w: &Word, times: usize) -> Word {
    Word::new(w.symbols().repeat(times))
}
