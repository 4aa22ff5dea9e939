//! Regular-language algebra on complete DFAs: minimization, products,
//! inclusion and equivalence.

use std::collections::HashMap;

use crate::dfa::{Dfa, DfaError, StateId, Word};

/// Default cap on the number of materialized product states.
pub const DEFAULT_STATE_BUDGET: usize = 1_000_000;

/// Canonical minimal automaton for the language of `dfa`.
///
/// Unreachable states are dropped, equivalent states merged with Hopcroft's
/// partition refinement, and the result is numbered breadth-first from the
/// initial state with symbols tried in alphabet order. Two automata for the
/// same language therefore minimize to identical values.
#[allow(clippy::needless_range_loop)]
pub fn minimize(dfa: &Dfa) -> Dfa {
    let reach = dfa.canonical();
    let n = reach.num_states();
    let k = reach.alphabet().len();

    // inverse[t][a] = states s with δ(s, a) = t
    let mut inverse: Vec<Vec<Vec<StateId>>> = vec![vec![Vec::new(); k]; n];
    for s in 0..n {
        for a in 0..k {
            inverse[reach.next(s, a)][a].push(s);
        }
    }

    let mut partition = Partition::new(reach.accepting_mask());
    // Seeding with every initial block is valid; the smaller-half trick
    // below keeps the total work bounded.
    let mut pending: Vec<(usize, usize)> = (0..partition.blocks.len())
        .flat_map(|b| (0..k).map(move |a| (b, a)))
        .collect();
    let mut queued: Vec<Vec<bool>> = vec![vec![true; k]; partition.blocks.len()];

    let mut marked: Vec<StateId> = Vec::new();
    let mut touched: Vec<usize> = Vec::new();
    let mut mark_count: Vec<usize> = vec![0; n];
    let mut is_marked = vec![false; n];

    while let Some((splitter, a)) = pending.pop() {
        queued[splitter][a] = false;
        for &t in &partition.blocks[splitter] {
            for &s in &inverse[t][a] {
                if !is_marked[s] {
                    is_marked[s] = true;
                    marked.push(s);
                    let b = partition.block_of[s];
                    if mark_count[b] == 0 {
                        touched.push(b);
                    }
                    mark_count[b] += 1;
                }
            }
        }
        for &b in &touched {
            let count = mark_count[b];
            mark_count[b] = 0;
            if count == partition.blocks[b].len() {
                continue;
            }
            let (inside, outside): (Vec<_>, Vec<_>) =
                partition.blocks[b].iter().partition(|&&s| is_marked[s]);
            let new_block = partition.blocks.len();
            for &s in &inside {
                partition.block_of[s] = new_block;
            }
            partition.blocks[b] = outside;
            partition.blocks.push(inside);
            queued.push(vec![false; k]);
            for c in 0..k {
                if queued[b][c] {
                    queued[new_block][c] = true;
                    pending.push((new_block, c));
                } else {
                    let smaller = if partition.blocks[new_block].len() <= partition.blocks[b].len()
                    {
                        new_block
                    } else {
                        b
                    };
                    queued[smaller][c] = true;
                    pending.push((smaller, c));
                }
            }
        }
        touched.clear();
        for s in marked.drain(..) {
            is_marked[s] = false;
        }
    }

    let blocks = partition.blocks.len();
    let transitions = (0..blocks)
        .map(|b| {
            let rep = partition.blocks[b][0];
            (0..k)
                .map(|a| partition.block_of[reach.next(rep, a)])
                .collect()
        })
        .collect();
    let accepting = (0..blocks)
        .map(|b| reach.is_accepting(partition.blocks[b][0]))
        .collect();
    let quotient = Dfa::from_parts(
        reach.alphabet().to_vec(),
        transitions,
        partition.block_of[reach.initial()],
        accepting,
    );
    quotient.canonical()
}

struct Partition {
    blocks: Vec<Vec<StateId>>,
    block_of: Vec<usize>,
}

impl Partition {
    fn new(accepting: &[bool]) -> Self {
        let (acc, rej): (Vec<_>, Vec<_>) = (0..accepting.len()).partition(|&s| accepting[s]);
        let mut blocks = Vec::new();
        let mut block_of = vec![0; accepting.len()];
        for block in [acc, rej] {
            if !block.is_empty() {
                for &s in &block {
                    block_of[s] = blocks.len();
                }
                blocks.push(block);
            }
        }
        Partition { blocks, block_of }
    }
}

/// Size of the canonical minimal automaton (the index of the language).
pub fn index(dfa: &Dfa) -> usize {
    minimize(dfa).num_states()
}

fn check_alphabets(dfas: &[&Dfa]) -> Result<(), DfaError> {
    let first = dfas.first().ok_or(DfaError::EmptyInput)?;
    if dfas.iter().any(|d| d.alphabet() != first.alphabet()) {
        return Err(DfaError::AlphabetMismatch);
    }
    Ok(())
}

/// Product automaton for the intersection of all languages, with the
/// default state budget.
pub fn product_intersection(dfas: &[Dfa]) -> Result<Dfa, DfaError> {
    product_intersection_bounded(dfas, DEFAULT_STATE_BUDGET)
}

/// Product automaton for `⋂ L(dfa_i)`. Only reachable tuples are built;
/// exceeding `budget` states is an error.
pub fn product_intersection_bounded(dfas: &[Dfa], budget: usize) -> Result<Dfa, DfaError> {
    let refs: Vec<&Dfa> = dfas.iter().collect();
    check_alphabets(&refs)?;
    if dfas.len() == 1 {
        return Ok(dfas[0].clone().without_state_names());
    }
    let k = dfas[0].alphabet().len();
    let start: Vec<StateId> = dfas.iter().map(Dfa::initial).collect();
    let mut ids: HashMap<Vec<StateId>, StateId> = HashMap::new();
    let mut tuples = vec![start.clone()];
    ids.insert(start, 0);
    let mut transitions: Vec<Vec<StateId>> = Vec::new();
    let mut head = 0;
    while head < tuples.len() {
        let mut row = Vec::with_capacity(k);
        for a in 0..k {
            let next: Vec<StateId> = tuples[head]
                .iter()
                .zip(dfas)
                .map(|(&s, d)| d.next(s, a))
                .collect();
            let id = match ids.get(&next) {
                Some(&id) => id,
                None => {
                    let id = tuples.len();
                    if id >= budget {
                        return Err(DfaError::StateBudgetExceeded { budget });
                    }
                    ids.insert(next.clone(), id);
                    tuples.push(next);
                    id
                }
            };
            row.push(id);
        }
        transitions.push(row);
        head += 1;
    }
    let accepting = tuples
        .iter()
        .map(|t| t.iter().zip(dfas).all(|(&s, d)| d.is_accepting(s)))
        .collect();
    Ok(Dfa::from_parts(
        dfas[0].alphabet().to_vec(),
        transitions,
        0,
        accepting,
    ))
}

/// Intersection folded pairwise with minimization after every step, which
/// keeps intermediate automata small when many factors are involved.
pub fn intersect_minimized(dfas: &[Dfa], budget: usize) -> Result<Dfa, DfaError> {
    let refs: Vec<&Dfa> = dfas.iter().collect();
    check_alphabets(&refs)?;
    let mut acc = minimize(&dfas[0]);
    for dfa in &dfas[1..] {
        acc = minimize(&product_intersection_bounded(&[acc, dfa.clone()], budget)?);
    }
    Ok(acc)
}

/// Breadth-first search over reachable state pairs, symbols in alphabet
/// order. Returns the lexicographically least among the shortest words
/// whose pair of end states satisfies `target`.
fn pair_search(
    a: &Dfa,
    b: &Dfa,
    target: impl Fn(StateId, StateId) -> bool,
) -> Result<Option<Word>, DfaError> {
    check_alphabets(&[a, b])?;
    let k = a.alphabet().len();
    let nb = b.num_states();
    let key = |p: StateId, q: StateId| p * nb + q;
    let mut parent: HashMap<usize, (usize, usize)> = HashMap::new();
    let start = (a.initial(), b.initial());
    if target(start.0, start.1) {
        return Ok(Some(Word::empty()));
    }
    let root = key(start.0, start.1);
    parent.insert(root, (usize::MAX, 0));
    let mut queue = vec![start];
    let mut head = 0;
    while head < queue.len() {
        let (p, q) = queue[head];
        head += 1;
        for sym in 0..k {
            let next = (a.next(p, sym), b.next(q, sym));
            let id = key(next.0, next.1);
            if parent.contains_key(&id) {
                continue;
            }
            parent.insert(id, (key(p, q), sym));
            if target(next.0, next.1) {
                let mut symbols = Vec::new();
                let mut cur = id;
                while cur != root {
                    let (prev, s) = parent[&cur];
                    symbols.push(s);
                    cur = prev;
                }
                symbols.reverse();
                return Ok(Some(a.decode(&symbols)));
            }
            queue.push(next);
        }
    }
    Ok(None)
}

/// Shortest (then lexicographically least) word in `L(a) \ L(b)`, if any.
pub fn subset_counterexample(a: &Dfa, b: &Dfa) -> Result<Option<Word>, DfaError> {
    pair_search(a, b, |p, q| a.is_accepting(p) && !b.is_accepting(q))
}

/// Whether `L(a) ⊆ L(b)`, decided by emptiness of `L(a) ∩ complement(L(b))`.
pub fn language_subset(a: &Dfa, b: &Dfa) -> Result<bool, DfaError> {
    Ok(subset_counterexample(a, b)?.is_none())
}

/// Shortest (then lexicographically least) word in the symmetric difference.
pub fn separating_word(a: &Dfa, b: &Dfa) -> Result<Option<Word>, DfaError> {
    pair_search(a, b, |p, q| a.is_accepting(p) != b.is_accepting(q))
}

pub fn language_equal(a: &Dfa, b: &Dfa) -> Result<bool, DfaError> {
    Ok(separating_word(a, b)?.is_none())
}
