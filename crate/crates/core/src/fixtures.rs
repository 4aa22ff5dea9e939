//! Small reference automata and formulas used throughout the tests, the
//! benches and the CLI examples.
//!
//! The two five-state automata share the alphabet `{a, b}` and differ in a
//! single transition out of the initial state. States are numbered
//! `q0, q1, q2, q+, q-`.

use crate::dfa::{Dfa, StateId};
use crate::reduction::CnfFormula;

pub const ACCEPT_SINK: StateId = 3;
pub const REJECT_SINK: StateId = 4;

fn named(dfa: Dfa, names: &[&str]) -> Dfa {
    dfa.with_state_names(names.iter().map(|s| s.to_string()).collect())
        .expect("fixture names match state count")
}

fn ab(transitions: Vec<Vec<StateId>>, accepting: Vec<StateId>, names: &[&str]) -> Dfa {
    let dfa = Dfa::new(vec!['a', 'b'], transitions, 0, accepting).expect("fixture is valid");
    named(dfa, names)
}

/// Composite minimal linear safety ADFA+ with lin 2.
pub fn abb_composite() -> Dfa {
    ab(
        vec![vec![1, 2], vec![4, 2], vec![3, 4], vec![3, 3], vec![4, 4]],
        vec![0, 1, 2, 3],
        &["q0", "q1", "q2", "q+", "q-"],
    )
}

/// Prime sibling of [`abb_composite`]: `q0 --b--> q+` instead of `q2`.
pub fn abb_prime() -> Dfa {
    ab(
        vec![vec![1, 3], vec![4, 2], vec![3, 4], vec![3, 3], vec![4, 4]],
        vec![0, 1, 2, 3],
        &["q0", "q1", "q2", "q+", "q-"],
    )
}

/// [`abb_composite`] with `q1` removed and its in-transitions sent to `q+`.
pub fn abb_skip1() -> Dfa {
    ab(
        vec![vec![2, 1], vec![2, 3], vec![2, 2], vec![3, 3]],
        vec![0, 1, 2],
        &["q0", "q2", "q+", "q-"],
    )
}

/// [`abb_composite`] with `q2` removed and its in-transitions sent to `q+`.
pub fn abb_skip2() -> Dfa {
    ab(
        vec![vec![1, 2], vec![3, 2], vec![2, 2], vec![3, 3]],
        vec![0, 1, 2],
        &["q0", "q1", "q+", "q-"],
    )
}

/// Pump gadget for `abb` with the factor `a` repeatable: rejects exactly
/// the extensions of `a^l bb`.
pub fn abb_pump_gadget() -> Dfa {
    ab(
        vec![vec![0, 1], vec![2, 3], vec![2, 2], vec![3, 3]],
        vec![0, 1, 2],
        &["q0", "q2", "q+", "q-"],
    )
}

/// One-state automaton accepting everything over `{a, b}`.
pub fn universal_ab() -> Dfa {
    Dfa::trivial(vec!['a', 'b'], true).expect("valid alphabet")
}

/// `(x1 ∨ ¬x2) ∧ (x2)`.
pub fn phi0() -> CnfFormula {
    CnfFormula::new(2, vec![vec![1, -2], vec![2]]).expect("valid formula")
}

/// `(x1) ∧ (¬x1)`.
pub fn contradiction() -> CnfFormula {
    CnfFormula::new(1, vec![vec![1], vec![-1]]).expect("valid formula")
}

/// `(x1 ∨ ¬x1)`.
pub fn tautology() -> CnfFormula {
    CnfFormula::new(1, vec![vec![1, -1]]).expect("valid formula")
}
