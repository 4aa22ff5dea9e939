//! Class membership tests (minimal, safety, ADFA+, linear) and the chain
//! profile of minimal linear safety ADFA+s.

use serde::Serialize;

use crate::algebra::minimize;
use crate::dfa::{Dfa, StateId};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("automaton is not a minimal linear safety ADFA+")]
    NotMlsAdfaPlus,

    #[error("no symbol leads from chain position {} to position {position}", position - 1)]
    ChainBroken { position: usize },

    #[error("last chain state has no transition into the rejecting sink")]
    NoRejectingExit,
}

/// Class flags and structural data of one automaton.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub is_minimal: bool,
    pub is_safety: bool,
    pub is_adfa_plus: bool,
    pub is_linear: bool,
    pub is_mls_adfa_plus: bool,
    pub lin: Option<usize>,
    pub accepting_sink: Option<StateId>,
    pub rejecting_sink: Option<StateId>,
}

fn first_sink(dfa: &Dfa, accepting: bool) -> Option<StateId> {
    (0..dfa.num_states()).find(|&s| dfa.is_sink(s) && dfa.is_accepting(s) == accepting)
}

/// Topological order of the non-sink states, or `None` if the non-sink
/// transition graph has a cycle (a non-sink self-loop counts as one).
pub(crate) fn nonsink_topo_order(dfa: &Dfa) -> Option<Vec<StateId>> {
    let n = dfa.num_states();
    let sink: Vec<bool> = (0..n).map(|s| dfa.is_sink(s)).collect();
    let mut indegree = vec![0usize; n];
    for s in (0..n).filter(|&s| !sink[s]) {
        for &t in &dfa.transitions()[s] {
            if !sink[t] {
                indegree[t] += 1;
            }
        }
    }
    let mut order: Vec<StateId> = (0..n).filter(|&s| !sink[s] && indegree[s] == 0).collect();
    let mut head = 0;
    while head < order.len() {
        let s = order[head];
        head += 1;
        for &t in &dfa.transitions()[s] {
            if !sink[t] {
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    order.push(t);
                }
            }
        }
    }
    let nonsinks = sink.iter().filter(|&&b| !b).count();
    (order.len() == nonsinks).then_some(order)
}

/// Longest non-sink path (in transitions) starting at each state; sinks get 0.
/// `None` when the non-sink graph is cyclic.
pub(crate) fn nonsink_heights(dfa: &Dfa) -> Option<Vec<usize>> {
    let order = nonsink_topo_order(dfa)?;
    let mut height = vec![0usize; dfa.num_states()];
    for &s in order.iter().rev() {
        height[s] = dfa.transitions()[s]
            .iter()
            .filter(|&&t| !dfa.is_sink(t))
            .map(|&t| height[t] + 1)
            .max()
            .unwrap_or(0);
    }
    Some(height)
}

fn reachability(dfa: &Dfa) -> Vec<Vec<bool>> {
    let n = dfa.num_states();
    (0..n)
        .map(|from| {
            let mut seen = vec![false; n];
            seen[from] = true;
            let mut stack = vec![from];
            while let Some(s) = stack.pop() {
                for &t in &dfa.transitions()[s] {
                    if !seen[t] {
                        seen[t] = true;
                        stack.push(t);
                    }
                }
            }
            seen
        })
        .collect()
}

#[allow(clippy::needless_range_loop)]
fn is_linear(dfa: &Dfa) -> bool {
    let reach = reachability(dfa);
    let n = dfa.num_states();
    for q in 0..n {
        for p in (q + 1)..n {
            let forward = reach[q][p];
            let backward = reach[p][q];
            let apart = !forward && !backward && (dfa.is_sink(q) || dfa.is_sink(p));
            if usize::from(forward) + usize::from(backward) + usize::from(apart) != 1 {
                return false;
            }
        }
    }
    true
}

fn is_safety_minimal(min: &Dfa) -> bool {
    let rejecting: Vec<StateId> = (0..min.num_states())
        .filter(|&s| !min.is_accepting(s))
        .collect();
    match rejecting.as_slice() {
        [] => true,
        [only] => min.is_sink(*only),
        _ => false,
    }
}

/// Whether `L(dfa)` is a safety language (rejection is closed under
/// extension).
pub fn is_safety(dfa: &Dfa) -> bool {
    is_safety_minimal(&minimize(dfa))
}

pub fn classify(dfa: &Dfa) -> ClassReport {
    let min = minimize(dfa);
    let is_minimal = min.num_states() == dfa.num_states();
    let is_safety = is_safety_minimal(&min);
    let accepting_sink = first_sink(dfa, true);
    let rejecting_sink = first_sink(dfa, false);
    let heights = nonsink_heights(dfa);
    let is_adfa_plus = accepting_sink.is_some() && rejecting_sink.is_some() && heights.is_some();
    let is_linear = is_linear(dfa);
    let lin = match (&heights, is_adfa_plus && is_minimal) {
        (Some(h), true) => Some(h[dfa.initial()]),
        _ => None,
    };
    ClassReport {
        is_minimal,
        is_safety,
        is_adfa_plus,
        is_linear,
        is_mls_adfa_plus: is_minimal && is_safety && is_adfa_plus && is_linear,
        lin,
        accepting_sink,
        rejecting_sink,
    }
}

/// Where a transition out of a chain state leads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    /// Chain position `q_i`.
    Position(usize),
    Accept,
    Reject,
}

/// The chain `q_0 … q_n` of a minimal linear safety ADFA+ and, for each
/// position and symbol, where the transition goes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProfile {
    pub alphabet: Vec<char>,
    pub order: Vec<StateId>,
    pub accepting_sink: StateId,
    pub rejecting_sink: StateId,
    /// `targets[i][k]` is the target of `q_i` on `alphabet[k]`.
    pub targets: Vec<Vec<Target>>,
}

impl LinearProfile {
    pub fn lin(&self) -> usize {
        self.order.len() - 1
    }

    /// `Σ_{i,#}`: symbols leading from position `i` to `target`.
    pub fn sigma_set(&self, i: usize, target: Target) -> Vec<char> {
        self.targets[i]
            .iter()
            .zip(&self.alphabet)
            .filter(|(t, _)| **t == target)
            .map(|(_, &c)| c)
            .collect()
    }

    pub fn position_of(&self, state: StateId) -> Option<usize> {
        self.order.iter().position(|&s| s == state)
    }
}

pub fn linear_profile(dfa: &Dfa) -> Result<LinearProfile, ClassifyError> {
    let report = classify(dfa);
    if !report.is_mls_adfa_plus {
        return Err(ClassifyError::NotMlsAdfaPlus);
    }
    let accepting_sink = report.accepting_sink.ok_or(ClassifyError::NotMlsAdfaPlus)?;
    let rejecting_sink = report.rejecting_sink.ok_or(ClassifyError::NotMlsAdfaPlus)?;
    // In a linear DAG the topological order is unique.
    let order = nonsink_topo_order(dfa).ok_or(ClassifyError::NotMlsAdfaPlus)?;
    let mut position = vec![None; dfa.num_states()];
    for (i, &s) in order.iter().enumerate() {
        position[s] = Some(i);
    }
    let targets: Vec<Vec<Target>> = order
        .iter()
        .map(|&s| {
            dfa.transitions()[s]
                .iter()
                .map(|&t| match position[t] {
                    Some(i) => Target::Position(i),
                    None if t == accepting_sink => Target::Accept,
                    None => Target::Reject,
                })
                .collect()
        })
        .collect();
    let profile = LinearProfile {
        alphabet: dfa.alphabet().to_vec(),
        order,
        accepting_sink,
        rejecting_sink,
        targets,
    };
    for i in 1..=profile.lin() {
        if profile.sigma_set(i - 1, Target::Position(i)).is_empty() {
            return Err(ClassifyError::ChainBroken { position: i });
        }
    }
    if profile.sigma_set(profile.lin(), Target::Reject).is_empty() {
        return Err(ClassifyError::NoRejectingExit);
    }
    Ok(profile)
}
