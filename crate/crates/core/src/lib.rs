//! Primality of regular languages given by complete DFAs.
//!
//! The crate decides whether a minimal linear safety ADFA+ (an acyclic
//! automaton with one accepting and one rejecting sink, whose non-sinks form
//! a single reachability chain) can be written as an intersection of
//! strictly smaller automata, builds such a decomposition when it exists,
//! and reduces CNF satisfiability to the same question.
//!
//! Module overview:
//!
//! * [`dfa`]: the automaton type, words and the JSON file format.
//! * [`algebra`]: minimization, products, inclusion and equivalence.
//! * [`classify`]: class membership and the structural profile.
//! * [`primality`]: pumpings, max-visiting words and the primality decision.
//! * [`decompose`]: decomposition gadgets, verification and safety closure.
//! * [`reduction`]: DIMACS input and the CNF automaton construction.
//! * [`oracle`]: brute-force reference decision and instance generators.

pub mod algebra;
pub mod classify;
pub mod decompose;
pub mod dfa;
pub mod fixtures;
pub mod oracle;
pub mod primality;
pub mod reduction;

pub use algebra::{
    index, intersect_minimized, language_equal, language_subset, minimize, product_intersection,
    product_intersection_bounded, separating_word, subset_counterexample, DEFAULT_STATE_BUDGET,
};
pub use classify::{
    classify, is_safety, linear_profile, ClassReport, ClassifyError, LinearProfile, Target,
};
pub use decompose::{
    build_a_i_plus, build_a_w_i_j, choose_pump_indices, decompose_mls, decompose_mls_with,
    safetyfy, verify_decomposition, verify_decomposition_bounded, DecomposeError, Decomposition,
    PartViolation, Provenance, PumpIndices, VerifyReport,
};
pub use dfa::{Dfa, DfaError, DfaFile, StateId, Word};
pub use oracle::{
    brute_force_composite, generate_minimal_adfa_plus, generate_mls, qualifying_candidates,
    random_dfa, GenConfig, OracleConfig, OracleError, OracleMode,
};
pub use primality::{
    breaks_pp, decide_primality_mls, decide_primality_mls_with, l_prime, max_visiting_words,
    pp_condition_holds, pump, Evidence, Method, MlsDfa, PrimalityError, PrimalityOptions,
    PrimalityVerdict, Pumping, Verdict,
};
pub use reduction::{
    build_cnf_dfa, clause_row_check, eval_formula, normalize, parse_dimacs,
    solve_sat_via_primality, solve_sat_via_primality_with, Assignment, CnfFormula, CnfStates,
    Element, Normalized, NormalizedCnf, ReductionError,
};
