//! Brute-force reference implementations used to cross-check the main
//! pipeline on small instances.

mod equality;
mod eval;
mod random;
mod universal;

pub use equality::{finite_languages_equal, languages_equal_on_lassos, LassoComparison};
pub use eval::evaluate;
pub use random::{random_automaton, random_corpus, ACCEPTING_PROBABILITY, TRANSITION_PROBABILITY};
pub use universal::brute_force_universal_membership;
