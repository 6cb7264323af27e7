//! Automata over multi-track `{0,1}` alphabets and the generic operations
//! the rest of the crate composes: products, emptiness, trimming, lasso
//! membership, path languages and `ω`-closure.

mod automaton;
mod dfa;
pub(crate) mod graph;
mod lasso;
mod ops;
mod product;
mod reduce;
mod signature;
mod symbol;

pub use automaton::{
    Acceptance, Automaton, Buchi, BuchiAutomaton, Builder, Finite, FiniteAutomaton, Label, StateId,
    Transition,
};
pub use dfa::{finite_determinize, finite_minimize};
pub use lasso::{lasso_membership, words, LassoWord};
pub(crate) use ops::{adjacency, epsilon_closure, live_mask, step_symbol};
pub use ops::{
    buchi_is_empty, buchi_witness, collapse_epsilon_cycles, finite_is_empty, finite_membership,
    finite_words_of_length, omega_closure, paths_automaton, remove_epsilon, trim, LiveStates,
};
pub use product::{buchi_intersection, buchi_union, finite_intersection, finite_union};
pub use reduce::bisimulation_quotient;
pub use signature::{VarKind, VariableSignature};
pub use symbol::Symbol;
