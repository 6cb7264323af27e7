//! Automata-based satisfiability for first-order logic over `(ℕ, <, +c)`
//! with uninterpreted monadic predicates.
//!
//! Interpretations are encoded in unary as infinite words over `{0,1}^k+ℓ`,
//! formulas are compiled to Büchi automata by structural induction, and
//! universal first-order quantification is computed directly on the
//! automaton (see [`quant`]) rather than through complementation.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod automata;
pub mod encoding;
mod error;
pub mod logic;
pub mod oracle;
pub mod quant;
pub mod regex;

pub use automata::{
    Automaton, Buchi, BuchiAutomaton, Finite, FiniteAutomaton, Label, LassoWord, StateId, Symbol,
    Transition, VarKind, VariableSignature,
};
pub use encoding::{Interpretation, UltimatelyPeriodicSet};
pub use error::{Error, Result};
pub use logic::{compile, decide_sat, parse, to_nnf, CompileOptions, Formula, Verdict};
pub use quant::{universal_quantify, universal_quantify_with_artifacts, QuantPipelineArtifacts};
