//! Formulas, their concrete syntax, and compilation to Büchi automata.

mod atoms;
mod compile;
mod decide;
mod formula;
mod nnf;
mod parser;

pub use atoms::atom_automaton;
pub use compile::{
    compile, signature_of, CompileOptions, Compiler, NoRelations, RelationLibrary, Step,
};
pub use decide::{decide_automaton, decide_sat, Verdict};
pub use formula::Formula;
pub use nnf::{is_nnf, to_nnf};
pub use parser::parse;
