use super::compile::{CompileOptions, Compiler};
use super::Formula;
use crate::automata::{buchi_witness, trim, BuchiAutomaton};
use crate::encoding::{decode_lasso, Interpretation};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// A model of the free variables (empty for closed formulas).
    Sat(Interpretation),
    Unsat,
}

impl Verdict {
    pub fn is_sat(&self) -> bool {
        matches!(self, Verdict::Sat(_))
    }
}

/// Satisfiability with default options.
pub fn decide_sat(f: &Formula) -> Result<Verdict> {
    let a = Compiler::new(CompileOptions::default()).compile(f)?;
    decide_automaton(&a)
}

/// Verdict for the language of an automaton recognizing valid encodings.
pub fn decide_automaton(a: &BuchiAutomaton) -> Result<Verdict> {
    match buchi_witness(&trim(a)) {
        None => Ok(Verdict::Unsat),
        Some(w) => Ok(Verdict::Sat(decode_lasso(&w, a.signature())?)),
    }
}
