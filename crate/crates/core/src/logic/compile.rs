use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::atoms::atom_automaton;
use super::formula::{kind_of_name, Formula};
use super::nnf::to_nnf;
use crate::automata::{
    bisimulation_quotient, buchi_intersection, buchi_union, trim, BuchiAutomaton, VarKind,
    VariableSignature,
};
use crate::encoding::{align, project_variable, valid_encodings_automaton};
use crate::quant::{universal_quantify, universal_quantify_with_artifacts, QuantPipelineArtifacts};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompileOptions {
    /// Largest constant allowed in `y = x + c`.
    pub max_offset: u32,
}

impl Default for CompileOptions {
    fn default() -> Self {
        CompileOptions { max_offset: 64 }
    }
}

/// Source of automata for `@name(args)` atoms.
pub trait RelationLibrary {
    /// Automaton for the relation applied to `args` (or its negation),
    /// over a signature naming exactly the distinct `args`, accepting only
    /// valid encodings. `None` if the relation is unknown.
    fn relation(
        &self,
        name: &str,
        args: &[String],
        negated: bool,
    ) -> Option<Result<BuchiAutomaton>>;
}

/// The empty library.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoRelations;

impl RelationLibrary for NoRelations {
    fn relation(&self, _: &str, _: &[String], _: bool) -> Option<Result<BuchiAutomaton>> {
        None
    }
}

/// Size of the automaton produced for one subformula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub what: String,
    pub states: usize,
    pub transitions: usize,
}

/// Structural compiler from formulas to Büchi automata. Universal
/// quantifiers go through [`universal_quantify`].
pub struct Compiler<'a> {
    options: CompileOptions,
    relations: &'a dyn RelationLibrary,
    keep_artifacts: bool,
    /// Every compiled subformula, innermost first.
    pub steps: Vec<Step>,
    /// Pipeline stages of each universal quantifier, when requested.
    pub quantifications: Vec<QuantPipelineArtifacts>,
}

impl Compiler<'static> {
    pub fn new(options: CompileOptions) -> Self {
        Compiler {
            options,
            relations: &NoRelations,
            keep_artifacts: false,
            steps: Vec::new(),
            quantifications: Vec::new(),
        }
    }
}

impl<'a> Compiler<'a> {
    pub fn with_relations<'b>(self, relations: &'b dyn RelationLibrary) -> Compiler<'b> {
        Compiler {
            options: self.options,
            relations,
            keep_artifacts: self.keep_artifacts,
            steps: self.steps,
            quantifications: self.quantifications,
        }
    }

    /// Keep the stages of every universal quantification.
    pub fn keep_artifacts(mut self, keep: bool) -> Self {
        self.keep_artifacts = keep;
        self
    }

    /// Automaton over the free variables of `f` (first-order names sorted,
    /// then second-order names sorted) recognizing the encodings of its models.
    pub fn compile(&mut self, f: &Formula) -> Result<BuchiAutomaton> {
        f.check_scope()?;
        if f.max_offset() > self.options.max_offset {
            return Err(Error::OffsetTooLarge {
                offset: f.max_offset(),
                max: self.options.max_offset,
            });
        }
        self.go(&to_nnf(f))
    }

    fn record(&mut self, what: String, a: BuchiAutomaton) -> BuchiAutomaton {
        let a = bisimulation_quotient(&a);
        self.steps.push(Step {
            what,
            states: a.num_states(),
            transitions: a.num_transitions(),
        });
        a
    }

    fn go(&mut self, f: &Formula) -> Result<BuchiAutomaton> {
        let sig = signature_of(f)?;
        match f {
            Formula::And(a, b) | Formula::Or(a, b) => {
                let left = align(&self.go(a)?, &sig)?;
                let right = align(&self.go(b)?, &sig)?;
                let (what, out) = if matches!(f, Formula::And(..)) {
                    ("and", buchi_intersection(&left, &right)?)
                } else {
                    ("or", buchi_union(&left, &right)?)
                };
                Ok(self.record(what.into(), trim(&out)))
            }
            Formula::Exists(x, body) | Formula::Forall(x, body) => {
                let inner = self.go(body)?;
                if !inner.signature().contains(x) {
                    // the variable does not occur: ℕ is non-empty
                    return Ok(inner);
                }
                let out = if matches!(f, Formula::Exists(..)) {
                    trim(&project_variable(&inner, x)?)
                } else if self.keep_artifacts {
                    let arts = universal_quantify_with_artifacts(&inner, x)?;
                    let out = arts.result.clone();
                    self.quantifications.push(arts);
                    out
                } else {
                    universal_quantify(&inner, x)?
                };
                let what = match f {
                    Formula::Exists(..) => format!("exists {x}"),
                    _ => format!("forall {x}"),
                };
                Ok(self.record(what, out))
            }
            Formula::Not(atom) => self.atom(atom, true, &sig),
            atom => self.atom(atom, false, &sig),
        }
    }

    fn atom(
        &mut self,
        atom: &Formula,
        negated: bool,
        sig: &VariableSignature,
    ) -> Result<BuchiAutomaton> {
        let out = match atom {
            Formula::Rel(name, args) => {
                let a = self
                    .relations
                    .relation(name, args, negated)
                    .ok_or_else(|| Error::UnknownRelation(name.clone()))??;
                align(&a, sig)?
            }
            Formula::True | Formula::False => {
                if matches!(atom, Formula::True) != negated {
                    valid_encodings_automaton(sig)
                } else {
                    BuchiAutomaton::empty(sig.clone())
                }
            }
            _ => atom_automaton(atom, negated, sig)?,
        };
        let what = if negated {
            format!("!{atom}")
        } else {
            format!("{atom}")
        };
        Ok(self.record(what, out))
    }
}

/// Canonical signature of the free variables of `f`.
pub fn signature_of(f: &Formula) -> Result<VariableSignature> {
    let free = f.free_vars();
    let fo = free.iter().filter(|v| kind_of_name(v) == VarKind::First);
    let so = free.iter().filter(|v| kind_of_name(v) == VarKind::Second);
    VariableSignature::new(fo, so)
}

/// Compiles `f` with default options and no user relations.
pub fn compile(f: &Formula) -> Result<BuchiAutomaton> {
    Compiler::new(CompileOptions::default()).compile(f)
}
