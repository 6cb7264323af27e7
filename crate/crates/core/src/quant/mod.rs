//! Universal first-order quantification computed directly on Büchi
//! automata, without complementation.
//!
//! For `∀x. φ` the automaton for `φ` is first normalized so that no
//! transition reading a `1` on a first-order track lies on a cycle. A
//! subset automaton `A'` then simulates, for every `n` at once, the runs
//! that read their `x`-transition after exactly `n` symbols. Runs of `A'`
//! are accepted only through widgets: for a subset state `q'` with an
//! accepting member, the widget accepts `u^ω` for the words `u` that label
//! a cycle `q' → q'` and whose repetition every member `q ∈ q'` accepts
//! (the language `U'_{q'}`).
//!
//! `ε`-cycles of the normalized automaton are collapsed and bisimilar
//! states merged before the subset construction, and the assembled
//! automaton is made `ε`-free and reduced the same way. Each `ε`-edge
//! of the input doubles the subsets the construction may reach, so nested
//! quantifiers stay tractable only if intermediate results carry none.

mod criterion;
mod normalize;
mod subset;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

pub use criterion::{
    assemble, cycle_language_with_accept, path_language, u_language, widget_language,
};
pub use normalize::{acyclic_fo_normalize, is_fo_acyclic};
pub use subset::{subset_construction, subset_construction_from, StateSet, SubsetAutomaton};

use crate::automata::{
    bisimulation_quotient, buchi_intersection, collapse_epsilon_cycles, remove_epsilon,
    BuchiAutomaton, FiniteAutomaton, StateId, VarKind,
};
use crate::encoding::valid_encodings_automaton;
use crate::{Error, Result};

/// Widget language `U'_{q'}` for one state of the trimmed subset automaton.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Widget {
    /// State of the trimmed subset automaton.
    pub state: StateId,
    pub subset: StateSet,
    pub language: FiniteAutomaton,
}

/// Every intermediate automaton of one run of the quantification pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantPipelineArtifacts {
    pub variable: alloc::string::String,
    pub normalized: BuchiAutomaton,
    /// Reachable part of `A'`, before trimming.
    pub subset: SubsetAutomaton,
    pub trimmed_subset: SubsetAutomaton,
    /// `A_q` for every state `q` of the normalized automaton.
    pub cycles: Vec<FiniteAutomaton>,
    /// `A_{q,r}` for the pairs with a non-empty language.
    pub paths: BTreeMap<(StateId, StateId), FiniteAutomaton>,
    /// `U_q` for every state `q` of the normalized automaton.
    pub u_languages: Vec<FiniteAutomaton>,
    pub widgets: Vec<Widget>,
    /// `A''` as assembled, with its `ε`-links to the widgets.
    pub assembled: BuchiAutomaton,
    /// `A''` without `ε`-transitions, restricted to valid encodings.
    pub result: BuchiAutomaton,
}

/// Automaton for `∀var. L(a)`, where `a` recognizes valid encodings.
pub fn universal_quantify(a: &BuchiAutomaton, var: &str) -> Result<BuchiAutomaton> {
    run(a, var, false).map(|arts| arts.result)
}

/// [`universal_quantify`], also returning every stage of the pipeline.
pub fn universal_quantify_with_artifacts(
    a: &BuchiAutomaton,
    var: &str,
) -> Result<QuantPipelineArtifacts> {
    run(a, var, true)
}

fn run(a: &BuchiAutomaton, var: &str, keep_paths: bool) -> Result<QuantPipelineArtifacts> {
    match a.signature().kind_of(var) {
        None => return Err(Error::UnknownVariable(var.into())),
        Some(VarKind::Second) => return Err(Error::NotFirstOrder(var.into())),
        Some(VarKind::First) => {}
    }
    let normalized = bisimulation_quotient(&collapse_epsilon_cycles(&acyclic_fo_normalize(a)));
    let subset = subset_construction(&normalized, var)?;
    let trimmed_subset = subset.trimmed();

    let cycles: Vec<FiniteAutomaton> = normalized
        .states()
        .map(|q| cycle_language_with_accept(&normalized, q, var))
        .collect::<Result<_>>()?;
    let mut paths = BTreeMap::new();
    if keep_paths {
        for q in normalized.states() {
            for r in normalized.states() {
                let p = path_language(&normalized, q, r, var)?;
                if p.num_states() > 0 {
                    paths.insert((q, r), p);
                }
            }
        }
    }
    // U_q is only needed for members of subset states that get a widget
    let mut needed = alloc::vec![keep_paths; normalized.num_states()];
    for (s, members) in trimmed_subset.subsets.iter().enumerate() {
        if trimmed_subset.has_accepting_member(s) {
            members.iter().for_each(|q| needed[q] = true);
        }
    }
    let out_sig = normalized.signature().without(var)?;
    let u_languages: Vec<FiniteAutomaton> = normalized
        .states()
        .map(|q| {
            if needed[q] {
                criterion::u_language_from(&normalized, q, var, &cycles)
            } else {
                Ok(FiniteAutomaton::empty(out_sig.clone()))
            }
        })
        .collect::<Result<_>>()?;

    let mut widgets = Vec::new();
    for state in trimmed_subset.automaton.states() {
        if trimmed_subset.has_accepting_member(state) {
            widgets.push(Widget {
                state,
                subset: trimmed_subset.subsets[state].clone(),
                language: widget_language(&trimmed_subset, state, &u_languages)?,
            });
        }
    }
    let grafts: Vec<(StateId, FiniteAutomaton)> = widgets
        .iter()
        .map(|w| (w.state, w.language.clone()))
        .collect();
    let assembled = assemble(&trimmed_subset, &grafts)?;
    let mut result = remove_epsilon(&assembled);
    if out_sig.fo_count() > 0 {
        result = crate::automata::trim(&buchi_intersection(
            &result,
            &valid_encodings_automaton(&out_sig),
        )?);
    }
    let result = bisimulation_quotient(&result);
    Ok(QuantPipelineArtifacts {
        variable: var.into(),
        normalized,
        subset,
        trimmed_subset,
        cycles,
        paths,
        u_languages,
        widgets,
        assembled,
        result,
    })
}
