//! Language-preserving state reduction by bisimulation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::{Acceptance, Automaton, Label, Transition};

/// Quotient of `a` by the coarsest bisimulation that separates accepting
/// from non-accepting states, `ε` being treated as an ordinary label.
/// Merged states have the same runs up to the quotient, so the language
/// is unchanged for both acceptance conditions.
pub fn bisimulation_quotient<K: Acceptance>(a: &Automaton<K>) -> Automaton<K> {
    let n = a.num_states();
    if n == 0 {
        return a.clone();
    }
    let succ = a.successors();
    let mut class: Vec<usize> = a.states().map(|q| a.is_accepting(q) as usize).collect();
    let mut count = 0;
    loop {
        let mut signatures: BTreeMap<(usize, BTreeSet<(Label, usize)>), usize> = BTreeMap::new();
        let next: Vec<usize> = a
            .states()
            .map(|q| {
                let moves = succ[q].iter().map(|&(l, d)| (l, class[d])).collect();
                let k = signatures.len();
                *signatures.entry((class[q], moves)).or_insert(k)
            })
            .collect();
        let classes = signatures.len();
        class = next;
        if classes == count {
            break;
        }
        count = classes;
    }
    if count == n {
        return a.clone();
    }
    let transitions = a
        .transitions()
        .iter()
        .map(|t| Transition::new(class[t.src], t.label, class[t.dst]))
        .filter(|t| !(t.label.is_epsilon() && t.src == t.dst))
        .collect();
    let mut names = BTreeMap::new();
    for q in a.states() {
        if let Some(name) = a.state_name(q) {
            names
                .entry(class[q])
                .or_insert_with(|| alloc::string::String::from(name));
        }
    }
    Automaton::from_parts(
        a.signature().clone(),
        count,
        transitions,
        a.initial().iter().map(|&q| class[q]).collect(),
        a.accepting().iter().map(|&q| class[q]).collect(),
        names,
    )
}
