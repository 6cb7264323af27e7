//! Determinization and minimization of finite-word automata. Only used to
//! keep the finite-word languages of the quantification pipeline small;
//! Büchi automata are never determinized.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use super::ops::{epsilon_closure, step_symbol, trim};
use super::{FiniteAutomaton, Label, StateId, Symbol, Transition};

/// Equivalent deterministic automaton without `ε`-transitions, over the
/// reachable sets of states. Missing transitions lead to rejection.
pub fn finite_determinize(a: &FiniteAutomaton) -> FiniteAutomaton {
    let succ = a.successors();
    let start = epsilon_closure(a, &succ, a.initial().iter().copied());
    let mut ids: BTreeMap<BTreeSet<StateId>, StateId> = BTreeMap::new();
    let mut order: Vec<BTreeSet<StateId>> = Vec::new();
    let mut queue = VecDeque::new();
    ids.insert(start.clone(), 0);
    order.push(start.clone());
    queue.push_back(start);
    let mut transitions = Vec::new();
    while let Some(set) = queue.pop_front() {
        let src = ids[&set];
        let symbols: BTreeSet<Symbol> = set
            .iter()
            .flat_map(|&q| succ[q].iter())
            .filter_map(|(l, _)| l.symbol())
            .collect();
        for sym in symbols {
            let next = epsilon_closure(a, &succ, step_symbol(&succ, &set, sym));
            let dst = *ids.entry(next.clone()).or_insert_with(|| {
                order.push(next.clone());
                queue.push_back(next);
                order.len() - 1
            });
            transitions.push(Transition::new(src, Label::Sym(sym), dst));
        }
    }
    let accepting = order
        .iter()
        .enumerate()
        .filter(|(_, s)| s.iter().any(|&q| a.is_accepting(q)))
        .map(|(i, _)| i)
        .collect();
    FiniteAutomaton::from_parts(
        a.signature().clone(),
        order.len(),
        transitions,
        BTreeSet::from([0]),
        accepting,
        BTreeMap::new(),
    )
}

/// Minimal trim deterministic automaton for `L(a)`, by Moore partition
/// refinement of the determinized automaton.
pub fn finite_minimize(a: &FiniteAutomaton) -> FiniteAutomaton {
    let d = trim(&finite_determinize(a));
    if d.num_states() == 0 {
        return d;
    }
    let mut delta: Vec<BTreeMap<Symbol, StateId>> = alloc::vec![BTreeMap::new(); d.num_states()];
    for t in d.transitions() {
        if let Label::Sym(s) = t.label {
            delta[t.src].insert(s, t.dst);
        }
    }
    let mut class: Vec<usize> = d.states().map(|q| d.is_accepting(q) as usize).collect();
    let mut count = 0;
    loop {
        let mut signatures: BTreeMap<(usize, Vec<(Symbol, usize)>), usize> = BTreeMap::new();
        let next: Vec<usize> = d
            .states()
            .map(|q| {
                let key = (
                    class[q],
                    delta[q].iter().map(|(&s, &t)| (s, class[t])).collect(),
                );
                let n = signatures.len();
                *signatures.entry(key).or_insert(n)
            })
            .collect();
        let classes = signatures.len();
        class = next;
        if classes == count {
            break;
        }
        count = classes;
    }
    let transitions = d
        .transitions()
        .iter()
        .map(|t| Transition::new(class[t.src], t.label, class[t.dst]))
        .collect();
    let initial = d.initial().iter().map(|&q| class[q]).collect();
    let accepting = d.accepting().iter().map(|&q| class[q]).collect();
    FiniteAutomaton::from_parts(
        d.signature().clone(),
        count,
        transitions,
        initial,
        accepting,
        BTreeMap::new(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{finite_membership, words};
    use crate::regex::Regex;

    #[test]
    fn minimal_sizes() {
        for (text, states) in [
            ("(0+1)^* 1 (0+1)^*", 2),
            ("(0+1)^+ 1 (0+1)^*", 3),
            ("(0+1)^+", 2),
            ("∅", 0),
            ("(0 1)^* + (0 1)^* 0", 2),
        ] {
            let a = Regex::parse(text).unwrap().to_automaton();
            let m = finite_minimize(&a);
            assert_eq!(m.num_states(), states, "{text}");
            for len in 0..=6 {
                for w in words(1, len) {
                    assert_eq!(
                        finite_membership(&a, &w).unwrap(),
                        finite_membership(&m, &w).unwrap(),
                        "{text}"
                    );
                }
            }
        }
    }
}
