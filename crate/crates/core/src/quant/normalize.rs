use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::automata::{trim, BuchiAutomaton, Label, StateId, Transition};

/// Equivalent automaton (on valid encodings) in which no transition reading
/// a `1` on a first-order track lies on a cycle.
///
/// States are paired with the set of first-order tracks consumed so far;
/// a transition may only consume fresh tracks, so consuming transitions
/// strictly climb the lattice. Acceptance requires the top layer. The
/// result is trimmed.
pub fn acyclic_fo_normalize(a: &BuchiAutomaton) -> BuchiAutomaton {
    if a.signature().fo_count() == 0 {
        return a.clone();
    }
    let full = a.signature().fo_mask();
    let succ = a.successors();
    let mut ids: BTreeMap<(StateId, u64), StateId> = BTreeMap::new();
    let mut order: Vec<(StateId, u64)> = Vec::new();
    let mut queue = VecDeque::new();
    let mut intern = |key: (StateId, u64), order: &mut Vec<_>, queue: &mut VecDeque<_>| {
        *ids.entry(key).or_insert_with(|| {
            order.push(key);
            queue.push_back(key);
            order.len() - 1
        })
    };
    let initial: BTreeSet<StateId> = a
        .initial()
        .iter()
        .map(|&q| intern((q, 0), &mut order, &mut queue))
        .collect();
    let mut transitions = Vec::new();
    while let Some((q, layer)) = queue.pop_front() {
        let src = intern((q, layer), &mut order, &mut queue);
        for &(label, dst) in &succ[q] {
            let consumed = label.symbol().map_or(0, |s| s.bits() & full);
            if consumed & layer != 0 {
                continue;
            }
            let d = intern((dst, layer | consumed), &mut order, &mut queue);
            transitions.push(Transition::new(src, label, d));
        }
    }
    let accepting = order
        .iter()
        .enumerate()
        .filter(|(_, &(q, layer))| layer == full && a.is_accepting(q))
        .map(|(i, _)| i)
        .collect();
    let names = order
        .iter()
        .enumerate()
        .filter_map(|(i, &(q, _))| a.state_name(q).map(|n| (i, n.into())))
        .collect();
    trim(&BuchiAutomaton::from_parts(
        a.signature().clone(),
        order.len(),
        transitions,
        initial,
        accepting,
        names,
    ))
}

/// True iff no transition with a `1` on a first-order track lies on a cycle.
pub fn is_fo_acyclic(a: &BuchiAutomaton) -> bool {
    let adj = crate::automata::adjacency(a);
    let (comp, _) = crate::automata::graph::scc(&adj, a.states());
    let mask = a.signature().fo_mask();
    a.transitions().iter().all(|t| match t.label {
        // an edge lies on a cycle iff both ends share a component
        Label::Sym(s) if s.bits() & mask != 0 => comp[t.src] != comp[t.dst],
        _ => true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{lasso_membership, Buchi, Builder, LassoWord};
    use crate::encoding::valid_encodings_automaton;
    use crate::VariableSignature;

    #[test]
    fn self_loop_on_first_order_track_is_removed() {
        // valid language 0*10^ω, but the 1 sits on a self-loop of an
        // accepting state that also loops on 0
        let sig = VariableSignature::new(["x"], [""; 0]).unwrap();
        let mut b = Builder::<Buchi>::new(sig.clone());
        b.add_states(2);
        b.initial(0).accepting(1);
        b.bits(0, &["0"], 0)
            .bits(0, &["1"], 1)
            .bits(1, &["0", "1"], 1);
        let a = buchi_intersection_with_valid(&b.build().unwrap());
        let n = acyclic_fo_normalize(&a);
        assert!(!is_fo_acyclic(&b.build().unwrap()));
        assert!(is_fo_acyclic(&n));
        for w in LassoWord::enumerate(1, 3, 3) {
            assert_eq!(lasso_membership(&a, &w), lasso_membership(&n, &w), "{w}");
        }
    }

    fn buchi_intersection_with_valid(a: &BuchiAutomaton) -> BuchiAutomaton {
        crate::automata::buchi_intersection(a, &valid_encodings_automaton(a.signature())).unwrap()
    }

    #[test]
    fn no_first_order_track_is_a_copy() {
        let sig = VariableSignature::new([""; 0], ["X"]).unwrap();
        let mut b = Builder::<Buchi>::new(sig);
        let q = b.add_state();
        b.initial(q).accepting(q).bits(q, &["1"], q);
        let a = b.build().unwrap();
        assert_eq!(acyclic_fo_normalize(&a), a);
    }
}
