//! Product constructions. `ε`-moves interleave: one side moves while the
//! other stays put; symbol moves are synchronous.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use super::{Acceptance, Automaton, BuchiAutomaton, FiniteAutomaton, Label, StateId, Transition};
use crate::Result;

/// Reachable part of a synchronous product whose states are
/// `(left, right, extra)` triples. `step` maps the extra component across
/// one move given the source states.
fn explore<K: Acceptance, E: Ord + Copy>(
    a: &Automaton<K>,
    b: &Automaton<K>,
    start: E,
    step: impl Fn(StateId, StateId, E) -> E,
    accepting: impl Fn(StateId, StateId, E) -> bool,
) -> Automaton<K> {
    let sa = a.successors();
    let sb = b.successors();
    let mut ids: BTreeMap<(StateId, StateId, E), StateId> = BTreeMap::new();
    let mut order: Vec<(StateId, StateId, E)> = Vec::new();
    let mut queue = VecDeque::new();
    let mut transitions = Vec::new();
    let intern = |key: (StateId, StateId, E),
                  ids: &mut BTreeMap<_, _>,
                  order: &mut Vec<_>,
                  queue: &mut VecDeque<_>| {
        *ids.entry(key).or_insert_with(|| {
            order.push(key);
            queue.push_back(key);
            order.len() - 1
        })
    };
    let mut initial = BTreeSet::new();
    for &p in a.initial() {
        for &q in b.initial() {
            initial.insert(intern((p, q, start), &mut ids, &mut order, &mut queue));
        }
    }
    while let Some(key @ (p, q, e)) = queue.pop_front() {
        let src = ids[&key];
        let e2 = step(p, q, e);
        let mut targets = Vec::new();
        for &(l1, d1) in &sa[p] {
            match l1 {
                Label::Epsilon => targets.push((Label::Epsilon, (d1, q, e2))),
                Label::Sym(s) => {
                    for &(l2, d2) in &sb[q] {
                        if l2 == Label::Sym(s) {
                            targets.push((l1, (d1, d2, e2)));
                        }
                    }
                }
            }
        }
        for &(l2, d2) in &sb[q] {
            if l2.is_epsilon() {
                targets.push((Label::Epsilon, (p, d2, e2)));
            }
        }
        for (label, key2) in targets {
            let dst = intern(key2, &mut ids, &mut order, &mut queue);
            transitions.push(Transition::new(src, label, dst));
        }
    }
    let accepting = order
        .iter()
        .enumerate()
        .filter(|(_, &(p, q, e))| accepting(p, q, e))
        .map(|(id, _)| id)
        .collect();
    Automaton::from_parts(
        a.signature().clone(),
        order.len(),
        transitions,
        initial,
        accepting,
        BTreeMap::new(),
    )
}

/// `L(a) ∩ L(b)` for Büchi automata. The flag records which factor's
/// accepting set is awaited next; it flips when leaving an accepting state
/// of that factor, and the product accepts on `F_a` while waiting for `a`.
pub fn buchi_intersection(a: &BuchiAutomaton, b: &BuchiAutomaton) -> Result<BuchiAutomaton> {
    a.check_same_signature(b)?;
    Ok(explore(
        a,
        b,
        false,
        |p, q, waiting_b| match waiting_b {
            false => a.is_accepting(p),
            true => !b.is_accepting(q),
        },
        |p, _, waiting_b| !waiting_b && a.is_accepting(p),
    ))
}

/// `L(a) ∪ L(b)` by disjoint juxtaposition.
pub fn buchi_union(a: &BuchiAutomaton, b: &BuchiAutomaton) -> Result<BuchiAutomaton> {
    juxtapose(a, b)
}

pub fn finite_intersection(a: &FiniteAutomaton, b: &FiniteAutomaton) -> Result<FiniteAutomaton> {
    a.check_same_signature(b)?;
    Ok(explore(
        a,
        b,
        (),
        |_, _, ()| (),
        |p, q, ()| a.is_accepting(p) && b.is_accepting(q),
    ))
}

pub fn finite_union(a: &FiniteAutomaton, b: &FiniteAutomaton) -> Result<FiniteAutomaton> {
    juxtapose(a, b)
}

fn juxtapose<K: Acceptance>(a: &Automaton<K>, b: &Automaton<K>) -> Result<Automaton<K>> {
    a.check_same_signature(b)?;
    let mut out = a.clone().with_names(BTreeMap::new());
    let offset = out.append(&b.clone().with_names(BTreeMap::new()));
    let initial = a
        .initial()
        .iter()
        .copied()
        .chain(b.initial().iter().map(|q| q + offset))
        .collect();
    let accepting = a
        .accepting()
        .iter()
        .copied()
        .chain(b.accepting().iter().map(|q| q + offset))
        .collect();
    Ok(out.with_endpoints(initial, accepting))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{lasso_membership, Builder, LassoWord};
    use crate::{Buchi, Error, VariableSignature};

    fn sig() -> VariableSignature {
        VariableSignature::new(["x"; 0], ["X"]).unwrap()
    }

    /// Infinitely many `b`s.
    fn inf(b: &str) -> BuchiAutomaton {
        let other = if b == "1" { "0" } else { "1" };
        let mut bl = Builder::<Buchi>::new(sig());
        bl.add_states(2);
        bl.initial(0).accepting(1);
        bl.bits(0, &[other], 0)
            .bits(0, &[b], 1)
            .bits(1, &[b], 1)
            .bits(1, &[other], 0);
        bl.build().unwrap()
    }

    #[test]
    fn intersection_needs_both_infinitely_often() {
        let both = buchi_intersection(&inf("1"), &inf("0")).unwrap();
        let check =
            |u: &str, v: &str| lasso_membership(&both, &LassoWord::parse(u, v).unwrap()).unwrap();
        assert!(check("", "0 1"));
        assert!(!check("0 1 0", "1"));
        assert!(!check("1 1", "0"));
    }

    #[test]
    fn epsilon_moves_interleave() {
        // a: 0 -eps-> 1, 1 -1-> 1 (acc 1); b: all ones
        let mut bl = Builder::<Buchi>::new(sig());
        bl.add_states(2);
        bl.initial(0).accepting(1).epsilon(0, 1).bits(1, &["1"], 1);
        let a = bl.build().unwrap();
        let p = buchi_intersection(&a, &inf("1")).unwrap();
        assert!(lasso_membership(&p, &LassoWord::parse("", "1").unwrap()).unwrap());
        assert!(!lasso_membership(&p, &LassoWord::parse("0", "1").unwrap()).unwrap());
    }

    #[test]
    fn signature_mismatch() {
        let other = BuchiAutomaton::empty(VariableSignature::new(["x"], ["X"; 0]).unwrap());
        assert_eq!(
            buchi_intersection(&inf("1"), &other).unwrap_err(),
            Error::SignatureMismatch
        );
        assert_eq!(
            buchi_union(&inf("1"), &other).unwrap_err(),
            Error::SignatureMismatch
        );
    }
}
