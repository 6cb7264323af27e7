//! Variable-track surgery: projection, insertion, reordering.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::automata::{
    Acceptance, Automaton, Label, StateId, Transition, VarKind, VariableSignature,
};
use crate::{Error, Result};

/// Deletes the track of `var` from every symbol. For a first-order
/// variable this is existential quantification.
pub fn project_variable<K: Acceptance>(a: &Automaton<K>, var: &str) -> Result<Automaton<K>> {
    let track = a
        .signature()
        .track_of(var)
        .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
    let sig = a.signature().without(var)?;
    Ok(a.map_symbols(sig, |s| vec![s.without_track(track)]))
}

/// Inserts a new track for `var` at `position` among the variables of its
/// kind. A second-order track is unconstrained; a first-order track must
/// read exactly one `1`.
pub fn add_variable<K: Acceptance>(
    a: &Automaton<K>,
    var: &str,
    kind: VarKind,
    position: usize,
) -> Result<Automaton<K>> {
    let (sig, track) = a.signature().with(var, kind, position)?;
    match kind {
        VarKind::Second => Ok(a.map_symbols(sig, |s| {
            vec![s.with_track(track, false), s.with_track(track, true)]
        })),
        VarKind::First => Ok(with_first_order_track(a, sig, track)),
    }
}

/// Product with the two-state "one `1` on `track`" gadget, built over the
/// reachable pairs only. Accepting states are those past the `1`.
fn with_first_order_track<K: Acceptance>(
    a: &Automaton<K>,
    sig: VariableSignature,
    track: usize,
) -> Automaton<K> {
    let succ = a.successors();
    let mut ids: BTreeMap<(StateId, bool), StateId> = BTreeMap::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    let mut intern = |key: (StateId, bool), order: &mut Vec<_>, queue: &mut VecDeque<_>| {
        *ids.entry(key).or_insert_with(|| {
            order.push(key);
            queue.push_back(key);
            order.len() - 1
        })
    };
    let initial: BTreeSet<StateId> = a
        .initial()
        .iter()
        .map(|&q| intern((q, false), &mut order, &mut queue))
        .collect();
    let mut transitions = Vec::new();
    while let Some((q, seen)) = queue.pop_front() {
        let src = intern((q, seen), &mut order, &mut queue);
        for &(label, dst) in &succ[q] {
            match label {
                Label::Epsilon => {
                    let d = intern((dst, seen), &mut order, &mut queue);
                    transitions.push(Transition::new(src, Label::Epsilon, d));
                }
                Label::Sym(s) => {
                    let d = intern((dst, seen), &mut order, &mut queue);
                    transitions.push(Transition::new(
                        src,
                        Label::Sym(s.with_track(track, false)),
                        d,
                    ));
                    if !seen {
                        let d = intern((dst, true), &mut order, &mut queue);
                        transitions.push(Transition::new(
                            src,
                            Label::Sym(s.with_track(track, true)),
                            d,
                        ));
                    }
                }
            }
        }
    }
    let accepting = order
        .iter()
        .enumerate()
        .filter(|(_, &(q, seen))| seen && a.is_accepting(q))
        .map(|(i, _)| i)
        .collect();
    Automaton::from_parts(
        sig,
        order.len(),
        transitions,
        initial,
        accepting,
        BTreeMap::new(),
    )
}

/// Reorders tracks so that variables appear in `order` (first-order names
/// keep coming before second-order ones).
pub fn reorder_variables<K: Acceptance>(a: &Automaton<K>, order: &[&str]) -> Result<Automaton<K>> {
    let sig = a.signature();
    let distinct: BTreeSet<&str> = order.iter().copied().collect();
    if order.len() != sig.width()
        || distinct.len() != order.len()
        || !order.iter().all(|n| sig.contains(n))
    {
        return Err(Error::InvalidPermutation);
    }
    let fo: Vec<&str> = order
        .iter()
        .copied()
        .filter(|n| sig.kind_of(n) == Some(VarKind::First))
        .collect();
    let so: Vec<&str> = order
        .iter()
        .copied()
        .filter(|n| sig.kind_of(n) == Some(VarKind::Second))
        .collect();
    let new_sig = VariableSignature::new(fo, so)?;
    permute_to(a, new_sig)
}

/// Permutes tracks to match `target`, which must name the same variables.
fn permute_to<K: Acceptance>(a: &Automaton<K>, target: VariableSignature) -> Result<Automaton<K>> {
    let sig = a.signature();
    let perm: Vec<usize> = target
        .names()
        .map(|n| sig.track_of(n).ok_or(Error::InvalidPermutation))
        .collect::<Result<_>>()?;
    if perm.len() != sig.width() {
        return Err(Error::InvalidPermutation);
    }
    if target == *sig {
        return Ok(a.clone());
    }
    Ok(a.map_symbols(target, |s| vec![s.permuted(&perm)]))
}

/// Brings `a` onto `target`: missing variables are added (first-order ones
/// with their validity constraint), then tracks are permuted.
pub fn align<K: Acceptance>(a: &Automaton<K>, target: &VariableSignature) -> Result<Automaton<K>> {
    if let Some(extra) = a.signature().names().find(|n| !target.contains(n)) {
        return Err(Error::UnknownVariable(extra.to_string()));
    }
    let mut out = a.clone();
    for name in target.names() {
        if !out.signature().contains(name) {
            let kind = target.kind_of(name).expect("name from target");
            let end = match kind {
                VarKind::First => out.signature().fo_count(),
                VarKind::Second => out.signature().so_vars().len(),
            };
            out = add_variable(&out, name, kind, end)?;
        }
    }
    for name in target.names() {
        if out.signature().kind_of(name) != target.kind_of(name) {
            return Err(Error::SignatureMismatch);
        }
    }
    permute_to(&out, target.clone())
}
