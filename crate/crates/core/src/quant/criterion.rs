//! Acceptance criterion for runs of the subset automaton: the languages
//! `A_q`, `A_{q,r}`, `U_q`, `U'_{q'}` and the final assembly of `A''`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::subset::SubsetAutomaton;
use crate::automata::{
    finite_intersection, finite_minimize, finite_union, omega_closure, paths_automaton, trim,
    Buchi, BuchiAutomaton, FiniteAutomaton, Label, StateId, Transition,
};
use crate::encoding::project_variable;
use crate::{Error, Result};

/// `A_q`: non-empty projections of the cycles `q → q` of `a` that visit an
/// accepting state. `q` itself counts as visited when it is accepting.
pub fn cycle_language_with_accept(
    a: &BuchiAutomaton,
    q: StateId,
    var: &str,
) -> Result<FiniteAutomaton> {
    a.check_state(q)?;
    let succ = a.successors();
    // (state, accepting state visited, symbol read)
    let mut ids: BTreeMap<(StateId, bool, bool), StateId> = BTreeMap::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    let mut intern = |key: (StateId, bool, bool), order: &mut Vec<_>, queue: &mut VecDeque<_>| {
        *ids.entry(key).or_insert_with(|| {
            order.push(key);
            queue.push_back(key);
            order.len() - 1
        })
    };
    let start = intern((q, a.is_accepting(q), false), &mut order, &mut queue);
    let mut transitions = Vec::new();
    while let Some(key @ (p, seen, read)) = queue.pop_front() {
        let src = intern(key, &mut order, &mut queue);
        for &(label, d) in &succ[p] {
            let next = (d, seen || a.is_accepting(d), read || !label.is_epsilon());
            let dst = intern(next, &mut order, &mut queue);
            transitions.push(Transition::new(src, label, dst));
        }
    }
    let accepting = order
        .iter()
        .position(|&k| k == (q, true, true))
        .into_iter()
        .collect();
    let cycles = FiniteAutomaton::from_parts(
        a.signature().clone(),
        order.len(),
        transitions,
        BTreeSet::from([start]),
        accepting,
        BTreeMap::new(),
    );
    Ok(finite_minimize(&project_variable(&cycles, var)?))
}

/// `A_{q,r}`: projections of the paths `q → r`.
pub fn path_language(
    a: &BuchiAutomaton,
    q: StateId,
    r: StateId,
    var: &str,
) -> Result<FiniteAutomaton> {
    Ok(finite_minimize(&project_variable(
        &paths_automaton(a, q, r)?,
        var,
    )?))
}

/// `A_{U_q} = ⋃_r (A_{q,r} ∩ A_r)`.
pub fn u_language(a: &BuchiAutomaton, q: StateId, var: &str) -> Result<FiniteAutomaton> {
    a.check_state(q)?;
    let cycles: Vec<FiniteAutomaton> = a
        .states()
        .map(|r| cycle_language_with_accept(a, r, var))
        .collect::<Result<_>>()?;
    u_language_from(a, q, var, &cycles)
}

/// [`u_language`] reusing precomputed cycle automata `cycles[r] = A_r`.
pub(crate) fn u_language_from(
    a: &BuchiAutomaton,
    q: StateId,
    var: &str,
    cycles: &[FiniteAutomaton],
) -> Result<FiniteAutomaton> {
    let sig = a.signature().without(var)?;
    let mut out = FiniteAutomaton::empty(sig);
    for r in a.states() {
        if cycles[r].num_states() == 0 {
            continue;
        }
        let part = trim(&finite_intersection(
            &path_language(a, q, r, var)?,
            &cycles[r],
        )?);
        if part.num_states() > 0 {
            out = finite_union(&out, &part)?;
        }
    }
    Ok(finite_minimize(&out))
}

/// `A'_{U'_{q'}} = L(A', q', q') ∩ ⋂_{q ∈ q'} A_{U_q}`, with `u_languages[q]`
/// the automaton for `U_q`.
pub fn widget_language(
    subset: &SubsetAutomaton,
    state: StateId,
    u_languages: &[FiniteAutomaton],
) -> Result<FiniteAutomaton> {
    subset.automaton.check_state(state)?;
    if !subset.has_accepting_member(state) {
        return Err(Error::NoAcceptingMember);
    }
    let members: Vec<StateId> = subset.subsets[state].iter().collect();
    let mut common = u_languages[members[0]].clone();
    for &q in &members[1..] {
        if common.num_states() == 0 {
            break;
        }
        common = finite_minimize(&finite_intersection(&common, &u_languages[q])?);
    }
    if common.num_states() == 0 {
        return Ok(common);
    }
    let cycles = trim(&paths_automaton(&subset.automaton, state, state)?);
    Ok(finite_minimize(&finite_intersection(&cycles, &common)?))
}

/// Grafts the `ω`-closure of each widget language beside its subset state
/// through an `ε`-transition; the fresh `repeat` states are the only
/// accepting states. Widgets with an empty language are skipped.
pub fn assemble(
    subset: &SubsetAutomaton,
    widgets: &[(StateId, FiniteAutomaton)],
) -> Result<BuchiAutomaton> {
    let base = &subset.automaton;
    let mut out = base.clone();
    let mut names: BTreeMap<StateId, String> = base.names().clone();
    let mut accepting = BTreeSet::new();
    let mut links = Vec::new();
    for (state, language) in widgets {
        base.check_state(*state)?;
        if language.num_states() == 0 || crate::automata::finite_is_empty(language) {
            continue;
        }
        let widget = omega_closure(language)?;
        let offset = out.append(&widget.clone().with_names(BTreeMap::new()));
        let owner = base
            .state_name(*state)
            .map_or_else(|| format!("{state}"), String::from);
        for q in widget.states() {
            let tag = widget.state_name(q).unwrap_or("w");
            let tag = if tag == "repeat" {
                String::from(tag)
            } else {
                format!("w{q}")
            };
            names.insert(q + offset, format!("{owner}/{tag}"));
        }
        let repeat = widget
            .initial()
            .iter()
            .next()
            .copied()
            .expect("ω-closure has an initial state");
        accepting.insert(repeat + offset);
        links.push(Transition::new(*state, Label::Epsilon, repeat + offset));
    }
    out.add_transitions(links);
    let initial = base.initial().clone();
    Ok(trim::<Buchi>(
        &out.with_endpoints(initial, accepting).with_names(names),
    ))
}
