use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::graph::{self, Adjacency};
use super::{
    Acceptance, Automaton, Buchi, BuchiAutomaton, Finite, FiniteAutomaton, Label, LassoWord,
    StateId, Symbol, Transition,
};
use crate::{Error, Result};

pub(crate) fn adjacency<K: Acceptance>(a: &Automaton<K>) -> Adjacency {
    let mut adj = vec![Vec::new(); a.num_states()];
    for t in a.transitions() {
        adj[t.src].push((t.dst, !t.label.is_epsilon()));
    }
    adj
}

/// States from which an accepting run (Büchi) or path (finite) exists.
pub trait LiveStates: Acceptance {
    fn productive(a: &Automaton<Self>) -> Vec<bool>;
}

impl LiveStates for Buchi {
    fn productive(a: &Automaton<Self>) -> Vec<bool> {
        let adj = adjacency(a);
        let (comp, comps) = graph::scc(&adj, a.states());
        let good = graph::good_components(&adj, &comp, comps, |q| a.is_accepting(q));
        let in_good: Vec<bool> = comp.iter().map(|&c| good[c]).collect();
        graph::backward_reach(&adj, &in_good)
    }
}

impl LiveStates for Finite {
    fn productive(a: &Automaton<Self>) -> Vec<bool> {
        let adj = adjacency(a);
        let acc: Vec<bool> = a.states().map(|q| a.is_accepting(q)).collect();
        graph::backward_reach(&adj, &acc)
    }
}

/// Removes states that are unreachable or from which nothing is accepted.
/// The language is unchanged.
pub fn trim<K: LiveStates>(a: &Automaton<K>) -> Automaton<K> {
    let keep = live_mask(a);
    if keep.iter().all(|&k| k) {
        return a.clone();
    }
    a.restrict(&keep)
}

/// Merges the states of every `ε`-cycle into one state, accepting if any
/// member is, and drops `ε` self-loops. Inside such a cycle each state can
/// reach every other without reading, so the language is unchanged.
pub fn collapse_epsilon_cycles<K: Acceptance>(a: &Automaton<K>) -> Automaton<K> {
    let mut eps: Adjacency = vec![Vec::new(); a.num_states()];
    for t in a.transitions() {
        if t.label.is_epsilon() {
            eps[t.src].push((t.dst, false));
        }
    }
    let (comp, _) = graph::scc(&eps, a.states());
    // number classes by their smallest member
    let mut class = vec![usize::MAX; a.num_states()];
    let mut first: BTreeMap<usize, StateId> = BTreeMap::new();
    let mut members: Vec<Vec<StateId>> = Vec::new();
    for q in a.states() {
        let c = *first.entry(comp[q]).or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        class[q] = c;
        members[c].push(q);
    }
    if members.len() == a.num_states()
        && !a
            .transitions()
            .iter()
            .any(|t| t.label.is_epsilon() && t.src == t.dst)
    {
        return a.clone();
    }
    let transitions = a
        .transitions()
        .iter()
        .map(|t| Transition::new(class[t.src], t.label, class[t.dst]))
        .filter(|t| !(t.label.is_epsilon() && t.src == t.dst))
        .collect();
    let names = members
        .iter()
        .enumerate()
        .filter_map(|(c, qs)| {
            let parts: Vec<&str> = qs.iter().filter_map(|&q| a.state_name(q)).collect();
            (!parts.is_empty()).then(|| (c, parts.join("=")))
        })
        .collect();
    Automaton::from_parts(
        a.signature().clone(),
        members.len(),
        transitions,
        a.initial().iter().map(|&q| class[q]).collect(),
        a.accepting().iter().map(|&q| class[q]).collect(),
        names,
    )
}

/// Equivalent Büchi automaton without `ε`-transitions.
///
/// States are pairs `(q, seen)`: `seen` records whether an accepting state
/// was passed since the previous symbol (on the `ε`-path before it, or `q`
/// itself). Only the accepting-flagged copies are accepting. At most twice
/// as many states, built from the initial states outward.
pub fn remove_epsilon(a: &BuchiAutomaton) -> BuchiAutomaton {
    let succ = a.successors();
    // ε-reach of p: (s, an accepting state after p on the way, s included)
    let reach = |p: StateId| -> BTreeSet<(StateId, bool)> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![(p, false)];
        while let Some((q, f)) = stack.pop() {
            if !seen.insert((q, f)) {
                continue;
            }
            for &(l, d) in &succ[q] {
                if l.is_epsilon() {
                    stack.push((d, f || a.is_accepting(d)));
                }
            }
        }
        seen
    };
    let mut ids: BTreeMap<(StateId, bool), StateId> = BTreeMap::new();
    let mut order: Vec<(StateId, bool)> = Vec::new();
    let mut intern = |key: (StateId, bool), order: &mut Vec<_>| {
        *ids.entry(key).or_insert_with(|| {
            order.push(key);
            order.len() - 1
        })
    };
    let initial: BTreeSet<StateId> = a
        .initial()
        .iter()
        .map(|&q| intern((q, a.is_accepting(q)), &mut order))
        .collect();
    let mut transitions = Vec::new();
    let mut next = 0;
    while next < order.len() {
        let (p, _) = order[next];
        let src = next;
        next += 1;
        for (s, f) in reach(p) {
            for &(l, r) in &succ[s] {
                if let Label::Sym(_) = l {
                    let dst = intern((r, f || a.is_accepting(r)), &mut order);
                    transitions.push(Transition::new(src, l, dst));
                }
            }
        }
    }
    let accepting = order
        .iter()
        .enumerate()
        .filter(|(_, k)| k.1)
        .map(|(i, _)| i)
        .collect();
    let names = order
        .iter()
        .enumerate()
        .filter_map(|(i, &(q, f))| {
            a.state_name(q).map(|n| {
                (
                    i,
                    if f {
                        alloc::format!("{n}+")
                    } else {
                        String::from(n)
                    },
                )
            })
        })
        .collect();
    trim(&Automaton::from_parts(
        a.signature().clone(),
        order.len(),
        transitions,
        initial,
        accepting,
        names,
    ))
}

/// Reachable and productive states.
pub(crate) fn live_mask<K: LiveStates>(a: &Automaton<K>) -> Vec<bool> {
    let adj = adjacency(a);
    let reach = graph::forward_reach(&adj, a.initial().iter().copied());
    let live = K::productive(a);
    reach.iter().zip(&live).map(|(r, l)| *r && *l).collect()
}

/// `L(a) = ∅`: no reachable strongly connected component contains both an
/// accepting state and a symbol-reading transition.
pub fn buchi_is_empty(a: &BuchiAutomaton) -> bool {
    let adj = adjacency(a);
    !graph::has_accepting_lasso(&adj, a.initial().iter().copied(), |q| a.is_accepting(q))
}

pub fn finite_is_empty(a: &FiniteAutomaton) -> bool {
    let adj = adjacency(a);
    let reach = graph::forward_reach(&adj, a.initial().iter().copied());
    !a.accepting().iter().any(|&q| reach[q])
}

/// A shortest-prefix accepted lasso, or `None` if the language is empty.
///
/// The prefix is a breadth-first path to the first accepting state (in
/// state order) lying in a good component; the period is the shortest cycle
/// through it that reads a symbol. Output depends only on the automaton.
pub fn buchi_witness(a: &BuchiAutomaton) -> Option<LassoWord> {
    let adj = adjacency(a);
    let succ = a.successors();
    let (comp, comps) = graph::scc(&adj, a.initial().iter().copied());
    let good = graph::good_components(&adj, &comp, comps, |q| a.is_accepting(q));
    let is_good = |q: usize| comp[q] != usize::MAX && good[comp[q]];

    let (anchor, prefix_path) = graph::bfs_path(
        &adj,
        a.initial().iter().copied(),
        |_| true,
        |q| is_good(q) && a.is_accepting(q),
    )?;
    let c = comp[anchor];
    let within = |q: usize| comp[q] == c;

    let mut best: Option<Vec<(usize, usize)>> = None;
    for src in a.states().filter(|&q| within(q)) {
        for (e, &(dst, consuming)) in adj[src].iter().enumerate() {
            if !consuming || !within(dst) {
                continue;
            }
            let Some((_, to_src)) = graph::bfs_path(&adj, [anchor], within, |q| q == src) else {
                continue;
            };
            let Some((_, back)) = graph::bfs_path(&adj, [dst], within, |q| q == anchor) else {
                continue;
            };
            let mut cycle = to_src;
            cycle.push((src, e));
            cycle.extend(back);
            if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                best = Some(cycle);
            }
        }
    }
    let symbols = |path: &[(usize, usize)]| -> Vec<Symbol> {
        path.iter()
            .filter_map(|&(v, e)| succ[v][e].0.symbol())
            .collect()
    };
    let period = symbols(&best?);
    LassoWord::new(symbols(&prefix_path), period).ok()
}

/// States reachable from `from` by `ε`-transitions only (including `from`).
pub(crate) fn epsilon_closure<K: Acceptance>(
    a: &Automaton<K>,
    succ: &[Vec<(Label, StateId)>],
    from: impl IntoIterator<Item = StateId>,
) -> BTreeSet<StateId> {
    let mut seen: BTreeSet<StateId> = BTreeSet::new();
    let mut stack: Vec<StateId> = from.into_iter().collect();
    while let Some(q) = stack.pop() {
        if !seen.insert(q) {
            continue;
        }
        for &(l, d) in &succ[q] {
            if l.is_epsilon() && !seen.contains(&d) {
                stack.push(d);
            }
        }
    }
    debug_assert!(seen.iter().all(|&q| q < a.num_states()));
    seen
}

pub(crate) fn step_symbol(
    succ: &[Vec<(Label, StateId)>],
    from: &BTreeSet<StateId>,
    sym: Symbol,
) -> BTreeSet<StateId> {
    from.iter()
        .flat_map(|&q| succ[q].iter())
        .filter(|(l, _)| *l == Label::Sym(sym))
        .map(|&(_, d)| d)
        .collect()
}

pub fn finite_membership(a: &FiniteAutomaton, word: &[Symbol]) -> Result<bool> {
    if let Some(s) = word.iter().find(|s| s.width() != a.width()) {
        return Err(Error::WidthMismatch {
            expected: a.width(),
            found: s.width(),
        });
    }
    let succ = a.successors();
    let mut current = epsilon_closure(a, &succ, a.initial().iter().copied());
    for &sym in word {
        let next = step_symbol(&succ, &current, sym);
        current = epsilon_closure(a, &succ, next);
        if current.is_empty() {
            return Ok(false);
        }
    }
    Ok(current.iter().any(|&q| a.is_accepting(q)))
}

/// `L(a, q1, q2)`: finite words read by paths from `q1` to `q2`.
pub fn paths_automaton<K: Acceptance>(
    a: &Automaton<K>,
    q1: StateId,
    q2: StateId,
) -> Result<FiniteAutomaton> {
    a.check_state(q1)?;
    a.check_state(q2)?;
    Ok(a.clone()
        .retype::<Finite>()
        .with_endpoints(BTreeSet::from([q1]), BTreeSet::from([q2])))
}

/// Büchi automaton for `L(n)^ω`: a fresh state is the only initial and
/// accepting state, with `ε`-edges into every initial state of `n` and from
/// every accepting state of `n` back to it.
pub fn omega_closure(n: &FiniteAutomaton) -> Result<BuchiAutomaton> {
    let succ = n.successors();
    let start = epsilon_closure(n, &succ, n.initial().iter().copied());
    if start.iter().any(|&q| n.is_accepting(q)) {
        return Err(Error::EpsilonInLanguage);
    }
    let mut out = n.clone().retype::<Buchi>();
    let repeat = out.add_state();
    let mut extra: Vec<Transition> = n
        .initial()
        .iter()
        .map(|&q| Transition::new(repeat, Label::Epsilon, q))
        .collect();
    extra.extend(
        n.accepting()
            .iter()
            .map(|&q| Transition::new(q, Label::Epsilon, repeat)),
    );
    out.add_transitions(extra);
    let mut names: BTreeMap<StateId, String> = out.names().clone();
    names.insert(repeat, "repeat".into());
    Ok(out
        .with_endpoints(BTreeSet::from([repeat]), BTreeSet::from([repeat]))
        .with_names(names))
}

/// Finite words of length `len` accepted by `a`, in lexicographic order.
pub fn finite_words_of_length(a: &FiniteAutomaton, len: usize) -> Vec<Vec<Symbol>> {
    super::lasso::words(a.width(), len)
        .filter(|w| finite_membership(a, w).unwrap_or(false))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{lasso_membership, Builder};
    use crate::VariableSignature;

    fn sig() -> VariableSignature {
        VariableSignature::new(["x"; 0], ["X"]).unwrap()
    }

    #[test]
    fn no_accepting_state_is_empty() {
        let mut b = Builder::<Buchi>::new(sig());
        let q = b.add_state();
        b.initial(q).bits(q, &["0", "1"], q);
        assert!(buchi_is_empty(&b.build().unwrap()));
    }

    #[test]
    fn accepting_state_between_symbols() {
        // 0 -1-> 1 -ε-> 2 -ε-> 0, only 2 accepting: (1)^ω via the ε-detour
        let mut b = Builder::<Buchi>::new(sig());
        b.add_states(3);
        b.initial(0)
            .accepting(2)
            .bits(0, &["1"], 1)
            .epsilon(1, 2)
            .epsilon(2, 0)
            .epsilon(0, 1);
        b.bits(1, &["0"], 1);
        let a = b.build().unwrap();
        let free = remove_epsilon(&a);
        let collapsed = collapse_epsilon_cycles(&a);
        assert!(!free.transitions().iter().any(|t| t.label.is_epsilon()));
        assert_eq!(collapsed.num_states(), 1);
        assert!(collapsed.is_accepting(0));
        for w in LassoWord::enumerate(1, 3, 3) {
            let expected = lasso_membership(&a, &w).unwrap();
            assert_eq!(lasso_membership(&free, &w).unwrap(), expected, "{w}");
            assert_eq!(lasso_membership(&collapsed, &w).unwrap(), expected, "{w}");
        }
    }

    #[test]
    fn epsilon_self_loop_is_empty() {
        let mut b = Builder::<Buchi>::new(sig());
        let q = b.add_state();
        b.initial(q).accepting(q).epsilon(q, q);
        let a = b.build().unwrap();
        assert!(buchi_is_empty(&a));
        for w in LassoWord::enumerate(1, 2, 2) {
            assert!(!lasso_membership(&a, &w).unwrap());
        }
        assert!(buchi_witness(&a).is_none());
    }

    #[test]
    fn trim_empty_language_drops_everything() {
        let mut b = Builder::<Buchi>::new(sig());
        b.add_states(3);
        b.initial(0)
            .accepting(2)
            .bits(0, &["1"], 1)
            .bits(1, &["0"], 1)
            .bits(2, &["0"], 2);
        let a = b.build().unwrap();
        assert!(buchi_is_empty(&a));
        let t = trim(&a);
        assert!(t.initial().is_empty());
        assert_eq!(t.num_states(), 0);
        assert!(buchi_is_empty(&t));
    }

    #[test]
    fn trim_is_idempotent() {
        let mut b = Builder::<Buchi>::new(sig());
        b.add_states(2);
        b.initial(0)
            .accepting(1)
            .bits(0, &["0"], 0)
            .bits(0, &["1"], 1)
            .bits(1, &["1"], 1);
        let a = b.build().unwrap();
        assert_eq!(trim(&a), a);
        assert_eq!(trim(&trim(&a)), trim(&a));
    }

    #[test]
    fn witness_is_accepted() {
        let mut b = Builder::<Buchi>::new(sig());
        b.add_states(3);
        b.initial(0).accepting(2);
        b.bits(0, &["0"], 1)
            .bits(1, &["1"], 2)
            .bits(2, &["0"], 1)
            .epsilon(0, 2);
        let a = b.build().unwrap();
        let w = buchi_witness(&a).unwrap();
        assert!(lasso_membership(&a, &w).unwrap());
        assert_eq!(w, LassoWord::parse("", "0 1").unwrap());
    }

    #[test]
    fn omega_closure_of_01() {
        let mut b = Builder::<Finite>::new(sig());
        b.add_states(3);
        b.initial(0)
            .accepting(2)
            .bits(0, &["0"], 1)
            .bits(1, &["1"], 2);
        let n = b.build().unwrap();
        let w = omega_closure(&n).unwrap();
        assert!(lasso_membership(&w, &LassoWord::parse("", "0 1").unwrap()).unwrap());
        assert!(!lasso_membership(&w, &LassoWord::parse("", "0").unwrap()).unwrap());
        assert!(buchi_is_empty(
            &omega_closure(&FiniteAutomaton::empty(sig())).unwrap()
        ));
    }

    #[test]
    fn omega_closure_rejects_epsilon() {
        let mut b = Builder::<Finite>::new(sig());
        let q = b.add_state();
        b.initial(q).accepting(q).bits(q, &["1"], q);
        assert_eq!(
            omega_closure(&b.build().unwrap()),
            Err(Error::EpsilonInLanguage)
        );
    }

    #[test]
    fn paths_on_acyclic_state() {
        let mut b = Builder::<Buchi>::new(sig());
        b.add_states(2);
        b.initial(0).bits(0, &["1"], 1);
        let a = b.build().unwrap();
        let p = paths_automaton(&a, 0, 0).unwrap();
        assert!(finite_membership(&p, &[]).unwrap());
        assert!(finite_words_of_length(&p, 1).is_empty());
        assert_eq!(paths_automaton(&a, 0, 7), Err(Error::UnknownState(7)));
    }
}
