use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::automata::{Automaton, BuchiAutomaton, Label, StateId, Symbol, Transition, VarKind};
use crate::{Error, Result};

/// Non-empty set of states of the source automaton, stored as a bitset.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateSet {
    words: Vec<u64>,
}

impl StateSet {
    pub fn new(universe: usize) -> Self {
        StateSet {
            words: vec![0; universe.div_ceil(64).max(1)],
        }
    }

    pub fn from_states(universe: usize, states: impl IntoIterator<Item = StateId>) -> Self {
        let mut s = Self::new(universe);
        for q in states {
            s.insert(q);
        }
        s
    }

    pub fn insert(&mut self, q: StateId) {
        self.words[q / 64] |= 1 << (q % 64);
    }

    pub fn remove(&mut self, q: StateId) {
        self.words[q / 64] &= !(1 << (q % 64));
    }

    pub fn contains(&self, q: StateId) -> bool {
        self.words
            .get(q / 64)
            .is_some_and(|w| w >> (q % 64) & 1 == 1)
    }

    pub fn union_with(&mut self, other: &StateSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = StateId> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..64)
                .filter(move |b| w >> b & 1 == 1)
                .map(move |b| i * 64 + b)
        })
    }

    pub fn intersects(&self, other: &StateSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// `{q0,q2}` using `name` for the members.
    pub fn describe(&self, mut name: impl FnMut(StateId) -> String) -> String {
        let members: Vec<String> = self.iter().map(&mut name).collect();
        format!("{{{}}}", members.join(","))
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe(|q| q.to_string()))
    }
}

/// The subset automaton `A'` together with the source subset behind each
/// of its states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetAutomaton {
    pub automaton: BuchiAutomaton,
    /// `subsets[q']` is the set of source states represented by `q'`.
    pub subsets: Vec<StateSet>,
    /// Accepting states of the source automaton.
    pub source_accepting: StateSet,
    pub source_states: usize,
}

impl SubsetAutomaton {
    pub fn has_accepting_member(&self, q: StateId) -> bool {
        self.subsets[q].intersects(&self.source_accepting)
    }

    /// Drops states of `A'` that cannot start an infinite run (with every
    /// state accepting) or are unreachable, keeping `subsets` aligned.
    pub fn trimmed(&self) -> SubsetAutomaton {
        let keep = crate::automata::live_mask(&self.automaton);
        SubsetAutomaton {
            automaton: self.automaton.restrict(&keep),
            subsets: self
                .subsets
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(s, _)| s.clone())
                .collect(),
            source_accepting: self.source_accepting.clone(),
            source_states: self.source_states,
        }
    }

    /// State of `A'` representing exactly `members`, if constructed.
    pub fn find(&self, members: &[StateId]) -> Option<StateId> {
        let target = StateSet::from_states(self.source_states, members.iter().copied());
        self.subsets.iter().position(|s| *s == target)
    }
}

/// Projected symbol plus the targets reachable from one source state,
/// split by the bit read on the quantified track.
#[derive(Default)]
struct Moves {
    zero: BTreeSet<StateId>,
    one: BTreeSet<StateId>,
}

/// All non-empty subsets of `items` (or all subsets when `allow_empty`).
fn subsets_of(items: &BTreeSet<StateId>, allow_empty: bool) -> Vec<Vec<StateId>> {
    let items: Vec<StateId> = items.iter().copied().collect();
    assert!(items.len() < 24, "too many nondeterministic successors");
    (0u32..1 << items.len())
        .filter(|&m| allow_empty || m != 0)
        .map(|m| {
            items
                .iter()
                .enumerate()
                .filter(|(j, _)| m >> j & 1 == 1)
                .map(|(_, &q)| q)
                .collect()
        })
        .collect()
}

/// Successor subsets of `from` on the projected symbol: every way for
/// each member to follow at least one consistent transition such that
/// exactly one transition overall reads `1` on the quantified track.
fn symbol_successors(universe: usize, moves: &[(StateId, &Moves)]) -> BTreeSet<StateSet> {
    let mut partial: BTreeSet<(StateSet, bool)> =
        BTreeSet::from([(StateSet::new(universe), false)]);
    for (_, m) in moves {
        let zero_choices = subsets_of(&m.zero, false);
        let one_choices: Vec<Vec<StateId>> = m
            .one
            .iter()
            .flat_map(|&d| {
                subsets_of(&m.zero, true).into_iter().map(move |mut z| {
                    z.push(d);
                    z
                })
            })
            .collect();
        let mut next = BTreeSet::new();
        for (acc, used) in &partial {
            for z in &zero_choices {
                let mut s = acc.clone();
                z.iter().for_each(|&q| s.insert(q));
                next.insert((s, *used));
            }
            if !used {
                for o in &one_choices {
                    let mut s = acc.clone();
                    o.iter().for_each(|&q| s.insert(q));
                    next.insert((s, true));
                }
            }
        }
        partial = next;
        if partial.is_empty() {
            break;
        }
    }
    partial
        .into_iter()
        .filter(|(_, used)| *used)
        .map(|(s, _)| s)
        .collect()
}

/// Subset automaton `A'` simulating, on the same input, the runs of `a`
/// that read their `var`-transition after exactly `n` symbols, for every
/// `n` simultaneously.
///
/// Only subsets reachable from the non-empty subsets of the initial states
/// are built. Every state is provisionally accepting.
pub fn subset_construction(a: &BuchiAutomaton, var: &str) -> Result<SubsetAutomaton> {
    let roots: Vec<StateSet> = subsets_of(a.initial(), false)
        .into_iter()
        .map(|m| StateSet::from_states(a.num_states(), m))
        .collect();
    subset_construction_from(a, var, &roots)
}

/// Like [`subset_construction`], but exploring from the given subsets,
/// which become the initial states.
pub fn subset_construction_from(
    a: &BuchiAutomaton,
    var: &str,
    roots: &[StateSet],
) -> Result<SubsetAutomaton> {
    let sig = a.signature();
    let track = sig
        .track_of(var)
        .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
    if sig.track_kind(track) != VarKind::First {
        return Err(Error::NotFirstOrder(var.to_string()));
    }
    let out_sig = sig.without(var)?;
    let n = a.num_states();

    // per source state: projected symbol -> moves
    let mut table: Vec<BTreeMap<Symbol, Moves>> = (0..n).map(|_| BTreeMap::new()).collect();
    let mut eps: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for t in a.transitions() {
        match t.label {
            Label::Epsilon => eps[t.src].push(t.dst),
            Label::Sym(s) => {
                let m = table[t.src].entry(s.without_track(track)).or_default();
                if s.bit(track) {
                    m.one.insert(t.dst);
                } else {
                    m.zero.insert(t.dst);
                }
            }
        }
    }

    let mut ids: BTreeMap<StateSet, StateId> = BTreeMap::new();
    let mut subsets: Vec<StateSet> = Vec::new();
    let mut queue: VecDeque<StateId> = VecDeque::new();
    let mut intern = |s: StateSet, subsets: &mut Vec<StateSet>, queue: &mut VecDeque<StateId>| {
        *ids.entry(s.clone()).or_insert_with(|| {
            subsets.push(s);
            queue.push_back(subsets.len() - 1);
            subsets.len() - 1
        })
    };

    let mut initial = BTreeSet::new();
    for root in roots {
        if root.is_empty() {
            return Err(Error::Malformed("empty subset state".into()));
        }
        if let Some(q) = root.iter().find(|&q| q >= n) {
            return Err(Error::UnknownState(q));
        }
        let mut s = StateSet::new(n);
        s.union_with(root);
        initial.insert(intern(s, &mut subsets, &mut queue));
    }

    let mut transitions = Vec::new();
    while let Some(src) = queue.pop_front() {
        let from = subsets[src].clone();
        let members: Vec<StateId> = from.iter().collect();

        // symbols every member can read
        let mut candidates: Option<BTreeSet<Symbol>> = None;
        for &q in &members {
            let here: BTreeSet<Symbol> = table[q].keys().copied().collect();
            candidates = Some(match candidates {
                None => here,
                Some(c) => c.intersection(&here).copied().collect(),
            });
        }
        for sym in candidates.unwrap_or_default() {
            let moves: Vec<(StateId, &Moves)> =
                members.iter().map(|&q| (q, &table[q][&sym])).collect();
            if moves.iter().all(|(_, m)| m.one.is_empty()) {
                continue;
            }
            for target in symbol_successors(n, &moves) {
                let dst = intern(target, &mut subsets, &mut queue);
                transitions.push(Transition::new(src, Label::Sym(sym), dst));
            }
        }

        for &q in &members {
            for &d in &eps[q] {
                let mut grow = from.clone();
                grow.insert(d);
                let mut shift = from.clone();
                shift.remove(q);
                shift.insert(d);
                for target in [grow, shift] {
                    if target == from {
                        continue;
                    }
                    let dst = intern(target, &mut subsets, &mut queue);
                    transitions.push(Transition::new(src, Label::Epsilon, dst));
                }
            }
        }
    }

    let name = |q: StateId| {
        a.state_name(q)
            .map_or_else(|| format!("q{q}"), String::from)
    };
    let names = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (i, s.describe(name)))
        .collect();
    let all: BTreeSet<StateId> = (0..subsets.len()).collect();
    let automaton = Automaton::from_parts(out_sig, subsets.len(), transitions, initial, all, names);
    Ok(SubsetAutomaton {
        automaton,
        subsets,
        source_accepting: StateSet::from_states(n, a.accepting().iter().copied()),
        source_states: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn state_set_ops() {
        let mut s = StateSet::from_states(70, [0, 3, 65]);
        assert!(s.contains(65));
        assert_eq!(s.len(), 3);
        s.remove(3);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 65]);
        assert_eq!(s.to_string(), "{0,65}");
    }

    #[test]
    fn exactly_one_quantified_transition() {
        let mut zero = Moves::default();
        zero.zero.insert(0);
        let mut both = Moves::default();
        both.zero.insert(0);
        both.one.insert(1);
        // first member can only stay, second must fire the quantified move
        let out = symbol_successors(2, &[(0, &zero), (1, &both)]);
        let got: Vec<String> = out.iter().map(|s| s.to_string()).collect();
        assert_eq!(got, vec!["{0,1}"]);
        // one member alone: fire and optionally also stay
        let out = symbol_successors(2, &[(0, &both)]);
        let got: Vec<String> = out.iter().map(|s| s.to_string()).collect();
        assert_eq!(got, vec!["{1}", "{0,1}"]);
    }
}
