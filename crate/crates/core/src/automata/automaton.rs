use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::marker::PhantomData;

use super::{Symbol, VariableSignature};
use crate::{Error, Result};

/// Opaque state identifier, dense in `0..num_states`.
pub type StateId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Epsilon,
    Sym(Symbol),
}

impl Label {
    pub fn is_epsilon(self) -> bool {
        matches!(self, Label::Epsilon)
    }

    pub fn symbol(self) -> Option<Symbol> {
        match self {
            Label::Epsilon => None,
            Label::Sym(s) => Some(s),
        }
    }

    /// Applies `f` to the symbol, leaving `ε` untouched.
    pub fn map(self, f: impl FnOnce(Symbol) -> Symbol) -> Label {
        match self {
            Label::Epsilon => Label::Epsilon,
            Label::Sym(s) => Label::Sym(f(s)),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Epsilon => f.write_str("eps"),
            Label::Sym(s) => s.fmt(f),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub src: StateId,
    pub label: Label,
    pub dst: StateId,
}

impl Transition {
    pub fn new(src: StateId, label: Label, dst: StateId) -> Self {
        Transition { src, label, dst }
    }
}

mod sealed {
    pub trait Sealed {}
}

/// Acceptance semantics of an [`Automaton`].
pub trait Acceptance: sealed::Sealed + Clone + fmt::Debug + PartialEq + Eq + Default {
    const NAME: &'static str;
}

/// Infinite words; a run accepts iff it visits an accepting state
/// infinitely often and reads infinitely many symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Buchi;

/// Finite words; a path accepts iff it ends in an accepting state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Finite;

impl sealed::Sealed for Buchi {}
impl sealed::Sealed for Finite {}
impl Acceptance for Buchi {
    const NAME: &'static str = "buchi";
}
impl Acceptance for Finite {
    const NAME: &'static str = "finite";
}

/// Nondeterministic automaton over a multi-track `{0,1}` alphabet with
/// `ε`-transitions. The acceptance condition is fixed by `K`.
///
/// Transitions are kept sorted and deduplicated, which makes every
/// construction deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automaton<K: Acceptance> {
    signature: VariableSignature,
    num_states: usize,
    transitions: Vec<Transition>,
    initial: BTreeSet<StateId>,
    accepting: BTreeSet<StateId>,
    names: BTreeMap<StateId, String>,
    kind: PhantomData<K>,
}

pub type BuchiAutomaton = Automaton<Buchi>;
pub type FiniteAutomaton = Automaton<Finite>;

impl<K: Acceptance> Automaton<K> {
    /// Validates and builds an automaton.
    pub fn new(
        signature: VariableSignature,
        num_states: usize,
        transitions: impl IntoIterator<Item = Transition>,
        initial: impl IntoIterator<Item = StateId>,
        accepting: impl IntoIterator<Item = StateId>,
    ) -> Result<Self> {
        let width = signature.width();
        let transitions: Vec<Transition> = transitions.into_iter().collect();
        for t in &transitions {
            for q in [t.src, t.dst] {
                if q >= num_states {
                    return Err(Error::UnknownState(q));
                }
            }
            if let Label::Sym(s) = t.label {
                if s.width() != width {
                    return Err(Error::WidthMismatch {
                        expected: width,
                        found: s.width(),
                    });
                }
            }
        }
        let initial: BTreeSet<StateId> = initial.into_iter().collect();
        let accepting: BTreeSet<StateId> = accepting.into_iter().collect();
        if let Some(&q) = initial.iter().chain(&accepting).find(|&&q| q >= num_states) {
            return Err(Error::UnknownState(q));
        }
        Ok(Self::from_parts(
            signature,
            num_states,
            transitions,
            initial,
            accepting,
            BTreeMap::new(),
        ))
    }

    pub(crate) fn from_parts(
        signature: VariableSignature,
        num_states: usize,
        mut transitions: Vec<Transition>,
        initial: BTreeSet<StateId>,
        accepting: BTreeSet<StateId>,
        names: BTreeMap<StateId, String>,
    ) -> Self {
        transitions.sort_unstable();
        transitions.dedup();
        Automaton {
            signature,
            num_states,
            transitions,
            initial,
            accepting,
            names,
            kind: PhantomData,
        }
    }

    /// Automaton with no state at all.
    pub fn empty(signature: VariableSignature) -> Self {
        Self::from_parts(
            signature,
            0,
            Vec::new(),
            BTreeSet::new(),
            BTreeSet::new(),
            BTreeMap::new(),
        )
    }

    pub fn signature(&self) -> &VariableSignature {
        &self.signature
    }

    pub fn width(&self) -> usize {
        self.signature.width()
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn states(&self) -> core::ops::Range<StateId> {
        0..self.num_states
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    pub fn initial(&self) -> &BTreeSet<StateId> {
        &self.initial
    }

    pub fn accepting(&self) -> &BTreeSet<StateId> {
        &self.accepting
    }

    pub fn is_accepting(&self, q: StateId) -> bool {
        self.accepting.contains(&q)
    }

    /// Debug name attached to a state, if any.
    pub fn state_name(&self, q: StateId) -> Option<&str> {
        self.names.get(&q).map(String::as_str)
    }

    pub fn names(&self) -> &BTreeMap<StateId, String> {
        &self.names
    }

    pub fn with_names(mut self, names: BTreeMap<StateId, String>) -> Self {
        self.names = names;
        self
    }

    pub(crate) fn check_state(&self, q: StateId) -> Result<()> {
        if q < self.num_states {
            Ok(())
        } else {
            Err(Error::UnknownState(q))
        }
    }

    pub(crate) fn check_same_signature<K2: Acceptance>(&self, other: &Automaton<K2>) -> Result<()> {
        if self.signature == other.signature {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    /// Outgoing edges per state, in transition order.
    pub fn successors(&self) -> Vec<Vec<(Label, StateId)>> {
        let mut out = alloc::vec![Vec::new(); self.num_states];
        for t in &self.transitions {
            out[t.src].push((t.label, t.dst));
        }
        out
    }

    /// Same states and transitions under another acceptance condition.
    pub(crate) fn retype<K2: Acceptance>(self) -> Automaton<K2> {
        Automaton {
            signature: self.signature,
            num_states: self.num_states,
            transitions: self.transitions,
            initial: self.initial,
            accepting: self.accepting,
            names: self.names,
            kind: PhantomData,
        }
    }

    /// Replaces initial and accepting sets.
    pub(crate) fn with_endpoints(
        mut self,
        initial: BTreeSet<StateId>,
        accepting: BTreeSet<StateId>,
    ) -> Self {
        self.initial = initial;
        self.accepting = accepting;
        self
    }

    /// Keeps the states flagged in `keep`, renumbering them in order.
    pub(crate) fn restrict(&self, keep: &[bool]) -> Self {
        let mut map = alloc::vec![usize::MAX; self.num_states];
        let mut next = 0;
        for q in self.states() {
            if keep[q] {
                map[q] = next;
                next += 1;
            }
        }
        let transitions = self
            .transitions
            .iter()
            .filter(|t| keep[t.src] && keep[t.dst])
            .map(|t| Transition::new(map[t.src], t.label, map[t.dst]))
            .collect();
        let pick =
            |set: &BTreeSet<StateId>| set.iter().filter(|&&q| keep[q]).map(|&q| map[q]).collect();
        let names = self
            .names
            .iter()
            .filter(|(q, _)| keep[**q])
            .map(|(q, n)| (map[*q], n.clone()))
            .collect();
        Self::from_parts(
            self.signature.clone(),
            next,
            transitions,
            pick(&self.initial),
            pick(&self.accepting),
            names,
        )
    }

    /// Applies `f` to every symbol label and installs a new signature.
    pub(crate) fn map_symbols(
        &self,
        signature: VariableSignature,
        mut f: impl FnMut(Symbol) -> Vec<Symbol>,
    ) -> Self {
        let mut transitions = Vec::with_capacity(self.transitions.len());
        for t in &self.transitions {
            match t.label {
                Label::Epsilon => transitions.push(*t),
                Label::Sym(s) => transitions.extend(
                    f(s).into_iter()
                        .map(|s2| Transition::new(t.src, Label::Sym(s2), t.dst)),
                ),
            }
        }
        Self::from_parts(
            signature,
            self.num_states,
            transitions,
            self.initial.clone(),
            self.accepting.clone(),
            self.names.clone(),
        )
    }

    /// Disjoint copy of `other` appended after this automaton's states.
    /// Returns the offset of the copied states.
    pub(crate) fn append(&mut self, other: &Self) -> StateId {
        let offset = self.num_states;
        self.num_states += other.num_states;
        self.transitions.extend(
            other
                .transitions
                .iter()
                .map(|t| Transition::new(t.src + offset, t.label, t.dst + offset)),
        );
        self.transitions.sort_unstable();
        self.transitions.dedup();
        for (q, n) in &other.names {
            self.names.insert(q + offset, n.clone());
        }
        offset
    }

    pub(crate) fn add_transitions(&mut self, extra: impl IntoIterator<Item = Transition>) {
        self.transitions.extend(extra);
        self.transitions.sort_unstable();
        self.transitions.dedup();
    }

    pub(crate) fn add_state(&mut self) -> StateId {
        self.num_states += 1;
        self.num_states - 1
    }

    pub fn num_transitions(&self) -> usize {
        self.transitions.len()
    }
}

/// Incremental construction helper for hand-built automata.
#[derive(Debug, Clone)]
pub struct Builder<K: Acceptance> {
    signature: VariableSignature,
    num_states: usize,
    transitions: Vec<Transition>,
    initial: BTreeSet<StateId>,
    accepting: BTreeSet<StateId>,
    names: BTreeMap<StateId, String>,
    kind: PhantomData<K>,
}

impl<K: Acceptance> Builder<K> {
    pub fn new(signature: VariableSignature) -> Self {
        Builder {
            signature,
            num_states: 0,
            transitions: Vec::new(),
            initial: BTreeSet::new(),
            accepting: BTreeSet::new(),
            names: BTreeMap::new(),
            kind: PhantomData,
        }
    }

    pub fn add_state(&mut self) -> StateId {
        self.num_states += 1;
        self.num_states - 1
    }

    pub fn add_states(&mut self, n: usize) -> core::ops::Range<StateId> {
        let start = self.num_states;
        self.num_states += n;
        start..self.num_states
    }

    pub fn initial(&mut self, q: StateId) -> &mut Self {
        self.initial.insert(q);
        self
    }

    pub fn accepting(&mut self, q: StateId) -> &mut Self {
        self.accepting.insert(q);
        self
    }

    pub fn name(&mut self, q: StateId, name: impl Into<String>) -> &mut Self {
        self.names.insert(q, name.into());
        self
    }

    pub fn epsilon(&mut self, src: StateId, dst: StateId) -> &mut Self {
        self.transitions
            .push(Transition::new(src, Label::Epsilon, dst));
        self
    }

    pub fn symbol(&mut self, src: StateId, sym: Symbol, dst: StateId) -> &mut Self {
        self.transitions
            .push(Transition::new(src, Label::Sym(sym), dst));
        self
    }

    /// Adds one transition per bitstring, e.g. `["01", "11"]`.
    pub fn bits(&mut self, src: StateId, labels: &[&str], dst: StateId) -> &mut Self {
        for l in labels {
            let sym = Symbol::parse(l).expect("builder label must be a bitstring");
            self.symbol(src, sym, dst);
        }
        self
    }

    /// Adds every symbol accepted by `pred`.
    pub fn symbols_where(
        &mut self,
        src: StateId,
        dst: StateId,
        mut pred: impl FnMut(Symbol) -> bool,
    ) -> &mut Self {
        for s in Symbol::all(self.signature.width()) {
            if pred(s) {
                self.symbol(src, s, dst);
            }
        }
        self
    }

    pub fn build(&self) -> Result<Automaton<K>> {
        let a = Automaton::new(
            self.signature.clone(),
            self.num_states,
            self.transitions.iter().copied(),
            self.initial.iter().copied(),
            self.accepting.iter().copied(),
        )?;
        Ok(a.with_names(self.names.clone()))
    }
}

impl<K: Acceptance> fmt::Display for Automaton<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} automaton [{}]", K::NAME, self.signature)?;
        writeln!(f, "states {}", self.num_states)?;
        writeln!(f, "initial {:?}", self.initial)?;
        writeln!(f, "accepting {:?}", self.accepting)?;
        for t in &self.transitions {
            writeln!(f, "  {} -{}-> {}", t.src, t.label, t.dst)?;
        }
        Ok(())
    }
}
