use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::automata::{
    epsilon_closure, lasso_membership, step_symbol, BuchiAutomaton, FiniteAutomaton, LassoWord,
    StateId, Symbol,
};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LassoComparison {
    Equal,
    /// First lasso (in enumeration order) accepted by exactly one side.
    Counterexample(LassoWord),
}

impl LassoComparison {
    pub fn is_equal(&self) -> bool {
        matches!(self, LassoComparison::Equal)
    }
}

/// Compares memberships on every lasso with `|u| <= max_u`, `|v| <= max_v`.
///
/// This is a bounded check: `Equal` means no difference was found among the
/// enumerated lassos, not that the languages are equal.
pub fn languages_equal_on_lassos(
    a: &BuchiAutomaton,
    b: &BuchiAutomaton,
    max_u: usize,
    max_v: usize,
) -> Result<LassoComparison> {
    if a.signature() != b.signature() {
        return Err(Error::SignatureMismatch);
    }
    for w in LassoWord::enumerate(a.width(), max_u, max_v) {
        if lasso_membership(a, &w)? != lasso_membership(b, &w)? {
            return Ok(LassoComparison::Counterexample(w));
        }
    }
    Ok(LassoComparison::Equal)
}

/// Exact equivalence of finite-word languages by exploring pairs of
/// determinized state sets. Returns a shortest word accepted by exactly one
/// side, or `None` if the languages are equal.
pub fn finite_languages_equal(
    a: &FiniteAutomaton,
    b: &FiniteAutomaton,
) -> Result<Option<Vec<Symbol>>> {
    if a.signature() != b.signature() {
        return Err(Error::SignatureMismatch);
    }
    let sa = a.successors();
    let sb = b.successors();
    type Pair = (BTreeSet<StateId>, BTreeSet<StateId>);
    let start: Pair = (
        epsilon_closure(a, &sa, a.initial().iter().copied()),
        epsilon_closure(b, &sb, b.initial().iter().copied()),
    );
    let mut parent: BTreeMap<Pair, Option<(Pair, Symbol)>> = BTreeMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(pair) = queue.pop_front() {
        let acc_a = pair.0.iter().any(|&q| a.is_accepting(q));
        let acc_b = pair.1.iter().any(|&q| b.is_accepting(q));
        if acc_a != acc_b {
            let mut word = Vec::new();
            let mut cur = pair;
            while let Some(Some((prev, sym))) = parent.get(&cur).cloned() {
                word.push(sym);
                cur = prev;
            }
            word.reverse();
            return Ok(Some(word));
        }
        for sym in Symbol::all(a.width()) {
            let next: Pair = (
                epsilon_closure(a, &sa, step_symbol(&sa, &pair.0, sym)),
                epsilon_closure(b, &sb, step_symbol(&sb, &pair.1, sym)),
            );
            if !parent.contains_key(&next) {
                parent.insert(next.clone(), Some((pair.clone(), sym)));
                queue.push_back(next);
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regex::Regex;

    #[test]
    fn regex_equivalences() {
        let r = |s: &str| Regex::parse(s).unwrap().to_automaton();
        assert_eq!(
            finite_languages_equal(&r("(0+1)^*"), &r("(0^*1^*)^*")).unwrap(),
            None
        );
        let diff = finite_languages_equal(&r("(0+1)^+"), &r("(0+1)^*")).unwrap();
        assert_eq!(diff, Some(Vec::new()));
        let diff = finite_languages_equal(&r("(0+1)^*1(0+1)^*"), &r("(0+1)^+1(0+1)^*")).unwrap();
        assert_eq!(diff, Some(alloc::vec![Symbol::parse("1").unwrap()]));
    }
}
