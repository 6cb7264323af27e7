use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::automata::{
    epsilon_closure, lasso_membership, step_symbol, BuchiAutomaton, LassoWord, StateId, VarKind,
};
use crate::{Error, Result};

/// Decides `w ∈ L(∀x. A)` by testing every relevant value of `x`
/// explicitly: `w` with a track `0^n 1 0^ω` inserted for `x` must be
/// accepted by `a` for all `n`.
///
/// Only finitely many `n` matter. Let `f(m)` be the set of states reachable
/// after `u · v^m` with `x` reading zeros. Acceptance of the word with the
/// `1` at `|u| + m|v| + r` depends only on `f(m)` and `r`, and `f` is
/// eventually periodic. The preperiod `P` and period `C` are detected
/// by remembering the visited subsets, and all `n < |u| + |v|(P + C + 1)` are
/// checked.
pub fn brute_force_universal_membership(
    a: &BuchiAutomaton,
    var: &str,
    w: &LassoWord,
) -> Result<bool> {
    let sig = a.signature();
    let track = sig
        .track_of(var)
        .ok_or_else(|| Error::UnknownVariable(var.to_string()))?;
    if sig.track_kind(track) != VarKind::First {
        return Err(Error::NotFirstOrder(var.to_string()));
    }
    if w.width() + 1 != a.width() {
        return Err(Error::WidthMismatch {
            expected: a.width() - 1,
            found: w.width(),
        });
    }
    let bound = value_bound(a, track, w);
    for n in 0..bound {
        if !lasso_membership(a, &w.with_fo_track(track, n))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `|u| + |v| (P + C + 1)` for the subset sequence described above.
pub(crate) fn value_bound(a: &BuchiAutomaton, track: usize, w: &LassoWord) -> usize {
    let succ = a.successors();
    let read = |from: BTreeSet<StateId>, word: &[crate::Symbol]| {
        word.iter().fold(from, |cur, s| {
            let next = step_symbol(&succ, &cur, s.with_track(track, false));
            epsilon_closure(a, &succ, next)
        })
    };
    let mut current = read(
        epsilon_closure(a, &succ, a.initial().iter().copied()),
        w.prefix(),
    );
    let mut seen: Vec<BTreeSet<StateId>> = Vec::new();
    let (pre, cycle) = loop {
        if let Some(j) = seen.iter().position(|s| *s == current) {
            break (j, seen.len() - j);
        }
        seen.push(current.clone());
        current = read(current, w.period());
    };
    w.prefix().len() + w.period().len() * (pre + cycle + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{Buchi, Builder};
    use crate::encoding::valid_encodings_automaton;
    use crate::VariableSignature;

    /// x1 somewhere, later a position where X1 holds.
    fn exists_later_member() -> BuchiAutomaton {
        let sig = VariableSignature::new(["x1"], ["X1"]).unwrap();
        let mut b = Builder::<Buchi>::new(sig);
        b.add_states(3);
        b.initial(0).accepting(2);
        b.bits(0, &["00", "01"], 0)
            .bits(0, &["10", "11"], 1)
            .bits(1, &["00", "01"], 1)
            .bits(1, &["01"], 2)
            .bits(2, &["00", "01"], 2);
        b.build().unwrap()
    }

    #[test]
    fn infinitely_often_is_universal() {
        let a = exists_later_member();
        let yes = LassoWord::parse("", "1").unwrap();
        let no = LassoWord::parse("1", "0").unwrap();
        assert!(brute_force_universal_membership(&a, "x1", &yes).unwrap());
        assert!(!brute_force_universal_membership(&a, "x1", &no).unwrap());
        assert!(brute_force_universal_membership(
            &a,
            "x1",
            &LassoWord::parse("0 0", "0 0 1").unwrap()
        )
        .unwrap());
    }

    #[test]
    fn truth_holds_everywhere() {
        let a = valid_encodings_automaton(&VariableSignature::new(["x"], ["X"]).unwrap());
        for w in LassoWord::enumerate(1, 2, 2) {
            assert!(brute_force_universal_membership(&a, "x", &w).unwrap());
        }
    }

    #[test]
    fn errors() {
        let a = exists_later_member();
        let w = LassoWord::parse("", "1").unwrap();
        assert_eq!(
            brute_force_universal_membership(&a, "X1", &w),
            Err(Error::NotFirstOrder("X1".into()))
        );
        assert!(matches!(
            brute_force_universal_membership(&a, "x1", &LassoWord::parse("", "11").unwrap()),
            Err(Error::WidthMismatch { .. })
        ));
    }
}
