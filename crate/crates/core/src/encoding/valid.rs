use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::automata::{BuchiAutomaton, Label, Symbol, Transition, VariableSignature};

/// Accepts exactly the valid encodings over `sig`: every first-order track
/// carries exactly one `1`, second-order tracks are unconstrained.
///
/// States are the subsets of first-order tracks already consumed; the full
/// subset is the only accepting state.
pub fn valid_encodings_automaton(sig: &VariableSignature) -> BuchiAutomaton {
    let k = sig.fo_count();
    let full = sig.fo_mask();
    let layers = 1usize << k;
    let mut transitions = Vec::new();
    for layer in 0..layers as u64 {
        for s in Symbol::all(sig.width()) {
            let consumed = s.bits() & full;
            if consumed & layer == 0 {
                transitions.push(Transition::new(
                    layer as usize,
                    Label::Sym(s),
                    (layer | consumed) as usize,
                ));
            }
        }
    }
    BuchiAutomaton::from_parts(
        sig.clone(),
        layers,
        transitions,
        BTreeSet::from([0]),
        BTreeSet::from([full as usize]),
        BTreeMap::new(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{lasso_membership, LassoWord};

    fn accepts(a: &BuchiAutomaton, u: &str, v: &str) -> bool {
        lasso_membership(a, &LassoWord::parse(u, v).unwrap()).unwrap()
    }

    #[test]
    fn single_first_order_variable() {
        let a = valid_encodings_automaton(&VariableSignature::new(["x1"], [""; 0]).unwrap());
        assert!(accepts(&a, "1", "0"));
        assert!(accepts(&a, "0 0 0 1", "0"));
        assert!(!accepts(&a, "", "0"));
        assert!(!accepts(&a, "1 1", "0"));
        assert!(!accepts(&a, "1", "0 0 1"));
    }

    #[test]
    fn second_order_only_is_universal() {
        let a = valid_encodings_automaton(&VariableSignature::new([""; 0], ["X1"]).unwrap());
        for w in LassoWord::enumerate(1, 2, 2) {
            assert!(lasso_membership(&a, &w).unwrap());
        }
    }

    #[test]
    fn two_first_order_variables() {
        let a = valid_encodings_automaton(&VariableSignature::new(["x1", "x2"], [""; 0]).unwrap());
        assert!(accepts(&a, "11", "00"));
        assert!(!accepts(&a, "10", "00"));
        assert!(accepts(&a, "10 00 01", "00"));
    }
}
