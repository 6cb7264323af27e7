//! Elementary automata for atoms and negated atoms, built directly (no
//! complementation) over the atom's own variables and then aligned to the
//! requested signature.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::formula::{kind_of_name, Formula};
use crate::automata::{Buchi, BuchiAutomaton, Builder, Symbol, VarKind, VariableSignature};
use crate::encoding::{align, valid_encodings_automaton};
use crate::{Error, Result};

/// Automaton for the models of `atom` (or of its negation), restricted to
/// valid encodings over `sig`.
///
/// `Rel` atoms are not handled here; see [`RelationLibrary`](super::RelationLibrary).
pub fn atom_automaton(
    atom: &Formula,
    negated: bool,
    sig: &VariableSignature,
) -> Result<BuchiAutomaton> {
    for v in atom.atom_vars() {
        if !sig.contains(v) {
            return Err(Error::UnknownVariable(v.to_string()));
        }
    }
    let local = local_automaton(atom, negated)?;
    align(&local, sig)
}

fn local_signature(vars: &[&str]) -> Result<VariableSignature> {
    let mut fo: Vec<&str> = vars
        .iter()
        .copied()
        .filter(|v| kind_of_name(v) == VarKind::First)
        .collect();
    let mut so: Vec<&str> = vars
        .iter()
        .copied()
        .filter(|v| kind_of_name(v) == VarKind::Second)
        .collect();
    fo.sort_unstable();
    fo.dedup();
    so.sort_unstable();
    so.dedup();
    VariableSignature::new(fo, so)
}

fn never(sig: VariableSignature) -> BuchiAutomaton {
    BuchiAutomaton::empty(sig)
}

fn local_automaton(atom: &Formula, negated: bool) -> Result<BuchiAutomaton> {
    let vars = atom.atom_vars();
    let sig = local_signature(&vars)?;
    let track = |name: &str| sig.track_of(name).expect("variable of the atom");
    let valid = valid_encodings_automaton(&sig);
    Ok(match atom {
        Formula::True => {
            if negated {
                never(sig)
            } else {
                valid
            }
        }
        Formula::False => {
            if negated {
                valid
            } else {
                never(sig)
            }
        }
        Formula::Less(x, y) | Formula::EqFo(x, y) if x == y => {
            // x < x never holds, x = x always does
            if matches!(atom, Formula::Less(..)) != negated {
                never(sig)
            } else {
                valid
            }
        }
        Formula::OffsetEq { y, x, .. } if x == y => {
            if negated {
                valid
            } else {
                never(sig)
            }
        }
        Formula::EqSo(a, b) if a == b => {
            if negated {
                never(sig)
            } else {
                valid
            }
        }
        Formula::Less(x, y) => two_events(
            &sig,
            track(x),
            track(y),
            if negated {
                Order::NotBefore
            } else {
                Order::Before
            },
        ),
        Formula::EqFo(x, y) => two_events(
            &sig,
            track(x),
            track(y),
            if negated {
                Order::Apart
            } else {
                Order::Together
            },
        ),
        Formula::OffsetEq { y, x, c } => offset(&sig, track(y), track(x), *c as usize, negated),
        Formula::Member(set, x) => member(&sig, track(set), track(x), negated),
        Formula::EqSo(a, b) => set_equality(&sig, track(a), track(b), negated),
        other => {
            return Err(Error::Malformed(alloc::format!(
                "`{other}` is not a built-in atom"
            )));
        }
    })
}

enum Order {
    /// `x < y`
    Before,
    /// `y <= x`
    NotBefore,
    Together,
    Apart,
}

/// Symbol predicate on two first-order tracks.
fn reads(x: usize, y: usize, bx: bool, by: bool) -> impl Fn(Symbol) -> bool {
    move |s: Symbol| s.bit(x) == bx && s.bit(y) == by
}

fn two_events(sig: &VariableSignature, x: usize, y: usize, order: Order) -> BuchiAutomaton {
    let mut b = Builder::<Buchi>::new(sig.clone());
    let start = b.add_state();
    let done = b.add_state();
    b.initial(start).accepting(done);
    b.symbols_where(start, start, reads(x, y, false, false));
    b.symbols_where(done, done, reads(x, y, false, false));
    let only_x = b.add_state();
    let only_y = b.add_state();
    b.symbols_where(only_x, only_x, reads(x, y, false, false));
    b.symbols_where(only_y, only_y, reads(x, y, false, false));
    match order {
        Order::Before => {
            b.symbols_where(start, only_x, reads(x, y, true, false));
            b.symbols_where(only_x, done, reads(x, y, false, true));
        }
        Order::NotBefore => {
            b.symbols_where(start, done, reads(x, y, true, true));
            b.symbols_where(start, only_y, reads(x, y, false, true));
            b.symbols_where(only_y, done, reads(x, y, true, false));
        }
        Order::Together => {
            b.symbols_where(start, done, reads(x, y, true, true));
        }
        Order::Apart => {
            b.symbols_where(start, only_x, reads(x, y, true, false));
            b.symbols_where(only_x, done, reads(x, y, false, true));
            b.symbols_where(start, only_y, reads(x, y, false, true));
            b.symbols_where(only_y, done, reads(x, y, true, false));
        }
    }
    crate::automata::trim(&b.build().expect("well-formed atom automaton"))
}

/// `y = x + c`, or its negation: a chain counting `c` symbols after `x`.
fn offset(sig: &VariableSignature, y: usize, x: usize, c: usize, negated: bool) -> BuchiAutomaton {
    let mut b = Builder::<Buchi>::new(sig.clone());
    let start = b.add_state();
    let done = b.add_state();
    // chain[j]: j symbols read since x's 1 (j = 1..=c)
    let chain: Vec<_> = (0..c).map(|_| b.add_state()).collect();
    b.initial(start).accepting(done);
    let idle = reads(x, y, false, false);
    b.symbols_where(start, start, &idle);
    b.symbols_where(done, done, &idle);
    b.symbols_where(start, chain[0], reads(x, y, true, false));
    for j in 1..c {
        b.symbols_where(chain[j - 1], chain[j], &idle);
    }
    if !negated {
        b.symbols_where(chain[c - 1], done, reads(x, y, false, true));
    } else {
        // y's 1 before or with x's 1
        let early = b.add_state();
        b.symbols_where(start, early, reads(x, y, false, true));
        b.symbols_where(early, early, &idle);
        b.symbols_where(early, done, reads(x, y, true, false));
        b.symbols_where(start, done, reads(x, y, true, true));
        // y's 1 less than c symbols after x's 1
        for &q in &chain[..c - 1] {
            b.symbols_where(q, done, reads(x, y, false, true));
        }
        // position x + c passed without y
        let late = b.add_state();
        b.symbols_where(chain[c - 1], late, &idle);
        b.symbols_where(late, late, &idle);
        b.symbols_where(late, done, reads(x, y, false, true));
    }
    b.build().expect("well-formed atom automaton")
}

/// `X(x)`: the set track reads `1` (or `0` when negated) where `x` does.
fn member(sig: &VariableSignature, set: usize, x: usize, negated: bool) -> BuchiAutomaton {
    let mut b = Builder::<Buchi>::new(sig.clone());
    let before = b.add_state();
    let after = b.add_state();
    b.initial(before).accepting(after);
    b.symbols_where(before, before, move |s| !s.bit(x));
    b.symbols_where(after, after, move |s| !s.bit(x));
    b.symbols_where(before, after, move |s| s.bit(x) && s.bit(set) != negated);
    b.build().expect("well-formed atom automaton")
}

/// `X = Y`: the two tracks agree forever (or differ somewhere).
fn set_equality(
    sig: &VariableSignature,
    a: usize,
    b_track: usize,
    negated: bool,
) -> BuchiAutomaton {
    let mut b = Builder::<Buchi>::new(sig.clone());
    let q = b.add_state();
    b.initial(q);
    if !negated {
        b.accepting(q);
        b.symbols_where(q, q, move |s| s.bit(a) == s.bit(b_track));
    } else {
        let found = b.add_state();
        b.accepting(found);
        b.symbols_where(q, q, |_| true);
        b.symbols_where(q, found, move |s| s.bit(a) != s.bit(b_track));
        b.symbols_where(found, found, |_| true);
    }
    b.build().expect("well-formed atom automaton")
}
