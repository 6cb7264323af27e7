use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automata::{BuchiAutomaton, Label, Symbol, Transition, VariableSignature};
use crate::quant::acyclic_fo_normalize;

/// Probability that each possible transition (including `ε`) is present.
pub const TRANSITION_PROBABILITY: f64 = 0.3;
/// Probability that a state is accepting.
pub const ACCEPTING_PROBABILITY: f64 = 0.5;

/// Random automaton with `states` states over `sig`: state 0 is initial,
/// each `(src, label, dst)` is present independently, then the result is
/// normalized with [`acyclic_fo_normalize`], which also restricts it to
/// valid encodings.
pub fn random_automaton<R: Rng>(
    rng: &mut R,
    states: usize,
    sig: &VariableSignature,
) -> BuchiAutomaton {
    let labels: Vec<Label> = core::iter::once(Label::Epsilon)
        .chain(Symbol::all(sig.width()).map(Label::Sym))
        .collect();
    let mut transitions = Vec::new();
    for src in 0..states {
        for &label in &labels {
            for dst in 0..states {
                if rng.gen_bool(TRANSITION_PROBABILITY) {
                    transitions.push(Transition::new(src, label, dst));
                }
            }
        }
    }
    let accepting: Vec<usize> = (0..states)
        .filter(|_| rng.gen_bool(ACCEPTING_PROBABILITY))
        .collect();
    let raw = BuchiAutomaton::new(sig.clone(), states, transitions, [0], accepting)
        .expect("generated automaton is well-formed");
    acyclic_fo_normalize(&raw)
}

/// `count` automata with 1 to `max_states` states each, from a fixed seed.
pub fn random_corpus(
    seed: u64,
    count: usize,
    max_states: usize,
    sig: &VariableSignature,
) -> Vec<BuchiAutomaton> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_states);
            random_automaton(&mut rng, n, sig)
        })
        .collect()
}
