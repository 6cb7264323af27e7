//! `.aut` serialization of every pipeline artifact.

use forall::{read_aut, write_aut};
use forall_core::automata::{lasso_membership, Acceptance, Automaton};
use forall_core::oracle::random_corpus;
use forall_core::{universal_quantify_with_artifacts, Buchi, Finite, LassoWord, VariableSignature};

fn round_trip<K: Acceptance>(a: &Automaton<K>) -> Automaton<K> {
    let text = write_aut(a);
    let back = read_aut::<K>(&text).unwrap();
    assert_eq!(write_aut(&back), text);
    back
}

#[test]
fn artifacts_survive_round_trip() {
    let sig = VariableSignature::new(["x"], ["X"]).unwrap();
    for a in random_corpus(11, 30, 3, &sig) {
        let arts = universal_quantify_with_artifacts(&a, "x").unwrap();
        for b in [
            &arts.normalized,
            &arts.subset.automaton,
            &arts.trimmed_subset.automaton,
            &arts.assembled,
        ] {
            assert_eq!(&round_trip::<Buchi>(b), b);
        }
        let result = round_trip::<Buchi>(&arts.result);
        for w in LassoWord::enumerate(1, 2, 2) {
            assert_eq!(
                lasso_membership(&result, &w).unwrap(),
                lasso_membership(&arts.result, &w).unwrap()
            );
        }
        for f in arts
            .cycles
            .iter()
            .chain(&arts.u_languages)
            .chain(arts.paths.values())
        {
            assert_eq!(&round_trip::<Finite>(f), f);
        }
        for w in &arts.widgets {
            assert_eq!(round_trip::<Finite>(&w.language), w.language);
        }
    }
}
