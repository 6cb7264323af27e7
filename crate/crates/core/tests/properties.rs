//! Property tests for the automata operations, the encoding and the
//! decision procedure.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use forall_core::automata::{
    buchi_intersection, buchi_is_empty, buchi_union, collapse_epsilon_cycles, lasso_membership,
    remove_epsilon, trim, Label, Symbol, Transition,
};
use forall_core::encoding::{
    add_variable, decode_lasso, encode_interpretation, project_variable, valid_encodings_automaton,
};
use forall_core::logic::{atom_automaton, is_nnf, signature_of};
use forall_core::oracle::{brute_force_universal_membership, evaluate, random_automaton};
use forall_core::{
    compile, decide_sat, parse, to_nnf, universal_quantify, universal_quantify_with_artifacts,
    BuchiAutomaton, Formula, Interpretation, LassoWord, UltimatelyPeriodicSet, VarKind,
    VariableSignature, Verdict,
};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

/// Arbitrary (not normalized) automaton with up to `max_states` states over
/// `sig`, state 0 initial.
fn automaton(sig: VariableSignature, max_states: usize) -> impl Strategy<Value = BuchiAutomaton> {
    let labels = 1usize << sig.width();
    (1..=max_states).prop_flat_map(move |n| {
        let sig = sig.clone();
        let edge = (0..n, 0..=labels, 0..n);
        (
            prop::collection::vec(edge, 0..=3 * n),
            prop::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(edges, acc)| {
                let width = sig.width();
                let transitions = edges.into_iter().map(|(s, l, d)| {
                    let label = if l == labels {
                        Label::Epsilon
                    } else {
                        Label::Sym(Symbol::new(l as u64, width))
                    };
                    Transition::new(s, label, d)
                });
                let accepting = (0..n).filter(|&q| acc[q]);
                BuchiAutomaton::new(sig.clone(), n, transitions, [0], accepting).unwrap()
            })
    })
}

fn one_track() -> VariableSignature {
    VariableSignature::new([""; 0], ["X"]).unwrap()
}

fn quantifiable() -> VariableSignature {
    VariableSignature::new(["x"], ["X"]).unwrap()
}

fn normalized(sig: VariableSignature, max_states: usize) -> impl Strategy<Value = BuchiAutomaton> {
    (any::<u64>(), 1..=max_states)
        .prop_map(move |(seed, n)| random_automaton(&mut ChaCha8Rng::seed_from_u64(seed), n, &sig))
}

fn upset() -> impl Strategy<Value = UltimatelyPeriodicSet> {
    (
        prop::collection::vec(any::<bool>(), 0..5),
        prop::collection::vec(any::<bool>(), 1..4),
    )
        .prop_map(|(u, v)| UltimatelyPeriodicSet::new(u, v).unwrap())
}

/// Formulas over `x`, `y` and `X`, possibly with free variables.
fn formula() -> impl Strategy<Value = Formula> {
    let atom = prop_oneof![
        Just("x < y"),
        Just("y < x"),
        Just("x = y"),
        Just("y = x + 1"),
        Just("y = x + 2"),
        Just("X(x)"),
        Just("X(y)"),
        Just("true"),
    ]
    .prop_map(|t| parse(t).unwrap());
    atom.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::iff(a, b)),
            (prop_oneof![Just("x"), Just("y")], inner.clone())
                .prop_map(|(v, f)| Formula::exists(v, f)),
            (prop_oneof![Just("x"), Just("y")], inner).prop_map(|(v, f)| Formula::forall(v, f)),
        ]
    })
    .prop_filter("well scoped", |f| f.check_scope().is_ok())
}

fn all_lassos(width: usize, max: usize) -> Vec<LassoWord> {
    LassoWord::enumerate(width, max, max).collect()
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn products_match_boolean_combinations(
        a in automaton(one_track(), 3),
        b in automaton(one_track(), 3),
    ) {
        let and = buchi_intersection(&a, &b).unwrap();
        let or = buchi_union(&a, &b).unwrap();
        for w in all_lassos(1, 3) {
            let (ma, mb) = (lasso_membership(&a, &w).unwrap(), lasso_membership(&b, &w).unwrap());
            prop_assert_eq!(lasso_membership(&and, &w).unwrap(), ma && mb, "{}", w);
            prop_assert_eq!(lasso_membership(&or, &w).unwrap(), ma || mb, "{}", w);
        }
    }

    #[test]
    fn trim_preserves_membership(a in automaton(one_track(), 4)) {
        let t = trim(&a);
        prop_assert!(t.num_states() <= a.num_states());
        for w in all_lassos(1, 4) {
            prop_assert_eq!(lasso_membership(&t, &w).unwrap(), lasso_membership(&a, &w).unwrap());
        }
    }

    #[test]
    fn epsilon_rewrites_preserve_membership(a in automaton(one_track(), 4)) {
        let free = remove_epsilon(&a);
        let collapsed = collapse_epsilon_cycles(&a);
        prop_assert!(free.transitions().iter().all(|t| !t.label.is_epsilon()));
        prop_assert!(free.num_states() <= 2 * a.num_states());
        for w in all_lassos(1, 3) {
            let expected = lasso_membership(&a, &w).unwrap();
            prop_assert_eq!(lasso_membership(&free, &w).unwrap(), expected);
            prop_assert_eq!(lasso_membership(&collapsed, &w).unwrap(), expected);
        }
    }

    #[test]
    fn emptiness_matches_short_lassos(a in automaton(one_track(), 3)) {
        let n = a.num_states();
        let accepts_some = LassoWord::enumerate(1, n, n + 1)
            .any(|w| lasso_membership(&a, &w).unwrap());
        prop_assert_eq!(buchi_is_empty(&a), !accepts_some);
    }

    #[test]
    fn encoding_round_trip(
        x in 0usize..8,
        y in 0usize..8,
        s in upset(),
        t in upset(),
    ) {
        let sig = VariableSignature::new(["x", "y"], ["S", "T"]).unwrap();
        let i = Interpretation::new().with_fo("x", x).with_fo("y", y).with_so("S", s).with_so("T", t);
        let w = encode_interpretation(&i, &sig).unwrap();
        let back = decode_lasso(&w, &sig).unwrap();
        prop_assert_eq!(&back.fo_values, &i.fo_values);
        for (name, set) in &i.so_values {
            prop_assert_eq!(back.so_values[name].canonical(), set.canonical());
        }
        prop_assert!(lasso_membership(&valid_encodings_automaton(&sig), &w).unwrap());
    }

    #[test]
    fn project_undoes_add(a in automaton(one_track(), 3), first_order in any::<bool>()) {
        let kind = if first_order { VarKind::First } else { VarKind::Second };
        let name = if first_order { "z" } else { "Z" };
        let back = project_variable(&add_variable(&a, name, kind, 0).unwrap(), name).unwrap();
        prop_assert_eq!(back.signature(), a.signature());
        for w in all_lassos(1, 3) {
            prop_assert_eq!(lasso_membership(&back, &w).unwrap(), lasso_membership(&a, &w).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn universal_agrees_with_brute_force(a in normalized(quantifiable(), 3)) {
        let all = universal_quantify(&a, "x").unwrap();
        let some = project_variable(&a, "x").unwrap();
        for w in all_lassos(1, 3) {
            let expected = brute_force_universal_membership(&a, "x", &w).unwrap();
            let got = lasso_membership(&all, &w).unwrap();
            prop_assert_eq!(got, expected, "{}", w);
            // ℕ is not empty
            if got {
                prop_assert!(lasso_membership(&some, &w).unwrap(), "{}", w);
            }
        }
    }

    #[test]
    fn widgets_do_not_reach_each_other(a in normalized(quantifiable(), 3)) {
        let arts = universal_quantify_with_artifacts(&a, "x").unwrap();
        let b = &arts.assembled;
        let succ = b.successors();
        for &r in b.accepting() {
            let mut seen = vec![false; b.num_states()];
            let mut stack = vec![r];
            while let Some(q) = stack.pop() {
                for &(_, d) in &succ[q] {
                    if !seen[d] {
                        seen[d] = true;
                        stack.push(d);
                    }
                }
            }
            for &other in b.accepting() {
                prop_assert!(other == r || !seen[other], "{} reaches {}", r, other);
            }
        }
    }

    #[test]
    fn universal_quantifiers_commute(a in normalized(VariableSignature::new(["x", "y"], ["X"]).unwrap(), 2)) {
        let xy = universal_quantify(&universal_quantify(&a, "x").unwrap(), "y").unwrap();
        let yx = universal_quantify(&universal_quantify(&a, "y").unwrap(), "x").unwrap();
        for w in all_lassos(1, 3) {
            prop_assert_eq!(lasso_membership(&xy, &w).unwrap(), lasso_membership(&yx, &w).unwrap(), "{}", w);
        }
    }

    #[test]
    fn witnesses_satisfy_the_formula(f in formula()) {
        match decide_sat(&f).unwrap() {
            Verdict::Sat(i) => prop_assert!(evaluate(&f, &i).unwrap(), "{} under {:?}", f, i),
            Verdict::Unsat => {
                // no small model either
                let sig = signature_of(&f).unwrap();
                let a = compile(&f).unwrap();
                for w in LassoWord::enumerate(sig.width(), 3, 2) {
                    if let Ok(i) = decode_lasso(&w, &sig) {
                        prop_assert!(!evaluate(&f, &i).unwrap(), "{} under {:?}", f, i);
                        prop_assert!(!lasso_membership(&a, &w).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn compiled_language_matches_the_evaluator(f in formula()) {
        let sig = signature_of(&f).unwrap();
        let a = compile(&f).unwrap();
        for w in LassoWord::enumerate(sig.width(), 2, 2) {
            let expected = match decode_lasso(&w, &sig) {
                Ok(i) => evaluate(&f, &i).unwrap(),
                Err(_) => false,
            };
            prop_assert_eq!(lasso_membership(&a, &w).unwrap(), expected, "{} on {}", f, w);
        }
    }

    #[test]
    fn nnf_preserves_truth(f in formula(), x in 0usize..4, y in 0usize..4, s in upset()) {
        let g = to_nnf(&f);
        prop_assert!(is_nnf(&g));
        let i = Interpretation::new().with_fo("x", x).with_fo("y", y).with_so("X", s);
        let restrict = |i: &Interpretation, f: &Formula| {
            let free = f.free_vars();
            let mut j = i.clone();
            j.fo_values.retain(|k, _| free.contains(k));
            j.so_values.retain(|k, _| free.contains(k));
            j
        };
        prop_assert_eq!(
            evaluate(&f, &restrict(&i, &f)).unwrap(),
            evaluate(&g, &restrict(&i, &g)).unwrap()
        );
    }

    #[test]
    fn display_parses_back(f in formula()) {
        prop_assert_eq!(parse(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn atom_and_negation_are_disjoint(f in formula().prop_filter("atom", |f| f.is_atom())) {
        let sig = VariableSignature::new(["x", "y"], ["X"]).unwrap();
        let pos = atom_automaton(&f, false, &sig).unwrap();
        let neg = atom_automaton(&f, true, &sig).unwrap();
        prop_assert!(buchi_is_empty(&buchi_intersection(&pos, &neg).unwrap()));
        let both = buchi_union(&pos, &neg).unwrap();
        for w in LassoWord::enumerate(3, 2, 1) {
            prop_assert_eq!(
                lasso_membership(&both, &w).unwrap(),
                decode_lasso(&w, &sig).is_ok()
            );
        }
    }
}
