//! Graphviz export.
//!
//! Transitions between the same two states share one edge. Each label
//! line lists the second-order tuples `(a_{k+1}, ..., a_{k+l})` read
//! together with one set `V` of first-order variables, the variables
//! whose bit is `1`; `V` is printed below its tuples unless it is empty.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use forall_core::automata::{Acceptance, Automaton};
use forall_core::{Label, Symbol};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// `(a_{k+1}, ..., a_{k+l})` for the second-order part of `s`.
fn tuple(s: Symbol, fo: usize) -> String {
    let bits: Vec<&str> = (fo..s.width())
        .map(|j| if s.bit(j) { "1" } else { "0" })
        .collect();
    format!("({})", bits.join(","))
}

fn edge_label<K: Acceptance>(a: &Automaton<K>, labels: &[Label]) -> String {
    let sig = a.signature();
    let fo = sig.fo_count();
    let mut lines = Vec::new();
    if labels.iter().any(|l| l.is_epsilon()) {
        lines.push("ε".to_string());
    }
    // V -> tuples
    let mut groups: BTreeMap<Vec<&str>, Vec<String>> = BTreeMap::new();
    for s in labels.iter().filter_map(|l| l.symbol()) {
        let v: Vec<&str> = (0..fo).filter(|&j| s.bit(j)).map(|j| sig.name(j)).collect();
        groups.entry(v).or_default().push(tuple(s, fo));
    }
    for (v, tuples) in groups {
        lines.push(tuples.join(", "));
        if !v.is_empty() {
            lines.push(format!("{{{}}}", v.join(", ")));
        }
    }
    lines.join("\\n")
}

/// DOT text for `a`, titled `title`.
pub fn to_dot<K: Acceptance>(a: &Automaton<K>, title: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(title)).unwrap();
    writeln!(out, "  rankdir=LR;").unwrap();
    writeln!(out, "  label=\"{}\";", escape(&a.signature().to_string())).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for q in a.states() {
        let name = a
            .state_name(q)
            .map_or_else(|| format!("q{q}"), String::from);
        let shape = if a.is_accepting(q) {
            ", shape=doublecircle"
        } else {
            ""
        };
        writeln!(out, "  {q} [label=\"{}\"{shape}];", escape(&name)).unwrap();
    }
    for &q in a.initial() {
        writeln!(out, "  init{q} [shape=point, label=\"\"];").unwrap();
        writeln!(out, "  init{q} -> {q};").unwrap();
    }
    let mut edges: BTreeMap<(usize, usize), Vec<Label>> = BTreeMap::new();
    for t in a.transitions() {
        edges.entry((t.src, t.dst)).or_default().push(t.label);
    }
    for ((src, dst), labels) in &edges {
        writeln!(
            out,
            "  {src} -> {dst} [label=\"{}\"];",
            edge_label(a, labels)
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
