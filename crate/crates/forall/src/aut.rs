//! The line-oriented `.aut` automaton format.
//!
//! ```text
//! # comment
//! sig fo:x1 so:X1
//! kind buchi
//! states 3
//! initial 0
//! accepting 2
//! name 0 q0
//! trans 0 0 00
//! trans 0 1 10
//! trans 1 2 eps
//! ```
//!
//! Labels are `eps` or a bitstring with one bit per track, first-order
//! tracks first. Over the empty signature the only symbol has no bits and
//! the label is left out. `kind` (`buchi` or `finite`, default `buchi`) and
//! `name` lines are optional.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use forall_core::automata::{Acceptance, Automaton};
use forall_core::{Label, Symbol, Transition, VariableSignature};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AutError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}` line")]
    Missing(&'static str),
    #[error("file describes a {found} automaton, expected {expected}")]
    Kind {
        expected: &'static str,
        found: String,
    },
    #[error(transparent)]
    Automaton(#[from] forall_core::Error),
}

fn syntax(line: usize, message: impl Into<String>) -> AutError {
    AutError::Syntax {
        line,
        message: message.into(),
    }
}

/// Serializes `a`. Output depends only on the automaton.
pub fn write_aut<K: Acceptance>(a: &Automaton<K>) -> String {
    let mut out = String::new();
    let ids = |set: &std::collections::BTreeSet<usize>| {
        set.iter()
            .map(|q| q.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    writeln!(out, "sig {}", a.signature()).unwrap();
    writeln!(out, "kind {}", K::NAME).unwrap();
    writeln!(out, "states {}", a.num_states()).unwrap();
    writeln!(out, "initial {}", ids(a.initial()).trim_end()).unwrap();
    writeln!(out, "accepting {}", ids(a.accepting())).unwrap();
    for (q, name) in a.names() {
        writeln!(out, "name {q} {name}").unwrap();
    }
    for t in a.transitions() {
        match t.label {
            Label::Epsilon => writeln!(out, "trans {} {} eps", t.src, t.dst),
            Label::Sym(s) if s.width() == 0 => writeln!(out, "trans {} {}", t.src, t.dst),
            Label::Sym(s) => writeln!(out, "trans {} {} {s}", t.src, t.dst),
        }
        .unwrap();
    }
    // no trailing spaces on empty id lists
    out.lines()
        .map(|l| l.trim_end().to_string() + "\n")
        .collect()
}

fn parse_signature(line: usize, rest: &[&str]) -> Result<VariableSignature, AutError> {
    let mut fo: Option<Vec<String>> = None;
    let mut so: Option<Vec<String>> = None;
    for part in rest {
        let (slot, names) = if let Some(names) = part.strip_prefix("fo:") {
            (&mut fo, names)
        } else if let Some(names) = part.strip_prefix("so:") {
            (&mut so, names)
        } else {
            return Err(syntax(
                line,
                format!("expected `fo:` or `so:`, found `{part}`"),
            ));
        };
        if slot.is_some() {
            return Err(syntax(line, "repeated variable list"));
        }
        *slot = Some(
            names
                .split(',')
                .filter(|n| !n.is_empty())
                .map(String::from)
                .collect(),
        );
    }
    Ok(VariableSignature::new(
        fo.unwrap_or_default(),
        so.unwrap_or_default(),
    )?)
}

fn parse_ids(line: usize, rest: &[&str]) -> Result<Vec<usize>, AutError> {
    rest.iter()
        .map(|t| {
            t.parse()
                .map_err(|_| syntax(line, format!("bad state id `{t}`")))
        })
        .collect()
}

/// Parses an automaton of kind `K`.
pub fn read_aut<K: Acceptance>(text: &str) -> Result<Automaton<K>, AutError> {
    let mut sig = None;
    let mut states = None;
    let mut initial = Vec::new();
    let mut accepting = Vec::new();
    let mut names = BTreeMap::new();
    let mut transitions = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let words: Vec<&str> = content.split_whitespace().collect();
        let Some((&key, rest)) = words.split_first() else {
            continue;
        };
        match key {
            "sig" => sig = Some(parse_signature(line, rest)?),
            "kind" => {
                let found = rest.join(" ");
                if found != K::NAME {
                    return Err(AutError::Kind {
                        expected: K::NAME,
                        found,
                    });
                }
            }
            "states" => match rest {
                [n] => {
                    states = Some(n.parse().map_err(|_| syntax(line, "bad state count"))?);
                }
                _ => return Err(syntax(line, "expected `states <n>`")),
            },
            "initial" => initial.extend(parse_ids(line, rest)?),
            "accepting" => accepting.extend(parse_ids(line, rest)?),
            "name" => match rest {
                [q, name @ ..] if !name.is_empty() => {
                    let q = parse_ids(line, &[q])?[0];
                    names.insert(q, name.join(" "));
                }
                _ => return Err(syntax(line, "expected `name <id> <text>`")),
            },
            "trans" => {
                let sig = sig
                    .as_ref()
                    .ok_or_else(|| syntax(line, "`trans` before `sig`"))?;
                let (ends, label) = match rest {
                    [s, d] => (parse_ids(line, &[s, d])?, None),
                    [s, d, l] => (parse_ids(line, &[s, d])?, Some(*l)),
                    _ => return Err(syntax(line, "expected `trans <src> <dst> <label>`")),
                };
                let label = match label {
                    Some("eps") => Label::Epsilon,
                    Some(bits) => {
                        Label::Sym(Symbol::parse(bits).map_err(|e| syntax(line, e.to_string()))?)
                    }
                    None => Label::Sym(Symbol::zero(0)),
                };
                if let Label::Sym(s) = label {
                    if s.width() != sig.width() {
                        return Err(syntax(
                            line,
                            format!(
                                "label has {} bits, signature has {} tracks",
                                s.width(),
                                sig.width()
                            ),
                        ));
                    }
                }
                transitions.push(Transition::new(ends[0], label, ends[1]));
            }
            other => return Err(syntax(line, format!("unknown directive `{other}`"))),
        }
    }
    let sig = sig.ok_or(AutError::Missing("sig"))?;
    let states = states.ok_or(AutError::Missing("states"))?;
    if let Some(&q) = names.keys().find(|&&q| q >= states) {
        return Err(forall_core::Error::UnknownState(q).into());
    }
    Ok(Automaton::new(sig, states, transitions, initial, accepting)?.with_names(names))
}

#[cfg(test)]
mod tests {
    use super::*;
    use forall_core::{Buchi, BuchiAutomaton, FiniteAutomaton};

    const FIG_1B: &str = "\
sig fo:x1 so:X1
states 3
initial 0
accepting 2
trans 0 0 00
trans 0 0 01
trans 0 1 10
trans 0 1 11
trans 1 1 00
trans 1 1 01
trans 1 2 01
trans 2 2 00
trans 2 2 01
";

    #[test]
    fn round_trip() {
        let a: BuchiAutomaton = read_aut(FIG_1B).unwrap();
        assert_eq!(a.num_states(), 3);
        assert_eq!(a.num_transitions(), 9);
        let text = write_aut(&a);
        assert!(text.starts_with("sig fo:x1 so:X1\nkind buchi\nstates 3\ninitial 0\naccepting 2\n"));
        assert_eq!(read_aut::<Buchi>(&text).unwrap(), a);
    }

    #[test]
    fn empty_signature_and_names() {
        let text = "sig fo: so:\nstates 2\ninitial 0\naccepting 1\nname 1 done\ntrans 0 1\ntrans 1 1\ntrans 0 0 eps\n";
        let a: BuchiAutomaton = read_aut(text).unwrap();
        assert_eq!(a.state_name(1), Some("done"));
        let back = write_aut(&a);
        assert!(back.contains("trans 0 1\n"));
        assert_eq!(read_aut::<Buchi>(&back).unwrap(), a);
    }

    #[test]
    fn errors() {
        let cases = [
            ("states 1\n", "missing `sig` line"),
            ("sig fo:x so:\ninitial 0\n", "missing `states` line"),
            (
                "sig fo:x so:\nstates 1\ntrans 0 0 11\n",
                "line 3: label has 2 bits, signature has 1 tracks",
            ),
            (
                "sig fo:x so:\nstates 1\ntrans 0 0 2\n",
                "line 3: malformed automaton: bad symbol `2`",
            ),
            ("sig fo:x so:\nstates 1\ninitial 1\n", "unknown state 1"),
            ("sig fo:x so:\nstates x\n", "line 2: bad state count"),
            (
                "sig fo:x so:\nstates 1\nfoo\n",
                "line 3: unknown directive `foo`",
            ),
            ("sig fo:x,x so:\n", "duplicate variable `x`"),
            (
                "sig fo:x so:\nkind finite\n",
                "file describes a finite automaton, expected buchi",
            ),
        ];
        for (text, message) in cases {
            let err = read_aut::<Buchi>(text).unwrap_err();
            assert_eq!(err.to_string(), message, "{text}");
        }
    }

    #[test]
    fn finite_kind() {
        let text = "sig fo: so:X\nkind finite\nstates 1\ninitial 0\naccepting 0\ntrans 0 0 1\n";
        let a: FiniteAutomaton = read_aut(text).unwrap();
        assert_eq!(write_aut(&a), text);
    }
}
