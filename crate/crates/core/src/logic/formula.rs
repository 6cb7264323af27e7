use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::automata::VarKind;
use crate::{Error, Result};

/// First-order formulas over `(ℕ, <, +c)` with free monadic predicates.
///
/// Lowercase names are first-order variables, capitalized names are
/// second-order (set) variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    /// `x = y`
    EqFo(String, String),
    /// `X = Y`
    EqSo(String, String),
    /// `X(x)`
    Member(String, String),
    /// `x < y`
    Less(String, String),
    /// `y = x + c` with `c >= 1`
    OffsetEq {
        y: String,
        x: String,
        c: u32,
    },
    /// `@name(args)`, resolved by a [`RelationLibrary`](super::RelationLibrary).
    Rel(String, Vec<String>),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
}

pub(crate) fn kind_of_name(name: &str) -> VarKind {
    if name.chars().next().is_some_and(char::is_uppercase) {
        VarKind::Second
    } else {
        VarKind::First
    }
}

impl Formula {
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    pub fn exists(x: &str, f: Formula) -> Formula {
        Formula::Exists(x.into(), Box::new(f))
    }

    pub fn forall(x: &str, f: Formula) -> Formula {
        Formula::Forall(x.into(), Box::new(f))
    }

    pub fn less(x: &str, y: &str) -> Formula {
        Formula::Less(x.into(), y.into())
    }

    pub fn member(set: &str, x: &str) -> Formula {
        Formula::Member(set.into(), x.into())
    }

    pub fn offset(y: &str, x: &str, c: u32) -> Formula {
        Formula::OffsetEq {
            y: y.into(),
            x: x.into(),
            c,
        }
    }

    pub fn is_atom(&self) -> bool {
        matches!(
            self,
            Formula::True
                | Formula::False
                | Formula::EqFo(..)
                | Formula::EqSo(..)
                | Formula::Member(..)
                | Formula::Less(..)
                | Formula::OffsetEq { .. }
                | Formula::Rel(..)
        )
    }

    /// Variables of an atom, in argument order.
    pub fn atom_vars(&self) -> Vec<&str> {
        match self {
            Formula::EqFo(a, b)
            | Formula::EqSo(a, b)
            | Formula::Member(a, b)
            | Formula::Less(a, b) => {
                alloc::vec![a.as_str(), b.as_str()]
            }
            Formula::OffsetEq { y, x, .. } => alloc::vec![y.as_str(), x.as_str()],
            Formula::Rel(_, args) => args.iter().map(String::as_str).collect(),
            _ => Vec::new(),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Iff(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Exists(x, f) | Formula::Forall(x, f) => {
                bound.push(x.clone());
                f.collect_free(bound, out);
                bound.pop();
            }
            atom => {
                for v in atom.atom_vars() {
                    if !bound.iter().any(|b| b == v) {
                        out.insert(v.into());
                    }
                }
            }
        }
    }

    /// Maximal nesting of quantifiers.
    pub fn quantifier_depth(&self) -> usize {
        match self {
            Formula::Not(f) => f.quantifier_depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Iff(a, b) => {
                a.quantifier_depth().max(b.quantifier_depth())
            }
            Formula::Exists(_, f) | Formula::Forall(_, f) => 1 + f.quantifier_depth(),
            _ => 0,
        }
    }

    /// Largest constant `c` of an `OffsetEq` atom (0 if none).
    pub fn max_offset(&self) -> u32 {
        match self {
            Formula::OffsetEq { c, .. } => *c,
            Formula::Not(f) | Formula::Exists(_, f) | Formula::Forall(_, f) => f.max_offset(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Iff(a, b) => {
                a.max_offset().max(b.max_offset())
            }
            _ => 0,
        }
    }

    /// Checks variable kinds and scoping: quantifiers bind first-order
    /// names, no name is rebound inside its own scope, and no name occurs
    /// both free and bound.
    pub fn check_scope(&self) -> Result<()> {
        let free = self.free_vars();
        self.check_scope_in(&mut Vec::new(), &free)
    }

    fn check_scope_in(&self, bound: &mut Vec<String>, free: &BTreeSet<String>) -> Result<()> {
        match self {
            Formula::Not(f) => f.check_scope_in(bound, free),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Iff(a, b) => {
                a.check_scope_in(bound, free)?;
                b.check_scope_in(bound, free)
            }
            Formula::Exists(x, f) | Formula::Forall(x, f) => {
                if kind_of_name(x) != VarKind::First {
                    return Err(Error::Scope(alloc::format!(
                        "cannot quantify over second-order variable `{x}`"
                    )));
                }
                if bound.contains(x) {
                    return Err(Error::Scope(alloc::format!(
                        "`{x}` is rebound inside its own scope"
                    )));
                }
                if free.contains(x) {
                    return Err(Error::Scope(alloc::format!(
                        "`{x}` occurs both free and bound"
                    )));
                }
                bound.push(x.clone());
                let r = f.check_scope_in(bound, free);
                bound.pop();
                r
            }
            atom => check_atom_kinds(atom),
        }
    }
}

fn check_atom_kinds(atom: &Formula) -> Result<()> {
    let want = |name: &str, kind: VarKind| -> Result<()> {
        if kind_of_name(name) == kind {
            Ok(())
        } else {
            let what = match kind {
                VarKind::First => "first-order",
                VarKind::Second => "second-order",
            };
            Err(Error::Scope(alloc::format!(
                "`{name}` is used as a {what} variable"
            )))
        }
    };
    match atom {
        Formula::EqFo(a, b) | Formula::Less(a, b) => {
            want(a, VarKind::First)?;
            want(b, VarKind::First)
        }
        Formula::OffsetEq { y, x, .. } => {
            want(y, VarKind::First)?;
            want(x, VarKind::First)
        }
        Formula::EqSo(a, b) => {
            want(a, VarKind::Second)?;
            want(b, VarKind::Second)
        }
        Formula::Member(set, x) => {
            want(set, VarKind::Second)?;
            want(x, VarKind::First)
        }
        _ => Ok(()),
    }
}

fn prec(f: &Formula) -> u8 {
    match f {
        Formula::Iff(..) => 0,
        Formula::Or(..) => 1,
        Formula::And(..) => 2,
        Formula::Not(_) => 3,
        Formula::Exists(..) | Formula::Forall(..) => 0,
        _ => 4,
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = |f: &mut fmt::Formatter<'_>, g: &Formula, min: u8| {
            if prec(g) < min {
                write!(f, "({g})")
            } else {
                write!(f, "{g}")
            }
        };
        match self {
            Formula::True => f.write_str("true"),
            Formula::False => f.write_str("false"),
            Formula::EqFo(a, b) | Formula::EqSo(a, b) => write!(f, "{a} = {b}"),
            Formula::Member(s, x) => write!(f, "{s}({x})"),
            Formula::Less(a, b) => write!(f, "{a} < {b}"),
            Formula::OffsetEq { y, x, c } => write!(f, "{y} = {x} + {c}"),
            Formula::Rel(name, args) => write!(f, "@{name}({})", args.join(", ")),
            Formula::Not(g) => {
                f.write_str("!")?;
                sub(f, g, 3)
            }
            Formula::And(a, b) => {
                sub(f, a, 3)?;
                f.write_str(" & ")?;
                sub(f, b, 3)
            }
            Formula::Or(a, b) => {
                sub(f, a, 2)?;
                f.write_str(" | ")?;
                sub(f, b, 2)
            }
            Formula::Iff(a, b) => {
                sub(f, a, 1)?;
                f.write_str(" <-> ")?;
                sub(f, b, 1)
            }
            Formula::Exists(x, g) => write!(f, "exists {x}. {g}"),
            Formula::Forall(x, g) => write!(f, "forall {x}. {g}"),
        }
    }
}
