use super::Formula;

/// Negation normal form: `<->` is expanded and negations are pushed down
/// to atoms. `!true` and `!false` are folded.
pub fn to_nnf(f: &Formula) -> Formula {
    nnf(f, false)
}

fn nnf(f: &Formula, negate: bool) -> Formula {
    match f {
        Formula::Not(g) => nnf(g, !negate),
        Formula::And(a, b) | Formula::Or(a, b) => {
            let (a, b) = (nnf(a, negate), nnf(b, negate));
            if matches!(f, Formula::And(..)) != negate {
                Formula::and(a, b)
            } else {
                Formula::or(a, b)
            }
        }
        // a <-> b  ==  (a & b) | (!a & !b);  !(a <-> b)  ==  (a & !b) | (!a & b)
        Formula::Iff(a, b) => Formula::or(
            Formula::and(nnf(a, false), nnf(b, negate)),
            Formula::and(nnf(a, true), nnf(b, !negate)),
        ),
        Formula::Exists(x, g) | Formula::Forall(x, g) => {
            let body = nnf(g, negate);
            if matches!(f, Formula::Exists(..)) != negate {
                Formula::exists(x, body)
            } else {
                Formula::forall(x, body)
            }
        }
        Formula::True if negate => Formula::False,
        Formula::False if negate => Formula::True,
        atom if negate => Formula::not(atom.clone()),
        atom => atom.clone(),
    }
}

/// Whether `f` is in negation normal form without `<->`.
pub fn is_nnf(f: &Formula) -> bool {
    match f {
        Formula::Not(g) => g.is_atom() && !matches!(**g, Formula::True | Formula::False),
        Formula::And(a, b) | Formula::Or(a, b) => is_nnf(a) && is_nnf(b),
        Formula::Iff(..) => false,
        Formula::Exists(_, g) | Formula::Forall(_, g) => is_nnf(g),
        _ => true,
    }
}
