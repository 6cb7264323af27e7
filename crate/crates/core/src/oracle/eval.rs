use alloc::string::ToString;

use crate::encoding::Interpretation;
use crate::logic::Formula;
use crate::{Error, Result};

/// Truth of `f` under `i`, evaluated directly on the interpretation.
///
/// Quantifiers range over `0..B` with
/// `B = T + 2^d (P + c + 1) + P`, where `T` exceeds every assigned number
/// and every set's non-periodic part, `P` is the least common multiple of
/// the set periods, `d` the quantifier depth of the body and `c` its
/// largest offset. Beyond `T` the sets are `P`-periodic, so larger values
/// behave like smaller ones in the same residue class.
pub fn evaluate(f: &Formula, i: &Interpretation) -> Result<bool> {
    let fo = |x: &str| {
        i.fo_values
            .get(x)
            .copied()
            .ok_or_else(|| Error::UnknownVariable(x.to_string()))
    };
    let so = |x: &str| {
        i.so_values
            .get(x)
            .ok_or_else(|| Error::UnknownVariable(x.to_string()))
    };
    Ok(match f {
        Formula::True => true,
        Formula::False => false,
        Formula::EqFo(a, b) => fo(a)? == fo(b)?,
        Formula::Less(a, b) => fo(a)? < fo(b)?,
        Formula::OffsetEq { y, x, c } => fo(y)? == fo(x)? + *c as usize,
        Formula::Member(set, x) => so(set)?.contains(fo(x)?),
        Formula::EqSo(a, b) => so(a)? == so(b)?,
        Formula::Rel(name, _) => return Err(Error::UnknownRelation(name.clone())),
        Formula::Not(g) => !evaluate(g, i)?,
        Formula::And(a, b) => evaluate(a, i)? && evaluate(b, i)?,
        Formula::Or(a, b) => evaluate(a, i)? || evaluate(b, i)?,
        Formula::Iff(a, b) => evaluate(a, i)? == evaluate(b, i)?,
        Formula::Exists(x, g) | Formula::Forall(x, g) => {
            let universal = matches!(f, Formula::Forall(..));
            let bound = search_bound(g, i);
            let mut inner = i.clone();
            for n in 0..bound {
                inner.fo_values.insert(x.clone(), n);
                if evaluate(g, &inner)? != universal {
                    return Ok(!universal);
                }
            }
            universal
        }
    })
}

fn search_bound(body: &Formula, i: &Interpretation) -> usize {
    let mut threshold = 0;
    let mut period = 1;
    for &v in i.fo_values.values() {
        threshold = threshold.max(v + 1);
    }
    for s in i.so_values.values() {
        threshold = threshold.max(s.prefix_bits().len());
        period = lcm(period, s.period_bits().len());
    }
    let depth = body.quantifier_depth().min(16) as u32;
    let c = body.max_offset() as usize;
    threshold + (1usize << depth) * (period + c + 1) + period
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::encoding::UltimatelyPeriodicSet;
    use crate::logic::parse;

    #[test]
    fn quantifiers_over_periodic_sets() {
        let evens = Interpretation::new().with_so("X", UltimatelyPeriodicSet::arithmetic(0, 2));
        let t = |s: &str| evaluate(&parse(s).unwrap(), &evens).unwrap();
        assert!(t("forall x. exists y. (x < y & X(y))"));
        assert!(t("forall x. (X(x) <-> exists y. (y = x + 2 & X(y)))"));
        assert!(!t("forall x. exists y. (y = x + 1 & X(y))"));
        assert!(!t("exists x. (X(x) & exists y. (y = x + 1 & X(y)))"));
        let finite =
            Interpretation::new().with_so("X", UltimatelyPeriodicSet::parse("0101", "0").unwrap());
        let f = parse("forall x. exists y. (x < y & X(y))").unwrap();
        assert!(!evaluate(&f, &finite).unwrap());
    }

    #[test]
    fn missing_variable() {
        let f = parse("x < y").unwrap();
        let i = Interpretation::new().with_fo("x", 1);
        assert_eq!(evaluate(&f, &i), Err(Error::UnknownVariable("y".into())));
    }
}
